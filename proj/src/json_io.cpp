#include "semiring_lab/json_io.hpp"

#include <sstream>

namespace semiring_lab::json {

namespace {

Json optional_elem(const std::optional<Elem>& e) { return e ? Json(*e) : Json(nullptr); }

Table read_table(const Json& j, const char* key, std::size_t order) {
    if (!j.contains(key) || !j.at(key).is_array()) {
        throw TableShapeError(std::string("missing table '") + key + "'");
    }
    const Json& rows = j.at(key);
    if (rows.size() != order) {
        throw TableShapeError(std::string("table '") + key + "' must have " + std::to_string(order) + " rows");
    }
    Table t;
    for (const Json& row : rows) {
        if (!row.is_array() || row.size() != order) {
            throw TableShapeError(std::string("table '") + key + "' must be square");
        }
        std::vector<Elem> r;
        for (const Json& v : row) {
            if (!v.is_number_integer() || v.get<long long>() < 0) {
                throw TableShapeError(std::string("table '") + key + "' entries must be non-negative integers");
            }
            r.push_back(static_cast<Elem>(v.get<unsigned long long>()));
        }
        t.push_back(std::move(r));
    }
    return t;
}

}  // namespace

Json to_json(const FiniteSemiring& s) {
    Json j;
    j["order"] = s.order();
    j["add"] = s.add_table();
    j["mul"] = s.mul_table();
    j["name"] = s.name();
    return j;
}

FiniteSemiring semiring_from_json(const Json& j) {
    if (!j.is_object()) {
        throw TableShapeError("a semiring must be a JSON object");
    }
    const Json* add = j.contains("add") ? &j.at("add") : nullptr;
    std::size_t order = 0;
    if (j.contains("order")) {
        if (!j.at("order").is_number_integer() || j.at("order").get<long long>() < 1) {
            throw TableShapeError("'order' must be a positive integer");
        }
        order = j.at("order").get<std::size_t>();
    } else if (add != nullptr && add->is_array()) {
        order = add->size();
    }
    std::string name;
    if (j.contains("name") && j.at("name").is_string()) {
        name = j.at("name").get<std::string>();
    }
    return validate(read_table(j, "add", order), read_table(j, "mul", order), name);
}

std::vector<FiniteSemiring> corpus_from_json(const Json& j) {
    std::vector<FiniteSemiring> out;
    if (j.is_array()) {
        for (const Json& item : j) {
            out.push_back(semiring_from_json(item));
        }
    } else {
        out.push_back(semiring_from_json(j));
    }
    return out;
}

std::vector<FiniteSemiring> corpus_from_lines(const std::string& text) {
    std::vector<FiniteSemiring> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        for (auto& s : corpus_from_json(Json::parse(line))) {
            out.push_back(std::move(s));
        }
    }
    return out;
}

Json to_json(const Partition& p) { return Json{{"blocks", p.blocks()}}; }

Json to_json(const ElementSet& s) { return Json{{"members", s.members()}}; }

Json to_json(const SpecialElements& e) {
    Json j;
    j["zero"] = optional_elem(e.zero);
    j["unity"] = optional_elem(e.unity);
    j["add_neutral"] = optional_elem(e.add_neutral);
    j["add_absorbing"] = optional_elem(e.add_absorbing);
    j["mul_absorbing"] = optional_elem(e.mul_absorbing);
    j["bi_absorbing"] = optional_elem(e.bi_absorbing);
    return j;
}

Json to_json(const AxiomFailure& f) {
    return Json{{"axiom", axiom_name(f.axiom)}, {"witness", f.witness}};
}

Json to_json(const BiIdealVerdict& v) {
    Json j;
    j["holds"] = v.holds;
    j["reason"] = reason_name(v.reason);
    j["generator"] = optional_elem(v.generator);
    j["closure_size"] = v.closure_size;
    return j;
}

Json to_json(const SimplicityVerdict& v) {
    Json j;
    j["simple"] = v.simple;
    j["witness"] = v.witness ? Json{v.witness->first, v.witness->second} : Json(nullptr);
    j["congruence"] = v.congruence ? to_json(*v.congruence) : Json(nullptr);
    return j;
}

Json to_json(const LiftReport& r) {
    Json j;
    j["base"] = to_json(r.base);
    j["product"] = to_json(r.product);
    j["n_fold_sums"] = r.n_fold_sums;
    j["n_fold_absorbing"] = optional_elem(r.n_fold_absorbing);
    return j;
}

Json to_json(const AbsorbingCaseVerdict& v) {
    auto opt = [](const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); };
    Json j;
    j["absorbing_k"] = v.absorbing_k;
    j["base_simple"] = v.base_simple;
    j["has_bi_absorbing"] = v.has_bi_absorbing;
    j["product_set_size"] = v.product_set_size;
    j["condition_iii"] = v.condition_iii;
    j["congruence_dim"] = v.congruence_dim;
    j["bi_ideal_dim"] = v.bi_ideal_dim;
    j["matrix_simple"] = opt(v.matrix_simple);
    j["matrix_bi_ideal_simple"] = opt(v.matrix_bi_ideal_simple);
    j["equivalence_holds"] = v.equivalence_holds;
    j["coda_holds"] = opt(v.coda_holds);
    j["witness_pair"] = v.witness_pair ? Json{v.witness_pair->first, v.witness_pair->second} : Json(nullptr);
    j["witness_congruence"] = v.witness_congruence ? to_json(*v.witness_congruence) : Json(nullptr);
    return j;
}

Json matrix_element(const MatrixSemiring& t, Elem x) {
    const auto flat = t.decode(x);
    Json rows = Json::array();
    for (std::size_t i = 0; i < t.dim(); ++i) {
        rows.push_back(std::vector<Elem>(flat.begin() + static_cast<std::ptrdiff_t>(i * t.dim()),
                                         flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * t.dim())));
    }
    return Json{{"index", x}, {"entries", rows}};
}

Json error_to_json(const Error& e) {
    Json j;
    j["error"] = e.kind();
    j["message"] = e.what();
    if (const auto* v = dynamic_cast<const AxiomViolation*>(&e)) {
        j["axiom"] = axiom_name(v->failure().axiom);
        j["witness"] = v->failure().witness;
    }
    return j;
}

std::string replay_command(const FiniteSemiring& s, const HarnessOptions& options,
                           const std::string& statement) {
    std::string inline_json = to_json(s).dump();
    std::string quoted;
    for (char c : inline_json) {
        quoted += c == '\'' ? std::string("'\\''") : std::string(1, c);
    }
    return "semiring-lab verify --corpus '" + quoted + "' --n " + std::to_string(options.n) +
           " --statement " + statement;
}

Json to_json(const HarnessReport& r, const HarnessOptions& options) {
    Json j;
    j["index"] = r.index;
    j["name"] = r.semiring.name();
    j["semiring"] = to_json(r.semiring);
    j["violations"] = r.violations();
    if (r.elapsed_ms) {
        j["elapsed_ms"] = *r.elapsed_ms;
    }
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json entry;
        entry["statement"] = e.statement;
        entry["verdict"] = verdict_name(e.verdict);
        entry["quantifier"] = e.quantifier;
        entry["detail"] = e.detail;
        if (e.witness) {
            Json w;
            w["note"] = e.witness->note;
            w["elements"] = e.witness->elements;
            w["in_matrix_dim"] = e.witness->in_matrix_dim;
            if (e.witness->congruence) {
                w["congruence"] = to_json(*e.witness->congruence);
            }
            entry["witness"] = w;
        }
        if (e.verdict == Verdict::violation) {
            entry["replay"] = replay_command(r.semiring, options, e.statement);
        }
        entries.push_back(std::move(entry));
    }
    j["entries"] = std::move(entries);
    return j;
}

}  // namespace semiring_lab::json
