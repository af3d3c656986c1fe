#include "semiring_lab/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "semiring_lab/congruence.hpp"
#include "semiring_lab/core.hpp"
#include "semiring_lab/enumerate.hpp"
#include "semiring_lab/harness.hpp"
#include "semiring_lab/ideal.hpp"
#include "semiring_lab/json_io.hpp"
#include "semiring_lab/matrix.hpp"
#include "semiring_lab/qplus.hpp"

namespace semiring_lab {

namespace {

using json::Json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& source) {
    const auto first = source.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (source[first] == '{' || source[first] == '[')) {
        return source;
    }
    std::ifstream in(source);
    if (!in) {
        throw UsageError("cannot read '" + source + "': pass a JSON file or inline JSON");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Json parse_json(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw UsageError("'" + source + "' is not valid JSON: " + e.what());
    }
}

FiniteSemiring load_semiring(const std::string& source) {
    return json::semiring_from_json(parse_json(read_source(source), source));
}

std::vector<FiniteSemiring> load_corpus(const std::string& source, bool allow_order_five) {
    constexpr std::string_view prefix = "builtin-order";
    if (source.rfind(prefix, 0) == 0) {
        const std::string digits = source.substr(prefix.size());
        if (digits.size() != 1 || digits[0] < '1' || digits[0] > '5') {
            throw UsageError("builtin corpora are builtin-order1 .. builtin-order5");
        }
        return enumerate_semirings(static_cast<std::size_t>(digits[0] - '0'),
                                   EnumerationOptions{allow_order_five});
    }
    const std::string text = read_source(source);
    try {
        return json::corpus_from_json(Json::parse(text));
    } catch (const Json::parse_error&) {
        try {
            return json::corpus_from_lines(text);
        } catch (const Json::parse_error& e) {
            throw UsageError("'" + source + "' is neither JSON nor JSON lines: " + e.what());
        }
    }
}

std::size_t materialize_bound() {
    const char* env = std::getenv("SEMIRING_LAB_BOUND");
    if (env == nullptr || *env == '\0') {
        return kDefaultMaterializeBound;
    }
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (*end != '\0' || value == 0) {
        throw UsageError(std::string("SEMIRING_LAB_BOUND must be a positive integer, got '") + env + "'");
    }
    return static_cast<std::size_t>(value);
}

Json props_report(const FiniteSemiring& s) {
    Json j;
    j["name"] = s.name();
    j["order"] = s.order();
    j["special_elements"] = json::to_json(special_elements(s));
    j["commutative"] = is_commutative(s);
    j["add_idempotent"] = is_add_idempotent(s);
    j["mul_idempotent"] = is_mul_idempotent(s);
    j["add_cancellative"] = is_add_cancellative(s);
    j["ring"] = is_ring(s);
    j["add_archimedean"] = is_add_archimedean(s);
    j["downwards_directed"] = is_downwards_directed(s);
    Json divisible, uniquely;
    for (std::size_t m : {2, 3}) {
        divisible[std::to_string(m)] = is_m_divisible(s, m);
        uniquely[std::to_string(m)] = is_uniquely_m_divisible(s, m);
    }
    j["m_divisible"] = divisible;
    j["uniquely_m_divisible"] = uniquely;
    j["product_set"] = product_set(s);
    j["sum_set"] = sum_set(s);
    j["congruence_simple"] = is_congruence_simple(s);
    j["bi_ideal_simple"] = is_bi_ideal_simple(s);
    j["bi_ideal_free"] = is_bi_ideal_free(s);
    j["conical"] = is_add_cancellative(s) ? Json(is_conical(s)) : Json(nullptr);
    j["quasiorder_kernel"] = json::to_json(quasiorder_kernel(s));
    return j;
}

Json set_report(const ElementSet& set) {
    Json j = json::to_json(set);
    j["size"] = set.size();
    return j;
}

class Cli {
  public:
    Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) { build(); }

    int run(const std::vector<std::string>& args) {
        std::vector<const char*> argv{"semiring-lab"};
        for (const auto& a : args) {
            argv.push_back(a.c_str());
        }
        try {
            app_.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::CallForHelp&) {
            out_ << app_.help();
            return kExitOk;
        } catch (const CLI::CallForAllHelp&) {
            out_ << app_.help("", CLI::AppFormatMode::All);
            return kExitOk;
        } catch (const CLI::CallForVersion&) {
            out_ << "0.1.0\n";
            return kExitOk;
        } catch (const CLI::ParseError& e) {
            err_ << "error: " << e.what() << "\nrun with --help for usage\n";
            return kExitUsage;
        }
        try {
            return dispatch();
        } catch (const UsageError& e) {
            err_ << "error: " << e.what() << '\n';
            return kExitUsage;
        } catch (const Error& e) {
            emit(json::error_to_json(e));
            return kExitFailure;
        }
    }

  private:
    void build() {
        app_.description("Finite semirings, their matrix semirings, and a rational example semiring.");
        app_.require_subcommand(1);
        app_.add_flag("--pretty", pretty_, "Indent the JSON output");

        validate_ = app_.add_subcommand("validate", "Check the semiring axioms");
        validate_->add_option("input", input_, "Semiring JSON file or inline JSON")->required();

        props_ = app_.add_subcommand("props", "Special elements and structural predicates");
        props_->add_option("input", input_, "Semiring JSON file or inline JSON")->required();

        congruences_ = app_.add_subcommand("congruences", "Congruence simplicity and the congruence lattice");
        congruences_->add_option("input", input_, "Semiring JSON file or inline JSON")->required();
        congruences_->add_flag("--list", list_, "List every congruence");

        biideals_ = app_.add_subcommand("biideals", "Bi-ideal simplicity and freeness");
        biideals_->add_option("input", input_, "Semiring JSON file or inline JSON")->required();

        matrix_ = app_.add_subcommand("matrix", "Materialize M_n(S)");
        matrix_->add_option("input", input_, "Semiring JSON file or inline JSON")->required();
        matrix_->add_option("--n", n_, "Matrix dimension")->required()->check(CLI::PositiveNumber);
        matrix_->add_flag("--check-lifts", check_lifts_, "Compare special elements of S and M_n(S)");
        matrix_->add_option("--qpa", qpa_, "Base element a: report Q_a, P_a, R_a");

        enumerate_ = app_.add_subcommand("enumerate", "Semirings of a given order up to isomorphism, one per line");
        enumerate_->add_option("--order", order_, "Order 1..4 (5 with --allow-order-5)")
            ->required()
            ->check(CLI::Range(1, 5));
        enumerate_->add_option("--filter", filter_, "Keep only matching instances")
            ->check(CLI::IsMember({"simple", "cancellative", "idempotent"}));
        enumerate_->add_flag("--allow-order-5", allow_order_five_, "Permit the order-5 search");

        verify_ = app_.add_subcommand("verify", "Run the statement battery on a corpus");
        verify_->add_option("--corpus", input_, "JSON file, JSON lines, inline JSON or builtin-orderK")
            ->required();
        verify_->add_option("--n", n_, "Matrix dimension for the congruence layer")->check(CLI::Range(2, 16));
        verify_->add_option("--statement", statement_, "Run a single statement id");
        verify_->add_flag("--no-n3", no_n3_, "Skip the bi-ideal layer at n=3");
        verify_->add_flag("--timing", timing_, "Include per-instance elapsed_ms (breaks byte determinism)");
        verify_->add_flag("--allow-order-5", allow_order_five_, "Permit builtin-order5");

        qplus_ = app_.add_subcommand("qplus", "The semiring {x in Q+ : a^v_p(x) < x}");
        qplus_->add_option("--a", a_, "Rational 0 < a < 1 as NUM/DEN")->required();
        qplus_->add_option("--p", p_, "Prime p")->required();
        qplus_->require_subcommand(1);
        q_member_ = qplus_->add_subcommand("member", "Membership of x");
        q_member_->add_option("x", x_, "Positive rational")->required();
        q_leq_ = qplus_->add_subcommand("leq", "z <=_S x");
        q_leq_->add_option("z", z_, "Member")->required();
        q_leq_->add_option("x", x_, "Member")->required();
        q_witness_ = qplus_->add_subcommand("witness", "Common lower bound of x and y");
        q_witness_->add_option("x", x_, "Member")->required();
        q_witness_->add_option("y", y_, "Member")->required();
        q_nondiv_ = qplus_->add_subcommand("nondiv", "A member x with x/m outside S");
        q_nondiv_->add_option("m", m_, "Divisor m >= 2")->required();
        q_nondiv_->add_option("--k", k_, "Valuation of the witness");
        q_sample_ = qplus_->add_subcommand("sample", "Closure of S under + and * on sampled members");
        q_sample_->add_option("--trials", trials_, "Number of pairs")->check(CLI::PositiveNumber);
        q_sample_->add_option("--seed", seed_, "Sampling seed");
    }

    void emit(const Json& j) { out_ << (pretty_ ? j.dump(2) : j.dump()) << '\n'; }

    int dispatch() {
        if (validate_->parsed()) return cmd_validate();
        if (props_->parsed()) return cmd_props();
        if (congruences_->parsed()) return cmd_congruences();
        if (biideals_->parsed()) return cmd_biideals();
        if (matrix_->parsed()) return cmd_matrix();
        if (enumerate_->parsed()) return cmd_enumerate();
        if (verify_->parsed()) return cmd_verify();
        return cmd_qplus();
    }

    int cmd_validate() {
        try {
            const auto s = load_semiring(input_);
            emit(Json{{"valid", true}, {"order", s.order()}});
            return kExitOk;
        } catch (const AxiomViolation& e) {
            Json j{{"valid", false}};
            j.update(json::error_to_json(e));
            emit(j);
            return kExitFailure;
        }
    }

    int cmd_props() {
        emit(props_report(load_semiring(input_)));
        return kExitOk;
    }

    int cmd_congruences() {
        const auto s = load_semiring(input_);
        Json j;
        j["simplicity"] = json::to_json(congruence_simplicity(s));
        if (s.order() <= kDefaultCongruenceElementBound) {
            const auto all = all_congruences(s);
            j["count"] = all.size();
            if (list_) {
                Json list = Json::array();
                for (const auto& p : all) {
                    list.push_back(json::to_json(p));
                }
                j["congruences"] = list;
            }
        } else {
            j["count"] = nullptr;
        }
        emit(j);
        return kExitOk;
    }

    int cmd_biideals() {
        const auto s = load_semiring(input_);
        Json j;
        j["bi_ideal_simple"] = json::to_json(bi_ideal_simplicity(s));
        j["bi_ideal_free"] = json::to_json(bi_ideal_freeness(s));
        Json principal = Json::array();
        const auto ideals = principal_bi_ideals(s);
        for (Elem x = 0; x < ideals.size(); ++x) {
            principal.push_back(Json{{"generator", x}, {"members", ideals[x].members()}});
        }
        j["principal"] = principal;
        j["least"] = json::to_json(least_bi_ideal(s));
        emit(j);
        return kExitOk;
    }

    int cmd_matrix() {
        const auto s = load_semiring(input_);
        const auto t = materialize(s, n_, materialize_bound());
        Json j;
        j["n"] = n_;
        j["order"] = t.order();
        j["axioms"] = t.order() <= 256 ? "verified exhaustively" : "verified on sampled triples";
        j["special_elements"] = json::to_json(special_elements(t.product()));
        if (check_lifts_) {
            j["lifts"] = json::to_json(lift_checks(t));
        }
        if (qpa_) {
            const Elem a = *qpa_;
            if (a >= s.order()) {
                throw UsageError("--qpa must name a base element below " + std::to_string(s.order()));
            }
            Json q;
            q["a"] = a;
            q["bar"] = json::matrix_element(t, t.bar(a));
            q["Q_a"] = set_report(q_a(t, a));
            q["P_a"] = set_report(p_a(t, a));
            q["R_a"] = set_report(r_a(t, a));
            j["qpa"] = q;
        }
        emit(j);
        return kExitOk;
    }

    int cmd_enumerate() {
        for_each_semiring(order_, [&](const FiniteSemiring& s) {
            if (filter_ == "simple" && !is_congruence_simple(s)) return;
            if (filter_ == "cancellative" && !is_add_cancellative(s)) return;
            if (filter_ == "idempotent" && !is_add_idempotent(s)) return;
            out_ << json::to_json(s).dump() << '\n';
        }, EnumerationOptions{allow_order_five_});
        return kExitOk;
    }

    int cmd_verify() {
        HarnessOptions options;
        options.n = n_;
        options.bi_ideal_layer_n3 = !no_n3_;
        options.bound = materialize_bound();
        options.timing = timing_;
        if (!statement_.empty()) {
            options.statement = statement_;
        }
        const auto corpus = load_corpus(input_, allow_order_five_);
        Json reports = Json::array();
        std::size_t violations = 0;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const auto report = run_harness(corpus[i], options, i);
            violations += report.violations();
            reports.push_back(json::to_json(report, options));
        }
        emit(reports);
        return violations == 0 ? kExitOk : kExitFailure;
    }

    int cmd_qplus() {
        const qplus::QPlusSemiring q(qplus::parse_rational(a_), qplus::Integer(parse_integer(p_)));
        Json j;
        if (q_member_->parsed()) {
            j["member"] = q.member(qplus::parse_rational(x_));
        } else if (q_leq_->parsed()) {
            j["leq"] = q.leq(qplus::parse_rational(z_), qplus::parse_rational(x_));
        } else if (q_witness_->parsed()) {
            const auto x = qplus::parse_rational(x_);
            const auto y = qplus::parse_rational(y_);
            const auto z = qplus::lower_bound_witness(q, x, y);
            j["z"] = qplus::to_string(z);
            j["v_p"] = qplus::vp(q.p(), z);
            j["leq_x"] = q.leq(z, x);
            j["leq_y"] = q.leq(z, y);
        } else if (q_nondiv_->parsed()) {
            const auto x = qplus::non_divisibility_witness(q, m_, k_);
            j["m"] = m_;
            j["x"] = qplus::to_string(x);
            j["member_x"] = q.member(x);
            j["member_x_over_m"] = q.member(x / qplus::Rational(m_));
        } else {
            const auto report = qplus::closure_sample(q, trials_, seed_);
            j["trials"] = report.trials;
            j["passed"] = report.passed;
            Json failures = Json::array();
            for (const auto& f : report.failures) {
                failures.push_back(Json{{"x", qplus::to_string(f.x)},
                                        {"y", qplus::to_string(f.y)},
                                        {"sum_member", f.sum_member},
                                        {"product_member", f.product_member}});
            }
            j["failures"] = failures;
            const auto special = qplus::special_elements(q);
            j["one_is_member"] = special.one_is_member;
            j["has_zero"] = special.has_zero;
            j["has_unity"] = special.has_unity;
            emit(j);
            return report.passed == report.trials ? kExitOk : kExitFailure;
        }
        emit(j);
        return kExitOk;
    }

    static std::string parse_integer(const std::string& text) {
        if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
            throw UsageError("--p must be a positive integer, got '" + text + "'");
        }
        return text;
    }

    std::ostream& out_;
    std::ostream& err_;
    CLI::App app_{"semiring-lab"};
    CLI::App *validate_{}, *props_{}, *congruences_{}, *biideals_{}, *matrix_{}, *enumerate_{},
        *verify_{}, *qplus_{};
    CLI::App *q_member_{}, *q_leq_{}, *q_witness_{}, *q_nondiv_{}, *q_sample_{};

    bool pretty_ = false, list_ = false, check_lifts_ = false, allow_order_five_ = false;
    bool no_n3_ = false, timing_ = false;
    std::string input_, filter_, statement_, a_, p_, x_, y_, z_;
    std::size_t n_ = 2, order_ = 0, trials_ = 1000;
    std::optional<Elem> qpa_;
    long m_ = 2, k_ = 0;
    std::uint64_t seed_ = qplus::kDefaultSampleSeed;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Cli cli(out, err);
    return cli.run(args);
}

}  // namespace semiring_lab
