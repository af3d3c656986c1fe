#include "semiring_lab/semiring.hpp"

#include <string>
#include <utility>

namespace semiring_lab {

const char* axiom_name(Axiom axiom) noexcept {
    switch (axiom) {
        case Axiom::add_commutative: return "add_commutative";
        case Axiom::add_associative: return "add_associative";
        case Axiom::mul_associative: return "mul_associative";
        case Axiom::left_distributive: return "left_distributive";
        case Axiom::right_distributive: return "right_distributive";
    }
    return "unknown";
}

namespace {

std::string describe(const AxiomFailure& failure) {
    std::string out = std::string("axiom ") + axiom_name(failure.axiom) + " fails at (";
    for (std::size_t i = 0; i < failure.witness.size(); ++i) {
        if (i != 0) {
            out += ", ";
        }
        out += std::to_string(failure.witness[i]);
    }
    return out + ")";
}

}  // namespace

AxiomViolation::AxiomViolation(AxiomFailure failure)
    : Error(describe(failure)), failure_(std::move(failure)) {}

FiniteSemiring::FiniteSemiring(std::size_t order, std::vector<std::uint16_t> add,
                               std::vector<std::uint16_t> mul, std::string name)
    : order_(order), add_(std::move(add)), mul_(std::move(mul)), name_(std::move(name)) {}

FiniteSemiring FiniteSemiring::trusted(std::size_t order, std::vector<std::uint16_t> add,
                                       std::vector<std::uint16_t> mul, std::string name) {
    if (order == 0 || order > kMaxOrder) {
        throw TableShapeError("semiring order must be in 1.." + std::to_string(kMaxOrder));
    }
    if (add.size() != order * order || mul.size() != order * order) {
        throw TableShapeError("tables must have order*order entries");
    }
    for (std::size_t i = 0; i < add.size(); ++i) {
        if (add[i] >= order || mul[i] >= order) {
            throw TableShapeError("table entry out of range at flat index " + std::to_string(i));
        }
    }
    return FiniteSemiring(order, std::move(add), std::move(mul), std::move(name));
}

Elem FiniteSemiring::multiple(std::size_t m, Elem a) const noexcept {
    Elem acc = a;
    for (std::size_t i = 1; i < m; ++i) {
        acc = add(acc, a);
    }
    return acc;
}

Table FiniteSemiring::add_table() const {
    Table t(order_, std::vector<Elem>(order_));
    for (Elem a = 0; a < order_; ++a) {
        for (Elem b = 0; b < order_; ++b) {
            t[a][b] = add(a, b);
        }
    }
    return t;
}

Table FiniteSemiring::mul_table() const {
    Table t(order_, std::vector<Elem>(order_));
    for (Elem a = 0; a < order_; ++a) {
        for (Elem b = 0; b < order_; ++b) {
            t[a][b] = mul(a, b);
        }
    }
    return t;
}

FiniteSemiring FiniteSemiring::with_name(std::string name) const {
    return FiniteSemiring(order_, add_, mul_, std::move(name));
}

std::optional<AxiomFailure> find_axiom_failure(std::size_t n,
                                               const std::vector<std::uint16_t>& add,
                                               const std::vector<std::uint16_t>& mul) {
    auto plus = [&](std::size_t a, std::size_t b) -> std::size_t { return add[a * n + b]; };
    auto times = [&](std::size_t a, std::size_t b) -> std::size_t { return mul[a * n + b]; };
    for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
            if (plus(a, b) != plus(b, a)) {
                return AxiomFailure{Axiom::add_commutative, {a, b}};
            }
        }
    }
    for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
            for (Elem c = 0; c < n; ++c) {
                if (plus(plus(a, b), c) != plus(a, plus(b, c))) {
                    return AxiomFailure{Axiom::add_associative, {a, b, c}};
                }
            }
        }
    }
    for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
            for (Elem c = 0; c < n; ++c) {
                if (times(times(a, b), c) != times(a, times(b, c))) {
                    return AxiomFailure{Axiom::mul_associative, {a, b, c}};
                }
            }
        }
    }
    for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
            for (Elem c = 0; c < n; ++c) {
                if (times(a, plus(b, c)) != plus(times(a, b), times(a, c))) {
                    return AxiomFailure{Axiom::left_distributive, {a, b, c}};
                }
            }
        }
    }
    for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
            for (Elem c = 0; c < n; ++c) {
                if (times(plus(a, b), c) != plus(times(a, c), times(b, c))) {
                    return AxiomFailure{Axiom::right_distributive, {a, b, c}};
                }
            }
        }
    }
    return std::nullopt;
}

namespace {

std::vector<std::uint16_t> narrow(std::size_t order, const std::vector<Elem>& flat,
                                  const char* which) {
    if (order == 0 || order > kMaxOrder) {
        throw TableShapeError("semiring order must be in 1.." + std::to_string(kMaxOrder));
    }
    if (flat.size() != order * order) {
        throw TableShapeError(std::string(which) + " table must have order*order entries");
    }
    std::vector<std::uint16_t> out(flat.size());
    for (std::size_t i = 0; i < flat.size(); ++i) {
        if (flat[i] >= order) {
            throw TableShapeError(std::string(which) + " table entry " + std::to_string(flat[i]) +
                                  " out of range 0.." + std::to_string(order - 1));
        }
        out[i] = static_cast<std::uint16_t>(flat[i]);
    }
    return out;
}

std::vector<Elem> flatten(const Table& table, std::size_t order, const char* which) {
    if (table.size() != order) {
        throw TableShapeError(std::string(which) + " table must have " + std::to_string(order) +
                              " rows");
    }
    std::vector<Elem> flat;
    flat.reserve(order * order);
    for (const auto& row : table) {
        if (row.size() != order) {
            throw TableShapeError(std::string(which) + " table rows must have " +
                                  std::to_string(order) + " entries");
        }
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return flat;
}

}  // namespace

FiniteSemiring validate(std::size_t order, const std::vector<Elem>& add,
                        const std::vector<Elem>& mul, std::string name) {
    auto add16 = narrow(order, add, "add");
    auto mul16 = narrow(order, mul, "mul");
    if (auto failure = find_axiom_failure(order, add16, mul16)) {
        throw AxiomViolation(std::move(*failure));
    }
    return FiniteSemiring::trusted(order, std::move(add16), std::move(mul16), std::move(name));
}

FiniteSemiring validate(const Table& add_table, const Table& mul_table, std::string name) {
    const std::size_t order = add_table.size();
    return validate(order, flatten(add_table, order, "add"), flatten(mul_table, order, "mul"),
                    std::move(name));
}

}  // namespace semiring_lab
