#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "semiring_lab/ideal.hpp"
#include "semiring_lab/partition.hpp"
#include "semiring_lab/semiring.hpp"

namespace semiring_lab {

enum class Verdict {
    holds,
    precondition_unmet,
    violation,
    /// The statement applies but a matrix semiring it needs exceeds the bound.
    unchecked,
    out_of_scope,
    /// Informational: a proposed equivalence that is reported, not asserted.
    observation,
};

[[nodiscard]] const char* verdict_name(Verdict v) noexcept;

/// Concrete data that replays a verdict: elements (of the base or of the
/// matrix semiring named by `in_matrix_dim`) and an optional relation.
struct Witness {
    std::string note;
    std::vector<Elem> elements;
    std::size_t in_matrix_dim = 0;  // 0: elements of the base semiring
    std::optional<Partition> congruence;
};

struct HarnessEntry {
    std::string statement;
    Verdict verdict = Verdict::holds;
    /// Instantiation of quantifiers over n and m, e.g. "n=2".
    std::string quantifier;
    std::string detail;
    std::optional<Witness> witness;
};

struct HarnessReport {
    std::size_t index = 0;
    FiniteSemiring semiring;
    std::vector<HarnessEntry> entries;
    std::optional<double> elapsed_ms;

    [[nodiscard]] std::size_t violations() const;
};

struct HarnessOptions {
    /// Dimension for the congruence layer of matrix statements.
    std::size_t n = 2;
    /// Also run the bi-ideal layer at n = 3 when M_3(S) fits the bound.
    bool bi_ideal_layer_n3 = true;
    std::size_t bound = kDefaultMaterializeBound;
    std::size_t vector_budget = kDefaultVectorBudget;
    bool timing = false;
    /// Restrict to one statement id.
    std::optional<std::string> statement;
};

struct StatementInfo {
    std::string id;
    std::string summary;
    bool in_scope = true;
};

/// Every statement of the battery in report order, including out-of-scope lines.
[[nodiscard]] const std::vector<StatementInfo>& statement_catalog();

[[nodiscard]] HarnessReport run_harness(const FiniteSemiring& s, const HarnessOptions& options = {},
                                        std::size_t index = 0);

[[nodiscard]] std::vector<HarnessReport> run_harness(const std::vector<FiniteSemiring>& corpus,
                                                     const HarnessOptions& options = {});

}  // namespace semiring_lab
