#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "semiring_lab/core.hpp"
#include "semiring_lab/errors.hpp"
#include "semiring_lab/harness.hpp"
#include "semiring_lab/ideal.hpp"
#include "semiring_lab/matrix.hpp"
#include "semiring_lab/semiring.hpp"

namespace semiring_lab::json {

using Json = nlohmann::ordered_json;

/// {"order", "add", "mul", "name"}; validated on read.
[[nodiscard]] Json to_json(const FiniteSemiring& s);
[[nodiscard]] FiniteSemiring semiring_from_json(const Json& j);
/// Accepts a single semiring object or an array of them.
[[nodiscard]] std::vector<FiniteSemiring> corpus_from_json(const Json& j);
/// One semiring per line; blank lines are skipped.
[[nodiscard]] std::vector<FiniteSemiring> corpus_from_lines(const std::string& text);

[[nodiscard]] Json to_json(const Partition& p);
[[nodiscard]] Json to_json(const ElementSet& s);
[[nodiscard]] Json to_json(const SpecialElements& e);
[[nodiscard]] Json to_json(const AxiomFailure& f);
[[nodiscard]] Json to_json(const BiIdealVerdict& v);
[[nodiscard]] Json to_json(const SimplicityVerdict& v);
[[nodiscard]] Json to_json(const LiftReport& r);
[[nodiscard]] Json to_json(const AbsorbingCaseVerdict& v);

/// {"index", "entries"} for an element of a matrix semiring.
[[nodiscard]] Json matrix_element(const MatrixSemiring& t, Elem x);

/// {"error": kind, "message": ...}; AxiomViolation adds "axiom" and "witness".
[[nodiscard]] Json error_to_json(const Error& e);

/// Command line that re-runs one statement on one instance.
[[nodiscard]] std::string replay_command(const FiniteSemiring& s, const HarnessOptions& options,
                                         const std::string& statement);

[[nodiscard]] Json to_json(const HarnessReport& r, const HarnessOptions& options);

}  // namespace semiring_lab::json
