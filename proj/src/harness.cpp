#include "semiring_lab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <string>

#include "semiring_lab/congruence.hpp"
#include "semiring_lab/core.hpp"
#include "semiring_lab/enumerate.hpp"
#include "semiring_lab/matrix.hpp"

namespace semiring_lab {

const char* verdict_name(Verdict v) noexcept {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::precondition_unmet: return "precondition-unmet";
        case Verdict::violation: return "VIOLATION";
        case Verdict::unchecked: return "unchecked";
        case Verdict::out_of_scope: return "out-of-scope";
        case Verdict::observation: return "observation";
    }
    return "unknown";
}

std::size_t HarnessReport::violations() const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) {
        return e.verdict == Verdict::violation;
    }));
}

const std::vector<StatementInfo>& statement_catalog() {
    static const std::vector<StatementInfo> catalog = {
        {"bi_ideal_rees_congruence", "for every bi-ideal I, (I x I) ∪ id is a congruence"},
        {"bi_absorbing_singleton", "w is bi-absorbing iff {w} is a bi-ideal"},
        {"congruence_simple_implies_bi_ideal_simple", "congruence-simple implies bi-ideal-simple"},
        {"separating_pair_dichotomy",
         "simple with |SS| >= 2: the idempotent two-element case or every a != b is separated on both sides"},
        {"matrix_simple_necessary_conditions",
         "M_n(S) simple implies S simple, no bi-absorbing element, |SS| >= 2, idempotent or cancellative"},
        {"absorbing_case_characterization",
         "with an absorbing element in some M_k(S): M_n(S) simple iff S simple, no bi-absorbing, |SS| >= 2; "
         "then S has a zero and is a ring or additively idempotent"},
        {"cancellative_simple_ring_or_commutative",
         "cancellative simple: additively neutral implies ring; unity implies ring or commutative"},
        {"special_element_lifting", "zero, bi-absorbing, unity and absorbing elements lift between S and M_n(S)"},
        {"bi_ideal_contains_constant",
         "every bi-ideal of M_n(S) contains some constant matrix; if it contains bar(a) with a + S = S it is everything"},
        {"q_p_r_inclusions", "Q_a ⊆ P_a, Q_a ⊆ R_a, Q_a and P_a are bi-ideals, S + S = S implies Q_a = P_a"},
        {"q_singleton_criterion", "|Q_a| = 1 iff S has a bi-absorbing o and S_n a S_n + S = {o}"},
        {"matrix_bi_ideal_simple_forces_free_base", "M_n(S) bi-ideal-simple implies S bi-ideal-free"},
        {"free_base_least_bi_ideal",
         "S bi-ideal-free: the constant matrices lie in the least bi-ideal J and J = Q_a = R_a = P_a"},
        {"bi_ideal_four_conditions",
         "M_n(S) bi-ideal-simple iff bi-ideal-free iff all Q_a = M_n(S) iff all P_a = M_n(S); then S bi-ideal-free"},
        {"bi_ideal_simplicity_descends", "M_3(S) bi-ideal-simple implies M_2(S) bi-ideal-simple"},
        {"commutative_free_matrix_directed", "S commutative and M_n(S) bi-ideal-free implies S downwards directed"},
        {"directed_free_base_lifts", "S downwards directed and bi-ideal-free implies M_n(S) bi-ideal-free"},
        {"condition_v_observation",
         "reported only: S bi-ideal-free and downwards directed versus M_n(S) bi-ideal-simple"},
        {"archimedean_divisible_directed",
         "additively archimedean and uniquely m-divisible implies downwards directed"},
        {"quasiorder_kernel_congruence", "the kernel of the standard quasiordering is a congruence"},
        {"cancellative_nonring_ordering",
         "simple cancellative non-ring: the quasiordering is an order and the difference order restricts to it"},
        {"k_multiple_congruence",
         "x ~ y iff kx = ky is a congruence; for cancellative simple S it is trivial or full, full meaning kx is absorbing"},
        {"archimedean_transfer", "M_n(S) additively archimedean iff S is"},
        {"conical_transfer", "cancellative S: M_n(S) conical iff S conical and |SS| >= 2"},
        {"cancellative_directed_characterization",
         "cancellative, directed or m-divisible: M_n(S) simple iff S simple and |SS| >= 2"},
        {"cancellative_commutative_characterization",
         "cancellative, commutative or with unity or additively neutral: M_n(S) simple iff S simple, |SS| >= 2, directed"},
        {"finite_cancellative_classification", "finite cancellative S: M_n(S) simple iff S ≅ M_k(F_q)"},
        {"entrywise_congruence_transfer",
         "a congruence of M_n(S) restricts along E-matrices to a congruence of S, nontrivial when c a d != c b d"},
        {"difference_ring_embedding",
         "cancellative S embeds in its difference ring; for finite S the ring has |S| elements"},
        {"semimodule_endomorphism_correspondence",
         "End(_R M) ≅ M_n(S) iff S has a zero and a unity: semimodules are not modeled", false},
        {"semilattice_endomorphism_example",
         "finite-image endomorphisms of a semilattice: infinite construction, not modeled", false},
        {"simple_rings_without_unity", "non-commutative simple rings without unity: infinite, not modeled", false},
        {"cancellative_conjecture",
         "equivalence for every cancellative S: open, not decided by finite checks", false},
        {"rational_example_properties",
         "the subsemiring of positive rationals is covered by the qplus module", false},
    };
    return catalog;
}

namespace {

std::string dims_label(const std::vector<std::size_t>& dims) {
    std::string out = "n=";
    for (std::size_t i = 0; i < dims.size(); ++i) {
        out += (i == 0 ? "" : ",") + std::to_string(dims[i]);
    }
    return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

struct MatrixFacts {
    explicit MatrixFacts(MatrixSemiring m) : t(std::move(m)) {}
    MatrixSemiring t;
    BiIdealVerdict bi_simple;
    BiIdealVerdict bi_free;
    std::vector<ElementSet> q, p, r;
    bool p_within_budget = true;
    bool all_q_full = true;
    bool condition_iv = true;
};

class Battery {
  public:
    Battery(const FiniteSemiring& s, const HarnessOptions& options)
        : s_(s), options_(options), special_(special_elements(s)), order_(s) {
        simple_ = congruence_simplicity(s);
        cancellative_ = is_add_cancellative(s);
        idempotent_ = is_add_idempotent(s);
        commutative_ = is_commutative(s);
        ring_ = is_ring(s);
        directed_ = is_downwards_directed(s);
        archimedean_ = is_add_archimedean(s);
        bi_simple_ = bi_ideal_simplicity(s);
        bi_free_ = bi_ideal_freeness(s);
        ss_ = product_set(s).size();
        s_plus_s_is_s_ = sum_set(s).size() == s.order();
        for (std::size_t m : {2, 3}) {
            divisible_.push_back(is_m_divisible(s, m));
            uniquely_divisible_.push_back(is_uniquely_m_divisible(s, m));
        }
        std::vector<std::size_t> dims{2, options.n};
        if (options.bi_ideal_layer_n3) {
            dims.push_back(3);
        }
        std::sort(dims.begin(), dims.end());
        dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
        for (std::size_t d : dims) {
            if (matrix_order(s.order(), d, options.bound)) {
                bi_dims_.push_back(d);
            } else {
                skipped_dims_.push_back(d);
            }
        }
    }

    HarnessReport run(std::size_t index) {
        using Check = HarnessEntry (Battery::*)();
        static const std::map<std::string, Check> checks = {
            {"bi_ideal_rees_congruence", &Battery::bi_ideal_rees_congruence},
            {"bi_absorbing_singleton", &Battery::bi_absorbing_singleton},
            {"congruence_simple_implies_bi_ideal_simple", &Battery::simple_implies_bi_ideal_simple},
            {"separating_pair_dichotomy", &Battery::separating_pair_dichotomy},
            {"matrix_simple_necessary_conditions", &Battery::matrix_simple_necessary_conditions},
            {"absorbing_case_characterization", &Battery::absorbing_case_characterization},
            {"cancellative_simple_ring_or_commutative", &Battery::cancellative_ring_or_commutative},
            {"special_element_lifting", &Battery::special_element_lifting},
            {"bi_ideal_contains_constant", &Battery::bi_ideal_contains_constant},
            {"q_p_r_inclusions", &Battery::q_p_r_inclusions},
            {"q_singleton_criterion", &Battery::q_singleton_criterion},
            {"matrix_bi_ideal_simple_forces_free_base", &Battery::matrix_bi_simple_forces_free_base},
            {"free_base_least_bi_ideal", &Battery::free_base_least_bi_ideal},
            {"bi_ideal_four_conditions", &Battery::bi_ideal_four_conditions},
            {"bi_ideal_simplicity_descends", &Battery::bi_ideal_simplicity_descends},
            {"commutative_free_matrix_directed", &Battery::commutative_free_matrix_directed},
            {"directed_free_base_lifts", &Battery::directed_free_base_lifts},
            {"condition_v_observation", &Battery::condition_v_observation},
            {"archimedean_divisible_directed", &Battery::archimedean_divisible_directed},
            {"quasiorder_kernel_congruence", &Battery::quasiorder_kernel_congruence},
            {"cancellative_nonring_ordering", &Battery::cancellative_nonring_ordering},
            {"k_multiple_congruence", &Battery::k_multiple_congruence_check},
            {"archimedean_transfer", &Battery::archimedean_transfer},
            {"conical_transfer", &Battery::conical_transfer},
            {"cancellative_directed_characterization", &Battery::cancellative_directed},
            {"cancellative_commutative_characterization", &Battery::cancellative_commutative},
            {"finite_cancellative_classification", &Battery::finite_cancellative_classification},
            {"entrywise_congruence_transfer", &Battery::entrywise_congruence_transfer},
            {"difference_ring_embedding", &Battery::difference_ring_embedding},
        };
        HarnessReport report{index, s_, {}, std::nullopt};
        bool matched = !options_.statement.has_value();
        for (const auto& info : statement_catalog()) {
            if (options_.statement && *options_.statement != info.id) {
                continue;
            }
            matched = true;
            if (!info.in_scope) {
                report.entries.push_back({info.id, Verdict::out_of_scope, "", info.summary, std::nullopt});
                continue;
            }
            current_ = info.id;
            HarnessEntry entry = (this->*checks.at(info.id))();
            entry.statement = info.id;
            report.entries.push_back(std::move(entry));
        }
        if (!matched) {
            throw InvalidArgument("unknown statement id: " + *options_.statement);
        }
        return report;
    }

  private:
    // ---- entry constructors ----

    HarnessEntry holds(std::string quantifier, std::string detail) const {
        return {current_, Verdict::holds, std::move(quantifier), std::move(detail), std::nullopt};
    }
    HarnessEntry unmet(std::string detail, std::string quantifier = {}) const {
        return {current_, Verdict::precondition_unmet, std::move(quantifier), std::move(detail),
                std::nullopt};
    }
    HarnessEntry unchecked(std::string detail, std::string quantifier = {}) const {
        return {current_, Verdict::unchecked, std::move(quantifier), std::move(detail), std::nullopt};
    }
    HarnessEntry violation(std::string quantifier, std::string detail, Witness witness) const {
        return {current_, Verdict::violation, std::move(quantifier), std::move(detail),
                std::move(witness)};
    }
    std::string skipped_note() const {
        if (skipped_dims_.empty()) {
            return {};
        }
        return "; " + dims_label(skipped_dims_) + " exceeds the materialization bound";
    }

    // ---- lazily computed matrix facts ----

    MatrixFacts* matrix(std::size_t dim) {
        if (!matrix_order(s_.order(), dim, options_.bound)) {
            return nullptr;
        }
        auto& slot = matrices_[dim];
        if (!slot) {
            slot = std::make_unique<MatrixFacts>(materialize(s_, dim, options_.bound));
            auto& f = *slot;
            const auto& prod = f.t.product();
            f.bi_simple = bi_ideal_simplicity(prod);
            f.bi_free = bi_ideal_freeness(prod);
            for (Elem a = 0; a < s_.order(); ++a) {
                f.q.push_back(q_a(f.t, a));
                f.r.push_back(r_a(f.t, a));
                f.all_q_full = f.all_q_full && f.q.back().is_all();
                try {
                    f.p.push_back(p_a(f.t, a, options_.vector_budget));
                    f.condition_iv = f.condition_iv && f.p.back().is_all();
                } catch (const BoundExceeded&) {
                    f.p_within_budget = false;
                }
            }
        }
        return slot.get();
    }

    const SimplicityVerdict* matrix_simplicity() {
        if (!matrix_simplicity_) {
            const MatrixFacts* m = matrix(options_.n);
            if (m == nullptr) {
                return nullptr;
            }
            matrix_simplicity_ = congruence_simplicity(m->t.product());
        }
        return &*matrix_simplicity_;
    }

    std::string n_label() const { return "n=" + std::to_string(options_.n); }

    // ---- statements ----

    HarnessEntry bi_ideal_rees_congruence() {
        for (Elem x = 0; x < s_.order(); ++x) {
            const auto ideal = bi_ideal_generated(s_, ElementSet::of(s_.order(), {x}));
            std::vector<std::size_t> key(s_.order());
            for (Elem y = 0; y < s_.order(); ++y) {
                key[y] = ideal.contains(y) ? s_.order() : y;
            }
            const auto p = Partition::from_keys(key);
            if (auto fail = congruence_failure(s_, p)) {
                return violation("", "Rees relation of the bi-ideal generated by " +
                                         std::to_string(x) + " is not a congruence",
                                 {"generator, then failing (a, b, c)", {x, (*fail)[0], (*fail)[1], (*fail)[2]}, 0, p});
            }
        }
        return holds("", "checked the bi-ideal generated by each element");
    }

    HarnessEntry bi_absorbing_singleton() {
        for (Elem w = 0; w < s_.order(); ++w) {
            const bool singleton_ideal = is_bi_ideal(s_, ElementSet::of(s_.order(), {w}));
            if (singleton_ideal != (special_.bi_absorbing == w)) {
                return violation("", "element " + std::to_string(w) +
                                         " disagrees: singleton bi-ideal " + yes_no(singleton_ideal),
                                 {"element", {w}, 0, std::nullopt});
            }
        }
        return holds("", special_.bi_absorbing ? "bi-absorbing element " +
                                                     std::to_string(*special_.bi_absorbing)
                                               : "no bi-absorbing element, no singleton bi-ideal");
    }

    HarnessEntry simple_implies_bi_ideal_simple() {
        if (!simple_.simple) {
            return unmet("S is not congruence-simple");
        }
        if (!bi_simple_.holds) {
            return violation("", "simple S has a proper nontrivial bi-ideal",
                             {"generator", {*bi_simple_.generator}, 0, std::nullopt});
        }
        return holds("", "S is bi-ideal-simple");
    }

    HarnessEntry separating_pair_dichotomy() {
        if (!simple_.simple || ss_ < 2) {
            return unmet("requires S congruence-simple with |SS| >= 2");
        }
        const bool case_i = s_.order() == 2 && is_mul_idempotent(s_) && idempotent_ &&
                            !special_.mul_absorbing;
        const auto failure = separating_pair_failure(s_);
        if (case_i || !failure) {
            return holds("", case_i ? (failure ? "two-element idempotent case"
                                               : "two-element idempotent case; pairs also separated")
                                    : "every pair a != b is separated on both sides");
        }
        return violation("", "neither case applies", {"unseparated pair", {failure->first, failure->second}, 0, std::nullopt});
    }

    HarnessEntry matrix_simple_necessary_conditions() {
        const auto* simp = matrix_simplicity();
        if (simp == nullptr) {
            return unchecked("M_n(S) exceeds the materialization bound", n_label());
        }
        if (!simp->simple) {
            return unmet("M_n(S) is not congruence-simple", n_label());
        }
        std::string failed;
        if (!simple_.simple) failed += " S-not-simple";
        if (special_.bi_absorbing) failed += " bi-absorbing";
        if (ss_ < 2) failed += " |SS|<2";
        if (!idempotent_ && !cancellative_) failed += " neither-idempotent-nor-cancellative";
        if (!failed.empty()) {
            return violation(n_label(), "failed:" + failed, {"base semiring", {}, 0, std::nullopt});
        }
        return holds(n_label(), "all four necessary conditions hold");
    }

    HarnessEntry absorbing_case_characterization() {
        const std::size_t bi_dim = options_.bi_ideal_layer_n3 ? 3 : options_.n;
        AbsorbingCaseVerdict v;
        try {
            v = absorbing_case_check(s_, options_.bound, options_.n, bi_dim);
        } catch (const PreconditionUnmet&) {
            return unmet("no M_k(S) has a multiplicatively absorbing element");
        }
        std::string quantifier = "n=" + std::to_string(options_.n) + " (congruences)";
        if (v.matrix_bi_ideal_simple) {
            quantifier += ", n=" + std::to_string(bi_dim) + " (bi-ideals)";
        }
        if (!v.matrix_simple) {
            return unchecked("M_n(S) exceeds the materialization bound", quantifier);
        }
        std::string detail = "absorbing at k=" + std::to_string(v.absorbing_k) +
                             "; (iii)=" + yes_no(v.condition_iii) +
                             "; (ii)=" + yes_no(*v.matrix_simple);
        if (v.matrix_bi_ideal_simple) {
            detail += "; bi-ideal-simple at n=" + std::to_string(bi_dim) + ": " +
                      yes_no(*v.matrix_bi_ideal_simple);
        }
        if (v.coda_holds) {
            detail += "; zero and ring-or-idempotent: " + yes_no(*v.coda_holds);
        }
        if (!v.equivalence_holds || v.coda_holds == false) {
            Witness w{"base semiring", {}, 0, std::nullopt};
            if (v.witness_pair) {
                w = {"generator pair and congruence of M_n(S)",
                     {v.witness_pair->first, v.witness_pair->second}, options_.n,
                     v.witness_congruence};
            }
            return violation(quantifier, detail, std::move(w));
        }
        return holds(quantifier, detail);
    }

    HarnessEntry cancellative_ring_or_commutative() {
        if (!cancellative_ || !simple_.simple) {
            return unmet("requires S additively cancellative and congruence-simple");
        }
        if (special_.add_neutral && !ring_) {
            return violation("", "additively neutral element but not a ring", {"neutral element", {*special_.add_neutral}, 0, std::nullopt});
        }
        if (special_.unity && !ring_ && !commutative_) {
            return violation("", "unity but neither a ring nor commutative", {"unity", {*special_.unity}, 0, std::nullopt});
        }
        return holds("", "ring=" + yes_no(ring_) + ", commutative=" + yes_no(commutative_));
    }

    HarnessEntry special_element_lifting() {
        for (std::size_t d : bi_dims_) {
            try {
                (void)lift_checks(matrix(d)->t);
            } catch (const LiftingViolation& e) {
                return violation(dims_label({d}), e.what(), {"base semiring", {}, 0, std::nullopt});
            }
        }
        if (bi_dims_.empty()) {
            return unchecked("no matrix semiring fits the bound");
        }
        return holds(dims_label(bi_dims_), "zero, bi-absorbing, unity, absorbing" + skipped_note());
    }

    HarnessEntry bi_ideal_contains_constant() {
        if (bi_dims_.empty()) {
            return unchecked("no matrix semiring fits the bound");
        }
        std::vector<unsigned char> translate_onto(s_.order());
        for (Elem a = 0; a < s_.order(); ++a) {
            ElementSet image(s_.order());
            for (Elem x = 0; x < s_.order(); ++x) {
                image.insert(s_.add(a, x));
            }
            translate_onto[a] = image.is_all();
        }
        std::size_t checked = 0;
        for (std::size_t d : bi_dims_) {
            auto* m = matrix(d);
            const auto& prod = m->t.product();
            auto check = [&](const ElementSet& ideal, Elem generator) -> std::optional<HarnessEntry> {
                ++checked;
                bool any = false;
                for (Elem a = 0; a < s_.order(); ++a) {
                    if (!ideal.contains(m->t.bar(a))) {
                        continue;
                    }
                    any = true;
                    if (translate_onto[a] && !ideal.is_all()) {
                        return violation(dims_label({d}),
                                         "contains bar(a) with a + S = S but is proper",
                                         {"generator in M_n(S), base element a", {generator, a}, d, std::nullopt});
                    }
                }
                if (!any) {
                    return violation(dims_label({d}), "bi-ideal without a constant matrix",
                                     {"generator in M_n(S)", {generator}, d, std::nullopt});
                }
                return std::nullopt;
            };
            for (Elem x = 0; x < prod.order(); ++x) {
                if (auto bad = check(bi_ideal_generated(prod, ElementSet::of(prod.order(), {x})), x)) {
                    return *bad;
                }
            }
        }
        return holds(dims_label(bi_dims_),
                     std::to_string(checked) + " principal bi-ideals searched" + skipped_note());
    }

    HarnessEntry q_p_r_inclusions() {
        if (bi_dims_.empty()) {
            return unchecked("no matrix semiring fits the bound");
        }
        for (std::size_t d : bi_dims_) {
            auto* m = matrix(d);
            if (!m->p_within_budget) {
                return unchecked("P_a exceeds the vector budget", dims_label({d}));
            }
            const auto& prod = m->t.product();
            for (Elem a = 0; a < s_.order(); ++a) {
                const auto& q = m->q[a];
                const auto& p = m->p[a];
                const auto& r = m->r[a];
                std::string failed;
                if (!q.subset_of(p)) failed += " Q_a⊄P_a";
                if (!q.subset_of(r)) failed += " Q_a⊄R_a";
                if (!is_bi_ideal(prod, q)) failed += " Q_a-not-bi-ideal";
                if (!is_bi_ideal(prod, p)) failed += " P_a-not-bi-ideal";
                if (s_plus_s_is_s_ && !(q == p)) failed += " Q_a≠P_a-with-S+S=S";
                if (!failed.empty()) {
                    return violation(dims_label({d}), "a=" + std::to_string(a) + ":" + failed,
                                     {"base element a", {a}, 0, std::nullopt});
                }
            }
        }
        return holds(dims_label(bi_dims_), std::string("S+S=S: ") + yes_no(s_plus_s_is_s_) + skipped_note());
    }

    HarnessEntry q_singleton_criterion() {
        if (bi_dims_.empty()) {
            return unchecked("no matrix semiring fits the bound");
        }
        std::size_t singletons = 0;
        for (std::size_t d : bi_dims_) {
            auto* m = matrix(d);
            for (Elem a = 0; a < s_.order(); ++a) {
                const bool singleton = m->q[a].size() == 1;
                bool criterion = false;
                if (special_.bi_absorbing) {
                    const auto sandwich = sandwich_set(s_, d, a);
                    criterion = sandwich.size() == 1 && sandwich.contains(*special_.bi_absorbing);
                }
                if (singleton != criterion) {
                    return violation(dims_label({d}),
                                     "a=" + std::to_string(a) + ": |Q_a|=1 is " + yes_no(singleton) +
                                         " but the criterion is " + yes_no(criterion),
                                     {"base element a", {a}, 0, std::nullopt});
                }
                singletons += singleton;
            }
        }
        return holds(dims_label(bi_dims_), std::to_string(singletons) + " singleton Q_a" + skipped_note());
    }

    HarnessEntry matrix_bi_simple_forces_free_base() {
        std::vector<std::size_t> simple_dims;
        for (std::size_t d : bi_dims_) {
            if (matrix(d)->bi_simple.holds) {
                simple_dims.push_back(d);
            }
        }
        if (simple_dims.empty()) {
            return bi_dims_.empty() ? unchecked("no matrix semiring fits the bound")
                                    : unmet("no checked M_n(S) is bi-ideal-simple", dims_label(bi_dims_));
        }
        if (!bi_free_.holds) {
            return violation(dims_label(simple_dims), "S is not bi-ideal-free",
                             {"generator of a proper bi-ideal of S",
                              bi_free_.generator ? std::vector<Elem>{*bi_free_.generator} : std::vector<Elem>{},
                              0, std::nullopt});
        }
        return holds(dims_label(simple_dims), "S is bi-ideal-free");
    }

    HarnessEntry free_base_least_bi_ideal() {
        if (!bi_free_.holds) {
            return unmet("S is not bi-ideal-free");
        }
        if (bi_dims_.empty()) {
            return unchecked("no matrix semiring fits the bound");
        }
        for (std::size_t d : bi_dims_) {
            auto* m = matrix(d);
            if (!m->p_within_budget) {
                return unchecked("P_a exceeds the vector budget", dims_label({d}));
            }
            const auto least = least_bi_ideal(m->t.product());
            for (Elem b = 0; b < s_.order(); ++b) {
                if (!least.contains(m->t.bar(b))) {
                    return violation(dims_label({d}), "bar(b) outside the least bi-ideal",
                                     {"base element b", {b}, 0, std::nullopt});
                }
            }
            for (Elem a = 0; a < s_.order(); ++a) {
                if (!(m->q[a] == least) || !(m->r[a] == least) || !(m->p[a] == least)) {
                    return violation(dims_label({d}), "Q_a, R_a, P_a and J differ",
                                     {"base element a", {a}, 0, std::nullopt});
                }
            }
        }
        return holds(dims_label(bi_dims_), "J = Q_a = R_a = P_a for every a" + skipped_note());
    }

    HarnessEntry bi_ideal_four_conditions() {
        if (s_.order() < 2) {
            return unmet("requires |S| >= 2");
        }
        if (bi_dims_.empty()) {
            return unchecked("no matrix semiring fits the bound");
        }
        std::string detail;
        for (std::size_t d : bi_dims_) {
            auto* m = matrix(d);
            if (!m->p_within_budget) {
                return unchecked("P_a exceeds the vector budget", dims_label({d}));
            }
            const bool c1 = m->bi_simple.holds, c2 = m->bi_free.holds, c3 = m->all_q_full,
                       c4 = m->condition_iv;
            const std::string values = yes_no(c1) + "/" + yes_no(c2) + "/" + yes_no(c3) + "/" + yes_no(c4);
            if (!(c1 == c2 && c2 == c3 && c3 == c4)) {
                return violation(dims_label({d}), "conditions (i)-(iv) = " + values,
                                 {"base semiring", {}, 0, std::nullopt});
            }
            if (c1 && !bi_free_.holds) {
                return violation(dims_label({d}), "conditions hold but S is not bi-ideal-free",
                                 {"base semiring", {}, 0, std::nullopt});
            }
            detail += (detail.empty() ? "" : "; ") + dims_label({d}) + ": " + yes_no(c1);
        }
        return holds(dims_label(bi_dims_), detail + skipped_note());
    }

    HarnessEntry bi_ideal_simplicity_descends() {
        auto* m3 = matrix(3);
        if (!options_.bi_ideal_layer_n3 || m3 == nullptr) {
            return unchecked("M_3(S) exceeds the materialization bound or the n=3 layer is off",
                             "n=3,k=2");
        }
        if (!m3->bi_simple.holds) {
            return unmet("M_3(S) is not bi-ideal-simple", "n=3,k=2");
        }
        if (!matrix(2)->bi_simple.holds) {
            return violation("n=3,k=2", "M_2(S) is not bi-ideal-simple",
                             {"generator in M_2(S)", {*matrix(2)->bi_simple.generator}, 2, std::nullopt});
        }
        return holds("n=3,k=2", "M_2(S) is bi-ideal-simple");
    }

    HarnessEntry commutative_free_matrix_directed() {
        if (!commutative_) {
            return unmet("S is not commutative");
        }
        std::vector<std::size_t> free_dims;
        for (std::size_t d : bi_dims_) {
            if (matrix(d)->bi_free.holds) {
                free_dims.push_back(d);
            }
        }
        if (free_dims.empty()) {
            return bi_dims_.empty() ? unchecked("no matrix semiring fits the bound")
                                    : unmet("no checked M_n(S) is bi-ideal-free", dims_label(bi_dims_));
        }
        if (!directed_) {
            return violation(dims_label(free_dims), "S is not downwards directed", {"base semiring", {}, 0, std::nullopt});
        }
        return holds(dims_label(free_dims), "S is downwards directed");
    }

    HarnessEntry directed_free_base_lifts() {
        if (!directed_ || !bi_free_.holds) {
            return unmet("requires S downwards directed and bi-ideal-free");
        }
        if (bi_dims_.empty()) {
            return unchecked("no matrix semiring fits the bound");
        }
        for (std::size_t d : bi_dims_) {
            const auto& v = matrix(d)->bi_free;
            if (!v.holds) {
                return violation(dims_label({d}), "M_n(S) has a proper bi-ideal",
                                 {"generator in M_n(S)", {*v.generator}, d, std::nullopt});
            }
        }
        return holds(dims_label(bi_dims_), "M_n(S) is bi-ideal-free" + skipped_note());
    }

    HarnessEntry condition_v_observation() {
        if (bi_dims_.empty()) {
            return unchecked("no matrix semiring fits the bound");
        }
        const bool condition_v = bi_free_.holds && directed_;
        std::string differs;
        for (std::size_t d : bi_dims_) {
            if (matrix(d)->bi_simple.holds != condition_v) {
                differs += (differs.empty() ? "" : ",") + std::to_string(d);
            }
        }
        HarnessEntry e{current_, Verdict::observation, dims_label(bi_dims_),
                       "(v)=" + yes_no(condition_v) +
                           (differs.empty() ? "; consistent with M_n(S) bi-ideal-simplicity"
                                            : "; counterexample at n=" + differs),
                       std::nullopt};
        return e;
    }

    HarnessEntry archimedean_divisible_directed() {
        const bool divisible = uniquely_divisible_[0] || uniquely_divisible_[1];
        if (!archimedean_ || !divisible) {
            return unmet("requires additively archimedean and uniquely m-divisible", "m in {2,3}");
        }
        if (!directed_) {
            return violation("m in {2,3}", "S is not downwards directed", {"base semiring", {}, 0, std::nullopt});
        }
        return holds("m in {2,3}", "S is downwards directed");
    }

    HarnessEntry quasiorder_kernel_congruence() {
        const auto kernel = quasiorder_kernel(s_);
        if (auto fail = congruence_failure(s_, kernel)) {
            return violation("", "kernel is not a congruence", {"failing (a, b, c)", *fail, 0, kernel});
        }
        return holds("", std::to_string(kernel.block_count()) + " kernel blocks");
    }

    HarnessEntry cancellative_nonring_ordering() {
        if (!simple_.simple || !cancellative_ || ring_) {
            return unmet(cancellative_ && !ring_ ? "S is not congruence-simple"
                                                 : "requires a congruence-simple cancellative non-ring "
                                                   "(finite cancellative semirings are rings)");
        }
        if (!quasiorder_kernel(s_).is_identity()) {
            return violation("", "the quasiordering is not antisymmetric", {"base semiring", {}, 0, std::nullopt});
        }
        const auto d = difference_ring(s_);
        for (Elem a = 0; a < s_.order(); ++a) {
            for (Elem b = 0; b < s_.order(); ++b) {
                if (difference_order_leq(d, d.embed[a], d.embed[b]) != order_.leq(a, b)) {
                    return violation("", "difference order does not restrict to the quasiordering",
                                     {"pair", {a, b}, 0, std::nullopt});
                }
            }
        }
        return holds("", "ordering verified");
    }

    HarnessEntry k_multiple_congruence_check() {
        for (std::size_t k : {2, 3}) {
            const auto rho = k_multiple_congruence(s_, k);
            if (auto fail = congruence_failure(s_, rho)) {
                return violation("k in {2,3}", "rho_" + std::to_string(k) + " is not a congruence",
                                 {"failing (a, b, c)", *fail, 0, rho});
            }
            if (cancellative_ && simple_.simple) {
                if (!rho.is_identity() && !rho.is_full()) {
                    return violation("k in {2,3}", "rho_" + std::to_string(k) + " is proper and nontrivial",
                                     {"congruence", {}, 0, rho});
                }
                if (rho.is_full() && special_.mul_absorbing != s_.multiple(k, 0)) {
                    return violation("k in {2,3}", "rho_" + std::to_string(k) + " is full but kx is not absorbing",
                                     {"congruence", {}, 0, rho});
                }
            }
        }
        return holds("k in {2,3}", cancellative_ && simple_.simple ? "congruences, each trivial or full"
                                                                    : "congruences");
    }

    HarnessEntry archimedean_transfer() {
        if (bi_dims_.empty()) {
            return unchecked("no matrix semiring fits the bound");
        }
        for (std::size_t d : bi_dims_) {
            if (is_add_archimedean(matrix(d)->t.product()) != archimedean_) {
                return violation(dims_label({d}), "archimedean property differs between S and M_n(S)",
                                 {"base semiring", {}, 0, std::nullopt});
            }
        }
        return holds(dims_label(bi_dims_), "archimedean=" + yes_no(archimedean_) + skipped_note());
    }

    HarnessEntry conical_transfer() {
        if (!cancellative_) {
            return unmet("S is not additively cancellative");
        }
        if (bi_dims_.empty()) {
            return unchecked("no matrix semiring fits the bound");
        }
        const bool conical = is_conical(s_);
        const bool expected = conical && ss_ >= 2;
        for (std::size_t d : bi_dims_) {
            if (is_conical(matrix(d)->t.product()) != expected) {
                return violation(dims_label({d}), "conical(M_n(S)) differs from conical(S) and |SS|>=2",
                                 {"base semiring", {}, 0, std::nullopt});
            }
        }
        return holds(dims_label(bi_dims_), "conical(S)=" + yes_no(conical) + ", |SS|=" +
                                               std::to_string(ss_) + skipped_note());
    }

    HarnessEntry cancellative_directed() {
        if (!cancellative_ || !(directed_ || divisible_[0] || divisible_[1])) {
            return unmet("requires cancellative and directed or m-divisible", "m in {2,3}");
        }
        const auto* simp = matrix_simplicity();
        const std::string q = n_label() + "; m in {2,3}";
        if (simp == nullptr) {
            return unchecked("M_n(S) exceeds the materialization bound", q);
        }
        const bool iii = simple_.simple && ss_ >= 2;
        if (simp->simple != iii) {
            return violation(q, "(ii)=" + yes_no(simp->simple) + " but (iii)=" + yes_no(iii),
                             matrix_witness(*simp));
        }
        return holds(q, "(ii)=(iii)=" + yes_no(iii));
    }

    HarnessEntry cancellative_commutative() {
        if (!cancellative_ || !(commutative_ || special_.unity || special_.add_neutral)) {
            return unmet("requires cancellative and commutative, unital or with additive neutral");
        }
        const auto* simp = matrix_simplicity();
        if (simp == nullptr) {
            return unchecked("M_n(S) exceeds the materialization bound", n_label());
        }
        const bool iii = simple_.simple && ss_ >= 2 && directed_;
        if (simp->simple != iii) {
            return violation(n_label(), "(ii)=" + yes_no(simp->simple) + " but (iii)=" + yes_no(iii),
                             matrix_witness(*simp));
        }
        return holds(n_label(), "(ii)=(iii)=" + yes_no(iii));
    }

    HarnessEntry finite_cancellative_classification() {
        if (!cancellative_) {
            return unmet("S is not additively cancellative");
        }
        const auto c = classify_finite_cancellative(s_, options_.bound);
        if (!c.matrix_simple) {
            return unchecked("M_2(S) exceeds the materialization bound", "n=2");
        }
        std::string detail = "M_2 simple=" + yes_no(*c.matrix_simple) + "; ";
        detail += c.matrix_ring ? "S ≅ M_" + std::to_string(c.matrix_ring->first) + "(F_" +
                                      std::to_string(c.matrix_ring->second) + ")"
                                : std::string("not a matrix ring over a field");
        if (!*c.equivalence_holds) {
            return violation("n=2", detail, {"base semiring", {}, 0, std::nullopt});
        }
        return holds("n=2", detail);
    }

    HarnessEntry entrywise_congruence_transfer() {
        if (!special_.zero) {
            return unmet("S has no zero element");
        }
        auto* m = matrix(2);
        if (m == nullptr || m->t.order() > 256) {
            return unchecked("M_2(S) has more than 256 elements", "n=2");
        }
        const auto& t = m->t;
        const auto& prod = t.product();
        const Elem zero_t = t.bar(*special_.zero);
        for (Elem x = 0; x < prod.order(); ++x) {
            if (x == zero_t) {
                continue;
            }
            const auto rho = principal_congruence(prod, x, zero_t);
            std::vector<std::size_t> key(s_.order());
            UnionFind uf(s_.order());
            for (Elem a = 0; a < s_.order(); ++a) {
                for (Elem b = a + 1; b < s_.order(); ++b) {
                    bool all = true;
                    for (std::size_t i = 0; i < 2 && all; ++i) {
                        for (std::size_t j = 0; j < 2 && all; ++j) {
                            all = rho.related(t.e_matrix(i, j, a), t.e_matrix(i, j, b));
                        }
                    }
                    if (all) {
                        uf.unite(a, b);
                    }
                }
            }
            const auto sigma = Partition::from_union_find(uf);
            if (auto fail = congruence_failure(s_, sigma)) {
                return violation("n=2", "restricted relation is not a congruence of S",
                                 {"matrix generator paired with the zero matrix", {x}, 2, rho});
            }
            // A differing entry with c a d != c b d forces sigma to be nontrivial.
            bool separated = false;
            for (std::size_t p = 0; p < 4 && !separated; ++p) {
                const Elem a = t.entry(x, p / 2, p % 2), b = *special_.zero;
                for (Elem c = 0; c < s_.order() && !separated; ++c) {
                    for (Elem d = 0; d < s_.order() && !separated; ++d) {
                        separated = s_.mul(s_.mul(c, a), d) != s_.mul(s_.mul(c, b), d);
                    }
                }
            }
            if (separated && sigma.is_identity()) {
                return violation("n=2", "restricted relation is trivial although c a d != c b d",
                                 {"matrix generator paired with the zero matrix", {x}, 2, rho});
            }
        }
        return holds("n=2", "checked principal congruences (X, 0) of M_2(S)");
    }

    HarnessEntry difference_ring_embedding() {
        if (!cancellative_) {
            return unmet("S is not additively cancellative");
        }
        const auto d = difference_ring(s_);
        std::string failed;
        if (d.ring.order() != s_.order()) failed += " size";
        if (find_axiom_failure(d.ring.order(), d.ring.add_data(), d.ring.mul_data())) failed += " axioms";
        if (!is_ring(d.ring)) failed += " not-a-ring";
        std::vector<unsigned char> hit(d.ring.order(), 0);
        for (Elem a = 0; a < s_.order(); ++a) {
            if (hit[d.embed[a]]++) failed += " not-injective";
            for (Elem b = 0; b < s_.order(); ++b) {
                if (d.embed[s_.add(a, b)] != d.ring.add(d.embed[a], d.embed[b]) ||
                    d.embed[s_.mul(a, b)] != d.ring.mul(d.embed[a], d.embed[b])) {
                    failed += " not-a-homomorphism";
                    a = static_cast<Elem>(s_.order());
                    break;
                }
            }
        }
        if (!failed.empty()) {
            return violation("", "difference ring:" + failed, {"base semiring", {}, 0, std::nullopt});
        }
        return holds("", "embedding is a bijective homomorphism onto a ring");
    }

    Witness matrix_witness(const SimplicityVerdict& simp) const {
        if (simp.witness) {
            return {"generator pair and congruence of M_n(S)",
                    {simp.witness->first, simp.witness->second}, options_.n, simp.congruence};
        }
        return {"base semiring", {}, 0, std::nullopt};
    }

    const FiniteSemiring& s_;
    const HarnessOptions& options_;
    SpecialElements special_;
    QuasiOrder order_;
    SimplicityVerdict simple_;
    bool cancellative_ = false, idempotent_ = false, commutative_ = false, ring_ = false;
    bool directed_ = false, archimedean_ = false, s_plus_s_is_s_ = false;
    BiIdealVerdict bi_simple_, bi_free_;
    std::size_t ss_ = 0;
    std::vector<bool> divisible_, uniquely_divisible_;
    std::vector<std::size_t> bi_dims_, skipped_dims_;
    std::map<std::size_t, std::unique_ptr<MatrixFacts>> matrices_;
    std::optional<SimplicityVerdict> matrix_simplicity_;
    std::string current_;
};

}  // namespace

HarnessReport run_harness(const FiniteSemiring& s, const HarnessOptions& options, std::size_t index) {
    if (options.n < 2) {
        throw InvalidArgument("harness matrix dimension must be at least 2");
    }
    const auto start = std::chrono::steady_clock::now();
    auto report = Battery(s, options).run(index);
    if (options.timing) {
        report.elapsed_ms = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - start)
                                .count();
    }
    return report;
}

std::vector<HarnessReport> run_harness(const std::vector<FiniteSemiring>& corpus,
                                       const HarnessOptions& options) {
    std::vector<HarnessReport> out;
    out.reserve(corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        out.push_back(run_harness(corpus[i], options, i));
    }
    return out;
}

}  // namespace semiring_lab
