#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/central.hpp"
#include "ringlab/config.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/structure.hpp"
#include "ringlab/submodule.hpp"

namespace ringlab {

inline bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// Ann_A(2) essential in A_C. This is the exterior-ring criterion that
/// replaces building the |A|^(2^n)-element ring with an |A|-scale scan.
inline bool ann2_essential(const Ring& a, const CenterData& c, const RunConfig& cfg = {}) {
    Submodule ann2 = annihilator_of_int(a, 2, cfg);
    return is_essential_c_submodule(a, c, ann2, cfg).essential;
}

/// Both sides of the characteristic criterion: (Ann_A(2) essential,
/// characteristic is a power of two). The two always agree.
inline std::pair<bool, bool> lemma22_check(const Ring& a, const CenterData& c,
                                           const RunConfig& cfg = {}) {
    return {ann2_essential(a, c, cfg), is_power_of_two(a.characteristic())};
}

/// Fast classifier for Lambda(A^n): centrally essential iff A is and
/// (Ann_A(2) essential or n odd). Never builds the exterior ring.
inline bool thm13_check(const Ring& a, const CenterData& c, int n, const RunConfig& cfg = {}) {
    if (!is_centrally_essential(a, c, cfg).essential) return false;
    return n % 2 == 1 || ann2_essential(a, c, cfg);
}

struct Thm14Result {
    bool verdict = false;             // finite-characteristic form
    std::optional<bool> domain_form;  // evaluated when A has no zero-divisors
};

/// Finite-characteristic form: centrally essential and (char a 2-power or
/// n odd). For rings without zero-divisors the simpler char = 2 form is also
/// evaluated and must agree.
inline Thm14Result thm14_check(const Ring& a, const CenterData& c, int n,
                               const RunConfig& cfg = {}) {
    Thm14Result res;
    bool ce = is_centrally_essential(a, c, cfg).essential;
    res.verdict = ce && (is_power_of_two(a.characteristic()) || n % 2 == 1);
    bool zero_div = false;
    for (std::uint64_t x = 1; x < a.size() && !zero_div; ++x)
        for (std::uint64_t y = 1; y < a.size(); ++y)
            if (a.mul(static_cast<ElemIndex>(x), static_cast<ElemIndex>(y)) == a.zero()) {
                zero_div = true;
                break;
            }
    if (!zero_div) {
        res.domain_form = ce && (a.characteristic() == 2 || n % 2 == 1);
        if (*res.domain_form != res.verdict)
            throw TheoremViolation("characteristic-2 and 2-power forms disagree on a domain");
    }
    return res;
}

struct Prop24Result {
    bool all_central = false;
    std::optional<ElemIndex> witness;  // least non-central idempotent, on failure
};

/// All idempotents of a centrally essential ring are central; a failure is
/// an implementation defect, reported with its witness.
inline Prop24Result prop24_check(const Ring& a, const CenterData& c, const RunConfig& cfg = {}) {
    if (!is_centrally_essential(a, c, cfg).essential)
        throw PreconditionViolated("prop24_check requires a centrally essential ring");
    Prop24Result res;
    res.all_central = true;
    for (ElemIndex e : idempotents(a, cfg))
        if (!c.contains(e)) {
            res.all_central = false;
            res.witness = e;
            break;
        }
    return res;
}

struct Prop28Report {
    bool semiprime = false;
    bool center_semiprime = false;
    bool reduced = false;
    bool right_nonsingular = false;
    bool commutative_reduced = false;
    bool asserted = false;  // the equivalence assertion ran (ring was centrally essential)

    bool all_equal() const {
        return semiprime == center_semiprime && semiprime == reduced &&
               semiprime == right_nonsingular && semiprime == commutative_reduced;
    }
};

/// The five equivalent conditions, each evaluated independently; the
/// equivalence is asserted only for centrally essential rings (elsewhere the
/// conditions may genuinely diverge, e.g. a non-semiprime ring with a
/// semiprime center).
inline Prop28Report prop28_report(const Ring& a, const CenterData& c, bool centrally_essential,
                                  const RunConfig& cfg = {}) {
    PredicateRecord ring_flags = structural_predicates(a, cfg);
    Ring center_ring = subring_from_subset(a, c.members, "C(" + a.name() + ")");
    PredicateRecord center_flags = structural_predicates(center_ring, cfg);
    Prop28Report rep;
    rep.semiprime = ring_flags.semiprime;
    rep.center_semiprime = center_flags.semiprime;
    rep.reduced = ring_flags.reduced;
    rep.right_nonsingular = ring_flags.right_nonsingular;
    rep.commutative_reduced = ring_flags.commutative && ring_flags.reduced;
    rep.asserted = centrally_essential;
    if (centrally_essential && !rep.all_equal())
        throw TheoremViolation("equivalence violated on a centrally essential ring: " + a.name());
    return rep;
}

/// R/J(R) of a centrally essential finite ring is commutative and regular
/// (finite => Artinian => semi-Artinian). Failure is a defect.
inline bool thm15_part1_check(const Ring& a, const CenterData& c, const RunConfig& cfg = {}) {
    if (!is_centrally_essential(a, c, cfg).essential)
        throw PreconditionViolated("thm15_part1_check requires a centrally essential ring");
    Submodule j = jacobson_radical(a, cfg);
    Ring q = quotient_ring(a, j, a.name() + "/J");
    PredicateRecord flags = structural_predicates(q, cfg);
    if (!flags.commutative || !flags.regular)
        throw TheoremViolation("R/J(R) not commutative regular for " + a.name());
    return true;
}

struct ProbeReport {
    std::string ring;
    bool q1_quotient_commutative = false;
    std::string q2_note;
    bool q3_socles_equal = false;
    bool q4_center_plus_radical_covers = false;
    std::uint64_t center_size = 0;
    std::uint64_t radical_size = 0;
    std::uint64_t center_plus_radical_size = 0;
    std::uint64_t socle_right_size = 0;
    std::uint64_t socle_c_size = 0;
};

/// Open-question probes; exploratory only, never asserted. Finite rings are
/// semiperfect, so the hypotheses of the socle and splitting questions hold.
inline ProbeReport open_question_probe(const Ring& a, const CenterData& c,
                                       const RunConfig& cfg = {}) {
    if (!is_centrally_essential(a, c, cfg).essential)
        throw PreconditionViolated("open_question_probe requires a centrally essential ring");
    ProbeReport rep;
    rep.ring = a.name();
    rep.center_size = c.size();

    Submodule j = jacobson_radical(a, cfg);
    rep.radical_size = j.size();
    Ring q = quotient_ring(a, j, a.name() + "/J");
    rep.q1_quotient_commutative = structural_predicates(q, cfg).commutative;
    rep.q2_note =
        "N(R) = J(R) on finite rings, so the R/N question collapses into the R/J question";

    Submodule soc_r = socle_right(a, cfg);
    Submodule soc_c = socle_c_module(a, c, cfg);
    rep.socle_right_size = soc_r.size();
    rep.socle_c_size = soc_c.size();
    rep.q3_socles_equal = soc_r.members == soc_c.members;

    std::vector<char> covered(static_cast<std::size_t>(a.size()), 0);
    std::uint64_t count = 0;
    for (ElemIndex cc : c.members)
        for (ElemIndex jj : j.members) {
            ElemIndex s = a.add(cc, jj);
            if (!covered[s]) {
                covered[s] = 1;
                ++count;
            }
        }
    rep.center_plus_radical_size = count;
    rep.q4_center_plus_radical_covers = count == a.size();
    return rep;
}

}  // namespace ringlab
