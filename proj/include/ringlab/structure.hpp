#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ringlab/config.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/submodule.hpp"

namespace ringlab {

/// Unit mask over all elements. In a finite ring, left-multiplication by u
/// is either injective (then u has a two-sided inverse) or kills a nonzero
/// element; scanning v until one of the two outcomes decides each u.
inline std::vector<char> unit_mask(const Ring& r, const RunConfig& cfg = {}) {
    if (r.size() > cfg.enumeration_cap) throw CapExceeded(r.size(), cfg.enumeration_cap);
    std::vector<char> is_unit(static_cast<std::size_t>(r.size()), 0);
    for (std::uint64_t u = 0; u < r.size(); ++u) {
        auto ui = static_cast<ElemIndex>(u);
        for (std::uint64_t v = 0; v < r.size(); ++v) {
            ElemIndex p = r.mul(ui, static_cast<ElemIndex>(v));
            if (p == r.one()) {
                is_unit[u] = 1;
                break;
            }
            if (p == r.zero() && v != r.zero()) break;
        }
    }
    return is_unit;
}

/// {x : 1 - r*x is a unit for all r}; one-sided inverses are two-sided in a
/// finite ring, so the unit mask decides invertibility.
inline Submodule jacobson_radical(const Ring& r, const RunConfig& cfg = {}) {
    auto units = unit_mask(r, cfg);
    std::vector<ElemIndex> members;
    for (std::uint64_t x = 0; x < r.size(); ++x) {
        auto xi = static_cast<ElemIndex>(x);
        bool in = true;
        for (std::uint64_t rr = 0; rr < r.size(); ++rr) {
            if (!units[r.sub(r.one(), r.mul(static_cast<ElemIndex>(rr), xi))]) {
                in = false;
                break;
            }
        }
        if (in) members.push_back(xi);
    }
    return make_submodule(r, SubKind::TwoSidedIdeal, std::move(members));
}

/// Cosets by lexicographically least representative; tables built from
/// representatives, so output is a table-encoded ring.
inline Ring quotient_ring(const Ring& r, const Submodule& ideal, std::string name = {}) {
    if (ideal.kind != SubKind::TwoSidedIdeal) throw NotTwoSided();
    if (ideal.ambient != &r) throw RingMismatch();
    const std::uint64_t n = r.size();
    const std::uint64_t qn = n / ideal.size();
    std::vector<std::uint32_t> cls(static_cast<std::size_t>(n), UINT32_MAX);
    std::vector<ElemIndex> reps;
    reps.reserve(static_cast<std::size_t>(qn));
    for (std::uint64_t x = 0; x < n; ++x) {
        if (cls[x] != UINT32_MAX) continue;
        // ascending scan: first unassigned member is the least of its coset
        auto id = static_cast<std::uint32_t>(reps.size());
        reps.push_back(static_cast<ElemIndex>(x));
        for (ElemIndex j : ideal.members) cls[r.add(static_cast<ElemIndex>(x), j)] = id;
    }
    std::vector<ElemIndex> add_tab(reps.size() * reps.size()), mul_tab(reps.size() * reps.size());
    for (std::size_t a = 0; a < reps.size(); ++a)
        for (std::size_t b = 0; b < reps.size(); ++b) {
            add_tab[a * reps.size() + b] = cls[r.add(reps[a], reps[b])];
            mul_tab[a * reps.size() + b] = cls[r.mul(reps[a], reps[b])];
        }
    if (name.empty()) name = r.name() + "/I";
    return Ring::from_tables(std::move(name), reps.size(), std::move(add_tab), std::move(mul_tab),
                             cls[r.zero()], cls[r.one()]);
}

/// Table ring on a subset that is closed under + and * and contains 0 and 1
/// (e.g. the center). Element order follows the sorted subset.
inline Ring subring_from_subset(const Ring& r, const std::vector<ElemIndex>& members,
                                std::string name) {
    std::vector<std::uint32_t> local(static_cast<std::size_t>(r.size()), UINT32_MAX);
    for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<std::uint32_t>(i);
    auto loc = [&](ElemIndex e) {
        if (local[e] == UINT32_MAX) throw RingError("subset not closed under ring operations");
        return local[e];
    };
    const std::size_t n = members.size();
    std::vector<ElemIndex> add_tab(n * n), mul_tab(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            add_tab[a * n + b] = loc(r.add(members[a], members[b]));
            mul_tab[a * n + b] = loc(r.mul(members[a], members[b]));
        }
    return Ring::from_tables(std::move(name), n, std::move(add_tab), std::move(mul_tab),
                             loc(r.zero()), loc(r.one()));
}

/// Outcomes of the element-level structural scans, with the least witness
/// for each negative verdict.
struct PredicateRecord {
    bool commutative = false;
    bool has_zero_divisors = false;
    bool reduced = false;
    bool semiprime = false;
    bool regular = false;
    bool right_nonsingular = false;

    std::optional<std::pair<ElemIndex, ElemIndex>> noncommutative_witness;
    std::optional<std::pair<ElemIndex, ElemIndex>> zero_divisor_witness;
    std::optional<ElemIndex> square_zero_witness;   // for reduced
    std::optional<ElemIndex> semiprime_witness;     // x != 0 with xRx = 0
    std::optional<ElemIndex> nonregular_witness;    // a not in aRa
    std::optional<ElemIndex> singular_witness;      // x != 0 with essential right annihilator
};

namespace detail {

/// Cyclic essentiality test for a right ideal given as a membership bitmap:
/// E is essential iff for every y != 0 some r has y*r in E \ {0}.
inline bool right_ideal_essential(const Ring& r, const std::vector<char>& in_e) {
    for (std::uint64_t y = 1; y < r.size(); ++y) {
        bool hit = false;
        for (std::uint64_t rr = 0; rr < r.size(); ++rr) {
            ElemIndex p = r.mul(static_cast<ElemIndex>(y), static_cast<ElemIndex>(rr));
            if (p != r.zero() && in_e[p]) {
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

}  // namespace detail

inline PredicateRecord structural_predicates(const Ring& r, const RunConfig& cfg = {}) {
    if (r.size() > cfg.enumeration_cap) throw CapExceeded(r.size(), cfg.enumeration_cap);
    PredicateRecord p;
    const std::uint64_t n = r.size();
    const ElemIndex zero = r.zero();

    p.commutative = true;
    for (std::uint64_t x = 0; x < n && p.commutative; ++x)
        for (std::uint64_t y = x + 1; y < n; ++y)
            if (r.mul(static_cast<ElemIndex>(x), static_cast<ElemIndex>(y)) !=
                r.mul(static_cast<ElemIndex>(y), static_cast<ElemIndex>(x))) {
                p.commutative = false;
                p.noncommutative_witness = {static_cast<ElemIndex>(x), static_cast<ElemIndex>(y)};
                break;
            }

    p.has_zero_divisors = false;
    for (std::uint64_t x = 0; x < n && !p.has_zero_divisors; ++x) {
        if (x == zero) continue;
        for (std::uint64_t y = 0; y < n; ++y) {
            if (y == zero) continue;
            if (r.mul(static_cast<ElemIndex>(x), static_cast<ElemIndex>(y)) == zero) {
                p.has_zero_divisors = true;
                p.zero_divisor_witness = {static_cast<ElemIndex>(x), static_cast<ElemIndex>(y)};
                break;
            }
        }
    }

    // a nilpotent of minimal degree m >= 2 yields a square-zero element
    // x^ceil(m/2), so square-zero search decides reducedness
    p.reduced = true;
    for (std::uint64_t x = 0; x < n; ++x) {
        if (x == zero) continue;
        auto xi = static_cast<ElemIndex>(x);
        if (r.mul(xi, xi) == zero) {
            p.reduced = false;
            p.square_zero_witness = xi;
            break;
        }
    }

    p.semiprime = true;
    for (std::uint64_t x = 0; x < n; ++x) {
        if (x == zero) continue;
        auto xi = static_cast<ElemIndex>(x);
        bool kills_all = true;
        for (std::uint64_t rr = 0; rr < n; ++rr)
            if (r.mul(r.mul(xi, static_cast<ElemIndex>(rr)), xi) != zero) {
                kills_all = false;
                break;
            }
        if (kills_all) {
            p.semiprime = false;
            p.semiprime_witness = xi;
            break;
        }
    }

    p.regular = true;
    for (std::uint64_t a = 0; a < n; ++a) {
        auto ai = static_cast<ElemIndex>(a);
        bool found = false;
        for (std::uint64_t x = 0; x < n; ++x)
            if (r.mul(r.mul(ai, static_cast<ElemIndex>(x)), ai) == ai) {
                found = true;
                break;
            }
        if (!found) {
            p.regular = false;
            p.nonregular_witness = ai;
            break;
        }
    }

    p.right_nonsingular = true;
    std::vector<char> in_e(static_cast<std::size_t>(n));
    for (std::uint64_t x = 0; x < n; ++x) {
        if (x == zero) continue;
        auto xi = static_cast<ElemIndex>(x);
        std::fill(in_e.begin(), in_e.end(), 0);
        for (std::uint64_t rr = 0; rr < n; ++rr)
            if (r.mul(xi, static_cast<ElemIndex>(rr)) == zero) in_e[rr] = 1;
        if (detail::right_ideal_essential(r, in_e)) {
            p.right_nonsingular = false;
            p.singular_witness = xi;
            break;
        }
    }
    return p;
}

/// N(R) for a finite ring: equals J(R) since J is nilpotent and R/J is
/// semiprime; both facts are re-verified as runtime assertions.
inline Submodule prime_radical(const Ring& r, const RunConfig& cfg = {}) {
    Submodule j = jacobson_radical(r, cfg);
    // nilpotency: iterated set products must reach {0}
    std::vector<ElemIndex> cur = j.members;
    bool nil = cur.size() == 1 && cur[0] == r.zero();
    for (std::uint64_t t = 1; t <= j.size() && !nil; ++t) {
        std::vector<char> seen(static_cast<std::size_t>(r.size()), 0);
        std::vector<ElemIndex> prod;
        for (ElemIndex a : cur)
            for (ElemIndex b : j.members) {
                ElemIndex p = r.mul(a, b);
                if (!seen[p]) {
                    seen[p] = 1;
                    prod.push_back(p);
                }
            }
        cur = ideal_closure(r, prod, SubKind::AdditiveSubgroup, cfg).members;
        nil = cur.size() == 1 && cur[0] == r.zero();
    }
    if (!nil) throw PostcheckFailed("prime_radical: J(R) is not nilpotent");
    Ring q = quotient_ring(r, j, r.name() + "/N");
    if (!structural_predicates(q, cfg).semiprime)
        throw PostcheckFailed("prime_radical: R/N is not semiprime");
    return j;
}

namespace detail {

/// Socle engine: sum of minimal cyclic modules x*acts. A candidate x*acts is
/// minimal iff x is regenerated from each of its nonzero members.
inline Submodule socle_impl(const Ring& r, const std::vector<ElemIndex>& acts, SubKind kind,
                            const RunConfig& cfg, const std::vector<ElemIndex>* center) {
    if (r.size() > cfg.socle_cap) throw CapExceeded(r.size(), cfg.socle_cap);
    std::map<std::vector<ElemIndex>, bool> minimal_memo;
    std::vector<ElemIndex> soc_seed;
    std::vector<char> seen(static_cast<std::size_t>(r.size()));
    auto cyclic = [&](ElemIndex x) {
        std::fill(seen.begin(), seen.end(), 0);
        std::vector<ElemIndex> m;
        for (ElemIndex a : acts) {
            ElemIndex p = r.mul(x, a);
            if (!seen[p]) {
                seen[p] = 1;
                m.push_back(p);
            }
        }
        std::sort(m.begin(), m.end());
        return m;
    };
    for (std::uint64_t x = 1; x < r.size(); ++x) {
        auto ideal = cyclic(static_cast<ElemIndex>(x));
        auto [it, fresh] = minimal_memo.try_emplace(std::move(ideal), false);
        if (!fresh) {
            if (it->second) { /* already collected */ }
            continue;
        }
        bool minimal = true;
        for (ElemIndex y : it->first) {
            if (y == r.zero()) continue;
            bool regen = false;
            for (ElemIndex a : acts)
                if (r.mul(y, a) == static_cast<ElemIndex>(x)) {
                    regen = true;
                    break;
                }
            if (!regen) {
                minimal = false;
                break;
            }
        }
        it->second = minimal;
        if (minimal) soc_seed.insert(soc_seed.end(), it->first.begin(), it->first.end());
    }
    Submodule sum = ideal_closure(r, soc_seed, SubKind::AdditiveSubgroup, cfg);
    return make_submodule(r, kind, std::move(sum.members), center, true);
}

}  // namespace detail

/// Sum of all minimal right ideals.
inline Submodule socle_right(const Ring& r, const RunConfig& cfg = {}) {
    std::vector<ElemIndex> acts(static_cast<std::size_t>(r.size()));
    for (std::uint64_t i = 0; i < r.size(); ++i) acts[i] = static_cast<ElemIndex>(i);
    return detail::socle_impl(r, acts, SubKind::RightIdeal, cfg, nullptr);
}

}  // namespace ringlab
