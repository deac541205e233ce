#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ringlab/config.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/linalg.hpp"
#include "ringlab/parallel.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/structure.hpp"
#include "ringlab/submodule.hpp"

namespace ringlab {

/// The center as an explicit sorted element set; every downstream use is
/// membership testing and iteration.
struct CenterData {
    const Ring* ring = nullptr;
    std::vector<ElemIndex> members;  // sorted ascending

    std::uint64_t size() const { return members.size(); }
    bool contains(ElemIndex e) const {
        return std::binary_search(members.begin(), members.end(), e);
    }
};

/// Exhaustive center scan. For struct-consts rings commutation is tested
/// against the additive generators only; bilinearity extends it.
inline CenterData center_scan(const Ring& r, const RunConfig& cfg = {}) {
    if (r.size() > cfg.enumeration_cap) throw CapExceeded(r.size(), cfg.enumeration_cap);
    const int threads = cfg.resolved_threads();
    std::vector<ElemIndex> members;
    if (r.encoding() == Ring::Encoding::StructConsts) {
        const int k = r.generator_count();
        members = collect_indices(0, r.size(), threads, [&](std::uint64_t x) {
            auto xi = static_cast<ElemIndex>(x);
            for (int i = 0; i < k; ++i) {
                ElemIndex g = r.generator(i);
                if (r.mul(xi, g) != r.mul(g, xi)) return false;
            }
            return true;
        });
    } else {
        members = collect_indices(0, r.size(), threads, [&](std::uint64_t x) {
            auto xi = static_cast<ElemIndex>(x);
            for (std::uint64_t y = 0; y < r.size(); ++y) {
                auto yi = static_cast<ElemIndex>(y);
                if (r.mul(xi, yi) != r.mul(yi, xi)) return false;
            }
            return true;
        });
    }
    return {&r, std::move(members)};
}

inline bool fp_linear_eligible(const Ring& r) {
    if (r.encoding() != Ring::Encoding::StructConsts) return false;
    const auto& m = r.moduli();
    for (auto v : m)
        if (v != m[0]) return false;
    return is_prime(m[0]);
}

/// Center via a nullspace over F_p: x is central iff [x, g_i] = 0 for every
/// generator, a linear condition on the coordinates of x.
inline CenterData center_linear(const Ring& r, const RunConfig& cfg = {}) {
    if (!fp_linear_eligible(r)) throw RingError("center_linear requires equal prime moduli");
    if (r.size() > cfg.enumeration_cap) throw CapExceeded(r.size(), cfg.enumeration_cap);
    const std::size_t k = static_cast<std::size_t>(r.generator_count());
    const std::uint32_t p = r.moduli()[0];
    // rows: for each generator i and output coordinate l, sum_j x_j * (sc[j][i][l] - sc[i][j][l]) = 0
    std::vector<std::uint32_t> mat(k * k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t l = 0; l < k; ++l)
            for (std::size_t j = 0; j < k; ++j) {
                std::uint32_t v =
                    (r.struct_const(static_cast<int>(j), static_cast<int>(i))[l] + p -
                     r.struct_const(static_cast<int>(i), static_cast<int>(j))[l]) %
                    p;
                mat[(i * k + l) * k + j] = v;
            }
    auto basis = fp::nullspace(std::move(mat), k * k, k, p);
    // enumerate the span
    std::vector<std::vector<std::uint32_t>> span{std::vector<std::uint32_t>(k, 0)};
    for (const auto& b : basis) {
        std::vector<std::vector<std::uint32_t>> next;
        next.reserve(span.size() * p);
        for (const auto& s : span)
            for (std::uint32_t t = 0; t < p; ++t) {
                std::vector<std::uint32_t> v(k);
                for (std::size_t i = 0; i < k; ++i)
                    v[i] = (s[i] + static_cast<std::uint64_t>(t) * b[i]) % p;
                next.push_back(std::move(v));
            }
        span = std::move(next);
    }
    std::vector<ElemIndex> members;
    members.reserve(span.size());
    for (const auto& v : span) members.push_back(r.encode(v.data()));
    std::sort(members.begin(), members.end());
    return {&r, std::move(members)};
}

inline CenterData center(const Ring& r, const RunConfig& cfg = {}) {
    if (fp_linear_eligible(r)) return center_linear(r, cfg);
    return center_scan(r, cfg);
}

/// {x*c : c in C}; contains x since 1 is central.
inline Submodule cyclic_c_submodule(const Ring& r, const CenterData& c, ElemIndex x) {
    std::vector<ElemIndex> members;
    members.reserve(c.members.size());
    for (ElemIndex cc : c.members) members.push_back(r.mul(x, cc));
    return make_submodule(r, SubKind::CSubmodule, std::move(members), &c.members, false);
}

struct EssentialityResult {
    bool essential = false;
    ElemIndex witness = 0;  // least x with x*C disjoint from M \ {0}; valid when !essential
};

/// M is essential in R_C iff for every x != 0 some central c has x*c in
/// M \ {0}. Every nonzero C-submodule contains a nonzero cyclic one and
/// x lies in x*C, so the cyclic test is complete.
inline EssentialityResult is_essential_c_submodule(const Ring& r, const CenterData& c,
                                                   const Submodule& m,
                                                   const RunConfig& cfg = {}) {
    if (m.kind != SubKind::CSubmodule && m.kind != SubKind::TwoSidedIdeal)
        throw PreconditionViolated("essentiality test requires a c-submodule or two-sided ideal");
    if (m.ambient != &r || c.ring != &r) throw RingMismatch();
    if (r.size() > cfg.enumeration_cap) throw CapExceeded(r.size(), cfg.enumeration_cap);
    const int threads = cfg.resolved_threads();
    std::vector<char> in_m(static_cast<std::size_t>(r.size()), 0);
    for (ElemIndex e : m.members) in_m[e] = 1;
    const ElemIndex zero = r.zero();

    std::uint64_t w;
    if (r.encoding() == Ring::Encoding::StructConsts) {
        const std::size_t k = static_cast<std::size_t>(r.generator_count());
        std::vector<std::uint32_t> cc;  // decoded nonzero central elements, scan order
        cc.reserve(c.members.size() * k);
        for (ElemIndex e : c.members) {
            if (e == zero) continue;
            std::size_t at = cc.size();
            cc.resize(at + k);
            r.decode(e, cc.data() + at);
        }
        const std::size_t ncc = cc.size() / k;
        w = least_failing_index(1, r.size(), threads, [&](std::uint64_t x) {
            auto xi = static_cast<ElemIndex>(x);
            if (in_m[xi]) return true;  // x*1 = x
            std::array<std::uint32_t, kMaxGenerators> xc, prod;
            r.decode(xi, xc.data());
            for (std::size_t ci = 0; ci < ncc; ++ci) {
                r.mul_coords(xc.data(), cc.data() + ci * k, prod.data());
                ElemIndex pe = r.encode(prod.data());
                if (pe != zero && in_m[pe]) return true;
            }
            return false;
        });
    } else {
        w = least_failing_index(1, r.size(), threads, [&](std::uint64_t x) {
            auto xi = static_cast<ElemIndex>(x);
            if (in_m[xi]) return true;
            for (ElemIndex e : c.members) {
                if (e == zero) continue;
                ElemIndex pe = r.mul(xi, e);
                if (pe != zero && in_m[pe]) return true;
            }
            return false;
        });
    }
    if (w == r.size()) return {true, 0};
    return {false, static_cast<ElemIndex>(w)};
}

/// Definitional centrally-essential test: C is essential in R_C.
inline EssentialityResult is_centrally_essential(const Ring& r, const CenterData& c,
                                                 const RunConfig& cfg = {}) {
    Submodule m{&r, SubKind::CSubmodule, c.members};
    return is_essential_c_submodule(r, c, m, cfg);
}

inline EssentialityResult is_centrally_essential(const Ring& r, const RunConfig& cfg = {}) {
    return is_centrally_essential(r, center(r, cfg), cfg);
}

/// Sum of minimal C-submodules of R; same engine as socle_right with the
/// central action.
inline Submodule socle_c_module(const Ring& r, const CenterData& c, const RunConfig& cfg = {}) {
    return detail::socle_impl(r, c.members, SubKind::CSubmodule, cfg, &c.members);
}

}  // namespace ringlab
