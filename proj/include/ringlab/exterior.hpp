#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "ringlab/config.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

inline constexpr int kMaxWedgeGenerators = 16;

/// Basis monomials are indexed by bitmasks over the wedge generators;
/// bit i stands for e_{i+1} and the empty mask is the basis element 1.
using SubsetIndex = std::uint32_t;

inline int degree(SubsetIndex s) { return std::popcount(s); }

enum class WedgeSign { Plus, Minus, Overlap };

/// Sign of e_S * e_T under the ascending-order basis convention: overlap
/// kills the product (e_i^2 = 0), otherwise the parity of the inversion
/// count #{(s,t) in S x T : s > t} decides the sign.
inline WedgeSign wedge_sign(SubsetIndex s, SubsetIndex t) {
    if (s & t) return WedgeSign::Overlap;
    int inv = 0;
    SubsetIndex tt = t;
    while (tt) {
        int b = std::countr_zero(tt);
        inv += std::popcount(s >> (b + 1));
        tt &= tt - 1;
    }
    return (inv & 1) ? WedgeSign::Minus : WedgeSign::Plus;
}

/// Lambda(A^n): additive generators are (subset, base-generator) pairs
/// ordered lexicographically by (subset as integer, base index), so element
/// encodings are stable across runs. Wedge generators commute with base
/// coefficients; (a e_S)(b e_T) = sign(S,T) (ab) e_{S u T}.
inline Ring build_exterior(const Ring& base, int n, const RunConfig& cfg = {}) {
    if (n < 0 || n > kMaxWedgeGenerators)
        throw RingError("wedge generator count must be in [0, 16]");
    if (base.encoding() != Ring::Encoding::StructConsts)
        throw RingError("build_exterior requires a struct-consts base ring");
    if (n == 0) return base;

    const std::uint64_t masks = 1ull << n;
    std::uint64_t sz = 1;
    for (std::uint64_t i = 0; i < masks; ++i) {
        if (sz > UINT64_MAX / base.size()) {
            // saturated; the report still names a size over the cap
            sz = UINT64_MAX;
            break;
        }
        sz *= base.size();
    }
    if (sz > cfg.enumeration_cap) throw CapExceeded(sz, cfg.enumeration_cap);

    const std::size_t kb = static_cast<std::size_t>(base.generator_count());
    const std::size_t k = kb * masks;
    RingSpec spec;
    spec.name = "lambda(" + base.name() + "," + std::to_string(n) + ")";
    spec.moduli.resize(k);
    spec.one.assign(k, 0);
    for (std::uint64_t s = 0; s < masks; ++s)
        for (std::size_t i = 0; i < kb; ++i) spec.moduli[s * kb + i] = base.moduli()[i];
    for (std::size_t i = 0; i < kb; ++i) spec.one[i] = base.one_coords()[i];  // block S = {}

    spec.mul.assign(k, std::vector<std::vector<long long>>(k, std::vector<long long>(k, 0)));
    for (std::uint64_t s = 0; s < masks; ++s)
        for (std::size_t i = 0; i < kb; ++i)
            for (std::uint64_t t = 0; t < masks; ++t)
                for (std::size_t j = 0; j < kb; ++j) {
                    WedgeSign sg = wedge_sign(static_cast<SubsetIndex>(s),
                                              static_cast<SubsetIndex>(t));
                    if (sg == WedgeSign::Overlap) continue;
                    const std::uint32_t* prod =
                        base.struct_const(static_cast<int>(i), static_cast<int>(j));
                    auto& out = spec.mul[s * kb + i][t * kb + j];
                    const std::uint64_t u = s | t;
                    for (std::size_t l = 0; l < kb; ++l) {
                        long long c = prod[l];
                        out[u * kb + l] = sg == WedgeSign::Minus ? -c : c;
                    }
                }
    return Ring::from_spec(spec, cfg.enumeration_cap);
}

/// Dimension of the degree-s graded component over the base, C(n, s).
inline std::uint64_t grade_dimension(int n, int s) {
    if (s < 0 || s > n) return 0;
    std::uint64_t c = 1;
    for (int i = 0; i < s; ++i) c = c * static_cast<std::uint64_t>(n - i) / (i + 1);
    return c;
}

/// Transient coefficient view of an element of Lambda(A^n): one base-ring
/// coordinate vector per subset index. Classification always runs on the
/// built RingSpec; this view exists for grading and direct wedge products.
struct ExteriorElement {
    const Ring* base = nullptr;
    int n = 0;
    std::vector<std::vector<std::uint32_t>> coeffs;  // [mask] -> base coords, size 2^n

    static ExteriorElement zero(const Ring& base, int n) {
        ExteriorElement x;
        x.base = &base;
        x.n = n;
        x.coeffs.assign(1ull << n,
                        std::vector<std::uint32_t>(static_cast<std::size_t>(base.generator_count()), 0));
        return x;
    }

    bool is_zero() const {
        for (const auto& c : coeffs)
            for (auto v : c)
                if (v) return false;
        return true;
    }

    friend bool operator==(const ExteriorElement& a, const ExteriorElement& b) {
        return a.base == b.base && a.n == b.n && a.coeffs == b.coeffs;
    }

    /// Element index in the ring produced by build_exterior(base, n).
    ElemIndex to_ring_index(const Ring& built) const {
        std::vector<std::uint32_t> flat;
        flat.reserve(static_cast<std::size_t>(built.generator_count()));
        for (const auto& c : coeffs) flat.insert(flat.end(), c.begin(), c.end());
        return built.encode(flat.data());
    }

    static ExteriorElement from_ring_index(const Ring& base, int n, const Ring& built,
                                           ElemIndex e) {
        ExteriorElement x = zero(base, n);
        std::vector<std::uint32_t> flat(static_cast<std::size_t>(built.generator_count()));
        built.decode(e, flat.data());
        const std::size_t kb = static_cast<std::size_t>(base.generator_count());
        for (std::size_t m = 0; m < x.coeffs.size(); ++m)
            for (std::size_t i = 0; i < kb; ++i) x.coeffs[m][i] = flat[m * kb + i];
        return x;
    }
};

/// Direct bilinear wedge product over the coefficient maps; overlap pairs
/// contribute zero. Independent of the built ring's multiplication path.
inline ExteriorElement exterior_mul(const ExteriorElement& a, const ExteriorElement& b) {
    if (a.base != b.base || a.n != b.n) throw RingMismatch();
    const Ring& base = *a.base;
    const std::size_t kb = static_cast<std::size_t>(base.generator_count());
    ExteriorElement out = ExteriorElement::zero(base, a.n);
    std::vector<std::uint32_t> prod(kb), tmp(kb);
    for (std::size_t s = 0; s < a.coeffs.size(); ++s) {
        bool snz = false;
        for (auto v : a.coeffs[s]) snz = snz || v;
        if (!snz) continue;
        for (std::size_t t = 0; t < b.coeffs.size(); ++t) {
            WedgeSign sg =
                wedge_sign(static_cast<SubsetIndex>(s), static_cast<SubsetIndex>(t));
            if (sg == WedgeSign::Overlap) continue;
            base.mul_coords(a.coeffs[s].data(), b.coeffs[t].data(), prod.data());
            if (sg == WedgeSign::Minus) {
                base.neg_coords(prod.data(), tmp.data());
                prod.swap(tmp);
            }
            base.add_coords(out.coeffs[s | t].data(), prod.data(), out.coeffs[s | t].data());
        }
    }
    return out;
}

/// Keeps exactly the coefficients at subset indices of degree s.
inline ExteriorElement grade_project(const ExteriorElement& x, int s) {
    ExteriorElement out = ExteriorElement::zero(*x.base, x.n);
    if (s < 0 || s > x.n) return out;
    for (std::size_t m = 0; m < x.coeffs.size(); ++m)
        if (degree(static_cast<SubsetIndex>(m)) == s) out.coeffs[m] = x.coeffs[m];
    return out;
}

}  // namespace ringlab
