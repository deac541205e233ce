#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ringlab/errors.hpp"

namespace ringlab {

using ElemIndex = std::uint32_t;

inline constexpr int kMaxGenerators = 32;

/// A finite ring presented by its additive moduli, the products of additive
/// generators in coordinates, and the coordinates of 1. Residues may be
/// unreduced; construction reduces them.
struct RingSpec {
    std::string name;
    std::vector<std::uint32_t> moduli;                     // m_1..m_k, each >= 2
    std::vector<long long> one;                            // k coordinates
    std::vector<std::vector<std::vector<long long>>> mul;  // mul[i][j] = g_i*g_j, k-vector
};

/// Validated finite ring. Two encodings behind one contract:
///   - struct-consts: elements are mixed-radix coordinate vectors, identified
///     with their rank (coordinate 0 most significant, so ascending index is
///     ascending lexicographic order of coordinates);
///   - table: explicit addition/multiplication lookup tables, produced by
///     quotient and subring constructions.
/// Validated rings are immutable; all scans over them are read-only.
class Ring {
public:
    enum class Encoding { StructConsts, Table };

    static std::vector<SpecIssue> check_spec(const RingSpec& spec,
                                             std::uint64_t cap = 1'000'000) {
        Ring r;
        return r.init_from_spec(spec, cap);
    }

    static Ring from_spec(const RingSpec& spec, std::uint64_t cap = 1'000'000) {
        Ring r;
        auto issues = r.init_from_spec(spec, cap);
        if (!issues.empty()) throw ValidationError(std::move(issues));
        return r;
    }

    static Ring from_tables(std::string name, std::uint64_t size,
                            std::vector<ElemIndex> add_tab, std::vector<ElemIndex> mul_tab,
                            ElemIndex zero, ElemIndex one) {
        Ring r;
        r.enc_ = Encoding::Table;
        r.name_ = std::move(name);
        r.size_ = size;
        r.add_tab_ = std::move(add_tab);
        r.mul_tab_ = std::move(mul_tab);
        r.zero_ = zero;
        r.one_ = one;
        r.neg_tab_.assign(size, 0);
        for (std::uint64_t i = 0; i < size; ++i) {
            bool found = false;
            for (std::uint64_t j = 0; j < size; ++j) {
                if (r.add_tab_[i * size + j] == zero) {
                    r.neg_tab_[i] = static_cast<ElemIndex>(j);
                    found = true;
                    break;
                }
            }
            if (!found) throw RingError("table ring: element without additive inverse");
        }
        return r;
    }

    Encoding encoding() const { return enc_; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    std::uint64_t size() const { return size_; }
    ElemIndex zero() const { return zero_; }
    ElemIndex one() const { return one_; }

    // --- struct-consts accessors ---
    int generator_count() const { return static_cast<int>(moduli_.size()); }
    const std::vector<std::uint32_t>& moduli() const { return moduli_; }
    const std::vector<std::uint32_t>& one_coords() const { return one_coords_; }
    /// g_i * g_j in coordinates, dense.
    const std::uint32_t* struct_const(int i, int j) const {
        return sc_dense_.data() + (static_cast<std::size_t>(i) * moduli_.size() + j) * moduli_.size();
    }
    ElemIndex generator(int i) const { return static_cast<ElemIndex>(strides_[static_cast<std::size_t>(i)]); }

    void decode(ElemIndex e, std::uint32_t* out) const {
        std::uint64_t t = e;
        const std::size_t k = moduli_.size();
        for (std::size_t i = 0; i < k; ++i) {
            out[i] = static_cast<std::uint32_t>(t / strides_[i]);
            t %= strides_[i];
        }
    }

    ElemIndex encode(const std::uint32_t* coords) const {
        std::uint64_t e = 0;
        const std::size_t k = moduli_.size();
        for (std::size_t i = 0; i < k; ++i) e += static_cast<std::uint64_t>(coords[i]) * strides_[i];
        return static_cast<ElemIndex>(e);
    }

    /// Cached decoded coordinates, or nullptr when the ring is too large for
    /// the cache (callers then decode into their own scratch).
    const std::uint32_t* cached_coords(ElemIndex e) const {
        if (coords_cache_.empty()) return nullptr;
        return coords_cache_.data() + static_cast<std::size_t>(e) * moduli_.size();
    }

    void add_coords(const std::uint32_t* x, const std::uint32_t* y, std::uint32_t* out) const {
        const std::size_t k = moduli_.size();
        for (std::size_t i = 0; i < k; ++i) {
            std::uint32_t s = x[i] + y[i];
            out[i] = s >= moduli_[i] ? s - moduli_[i] : s;
        }
    }

    void neg_coords(const std::uint32_t* x, std::uint32_t* out) const {
        const std::size_t k = moduli_.size();
        for (std::size_t i = 0; i < k; ++i) out[i] = x[i] ? moduli_[i] - x[i] : 0;
    }

    /// Bilinear extension of the structure constants. Accumulates reduced
    /// terms, so no overflow for any cap-respecting moduli.
    void mul_coords(const std::uint32_t* x, const std::uint32_t* y, std::uint32_t* out) const {
        const std::size_t k = moduli_.size();
        std::uint64_t acc[kMaxGenerators] = {0};
        for (std::size_t i = 0; i < k; ++i) {
            if (!x[i]) continue;
            const std::uint64_t xi = x[i];
            for (std::size_t j = 0; j < k; ++j) {
                if (!y[j]) continue;
                const std::uint64_t c = xi * y[j];
                for (const Term& t : sc_sparse_[i * k + j])
                    acc[t.gen] += (c % moduli_[t.gen]) * t.coeff % moduli_[t.gen];
            }
        }
        for (std::size_t l = 0; l < k; ++l) out[l] = static_cast<std::uint32_t>(acc[l] % moduli_[l]);
    }

    // --- encoding-independent element operations ---

    ElemIndex add(ElemIndex a, ElemIndex b) const {
        if (enc_ == Encoding::Table) return add_tab_[static_cast<std::size_t>(a) * size_ + b];
        std::array<std::uint32_t, kMaxGenerators> xa, xb, xo;
        decode(a, xa.data());
        decode(b, xb.data());
        add_coords(xa.data(), xb.data(), xo.data());
        return encode(xo.data());
    }

    ElemIndex neg(ElemIndex a) const {
        if (enc_ == Encoding::Table) return neg_tab_[a];
        std::array<std::uint32_t, kMaxGenerators> xa, xo;
        decode(a, xa.data());
        neg_coords(xa.data(), xo.data());
        return encode(xo.data());
    }

    ElemIndex sub(ElemIndex a, ElemIndex b) const { return add(a, neg(b)); }

    ElemIndex mul(ElemIndex a, ElemIndex b) const {
        if (enc_ == Encoding::Table) return mul_tab_[static_cast<std::size_t>(a) * size_ + b];
        std::array<std::uint32_t, kMaxGenerators> xa, xb, xo;
        const std::uint32_t* pa = cached_coords(a);
        const std::uint32_t* pb = cached_coords(b);
        if (!pa) {
            decode(a, xa.data());
            pa = xa.data();
        }
        if (!pb) {
            decode(b, xb.data());
            pb = xb.data();
        }
        mul_coords(pa, pb, xo.data());
        return encode(xo.data());
    }

    ElemIndex int_scale(long long n, ElemIndex a) const {
        if (enc_ == Encoding::StructConsts) {
            std::array<std::uint32_t, kMaxGenerators> xa, xo;
            decode(a, xa.data());
            const std::size_t k = moduli_.size();
            for (std::size_t i = 0; i < k; ++i) {
                long long r = n % static_cast<long long>(moduli_[i]);
                if (r < 0) r += moduli_[i];
                xo[i] = static_cast<std::uint32_t>(
                    static_cast<std::uint64_t>(r) * xa[i] % moduli_[i]);
            }
            return encode(xo.data());
        }
        std::uint64_t s = characteristic();
        long long r = n % static_cast<long long>(s);
        if (r < 0) r += static_cast<long long>(s);
        ElemIndex acc = zero_;
        for (long long t = 0; t < r; ++t) acc = add(acc, a);
        return acc;
    }

    /// Least n >= 1 with n*x = 0.
    std::uint64_t additive_order(ElemIndex a) const {
        ElemIndex acc = a;
        std::uint64_t n = 1;
        while (acc != zero_) {
            acc = add(acc, a);
            ++n;
        }
        return n;
    }

    /// Additive order of 1; every n*x with n a multiple of it vanishes.
    std::uint64_t characteristic() const {
        if (!char_) char_ = additive_order(one_);
        return char_;
    }

private:
    struct Term {
        std::uint16_t gen;
        std::uint32_t coeff;
    };

    Encoding enc_ = Encoding::StructConsts;
    std::string name_;
    std::uint64_t size_ = 0;
    ElemIndex zero_ = 0;
    ElemIndex one_ = 0;
    mutable std::uint64_t char_ = 0;

    // struct-consts data
    std::vector<std::uint32_t> moduli_;
    std::vector<std::uint64_t> strides_;
    std::vector<std::uint32_t> one_coords_;
    std::vector<std::uint32_t> sc_dense_;       // k*k*k
    std::vector<std::vector<Term>> sc_sparse_;  // k*k
    std::vector<std::uint32_t> coords_cache_;   // size*k when small enough

    // table data
    std::vector<ElemIndex> add_tab_, mul_tab_, neg_tab_;

    std::vector<SpecIssue> init_from_spec(const RingSpec& spec, std::uint64_t cap) {
        std::vector<SpecIssue> issues;
        const std::size_t k = spec.moduli.size();
        auto shape = [&](std::string why) {
            issues.push_back({SpecIssueKind::ShapeMismatch, -1, -1, -1, std::move(why)});
            return issues;
        };
        if (k == 0) return shape("moduli must be nonempty");
        if (k > kMaxGenerators)
            return shape("at most " + std::to_string(kMaxGenerators) + " additive generators");
        for (std::size_t i = 0; i < k; ++i)
            if (spec.moduli[i] < 2) return shape("modulus " + std::to_string(i) + " < 2");
        if (spec.one.size() != k) return shape("one must have " + std::to_string(k) + " coordinates");
        if (spec.mul.size() != k) return shape("mul must be a k x k table");
        for (const auto& row : spec.mul) {
            if (row.size() != k) return shape("mul must be a k x k table");
            for (const auto& v : row)
                if (v.size() != k) return shape("each mul entry must be a k-vector");
        }

        std::uint64_t sz = 1;
        for (auto m : spec.moduli) {
            sz *= m;
            if (sz > cap) throw CapExceeded(sz, cap);
        }

        name_ = spec.name;
        size_ = sz;
        moduli_ = spec.moduli;
        strides_.assign(k, 1);
        for (std::size_t i = k; i-- > 1;) strides_[i - 1] = strides_[i] * moduli_[i];

        auto reduce = [](long long v, std::uint32_t m) {
            long long r = v % static_cast<long long>(m);
            if (r < 0) r += m;
            return static_cast<std::uint32_t>(r);
        };
        one_coords_.resize(k);
        for (std::size_t i = 0; i < k; ++i) one_coords_[i] = reduce(spec.one[i], moduli_[i]);
        sc_dense_.assign(k * k * k, 0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t l = 0; l < k; ++l)
                    sc_dense_[(i * k + j) * k + l] = reduce(spec.mul[i][j][l], moduli_[l]);

        sc_sparse_.assign(k * k, {});
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t l = 0; l < k; ++l)
                    if (auto c = sc_dense_[(i * k + j) * k + l])
                        sc_sparse_[i * k + j].push_back({static_cast<std::uint16_t>(l), c});

        zero_ = 0;
        one_ = encode(one_coords_.data());

        // compatibility: multiplication must be well-defined on residues
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t l = 0; l < k; ++l) {
                    std::uint64_t c = sc_dense_[(i * k + j) * k + l];
                    if (c * moduli_[i] % moduli_[l] != 0 || c * moduli_[j] % moduli_[l] != 0)
                        issues.push_back({SpecIssueKind::IncompatibleModuli,
                                          static_cast<int>(i), static_cast<int>(j),
                                          static_cast<int>(l), ""});
                }

        // unit law on generators; bilinearity extends it
        std::array<std::uint32_t, kMaxGenerators> gi{}, out{};
        for (std::size_t i = 0; i < k; ++i) {
            std::fill(gi.begin(), gi.begin() + static_cast<long>(k), 0u);
            gi[i] = 1;
            bool ok = true;
            mul_coords(one_coords_.data(), gi.data(), out.data());
            for (std::size_t l = 0; l < k; ++l) ok = ok && out[l] == gi[l];
            mul_coords(gi.data(), one_coords_.data(), out.data());
            for (std::size_t l = 0; l < k; ++l) ok = ok && out[l] == gi[l];
            if (!ok)
                issues.push_back({SpecIssueKind::BadUnit, static_cast<int>(i), -1, -1, ""});
        }

        // associativity on generator triples
        std::array<std::uint32_t, kMaxGenerators> gj{}, gl{}, ab{}, bc{}, lhs{}, rhs{};
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t l = 0; l < k; ++l) {
                    std::fill(gi.begin(), gi.begin() + static_cast<long>(k), 0u);
                    std::fill(gj.begin(), gj.begin() + static_cast<long>(k), 0u);
                    std::fill(gl.begin(), gl.begin() + static_cast<long>(k), 0u);
                    gi[i] = gj[j] = gl[l] = 1;
                    mul_coords(gi.data(), gj.data(), ab.data());
                    mul_coords(ab.data(), gl.data(), lhs.data());
                    mul_coords(gj.data(), gl.data(), bc.data());
                    mul_coords(gi.data(), bc.data(), rhs.data());
                    if (!std::equal(lhs.begin(), lhs.begin() + static_cast<long>(k), rhs.begin()))
                        issues.push_back({SpecIssueKind::NonAssociative, static_cast<int>(i),
                                          static_cast<int>(j), static_cast<int>(l), ""});
                }

        if (issues.empty() && size_ <= 65536) {
            coords_cache_.resize(static_cast<std::size_t>(size_) * k);
            for (std::uint64_t e = 0; e < size_; ++e)
                decode(static_cast<ElemIndex>(e), coords_cache_.data() + e * k);
        }
        return issues;
    }
};

/// Element handle for the public surface; pairs an index with its owning
/// ring so cross-ring operations fail loudly.
struct Element {
    const Ring* ring = nullptr;
    ElemIndex idx = 0;

    friend Element operator+(Element a, Element b) {
        if (a.ring != b.ring) throw RingMismatch();
        return {a.ring, a.ring->add(a.idx, b.idx)};
    }
    friend Element operator-(Element a, Element b) {
        if (a.ring != b.ring) throw RingMismatch();
        return {a.ring, a.ring->sub(a.idx, b.idx)};
    }
    friend Element operator*(Element a, Element b) {
        if (a.ring != b.ring) throw RingMismatch();
        return {a.ring, a.ring->mul(a.idx, b.idx)};
    }
    Element operator-() const { return {ring, ring->neg(idx)}; }
    friend bool operator==(Element a, Element b) {
        if (a.ring != b.ring) throw RingMismatch();
        return a.idx == b.idx;
    }
};

inline Element int_scale(long long n, Element x) { return {x.ring, x.ring->int_scale(n, x.idx)}; }
inline std::uint64_t additive_order(Element x) { return x.ring->additive_order(x.idx); }

/// xy - yx.
inline ElemIndex commutator(const Ring& r, ElemIndex x, ElemIndex y) {
    return r.sub(r.mul(x, y), r.mul(y, x));
}

inline Element commutator(Element x, Element y) {
    if (x.ring != y.ring) throw RingMismatch();
    return {x.ring, commutator(*x.ring, x.idx, y.idx)};
}

}  // namespace ringlab
