#pragma once

#include <cstdint>
#include <vector>

namespace ringlab {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace fp {

inline std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
    std::uint64_t acc = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) acc = acc * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) { return pow_mod(a, p - 2, p); }

/// Row-echelon basis over F_p maintained incrementally; rows are kept
/// reduced with unit pivots.
class EchelonBasis {
public:
    EchelonBasis(std::size_t cols, std::uint32_t p) : cols_(cols), p_(p) {}

    std::size_t dim() const { return rows_.size(); }
    const std::vector<std::vector<std::uint32_t>>& rows() const { return rows_; }

    /// Reduces v against the basis; inserts the remainder if nonzero.
    /// Returns true if the basis grew.
    bool insert(std::vector<std::uint32_t> v) {
        reduce(v);
        std::size_t lead = cols_;
        for (std::size_t i = 0; i < cols_; ++i)
            if (v[i]) {
                lead = i;
                break;
            }
        if (lead == cols_) return false;
        std::uint32_t scale = inv_mod(v[lead], p_);
        for (auto& c : v) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * scale % p_);
        // back-substitute into existing rows
        for (auto& row : rows_) {
            if (!row[lead]) continue;
            std::uint64_t f = row[lead];
            for (std::size_t i = 0; i < cols_; ++i)
                row[i] = static_cast<std::uint32_t>((row[i] + (p_ - v[i]) * f) % p_);
        }
        std::size_t pos = 0;
        while (pos < rows_.size() && pivots_[pos] < lead) ++pos;
        rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(v));
        pivots_.insert(pivots_.begin() + static_cast<long>(pos), lead);
        return true;
    }

    bool contains(std::vector<std::uint32_t> v) const {
        reduce(v);
        for (auto c : v)
            if (c) return false;
        return true;
    }

private:
    std::size_t cols_;
    std::uint32_t p_;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<std::size_t> pivots_;

    void reduce(std::vector<std::uint32_t>& v) const {
        for (std::size_t rI = 0; rI < rows_.size(); ++rI) {
            std::uint64_t f = v[pivots_[rI]];
            if (!f) continue;
            const auto& row = rows_[rI];
            for (std::size_t i = 0; i < cols_; ++i)
                v[i] = static_cast<std::uint32_t>((v[i] + (p_ - row[i]) * f) % p_);
        }
    }
};

/// Nullspace basis of the rows x cols matrix a (row-major) over F_p.
inline std::vector<std::vector<std::uint32_t>> nullspace(std::vector<std::uint32_t> a,
                                                         std::size_t rows, std::size_t cols,
                                                         std::uint32_t p) {
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && a[piv * cols + col] == 0) ++piv;
        if (piv == rows) continue;
        for (std::size_t i = 0; i < cols; ++i) std::swap(a[rank * cols + i], a[piv * cols + i]);
        std::uint64_t s = inv_mod(a[rank * cols + col], p);
        for (std::size_t i = 0; i < cols; ++i)
            a[rank * cols + i] = static_cast<std::uint32_t>(a[rank * cols + i] * s % p);
        for (std::size_t rI = 0; rI < rows; ++rI) {
            if (rI == rank) continue;
            std::uint64_t f = a[rI * cols + col];
            if (!f) continue;
            for (std::size_t i = 0; i < cols; ++i)
                a[rI * cols + i] = static_cast<std::uint32_t>(
                    (a[rI * cols + i] + (p - a[rank * cols + i]) * f) % p);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<char> is_pivot(cols, 0);
    for (auto c : pivot_col) is_pivot[c] = 1;
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<std::uint32_t> v(cols, 0);
        v[free_col] = 1;
        for (std::size_t rI = 0; rI < rank; ++rI) {
            std::uint32_t c = a[rI * cols + free_col];
            if (c) v[pivot_col[rI]] = p - c;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace fp
}  // namespace ringlab
