#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "ringlab/config.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/exterior.hpp"
#include "ringlab/linalg.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

struct NotPrime : RingError {
    explicit NotPrime(std::uint64_t p) : RingError(std::to_string(p) + " is not prime") {}
};

struct NotIrreducible : RingError {
    NotIrreducible() : RingError("polynomial is reducible") {}
};

struct SpecParseError : RingError {
    using RingError::RingError;
};

/// Z_m with generator 1.
inline Ring make_zmod(std::uint64_t m, const RunConfig& cfg = {}) {
    if (m < 2) throw RingError("zmod requires m >= 2");
    RingSpec s;
    s.name = "z" + std::to_string(m);
    s.moduli = {static_cast<std::uint32_t>(m)};
    s.one = {1};
    s.mul = {{{1}}};
    return Ring::from_spec(s, cfg.enumeration_cap);
}

/// GF(p^k) = F_p[x]/(f), f monic of degree k given by its low coefficients
/// (so f = x^k + irr[k-1] x^{k-1} + ... + irr[0]). Irreducibility is decided
/// by a root scan, complete for k <= 3.
inline Ring make_gf(std::uint32_t p, int k, std::vector<std::uint32_t> irr,
                    const RunConfig& cfg = {}) {
    if (!is_prime(p)) throw NotPrime(p);
    if (k < 1 || k > 3) throw RingError("make_gf supports degrees 1..3");
    if (k == 1 && irr.empty()) irr = {0};  // degree 1: any monic linear polynomial gives F_p
    if (irr.size() != static_cast<std::size_t>(k)) throw RingError("modulus polynomial degree mismatch");
    for (auto& c : irr) c %= p;
    if (k >= 2) {
        // degree 2 or 3: reducible iff it has a root in F_p
        for (std::uint32_t r = 0; r < p; ++r) {
            std::uint64_t v = 1;  // leading coefficient
            for (int d = k - 1; d >= 0; --d) v = (v * r + irr[static_cast<std::size_t>(d)]) % p;
            if (v == 0) throw NotIrreducible();
        }
    }
    // rep[d] = x^d mod f for d < 2k-1
    std::vector<std::vector<std::uint32_t>> rep(static_cast<std::size_t>(2 * k - 1),
                                                std::vector<std::uint32_t>(static_cast<std::size_t>(k), 0));
    for (int d = 0; d < k; ++d) rep[static_cast<std::size_t>(d)][static_cast<std::size_t>(d)] = 1;
    for (int d = k; d < 2 * k - 1; ++d) {
        // x^d = x * x^{d-1}, then reduce the x^k term via x^k = -irr
        const auto& prev = rep[static_cast<std::size_t>(d - 1)];
        std::vector<std::uint32_t> cur(static_cast<std::size_t>(k), 0);
        std::uint32_t carry = prev[static_cast<std::size_t>(k - 1)];
        for (int i = k - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = prev[static_cast<std::size_t>(i - 1)];
        cur[0] = 0;
        if (carry)
            for (int i = 0; i < k; ++i)
                cur[static_cast<std::size_t>(i)] =
                    (cur[static_cast<std::size_t>(i)] +
                     static_cast<std::uint64_t>(carry) * (p - irr[static_cast<std::size_t>(i)])) %
                    p;
        rep[static_cast<std::size_t>(d)] = std::move(cur);
    }
    RingSpec s;
    s.name = k == 1 ? "f" + std::to_string(p) : "gf" + std::to_string([&] {
                 std::uint64_t q = 1;
                 for (int i = 0; i < k; ++i) q *= p;
                 return q;
             }());
    s.moduli.assign(static_cast<std::size_t>(k), p);
    s.one.assign(static_cast<std::size_t>(k), 0);
    s.one[0] = 1;
    s.mul.assign(static_cast<std::size_t>(k),
                 std::vector<std::vector<long long>>(static_cast<std::size_t>(k),
                                                     std::vector<long long>(static_cast<std::size_t>(k), 0)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int l = 0; l < k; ++l)
                s.mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(l)] =
                    rep[static_cast<std::size_t>(i + j)][static_cast<std::size_t>(l)];
    return Ring::from_spec(s, cfg.enumeration_cap);
}

namespace detail {

/// Matrix-unit generator layout shared by full and triangular matrix rings:
/// positions is the list of (row, col) units, in row-major order.
inline Ring make_matrix_like(const Ring& base, int d,
                             const std::vector<std::pair<int, int>>& positions,
                             std::string name, const RunConfig& cfg) {
    if (base.encoding() != Ring::Encoding::StructConsts)
        throw RingError("matrix constructions require a struct-consts base ring");
    const std::size_t kb = static_cast<std::size_t>(base.generator_count());
    const std::size_t np = positions.size();
    const std::size_t k = np * kb;
    std::map<std::pair<int, int>, std::size_t> pos_of;
    for (std::size_t q = 0; q < np; ++q) pos_of[positions[q]] = q;

    RingSpec s;
    s.name = std::move(name);
    s.moduli.resize(k);
    s.one.assign(k, 0);
    for (std::size_t q = 0; q < np; ++q)
        for (std::size_t i = 0; i < kb; ++i) s.moduli[q * kb + i] = base.moduli()[i];
    for (int u = 0; u < d; ++u) {
        auto it = pos_of.find({u, u});
        if (it == pos_of.end()) throw RingError("matrix layout must contain the diagonal");
        for (std::size_t i = 0; i < kb; ++i) s.one[it->second * kb + i] = base.one_coords()[i];
    }
    s.mul.assign(k, std::vector<std::vector<long long>>(k, std::vector<long long>(k, 0)));
    for (std::size_t qa = 0; qa < np; ++qa)
        for (std::size_t qb = 0; qb < np; ++qb) {
            auto [u, v] = positions[qa];
            auto [w, z] = positions[qb];
            if (v != w) continue;  // E_uv * E_wz = 0 unless v = w
            auto it = pos_of.find({u, z});
            if (it == pos_of.end()) continue;  // cannot happen for the supported layouts
            const std::size_t qo = it->second;
            for (std::size_t i = 0; i < kb; ++i)
                for (std::size_t j = 0; j < kb; ++j) {
                    const std::uint32_t* prod =
                        base.struct_const(static_cast<int>(i), static_cast<int>(j));
                    for (std::size_t l = 0; l < kb; ++l)
                        s.mul[qa * kb + i][qb * kb + j][qo * kb + l] = prod[l];
                }
        }
    return Ring::from_spec(s, cfg.enumeration_cap);
}

}  // namespace detail

/// M_d(base).
inline Ring make_matrix_ring(const Ring& base, int d, const RunConfig& cfg = {}) {
    if (d < 1) throw RingError("matrix dimension must be >= 1");
    if (d == 1) return base;
    std::vector<std::pair<int, int>> pos;
    for (int u = 0; u < d; ++u)
        for (int v = 0; v < d; ++v) pos.push_back({u, v});
    return detail::make_matrix_like(base, d, pos, "m" + std::to_string(d) + "(" + base.name() + ")",
                                    cfg);
}

/// T_d(base), upper triangular.
inline Ring make_upper_triangular(const Ring& base, int d, const RunConfig& cfg = {}) {
    if (d < 1) throw RingError("matrix dimension must be >= 1");
    if (d == 1) return base;
    std::vector<std::pair<int, int>> pos;
    for (int u = 0; u < d; ++u)
        for (int v = u; v < d; ++v) pos.push_back({u, v});
    return detail::make_matrix_like(base, d, pos, "t" + std::to_string(d) + "(" + base.name() + ")",
                                    cfg);
}

/// a x b with componentwise operations.
inline Ring make_direct_product(const Ring& a, const Ring& b, const RunConfig& cfg = {}) {
    if (a.encoding() != Ring::Encoding::StructConsts || b.encoding() != Ring::Encoding::StructConsts)
        throw RingError("direct products require struct-consts factors");
    const std::size_t ka = static_cast<std::size_t>(a.generator_count());
    const std::size_t kb = static_cast<std::size_t>(b.generator_count());
    RingSpec s;
    s.name = a.name() + "x" + b.name();
    s.moduli.reserve(ka + kb);
    for (auto m : a.moduli()) s.moduli.push_back(m);
    for (auto m : b.moduli()) s.moduli.push_back(m);
    s.one.reserve(ka + kb);
    for (auto c : a.one_coords()) s.one.push_back(c);
    for (auto c : b.one_coords()) s.one.push_back(c);
    const std::size_t k = ka + kb;
    s.mul.assign(k, std::vector<std::vector<long long>>(k, std::vector<long long>(k, 0)));
    for (std::size_t i = 0; i < ka; ++i)
        for (std::size_t j = 0; j < ka; ++j) {
            const std::uint32_t* prod = a.struct_const(static_cast<int>(i), static_cast<int>(j));
            for (std::size_t l = 0; l < ka; ++l) s.mul[i][j][l] = prod[l];
        }
    for (std::size_t i = 0; i < kb; ++i)
        for (std::size_t j = 0; j < kb; ++j) {
            const std::uint32_t* prod = b.struct_const(static_cast<int>(i), static_cast<int>(j));
            for (std::size_t l = 0; l < kb; ++l) s.mul[ka + i][ka + j][ka + l] = prod[l];
        }
    return Ring::from_spec(s, cfg.enumeration_cap);
}

// --- ring spec JSON (the shared external schema) ---

inline RingSpec spec_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw SpecParseError("ring spec must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "name" && key != "moduli" && key != "one" && key != "mul")
            throw SpecParseError("unknown field \"" + key + "\" in ring spec");
    }
    RingSpec s;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw SpecParseError("field \"name\" must be a string");
        s.name = doc["name"].get<std::string>();
    }
    for (const char* req : {"moduli", "one", "mul"})
        if (!doc.contains(req)) throw SpecParseError(std::string("missing field \"") + req + "\"");
    try {
        s.moduli = doc["moduli"].get<std::vector<std::uint32_t>>();
        s.one = doc["one"].get<std::vector<long long>>();
        s.mul = doc["mul"].get<std::vector<std::vector<std::vector<long long>>>>();
    } catch (const nlohmann::json::exception& e) {
        throw SpecParseError(std::string("malformed ring spec: ") + e.what());
    }
    return s;
}

inline RingSpec parse_spec(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SpecParseError(std::string("invalid JSON: ") + e.what());
    }
    return spec_from_json(doc);
}

inline nlohmann::json spec_to_json(const Ring& r) {
    if (r.encoding() != Ring::Encoding::StructConsts)
        throw RingError("only struct-consts rings serialize to ring spec JSON");
    nlohmann::json doc;
    doc["name"] = r.name();
    doc["moduli"] = r.moduli();
    doc["one"] = r.one_coords();
    const int k = r.generator_count();
    nlohmann::json mul = nlohmann::json::array();
    for (int i = 0; i < k; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < k; ++j) {
            const std::uint32_t* prod = r.struct_const(i, j);
            row.push_back(std::vector<std::uint32_t>(prod, prod + k));
        }
        mul.push_back(std::move(row));
    }
    doc["mul"] = std::move(mul);
    return doc;
}

inline std::string write_spec(const Ring& r) { return spec_to_json(r).dump(2) + "\n"; }

// --- named corpus registry ---

inline const std::map<std::string, std::function<Ring(const RunConfig&)>>& corpus_registry() {
    static const std::map<std::string, std::function<Ring(const RunConfig&)>> reg = [] {
        std::map<std::string, std::function<Ring(const RunConfig&)>> m;
        for (std::uint64_t n : {2, 3, 4, 5, 6, 7, 8, 9})
            m["z" + std::to_string(n)] = [n](const RunConfig& c) { return make_zmod(n, c); };
        m["f2"] = [](const RunConfig& c) { return make_gf(2, 1, {}, c); };
        m["f3"] = [](const RunConfig& c) { return make_gf(3, 1, {}, c); };
        m["f5"] = [](const RunConfig& c) { return make_gf(5, 1, {}, c); };
        m["gf4"] = [](const RunConfig& c) { return make_gf(2, 2, {1, 1}, c); };
        m["gf8"] = [](const RunConfig& c) { return make_gf(2, 3, {1, 1, 0}, c); };
        m["gf9"] = [](const RunConfig& c) { return make_gf(3, 2, {1, 0}, c); };
        m["t2-f2"] = [](const RunConfig& c) { return make_upper_triangular(make_gf(2, 1, {}, c), 2, c); };
        m["m2-f2"] = [](const RunConfig& c) { return make_matrix_ring(make_gf(2, 1, {}, c), 2, c); };
        m["z2xz2"] = [](const RunConfig& c) { return make_direct_product(make_zmod(2, c), make_zmod(2, c), c); };
        m["z2xz3"] = [](const RunConfig& c) { return make_direct_product(make_zmod(2, c), make_zmod(3, c), c); };
        m["z2xz4"] = [](const RunConfig& c) { return make_direct_product(make_zmod(2, c), make_zmod(4, c), c); };
        m["lambda-f3-2"] = [](const RunConfig& c) { return build_exterior(make_gf(3, 1, {}, c), 2, c); };
        m["lambda-f3-3"] = [](const RunConfig& c) { return build_exterior(make_gf(3, 1, {}, c), 3, c); };
        m["lambda-z4-2"] = [](const RunConfig& c) { return build_exterior(make_zmod(4, c), 2, c); };
        m["lambda-f5-3"] = [](const RunConfig& c) { return build_exterior(make_gf(5, 1, {}, c), 3, c); };
        return m;
    }();
    return reg;
}

inline Ring corpus_ring(const std::string& name, const RunConfig& cfg = {}) {
    auto it = corpus_registry().find(name);
    if (it == corpus_registry().end()) throw RingError("unknown corpus ring \"" + name + "\"");
    return it->second(cfg);
}

}  // namespace ringlab
