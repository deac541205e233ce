#pragma once

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ringlab/central.hpp"
#include "ringlab/classify.hpp"
#include "ringlab/config.hpp"
#include "ringlab/corpus.hpp"
#include "ringlab/criteria.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/exterior.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

struct ManifestRing {
    std::string name;
    bool slow = false;
    nlohmann::json expect;  // optional known invariants
};

struct GridEntry {
    std::string base;
    int n = 1;
};

/// Checked-in description of the verification corpus: the ring list, the
/// (base, n) grid for the exterior-criterion suites, and the parity sweep.
struct Manifest {
    std::vector<ManifestRing> rings;
    std::vector<GridEntry> exterior_grid;
    std::uint64_t grid_oracle_cap = 100000;
    std::vector<std::uint32_t> sweep_primes;
    std::vector<int> sweep_dims;
    std::uint64_t sweep_max_size = 1'000'000;
    std::uint64_t sweep_slow_threshold = 100000;
};

inline Manifest manifest_from_json(const nlohmann::json& doc) {
    Manifest m;
    if (!doc.is_object() || doc.value("schema", 0) != 1)
        throw SpecParseError("manifest must be a schema-1 JSON object");
    for (const auto& e : doc.at("rings")) {
        ManifestRing r;
        r.name = e.at("name").get<std::string>();
        r.slow = e.value("slow", false);
        if (e.contains("expect")) r.expect = e["expect"];
        m.rings.push_back(std::move(r));
    }
    for (const auto& e : doc.at("exterior_grid"))
        m.exterior_grid.push_back({e.at("base").get<std::string>(), e.at("n").get<int>()});
    const auto& g = doc.at("grid_oracle_cap");
    m.grid_oracle_cap = g.get<std::uint64_t>();
    const auto& s = doc.at("parity_sweep");
    m.sweep_primes = s.at("primes").get<std::vector<std::uint32_t>>();
    m.sweep_dims = s.at("dims").get<std::vector<int>>();
    m.sweep_max_size = s.at("max_size").get<std::uint64_t>();
    m.sweep_slow_threshold = s.at("slow_threshold").get<std::uint64_t>();
    return m;
}

inline Manifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw RingError("cannot open manifest file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(ss.str());
    } catch (const nlohmann::json::exception& e) {
        throw SpecParseError(std::string("invalid manifest JSON: ") + e.what());
    }
    return manifest_from_json(doc);
}

/// Exhaustive ring-law check: associativity, both distributive laws and the
/// unit law over all element triples. Returns the number of triples checked,
/// throws on the first violation.
inline std::uint64_t check_ring_laws_exhaustive(const Ring& r) {
    const std::uint64_t n = r.size();
    for (std::uint64_t x = 0; x < n; ++x) {
        auto xi = static_cast<ElemIndex>(x);
        if (r.mul(r.one(), xi) != xi || r.mul(xi, r.one()) != xi)
            throw TheoremViolation("unit law fails in " + r.name());
    }
    // dense operation tables so the n^3 triple loop is pure lookups
    std::vector<ElemIndex> add(n * n), mul(n * n);
    for (std::uint64_t x = 0; x < n; ++x)
        for (std::uint64_t y = 0; y < n; ++y) {
            add[x * n + y] = r.add(static_cast<ElemIndex>(x), static_cast<ElemIndex>(y));
            mul[x * n + y] = r.mul(static_cast<ElemIndex>(x), static_cast<ElemIndex>(y));
        }
    for (std::uint64_t x = 0; x < n; ++x)
        for (std::uint64_t y = 0; y < n; ++y)
            for (std::uint64_t z = 0; z < n; ++z) {
                if (mul[mul[x * n + y] * n + z] != mul[x * n + mul[y * n + z]])
                    throw TheoremViolation("associativity fails in " + r.name());
                if (mul[x * n + add[y * n + z]] != add[mul[x * n + y] * n + mul[x * n + z]])
                    throw TheoremViolation("left distributivity fails in " + r.name());
                if (mul[add[y * n + z] * n + x] != add[mul[y * n + x] * n + mul[z * n + x]])
                    throw TheoremViolation("right distributivity fails in " + r.name());
            }
    return n * n * n;
}

struct SuiteResult {
    bool pass = true;
    std::string counterexample;  // first failure, empty when pass
    nlohmann::json report;       // deterministic; no timings
};

namespace detail {

inline void suite_fail(SuiteResult& res, const std::string& what) {
    if (res.pass) {
        res.pass = false;
        res.counterexample = what;
    }
}

inline int sign_value(WedgeSign s) { return s == WedgeSign::Minus ? -1 : 1; }

}  // namespace detail

inline SuiteResult run_laws_suite(const Manifest& m, const RunConfig& cfg) {
    SuiteResult res;
    res.report["schema"] = 1;
    res.report["suite"] = "laws";
    nlohmann::json entries = nlohmann::json::array();

    for (const auto& mr : m.rings) {
        if (mr.slow) continue;
        Ring r = corpus_ring(mr.name, cfg);
        if (r.size() > 512) continue;
        nlohmann::json e;
        e["ring"] = mr.name;
        try {
            e["triples"] = check_ring_laws_exhaustive(r);
            e["ok"] = true;
        } catch (const TheoremViolation& tv) {
            e["ok"] = false;
            detail::suite_fail(res, tv.what());
        }
        entries.push_back(std::move(e));
    }

    // sign cocycle and anticommutativity, exhaustive for n <= 5
    bool sign_ok = true;
    for (int n = 0; n <= 5 && sign_ok; ++n) {
        const SubsetIndex lim = static_cast<SubsetIndex>(1u << n);
        for (SubsetIndex s = 0; s < lim && sign_ok; ++s)
            for (SubsetIndex t = 0; t < lim && sign_ok; ++t) {
                if (s & t) continue;
                WedgeSign st = wedge_sign(s, t);
                WedgeSign ts = wedge_sign(t, s);
                int expect = (degree(s) * degree(t)) % 2 ? -1 : 1;
                if (detail::sign_value(st) != expect * detail::sign_value(ts)) sign_ok = false;
                for (SubsetIndex u = 0; u < lim; ++u) {
                    if ((s | t) & u) continue;
                    int lhs = detail::sign_value(wedge_sign(s, t)) *
                              detail::sign_value(wedge_sign(s | t, u));
                    int rhs = detail::sign_value(wedge_sign(t, u)) *
                              detail::sign_value(wedge_sign(s, t | u));
                    if (lhs != rhs) {
                        sign_ok = false;
                        break;
                    }
                }
            }
    }
    res.report["sign_laws_ok"] = sign_ok;
    if (!sign_ok) detail::suite_fail(res, "wedge sign cocycle/anticommutativity violation");

    // grading multiplicativity on random pairs in lambda(f3,3)
    {
        Ring base = corpus_ring("f3", cfg);
        Ring built = build_exterior(base, 3, cfg);
        std::mt19937_64 rng(12345);
        std::uniform_int_distribution<std::uint64_t> dist(0, built.size() - 1);
        bool ok = true;
        const int pairs = 1000;
        for (int it = 0; it < pairs && ok; ++it) {
            auto a = ExteriorElement::from_ring_index(base, 3, built,
                                                      static_cast<ElemIndex>(dist(rng)));
            auto b = ExteriorElement::from_ring_index(base, 3, built,
                                                      static_cast<ElemIndex>(dist(rng)));
            for (int s = 0; s <= 3 && ok; ++s)
                for (int t = 0; t <= 3 && ok; ++t) {
                    auto prod = exterior_mul(grade_project(a, s), grade_project(b, t));
                    // support only in degree s + t
                    for (int d = 0; d <= 3; ++d)
                        if (d != s + t && !grade_project(prod, d).is_zero()) ok = false;
                }
        }
        res.report["grading_pairs"] = pairs;
        res.report["grading_ok"] = ok;
        if (!ok) detail::suite_fail(res, "grading multiplicativity violation in lambda(f3,3)");
    }

    res.report["rings"] = std::move(entries);
    return res;
}

inline SuiteResult run_thm13_suite(const Manifest& m, const RunConfig& cfg) {
    SuiteResult res;
    res.report["schema"] = 1;
    res.report["suite"] = "thm13";
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& g : m.exterior_grid) {
        Ring base = corpus_ring(g.base, cfg);
        CenterData c = center(base, cfg);
        bool fast = thm13_check(base, c, g.n, cfg);
        nlohmann::json e;
        e["ring"] = g.base;
        e["n"] = g.n;
        e["fast"] = fast;
        std::uint64_t sz = 1;
        bool fits = true;
        for (std::uint64_t i = 0; i < (1ull << g.n) && fits; ++i) {
            if (sz > m.grid_oracle_cap / base.size()) fits = false;
            else sz *= base.size();
        }
        if (fits && sz <= m.grid_oracle_cap) {
            Ring built = build_exterior(base, g.n, cfg);
            EssentialityResult oracle = is_centrally_essential(built, cfg);
            e["oracle"] = oracle.essential;
            e["agree"] = fast == oracle.essential;
            if (!oracle.essential) e["oracle_witness"] = element_json(built, oracle.witness);
            if (fast != oracle.essential)
                detail::suite_fail(res, "thm13 mismatch on lambda(" + g.base + "," +
                                            std::to_string(g.n) + ")");
        } else {
            e["oracle"] = nullptr;
        }
        entries.push_back(std::move(e));
    }
    res.report["entries"] = std::move(entries);
    return res;
}

inline SuiteResult run_thm14_suite(const Manifest& m, const RunConfig& cfg) {
    SuiteResult res;
    res.report["schema"] = 1;
    res.report["suite"] = "thm14";
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& mr : m.rings) {
        if (mr.slow) continue;
        Ring base = corpus_ring(mr.name, cfg);
        CenterData c = center(base, cfg);
        for (int n = 1; n <= 4; ++n) {
            bool t13 = thm13_check(base, c, n, cfg);
            Thm14Result t14 = thm14_check(base, c, n, cfg);
            nlohmann::json e;
            e["ring"] = mr.name;
            e["n"] = n;
            e["thm13"] = t13;
            e["thm14"] = t14.verdict;
            if (t14.domain_form) e["domain_form"] = *t14.domain_form;
            e["agree"] = t13 == t14.verdict;
            if (t13 != t14.verdict)
                detail::suite_fail(res, "thm13/thm14 mismatch on " + mr.name + ", n=" +
                                            std::to_string(n));
            entries.push_back(std::move(e));
        }
    }
    res.report["entries"] = std::move(entries);
    return res;
}

inline SuiteResult run_lemma22_suite(const Manifest& m, const RunConfig& cfg) {
    SuiteResult res;
    res.report["schema"] = 1;
    res.report["suite"] = "lemma22";
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& mr : m.rings) {
        if (mr.slow) continue;
        Ring r = corpus_ring(mr.name, cfg);
        CenterData c = center(r, cfg);
        auto [ess, pow2] = lemma22_check(r, c, cfg);
        nlohmann::json e;
        e["ring"] = mr.name;
        e["ann2_essential"] = ess;
        e["char_power_of_two"] = pow2;
        e["agree"] = ess == pow2;
        if (ess != pow2) detail::suite_fail(res, "lemma22 mismatch on " + mr.name);
        entries.push_back(std::move(e));
    }
    res.report["entries"] = std::move(entries);
    return res;
}

inline SuiteResult run_prop24_suite(const Manifest& m, const RunConfig& cfg) {
    SuiteResult res;
    res.report["schema"] = 1;
    res.report["suite"] = "prop24";
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& mr : m.rings) {
        if (mr.slow) continue;
        Ring r = corpus_ring(mr.name, cfg);
        CenterData c = center(r, cfg);
        bool ce = is_centrally_essential(r, c, cfg).essential;
        nlohmann::json e;
        e["ring"] = mr.name;
        e["centrally_essential"] = ce;
        if (ce) {
            Prop24Result p = prop24_check(r, c, cfg);
            e["idempotents_central"] = p.all_central;
            if (!p.all_central) {
                e["witness"] = element_json(r, *p.witness);
                detail::suite_fail(res, "non-central idempotent in centrally essential " + mr.name);
            }
        }
        entries.push_back(std::move(e));
    }
    res.report["entries"] = std::move(entries);
    return res;
}

inline SuiteResult run_prop28_suite(const Manifest& m, const RunConfig& cfg) {
    SuiteResult res;
    res.report["schema"] = 1;
    res.report["suite"] = "prop28";
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& mr : m.rings) {
        if (mr.slow) continue;
        Ring r = corpus_ring(mr.name, cfg);
        CenterData c = center(r, cfg);
        bool ce = is_centrally_essential(r, c, cfg).essential;
        nlohmann::json e;
        e["ring"] = mr.name;
        e["centrally_essential"] = ce;
        try {
            Prop28Report rep = prop28_report(r, c, ce, cfg);
            e["semiprime"] = rep.semiprime;
            e["center_semiprime"] = rep.center_semiprime;
            e["reduced"] = rep.reduced;
            e["right_nonsingular"] = rep.right_nonsingular;
            e["commutative_reduced"] = rep.commutative_reduced;
            e["all_equal"] = rep.all_equal();
            if (mr.name == "t2-f2" && !(rep.semiprime == false && rep.center_semiprime == true))
                detail::suite_fail(res, "t2-f2 must be non-semiprime with a semiprime center");
        } catch (const TheoremViolation& tv) {
            e["all_equal"] = false;
            detail::suite_fail(res, tv.what());
        }
        entries.push_back(std::move(e));
    }
    res.report["entries"] = std::move(entries);
    return res;
}

inline SuiteResult run_thm15_suite(const Manifest& m, const RunConfig& cfg) {
    SuiteResult res;
    res.report["schema"] = 1;
    res.report["suite"] = "thm15";
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& mr : m.rings) {
        if (mr.slow) continue;
        Ring r = corpus_ring(mr.name, cfg);
        CenterData c = center(r, cfg);
        bool ce = is_centrally_essential(r, c, cfg).essential;
        nlohmann::json e;
        e["ring"] = mr.name;
        e["centrally_essential"] = ce;
        if (ce) {
            try {
                e["quotient_commutative_regular"] = thm15_part1_check(r, c, cfg);
            } catch (const TheoremViolation& tv) {
                e["quotient_commutative_regular"] = false;
                detail::suite_fail(res, tv.what());
            }
        }
        entries.push_back(std::move(e));
    }
    res.report["entries"] = std::move(entries);
    return res;
}

inline SuiteResult run_remark12_suite(const Manifest& m, const RunConfig& cfg) {
    SuiteResult res;
    res.report["schema"] = 1;
    res.report["suite"] = "remark12";
    nlohmann::json entries = nlohmann::json::array();
    for (std::uint32_t p : m.sweep_primes)
        for (int n : m.sweep_dims) {
            std::uint64_t sz = 1;
            bool fits = true;
            for (std::uint64_t i = 0; i < (1ull << n) && fits; ++i) {
                if (sz > m.sweep_max_size / p) fits = false;
                else sz *= p;
            }
            nlohmann::json e;
            e["p"] = p;
            e["n"] = n;
            bool expected = p == 2 || n % 2 == 1;
            e["expected"] = expected;
            if (!fits) {
                e["status"] = "over-cap";
            } else if (sz > m.sweep_slow_threshold && !cfg.slow) {
                e["status"] = "skipped-slow";
            } else {
                Ring base = make_gf(p, 1, {}, cfg);
                Ring built = build_exterior(base, n, cfg);
                EssentialityResult oracle = is_centrally_essential(built, cfg);
                e["status"] = "checked";
                e["oracle"] = oracle.essential;
                e["agree"] = oracle.essential == expected;
                if (oracle.essential != expected)
                    detail::suite_fail(res, "parity sweep mismatch at p=" + std::to_string(p) +
                                                ", n=" + std::to_string(n));
            }
            entries.push_back(std::move(e));
        }
    res.report["entries"] = std::move(entries);
    return res;
}

inline SuiteResult run_suite(const std::string& suite, const Manifest& m, const RunConfig& cfg) {
    if (suite == "laws") return run_laws_suite(m, cfg);
    if (suite == "thm13") return run_thm13_suite(m, cfg);
    if (suite == "thm14") return run_thm14_suite(m, cfg);
    if (suite == "lemma22") return run_lemma22_suite(m, cfg);
    if (suite == "prop24") return run_prop24_suite(m, cfg);
    if (suite == "prop28") return run_prop28_suite(m, cfg);
    if (suite == "thm15") return run_thm15_suite(m, cfg);
    if (suite == "remark12") return run_remark12_suite(m, cfg);
    throw RingError("unknown verify suite \"" + suite + "\"");
}

inline const std::vector<std::string>& all_suites() {
    static const std::vector<std::string> s = {"laws",   "thm13",  "thm14", "lemma22",
                                               "prop24", "prop28", "thm15", "remark12"};
    return s;
}

}  // namespace ringlab
