#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "ringlab/central.hpp"
#include "ringlab/corpus.hpp"
#include "ringlab/exterior.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/verify.hpp"

using namespace ringlab;

namespace {

ExteriorElement monomial(const Ring& base, int n, SubsetIndex mask, std::uint32_t coeff = 1) {
    ExteriorElement x = ExteriorElement::zero(base, n);
    x.coeffs[mask][0] = coeff;  // base rings here have generator g0 = 1
    return x;
}

}  // namespace

TEST_CASE("wedge sign convention") {
    CHECK(wedge_sign(0b001, 0b010) == WedgeSign::Plus);   // e1 * e2
    CHECK(wedge_sign(0b010, 0b001) == WedgeSign::Minus);  // e2 * e1
    CHECK(wedge_sign(0b101, 0b010) == WedgeSign::Minus);  // (e1^e3) * e2
    CHECK(wedge_sign(0b001, 0b001) == WedgeSign::Overlap);
    CHECK(wedge_sign(0, 0b111) == WedgeSign::Plus);
}

TEST_CASE("sign cocycle and anticommutativity, exhaustive for n <= 5") {
    auto val = [](WedgeSign s) { return s == WedgeSign::Minus ? -1 : 1; };
    for (int n = 0; n <= 5; ++n) {
        const SubsetIndex lim = static_cast<SubsetIndex>(1u << n);
        for (SubsetIndex s = 0; s < lim; ++s)
            for (SubsetIndex t = 0; t < lim; ++t) {
                if (s & t) continue;
                int expect = (degree(s) * degree(t)) % 2 ? -1 : 1;
                CHECK(val(wedge_sign(s, t)) == expect * val(wedge_sign(t, s)));
                for (SubsetIndex u = 0; u < lim; ++u) {
                    if ((s | t) & u) continue;
                    CHECK(val(wedge_sign(s, t)) * val(wedge_sign(s | t, u)) ==
                          val(wedge_sign(t, u)) * val(wedge_sign(s, t | u)));
                }
            }
    }
}

TEST_CASE("build_exterior sizes and degenerate cases") {
    Ring f3 = corpus_ring("f3");
    Ring lf3 = build_exterior(f3, 3);
    CHECK(lf3.size() == 6561);
    CHECK(lf3.characteristic() == 3);

    Ring same = build_exterior(f3, 0);
    CHECK(same.size() == 3);
    CHECK(same.name() == f3.name());

    Ring z4 = make_zmod(4);
    Ring lz4 = build_exterior(z4, 2);
    CHECK(lz4.size() == 256);
    CHECK(lz4.characteristic() == 4);

    CHECK_THROWS_AS((void)build_exterior(f3, 17), RingError);
    CHECK_THROWS_AS((void)build_exterior(f3, -1), RingError);

    RunConfig tiny;
    tiny.enumeration_cap = 1000;
    CHECK_THROWS_AS((void)build_exterior(corpus_ring("f5"), 3, tiny), CapExceeded);
    try {
        (void)build_exterior(corpus_ring("f5", tiny), 3, tiny);
    } catch (const CapExceeded& e) {
        CHECK(e.required == 390625);  // the would-be size is reported
    }
}

TEST_CASE("built exterior rings pass full law validation for corpus bases") {
    for (const char* name : {"z2", "z4", "gf4", "t2-f2"}) {
        Ring base = corpus_ring(name);
        for (int n = 1; n <= 2; ++n) {
            Ring built = build_exterior(base, n);
            if (built.size() <= 512)
                CHECK(check_ring_laws_exhaustive(built) ==
                      built.size() * built.size() * built.size());
        }
    }
}

TEST_CASE("grade dimensions follow the binomial pattern") {
    CHECK(grade_dimension(3, 0) == 1);
    CHECK(grade_dimension(3, 1) == 3);
    CHECK(grade_dimension(3, 2) == 3);
    CHECK(grade_dimension(3, 3) == 1);
    CHECK(grade_dimension(3, 4) == 0);
    CHECK(grade_dimension(5, 2) == 10);
}

TEST_CASE("exterior_mul on monomials") {
    Ring f3 = corpus_ring("f3");
    auto e1 = monomial(f3, 3, 0b001);
    auto e2 = monomial(f3, 3, 0b010);
    auto e12 = monomial(f3, 3, 0b011);
    CHECK(exterior_mul(e1, e2) == e12);

    auto one = monomial(f3, 3, 0);
    auto x = monomial(f3, 3, 0b101, 2);
    CHECK(exterior_mul(x, one) == x);
    CHECK(exterior_mul(one, x) == x);

    auto e23 = monomial(f3, 3, 0b110);
    CHECK(exterior_mul(e23, e23).is_zero());

    // anticommutation with coefficients: e2 * e1 = -e1^e2 = 2 e1^e2 over F3
    CHECK(exterior_mul(e2, e1) == monomial(f3, 3, 0b011, 2));
}

TEST_CASE("exterior_mul agrees with the built ring multiplication") {
    Ring base = make_zmod(4);
    Ring built = build_exterior(base, 2);
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::uint64_t> dist(0, built.size() - 1);
    for (int it = 0; it < 500; ++it) {
        auto ai = static_cast<ElemIndex>(dist(rng));
        auto bi = static_cast<ElemIndex>(dist(rng));
        auto a = ExteriorElement::from_ring_index(base, 2, built, ai);
        auto b = ExteriorElement::from_ring_index(base, 2, built, bi);
        CHECK(exterior_mul(a, b).to_ring_index(built) == built.mul(ai, bi));
        CHECK(a.to_ring_index(built) == ai);  // round trip
    }
}

TEST_CASE("grade projection") {
    Ring f3 = corpus_ring("f3");
    ExteriorElement x = ExteriorElement::zero(f3, 3);
    x.coeffs[0][0] = 1;      // 1
    x.coeffs[0b001][0] = 1;  // e1
    x.coeffs[0b011][0] = 1;  // e1^e2
    CHECK(grade_project(x, 1) == monomial(f3, 3, 0b001));
    CHECK(grade_project(x, 0) == monomial(f3, 3, 0));
    CHECK(grade_project(x, 4).is_zero());
}

TEST_CASE("grading multiplicativity on random pairs") {
    Ring base = corpus_ring("f3");
    Ring built = build_exterior(base, 3);
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<std::uint64_t> dist(0, built.size() - 1);
    for (int it = 0; it < 200; ++it) {
        auto a = ExteriorElement::from_ring_index(base, 3, built, static_cast<ElemIndex>(dist(rng)));
        auto b = ExteriorElement::from_ring_index(base, 3, built, static_cast<ElemIndex>(dist(rng)));
        for (int s = 0; s <= 3; ++s)
            for (int t = 0; t <= 3; ++t) {
                auto prod = exterior_mul(grade_project(a, s), grade_project(b, t));
                for (int d = 0; d <= 3; ++d)
                    if (d != s + t) CHECK(grade_project(prod, d).is_zero());
            }
    }
}

TEST_CASE("degree-0 embedding is a ring homomorphism commuting with generators") {
    Ring base = make_zmod(6);
    Ring built = build_exterior(base, 2);
    auto embed = [&](std::uint32_t v) {
        ExteriorElement x = ExteriorElement::zero(base, 2);
        x.coeffs[0][0] = v;
        return x.to_ring_index(built);
    };
    for (std::uint32_t a = 0; a < 6; ++a)
        for (std::uint32_t b = 0; b < 6; ++b) {
            CHECK(built.mul(embed(a), embed(b)) == embed(a * b % 6));
            CHECK(built.add(embed(a), embed(b)) == embed((a + b) % 6));
        }
    // generators commute with every degree-0 element
    for (std::uint32_t a = 0; a < 6; ++a)
        for (SubsetIndex m : {1u, 2u}) {
            ExteriorElement g = ExteriorElement::zero(base, 2);
            g.coeffs[m][0] = 1;
            ElemIndex gi = g.to_ring_index(built);
            CHECK(built.mul(embed(a), gi) == built.mul(gi, embed(a)));
        }
}

TEST_CASE("even-degree monomials with central coefficients are central in lambda(f3,3)") {
    Ring base = corpus_ring("f3");
    Ring built = build_exterior(base, 3);
    CenterData c = center(built);
    for (SubsetIndex m = 0; m < 8; ++m) {
        if (degree(m) % 2 != 0) continue;
        for (std::uint32_t coeff = 0; coeff < 3; ++coeff) {
            ExteriorElement x = ExteriorElement::zero(base, 3);
            x.coeffs[m][0] = coeff;
            CHECK(c.contains(x.to_ring_index(built)));
        }
    }
}

TEST_CASE("build_exterior requires a struct-consts base") {
    Ring t2 = corpus_ring("t2-f2");
    Ring q = quotient_ring(t2, jacobson_radical(t2));
    CHECK_THROWS_AS((void)build_exterior(q, 1), RingError);
}
