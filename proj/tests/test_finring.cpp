#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "ringlab/corpus.hpp"
#include "ringlab/exterior.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/structure.hpp"
#include "ringlab/submodule.hpp"
#include "ringlab/verify.hpp"

using namespace ringlab;

namespace {

// t2(f2) generators in row-major order: E11, E12, E22 (coord 0 most significant).
constexpr ElemIndex kT2_E11 = 4, kT2_E12 = 2, kT2_E22 = 1, kT2_I = 5;
// m2(f2) generators: E11, E12, E21, E22.
constexpr ElemIndex kM2_E12 = 4;

std::vector<ElemIndex> member_list(const Submodule& s) { return s.members; }

}  // namespace

TEST_CASE("spec validation accepts z8 and rejects bad specs") {
    RingSpec good;
    good.name = "z8";
    good.moduli = {8};
    good.one = {1};
    good.mul = {{{1}}};
    CHECK(Ring::check_spec(good).empty());

    RingSpec bad_unit = good;
    bad_unit.one = {0};
    auto issues = Ring::check_spec(bad_unit);
    REQUIRE(!issues.empty());
    bool saw = false;
    for (const auto& i : issues) saw = saw || i.kind == SpecIssueKind::BadUnit;
    CHECK(saw);
    CHECK_THROWS_AS((void)Ring::from_spec(bad_unit), ValidationError);

    // product of a mod-2 and a mod-3 generator cannot hit the mod-2 generator
    RingSpec incompat;
    incompat.name = "bad";
    incompat.moduli = {2, 3};
    incompat.one = {1, 1};
    incompat.mul = {{{1, 0}, {1, 0}}, {{1, 0}, {0, 1}}};
    issues = Ring::check_spec(incompat);
    REQUIRE(!issues.empty());
    saw = false;
    for (const auto& i : issues) saw = saw || i.kind == SpecIssueKind::IncompatibleModuli;
    CHECK(saw);

    RingSpec shape = good;
    shape.mul = {};
    issues = Ring::check_spec(shape);
    REQUIRE(!issues.empty());
    CHECK(issues.front().kind == SpecIssueKind::ShapeMismatch);
}

TEST_CASE("unreduced residues are reduced by the loader") {
    RingSpec s;
    s.name = "z4u";
    s.moduli = {4};
    s.one = {5};  // reduces to 1
    s.mul = {{{-3}}};  // reduces to 1
    Ring r = Ring::from_spec(s);
    CHECK(r.one() == 1);
    CHECK(r.mul(3, 3) == 1);
}

TEST_CASE("multiplication matches hand values") {
    Ring z6 = make_zmod(6);
    CHECK(z6.mul(4, 5) == 2);

    Ring m2 = corpus_ring("m2-f2");
    CHECK(m2.mul(kM2_E12, kM2_E12) == m2.zero());

    Ring t2 = corpus_ring("t2-f2");
    CHECK(t2.mul(kT2_E11, kT2_E12) == kT2_E12);
    CHECK(t2.mul(kT2_E12, kT2_E11) == t2.zero());
    CHECK(t2.one() == kT2_I);
}

TEST_CASE("element handles reject cross-ring arithmetic") {
    Ring z4 = make_zmod(4);
    Ring z6 = make_zmod(6);
    Element a{&z4, 1}, b{&z6, 1};
    CHECK_THROWS_AS((void)(a + b), RingMismatch);
    CHECK_THROWS_AS((void)(a * b), RingMismatch);
    Element c{&z4, 3};
    CHECK((a + c).idx == 0);
    CHECK((-c).idx == 1);
}

TEST_CASE("int_scale and additive_order") {
    Ring z6 = make_zmod(6);
    CHECK(z6.int_scale(2, 3) == 0);
    CHECK(z6.int_scale(0, 5) == 0);
    CHECK(z6.additive_order(3) == 2);
    CHECK(z6.additive_order(0) == 1);

    Ring z8 = make_zmod(8);
    CHECK(z8.additive_order(2) == 4);
    CHECK(z8.int_scale(-1, 3) == 5);

    Ring lf3 = corpus_ring("lambda-f3-3");
    const ElemIndex e1 = 729;  // coefficient 1 at the {1} monomial
    CHECK(lf3.int_scale(2, e1) == 1458);
}

TEST_CASE("characteristic") {
    CHECK(make_zmod(6).characteristic() == 6);
    CHECK(corpus_ring("t2-f2").characteristic() == 2);
    CHECK(corpus_ring("lambda-f3-3").characteristic() == 3);
}

TEST_CASE("additive order divides the characteristic") {
    for (const char* name : {"z6", "z8", "gf4", "t2-f2", "z2xz4"}) {
        Ring r = corpus_ring(name);
        std::uint64_t ch = r.characteristic();
        for (std::uint64_t x = 0; x < r.size(); ++x)
            CHECK(ch % r.additive_order(static_cast<ElemIndex>(x)) == 0);
    }
}

TEST_CASE("annihilator_of_int") {
    Ring z6 = make_zmod(6);
    CHECK(member_list(annihilator_of_int(z6, 2)) == std::vector<ElemIndex>{0, 3});
    Ring z8 = make_zmod(8);
    CHECK(member_list(annihilator_of_int(z8, 2)) == std::vector<ElemIndex>{0, 4});
    CHECK(member_list(annihilator_of_int(z8, 1)) == std::vector<ElemIndex>{0});

    // closed under two-sided multiplication by arbitrary elements
    Ring t2 = corpus_ring("t2-f2");
    Submodule ann = annihilator_of_int(t2, 2);
    for (ElemIndex a : ann.members)
        for (std::uint64_t r = 0; r < t2.size(); ++r) {
            CHECK(ann.contains(t2.mul(a, static_cast<ElemIndex>(r))));
            CHECK(ann.contains(t2.mul(static_cast<ElemIndex>(r), a)));
        }
}

TEST_CASE("idempotents") {
    CHECK(idempotents(make_zmod(6)) == std::vector<ElemIndex>{0, 1, 3, 4});
    Ring gf4 = corpus_ring("gf4");
    CHECK(idempotents(gf4) == std::vector<ElemIndex>{gf4.zero(), gf4.one()});
}

TEST_CASE("jacobson radical") {
    CHECK(member_list(jacobson_radical(make_zmod(4))) == std::vector<ElemIndex>{0, 2});
    Ring gf4 = corpus_ring("gf4");
    CHECK(member_list(jacobson_radical(gf4)) == std::vector<ElemIndex>{gf4.zero()});
    Ring t2 = corpus_ring("t2-f2");
    CHECK(member_list(jacobson_radical(t2)) == std::vector<ElemIndex>{0, kT2_E12});
}

TEST_CASE("prime radical equals the jacobson radical with verified postchecks") {
    CHECK(member_list(prime_radical(make_zmod(4))) == std::vector<ElemIndex>{0, 2});
    CHECK(member_list(prime_radical(make_zmod(6))) == std::vector<ElemIndex>{0});
    Ring t2 = corpus_ring("t2-f2");
    CHECK(prime_radical(t2).members == jacobson_radical(t2).members);
}

TEST_CASE("ideal closure") {
    Ring z8 = make_zmod(8);
    CHECK(member_list(ideal_closure(z8, {2}, SubKind::TwoSidedIdeal)) ==
          std::vector<ElemIndex>{0, 2, 4, 6});
    CHECK(member_list(ideal_closure(z8, {}, SubKind::TwoSidedIdeal)) ==
          std::vector<ElemIndex>{0});
    Ring t2 = corpus_ring("t2-f2");
    CHECK(member_list(ideal_closure(t2, {kT2_E12}, SubKind::TwoSidedIdeal)) ==
          std::vector<ElemIndex>{0, kT2_E12});
}

TEST_CASE("submodule construction verifies closure") {
    Ring z6 = make_zmod(6);
    CHECK_THROWS_AS(
        (void)make_submodule(z6, SubKind::TwoSidedIdeal, std::vector<ElemIndex>{0, 1}),
        RingError);
    Submodule ok = make_submodule(z6, SubKind::TwoSidedIdeal, {0, 2, 4});
    CHECK(ok.contains(4));
    CHECK(!ok.contains(3));
}

TEST_CASE("quotient rings") {
    Ring z8 = make_zmod(8);
    Submodule i = ideal_closure(z8, {4}, SubKind::TwoSidedIdeal);
    Ring q = quotient_ring(z8, i, "z8/4");
    CHECK(q.size() == 4);
    CHECK(q.characteristic() == 4);

    Submodule zero = make_submodule(z8, SubKind::TwoSidedIdeal, {0});
    Ring same = quotient_ring(z8, zero);
    CHECK(same.size() == 8);
    CHECK(same.characteristic() == 8);

    Ring t2 = corpus_ring("t2-f2");
    Ring tq = quotient_ring(t2, jacobson_radical(t2), "t2/J");
    CHECK(tq.size() == 4);
    CHECK(structural_predicates(tq).commutative);
    CHECK(idempotents(tq).size() == 4);

    // quotient by a non-ideal is rejected
    Submodule right_only =
        make_submodule(t2, SubKind::RightIdeal, ideal_closure(t2, {kT2_E11}, SubKind::RightIdeal).members);
    CHECK_THROWS_AS((void)quotient_ring(t2, right_only), NotTwoSided);
}

TEST_CASE("R/J(R) is semiprimitive") {
    for (const char* name : {"z8", "z4", "t2-f2", "z2xz4"}) {
        Ring r = corpus_ring(name);
        Ring q = quotient_ring(r, jacobson_radical(r));
        CHECK(jacobson_radical(q).members == std::vector<ElemIndex>{q.zero()});
    }
}

TEST_CASE("structural predicates") {
    PredicateRecord z6 = structural_predicates(make_zmod(6));
    CHECK(z6.commutative);
    CHECK(z6.has_zero_divisors);
    CHECK(z6.reduced);
    CHECK(z6.semiprime);
    CHECK(z6.regular);
    CHECK(z6.right_nonsingular);

    PredicateRecord z4 = structural_predicates(make_zmod(4));
    CHECK(!z4.reduced);
    CHECK(z4.square_zero_witness == ElemIndex{2});
    CHECK(!z4.semiprime);
    CHECK(!z4.right_nonsingular);

    PredicateRecord t2 = structural_predicates(corpus_ring("t2-f2"));
    CHECK(!t2.commutative);
    CHECK(!t2.semiprime);
}

TEST_CASE("socle of the right regular module") {
    CHECK(member_list(socle_right(make_zmod(4))) == std::vector<ElemIndex>{0, 2});
    Ring gf4 = corpus_ring("gf4");
    CHECK(socle_right(gf4).size() == gf4.size());
    Ring z6 = make_zmod(6);
    CHECK(socle_right(z6).size() == z6.size());
}

TEST_CASE("socle cap is an explicit error") {
    Ring lf3 = corpus_ring("lambda-f3-3");
    RunConfig small;
    small.socle_cap = 4096;
    CHECK_THROWS_AS((void)socle_right(lf3, small), CapExceeded);
}

TEST_CASE("ring laws exhaustive on small corpus rings") {
    for (const char* name : {"z6", "z8", "gf8", "gf9", "t2-f2", "m2-f2", "z2xz3"}) {
        Ring r = corpus_ring(name);
        CHECK(check_ring_laws_exhaustive(r) == r.size() * r.size() * r.size());
    }
}

TEST_CASE("enumeration cap rejects oversized specs") {
    RunConfig tiny;
    tiny.enumeration_cap = 100;
    CHECK_THROWS_AS((void)make_zmod(101, tiny), CapExceeded);
    try {
        (void)make_zmod(101, tiny);
    } catch (const CapExceeded& e) {
        CHECK(e.required == 101);
        CHECK(e.cap == 100);
    }
}
