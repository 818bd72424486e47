#include <doctest.h>

#include <map>
#include <set>

#include "fibclass/elliptic.hpp"

using namespace fibclass;
using namespace fibclass::ffpoly;
using namespace fibclass::elliptic;

namespace {

WeierstrassCurve curve_mx(int64_t p) { // y^2 = x^3 - x
    auto ctx = FieldCtx::make(p, 1);
    return WeierstrassCurve::from_short(ctx, Fq(ctx, -1), Fq::zero(ctx));
}

} // namespace

TEST_CASE("j-invariants of the catalogue equations") {
    CHECK(curve_mx(5).j_invariant() == Fq(FieldCtx::make(5, 1), 1728)); // = 3 mod 5
    CHECK(curve_mx(3).j_invariant().is_zero());
    auto c2 = FieldCtx::make(2, 1);
    CHECK(WeierstrassCurve::from_ints(c2, 0, 0, 1, 0, 0).j_invariant().is_zero());
}

TEST_CASE("singular equations are rejected") {
    auto c5 = FieldCtx::make(5, 1);
    CHECK_THROWS_AS(WeierstrassCurve::from_short(c5, Fq::zero(c5), Fq::zero(c5)), DomainError);
    // y^2 = x^3 + 1 degenerates in characteristic 2; the curve with j = 0
    // there needs the long form y^2 + y = x^3
    auto c2 = FieldCtx::make(2, 1);
    CHECK_THROWS_AS(WeierstrassCurve::from_short(c2, Fq::zero(c2), Fq::one(c2)), DomainError);
    CHECK(is_supersingular_oracle(WeierstrassCurve::from_ints(c2, 0, 0, 1, 0, 0)));
}

TEST_CASE("exhaustive point counts") {
    auto c2 = FieldCtx::make(2, 1);
    CHECK(point_count(WeierstrassCurve::from_ints(c2, 0, 0, 1, 0, 0)) == 3);

    auto c3 = FieldCtx::make(3, 1);
    CHECK(point_count(WeierstrassCurve::from_short(c3, Fq::one(c3), Fq::zero(c3))) == 4);
}

TEST_CASE("Hasse bound holds on a curve sweep") {
    for (int64_t p : {2, 3, 5, 7}) {
        auto ctx = FieldCtx::make(p, 1);
        for (int64_t ai = 0; ai < p; ++ai)
            for (int64_t bi = 0; bi < p; ++bi) {
                try {
                    WeierstrassCurve E = WeierstrassCurve::from_short(ctx, Fq(ctx, ai), Fq(ctx, bi));
                    CHECK(hasse_bound_holds(p, point_count(E)));
                } catch (const DomainError&) {
                }
            }
    }
}

TEST_CASE("supersingularity agrees with the trace oracle over F_p and F_p^2") {
    for (int64_t p : {2, 3, 5, 7, 11, 13}) {
        for (const char* name : {"ordinary", "supersingular", "generic", "j0", "j1728"}) {
            WeierstrassCurve E = fixture_curve(name, p);
            bool deuring = is_supersingular(E);
            CHECK(deuring == is_supersingular_oracle(E));
            WeierstrassCurve E2 = E.base_change(FieldCtx::make(p, 2));
            CHECK(deuring == is_supersingular_oracle(E2));
        }
    }
}

TEST_CASE("y^2 = x^3 + x in characteristic 3 is supersingular (oracle-decided)") {
    auto c3 = FieldCtx::make(3, 1);
    WeierstrassCurve E = WeierstrassCurve::from_short(c3, Fq::one(c3), Fq::zero(c3));
    CHECK(point_count(E) == 4); // trace 0 over F_3
    CHECK(is_supersingular_oracle(E));
    CHECK(is_supersingular(E));
    CHECK(point_count(E.base_change(FieldCtx::make(3, 2))) == 16); // trace -6 over F_9
}

TEST_CASE("automorphism-group catalogue: orders, cyclicity, maximal Abelian orders") {
    auto d7 = aut_group(fixture_curve("j1728", 7));
    CHECK(d7.order == 4);
    CHECK(d7.is_cyclic);
    CHECK(d7.maximal_abelian_orders == std::vector<int>{4});

    auto d3 = aut_group(fixture_curve("j0", 3));
    CHECK(d3.order == 12);
    CHECK(!d3.is_cyclic);
    CHECK(d3.maximal_abelian_orders == std::vector<int>{4, 6});

    auto d2 = aut_group(fixture_curve("j0", 2));
    CHECK(d2.order == 24);
    CHECK(!d2.is_cyclic);

    auto dgen = aut_group(fixture_curve("generic", 5));
    CHECK(dgen.order == 2);
    CHECK(dgen.is_cyclic);
}

TEST_CASE("every emitted generator verifies at its catalogue order") {
    struct Row {
        int64_t p;
        const char* name;
        std::vector<int> orders;
    };
    for (const Row& row : {Row{7, "j1728", {4}}, Row{5, "j0", {6}}, Row{3, "j0", {4, 6}},
                           Row{2, "j0", {6, 4}}, Row{11, "generic", {2}}}) {
        auto d = aut_group(fixture_curve(row.name, row.p));
        REQUIRE(d.generators.size() == row.orders.size());
        for (size_t i = 0; i < d.generators.size(); ++i) {
            auto [valid, order] = verify_automorphism(d.model, d.generators[i]);
            CHECK(valid);
            CHECK(order == row.orders[i]);
            CHECK(d.order % order == 0);
        }
    }
}

TEST_CASE("substitution checks on the reference maps") {
    // (x, y) -> (x + 1, y) on y^2 = x^3 - x in characteristic 3
    WeierstrassCurve E3 = curve_mx(3);
    auto ctx3 = E3.ctx();
    CurveAutomorphism shift(E3, Fq::one(ctx3), Fq::one(ctx3), Fq::zero(ctx3), Fq::zero(ctx3));
    auto [ok3, ord3] = verify_automorphism(E3, shift);
    CHECK(ok3);
    CHECK(ord3 == 3);

    // (x, y) -> (z3 x, y + 1) on y^2 + y = x^3 over F_4, order 6
    auto c4 = FieldCtx::make(2, 2);
    WeierstrassCurve E2 = WeierstrassCurve::from_ints(c4, 0, 0, 1, 0, 0);
    Fq z3 = *find_root_of_unity(c4, 3);
    CurveAutomorphism gamma(E2, z3 * z3, Fq::zero(c4), Fq::zero(c4), Fq::one(c4));
    auto [ok2, ord2] = verify_automorphism(E2, gamma);
    CHECK(ok2);
    CHECK(ord2 == 6);

    auto [okid, ordid] = verify_automorphism(E3, CurveAutomorphism::identity(E3));
    CHECK(okid);
    CHECK(ordid == 1);

    // a wrong map is rejected
    CurveAutomorphism bogus(E3, Fq::one(ctx3), Fq::one(ctx3), Fq::zero(ctx3), Fq::one(ctx3));
    CHECK(!verify_automorphism(E3, bogus).first);
}

TEST_CASE("exhaustive automorphism search matches the order table for p = 2, 3") {
    CHECK(count_automorphisms_bruteforce(catalogue_curve(2, JClass::J0)) == 24);
    CHECK(count_automorphisms_bruteforce(catalogue_curve(3, JClass::J0)) == 12);
}

TEST_CASE("negation fixes exactly the rational 2-torsion") {
    auto c5 = FieldCtx::make(5, 1);
    WeierstrassCurve E = WeierstrassCurve::from_short(c5, Fq::one(c5), Fq::zero(c5));
    CHECK(count_negation_fixed_points(E) == 4); // x(x^2+1) has 3 roots over F_5, plus infinity
}

TEST_CASE("textual curve format round trips") {
    WeierstrassCurve E = WeierstrassCurve::parse("p=3; k=1; a=[0,0,0,-1,0]");
    CHECK(E.ctx()->p() == 3);
    CHECK(E.j_invariant().is_zero());
    CHECK(is_supersingular(E));
    CHECK_THROWS_AS(WeierstrassCurve::parse("p=3; a=[1,2]"), InvalidArgument);
}

TEST_CASE("point-count and scan caps raise resource errors") {
    auto c9 = FieldCtx::make(3, 2);
    WeierstrassCurve E = WeierstrassCurve::from_short(c9, Fq::one(c9), Fq::zero(c9));
    CHECK_THROWS_AS(point_count(E, 4), ResourceError);
    CHECK_THROWS_AS(count_negation_fixed_points(E, 4), ResourceError);
    CHECK_THROWS_AS(count_automorphisms_bruteforce(E, 4), ResourceError);
}

TEST_CASE("classical congruence criteria for the special j-invariants") {
    // j = 0 is supersingular iff p = 2 mod 3; j = 1728 iff p = 3 mod 4
    for (int64_t p : {5, 7, 11, 13}) {
        CHECK(is_supersingular(fixture_curve("j0", p)) == (p % 3 == 2));
        CHECK(is_supersingular(fixture_curve("j1728", p)) == (p % 4 == 3));
    }
}

TEST_CASE("the supersingular j-invariant census over small prime fields") {
    const std::map<int64_t, std::set<int64_t>> expected = {
        {2, {0}}, {3, {0}}, {5, {0}}, {7, {6}}, {11, {0, 1}}, {13, {5}}};
    for (const auto& [p, want] : expected) {
        auto ctx = FieldCtx::make(p, 1);
        std::set<int64_t> seen;
        const int64_t q = p;
        for (int64_t a1 = 0; a1 < (p <= 3 ? q : 1); ++a1)
            for (int64_t a2 = 0; a2 < (p <= 3 ? q : 1); ++a2)
                for (int64_t a3 = 0; a3 < (p <= 3 ? q : 1); ++a3)
                    for (int64_t a4 = 0; a4 < q; ++a4)
                        for (int64_t a6 = 0; a6 < q; ++a6) {
                            try {
                                WeierstrassCurve E = WeierstrassCurve::from_ints(ctx, a1, a2, a3, a4, a6);
                                if (is_supersingular(E)) seen.insert(E.j_invariant().index());
                            } catch (const DomainError&) {
                            }
                        }
        CHECK(seen == want);
    }
}
