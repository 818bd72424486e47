#include <doctest.h>

#include <random>

#include "fibclass/groupscheme.hpp"

using namespace fibclass;
using namespace fibclass::ffpoly;
using namespace fibclass::elliptic;
using namespace fibclass::groupscheme;

namespace {

GroupSchemeSpec spec(const char* text, int64_t p) { return GroupSchemeSpec::parse(text, p); }

} // namespace

TEST_CASE("spec literals parse and print canonically") {
    CHECK(spec("Z/4 x mu_3", 3).to_string() == "Z/4 x mu_3");
    CHECK(spec("mu_3 x Z/4", 3).to_string() == "Z/4 x mu_3");
    CHECK(spec("alpha_3", 3).to_string() == "alpha_3");
    CHECK(spec("sskernel", 3).to_string() == "sskernel");
    CHECK(spec("e", 5).is_trivial());
    CHECK(spec("mu_9", 3).total_order() == 9);
    CHECK(spec("Z/2 x Z/2", 2).total_order() == 4);
    CHECK(spec("sskernel", 3).total_order() == 9);
    CHECK_THROWS_AS(spec("mu_6", 3), InvalidArgument);
    CHECK_THROWS_AS(spec("foo", 3), InvalidArgument);
}

TEST_CASE("etale and connected parts") {
    auto s = spec("Z/4 x mu_3 x alpha_3", 3);
    CHECK(s.etale_part().to_string() == "Z/4");
    CHECK(s.connected_part().to_string() == "mu_3 x alpha_3");
    CHECK(s.total_order() == 36);
    // Z/p is etale even though p divides its order; mu_p is the connected one
    CHECK(spec("Z/3", 3).connected_part().is_trivial());
    CHECK(spec("mu_3", 3).etale_part().is_trivial());
}

TEST_CASE("embeddings into G_a") {
    CHECK(embeds_in_Ga(spec("alpha_3 x Z/3 x Z/3", 3)));
    CHECK(!embeds_in_Ga(spec("mu_3", 3)));
    CHECK(embeds_in_Ga(spec("e", 3)));
    CHECK(embeds_in_Ga(spec("alpha_9", 3)));
    CHECK(!embeds_in_Ga(spec("Z/9", 3)));              // exponent p^2, but G_a is killed by p
    CHECK(!embeds_in_Ga(spec("Z/2", 3)));              // prime-to-p etale part
    CHECK(!embeds_in_Ga(spec("alpha_3 x alpha_3", 3))); // connected part of G_a is a single alpha
    CHECK(!embeds_in_Ga(spec("sskernel", 3)));
}

TEST_CASE("embeddings into G_m") {
    CHECK(embeds_in_Gm(spec("mu_3 x Z/4", 3)));
    CHECK(!embeds_in_Gm(spec("Z/5 x Z/5", 5)));
    CHECK(!embeds_in_Gm(spec("Z/2 x Z/2", 5)));  // not cyclic
    CHECK(embeds_in_Gm(spec("Z/2 x Z/3", 5)));   // cyclic of order 6
    CHECK(!embeds_in_Gm(spec("alpha_3", 3)));
    CHECK(!embeds_in_Gm(spec("Z/3", 3)));        // p divides the etale order
    CHECK(embeds_in_Gm(spec("mu_9 x Z/2", 3)));
    CHECK(!embeds_in_Gm(spec("mu_3 x mu_3", 3)));
}

TEST_CASE("specs mixing mu and alpha atoms embed nowhere one-dimensional") {
    std::mt19937 rng(2024);
    const char* extras[] = {"e", "Z/2", "Z/3", "Z/5", "sskernel"};
    for (int trial = 0; trial < 40; ++trial) {
        std::string text = "mu_3 x alpha_3";
        std::uniform_int_distribution<int> pick(0, 4);
        std::string extra = extras[pick(rng)];
        if (extra != "e") text += " x " + extra;
        auto s = spec(text.c_str(), 3);
        CHECK(!embeds_in_Ga(s));
        CHECK(!embeds_in_Gm(s));
    }
}

TEST_CASE("torsion structures") {
    auto c5 = FieldCtx::make(5, 1);
    WeierstrassCurve E5 = WeierstrassCurve::from_short(c5, Fq::one(c5), Fq::zero(c5)); // ordinary
    CHECK(torsion_structure(E5, 2).to_string() == "Z/2 x Z/2");
    CHECK(torsion_structure(E5, 5).to_string() == "Z/5 x mu_5");
    CHECK(torsion_structure(E5, 1).is_trivial());
    CHECK_THROWS_AS(torsion_structure(E5, 0), InvalidArgument);

    WeierstrassCurve E3 = fixture_curve("ordinary", 3);
    CHECK(torsion_structure(E3, 3).to_string() == "Z/3 x mu_3");
    CHECK(torsion_structure(E3, 6).to_string() == "Z/2 x Z/2 x Z/3 x mu_3");

    auto c2 = FieldCtx::make(2, 1);
    WeierstrassCurve Ess = WeierstrassCurve::from_ints(c2, 0, 0, 1, 0, 0);
    CHECK(torsion_structure(Ess, 2).to_string() == "sskernel");
    CHECK_THROWS_AS(torsion_structure(Ess, 4), UnsupportedError);

    // order bookkeeping: n^2 for (n, p) = 1, and the p-torsion dichotomy
    CHECK(torsion_structure(E5, 3).total_order() == 9);
    CHECK(torsion_structure(E5, 5).etale_part().total_order() == 5);
    CHECK(torsion_structure(Ess, 2).etale_part().is_trivial());
    CHECK(torsion_structure(Ess, 2).total_order() == 4);
}

TEST_CASE("Frobenius kernels") {
    WeierstrassCurve Eo = fixture_curve("ordinary", 5);
    CHECK(frobenius_kernel(Eo, 1).to_string() == "mu_5");
    CHECK(frobenius_kernel(Eo, 2).to_string() == "mu_25");
    CHECK(frobenius_kernel(Eo, 0).is_trivial());

    WeierstrassCurve Es = fixture_curve("supersingular", 5);
    CHECK(frobenius_kernel(Es, 1).to_string() == "alpha_5");
    CHECK(frobenius_kernel(Es, 2).to_string() == "sskernel");
    CHECK_THROWS_AS(frobenius_kernel(Es, 3), UnsupportedError);
}

TEST_CASE("the fixed-subgroup table, all fifteen rows") {
    auto row = [](const WeierstrassCurve& E, int g) { return fixed_subgroup(E, g).to_string(); };

    WeierstrassCurve gen5 = fixture_curve("generic", 5);
    CHECK(row(gen5, 2) == "Z/2 x Z/2");
    WeierstrassCurve gen2 = fixture_curve("generic", 2);
    CHECK(row(gen2, 2) == "Z/2 x mu_2");

    WeierstrassCurve e1728 = fixture_curve("j1728", 5);
    CHECK(row(e1728, 2) == "Z/2 x Z/2");
    CHECK(row(e1728, 4) == "Z/2");

    WeierstrassCurve e0 = fixture_curve("j0", 7);
    CHECK(row(e0, 2) == "Z/2 x Z/2");
    CHECK(row(e0, 3) == "Z/3");
    CHECK(row(e0, 6) == "e");

    WeierstrassCurve e03 = fixture_curve("j0", 3);
    CHECK(row(e03, 2) == "Z/2 x Z/2");
    CHECK(row(e03, 3) == "alpha_3");
    CHECK(row(e03, 4) == "Z/2");
    CHECK(row(e03, 6) == "e");

    WeierstrassCurve e02 = fixture_curve("j0", 2);
    CHECK(row(e02, 2) == "sskernel");
    CHECK(row(e02, 3) == "Z/3");
    CHECK(row(e02, 4) == "alpha_2");
    CHECK(row(e02, 6) == "e");

    CHECK_THROWS_AS(fixed_subgroup(gen5, 3), DomainError);
    CHECK_THROWS_AS(fixed_subgroup(e1728, 6), DomainError);
    CHECK_THROWS_AS(fixed_subgroup(e0, 1), DomainError);
}

TEST_CASE("fixed subgroups sit inside the torsion they come from") {
    for (auto [p, name] : {std::pair<int64_t, const char*>{5, "generic"}, {5, "j1728"},
                           {7, "j0"}, {3, "j0"}, {2, "j0"}, {2, "generic"}}) {
        WeierstrassCurve E = fixture_curve(name, p);
        for (int g : legal_gamma_orders(p, j_class(E))) {
            if (g == 1) continue;
            int64_t order = fixed_subgroup(E, g).total_order();
            CHECK(torsion_structure(E, 6).total_order() % order == 0);
        }
    }
}

TEST_CASE("atom dominance") {
    CHECK(dominates(spec("Z/4 x Z/2", 2), spec("Z/2 x Z/2", 2)));
    CHECK(!dominates(spec("Z/4", 2), spec("Z/2 x Z/2", 2)));
    CHECK(dominates(spec("sskernel", 2), spec("alpha_2", 2)));
    CHECK(!dominates(spec("sskernel", 2), spec("mu_2", 2)));
    CHECK(dominates(spec("mu_9", 3), spec("mu_3", 3)));
    CHECK(!dominates(spec("Z/2 x Z/2", 2), spec("Z/4", 2)));
}

TEST_CASE("validate_elementary on the reference triples") {
    WeierstrassCurve gen5 = fixture_curve("generic", 5);
    ElementarySubgroup good{gen5, spec("Z/2 x Z/2", 5), spec("Z/2", 5)};
    CHECK(validate_elementary(good).ok());

    WeierstrassCurve e03 = fixture_curve("j0", 3);
    ElementarySubgroup bad{e03, spec("alpha_3", 3), spec("Z/4", 3)};
    auto d = validate_elementary(bad);
    CHECK(!d.ok());
    CHECK(d.first_failure()->name == "translation-part-in-fixed-locus");

    ElementarySubgroup trivial{gen5, spec("e", 5), spec("e", 5)};
    CHECK(validate_elementary(trivial).ok());

    ElementarySubgroup noncyclic{gen5, spec("e", 5), spec("Z/2 x Z/2", 5)};
    auto d2 = validate_elementary(noncyclic);
    CHECK(!d2.ok());
    CHECK(d2.first_failure()->name == "graded-part-cyclic");

    // a graded part must be a constant group scheme
    ElementarySubgroup infinitesimal{e03, spec("e", 3), spec("mu_3", 3)};
    CHECK(validate_elementary(infinitesimal).first_failure()->name == "graded-part-constant");
}

TEST_CASE("free actions on the curve are exactly the translations") {
    WeierstrassCurve E = fixture_curve("j1728", 5);
    CHECK(free_on_E(ElementarySubgroup{E, spec("Z/4", 5), spec("e", 5)}));
    CHECK(!free_on_E(ElementarySubgroup{E, spec("e", 5), spec("Z/2", 5)}));
    // the sign involution fixes the four 2-torsion points, so it is not free
    CHECK(count_negation_fixed_points(E) == 4);
}

TEST_CASE("elementary validity agrees with dominance over the whole fixed-locus table") {
    const char* candidates[] = {"e",       "Z/2",     "Z/3",     "Z/4",  "Z/2 x Z/2",
                                "alpha_2", "alpha_3", "sskernel", "mu_2", "mu_3",
                                "Z/6",     "Z/5"};
    for (auto [p, name] : {std::pair<int64_t, const char*>{5, "generic"}, {5, "j1728"},
                           {7, "j0"}, {3, "j0"}, {2, "j0"}}) {
        WeierstrassCurve E = fixture_curve(name, p);
        for (int g : legal_gamma_orders(p, j_class(E))) {
            if (g == 1) continue;
            GroupSchemeSpec fixed = fixed_subgroup(E, g);
            for (const char* cand : candidates) {
                GroupSchemeSpec lt = [&] {
                    try {
                        return spec(cand, p);
                    } catch (const InvalidArgument&) {
                        return GroupSchemeSpec::trivial(p); // atom not meaningful at this p
                    }
                }();
                ElementarySubgroup sub{E, lt, GroupSchemeSpec::etale(p, g)};
                CHECK(validate_elementary(sub).ok() == dominates(fixed, lt));
            }
        }
    }
}

TEST_CASE("spec literals reject malformed atom subscripts") {
    CHECK_THROWS_AS(spec("Z/4x", 3), InvalidArgument);
    CHECK_THROWS_AS(spec("Z/", 3), InvalidArgument);
    CHECK_THROWS_AS(spec("mu_", 3), InvalidArgument);
    CHECK_THROWS_AS(spec("Z/-2", 3), InvalidArgument);
}

TEST_CASE("Frobenius kernels sit inside the p-torsion") {
    for (auto [p, name] : {std::pair<int64_t, const char*>{3, "ordinary"}, {3, "supersingular"},
                           {5, "ordinary"}, {5, "supersingular"}, {2, "ordinary"}, {2, "supersingular"}}) {
        WeierstrassCurve E = fixture_curve(name, p);
        CHECK(dominates(torsion_structure(E, p), frobenius_kernel(E, 1)));
    }
}

TEST_CASE("every fixed locus is itself a subgroup scheme of its curve") {
    for (auto [p, name] : {std::pair<int64_t, const char*>{5, "generic"}, {2, "generic"},
                           {5, "j1728"}, {7, "j0"}, {3, "j0"}, {2, "j0"}}) {
        WeierstrassCurve E = fixture_curve(name, p);
        for (int g : legal_gamma_orders(p, j_class(E))) {
            if (g == 1) continue;
            std::string why;
            CHECK_MESSAGE(
                embeds_in_elliptic(fixed_subgroup(E, g), is_supersingular(E), &why), why);
        }
    }
}
