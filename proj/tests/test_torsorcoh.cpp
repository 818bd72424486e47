#include <doctest.h>

#include <random>
#include <set>

#include "fibclass/json_io.hpp"
#include "fibclass/torsorcoh.hpp"

using namespace fibclass;
using namespace fibclass::ffpoly;
using namespace fibclass::torsorcoh;

namespace {

BaseCurve a1(int64_t p, int k = 1) { return BaseCurve::aff_line(FieldCtx::make(p, k)); }
BaseCurve star(int64_t p, int k = 1) { return BaseCurve::aff_line_star(FieldCtx::make(p, k)); }

TorsorClass alpha_cls(const BaseCurve& base, const std::string& rep) {
    return TorsorClass::alpha_class(base, io::parse_laurent(rep, base.ctx));
}

} // namespace

TEST_CASE("class spaces over the four bases") {
    auto p1 = BaseCurve::proj_line(FieldCtx::make(5, 1));
    CHECK(h1_description(p1, RankOneGroup::MuP).kind == ClassSpaceDescriptor::Kind::Zero);
    CHECK(h1_description(p1, RankOneGroup::AlphaP).kind == ClassSpaceDescriptor::Kind::Zero);

    auto d = h1_description(star(5), RankOneGroup::MuP);
    CHECK(d.kind == ClassSpaceDescriptor::Kind::FiniteMuList);
    CHECK(d.class_count == 5);
    CHECK(d.mu_classes.size() == 5);

    CHECK(h1_description(a1(3), RankOneGroup::AlphaP).kind == ClassSpaceDescriptor::Kind::PolyModPth);
    CHECK(h1_description(a1(3), RankOneGroup::MuP).kind == ClassSpaceDescriptor::Kind::Zero);
    CHECK(h1_description(star(3), RankOneGroup::AlphaP).kind ==
          ClassSpaceDescriptor::Kind::LaurentModPth);

    auto eb = BaseCurve::elliptic_base(elliptic::fixture_curve("ordinary", 5));
    CHECK(h1_description(eb, RankOneGroup::AlphaP).kind ==
          ClassSpaceDescriptor::Kind::EllipticDescriptive);
}

TEST_CASE("the affine action on alpha-classes") {
    auto base = a1(3);
    auto ctx = base.ctx;
    // translations land in the constants, which die in k[t]/k[t^p]
    TorsorClass t_cls = alpha_cls(base, "t");
    CHECK(act_on_class(t_cls, Fq::one(ctx), Fq(ctx, 7)) == t_cls);
    // (2t)^2 = 4t^2 = t^2 over F_3
    TorsorClass t2 = alpha_cls(base, "t^2");
    CHECK(act_on_class(t2, Fq(ctx, 2), Fq::zero(ctx)) == t2);
    CHECK_THROWS_AS(act_on_class(t2, Fq::zero(ctx), Fq::zero(ctx)), InvalidArgument);

    auto sbase = star(3);
    TorsorClass mu1 = TorsorClass::mu_class(sbase, 1);
    for (int64_t a = 1; a < 3; ++a)
        CHECK(act_on_class(mu1, Fq(sbase.ctx, a), Fq::zero(sbase.ctx)) == mu1);
    CHECK_THROWS_AS(act_on_class(TorsorClass::mu_class(sbase, 1), Fq(sbase.ctx, 2), Fq(sbase.ctx, 1)),
                    InvalidArgument);
}

TEST_CASE("acting is a group action") {
    auto base = a1(3, 2);
    auto ctx = base.ctx;
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int64_t> idx(0, ctx->size() - 1);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Fq> coeffs;
        for (int i = 0; i <= 5; ++i) coeffs.push_back(Fq::from_index(ctx, idx(rng)));
        TorsorClass cls = TorsorClass::alpha_class(base, Poly(ctx, coeffs));
        Fq a = Fq::from_index(ctx, idx(rng)), a2 = Fq::from_index(ctx, idx(rng));
        if (a.is_zero() || a2.is_zero()) continue;
        Fq b = Fq::from_index(ctx, idx(rng)), b2 = Fq::from_index(ctx, idx(rng));
        TorsorClass lhs = act_on_class(act_on_class(cls, a, b), a2, b2);
        TorsorClass rhs = act_on_class(cls, a * a2, a * b2 + b);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("infinite stabilizers: the lambda-t line and nothing else") {
    auto base = a1(3, 2);
    auto ctx = base.ctx;

    TorsorClass lam_t = alpha_cls(base, "2t");
    auto v1 = stabilizer_is_infinite(lam_t);
    CHECK(v1.infinite);

    TorsorClass t2 = alpha_cls(base, "t^2");
    CHECK(!stabilizer_is_infinite(t2).infinite);

    TorsorClass zero = TorsorClass::trivial(base, RankOneGroup::AlphaP);
    CHECK(stabilizer_is_infinite(zero).infinite);

    auto sbase = star(3);
    CHECK(stabilizer_is_infinite(TorsorClass::mu_class(sbase, 2)).infinite);
    CHECK(!stabilizer_is_infinite(alpha_cls(sbase, "t^2")).infinite);
    CHECK(stabilizer_is_infinite(alpha_cls(sbase, "0")).infinite);
    CHECK(stabilizer_is_infinite(TorsorClass::trivial(BaseCurve::proj_line(ctx), RankOneGroup::MuP))
              .infinite);
}

TEST_CASE("exhaustive stabilizers over F_9 match the hand counts") {
    auto base = a1(3, 2);
    auto ctx = base.ctx;

    auto stab_t = brute_force_stabilizer(alpha_cls(base, "t"));
    CHECK(stab_t.size() == 9);
    for (const auto& [a, b] : stab_t) CHECK(a == Fq::one(ctx)); // exactly the translations

    auto stab_t2 = brute_force_stabilizer(alpha_cls(base, "t^2"));
    CHECK(stab_t2.size() == 2);
    std::set<int64_t> as;
    for (const auto& [a, b] : stab_t2) {
        CHECK(b.is_zero());
        as.insert(a.index());
    }
    CHECK(as == std::set<int64_t>{Fq::one(ctx).index(), Fq(ctx, -1).index()});

    CHECK(brute_force_stabilizer(TorsorClass::trivial(base, RankOneGroup::AlphaP)).size() == 72);
}

TEST_CASE("the symbolic predicate dominates every finite-field shadow") {
    for (int k : {1, 2}) {
        auto base = a1(3, k);
        auto ctx = base.ctx;
        int64_t q = ctx->size();
        // infinite verdicts grow with the field, finite ones stay bounded
        CHECK(brute_force_stabilizer(alpha_cls(base, "t")).size() >= static_cast<size_t>(q));
        CHECK(brute_force_stabilizer(alpha_cls(base, "0")).size() >= static_cast<size_t>(q));
        CHECK(brute_force_stabilizer(alpha_cls(base, "t^2")).size() <= 4);
        CHECK(brute_force_stabilizer(alpha_cls(base, "t^4 + t")).size() <= 4);
        CHECK(brute_force_stabilizer(alpha_cls(base, "t^5")).size() <= 4);
    }
}

TEST_CASE("torsor equations with smoothness and irreducibility verdicts") {
    auto base = a1(3);
    auto ctx = base.ctx;

    auto eq1 = torsor_equation(alpha_cls(base, "2t"));
    CHECK(eq1.smooth);
    CHECK(eq1.irreducible);
    CHECK(!eq1.split_trivial);
    CHECK(eq1.equation == "x^3 - (2*t)");

    auto eq2 = torsor_equation(alpha_cls(base, "t^2"));
    CHECK(!eq2.smooth); // d/dt = 2t vanishes at the origin of the base
    CHECK(eq2.irreducible);

    auto eq0 = torsor_equation(TorsorClass::trivial(base, RankOneGroup::AlphaP));
    CHECK(eq0.split_trivial);
    CHECK(!eq0.irreducible);

    auto sbase = star(5);
    for (int64_t i = 1; i < 5; ++i) {
        auto eq = torsor_equation(TorsorClass::mu_class(sbase, i));
        CHECK(eq.smooth);
        CHECK(eq.irreducible);
    }
    // t^-1 + t^2 has derivative -t^-2 + 2t, which vanishes somewhere on (A^1)^*
    CHECK(!torsor_equation(alpha_cls(star(5), "t^-1 + t^2")).smooth);
    // a monomial derivative never vanishes off the origin
    CHECK(torsor_equation(alpha_cls(star(5), "t^-1")).smooth);
}

TEST_CASE("smoothness verdicts agree with an independent reading of the emitted equation") {
    auto base = a1(3, 2);
    auto ctx = base.ctx;
    std::mt19937 rng(777);
    std::uniform_int_distribution<int64_t> idx(0, ctx->size() - 1);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Fq> coeffs;
        for (int i = 0; i <= 8; ++i) coeffs.push_back(Fq::from_index(ctx, idx(rng)));
        TorsorClass cls = TorsorClass::alpha_class(base, Poly(ctx, coeffs));
        if (cls.is_trivial()) continue;
        auto eq = torsor_equation(cls);
        // independent route: differentiate the canonical representative and
        // decide vanishing on A^1 directly (a nonconstant polynomial over a
        // finite field always acquires a root in the closure)
        LaurentPoly df = cls.rep().derivative();
        bool smooth_direct = !df.is_zero() && df.min_exp() == 0 && df.max_exp() == 0;
        CHECK(eq.smooth == smooth_direct);
    }
}

TEST_CASE("rank-one reduction follows the trichotomy") {
    auto base = a1(3);

    auto r0 = reduce_rank_one(TorsorClass::trivial(base, RankOneGroup::AlphaP));
    CHECK(r0.applicable);
    CHECK(r0.subgroup.is_trivial());
    CHECK(r0.smooth);

    auto r1 = reduce_rank_one(alpha_cls(base, "t"));
    CHECK(r1.applicable);
    CHECK(r1.subgroup.to_string() == "alpha_3");
    CHECK(r1.smooth);
    CHECK(*r1.reduced == alpha_cls(base, "t"));

    auto r2 = reduce_rank_one(alpha_cls(base, "t^2"));
    CHECK(!r2.applicable);
}

TEST_CASE("the inversion flip on star classes") {
    auto sbase = star(5);
    CHECK(flip_class(TorsorClass::mu_class(sbase, 2)) == TorsorClass::mu_class(sbase, 3));
    CHECK(flip_class(alpha_cls(sbase, "t^2")) == alpha_cls(sbase, "t^-2"));
    CHECK_THROWS_AS(flip_class(alpha_cls(a1(5), "t")), InvalidArgument);
}

TEST_CASE("multisection torsion bounds") {
    CHECK(multisection_torsion_bound({6, 4}) == 2);
    CHECK(multisection_torsion_bound({1}) == 1);
    CHECK(multisection_torsion_bound({5}) == 5);
    CHECK_THROWS_AS(multisection_torsion_bound({}), InvalidArgument);
    CHECK_THROWS_AS(multisection_torsion_bound({0, 3}), InvalidArgument);

    std::mt19937 rng(31337);
    std::uniform_int_distribution<int64_t> deg(1, 400);
    std::uniform_int_distribution<int> len(1, 8);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<int64_t> ds;
        for (int i = 0, n = len(rng); i < n; ++i) ds.push_back(deg(rng));
        int64_t bound = multisection_torsion_bound(ds);
        for (int64_t d : ds) CHECK(d % bound == 0);
        ds.push_back(1);
        CHECK(multisection_torsion_bound(ds) == 1);
    }
}

TEST_CASE("pair classification of (curve kind, group)") {
    CHECK(torsor_pair_classify(BaseKind::AffLineStar,
                               groupscheme::GroupSchemeSpec::parse("mu_3 x Z/4", 3))
              .case_label == 'D');
    auto rej = torsor_pair_classify(BaseKind::ProjLine, groupscheme::GroupSchemeSpec::etale(5, 2));
    CHECK(!rej.accepted);
    CHECK(torsor_pair_classify(BaseKind::AffLine, groupscheme::GroupSchemeSpec::alpha(5)).case_label ==
          'C');
    CHECK(torsor_pair_classify(BaseKind::EllipticBase, groupscheme::GroupSchemeSpec::etale(5, 2))
              .case_label == 'A');
    // the mixed p-part can live in no elliptic curve
    auto mixed = groupscheme::GroupSchemeSpec::parse("alpha_3 x Z/3", 3);
    CHECK(!torsor_pair_classify(BaseKind::EllipticBase, mixed).accepted);
    // curve-aware rejection: alpha_p needs a supersingular host
    auto Eo = elliptic::fixture_curve("ordinary", 3);
    CHECK(!torsor_pair_classify(BaseKind::EllipticBase, groupscheme::GroupSchemeSpec::alpha(3), Eo)
               .accepted);
}

TEST_CASE("torsor class JSON round trip") {
    nlohmann::json j = {{"base", "A1*"}, {"group", "alpha_p"}, {"p", 3}, {"rep", "t^2 + 2t^-1"}};
    auto cls = io::torsor_class_from_json(j);
    CHECK(cls.base().kind == BaseKind::AffLineStar);
    CHECK(cls.rep().coeff(-1) == Fq(cls.ctx(), 2));
    auto back = io::torsor_class_to_json(cls);
    CHECK(back["group"] == "alpha_p");
    auto cls2 = io::torsor_class_from_json(back);
    CHECK(cls2 == cls);
}

TEST_CASE("brute-force caps raise resource errors") {
    auto base = a1(3, 2);
    auto cls = alpha_cls(base, "t");
    CHECK_THROWS_AS(torsorcoh::brute_force_stabilizer(cls, 4), ResourceError);
}

TEST_CASE("exhaustive stabilizers are subgroups of the affine group") {
    auto base = a1(3, 2);
    auto ctx = base.ctx;
    for (const char* rep : {"t", "t^2", "t^4 + t^2", "t^5 + 2t"}) {
        auto stab = brute_force_stabilizer(alpha_cls(base, rep));
        std::set<std::pair<int64_t, int64_t>> members;
        for (const auto& [a, b] : stab) members.insert({a.index(), b.index()});
        CHECK(members.count({Fq::one(ctx).index(), Fq::zero(ctx).index()}) == 1);
        for (const auto& [a1v, b1v] : stab)
            for (const auto& [a2v, b2v] : stab) {
                // (a1, b1) o (a2, b2) : t -> a1 (a2 t + b2) + b1
                Fq a = a1v * a2v, b = a1v * b2v + b1v;
                CHECK(members.count({a.index(), b.index()}) == 1);
            }
    }
}

TEST_CASE("class representatives must live over the base curve's field") {
    auto base = a1(3, 2);
    auto other = FieldCtx::make(3, 1);
    CHECK_THROWS_AS(
        torsorcoh::TorsorClass::alpha_class(base, LaurentPoly::monomial(other, Fq::one(other), 1)),
        InvalidArgument);
}
