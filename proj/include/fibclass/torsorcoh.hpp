// Flat-cohomology class spaces H^1(Y, mu_p) and H^1(Y, alpha_p) over the four
// curves with infinite automorphism group, the affine-group action on
// classes, infinite-stabilizer detection with its exhaustive finite-field
// oracle, explicit torsor equations, rank-one structure-group reduction, and
// the multisection torsion bound.
#ifndef FIBCLASS_TORSORCOH_HPP
#define FIBCLASS_TORSORCOH_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fibclass/errors.hpp"
#include "fibclass/ffpoly.hpp"
#include "fibclass/groupscheme.hpp"

namespace fibclass::torsorcoh {

using ffpoly::canonical_mod_pth;
using ffpoly::FieldCtx;
using ffpoly::FieldCtxPtr;
using ffpoly::Fq;
using ffpoly::LaurentPoly;
using ffpoly::Poly;
using groupscheme::GroupSchemeSpec;
using std::int64_t;

enum class BaseKind { EllipticBase, ProjLine, AffLine, AffLineStar };

inline std::string to_string(BaseKind k) {
    switch (k) {
        case BaseKind::EllipticBase: return "elliptic";
        case BaseKind::ProjLine: return "P1";
        case BaseKind::AffLine: return "A1";
        case BaseKind::AffLineStar: return "A1*";
    }
    return "?";
}

inline std::optional<BaseKind> parse_base_kind(const std::string& s) {
    if (s == "elliptic" || s == "E") return BaseKind::EllipticBase;
    if (s == "P1" || s == "proj") return BaseKind::ProjLine;
    if (s == "A1") return BaseKind::AffLine;
    if (s == "A1*" || s == "A1star") return BaseKind::AffLineStar;
    return std::nullopt;
}

struct BaseCurve {
    BaseKind kind;
    FieldCtxPtr ctx;
    std::optional<elliptic::WeierstrassCurve> curve; // only for EllipticBase

    static BaseCurve proj_line(FieldCtxPtr c) { return {BaseKind::ProjLine, std::move(c), std::nullopt}; }
    static BaseCurve aff_line(FieldCtxPtr c) { return {BaseKind::AffLine, std::move(c), std::nullopt}; }
    static BaseCurve aff_line_star(FieldCtxPtr c) { return {BaseKind::AffLineStar, std::move(c), std::nullopt}; }
    static BaseCurve elliptic_base(elliptic::WeierstrassCurve E) {
        auto c = E.ctx();
        return {BaseKind::EllipticBase, c, std::move(E)};
    }
};

enum class RankOneGroup { MuP, AlphaP };

inline std::string to_string(RankOneGroup g) {
    return g == RankOneGroup::MuP ? "mu_p" : "alpha_p";
}

// ---------------------------------------------------------------------------
// TorsorClass: a canonical representative of a class in H^1_fl(Y, mu_p or
// alpha_p).  Alpha classes are Laurent polynomials with every exponent prime
// to p (classes mod k[t^p]); mu classes over (A^1)^* are exponents 0..p-1.
// ---------------------------------------------------------------------------

class TorsorClass {
public:
    static TorsorClass alpha_class(BaseCurve base, const LaurentPoly& rep) {
        if (!rep.ctx()->same(*base.ctx))
            throw InvalidArgument("class representative and base curve live over different fields");
        if (base.kind == BaseKind::ProjLine || base.kind == BaseKind::EllipticBase) {
            if (!canonical_mod_pth(rep).is_zero())
                throw InvalidArgument("only the trivial alpha_p-class exists over this base");
        }
        LaurentPoly canon = canonical_mod_pth(rep);
        if (base.kind == BaseKind::AffLine && !canon.is_polynomial())
            throw InvalidArgument("classes over A^1 are represented by polynomials");
        return TorsorClass(std::move(base), RankOneGroup::AlphaP, std::move(canon), 0);
    }

    static TorsorClass mu_class(BaseCurve base, int64_t exponent) {
        int64_t p = base.ctx->p();
        if (base.kind != BaseKind::AffLineStar) {
            if (exponent % p != 0)
                throw InvalidArgument("only the trivial mu_p-class exists over this base");
            exponent = 0;
        }
        int64_t i = ((exponent % p) + p) % p;
        LaurentPoly zero = LaurentPoly::zero(base.ctx);
        return TorsorClass(std::move(base), RankOneGroup::MuP, std::move(zero), i);
    }

    static TorsorClass trivial(BaseCurve base, RankOneGroup g) {
        if (g == RankOneGroup::MuP) return mu_class(std::move(base), 0);
        LaurentPoly zero = LaurentPoly::zero(base.ctx);
        return alpha_class(std::move(base), zero);
    }

    const BaseCurve& base() const { return base_; }
    RankOneGroup group() const { return group_; }
    const LaurentPoly& rep() const { return rep_; }
    int64_t mu_exponent() const { return mu_exp_; }
    const FieldCtxPtr& ctx() const { return base_.ctx; }

    bool is_trivial() const {
        return group_ == RankOneGroup::MuP ? mu_exp_ == 0 : rep_.is_zero();
    }

    friend bool operator==(const TorsorClass& a, const TorsorClass& b) {
        return a.base_.kind == b.base_.kind && a.group_ == b.group_ &&
               a.mu_exp_ == b.mu_exp_ && a.rep_ == b.rep_;
    }
    friend bool operator!=(const TorsorClass& a, const TorsorClass& b) { return !(a == b); }

    std::string rep_string() const {
        if (group_ == RankOneGroup::MuP) {
            if (mu_exp_ == 0) return "1";
            if (mu_exp_ == 1) return "t";
            return "t^" + std::to_string(mu_exp_);
        }
        return rep_.to_string();
    }

private:
    TorsorClass(BaseCurve base, RankOneGroup g, LaurentPoly rep, int64_t mu_exp)
        : base_(std::move(base)), group_(g), rep_(std::move(rep)), mu_exp_(mu_exp) {}

    BaseCurve base_;
    RankOneGroup group_;
    LaurentPoly rep_;
    int64_t mu_exp_;
};

// ---------------------------------------------------------------------------
// Class-space description per base and structure group.
// ---------------------------------------------------------------------------

struct ClassSpaceDescriptor {
    enum class Kind { Zero, PolyModPth, LaurentModPth, FiniteMuList, EllipticDescriptive };
    Kind kind = Kind::Zero;
    std::string description;
    int64_t class_count = 0; // -1 = infinite
    std::vector<TorsorClass> mu_classes;
};

inline ClassSpaceDescriptor h1_description(const BaseCurve& base, RankOneGroup group) {
    const int64_t p = base.ctx->p();
    ClassSpaceDescriptor d;
    switch (base.kind) {
        case BaseKind::ProjLine:
            d.kind = ClassSpaceDescriptor::Kind::Zero;
            d.description = "0 (no global units or regular functions feed the connecting map)";
            d.class_count = 1;
            return d;
        case BaseKind::AffLine:
            if (group == RankOneGroup::MuP) {
                d.kind = ClassSpaceDescriptor::Kind::Zero;
                d.description = "0 (units of k[t] are constants, all p-th powers)";
                d.class_count = 1;
            } else {
                d.kind = ClassSpaceDescriptor::Kind::PolyModPth;
                d.description = "k[t]/k[t^p], represented by polynomials with every exponent prime to p";
                d.class_count = -1;
            }
            return d;
        case BaseKind::AffLineStar:
            if (group == RankOneGroup::MuP) {
                d.kind = ClassSpaceDescriptor::Kind::FiniteMuList;
                d.description = "the classes of 1, t, ..., t^(p-1)";
                d.class_count = p;
                for (int64_t i = 0; i < p; ++i)
                    d.mu_classes.push_back(TorsorClass::mu_class(base, i));
            } else {
                d.kind = ClassSpaceDescriptor::Kind::LaurentModPth;
                d.description = "k[t,t^-1]/k[t^p,t^-p], represented by Laurent polynomials with "
                                "every exponent prime to p";
                d.class_count = -1;
            }
            return d;
        case BaseKind::EllipticBase:
            d.kind = ClassSpaceDescriptor::Kind::EllipticDescriptive;
            d.description = "descriptive only: a nontrivial class has reduced total space of degree "
                            "1 or p over the curve";
            d.class_count = -1;
            return d;
    }
    throw InvalidArgument("unknown base curve");
}

// ---------------------------------------------------------------------------
// The affine-group action on classes.
// ---------------------------------------------------------------------------

// Acts by t -> a t + b.  Over (A^1)^* only the scalings t -> a t apply
// (b must be 0); mu_p-classes there are invariant because scalars are p-th
// powers over the closed field.
inline TorsorClass act_on_class(const TorsorClass& cls, const Fq& a, const Fq& b) {
    if (a.is_zero()) throw InvalidArgument("invalid automorphism: a = 0 does not define t -> a*t + b");
    switch (cls.base().kind) {
        case BaseKind::ProjLine:
        case BaseKind::EllipticBase:
            return cls; // only the trivial class is modelled here
        case BaseKind::AffLine: {
            if (cls.group() == RankOneGroup::MuP) return cls; // zero space
            Poly f = cls.rep().to_poly();
            return TorsorClass::alpha_class(cls.base(), ffpoly::compose_affine(f, a, b));
        }
        case BaseKind::AffLineStar: {
            if (!b.is_zero())
                throw InvalidArgument("invalid automorphism: translations do not preserve (A^1)^*");
            if (cls.group() == RankOneGroup::MuP) return cls;
            return TorsorClass::alpha_class(cls.base(), cls.rep().scale_variable(a));
        }
    }
    throw InvalidArgument("unknown base curve");
}

// The extra flip t -> 1/t on (A^1)^*, exposed separately: it generates the
// finite quotient of Aut((A^1)^*) and never affects infiniteness questions.
inline TorsorClass flip_class(const TorsorClass& cls) {
    if (cls.base().kind != BaseKind::AffLineStar)
        throw InvalidArgument("the inversion flip only acts on (A^1)^*");
    if (cls.group() == RankOneGroup::MuP) {
        int64_t p = cls.ctx()->p();
        return TorsorClass::mu_class(cls.base(), (p - cls.mu_exponent()) % p);
    }
    return TorsorClass::alpha_class(cls.base(), cls.rep().substitute_inverse());
}

// ---------------------------------------------------------------------------
// Stabilizers.
// ---------------------------------------------------------------------------

struct StabilizerVerdict {
    bool infinite = false;
    std::string description;
};

inline StabilizerVerdict stabilizer_is_infinite(const TorsorClass& cls) {
    switch (cls.base().kind) {
        case BaseKind::ProjLine:
            return {true, "the class space is trivial; every automorphism fixes the zero class"};
        case BaseKind::EllipticBase:
            throw UnsupportedError("stabilizers over an elliptic base are handled descriptively");
        case BaseKind::AffLine: {
            if (cls.group() == RankOneGroup::MuP)
                return {true, "the class space is trivial; every affine map fixes the zero class"};
            const LaurentPoly& f = cls.rep();
            if (f.is_zero())
                return {true, "trivial torsor: the full affine group stabilizes it"};
            if (f.max_exp() == 1 && f.min_exp() == 1)
                return {true, "the translations t -> t + b stabilize the class of lambda*t"};
            return {false, "only finitely many affine maps preserve this class"};
        }
        case BaseKind::AffLineStar: {
            if (cls.group() == RankOneGroup::MuP)
                return {true, "every scaling fixes each class t^i: scalars are p-th powers over "
                              "the closed field"};
            if (cls.rep().is_zero())
                return {true, "trivial torsor: the full multiplicative group stabilizes it"};
            return {false, "only finitely many scalings preserve this class"};
        }
    }
    throw InvalidArgument("unknown base curve");
}

// Exhaustive stabilizer over the finite coefficient field: all affine maps
// (a, b) over A^1, all scalings (a, 0) over (A^1)^*.
inline std::vector<std::pair<Fq, Fq>> brute_force_stabilizer(const TorsorClass& cls,
                                                             int64_t cap = 1 << 12) {
    const auto& ctx = cls.ctx();
    const int64_t q = ctx->size();
    if (q > cap) throw ResourceError("field too large for exhaustive stabilizer search");
    if (cls.base().kind != BaseKind::AffLine && cls.base().kind != BaseKind::AffLineStar)
        throw InvalidArgument("the exhaustive stabilizer is defined over the affine bases");

    std::vector<std::pair<Fq, Fq>> stab;
    const bool with_translations = cls.base().kind == BaseKind::AffLine;
    for (int64_t ai = 1; ai < q; ++ai) {
        Fq a = Fq::from_index(ctx, ai);
        if (a.is_zero()) continue;
        int64_t b_range = with_translations ? q : 1;
        for (int64_t bi = 0; bi < b_range; ++bi) {
            Fq b = Fq::from_index(ctx, bi);
            if (act_on_class(cls, a, b) == cls) stab.emplace_back(a, b);
        }
    }
    return stab;
}

// ---------------------------------------------------------------------------
// Explicit torsor equations with smoothness / irreducibility verdicts.
// ---------------------------------------------------------------------------

struct TorsorEquation {
    std::string equation;
    bool smooth = false;
    bool irreducible = false;
    bool split_trivial = false;
};

// X: x^p = f(t) over A^1 or (A^1)^*.  Smooth iff df never vanishes on the
// base: over A^1 that forces f' to be a nonzero constant, over (A^1)^* a
// nonzero monomial.  Irreducible iff the class is nonzero.
inline TorsorEquation torsor_equation(const TorsorClass& cls) {
    const int64_t p = cls.ctx()->p();
    if (cls.base().kind != BaseKind::AffLine && cls.base().kind != BaseKind::AffLineStar)
        throw InvalidArgument("explicit torsor equations are defined over the affine bases");

    TorsorEquation eq;
    eq.equation = "x^" + std::to_string(p) + " - (" + cls.rep_string() + ")";
    if (cls.is_trivial()) {
        eq.split_trivial = true;
        eq.smooth = false;
        eq.irreducible = false;
        return eq;
    }
    if (cls.group() == RankOneGroup::MuP) {
        eq.smooth = true;       // d/dt (t^i) = i t^(i-1) with 0 < i < p never vanishes on t != 0
        eq.irreducible = true;  // gcd(i, p) = 1 automatically
        return eq;
    }
    LaurentPoly df = cls.rep().derivative();
    if (cls.base().kind == BaseKind::AffLine)
        eq.smooth = !df.is_zero() && df.max_exp() == 0;
    else
        eq.smooth = !df.is_zero() && df.min_exp() == df.max_exp();
    eq.irreducible = true;
    return eq;
}

// ---------------------------------------------------------------------------
// Rank-one structure-group reduction.
// ---------------------------------------------------------------------------

struct RankOneReduction {
    bool applicable = false;
    GroupSchemeSpec subgroup;
    std::optional<TorsorClass> reduced;
    bool smooth = false;
    std::string note;
};

// For a rank-p class with infinite stabilizer: the trivial class reduces to
// the identity subgroup, a nonzero class is already smooth and admits no
// proper reduction.  A finite stabilizer falls outside the hypothesis.
inline RankOneReduction reduce_rank_one(const TorsorClass& cls) {
    const int64_t p = cls.ctx()->p();
    if (cls.is_trivial()) {
        return {true, GroupSchemeSpec::trivial(p), TorsorClass::trivial(cls.base(), cls.group()), true,
                "the torsor admits a section and reduces to the trivial torsor under the identity subgroup"};
    }
    auto verdict = stabilizer_is_infinite(cls);
    if (verdict.infinite) {
        GroupSchemeSpec full =
            cls.group() == RankOneGroup::MuP ? GroupSchemeSpec::mu(p) : GroupSchemeSpec::alpha(p);
        return {true, full, cls, true,
                "total space already smooth; a rank-one group admits no proper nontrivial reduction"};
    }
    return {false, GroupSchemeSpec::trivial(p), std::nullopt, false,
            "not applicable: the stabilizer is finite, outside the reduction theorem's hypothesis"};
}

// ---------------------------------------------------------------------------
// Torsion bound from multisections.
// ---------------------------------------------------------------------------

// Each degree-d multisection kills d times the class, so the gcd of the
// degrees annihilates it; a degree-1 multisection is a section.
inline int64_t multisection_torsion_bound(const std::vector<int64_t>& degrees) {
    if (degrees.empty()) throw InvalidArgument("at least one multisection degree is required");
    int64_t g = 0;
    for (int64_t d : degrees) {
        if (d <= 0) throw InvalidArgument("multisection degrees are positive");
        g = std::gcd(g, d);
    }
    return g;
}

// ---------------------------------------------------------------------------
// Classification of pairs (T, G): which groups act freely on which curve with
// infinite commutant.
// ---------------------------------------------------------------------------

struct PairClassification {
    bool accepted = false;
    char case_label = '?'; // 'A'..'D'
    std::string reason;    // the violated embedding condition when rejected
};

inline PairClassification torsor_pair_classify(
    BaseKind t_kind, const GroupSchemeSpec& group,
    const std::optional<elliptic::WeierstrassCurve>& curve = std::nullopt) {
    switch (t_kind) {
        case BaseKind::EllipticBase: {
            std::string why;
            std::optional<bool> ss;
            if (curve) ss = elliptic::is_supersingular(*curve);
            if (groupscheme::embeds_in_elliptic(group, ss, &why)) return {true, 'A', ""};
            return {false, '?', "free actions on an elliptic curve are translations, and " + why};
        }
        case BaseKind::ProjLine:
            if (group.is_trivial()) return {true, 'B', ""};
            return {false, '?',
                    "the projective line carries no nontrivial finite free action with infinite commutant; "
                    "the group must be trivial"};
        case BaseKind::AffLine:
            if (groupscheme::embeds_in_Ga(group)) return {true, 'C', ""};
            return {false, '?',
                    "the group does not embed into G_a (required shape: alpha_{p^n} x (Z/p)^r)"};
        case BaseKind::AffLineStar:
            if (groupscheme::embeds_in_Gm(group)) return {true, 'D', ""};
            return {false, '?',
                    "the group does not embed into G_m (required shape: mu_{p^n} x Z/m with m prime to p)"};
    }
    return {false, '?', "unknown curve kind"};
}

} // namespace fibclass::torsorcoh

#endif
