// Decision procedures for relatively minimal isotrivial surface fibrations
// with infinite equivariant automorphism group: datum validation, the
// four-case classification for fibre genus >= 2, the seven-case genus-one
// classification with Kodaira fibre symbols, the base-genus rule for the
// Kodaira dimension, and the relative-automorphism-group criterion.
#ifndef FIBCLASS_CLASSIFIER_HPP
#define FIBCLASS_CLASSIFIER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fibclass/elliptic.hpp"
#include "fibclass/errors.hpp"
#include "fibclass/groupscheme.hpp"
#include "fibclass/torsorcoh.hpp"

namespace fibclass::classifier {

using elliptic::JClass;
using elliptic::WeierstrassCurve;
using groupscheme::AtomKind;
using groupscheme::Diagnostics;
using groupscheme::ElementarySubgroup;
using groupscheme::GroupSchemeSpec;
using std::int64_t;

// ---------------------------------------------------------------------------
// Kodaira fibre types.
// ---------------------------------------------------------------------------

struct KodairaType {
    enum class Symbol { In, InStar, II, IIStar, III, IIIStar, IV, IVStar };
    Symbol symbol = Symbol::In;
    int n = 0; // only for I_n / I_n*

    std::string to_string() const {
        switch (symbol) {
            case Symbol::In: return "I" + std::to_string(n);
            case Symbol::InStar: return "I" + std::to_string(n) + "*";
            case Symbol::II: return "II";
            case Symbol::IIStar: return "II*";
            case Symbol::III: return "III";
            case Symbol::IIIStar: return "III*";
            case Symbol::IV: return "IV";
            case Symbol::IVStar: return "IV*";
        }
        return "?";
    }
    friend bool operator==(const KodairaType& a, const KodairaType& b) {
        return a.symbol == b.symbol && a.n == b.n;
    }
};

struct SingularFibre {
    std::string location;              // "0" or "infinity"
    std::optional<KodairaType> type;   // absent for fibre genus >= 2
    int64_t multiplicity = 1;

    // "5I0", "2II*", "I0*", or "mult 3" when no Kodaira symbol applies
    std::string symbol() const {
        std::string base = type ? type->to_string() : "fibre";
        if (multiplicity > 1) return std::to_string(multiplicity) + base;
        return base;
    }
};

enum class Kappa { MinusInfinity, Zero, One, Two, Unasserted };

inline std::string to_string(Kappa k) {
    switch (k) {
        case Kappa::MinusInfinity: return "-inf";
        case Kappa::Zero: return "0";
        case Kappa::One: return "1";
        case Kappa::Two: return "2";
        case Kappa::Unasserted: return "unasserted";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Input data.
// ---------------------------------------------------------------------------

enum class BaseKind {
    Elliptic,        // base an elliptic curve, torsor curve elliptic
    P1FromA1,        // base P^1 compactifying A^1 / (additive group)
    P1FromA1Star,    // base P^1 compactifying (A^1)^* / (multiplicative group)
    P1Trivial,       // base P^1, trivial torsor
    EllipticQuotient, // synonym accepted on input, normalized to Elliptic
    GenusTwoPlus     // declared base of genus >= 2 (always rejected)
};

inline std::string to_string(BaseKind k) {
    switch (k) {
        case BaseKind::Elliptic: return "elliptic";
        case BaseKind::P1FromA1: return "P1-from-A1";
        case BaseKind::P1FromA1Star: return "P1-from-A1star";
        case BaseKind::P1Trivial: return "P1-trivial";
        case BaseKind::EllipticQuotient: return "elliptic-quotient";
        case BaseKind::GenusTwoPlus: return "genus-ge-2";
    }
    return "?";
}

inline std::optional<BaseKind> parse_base_kind(const std::string& s) {
    if (s == "elliptic") return BaseKind::Elliptic;
    if (s == "P1-from-A1") return BaseKind::P1FromA1;
    if (s == "P1-from-A1star" || s == "P1-from-A1*") return BaseKind::P1FromA1Star;
    if (s == "P1-trivial") return BaseKind::P1Trivial;
    if (s == "elliptic-quotient") return BaseKind::EllipticQuotient;
    if (s == "genus-ge-2" || s == "genus-2") return BaseKind::GenusTwoPlus;
    return std::nullopt;
}

enum class ActionKind { Translation, Additive, Multiplicative, GroupAutomorphism };

inline std::string to_string(ActionKind k) {
    switch (k) {
        case ActionKind::Translation: return "translation";
        case ActionKind::Additive: return "additive";
        case ActionKind::Multiplicative: return "multiplicative";
        case ActionKind::GroupAutomorphism: return "group-automorphism";
    }
    return "?";
}

inline std::optional<ActionKind> parse_action_kind(const std::string& s) {
    if (s == "translation") return ActionKind::Translation;
    if (s == "additive") return ActionKind::Additive;
    if (s == "multiplicative") return ActionKind::Multiplicative;
    if (s == "group-automorphism") return ActionKind::GroupAutomorphism;
    return std::nullopt;
}

struct HighGenusFibre {
    int genus = 2;          // g(F) >= 2
    int quotient_genus = 0; // g(F / Gamma)
    bool action_free = false;
};

struct FibrationDatum {
    int fibre_genus = 1;
    BaseKind base_kind = BaseKind::P1Trivial;
    ActionKind action_kind = ActionKind::Translation;
    std::optional<HighGenusFibre> high_genus;        // fibre data for g >= 2
    std::optional<ElementarySubgroup> elem_group;    // group data for g = 1 (fibre curve inside)
    std::optional<GroupSchemeSpec> plain_group;      // group data for g >= 2

    bool base_is_elliptic() const {
        return base_kind == BaseKind::Elliptic || base_kind == BaseKind::EllipticQuotient;
    }
};

// ---------------------------------------------------------------------------
// Output data.
// ---------------------------------------------------------------------------

struct ClassificationResult {
    std::string case_label; // "A".."D" or "A-i".."D-ii"
    int base_genus = 0;
    std::vector<SingularFibre> singular_fibres;
    Kappa kappa = Kappa::Unasserted;
    std::optional<int64_t> q; // irregularity where asserted
    bool minimal = false;
    std::vector<std::string> notes;
};

struct Rejection {
    std::string violated_hypothesis;
    Diagnostics diagnostics;
};

using ClassifyOutcome = std::variant<ClassificationResult, Rejection>;

inline bool accepted(const ClassifyOutcome& o) {
    return std::holds_alternative<ClassificationResult>(o);
}
inline const ClassificationResult& result_of(const ClassifyOutcome& o) {
    return std::get<ClassificationResult>(o);
}
inline const Rejection& rejection_of(const ClassifyOutcome& o) {
    return std::get<Rejection>(o);
}

// ---------------------------------------------------------------------------
// Small theorem-level helpers.
// ---------------------------------------------------------------------------

// kappa(X) from the base genus: 0 for an elliptic base, -infinity for a
// rational one.  A base of genus >= 2 has finite automorphism group and
// falls outside the classification.
inline Kappa kappa_from_base(int base_genus) {
    if (base_genus == 1) return Kappa::Zero;
    if (base_genus == 0) return Kappa::MinusInfinity;
    throw DomainError("outside the theorem: a base of genus >= 2 has finite automorphism group");
}

enum class JacobianSections { Trivial, InfinitelyMany, FinitelyMany };
enum class RelAutVerdict { Finite, Infinite, InfinitelyGenerated };

inline std::string to_string(RelAutVerdict v) {
    switch (v) {
        case RelAutVerdict::Finite: return "finite";
        case RelAutVerdict::Infinite: return "infinite";
        case RelAutVerdict::InfinitelyGenerated: return "infinitely_generated";
    }
    return "?";
}

// Aut_C(X) is infinite iff g = 1 and the Jacobian fibration has infinitely
// many sections, and infinitely generated iff the Jacobian is trivial.
inline RelAutVerdict relative_aut_verdict(int fibre_genus, JacobianSections jac) {
    if (fibre_genus < 1) throw InvalidArgument("fibre genus must be >= 1");
    if (fibre_genus >= 2) return RelAutVerdict::Finite;
    switch (jac) {
        case JacobianSections::Trivial: return RelAutVerdict::InfinitelyGenerated;
        case JacobianSections::InfinitelyMany: return RelAutVerdict::Infinite;
        case JacobianSections::FinitelyMany: return RelAutVerdict::Finite;
    }
    return RelAutVerdict::Finite;
}

// ---------------------------------------------------------------------------
// Datum validation (diagnostics, never throws).
// ---------------------------------------------------------------------------

inline Diagnostics validate_datum(const FibrationDatum& d) {
    Diagnostics diag;

    bool genus_ok = d.fibre_genus >= 1;
    diag.add("fibre-genus", genus_ok, genus_ok ? "" : "fibre genus must be >= 1");
    if (!genus_ok) return diag;

    bool base_ok = d.base_kind != BaseKind::GenusTwoPlus;
    diag.add("base-genus", base_ok,
             base_ok ? "" : "a base of genus >= 2 has finite automorphism group; the equivariant "
                            "group cannot be infinite");

    if (d.fibre_genus >= 2) {
        bool data_ok = d.high_genus.has_value() && d.plain_group.has_value() &&
                       d.high_genus->genus == d.fibre_genus && d.high_genus->genus >= 2;
        diag.add("fibre-data", data_ok, data_ok ? "" : "genus >= 2 requires fibre data and a plain group");
        if (!data_ok || !base_ok) return diag;

        const GroupSchemeSpec& G = *d.plain_group;
        bool etale = G.connected_part().is_trivial();
        diag.add("automorphisms-etale", etale,
                 etale ? "" : "the automorphism group scheme of a curve of genus >= 2 is finite etale; "
                              "infinitesimal factors cannot act");

        if (d.high_genus->action_free) {
            int64_t lhs = 2 * d.high_genus->genus - 2;
            int64_t rhs = G.total_order() * (2 * d.high_genus->quotient_genus - 2);
            bool rh = lhs == rhs;
            diag.add("riemann-hurwitz", rh,
                     rh ? "" : "a free action must satisfy 2g - 2 = |G| (2g' - 2); got " +
                                std::to_string(lhs) + " vs " + std::to_string(rhs));
        }

        std::string why;
        bool embed_ok = true;
        switch (d.action_kind) {
            case ActionKind::Translation:
                embed_ok = d.base_is_elliptic() && groupscheme::embeds_in_elliptic(G, std::nullopt, &why);
                if (!d.base_is_elliptic()) why = "translation actions live on an elliptic torsor curve";
                break;
            case ActionKind::Additive:
                embed_ok = d.base_kind == BaseKind::P1FromA1 && groupscheme::embeds_in_Ga(G);
                if (embed_ok == false && d.base_kind == BaseKind::P1FromA1)
                    why = "an additive action requires a subgroup of G_a: alpha-type and (Z/p)^r factors only";
                else if (!embed_ok)
                    why = "additive actions live on the affine line";
                break;
            case ActionKind::Multiplicative:
                embed_ok = d.base_kind == BaseKind::P1FromA1Star && groupscheme::embeds_in_Gm(G);
                if (embed_ok == false && d.base_kind == BaseKind::P1FromA1Star)
                    why = "a multiplicative action requires a subgroup of G_m: cyclic prime-to-p";
                else if (!embed_ok)
                    why = "multiplicative actions live on the punctured affine line";
                break;
            case ActionKind::GroupAutomorphism:
                embed_ok = false;
                why = "a free action of the structure group on the torsor curve must be by "
                      "translations / linear maps, not group automorphisms";
                break;
        }
        if (d.base_kind == BaseKind::P1Trivial) {
            embed_ok = G.is_trivial();
            why = embed_ok ? "" : "the trivial-torsor case requires the trivial group";
        }
        diag.add("embeddability", embed_ok, why);
        return diag;
    }

    // genus one
    bool data_ok = d.elem_group.has_value();
    diag.add("fibre-data", data_ok, data_ok ? "" : "genus one requires an elliptic fibre with an "
                                                   "elementary subgroup of its automorphism group scheme");
    if (!data_ok || !base_ok) return diag;

    const ElementarySubgroup& sub = *d.elem_group;
    const WeierstrassCurve& E = sub.curve;
    const bool ss = elliptic::is_supersingular(E);

    bool alpha_ok = !(!ss && (sub.translation_part.has_kind(AtomKind::Alpha) ||
                              sub.translation_part.has_kind(AtomKind::SSKernel)));
    diag.add("ordinary-alpha-exclusion", alpha_ok,
             alpha_ok ? "" : "an ordinary elliptic curve does not contain alpha_p as a subgroup scheme");
    if (!alpha_ok) return diag;

    bool mu_ok = !(ss && sub.translation_part.has_kind(AtomKind::Mu));
    diag.add("frobenius-kernel-normalization", mu_ok,
             mu_ok ? "" : "the Frobenius kernel of a supersingular curve is alpha_p, not mu_p; "
                          "mu-type kernels require an ordinary curve");
    if (!mu_ok) return diag;

    Diagnostics elem = groupscheme::validate_elementary(sub);
    for (auto& c : elem.checks) diag.checks.push_back(c);
    if (!elem.ok()) return diag;

    const GroupSchemeSpec lambda = groupscheme::normalized_spec(sub);

    std::string why;
    bool embed_ok = true;
    switch (d.action_kind) {
        case ActionKind::Translation:
            embed_ok = d.base_is_elliptic() && groupscheme::embeds_in_elliptic(lambda, std::nullopt, &why);
            if (!d.base_is_elliptic()) why = "translation actions live on an elliptic torsor curve";
            break;
        case ActionKind::Additive:
            embed_ok = d.base_kind == BaseKind::P1FromA1 && groupscheme::embeds_in_Ga(lambda);
            if (!embed_ok)
                why = d.base_kind == BaseKind::P1FromA1
                          ? "the group does not embed into G_a (alpha-type and (Z/p)^r factors only)"
                          : "additive actions live on the affine line";
            break;
        case ActionKind::Multiplicative:
            embed_ok = d.base_kind == BaseKind::P1FromA1Star && groupscheme::embeds_in_Gm(lambda);
            if (!embed_ok)
                why = d.base_kind == BaseKind::P1FromA1Star
                          ? "the group does not embed into G_m (mu-type times cyclic prime-to-p)"
                          : "multiplicative actions live on the punctured affine line";
            break;
        case ActionKind::GroupAutomorphism:
            embed_ok = false;
            why = "the group must act freely on the torsor curve; group automorphisms have fixed points";
            break;
    }
    if (d.base_kind == BaseKind::P1Trivial) {
        embed_ok = lambda.is_trivial();
        why = embed_ok ? "" : "the trivial-torsor case requires the trivial group";
    }
    diag.add("embeddability", embed_ok, why);
    return diag;
}

// ---------------------------------------------------------------------------
// Classification, fibre genus >= 2.
// ---------------------------------------------------------------------------

inline ClassifyOutcome classify_high_genus(const FibrationDatum& d) {
    if (d.fibre_genus < 2) throw InvalidArgument("classify_high_genus expects fibre genus >= 2");
    Diagnostics diag = validate_datum(d);
    if (!diag.ok())
        return Rejection{diag.first_failure()->name + ": " + diag.first_failure()->message, diag};

    const GroupSchemeSpec& G = *d.plain_group;
    const HighGenusFibre& F = *d.high_genus;
    ClassificationResult r;

    if (d.base_is_elliptic() && d.action_kind == ActionKind::Translation) {
        r.case_label = "A";
        r.base_genus = 1;
        r.kappa = Kappa::One;
        r.minimal = true;
        r.notes.push_back("smooth isotrivial fibration over an elliptic base");
        return r;
    }
    if (d.base_kind == BaseKind::P1Trivial) {
        r.case_label = "B";
        r.base_genus = 0;
        r.kappa = Kappa::MinusInfinity;
        r.minimal = true;
        r.notes.push_back("trivial product fibration over P^1");
        return r;
    }
    if (d.base_kind == BaseKind::P1FromA1) {
        if (G.is_trivial())
            return Rejection{"embeddability: the additive case requires a nontrivial group "
                             "(otherwise the fibration is the trivial product)",
                             diag};
        r.case_label = "C";
        r.base_genus = 0;
        r.kappa = Kappa::MinusInfinity;
        r.q = F.quotient_genus;
        r.minimal = F.action_free;
        r.singular_fibres.push_back({"infinity", std::nullopt, G.total_order()});
        r.notes.push_back("unique singular fibre over the wildly ramified point at infinity");
        if (!F.action_free)
            r.notes.push_back("vertical (-1)-curves appear over the ramification of the fibre action");
        return r;
    }
    if (d.base_kind == BaseKind::P1FromA1Star) {
        if (G.is_trivial() || G.total_order() == 1)
            return Rejection{"embeddability: the multiplicative case requires a nontrivial cyclic group",
                             diag};
        r.case_label = "D";
        r.base_genus = 0;
        r.kappa = Kappa::MinusInfinity;
        r.q = F.quotient_genus;
        r.minimal = F.action_free;
        r.singular_fibres.push_back({"0", std::nullopt, G.total_order()});
        r.singular_fibres.push_back({"infinity", std::nullopt, G.total_order()});
        r.notes.push_back("two singular fibres over the fixed points 0 and infinity");
        if (!F.action_free)
            r.notes.push_back("vertical (-1)-curves appear over the ramification of the fibre action");
        return r;
    }
    return Rejection{"embeddability: base kind incompatible with the declared action", diag};
}

// ---------------------------------------------------------------------------
// Classification, fibre genus one.
// ---------------------------------------------------------------------------

namespace detail {

inline SingularFibre i0_fibre(const std::string& loc, int64_t mult) {
    return {loc, KodairaType{KodairaType::Symbol::In, 0}, mult};
}

} // namespace detail

inline ClassifyOutcome classify_genus_one(const FibrationDatum& d) {
    if (d.fibre_genus >= 2) throw InvalidArgument("classify_genus_one expects fibre genus one");
    Diagnostics diag = validate_datum(d);
    if (!diag.ok())
        return Rejection{diag.first_failure()->name + ": " + diag.first_failure()->message, diag};

    const ElementarySubgroup& sub = *d.elem_group;
    const WeierstrassCurve& E = sub.curve;
    const int64_t p = E.ctx()->p();
    const bool ss = elliptic::is_supersingular(E);
    const GroupSchemeSpec& lt = sub.translation_part;
    const int64_t gamma = sub.graded_part.total_order();

    ClassificationResult r;

    if (d.base_is_elliptic()) {
        r.base_genus = 1;
        r.kappa = Kappa::Zero;
        r.minimal = true;
        if (gamma == 1) {
            r.case_label = "A-i";
            r.notes.push_back("Abelian surface; the fibration is a surjective homomorphism with "
                              "smooth connected kernel");
        } else {
            r.case_label = "A-ii";
            r.notes.push_back("hyperelliptic (bielliptic) surface; the Bagnera-de Franchis sub-list "
                              "is not enumerated here");
        }
        return r;
    }

    if (d.base_kind == BaseKind::P1Trivial) {
        r.case_label = "B";
        r.base_genus = 0;
        r.kappa = Kappa::MinusInfinity;
        r.minimal = true;
        r.notes.push_back("trivial product E x P^1 over P^1");
        return r;
    }

    if (d.base_kind == BaseKind::P1FromA1) {
        r.base_genus = 0;
        r.kappa = Kappa::MinusInfinity;
        if (gamma == 1) {
            // C-i: the translation part is E[p](k) (ordinary) or Ker F (supersingular)
            bool legal = !lt.is_trivial() &&
                         (ss ? lt == GroupSchemeSpec::alpha(p)
                             : lt == GroupSchemeSpec::etale(p, p));
            if (!legal)
                return Rejection{
                    "case C-i table: over A^1 the translation part must be E[p](k) = Z/p for an "
                    "ordinary curve or the Frobenius kernel alpha_p for a supersingular one",
                    diag};
            r.case_label = "C-i";
            r.minimal = true;
            r.singular_fibres.push_back(detail::i0_fibre("infinity", p));
            r.notes.push_back(ss ? "translation part: the Frobenius kernel alpha_p of a supersingular curve"
                                 : "translation part: the etale p-torsion of an ordinary curve");
            return r;
        }
        // C-ii: Gamma of order p on the j = 0 curve in characteristic 2 or 3
        bool curve_ok = (p == 2 || p == 3) && E.j_invariant().is_zero() && gamma == p;
        if (!curve_ok)
            return Rejection{
                "case C-ii table: an order-p automorphism acting additively exists only for the "
                "j = 0 curves in characteristic 2 and 3",
                diag};
        r.case_label = "C-ii";
        r.minimal = false;
        if (lt.is_trivial()) {
            r.singular_fibres.push_back({"infinity", KodairaType{KodairaType::Symbol::IIStar, 0}, 1});
            r.notes.push_back("the fibration coincides with its Jacobian fibration; fibre II* at infinity");
        } else {
            r.singular_fibres.push_back({"infinity", KodairaType{KodairaType::Symbol::IIStar, 0}, p});
            r.notes.push_back("multiple fibre pII* at infinity; wild multiplicity from the "
                              "infinitesimal translation part");
        }
        return r;
    }

    if (d.base_kind == BaseKind::P1FromA1Star) {
        r.base_genus = 0;
        r.kappa = Kappa::MinusInfinity;
        if (gamma == 1) {
            if (lt.is_trivial())
                return Rejection{"embeddability: the multiplicative case requires a nontrivial group",
                                 diag};
            r.case_label = "D-i";
            r.minimal = true;
            int64_t n = lt.total_order(); // dim_k of the coordinate ring of Lambda
            r.singular_fibres.push_back(detail::i0_fibre("0", n));
            r.singular_fibres.push_back(detail::i0_fibre("infinity", n));
            if (lt.has_kind(AtomKind::Mu))
                r.notes.push_back("multiplicative Frobenius-kernel component mu_{p^k} of an ordinary curve");
            return r;
        }
        // D-ii: Lambda_t = 0 and Gamma a catalogued prime-to-p cyclic group
        if (!lt.is_trivial())
            return Rejection{
                "case D-ii table: no subgroup with both a translation part and a nontrivial "
                "automorphism part embeds into G_m",
                diag};
        r.case_label = "D-ii";
        r.minimal = false;
        auto push_pair = [&](KodairaType a, KodairaType b) {
            r.singular_fibres.push_back({"0", a, 1});
            r.singular_fibres.push_back({"infinity", b, 1});
        };
        using S = KodairaType::Symbol;
        if (gamma == 2) {
            push_pair({S::InStar, 0}, {S::InStar, 0});
        } else if (gamma == 3) {
            push_pair({S::IV, 0}, {S::IVStar, 0});
            r.notes.push_back("the orientation of the pair (IV, IV*) over {0, infinity} is not determined");
        } else if (gamma == 4) {
            push_pair({S::III, 0}, {S::IIIStar, 0});
            r.notes.push_back("the orientation of the pair (III, III*) over {0, infinity} is not determined");
        } else {
            return Rejection{
                "case D-ii table: the catalogued automorphism orders acting multiplicatively are "
                "2, 3 and 4",
                diag};
        }
        return r;
    }

    return Rejection{"embeddability: base kind incompatible with the declared action", diag};
}

inline ClassifyOutcome classify(const FibrationDatum& d) {
    if (d.fibre_genus >= 2) return classify_high_genus(d);
    return classify_genus_one(d);
}

} // namespace fibclass::classifier

#endif
