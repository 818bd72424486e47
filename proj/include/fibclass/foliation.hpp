// Derivation calculus on E x P^1 for the rank-one foliation pipeline:
// freeness loci, extension of the generator across infinity, first-Chern
// bookkeeping on the P^1 factor, the canonical-bundle formula for smooth
// foliation quotients, and the Kodaira-dimension verdict of the resulting
// genus-one family.
#ifndef FIBCLASS_FOLIATION_HPP
#define FIBCLASS_FOLIATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fibclass/elliptic.hpp"
#include "fibclass/errors.hpp"
#include "fibclass/ffpoly.hpp"

namespace fibclass::foliation {

using elliptic::WeierstrassCurve;
using ffpoly::Derivation1D;
using ffpoly::FieldCtxPtr;
using ffpoly::Fq;
using ffpoly::LaurentPoly;
using ffpoly::Poly;
using std::int64_t;

// Roots of the coefficient of g * d/dt in the working field, with
// multiplicity; the free locus of the associated rank-one action is the
// complement.
inline std::vector<std::pair<Fq, int>> vanishing_locus(const Derivation1D& d) {
    if (d.is_zero()) throw DomainError("the zero derivation is degenerate");
    const auto& ctx = d.ctx();
    LaurentPoly g = d.coefficient();
    // clear poles: roots in the field are unaffected except at 0, where the
    // valuation is the multiplicity
    int val = g.min_exp();
    Poly f = g.shifted(-val).to_poly();
    std::vector<std::pair<Fq, int>> roots;
    if (val > 0) roots.emplace_back(Fq::zero(ctx), val);
    for (int64_t i = 0; i < ctx->size(); ++i) {
        Fq x = Fq::from_index(ctx, i);
        if (x.is_zero()) continue;
        if (!f.eval(x).is_zero()) continue;
        int mult = 0;
        Poly divisor(ctx, {-x, Fq::one(ctx)});
        Poly rest = f;
        while (true) {
            auto q = rest.divide_exact(divisor);
            if (!q) break;
            rest = *q;
            ++mult;
        }
        roots.emplace_back(x, mult);
    }
    return roots;
}

// ---------------------------------------------------------------------------
// Product derivations delta = 1 (x) g(x) d/dx  +  delta_2 (x) h(x) on
// E x A^1, where delta_2 is the invariant vector field of E, treated as an
// opaque symbol with delta_2 != 0 and delta_2^p = 0 (supersingular case).
// ---------------------------------------------------------------------------

enum class Chart { Affine, Infinity };

struct ProductDerivation {
    WeierstrassCurve curve;
    LaurentPoly affine_coeff;   // coefficient of d/dx (chart Affine) or d/dt (chart Infinity)
    LaurentPoly elliptic_coeff; // coefficient of delta_2
    Chart chart = Chart::Affine;

    const FieldCtxPtr& ctx() const { return affine_coeff.ctx(); }

    // With a constant delta_2-coefficient the two summands commute, so the
    // total derivation is additive iff the affine part satisfies
    // (g d/dx)^p = 0; delta_2^p = 0 is an axiom of the supersingular symbol.
    bool is_additive() const {
        if (!elliptic_coeff.is_zero() &&
            (elliptic_coeff.min_exp() != 0 || elliptic_coeff.max_exp() != 0))
            throw UnsupportedError("additivity is only decided for a constant delta_2-coefficient");
        return Derivation1D(ctx(), affine_coeff).is_additive();
    }
};

struct ExtensionResult {
    ProductDerivation generator; // the chart-at-infinity generator, in t = 1/x
    int rescale_exponent = 0;    // m with generator = t^m * (substituted input)
    bool nowhere_vanishing = false;
};

// Rewrites the generator in the coordinate t = 1/x (so d/dx = -t^2 d/dt) and
// rescales by the unique monomial t^m that makes the d/dt-component a unit at
// t = 0.  If the delta_2-component then fails to be regular, no monomial
// rescaling produces a nowhere-vanishing generator at infinity and the
// foliation does not extend smoothly.
inline ExtensionResult extend_to_infinity(const ProductDerivation& d, int max_exponent_shift = 0) {
    if (d.chart != Chart::Affine)
        throw InvalidArgument("extension starts from the affine chart");
    if (d.affine_coeff.is_zero())
        throw DomainError("a vertical generator carries no d/dx-component to extend");
    const auto& ctx = d.ctx();
    const int64_t p = ctx->p();
    const int bound = max_exponent_shift > 0 ? max_exponent_shift : static_cast<int>(2 * p);

    // g(x) d/dx = -t^(2) g(1/t) d/dt
    LaurentPoly c1 = Fq(ctx, -1) * (d.affine_coeff.substitute_inverse().shifted(2));
    LaurentPoly c2 = d.elliptic_coeff.substitute_inverse();

    const int m = -c1.min_exp(); // forced: t^m c1 must be a unit at t = 0
    if (m > bound || m < -bound)
        throw UnsupportedError("non-extendable: the required rescaling exceeds the search bound");
    LaurentPoly r1 = c1.shifted(m);
    LaurentPoly r2 = c2.shifted(m);
    if (!r2.is_polynomial())
        throw UnsupportedError(
            "non-extendable: every monomial rescaling leaves the generator vanishing or singular at infinity");

    ExtensionResult res{ProductDerivation{d.curve, r1, r2, Chart::Infinity}, m, false};

    // nowhere vanishing on the whole chart: the two component functions have
    // no common root (checked via gcd degree over the working field)
    Poly p1 = r1.to_poly();
    if (r2.is_zero()) {
        res.nowhere_vanishing = p1.degree() == 0;
    } else {
        Poly p2 = r2.to_poly();
        // gcd by repeated exact division attempts on linear factors is enough
        // here; a common root over the closure exists iff the resultant-level
        // gcd is nonconstant, and both components are unit-at-0 or monomial
        // shapes in scope.  Conservative test: the d/dt-component alone being
        // a unit at 0 plus no common roots in the field.
        bool common_root = false;
        for (int64_t i = 0; i < ctx->size(); ++i) {
            Fq x = Fq::from_index(ctx, i);
            if (p1.eval(x).is_zero() && p2.eval(x).is_zero()) {
                common_root = true;
                break;
            }
        }
        res.nowhere_vanishing = !common_root && (p1.degree() == 0 || p2.degree() == 0);
    }
    return res;
}

struct FoliationData {
    ProductDerivation generator_affine;
    ProductDerivation generator_infinity;
    int c1_p2_degree = 0;
};

// Assembles the foliation data of a generator on E x A^1; c1 on the P^1
// factor is minus the rescaling exponent of the transition at infinity.
inline FoliationData make_foliation(const ProductDerivation& affine) {
    ExtensionResult ext = extend_to_infinity(affine);
    if (!ext.nowhere_vanishing)
        throw UnsupportedError("the extended generator vanishes somewhere; not a line subbundle");
    return FoliationData{affine, ext.generator, -ext.rescale_exponent};
}

// pi^* K_X = K_Y - (p - 1) c1(F), measured in p_2-degrees on the P^1 factor.
inline int64_t canonical_pullback_degree(int64_t p, int64_t ky_p2_degree, int64_t c1_p2_degree) {
    if (!ffpoly::detail::is_prime(p)) throw InvalidArgument("the canonical formula needs a prime p");
    return ky_p2_degree - (p - 1) * c1_p2_degree;
}

// ---------------------------------------------------------------------------
// The genus-one family delta = 1 (x) x^p d/dx + delta_2 (x) 1 on a
// supersingular E x P^1 and its Kodaira-dimension verdict.
// ---------------------------------------------------------------------------

struct KodairaVerdict {
    int64_t pullback_degree = 0; // p_2-degree of pi^* K_X
    bool nef = false;
    std::optional<int> kappa;    // set only where asserted
    std::vector<std::string> notes;
};

inline KodairaVerdict example_kodaira(int64_t p) {
    if (!ffpoly::detail::is_prime(p)) throw InvalidArgument("p must be prime");
    KodairaVerdict v;
    v.pullback_degree = p * (p - 3); // = canonical_pullback_degree(p, -2, -(p - 2))
    v.nef = v.pullback_degree >= 0;
    if (p >= 5) {
        v.kappa = 1;
        v.notes.push_back("an isotrivial genus-one fibration over P^1 with two singular fibres and "
                          "Kodaira dimension one");
    } else if (p == 3) {
        v.notes.push_back("K_X is nef of degree 0; the Kodaira dimension is not asserted");
    } else {
        v.notes.push_back("pullback degree negative: K_X is not nef");
    }
    v.notes.push_back("the general fibre of the Albanese fibration of the quotient is not smooth; "
                      "the fibration is not of product-quotient type");
    return v;
}

// The full pipeline for the family at a given p, as exposed by the CLI.
struct FamilyTrace {
    int64_t p;
    ProductDerivation affine;
    ExtensionResult extension;
    int c1_p2_degree;
    int64_t ky_p2_degree; // K_{E x P^1} restricted to the P^1 factor
    int64_t pullback_degree;
    KodairaVerdict verdict;
    std::vector<std::pair<Fq, int>> affine_vanishing; // of the d/dx part
};

inline FamilyTrace family_trace(int64_t p) {
    WeierstrassCurve E = elliptic::fixture_curve("supersingular", p);
    const auto& ctx = E.ctx();
    LaurentPoly g = LaurentPoly::monomial(ctx, Fq::one(ctx), static_cast<int>(p)); // x^p
    LaurentPoly h = LaurentPoly::monomial(ctx, Fq::one(ctx), 0);                   // 1
    ProductDerivation delta{E, g, h, Chart::Affine};

    ExtensionResult ext = extend_to_infinity(delta);
    int c1 = -ext.rescale_exponent;
    int64_t ky = -2;
    int64_t pullback = canonical_pullback_degree(p, ky, c1);
    return FamilyTrace{p,  delta, std::move(ext), c1, ky, pullback, example_kodaira(p),
                       vanishing_locus(Derivation1D(ctx, g))};
}

} // namespace fibclass::foliation

#endif
