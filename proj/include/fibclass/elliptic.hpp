// Weierstrass curves over F_{p^k}: j-invariant, exhaustive point counts,
// supersingularity (Hasse-invariant criterion cross-checked against the
// point-count trace), and the catalogue of group-automorphism groups with
// explicit generators.
#ifndef FIBCLASS_ELLIPTIC_HPP
#define FIBCLASS_ELLIPTIC_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fibclass/errors.hpp"
#include "fibclass/ffpoly.hpp"

namespace fibclass::elliptic {

using ffpoly::FieldCtx;
using ffpoly::FieldCtxPtr;
using ffpoly::Fq;
using ffpoly::Poly;

enum class JClass { Generic, J1728, J0 };

inline std::string to_string(JClass jc) {
    switch (jc) {
        case JClass::Generic: return "generic";
        case JClass::J1728: return "1728";
        case JClass::J0: return "0";
    }
    return "?";
}

namespace detail {

// Small dense bivariate polynomial in (x, y); only used to check that a
// substitution preserves a curve equation identically.
class BiPoly {
public:
    BiPoly(FieldCtxPtr ctx, int dx, int dy)
        : ctx_(std::move(ctx)),
          c_(static_cast<size_t>(dx + 1), std::vector<Fq>(static_cast<size_t>(dy + 1), Fq::zero(ctx_))) {}

    static BiPoly constant(const FieldCtxPtr& ctx, const Fq& v) {
        BiPoly r(ctx, 0, 0);
        r.c_[0][0] = v;
        return r;
    }
    static BiPoly term(const FieldCtxPtr& ctx, const Fq& v, int i, int j) {
        BiPoly r(ctx, i, j);
        r.c_[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
        return r;
    }

    Fq coeff(int i, int j) const {
        if (i < 0 || j < 0 || i >= static_cast<int>(c_.size()) ||
            j >= static_cast<int>(c_[0].size()))
            return Fq::zero(ctx_);
        return c_[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly r(a.ctx_, std::max(a.dx(), b.dx()), std::max(a.dy(), b.dy()));
        for (int i = 0; i <= r.dx(); ++i)
            for (int j = 0; j <= r.dy(); ++j)
                r.c_[static_cast<size_t>(i)][static_cast<size_t>(j)] = a.coeff(i, j) + b.coeff(i, j);
        return r;
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
        return a + (Fq(a.ctx_, -1) * b);
    }
    friend BiPoly operator*(const Fq& s, const BiPoly& a) {
        BiPoly r = a;
        for (auto& row : r.c_)
            for (auto& v : row) v = s * v;
        return r;
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r(a.ctx_, a.dx() + b.dx(), a.dy() + b.dy());
        for (int i = 0; i <= a.dx(); ++i)
            for (int j = 0; j <= a.dy(); ++j) {
                if (a.coeff(i, j).is_zero()) continue;
                for (int u = 0; u <= b.dx(); ++u)
                    for (int v = 0; v <= b.dy(); ++v)
                        r.c_[static_cast<size_t>(i + u)][static_cast<size_t>(j + v)] =
                            r.coeff(i + u, j + v) + a.coeff(i, j) * b.coeff(u, v);
            }
        return r;
    }
    friend bool operator==(const BiPoly& a, const BiPoly& b) {
        int dx = std::max(a.dx(), b.dx()), dy = std::max(a.dy(), b.dy());
        for (int i = 0; i <= dx; ++i)
            for (int j = 0; j <= dy; ++j)
                if (a.coeff(i, j) != b.coeff(i, j)) return false;
        return true;
    }

    int dx() const { return static_cast<int>(c_.size()) - 1; }
    int dy() const { return static_cast<int>(c_[0].size()) - 1; }

private:
    FieldCtxPtr ctx_;
    std::vector<std::vector<Fq>> c_;
};

} // namespace detail

// ---------------------------------------------------------------------------
// WeierstrassCurve: y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6.
// ---------------------------------------------------------------------------

class WeierstrassCurve {
public:
    WeierstrassCurve(FieldCtxPtr ctx, Fq a1, Fq a2, Fq a3, Fq a4, Fq a6)
        : ctx_(std::move(ctx)), a1_(std::move(a1)), a2_(std::move(a2)),
          a3_(std::move(a3)), a4_(std::move(a4)), a6_(std::move(a6)) {
        if (discriminant().is_zero())
            throw DomainError("degenerate curve: the Weierstrass equation is singular");
    }

    static WeierstrassCurve from_short(const FieldCtxPtr& ctx, const Fq& a, const Fq& b) {
        Fq z = Fq::zero(ctx);
        return WeierstrassCurve(ctx, z, z, z, a, b);
    }
    static WeierstrassCurve from_ints(const FieldCtxPtr& ctx, int64_t a1, int64_t a2,
                                      int64_t a3, int64_t a4, int64_t a6) {
        return WeierstrassCurve(ctx, Fq(ctx, a1), Fq(ctx, a2), Fq(ctx, a3), Fq(ctx, a4), Fq(ctx, a6));
    }

    // Textual coefficient format: "p=3; k=1; a=[0,0,0,-1,0]".
    static WeierstrassCurve parse(const std::string& text);

    const FieldCtxPtr& ctx() const { return ctx_; }
    const Fq& a1() const { return a1_; }
    const Fq& a2() const { return a2_; }
    const Fq& a3() const { return a3_; }
    const Fq& a4() const { return a4_; }
    const Fq& a6() const { return a6_; }

    Fq b2() const { return a1_ * a1_ + Fq(ctx_, 4) * a2_; }
    Fq b4() const { return Fq(ctx_, 2) * a4_ + a1_ * a3_; }
    Fq b6() const { return a3_ * a3_ + Fq(ctx_, 4) * a6_; }
    Fq b8() const {
        return a1_ * a1_ * a6_ + Fq(ctx_, 4) * a2_ * a6_ - a1_ * a3_ * a4_ +
               a2_ * a3_ * a3_ - a4_ * a4_;
    }
    Fq c4() const { return b2() * b2() - Fq(ctx_, 24) * b4(); }

    Fq discriminant() const {
        Fq B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
        return -B2 * B2 * B8 - Fq(ctx_, 8) * B4 * B4 * B4 - Fq(ctx_, 27) * B6 * B6 +
               Fq(ctx_, 9) * B2 * B4 * B6;
    }

    Fq j_invariant() const {
        Fq C4 = c4();
        return C4 * C4 * C4 / discriminant();
    }

    bool coeffs_in_prime_subfield() const {
        for (const Fq* a : {&a1_, &a2_, &a3_, &a4_, &a6_}) {
            auto c = a->coords();
            for (size_t i = 1; i < c.size(); ++i)
                if (c[i] != 0) return false;
        }
        return true;
    }

    // Base change along F_p -> F_{p^m}; only prime-subfield coefficients are
    // movable without an explicit embedding.
    WeierstrassCurve base_change(const FieldCtxPtr& target) const {
        if (target->p() != ctx_->p())
            throw InvalidArgument("base change must preserve the characteristic");
        if (!coeffs_in_prime_subfield())
            throw UnsupportedError("base change is only implemented from the prime subfield");
        auto lift = [&](const Fq& v) { return Fq(target, v.coords()[0]); };
        return WeierstrassCurve(target, lift(a1_), lift(a2_), lift(a3_), lift(a4_), lift(a6_));
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "y^2";
        if (!a1_.is_zero()) os << " + " << a1_.to_string() << "*x*y";
        if (!a3_.is_zero()) os << " + " << a3_.to_string() << "*y";
        os << " = x^3";
        if (!a2_.is_zero()) os << " + " << a2_.to_string() << "*x^2";
        if (!a4_.is_zero()) os << " + " << a4_.to_string() << "*x";
        if (!a6_.is_zero()) os << " + " << a6_.to_string();
        return os.str();
    }

private:
    FieldCtxPtr ctx_;
    Fq a1_, a2_, a3_, a4_, a6_;
};

inline Fq j_invariant(const WeierstrassCurve& E) { return E.j_invariant(); }

inline JClass j_class(const WeierstrassCurve& E) {
    Fq j = E.j_invariant();
    if (j.is_zero()) return JClass::J0; // swallows j = 1728 for p = 2, 3
    if (j == Fq(E.ctx(), 1728)) return JClass::J1728;
    return JClass::Generic;
}

// ---------------------------------------------------------------------------
// Point counting (exhaustive) and the supersingularity oracle.
// ---------------------------------------------------------------------------

// |E(F_q)| including the point at infinity.  Scans x and resolves the fibre
// in y via precomputed square / Artin-Schreier tables, so the cost is O(q).
inline int64_t point_count(const WeierstrassCurve& E, int64_t cap = 1 << 16) {
    const auto& ctx = E.ctx();
    const int64_t q = ctx->size();
    if (q > cap) throw ResourceError("field too large for exhaustive point counting");
    const int64_t p = ctx->p();

    // solutions[v] = #{z in F_q : z^2 = v}          (p odd)
    // solutions[v] = #{z in F_q : z^2 + z = v}      (p = 2, used after substitution)
    std::vector<int> sq_count(static_cast<size_t>(q), 0);
    std::vector<int> as_count(static_cast<size_t>(q), 0);
    for (int64_t i = 0; i < q; ++i) {
        Fq z = Fq::from_index(ctx, i);
        sq_count[static_cast<size_t>((z * z).index())]++;
        as_count[static_cast<size_t>((z * z + z).index())]++;
    }

    int64_t total = 1; // point at infinity
    const Fq four_inv = (p != 2) ? Fq(ctx, 4).inv() : Fq::zero(ctx);
    for (int64_t i = 0; i < q; ++i) {
        Fq x = Fq::from_index(ctx, i);
        Fq rhs = ((x + E.a2()) * x + E.a4()) * x + E.a6();
        Fq c = E.a1() * x + E.a3();
        if (p != 2) {
            // y = z - c/2 turns the fibre into z^2 = rhs + c^2/4
            Fq v = rhs + c * c * four_inv;
            total += sq_count[static_cast<size_t>(v.index())];
        } else if (c.is_zero()) {
            total += 1; // squaring is a bijection in characteristic 2
        } else {
            // y = c z turns the fibre into z^2 + z = rhs / c^2
            Fq v = rhs / (c * c);
            total += as_count[static_cast<size_t>(v.index())];
        }
    }
    return total;
}

inline bool hasse_bound_holds(int64_t q, int64_t count) {
    int64_t t = q + 1 - count;
    return t * t <= 4 * q;
}

// Oracle: E/F_q is supersingular iff the Frobenius trace q + 1 - |E(F_q)| is
// divisible by p.
inline bool is_supersingular_oracle(const WeierstrassCurve& E, int64_t cap = 1 << 16) {
    int64_t t = E.ctx()->size() + 1 - point_count(E, cap);
    return t % E.ctx()->p() == 0;
}

// Supersingularity by the Hasse invariant: for p >= 3 write the curve as
// y^2 = f(x) (complete the square) and test the coefficient of x^(p-1) in
// f^((p-1)/2); for p = 2 the supersingular curves are exactly those with
// j = 0.
inline bool is_supersingular(const WeierstrassCurve& E) {
    const auto& ctx = E.ctx();
    const int64_t p = ctx->p();
    if (p == 2) return E.j_invariant().is_zero();
    Fq quarter = Fq(ctx, 4).inv();
    Fq half = Fq(ctx, 2).inv();
    Poly f(ctx, {E.b6() * quarter, E.b4() * half, E.b2() * quarter, Fq::one(ctx)});
    Poly h = f.pow((p - 1) / 2);
    return h.coeff(static_cast<int>(p - 1)).is_zero();
}

// ---------------------------------------------------------------------------
// Curve automorphisms (x, y) -> (u^2 x + r, u^3 y + u^2 s x + t).
// Every automorphism fixing the point at infinity has this shape.
// ---------------------------------------------------------------------------

class CurveAutomorphism {
public:
    CurveAutomorphism(WeierstrassCurve curve, Fq u, Fq r, Fq s, Fq t)
        : curve_(std::move(curve)), u_(std::move(u)), r_(std::move(r)),
          s_(std::move(s)), t_(std::move(t)) {
        if (u_.is_zero()) throw InvalidArgument("curve automorphism requires u != 0");
    }

    static CurveAutomorphism identity(const WeierstrassCurve& E) {
        const auto& ctx = E.ctx();
        return CurveAutomorphism(E, Fq::one(ctx), Fq::zero(ctx), Fq::zero(ctx), Fq::zero(ctx));
    }

    const WeierstrassCurve& curve() const { return curve_; }
    const Fq& u() const { return u_; }
    const Fq& r() const { return r_; }
    const Fq& s() const { return s_; }
    const Fq& t() const { return t_; }

    bool is_identity() const {
        return u_ == Fq::one(curve_.ctx()) && r_.is_zero() && s_.is_zero() && t_.is_zero();
    }

    // Substituting the map into the curve equation must reproduce the
    // equation exactly, scaled by u^6.
    bool is_valid() const {
        using detail::BiPoly;
        const auto& ctx = curve_.ctx();
        auto eq = [&](const BiPoly& X, const BiPoly& Y) {
            BiPoly r = Y * Y + curve_.a1() * (X * Y) + curve_.a3() * Y -
                       X * X * X - curve_.a2() * (X * X) - curve_.a4() * X -
                       BiPoly::constant(ctx, curve_.a6());
            return r;
        };
        BiPoly x = BiPoly::term(ctx, Fq::one(ctx), 1, 0);
        BiPoly y = BiPoly::term(ctx, Fq::one(ctx), 0, 1);
        BiPoly X = (u_ * u_) * x + BiPoly::constant(ctx, r_);
        BiPoly Y = (u_ * u_ * u_) * y + (u_ * u_ * s_) * x + BiPoly::constant(ctx, t_);
        return eq(X, Y) == u_.pow(6) * eq(x, y);
    }

    CurveAutomorphism compose(const CurveAutomorphism& inner) const {
        // this(inner(x, y))
        Fq u = u_ * inner.u_;
        Fq r = u_ * u_ * inner.r_ + r_;
        Fq s = s_ + u_ * inner.s_;
        Fq t = u_ * u_ * u_ * inner.t_ + s_ * u_ * u_ * inner.r_ + t_;
        return CurveAutomorphism(curve_, u, r, s, t);
    }

    // Order by iterated composition; 0 if it exceeds the cap (24 is the
    // largest automorphism group of an elliptic curve).
    int order(int cap = 24) const {
        CurveAutomorphism acc = *this;
        for (int n = 1; n <= cap; ++n) {
            if (acc.is_identity()) return n;
            acc = compose(acc);
        }
        return 0;
    }

    std::pair<Fq, Fq> apply(const Fq& x, const Fq& y) const {
        return {u_ * u_ * x + r_, u_ * u_ * u_ * y + u_ * u_ * s_ * x + t_};
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "(x,y) -> (" << (u_ * u_).to_string() << "*x + " << r_.to_string() << ", "
           << (u_ * u_ * u_).to_string() << "*y + " << (u_ * u_ * s_).to_string() << "*x + "
           << t_.to_string() << ")";
        return os.str();
    }

private:
    WeierstrassCurve curve_;
    Fq u_, r_, s_, t_;
};

inline std::pair<bool, int> verify_automorphism(const WeierstrassCurve& E,
                                                const CurveAutomorphism& map) {
    if (!map.is_valid()) return {false, 0};
    (void)E;
    return {true, map.order()};
}

// Negation (x, y) -> (x, -y - a1 x - a3), the generator of the generic
// automorphism group.
inline CurveAutomorphism negation_automorphism(const WeierstrassCurve& E) {
    const auto& ctx = E.ctx();
    return CurveAutomorphism(E, Fq(ctx, -1), Fq::zero(ctx), -E.a1(), -E.a3());
}

// Number of points fixed by negation (the 2-torsion), by exhaustive scan;
// oracle for freeness questions.
inline int64_t count_negation_fixed_points(const WeierstrassCurve& E, int64_t cap = 1 << 16) {
    const auto& ctx = E.ctx();
    if (ctx->size() > cap) throw ResourceError("field too large for exhaustive scan");
    int64_t fixed = 1; // infinity
    for (int64_t i = 0; i < ctx->size(); ++i)
        for (int64_t j = 0; j < ctx->size(); ++j) {
            Fq x = Fq::from_index(ctx, i), y = Fq::from_index(ctx, j);
            Fq lhs = y * y + E.a1() * x * y + E.a3() * y;
            Fq rhs = ((x + E.a2()) * x + E.a4()) * x + E.a6();
            if (lhs != rhs) continue;
            if (Fq(ctx, 2) * y + E.a1() * x + E.a3() == Fq::zero(ctx)) ++fixed;
        }
    return fixed;
}

// ---------------------------------------------------------------------------
// The automorphism-group catalogue.
// ---------------------------------------------------------------------------

inline int aut_order(int64_t p, JClass jc) {
    switch (jc) {
        case JClass::Generic: return 2;
        case JClass::J1728: return 4; // p >= 5: j = 1728 is distinct from 0
        case JClass::J0: return p == 3 ? 12 : (p == 2 ? 24 : 6);
    }
    return 2;
}

inline std::vector<int> maximal_abelian_orders(int64_t p, JClass jc) {
    switch (jc) {
        case JClass::Generic: return {2};
        case JClass::J1728: return {4};
        case JClass::J0: return (p == 2 || p == 3) ? std::vector<int>{4, 6} : std::vector<int>{6};
    }
    return {2};
}

// Orders of Abelian (equivalently cyclic) subgroups of the group-automorphism
// group, keyed on (p, j-class).
inline std::vector<int> legal_gamma_orders(int64_t p, JClass jc) {
    switch (jc) {
        case JClass::Generic: return {1, 2};
        case JClass::J1728: return {1, 2, 4};
        case JClass::J0: return (p == 2 || p == 3) ? std::vector<int>{1, 2, 3, 4, 6}
                                                   : std::vector<int>{1, 2, 3, 6};
    }
    return {1, 2};
}

// Model curve for a j-class over the smallest field carrying the roots of
// unity its extra automorphisms need.
inline WeierstrassCurve catalogue_curve(int64_t p, JClass jc) {
    switch (jc) {
        case JClass::J1728: {
            if (p == 2 || p == 3) throw InvalidArgument("j = 1728 coincides with j = 0 for p = 2, 3");
            auto ctx = FieldCtx::make(p, ffpoly::splitting_degree_of_unity(p, 4));
            return WeierstrassCurve::from_short(ctx, Fq(ctx, -1), Fq::zero(ctx));
        }
        case JClass::J0: {
            if (p == 3) {
                auto ctx = FieldCtx::make(3, 2); // zeta_4 lives in F_9
                return WeierstrassCurve::from_short(ctx, Fq(ctx, -1), Fq::zero(ctx));
            }
            if (p == 2) {
                auto ctx = FieldCtx::make(2, 2); // zeta_3 lives in F_4
                return WeierstrassCurve::from_ints(ctx, 0, 0, 1, 0, 0); // y^2 + y = x^3
            }
            auto ctx = FieldCtx::make(p, ffpoly::splitting_degree_of_unity(p, 3));
            return WeierstrassCurve::from_short(ctx, Fq::zero(ctx), Fq(ctx, -1));
        }
        case JClass::Generic:
            throw InvalidArgument("no canonical model for a generic j-invariant");
    }
    throw InvalidArgument("unknown j-class");
}

struct AutGroupDescriptor {
    int order = 2;
    bool is_cyclic = true;
    std::vector<CurveAutomorphism> generators;
    std::vector<int> maximal_abelian_orders;
    WeierstrassCurve model;
    JClass j_class;
};

// The full automorphism-group data for (p, j(E)).  For j in {0, 1728} the
// generators are instantiated on the catalogue model curve (isomorphic to E
// over the algebraic closure); for generic j the generator is negation on E
// itself.
inline AutGroupDescriptor aut_group(const WeierstrassCurve& E) {
    const int64_t p = E.ctx()->p();
    const JClass jc = j_class(E);
    AutGroupDescriptor d{aut_order(p, jc), aut_order(p, jc) <= 6, {}, maximal_abelian_orders(p, jc),
                         jc == JClass::Generic ? E : catalogue_curve(p, jc), jc};

    const WeierstrassCurve& M = d.model;
    const auto& ctx = M.ctx();
    auto zero = Fq::zero(ctx);
    switch (jc) {
        case JClass::Generic:
            d.generators.push_back(negation_automorphism(M));
            break;
        case JClass::J1728: {
            Fq z4 = *ffpoly::find_root_of_unity(ctx, 4);
            // (x, y) -> (-x, z4 y): u^2 = -1, u^3 = z4, so u = -z4.
            d.generators.emplace_back(M, -z4, zero, zero, zero);
            break;
        }
        case JClass::J0:
            if (p == 3) {
                Fq z4 = *ffpoly::find_root_of_unity(ctx, 4);
                d.generators.emplace_back(M, -z4, zero, zero, zero);            // (-x, z4 y), order 4
                d.generators.emplace_back(M, Fq(ctx, -1), Fq::one(ctx), zero, zero); // (x+1, -y), order 6
            } else if (p == 2) {
                Fq z3 = *ffpoly::find_root_of_unity(ctx, 3);
                d.generators.emplace_back(M, z3 * z3, zero, zero, Fq::one(ctx));     // (z3 x, y+1), order 6
                d.generators.emplace_back(M, Fq::one(ctx), Fq::one(ctx), Fq::one(ctx), z3); // (x+1, y+x+z3), order 4
            } else {
                Fq z3 = *ffpoly::find_root_of_unity(ctx, 3);
                // (x, y) -> (z3 x, -y): u^2 = z3, u^3 = -1, so u = -z3^2.
                d.generators.emplace_back(M, -(z3 * z3), zero, zero, zero);
            }
            break;
    }
    return d;
}

// Exhaustive count of automorphisms (u, r, s, t) over the curve's own field;
// oracle for the order table when the field is small.
inline int64_t count_automorphisms_bruteforce(const WeierstrassCurve& E, int64_t cap = 1 << 14) {
    const auto& ctx = E.ctx();
    const int64_t q = ctx->size();
    if (q * q * q * q > cap * cap) throw ResourceError("field too large for automorphism scan");
    int64_t n = 0;
    for (int64_t ui = 1; ui < q; ++ui)
        for (int64_t ri = 0; ri < q; ++ri)
            for (int64_t si = 0; si < q; ++si)
                for (int64_t ti = 0; ti < q; ++ti) {
                    CurveAutomorphism a(E, Fq::from_index(ctx, ui), Fq::from_index(ctx, ri),
                                        Fq::from_index(ctx, si), Fq::from_index(ctx, ti));
                    if (a.is_valid()) ++n;
                }
    return n;
}

// ---------------------------------------------------------------------------
// Named fixtures and the textual curve format.
// ---------------------------------------------------------------------------

namespace detail {
template <typename Pred>
inline std::optional<WeierstrassCurve> scan_curves(const FieldCtxPtr& ctx, Pred pred) {
    const int64_t q = ctx->size();
    for (int64_t a1 = 0; a1 < q; ++a1)
        for (int64_t a2 = 0; a2 < q; ++a2)
            for (int64_t a3 = 0; a3 < q; ++a3)
                for (int64_t a4 = 0; a4 < q; ++a4)
                    for (int64_t a6 = 0; a6 < q; ++a6) {
                        try {
                            WeierstrassCurve E(ctx, Fq::from_index(ctx, a1), Fq::from_index(ctx, a2),
                                               Fq::from_index(ctx, a3), Fq::from_index(ctx, a4),
                                               Fq::from_index(ctx, a6));
                            if (pred(E)) return E;
                        } catch (const DomainError&) {
                        }
                    }
    return std::nullopt;
}
} // namespace detail

// Deterministic named curves: "j0" and "j1728" are the catalogue models,
// "generic" / "ordinary" / "supersingular" are found by the first match in
// the coefficient scan order.
inline WeierstrassCurve fixture_curve(const std::string& name, int64_t p) {
    auto ctx = FieldCtx::make(p, 1);
    if (name == "j0") {
        if (p == 2) return WeierstrassCurve::from_ints(ctx, 0, 0, 1, 0, 0);
        if (p == 3) return WeierstrassCurve::from_short(ctx, Fq(ctx, -1), Fq::zero(ctx));
        return WeierstrassCurve::from_short(ctx, Fq::zero(ctx), Fq(ctx, -1));
    }
    if (name == "j1728") {
        if (p == 2) return WeierstrassCurve::from_ints(ctx, 0, 0, 1, 0, 0); // 1728 = 0 here
        return WeierstrassCurve::from_short(ctx, Fq(ctx, -1), Fq::zero(ctx));
    }
    std::optional<WeierstrassCurve> found;
    if (name == "generic") {
        found = detail::scan_curves(ctx, [&](const WeierstrassCurve& E) {
            return j_class(E) == JClass::Generic;
        });
    } else if (name == "ordinary") {
        found = detail::scan_curves(ctx, [&](const WeierstrassCurve& E) {
            return !is_supersingular(E);
        });
    } else if (name == "supersingular") {
        found = detail::scan_curves(ctx, [&](const WeierstrassCurve& E) {
            return is_supersingular(E);
        });
    } else {
        throw InvalidArgument("unknown curve fixture: " + name);
    }
    if (!found) throw DomainError("no curve with the requested property over F_" + std::to_string(p));
    return *found;
}

inline WeierstrassCurve WeierstrassCurve::parse(const std::string& text) {
    int64_t p = -1;
    int k = 1;
    std::vector<int64_t> a;
    std::string chunk;
    std::istringstream in(text);
    while (std::getline(in, chunk, ';')) {
        auto eq = chunk.find('=');
        if (eq == std::string::npos) continue;
        std::string key = chunk.substr(0, eq), val = chunk.substr(eq + 1);
        auto strip = [](std::string s) {
            size_t b = s.find_first_not_of(" \t");
            size_t e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        key = strip(key);
        val = strip(val);
        if (key == "p") p = std::stoll(val);
        else if (key == "k") k = static_cast<int>(std::stoll(val));
        else if (key == "a") {
            if (val.size() < 2 || val.front() != '[' || val.back() != ']')
                throw InvalidArgument("curve coefficients must be a bracketed list");
            std::istringstream items(val.substr(1, val.size() - 2));
            std::string item;
            while (std::getline(items, item, ',')) a.push_back(std::stoll(strip(item)));
        }
    }
    if (p < 2) throw InvalidArgument("curve text must specify a prime p");
    if (a.size() != 5) throw InvalidArgument("curve text must list exactly [a1,a2,a3,a4,a6]");
    auto ctx = FieldCtx::make(p, k);
    return from_ints(ctx, a[0], a[1], a[2], a[3], a[4]);
}

} // namespace fibclass::elliptic

#endif
