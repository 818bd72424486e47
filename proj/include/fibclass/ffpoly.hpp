// Exact arithmetic over F_{p^k}, dense and Laurent polynomials, and
// one-variable derivations g(t)*d/dt.  Everything downstream computes in
// these types; all values are immutable after construction.
#ifndef FIBCLASS_FFPOLY_HPP
#define FIBCLASS_FFPOLY_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fibclass/errors.hpp"

namespace fibclass::ffpoly {

using std::int64_t;

namespace detail {

inline int64_t mod_norm(int64_t v, int64_t p) {
    int64_t r = v % p;
    return r < 0 ? r + p : r;
}

inline bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// --- dense polynomials over F_p as plain coefficient vectors -------------
// Used only for context validation (modulus irreducibility) where the
// extension field does not exist yet.

using FpPoly = std::vector<int64_t>; // index = exponent, normalized

inline void fp_trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline FpPoly fp_mul(const FpPoly& a, const FpPoly& b, int64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = mod_norm(r[i + j] + a[i] * b[j], p);
    fp_trim(r);
    return r;
}

// Remainder of a by monic b.
inline FpPoly fp_rem(FpPoly a, const FpPoly& b, int64_t p) {
    fp_trim(a);
    while (a.size() >= b.size()) {
        int64_t c = a.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = mod_norm(a[shift + i] - c * b[i], p);
        fp_trim(a);
    }
    return a;
}

// Trial division by every monic polynomial of degree 1..deg/2; the sizes in
// scope (p <= 13, deg <= 6) keep this instant.
inline bool fp_irreducible(const FpPoly& m, int64_t p) {
    int deg = static_cast<int>(m.size()) - 1;
    if (deg < 1) return false;
    if (deg == 1) return true;
    for (int d = 1; 2 * d <= deg; ++d) {
        int64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int64_t idx = 0; idx < count; ++idx) {
            FpPoly div(static_cast<size_t>(d) + 1, 0);
            int64_t v = idx;
            for (int i = 0; i < d; ++i) { div[i] = v % p; v /= p; }
            div[d] = 1;
            if (fp_rem(m, div, p).empty()) return false;
        }
    }
    return true;
}

} // namespace detail

// ---------------------------------------------------------------------------
// FieldCtx: F_{p^k} = F_p[g]/(modulus), modulus monic irreducible of degree k.
// ---------------------------------------------------------------------------

class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

class FieldCtx {
public:
    static FieldCtxPtr make(int64_t p, int k) {
        return std::make_shared<const FieldCtx>(p, k, default_modulus(p, k), Key{});
    }

    static FieldCtxPtr make(int64_t p, int k, std::vector<int64_t> modulus) {
        return std::make_shared<const FieldCtx>(p, k, std::move(modulus), Key{});
    }

    int64_t p() const { return p_; }
    int k() const { return k_; }
    const std::vector<int64_t>& modulus() const { return modulus_; }

    int64_t size() const {
        int64_t q = 1;
        for (int i = 0; i < k_; ++i) q *= p_;
        return q;
    }

    bool same(const FieldCtx& o) const {
        return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
    }

    // First monic irreducible of degree k in the base-p counter order of the
    // low coefficients; deterministic across runs.
    static std::vector<int64_t> default_modulus(int64_t p, int k) {
        if (!detail::is_prime(p)) throw InvalidArgument("field characteristic must be prime");
        if (k < 1) throw InvalidArgument("extension degree must be >= 1");
        if (k == 1) return {0, 1}; // the polynomial g itself; unused for k = 1
        int64_t count = 1;
        for (int i = 0; i < k; ++i) count *= p;
        for (int64_t idx = 0; idx < count; ++idx) {
            std::vector<int64_t> m(static_cast<size_t>(k) + 1, 0);
            int64_t v = idx;
            for (int i = 0; i < k; ++i) { m[i] = v % p; v /= p; }
            m[k] = 1;
            if (detail::fp_irreducible(m, p)) return m;
        }
        throw DomainError("no irreducible modulus found"); // unreachable
    }

    struct Key {}; // blocks direct construction outside make()
    FieldCtx(int64_t p, int k, std::vector<int64_t> modulus, Key)
        : p_(p), k_(k), modulus_(std::move(modulus)) {
        if (!detail::is_prime(p_)) throw InvalidArgument("field characteristic must be prime");
        if (k_ < 1) throw InvalidArgument("extension degree must be >= 1");
        if (static_cast<int>(modulus_.size()) != k_ + 1 || modulus_.back() != 1)
            throw InvalidArgument("modulus must be monic of degree k");
        for (auto& c : modulus_) c = detail::mod_norm(c, p_);
        if (k_ > 1 && !detail::fp_irreducible(modulus_, p_))
            throw InvalidArgument("modulus is reducible over the prime field");
    }

private:
    int64_t p_;
    int k_;
    std::vector<int64_t> modulus_;
};

// ---------------------------------------------------------------------------
// Fq: an element of F_{p^k}, stored as coordinates in the power basis of g.
// ---------------------------------------------------------------------------

class Fq {
public:
    Fq() = default;
    Fq(FieldCtxPtr ctx, int64_t value) : ctx_(std::move(ctx)), c_(static_cast<size_t>(ctx_->k()), 0) {
        c_[0] = detail::mod_norm(value, ctx_->p());
    }
    Fq(FieldCtxPtr ctx, std::vector<int64_t> coords) : ctx_(std::move(ctx)), c_(std::move(coords)) {
        c_.resize(static_cast<size_t>(ctx_->k()), 0);
        for (auto& v : c_) v = detail::mod_norm(v, ctx_->p());
    }

    static Fq zero(const FieldCtxPtr& ctx) { return Fq(ctx, 0); }
    static Fq one(const FieldCtxPtr& ctx) { return Fq(ctx, 1); }
    // The residue class of g, a generator of the power basis (k >= 2).
    static Fq gen(const FieldCtxPtr& ctx) {
        if (ctx->k() < 2) throw InvalidArgument("prime field has no extension generator");
        std::vector<int64_t> c(static_cast<size_t>(ctx->k()), 0);
        c[1] = 1;
        return Fq(ctx, std::move(c));
    }

    const FieldCtxPtr& ctx() const { return ctx_; }
    const std::vector<int64_t>& coords() const { return c_; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](int64_t v) { return v == 0; });
    }

    // Canonical index in [0, p^k): base-p digits c_0, c_1, ...
    int64_t index() const {
        int64_t idx = 0;
        for (size_t i = c_.size(); i-- > 0;) idx = idx * ctx_->p() + c_[i];
        return idx;
    }

    static Fq from_index(const FieldCtxPtr& ctx, int64_t idx) {
        std::vector<int64_t> c(static_cast<size_t>(ctx->k()), 0);
        for (int i = 0; i < ctx->k(); ++i) { c[static_cast<size_t>(i)] = idx % ctx->p(); idx /= ctx->p(); }
        return Fq(ctx, std::move(c));
    }

    friend bool operator==(const Fq& a, const Fq& b) {
        a.check(b);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const Fq& a, const Fq& b) { return !(a == b); }

    friend Fq operator+(const Fq& a, const Fq& b) {
        a.check(b);
        Fq r = a;
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = detail::mod_norm(r.c_[i] + b.c_[i], a.p());
        return r;
    }
    friend Fq operator-(const Fq& a, const Fq& b) {
        a.check(b);
        Fq r = a;
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = detail::mod_norm(r.c_[i] - b.c_[i], a.p());
        return r;
    }
    Fq operator-() const {
        Fq r = *this;
        for (auto& v : r.c_) v = detail::mod_norm(-v, p());
        return r;
    }

    friend Fq operator*(const Fq& a, const Fq& b) {
        a.check(b);
        const int64_t p = a.p();
        const int k = a.ctx_->k();
        if (k == 1) return Fq(a.ctx_, a.c_[0] * b.c_[0]);
        std::vector<int64_t> prod(static_cast<size_t>(2 * k - 1), 0);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                prod[static_cast<size_t>(i + j)] =
                    detail::mod_norm(prod[static_cast<size_t>(i + j)] + a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)], p);
        const auto& m = a.ctx_->modulus();
        for (int d = 2 * k - 2; d >= k; --d) {
            int64_t c = prod[static_cast<size_t>(d)];
            if (c == 0) continue;
            prod[static_cast<size_t>(d)] = 0;
            for (int i = 0; i < k; ++i)
                prod[static_cast<size_t>(d - k + i)] =
                    detail::mod_norm(prod[static_cast<size_t>(d - k + i)] - c * m[static_cast<size_t>(i)], p);
        }
        prod.resize(static_cast<size_t>(k));
        return Fq(a.ctx_, std::move(prod));
    }

    Fq pow(int64_t e) const {
        if (e < 0) return inv().pow(-e);
        Fq r = one(ctx_);
        Fq base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    Fq inv() const {
        if (is_zero()) throw DomainError("division by zero in the field");
        return pow(ctx_->size() - 2);
    }
    friend Fq operator/(const Fq& a, const Fq& b) { return a * b.inv(); }

    Fq frobenius() const { return pow(p()); }

    // Unique p-th root; Frobenius is a bijection on a finite field.
    Fq pth_root() const {
        int64_t e = 1;
        for (int i = 0; i < ctx_->k() - 1; ++i) e *= p();
        return pow(e);
    }

    int64_t multiplicative_order() const {
        if (is_zero()) throw DomainError("zero has no multiplicative order");
        Fq x = *this;
        int64_t n = 1;
        const Fq id = one(ctx_);
        while (x != id) {
            x = x * *this;
            ++n;
        }
        return n;
    }

    std::string to_string() const {
        if (ctx_->k() == 1) return std::to_string(c_[0]);
        std::ostringstream os;
        os << '[';
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) os << ',';
            os << c_[i];
        }
        os << ']';
        return os.str();
    }

private:
    int64_t p() const { return ctx_->p(); }
    void check(const Fq& o) const {
        if (ctx_.get() == o.ctx_.get()) return;
        if (!ctx_ || !o.ctx_ || !ctx_->same(*o.ctx_))
            throw InvalidArgument("field elements from incompatible contexts");
    }

    FieldCtxPtr ctx_;
    std::vector<int64_t> c_;
};

// First element of exact multiplicative order n in the canonical index
// order, if one exists (requires n | p^k - 1).
inline std::optional<Fq> find_root_of_unity(const FieldCtxPtr& ctx, int64_t n) {
    if ((ctx->size() - 1) % n != 0) return std::nullopt;
    for (int64_t idx = 1; idx < ctx->size(); ++idx) {
        Fq x = Fq::from_index(ctx, idx);
        if (!x.is_zero() && x.multiplicative_order() == n) return x;
    }
    return std::nullopt;
}

// Smallest k with n | p^k - 1, i.e. the degree over F_p of the field
// generated by a primitive n-th root of unity.  Requires gcd(n, p) = 1.
inline int splitting_degree_of_unity(int64_t p, int64_t n) {
    if (n <= 0 || n % p == 0) throw InvalidArgument("root-of-unity order must be prime to p");
    int64_t r = detail::mod_norm(p, n);
    int k = 1;
    int64_t acc = r;
    while (acc != 1 % n) {
        acc = detail::mod_norm(acc * r, n);
        ++k;
        if (k > 64) throw DomainError("unreachable: unit order overflow");
    }
    return k;
}

// ---------------------------------------------------------------------------
// Poly: dense polynomial in one variable t over F_{p^k}.
// ---------------------------------------------------------------------------

class Poly {
public:
    explicit Poly(FieldCtxPtr ctx) : ctx_(std::move(ctx)) {}
    Poly(FieldCtxPtr ctx, std::vector<Fq> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
        trim();
    }

    static Poly zero(const FieldCtxPtr& ctx) { return Poly(ctx); }
    static Poly constant(const FieldCtxPtr& ctx, const Fq& v) { return Poly(ctx, {v}); }
    static Poly monomial(const FieldCtxPtr& ctx, const Fq& coeff, int exp) {
        if (exp < 0) throw InvalidArgument("polynomial exponent must be >= 0");
        std::vector<Fq> c(static_cast<size_t>(exp) + 1, Fq::zero(ctx));
        c[static_cast<size_t>(exp)] = coeff;
        return Poly(ctx, std::move(c));
    }
    static Poly variable(const FieldCtxPtr& ctx) { return monomial(ctx, Fq::one(ctx), 1); }

    const FieldCtxPtr& ctx() const { return ctx_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    Fq coeff(int e) const {
        if (e < 0 || e >= static_cast<int>(c_.size())) return Fq::zero(ctx_);
        return c_[static_cast<size_t>(e)];
    }
    const std::vector<Fq>& coeffs() const { return c_; }

    Fq leading() const {
        if (is_zero()) throw DomainError("zero polynomial has no leading coefficient");
        return c_.back();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r(a.ctx_);
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), Fq::zero(a.ctx_));
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r(a.ctx_);
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), Fq::zero(a.ctx_));
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
        r.trim();
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly(a.ctx_);
        Poly r(a.ctx_);
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Fq::zero(a.ctx_));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }
    friend Poly operator*(const Fq& s, const Poly& a) {
        Poly r = a;
        for (auto& v : r.c_) v = s * v;
        r.trim();
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) {
        return a.c_.size() == b.c_.size() &&
               std::equal(a.c_.begin(), a.c_.end(), b.c_.begin());
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(int64_t e) const {
        Poly r = constant(ctx_, Fq::one(ctx_));
        Poly base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly(ctx_);
        std::vector<Fq> d;
        d.reserve(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i)
            d.push_back(Fq(ctx_, static_cast<int64_t>(i)) * c_[i]);
        return Poly(ctx_, std::move(d));
    }

    Fq eval(const Fq& x) const {
        Fq r = Fq::zero(ctx_);
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    // Exact divisibility by a monic divisor; returns quotient if remainder 0.
    std::optional<Poly> divide_exact(const Poly& divisor) const {
        if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
        Poly rem = *this;
        Poly quot(ctx_);
        Fq lead_inv = divisor.leading().inv();
        std::vector<Fq> q(c_.size(), Fq::zero(ctx_));
        while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
            int shift = rem.degree() - divisor.degree();
            Fq f = rem.leading() * lead_inv;
            q[static_cast<size_t>(shift)] = f;
            rem = rem - (f * (monomial(ctx_, Fq::one(ctx_), shift) * divisor));
        }
        if (!rem.is_zero()) return std::nullopt;
        return Poly(ctx_, std::move(q));
    }

    std::string to_string(const std::string& var = "t") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    FieldCtxPtr ctx_;
    std::vector<Fq> c_; // index = exponent; trailing coefficient nonzero
};

// f(a*t + b), exact, via Horner.  a = 0 collapses the variable and is not an
// affine automorphism of the line.
inline Poly compose_affine(const Poly& f, const Fq& a, const Fq& b) {
    if (a.is_zero()) throw InvalidArgument("affine substitution t -> a*t + b requires a != 0");
    const auto& ctx = f.ctx();
    Poly arg = Poly(ctx, {b, a});
    Poly r(ctx);
    for (int i = f.degree(); i >= 0; --i)
        r = r * arg + Poly::constant(ctx, f.coeff(i));
    return r;
}

// ---------------------------------------------------------------------------
// LaurentPoly: finite sum of c_e t^e with e ranging over the integers.
// ---------------------------------------------------------------------------

class LaurentPoly {
public:
    explicit LaurentPoly(FieldCtxPtr ctx) : ctx_(std::move(ctx)), offset_(0) {}
    LaurentPoly(FieldCtxPtr ctx, int offset, std::vector<Fq> coeffs)
        : ctx_(std::move(ctx)), offset_(offset), c_(std::move(coeffs)) {
        normalize();
    }
    LaurentPoly(const Poly& f) : ctx_(f.ctx()), offset_(0), c_(f.coeffs()) { normalize(); } // NOLINT: implicit by design

    static LaurentPoly zero(const FieldCtxPtr& ctx) { return LaurentPoly(ctx); }
    static LaurentPoly monomial(const FieldCtxPtr& ctx, const Fq& coeff, int exp) {
        return LaurentPoly(ctx, exp, {coeff});
    }

    const FieldCtxPtr& ctx() const { return ctx_; }
    bool is_zero() const { return c_.empty(); }
    int min_exp() const {
        if (is_zero()) throw DomainError("zero Laurent polynomial has no support");
        return offset_;
    }
    int max_exp() const {
        if (is_zero()) throw DomainError("zero Laurent polynomial has no support");
        return offset_ + static_cast<int>(c_.size()) - 1;
    }

    Fq coeff(int e) const {
        if (is_zero() || e < offset_ || e > max_exp()) return Fq::zero(ctx_);
        return c_[static_cast<size_t>(e - offset_)];
    }

    std::vector<int> support() const {
        std::vector<int> s;
        for (size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) s.push_back(offset_ + static_cast<int>(i));
        return s;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        int lo = std::min(a.offset_, b.offset_);
        int hi = std::max(a.max_exp(), b.max_exp());
        std::vector<Fq> c(static_cast<size_t>(hi - lo + 1), Fq::zero(a.ctx_));
        for (int e = lo; e <= hi; ++e) c[static_cast<size_t>(e - lo)] = a.coeff(e) + b.coeff(e);
        return LaurentPoly(a.ctx_, lo, std::move(c));
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        return a + (Fq(a.ctx_, -1) * b);
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return LaurentPoly(a.ctx_);
        std::vector<Fq> c(a.c_.size() + b.c_.size() - 1, Fq::zero(a.ctx_));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        return LaurentPoly(a.ctx_, a.offset_ + b.offset_, std::move(c));
    }
    friend LaurentPoly operator*(const Fq& s, const LaurentPoly& a) {
        std::vector<Fq> c = a.c_;
        for (auto& v : c) v = s * v;
        return LaurentPoly(a.ctx_, a.offset_, std::move(c));
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.offset_ == b.offset_ && a.c_.size() == b.c_.size() &&
               std::equal(a.c_.begin(), a.c_.end(), b.c_.begin());
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly shifted(int m) const { // multiply by t^m
        if (is_zero()) return *this;
        return LaurentPoly(ctx_, offset_ + m, c_);
    }

    LaurentPoly derivative() const {
        LaurentPoly r(ctx_);
        for (int e : support()) {
            Fq c = Fq(ctx_, e) * coeff(e);
            if (!c.is_zero()) r = r + monomial(ctx_, c, e - 1);
        }
        return r;
    }

    // t -> a*t: scales the coefficient of t^e by a^e.
    LaurentPoly scale_variable(const Fq& a) const {
        if (a.is_zero()) throw InvalidArgument("variable scaling t -> a*t requires a != 0");
        LaurentPoly r(ctx_);
        for (int e : support()) r = r + monomial(ctx_, coeff(e) * a.pow(e), e);
        return r;
    }

    // t -> 1/t.
    LaurentPoly substitute_inverse() const {
        LaurentPoly r(ctx_);
        for (int e : support()) r = r + monomial(ctx_, coeff(e), -e);
        return r;
    }

    bool is_polynomial() const { return is_zero() || offset_ >= 0; }

    Poly to_poly() const {
        if (!is_polynomial()) throw DomainError("Laurent polynomial has negative exponents");
        if (is_zero()) return Poly::zero(ctx_);
        std::vector<Fq> c(static_cast<size_t>(max_exp()) + 1, Fq::zero(ctx_));
        for (int e : support()) c[static_cast<size_t>(e)] = coeff(e);
        return Poly(ctx_, std::move(c));
    }

    Fq eval(const Fq& x) const {
        if (!is_zero() && offset_ < 0 && x.is_zero())
            throw DomainError("evaluating a pole at zero");
        Fq r = Fq::zero(ctx_);
        for (int e : support()) r = r + coeff(e) * x.pow(e);
        return r;
    }

    std::string to_string(const std::string& var = "t") const;

private:
    void normalize() {
        size_t front = 0;
        while (front < c_.size() && c_[front].is_zero()) ++front;
        if (front == c_.size()) {
            c_.clear();
            offset_ = 0;
            return;
        }
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(front));
        offset_ += static_cast<int>(front);
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    FieldCtxPtr ctx_;
    int offset_; // exponent of c_[0]
    std::vector<Fq> c_;
};

// Membership in k[t^p] (resp. k[t^p, t^-p]): every exponent carrying a
// nonzero coefficient is divisible by p.  Valid as a test for being a p-th
// power because Frobenius is onto the coefficient field.
inline bool in_pth_power_subring(const Poly& f) {
    int64_t p = f.ctx()->p();
    for (int e = 0; e <= f.degree(); ++e)
        if (!f.coeff(e).is_zero() && e % p != 0) return false;
    return true;
}

inline bool in_pth_power_subring(const LaurentPoly& f) {
    int64_t p = f.ctx()->p();
    for (int e : f.support())
        if (e % p != 0) return false;
    return true;
}

// Canonical representative modulo k[t^p] (resp. k[t^p, t^-p]): drop every
// monomial whose exponent is divisible by p.
inline LaurentPoly canonical_mod_pth(const LaurentPoly& f) {
    int64_t p = f.ctx()->p();
    LaurentPoly r(f.ctx());
    for (int e : f.support())
        if (e % p != 0) r = r + LaurentPoly::monomial(f.ctx(), f.coeff(e), e);
    return r;
}

// ---------------------------------------------------------------------------
// Derivation1D: delta = g(t) * d/dt on A^1 or (A^1)^*.
// ---------------------------------------------------------------------------

class Derivation1D {
public:
    Derivation1D(FieldCtxPtr ctx, LaurentPoly coefficient)
        : ctx_(std::move(ctx)), g_(std::move(coefficient)) {}
    Derivation1D(FieldCtxPtr ctx, const Poly& coefficient)
        : ctx_(std::move(ctx)), g_(coefficient) {}

    const FieldCtxPtr& ctx() const { return ctx_; }
    const LaurentPoly& coefficient() const { return g_; }
    bool is_zero() const { return g_.is_zero(); }

    LaurentPoly apply(const LaurentPoly& f) const { return g_ * f.derivative(); }

    // delta^p, computed as the p-fold iterate on the coordinate t; a p-th
    // power of a derivation is again a derivation and is determined by its
    // value on t.
    Derivation1D pth_power() const {
        int64_t p = ctx_->p();
        LaurentPoly v = g_; // delta(t)
        for (int64_t i = 1; i < p; ++i) v = apply(v);
        return Derivation1D(ctx_, v);
    }

    bool is_additive() const { return pth_power().is_zero(); }          // delta^p = 0
    bool is_multiplicative() const { return pth_power().coefficient_equals(g_); } // delta^p = delta

    bool coefficient_equals(const LaurentPoly& other) const { return g_ == other; }

    friend bool operator==(const Derivation1D& a, const Derivation1D& b) { return a.g_ == b.g_; }
    friend bool operator!=(const Derivation1D& a, const Derivation1D& b) { return !(a == b); }

    std::string to_string(const std::string& var = "t") const {
        if (g_.is_zero()) return "0";
        return "(" + g_.to_string(var) + ")*d/d" + var;
    }

private:
    FieldCtxPtr ctx_;
    LaurentPoly g_;
};

inline Derivation1D derivation_pth_power(const Derivation1D& d) { return d.pth_power(); }

// --- printing --------------------------------------------------------------

inline std::string format_term(const Fq& c, int e, const std::string& var, bool first) {
    std::ostringstream os;
    if (!first) os << " + ";
    std::string cs = c.to_string();
    if (e == 0) {
        os << cs;
    } else {
        if (cs != "1") os << cs << "*";
        os << var;
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

inline std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (int e = degree(); e >= 0; --e) {
        if (coeff(e).is_zero()) continue;
        s += format_term(coeff(e), e, var, first);
        first = false;
    }
    return s;
}

inline std::string LaurentPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    auto sup = support();
    for (auto it = sup.rbegin(); it != sup.rend(); ++it) {
        s += format_term(coeff(*it), *it, var, first);
        first = false;
    }
    return s;
}

} // namespace fibclass::ffpoly

#endif
