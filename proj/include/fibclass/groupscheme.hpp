// Finite group schemes as formal products of atoms Z/n, mu_{p^k}, alpha_{p^k}
// and the non-split supersingular p-torsion kernel, together with the
// containment calculus the classification needs: embeddings into G_a, G_m and
// elliptic curves, fixed subgroup schemes E^Gamma, and elementary subgroups
// of Aut(E).
#ifndef FIBCLASS_GROUPSCHEME_HPP
#define FIBCLASS_GROUPSCHEME_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "fibclass/elliptic.hpp"
#include "fibclass/errors.hpp"

namespace fibclass::groupscheme {

using elliptic::JClass;
using elliptic::WeierstrassCurve;
using std::int64_t;

enum class AtomKind { Etale, Mu, Alpha, SSKernel };

struct Atom {
    AtomKind kind = AtomKind::Etale;
    int64_t n = 1; // Etale: group order; Mu/Alpha: exponent k of p^k; SSKernel: unused
    int64_t p = 0; // characteristic; 0 for Etale atoms (characteristic-free)

    int64_t order(int64_t ambient_p) const {
        switch (kind) {
            case AtomKind::Etale: return n;
            case AtomKind::Mu:
            case AtomKind::Alpha: {
                int64_t q = 1;
                for (int64_t i = 0; i < n; ++i) q *= (p ? p : ambient_p);
                return q;
            }
            case AtomKind::SSKernel: {
                int64_t pp = p ? p : ambient_p;
                return pp * pp;
            }
        }
        return 1;
    }

    bool is_etale() const { return kind == AtomKind::Etale; }
    bool is_infinitesimal() const { return !is_etale(); }

    friend bool operator==(const Atom& a, const Atom& b) {
        return a.kind == b.kind && a.n == b.n && a.p == b.p;
    }
    friend bool operator<(const Atom& a, const Atom& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.n < b.n;
    }
};

// ---------------------------------------------------------------------------
// GroupSchemeSpec: a formal product of atoms, normalized and sorted.
// ---------------------------------------------------------------------------

class GroupSchemeSpec {
public:
    explicit GroupSchemeSpec(int64_t p) : p_(p) {
        if (!ffpoly::detail::is_prime(p)) throw InvalidArgument("specs live over a prime characteristic");
    }
    GroupSchemeSpec(int64_t p, std::vector<Atom> atoms) : GroupSchemeSpec(p) {
        for (auto& a : atoms) push(a);
        normalize();
    }

    static GroupSchemeSpec trivial(int64_t p) { return GroupSchemeSpec(p); }
    static GroupSchemeSpec etale(int64_t p, int64_t n) {
        return GroupSchemeSpec(p, {Atom{AtomKind::Etale, n, 0}});
    }
    static GroupSchemeSpec mu(int64_t p, int64_t k = 1) {
        return GroupSchemeSpec(p, {Atom{AtomKind::Mu, k, p}});
    }
    static GroupSchemeSpec alpha(int64_t p, int64_t k = 1) {
        return GroupSchemeSpec(p, {Atom{AtomKind::Alpha, k, p}});
    }
    static GroupSchemeSpec ss_kernel(int64_t p) {
        return GroupSchemeSpec(p, {Atom{AtomKind::SSKernel, 0, p}});
    }

    // Literal syntax: "Z/4 x mu_3", "alpha_3", "sskernel", "e".
    static GroupSchemeSpec parse(const std::string& text, int64_t p);

    int64_t p() const { return p_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    bool is_trivial() const { return atoms_.empty(); }

    int64_t total_order() const {
        int64_t o = 1;
        for (const auto& a : atoms_) o *= a.order(p_);
        return o;
    }

    GroupSchemeSpec etale_part() const {
        GroupSchemeSpec r(p_);
        for (const auto& a : atoms_)
            if (a.is_etale()) r.push(a);
        r.normalize();
        return r;
    }
    GroupSchemeSpec connected_part() const {
        GroupSchemeSpec r(p_);
        for (const auto& a : atoms_)
            if (a.is_infinitesimal()) r.push(a);
        r.normalize();
        return r;
    }

    GroupSchemeSpec product(const GroupSchemeSpec& other) const {
        GroupSchemeSpec r(p_);
        for (const auto& a : atoms_) r.push(a);
        for (const auto& a : other.atoms_) r.push(a);
        r.normalize();
        return r;
    }

    bool has_kind(AtomKind k) const {
        return std::any_of(atoms_.begin(), atoms_.end(), [&](const Atom& a) { return a.kind == k; });
    }
    int count_kind(AtomKind k) const {
        return static_cast<int>(std::count_if(atoms_.begin(), atoms_.end(),
                                              [&](const Atom& a) { return a.kind == k; }));
    }

    // An etale spec is cyclic iff its factor orders are pairwise coprime.
    bool etale_is_cyclic() const {
        std::vector<int64_t> orders;
        for (const auto& a : atoms_)
            if (a.is_etale()) orders.push_back(a.n);
        for (size_t i = 0; i < orders.size(); ++i)
            for (size_t j = i + 1; j < orders.size(); ++j)
                if (std::gcd(orders[i], orders[j]) != 1) return false;
        return true;
    }

    friend bool operator==(const GroupSchemeSpec& a, const GroupSchemeSpec& b) {
        return a.p_ == b.p_ && a.atoms_ == b.atoms_;
    }
    friend bool operator!=(const GroupSchemeSpec& a, const GroupSchemeSpec& b) { return !(a == b); }

    std::string to_string() const {
        if (atoms_.empty()) return "e";
        std::string s;
        for (size_t i = 0; i < atoms_.size(); ++i) {
            if (i) s += " x ";
            const Atom& a = atoms_[i];
            switch (a.kind) {
                case AtomKind::Etale: s += "Z/" + std::to_string(a.n); break;
                case AtomKind::Mu: s += "mu_" + std::to_string(a.order(p_)); break;
                case AtomKind::Alpha: s += "alpha_" + std::to_string(a.order(p_)); break;
                case AtomKind::SSKernel: s += "sskernel"; break;
            }
        }
        return s;
    }

private:
    void push(const Atom& a) {
        if (a.kind == AtomKind::Etale && a.n <= 1) return;       // drop trivial factors
        if ((a.kind == AtomKind::Mu || a.kind == AtomKind::Alpha) && a.n <= 0) return;
        Atom b = a;
        if (b.kind != AtomKind::Etale) b.p = p_;
        atoms_.push_back(b);
    }
    void normalize() { std::sort(atoms_.begin(), atoms_.end()); }

    int64_t p_;
    std::vector<Atom> atoms_;
};

inline GroupSchemeSpec GroupSchemeSpec::parse(const std::string& text, int64_t p) {
    auto strip = [](const std::string& s) {
        size_t b = s.find_first_not_of(" \t");
        size_t e = s.find_last_not_of(" \t");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::vector<std::string> tokens;
    std::string current;
    std::istringstream in(text);
    std::string word;
    while (in >> word) {
        if (word == "x" || word == "*") {
            tokens.push_back(strip(current));
            current.clear();
        } else {
            if (!current.empty()) current += " ";
            current += word;
        }
    }
    if (!strip(current).empty()) tokens.push_back(strip(current));
    if (tokens.empty()) throw InvalidArgument("empty group scheme literal");

    GroupSchemeSpec spec(p);
    std::vector<Atom> atoms;
    auto parse_int = [](const std::string& s) {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw InvalidArgument("expected an integer in group scheme literal, got '" + s + "'");
        return std::stoll(s);
    };
    auto exponent_of = [&](int64_t q) {
        int64_t k = 0, v = q;
        while (v > 1 && v % p == 0) { v /= p; ++k; }
        if (v != 1 || k == 0)
            throw InvalidArgument("subscript " + std::to_string(q) + " is not a positive power of p = " +
                                  std::to_string(p));
        return k;
    };
    for (const auto& tok : tokens) {
        if (tok == "e" || tok == "1" || tok == "id") continue;
        if (tok.rfind("Z/", 0) == 0) {
            int64_t n = parse_int(tok.substr(2));
            if (n < 1) throw InvalidArgument("etale order must be >= 1");
            atoms.push_back(Atom{AtomKind::Etale, n, 0});
        } else if (tok.rfind("mu_", 0) == 0) {
            atoms.push_back(Atom{AtomKind::Mu, exponent_of(parse_int(tok.substr(3))), p});
        } else if (tok.rfind("alpha_", 0) == 0) {
            atoms.push_back(Atom{AtomKind::Alpha, exponent_of(parse_int(tok.substr(6))), p});
        } else if (tok == "sskernel") {
            atoms.push_back(Atom{AtomKind::SSKernel, 0, p});
        } else {
            throw InvalidArgument("unrecognized group scheme atom: '" + tok + "'");
        }
    }
    return GroupSchemeSpec(p, std::move(atoms));
}

// ---------------------------------------------------------------------------
// Atom-wise containment.  Two specs are comparable iff a matching of the
// sub-spec's atoms into distinct atoms of the super-spec exists where each
// pair satisfies the isomorphism-type dominance rule.
// ---------------------------------------------------------------------------

inline bool atom_le(const Atom& a, const Atom& b) {
    if (a.kind == AtomKind::Etale && b.kind == AtomKind::Etale) return b.n % a.n == 0;
    if (a.kind == AtomKind::Mu && b.kind == AtomKind::Mu) return a.n <= b.n;
    if (a.kind == AtomKind::Alpha && b.kind == AtomKind::Alpha) return a.n <= b.n;
    if (a.kind == AtomKind::Alpha && b.kind == AtomKind::SSKernel) return a.n == 1; // alpha_p sits inside E[p]
    if (a.kind == AtomKind::SSKernel && b.kind == AtomKind::SSKernel) return true;
    return false;
}

namespace detail {
inline bool match_atoms(const std::vector<Atom>& sub, size_t i,
                        const std::vector<Atom>& super, std::vector<bool>& used) {
    if (i == sub.size()) return true;
    for (size_t j = 0; j < super.size(); ++j) {
        if (used[j] || !atom_le(sub[i], super[j])) continue;
        used[j] = true;
        if (match_atoms(sub, i + 1, super, used)) return true;
        used[j] = false;
    }
    return false;
}
} // namespace detail

inline bool dominates(const GroupSchemeSpec& super, const GroupSchemeSpec& sub) {
    std::vector<bool> used(super.atoms().size(), false);
    return detail::match_atoms(sub.atoms(), 0, super.atoms(), used);
}

// ---------------------------------------------------------------------------
// Embeddings into the one-dimensional groups.
// ---------------------------------------------------------------------------

// Finite subgroup schemes of G_a are alpha_{p^n} x V for an F_p-linear space
// V: at most one alpha atom, every etale factor of order exactly p, and no
// multiplicative or supersingular-kernel part.
inline bool embeds_in_Ga(const GroupSchemeSpec& spec) {
    if (spec.has_kind(AtomKind::Mu) || spec.has_kind(AtomKind::SSKernel)) return false;
    if (spec.count_kind(AtomKind::Alpha) > 1) return false;
    for (const auto& a : spec.atoms())
        if (a.is_etale() && a.n != spec.p()) return false;
    return true;
}

// Finite subgroup schemes of G_m are mu_{p^n} x Z/m with (m, p) = 1: at most
// one mu atom, cyclic prime-to-p etale part, nothing unipotent.
inline bool embeds_in_Gm(const GroupSchemeSpec& spec) {
    if (spec.has_kind(AtomKind::Alpha) || spec.has_kind(AtomKind::SSKernel)) return false;
    if (spec.count_kind(AtomKind::Mu) > 1) return false;
    for (const auto& a : spec.atoms())
        if (a.is_etale() && a.n % spec.p() == 0) return false;
    return spec.etale_is_cyclic();
}

// Whether the spec is a subgroup scheme of an elliptic curve.  When the
// curve's type is known, pass supersingular; otherwise the test asks for the
// existence of a compatible curve.  The deciding facts: prime-to-p torsion is
// (Z/n)^2-shaped (at most two cyclic factors per prime), the p-divisible part
// is Z/p^inf x mu_p^inf for ordinary curves and the Frobenius-kernel chain
// (alpha_p inside the non-split E[p]) for supersingular ones, and the two
// shapes exclude each other.
inline bool embeds_in_elliptic(const GroupSchemeSpec& spec,
                               std::optional<bool> supersingular = std::nullopt,
                               std::string* reason = nullptr) {
    auto fail = [&](const std::string& why) {
        if (reason) *reason = why;
        return false;
    };
    const int64_t p = spec.p();
    bool needs_ordinary = false, needs_ss = false;
    int mu_atoms = 0, alpha_atoms = 0, ss_atoms = 0;
    std::map<int64_t, int> etale_factors_per_prime;
    for (const auto& a : spec.atoms()) {
        switch (a.kind) {
            case AtomKind::Mu:
                ++mu_atoms;
                needs_ordinary = true;
                break;
            case AtomKind::Alpha:
                ++alpha_atoms;
                needs_ss = true;
                if (a.n > 1) return fail("alpha_{p^k} with k >= 2 is not a subgroup scheme of an elliptic curve");
                break;
            case AtomKind::SSKernel:
                ++ss_atoms;
                needs_ss = true;
                break;
            case AtomKind::Etale: {
                int64_t n = a.n;
                for (int64_t d = 2; d <= n; ++d) {
                    if (n % d) continue;
                    etale_factors_per_prime[d]++;
                    while (n % d == 0) n /= d;
                }
                break;
            }
        }
    }
    if (mu_atoms > 1) return fail("the multiplicative p-divisible part of an elliptic curve has corank one");
    if (alpha_atoms > 1) return fail("an elliptic curve contains a single copy of alpha_p");
    if (ss_atoms > 1 || (ss_atoms && alpha_atoms))
        return fail("the p-torsion of a supersingular curve contains no product of local parts");
    for (auto& [prime, count] : etale_factors_per_prime) {
        if (count > 2)
            return fail("torsion of an elliptic curve has at most two cyclic factors per prime");
        if (prime == p) {
            if (count > 1) return fail("the etale p-part of an elliptic curve is cyclic");
            needs_ordinary = true;
        }
    }
    if (needs_ordinary && needs_ss)
        return fail("etale/multiplicative p-parts (ordinary) and unipotent kernels (supersingular) "
                    "never coexist in one elliptic curve");
    if (supersingular.has_value()) {
        if (*supersingular && needs_ordinary)
            return fail("a supersingular curve has neither rational p-torsion nor a mu-type kernel");
        if (!*supersingular && needs_ss)
            return fail("an ordinary elliptic curve does not contain alpha_p");
    }
    if (reason) reason->clear();
    return true;
}

// ---------------------------------------------------------------------------
// Torsion subgroup schemes and Frobenius kernels of a concrete curve.
// ---------------------------------------------------------------------------

inline GroupSchemeSpec torsion_structure(const WeierstrassCurve& E, int64_t n) {
    const int64_t p = E.ctx()->p();
    if (n < 1) throw InvalidArgument("torsion level must be >= 1");
    int64_t m = n, e = 0;
    while (m % p == 0) { m /= p; ++e; }
    std::vector<Atom> atoms;
    if (m > 1) {
        atoms.push_back(Atom{AtomKind::Etale, m, 0});
        atoms.push_back(Atom{AtomKind::Etale, m, 0});
    }
    if (e >= 1) {
        if (!elliptic::is_supersingular(E)) {
            int64_t pe = 1;
            for (int64_t i = 0; i < e; ++i) pe *= p;
            atoms.push_back(Atom{AtomKind::Etale, pe, 0});
            atoms.push_back(Atom{AtomKind::Mu, e, p});
        } else if (e == 1) {
            atoms.push_back(Atom{AtomKind::SSKernel, 0, p});
        } else {
            throw UnsupportedError("p-power torsion of a supersingular curve beyond E[p] is not modelled");
        }
    }
    return GroupSchemeSpec(p, std::move(atoms));
}

// Ker(F^k): mu_{p^k} for an ordinary curve, alpha_p (k = 1) or the non-split
// E[p] kernel (k = 2) for a supersingular one.
inline GroupSchemeSpec frobenius_kernel(const WeierstrassCurve& E, int64_t k) {
    const int64_t p = E.ctx()->p();
    if (k < 0) throw InvalidArgument("Frobenius power must be >= 0");
    if (k == 0) return GroupSchemeSpec::trivial(p);
    if (!elliptic::is_supersingular(E)) return GroupSchemeSpec::mu(p, k);
    if (k == 1) return GroupSchemeSpec::alpha(p);
    if (k == 2) return GroupSchemeSpec::ss_kernel(p);
    throw UnsupportedError("iterated Frobenius kernels of a supersingular curve beyond order p^2 are not modelled");
}

// ---------------------------------------------------------------------------
// Fixed subgroup schemes E^Gamma, keyed on (p, j-class, |Gamma|).
// ---------------------------------------------------------------------------

inline GroupSchemeSpec fixed_subgroup(const WeierstrassCurve& E, int gamma_order) {
    const int64_t p = E.ctx()->p();
    const JClass jc = elliptic::j_class(E);
    if (gamma_order == 1)
        throw DomainError("the trivial group fixes the whole curve, not a finite subgroup scheme");
    auto legal = elliptic::legal_gamma_orders(p, jc);
    if (std::find(legal.begin(), legal.end(), gamma_order) == legal.end())
        throw DomainError("unsupported subgroup: no cyclic group of order " + std::to_string(gamma_order) +
                          " in the automorphism group for this (p, j)");

    auto two_torsion = [&]() {
        if (p == 2) {
            // j != 0 forces an ordinary curve; j = 0 is the supersingular one
            if (jc == JClass::J0) return GroupSchemeSpec::ss_kernel(p);
            return GroupSchemeSpec(p, {Atom{AtomKind::Mu, 1, p}, Atom{AtomKind::Etale, 2, 0}});
        }
        return GroupSchemeSpec(p, {Atom{AtomKind::Etale, 2, 0}, Atom{AtomKind::Etale, 2, 0}});
    };

    switch (jc) {
        case JClass::Generic:
            if (gamma_order == 2) return two_torsion();
            break;
        case JClass::J1728: // p >= 5 here
            if (gamma_order == 2) return two_torsion();
            if (gamma_order == 4) return GroupSchemeSpec::etale(p, 2);
            break;
        case JClass::J0:
            if (p == 3) {
                if (gamma_order == 2) return two_torsion();
                if (gamma_order == 3) return GroupSchemeSpec::alpha(p); // Ker F
                if (gamma_order == 4) return GroupSchemeSpec::etale(p, 2);
                if (gamma_order == 6) return GroupSchemeSpec::trivial(p);
            } else if (p == 2) {
                if (gamma_order == 2) return two_torsion(); // infinitesimal E[2]
                if (gamma_order == 3) return GroupSchemeSpec::etale(p, 3);
                if (gamma_order == 4) return GroupSchemeSpec::alpha(p); // Ker F
                if (gamma_order == 6) return GroupSchemeSpec::trivial(p);
            } else {
                if (gamma_order == 2) return two_torsion();
                if (gamma_order == 3) return GroupSchemeSpec::etale(p, 3);
                if (gamma_order == 6) return GroupSchemeSpec::trivial(p);
            }
            break;
    }
    throw DomainError("unsupported subgroup order for this curve"); // unreachable after the legality check
}

// ---------------------------------------------------------------------------
// Elementary subgroups Lambda_t x Gamma of Aut(E) and their validation.
// ---------------------------------------------------------------------------

struct ElementarySubgroup {
    WeierstrassCurve curve;
    GroupSchemeSpec translation_part; // Lambda_t, a subgroup scheme of E
    GroupSchemeSpec graded_part;      // Gamma, a finite constant group of group automorphisms
};

struct Diagnostics {
    struct Check {
        std::string name;
        bool passed = true;
        std::string message;
    };
    std::vector<Check> checks;

    bool ok() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
    }
    const Check* first_failure() const {
        for (const auto& c : checks)
            if (!c.passed) return &c;
        return nullptr;
    }
    void add(const std::string& name, bool passed, const std::string& message = "") {
        checks.push_back({name, passed, message});
    }
};

// The normalized product spec Lambda_t x Gamma.
inline GroupSchemeSpec normalized_spec(const ElementarySubgroup& sub) {
    return sub.translation_part.product(sub.graded_part);
}

// Confirms Gamma is cyclic of a legal order and Lambda_t sits inside the
// fixed locus E^Gamma (inside E itself when Gamma is trivial).
inline Diagnostics validate_elementary(const ElementarySubgroup& sub) {
    Diagnostics d;
    const auto& E = sub.curve;
    const int64_t p = E.ctx()->p();
    const JClass jc = elliptic::j_class(E);

    bool etale_only = !sub.graded_part.has_kind(AtomKind::Mu) &&
                      !sub.graded_part.has_kind(AtomKind::Alpha) &&
                      !sub.graded_part.has_kind(AtomKind::SSKernel);
    d.add("graded-part-constant", etale_only,
          etale_only ? "" : "group automorphisms of an elliptic curve form a constant group scheme");

    bool cyclic = etale_only && sub.graded_part.etale_is_cyclic();
    d.add("graded-part-cyclic", cyclic,
          cyclic ? "" : "cyclicity violation: Abelian automorphism subgroups are cyclic");

    int64_t gorder = sub.graded_part.total_order();
    auto legal = elliptic::legal_gamma_orders(p, jc);
    bool legal_order = std::find(legal.begin(), legal.end(), static_cast<int>(gorder)) != legal.end();
    d.add("graded-part-order", legal_order,
          legal_order ? "" : "no automorphism subgroup of order " + std::to_string(gorder) +
                              " for j-class " + elliptic::to_string(jc) + " in characteristic " +
                              std::to_string(p));

    if (!cyclic || !legal_order) return d;

    if (gorder == 1) {
        std::string why;
        bool sub_ok = embeds_in_elliptic(sub.translation_part, elliptic::is_supersingular(E), &why);
        d.add("translation-part-in-curve", sub_ok, why);
    } else {
        GroupSchemeSpec fixed = fixed_subgroup(E, static_cast<int>(gorder));
        bool inside = dominates(fixed, sub.translation_part);
        d.add("translation-part-in-fixed-locus", inside,
              inside ? "" : "fixed-locus violation: " + sub.translation_part.to_string() +
                             " is not contained in E^Gamma = " + fixed.to_string());
    }
    return d;
}

// A subgroup of Aut(E) acts freely on E iff it sits in the translations,
// i.e. the graded part is trivial.
inline bool free_on_E(const ElementarySubgroup& sub) {
    return sub.graded_part.is_trivial();
}

} // namespace fibclass::groupscheme

#endif
