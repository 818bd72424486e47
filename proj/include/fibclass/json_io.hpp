// JSON (de)serialization for the CLI and the fixture atlas: torsor classes,
// fibration data, classification results, diagnostics, and traces.  All
// numeric payloads are exact integers or coordinate vectors.
#ifndef FIBCLASS_JSON_IO_HPP
#define FIBCLASS_JSON_IO_HPP

#include <cctype>
#include <string>

#include <json.hpp>

#include "fibclass/classifier.hpp"
#include "fibclass/errors.hpp"
#include "fibclass/foliation.hpp"

namespace fibclass::io {

using nlohmann::json;
using std::int64_t;

// ---------------------------------------------------------------------------
// Laurent polynomial literals: "t^2 + 2t^-1 + 3", "2*t", "0".
// ---------------------------------------------------------------------------

inline ffpoly::LaurentPoly parse_laurent(const std::string& text, const ffpoly::FieldCtxPtr& ctx) {
    ffpoly::LaurentPoly sum(ctx);
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    bool first = true;
    skip_ws();
    if (i == text.size()) throw InvalidArgument("empty polynomial literal");
    while (i < text.size()) {
        skip_ws();
        int64_t sign = 1;
        if (!first || text[i] == '+' || text[i] == '-') {
            if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
                throw InvalidArgument("expected '+' or '-' between terms in '" + text + "'");
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        }
        first = false;
        int64_t coeff = 1;
        bool saw_digits = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coeff = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                coeff = coeff * 10 + (text[i++] - '0');
            saw_digits = true;
        }
        skip_ws();
        if (i < text.size() && text[i] == '*') { ++i; skip_ws(); }
        int exp = 0;
        bool saw_var = false;
        if (i < text.size() && (text[i] == 't' || text[i] == 'x')) {
            saw_var = true;
            exp = 1;
            ++i;
            skip_ws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                int esign = 1;
                if (i < text.size() && text[i] == '-') { esign = -1; ++i; }
                if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                    throw InvalidArgument("malformed exponent in '" + text + "'");
                int e = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    e = e * 10 + (text[i++] - '0');
                exp = esign * e;
            }
        }
        if (!saw_digits && !saw_var)
            throw InvalidArgument("malformed term in polynomial literal '" + text + "'");
        sum = sum + ffpoly::LaurentPoly::monomial(ctx, ffpoly::Fq(ctx, sign * coeff), exp);
        skip_ws();
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Torsor classes: { "base": "A1*", "group": "alpha_p", "p": 3, "rep": "t^2" }.
// ---------------------------------------------------------------------------

inline torsorcoh::TorsorClass torsor_class_from_json(const json& j) {
    int64_t p = j.at("p").get<int64_t>();
    int k = j.value("k", 1);
    auto ctx = ffpoly::FieldCtx::make(p, k);
    auto base_kind = torsorcoh::parse_base_kind(j.at("base").get<std::string>());
    if (!base_kind) throw InvalidArgument("unknown base curve '" + j.at("base").get<std::string>() + "'");

    torsorcoh::BaseCurve base{*base_kind, ctx, std::nullopt};
    std::string group = j.at("group").get<std::string>();
    if (group == "alpha_p") {
        auto rep = parse_laurent(j.value("rep", "0"), ctx);
        return torsorcoh::TorsorClass::alpha_class(base, rep);
    }
    if (group == "mu_p") {
        if (j.contains("exp")) return torsorcoh::TorsorClass::mu_class(base, j.at("exp").get<int64_t>());
        auto rep = parse_laurent(j.value("rep", "1"), ctx);
        if (rep.is_zero()) throw InvalidArgument("a mu_p-class is a monomial class t^i, not 0");
        if (rep.min_exp() != rep.max_exp() || rep.coeff(rep.min_exp()) != ffpoly::Fq::one(ctx))
            throw InvalidArgument("a mu_p-class is represented by a monomial t^i");
        return torsorcoh::TorsorClass::mu_class(base, rep.min_exp());
    }
    throw InvalidArgument("group must be 'alpha_p' or 'mu_p'");
}

inline json torsor_class_to_json(const torsorcoh::TorsorClass& cls) {
    json j;
    j["schema"] = 1;
    j["base"] = torsorcoh::to_string(cls.base().kind);
    j["group"] = torsorcoh::to_string(cls.group());
    j["p"] = cls.ctx()->p();
    j["k"] = cls.ctx()->k();
    j["rep"] = cls.rep_string();
    j["trivial"] = cls.is_trivial();
    return j;
}

// ---------------------------------------------------------------------------
// Curves and elementary subgroups.
// ---------------------------------------------------------------------------

inline elliptic::WeierstrassCurve curve_from_json(const json& j) {
    if (j.is_string()) return elliptic::WeierstrassCurve::parse(j.get<std::string>());
    // object form: { "p": 5, "k": 1, "a": [a1,a2,a3,a4,a6] } or { "fixture": "ordinary", "p": 5 }
    if (j.contains("fixture"))
        return elliptic::fixture_curve(j.at("fixture").get<std::string>(), j.at("p").get<int64_t>());
    auto ctx = ffpoly::FieldCtx::make(j.at("p").get<int64_t>(), j.value("k", 1));
    auto a = j.at("a");
    if (!a.is_array() || a.size() != 5) throw InvalidArgument("curve coefficients must be [a1,a2,a3,a4,a6]");
    return elliptic::WeierstrassCurve::from_ints(ctx, a[0].get<int64_t>(), a[1].get<int64_t>(),
                                                 a[2].get<int64_t>(), a[3].get<int64_t>(),
                                                 a[4].get<int64_t>());
}

inline json curve_to_json(const elliptic::WeierstrassCurve& E) {
    json j;
    j["p"] = E.ctx()->p();
    j["k"] = E.ctx()->k();
    if (E.coeffs_in_prime_subfield()) {
        j["a"] = {E.a1().coords()[0], E.a2().coords()[0], E.a3().coords()[0],
                  E.a4().coords()[0], E.a6().coords()[0]};
    }
    j["equation"] = E.to_string();
    j["j_invariant"] = E.j_invariant().to_string();
    j["supersingular"] = elliptic::is_supersingular(E);
    return j;
}

// ---------------------------------------------------------------------------
// Fibration data, field-for-field with the classifier's input type.
// ---------------------------------------------------------------------------

inline classifier::FibrationDatum datum_from_json(const json& j) {
    classifier::FibrationDatum d;
    d.fibre_genus = j.at("fibre_genus").get<int>();

    auto bk = classifier::parse_base_kind(j.at("base_kind").get<std::string>());
    if (!bk) throw InvalidArgument("unknown base_kind '" + j.at("base_kind").get<std::string>() + "'");
    d.base_kind = *bk;

    auto ak = classifier::parse_action_kind(j.at("action_kind").get<std::string>());
    if (!ak) throw InvalidArgument("unknown action_kind '" + j.at("action_kind").get<std::string>() + "'");
    d.action_kind = *ak;

    const json& fibre = j.at("fibre");
    if (d.fibre_genus >= 2) {
        classifier::HighGenusFibre f;
        f.genus = fibre.at("genus").get<int>();
        f.quotient_genus = fibre.at("quotient_genus").get<int>();
        f.action_free = fibre.at("action_free").get<bool>();
        d.high_genus = f;
        int64_t p = j.at("p").get<int64_t>();
        d.plain_group = groupscheme::GroupSchemeSpec::parse(j.at("group").get<std::string>(), p);
    } else {
        elliptic::WeierstrassCurve E = curve_from_json(fibre.at("curve"));
        int64_t p = E.ctx()->p();
        const json& g = j.at("group");
        // the symbolic token resolves by curve type: mu_p (ordinary) or
        // alpha_p (supersingular)
        std::string lt_text = g.value("translation_part", "e");
        const std::string token = "frobenius_kernel";
        for (size_t pos; (pos = lt_text.find(token)) != std::string::npos;)
            lt_text.replace(pos, token.size(), groupscheme::frobenius_kernel(E, 1).to_string());
        auto lt = groupscheme::GroupSchemeSpec::parse(lt_text, p);
        auto gp = groupscheme::GroupSchemeSpec::parse(g.value("graded_part", "e"), p);
        d.elem_group = groupscheme::ElementarySubgroup{E, lt, gp};
    }
    return d;
}

inline json datum_to_json(const classifier::FibrationDatum& d) {
    json j;
    j["schema"] = 1;
    j["fibre_genus"] = d.fibre_genus;
    j["base_kind"] = classifier::to_string(d.base_kind);
    j["action_kind"] = classifier::to_string(d.action_kind);
    if (d.high_genus) {
        j["fibre"] = {{"genus", d.high_genus->genus},
                      {"quotient_genus", d.high_genus->quotient_genus},
                      {"action_free", d.high_genus->action_free}};
    }
    if (d.plain_group) {
        j["group"] = d.plain_group->to_string();
        j["p"] = d.plain_group->p();
    }
    if (d.elem_group) {
        j["fibre"] = {{"curve", curve_to_json(d.elem_group->curve)}};
        j["group"] = {{"translation_part", d.elem_group->translation_part.to_string()},
                      {"graded_part", d.elem_group->graded_part.to_string()}};
    }
    return j;
}

// ---------------------------------------------------------------------------
// Diagnostics and classification outcomes.
// ---------------------------------------------------------------------------

inline json diagnostics_to_json(const groupscheme::Diagnostics& diag) {
    json checks = json::array();
    for (const auto& c : diag.checks)
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"message", c.message}});
    return checks;
}

inline json result_to_json(const classifier::ClassificationResult& r) {
    json j;
    j["schema"] = 1;
    j["accepted"] = true;
    j["case"] = r.case_label;
    j["base_genus"] = r.base_genus;
    json fibres = json::array();
    for (const auto& f : r.singular_fibres) {
        json e;
        e["location"] = f.location;
        if (f.type) e["type"] = f.type->to_string();
        e["multiplicity"] = f.multiplicity;
        e["symbol"] = f.symbol();
        fibres.push_back(e);
    }
    j["singular_fibres"] = fibres;
    j["kappa"] = classifier::to_string(r.kappa);
    if (r.q) j["q"] = *r.q; else j["q"] = "n/a";
    j["minimal"] = r.minimal;
    j["notes"] = r.notes;
    return j;
}

inline json rejection_to_json(const classifier::Rejection& r) {
    json j;
    j["schema"] = 1;
    j["accepted"] = false;
    j["violated_hypothesis"] = r.violated_hypothesis;
    j["diagnostics"] = diagnostics_to_json(r.diagnostics);
    return j;
}

inline json outcome_to_json(const classifier::ClassifyOutcome& o) {
    if (classifier::accepted(o)) return result_to_json(classifier::result_of(o));
    return rejection_to_json(classifier::rejection_of(o));
}

// ---------------------------------------------------------------------------
// Automorphism groups and the foliation trace.
// ---------------------------------------------------------------------------

inline json aut_group_to_json(const elliptic::AutGroupDescriptor& d) {
    json j;
    j["schema"] = 1;
    j["order"] = d.order;
    j["cyclic"] = d.is_cyclic;
    j["maximal_abelian_orders"] = d.maximal_abelian_orders;
    j["j_class"] = elliptic::to_string(d.j_class);
    j["model"] = curve_to_json(d.model);
    json gens = json::array();
    for (const auto& g : d.generators) {
        auto [valid, order] = elliptic::verify_automorphism(d.model, g);
        gens.push_back({{"map", g.to_string()}, {"order", order}, {"valid", valid}});
    }
    j["generators"] = gens;
    return j;
}

inline json family_trace_to_json(const foliation::FamilyTrace& tr) {
    json j;
    j["schema"] = 1;
    j["p"] = tr.p;
    j["curve"] = curve_to_json(tr.affine.curve);
    j["affine_generator"] = {{"d_dx", tr.affine.affine_coeff.to_string("x")},
                             {"delta2", tr.affine.elliptic_coeff.to_string("x")}};
    j["infinity_generator"] = {{"d_dt", tr.extension.generator.affine_coeff.to_string()},
                               {"delta2", tr.extension.generator.elliptic_coeff.to_string()}};
    j["rescale_exponent"] = tr.extension.rescale_exponent;
    j["nowhere_vanishing"] = tr.extension.nowhere_vanishing;
    j["c1_p2_degree"] = tr.c1_p2_degree;
    j["ky_p2_degree"] = tr.ky_p2_degree;
    j["pullback_degree"] = tr.pullback_degree;
    j["nef"] = tr.verdict.nef;
    if (tr.verdict.kappa) j["kappa"] = *tr.verdict.kappa; else j["kappa"] = "unasserted";
    j["notes"] = tr.verdict.notes;
    json van = json::array();
    for (const auto& [root, mult] : tr.affine_vanishing)
        van.push_back({{"root", root.to_string()}, {"multiplicity", mult}});
    j["affine_vanishing_locus"] = van;
    return j;
}

} // namespace fibclass::io

#endif
