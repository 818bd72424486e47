// Command-line front end: every library operation as a subcommand with JSON
// or table output.  Exit codes: 0 success, 2 validation rejection (the
// rejection object is still emitted), 1 internal error, 64 usage error.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fibclass/json_io.hpp"
#include "fibclass/toml_lite.hpp"

using nlohmann::json;
using namespace fibclass;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitRejected = 2;
constexpr int kExitUsage = 64;

void print_table(const json& j, std::ostream& os, const std::string& prefix = "") {
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (it->is_object()) {
            print_table(*it, os, key);
        } else if (it->is_array() && !it->empty() && (*it)[0].is_object()) {
            int i = 0;
            for (const auto& e : *it) print_table(e, os, key + "[" + std::to_string(i++) + "]");
        } else {
            os << key << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
        }
    }
}

void emit(const json& j, const std::string& format) {
    if (format == "table")
        print_table(j, std::cout);
    else
        std::cout << j.dump(2) << std::endl;
}

json load_input(const std::string& path) {
    if (path.size() > 5 && path.substr(path.size() - 5) == ".toml")
        return io::toml_lite::parse_file(path);
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open input file: " + path);
    json j;
    in >> j;
    return j;
}

elliptic::WeierstrassCurve resolve_curve(const std::string& curve_text,
                                         const std::string& fixture, std::int64_t p) {
    if (!curve_text.empty()) return elliptic::WeierstrassCurve::parse(curve_text);
    if (!fixture.empty()) return elliptic::fixture_curve(fixture, p);
    throw InvalidArgument("specify either --curve or --fixture with --p");
}

torsorcoh::TorsorClass resolve_class(const std::string& base, const std::string& group,
                                     std::int64_t p, int k, const std::string& rep) {
    json j;
    j["base"] = base;
    j["group"] = group;
    j["p"] = p;
    j["k"] = k;
    j["rep"] = rep;
    return io::torsor_class_from_json(j);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification toolkit for isotrivial surface fibrations with "
                 "infinite equivariant automorphism group"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));

    // --- aut-group ---------------------------------------------------------
    auto* aut = app.add_subcommand("aut-group", "automorphism group of an elliptic curve by (p, j)");
    std::int64_t aut_p = 0;
    std::string aut_j = "0", aut_curve;
    aut->add_option("--p", aut_p, "characteristic")->required();
    aut->add_option("--j", aut_j, "j-invariant: an integer, or 'generic'");
    aut->add_option("--curve", aut_curve, "explicit curve 'p=3; k=1; a=[a1,a2,a3,a4,a6]'");

    // --- curve-info --------------------------------------------------------
    auto* info = app.add_subcommand("curve-info", "invariants of a Weierstrass curve");
    std::string info_curve, info_fixture;
    std::int64_t info_p = 0;
    int info_torsion = 4;
    info->add_option("--curve", info_curve, "curve text 'p=3; k=1; a=[...]'");
    info->add_option("--fixture", info_fixture, "named fixture: j0, j1728, generic, ordinary, supersingular");
    info->add_option("--p", info_p, "characteristic for --fixture");
    info->add_option("--max-torsion", info_torsion, "report torsion structure up to this level");

    // --- torsor-classes ----------------------------------------------------
    auto* tc = app.add_subcommand("torsor-classes", "class space H^1(Y, mu_p or alpha_p)");
    std::string tc_base = "A1", tc_group = "alpha_p";
    std::int64_t tc_p = 0;
    int tc_k = 1, tc_maxdeg = 0;
    tc->add_option("--base", tc_base, "base curve: P1, A1, A1*, elliptic")->required();
    tc->add_option("--group", tc_group, "mu_p or alpha_p")->required();
    tc->add_option("--p", tc_p, "characteristic")->required();
    tc->add_option("--k", tc_k, "coefficient field extension degree");
    tc->add_option("--max-degree", tc_maxdeg, "also list canonical monomial exponents up to this degree");

    // --- stabilizer --------------------------------------------------------
    auto* stab = app.add_subcommand("stabilizer", "stabilizer of a torsor class under the base automorphisms");
    std::string stab_base = "A1", stab_group = "alpha_p", stab_rep = "0";
    std::int64_t stab_p = 0;
    int stab_k = 1;
    bool stab_oracle = false;
    stab->add_option("--base", stab_base)->required();
    stab->add_option("--group", stab_group)->required();
    stab->add_option("--p", stab_p)->required();
    stab->add_option("--k", stab_k);
    stab->add_option("--rep", stab_rep, "class representative, e.g. 't^2 + 2t^-1'");
    stab->add_flag("--oracle", stab_oracle, "also run the exhaustive finite-field stabilizer");

    // --- reduce ------------------------------------------------------------
    auto* red = app.add_subcommand("reduce", "rank-one structure-group reduction of a torsor class");
    std::string red_base = "A1", red_group = "alpha_p", red_rep = "0";
    std::int64_t red_p = 0;
    int red_k = 1;
    red->add_option("--base", red_base)->required();
    red->add_option("--group", red_group)->required();
    red->add_option("--p", red_p)->required();
    red->add_option("--k", red_k);
    red->add_option("--rep", red_rep);

    // --- torsion-bound -----------------------------------------------------
    auto* tb = app.add_subcommand("torsion-bound", "annihilator of a genus-one torsor class from multisection degrees");
    std::vector<std::int64_t> tb_degrees;
    tb->add_option("--degrees", tb_degrees, "multisection degrees")->required()->delimiter(',');

    // --- foliation-trace ---------------------------------------------------
    auto* ft = app.add_subcommand("foliation-trace", "rank-one foliation pipeline on E x P^1 for the x^p d/dx family");
    std::int64_t ft_p = 0;
    ft->add_option("--p", ft_p, "characteristic")->required();

    // --- classify / validate ------------------------------------------------
    auto* cl = app.add_subcommand("classify", "classify a fibration construction datum");
    std::string cl_input;
    cl->add_option("--input,--fixture", cl_input, "JSON datum file")->required();

    auto* va = app.add_subcommand("validate", "validate a fibration construction datum (diagnostics only)");
    std::string va_input;
    va->add_option("--input,--fixture", va_input, "JSON datum file")->required();

    // --- pair-classify -----------------------------------------------------
    auto* pc = app.add_subcommand("pair-classify", "classify a pair (torsor curve kind, acting group scheme)");
    std::string pc_kind, pc_group, pc_curve;
    std::int64_t pc_p = 0;
    pc->add_option("--t-kind", pc_kind, "curve kind: elliptic, P1, A1, A1*")->required();
    pc->add_option("--group", pc_group, "group scheme literal, e.g. 'mu_3 x Z/4'")->required();
    pc->add_option("--p", pc_p, "characteristic")->required();
    pc->add_option("--curve", pc_curve, "optional elliptic curve for the elliptic case");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*aut) {
            elliptic::WeierstrassCurve E = [&] {
                if (!aut_curve.empty()) return elliptic::WeierstrassCurve::parse(aut_curve);
                if (aut_j == "generic") return elliptic::fixture_curve("generic", aut_p);
                auto ctx = ffpoly::FieldCtx::make(aut_p, 1);
                std::int64_t jv = std::stoll(aut_j);
                ffpoly::Fq j(ctx, jv);
                if (j.is_zero()) return elliptic::fixture_curve("j0", aut_p);
                if (j == ffpoly::Fq(ctx, 1728)) return elliptic::fixture_curve("j1728", aut_p);
                return elliptic::fixture_curve("generic", aut_p);
            }();
            emit(io::aut_group_to_json(elliptic::aut_group(E)), format);
            return kExitOk;
        }

        if (*info) {
            auto E = resolve_curve(info_curve, info_fixture, info_p);
            json j = io::curve_to_json(E);
            j["schema"] = 1;
            j["j_class"] = elliptic::to_string(elliptic::j_class(E));
            j["discriminant"] = E.discriminant().to_string();
            std::int64_t count = elliptic::point_count(E);
            j["point_count"] = count;
            j["hasse_bound_ok"] = elliptic::hasse_bound_holds(E.ctx()->size(), count);
            j["supersingular_oracle"] = elliptic::is_supersingular_oracle(E);
            j["aut_group_order"] = elliptic::aut_order(E.ctx()->p(), elliptic::j_class(E));
            j["frobenius_kernel"] = groupscheme::frobenius_kernel(E, 1).to_string();
            json tors = json::object();
            for (int n = 1; n <= info_torsion; ++n) {
                try {
                    tors[std::to_string(n)] = groupscheme::torsion_structure(E, n).to_string();
                } catch (const UnsupportedError& e) {
                    tors[std::to_string(n)] = std::string("unsupported: ") + e.what();
                }
            }
            j["torsion_structure"] = tors;
            emit(j, format);
            return kExitOk;
        }

        if (*tc) {
            auto ctx = ffpoly::FieldCtx::make(tc_p, tc_k);
            auto kind = torsorcoh::parse_base_kind(tc_base);
            if (!kind) throw InvalidArgument("unknown base '" + tc_base + "'");
            torsorcoh::BaseCurve base{*kind, ctx, std::nullopt};
            auto group = tc_group == "mu_p" ? torsorcoh::RankOneGroup::MuP
                                            : torsorcoh::RankOneGroup::AlphaP;
            if (tc_group != "mu_p" && tc_group != "alpha_p")
                throw InvalidArgument("group must be mu_p or alpha_p");
            auto desc = torsorcoh::h1_description(base, group);
            json j;
            j["schema"] = 1;
            j["base"] = tc_base;
            j["group"] = tc_group;
            j["p"] = tc_p;
            j["description"] = desc.description;
            j["class_count"] = desc.class_count;
            if (!desc.mu_classes.empty()) {
                json cls = json::array();
                for (const auto& c : desc.mu_classes) {
                    json e = io::torsor_class_to_json(c);
                    auto eq = torsorcoh::torsor_equation(c);
                    e["equation"] = eq.equation;
                    e["smooth"] = eq.smooth;
                    e["irreducible"] = eq.irreducible;
                    cls.push_back(e);
                }
                j["classes"] = cls;
            }
            if (tc_maxdeg > 0) {
                json exps = json::array();
                for (int e = -(desc.kind == torsorcoh::ClassSpaceDescriptor::Kind::LaurentModPth ? tc_maxdeg : 0);
                     e <= tc_maxdeg; ++e)
                    if (e != 0 && e % tc_p != 0) exps.push_back(e);
                j["canonical_monomial_exponents"] = exps;
            }
            emit(j, format);
            return kExitOk;
        }

        if (*stab) {
            auto cls = resolve_class(stab_base, stab_group, stab_p, stab_k, stab_rep);
            auto verdict = torsorcoh::stabilizer_is_infinite(cls);
            json j = io::torsor_class_to_json(cls);
            j["infinite"] = verdict.infinite;
            j["stabilizer"] = verdict.description;
            if (stab_oracle) {
                auto maps = torsorcoh::brute_force_stabilizer(cls);
                j["oracle_field_size"] = cls.ctx()->size();
                j["oracle_stabilizer_size"] = maps.size();
                json sample = json::array();
                for (size_t i = 0; i < maps.size() && i < 12; ++i)
                    sample.push_back({{"a", maps[i].first.to_string()}, {"b", maps[i].second.to_string()}});
                j["oracle_sample"] = sample;
            }
            emit(j, format);
            return kExitOk;
        }

        if (*red) {
            auto cls = resolve_class(red_base, red_group, red_p, red_k, red_rep);
            auto r = torsorcoh::reduce_rank_one(cls);
            json j = io::torsor_class_to_json(cls);
            j["applicable"] = r.applicable;
            j["note"] = r.note;
            if (r.applicable) {
                j["subgroup"] = r.subgroup.to_string();
                j["reduced_rep"] = r.reduced->rep_string();
                j["smooth"] = r.smooth;
            }
            emit(j, format);
            return r.applicable ? kExitOk : kExitRejected;
        }

        if (*tb) {
            std::int64_t bound = torsorcoh::multisection_torsion_bound(tb_degrees);
            json j;
            j["schema"] = 1;
            j["degrees"] = tb_degrees;
            j["torsion_bound"] = bound;
            j["trivial"] = bound == 1;
            emit(j, format);
            return kExitOk;
        }

        if (*ft) {
            emit(io::family_trace_to_json(foliation::family_trace(ft_p)), format);
            return kExitOk;
        }

        if (*cl) {
            auto d = io::datum_from_json(load_input(cl_input));
            auto outcome = classifier::classify(d);
            emit(io::outcome_to_json(outcome), format);
            return classifier::accepted(outcome) ? kExitOk : kExitRejected;
        }

        if (*va) {
            auto d = io::datum_from_json(load_input(va_input));
            auto diag = classifier::validate_datum(d);
            json j;
            j["schema"] = 1;
            j["ok"] = diag.ok();
            j["diagnostics"] = io::diagnostics_to_json(diag);
            emit(j, format);
            return diag.ok() ? kExitOk : kExitRejected;
        }

        if (*pc) {
            auto kind = torsorcoh::parse_base_kind(pc_kind);
            if (!kind) throw InvalidArgument("unknown curve kind '" + pc_kind + "'");
            auto spec = groupscheme::GroupSchemeSpec::parse(pc_group, pc_p);
            std::optional<elliptic::WeierstrassCurve> curve;
            if (!pc_curve.empty()) curve = elliptic::WeierstrassCurve::parse(pc_curve);
            auto r = torsorcoh::torsor_pair_classify(*kind, spec, curve);
            json j;
            j["schema"] = 1;
            j["t_kind"] = pc_kind;
            j["group"] = spec.to_string();
            j["accepted"] = r.accepted;
            if (r.accepted)
                j["case"] = std::string(1, r.case_label);
            else
                j["violated"] = r.reason;
            emit(j, format);
            return r.accepted ? kExitOk : kExitRejected;
        }
    } catch (const InvalidArgument& e) {
        std::cerr << json{{"error", "usage"}, {"message", e.what()}}.dump(2) << std::endl;
        return kExitUsage;
    } catch (const json::exception& e) {
        std::cerr << json{{"error", "usage"}, {"message", e.what()}}.dump(2) << std::endl;
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cout << json{{"accepted", false}, {"error", "domain"}, {"message", e.what()}}.dump(2)
                  << std::endl;
        return kExitRejected;
    } catch (const UnsupportedError& e) {
        std::cout << json{{"accepted", false}, {"error", "unsupported"}, {"message", e.what()}}.dump(2)
                  << std::endl;
        return kExitRejected;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "internal"}, {"message", e.what()}}.dump(2) << std::endl;
        return kExitInternal;
    }
    return kExitUsage;
}
