#include "kinval/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kinval/exc_model.hpp"
#include "kinval/geo2d.hpp"
#include "kinval/kinematics.hpp"
#include "kinval/serialize.hpp"
#include "kinval/so_model.hpp"
#include "kinval/un_model.hpp"

namespace kinval {

namespace {

ModelId model_from_flags(const std::string& group, int n, bool n_set) {
    Group g = parse_group(group);
    bool needs_n = g == Group::SO || g == Group::U;
    if (needs_n && !n_set)
        throw CLI::ValidationError("--n is required for --group " + group);
    if (!needs_n && n_set)
        throw CLI::ValidationError("--n is not accepted for --group " + group);
    switch (g) {
        case Group::SO: return ModelId::so(n);
        case Group::U: return ModelId::un(n);
        case Group::G2: return ModelId::g2();
        case Group::Spin7: return ModelId::spin7();
    }
    throw CLI::ValidationError("unknown group");
}

// inline JSON (starts with '{') or a path to a JSON file
nlohmann::json load_json_arg(const std::string& arg) {
    std::string text = arg;
    if (text.empty() || text[0] != '{') {
        std::ifstream in(arg);
        if (!in) throw std::domain_error("cannot open valuation file '" + arg + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::domain_error(std::string("invalid JSON: ") + e.what());
    }
}

Valuation load_valuation(const std::string& arg, const ModelId& expected) {
    auto [v, basis] = valuation_from_json(load_json_arg(arg));
    (void)basis;
    if (v.model() != expected)
        throw std::domain_error("valuation model does not match --group/--n");
    return v;
}

BasisTag default_basis(const ModelId& model) {
    return model.group == Group::SO ? BasisTag::Mu : BasisTag::Ts;
}

void emit_valuation(std::ostream& out, const Valuation& v, BasisTag basis,
                    const std::string& format) {
    if (format == "latex") out << valuation_to_latex(v, basis) << "\n";
    else out << valuation_to_json(v, basis).dump() << "\n";
}

void emit_tensor(std::ostream& out, const TensorValuation& t, BasisTag basis,
                 const std::string& format) {
    if (format == "latex") out << tensor_to_latex(t, basis) << "\n";
    else out << tensor_to_json(t, basis).dump() << "\n";
}

ConvexBody2D make_body(const std::string& kind, std::uint64_t seed) {
    if (kind == "square")
        return ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    if (kind == "disc") return Disc{{0, 0}, 1.0};
    if (kind == "random") return random_convex_polygon(seed);
    if (!kind.empty() && kind[0] == '{') {
        // inline body JSON: {"kind":"polygon","vertices":[[x,y],...]} or
        // {"kind":"disc","center":[x,y],"radius":r}
        nlohmann::json j = load_json_arg(kind);
        std::string k = j.at("kind").get<std::string>();
        if (k == "polygon") {
            std::vector<Vec2> verts;
            for (const auto& v : j.at("vertices"))
                verts.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
            return ConvexPolygon(std::move(verts));
        }
        if (k == "disc") {
            Vec2 center{0, 0};
            if (j.contains("center"))
                center = {j["center"].at(0).get<double>(), j["center"].at(1).get<double>()};
            return Disc{center, j.at("radius").get<double>()};
        }
        throw std::domain_error("unknown body kind '" + k + "'");
    }
    throw std::domain_error("unknown body '" + kind + "'");
}

struct CommonFlags {
    std::string group;
    int n = 0;
    bool n_set = false;
    std::string basis;
    std::string format = "json";
};

void add_model_flags(CLI::App* cmd, CommonFlags& flags, bool with_basis = true) {
    cmd->add_option("--group", flags.group, "group: so, u, g2, spin7")->required();
    auto* nopt = cmd->add_option("--n", flags.n, "dimension parameter (so/u only)");
    cmd->parse_complete_callback([nopt, &flags] { flags.n_set = nopt->count() > 0; });
    if (with_basis) {
        cmd->add_option("--basis", flags.basis, "basis tag: mu, ts, u, hiv, tasaki, prim");
        cmd->add_option("--format", flags.format, "output format: json or latex")
            ->check(CLI::IsMember({"json", "latex"}));
    }
}

BasisTag pick_basis(const CommonFlags& flags, const ModelId& model) {
    BasisTag tag = flags.basis.empty() ? default_basis(model) : parse_basis_tag(flags.basis);
    if (!basis_tag_valid(model, tag))
        throw std::domain_error("basis '" + basis_tag_name(tag) + "' not valid for this model");
    return tag;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact kinematic-formula engine for SO(n), U(n), G2 and Spin(7)"};
    app.require_subcommand(1);

    CommonFlags dims_f, mult_f, conv_f, four_f, kf_f, akf_f, pd_f, hlt_f, bc_f, cm_f, cp_f;
    std::string mult_a, mult_b, conv_a, conv_b, four_val, kf_val = "chi", akf_val = "chi";
    std::string bc_val, bc_to, cm_val, cp_val;
    std::string four_file, kf_file, akf_file, bc_file, cm_file, cp_file;
    int pd_k = 0, hlt_k = -1;
    int template_n = 0;
    std::string series_family;
    int series_kmax = 0;
    std::string mc_body = "square";
    int mc_nodes = 4096;
    std::uint64_t mc_seed = 1;
    bool mc_json = false;
    std::string dims_group;
    int dims_n = 0;
    bool dims_n_set = false;

    auto* dims = app.add_subcommand("dims", "graded dimensions of Val^G");
    dims->add_option("--group", dims_group, "group: so, u, su, g2, spin7")->required();
    auto* dims_nopt = dims->add_option("--n", dims_n, "dimension parameter");
    dims->parse_complete_callback([&] { dims_n_set = dims_nopt->count() > 0; });

    auto* mult = app.add_subcommand("mult", "Alesker product a . b");
    add_model_flags(mult, mult_f);
    mult->add_option("--a", mult_a, "valuation JSON or file")->required();
    mult->add_option("--b", mult_b, "valuation JSON or file")->required();

    auto* conv = app.add_subcommand("conv", "convolution a * b");
    add_model_flags(conv, conv_f);
    conv->add_option("--a", conv_a, "valuation JSON or file")->required();
    conv->add_option("--b", conv_b, "valuation JSON or file")->required();

    auto* four = app.add_subcommand("fourier", "Fourier transform");
    add_model_flags(four, four_f);
    four->add_option("--val", four_val, "valuation JSON or file");
    four->add_option("--file", four_file, "read the valuation from a JSON file");

    auto* kfc = app.add_subcommand("kf", "kinematic formula k_G(phi)");
    add_model_flags(kfc, kf_f);
    kfc->add_option("--val", kf_val, "valuation JSON or file, or 'chi'");
    kfc->add_option("--file", kf_file, "read the valuation from a JSON file");

    auto* akfc = app.add_subcommand("akf", "additive kinematic formula a_G(phi)");
    add_model_flags(akfc, akf_f);
    akfc->add_option("--val", akf_val, "valuation JSON or file, or 'chi'");
    akfc->add_option("--file", akf_file, "read the valuation from a JSON file");

    auto* pd = app.add_subcommand("pd", "Poincare pairing matrix at degree k");
    add_model_flags(pd, pd_f, /*with_basis=*/false);
    pd->add_option("--k", pd_k, "degree")->required();

    auto* hlt = app.add_subcommand("hlt", "hard Lefschetz rank checks");
    add_model_flags(hlt, hlt_f, /*with_basis=*/false);
    hlt->add_option("--k", hlt_k, "single degree (default: all k with 2k <= m)");

    auto* bc = app.add_subcommand("basis-convert", "convert a valuation between bases");
    add_model_flags(bc, bc_f);
    bc->add_option("--val", bc_val, "valuation JSON or file");
    bc->add_option("--file", bc_file, "read the valuation from a JSON file");
    bc->add_option("--to", bc_to, "target basis tag")->required();

    auto* cm = app.add_subcommand("check-monotone", "monotone-cone membership (U(n))");
    add_model_flags(cm, cm_f, /*with_basis=*/false);
    cm->add_option("--val", cm_val, "valuation JSON or file");
    cm->add_option("--file", cm_file, "read the valuation from a JSON file");

    auto* cp = app.add_subcommand("check-positive", "positive-cone membership (U(n))");
    add_model_flags(cp, cp_f, /*with_basis=*/false);
    cp->add_option("--val", cp_val, "valuation JSON or file");
    cp->add_option("--file", cp_file, "read the valuation from a JSON file");

    auto* tmpl = app.add_subcommand("template", "additive template tables for SO(n)");
    tmpl->add_option("--n", template_n, "ambient dimension")->required();

    auto* series = app.add_subcommand("series-sp", "stable symplectic Poincare series");
    series->add_option("--family", series_family, "sp, sp-u1 or sp-sp1")->required();
    series->add_option("--kmax", series_kmax, "last degree")->required();

    auto* mc = app.add_subcommand("mc-verify", "numeric planar kinematic-formula check");
    mc->add_option("--body", mc_body, "square, disc or random");
    mc->add_option("--nodes", mc_nodes, "rotation quadrature nodes");
    mc->add_option("--seed", mc_seed, "seed for random bodies");
    mc->add_flag("--json", mc_json, "JSON output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n" << app.help();
        return 1;
    }

    try {
        if (*dims) {
            std::string low;
            for (char c : dims_group) low += static_cast<char>(std::tolower(c));
            nlohmann::json result = nlohmann::json::array();
            if (low == "su") {
                if (!dims_n_set) throw std::domain_error("--n is required for --group su");
                for (int k = 0; k <= 2 * dims_n; ++k) result.push_back(su_dim(dims_n, k));
            } else {
                ModelId model = model_from_flags(low, dims_n, dims_n_set);
                for (int k = 0; k <= model.top_degree(); ++k)
                    result.push_back(graded_dim(model, k));
            }
            out << result.dump() << "\n";
        } else if (*mult || *conv) {
            CommonFlags& f = *mult ? mult_f : conv_f;
            ModelId model = model_from_flags(f.group, f.n, f.n_set);
            Valuation a = load_valuation(*mult ? mult_a : conv_a, model);
            Valuation b = load_valuation(*mult ? mult_b : conv_b, model);
            Valuation r = *mult ? product(a, b) : convolve(a, b);
            emit_valuation(out, r, pick_basis(f, model), f.format);
        } else if (*four) {
            ModelId model = model_from_flags(four_f.group, four_f.n, four_f.n_set);
            if (four_val.empty() && four_file.empty())
                throw std::domain_error("fourier needs --val or --file");
            Valuation v = load_valuation(four_file.empty() ? four_val : four_file, model);
            emit_valuation(out, fourier(v), pick_basis(four_f, model), four_f.format);
        } else if (*kfc || *akfc) {
            CommonFlags& f = *kfc ? kf_f : akf_f;
            const std::string& file = *kfc ? kf_file : akf_file;
            const std::string& arg = file.empty() ? (*kfc ? kf_val : akf_val) : file;
            ModelId model = model_from_flags(f.group, f.n, f.n_set);
            Valuation v = arg == "chi" ? chi(model) : load_valuation(arg, model);
            TensorValuation t = *kfc ? kf(model, v) : akf(model, v);
            emit_tensor(out, t, pick_basis(f, model), f.format);
        } else if (*pd) {
            ModelId model = model_from_flags(pd_f.group, pd_f.n, pd_f.n_set);
            nlohmann::json j;
            j["group"] = group_name(model.group);
            if (model.group == Group::SO || model.group == Group::U) j["n"] = model.n;
            j["k"] = pd_k;
            j["matrix"] = matrix_to_json(pairing_matrix(model, pd_k));
            out << j.dump() << "\n";
        } else if (*hlt) {
            ModelId model = model_from_flags(hlt_f.group, hlt_f.n, hlt_f.n_set);
            nlohmann::json checks = nlohmann::json::array();
            int lo = hlt_k >= 0 ? hlt_k : 0;
            int hi = hlt_k >= 0 ? hlt_k : model.top_degree() / 2;
            for (int k = lo; k <= hi; ++k)
                checks.push_back({{"k", k}, {"ok", hard_lefschetz_check(model, k)}});
            out << nlohmann::json{{"checks", checks}}.dump() << "\n";
        } else if (*bc) {
            ModelId model = model_from_flags(bc_f.group, bc_f.n, bc_f.n_set);
            if (bc_val.empty() && bc_file.empty())
                throw std::domain_error("basis-convert needs --val or --file");
            Valuation v = load_valuation(bc_file.empty() ? bc_val : bc_file, model);
            BasisTag target = parse_basis_tag(bc_to);
            if (!basis_tag_valid(model, target))
                throw std::domain_error("basis '" + bc_to + "' not valid for this model");
            emit_valuation(out, v, target, bc_f.format);
        } else if (*cm || *cp) {
            CommonFlags& f = *cm ? cm_f : cp_f;
            ModelId model = model_from_flags(f.group, f.n, f.n_set);
            const std::string& file = *cm ? cm_file : cp_file;
            const std::string& arg = file.empty() ? (*cm ? cm_val : cp_val) : file;
            if (arg.empty()) throw std::domain_error("cone checks need --val or --file");
            Valuation v = load_valuation(arg, model);
            ConeVerdict verdict = *cm ? un_monotone_check(v) : un_positive_check(v);
            out << verdict_to_json(verdict).dump() << "\n";
        } else if (*tmpl) {
            KinematicTable table = template_additive_solver(template_n);
            nlohmann::json rows = nlohmann::json::array();
            for (std::size_t i = 0; i < table.rows.size(); ++i) {
                nlohmann::json row = tensor_to_json(table.rows[i], BasisTag::Mu);
                row["i"] = static_cast<int>(i);
                rows.push_back(std::move(row));
            }
            out << nlohmann::json{{"group", "SO"}, {"n", template_n}, {"rows", rows}}.dump()
                << "\n";
        } else if (*series) {
            SpFamily family;
            if (series_family == "sp") family = SpFamily::Sp;
            else if (series_family == "sp-u1") family = SpFamily::SpU1;
            else if (series_family == "sp-sp1") family = SpFamily::SpSp1;
            else throw std::domain_error("unknown family '" + series_family + "'");
            nlohmann::json result = sp_series_coeffs(family, series_kmax);
            out << result.dump() << "\n";
        } else if (*mc) {
            ConvexBody2D k = make_body(mc_body, mc_seed);
            ConvexBody2D l = make_body(mc_body, mc_seed + 0x9e3779b97f4a7c15ULL);
            PkfCheck check = check_pkf_2d(k, l, mc_nodes);
            if (mc_json) {
                char buf[160];
                std::snprintf(buf, sizeof(buf),
                              "{\"lhs\":%.17g,\"rhs\":%.17g,\"rel_err\":%.17g}", check.lhs,
                              check.rhs, check.rel_err);
                out << buf << "\n";
            } else {
                char buf[160];
                std::snprintf(buf, sizeof(buf), "lhs=%.12g rhs=%.12g rel_err=%.3g", check.lhs,
                              check.rhs, check.rel_err);
                out << buf << "\n";
            }
        }
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace kinval
