#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "sharptop/json_io.hpp"

using namespace sharptop;

namespace {

struct RunConfig {
    int k_min = 4;
    int k_max = 20;
    int spatial_pts = 129;
    double val_tol = 0.05;
    double undecided = kUndecidedThreshold;
    std::uint64_t seed = 0;
    std::string out;
    std::string csv;

    SampleGrid grid() const { return SampleGrid(k_min, k_max); }

    Json header(const std::string& verb) const {
        Json cfg{{"grid", std::to_string(k_min) + ":" + std::to_string(k_max)},
                 {"spatial_pts", spatial_pts},
                 {"val_tol", val_tol},
                 {"undecided_threshold", undecided},
                 {"negligibility_floor", kNegligibilityFloor}};
        return Json{{"verb", verb}, {"seed", seed}, {"config", std::move(cfg)}};
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file '" + path + "'", 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json load_json(const std::string& path) { return parse_json(slurp(path)); }

GenScalar load_net(const std::string& path) { return gen_scalar_from_json(load_json(path)); }

GenVec load_vec(const std::string& path) { return gen_vec_from_json(load_json(path)); }

ExprNet load_expr(const std::string& path) {
    std::string text = slurp(path);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return ExprNet::parse_sexpr(text);
}

void emit(const RunConfig& cfg, const Json& report) {
    std::string text = dump_report(report);
    if (cfg.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(cfg.out, std::ios::binary);
        if (!out) throw ParseError("cannot open output file '" + cfg.out + "'", 0);
        out << text;
    }
}

void emit_csv(const RunConfig& cfg, const SampledNet& net) {
    if (cfg.csv.empty()) return;
    std::ofstream out(cfg.csv, std::ios::binary);
    if (!out) throw ParseError("cannot open csv file '" + cfg.csv + "'", 0);
    write_csv(out, net);
}

std::string ext_rat_str(const ExtRat& v) { return v.str(); }

Json val_report(const GenScalar& net) {
    ExtRat v = net.valuation();
    return Json{{"val", ext_rat_str(v)}, {"abs_e", net.abs_e()}};
}

// Seeded random symbolic vectors for probe-based verbs; mirrors the
// generators used by the test suites.
GenVec random_probe(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<int> expo(-3, 3);
    std::uniform_int_distribution<int> terms(1, 3);
    GenVec u(n);
    for (auto& c : u) {
        SymbolicNet net;
        int t = terms(rng);
        for (int j = 0; j < t; ++j) {
            QComplex coeff{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
            if (coeff.is_zero()) coeff = QComplex(Rational(1));
            net = net + SymbolicNet::monomial(coeff, Rational(expo(rng), 2));
        }
        c = net;
    }
    return u;
}

NormKind parse_norm(const std::string& name) {
    if (name == "euclid" || name == "euclidean") return NormKind::Euclidean;
    if (name == "max") return NormKind::Max;
    throw ParseError("unknown norm kind '" + name + "' (euclid|max)", 0);
}

void apply_config_file(RunConfig& cfg) {
    const char* path = std::getenv("SHARPTOP_CONFIG");
    if (path == nullptr || *path == '\0') return;
    Json j = load_json(path);
    if (j.contains("grid")) {
        std::string g = j["grid"].get<std::string>();
        auto colon = g.find(':');
        if (colon == std::string::npos) throw ParseError("config grid must be kmin:kmax", 0);
        cfg.k_min = std::stoi(g.substr(0, colon));
        cfg.k_max = std::stoi(g.substr(colon + 1));
    }
    if (j.contains("spatial_pts")) cfg.spatial_pts = j["spatial_pts"].get<int>();
    if (j.contains("val_tol")) cfg.val_tol = j["val_tol"].get<double>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (cfg.val_tol <= 0) throw InvariantError("config tolerances must be positive");
}

void add_common(CLI::App* cmd, RunConfig& cfg, std::string& grid_text) {
    cmd->add_option("--grid", grid_text, "eps grid as kmin:kmax (eps_k = 2^-k)");
    cmd->add_option("--tol", cfg.val_tol, "valuation tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", cfg.seed, "RNG seed (echoed in the report)");
    cmd->add_option("--out", cfg.out, "report output path (default stdout)");
    cmd->add_option("--csv", cfg.csv, "plot data output path");
    cmd->add_option("--pts", cfg.spatial_pts, "spatial grid points per axis");
}

void finish_common(RunConfig& cfg, const std::string& grid_text) {
    if (!grid_text.empty()) {
        auto colon = grid_text.find(':');
        if (colon == std::string::npos) throw ParseError("--grid expects kmin:kmax", 0);
        cfg.k_min = std::stoi(grid_text.substr(0, colon));
        cfg.k_max = std::stoi(grid_text.substr(colon + 1));
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sharptop: generalized-number nets, sharp topologies, and duality analyses"};
    app.require_subcommand(1);

    RunConfig cfg;
    try {
        apply_config_file(cfg);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return e.exit_code();
    }
    std::string grid_text;

    std::string net_path, net2_path, expr_path, vec_path, vec2_path, functional_path;
    std::string family_path, spec_path, set_path, seq_path, boxes_path, point_path, box_path;
    std::string space = "sup", norm_name = "euclid", radius_text = "8";
    int q_max = 10, depth = 8, j_order = 0, n_weight = 0, dim_n = 2, j_max = 2, probe_count = 32;

    auto* val_cmd = app.add_subcommand("val", "valuation and |.|_e of a net");
    val_cmd->add_option("--net", net_path, "net JSON file")->required();
    auto* dist_cmd = app.add_subcommand("dist", "sharp distance between two nets");
    dist_cmd->add_option("--net", net_path)->required();
    dist_cmd->add_option("--net2", net2_path)->required();
    auto* classify_cmd = app.add_subcommand("classify", "moderate/negligible classification");
    classify_cmd->add_option("--net", net_path)->required();
    classify_cmd->add_option("--qmax", q_max, "negligibility order to certify");
    auto* seminorm_cmd = app.add_subcommand("seminorm", "derivative seminorm curve of an expression net");
    seminorm_cmd->add_option("--expr", expr_path, "s-expression file")->required();
    seminorm_cmd->add_option("--space", space, "sup | schwartz | gtau");
    seminorm_cmd->add_option("--j", j_order, "derivative order (sup/gtau m, schwartz k)");
    seminorm_cmd->add_option("--N", n_weight, "polynomial weight power (gtau)");
    seminorm_cmd->add_option("--box", box_path, "compact box JSON file (sup space)");
    seminorm_cmd->add_option("--radius", radius_text, "truncation radius (schwartz/gtau)");
    auto* gauge_cmd = app.add_subcommand("gauge", "gauge of a ball-intersection spec");
    gauge_cmd->add_option("--spec", spec_path)->required();
    gauge_cmd->add_option("--vec", vec_path)->required();
    auto* metric_cmd = app.add_subcommand("metric", "sharp metric from a seminorm family");
    metric_cmd->add_option("--family", family_path)->required();
    metric_cmd->add_option("--vec", vec_path)->required();
    metric_cmd->add_option("--vec2", vec2_path)->required();
    auto* limit_cmd = app.add_subcommand("limit", "constructive Cauchy patch limit");
    limit_cmd->add_option("--seq", seq_path, "JSON array of symbolic nets")->required();
    limit_cmd->add_option("--depth", depth);
    auto* polar_cmd = app.add_subcommand("polar", "polar membership and gauge");
    polar_cmd->add_option("--set", set_path, "JSON array of vectors")->required();
    polar_cmd->add_option("--vec", vec_path)->required();
    auto* dualnorm_cmd = app.add_subcommand("dualnorm", "dual ultra-pseudo-norm of a functional");
    dualnorm_cmd->add_option("--functional", functional_path)->required();
    dualnorm_cmd->add_option("--norm", norm_name, "euclid | max");
    dualnorm_cmd->add_option("--probes", probe_count);
    auto* hb_cmd = app.add_subcommand("hahnbanach", "norm-attaining witness functional");
    hb_cmd->add_option("--vec", vec_path)->required();
    hb_cmd->add_option("--norm", norm_name);
    auto* recover_cmd = app.add_subcommand("recover", "representing vector of a functional");
    recover_cmd->add_option("--functional", functional_path)->required();
    recover_cmd->add_option("--dim", dim_n)->required();
    auto* ubound_cmd = app.add_subcommand("ubound", "uniform bound for a functional family");
    ubound_cmd->add_option("--family", family_path, "JSON array of functionals")->required();
    ubound_cmd->add_option("--norm", norm_name);
    ubound_cmd->add_option("--probes", probe_count);
    auto* gcconv_cmd = app.add_subcommand("gcconv", "strict-limit convergence in G_c");
    gcconv_cmd->add_option("--seq", seq_path, "JSON array of {expr, support}")->required();
    gcconv_cmd->add_option("--boxes", boxes_path, "JSON array of probe boxes")->required();
    gcconv_cmd->add_option("--jmax", j_max);
    auto* pointval_cmd = app.add_subcommand("pointval", "generalized point value of an expression net");
    pointval_cmd->add_option("--expr", expr_path)->required();
    pointval_cmd->add_option("--point", point_path, "{coords, witness} JSON file")->required();
    pointval_cmd->add_option("--qmax", q_max);
    auto* report_cmd = app.add_subcommand("report", "bundled analysis of a net");
    report_cmd->add_option("--net", net_path)->required();
    report_cmd->add_option("--qmax", q_max);

    for (auto* cmd : {val_cmd, dist_cmd, classify_cmd, seminorm_cmd, gauge_cmd, metric_cmd,
                      limit_cmd, polar_cmd, dualnorm_cmd, hb_cmd, recover_cmd, ubound_cmd,
                      gcconv_cmd, pointval_cmd, report_cmd})
        add_common(cmd, cfg, grid_text);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        finish_common(cfg, grid_text);
        std::mt19937_64 rng(cfg.seed);

        if (*val_cmd) {
            GenScalar net = load_net(net_path);
            Json report = cfg.header("val");
            report.update(val_report(net));
            emit_csv(cfg, sample(net, cfg.grid()));
            emit(cfg, report);
        } else if (*dist_cmd) {
            GenScalar a = load_net(net_path), b = load_net(net2_path);
            Json report = cfg.header("dist");
            report["dist"] = sharp_dist(a, b);
            report["val_of_difference"] = ext_rat_str((a - b).valuation());
            emit(cfg, report);
        } else if (*classify_cmd) {
            GenScalar net = load_net(net_path);
            Classification c = classify(sample(net, cfg.grid()), q_max);
            Json report = cfg.header("classify");
            report.update(to_json(c));
            emit_csv(cfg, sample(net, cfg.grid()));
            emit(cfg, report);
        } else if (*seminorm_cmd) {
            ExprNet net = load_expr(expr_path);
            Json report = cfg.header("seminorm");
            report["space"] = space;
            SampledNet curve(cfg.grid(), std::vector<std::complex<double>>(
                                             static_cast<std::size_t>(cfg.grid().size())));
            if (space == "sup") {
                if (box_path.empty()) throw ParseError("--box required for the sup space", 0);
                CompactBox box = box_from_json(load_json(box_path));
                curve = seminorm_pKj(net, box, j_order, cfg.spatial_pts, cfg.grid());
            } else if (space == "schwartz") {
                auto r = schwartz_seminorm(net, j_order, Rational::parse(radius_text),
                                           cfg.spatial_pts, cfg.grid());
                report["truncation_warning"] = r.truncation_warning;
                report["shell_ratio"] = r.shell_ratio;
                curve = r.values;
            } else if (space == "gtau") {
                auto r = gtau_seminorm(net, j_order, n_weight, Rational::parse(radius_text),
                                       cfg.spatial_pts, cfg.grid());
                report["truncation_warning"] = r.truncation_warning;
                report["shell_ratio"] = r.shell_ratio;
                curve = r.values;
            } else {
                throw ParseError("unknown space '" + space + "'", 0);
            }
            report["val"] = to_json(estimate_val(curve));
            emit_csv(cfg, curve);
            emit(cfg, report);
        } else if (*gauge_cmd) {
            ConvexSetSpec spec = convex_spec_from_json(load_json(spec_path));
            GenVec u = load_vec(vec_path);
            ExtReal v = gauge_val(spec, u);
            Json report = cfg.header("gauge");
            report["val_A"] = v.infinite ? Json("inf") : Json(v.value);
            report["P_A"] = gauge_eval(spec, u);
            emit(cfg, report);
        } else if (*metric_cmd) {
            SeminormFamily family = family_from_json(load_json(family_path));
            GenVec u = load_vec(vec_path), v = load_vec(vec2_path);
            Json report = cfg.header("metric");
            report["d"] = sharp_metric(family, u, v);
            GenVec diff(u.size());
            for (std::size_t i = 0; i < u.size() && i < v.size(); ++i) diff[i] = u[i] - v[i];
            Json per = Json::array();
            for (const auto& p : family.members)
                per.push_back(Json{{"label", p.label()}, {"P", p.eval(diff)}});
            report["per_seminorm"] = std::move(per);
            emit(cfg, report);
        } else if (*limit_cmd) {
            Json seq_json = load_json(seq_path);
            std::vector<SymbolicNet> seq;
            for (const auto& s : seq_json) seq.push_back(symbolic_from_json(s));
            PiecewiseNet limit = cauchy_patch_limit(seq, depth);
            Json report = cfg.header("limit");
            report["limit"] = to_json(limit);
            Json checks = Json::array();
            for (int k = 1; k <= depth; ++k) {
                ExtRat v = (GenScalar(seq[static_cast<std::size_t>(k)]) - GenScalar(limit)).valuation();
                checks.push_back(Json{{"k", k}, {"val", ext_rat_str(v)}});
            }
            report["convergence"] = std::move(checks);
            emit(cfg, report);
        } else if (*polar_cmd) {
            Json set_json = load_json(set_path);
            std::vector<GenVec> A;
            for (const auto& el : set_json) A.push_back(gen_vec_from_json(el));
            GenVec v = load_vec(vec_path);
            Json report = cfg.header("polar");
            report["contains"] = polar_contains(A, v);
            report["gauge"] = polar_gauge(A, v);
            emit(cfg, report);
        } else if (*dualnorm_cmd) {
            Functional T = functional_from_json(load_json(functional_path));
            std::vector<GenVec> probes;
            for (int i = 0; i < probe_count; ++i) probes.push_back(random_probe(rng, T.dim()));
            DualNormResult dn = dual_norm(T, parse_norm(norm_name), probes);
            Json report = cfg.header("dualnorm");
            report["estimate"] = dn.estimate;
            if (dn.closed_form) {
                report["closed_form"] = *dn.closed_form;
                report["closed_val"] = ext_rat_str(dn.closed_val);
            }
            emit(cfg, report);
        } else if (*hb_cmd) {
            GenVec u = load_vec(vec_path);
            NormKind kind = parse_norm(norm_name);
            HahnBanachWitness w(u, kind);
            Json report = cfg.header("hahnbanach");
            report["zero_functional"] = w.zero_functional();
            auto ev = w.evaluate(u, cfg.grid());
            report["skipped_grid_points"] = ev.skipped;
            ValEstimate est = w.action_valuation(u, cfg.grid());
            report["action_val"] = to_json(est);
            report["norm_val_exact"] = ext_rat_str(vec_norm_val(u, kind));
            emit(cfg, report);
        } else if (*recover_cmd) {
            Functional T = functional_from_json(load_json(functional_path));
            RecoverResult r = recover_representor(T, static_cast<std::size_t>(dim_n), cfg.seed);
            Json report = cfg.header("recover");
            report["representor"] = to_json(r.representor);
            report["max_residual"] = r.max_residual;
            emit(cfg, report);
        } else if (*ubound_cmd) {
            Json fam_json = load_json(family_path);
            std::vector<Functional> family;
            for (const auto& f : fam_json) family.push_back(functional_from_json(f));
            std::vector<GenVec> probes;
            for (int i = 0; i < probe_count; ++i)
                probes.push_back(random_probe(rng, family.front().dim()));
            UniformBoundResult r = uniform_bound(family, parse_norm(norm_name), probes);
            Json report = cfg.header("ubound");
            report["bounded"] = r.bounded;
            if (r.bounded) {
                report["C"] = r.C;
            } else {
                report["witness_probe"] = *r.witness_probe;
                report["values_at_witness"] = r.values_at_witness;
            }
            emit(cfg, report);
        } else if (*gcconv_cmd) {
            Json seq_json = load_json(seq_path);
            std::vector<SupportedNet> seq;
            for (const auto& m : seq_json) {
                ExprNet net = ExprNet::parse_sexpr(m.at("expr").get<std::string>());
                if (m.contains("support"))
                    seq.push_back(make_supported(net, box_from_json(m["support"]), cfg.grid()));
                else
                    seq.push_back(make_unsupported(net));
            }
            std::vector<CompactBox> boxes;
            for (const auto& b : load_json(boxes_path)) boxes.push_back(box_from_json(b));
            GcVerdict v = gc_converges(seq, boxes, j_max, cfg.spatial_pts, cfg.grid());
            Json report = cfg.header("gcconv");
            report["converges"] = v.converges;
            if (v.common_box) report["common_box"] = to_json(*v.common_box);
            if (v.reason)
                report["reason"] = *v.reason == GcReason::Support ? "Support" : "Seminorm";
            report["member_valuations"] = v.member_valuations;
            emit(cfg, report);
        } else if (*pointval_cmd) {
            ExprNet net = load_expr(expr_path);
            Json pt_json = load_json(point_path);
            std::vector<SymbolicNet> coords;
            for (const auto& c : pt_json.at("coords")) coords.push_back(symbolic_from_json(c));
            GenPoint pt(std::move(coords), box_from_json(pt_json.at("witness")), cfg.grid());
            SampledNet values = point_value(net, pt, cfg.grid());
            Json report = cfg.header("pointval");
            report.update(to_json(classify(values, q_max)));
            emit_csv(cfg, values);
            emit(cfg, report);
        } else if (*report_cmd) {
            GenScalar net = load_net(net_path);
            Json report = cfg.header("report");
            report.update(val_report(net));
            report["classification"] = to_json(classify(sample(net, cfg.grid()), q_max));
            emit_csv(cfg, sample(net, cfg.grid()));
            emit(cfg, report);
        }
        return 0;
    } catch (const Error& e) {
        Json err{{"error", Json{{"code", e.exit_code()}, {"message", e.what()}}}};
        std::cout << dump_report(err);
        return e.exit_code();
    } catch (const std::exception& e) {
        Json err{{"error", Json{{"code", 3}, {"message", e.what()}}}};
        std::cout << dump_report(err);
        return 3;
    }
}
