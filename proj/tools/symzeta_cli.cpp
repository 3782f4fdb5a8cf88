// symzeta: command-line front end.
//
// Exit status: 0 success, 1 usage error, 2 numerical failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symzeta/symzeta.hpp"

namespace fs = std::filesystem;
using namespace symzeta;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_numeric = 2;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16g", v);
    return buf;
}

std::string fmt(ComplexPoint z) { return "{re: " + fmt(z.real()) + ", im: " + fmt(z.imag()) + "}"; }

// Job options shared by every subcommand. Values stay as text so that they go
// through the same parser as the config file; flags are applied after it.
struct JobFlags {
    std::string config_path;
    std::map<std::string, std::string> values;

    void attach(CLI::App* app) {
        app->add_option("--config", config_path, "key = value job file (flags override it)");
        add(app, "--weights", "weights", "comma-separated weights, e.g. 1,1");
        add(app, "--a-re", "a_re", "real part of the target a");
        add(app, "--a-im", "a_im", "imaginary part of the target a");
        add(app, "--sigma-min", "sigma_min", "region left edge");
        add(app, "--sigma-max", "sigma_max", "region right edge");
        add(app, "--t-min", "t_min", "region bottom edge (> 0)");
        add(app, "--t-max", "t_max", "region top edge");
        add(app, "--target-abs-err", "target_abs_err", "zeta accuracy target (>= 1e-14)");
        add(app, "--max-terms", "max_terms", "Euler-Maclaurin term cap");
        add(app, "--T-grid", "T_grid", "comma-separated heights for reports");
        add(app, "--y", "y", "left extent of the counting window");
        add(app, "--output-dir", "output_dir", "directory for output files");
    }

    JobConfig resolve() const {
        JobConfig cfg = config_path.empty() ? JobConfig{} : load_config(config_path);
        for (const auto& [key, value] : values) apply_setting(cfg, key, value);
        Weights w(cfg.weights);
        if (w.was_reordered()) std::cerr << "note: weights reordered to non-increasing order\n";
        cfg.weights.assign(w.values().begin(), w.values().end());
        cfg.validate();
        return cfg;
    }

private:
    void add(CLI::App* app, const std::string& flag, const std::string& key, const std::string& help) {
        app->add_option_function<std::string>(flag, [this, key](const std::string& v) { values[key] = v; }, help);
    }
};

int cmd_eval(const JobConfig& cfg, double s_re, double s_im, const std::string& model) {
    const SymZeta z(Weights(cfg.weights), cfg.precision);
    const ComplexPoint s{s_re, s_im};
    const GEval e = z.evaluate_g(cfg.target(), s);
    const double err = cfg.precision.target_abs_err * std::max(1.0, e.scale);
    std::cout << "s: " << fmt(s) << '\n';
    std::cout << "zeta_sym: " << fmt(e.value) << "  error_estimate: " << fmt(err) << '\n';
    std::cout << "zeta_sym_deriv: " << fmt(e.deriv) << '\n';
    std::cout << "G: " << fmt(e.g) << '\n';
    auto show = [&](const char* name, auto&& fn) {
        try {
            const ComplexPoint m = fn();
            std::cout << name << ": " << fmt(m) << "  relative_deviation: " << fmt(std::abs(e.value / m - 1.0)) << '\n';
        } catch (const Error& ex) {
            if (ex.code() != ErrorCode::OutsideRegime) throw;
            std::cout << name << ": outside regime\n";
        }
    };
    if (model == "right" || model == "all") show("model_right", [&] { return asymptotic_right(z, s); });
    if (model == "left" || model == "all") show("model_left_strip", [&] { return asymptotic_left_strip(z, s); });
    return exit_ok;
}

int cmd_expand(const JobConfig& cfg) {
    const Weights w(cfg.weights);
    std::cout << expansion_to_json(w, hoffman_expand(w)).dump(2) << '\n';
    return exit_ok;
}

std::vector<APoint> located_points(const JobConfig& cfg, bool use_cache, bool* from_cache) {
    const ResultCache cache = ResultCache::from_environment();
    const std::string key = ResultCache::key_text(cfg.weights, cfg.target().a, cfg.region, cfg.precision);
    if (use_cache) {
        if (auto hit = cache.load(key)) {
            *from_cache = true;
            return *hit;
        }
    }
    *from_cache = false;
    const SymZeta z(Weights(cfg.weights), cfg.precision);
    auto points = locate_apoints(z, cfg.target(), cfg.region);
    if (use_cache) cache.store(key, points);
    return points;
}

int cmd_locate(const JobConfig& cfg, bool use_cache) {
    bool from_cache = false;
    const auto points = located_points(cfg, use_cache, &from_cache);
    const fs::path dir(cfg.output_dir);
    fs::create_directories(dir);
    write_apoints_file(dir / "apoints.jsonl", points);
    int total = 0;
    double worst = 0.0;
    for (const auto& p : points) {
        total += p.multiplicity;
        worst = std::max(worst, p.residual);
    }
    {
        std::ofstream csv(dir / "locate_summary.csv", std::ios::binary | std::ios::trunc);
        csv << "sigma_min,sigma_max,t_min,t_max,a_re,a_im,points,total_multiplicity,max_residual\n";
        csv << fmt(cfg.region.sigma_min) << ',' << fmt(cfg.region.sigma_max) << ',' << fmt(cfg.region.t_min) << ','
            << fmt(cfg.region.t_max) << ',' << fmt(cfg.a_re) << ',' << fmt(cfg.a_im) << ',' << points.size() << ','
            << total << ',' << fmt(worst) << '\n';
    }
    std::cout << "located " << points.size() << " a-points (total multiplicity " << total << ")"
              << (from_cache ? " from cache" : "") << "; wrote " << (dir / "apoints.jsonl").string() << '\n';
    return exit_ok;
}

int cmd_count(const JobConfig& cfg) {
    const SymZeta z(Weights(cfg.weights), cfg.precision);
    const WindingResult w = count_apoints(z, cfg.target(), cfg.region);
    std::cout << "count: " << w.count << '\n';
    std::cout << "raw_integral: " << fmt(w.raw_integral) << '\n';
    std::cout << "integer_residual: " << fmt(w.integer_residual) << '\n';
    if (w.growth > 0.0) std::cout << "boundary_grown_by: " << fmt(w.growth) << '\n';
    return exit_ok;
}

int cmd_report(const JobConfig& cfg, const std::string& points_path, const std::vector<double>& deltas) {
    std::vector<APoint> points;
    if (!points_path.empty()) {
        points = read_apoints_file(points_path);
    } else {
        const ResultCache cache = ResultCache::from_environment();
        const std::string key = ResultCache::key_text(cfg.weights, cfg.target().a, cfg.region, cfg.precision);
        if (!cache.contains(key)) {
            throw Error(ErrorCode::MissingPoints, "no a-point file given and no cache entry for this job; run locate first");
        }
        // A corrupted entry is reported by load() and recomputed here.
        bool from_cache = false;
        points = located_points(cfg, true, &from_cache);
    }
    const Weights w(cfg.weights);
    const TargetValue a = cfg.target();
    const double t_min = cfg.region.t_min;

    const auto counts = count_reports_from_points(points, w, a, cfg.y, cfg.region.sigma_max, cfg.T_grid, t_min);
    std::vector<SumReport> sums;
    std::vector<TailReport> tails;
    for (double T : cfg.T_grid) {
        sums.push_back(weighted_sums(points, w, cfg.y, T, t_min));
        std::vector<double> ds = deltas;
        ds.push_back(special_delta(T));
        for (double d : ds) tails.push_back(tail_density(points, w, d, T, t_min));
    }

    const fs::path dir(cfg.output_dir);
    fs::create_directories(dir);
    auto open = [&](const char* name) { return std::ofstream(dir / name, std::ios::binary | std::ios::trunc); };
    {
        auto os = open("counts.csv");
        write_count_csv(os, counts);
    }
    {
        auto os = open("sums.csv");
        write_sum_csv(os, sums);
    }
    {
        auto os = open("tails.csv");
        write_tail_csv(os, tails);
    }
    std::vector<std::pair<double, double>> disc;
    std::vector<std::pair<double, double>> crit;
    for (const auto& r : counts) disc.emplace_back(r.T, r.discrepancy_over_logT);
    for (const auto& r : sums) crit.emplace_back(r.T, r.sum_crit / (r.T * std::log(r.T)));
    {
        auto os = open("discrepancy_over_logT.dat");
        write_plot_data(os, disc);
    }
    {
        auto os = open("sum_crit_over_TlogT.dat");
        write_plot_data(os, crit);
    }
    bool flagged = false;
    for (const auto& r : counts) flagged = flagged || r.flagged;
    std::cout << "wrote reports for " << cfg.T_grid.size() << " heights to " << dir.string() << '\n';
    if (flagged) std::cout << "flag: |discrepancy|/log T above " << discrepancy_flag << " for some T\n";
    return exit_ok;
}

int cmd_scan_free(const JobConfig& cfg) {
    const SymZeta z(Weights(cfg.weights), cfg.precision);
    const FreeRegionResult r = scan_free_right(z, cfg.target(), cfg.region.t_min, cfg.region.t_max);
    std::cout << "c1_hat: " << fmt(r.c1_hat) << '\n';
    std::cout << "certified_empty: [" << fmt(r.certified.sigma_min) << ", " << fmt(r.certified.sigma_max) << "] x ["
              << fmt(r.certified.t_min) << ", " << fmt(r.certified.t_max) << "]  contour_count: " << r.certificate.count
              << '\n';
    return r.certificate.count == 0 ? exit_ok : exit_numeric;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetric multiple zeta sums: evaluation, a-point location and counting reports"};
    app.require_subcommand(1);

    JobFlags eval_flags, expand_flags, locate_flags, count_flags, report_flags, scan_flags;

    auto* eval = app.add_subcommand("eval", "evaluate Z(s), Z'(s), G(s) and the asymptotic models");
    eval_flags.attach(eval);
    double s_re = 0.0;
    double s_im = 0.0;
    std::string model = "all";
    eval->add_option("--s", s_re, "real part of s")->required();
    eval->add_option("--t", s_im, "imaginary part of s");
    eval->add_option("--model", model, "asymptotic model to print")->check(CLI::IsMember({"none", "right", "left", "all"}));

    auto* expand = app.add_subcommand("expand", "print the partition expansion as JSON");
    expand_flags.attach(expand);

    auto* locate = app.add_subcommand("locate", "locate a-points in the region (JSON lines + CSV summary)");
    locate_flags.attach(locate);
    bool no_cache = false;
    locate->add_flag("--no-cache", no_cache, "ignore and do not update the result cache");

    auto* count = app.add_subcommand("count", "count a-points in the region by the argument principle");
    count_flags.attach(count);

    auto* report = app.add_subcommand("report", "write count, sum and tail reports from located a-points");
    report_flags.attach(report);
    std::string points_path;
    std::vector<double> deltas{0.25, 0.5, 1.0};
    report->add_option("--points", points_path, "a-point JSON lines file (default: the cache entry)");
    report->add_option("--delta", deltas, "tail offsets delta")->delimiter(',');

    auto* scan = app.add_subcommand("scan-free", "find an a-point-free right half-plane and certify it");
    scan_flags.attach(scan);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (eval->parsed()) return cmd_eval(eval_flags.resolve(), s_re, s_im, model);
        if (expand->parsed()) return cmd_expand(expand_flags.resolve());
        if (locate->parsed()) return cmd_locate(locate_flags.resolve(), !no_cache);
        if (count->parsed()) return cmd_count(count_flags.resolve());
        if (report->parsed()) return cmd_report(report_flags.resolve(), points_path, deltas);
        if (scan->parsed()) return cmd_scan_free(scan_flags.resolve());
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.is_usage_error() ? exit_usage : exit_numeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_numeric;
    }
    return exit_usage;
}
