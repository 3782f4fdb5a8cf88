// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "symzeta/symzeta.hpp"

using namespace symzeta;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

ComplexPoint random_point(std::mt19937_64& rng, double s0, double s1, double t0, double t1) {
    std::uniform_real_distribution<double> x(s0, s1);
    std::uniform_real_distribution<double> y(t0, t1);
    const double re = x(rng);
    return {re, y(rng)};
}

int multiplicity_total(const std::vector<APoint>& pts) {
    int n = 0;
    for (const auto& p : pts) n += p.multiplicity;
    return n;
}

Outcome closed_form_identity() {
    std::mt19937_64 rng(1001);
    const SymZeta z11(Weights({1, 1}));
    const SymZeta z111(Weights({1, 1, 1}));
    double worst11 = 0.0;
    double worst111 = 0.0;
    double worst_rel = 0.0;
    for (int i = 0; i < 100; ++i) {
        const ComplexPoint s = random_point(rng, -10, 10, 1, 50);
        const ComplexPoint z1 = zeta(s);
        const ComplexPoint closed = z1 * z1 - zeta(2.0 * s);
        const double diff = std::abs(eval_sym(z11, s) - closed);
        worst11 = std::max(worst11, diff);
        worst_rel = std::max(worst_rel, diff / std::max(1.0, std::abs(closed)));
    }
    for (int i = 0; i < 50; ++i) {
        const ComplexPoint s = random_point(rng, -10, 10, 1, 50);
        const ComplexPoint z1 = zeta(s);
        const ComplexPoint closed = z1 * z1 * z1 - 3.0 * zeta(2.0 * s) * z1 + 2.0 * zeta(3.0 * s);
        const double diff = std::abs(eval_sym(z111, s) - closed);
        worst111 = std::max(worst111, diff);
        worst_rel = std::max(worst_rel, diff / std::max(1.0, std::abs(closed)));
    }
    std::ostringstream os;
    os << "max |diff| (1,1) = " << worst11 << " (tol 1e-10), (1,1,1) = " << worst111
       << " (tol 1e-9); max |diff|/max(1,|Z|) = " << worst_rel;
    return {worst11 <= 1e-10 && worst111 <= 1e-9, os.str()};
}

Outcome oracle_equivalence() {
    std::mt19937_64 rng(1002);
    double worst_excess = -1e300;
    int checked = 0;
    for (const auto& values : {std::vector<double>{1, 1}, {2, 1}, {1, 1, 1}}) {
        const Weights w(values);
        const SymZeta z(w);
        int n = 0;
        while (n < 20) {
            const ComplexPoint s = random_point(rng, 1.2, 6.0, -20, 20);
            if (!in_convergence_region(w, s)) continue;
            const OracleResult r = multisum_oracle(w, s, 4000);
            worst_excess = std::max(worst_excess, std::abs(eval_sym(z, s) - r.value) - (r.truncation_estimate + 1e-8));
            ++n;
            ++checked;
        }
    }
    std::ostringstream os;
    os << checked << " points, worst |diff| - (truncation + 1e-8) = " << worst_excess;
    return {worst_excess <= 0.0, os.str()};
}

Outcome special_function_floor() {
    const double e2 = std::abs(zeta({2.0, 0.0}).real() - constants::pi * constants::pi / 6.0);
    double fe = 0.0;
    for (double sigma = -5.0; sigma <= 6.0; sigma += 0.5) {
        for (double t = 2.0; t <= 100.0; t += 2.0) {
            const ComplexPoint s{sigma, t};
            const ComplexPoint lhs = zeta(s);
            fe = std::max(fe, std::abs(lhs - chi(s) * zeta(1.0 - s)) / std::max(1.0, std::abs(lhs)));
        }
    }
    const double z0 = std::abs(zeta({0.5, 14.134725142}));
    std::ostringstream os;
    os << "|zeta(2) - pi^2/6| = " << e2 << ", functional equation residual " << fe << ", |zeta(rho_1)| = " << z0;
    return {e2 <= 1e-12 && fe <= 1e-8 && z0 <= 1e-6, os.str()};
}

Outcome winding_integrality() {
    std::mt19937_64 rng(1004);
    const SymZeta z(Weights({1, 1}));
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst_residual = 0.0;
    int mismatches = 0;
    int total_points = 0;
    int rects = 0;
    for (int i = 0; i < 20; ++i) {
        const double w = 0.5 + 4.5 * u(rng);
        const double h = 1.0 + 24.0 * u(rng);
        const double s0 = -5.0 + (15.0 - w) * u(rng);
        const double t0 = 1.0 + (99.0 - h) * u(rng);
        const Rectangle r{s0, s0 + w, t0, t0 + h};
        for (const ComplexPoint a : {ComplexPoint(0, 0), ComplexPoint(1, 0), ComplexPoint(1, 1)}) {
            ContourIntegrator integrator(z, TargetValue{a});
            WindingResult total;
            const auto pts = locate_apoints(integrator, r, &total);
            worst_residual = std::max(worst_residual, total.integer_residual);
            if (total.count < 0 || multiplicity_total(pts) != total.count) ++mismatches;
            total_points += total.count;
            ++rects;
        }
    }
    std::ostringstream os;
    os << rects << " rectangle/target pairs, " << total_points << " a-points, worst integer residual " << worst_residual
       << ", locate/count mismatches " << mismatches;
    return {worst_residual <= 1e-3 && mismatches == 0, os.str()};
}

Outcome free_half_plane() {
    struct Case {
        std::vector<double> w;
        ComplexPoint a;
    };
    const std::vector<Case> cases = {{{1, 1}, {0, 0}},   {{1, 1}, {1, 0}}, {{1, 1}, {1, 1}}, {{1, 1}, {100, 0}},
                                     {{2, 1}, {0, 0}},   {{2, 1}, {1, 0}}, {{1, 1, 1}, {0, 0}}};
    bool ok = true;
    std::ostringstream os;
    for (const auto& c : cases) {
        const SymZeta z{Weights(c.w)};
        const FreeRegionResult f = scan_free_right(z, TargetValue{c.a}, 0.5, 100.0);
        ok = ok && f.certificate.count == 0;
        os << "w=(";
        for (std::size_t i = 0; i < c.w.size(); ++i) os << (i ? "," : "") << c.w[i];
        os << ") a=" << c.a << ": C1_hat=" << f.c1_hat << " count=" << f.certificate.count << "; ";
    }
    return {ok, os.str()};
}

Outcome trivial_clusters() {
    const SymZeta z(Weights({1, 1}));
    bool ok = true;
    std::ostringstream os;
    for (const double a : {0.0, 0.5}) {
        const ClusterScan scan = scan_clusters(z, TargetValue{{a, 0.0}}, 1, 12, 0.25);
        bool covers = scan.stable_from.has_value() && *scan.stable_from <= 6;
        for (std::size_t i = 0; i < scan.n_values.size(); ++i) {
            const int n = scan.n_values[i];
            if (n >= 6 && n <= 10 && (scan.counts[i] != 1 || scan.counts_halved[i] != 1)) covers = false;
        }
        ok = ok && covers;
        os << "a=" << a << ": counts n=1..12 [";
        for (std::size_t i = 0; i < scan.counts.size(); ++i) os << (i ? " " : "") << scan.counts[i];
        os << "], stable from ";
        if (scan.stable_from) os << *scan.stable_from;
        else os << "none";
        os << "; ";
    }
    return {ok, os.str()};
}

Outcome strip_freeness() {
    const SymZeta z(Weights({1, 1}));
    bool ok = true;
    std::ostringstream os;
    for (const ComplexPoint a : {ComplexPoint(0, 0), ComplexPoint(3, 2)}) {
        const WindingResult w = scan_strip_free(z, TargetValue{a}, 2.0, 0.5, 50.0, 200.0);
        ok = ok && w.count == 0;
        os << "a=" << a << ": count " << w.count << " in [-2,-0.5]x[50,200]; ";
    }
    return {ok, os.str()};
}

// Shared by criteria 8 and 10.
std::vector<APoint> located_11;

Outcome counting_formula() {
    const SymZeta z(Weights({1, 1}));
    const auto reports = compare_counts(z, TargetValue{}, 5.0, {50.0, 100.0, 200.0}, default_t_min, {}, &located_11);
    bool ok = true;
    std::ostringstream os;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        ok = ok && std::abs(r.discrepancy_over_logT) <= 25.0;
        if (i > 0) {
            const double prev = std::abs(reports[i - 1].discrepancy_over_logT);
            const double ratio = std::abs(r.discrepancy_over_logT) / std::max(prev, 1e-12);
            ok = ok && ratio <= 3.0;
            os << "ratio " << ratio << "; ";
        }
        os << "T=" << r.T << " count=" << r.computed_count << " main=" << r.main_term
           << " |d|/logT=" << std::abs(r.discrepancy_over_logT) << "; ";
    }
    return {ok, os.str()};
}

Outcome weighted_sum_trends() {
    const Weights w({2, 1});
    const SymZeta z(w);
    const double y = 5.0;
    const TargetValue a{};
    const FreeRegionResult free = scan_free_right(z, a, default_t_min, 200.0);
    const Rectangle region{-y, free.c1_hat + 5.0, default_t_min, 200.0};
    const auto pts = locate_apoints(z, a, region);
    bool ok = true;
    std::ostringstream os;
    os << "x=" << region.sigma_max << "; ";
    std::vector<double> crit_ratio;
    for (double T : {100.0, 200.0}) {
        const SumReport s = weighted_sums(pts, w, y, T);
        const double id_half = s.sum_littlewood - constants::two_pi * (y + 0.5) * s.count;
        const double id_crit = s.sum_littlewood - constants::two_pi * (y + w.rank() / (2.0 * w.total())) * s.count;
        const double tol = 1e-9 * std::max(1.0, std::abs(s.sum_littlewood));
        const bool identities = std::abs(s.sum_half - id_half) <= tol && std::abs(s.sum_crit - id_crit) <= tol;
        const double tlogt = T * std::log(T);
        const double half_ratio = s.sum_half / tlogt;
        crit_ratio.push_back(std::abs(s.sum_crit) / tlogt);
        ok = ok && identities && half_ratio >= -1.0 && half_ratio <= 0.0;
        os << "T=" << T << " n=" << s.count << " identities " << (identities ? "hold" : "FAIL")
           << " sum_half/TlogT=" << half_ratio << " |sum_crit|/TlogT=" << crit_ratio.back() << "; ";
    }
    const bool decreasing = crit_ratio[1] < crit_ratio[0];
    ok = ok && decreasing;
    os << "|sum_crit|/TlogT " << (decreasing ? "decreases" : "does not decrease");
    return {ok, os.str()};
}

Outcome tail_density_check() {
    const SymZeta z(Weights({1, 1}));
    const WindingResult tail = count_apoints(z, TargetValue{}, {1.0, 6.0, 0.5, 100.0});
    std::ostringstream os;
    os << "contour count on [1,6]x[0.5,100] = " << tail.count;
    if (tail.count > 0) {
        os << " (";
        bool first = true;
        for (const auto& p : located_11) {
            if (p.beta > 1.0 && p.gamma < 100.0) {
                os << (first ? "" : ", ") << p.beta << "+" << p.gamma << "i";
                first = false;
            }
        }
        os << ")";
    }
    bool monotone = true;
    int previous = 1 << 30;
    os << "; tail counts for delta 0.05..2:";
    for (double delta : {0.05, 0.1, 0.25, 0.5, 1.0, 2.0}) {
        const int n = tail_density(located_11, Weights({1, 1}), delta, 100.0).tail_count;
        monotone = monotone && n <= previous;
        previous = n;
        os << " " << n;
    }
    return {tail.count == 0 && monotone, os.str()};
}

} // namespace

int main() {
    const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
        {1, closed_form_identity}, {2, oracle_equivalence}, {3, special_function_floor}, {4, winding_integrality},
        {5, free_half_plane},      {6, trivial_clusters},   {7, strip_freeness},          {8, counting_formula},
        {9, weighted_sum_trends},  {10, tail_density_check},
    };
    int failures = 0;
    for (const auto& [id, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!out.pass) ++failures;
        std::printf("%s criterion %d: %s [%.1f s]\n", out.pass ? "PASS" : "FAIL", id, out.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
