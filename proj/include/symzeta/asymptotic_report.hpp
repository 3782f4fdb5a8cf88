#pragma once

// Main-term counting formula, weighted real-part sums and tail counts over
// located a-points, plus CSV / plot-data writers for all three reports.

#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "symzeta/apoint_locator.hpp"
#include "symzeta/core.hpp"
#include "symzeta/partitions.hpp"
#include "symzeta/symmetric_zeta.hpp"

namespace symzeta {

inline constexpr double default_t_min = 0.5;

struct CountReport {
    std::vector<double> weights;
    ComplexPoint a{0.0, 0.0};
    double y = 0.0;
    double T = 0.0;
    double t_min = default_t_min;
    double x = 0.0; // right edge of the counting rectangle
    int computed_count = 0;
    double main_term = 0.0;
    double discrepancy = 0.0;
    double discrepancy_over_logT = 0.0;
    bool below_log_range = false; // T <= 2 pi / a_r, some logs negative
    bool flagged = false;         // |discrepancy| / log T > 25
};

struct SumReport {
    double T = 0.0;
    double y = 0.0;
    double t_min = default_t_min;
    int count = 0;
    double sum_half = 0.0;
    double sum_crit = 0.0;
    double sum_littlewood = 0.0;
    double predicted_half = 0.0;
    double predicted_littlewood = 0.0;
};

struct TailReport {
    double y3 = 0.0;
    double delta = 0.0;
    double T = 0.0;
    int tail_count = 0;
    double bound_scale = 0.0;     // T log log T / delta
    double normalized = 0.0;      // tail_count / bound_scale
};

inline constexpr double discrepancy_flag = 25.0;

/// (T/2pi) sum a_j log(a_j T / 2pi) - A T / 2pi, minus (T/2pi) log(1^a_1 ... r^a_r)
/// when a = 0.
inline double main_term_N(const Weights& w, const TargetValue& a, double T) {
    require(std::isfinite(T) && T > 0.0, ErrorCode::InvalidArgument, "T must be positive");
    const double scale = T / constants::two_pi;
    double sum = 0.0;
    for (double aj : w.values()) sum += aj * std::log(aj * scale);
    double out = scale * sum - w.total() * scale;
    if (a.is_zero()) out += scale * w.log_m();
    return out;
}

inline bool main_term_in_log_range(const Weights& w, double T) { return T > constants::two_pi / w.smallest(); }

/// Counts over [-y, x] x [t_min, T] for each T; x = C1_hat + 5. The whole
/// rectangle up to max(T) is located once and the counts read off by height.
inline std::vector<CountReport> compare_counts(const SymZeta& z, const TargetValue& a, double y,
                                               const std::vector<double>& T_grid, double t_min = default_t_min,
                                               const LocatorOptions& options = {},
                                               std::vector<APoint>* located = nullptr) {
    require(y > 0.0, ErrorCode::InvalidArgument, "y must be positive");
    require(!T_grid.empty(), ErrorCode::InvalidArgument, "T grid is empty");
    double t_hi = 0.0;
    for (double T : T_grid) {
        require(T > t_min, ErrorCode::InvalidArgument, "every T must exceed t_min");
        t_hi = std::max(t_hi, T);
    }
    const FreeRegionResult free = scan_free_right(z, a, t_min, t_hi, options);
    const double x = free.c1_hat + 5.0;

    std::vector<CountReport> out;
    std::vector<APoint> all;
    ContourIntegrator integrator(z, a, options);
    for (double T : T_grid) {
        // Counts come from the contour itself, not from the located list.
        const WindingResult w = count_apoints(integrator, {-y, x, t_min, T});
        CountReport r;
        r.weights.assign(z.weights().values().begin(), z.weights().values().end());
        r.a = a.a;
        r.y = y;
        r.T = T;
        r.t_min = t_min;
        r.x = x;
        r.computed_count = w.count;
        r.main_term = main_term_N(z.weights(), a, T);
        r.discrepancy = r.computed_count - r.main_term;
        r.discrepancy_over_logT = r.discrepancy / std::log(T);
        r.below_log_range = !main_term_in_log_range(z.weights(), T);
        r.flagged = std::abs(r.discrepancy_over_logT) > discrepancy_flag;
        out.push_back(r);
    }
    if (located != nullptr) *located = locate_apoints(integrator, {-y, x, t_min, t_hi});
    return out;
}

/// Count reports read off a located point list covering [-y, x] x [t_min, max T].
inline std::vector<CountReport> count_reports_from_points(const std::vector<APoint>& apoints, const Weights& w,
                                                          const TargetValue& a, double y, double x,
                                                          const std::vector<double>& T_grid,
                                                          double t_min = default_t_min) {
    std::vector<CountReport> out;
    for (double T : T_grid) {
        require(T > t_min, ErrorCode::InvalidArgument, "every T must exceed t_min");
        CountReport r;
        r.weights.assign(w.values().begin(), w.values().end());
        r.a = a.a;
        r.y = y;
        r.T = T;
        r.t_min = t_min;
        r.x = x;
        for (const auto& p : apoints) {
            if (p.beta > -y && p.beta < x && p.gamma > t_min && p.gamma < T) r.computed_count += p.multiplicity;
        }
        r.main_term = main_term_N(w, a, T);
        r.discrepancy = r.computed_count - r.main_term;
        r.discrepancy_over_logT = r.discrepancy / std::log(T);
        r.below_log_range = !main_term_in_log_range(w, T);
        r.flagged = std::abs(r.discrepancy_over_logT) > discrepancy_flag;
        out.push_back(r);
    }
    return out;
}

/// Weighted sums over the points with -y < beta and t_min < gamma < T,
/// counted with multiplicity.
inline SumReport weighted_sums(const std::vector<APoint>& apoints, const Weights& w, double y, double T,
                               double t_min = default_t_min) {
    require(y > 0.0 && T > t_min, ErrorCode::InvalidArgument, "need y > 0 and T > t_min");
    const double r = static_cast<double>(w.rank());
    const double crit = r / (2.0 * w.total());
    SumReport out;
    out.T = T;
    out.y = y;
    out.t_min = t_min;
    double half = 0.0;
    double critical = 0.0;
    double littlewood = 0.0;
    for (const auto& p : apoints) {
        if (!(p.beta > -y && p.gamma > t_min && p.gamma < T)) continue;
        const double m = p.multiplicity;
        out.count += p.multiplicity;
        half += m * (p.beta - 0.5);
        critical += m * (p.beta - crit);
        littlewood += m * (p.beta + y);
    }
    out.sum_half = constants::two_pi * half;
    out.sum_crit = constants::two_pi * critical;
    out.sum_littlewood = constants::two_pi * littlewood;
    const double tlogt = T * std::log(T);
    out.predicted_half = (r - w.total()) / 2.0 * tlogt;
    double coeff = 0.0;
    for (double aj : w.values()) coeff += 0.5 + aj * y;
    out.predicted_littlewood = coeff * tlogt;
    return out;
}

/// Points with beta > 1/(2 a_r) + delta and t_min < gamma < T.
inline TailReport tail_density(const std::vector<APoint>& apoints, const Weights& w, double delta, double T,
                               double t_min = default_t_min) {
    require(delta > 0.0, ErrorCode::InvalidArgument, "delta must be positive");
    require(T > std::exp(1.0), ErrorCode::InvalidArgument, "T must exceed e so that log log T is defined");
    TailReport out;
    out.y3 = 1.0 / (2.0 * w.smallest());
    out.delta = delta;
    out.T = T;
    for (const auto& p : apoints) {
        if (p.beta > out.y3 + delta && p.gamma > t_min && p.gamma < T) out.tail_count += p.multiplicity;
    }
    out.bound_scale = T * std::log(std::log(T)) / delta;
    out.normalized = out.tail_count / out.bound_scale;
    return out;
}

/// delta = (log log T)^2 / log T.
inline double special_delta(double T) {
    const double l = std::log(T);
    return std::log(l) * std::log(l) / l;
}

namespace detail {

inline std::string fmt(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace detail

inline void write_count_csv(std::ostream& os, const std::vector<CountReport>& reports) {
    if (!reports.empty()) {
        const auto& r = reports.front();
        os << "# window: -y < beta < x, " << detail::fmt(r.t_min) << " < gamma < T; y=" << detail::fmt(r.y)
           << " x=" << detail::fmt(r.x) << " a=" << detail::fmt(r.a.real()) << "," << detail::fmt(r.a.imag()) << "\n";
    }
    os << "T,count,main_term,discrepancy,discrepancy_over_logT,flagged,below_log_range\n";
    for (const auto& r : reports) {
        os << detail::fmt(r.T) << ',' << r.computed_count << ',' << detail::fmt(r.main_term) << ','
           << detail::fmt(r.discrepancy) << ',' << detail::fmt(r.discrepancy_over_logT) << ',' << (r.flagged ? 1 : 0)
           << ',' << (r.below_log_range ? 1 : 0) << '\n';
    }
}

inline void write_sum_csv(std::ostream& os, const std::vector<SumReport>& reports) {
    if (!reports.empty()) {
        os << "# window: -y < beta, " << detail::fmt(reports.front().t_min)
           << " < gamma < T; y=" << detail::fmt(reports.front().y) << "\n";
    }
    os << "T,count,sum_half,sum_crit,sum_littlewood,predicted_half,predicted_littlewood\n";
    for (const auto& r : reports) {
        os << detail::fmt(r.T) << ',' << r.count << ',' << detail::fmt(r.sum_half) << ',' << detail::fmt(r.sum_crit)
           << ',' << detail::fmt(r.sum_littlewood) << ',' << detail::fmt(r.predicted_half) << ','
           << detail::fmt(r.predicted_littlewood) << '\n';
    }
}

inline void write_tail_csv(std::ostream& os, const std::vector<TailReport>& reports) {
    os << "# window: beta > y3 + delta, " << detail::fmt(default_t_min) << " < gamma < T\n";
    os << "T,y3,delta,tail_count,bound_scale,normalized\n";
    for (const auto& r : reports) {
        os << detail::fmt(r.T) << ',' << detail::fmt(r.y3) << ',' << detail::fmt(r.delta) << ',' << r.tail_count << ','
           << detail::fmt(r.bound_scale) << ',' << detail::fmt(r.normalized) << '\n';
    }
}

/// Two whitespace-separated columns, one row per point.
inline void write_plot_data(std::ostream& os, const std::vector<std::pair<double, double>>& rows) {
    for (const auto& [x, v] : rows) os << detail::fmt(x) << ' ' << detail::fmt(v) << '\n';
}

} // namespace symzeta
