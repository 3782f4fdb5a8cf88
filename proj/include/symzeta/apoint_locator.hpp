#pragma once

// Argument-principle counting and localization of a-points, Z(s) = a.
//
// Winding numbers come from adaptive composite Gauss-Legendre quadrature of
// G'/G along each boundary piece. A panel is accepted only when the
// quadrature agrees with its two halves and with the principal logarithm of
// G(end)/G(start); the latter caps the argument change per panel below pi, so
// the accepted logarithms sum to 2 pi i times an integer up to rounding.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "symzeta/core.hpp"
#include "symzeta/symmetric_zeta.hpp"

namespace symzeta {

/// Axis-aligned rectangle [sigma_min, sigma_max] x [t_min, t_max], t_min > 0.
struct Rectangle {
    double sigma_min = 0.0;
    double sigma_max = 0.0;
    double t_min = 0.0;
    double t_max = 0.0;

    void validate() const {
        require(std::isfinite(sigma_min) && std::isfinite(sigma_max) && std::isfinite(t_min) && std::isfinite(t_max),
                ErrorCode::InvalidArgument, "rectangle bounds must be finite");
        require(sigma_min < sigma_max, ErrorCode::InvalidArgument, "sigma_min must be below sigma_max");
        require(t_min > 0.0 && t_min < t_max, ErrorCode::InvalidArgument, "rectangle needs 0 < t_min < t_max");
    }
    double width() const noexcept { return sigma_max - sigma_min; }
    double height() const noexcept { return t_max - t_min; }
    double diameter() const noexcept { return std::hypot(width(), height()); }
    ComplexPoint center() const noexcept { return {(sigma_min + sigma_max) / 2, (t_min + t_max) / 2}; }
    bool contains(ComplexPoint s, double slack = 0.0) const noexcept {
        return s.real() >= sigma_min - slack && s.real() <= sigma_max + slack && s.imag() >= t_min - slack &&
               s.imag() <= t_max + slack;
    }
    Rectangle grown(double by) const noexcept { return {sigma_min - by, sigma_max + by, t_min - by, t_max + by}; }
};

struct WindingResult {
    int count = 0;
    /// (1 / 2 pi i) times the raw quadrature of G'/G around the contour.
    ComplexPoint raw_integral{0.0, 0.0};
    double integer_residual = 0.0;
    /// (1 / 2 pi i) times the contour integral of s G'/G: the sum of the
    /// enclosed a-points.
    ComplexPoint first_moment{0.0, 0.0};
    /// How far the contour was pushed outwards to clear a boundary zero.
    double growth = 0.0;
};

struct APoint {
    double beta = 0.0;
    double gamma = 0.0;
    int multiplicity = 1;
    double residual = 0.0; // |Z(rho) - a|
    int newton_iters = 0;

    friend bool operator==(const APoint&, const APoint&) = default;
};

struct LocatorOptions {
    int gauss_order = 8;
    double panel_tol = 1e-6;        // |whole - halves| per panel
    double log_match_tol = 0.05;    // |halves - Log(G(b)/G(a))| per panel
    int max_depth = 44;
    double min_boundary_g = 1e-6;   // |G| below this on a contour counts as a hit
    double max_integer_residual = 1e-3;
    int max_perturbations = 5;
    double min_cell_diameter = 1e-6;
    double residual_tol = 1e-8;
    /// Accept a Newton root whose residual is below this fraction of the
    /// cancelling term magnitudes even if it exceeds residual_tol: double
    /// precision cannot do better there.
    double residual_floor_rel = 1e-13;
    int max_newton_iters = 60;
};

namespace detail {

struct GaussRule {
    std::vector<double> nodes;   // on [0, 1]
    std::vector<double> weights; // summing to 1
};

inline GaussRule gauss_legendre(int n) {
    GaussRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x = std::cos(constants::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        rule.nodes[static_cast<std::size_t>(i)] = 0.5 * (1.0 - x);
        rule.weights[static_cast<std::size_t>(i)] = 1.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

/// A piece of contour s(u), u in [0, 1].
struct Path {
    ComplexPoint start;
    ComplexPoint end;
    // Arc data; radius == 0 means a straight segment.
    ComplexPoint center{0.0, 0.0};
    double radius = 0.0;
    double theta0 = 0.0;
    double theta1 = 0.0;

    ComplexPoint at(double u) const {
        if (radius == 0.0) return start + u * (end - start);
        return center + std::polar(radius, theta0 + u * (theta1 - theta0));
    }
    ComplexPoint velocity(double u) const {
        if (radius == 0.0) return end - start;
        return ComplexPoint(0.0, theta1 - theta0) * std::polar(radius, theta0 + u * (theta1 - theta0));
    }
};

struct PieceIntegral {
    ComplexPoint raw{0.0, 0.0};
    ComplexPoint log_change{0.0, 0.0};
    ComplexPoint moment{0.0, 0.0};

    PieceIntegral& operator+=(const PieceIntegral& o) {
        raw += o.raw;
        log_change += o.log_change;
        moment += o.moment;
        return *this;
    }
    PieceIntegral reversed() const { return {-raw, -log_change, -moment}; }
};

} // namespace detail

/// Integrates G'/G along segments and arcs for a fixed (Z, a). Segment
/// results are memoized, so sibling cells share their common edges.
/// Not thread-safe; use one integrator per thread.
class ContourIntegrator {
public:
    ContourIntegrator(const SymZeta& z, TargetValue a, LocatorOptions options = {})
        : z_(z), a_(a), options_(options), rule_(detail::gauss_legendre(options.gauss_order)) {}

    const SymZeta& function() const noexcept { return z_; }
    const TargetValue& target() const noexcept { return a_; }
    const LocatorOptions& options() const noexcept { return options_; }
    std::int64_t evaluations() const noexcept { return evaluations_; }

    GEval evaluate(ComplexPoint s) {
        ++evaluations_;
        return z_.evaluate_g(a_, s);
    }

    detail::PieceIntegral segment(ComplexPoint p, ComplexPoint q) {
        const bool forward = std::make_pair(p.real(), p.imag()) < std::make_pair(q.real(), q.imag());
        const Key key = forward ? Key{p.real(), p.imag(), q.real(), q.imag()} : Key{q.real(), q.imag(), p.real(), p.imag()};
        auto it = memo_.find(key);
        if (it == memo_.end()) {
            detail::Path path{forward ? p : q, forward ? q : p};
            it = memo_.emplace(key, integrate(path)).first;
        }
        return forward ? it->second : it->second.reversed();
    }

    /// Positively oriented rectangle boundary.
    WindingResult rectangle(const Rectangle& rect) {
        rect.validate();
        const ComplexPoint c1{rect.sigma_min, rect.t_min};
        const ComplexPoint c2{rect.sigma_max, rect.t_min};
        const ComplexPoint c3{rect.sigma_max, rect.t_max};
        const ComplexPoint c4{rect.sigma_min, rect.t_max};
        detail::PieceIntegral total = segment(c1, c2);
        total += segment(c2, c3);
        total += segment(c3, c4);
        total += segment(c4, c1);
        return finish(total);
    }

    /// Positively oriented circle |s - center| = radius, in eight arcs.
    WindingResult circle(ComplexPoint center, double radius) {
        require(radius > 0.0 && std::isfinite(radius), ErrorCode::InvalidArgument, "radius must be positive");
        detail::PieceIntegral total;
        constexpr int arcs = 8;
        for (int k = 0; k < arcs; ++k) {
            detail::Path path;
            path.center = center;
            path.radius = radius;
            path.theta0 = constants::two_pi * k / arcs;
            path.theta1 = constants::two_pi * (k + 1) / arcs;
            path.start = path.at(0.0);
            path.end = path.at(1.0);
            total += integrate(path);
        }
        return finish(total);
    }

private:
    using Key = std::tuple<double, double, double, double>;

    struct Panel {
        ComplexPoint integral{0.0, 0.0};
        ComplexPoint moment{0.0, 0.0};
    };

    Panel gauss(const detail::Path& path, double u0, double u1) {
        Panel out;
        const double h = u1 - u0;
        for (std::size_t i = 0; i < rule_.nodes.size(); ++i) {
            const double u = u0 + h * rule_.nodes[i];
            const ComplexPoint s = path.at(u);
            const GEval e = evaluate(s);
            guard(e, s);
            const ComplexPoint f = e.log_deriv * path.velocity(u) * (h * rule_.weights[i]);
            out.integral += f;
            out.moment += s * f;
        }
        return out;
    }

    ComplexPoint g_at(const detail::Path& path, double u) {
        const ComplexPoint s = path.at(u);
        const GEval e = evaluate(s);
        guard(e, s);
        return e.g;
    }

    void guard(const GEval& e, ComplexPoint s) const {
        if (!is_finite(e.g) || !is_finite(e.log_deriv)) {
            throw Error(ErrorCode::NonIntegerWinding, "non-finite G on the contour");
        }
        if (std::abs(e.g) < options_.min_boundary_g) {
            throw Error(ErrorCode::BoundaryTooCloseToZero, "|G| below threshold on the contour", s.imag());
        }
    }

    detail::PieceIntegral integrate(const detail::Path& path) {
        const ComplexPoint g0 = g_at(path, 0.0);
        const ComplexPoint g1 = g_at(path, 1.0);
        const Panel whole = gauss(path, 0.0, 1.0);
        return refine(path, 0.0, 1.0, g0, g1, whole, 0);
    }

    detail::PieceIntegral refine(const detail::Path& path, double u0, double u1, ComplexPoint g0, ComplexPoint g1,
                                 const Panel& whole, int depth) {
        const double mid = 0.5 * (u0 + u1);
        const Panel left = gauss(path, u0, mid);
        const Panel right = gauss(path, mid, u1);
        const ComplexPoint halves = left.integral + right.integral;
        const ComplexPoint log_change = std::log(g1 / g0);
        if (std::abs(halves - whole.integral) <= options_.panel_tol &&
            std::abs(halves - log_change) <= options_.log_match_tol) {
            return {halves, log_change, left.moment + right.moment};
        }
        if (depth >= options_.max_depth) {
            throw Error(ErrorCode::NonIntegerWinding, "contour quadrature failed to converge");
        }
        const ComplexPoint gm = g_at(path, mid);
        detail::PieceIntegral out = refine(path, u0, mid, g0, gm, left, depth + 1);
        out += refine(path, mid, u1, gm, g1, right, depth + 1);
        return out;
    }

    WindingResult finish(const detail::PieceIntegral& total) const {
        const ComplexPoint two_pi_i{0.0, constants::two_pi};
        WindingResult out;
        out.raw_integral = total.raw / two_pi_i;
        const ComplexPoint exact = total.log_change / two_pi_i;
        const double rounded = std::round(exact.real());
        if (std::abs(exact - rounded) > 1e-6 || rounded < 0.0) {
            throw Error(ErrorCode::NonIntegerWinding, "accumulated argument change is not a nonnegative multiple of 2 pi");
        }
        out.count = static_cast<int>(rounded);
        out.integer_residual = std::abs(out.raw_integral - rounded);
        out.first_moment = total.moment / two_pi_i;
        if (out.integer_residual > options_.max_integer_residual) {
            throw Error(ErrorCode::NonIntegerWinding, "winding integral is not within tolerance of an integer");
        }
        return out;
    }

    const SymZeta& z_;
    TargetValue a_;
    LocatorOptions options_;
    detail::GaussRule rule_;
    std::map<Key, detail::PieceIntegral> memo_;
    std::int64_t evaluations_ = 0;
};

/// Number of a-points (with multiplicity) inside the rectangle. If the
/// boundary passes within |G| < 1e-6 of a zero, the rectangle is grown by
/// 1e-3 (1 + k) on every side, k = 0..4.
inline WindingResult count_apoints(ContourIntegrator& integrator, const Rectangle& rect) {
    rect.validate();
    const LocatorOptions& opt = integrator.options();
    for (int k = 0;; ++k) {
        const double growth = (k == 0) ? 0.0 : 1e-3 * k;
        Rectangle trial = rect.grown(growth);
        if (trial.t_min <= 0.0) trial.t_min = rect.t_min;
        try {
            WindingResult out = integrator.rectangle(trial);
            out.growth = growth;
            return out;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::BoundaryTooCloseToZero) throw;
            if (k >= opt.max_perturbations) {
                throw Error(ErrorCode::BoundaryTooCloseToZero, "boundary still meets a zero after perturbation");
            }
        }
    }
}

inline WindingResult count_apoints(const SymZeta& z, const TargetValue& a, const Rectangle& rect,
                                   const LocatorOptions& options = {}) {
    ContourIntegrator integrator(z, a, options);
    return count_apoints(integrator, rect);
}

namespace detail {

struct NewtonOutcome {
    ComplexPoint root;
    int iterations = 0;
    bool converged = false;
};

inline NewtonOutcome newton_on_g(ContourIntegrator& integrator, ComplexPoint start, const Rectangle& cell) {
    const auto& opt = integrator.options();
    NewtonOutcome out{start, 0, false};
    ComplexPoint s = start;
    const double escape = 2.0 * cell.diameter();
    for (int it = 1; it <= opt.max_newton_iters; ++it) {
        GEval e;
        try {
            e = integrator.evaluate(s);
        } catch (const Error&) {
            return out;
        }
        out.iterations = it;
        if (e.g == ComplexPoint{0.0, 0.0}) {
            out.root = s;
            out.converged = true;
            return out;
        }
        // G / G' = 1 / (G'/G)
        const ComplexPoint step = 1.0 / e.log_deriv;
        if (!is_finite(step)) return out;
        s -= step;
        out.root = s;
        if (std::abs(s - cell.center()) > escape) return out;
        if (std::abs(step) <= 4e-16 * std::max(1.0, std::abs(s))) {
            out.converged = true;
            return out;
        }
        // Past the quadratic phase, one more step only polishes rounding.
        if (std::abs(step) <= 1e-11 * std::max(1.0, std::abs(s))) {
            out.converged = true;
            try {
                const GEval last = integrator.evaluate(s);
                if (last.log_deriv != ComplexPoint{0.0, 0.0}) {
                    const ComplexPoint polish = s - 1.0 / last.log_deriv;
                    if (is_finite(polish) && std::abs(polish - s) < std::abs(step)) s = polish;
                }
            } catch (const Error&) {
            }
            out.root = s;
            out.iterations = it + 1;
            return out;
        }
    }
    return out;
}

struct Residual {
    double value = std::numeric_limits<double>::infinity();
    double scale = std::numeric_limits<double>::infinity();
};

inline Residual residual_at(ContourIntegrator& integrator, ComplexPoint s) {
    try {
        const GEval e = integrator.evaluate(s);
        return {std::abs(e.value - integrator.target().a), e.scale + std::abs(integrator.target().a)};
    } catch (const Error&) {
        return {};
    }
}

/// Four sub-cells: a 2x2 grid for roughly square cells, otherwise four
/// slabs across the long side. `shift` moves the cut lines by that fraction
/// of the cell size.
inline std::array<Rectangle, 4> split_cell(const Rectangle& cell, double shift) {
    const double w = cell.width();
    const double h = cell.height();
    std::array<Rectangle, 4> out;
    if (h > 2.0 * w) {
        const double step = h / 4.0;
        double lo = cell.t_min;
        for (int k = 0; k < 4; ++k) {
            const double hi = (k == 3) ? cell.t_max : cell.t_min + step * (k + 1) + shift * step;
            out[static_cast<std::size_t>(k)] = {cell.sigma_min, cell.sigma_max, lo, hi};
            lo = hi;
        }
    } else if (w > 2.0 * h) {
        const double step = w / 4.0;
        double lo = cell.sigma_min;
        for (int k = 0; k < 4; ++k) {
            const double hi = (k == 3) ? cell.sigma_max : cell.sigma_min + step * (k + 1) + shift * step;
            out[static_cast<std::size_t>(k)] = {lo, hi, cell.t_min, cell.t_max};
            lo = hi;
        }
    } else {
        const double sm = cell.sigma_min + w * (0.5 + shift);
        const double tm = cell.t_min + h * (0.5 + shift);
        out[0] = {cell.sigma_min, sm, cell.t_min, tm};
        out[1] = {sm, cell.sigma_max, cell.t_min, tm};
        out[2] = {cell.sigma_min, sm, tm, cell.t_max};
        out[3] = {sm, cell.sigma_max, tm, cell.t_max};
    }
    return out;
}

class CellLocator {
public:
    explicit CellLocator(ContourIntegrator& integrator) : integrator_(integrator) {}

    void process(const Rectangle& cell, const WindingResult& winding) {
        if (winding.count == 0) return;
        const auto& opt = integrator_.options();
        if (winding.count == 1) {
            ComplexPoint guess = winding.first_moment;
            if (!cell.contains(guess)) guess = cell.center();
            const NewtonOutcome n = newton_on_g(integrator_, guess, cell);
            const double slack = 1e-12 * std::max(1.0, std::abs(n.root));
            if (n.converged && cell.contains(n.root, slack)) {
                const Residual res = residual_at(integrator_, n.root);
                const double tol = std::max(opt.residual_tol, opt.residual_floor_rel * res.scale);
                if (res.value <= tol || cell.diameter() < opt.min_cell_diameter) {
                    emit(n.root, 1, res.value, n.iterations);
                    return;
                }
            }
            if (cell.diameter() < opt.min_cell_diameter) {
                const ComplexPoint best = cell.contains(n.root) ? n.root : winding.first_moment;
                emit(best, 1, residual_at(integrator_, best).value, n.iterations);
                return;
            }
        } else if (cell.diameter() < opt.min_cell_diameter) {
            const ComplexPoint centroid = winding.first_moment / static_cast<double>(winding.count);
            emit(centroid, winding.count, residual_at(integrator_, centroid).value, 0);
            return;
        }
        subdivide(cell, winding.count);
    }

    std::vector<APoint> take() {
        std::sort(points_.begin(), points_.end(), [](const APoint& a, const APoint& b) {
            return std::tie(a.gamma, a.beta) < std::tie(b.gamma, b.beta);
        });
        return std::move(points_);
    }

private:
    void subdivide(const Rectangle& cell, int expected) {
        static constexpr std::array<double, 6> shifts = {0.0, 0.0137, -0.0219, 0.0311, -0.0433, 0.0571};
        for (double shift : shifts) {
            const auto children = split_cell(cell, shift);
            std::array<WindingResult, 4> windings;
            int total = 0;
            bool ok = true;
            for (std::size_t k = 0; k < children.size(); ++k) {
                try {
                    windings[k] = integrator_.rectangle(children[k]);
                    total += windings[k].count;
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::BoundaryTooCloseToZero && e.code() != ErrorCode::NonIntegerWinding) throw;
                    ok = false;
                    break;
                }
            }
            if (!ok || total != expected) continue;
            for (std::size_t k = 0; k < children.size(); ++k) process(children[k], windings[k]);
            return;
        }
        throw Error(ErrorCode::NonIntegerWinding, "sub-cell counts never matched the parent count");
    }

    void emit(ComplexPoint rho, int multiplicity, double residual, int iterations) {
        points_.push_back(APoint{rho.real(), rho.imag(), multiplicity, residual, iterations});
    }

    ContourIntegrator& integrator_;
    std::vector<APoint> points_;
};

} // namespace detail

/// All a-points inside the rectangle (the rectangle possibly grown as in
/// count_apoints), sorted by gamma then beta. Sum of multiplicities equals
/// the winding count of the rectangle.
inline std::vector<APoint> locate_apoints(ContourIntegrator& integrator, const Rectangle& rect,
                                          WindingResult* total = nullptr) {
    const WindingResult top = count_apoints(integrator, rect);
    if (total != nullptr) *total = top;
    Rectangle region = rect.grown(top.growth);
    if (region.t_min <= 0.0) region.t_min = rect.t_min;
    detail::CellLocator locator(integrator);
    locator.process(region, top);
    return locator.take();
}

inline std::vector<APoint> locate_apoints(const SymZeta& z, const TargetValue& a, const Rectangle& rect,
                                          const LocatorOptions& options = {}) {
    ContourIntegrator integrator(z, a, options);
    return locate_apoints(integrator, rect);
}

/// Winding number of Z - a around |s + 2n/A| = eps.
inline WindingResult verify_cluster(const SymZeta& z, const TargetValue& a, int n, double eps,
                                    const LocatorOptions& options = {}) {
    require(n >= 1, ErrorCode::InvalidArgument, "cluster index must be positive");
    const double spacing = 2.0 / z.weights().total();
    require(eps > 0.0 && eps <= 0.4 * spacing, ErrorCode::InvalidArgument, "cluster radius must be in (0, 0.8/A]");
    ContourIntegrator integrator(z, a, options);
    return integrator.circle({-static_cast<double>(n) * spacing, 0.0}, eps);
}

struct ClusterScan {
    std::vector<int> n_values;
    std::vector<int> counts;          // at radius eps
    std::vector<int> counts_halved;   // at radius eps / 2
    /// First n from which every scanned disk holds exactly one a-point at
    /// both radii; nullopt if the last disk already fails.
    std::optional<int> stable_from;
};

inline ClusterScan scan_clusters(const SymZeta& z, const TargetValue& a, int n_lo, int n_hi, double eps,
                                 const LocatorOptions& options = {}) {
    require(n_lo >= 1 && n_lo <= n_hi, ErrorCode::InvalidArgument, "invalid cluster range");
    ClusterScan out;
    for (int n = n_lo; n <= n_hi; ++n) {
        out.n_values.push_back(n);
        auto count_or_fail = [&](double radius) {
            try {
                return verify_cluster(z, a, n, radius, options).count;
            } catch (const Error& e) {
                if (e.code() != ErrorCode::BoundaryTooCloseToZero && e.code() != ErrorCode::NonIntegerWinding) throw;
                return -1;
            }
        };
        out.counts.push_back(count_or_fail(eps));
        out.counts_halved.push_back(count_or_fail(eps / 2));
    }
    for (std::size_t i = out.n_values.size(); i-- > 0;) {
        if (out.counts[i] != 1 || out.counts_halved[i] != 1) break;
        out.stable_from = out.n_values[i];
    }
    return out;
}

struct FreeRegionResult {
    double c1_hat = 0.0;
    Rectangle certified;
    WindingResult certificate;
};

/// Finds the smallest sigma on a 0.25 grid (scanning down from sigma = 64)
/// such that the sufficient condition |G - 1| < 1/2 (a = 0) or |Z| < |a|/2
/// (a != 0) holds at every sample to its right, then certifies
/// [c1_hat, c1_hat + 20] x [t_lo, t_hi] empty by a direct contour count.
inline FreeRegionResult scan_free_right(const SymZeta& z, const TargetValue& a, double t_lo, double t_hi,
                                        const LocatorOptions& options = {}) {
    require(t_lo > 0.0 && t_lo < t_hi, ErrorCode::InvalidArgument, "t range needs 0 < t_lo < t_hi");
    constexpr double sigma_top = 64.0;
    constexpr double sigma_floor = -10.0;
    constexpr double sigma_step = 0.25;
    constexpr double t_step = 0.5;

    auto holds = [&](ComplexPoint s) {
        try {
            if (a.is_zero()) return std::abs(eval_G(z, a, s) - 1.0) < 0.5;
            return std::abs(eval_sym(z, s)) < std::abs(a.a) / 2.0;
        } catch (const Error&) {
            return false;
        }
    };

    double c1 = sigma_top;
    for (double sigma = sigma_top; sigma >= sigma_floor; sigma -= sigma_step) {
        bool ok = true;
        for (double t = t_lo;; t += t_step) {
            const double tt = std::min(t, t_hi);
            if (!holds({sigma, tt})) {
                ok = false;
                break;
            }
            if (tt >= t_hi) break;
        }
        if (!ok) break;
        c1 = sigma;
    }

    FreeRegionResult out;
    out.c1_hat = c1;
    out.certified = {c1, c1 + 20.0, t_lo, t_hi};
    out.certificate = count_apoints(z, a, out.certified, options);
    return out;
}

/// Contour count over [-y1, -y2] x [t_lo, t_hi].
inline WindingResult scan_strip_free(const SymZeta& z, const TargetValue& a, double y1, double y2, double t_lo,
                                     double t_hi, const LocatorOptions& options = {}) {
    require(y1 > y2 && y2 > 0.0, ErrorCode::InvalidArgument, "strip needs y1 > y2 > 0");
    return count_apoints(z, a, {-y1, -y2, t_lo, t_hi}, options);
}

struct StripThreshold {
    double c3_hat = 0.0;          // largest gamma of a located a-point, or t_lo
    std::vector<APoint> points;
};

/// Locates every a-point in [-y1, -y2] x [t_lo, t_hi]; the empirical
/// threshold is the height of the highest one.
inline StripThreshold strip_threshold(const SymZeta& z, const TargetValue& a, double y1, double y2, double t_lo,
                                      double t_hi, const LocatorOptions& options = {}) {
    require(y1 > y2 && y2 > 0.0, ErrorCode::InvalidArgument, "strip needs y1 > y2 > 0");
    StripThreshold out;
    out.points = locate_apoints(z, a, {-y1, -y2, t_lo, t_hi}, options);
    out.c3_hat = t_lo;
    for (const auto& p : out.points) out.c3_hat = std::max(out.c3_hat, p.gamma);
    return out;
}

} // namespace symzeta
