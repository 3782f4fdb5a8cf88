#pragma once

// The symmetric sum of Euler-Zagier multiple zeta values along the diagonal,
//
//   Z(s) = sum over permutations tau of zeta(a_tau(1) s, ..., a_tau(r) s),
//
// evaluated through its partition expansion, together with its derivative,
// the normalized function G whose zeros are the a-points, the truncated
// multi-sum used as an independent oracle, and the two asymptotic models.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

#include "symzeta/core.hpp"
#include "symzeta/partitions.hpp"
#include "symzeta/special_functions.hpp"

namespace symzeta {

/// Compensated (Kahan) accumulator for complex sums with alternating signs.
class KahanSum {
public:
    void add(ComplexPoint x) noexcept {
        const ComplexPoint y = x - compensation_;
        const ComplexPoint t = sum_ + y;
        compensation_ = (t - sum_) - y;
        sum_ = t;
    }
    ComplexPoint value() const noexcept { return sum_; }

private:
    ComplexPoint sum_{0.0, 0.0};
    ComplexPoint compensation_{0.0, 0.0};
};

/// Target of the a-point equation Z(s) = a. The a = 0 case is selected by
/// exact equality of both components.
struct TargetValue {
    ComplexPoint a{0.0, 0.0};

    bool is_zero() const noexcept { return a.real() == 0.0 && a.imag() == 0.0; }
};

struct SymEval {
    ComplexPoint value;
    ComplexPoint deriv;
    /// Sum of |coeff| prod |zeta(c_k s)| over the terms: the size of the
    /// numbers that cancel to give the value (|value| on the direct-sum path).
    double scale = 0.0;
};

/// G(s), its logarithmic derivative, and the underlying Z, Z'.
struct GEval {
    ComplexPoint g;
    ComplexPoint log_deriv;
    ComplexPoint value;
    ComplexPoint deriv;
    double scale = 0.0;
};

class SymZeta {
public:
    explicit SymZeta(Weights weights, EvalPrecision prec = {})
        : weights_(std::move(weights)), expansion_(hoffman_expand(weights_)), prec_(prec) {
        prec_.validate();
        for (const auto& term : expansion_) {
            std::vector<std::size_t> idx;
            for (double c : term.block_sums) idx.push_back(index_of(c));
            factor_index_.push_back(std::move(idx));
            coefficient_sum_ += term.coefficient;
            abs_coefficient_sum_ += std::abs(static_cast<double>(term.coefficient));
        }
    }

    const Weights& weights() const noexcept { return weights_; }
    const std::vector<HoffmanTerm>& expansion() const noexcept { return expansion_; }
    const EvalPrecision& precision() const noexcept { return prec_; }
    /// Distinct block sums c; Z has its real poles at s = 1/c.
    const std::vector<double>& block_sums() const noexcept { return distinct_; }

    /// Z(s) and Z'(s).
    ///
    /// Normally one zeta evaluation per distinct block sum, each term taken as
    /// coeff * (prod (1 + eta_k) - 1) with eta_k = zeta(c_k s) - 1. For r >= 3
    /// the leading B M^s still comes out of cancellation between terms of size
    /// about 1, so far to the right the truncated multi-sum is used instead.
    SymEval evaluate(ComplexPoint s) const {
        require_finite(s, "s");
        check_poles(s);
        if (use_direct_sum(s.real())) {
            if (auto direct = direct_sum(s)) return *direct;
        }
        return expand(s);
    }

    /// True when the expansion would lose more than about three digits to
    /// cancellation and the multi-sum converges quickly.
    bool use_direct_sum(double sigma) const {
        if (sigma * weights_.smallest() < 2.0) return false;
        const double leading = static_cast<double>(weights_.b_constant()) * std::exp(sigma * weights_.log_m());
        return leading < 1e-3 * abs_coefficient_sum_;
    }

private:
    SymEval expand(ComplexPoint s) const {
        std::vector<ZetaEval> factors;
        factors.reserve(distinct_.size());
        for (double c : distinct_) factors.push_back(zeta_full(c * s, prec_));

        KahanSum value;
        KahanSum deriv;
        double scale = 0.0;
        for (std::size_t t = 0; t < expansion_.size(); ++t) {
            const auto& idx = factor_index_[t];
            const double coeff = static_cast<double>(expansion_[t].coefficient);
            ComplexPoint excess{0.0, 0.0};
            double magnitude = std::abs(coeff);
            for (std::size_t k : idx) {
                const ComplexPoint eta = factors[k].value_minus_one;
                excess = excess + eta + excess * eta;
                magnitude *= std::abs(factors[k].value);
            }
            value.add(coeff * excess);
            scale += magnitude;
            for (std::size_t k = 0; k < idx.size(); ++k) {
                ComplexPoint product = distinct_[idx[k]] * factors[idx[k]].deriv;
                for (std::size_t j = 0; j < idx.size(); ++j) {
                    if (j != k) product *= factors[idx[j]].value;
                }
                deriv.add(coeff * product);
            }
        }
        value.add(static_cast<double>(coefficient_sum_));
        return {value.value(), deriv.value(), scale};
    }

    // Sum over injective maps phi of prod_i phi(i)^(-a_i s), built index by
    // index with a subset recursion; each permutation of equal weights counts
    // separately, as in the symmetric sum. Nothing if the tail bound needs
    // more than max_direct_terms indices.
    std::optional<SymEval> direct_sum(ComplexPoint s) const {
        const auto& a = weights_.values();
        const std::size_t r = a.size();
        const double sigma = s.real();
        const double leading = static_cast<double>(weights_.b_constant()) * std::exp(sigma * weights_.log_m());
        const double want = 1e-15 * leading;

        // Bound on the maps with some index above N, dropping injectivity.
        auto tail_bound = [&](double N) {
            double total = 0.0;
            for (std::size_t i = 0; i < r; ++i) {
                const double x = a[i] * sigma;
                double others = 1.0;
                for (std::size_t k = 0; k < r; ++k) {
                    if (k == i) continue;
                    const double y = a[k] * sigma;
                    others *= 1.0 + std::exp2(-y) + std::exp2(1.0 - y) / (y - 1.0);
                }
                total += std::exp((1.0 - x) * std::log(N)) / (x - 1.0) * others;
            }
            return total;
        };
        std::size_t N = 2 * r;
        while (tail_bound(static_cast<double>(N)) > want) {
            if (N >= max_direct_terms) return std::nullopt;
            N *= 2;
        }

        const std::size_t full = (std::size_t{1} << r) - 1;
        std::vector<ComplexPoint> f(full + 1, ComplexPoint{0.0, 0.0});
        std::vector<ComplexPoint> df(full + 1, ComplexPoint{0.0, 0.0});
        f[0] = 1.0;
        std::vector<ComplexPoint> p(r);
        std::vector<ComplexPoint> dp(r);
        for (std::size_t n = 1; n <= N; ++n) {
            const double ln = std::log(static_cast<double>(n));
            for (std::size_t i = 0; i < r; ++i) {
                p[i] = std::exp(-a[i] * ln * s);
                dp[i] = -a[i] * ln * p[i];
            }
            for (std::size_t mask = full; mask-- > 0;) {
                if (f[mask] == 0.0 && df[mask] == 0.0) continue;
                for (std::size_t i = 0; i < r; ++i) {
                    const std::size_t bit = std::size_t{1} << i;
                    if (mask & bit) continue;
                    f[mask | bit] += f[mask] * p[i];
                    df[mask | bit] += df[mask] * p[i] + f[mask] * dp[i];
                }
            }
        }
        return SymEval{f[full], df[full], std::abs(f[full])};
    }

public:
    GEval evaluate_g(const TargetValue& target, ComplexPoint s) const {
        const SymEval z = evaluate(s);
        GEval out;
        out.value = z.value;
        out.deriv = z.deriv;
        out.scale = z.scale;
        if (target.is_zero()) {
            const ComplexPoint scale = static_cast<double>(weights_.b_constant()) * std::exp(s * weights_.log_m());
            out.g = z.value / scale;
            out.log_deriv = z.deriv / z.value - weights_.log_m();
        } else {
            out.g = (z.value - target.a) / (-target.a);
            out.log_deriv = z.deriv / (z.value - target.a);
        }
        return out;
    }

    void check_poles(ComplexPoint s) const {
        for (double c : distinct_) {
            if (std::abs(c * s - 1.0) < 1e-10) {
                throw Error(ErrorCode::NearPole, "s is within 1e-10 of the pole 1/c = " + std::to_string(1.0 / c),
                            1.0 / c);
            }
        }
    }

    static constexpr std::size_t max_direct_terms = 1 << 14;

    std::size_t index_of(double c) {
        for (std::size_t i = 0; i < distinct_.size(); ++i) {
            if (Weights::same_weight(distinct_[i], c)) return i;
        }
        distinct_.push_back(c);
        return distinct_.size() - 1;
    }

    Weights weights_;
    std::vector<HoffmanTerm> expansion_;
    EvalPrecision prec_;
    std::vector<double> distinct_;
    std::vector<std::vector<std::size_t>> factor_index_;
    std::int64_t coefficient_sum_ = 0;
    double abs_coefficient_sum_ = 0.0;
};

inline ComplexPoint eval_sym(const SymZeta& z, ComplexPoint s) { return z.evaluate(s).value; }

inline ComplexPoint eval_sym_deriv(const SymZeta& z, ComplexPoint s) { return z.evaluate(s).deriv; }

/// G(s) = Z(s) / (B M^s) for a = 0 and (Z(s) - a) / (-a) otherwise.
inline ComplexPoint eval_G(const SymZeta& z, const TargetValue& a, ComplexPoint s) {
    return z.evaluate_g(a, s).g;
}

/// G'(s)/G(s); raises AtAPoint when |G(s)| < 1e-12.
inline ComplexPoint eval_logderiv_G(const SymZeta& z, const TargetValue& a, ComplexPoint s) {
    const GEval e = z.evaluate_g(a, s);
    if (std::abs(e.g) < 1e-12) throw Error(ErrorCode::AtAPoint, "G(s) vanishes to 1e-12 at s");
    return e.log_deriv;
}

struct OracleResult {
    ComplexPoint value;
    /// Extrapolated size of the omitted tail n_r > cutoff, summed over
    /// orderings and doubled. An estimate, not a rigorous bound.
    double truncation_estimate = 0.0;
};

/// True when Re((a_tau(l) + ... + a_tau(r)) s) > r - l + 1 for every ordering
/// tau and every l, i.e. the multi-sum converges absolutely.
inline bool in_convergence_region(const Weights& w, ComplexPoint s) {
    const double sigma = s.real();
    double tail = 0.0;
    const std::size_t r = w.rank();
    // The binding ordering puts the m smallest weights last.
    for (std::size_t m = 1; m <= r; ++m) {
        tail += w[r - m];
        if (!(tail * sigma > static_cast<double>(m))) return false;
    }
    return true;
}

/// Direct truncated sum over 1 <= n_1 < ... < n_r <= cutoff for all r!
/// orderings. Each ordering is a prefix-sum recursion in O(r * cutoff).
inline OracleResult multisum_oracle(const Weights& w, ComplexPoint s, int cutoff) {
    require_finite(s, "s");
    require(cutoff >= 4, ErrorCode::InvalidArgument, "cutoff must be at least 4");
    require(w.rank() <= 7, ErrorCode::RankTooLarge, "the multi-sum oracle supports r <= 7");
    if (!in_convergence_region(w, s)) {
        throw Error(ErrorCode::OutsideConvergenceRegion, "s lies outside the absolute convergence region");
    }
    const std::size_t r = w.rank();
    const auto n_max = static_cast<std::size_t>(cutoff);

    // n^{-a_j s} and n^{-a_j sigma} for each weight.
    std::vector<std::vector<ComplexPoint>> powers(r, std::vector<ComplexPoint>(n_max + 1));
    std::vector<std::vector<double>> magnitudes(r, std::vector<double>(n_max + 1));
    for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t n = 1; n <= n_max; ++n) {
            const double ln = std::log(static_cast<double>(n));
            powers[j][n] = std::exp(-w[j] * s * ln);
            magnitudes[j][n] = std::exp(-w[j] * s.real() * ln);
        }
    }

    std::vector<std::size_t> order(r);
    std::iota(order.begin(), order.end(), 0);
    KahanSum total;
    double tail_estimate = 0.0;
    std::vector<ComplexPoint> cumulative(n_max + 1);
    std::vector<ComplexPoint> next(n_max + 1);
    std::vector<double> abs_cumulative(n_max + 1);
    std::vector<double> abs_next(n_max + 1);
    std::vector<double> abs_last(n_max + 1);
    do {
        // cumulative[n] = sum over chains n_1 < ... < n_j <= n of the first j factors.
        std::fill(cumulative.begin(), cumulative.end(), ComplexPoint{1.0, 0.0});
        std::fill(abs_cumulative.begin(), abs_cumulative.end(), 1.0);
        for (std::size_t level = 0; level < r; ++level) {
            const std::size_t j = order[level];
            next[0] = 0.0;
            abs_next[0] = 0.0;
            for (std::size_t n = 1; n <= n_max; ++n) {
                const ComplexPoint below = (level == 0) ? ComplexPoint{1.0, 0.0} : cumulative[n - 1];
                const double abs_below = (level == 0) ? 1.0 : abs_cumulative[n - 1];
                const double abs_term = magnitudes[j][n] * abs_below;
                next[n] = next[n - 1] + powers[j][n] * below;
                abs_next[n] = abs_next[n - 1] + abs_term;
                if (level + 1 == r) abs_last[n] = abs_term;
            }
            std::swap(cumulative, next);
            std::swap(abs_cumulative, abs_next);
        }
        total.add(cumulative[n_max]);

        const double f_end = abs_last[n_max];
        const double f_mid = abs_last[n_max / 2];
        double estimate = std::numeric_limits<double>::infinity();
        if (f_end > 0.0 && f_mid > f_end) {
            const double decay = std::log2(f_mid / f_end) / std::log2(static_cast<double>(n_max) / (n_max / 2));
            if (decay > 1.0) estimate = 2.0 * f_end * static_cast<double>(n_max) / (decay - 1.0);
        } else if (f_end == 0.0) {
            estimate = 0.0;
        }
        tail_estimate += estimate;
    } while (std::next_permutation(order.begin(), order.end()));

    return {total.value(), tail_estimate};
}

/// Right half-plane model B M^s, valid for a_r sigma > 2.
inline ComplexPoint asymptotic_right(const SymZeta& z, ComplexPoint s) {
    require_finite(s, "s");
    const Weights& w = z.weights();
    if (!(w.smallest() * s.real() > 2.0)) {
        throw Error(ErrorCode::OutsideRegime, "the right half-plane model needs a_r * sigma > 2");
    }
    return static_cast<double>(w.b_constant()) * std::exp(s * w.log_m());
}

/// Left-strip model prod_j zeta(a_j s), for sigma < 0 and t >= 10.
inline ComplexPoint asymptotic_left_strip(const SymZeta& z, ComplexPoint s) {
    require_finite(s, "s");
    if (!(s.real() < 0.0 && s.imag() >= 10.0)) {
        throw Error(ErrorCode::OutsideRegime, "the left-strip model needs sigma < 0 and t >= 10");
    }
    ComplexPoint product{1.0, 0.0};
    for (double a : z.weights().values()) product *= zeta(a * s, z.precision());
    return product;
}

} // namespace symzeta
