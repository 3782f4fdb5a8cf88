#pragma once

// Riemann zeta, its derivative, log-Gamma, digamma and the functional-equation
// factor chi(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1 - s) on the complex plane.
//
// zeta uses Euler-Maclaurin summation for Re(s) >= 1/2 and the reflection
// zeta(s) = chi(s) zeta(1 - s) otherwise. chi is assembled in log space with
// 80-bit intermediates so that |t| in the hundreds neither overflows nor loses
// the phase of the Gamma factor.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "symzeta/core.hpp"

namespace symzeta {

/// zeta(s), zeta(s) - 1 and zeta'(s) from one pass, plus the truncation bound
/// of the Euler-Maclaurin stage (scaled by |chi| when reflected).
struct ZetaEval {
    ComplexPoint value;
    ComplexPoint value_minus_one;
    ComplexPoint deriv;
    double error_bound = 0.0;
};

namespace detail {

using cld = std::complex<long double>;

// B_2, B_4, ..., B_22
inline constexpr std::array<long double, 11> bernoulli_even = {
    1.0L / 6.0L,          -1.0L / 30.0L,       1.0L / 42.0L,         -1.0L / 30.0L,
    5.0L / 66.0L,         -691.0L / 2730.0L,   7.0L / 6.0L,          -3617.0L / 510.0L,
    43867.0L / 798.0L,    -174611.0L / 330.0L, 854513.0L / 138.0L,
};

/// Number of Bernoulli corrections in Euler-Maclaurin (through B_20).
inline constexpr int em_corrections = 10;

/// B_{2k} / (2k)! for k = 1 .. 11.
inline const std::array<long double, 11>& em_coefficients() {
    static const std::array<long double, 11> table = [] {
        std::array<long double, 11> out{};
        long double fact = 1.0L;
        for (int k = 1; k <= 11; ++k) {
            fact *= static_cast<long double>((2 * k - 1) * (2 * k));
            out[k - 1] = bernoulli_even[k - 1] / fact;
        }
        return out;
    }();
    return table;
}

inline constexpr std::int64_t sieve_limit = 1 << 20;

/// Smallest prime factor for every n < sieve_limit.
inline const std::vector<std::int32_t>& smallest_prime_factor() {
    static const std::vector<std::int32_t> spf = [] {
        std::vector<std::int32_t> table(sieve_limit, 0);
        for (std::int64_t i = 2; i < sieve_limit; ++i) {
            if (table[i] != 0) continue;
            for (std::int64_t j = i; j < sieve_limit; j += i) {
                if (table[j] == 0) table[j] = static_cast<std::int32_t>(i);
            }
        }
        return table;
    }();
    return spf;
}

inline const std::vector<double>& log_table() {
    static const std::vector<double> table = [] {
        std::vector<double> out(sieve_limit, 0.0);
        for (std::int64_t i = 1; i < sieve_limit; ++i) out[i] = std::log(static_cast<double>(i));
        return out;
    }();
    return table;
}

/// n^{-s} with the phase t log n reduced modulo 2 pi in extended precision.
inline ComplexPoint inverse_power(long double log_n, ComplexPoint s) {
    const long double magnitude = std::exp(-static_cast<long double>(s.real()) * log_n);
    const long double phase = std::fmod(static_cast<long double>(s.imag()) * log_n, constants::two_pi_l);
    return {static_cast<double>(magnitude * std::cos(phase)), static_cast<double>(-magnitude * std::sin(phase))};
}

/// Fills out[n] = n^{-s} for 1 <= n < count. Prime powers are computed
/// directly, composites as products over the smallest prime factor.
inline void fill_inverse_powers(ComplexPoint s, std::int64_t count, std::vector<ComplexPoint>& out) {
    out.assign(static_cast<std::size_t>(std::max<std::int64_t>(count, 2)), ComplexPoint{});
    out[1] = 1.0;
    if (count <= sieve_limit) {
        const auto& spf = smallest_prime_factor();
        for (std::int64_t n = 2; n < count; ++n) {
            const std::int32_t p = spf[n];
            if (p == n) {
                out[n] = inverse_power(std::log(static_cast<long double>(n)), s);
            } else {
                out[n] = out[p] * out[n / p];
            }
        }
    } else {
        for (std::int64_t n = 2; n < count; ++n) out[n] = inverse_power(std::log(static_cast<long double>(n)), s);
    }
}

struct EulerMaclaurin {
    ComplexPoint sum_minus_one; // zeta(s) - 1
    ComplexPoint deriv;
    double bound = 0.0;
};

/// Euler-Maclaurin with N - 1 leading terms and corrections through B_20.
/// Valid for Re(s) > -21, s != 1.
inline EulerMaclaurin euler_maclaurin(ComplexPoint s, std::int64_t n_terms) {
    thread_local std::vector<ComplexPoint> powers;
    fill_inverse_powers(s, n_terms, powers);
    const bool use_table = n_terms <= sieve_limit;

    ComplexPoint head{0.0, 0.0};
    ComplexPoint dhead{0.0, 0.0};
    // Backward summation adds the small terms first.
    for (std::int64_t n = n_terms - 1; n >= 2; --n) {
        const double ln = use_table ? log_table()[n] : std::log(static_cast<double>(n));
        head += powers[n];
        dhead -= ln * powers[n];
    }

    const cld sl(s.real(), s.imag());
    const long double big_n = static_cast<long double>(n_terms);
    const long double log_n = std::log(big_n);
    const ComplexPoint n_pow_d = inverse_power(log_n, s);
    const cld n_pow(n_pow_d.real(), n_pow_d.imag()); // N^{-s}

    const cld one_minus = sl - 1.0L;
    cld tail = big_n * n_pow / one_minus + n_pow / 2.0L;
    cld dtail = big_n * n_pow * (-log_n / one_minus - 1.0L / (one_minus * one_minus)) - log_n * n_pow / 2.0L;

    const auto& coeff = em_coefficients();
    cld rising = sl;     // s (s+1) ... (s+2k-2)
    cld drising = 1.0L;  // its derivative
    cld n_factor = n_pow / big_n; // N^{-s-2k+1}
    const long double inv_n2 = 1.0L / (big_n * big_n);
    for (int k = 1; k <= em_corrections; ++k) {
        const cld term = coeff[k - 1] * rising * n_factor;
        tail += term;
        dtail += coeff[k - 1] * (drising - rising * log_n) * n_factor;
        const cld a = sl + static_cast<long double>(2 * k - 1);
        const cld b = sl + static_cast<long double>(2 * k);
        drising = drising * a * b + rising * (a + b);
        rising = rising * a * b;
        n_factor *= inv_n2;
    }
    // Remainder bound |(s+2K+1)/(sigma+2K+1)| |T_{K+1}|.
    const long double sigma_shift = static_cast<long double>(s.real()) + 2 * em_corrections + 1;
    const cld next = coeff[em_corrections] * rising * n_factor;
    const long double bound =
        std::abs(next) * std::abs(sl + static_cast<long double>(2 * em_corrections + 1)) / sigma_shift;

    EulerMaclaurin out;
    out.sum_minus_one = head + ComplexPoint(static_cast<double>(tail.real()), static_cast<double>(tail.imag()));
    out.deriv = dhead + ComplexPoint(static_cast<double>(dtail.real()), static_cast<double>(dtail.imag()));
    out.bound = static_cast<double>(bound);
    return out;
}

inline bool is_nonpositive_integer(cld z) {
    if (z.imag() != 0.0L || z.real() > 0.0L) return false;
    return std::abs(z.real() - std::nearbyint(z.real())) <= 1e-12L * std::max(1.0L, std::abs(z.real()));
}

/// Stirling series for log Gamma, valid for large |w| with Re(w) > 0.
inline cld stirling(cld w) {
    cld sum = (w - 0.5L) * std::log(w) - w + 0.5L * constants::log_two_pi_l;
    const cld inv = 1.0L / w;
    const cld inv2 = inv * inv;
    cld p = inv;
    for (int k = 1; k <= 10; ++k) {
        sum += bernoulli_even[k - 1] / static_cast<long double>((2 * k) * (2 * k - 1)) * p;
        p *= inv2;
    }
    return sum;
}

/// Principal branch of log Gamma. Uses the recurrence
/// log Gamma(z) = log Gamma(z + k) - sum log(z + j), which preserves the
/// principal branch, to move into the Stirling region.
inline cld log_gamma_ld(cld z) {
    if (is_nonpositive_integer(z)) {
        throw Error(ErrorCode::PoleAtNonpositiveInteger, "log_gamma pole at a nonpositive integer",
                    static_cast<double>(z.real()));
    }
    constexpr long double stirling_radius = 12.0L;
    cld shift_sum = 0.0L;
    cld w = z;
    if (w.real() < 0.5L) {
        const auto steps = static_cast<std::int64_t>(std::ceil(0.5L - w.real()));
        for (std::int64_t j = 0; j < steps; ++j) {
            shift_sum += std::log(w);
            w += 1.0L;
        }
    }
    while (std::abs(w) < stirling_radius) {
        shift_sum += std::log(w);
        w += 1.0L;
    }
    return stirling(w) - shift_sum;
}

inline cld digamma_ld(cld z) {
    if (is_nonpositive_integer(z)) {
        throw Error(ErrorCode::PoleAtNonpositiveInteger, "digamma pole at a nonpositive integer",
                    static_cast<double>(z.real()));
    }
    cld shift_sum = 0.0L;
    cld w = z;
    while (w.real() < 0.5L || std::abs(w) < 12.0L) {
        shift_sum += 1.0L / w;
        w += 1.0L;
    }
    const cld inv = 1.0L / w;
    const cld inv2 = inv * inv;
    cld sum = std::log(w) - 0.5L * inv;
    cld p = inv2;
    for (int k = 1; k <= 10; ++k) {
        sum -= bernoulli_even[k - 1] / static_cast<long double>(2 * k) * p;
        p *= inv2;
    }
    return sum - shift_sum;
}

/// log sin(z) modulo 2 pi i. For large |Im z| the exponentially dominant
/// half of (e^{iz} - e^{-iz}) / 2i is factored out.
inline cld log_sin(cld z, bool large_imag) {
    using namespace std::complex_literals;
    const cld i(0.0L, 1.0L);
    if (!large_imag) return std::log(std::sin(z));
    if (z.imag() > 0.0L) {
        // sin z = (i/2) e^{-iz} (1 - e^{2iz})
        return -i * z + cld(-constants::log_two_l, constants::pi_l / 2) + std::log(1.0L - std::exp(2.0L * i * z));
    }
    // sin z = (-i/2) e^{iz} (1 - e^{-2iz})
    return i * z + cld(-constants::log_two_l, -constants::pi_l / 2) + std::log(1.0L - std::exp(-2.0L * i * z));
}

inline cld cot_ld(cld z) {
    const cld i(0.0L, 1.0L);
    if (z.imag() > 20.0L) {
        const cld e = std::exp(2.0L * i * z);
        return i * (e + 1.0L) / (e - 1.0L);
    }
    if (z.imag() < -20.0L) {
        const cld e = std::exp(-2.0L * i * z);
        return i * (1.0L + e) / (1.0L - e);
    }
    return std::cos(z) / std::sin(z);
}

/// log chi(s) in extended precision; imaginary part reduced to (-pi, pi].
inline cld log_chi_ld(ComplexPoint s) {
    const cld sl(s.real(), s.imag());
    const bool large_imag = std::abs(s.imag()) > 30.0;
    cld out = sl * constants::log_two_l + (sl - 1.0L) * constants::log_pi_l +
              log_sin(constants::pi_l * sl / 2.0L, large_imag) + log_gamma_ld(1.0L - sl);
    long double phase = std::remainder(out.imag(), constants::two_pi_l);
    return {out.real(), phase};
}

/// chi'(s) / chi(s) = log(2 pi) + (pi/2) cot(pi s / 2) - psi(1 - s).
inline cld log_deriv_chi_ld(ComplexPoint s) {
    const cld sl(s.real(), s.imag());
    return constants::log_two_pi_l + constants::pi_l / 2.0L * cot_ld(constants::pi_l * sl / 2.0L) -
           digamma_ld(1.0L - sl);
}

inline ComplexPoint to_double(cld z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

inline void check_zeta_domain(ComplexPoint s) {
    require_finite(s, "s");
    if (std::abs(s - 1.0) < 1e-12) throw Error(ErrorCode::PoleAtOne, "zeta has a pole at s = 1", 1.0);
    require(std::abs(s.imag()) <= 1e4, ErrorCode::InvalidArgument, "|Im s| must be <= 1e4");
}

inline ComplexPoint exp_checked(cld log_value) {
    if (log_value.real() > 709.0L) throw Error(ErrorCode::NumericOverflow, "chi(s) exceeds the double range");
    return to_double(std::exp(log_value));
}

inline ZetaEval zeta_upper(ComplexPoint s, const EvalPrecision& prec) {
    std::int64_t n_terms = std::max<std::int64_t>(32, static_cast<std::int64_t>(std::ceil(2.0 * std::abs(s.imag()))));
    // Large Re(s) pushes the tail below the target with fewer terms but the
    // minimum stays at 32.
    for (;;) {
        if (n_terms > prec.max_terms) {
            throw Error(ErrorCode::PrecisionUnreachable,
                        "Euler-Maclaurin bound not met within max_terms", static_cast<double>(prec.max_terms));
        }
        const EulerMaclaurin em = euler_maclaurin(s, n_terms);
        const ComplexPoint value = em.sum_minus_one + 1.0;
        if (em.bound <= prec.target_abs_err * std::max(1.0, std::abs(value))) {
            return ZetaEval{value, em.sum_minus_one, em.deriv, em.bound};
        }
        n_terms *= 2;
    }
}

inline ZetaEval zeta_eval_upper_half(ComplexPoint s, const EvalPrecision& prec) {
    // Euler-Maclaurin near s = 0 as well, where zeta(1 - s) would sit on its pole.
    if (s.real() >= 0.5 || std::abs(s) < 0.5) return zeta_upper(s, prec);
    const ComplexPoint reflected = 1.0 - s;
    // conj symmetry: evaluate the reflected point in the upper half plane.
    ZetaEval mirror = zeta_upper(std::conj(reflected), prec);
    const ComplexPoint zeta_r = std::conj(mirror.value);
    const ComplexPoint dzeta_r = std::conj(mirror.deriv);
    const cld log_chi = log_chi_ld(s);
    const ComplexPoint chi_value = exp_checked(log_chi);
    const ComplexPoint chi_logderiv = to_double(log_deriv_chi_ld(s));
    ZetaEval out;
    out.value = chi_value * zeta_r;
    out.value_minus_one = out.value - 1.0;
    out.deriv = chi_value * (chi_logderiv * zeta_r - dzeta_r);
    out.error_bound = std::abs(chi_value) * mirror.error_bound;
    return out;
}

} // namespace detail

/// zeta(s), zeta(s) - 1 and zeta'(s). Exactly conjugate-symmetric: the
/// lower half plane is evaluated as the mirror image of the upper one.
inline ZetaEval zeta_full(ComplexPoint s, const EvalPrecision& prec = {}) {
    prec.validate();
    detail::check_zeta_domain(s);
    if (s.imag() < 0.0) {
        ZetaEval up = detail::zeta_eval_upper_half(std::conj(s), prec);
        return ZetaEval{std::conj(up.value), std::conj(up.value_minus_one), std::conj(up.deriv), up.error_bound};
    }
    return detail::zeta_eval_upper_half(s, prec);
}

inline ComplexPoint zeta(ComplexPoint s, const EvalPrecision& prec = {}) { return zeta_full(s, prec).value; }

inline ComplexPoint zeta_deriv(ComplexPoint s, const EvalPrecision& prec = {}) { return zeta_full(s, prec).deriv; }

/// Principal branch of log Gamma(s).
inline ComplexPoint log_gamma(ComplexPoint s) {
    require_finite(s, "s");
    return detail::to_double(detail::log_gamma_ld({s.real(), s.imag()}));
}

inline ComplexPoint digamma(ComplexPoint s) {
    require_finite(s, "s");
    return detail::to_double(detail::digamma_ld({s.real(), s.imag()}));
}

/// log chi(s), imaginary part reduced to (-pi, pi].
inline ComplexPoint log_chi(ComplexPoint s) {
    require_finite(s, "s");
    return detail::to_double(detail::log_chi_ld(s));
}

/// chi(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s). Poles at s = 1, 2, 3, ...
/// raise PoleAtNonpositiveInteger (from Gamma(1 - s)).
inline ComplexPoint chi(ComplexPoint s) {
    require_finite(s, "s");
    return detail::exp_checked(detail::log_chi_ld(s));
}

} // namespace symzeta
