#pragma once

// Reference values that do not go through the library's own algorithms:
// direct series with integral tails, Bell numbers by recurrence, closed
// forms built from single zeta values, and values frozen from a 40-digit
// arbitrary-precision computation.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

/// zeta(s) for real s > 1: sum_{n <= N} n^-s + integral tail + midpoint term.
inline double zeta_series(double s, int N = 1000000) {
    long double sum = 0.0L;
    for (int n = N; n >= 1; --n) sum += std::pow(static_cast<long double>(n), -static_cast<long double>(s));
    const long double Nl = N;
    sum += std::pow(Nl, 1.0L - s) / (s - 1.0L) - 0.5L * std::pow(Nl, -static_cast<long double>(s));
    return static_cast<double>(sum);
}

/// zeta'(s) for real s > 1, same construction.
inline double zeta_deriv_series(double s, int N = 1000000) {
    long double sum = 0.0L;
    for (int n = N; n >= 2; --n) {
        const long double ln = std::log(static_cast<long double>(n));
        sum -= ln * std::pow(static_cast<long double>(n), -static_cast<long double>(s));
    }
    const long double Nl = N;
    const long double lN = std::log(Nl);
    const long double sm1 = s - 1.0L;
    sum -= std::pow(Nl, 1.0L - s) * (lN / sm1 + 1.0L / (sm1 * sm1));
    sum += 0.5L * lN * std::pow(Nl, -static_cast<long double>(s));
    return static_cast<double>(sum);
}

/// Bell numbers from B_{n+1} = sum_k C(n, k) B_k.
inline std::vector<std::int64_t> bell_numbers(int n_max) {
    std::vector<std::int64_t> bell{1};
    for (int n = 0; n < n_max; ++n) {
        std::int64_t next = 0;
        std::int64_t binom = 1;
        for (int k = 0; k <= n; ++k) {
            next += binom * bell[static_cast<std::size_t>(k)];
            binom = binom * (n - k) / (k + 1);
        }
        bell.push_back(next);
    }
    return bell;
}

struct ZetaRef {
    cplx s;
    cplx value;
    cplx deriv;
};

inline const std::vector<ZetaRef>& zeta_table() {
    static const std::vector<ZetaRef> t = {
        {{2, 0}, {1.6449340668482264365, 0.0}, {-0.9375482543158437537, 0.0}},
        {{3, 5}, {0.91252658899897131011, 0.050842871074571362072}, {0.049010703918440907823, -0.035306275596881009537}},
        {{-7.3, 33.1}, {95803.995157494523632, -445630.93100103338688}, {-265884.74446058232951, 730715.49530729333274}},
        {{0.2, 250}, {0.014799276497279359819, 2.1062250924446001381}, {2.3303830035352732781, -7.263124624190430525}},
        {{1.3, -0.7}, {1.118378420983479948, 1.1579395615419117277}, {1.2592198900456953388, -1.2412508436362146511}},
        {{-9.5, 2.5}, {-0.16159947910256564383, 0.068823038255585060407}, {0.17109459425094126092, 0.18018944665767720237}},
        {{0.75, 1000}, {0.83371313000315202652, 0.29162342463359248799}, {0.85272433766027550046, -1.5106866686395308428}},
        {{-5, 100}, {4102695.5995188211936, 575090.42866189551873}, {-11291450.12546632257, -1803050.8874339972367}},
        {{-2.5, 10}, {4.263590288889194478, 1.4598166199175628129}, {-1.5671546358558994995, -1.8408904504449586173}},
        {{0.3, 7}, {1.0171314988950936839, 0.43944400689634059683}, {0.026073637222487152634, -0.22581123807870517004}},
        {{6, -40}, {0.98812772456666380133, 0.0079617295447572409859}, {0.007620088016950571431, -0.005429914273063363393}},
        {{-0.7, 0.2}, {-0.13815956629884355403, -0.051412351093481086944}, {-0.24765325154643846107, -0.079681794196308966598}},
        {{0.49, 3000}, {1.5835145451727529306, 3.3135435427378432368}, {0.76259635455867743303, -13.204561444027177669}},
    };
    return t;
}

struct LogGammaRef {
    cplx s;
    cplx value;
};

inline const std::vector<LogGammaRef>& log_gamma_table() {
    static const std::vector<LogGammaRef> t = {
        {{-2.5, 0.1}, {-0.10314924404281920289, -9.314444268359838115}},
        {{0.3, 7}, {-10.465674446702918896, 6.3103096470407681554}},
        {{-10.2, 3.3}, {-23.605267018988957516, -25.741255845336208311}},
        {{50, -200}, {-50.477327126888966184, -931.35351768572047729}},
        {{0.1, 0.1}, {1.8989912736759001615, -0.82746470777307574554}},
        {{-100.5, 1}, {-367.34632910995123882, -312.68571707384437694}},
        {{3, 400}, {-612.42091519215003296, 2000.5051013736776556}},
    };
    return t;
}

/// Symmetric sums for weights (2,1) and (1,1,1), from the closed forms
/// zeta(2s) zeta(s) - zeta(3s) and zeta^3 - 3 zeta(2s) zeta + 2 zeta(3s).
struct SymRef {
    cplx s;
    cplx w21;
    cplx w111;
};

inline const std::vector<SymRef>& sym_table() {
    static const std::vector<SymRef> t = {
        {{2, 0}, {0.76300729648833685479, 0.0}, {1.1445109447325052822, 0.0}},
        {{0.3, 20}, {-1.4097984990266391674, -1.4009415007698196371}, {2.4278612514479097064, 5.9427683428361849039}},
        {{-1.5, 40}, {-2066602.3060422691251, 1638913.1691214843008}, {4060251.5498525466342, -3500107.1816730827026}},
        {{3, -7}, {-0.0017198903089875224684, -0.1001299143257108176}, {0.021075969745602337072, 0.0029165747357653338813}},
    };
    return t;
}

/// Some zeros of zeta(s)^2 - zeta(2s) below t = 40, two of them with sigma > 1.
inline const std::vector<cplx>& sym11_zeros() {
    static const std::vector<cplx> t = {
        {0.2767286021706202662, 8.3975536880037047712},
        {-0.18995147645359286874, 12.30422130587357813},
        {1.1077863115158374087, 23.797086975453772657},
        {-0.83037218410705162892, 35.603804971777962666},
        {1.4854337027515762967, 38.132621193434838782},
    };
    return t;
}

/// Fixed-seed uniform sampler over a rectangle.
class PointSampler {
public:
    explicit PointSampler(std::uint64_t seed) : rng_(seed) {}

    cplx in(double sigma_lo, double sigma_hi, double t_lo, double t_hi) {
        std::uniform_real_distribution<double> x(sigma_lo, sigma_hi);
        std::uniform_real_distribution<double> y(t_lo, t_hi);
        const double re = x(rng_);
        return {re, y(rng_)};
    }
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

private:
    std::mt19937_64 rng_;
};

inline double rel_err(cplx got, cplx want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

} // namespace oracle
