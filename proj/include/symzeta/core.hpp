#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace symzeta {

/// A point s = sigma + i t of the complex plane.
using ComplexPoint = std::complex<double>;

enum class ErrorCode {
    InvalidArgument,
    PoleAtOne,
    PrecisionUnreachable,
    PoleAtNonpositiveInteger,
    NumericOverflow,
    RankTooLarge,
    NearPole,
    AtAPoint,
    OutsideConvergenceRegion,
    OutsideRegime,
    BoundaryTooCloseToZero,
    NonIntegerWinding,
    NewtonDiverged,
    MissingPoints,
};

inline const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::PoleAtOne: return "PoleAtOne";
    case ErrorCode::PrecisionUnreachable: return "PrecisionUnreachable";
    case ErrorCode::PoleAtNonpositiveInteger: return "PoleAtNonpositiveInteger";
    case ErrorCode::NumericOverflow: return "NumericOverflow";
    case ErrorCode::RankTooLarge: return "RankTooLarge";
    case ErrorCode::NearPole: return "NearPole";
    case ErrorCode::AtAPoint: return "AtAPoint";
    case ErrorCode::OutsideConvergenceRegion: return "OutsideConvergenceRegion";
    case ErrorCode::OutsideRegime: return "OutsideRegime";
    case ErrorCode::BoundaryTooCloseToZero: return "BoundaryTooCloseToZero";
    case ErrorCode::NonIntegerWinding: return "NonIntegerWinding";
    case ErrorCode::NewtonDiverged: return "NewtonDiverged";
    case ErrorCode::MissingPoints: return "MissingPoints";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
/// `detail()` holds an optional numeric payload, e.g. the offending pole
/// location 1/c for NearPole.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what, std::optional<double> detail = std::nullopt)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(detail) {}

    ErrorCode code() const noexcept { return code_; }
    std::optional<double> detail() const noexcept { return detail_; }

    /// Input validation failures, as opposed to numerical ones.
    bool is_usage_error() const noexcept {
        return code_ == ErrorCode::InvalidArgument || code_ == ErrorCode::RankTooLarge ||
               code_ == ErrorCode::MissingPoints;
    }

private:
    ErrorCode code_;
    std::optional<double> detail_;
};

inline void require(bool condition, ErrorCode code, const std::string& what) {
    if (!condition) throw Error(code, what);
}

inline bool is_finite(ComplexPoint s) noexcept { return std::isfinite(s.real()) && std::isfinite(s.imag()); }

inline void require_finite(ComplexPoint s, const char* name) {
    require(is_finite(s), ErrorCode::InvalidArgument, std::string(name) + " must be finite");
}

/// Accuracy request for the special-function layer.
struct EvalPrecision {
    double target_abs_err = 1e-13;
    std::int64_t max_terms = 1 << 20;

    void validate() const {
        require(std::isfinite(target_abs_err) && target_abs_err >= 1e-14, ErrorCode::InvalidArgument,
                "target_abs_err must be >= 1e-14");
        require(max_terms >= 16, ErrorCode::InvalidArgument, "max_terms must be >= 16");
    }
};

namespace constants {
inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 6.28318530717958647692;
inline constexpr long double pi_l = 3.141592653589793238462643383279502884L;
inline constexpr long double two_pi_l = 6.283185307179586476925286766559005768L;
inline constexpr long double log_two_pi_l = 1.837877066409345483560659472811235279L;
inline constexpr long double log_pi_l = 1.144729885849400174143427351353058712L;
inline constexpr long double log_two_l = 0.693147180559945309417232121458176568L;
} // namespace constants

} // namespace symzeta
