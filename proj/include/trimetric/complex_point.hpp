#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace trimetric {

// Points of the plane are plain complex numbers throughout.
using Complex = std::complex<double>;

inline constexpr double two_pi = 2.0 * std::numbers::pi;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(Complex z, const char* what) {
    if (!is_finite(z))
        throw std::invalid_argument(std::string(what) + ": non-finite value");
}

inline void require_finite(double x, const char* what) {
    if (!std::isfinite(x))
        throw std::invalid_argument(std::string(what) + ": non-finite value");
}

// Folds an angle into [0, 2*pi).
inline double normalize_angle(double t) {
    double r = std::fmod(t, two_pi);
    if (r < 0.0) r += two_pi;
    if (r >= two_pi) r = 0.0;
    return r;
}

inline Complex unit_vector(double angle) {
    return {std::cos(angle), std::sin(angle)};
}

inline double cross(Complex a, Complex b) {
    return a.real() * b.imag() - a.imag() * b.real();
}

inline double dot(Complex a, Complex b) {
    return a.real() * b.real() + a.imag() * b.imag();
}

// Absolute angular difference folded into [0, pi].
inline double angle_difference(double a, double b) {
    return std::fabs(std::remainder(a - b, two_pi));
}

}  // namespace trimetric
