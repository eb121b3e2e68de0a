#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <string_view>

namespace matfun {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Scaling-robust complex division (Smith's algorithm). Projector products and
// confluent divided differences amplify rounding, so the naive |b|^2 formula
// is not good enough at extreme magnitudes.
inline Complex cdiv(Complex a, Complex b) {
    const double ar = a.real(), ai = a.imag();
    const double br = b.real(), bi = b.imag();
    if (std::abs(br) >= std::abs(bi)) {
        const double r = bi / br;
        const double d = br + bi * r;
        return {(ar + ai * r) / d, (ai - ar * r) / d};
    }
    const double r = br / bi;
    const double d = br * r + bi;
    return {(ar * r + ai) / d, (ai * r - ar) / d};
}

// Shortest decimal that round-trips to the same double.
std::string format_double(double value);

// Complex literals for text interfaces: "5", "-0.04", "2i", "1+2i", "1-2i".
// A bare "i" (optionally signed) reads as a unit imaginary part.
std::string format_complex(Complex z);
Complex parse_complex(std::string_view text);  // throws std::invalid_argument

}  // namespace matfun
