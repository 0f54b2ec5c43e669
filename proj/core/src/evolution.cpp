#include "pgst/evolution.hpp"

#include <cmath>
#include <stdexcept>

namespace pgst {
namespace {

// 2*pi split into a double-double pair.
constexpr double kTwoPiHi = 6.283185307179586232;
constexpr double kTwoPiLo = 2.4492935982947064e-16;

}  // namespace

double phase_reduced(double theta, double t) {
    // theta*t held as an exact double-double product
    const double p_hi = theta * t;
    const double p_lo = std::fma(theta, t, -p_hi);
    const double k = std::floor(p_hi / kTwoPiHi);
    // p - k*2pi, the hi product cancelled with a single rounding via fma
    double r = std::fma(-k, kTwoPiHi, p_hi);
    r += p_lo - k * kTwoPiLo;
    while (r < 0.0) r += kTwoPiHi;
    while (r >= kTwoPiHi) r -= kTwoPiHi;
    return r;
}

std::complex<double> amplitude(const PathSpectrum& spec, int u, int v, double t) {
    const int n = spec.size();
    std::complex<double> acc{0.0, 0.0};
    for (int r = 1; r <= n; ++r) {
        const double phase = phase_reduced(spec.eigenvalue(r), t);
        const double e = spec.amplitude(r, u) * spec.amplitude(r, v);
        acc += e * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return acc;
}

double fidelity(const PathSpectrum& spec, double t) {
    // |sum_r (-1)^{r-1} a_r e^{i theta_r t}|, only the endpoint weights enter
    const int n = spec.size();
    double re = 0.0, im = 0.0;
    double sign = 1.0;
    for (int r = 1; r <= n; ++r, sign = -sign) {
        const double phase = phase_reduced(spec.eigenvalue(r), t);
        const double a = spec.endpoint_weight(r);
        re += sign * a * std::cos(phase);
        im += sign * a * std::sin(phase);
    }
    return std::hypot(re, im);
}

namespace {

ComplexMatrix identity(int n) {
    ComplexMatrix m;
    m.n = n;
    m.data.assign(static_cast<size_t>(n) * n, {0.0, 0.0});
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int n = a.n;
    ComplexMatrix c;
    c.n = n;
    c.data.assign(static_cast<size_t>(n) * n, {0.0, 0.0});
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const std::complex<double> aik = a.at(i, k);
            if (aik == std::complex<double>{}) continue;
            for (int j = 0; j < n; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

}  // namespace

ComplexMatrix oracle_exponential(int n, double t) {
    if (n < 1 || n > 64)
        throw std::length_error("exponential oracle supports 1 <= n <= 64");

    // B = i*A*t/2^s with ||B||_inf <= 1/2, then Taylor and repeated squaring.
    int s = 0;
    double norm = 2.0 * std::abs(t);
    while (norm > 0.5) {
        norm *= 0.5;
        ++s;
    }
    const std::complex<double> scale{0.0, t / std::ldexp(1.0, s)};

    ComplexMatrix b;
    b.n = n;
    b.data.assign(static_cast<size_t>(n) * n, {0.0, 0.0});
    for (int i = 0; i + 1 < n; ++i) {
        b.at(i, i + 1) = scale;
        b.at(i + 1, i) = scale;
    }

    ComplexMatrix result = identity(n);
    ComplexMatrix term = identity(n);
    for (int j = 1; j <= 24; ++j) {
        term = multiply(term, b);
        double coeff_norm = 0.0;
        for (size_t idx = 0; idx < term.data.size(); ++idx) {
            term.data[idx] /= static_cast<double>(j);
            coeff_norm = std::max(coeff_norm, std::abs(term.data[idx]));
        }
        for (size_t idx = 0; idx < term.data.size(); ++idx)
            result.data[idx] += term.data[idx];
        if (coeff_norm < 1e-20) break;
    }
    for (int j = 0; j < s; ++j) result = multiply(result, result);
    return result;
}

}  // namespace pgst
