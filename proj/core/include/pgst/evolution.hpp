#pragma once

#include <complex>
#include <vector>

#include "pgst/spectrum.hpp"

namespace pgst {

// Beyond this time the double-word phase reduction no longer guarantees
// absolute phase error below 1e-9; callers should treat results as degraded.
inline constexpr double kPhaseAccurateTimeLimit = 1e9;

inline bool phase_accuracy_degraded(double t) { return t > kPhaseAccurateTimeLimit; }

/// theta*t reduced modulo 2*pi into [0, 2*pi), accumulated in double-word
/// arithmetic. Absolute error stays below 1e-9 for t <= 1e9.
double phase_reduced(double theta, double t);

/// Transfer amplitude <v|U(t)|u> = sum_r (E_r)_{u,v} e^{i theta_r t},
/// evolution by e^{+iHt}.
std::complex<double> amplitude(const PathSpectrum& spec, int u, int v, double t);

/// End-to-end fidelity |<n|U(t)|1>| = |sum_r (-1)^{r-1} a_r e^{i theta_r t}|.
/// O(n) per sample via the precomputed endpoint weights.
double fidelity(const PathSpectrum& spec, double t);

/// Dense complex matrix in row-major order, used only by the exponential
/// oracle below.
struct ComplexMatrix {
    int n = 0;
    std::vector<std::complex<double>> data;

    std::complex<double>& at(int i, int j) { return data[static_cast<size_t>(i) * n + j]; }
    const std::complex<double>& at(int i, int j) const {
        return data[static_cast<size_t>(i) * n + j];
    }
};

/// exp(i*A*t) for the n-path adjacency matrix A, by Taylor series with
/// scaling and squaring. Deliberately independent of PathSpectrum; this is
/// the cross-validation oracle for the spectral amplitude formula.
/// Supports n <= 64 only (throws std::length_error above).
ComplexMatrix oracle_exponential(int n, double t);

}  // namespace pgst
