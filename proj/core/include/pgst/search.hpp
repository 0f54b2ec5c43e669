#pragma once

#include <complex>
#include <vector>

#include "pgst/spectrum.hpp"

namespace pgst {

// Target phase pattern (-1)^{r-1} gamma for the first floor(n/2) eigenvalues.
// gamma is pinned by n mod 4 for odd n; both +-i are candidates for even n.
struct PhaseTarget {
    int n = 0;
    int m = 0;  // floor(n/2), number of independent phase conditions
    std::complex<double> gamma;
    double delta = 0;           // 0, 1/2, 1/4, 3/4 for gamma = 1, -1, i, -i
    std::vector<double> alpha;  // alpha_r = 1/2 for even r, else 0

    // arg((-1)^{r-1} gamma) in [0, 2*pi), r in 1..m
    double target_phase(int r) const;
};

/// One target for odd n, the two sign candidates for even n.
std::vector<PhaseTarget> phase_targets(int n);

/// max over r = 1..m of the circular distance between theta_r * t and the
/// target phase, in radians within [0, pi].
double phase_residual(const PathSpectrum& spec, const PhaseTarget& target, double t);

struct SearchResult {
    double t_star = 0;
    double fidelity_at_t = 0;
    double epsilon = 0;
    double phase_residual = 0;  // best over targets at t_star
    bool converged = false;
    double scan_ceiling = 0;  // largest fidelity seen anywhere in the scan
};

/// Grid step fine enough that no fidelity peak narrower than the fastest
/// beat is skipped: 2*pi / (20 * theta_1 * m).
double default_grid_step(const PathSpectrum& spec);

/// Earliest t <= t_max with fidelity > 1 - epsilon: dense grid scan, then
/// bisection on fidelity - (1 - epsilon) over the bracketing step, to 1e-9
/// in t. Non-convergence is reported, not thrown.
SearchResult earliest_time(const PathSpectrum& spec, double epsilon, double t_max,
                           double grid_step);

struct PeakEstimate {
    double t_best = 0;
    double f_best = 0;
};

/// Grid scan plus golden-section refinement around every local peak.
/// Deterministic for fixed inputs.
PeakEstimate max_fidelity_estimate(const PathSpectrum& spec, double t_max,
                                   double grid_step);

struct Figure1Row {
    int n = 0;
    double t_star = 0;
    double log_t_star = 0;
    bool converged = false;
};

/// Earliest-crossing table for n = 2..7 at the given tolerance, t_max
/// doubling until convergence.
std::vector<Figure1Row> figure1_table(double epsilon = 0.01);

}  // namespace pgst
