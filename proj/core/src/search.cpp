#include "pgst/search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pgst/evolution.hpp"

namespace pgst {
namespace {

constexpr double kTwoPi = 6.283185307179586476925287;

double circular_distance(double phase, double target) {
    double d = std::fmod(std::abs(phase - target), kTwoPi);
    return std::min(d, kTwoPi - d);
}

}  // namespace

double PhaseTarget::target_phase(int r) const {
    if (r < 1 || r > m) throw std::domain_error("phase index out of range");
    std::complex<double> w = gamma;
    if (r % 2 == 0) w = -w;  // (-1)^{r-1}
    double phi = std::arg(w);
    if (phi < 0) phi += kTwoPi;
    return phi;
}

std::vector<PhaseTarget> phase_targets(int n) {
    if (n < 2) throw std::domain_error("need n >= 2");
    const int m = n / 2;
    std::vector<double> alpha(m);
    for (int r = 1; r <= m; ++r) alpha[r - 1] = (r % 2 == 0) ? 0.5 : 0.0;

    auto make = [&](std::complex<double> gamma, double delta) {
        PhaseTarget t;
        t.n = n;
        t.m = m;
        t.gamma = gamma;
        t.delta = delta;
        t.alpha = alpha;
        return t;
    };

    if (n % 2 == 1) {
        if (n % 4 == 1) return {make({1.0, 0.0}, 0.0)};
        return {make({-1.0, 0.0}, 0.5)};
    }
    return {make({0.0, 1.0}, 0.25), make({0.0, -1.0}, 0.75)};
}

double phase_residual(const PathSpectrum& spec, const PhaseTarget& target, double t) {
    double worst = 0.0;
    for (int r = 1; r <= target.m; ++r) {
        const double phase = phase_reduced(spec.eigenvalue(r), t);
        worst = std::max(worst, circular_distance(phase, target.target_phase(r)));
    }
    return worst;
}

double default_grid_step(const PathSpectrum& spec) {
    const int m = spec.size() / 2;
    return kTwoPi / (20.0 * spec.eigenvalue(1) * std::max(m, 1));
}

namespace {

double best_phase_residual(const PathSpectrum& spec, double t) {
    double best = M_PI;
    for (const auto& target : phase_targets(spec.size()))
        best = std::min(best, phase_residual(spec, target, t));
    return best;
}

void check_grid(double t_max, double grid_step) {
    if (!(t_max > 0.0)) throw std::domain_error("t_max must be positive");
    if (!(grid_step > 0.0)) throw std::domain_error("grid_step must be positive");
}

// Golden-section maximization of fidelity on [lo, hi].
double refine_peak(const PathSpectrum& spec, double lo, double hi) {
    constexpr double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = fidelity(spec, c);
    double fd = fidelity(spec, d);
    while (b - a > 1e-10) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = fidelity(spec, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = fidelity(spec, d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

SearchResult earliest_time(const PathSpectrum& spec, double epsilon, double t_max,
                           double grid_step) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::domain_error("epsilon must lie in (0, 1)");
    check_grid(t_max, grid_step);

    SearchResult res;
    res.epsilon = epsilon;
    const double threshold = 1.0 - epsilon;

    double prev_t = 0.0;
    double prev_f = fidelity(spec, 0.0);
    res.scan_ceiling = prev_f;
    const long long steps = static_cast<long long>(std::ceil(t_max / grid_step));
    for (long long i = 1; i <= steps; ++i) {
        const double t = std::min(i * grid_step, t_max);
        const double f = fidelity(spec, t);
        res.scan_ceiling = std::max(res.scan_ceiling, f);
        if (f > threshold && prev_f <= threshold) {
            // Earliest crossing is inside (prev_t, t]; bisect the sign change.
            double lo = prev_t, hi = t;
            while (hi - lo > 1e-9) {
                const double mid = 0.5 * (lo + hi);
                (fidelity(spec, mid) > threshold ? hi : lo) = mid;
            }
            res.t_star = hi;
            res.fidelity_at_t = fidelity(spec, hi);
            res.scan_ceiling = std::max(res.scan_ceiling, res.fidelity_at_t);
            res.phase_residual = best_phase_residual(spec, hi);
            res.converged = true;
            return res;
        }
        prev_t = t;
        prev_f = f;
    }
    res.phase_residual = M_PI;
    return res;
}

PeakEstimate max_fidelity_estimate(const PathSpectrum& spec, double t_max,
                                   double grid_step) {
    check_grid(t_max, grid_step);

    struct Peak {
        double t;
        double f;
    };
    std::vector<Peak> peaks;
    double best_grid = 0.0;

    double f0 = fidelity(spec, 0.0);
    double f1 = fidelity(spec, grid_step);
    const long long steps = static_cast<long long>(std::ceil(t_max / grid_step));
    for (long long i = 2; i <= steps; ++i) {
        const double t = std::min(i * grid_step, t_max);
        const double f2 = fidelity(spec, t);
        if (f1 >= f0 && f1 >= f2) {
            peaks.push_back({t - grid_step, f1});
            best_grid = std::max(best_grid, f1);
        }
        f0 = f1;
        f1 = f2;
    }
    if (peaks.empty()) peaks.push_back({t_max, f1});

    PeakEstimate best{0.0, fidelity(spec, 0.0)};
    for (const auto& peak : peaks) {
        if (peak.f < best_grid - 0.01) continue;
        const double lo = std::max(0.0, peak.t - grid_step);
        const double hi = std::min(t_max, peak.t + grid_step);
        const double t_ref = refine_peak(spec, lo, hi);
        const double f_ref = fidelity(spec, t_ref);
        if (f_ref > best.f_best) best = {t_ref, f_ref};
    }
    return best;
}

std::vector<Figure1Row> figure1_table(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::domain_error("epsilon must lie in (0, 1)");
    std::vector<Figure1Row> rows;
    for (int n = 2; n <= 7; ++n) {
        PathSpectrum spec(n);
        const double step = default_grid_step(spec);
        Figure1Row row;
        row.n = n;
        for (double t_max = 64.0; t_max <= 1e7; t_max *= 2.0) {
            const SearchResult res = earliest_time(spec, epsilon, t_max, step);
            if (res.converged) {
                row.t_star = res.t_star;
                row.log_t_star = std::log(res.t_star);
                row.converged = true;
                break;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace pgst
