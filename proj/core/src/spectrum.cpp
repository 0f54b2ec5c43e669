#include "pgst/spectrum.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pgst {
namespace {

void check_n(int n) {
    if (n < 2) throw std::domain_error("path size must be >= 2, got " + std::to_string(n));
}

void check_index(int n, int r, const char* what) {
    if (r < 1 || r > n)
        throw std::domain_error(std::string(what) + " index " + std::to_string(r) +
                                " out of range 1.." + std::to_string(n));
}

// sin(pi * k/q) with the integer argument reduced exactly first, so mirror
// identities like sin(pi (q - k)/q) = sin(pi k/q) hold to the last ulp.
double sin_pi_ratio(long long k, long long q) {
    k %= 2 * q;
    if (k < 0) k += 2 * q;
    double sign = 1.0;
    if (k >= q) {  // sin(pi + x) = -sin(x)
        k -= q;
        sign = -1.0;
    }
    if (2 * k > q) k = q - k;  // reflect into [0, q/2]
    return sign * std::sin(M_PI * static_cast<double>(k) / static_cast<double>(q));
}

}  // namespace

double path_eigenvalue(int n, int r) {
    check_n(n);
    check_index(n, r, "eigenvalue");
    return 2.0 * std::cos(M_PI * r / (n + 1.0));
}

double idempotent_entry(int n, int r, int u, int v) {
    check_n(n);
    check_index(n, r, "eigenvalue");
    check_index(n, u, "vertex");
    check_index(n, v, "vertex");
    const long long q = n + 1;
    const double norm = 2.0 / q;
    return norm * sin_pi_ratio(static_cast<long long>(r) * u, q) *
           sin_pi_ratio(static_cast<long long>(r) * v, q);
}

std::vector<double> endpoint_weights(int n) {
    check_n(n);
    std::vector<double> a(n);
    const long long q = n + 1;
    for (int r = 1; r <= n; ++r) {
        const double s = sin_pi_ratio(r, q);
        a[r - 1] = 2.0 / q * s * s;
    }
    return a;
}

PathSpectrum::PathSpectrum(int n) : n_(n) {
    check_n(n);
    theta_.resize(n);
    for (int r = 1; r <= n; ++r) theta_[r - 1] = path_eigenvalue(n, r);
    weight_ = pgst::endpoint_weights(n);
}

double PathSpectrum::eigenvalue(int r) const {
    check_index(n_, r, "eigenvalue");
    return theta_[r - 1];
}

double PathSpectrum::amplitude(int r, int u) const {
    check_index(n_, r, "eigenvalue");
    check_index(n_, u, "vertex");
    const long long q = n_ + 1;
    return std::sqrt(2.0 / q) * sin_pi_ratio(static_cast<long long>(r) * u, q);
}

double PathSpectrum::endpoint_weight(int r) const {
    check_index(n_, r, "eigenvalue");
    return weight_[r - 1];
}

}  // namespace pgst
