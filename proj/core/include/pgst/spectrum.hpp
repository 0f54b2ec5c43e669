#pragma once

#include <vector>

namespace pgst {

// The adjacency eigenvalue at r = 0, i.e. 2*cos(0). Not part of the spectrum
// of any finite path; used as the inhomogeneous term in rational-independence
// arguments.
inline constexpr double kThetaZero = 2.0;

/// Closed-form eigensystem of the n-site path graph, unit couplings.
///
/// Eigenvalues theta_r = 2 cos(pi r/(n+1)) for r = 1..n, strictly decreasing.
/// Eigenvector amplitudes phi_r(u) = sqrt(2/(n+1)) sin(pi r u/(n+1)).
/// All indices on the public surface are 1-based.
class PathSpectrum {
public:
    explicit PathSpectrum(int n);

    int size() const { return n_; }

    // theta_r, r in 1..n
    double eigenvalue(int r) const;

    // phi_r(u), the u-th component of the r-th unit eigenvector
    double amplitude(int r, int u) const;

    // (E_r)_{1,1} = phi_r(1)^2, the convex weights of the endpoint
    // transfer amplitude
    double endpoint_weight(int r) const;

    const std::vector<double>& eigenvalues() const { return theta_; }
    const std::vector<double>& endpoint_weights() const { return weight_; }

private:
    int n_;
    std::vector<double> theta_;
    std::vector<double> weight_;
};

/// theta_r = 2 cos(pi r/(n+1)). Throws std::domain_error unless 2 <= n and
/// 1 <= r <= n.
double path_eigenvalue(int n, int r);

/// Entry (E_r)_{u,v} = phi_r(u) phi_r(v) of the r-th spectral idempotent.
double idempotent_entry(int n, int r, int u, int v);

/// All endpoint weights a_r = (E_r)_{1,1}, r = 1..n. They sum to 1.
std::vector<double> endpoint_weights(int n);

}  // namespace pgst
