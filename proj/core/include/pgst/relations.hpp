#pragma once

#include <array>
#include <cstdint>
#include <map>

namespace pgst {

// Integer certificate of a rational linear relation among the eigenvalues of
// a path with n + 1 = m * p, p odd prime, m >= 3. Supported on indices
// {1, 2} and {m*r +- 1, m*r +- 2 : 1 <= r <= (p-1)/2}.
struct DependenceWitness {
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::uint64_t p = 0;
    std::map<int, long long> coefficients;  // eigenvalue index -> integer coeff
    double residual = 0.0;                  // |sum_r c_r theta_r|
};

// Explicit fidelity ceiling for n = 3k + 2, k even, from the four-term
// endpoint sum over indices {1, k, k+2, n}. The case bounds are recorded as
// printed, including the raw case-B form that does not match its own
// simplification; nothing is silently corrected.
struct BoundReport {
    int n = 0;
    int k = 0;
    double a1 = 0, ak = 0, ak2 = 0, an = 0;
    double identity_residual = 0;  // |theta_1 - theta_k - theta_{k+2}|
    // Shortfall from the aligned maximum in each case:
    //   [0] both cosines <= -sqrt(3)/2
    //   [1] cos(theta_{k+2} t) >= sqrt(3)/2
    //   [2] cos(theta_k t)     >= sqrt(3)/2
    std::array<double, 3> deficiencies{};
    double claimed_ceiling = 0;  // 1 - min(deficiencies), relative to total weight 1
    // The printed per-case bounds on the four-term real part (weight
    // 2*a1 + ak + ak2), both variants of case B.
    double case_a_bound = 0;
    double case_b_bound_raw = 0;         // 2a1 + sqrt(3) ak/2 + ak2 + a1, as printed
    double case_b_bound_simplified = 0;  // 2a1 + ak + ak2 - (2 - sqrt(3)) ak/2
    double case_c_bound = 0;
};

/// |1 + 2 sum_{r=1}^{(p-1)/2} (-1)^r cos(pi r/p)|; zero for odd p.
/// Throws std::domain_error for even or < 3 input.
double cosine_identity_residual(int p);

/// |theta_x + sum_{r} (-1)^r theta_{mr+x} + sum_{r} (-1)^r theta_{mr-x}|
/// over the spectrum of the n-path, r = 1..(p-1)/2, x in {1, 2}.
/// Throws std::invalid_argument unless n + 1 == m * p and all indices land
/// in 1..n.
double eigen_relation_residual(int n, int m, int p, int x);

/// The x=1 and x=2 relations subtracted, as an explicit integer vector.
/// Throws std::invalid_argument when classify(n) reports PGST.
DependenceWitness dependence_witness(std::uint64_t n);

/// Appendix-style explicit ceiling for n = 3k + 2, k even, k >= 2.
/// Throws std::domain_error for other n.
BoundReport bound_report(int n);

/// Exhaustive small-coefficient search for a rational relation among the
/// positive eigenvalues theta_1..theta_{floor(n/2)}, coefficients in
/// [-max_coeff, max_coeff]. Candidates below screen_tol are re-evaluated in
/// extended precision; a relation is confirmed only if the refined residual
/// is below confirm_tol (a true rational relation sits at rounding level,
/// while Diophantine near-misses stay many orders above). Returns true iff a
/// confirmed nonzero relation exists.
bool has_small_rational_relation(int n, int max_coeff = 3,
                                 double screen_tol = 1e-6,
                                 double confirm_tol = 1e-12);

}  // namespace pgst
