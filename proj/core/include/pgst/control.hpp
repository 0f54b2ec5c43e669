#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

namespace pgst {

// Exact-integer Krylov matrix [z | Az | ... | A^{n-1}z] for the n-path
// adjacency matrix A and the indicator vector z of a vertex subset.
// Invertibility decides controllability, so the determinant is computed in
// exact arithmetic; floating point never enters.
struct WalkMatrix {
    int n = 0;
    std::vector<int> subset;                      // 1-based vertices, sorted
    std::vector<std::vector<mpz_class>> columns;  // columns[j][i], 0-based
    mpz_class determinant;
};

/// Build the walk matrix; determinant by fraction-free (Bareiss)
/// elimination. Throws std::invalid_argument for an empty or out-of-range
/// subset.
WalkMatrix walk_matrix(int n, const std::vector<int>& subset);

/// det(W_z) != 0.
bool is_controllable(int n, const std::vector<int>& subset);

/// Equal diagonal idempotent entries (E_r)_{u,u} = (E_r)_{v,v} for every r,
/// within 1e-12.
bool cospectral_diagonal(int n, int u, int v);

/// E_r|u> = +-E_r|v> for every r, within 1e-12 per entry. On paths the
/// spectrum is simple, so this coincides with cospectral_diagonal.
bool strongly_cospectral(int n, int u, int v);

/// Exact rational coefficients (ascending degree) of the minimal-degree
/// polynomial f with f(A)|k> = |l>, when |l> lies in the Krylov span of |k>;
/// nullopt otherwise.
std::optional<std::vector<mpq_class>> module_polynomial(int n, int k, int l);

struct TransferImplication {
    int n = 0;
    int k = 0;
    bool central_vertex = false;  // 2k == n + 1; no PGST can occur at k
    // Vertices l with |l> in the A-module of |k>: end-to-end PGST k -> n+1-k
    // carries over to l -> n+1-l for each of these.
    std::vector<int> implied;
    // f(A)|n+1-k> == |n+1-l> checked exactly for every implied l.
    bool flip_commutation_verified = false;
};

/// Which internal transfers are implied by PGST at vertex k, via the
/// polynomial map through the Krylov space of |k>.
TransferImplication internal_transfer_implication(int n, int k);

}  // namespace pgst
