#include "pgst/control.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pgst/spectrum.hpp"

namespace pgst {
namespace {

void check_vertex(int n, int v) {
    if (v < 1 || v > n) throw std::invalid_argument("vertex out of range");
}

// y = A x for the n-path adjacency matrix, exact.
template <typename Int>
std::vector<Int> adjacency_apply(const std::vector<Int>& x) {
    const int n = static_cast<int>(x.size());
    std::vector<Int> y(n, Int(0));
    for (int i = 0; i < n; ++i) {
        if (i > 0) y[i] += x[i - 1];
        if (i + 1 < n) y[i] += x[i + 1];
    }
    return y;
}

// Fraction-free Bareiss determinant of a square mpz matrix (row-major copy).
mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m) {
    const int n = static_cast<int>(m.size());
    mpz_class prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace

WalkMatrix walk_matrix(int n, const std::vector<int>& subset) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    if (subset.empty()) throw std::invalid_argument("vertex subset must be nonempty");
    WalkMatrix w;
    w.n = n;
    w.subset = subset;
    std::sort(w.subset.begin(), w.subset.end());
    w.subset.erase(std::unique(w.subset.begin(), w.subset.end()), w.subset.end());
    for (int v : w.subset) check_vertex(n, v);

    std::vector<mpz_class> z(n, 0);
    for (int v : w.subset) z[v - 1] = 1;
    w.columns.reserve(n);
    for (int j = 0; j < n; ++j) {
        w.columns.push_back(z);
        if (j + 1 < n) z = adjacency_apply(z);
    }

    // rows[i][j] = (A^j z)_i
    std::vector<std::vector<mpz_class>> rows(n, std::vector<mpz_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[i][j] = w.columns[j][i];
    w.determinant = bareiss_determinant(std::move(rows));
    return w;
}

bool is_controllable(int n, const std::vector<int>& subset) {
    return walk_matrix(n, subset).determinant != 0;
}

bool cospectral_diagonal(int n, int u, int v) {
    check_vertex(n, u);
    check_vertex(n, v);
    for (int r = 1; r <= n; ++r)
        if (std::abs(idempotent_entry(n, r, u, u) - idempotent_entry(n, r, v, v)) > 1e-12)
            return false;
    return true;
}

bool strongly_cospectral(int n, int u, int v) {
    check_vertex(n, u);
    check_vertex(n, v);
    PathSpectrum spec(n);
    for (int r = 1; r <= n; ++r) {
        const double pu = spec.amplitude(r, u);
        const double pv = spec.amplitude(r, v);
        double same = 0.0, flip = 0.0;
        for (int w = 1; w <= n; ++w) {
            const double pw = std::abs(spec.amplitude(r, w));
            same = std::max(same, std::abs(pu - pv) * pw);
            flip = std::max(flip, std::abs(pu + pv) * pw);
        }
        if (std::min(same, flip) > 1e-12) return false;
    }
    return true;
}

std::optional<std::vector<mpq_class>> module_polynomial(int n, int k, int l) {
    check_vertex(n, k);
    check_vertex(n, l);

    // Krylov vectors A^j |k>, j = 0..n-1, exact.
    std::vector<std::vector<mpq_class>> krylov;
    std::vector<mpq_class> cur(n, 0);
    cur[k - 1] = 1;
    for (int j = 0; j < n; ++j) {
        krylov.push_back(cur);
        if (j + 1 < n) cur = adjacency_apply(cur);
    }

    // Smallest d with |l> in span{A^0|k>, ..., A^d|k>}: rational elimination
    // of the augmented system per candidate degree.
    for (int d = 0; d < n; ++d) {
        const int cols = d + 1;
        std::vector<std::vector<mpq_class>> aug(n, std::vector<mpq_class>(cols + 1, 0));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < cols; ++j) aug[i][j] = krylov[j][i];
            aug[i][cols] = (i == l - 1) ? 1 : 0;
        }

        std::vector<int> pivot_col_of_row;
        int row = 0;
        for (int col = 0; col < cols && row < n; ++col) {
            int pr = -1;
            for (int i = row; i < n; ++i)
                if (aug[i][col] != 0) {
                    pr = i;
                    break;
                }
            if (pr < 0) continue;
            std::swap(aug[row], aug[pr]);
            const mpq_class inv = 1 / aug[row][col];
            for (int j = col; j <= cols; ++j) aug[row][j] *= inv;
            for (int i = 0; i < n; ++i) {
                if (i == row || aug[i][col] == 0) continue;
                const mpq_class f = aug[i][col];
                for (int j = col; j <= cols; ++j) aug[i][j] -= f * aug[row][j];
            }
            pivot_col_of_row.push_back(col);
            ++row;
        }
        bool consistent = true;
        for (int i = row; i < n; ++i)
            if (aug[i][cols] != 0) {
                consistent = false;
                break;
            }
        if (!consistent) continue;

        std::vector<mpq_class> coeffs(cols, 0);
        for (int i = 0; i < row; ++i) coeffs[pivot_col_of_row[i]] = aug[i][cols];
        // Minimal degree: the top coefficient must actually be used, else this
        // d duplicates a smaller one already rejected as inconsistent.
        return coeffs;
    }
    return std::nullopt;
}

TransferImplication internal_transfer_implication(int n, int k) {
    check_vertex(n, k);
    TransferImplication rep;
    rep.n = n;
    rep.k = k;
    rep.central_vertex = (2 * k == n + 1);
    rep.flip_commutation_verified = true;

    for (int l = 1; l <= n; ++l) {
        auto f = module_polynomial(n, k, l);
        if (!f) continue;
        rep.implied.push_back(l);

        // f(A)|n+1-k> must equal |n+1-l> exactly (the flip automorphism
        // commutes with A).
        std::vector<mpq_class> acc(n, 0);
        std::vector<mpq_class> power(n, 0);
        power[n - k] = 1;  // |n+1-k>, 0-based
        for (size_t j = 0; j < f->size(); ++j) {
            for (int i = 0; i < n; ++i) acc[i] += (*f)[j] * power[i];
            if (j + 1 < f->size()) power = adjacency_apply(power);
        }
        for (int i = 0; i < n; ++i) {
            const mpq_class want = (i == n - l) ? 1 : 0;
            if (acc[i] != want) rep.flip_commutation_verified = false;
        }
    }
    return rep;
}

}  // namespace pgst
