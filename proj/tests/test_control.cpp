#include <algorithm>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "pgst/classifier.hpp"
#include "pgst/control.hpp"

using namespace pgst;

namespace {

// cofactor-expansion determinant, the independent oracle for small n
mpz_class cofactor_det(const std::vector<std::vector<mpz_class>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 1) return m[0][0];
    mpz_class det = 0;
    int sign = 1;
    for (int c = 0; c < n; ++c) {
        std::vector<std::vector<mpz_class>> minor;
        for (int i = 1; i < n; ++i) {
            std::vector<mpz_class> row;
            for (int j = 0; j < n; ++j)
                if (j != c) row.push_back(m[i][j]);
            minor.push_back(std::move(row));
        }
        det += sign * m[0][c] * cofactor_det(minor);
        sign = -sign;
    }
    return det;
}

}  // namespace

TEST_CASE("walk matrix basics") {
    auto w = walk_matrix(2, {1});
    CHECK(w.columns[0] == std::vector<mpz_class>{1, 0});
    CHECK(w.columns[1] == std::vector<mpz_class>{0, 1});
    CHECK(w.determinant == 1);

    auto w3 = walk_matrix(3, {2});
    CHECK(w3.columns[0] == std::vector<mpz_class>{0, 1, 0});
    CHECK(w3.columns[1] == std::vector<mpz_class>{1, 0, 1});
    CHECK(w3.columns[2] == std::vector<mpz_class>{0, 2, 0});
    CHECK(w3.determinant == 0);

    CHECK(walk_matrix(4, {1}).determinant != 0);

    CHECK_THROWS_AS(walk_matrix(4, {}), std::invalid_argument);
    CHECK_THROWS_AS(walk_matrix(4, {5}), std::invalid_argument);
}

TEST_CASE("bareiss agrees with cofactor expansion") {
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; k <= n; ++k) {
            auto w = walk_matrix(n, {k});
            std::vector<std::vector<mpz_class>> rows(n, std::vector<mpz_class>(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) rows[i][j] = w.columns[j][i];
            CHECK(w.determinant == cofactor_det(rows));
        }
}

TEST_CASE("controllability facts") {
    // n + 1 prime: every singleton controllable
    for (int n = 2; n <= 30; ++n) {
        if (!is_prime(n + 1)) continue;
        for (int k = 1; k <= n; ++k) CHECK(is_controllable(n, {k}));
    }

    CHECK(!is_controllable(9, {5}));  // central vertex of n + 1 = 2p
    CHECK(!is_controllable(3, {2}));

    // odd n: the central vertex is never a controllable singleton
    for (int n = 3; n <= 21; n += 2) CHECK(!is_controllable(n, {(n + 1) / 2}));

    // subsets are accepted too
    CHECK(is_controllable(4, {1, 2}) == (walk_matrix(4, {1, 2}).determinant != 0));
}

TEST_CASE("cospectrality") {
    CHECK(cospectral_diagonal(7, 2, 6));
    CHECK(!cospectral_diagonal(7, 2, 3));
    CHECK(cospectral_diagonal(5, 3, 3));

    CHECK(strongly_cospectral(6, 1, 6));
    CHECK(strongly_cospectral(8, 3, 6));
    CHECK(!strongly_cospectral(8, 3, 4));

    // simple spectrum: strongly cospectral <=> cospectral, all pairs
    for (int n = 2; n <= 12; ++n)
        for (int u = 1; u <= n; ++u)
            for (int v = 1; v <= n; ++v)
                CHECK(strongly_cospectral(n, u, v) == cospectral_diagonal(n, u, v));

    CHECK_THROWS_AS(cospectral_diagonal(5, 0, 1), std::invalid_argument);
}

TEST_CASE("cospectral diagonal implies equal closed-walk counts") {
    for (int n = 2; n <= 10; ++n) {
        // exact closed-walk counts (A^j)_{u,u} via integer matrix powers
        std::vector<std::vector<std::vector<mpz_class>>> powers;
        std::vector<std::vector<mpz_class>> id(n, std::vector<mpz_class>(n, 0));
        for (int i = 0; i < n; ++i) id[i][i] = 1;
        powers.push_back(id);
        for (int j = 1; j <= 2 * n; ++j) {
            std::vector<std::vector<mpz_class>> next(n, std::vector<mpz_class>(n, 0));
            const auto& prev = powers.back();
            for (int i = 0; i < n; ++i)
                for (int c = 0; c < n; ++c) {
                    if (c > 0) next[i][c] += prev[i][c - 1];
                    if (c + 1 < n) next[i][c] += prev[i][c + 1];
                }
            powers.push_back(std::move(next));
        }
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) {
                if (!cospectral_diagonal(n, u, v)) continue;
                for (int j = 0; j <= 2 * n; ++j)
                    CHECK(powers[j][u - 1][u - 1] == powers[j][v - 1][v - 1]);
            }
    }
}

TEST_CASE("module polynomial") {
    // constant polynomial 1 for k = l
    for (int n : {3, 6}) {
        auto f = module_polynomial(n, 2, 2);
        REQUIRE(f.has_value());
        CHECK(f->size() == 1);
        CHECK((*f)[0] == 1);
    }

    // controllable pair: the module is everything
    auto f42 = module_polynomial(4, 1, 2);
    CHECK(f42.has_value());

    // center of P_3 spans only mirror-symmetric vectors
    CHECK(!module_polynomial(3, 2, 1).has_value());

    CHECK_THROWS_AS(module_polynomial(3, 0, 1), std::invalid_argument);
}

TEST_CASE("module polynomial evaluates correctly") {
    // f(A)|k> = |l> verified by exact application of the recurrence
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= n; ++l) {
                auto f = module_polynomial(n, k, l);
                if (!f) continue;
                std::vector<mpq_class> acc(n, 0), power(n, 0);
                power[k - 1] = 1;
                for (size_t j = 0; j < f->size(); ++j) {
                    for (int i = 0; i < n; ++i) acc[i] += (*f)[j] * power[i];
                    std::vector<mpq_class> next(n, 0);
                    for (int i = 0; i < n; ++i) {
                        if (i > 0) next[i] += power[i - 1];
                        if (i + 1 < n) next[i] += power[i + 1];
                    }
                    power = std::move(next);
                }
                for (int i = 0; i < n; ++i) CHECK(acc[i] == ((i == l - 1) ? 1 : 0));
            }
}

TEST_CASE("internal transfer implication") {
    auto r41 = internal_transfer_implication(4, 1);
    CHECK(r41.implied == std::vector<int>{1, 2, 3, 4});
    CHECK(r41.flip_commutation_verified);
    CHECK(!r41.central_vertex);

    auto r93 = internal_transfer_implication(9, 3);
    CHECK(!r93.central_vertex);
    CHECK(r93.flip_commutation_verified);
    CHECK(std::find(r93.implied.begin(), r93.implied.end(), 3) != r93.implied.end());

    auto r95 = internal_transfer_implication(9, 5);
    CHECK(r95.central_vertex);
}
