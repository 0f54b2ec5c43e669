#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "pgst/spectrum.hpp"

using namespace pgst;

TEST_CASE("eigenvalue closed form") {
    CHECK(path_eigenvalue(2, 1) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(path_eigenvalue(3, 1) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    // high-precision value of 2 cos(pi/9), cross-checked against the
    // characteristic polynomial below
    CHECK(path_eigenvalue(8, 1) == doctest::Approx(1.8793852415718167681).epsilon(1e-14));

    CHECK_THROWS_AS(path_eigenvalue(1, 1), std::domain_error);
    CHECK_THROWS_AS(path_eigenvalue(5, 0), std::domain_error);
    CHECK_THROWS_AS(path_eigenvalue(5, 6), std::domain_error);
}

TEST_CASE("theta_1 of P_8 is a root of the tridiagonal characteristic polynomial") {
    // det(xI - A) via the three-term recurrence p_k = x p_{k-1} - p_{k-2}
    const double x = path_eigenvalue(8, 1);
    double pm1 = 1.0, p0 = x;
    for (int k = 2; k <= 8; ++k) {
        const double p1 = x * p0 - pm1;
        pm1 = p0;
        p0 = p1;
    }
    CHECK(std::abs(p0) < 1e-12);
}

TEST_CASE("eigenvalues strictly decreasing with bipartite symmetry") {
    for (int n : {2, 5, 8, 17, 50}) {
        PathSpectrum spec(n);
        for (int r = 1; r < n; ++r)
            CHECK(spec.eigenvalue(r) > spec.eigenvalue(r + 1));
        for (int r = 1; r <= n; ++r)
            CHECK(spec.eigenvalue(r) == doctest::Approx(-spec.eigenvalue(n + 1 - r)).epsilon(1e-14));
    }
}

TEST_CASE("idempotent entries") {
    // eigenvector (1/sqrt2, 0, -1/sqrt2) of P_3 at theta = 0
    CHECK(idempotent_entry(3, 2, 1, 3) == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(idempotent_entry(2, 1, 1, 1) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK_THROWS_AS(idempotent_entry(3, 1, 0, 2), std::domain_error);

    // mirror antisymmetry (E_r)_{1,n} = (-1)^{r-1} (E_r)_{1,1}
    for (int n = 2; n <= 20; ++n)
        for (int r = 1; r <= n; ++r) {
            const double sign = (r % 2 == 1) ? 1.0 : -1.0;
            CHECK(idempotent_entry(n, r, 1, n) ==
                  doctest::Approx(sign * idempotent_entry(n, r, 1, 1)).epsilon(1e-13));
        }
}

TEST_CASE("endpoint weights") {
    const auto w2 = endpoint_weights(2);
    CHECK(w2[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(w2[1] == doctest::Approx(0.5).epsilon(1e-14));

    const auto w3 = endpoint_weights(3);
    CHECK(w3[0] == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(w3[1] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(w3[2] == doctest::Approx(0.25).epsilon(1e-14));

    for (int n = 2; n <= 200; ++n) {
        double sum = 0.0;
        for (double a : endpoint_weights(n)) sum += a;
        CHECK(std::abs(sum - 1.0) < 1e-12);
    }
}

TEST_CASE("reconstruction of the adjacency matrix") {
    for (int n = 2; n <= 50; ++n) {
        PathSpectrum spec(n);
        for (int u = 1; u <= n; ++u)
            for (int v = u; v <= n; ++v) {
                double sum = 0.0;
                for (int r = 1; r <= n; ++r)
                    sum += spec.eigenvalue(r) * idempotent_entry(n, r, u, v);
                const double want = (v - u == 1) ? 1.0 : 0.0;
                CHECK(std::abs(sum - want) < 1e-10);
            }
    }
}

TEST_CASE("idempotency and orthogonality of the E_r") {
    for (int n = 2; n <= 12; ++n) {
        for (int r = 1; r <= n; ++r)
            for (int s = 1; s <= n; ++s) {
                for (int u = 1; u <= n; ++u)
                    for (int v = 1; v <= n; ++v) {
                        double sum = 0.0;
                        for (int w = 1; w <= n; ++w)
                            sum += idempotent_entry(n, r, u, w) * idempotent_entry(n, s, w, v);
                        const double want = (r == s) ? idempotent_entry(n, r, u, v) : 0.0;
                        CHECK(std::abs(sum - want) < 1e-10);
                    }
            }
    }
}

TEST_CASE("eigen-equation A phi_r = theta_r phi_r") {
    for (int n : {2, 3, 10, 64, 200}) {
        PathSpectrum spec(n);
        for (int r = 1; r <= n; ++r)
            for (int u = 1; u <= n; ++u) {
                double lhs = 0.0;
                if (u > 1) lhs += spec.amplitude(r, u - 1);
                if (u < n) lhs += spec.amplitude(r, u + 1);
                CHECK(std::abs(lhs - spec.eigenvalue(r) * spec.amplitude(r, u)) < 1e-10);
            }
    }
}

TEST_CASE("unit eigenvectors and cospectral endpoints") {
    for (int n = 2; n <= 200; ++n) {
        PathSpectrum spec(n);
        for (int r = 1; r <= n; ++r) {
            CHECK(std::abs(idempotent_entry(n, r, 1, 1) - idempotent_entry(n, r, n, n)) < 1e-14);
        }
    }
    for (int n : {2, 7, 40, 200}) {
        PathSpectrum spec(n);
        for (int r = 1; r <= n; ++r) {
            double norm = 0.0;
            for (int u = 1; u <= n; ++u) {
                const double p = spec.amplitude(r, u);
                norm += p * p;
            }
            CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("theta_0 constant") {
    CHECK(kThetaZero == 2.0);
    // not an eigenvalue of any finite path
    for (int n = 2; n <= 30; ++n)
        for (int r = 1; r <= n; ++r) CHECK(path_eigenvalue(n, r) < 2.0);
}
