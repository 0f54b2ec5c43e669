#include "pgst/relations.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "pgst/classifier.hpp"
#include "pgst/spectrum.hpp"

namespace pgst {

double cosine_identity_residual(int p) {
    if (p < 3 || p % 2 == 0)
        throw std::domain_error("cosine identity needs an odd integer >= 3");
    double sum = 1.0;
    double sign = -1.0;
    for (int r = 1; r <= (p - 1) / 2; ++r, sign = -sign)
        sum += 2.0 * sign * std::cos(M_PI * r / p);
    return std::abs(sum);
}

double eigen_relation_residual(int n, int m, int p, int x) {
    if (x != 1 && x != 2) throw std::invalid_argument("x must be 1 or 2");
    if (m < 3 || p < 3 || p % 2 == 0 ||
        static_cast<long long>(n) + 1 != static_cast<long long>(m) * p)
        throw std::invalid_argument("need n + 1 = m * p with p odd, m >= 3");
    PathSpectrum spec(n);
    double sum = spec.eigenvalue(x);
    double sign = -1.0;
    for (int r = 1; r <= (p - 1) / 2; ++r, sign = -sign) {
        const int hi = m * r + x;
        const int lo = m * r - x;
        if (lo < 1 || hi > n)
            throw std::invalid_argument("eigenvalue index " + std::to_string(hi) +
                                        " escapes 1.." + std::to_string(n));
        sum += sign * (spec.eigenvalue(hi) + spec.eigenvalue(lo));
    }
    return std::abs(sum);
}

DependenceWitness dependence_witness(std::uint64_t n) {
    const Classification c = classify(n);
    if (c.pgst)
        throw std::invalid_argument("P_" + std::to_string(n) +
                                    " has PGST; no dependence witness exists");
    const int m = static_cast<int>(c.witness->m);
    const int p = static_cast<int>(c.witness->p);

    DependenceWitness w;
    w.n = n;
    w.m = static_cast<std::uint64_t>(m);
    w.p = static_cast<std::uint64_t>(p);

    // (x=1 relation) - (x=2 relation)
    std::map<int, long long> coeff;
    coeff[1] += 1;
    coeff[2] -= 1;
    long long sign = -1;
    for (int r = 1; r <= (p - 1) / 2; ++r, sign = -sign) {
        coeff[m * r + 1] += sign;
        coeff[m * r - 1] += sign;
        coeff[m * r + 2] -= sign;
        coeff[m * r - 2] -= sign;
    }
    for (auto it = coeff.begin(); it != coeff.end();)
        it = (it->second == 0) ? coeff.erase(it) : std::next(it);
    if (coeff.empty()) throw std::logic_error("dependence witness cancelled to zero");

    PathSpectrum spec(static_cast<int>(n));
    double sum = 0.0;
    for (const auto& [r, cr] : coeff) sum += static_cast<double>(cr) * spec.eigenvalue(r);
    w.coefficients = std::move(coeff);
    w.residual = std::abs(sum);
    return w;
}

BoundReport bound_report(int n) {
    const int k = (n - 2) / 3;
    if (n < 8 || 3 * k + 2 != n || k % 2 != 0)
        throw std::domain_error("bound report needs n = 3k + 2 with k even, k >= 2");

    PathSpectrum spec(n);
    BoundReport rep;
    rep.n = n;
    rep.k = k;
    rep.a1 = spec.endpoint_weight(1);
    rep.ak = spec.endpoint_weight(k);
    rep.ak2 = spec.endpoint_weight(k + 2);
    rep.an = spec.endpoint_weight(n);
    rep.identity_residual =
        std::abs(spec.eigenvalue(1) - spec.eigenvalue(k) - spec.eigenvalue(k + 2));

    const double s3 = std::sqrt(3.0);
    rep.deficiencies = {
        (rep.a1 + (2.0 - s3) * (rep.ak + rep.ak2)) / 2.0,  // both cosines <= -s3/2
        (2.0 - s3) * rep.ak / 2.0,                         // cos(theta_{k+2} t) >= s3/2
        (2.0 - s3) * rep.ak2 / 2.0,                        // cos(theta_k t) >= s3/2
    };
    rep.claimed_ceiling = 1.0 - *std::min_element(rep.deficiencies.begin(),
                                                  rep.deficiencies.end());

    rep.case_a_bound = 3.0 * rep.a1 / 2.0 + (rep.ak + rep.ak2) * s3 / 2.0;
    rep.case_b_bound_raw = 2.0 * rep.a1 + s3 * rep.ak / 2.0 + rep.ak2 + rep.a1;
    rep.case_b_bound_simplified =
        2.0 * rep.a1 + rep.ak + rep.ak2 - (2.0 - s3) * rep.ak / 2.0;
    rep.case_c_bound = 2.0 * rep.a1 + rep.ak + rep.ak2 - (2.0 - s3) * rep.ak2 / 2.0;
    return rep;
}

namespace {

struct HalfSum {
    double value;
    int vector_id;
};

// All coefficient vectors over `count` indices with entries in
// [-max_coeff, max_coeff], as (sum, odometer id) pairs.
std::vector<HalfSum> enumerate_half(const std::vector<double>& thetas, int begin,
                                    int count, int max_coeff) {
    const int radix = 2 * max_coeff + 1;
    long long total = 1;
    for (int i = 0; i < count; ++i) total *= radix;
    std::vector<HalfSum> out;
    out.reserve(static_cast<size_t>(total));
    for (long long id = 0; id < total; ++id) {
        long long v = id;
        double sum = 0.0;
        for (int i = 0; i < count; ++i) {
            const int c = static_cast<int>(v % radix) - max_coeff;
            v /= radix;
            sum += c * thetas[begin + i];
        }
        out.push_back({sum, static_cast<int>(id)});
    }
    return out;
}

void decode(long long id, int count, int max_coeff, std::vector<int>& coeffs, int begin) {
    const int radix = 2 * max_coeff + 1;
    for (int i = 0; i < count; ++i) {
        coeffs[begin + i] = static_cast<int>(id % radix) - max_coeff;
        id /= radix;
    }
}

}  // namespace

bool has_small_rational_relation(int n, int max_coeff, double screen_tol,
                                 double confirm_tol) {
    if (n < 2) throw std::domain_error("need n >= 2");
    const int m = n / 2;  // positive eigenvalues only

    std::vector<double> thetas(m);
    std::vector<long double> thetas_ld(m);
    const long double pi_ld = std::acos(-1.0L);
    for (int r = 1; r <= m; ++r) {
        thetas[r - 1] = path_eigenvalue(n, r);
        thetas_ld[r - 1] = 2.0L * std::cos(pi_ld * r / (n + 1));
    }

    // Meet in the middle: left half enumerated, right half sorted and probed
    // within the screening window.
    const int left_count = m / 2;
    const int right_count = m - left_count;
    auto left = enumerate_half(thetas, 0, left_count, max_coeff);
    auto right = enumerate_half(thetas, left_count, right_count, max_coeff);
    std::sort(right.begin(), right.end(),
              [](const HalfSum& a, const HalfSum& b) { return a.value < b.value; });

    std::vector<int> coeffs(m);
    for (const auto& l : left) {
        const double want = -l.value;
        auto it = std::lower_bound(right.begin(), right.end(), want - screen_tol,
                                   [](const HalfSum& h, double v) { return h.value < v; });
        for (; it != right.end() && it->value <= want + screen_tol; ++it) {
            decode(l.vector_id, left_count, max_coeff, coeffs, 0);
            decode(it->vector_id, right_count, max_coeff, coeffs, left_count);
            if (std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; }))
                continue;
            // Screening hit; only a residual at rounding level counts as a
            // relation. Diophantine near-misses sit many orders higher.
            long double refined = 0.0L;
            for (int i = 0; i < m; ++i) refined += coeffs[i] * thetas_ld[i];
            if (std::abs(static_cast<double>(refined)) < confirm_tol) return true;
        }
    }
    return false;
}

}  // namespace pgst
