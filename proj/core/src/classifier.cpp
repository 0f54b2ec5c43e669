#include "pgst/classifier.hpp"

#include <stdexcept>

namespace pgst {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
    u64 result = 1;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool strong_probable_prime(u64 k, u64 base) {
    u64 d = k - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u64 x = powmod(base, d, k);
    if (x == 1 || x == k - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, k);
        if (x == k - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(u64 k) {
    if (k < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (k == p) return true;
        if (k % p == 0) return false;
    }
    // Sorenson & Webster's base set is complete below 3.3e24, covering uint64.
    for (u64 base : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL})
        if (!strong_probable_prime(k, base)) return false;
    return true;
}

u64 euler_phi(u64 k) {
    if (k == 0) throw std::domain_error("euler_phi requires k >= 1");
    u64 result = k;
    for (u64 p = 2; p * p <= k; p += (p == 2) ? 1 : 2) {
        if (k % p) continue;
        while (k % p == 0) k /= p;
        result -= result / p;
    }
    if (k > 1) result -= result / k;
    return result;
}

u64 theta_degree(u64 n) { return euler_phi(2 * n + 2) / 2; }

std::string to_string(PgstForm form) {
    switch (form) {
        case PgstForm::PrimeMinusOne: return "prime_minus_one";
        case PgstForm::TwoPrimeMinusOne: return "two_prime_minus_one";
        case PgstForm::PowerOfTwoMinusOne: return "power_of_two_minus_one";
    }
    return "?";
}

Classification classify(u64 n) {
    if (n < 2) throw std::domain_error("classification requires n >= 2");
    Classification c;
    c.n = n;
    c.theta_degree = theta_degree(n);
    c.theta_degree_flagged = (n == 2);

    const u64 q = n + 1;
    if (is_prime(q)) {
        c.pgst = true;
        c.form = PgstForm::PrimeMinusOne;
        c.form_param = q;
        return c;
    }
    if (q % 2 == 0 && is_prime(q / 2)) {
        c.pgst = true;
        c.form = PgstForm::TwoPrimeMinusOne;
        c.form_param = q / 2;
        return c;
    }
    if ((q & (q - 1)) == 0) {
        c.pgst = true;
        c.form = PgstForm::PowerOfTwoMinusOne;
        u64 m = 0;
        for (u64 v = q; v > 1; v >>= 1) ++m;
        c.form_param = m;
        return c;
    }

    // No PGST: the smallest odd prime factor p of q always leaves a cofactor
    // m = q/p >= 3 once the three positive forms are excluded.
    u64 p = 0;
    for (u64 d = 3; d * d <= q; d += 2) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) {
        u64 odd = q;
        while ((odd & 1) == 0) odd >>= 1;
        p = odd;  // prime: q survived trial division up to sqrt(q)
    }
    if (p < 3 || q % p != 0 || q / p < 3)
        throw std::logic_error("witness construction failed; classification exhausted");
    c.witness = NoPgstWitness{q / p, p};
    c.pgst = false;
    return c;
}

}  // namespace pgst
