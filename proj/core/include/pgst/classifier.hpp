#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace pgst {

enum class PgstForm {
    PrimeMinusOne,       // n = p - 1, p prime
    TwoPrimeMinusOne,    // n = 2p - 1, p prime
    PowerOfTwoMinusOne,  // n = 2^m - 1
};

std::string to_string(PgstForm form);

// Certificate that no PGST occurs: n + 1 = m * p with p an odd prime, m >= 3.
struct NoPgstWitness {
    std::uint64_t m = 0;
    std::uint64_t p = 0;
};

struct Classification {
    std::uint64_t n = 0;
    bool pgst = false;
    // Set when pgst. form_param is p for the prime forms and the exponent m
    // for PowerOfTwoMinusOne. Display priority when forms overlap:
    // PrimeMinusOne > TwoPrimeMinusOne > PowerOfTwoMinusOne.
    std::optional<PgstForm> form;
    std::uint64_t form_param = 0;
    // Set when !pgst; witness with the smallest odd prime p.
    std::optional<NoPgstWitness> witness;
    // Algebraic degree of 2*cos(pi/(n+1)), i.e. phi(2n+2)/2. The index-two
    // field argument behind the formula needs n >= 3; at n = 2 the value is
    // computed anyway and flagged here.
    std::uint64_t theta_degree = 0;
    bool theta_degree_flagged = false;
};

/// Deterministic Miller primality test, valid over all of uint64.
bool is_prime(std::uint64_t k);

/// Euler totient by trial-division factorization.
std::uint64_t euler_phi(std::uint64_t k);

/// phi(2n+2)/2.
std::uint64_t theta_degree(std::uint64_t n);

/// Decide PGST on the n-path from n alone. Throws std::domain_error for n < 2.
Classification classify(std::uint64_t n);

}  // namespace pgst
