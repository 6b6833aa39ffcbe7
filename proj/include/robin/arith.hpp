#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "robin/enclosure.hpp"

namespace robin {

struct PrimeTable {
    uint64_t limit = 0;
    std::vector<uint64_t> primes;
};

// segmented sieve of Eratosthenes; limit up to 2^33 supported
PrimeTable sieve_primes(uint64_t limit);

struct FactorEntry {
    uint64_t p;
    unsigned e;
};

struct Factorization {
    uint64_t n = 1;
    std::vector<FactorEntry> factors;  // strictly increasing primes, e >= 1
};

// deterministic Miller-Rabin, valid for all n < 2^64
bool is_prime_u64(uint64_t n);

// trial division + deterministic primality + Pollard-Brent rho
Factorization factorize(uint64_t n);

mpz_class sigma(const Factorization& f);
mpz_class phi(const Factorization& f);
// exact rational Psi_t(n); non-integral whenever some exponent < t-1
mpq_class psi_t(const Factorization& f, unsigned t);
// Psi_t(n)/n = prod over p | n of (1 + 1/p + ... + 1/p^(t-1))
mpq_class psi_over_n(const Factorization& f, unsigned t);
unsigned nu(uint64_t n, uint64_t p);
bool is_t_free(const Factorization& f, unsigned t);
// (n/phi(n)) * prod (1 - q^-(1+e)); equals sigma(n)/n identically
mpq_class sigma_over_n_totient_form(const Factorization& f);

// divisor sums for n in [lo, hi); independent of internal segmentation
std::vector<uint64_t> sigma_range(uint64_t lo, uint64_t hi);

// low-level segment fill used by sigma_range and the range scanner:
// out[i] = sigma(L + i) for i in [0, R - L)
void sigma_fill_segment(uint64_t L, uint64_t R, std::vector<uint64_t>& out);

constexpr uint64_t kSigmaRangeMaxSpan = uint64_t(1) << 24;
constexpr uint64_t kSigmaRangeMaxHi = uint64_t(1) << 61;  // sigma must fit in 64 bits
constexpr uint64_t kSieveMaxLimit = uint64_t(1) << 33;

}  // namespace robin
