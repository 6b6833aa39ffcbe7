#pragma once

#include <optional>

#include "robin/arith.hpp"
#include "robin/enclosure.hpp"

namespace robin {

struct PrimorialRecord {
    uint64_t k = 0;
    uint64_t p_k = 0;
    Enc theta_pk;   // log N_k
    Enc mertens;    // prod over p <= p_k of p/(p-1)
    std::optional<mpz_class> N_k;  // materialized only for k <= 10^4
};

// Chebyshev theta(x) = sum of log p over primes p <= x, ascending order
Enc theta(uint64_t x, const PrimeTable& table, mpfr_prec_t prec = kDefaultPrec);

Enc mertens_product(uint64_t x, const PrimeTable& table, mpfr_prec_t prec = kDefaultPrec);

PrimorialRecord primorial(uint64_t k, const PrimeTable& table, mpfr_prec_t prec = kDefaultPrec);

constexpr uint64_t kPrimorialMaterializeMaxK = 10000;

// R_t(N_k) = Psi_t(N_k) / (N_k log log N_k), evaluated in log space
Enc r_t_direct(uint64_t k, unsigned t, const PrimeTable& table, mpfr_prec_t prec = kDefaultPrec);

// same quantity via the zeta-product identity: the infinite prime product
// over p > p_k is bracketed by [finite product up to tail_cutoff, finite
// product * tail_product_upper(t, tail_cutoff)]
Enc r_t_formula(uint64_t k, unsigned t, const PrimeTable& table, uint64_t tail_cutoff,
                mpfr_prec_t prec = kDefaultPrec);

// all n <= limit where Psi_t(n)/n strictly exceeds every earlier value
std::vector<uint64_t> champion_scan(uint64_t limit, unsigned t);

struct MaximalityReport {
    unsigned k = 0;
    unsigned t = 0;
    bool max_at_primorial = false;       // maximum of R_t over [N_k, N_{k+1}) sits at N_k
    uint64_t argmax = 0;
    std::vector<uint64_t> tie_candidates;  // n whose comparison stayed undecided at the cap
};

// exhaustive scan of R_t over [N_k, N_{k+1}), k in 2..6
MaximalityReport primorial_maximality_check(unsigned k, unsigned t);

constexpr uint64_t kChampionScanMaxLimit = 10000000;

}  // namespace robin
