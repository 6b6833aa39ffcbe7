#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "robin/arith.hpp"
#include "robin/enclosure.hpp"
#include "robin/verify.hpp"

namespace robin {

// A colossally abundant exponent pattern: the n maximizing sigma(n)/n^(1+eps)
// among integers >= 2. Exponents are kept in compressed form because along a
// long generation run almost every prime carries exponent exactly 1:
// every prime <= max_prime has exponent >= 1, and high_exponents lists the
// finitely many primes whose exponent is >= 2.
struct CAExponentVector {
    mpq_class epsilon;  // a rational for which this vector is the maximizer
    std::vector<std::pair<uint64_t, unsigned>> high_exponents;  // ascending p, a_p >= 2
    uint64_t max_prime = 0;  // 0 encodes n = 2^0 = 1 is impossible here; smallest case is n = 2
    Enc log_n;               // sum of a_p log p
    Enc log_sigma_ratio;     // log(sigma(n)/n)
    std::optional<mpz_class> n;  // materialized when log_n is small
    bool tie = false;  // epsilon could not be separated from a critical value
    // the step that created this record in a sequence run (multiplying prime
    // and its new exponent); p = 0 for vectors built directly from epsilon
    uint64_t delta_p = 0;
    unsigned delta_exp = 0;

    unsigned exponent_of(uint64_t p) const;  // p must be prime
    // explicit (p, a_p) list with a_p >= 1, ascending
    std::vector<std::pair<uint64_t, unsigned>> exponents(const PrimeTable& table) const;
};

constexpr double kCAMaxLogN = 1e6;
constexpr double kCAMaterializeLogN = 64.0;

// Exponent vector for a fixed rational epsilon > 0 over primes <= prime_limit.
// Comparisons are exact integer arithmetic; a tie (epsilon exactly critical)
// is flagged on the result, though it is provably impossible for rational
// epsilon. When no prime power is worth taking, the maximizer among integers
// >= 2 is n = 2 and that vector is returned.
CAExponentVector ca_exponents(const mpq_class& epsilon, uint64_t prime_limit);

// All colossally abundant numbers with log n <= max_log_n in strictly
// increasing order, generated by walking critical epsilon values downward.
std::vector<CAExponentVector> ca_sequence(double max_log_n);

// sigma(n)/n < e^gamma log log n checked in log space:
// log_sigma_ratio vs gamma + log(log(log_n)). n with log_n <= 1 (i.e. n = 2)
// is INAPPLICABLE. The margin on the verdict is the log-space difference.
Verdict robin_check_ca(const CAExponentVector& v);

struct DeductionRecord {
    Enc log_n1, log_n2;
    std::optional<mpz_class> n1, n2;
    std::string statement;
};

// For two consecutive records that both satisfy the inequality, emits the
// certified statement that it holds for every integer in [n1, n2]; throws
// std::invalid_argument when an endpoint is not HOLDS or the pair is not
// increasing.
DeductionRecord robin_interval_deduction(const CAExponentVector& v1, const CAExponentVector& v2);

// Chains deductions over every consecutive pair whose endpoints both hold.
std::vector<DeductionRecord> deduction_chain(const std::vector<CAExponentVector>& seq);

}  // namespace robin
