#include "doctest.h"
#include "robin/arith.hpp"

#include <algorithm>
#include <numeric>

using namespace robin;

namespace {

struct Lcg {
    uint64_t s;
    explicit Lcg(uint64_t seed) : s(seed) {}
    uint64_t next() {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return s >> 11;
    }
};

mpz_class recompute_n(const Factorization& f) {
    mpz_class n = 1;
    for (const auto& fe : f.factors) {
        mpz_class pe;
        mpz_ui_pow_ui(pe.get_mpz_t(), fe.p, fe.e);
        n *= pe;
    }
    return n;
}

}  // namespace

TEST_SUITE("arith") {

TEST_CASE("prime sieve counts and contents") {
    PrimeTable t = sieve_primes(1000000);
    CHECK(t.primes.size() == 78498);  // pi(1e6)
    CHECK(t.primes.front() == 2);
    CHECK(t.primes.back() == 999983);
    PrimeTable small = sieve_primes(30);
    CHECK(small.primes == std::vector<uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("deterministic primality on 64-bit inputs") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(3));
    CHECK(!is_prime_u64(1));
    CHECK(!is_prime_u64(0));
    CHECK(is_prime_u64(2305843009213693951ULL));   // 2^61 - 1
    CHECK(is_prime_u64(18446744073709551557ULL));  // largest 64-bit prime
    CHECK(!is_prime_u64(3215031751ULL));           // strong pseudoprime to bases 2,3,5,7
    CHECK(!is_prime_u64(561));                     // Carmichael
    CHECK(!is_prime_u64(1729));
    CHECK(!is_prime_u64(2305843009213693951ULL - 2));
    // agreement with the sieve over a window
    PrimeTable t = sieve_primes(20000);
    std::vector<uint64_t> from_mr;
    for (uint64_t n = 2; n <= 20000; ++n)
        if (is_prime_u64(n)) from_mr.push_back(n);
    CHECK(from_mr == t.primes);
}

TEST_CASE("factorization round trips and yields primes") {
    CHECK(factorize(1).factors.empty());
    Factorization f = factorize(600851475143ULL);
    REQUIRE(f.factors.size() == 4);
    CHECK(f.factors[0].p == 71);
    CHECK(f.factors[1].p == 839);
    CHECK(f.factors[2].p == 1471);
    CHECK(f.factors[3].p == 6857);
    Lcg rng(42);
    for (int i = 0; i < 200; ++i) {
        uint64_t n = rng.next() % 1000000000000ULL + 2;
        Factorization g = factorize(n);
        CHECK(recompute_n(g) == n);
        uint64_t prev = 1;
        for (const auto& fe : g.factors) {
            CHECK(is_prime_u64(fe.p));
            CHECK(fe.p > prev);  // ascending, distinct
            prev = fe.p;
            CHECK(fe.e >= 1);
        }
    }
    // a 64-bit semiprime with large factors
    Factorization big = factorize(2305843009213693951ULL);
    REQUIRE(big.factors.size() == 1);
    CHECK(big.factors[0].e == 1);
}

TEST_CASE("sigma and phi on known values") {
    CHECK(sigma(factorize(1)) == 1);
    CHECK(sigma(factorize(6)) == 12);
    CHECK(sigma(factorize(5040)) == 19344);
    CHECK(sigma(factorize(10080)) == 39312);
    CHECK(phi(factorize(1)) == 1);
    CHECK(phi(factorize(5040)) == 1152);
    CHECK(phi(factorize(997)) == 996);
}

TEST_CASE("sigma and phi are multiplicative") {
    Lcg rng(7);
    int done = 0;
    while (done < 300) {
        uint64_t m = rng.next() % 100000 + 1;
        uint64_t n = rng.next() % 100000 + 1;
        if (std::gcd(m, n) != 1) continue;
        ++done;
        CHECK(sigma(factorize(m * n)) == sigma(factorize(m)) * sigma(factorize(n)));
        CHECK(phi(factorize(m * n)) == phi(factorize(m)) * phi(factorize(n)));
    }
}

TEST_CASE("psi_t specializes to the dedekind psi at t = 2") {
    CHECK(psi_t(factorize(1), 2) == 1);
    CHECK(psi_t(factorize(10), 2) == 18);
    CHECK(psi_t(factorize(12), 2) == 24);
    CHECK(psi_t(factorize(5040), 2) == 13824);
    // general t gives rationals: Psi_3(p) = p + 1 + 1/p
    CHECK(psi_t(factorize(5), 3) == mpq_class(31, 5));
    CHECK(psi_over_n(factorize(6), 2) == mpq_class(2));  // (3/2)(4/3)
    CHECK_THROWS_AS(psi_t(factorize(6), 1), std::invalid_argument);
}

TEST_CASE("psi_t is multiplicative in coprime arguments") {
    Lcg rng(99);
    int done = 0;
    while (done < 100) {
        uint64_t m = rng.next() % 3000 + 1;
        uint64_t n = rng.next() % 3000 + 1;
        if (std::gcd(m, n) != 1) continue;
        ++done;
        for (unsigned t : {2u, 3u, 7u}) {
            CHECK(psi_t(factorize(m * n), t) == psi_t(factorize(m), t) * psi_t(factorize(n), t));
        }
    }
}

TEST_CASE("valuations and t-free predicate") {
    CHECK(nu(48, 2) == 4);
    CHECK(nu(48, 3) == 1);
    CHECK(nu(48, 5) == 0);
    CHECK_THROWS_AS(nu(48, 4), std::invalid_argument);
    CHECK(!is_t_free(factorize(8), 2));   // 2^2 | 8
    CHECK(!is_t_free(factorize(8), 3));   // 2^3 | 8
    CHECK(is_t_free(factorize(8), 4));
    CHECK(is_t_free(factorize(30), 2));   // squarefree
    CHECK(is_t_free(factorize(1), 2));
}

TEST_CASE("sigma bounded by psi_t on t-free integers") {
    for (unsigned t : {2u, 3u, 5u, 7u, 21u}) {
        for (uint64_t n = 1; n <= 20000; ++n) {
            Factorization f = factorize(n);
            if (!is_t_free(f, t)) continue;
            mpq_class s(sigma(f));
            CHECK(cmp(psi_t(f, t), s) >= 0);
        }
    }
}

TEST_CASE("totient form of sigma over n is an exact identity") {
    // sigma(n)/n = (n/phi(n)) * prod over p^e || n of (1 - p^-(1+e))
    for (uint64_t n = 1; n <= 5000; ++n) {
        Factorization f = factorize(n);
        mpq_class lhs(sigma(f), mpz_class(n));
        lhs.canonicalize();
        CHECK(sigma_over_n_totient_form(f) == lhs);
    }
}

TEST_CASE("sigma over n is strictly below n over phi for n >= 2") {
    for (uint64_t n = 2; n <= 5000; ++n) {
        Factorization f = factorize(n);
        mpq_class lhs(sigma(f), mpz_class(n));
        mpq_class rhs(mpz_class(n), phi(f));
        lhs.canonicalize();
        rhs.canonicalize();
        CHECK(cmp(lhs, rhs) < 0);
    }
}

TEST_CASE("segmented sigma sieve agrees with factorization") {
    std::vector<uint64_t> seg;
    sigma_fill_segment(1, 5001, seg);
    for (uint64_t n = 1; n < 5001; ++n) CHECK(mpz_class(seg[n - 1]) == sigma(factorize(n)));
    // a window far from the origin
    sigma_fill_segment(1000000000, 1000000200, seg);
    for (uint64_t n = 1000000000; n < 1000000200; ++n)
        CHECK(mpz_class(seg[n - 1000000000]) == sigma(factorize(n)));
}

TEST_CASE("segment boundaries do not change sieve output") {
    std::vector<uint64_t> whole, first, second;
    sigma_fill_segment(100000, 102000, whole);
    sigma_fill_segment(100000, 101000, first);
    sigma_fill_segment(101000, 102000, second);
    first.insert(first.end(), second.begin(), second.end());
    CHECK(whole == first);
}

TEST_CASE("sigma_range matches the segment sieve and enforces budgets") {
    std::vector<uint64_t> a = sigma_range(500, 1500);
    std::vector<uint64_t> b;
    sigma_fill_segment(500, 1500, b);
    CHECK(a == b);
    CHECK_THROWS_AS(sigma_range(1, (uint64_t{1} << 25) + 2), budget_error);
    CHECK_THROWS_AS(sigma_range(10, 5), std::invalid_argument);
    CHECK_THROWS_AS(sigma_range(kSigmaRangeMaxHi, kSigmaRangeMaxHi + 10), budget_error);
}

}  // TEST_SUITE
