#include "robin/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace robin {

PrimeTable sieve_primes(uint64_t limit) {
    if (limit > kSieveMaxLimit)
        throw budget_error("sieve_primes: limit exceeds configured budget");
    PrimeTable t;
    t.limit = limit;
    if (limit < 2) return t;

    // root primes by simple sieve
    uint64_t root = static_cast<uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
    std::vector<uint8_t> small(root + 1, 1);
    std::vector<uint64_t> base;
    for (uint64_t i = 2; i <= root; ++i) {
        if (!small[i]) continue;
        base.push_back(i);
        for (uint64_t j = i * i; j <= root; j += i) small[j] = 0;
    }

    const uint64_t seg = 1u << 21;
    std::vector<uint8_t> mark(seg);
    for (uint64_t L = 2; L <= limit; L += seg) {
        uint64_t R = std::min(limit + 1, L + seg);
        std::fill(mark.begin(), mark.begin() + (R - L), 1);
        for (uint64_t p : base) {
            if (p * p >= R) break;
            uint64_t start = std::max(p * p, (L + p - 1) / p * p);
            for (uint64_t m = start; m < R; m += p) mark[m - L] = 0;
        }
        for (uint64_t i = L; i < R; ++i)
            if (mark[i - L]) t.primes.push_back(i);
    }
    return t;
}

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // witness set covering all n < 2^64 (Sinclair)
    for (uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        uint64_t x = powmod(a % n, d, n);
        if (x <= 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

uint64_t pollard_brent(uint64_t n) {
    if ((n & 1) == 0) return 2;
    uint64_t x0 = 2, c = 1;
    for (;;) {
        uint64_t x = x0, y = x0, d = 1;
        uint64_t power = 1, ys = y, q = 1;
        const uint64_t m = 128;
        while (d == 1) {
            x = y;
            for (uint64_t i = 0; i < power; ++i) y = (mulmod(y, y, n) + c) % n;
            uint64_t k = 0;
            while (k < power && d == 1) {
                ys = y;
                uint64_t lim = std::min(m, power - k);
                for (uint64_t i = 0; i < lim; ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    uint64_t diff = x > y ? x - y : y - x;
                    if (diff == 0) {
                        d = n;  // cycle closed without a factor; backtrack or retry
                        break;
                    }
                    q = mulmod(q, diff, n);
                }
                if (d == 1) d = std::gcd(q, n);
                k += lim;
            }
            power <<= 1;
        }
        if (d == n) {
            // backtrack one step at a time
            do {
                ys = (mulmod(ys, ys, n) + c) % n;
                uint64_t diff = x > ys ? x - ys : ys - x;
                d = std::gcd(diff, n);
            } while (d == 1);
        }
        if (d != n) return d;
        c += 1;  // rare cycle degenerate case, retry with a new constant
        x0 += 1;
    }
}

void factor_rec(uint64_t n, std::vector<uint64_t>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    uint64_t d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

Factorization factorize(uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
    Factorization f;
    f.n = n;
    if (n == 1) return f;

    std::vector<uint64_t> ps;
    uint64_t m = n;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                       29ull, 31ull, 37ull, 41ull, 43ull, 47ull, 53ull, 59ull, 61ull,
                       67ull, 71ull, 73ull, 79ull, 83ull, 89ull, 97ull}) {
        while (m % p == 0) {
            ps.push_back(p);
            m /= p;
        }
    }
    if (m > 1) factor_rec(m, ps);
    std::sort(ps.begin(), ps.end());
    for (uint64_t p : ps) {
        if (!f.factors.empty() && f.factors.back().p == p)
            f.factors.back().e += 1;
        else
            f.factors.push_back({p, 1});
    }
    return f;
}

mpz_class sigma(const Factorization& f) {
    mpz_class r = 1;
    for (const auto& [p, e] : f.factors) {
        mpz_class pe;
        mpz_ui_pow_ui(pe.get_mpz_t(), p, e + 1);
        r *= (pe - 1) / (mpz_class(p) - 1);
    }
    return r;
}

mpz_class phi(const Factorization& f) {
    mpz_class r = 1;
    for (const auto& [p, e] : f.factors) {
        mpz_class pe;
        mpz_ui_pow_ui(pe.get_mpz_t(), p, e - 1);
        r *= pe * (mpz_class(p) - 1);
    }
    return r;
}

mpq_class psi_over_n(const Factorization& f, unsigned t) {
    if (t < 2) throw std::invalid_argument("psi_t: t must be >= 2");
    mpq_class r = 1;
    for (const auto& [p, e] : f.factors) {
        (void)e;
        mpz_class pt;
        mpz_ui_pow_ui(pt.get_mpz_t(), p, t);
        mpz_class pt1;
        mpz_ui_pow_ui(pt1.get_mpz_t(), p, t - 1);
        // 1 + 1/p + ... + 1/p^(t-1) = (p^t - 1) / (p^(t-1) (p - 1))
        mpq_class term(pt - 1, pt1 * (mpz_class(p) - 1));
        term.canonicalize();
        r *= term;
    }
    return r;
}

mpq_class psi_t(const Factorization& f, unsigned t) {
    mpq_class r = psi_over_n(f, t) * mpq_class(mpz_class(f.n));
    r.canonicalize();
    return r;
}

unsigned nu(uint64_t n, uint64_t p) {
    if (n == 0) throw std::invalid_argument("nu: n must be >= 1");
    if (!is_prime_u64(p)) throw std::invalid_argument("nu: p must be prime");
    unsigned e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

bool is_t_free(const Factorization& f, unsigned t) {
    if (t < 2) throw std::invalid_argument("is_t_free: t must be >= 2");
    for (const auto& [p, e] : f.factors) {
        (void)p;
        if (e >= t) return false;
    }
    return true;
}

mpq_class sigma_over_n_totient_form(const Factorization& f) {
    // n/phi(n) * prod (1 - 1/q^(1+e))
    mpq_class r(mpz_class(f.n), phi(f));
    r.canonicalize();
    for (const auto& [p, e] : f.factors) {
        mpz_class pe1;
        mpz_ui_pow_ui(pe1.get_mpz_t(), p, e + 1);
        mpq_class term(pe1 - 1, pe1);
        term.canonicalize();
        r *= term;
    }
    r.canonicalize();
    return r;
}

}  // namespace robin
