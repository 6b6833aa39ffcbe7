#include "robin/primorial.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace robin {

namespace {

void check_table(const PrimeTable& table, uint64_t x) {
    if (table.limit < x) throw std::invalid_argument("prime table smaller than requested bound");
}

}  // namespace

Enc theta(uint64_t x, const PrimeTable& table, mpfr_prec_t prec) {
    check_table(table, x);
    Enc sum(prec);
    mpfr_t t_lo, t_up;
    mpfr_init2(t_lo, prec);
    mpfr_init2(t_up, prec);
    for (uint64_t p : table.primes) {
        if (p > x) break;
        mpfr_set_ui(t_lo, p, MPFR_RNDD);
        mpfr_log(t_lo, t_lo, MPFR_RNDD);
        mpfr_add(sum.lo_mut(), sum.lo_raw(), t_lo, MPFR_RNDD);
        mpfr_set_ui(t_up, p, MPFR_RNDU);
        mpfr_log(t_up, t_up, MPFR_RNDU);
        mpfr_add(sum.hi_mut(), sum.hi_raw(), t_up, MPFR_RNDU);
    }
    mpfr_clear(t_lo);
    mpfr_clear(t_up);
    return sum;
}

Enc mertens_product(uint64_t x, const PrimeTable& table, mpfr_prec_t prec) {
    check_table(table, x);
    Enc prod = Enc::exact_ui(1, prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    for (uint64_t p : table.primes) {
        if (p > x) break;
        mpfr_set_ui(t, p, MPFR_RNDD);
        mpfr_div_ui(t, t, p - 1, MPFR_RNDD);
        mpfr_mul(prod.lo_mut(), prod.lo_raw(), t, MPFR_RNDD);
        mpfr_set_ui(t, p, MPFR_RNDU);
        mpfr_div_ui(t, t, p - 1, MPFR_RNDU);
        mpfr_mul(prod.hi_mut(), prod.hi_raw(), t, MPFR_RNDU);
    }
    mpfr_clear(t);
    return prod;
}

PrimorialRecord primorial(uint64_t k, const PrimeTable& table, mpfr_prec_t prec) {
    if (k < 1) throw std::invalid_argument("primorial: k must be >= 1");
    if (k > table.primes.size()) throw std::invalid_argument("primorial: prime table holds fewer than k primes");
    PrimorialRecord r;
    r.k = k;
    r.p_k = table.primes[k - 1];
    r.theta_pk = theta(r.p_k, table, prec);
    r.mertens = mertens_product(r.p_k, table, prec);
    if (k <= kPrimorialMaterializeMaxK) {
        mpz_class n = 1;
        for (uint64_t i = 0; i < k; ++i) n *= table.primes[i];
        r.N_k = n;
    }
    return r;
}

namespace {

// (p^t - 1) / (p^(t-1) (p - 1)) as an exact rational, the per-prime factor of
// Psi_t(n)/n
mpq_class psi_term(uint64_t p, unsigned t) {
    mpz_class pt;
    mpz_ui_pow_ui(pt.get_mpz_t(), p, t);
    mpz_class pt1;
    mpz_ui_pow_ui(pt1.get_mpz_t(), p, t - 1);
    mpq_class q(pt - 1, pt1 * (mpz_class(p) - 1));
    q.canonicalize();
    return q;
}

Enc log_loglog_Nk(uint64_t k, const PrimeTable& table, mpfr_prec_t prec) {
    uint64_t p_k = table.primes[k - 1];
    Enc th = theta(p_k, table, prec);
    return th.log();
}

}  // namespace

Enc r_t_direct(uint64_t k, unsigned t, const PrimeTable& table, mpfr_prec_t prec) {
    if (t < 2) throw std::invalid_argument("r_t_direct: t must be >= 2");
    if (k < 2) throw std::invalid_argument("r_t_direct: k = 1 rejected, log log N_1 is negative");
    if (k > table.primes.size()) throw std::invalid_argument("r_t_direct: prime table too small");
    Enc logsum(prec);
    for (uint64_t i = 0; i < k; ++i) {
        Enc term = Enc::from_mpq(psi_term(table.primes[i], t), prec);
        logsum = logsum.add(term.log());
    }
    return logsum.exp().div(log_loglog_Nk(k, table, prec));
}

namespace {

// directed-rounded product over primes p <= bound of p^t/(p^t - 1), i.e. of
// (1 - p^-t)^-1
Enc pt_over_ptm1_product(unsigned t, uint64_t bound, const PrimeTable& table, mpfr_prec_t prec) {
    Enc prod = Enc::exact_ui(1, prec);
    mpfr_t num, den;
    mpfr_init2(num, prec);
    mpfr_init2(den, prec);
    mpz_class pt, ptm1;
    for (uint64_t p : table.primes) {
        if (p > bound) break;
        mpz_ui_pow_ui(pt.get_mpz_t(), p, t);
        ptm1 = pt - 1;
        mpfr_set_z(num, pt.get_mpz_t(), MPFR_RNDD);
        mpfr_set_z(den, ptm1.get_mpz_t(), MPFR_RNDU);
        mpfr_div(num, num, den, MPFR_RNDD);
        mpfr_mul(prod.lo_mut(), prod.lo_raw(), num, MPFR_RNDD);
        mpfr_set_z(num, pt.get_mpz_t(), MPFR_RNDU);
        mpfr_set_z(den, ptm1.get_mpz_t(), MPFR_RNDD);
        mpfr_div(num, num, den, MPFR_RNDU);
        mpfr_mul(prod.hi_mut(), prod.hi_raw(), num, MPFR_RNDU);
    }
    mpfr_clear(num);
    mpfr_clear(den);
    return prod;
}

std::mutex g_prod_mutex;

// the full product up to a large cutoff dominates the cost of r_t_formula and
// is shared across k, so memoize it
Enc full_pt_product_cached(unsigned t, uint64_t cutoff, const PrimeTable& table, mpfr_prec_t prec) {
    std::lock_guard<std::mutex> lock(g_prod_mutex);
    static std::map<std::tuple<unsigned, uint64_t, mpfr_prec_t>, Enc> cache;
    auto key = std::make_tuple(t, cutoff, prec);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, pt_over_ptm1_product(t, cutoff, table, prec)).first;
    return it->second;
}

}  // namespace

Enc r_t_formula(uint64_t k, unsigned t, const PrimeTable& table, uint64_t tail_cutoff,
                mpfr_prec_t prec) {
    if (t < 2) throw std::invalid_argument("r_t_formula: t must be >= 2");
    if (k < 2) throw std::invalid_argument("r_t_formula: k = 1 rejected, log log N_1 is negative");
    if (k > table.primes.size()) throw std::invalid_argument("r_t_formula: prime table too small");
    uint64_t p_k = table.primes[k - 1];
    if (tail_cutoff < p_k) throw std::invalid_argument("r_t_formula: tail_cutoff must be >= p_k");
    check_table(table, tail_cutoff);

    // Psi_t(N_k)/N_k = (1/zeta(t)) * prod_{p > p_k} (1 - p^-t)^-1 * prod_{p <= p_k} p/(p-1).
    // The infinite tail over p > p_k is bracketed by the finite product up to
    // tail_cutoff on the low side and that product times tail_product_upper on
    // the high side.
    Enc full = full_pt_product_cached(t, tail_cutoff, table, prec);
    Enc prefix = pt_over_ptm1_product(t, p_k, table, prec);
    Enc finite_tail = full.div(prefix);
    Enc tail = finite_tail.mul(tail_product_upper(t, Enc::exact_ui(tail_cutoff, prec)));

    Enc zeta = zeta_int(t, prec);
    Enc mert = mertens_product(p_k, table, prec);
    Enc loglog = log_loglog_Nk(k, table, prec);
    return tail.mul(mert).div(zeta.mul(loglog));
}

namespace {

std::vector<uint32_t> spf_sieve(uint64_t limit) {
    std::vector<uint32_t> spf(limit + 1, 0);
    for (uint64_t i = 2; i <= limit; ++i) {
        if (spf[i] != 0) continue;
        for (uint64_t j = i; j <= limit; j += i)
            if (spf[j] == 0) spf[j] = static_cast<uint32_t>(i);
    }
    return spf;
}

template <typename F>
void for_each_distinct_prime(const std::vector<uint32_t>& spf, uint64_t n, F&& f) {
    while (n > 1) {
        uint64_t p = spf[n];
        f(p);
        while (n % p == 0) n /= p;
    }
}

}  // namespace

std::vector<uint64_t> champion_scan(uint64_t limit, unsigned t) {
    if (t < 2) throw std::invalid_argument("champion_scan: t must be >= 2");
    if (limit < 1) throw std::invalid_argument("champion_scan: limit must be >= 1");
    if (limit > kChampionScanMaxLimit) throw budget_error("champion_scan: limit exceeds budget");

    std::vector<uint32_t> spf = spf_sieve(limit);
    std::vector<uint64_t> champions;
    mpq_class best(0);
    double best_d = 0.0;
    mpq_class cur;
    for (uint64_t n = 1; n <= limit; ++n) {
        double val = 1.0;
        for_each_distinct_prime(spf, n, [&](uint64_t p) {
            double pd = static_cast<double>(p);
            val *= (1.0 - std::pow(pd, -static_cast<double>(t))) / (1.0 - 1.0 / pd);
        });
        if (val <= best_d * (1.0 - 1e-12)) continue;
        // near the current record: settle it exactly
        cur = 1;
        for_each_distinct_prime(spf, n, [&](uint64_t p) { cur *= psi_term(p, t); });
        if (cur > best) {
            best = cur;
            best_d = best.get_d();
            champions.push_back(n);
        }
    }
    return champions;
}

MaximalityReport primorial_maximality_check(unsigned k, unsigned t) {
    if (k < 2 || k > 6) throw std::invalid_argument("primorial_maximality_check: k must be in [2, 6]");
    if (t < 2) throw std::invalid_argument("primorial_maximality_check: t must be >= 2");

    static const uint64_t first_primes[] = {2, 3, 5, 7, 11, 13, 17};
    uint64_t N_k = 1, N_k1 = 1;
    for (unsigned i = 0; i < k; ++i) N_k *= first_primes[i];
    N_k1 = N_k * first_primes[k];

    std::vector<uint32_t> spf = spf_sieve(N_k1 - 1);

    mpq_class psi_ref = 1;
    for (unsigned i = 0; i < k; ++i) psi_ref *= psi_term(first_primes[i], t);
    double psi_ref_d = psi_ref.get_d();
    double loglog_ref_d = std::log(std::log(static_cast<double>(N_k)));
    double r_ref_d = psi_ref_d / loglog_ref_d;

    auto loglog_enc = [](uint64_t n, mpfr_prec_t prec) {
        return Enc::exact_ui(n, prec).log().log();
    };

    MaximalityReport rep;
    rep.k = k;
    rep.t = t;
    rep.max_at_primorial = true;
    rep.argmax = N_k;
    double argmax_r_d = r_ref_d;

    mpq_class psi_n, ratio;
    for (uint64_t n = N_k + 1; n < N_k1; ++n) {
        double val = 1.0;
        for_each_distinct_prime(spf, n, [&](uint64_t p) {
            double pd = static_cast<double>(p);
            val *= (1.0 - std::pow(pd, -static_cast<double>(t))) / (1.0 - 1.0 / pd);
        });
        double r_d = val / std::log(std::log(static_cast<double>(n)));
        if (r_d < r_ref_d * (1.0 - 1e-9)) continue;

        // candidate: R_t(n) might reach R_t(N_k); decide rigorously.
        // R_t(n) < R_t(N_k)  <=>  psi_n/psi_ref < loglog(n)/loglog(N_k)
        psi_n = 1;
        for_each_distinct_prime(spf, n, [&](uint64_t p) { psi_n *= psi_term(p, t); });
        ratio = psi_n / psi_ref;
        Verdict3 v = decide_with_escalation(
            [&](mpfr_prec_t prec) {
                return lt(ratio, loglog_enc(n, prec).div(loglog_enc(N_k, prec)));
            },
            kDefaultPrec, kPrecCap);
        if (v.is_true()) continue;
        if (v.is_false()) {
            rep.max_at_primorial = false;
            if (r_d > argmax_r_d) {
                rep.argmax = n;
                argmax_r_d = r_d;
            }
        } else {
            rep.tie_candidates.push_back(n);
        }
    }
    return rep;
}

}  // namespace robin
