#include "robin/enclosure.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

namespace robin {

namespace {

std::mutex g_const_mutex;

// Bernoulli numbers B_0..B_m as exact rationals via the classical recurrence
// sum_{j=0}^{m} C(m+1, j) B_j = 0. Grows on demand, guarded by g_const_mutex.
const std::vector<mpq_class>& bernoulli_upto(size_t m) {
    static std::vector<mpq_class> cache{mpq_class(1)};
    while (cache.size() <= m) {
        size_t n = cache.size();
        mpq_class acc = 0;
        mpz_class binom = 1;  // C(n+1, 0)
        for (size_t j = 0; j < n; ++j) {
            acc += mpq_class(binom) * cache[j];
            // C(n+1, j+1) = C(n+1, j) * (n+1-j) / (j+1)
            binom *= mpz_class(static_cast<unsigned long>(n + 1 - j));
            binom /= mpz_class(static_cast<unsigned long>(j + 1));
        }
        mpq_class b = -acc / mpq_class(binom);  // binom = C(n+1, n) = n+1
        b.canonicalize();
        cache.push_back(b);
    }
    return cache;
}

// |q| < 2^-bits, exact test
bool mpq_abs_below_pow2(const mpq_class& q, long bits) {
    mpq_class a = ::abs(q);
    mpz_class scaled = a.get_num() << bits;
    return scaled < a.get_den();
}

// gamma = H_n - log n - 1/(2n) + sum_{k=1..m} B_2k/(2k n^2k) + R,
// where R has the sign of the first omitted term and |R| <= |that term|
// (Euler-Maclaurin for f(x) = 1/x, completely monotone derivatives).
// Everything except log n is exact rational, so the only rounding happens
// when the rational bracket is converted to the working precision and when
// log n is enclosed with directed rounding.
Enc gamma_em(mpfr_prec_t prec) {
    const unsigned long n = 512;
    mpq_class rational_part = 0;
    for (unsigned long k = 1; k <= n; ++k) rational_part += mpq_class(1, k);
    rational_part -= mpq_class(1, 2 * n);

    mpz_class n2(static_cast<unsigned long>(n));
    n2 *= n;  // n^2
    mpz_class npow = 1;
    mpq_class omitted;
    size_t k = 1;
    for (;; ++k) {
        const auto& B = bernoulli_upto(2 * k + 2);
        npow *= n2;
        mpq_class term = B[2 * k] / (mpq_class(2 * k) * mpq_class(npow));
        term.canonicalize();
        mpq_class next = B[2 * k + 2] / (mpq_class(2 * k + 2) * mpq_class(npow * n2));
        next.canonicalize();
        if (mpq_abs_below_pow2(next, prec + 8)) {
            rational_part += term;
            omitted = next;
            break;
        }
        rational_part += term;
    }
    mpq_class r_lo = rational_part + (omitted < 0 ? omitted : mpq_class(0));
    mpq_class r_hi = rational_part + (omitted > 0 ? omitted : mpq_class(0));

    Enc bracket(prec);
    mpfr_set_q(bracket.lo_mut(), r_lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(bracket.hi_mut(), r_hi.get_mpq_t(), MPFR_RNDU);
    return bracket.sub(Enc::exact_ui(n, prec).log());
}

}  // namespace

Enc euler_gamma(mpfr_prec_t prec) {
    if (prec < 16) throw std::invalid_argument("euler_gamma: precision below 16 bits");
    std::lock_guard<std::mutex> lock(g_const_mutex);
    static std::map<mpfr_prec_t, Enc> cache;
    auto it = cache.find(prec);
    if (it == cache.end()) it = cache.emplace(prec, gamma_em(prec)).first;
    return it->second;
}

Enc exp_gamma(mpfr_prec_t prec) {
    Enc g = euler_gamma(prec);  // acquires and releases the lock itself
    std::lock_guard<std::mutex> lock(g_const_mutex);
    static std::map<mpfr_prec_t, Enc> cache;
    auto it = cache.find(prec);
    if (it == cache.end()) it = cache.emplace(prec, g.exp()).first;
    return it->second;
}

// zeta(t) = sum_{k<=N} k^-t + tail, with the tail bracketed by the integral
// pair [(N+1)^(1-t)/(t-1), N^(1-t)/(t-1)]. N is scaled to the precision but
// capped, so the bracket width has a floor of about N_cap^-t (only felt for
// t = 2, where it is ~2.5e-13, far below every tolerance used downstream).
Enc zeta_int(unsigned t, mpfr_prec_t prec) {
    if (t < 2) throw std::invalid_argument("zeta_int: t must be >= 2");
    std::lock_guard<std::mutex> lock(g_const_mutex);
    static std::map<std::pair<unsigned, mpfr_prec_t>, Enc> cache;
    auto key = std::make_pair(t, prec);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    double nd = std::pow(2.0, static_cast<double>(prec + 8) / t);
    unsigned long N = nd > 2e6 ? 2000000ul : (nd < 64 ? 64ul : static_cast<unsigned long>(nd));

    Enc sum(prec);
    mpfr_t term_lo, term_up;
    mpfr_init2(term_lo, prec);
    mpfr_init2(term_up, prec);
    mpz_class kp;
    for (unsigned long k = 1; k <= N; ++k) {
        mpz_ui_pow_ui(kp.get_mpz_t(), k, t);
        mpfr_set_z(term_up, kp.get_mpz_t(), MPFR_RNDD);  // round the denominator down => quotient up
        mpfr_ui_div(term_up, 1, term_up, MPFR_RNDU);
        mpfr_add(sum.hi_mut(), sum.hi_raw(), term_up, MPFR_RNDU);
        mpfr_set_z(term_lo, kp.get_mpz_t(), MPFR_RNDU);
        mpfr_ui_div(term_lo, 1, term_lo, MPFR_RNDD);
        mpfr_add(sum.lo_mut(), sum.lo_raw(), term_lo, MPFR_RNDD);
    }
    mpfr_clear(term_lo);
    mpfr_clear(term_up);

    // tail bounds: integral of x^-t over [N, inf) and [N+1, inf)
    auto inv_pow = [&](unsigned long base, mpfr_rnd_t rnd) {
        mpz_class bp;
        mpz_ui_pow_ui(bp.get_mpz_t(), base, t - 1);
        Enc e(prec);
        mpfr_set_z(e.lo_mut(), bp.get_mpz_t(), rnd == MPFR_RNDD ? MPFR_RNDU : MPFR_RNDD);
        mpfr_ui_div(e.lo_mut(), 1, e.lo_raw(), rnd);
        return e;  // only lo_ used by caller
    };
    Enc tail_lo = inv_pow(N + 1, MPFR_RNDD);
    Enc tail_hi = inv_pow(N, MPFR_RNDU);
    Enc result(prec);
    mpfr_div_ui(tail_lo.lo_mut(), tail_lo.lo_raw(), t - 1, MPFR_RNDD);
    mpfr_div_ui(tail_hi.lo_mut(), tail_hi.lo_raw(), t - 1, MPFR_RNDU);
    mpfr_add(result.lo_mut(), sum.lo_raw(), tail_lo.lo_raw(), MPFR_RNDD);
    mpfr_add(result.hi_mut(), sum.hi_raw(), tail_hi.lo_raw(), MPFR_RNDU);

    it = cache.emplace(key, std::move(result)).first;
    return it->second;
}

// sum over primes p > x of -log(1 - p^-t)
//   <= (t/(t-1)) * sum over integers n > floor(x) of n^-t      (term bound)
//   <= (t/(t-1)) * floor(x)^(1-t)/(t-1)                        (integral)
//   <= t / ((t-1) * floor(x)^(t-1))                            (t-1 >= 1)
Enc tail_product_upper(unsigned t, const Enc& x) {
    if (t < 2) throw std::invalid_argument("tail_product_upper: t must be >= 2");
    mpfr_prec_t prec = x.prec();
    mpz_class fl;
    mpfr_get_z(fl.get_mpz_t(), x.lo_raw(), MPFR_RNDD);
    if (fl < 2) throw std::domain_error("tail_product_upper: requires x.lo > 1");
    mpz_class denom_z;
    mpz_pow_ui(denom_z.get_mpz_t(), fl.get_mpz_t(), t - 1);
    denom_z *= (t - 1);
    Enc arg(prec);
    mpfr_set_z(arg.hi_mut(), denom_z.get_mpz_t(), MPFR_RNDD);
    mpfr_ui_div(arg.hi_mut(), t, arg.hi_raw(), MPFR_RNDU);
    Enc result(prec);
    mpfr_set_ui(result.lo_mut(), 1, MPFR_RNDD);
    mpfr_exp(result.hi_mut(), arg.hi_raw(), MPFR_RNDU);
    return result;
}

}  // namespace robin
