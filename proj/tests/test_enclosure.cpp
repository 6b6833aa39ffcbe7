#include "doctest.h"
#include "robin/enclosure.hpp"

#include <gmpxx.h>

using namespace robin;

namespace {

// small deterministic generator for sampled properties
struct Lcg {
    uint64_t s;
    explicit Lcg(uint64_t seed) : s(seed) {}
    uint64_t next() {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return s >> 11;
    }
    mpq_class rational(long max_num = 10000, long max_den = 997) {
        long n = static_cast<long>(next() % (2 * max_num + 1)) - max_num;
        long d = static_cast<long>(next() % max_den) + 1;
        mpq_class q(n, d);
        q.canonicalize();
        return q;
    }
};

// q inside e: neither endpoint strictly excludes it
bool contains_q(const Enc& e, const mpq_class& q) {
    return !lt(e, q).is_true() && !lt(q, e).is_true();
}

// inner nested inside outer, endpoint-wise
bool encloses(const Enc& outer, const Enc& inner) {
    return mpfr_cmp(outer.lo_raw(), inner.lo_raw()) <= 0 &&
           mpfr_cmp(inner.hi_raw(), outer.hi_raw()) <= 0;
}

}  // namespace

TEST_SUITE("enclosure") {

TEST_CASE("exact constructors have zero width") {
    Enc a = Enc::exact_ui(7, 64);
    CHECK(a.lo_d() == 7.0);
    CHECK(a.hi_d() == 7.0);
    CHECK(a.width_d() == 0.0);
    Enc b = Enc::exact_si(-3, 64);
    CHECK(b.lo_d() == -3.0);
    CHECK(b.hi_d() == -3.0);
    // dyadic rationals are representable, so still exact
    Enc c = Enc::from_mpq(mpq_class(3, 8), 64);
    CHECK(c.width_d() == 0.0);
    CHECK(c.lo_d() == 0.375);
}

TEST_CASE("division rounds outward") {
    Enc third = Enc::exact_ui(1, 64).div(Enc::exact_ui(3, 64));
    CHECK(mpfr_cmp(third.lo_raw(), third.hi_raw()) < 0);  // 1/3 is not dyadic
    CHECK(contains_q(third, mpq_class(1, 3)));
}

TEST_CASE("field ops enclose exact rational arithmetic") {
    Lcg rng(20260815);
    for (int i = 0; i < 500; ++i) {
        mpq_class a = rng.rational(), b = rng.rational();
        Enc ea = Enc::from_mpq(a, 96), eb = Enc::from_mpq(b, 96);
        CHECK(contains_q(ea.add(eb), mpq_class(a + b)));
        CHECK(contains_q(ea.sub(eb), mpq_class(a - b)));
        CHECK(contains_q(ea.mul(eb), mpq_class(a * b)));
        if (sgn(b) != 0) CHECK(contains_q(ea.div(eb), mpq_class(a / b)));
        mpq_class p = a * a * a;
        CHECK(contains_q(ea.pow_ui(3), p));
        CHECK(contains_q(ea.neg(), mpq_class(-a)));
        CHECK(contains_q(ea.abs(), mpq_class(abs(a))));
    }
}

TEST_CASE("hull contains both operands") {
    Enc a = Enc::from_mpq(mpq_class(1, 3), 64);
    Enc b = Enc::from_mpq(mpq_class(5, 7), 64);
    Enc h = Enc::hull(a, b);
    CHECK(encloses(h, a));
    CHECK(encloses(h, b));
    CHECK(contains_q(h, mpq_class(1, 2)));
}

TEST_CASE("higher precision refines inside lower precision") {
    // exp, log, sqrt, cbrt at a non-trivial point
    Enc coarse = Enc::from_mpq(mpq_class(17, 5), 32);
    Enc fine = Enc::from_mpq(mpq_class(17, 5), 256);
    CHECK(encloses(coarse.exp(), fine.exp()));
    CHECK(encloses(coarse.log(), fine.log()));
    CHECK(encloses(coarse.sqrt(), fine.sqrt()));
    CHECK(encloses(coarse.cbrt(), fine.cbrt()));
    CHECK(encloses(coarse.recip(), fine.recip()));
}

TEST_CASE("log inverts exp up to enclosure width") {
    Lcg rng(77);
    for (int i = 0; i < 50; ++i) {
        mpq_class q = rng.rational(20, 13);
        Enc x = Enc::from_mpq(q, 128);
        Enc back = x.exp().log();
        CHECK(contains_q(back, q));
    }
}

TEST_CASE("comparisons are three valued") {
    Enc one = Enc::exact_ui(1, 64);
    Enc two = Enc::exact_ui(2, 64);
    CHECK(lt(one, two).is_true());
    CHECK(lt(two, one).is_false());
    CHECK(le(one, one).is_true());
    // overlapping intervals stay undecided
    Enc wide = Enc::hull(Enc::exact_ui(0, 64), Enc::exact_ui(3, 64));
    CHECK(lt(wide, two).is_undecided());
    CHECK(lt(wide, two).width > 0.0);
}

TEST_CASE("verdict strings") {
    CHECK(Verdict3::yes().str() == "TRUE");
    CHECK(Verdict3::no().str() == "FALSE");
    CHECK(Verdict3::undecided(0.5).str() == "UNDECIDED");
}

TEST_CASE("escalation decides hairline comparisons and never flips") {
    // 1/3 against 1/3 + 2^-200: undecidable at 128 bits of separation? it is
    // decidable once the working precision passes ~200 bits
    mpq_class third(1, 3);
    mpq_class close = third + mpq_class(mpz_class(1), mpz_class(1) << 200);
    Verdict3 v = decide_with_escalation(
        [&](mpfr_prec_t p) { return lt(Enc::from_mpq(third, p), Enc::from_mpq(close, p)); }, 128);
    CHECK(v.is_true());
    // already-decided comparisons keep their value at any precision
    for (mpfr_prec_t p : {64, 128, 512}) {
        CHECK(lt(Enc::from_mpq(third, p), Enc::from_mpq(mpq_class(1, 2), p)).is_true());
        CHECK(lt(Enc::from_mpq(mpq_class(1, 2), p), Enc::from_mpq(third, p)).is_false());
    }
}

TEST_CASE("euler gamma matches published digits") {
    // gamma = 0.57721566490153286060651209008240243...
    mpq_class lo("57721566490153286060/100000000000000000000");
    mpq_class hi("57721566490153286061/100000000000000000000");
    Enc g = euler_gamma(128);
    CHECK(lt(mpq_class(lo), g).is_true());
    CHECK(lt(g, hi).is_true());
    // e^gamma = 1.78107241799019798523650410310717954...
    mpq_class elo("178107241799019798523/100000000000000000000");
    mpq_class ehi("178107241799019798524/100000000000000000000");
    Enc eg = exp_gamma(128);
    CHECK(lt(mpq_class(elo), eg).is_true());
    CHECK(lt(eg, ehi).is_true());
    // memoized instances are consistent across calls
    Enc g2 = euler_gamma(128);
    CHECK(encloses(g2, g));
    CHECK(encloses(g, g2));
}

TEST_CASE("integer zeta values") {
    // zeta(2) = pi^2/6 = 1.6449340668482264364...; the enclosure must cover
    // the published digits and stay tight at 128 bits
    Enc z2 = zeta_int(2, 128);
    CHECK(z2.contains(mpq_class("16449340668482264364/10000000000000000000")));
    CHECK(z2.width_d() < 1e-10);
    // zeta(21) - 1 lands in [4.769e-7, 4.771e-7]
    Enc z21m1 = zeta_int(21, 128).sub(Enc::exact_ui(1, 128));
    CHECK(lt(mpq_class("4769/10000000000"), z21m1).is_true());
    CHECK(lt(z21m1, mpq_class("4771/10000000000")).is_true());
    // cross-check against mpfr's own zeta with directed rounding
    for (unsigned t : {2u, 3u, 7u, 21u}) {
        Enc z = zeta_int(t, 128);
        mpfr_t lo, hi;
        mpfr_init2(lo, 128);
        mpfr_init2(hi, 128);
        mpfr_zeta_ui(lo, t, MPFR_RNDD);
        mpfr_zeta_ui(hi, t, MPFR_RNDU);
        CHECK(mpfr_cmp(z.hi_raw(), lo) >= 0);
        CHECK(mpfr_cmp(z.lo_raw(), hi) <= 0);
        mpfr_clear(lo);
        mpfr_clear(hi);
    }
}

TEST_CASE("tail product upper bound dominates finite truncations") {
    // finite product over primes in (x, 20000] of p^t/(p^t - 1), kept as an
    // exact rational so no rounding of our own can leak into the comparison,
    // must stay below the closed-form tail bound
    std::vector<uint64_t> primes;
    {
        std::vector<bool> comp(20001, false);
        for (uint64_t i = 2; i <= 20000; ++i) {
            if (comp[i]) continue;
            primes.push_back(i);
            for (uint64_t j = i * i; j <= 20000; j += i) comp[j] = true;
        }
    }
    for (unsigned t : {2u, 3u, 21u}) {
        for (uint64_t x : {10ull, 100ull, 1000ull}) {
            mpz_class num = 1, den = 1;
            for (uint64_t p : primes) {
                if (p <= x) continue;
                mpz_class pt;
                mpz_ui_pow_ui(pt.get_mpz_t(), p, t);
                num *= pt;
                den *= pt - 1;
            }
            mpq_class fin(num, den);
            fin.canonicalize();
            Enc u = tail_product_upper(t, Enc::exact_ui(x, 160));
            CHECK(u.contains(mpq_class(1)));     // [1, U] starts at 1
            CHECK(!lt(u, fin).is_true());  // u.hi >= finite truncation
            CHECK(fin > 1);
        }
    }
    // bound shrinks as the cutoff grows
    Enc u10 = tail_product_upper(2, Enc::exact_ui(10, 128));
    Enc u1000 = tail_product_upper(2, Enc::exact_ui(1000, 128));
    CHECK(mpfr_cmp(u1000.hi_raw(), u10.hi_raw()) < 0);
}

TEST_CASE("decimal endpoint strings round outward") {
    Enc third = Enc::exact_ui(1, 96).div(Enc::exact_ui(3, 96));
    std::string lo = third.lo_str(20), hi = third.hi_str(20);
    Enc lo_back = Enc::from_decimal(lo, 96);
    Enc hi_back = Enc::from_decimal(hi, 96);
    CHECK(mpfr_cmp(lo_back.lo_raw(), third.lo_raw()) <= 0);
    CHECK(mpfr_cmp(hi_back.hi_raw(), third.hi_raw()) >= 0);
}

}  // TEST_SUITE
