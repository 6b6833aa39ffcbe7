#include "doctest.h"
#include "robin/primorial.hpp"

using namespace robin;

namespace {

const PrimeTable& table_1e6() {
    static PrimeTable t = sieve_primes(1100000);
    return t;
}

bool contains_q(const Enc& e, const mpq_class& q) {
    return !lt(e, q).is_true() && !lt(q, e).is_true();
}

}  // namespace

TEST_SUITE("primorial") {

TEST_CASE("theta sums logs of primes") {
    const PrimeTable& t = table_1e6();
    // theta(3) = log 6, theta(10) = log 210
    CHECK(theta(3, t, 128).intersects(Enc::exact_ui(6, 128).log()));
    CHECK(theta(10, t, 128).intersects(Enc::exact_ui(210, 128).log()));
    // theta(1e6)/1e6 well inside (0.995, 1.0)
    Enc ratio = theta(1000000, t, 128).div(Enc::exact_ui(1000000, 128));
    CHECK(lt(mpq_class(995, 1000), ratio).is_true());
    CHECK(lt(ratio, mpq_class(1)).is_true());
    // frozen digits: theta(1e6) = 998484.1750256342...
    Enc th = theta(1000000, t, 128);
    CHECK(lt(mpq_class("9984841750256342/10000000000"), th).is_true());
    CHECK(lt(th, mpq_class("9984841750256343/10000000000")).is_true());
    CHECK_THROWS_AS(theta(2000000, t, 128), std::invalid_argument);
}

TEST_CASE("mertens product against exact small cases") {
    const PrimeTable& t = table_1e6();
    // primes <= 10: 2 * 3/2 * 5/4 * 7/6 = 35/8
    CHECK(contains_q(mertens_product(10, t, 128), mpq_class(35, 8)));
    // at 1e6 the normalized product sits within 0.01 of e^gamma
    Enc norm = mertens_product(1000000, t, 128).div(Enc::exact_ui(1000000, 128).log());
    Enc diff = norm.sub(exp_gamma(128)).abs();
    CHECK(lt(diff, mpq_class(1, 100)).is_true());
}

TEST_CASE("primorial records") {
    const PrimeTable& t = table_1e6();
    CHECK(primorial(1, t).N_k.value() == 2);
    CHECK(primorial(2, t).N_k.value() == 6);
    CHECK(primorial(5, t).N_k.value() == 2310);
    CHECK(primorial(10, t).N_k.value() == mpz_class("6469693230"));
    CHECK(primorial(5, t).p_k == 11);
    // log N_k is exactly theta(p_k)
    for (uint64_t k : {2ull, 7ull, 50ull, 1000ull}) {
        Enc lhs = Enc::from_mpz(primorial(k, t).N_k.value(), 128).log();
        CHECK(lhs.intersects(theta(t.primes[k - 1], t, 128)));
    }
    // beyond the materialization cap only the logarithmic fields are filled
    CHECK(!primorial(kPrimorialMaterializeMaxK + 1, t).N_k.has_value());
    CHECK_THROWS_AS(primorial(0, t), std::invalid_argument);
    CHECK_THROWS_AS(primorial(t.primes.size() + 1, t), std::invalid_argument);
}

TEST_CASE("direct normalized ratio at small k") {
    const PrimeTable& t = table_1e6();
    // R_2(N_2) = 2/log log 6 = 3.4293665667005871669...
    Enc r = r_t_direct(2, 2, t, 128);
    CHECK(lt(mpq_class("34293665667005871669/10000000000000000000"), r).is_true());
    CHECK(lt(r, mpq_class("34293665667005871670/10000000000000000000")).is_true());
    // R_21(N_2) = 5.1440473966850024684...
    Enc r21 = r_t_direct(2, 21, t, 128);
    CHECK(lt(mpq_class("51440473966850024684/10000000000000000000"), r21).is_true());
    CHECK(lt(r21, mpq_class("51440473966850024685/10000000000000000000")).is_true());
    CHECK_THROWS_AS(r_t_direct(1, 2, t, 128), std::invalid_argument);
    CHECK_THROWS_AS(r_t_direct(2, 1, t, 128), std::invalid_argument);
}

TEST_CASE("normalized t = 21 ratio stays above e^gamma at desk scale") {
    // sampled k with 10^3 <= p_k <= 10^6; the excess over e^gamma shrinks
    // but stays positive throughout this window
    const PrimeTable& t = table_1e6();
    double prev = 1e9;
    for (uint64_t k : {168ull, 1000ull, 10000ull, 78498ull}) {
        Enc v = r_t_direct(k, 21, t, 128).div(exp_gamma(128));
        CHECK(lt(mpq_class(1), v).is_true());
        CHECK(v.hi_d() < prev);
        prev = v.hi_d();
    }
    // frozen sample: e^-gamma R_21(N_1000) = 1.00275553957938...
    Enc s = r_t_direct(1000, 21, t, 128).div(exp_gamma(128));
    CHECK(lt(mpq_class("100275553957938/100000000000000"), s).is_true());
    CHECK(lt(s, mpq_class("100275553957939/100000000000000")).is_true());
}

TEST_CASE("product identity intersects the direct evaluation") {
    const PrimeTable& t = table_1e6();
    for (unsigned tt : {2u, 7u, 21u}) {
        for (uint64_t k = 2; k <= 8; ++k) {
            Enc d = r_t_direct(k, tt, t, 128);
            Enc f = r_t_formula(k, tt, t, tt == 2 ? 1000000 : 10000, 128);
            CHECK(d.intersects(f));
            CHECK(f.width_d() < 1e-5);
        }
    }
}

TEST_CASE("identity width shrinks with the tail cutoff") {
    const PrimeTable& t = table_1e6();
    Enc w1 = r_t_formula(5, 2, t, 100000, 128);
    Enc w2 = r_t_formula(5, 2, t, 1000000, 128);
    CHECK(w2.width_d() < w1.width_d());
    CHECK(w1.intersects(r_t_direct(5, 2, t, 128)));
}

TEST_CASE("identity evaluation is deterministic") {
    const PrimeTable& t = table_1e6();
    Enc a = r_t_formula(4, 21, t, 10000, 128);
    Enc b = r_t_formula(4, 21, t, 10000, 128);
    CHECK(a.lo_str() == b.lo_str());
    CHECK(a.hi_str() == b.hi_str());
}

TEST_CASE("champions of the normalized psi ratio") {
    std::vector<uint64_t> expect{1, 2, 6, 30, 210, 2310, 30030};
    CHECK(champion_scan(100000, 2) == expect);
    CHECK(champion_scan(100000, 21) == expect);
    CHECK(champion_scan(100, 2) == std::vector<uint64_t>{1, 2, 6, 30});
    CHECK_THROWS_AS(champion_scan(kChampionScanMaxLimit + 1, 2), budget_error);
}

TEST_CASE("ratio is maximized at the primorial on each block") {
    for (unsigned t : {2u, 21u}) {
        for (uint64_t k = 2; k <= 6; ++k) {
            MaximalityReport rep = primorial_maximality_check(k, t);
            CHECK(rep.max_at_primorial);
            CHECK(rep.tie_candidates.empty());
            CHECK(mpz_class(static_cast<unsigned long>(rep.argmax)) ==
                  primorial(k, table_1e6()).N_k.value());
        }
    }
    CHECK_THROWS_AS(primorial_maximality_check(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(primorial_maximality_check(7, 2), std::invalid_argument);
}

}  // TEST_SUITE
