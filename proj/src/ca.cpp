#include "robin/ca.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <queue>

namespace robin {

unsigned CAExponentVector::exponent_of(uint64_t p) const {
    for (const auto& [q, a] : high_exponents)
        if (q == p) return a;
    return p <= max_prime ? 1u : 0u;
}

std::vector<std::pair<uint64_t, unsigned>> CAExponentVector::exponents(const PrimeTable& table) const {
    if (table.limit < max_prime)
        throw std::invalid_argument("exponents: prime table smaller than max_prime");
    std::vector<std::pair<uint64_t, unsigned>> out;
    for (uint64_t p : table.primes) {
        if (p > max_prime) break;
        out.emplace_back(p, exponent_of(p));
    }
    return out;
}

namespace {

// multiplying n by p (exponent a -> a+1) multiplies sigma(n)/n by exactly
// r(p, a) = (p^(a+2) - 1)/(p (p^(a+1) - 1)); the step is worth taking at
// precisely those epsilon below its critical value log(r)/log(p)
mpq_class step_ratio(uint64_t p, unsigned a) {
    mpz_class num, den;
    mpz_ui_pow_ui(num.get_mpz_t(), p, a + 2);
    num -= 1;
    mpz_ui_pow_ui(den.get_mpz_t(), p, a + 1);
    den -= 1;
    den *= p;
    mpq_class r(num, den);
    r.canonicalize();
    return r;
}

Enc crit_enc(uint64_t p, const mpq_class& r, mpfr_prec_t prec) {
    return Enc::from_mpq(r, prec).log().div(Enc::exact_ui(p, prec).log());
}

// exact sign of x(p, a) - eps for rational eps = u/v in lowest terms with
// 0 < eps < 1: compare (p^(a+2) - 1)^v against p^(u+v) (p^(a+1) - 1)^v.
// +1: step beneficial, 0: exact tie (provably impossible: the two sides
// differ mod p), -1: not beneficial.
int step_sign_exact(uint64_t p, unsigned a, const mpq_class& eps) {
    unsigned long u = mpz_get_ui(eps.get_num().get_mpz_t());
    unsigned long v = mpz_get_ui(eps.get_den().get_mpz_t());
    mpz_class hi, lo, lhs, rhs;
    mpz_ui_pow_ui(hi.get_mpz_t(), p, a + 2);
    hi -= 1;
    mpz_ui_pow_ui(lo.get_mpz_t(), p, a + 1);
    lo -= 1;
    mpz_pow_ui(lhs.get_mpz_t(), hi.get_mpz_t(), v);
    mpz_pow_ui(rhs.get_mpz_t(), lo.get_mpz_t(), v);
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), p, u + v);
    rhs *= pw;
    return mpz_cmp(lhs.get_mpz_t(), rhs.get_mpz_t());
}

// beneficial test with tie detection: enclosure comparison first, exact
// integer comparison only when enclosures cannot separate
int step_sign(uint64_t p, unsigned a, const mpq_class& eps) {
    mpq_class r = step_ratio(p, a);
    Verdict3 v = decide_with_escalation(
        [&](mpfr_prec_t prec) { return lt(eps, crit_enc(p, r, prec)); });
    if (v.is_true()) return 1;
    if (v.is_false()) return -1;
    if (mpz_fits_ulong_p(eps.get_num().get_mpz_t()) && mpz_fits_ulong_p(eps.get_den().get_mpz_t()))
        return step_sign_exact(p, a, eps);
    return 0;  // unreachable for sane input; treated as a tie
}

}  // namespace

CAExponentVector ca_exponents(const mpq_class& epsilon, uint64_t prime_limit) {
    if (epsilon <= 0) throw std::invalid_argument("ca_exponents: epsilon must be > 0");
    if (prime_limit < 2) throw std::invalid_argument("ca_exponents: prime_limit must be >= 2");
    PrimeTable table = sieve_primes(prime_limit);

    CAExponentVector v;
    v.epsilon = epsilon;
    v.log_n = Enc(kDefaultPrec);
    v.log_sigma_ratio = Enc(kDefaultPrec);
    mpz_class n = 1;
    bool materialize = true;

    // every critical value is below 1, so large epsilon admits no step at all
    bool any_possible = epsilon < 1;
    for (uint64_t p : table.primes) {
        if (!any_possible) break;
        unsigned a = 0;
        while (true) {
            int s = step_sign(p, a, epsilon);
            if (s == 0) {
                v.tie = true;
                break;
            }
            if (s < 0) break;
            ++a;
        }
        if (a == 0) break;  // critical values decrease with p; no later prime qualifies
        v.max_prime = p;
        if (a >= 2) v.high_exponents.emplace_back(p, a);
        Enc lp = Enc::exact_ui(p, kDefaultPrec).log();
        for (unsigned j = 0; j < a; ++j) {
            v.log_n = v.log_n.add(lp);
            v.log_sigma_ratio = v.log_sigma_ratio.add(Enc::from_mpq(step_ratio(p, j), kDefaultPrec).log());
        }
        if (materialize && v.log_n.hi_d() <= kCAMaterializeLogN) {
            mpz_class pe;
            mpz_ui_pow_ui(pe.get_mpz_t(), p, a);
            n *= pe;
        } else {
            materialize = false;
        }
    }

    if (v.max_prime == 0) {
        // no step is beneficial: the maximizer among integers >= 2 is n = 2
        v.max_prime = 2;
        v.log_n = Enc::exact_ui(2, kDefaultPrec).log();
        v.log_sigma_ratio = Enc::from_mpq(mpq_class(3, 2), kDefaultPrec).log();
        v.n = mpz_class(2);
        return v;
    }
    if (materialize) v.n = n;
    return v;
}

namespace {

struct Step {
    double key;
    uint64_t p;
    unsigned a;  // step raises exponent of p from a to a+1
    std::shared_ptr<mpq_class> r;
    std::shared_ptr<Enc> crit;
};

struct StepLess {
    bool operator()(const Step& x, const Step& y) const { return x.key < y.key; }
};

Step make_step(uint64_t p, unsigned a, mpfr_prec_t prec) {
    Step s;
    s.p = p;
    s.a = a;
    s.r = std::make_shared<mpq_class>(step_ratio(p, a));
    s.crit = std::make_shared<Enc>(crit_enc(p, *s.r, prec));
    s.key = s.crit->mid_d();
    return s;
}

Verdict3 crit_less(const Step& x, const Step& y) {
    return decide_with_escalation([&](mpfr_prec_t prec) {
        Enc cx = prec == kDefaultPrec ? *x.crit : crit_enc(x.p, *x.r, prec);
        Enc cy = prec == kDefaultPrec ? *y.crit : crit_enc(y.p, *y.r, prec);
        return lt(cx, cy);
    });
}

}  // namespace

std::vector<CAExponentVector> ca_sequence(double max_log_n) {
    if (!(max_log_n > 0)) throw std::invalid_argument("ca_sequence: max_log_n must be > 0");
    if (max_log_n > kCAMaxLogN) throw budget_error("ca_sequence: max_log_n exceeds budget");

    uint64_t bound = static_cast<uint64_t>(max_log_n * 1.3) + 100;
    PrimeTable table = sieve_primes(bound);

    std::priority_queue<Step, std::vector<Step>, StepLess> pq;
    size_t next_prime_idx = 0;
    pq.push(make_step(table.primes[0], 0, kDefaultPrec));

    CAExponentVector cur;
    cur.log_n = Enc(kDefaultPrec);
    cur.log_sigma_ratio = Enc(kDefaultPrec);
    mpz_class n_cur = 1;
    bool materialize = true;

    std::vector<CAExponentVector> seq;
    struct SideInfo {
        uint64_t p;
        mpq_class r;
        Enc crit;
    };
    std::vector<SideInfo> sides;

    auto apply_step = [&](const Step& s, bool tie_record) {
        Enc lp = Enc::exact_ui(s.p, kDefaultPrec).log();
        cur.log_n = cur.log_n.add(lp);
        cur.log_sigma_ratio = cur.log_sigma_ratio.add(Enc::from_mpq(*s.r, kDefaultPrec).log());
        unsigned new_exp = s.a + 1;
        if (s.a == 0) {
            cur.max_prime = std::max(cur.max_prime, s.p);
        } else if (new_exp == 2) {
            auto it = std::lower_bound(cur.high_exponents.begin(), cur.high_exponents.end(),
                                       std::make_pair(s.p, 0u));
            cur.high_exponents.insert(it, {s.p, 2u});
        } else {
            for (auto& [q, a] : cur.high_exponents)
                if (q == s.p) a = new_exp;
        }
        if (materialize && cur.log_n.hi_d() <= kCAMaterializeLogN)
            n_cur *= s.p;
        else
            materialize = false;

        CAExponentVector rec = cur;
        rec.n = materialize ? std::optional<mpz_class>(n_cur) : std::nullopt;
        rec.tie = tie_record;
        rec.delta_p = s.p;
        rec.delta_exp = new_exp;
        seq.push_back(std::move(rec));
        sides.push_back({s.p, *s.r, *s.crit});

        // successors: the next step of this prime, plus the first step of the
        // next unused prime when this one was new
        pq.push(make_step(s.p, new_exp, kDefaultPrec));
        if (s.a == 0) {
            ++next_prime_idx;
            if (next_prime_idx < table.primes.size())
                pq.push(make_step(table.primes[next_prime_idx], 0, kDefaultPrec));
        }
    };

    std::optional<SideInfo> refused;
    while (!pq.empty()) {
        Step top = pq.top();
        pq.pop();
        bool tie_pair = false;
        // certify that top really carries the largest critical value; double
        // keys are only a heap heuristic
        while (!pq.empty()) {
            Verdict3 v = crit_less(pq.top(), top);
            if (v.is_true()) break;
            if (v.is_undecided()) {
                tie_pair = true;
                break;
            }
            Step c = pq.top();  // misordered doubles: the other entry is larger
            pq.pop();
            pq.push(top);
            top = std::move(c);
        }
        Enc lp = Enc::exact_ui(top.p, kDefaultPrec).log();
        if (cur.log_n.add(lp).hi_d() > max_log_n) {
            refused = SideInfo{top.p, *top.r, *top.crit};
            break;
        }
        if (tie_pair) {
            Step other = pq.top();
            pq.pop();
            Step first = top.p <= other.p ? top : other;
            Step second = top.p <= other.p ? other : top;
            apply_step(first, true);
            Enc lp2 = Enc::exact_ui(second.p, kDefaultPrec).log();
            if (cur.log_n.add(lp2).hi_d() > max_log_n) {
                refused = SideInfo{second.p, *second.r, *second.crit};
                break;
            }
            apply_step(second, false);
        } else {
            apply_step(top, false);
        }
    }

    // assign to each record a rational epsilon strictly between its own
    // critical value and the next one down the sequence
    for (size_t i = 0; i < seq.size(); ++i) {
        const SideInfo& up = sides[i];
        const SideInfo* down = nullptr;
        if (i + 1 < seq.size())
            down = &sides[i + 1];
        else if (refused)
            down = &*refused;

        if (seq[i].tie) {
            seq[i].epsilon = mpq_class(up.crit.mid_d());
            seq[i].epsilon.canonicalize();
            continue;
        }
        double lo_d = down ? down->crit.hi_d() : 0.0;
        double mid = (up.crit.lo_d() + lo_d) / 2.0;
        mpq_class eps(mid);
        eps.canonicalize();
        Verdict3 below = decide_with_escalation([&](mpfr_prec_t prec) {
            return lt(eps, crit_enc(up.p, up.r, prec));
        });
        Verdict3 above = down ? decide_with_escalation([&](mpfr_prec_t prec) {
            return lt(crit_enc(down->p, down->r, prec), eps);
        })
                              : (eps > 0 ? Verdict3::yes() : Verdict3::no());
        if (below.is_true() && above.is_true())
            seq[i].epsilon = eps;
        else
            seq[i].tie = true;  // could not certify a separating rational
    }
    return seq;
}

Verdict robin_check_ca(const CAExponentVector& v) {
    mpfr_prec_t prec = v.log_n.prec();
    if (mpfr_cmp_ui(v.log_n.hi_raw(), 1) <= 0)
        return Verdict{Status::INAPPLICABLE, std::nullopt, prec};
    if (mpfr_cmp_ui(v.log_n.lo_raw(), 1) <= 0)
        return Verdict{Status::UNDECIDED, std::nullopt, prec};  // enclosure straddles log n = 1

    Enc loglog = v.log_n.log();
    Enc rhs = euler_gamma(prec).add(loglog.log());
    Enc margin = rhs.sub(v.log_sigma_ratio);
    if (margin.strictly_positive()) return Verdict{Status::HOLDS, margin, prec};
    if (mpfr_sgn(margin.hi_raw()) <= 0) return Verdict{Status::FAILS, margin, prec};
    return Verdict{Status::UNDECIDED, margin, prec};
}

DeductionRecord robin_interval_deduction(const CAExponentVector& v1, const CAExponentVector& v2) {
    if (!lt(v1.log_n, v2.log_n).is_true())
        throw std::invalid_argument("interval deduction: records must be strictly increasing");
    if (robin_check_ca(v1).status != Status::HOLDS || robin_check_ca(v2).status != Status::HOLDS)
        throw std::invalid_argument("interval deduction: both endpoints must be HOLDS");
    DeductionRecord d;
    d.log_n1 = v1.log_n;
    d.log_n2 = v2.log_n;
    d.n1 = v1.n;
    d.n2 = v2.n;
    d.statement =
        "sigma(n)/n < e^gamma log log n for every integer n in [n1, n2]: both endpoints are "
        "consecutive colossally abundant records satisfying the inequality, and the interval "
        "deduction rule extends it to all integers between them";
    return d;
}

std::vector<DeductionRecord> deduction_chain(const std::vector<CAExponentVector>& seq) {
    std::vector<DeductionRecord> out;
    for (size_t i = 0; i + 1 < seq.size(); ++i) {
        if (robin_check_ca(seq[i]).status == Status::HOLDS &&
            robin_check_ca(seq[i + 1]).status == Status::HOLDS)
            out.push_back(robin_interval_deduction(seq[i], seq[i + 1]));
    }
    return out;
}

}  // namespace robin
