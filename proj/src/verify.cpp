#include "robin/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace robin {

InequalitySpec InequalitySpec::make(Ineq id) {
    InequalitySpec s;
    s.id = id;
    switch (id) {
        case Ineq::ROBIN:
            break;
        case Ineq::ROBIN_C0:
            s.constants["c"] = mpq_class(6483, 10000);
            break;
        case Ineq::AXLER_CUBIC:
            s.constants["c"] = mpq_class(94243, 10000000);
            break;
        case Ineq::OLD_CUBIC:
            s.constants["c"] = mpq_class(1209, 10000);
            break;
        case Ineq::IVIC:
            s.constants["factor"] = mpq_class(259, 100);
            break;
        case Ineq::HERTLEIN_EPS:
            s.constants["eps"] = mpq_class("5645/10000000000");
            break;
        case Ineq::AXLER_EPS:
            s.constants["eps"] = mpq_class("315367/1000000000000");
            break;
    }
    return s;
}

Enc InequalitySpec::rhs(const Enc& loglog, mpfr_prec_t prec) const {
    switch (id) {
        case Ineq::ROBIN:
            return exp_gamma(prec).mul(loglog);
        case Ineq::ROBIN_C0: {
            Enc corr = Enc::from_mpq(constants.at("c"), prec).div(loglog.pow_ui(2));
            return exp_gamma(prec).mul(loglog).mul(Enc::exact_ui(1, prec).add(corr));
        }
        case Ineq::AXLER_CUBIC:
        case Ineq::OLD_CUBIC: {
            Enc corr = Enc::from_mpq(constants.at("c"), prec).div(loglog.pow_ui(3));
            return exp_gamma(prec).mul(loglog).mul(Enc::exact_ui(1, prec).add(corr));
        }
        case Ineq::IVIC:
            return Enc::from_mpq(constants.at("factor"), prec).mul(loglog);
        case Ineq::HERTLEIN_EPS:
        case Ineq::AXLER_EPS: {
            mpq_class f = mpq_class(1) + constants.at("eps");
            return Enc::from_mpq(f, prec).mul(exp_gamma(prec)).mul(loglog);
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

double exp_gamma_d() {
    static const double v = exp_gamma(64).mid_d();
    return v;
}

}  // namespace

double InequalitySpec::rhs_d(double ll) const {
    switch (id) {
        case Ineq::ROBIN:
            return exp_gamma_d() * ll;
        case Ineq::ROBIN_C0:
            return exp_gamma_d() * ll * (1.0 + constants.at("c").get_d() / (ll * ll));
        case Ineq::AXLER_CUBIC:
        case Ineq::OLD_CUBIC:
            return exp_gamma_d() * ll * (1.0 + constants.at("c").get_d() / (ll * ll * ll));
        case Ineq::IVIC:
            return constants.at("factor").get_d() * ll;
        case Ineq::HERTLEIN_EPS:
        case Ineq::AXLER_EPS:
            return (1.0 + constants.at("eps").get_d()) * exp_gamma_d() * ll;
    }
    return 0.0;
}

Ineq ineq_from_string(const std::string& s) {
    if (s == "robin") return Ineq::ROBIN;
    if (s == "robin-c0") return Ineq::ROBIN_C0;
    if (s == "axler-cubic") return Ineq::AXLER_CUBIC;
    if (s == "old-cubic") return Ineq::OLD_CUBIC;
    if (s == "ivic") return Ineq::IVIC;
    if (s == "hertlein-eps") return Ineq::HERTLEIN_EPS;
    if (s == "axler-eps") return Ineq::AXLER_EPS;
    throw std::invalid_argument("unknown inequality id: " + s);
}

std::string ineq_to_string(Ineq id) {
    switch (id) {
        case Ineq::ROBIN: return "robin";
        case Ineq::ROBIN_C0: return "robin-c0";
        case Ineq::AXLER_CUBIC: return "axler-cubic";
        case Ineq::OLD_CUBIC: return "old-cubic";
        case Ineq::IVIC: return "ivic";
        case Ineq::HERTLEIN_EPS: return "hertlein-eps";
        case Ineq::AXLER_EPS: return "axler-eps";
    }
    return "?";
}

std::string status_to_string(Status s) {
    switch (s) {
        case Status::HOLDS: return "HOLDS";
        case Status::FAILS: return "FAILS";
        case Status::INAPPLICABLE: return "INAPPLICABLE";
        case Status::UNDECIDED: return "UNDECIDED";
    }
    return "?";
}

Verdict check_one(uint64_t n, const InequalitySpec& spec, mpfr_prec_t prec) {
    if (n < 1) throw std::invalid_argument("check_one: n must be >= 1");
    if (n <= 2) return Verdict{Status::INAPPLICABLE, std::nullopt, prec};

    Factorization f = factorize(n);
    mpq_class s(sigma(f), mpz_class(n));
    s.canonicalize();

    for (mpfr_prec_t p = prec;; p *= 2) {
        if (p > kPrecCap) p = kPrecCap;
        Enc loglog = Enc::exact_ui(n, p).log().log();
        Enc margin = spec.rhs(loglog, p).sub(Enc::from_mpq(s, p));
        if (margin.strictly_positive()) return Verdict{Status::HOLDS, margin, p};
        if (mpfr_sgn(margin.hi_raw()) <= 0) return Verdict{Status::FAILS, margin, p};
        if (p >= kPrecCap) return Verdict{Status::UNDECIDED, margin, p};
    }
}

namespace {

struct SegResult {
    std::vector<uint64_t> violations;
    std::vector<uint64_t> undecided;
    uint64_t holds = 0;
};

void scan_segment(uint64_t L, uint64_t R, const InequalitySpec& spec, mpfr_prec_t prec,
                  std::vector<uint64_t>& buf, SegResult& out) {
    sigma_fill_segment(L, R, buf);
    for (uint64_t n = L; n < R; ++n) {
        double ll = std::log(std::log(static_cast<double>(n)));
        double rhs = spec.rhs_d(ll) * static_cast<double>(n);
        double sig = static_cast<double>(buf[n - L]);
        if (sig < rhs * (1.0 - 1e-9)) {
            ++out.holds;
            continue;
        }
        Verdict v = check_one(n, spec, prec);
        switch (v.status) {
            case Status::HOLDS: ++out.holds; break;
            case Status::FAILS: out.violations.push_back(n); break;
            case Status::UNDECIDED: out.undecided.push_back(n); break;
            case Status::INAPPLICABLE: break;  // unreachable: L >= 3
        }
    }
}

}  // namespace

VerificationReport scan_range(uint64_t lo, uint64_t hi, const InequalitySpec& spec,
                              const ScanConfig& config) {
    if (lo < 3 || lo >= hi) throw std::invalid_argument("scan_range: need 3 <= lo < hi");
    if (hi > uint64_t{10000000000}) throw budget_error("scan_range: range exceeds budget");
    if (config.segment_size < 1024) throw std::invalid_argument("scan_range: segment_size too small");

    auto t0 = std::chrono::steady_clock::now();
    uint64_t seg = config.segment_size;
    uint64_t m = (hi - lo + seg - 1) / seg;
    unsigned workers = config.workers ? config.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<uint64_t>(workers, m));

    std::vector<SegResult> results(m);
    std::atomic<uint64_t> next{0};
    auto work = [&]() {
        std::vector<uint64_t> buf;
        for (;;) {
            uint64_t i = next.fetch_add(1);
            if (i >= m) break;
            uint64_t L = lo + i * seg;
            uint64_t R = std::min(hi, L + seg);
            scan_segment(L, R, spec, config.precision, buf, results[i]);
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    VerificationReport rep;
    rep.id = spec.id;
    rep.lo = lo;
    rep.hi = hi;
    rep.config = config;
    rep.config.workers = workers;
    for (auto& r : results) {
        rep.violations.insert(rep.violations.end(), r.violations.begin(), r.violations.end());
        rep.undecided.insert(rep.undecided.end(), r.undecided.begin(), r.undecided.end());
        rep.holds_count += r.holds;
    }
    rep.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::vector<uint64_t> exception_set(uint64_t limit, const InequalitySpec& spec,
                                    const ScanConfig& config) {
    if (limit > kExceptionSetMaxLimit) throw budget_error("exception_set: limit exceeds budget");
    std::vector<uint64_t> out;
    if (limit >= 1) out.push_back(1);
    if (limit >= 2) out.push_back(2);
    if (limit >= 3) {
        VerificationReport rep = scan_range(3, limit + 1, spec, config);
        out.insert(out.end(), rep.violations.begin(), rep.violations.end());
    }
    return out;
}

ValuationConditions valuation_class(const Factorization& f) {
    static const PrimeTable table = sieve_primes(1777);

    auto nu_of = [&](uint64_t p) -> unsigned {
        for (const auto& fe : f.factors)
            if (fe.p == p) return fe.e;
        return 0;
    };
    auto band_bound = [](uint64_t p) -> int {
        if (p == 2) return 20;
        if (p == 5) return 8;
        if (p > 11 && p <= 19) return 4;
        if (p > 19 && p <= 41) return 3;
        if (p > 41 && p <= 139) return 2;
        if (p > 139 && p <= 1777) return 1;
        return -1;  // not part of the family
    };

    ValuationConditions vc;
    for (uint64_t p : table.primes) {
        int b = band_bound(p);
        if (b < 0) continue;
        unsigned n_p = nu_of(p);
        bool sat = n_p <= static_cast<unsigned>(b);
        vc.rules.push_back({p, static_cast<unsigned>(b), n_p, sat});
        bool in_last_band = p > 139;
        if (in_last_band) {
            bool sat_eq = (n_p == 1);
            vc.last_band_eq.push_back({p, 1, n_p, sat_eq});
            vc.any_eq = vc.any_eq || sat_eq;
        } else {
            vc.any_le = vc.any_le || sat;
            vc.any_eq = vc.any_eq || sat;
        }
        vc.any_le = vc.any_le || sat;
    }
    static const std::pair<uint64_t, unsigned> hertlein_rules[] = {
        {2, 19}, {3, 12}, {5, 7}, {7, 6}, {11, 5}};
    for (auto [p, b] : hertlein_rules) {
        unsigned n_p = nu_of(p);
        bool sat = n_p <= b;
        vc.hertlein.push_back({p, b, n_p, sat});
        vc.any_hertlein = vc.any_hertlein || sat;
    }
    return vc;
}

}  // namespace robin
