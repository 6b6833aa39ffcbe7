#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "robin/arith.hpp"
#include "robin/enclosure.hpp"

namespace robin {

// Exact-rational constants feeding the certificate chains. All are stored as
// rationals so conversion to enclosures at any precision loses nothing.
struct CertificateParams {
    mpq_class a0{94243, 10000000};          // cubic correction constant 0.0094243
    mpq_class c_theta{33277, 100000000};    // theta lower-bound constant 3.3277e-4
    mpq_class c_mertens{24334, 1000000};    // Mertens-product constant 0.024334
    mpq_class mertens_inner{15, 4};         // inner factor of the Mertens bound
    unsigned t = 21;                        // Psi index of the headline chain
    uint64_t k0 = 999999476056ULL;          // index of the anchoring primorial
    uint64_t p_k0 = 29996208012611ULL;      // its largest prime factor
    uint64_t p_alt = 29996161880813ULL;     // alternate 14-digit prime used in one proof
    mpq_class eps{"315367/1000000000000"}; // epsilon threshold 3.15367e-7
    // theta(x) < x for x <= 1e19; a literature fact, not re-derived here.
    // Toggling it off drops the upper half of the log log N_k0 bracket.
    bool theta_upper_assumption = true;

    static CertificateParams defaults() { return CertificateParams{}; }
};

struct CertStep {
    std::string description;
    std::optional<Enc> value;
    Verdict3 verdict;
};

struct CertificateReport {
    std::string id;
    std::vector<CertStep> steps;   // gating: overall is TRUE only if all are TRUE
    std::vector<CertStep> notes;   // informational rows, never gate the verdict
    Verdict3 overall;
    mpfr_prec_t precision = kDefaultPrec;  // highest precision used
    // (p, largest certified exponent) rows; only the valuation-cutoff
    // certificate fills this
    std::vector<std::pair<uint64_t, unsigned>> cutoff_table;
};

// Certifies that the closed-form upper bound on e^-gamma * R_t(N_k), k >= k0,
// is strictly below 1, at the headline scale t = 21, p = p_k0.
// CLI id: thm102.
CertificateReport cert_primorial_ratio(const CertificateParams& params = CertificateParams::defaults(),
                                       mpfr_prec_t prec = kDefaultPrec);

// Same chain evaluated at arbitrary (t, p_k); used to cross-check the
// machinery at small scales against direct primorial-ratio computation.
CertificateReport cert_primorial_ratio_at(unsigned t, uint64_t p_k, const CertificateParams& params,
                                          mpfr_prec_t prec = kDefaultPrec);

// Certifies the growth inequality that pushes the cubic-corrected bound from
// p_k0 to all larger primorials: cube-root domain check plus the pointwise
// inequality at both stored 14-digit primes. Sample-point re-evaluations are
// reported as notes. CLI id: thm103.
CertificateReport cert_growth_chain(const CertificateParams& params = CertificateParams::defaults(),
                                    mpfr_prec_t prec = kDefaultPrec);

// Recomputes the per-prime exponent cutoffs m*(p) = max { m : a0*(p^(m+1)-1)
// < (log log N_k0)^3 } for p <= 2000, checks them against the expected band
// table, and certifies that the band-boundary primes fail the next exponent.
// CLI id: thm104.
CertificateReport cert_valuation_cutoffs(const CertificateParams& params = CertificateParams::defaults(),
                                         mpfr_prec_t prec = kDefaultPrec);

// Brackets eps* = a0/(log log N_k0)^3 between the theta lower bound and the
// theta(x) < x assumption, then reports the three-valued verdict of
// eps* <= eps. CLI id: cor104.
CertificateReport cert_epsilon_threshold(const CertificateParams& params = CertificateParams::defaults(),
                                         mpfr_prec_t prec = kDefaultPrec);

}  // namespace robin
