#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "robin/arith.hpp"
#include "robin/enclosure.hpp"

namespace robin {

// The family of Robin-type upper bounds on sigma(n)/n that this library can
// check. Each is of the form sigma(n)/n < rhs(n) with rhs built from
// log log n and a small set of exact rational constants.
enum class Ineq {
    ROBIN,         // e^gamma * loglog n
    ROBIN_C0,      // e^gamma * loglog n * (1 + 0.6483/loglog^2 n)
    AXLER_CUBIC,   // e^gamma * loglog n * (1 + 0.0094243/loglog^3 n)
    OLD_CUBIC,     // e^gamma * loglog n * (1 + 0.1209/loglog^3 n)
    IVIC,          // 2.59 * loglog n
    HERTLEIN_EPS,  // (1 + 5.645e-7) * e^gamma * loglog n
    AXLER_EPS,     // (1 + 3.15367e-7) * e^gamma * loglog n
};

struct InequalitySpec {
    Ineq id;
    // named exact constants; enclosures are derived from these at whatever
    // working precision a check runs at
    std::map<std::string, mpq_class> constants;

    static InequalitySpec make(Ineq id);
    // rhs(n) given an enclosure of loglog n
    Enc rhs(const Enc& loglog, mpfr_prec_t prec) const;
    // cheap double approximation of rhs used by the scan filter; accurate to
    // a few ulp, never relied on for verdicts
    double rhs_d(double loglog) const;
};

Ineq ineq_from_string(const std::string& s);
std::string ineq_to_string(Ineq id);

enum class Status { HOLDS, FAILS, INAPPLICABLE, UNDECIDED };

std::string status_to_string(Status s);

struct Verdict {
    Status status;
    std::optional<Enc> margin;  // rhs - sigma(n)/n; absent for INAPPLICABLE
    mpfr_prec_t precision = kDefaultPrec;  // precision at which it was settled
};

struct ScanConfig {
    mpfr_prec_t precision = kDefaultPrec;
    uint64_t segment_size = uint64_t{1} << 22;
    unsigned workers = 0;  // 0 = logical cores
};

struct VerificationReport {
    Ineq id;
    uint64_t lo = 0, hi = 0;
    std::vector<uint64_t> violations;
    std::vector<uint64_t> inapplicable;
    std::vector<uint64_t> undecided;
    uint64_t holds_count = 0;
    double wall_time_ms = 0.0;
    ScanConfig config;
};

Verdict check_one(uint64_t n, const InequalitySpec& spec, mpfr_prec_t prec = kDefaultPrec);

// Two-phase segmented scan of [lo, hi): hardware-float filter with relative
// slack 1e-9, then rigorous enclosure recheck of every near-violation.
// Deterministic for fixed config and independent of worker count.
VerificationReport scan_range(uint64_t lo, uint64_t hi, const InequalitySpec& spec,
                              const ScanConfig& config = {});

// All n <= limit whose verdict is FAILS or INAPPLICABLE (n in {1, 2} count as
// exceptions by convention).
std::vector<uint64_t> exception_set(uint64_t limit, const InequalitySpec& spec,
                                    const ScanConfig& config = {});

constexpr uint64_t kExceptionSetMaxLimit = 10000000;

// Valuation-family classification: for each prime rule "nu_p(n) <= bound"
// report whether n satisfies it. The band 139 < p <= 1777 is stated with
// "= 1" in one source; both readings are exposed without guessing intent.
struct ValuationConditions {
    struct Rule {
        uint64_t p;
        unsigned bound;
        unsigned nu;
        bool satisfied;
    };
    std::vector<Rule> rules;         // 2 -> 20, 5 -> 8, (11,19] -> 4, (19,41] -> 3,
                                     // (41,139] -> 2, (139,1777] -> 1, read as "<="
    std::vector<Rule> last_band_eq;  // (139,1777] under the strict "= 1" reading
    std::vector<Rule> hertlein;      // nu2<=19, nu3<=12, nu5<=7, nu7<=6, nu11<=5
    bool any_le = false;             // some rule satisfied under the "<=" reading
    bool any_eq = false;             // same, with the last band read as "= 1"
    bool any_hertlein = false;
};

ValuationConditions valuation_class(const Factorization& f);

}  // namespace robin
