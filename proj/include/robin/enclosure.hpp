#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace robin {

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Directed-rounded interval. The represented real value is guaranteed to lie
// in [lo, hi]; every operation rounds lo down and hi up, so containment is
// preserved through arbitrary expression trees.
class Enc {
  public:
    explicit Enc(mpfr_prec_t prec = 128);
    Enc(const Enc& o);
    Enc(Enc&& o) noexcept;
    Enc& operator=(const Enc& o);
    Enc& operator=(Enc&& o) noexcept;
    ~Enc();

    static Enc exact_ui(unsigned long v, mpfr_prec_t prec = 128);
    static Enc exact_si(long v, mpfr_prec_t prec = 128);
    static Enc from_mpz(const mpz_class& z, mpfr_prec_t prec = 128);
    static Enc from_mpq(const mpq_class& q, mpfr_prec_t prec = 128);
    // outward bracket of a decimal literal such as "0.0094243" or "3.3277e-4"
    static Enc from_decimal(const std::string& s, mpfr_prec_t prec = 128);
    // hull of two enclosures (union bounds)
    static Enc hull(const Enc& a, const Enc& b);

    mpfr_prec_t prec() const { return prec_; }

    Enc add(const Enc& o) const;
    Enc sub(const Enc& o) const;
    Enc mul(const Enc& o) const;
    Enc div(const Enc& o) const;  // requires 0 not in o
    Enc neg() const;
    Enc abs() const;
    Enc pow_ui(unsigned long e) const;
    Enc recip() const;            // requires 0 not in *this
    Enc exp() const;
    Enc log() const;              // requires lo > 0
    Enc cbrt() const;
    Enc sqrt() const;             // requires lo >= 0

    bool contains_zero() const;
    bool strictly_positive() const;  // lo > 0
    // true result definitely inside [a,b] of the other enclosure
    bool intersects(const Enc& o) const;
    bool contains(const mpq_class& q) const;

    double lo_d() const;  // rounded down
    double hi_d() const;  // rounded up
    double width_d() const;
    double mid_d() const;

    // decimal endpoint strings, rounded outward; digits 0 = full precision
    std::string lo_str(size_t digits = 0) const;
    std::string hi_str(size_t digits = 0) const;

    // raw access for the few routines that need mpfr directly
    const mpfr_t& lo_raw() const { return lo_; }
    const mpfr_t& hi_raw() const { return hi_; }
    mpfr_t& lo_mut() { return lo_; }
    mpfr_t& hi_mut() { return hi_; }

  private:
    mpfr_prec_t prec_;
    mpfr_t lo_;
    mpfr_t hi_;
};

// three-valued comparison outcome; UNDECIDED carries the width of the
// straddling difference so callers can report how close the call was
enum class Truth { True, False, Undecided };

struct Verdict3 {
    Truth value = Truth::Undecided;
    double width = 0.0;

    static Verdict3 yes() { return {Truth::True, 0.0}; }
    static Verdict3 no() { return {Truth::False, 0.0}; }
    static Verdict3 undecided(double w) { return {Truth::Undecided, w}; }
    bool is_true() const { return value == Truth::True; }
    bool is_false() const { return value == Truth::False; }
    bool is_undecided() const { return value == Truth::Undecided; }
    const char* str() const;
};

// verdicts for strict/non-strict order between enclosures and exact rationals
Verdict3 lt(const Enc& a, const Enc& b);   // a < b
Verdict3 le(const Enc& a, const Enc& b);   // a <= b
Verdict3 lt(const mpq_class& q, const Enc& x);
Verdict3 le(const mpq_class& q, const Enc& x);
Verdict3 lt(const Enc& x, const mpq_class& q);
Verdict3 le(const Enc& x, const mpq_class& q);

constexpr mpfr_prec_t kDefaultPrec = 128;
constexpr mpfr_prec_t kPrecCap = 1024;

// rigorous constants (memoized per precision)
Enc euler_gamma(mpfr_prec_t prec);
Enc exp_gamma(mpfr_prec_t prec);
Enc zeta_int(unsigned t, mpfr_prec_t prec);

// upper enclosure [1, U] of the prime product over p > x of (1 - p^-t)^-1,
// U = exp(t / ((t-1) * floor(x.lo)^(t-1)))
Enc tail_product_upper(unsigned t, const Enc& x);

// re-evaluate f at doubling precision until the verdict is decided or the cap
// is reached; F is callable as Verdict3(mpfr_prec_t)
template <typename F>
Verdict3 decide_with_escalation(F&& f, mpfr_prec_t start = kDefaultPrec,
                                mpfr_prec_t cap = kPrecCap) {
    mpfr_prec_t p = start;
    for (;;) {
        Verdict3 v = f(p);
        if (!v.is_undecided() || p >= cap) return v;
        p = p * 2 > cap ? cap : p * 2;
    }
}

}  // namespace robin
