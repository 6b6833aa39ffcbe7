#include "robin/enclosure.hpp"

#include <algorithm>
#include <cmath>

namespace robin {

Enc::Enc(mpfr_prec_t prec) : prec_(prec) {
    if (prec < 16) throw std::invalid_argument("precision below 16 bits");
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Enc::Enc(const Enc& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Enc::Enc(Enc&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Enc& Enc::operator=(const Enc& o) {
    if (this == &o) return *this;
    mpfr_set_prec(lo_, o.prec_);
    mpfr_set_prec(hi_, o.prec_);
    prec_ = o.prec_;
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
    return *this;
}

Enc& Enc::operator=(Enc&& o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(prec_, o.prec_);
    return *this;
}

Enc::~Enc() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Enc Enc::exact_ui(unsigned long v, mpfr_prec_t prec) {
    Enc r(prec);
    mpfr_set_ui(r.lo_, v, MPFR_RNDD);
    mpfr_set_ui(r.hi_, v, MPFR_RNDU);
    return r;
}

Enc Enc::exact_si(long v, mpfr_prec_t prec) {
    Enc r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

Enc Enc::from_mpz(const mpz_class& z, mpfr_prec_t prec) {
    Enc r(prec);
    mpfr_set_z(r.lo_, z.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, z.get_mpz_t(), MPFR_RNDU);
    return r;
}

Enc Enc::from_mpq(const mpq_class& q, mpfr_prec_t prec) {
    Enc r(prec);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
}

Enc Enc::from_decimal(const std::string& s, mpfr_prec_t prec) {
    Enc r(prec);
    if (mpfr_set_str(r.lo_, s.c_str(), 10, MPFR_RNDD) != 0)
        throw std::invalid_argument("bad decimal literal: " + s);
    mpfr_set_str(r.hi_, s.c_str(), 10, MPFR_RNDU);
    return r;
}

Enc Enc::hull(const Enc& a, const Enc& b) {
    Enc r(std::max(a.prec_, b.prec_));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Enc Enc::add(const Enc& o) const {
    Enc r(std::max(prec_, o.prec_));
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

Enc Enc::sub(const Enc& o) const {
    Enc r(std::max(prec_, o.prec_));
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

// interval multiplication takes min/max over the four endpoint products
Enc Enc::mul(const Enc& o) const {
    Enc r(std::max(prec_, o.prec_));
    mpfr_t c[4];
    for (auto& m : c) mpfr_init2(m, r.prec_);
    mpfr_mul(c[0], lo_, o.lo_, MPFR_RNDD);
    mpfr_mul(c[1], lo_, o.hi_, MPFR_RNDD);
    mpfr_mul(c[2], hi_, o.lo_, MPFR_RNDD);
    mpfr_mul(c[3], hi_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, c[0], c[1], MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, c[2], MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, c[3], MPFR_RNDD);
    mpfr_mul(c[0], lo_, o.lo_, MPFR_RNDU);
    mpfr_mul(c[1], lo_, o.hi_, MPFR_RNDU);
    mpfr_mul(c[2], hi_, o.lo_, MPFR_RNDU);
    mpfr_mul(c[3], hi_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, c[0], c[1], MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, c[2], MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, c[3], MPFR_RNDU);
    for (auto& m : c) mpfr_clear(m);
    return r;
}

Enc Enc::div(const Enc& o) const {
    if (o.contains_zero()) throw std::domain_error("division by interval containing zero");
    return mul(o.recip());
}

Enc Enc::neg() const {
    Enc r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Enc Enc::abs() const {
    if (!contains_zero()) return mpfr_sgn(lo_) > 0 ? *this : neg();
    Enc r(prec_);
    mpfr_set_zero(r.lo_, 1);
    mpfr_t t;
    mpfr_init2(t, prec_);
    mpfr_neg(t, lo_, MPFR_RNDU);
    mpfr_max(r.hi_, t, hi_, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

Enc Enc::pow_ui(unsigned long e) const {
    if (e == 0) return exact_ui(1, prec_);
    Enc r(prec_);
    if (mpfr_sgn(lo_) >= 0 || e % 2 == 1) {
        mpfr_pow_ui(r.lo_, lo_, e, MPFR_RNDD);
        mpfr_pow_ui(r.hi_, hi_, e, MPFR_RNDU);
        if (mpfr_cmp(r.lo_, r.hi_) > 0) mpfr_swap(r.lo_, r.hi_);
        return r;
    }
    // even power of an interval with negative part: reduce via |x|
    return abs().pow_ui(e);
}

Enc Enc::recip() const {
    if (contains_zero()) throw std::domain_error("reciprocal of interval containing zero");
    Enc r(prec_);
    mpfr_ui_div(r.lo_, 1, hi_, MPFR_RNDD);
    mpfr_ui_div(r.hi_, 1, lo_, MPFR_RNDU);
    return r;
}

Enc Enc::exp() const {
    Enc r(prec_);
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Enc Enc::log() const {
    if (mpfr_sgn(lo_) <= 0) throw std::domain_error("log of interval reaching <= 0");
    Enc r(prec_);
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Enc Enc::cbrt() const {
    Enc r(prec_);
    mpfr_cbrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_cbrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Enc Enc::sqrt() const {
    if (mpfr_sgn(lo_) < 0) throw std::domain_error("sqrt of interval reaching < 0");
    Enc r(prec_);
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

bool Enc::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Enc::strictly_positive() const { return mpfr_sgn(lo_) > 0; }

bool Enc::intersects(const Enc& o) const {
    return mpfr_cmp(lo_, o.hi_) <= 0 && mpfr_cmp(o.lo_, hi_) <= 0;
}

bool Enc::contains(const mpq_class& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

double Enc::lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Enc::hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Enc::width_d() const {
    mpfr_t w;
    mpfr_init2(w, prec_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

double Enc::mid_d() const { return 0.5 * (lo_d() + hi_d()); }

namespace {

std::string mpfr_to_decimal(const mpfr_t& v, mpfr_rnd_t rnd, mpfr_prec_t prec, size_t digits) {
    if (digits == 0) digits = static_cast<size_t>(prec * 0.30103) + 3;
    char* s = nullptr;
    // %.*R*e keeps the string losslessly re-parseable at the same precision
    mpfr_asprintf(&s, rnd == MPFR_RNDD ? "%.*RDe" : "%.*RUe", static_cast<int>(digits), v);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

}  // namespace

std::string Enc::lo_str(size_t digits) const { return mpfr_to_decimal(lo_, MPFR_RNDD, prec_, digits); }
std::string Enc::hi_str(size_t digits) const { return mpfr_to_decimal(hi_, MPFR_RNDU, prec_, digits); }

const char* Verdict3::str() const {
    switch (value) {
        case Truth::True: return "TRUE";
        case Truth::False: return "FALSE";
        default: return "UNDECIDED";
    }
}

namespace {

double straddle_width(const Enc& a, const Enc& b) {
    // width of the difference b - a, as a rough closeness indicator
    return a.width_d() + b.width_d() + std::abs(b.mid_d() - a.mid_d());
}

}  // namespace

Verdict3 lt(const Enc& a, const Enc& b) {
    if (mpfr_cmp(a.hi_raw(), b.lo_raw()) < 0) return Verdict3::yes();
    if (mpfr_cmp(a.lo_raw(), b.hi_raw()) >= 0) return Verdict3::no();
    return Verdict3::undecided(straddle_width(a, b));
}

Verdict3 le(const Enc& a, const Enc& b) {
    if (mpfr_cmp(a.hi_raw(), b.lo_raw()) <= 0) return Verdict3::yes();
    if (mpfr_cmp(a.lo_raw(), b.hi_raw()) > 0) return Verdict3::no();
    return Verdict3::undecided(straddle_width(a, b));
}

Verdict3 lt(const mpq_class& q, const Enc& x) {
    if (mpfr_cmp_q(x.lo_raw(), q.get_mpq_t()) > 0) return Verdict3::yes();
    if (mpfr_cmp_q(x.hi_raw(), q.get_mpq_t()) <= 0) return Verdict3::no();
    return Verdict3::undecided(x.width_d());
}

Verdict3 le(const mpq_class& q, const Enc& x) {
    if (mpfr_cmp_q(x.lo_raw(), q.get_mpq_t()) >= 0) return Verdict3::yes();
    if (mpfr_cmp_q(x.hi_raw(), q.get_mpq_t()) < 0) return Verdict3::no();
    return Verdict3::undecided(x.width_d());
}

Verdict3 lt(const Enc& x, const mpq_class& q) {
    if (mpfr_cmp_q(x.hi_raw(), q.get_mpq_t()) < 0) return Verdict3::yes();
    if (mpfr_cmp_q(x.lo_raw(), q.get_mpq_t()) >= 0) return Verdict3::no();
    return Verdict3::undecided(x.width_d());
}

Verdict3 le(const Enc& x, const mpq_class& q) {
    if (mpfr_cmp_q(x.hi_raw(), q.get_mpq_t()) <= 0) return Verdict3::yes();
    if (mpfr_cmp_q(x.lo_raw(), q.get_mpq_t()) > 0) return Verdict3::no();
    return Verdict3::undecided(x.width_d());
}

}  // namespace robin
