#include "cubiclab/interval.hpp"

#include <cstring>
#include <sstream>
#include <stdexcept>

namespace cubiclab {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, 2);
    mpfr_init2(hi_, 2);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
    if (this != &o) {
        mpfr_set_prec(lo_, o.prec_);
        mpfr_set_prec(hi_, o.prec_);
        prec_ = o.prec_;
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(prec_, o.prec_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::exact(long v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

Interval Interval::from_int(const Int& v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
    return r;
}

Interval Interval::from_rat(const Rat& v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::from_endpoints(const Rat& lo, const Rat& hi, mpfr_prec_t prec) {
    if (lo > hi) throw std::domain_error("Interval::from_endpoints: lo > hi");
    Interval r(prec);
    mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::pi(mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::operator+(const Interval& o) const {
    Interval r(std::max(prec_, o.prec_));
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-(const Interval& o) const {
    Interval r(std::max(prec_, o.prec_));
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-() const {
    Interval r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator*(const Interval& o) const {
    Interval r(std::max(prec_, o.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    mpfr_srcptr a[2] = {lo_, hi_}, b[2] = {o.lo_, o.hi_};
    bool first = true;
    for (int i = 0; i < 2; i++)
        for (int j = 0; j < 2; j++) {
            mpfr_mul(t, a[i], b[j], MPFR_RNDD);
            if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_mul(t, a[i], b[j], MPFR_RNDU);
            if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

Interval Interval::operator/(const Interval& o) const {
    if (o.contains_zero()) throw std::domain_error("Interval division by interval containing 0");
    Interval r(std::max(prec_, o.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    mpfr_srcptr a[2] = {lo_, hi_}, b[2] = {o.lo_, o.hi_};
    bool first = true;
    for (int i = 0; i < 2; i++)
        for (int j = 0; j < 2; j++) {
            mpfr_div(t, a[i], b[j], MPFR_RNDD);
            if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_div(t, a[i], b[j], MPFR_RNDU);
            if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

Interval Interval::sqrt() const {
    if (mpfr_sgn(lo_) < 0) throw std::domain_error("Interval::sqrt of negative interval");
    Interval r(prec_);
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::log() const {
    if (mpfr_sgn(lo_) <= 0) throw std::domain_error("Interval::log needs a positive interval");
    Interval r(prec_);
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::exp() const {
    Interval r(prec_);
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::abs() const {
    Interval r(prec_);
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) return -*this;
    mpfr_set_zero(r.lo_, 1);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    if (mpfr_cmp(hi_, r.hi_) > 0) mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::sqr() const {
    Interval a = abs();
    Interval r(prec_);
    mpfr_mul(r.lo_, a.lo_, a.lo_, MPFR_RNDD);
    mpfr_mul(r.hi_, a.hi_, a.hi_, MPFR_RNDU);
    return r;
}

bool Interval::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Interval::is_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::is_negative() const { return mpfr_sgn(hi_) < 0; }

bool Interval::certainly_lt(const Interval& o) const { return mpfr_cmp(hi_, o.lo_) < 0; }
bool Interval::certainly_gt(const Interval& o) const { return mpfr_cmp(lo_, o.hi_) > 0; }

bool Interval::contains(const Rat& v) const {
    return mpfr_cmp_q(lo_, v.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
}

bool Interval::certainly_lt(const Rat& v) const { return mpfr_cmp_q(hi_, v.get_mpq_t()) < 0; }
bool Interval::certainly_gt(const Rat& v) const { return mpfr_cmp_q(lo_, v.get_mpq_t()) > 0; }

Rat mpfr_to_rat(mpfr_srcptr x) {
    if (!mpfr_number_p(x)) throw std::domain_error("mpfr_to_rat: non-finite value");
    if (mpfr_zero_p(x)) return Rat(0);
    Int m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
    Rat r(m);
    Rat two(2);
    if (e >= 0) {
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
        r *= Rat(p);
    } else {
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(-e));
        r /= Rat(p);
    }
    return r;
}

Rat Interval::lower() const { return mpfr_to_rat(lo_); }
Rat Interval::upper() const { return mpfr_to_rat(hi_); }

std::string Interval::to_string(int digits) const {
    // midpoint at the requested digit count, deterministic across runs
    mpfr_t mid;
    mpfr_init2(mid, prec_ + 8);
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_ui(mid, mid, 2, MPFR_RNDN);
    char buf[160];
    mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, mid);
    mpfr_clear(mid);
    return std::string(buf);
}

} // namespace cubiclab
