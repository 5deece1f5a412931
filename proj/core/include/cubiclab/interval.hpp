#ifndef CUBICLAB_INTERVAL_HPP
#define CUBICLAB_INTERVAL_HPP

#include <string>

#include <mpfr.h>

#include "cubiclab/integer.hpp"

namespace cubiclab {

// Closed real interval [lo, hi] with MPFR endpoints and outward rounding.
// Every operation keeps the true value enclosed; the working precision is
// carried per object so precision escalation is just "rebuild at 2x bits".
class Interval {
  public:
    explicit Interval(mpfr_prec_t prec = 128);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(const Interval& o);
    Interval& operator=(Interval&& o) noexcept;
    ~Interval();

    static Interval exact(long v, mpfr_prec_t prec);
    static Interval from_int(const Int& v, mpfr_prec_t prec);
    static Interval from_rat(const Rat& v, mpfr_prec_t prec);
    static Interval from_endpoints(const Rat& lo, const Rat& hi, mpfr_prec_t prec);
    static Interval pi(mpfr_prec_t prec);

    mpfr_prec_t precision() const { return prec_; }

    Interval operator+(const Interval& o) const;
    Interval operator-(const Interval& o) const;
    Interval operator-() const;
    Interval operator*(const Interval& o) const;
    Interval operator/(const Interval& o) const; // o must not contain 0
    Interval& operator+=(const Interval& o) { return *this = *this + o; }
    Interval& operator-=(const Interval& o) { return *this = *this - o; }
    Interval& operator*=(const Interval& o) { return *this = *this * o; }

    Interval sqrt() const; // requires lo >= 0
    Interval log() const;  // requires lo > 0
    Interval exp() const;
    Interval abs() const;
    Interval sqr() const;

    bool contains_zero() const;
    bool is_positive() const;          // lo > 0
    bool is_negative() const;          // hi < 0
    bool certainly_lt(const Interval& o) const; // hi < o.lo
    bool certainly_gt(const Interval& o) const;
    bool contains(const Rat& v) const;
    // interval comparison against exact rationals
    bool certainly_lt(const Rat& v) const;
    bool certainly_gt(const Rat& v) const;

    // endpoints as exact rationals (MPFR numbers are dyadic)
    Rat lower() const;
    Rat upper() const;
    Rat mid() const { return (lower() + upper()) / 2; }
    Rat radius() const { return (upper() - lower()) / 2; }

    // decimal rendering of the midpoint, deterministic, plus radius order
    std::string to_string(int digits = 20) const;

    mpfr_srcptr lo_ptr() const { return lo_; }
    mpfr_srcptr hi_ptr() const { return hi_; }
    mpfr_ptr lo_ptr() { return lo_; }
    mpfr_ptr hi_ptr() { return hi_; }

  private:
    mpfr_t lo_, hi_;
    mpfr_prec_t prec_;
};

// Axis-aligned complex box used for the complex embeddings of a cubic field.
struct CInterval {
    Interval re, im;

    CInterval(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    CInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}

    CInterval operator+(const CInterval& o) const { return {re + o.re, im + o.im}; }
    CInterval operator-(const CInterval& o) const { return {re - o.re, im - o.im}; }
    CInterval operator*(const CInterval& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Interval norm2() const { return re.sqr() + im.sqr(); } // |z|^2 enclosure
    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
};

// exact dyadic rational from an mpfr value (must be finite)
Rat mpfr_to_rat(mpfr_srcptr x);

} // namespace cubiclab

#endif
