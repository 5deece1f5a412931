#ifndef CUBICLAB_POLY_HPP
#define CUBICLAB_POLY_HPP

#include <utility>
#include <vector>

#include "cubiclab/integer.hpp"
#include "cubiclab/interval.hpp"

namespace cubiclab {

// Dense integer polynomial, coefficient of x^i at coeffs[i].
// Invariant: no trailing zero coefficient (the zero polynomial is empty).
struct IntPoly {
    std::vector<Int> coeffs;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> c) : coeffs(std::move(c)) { normalize(); }
    static IntPoly from_ints(std::initializer_list<long> c);
    static IntPoly monic_cubic(const Int& a, const Int& b, const Int& c); // x^3+ax^2+bx+c

    void normalize();
    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; } // -1 for 0
    const Int& lc() const { return coeffs.back(); }
    Int coeff(size_t i) const { return i < coeffs.size() ? coeffs[i] : Int(0); }

    bool operator==(const IntPoly& o) const { return coeffs == o.coeffs; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Int& k) const;
    IntPoly operator-() const;

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;
    Interval eval(const Interval& x) const;
    CInterval eval(const CInterval& x) const;

    IntPoly derivative() const;
    Int content() const; // gcd of coefficients, 0 for the zero polynomial

    std::string to_string() const; // human-readable, for diagnostics
};

// Resultant of f and g via the Sylvester matrix (fraction-free determinant).
Int resultant(const IntPoly& f, const IntPoly& g);

// disc(f) = (-1)^(n(n-1)/2) * Res(f, f') / lc(f).  deg f >= 1 required.
Int poly_discriminant(const IntPoly& f);

// All integer roots (each listed once; callers needing multiplicity can
// deflate).  Exact, via divisor search on the trailing coefficient.
std::vector<Int> integer_roots(const IntPoly& f);

// true iff the monic cubic has no rational (= integer) root
bool cubic_is_irreducible(const IntPoly& f);

// Isolating intervals with rational endpoints for the distinct real roots of
// a squarefree polynomial, in increasing order.  Endpoints are never roots.
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const IntPoly& f);

// Shrink an isolating interval by bisection until hi - lo <= width.
std::pair<Rat, Rat> refine_root(const IntPoly& f, std::pair<Rat, Rat> iv, const Rat& width);

// Sign changes of the Sturm chain of f at x (f squarefree).
int sturm_sign_changes(const std::vector<IntPoly>& chain, const Rat& x);
std::vector<IntPoly> sturm_chain(const IntPoly& f);
// number of real roots in (lo, hi]
int count_roots_in(const std::vector<IntPoly>& chain, const Rat& lo, const Rat& hi);

} // namespace cubiclab

#endif
