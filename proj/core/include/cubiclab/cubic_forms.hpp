#ifndef CUBICLAB_CUBIC_FORMS_HPP
#define CUBICLAB_CUBIC_FORMS_HPP

#include <map>
#include <utility>
#include <vector>

#include "cubiclab/integer.hpp"
#include "cubiclab/poly.hpp"

namespace cubiclab {

// Integer binary cubic form a*x^3 + b*x^2*y + c*x*y^2 + d*y^3.
// Covariant conventions used everywhere: P = b^2 - 3ac, Q = bc - 9ad,
// R = c^2 - 3bd (Hessian coefficients), disc = b^2c^2 - 4ac^3 - 4b^3d
// - 27a^2d^2 + 18abcd.
struct BinaryCubicForm {
    Int a, b, c, d;

    Int discriminant() const;
    Int hessian_p() const { return b * b - 3 * a * c; }
    Int hessian_q() const { return b * c - 9 * a * d; }
    Int hessian_r() const { return c * c - 3 * b * d; }
    IntPoly dehomogenise() const;  // f(x, 1)

    bool operator==(const BinaryCubicForm& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
    bool operator!=(const BinaryCubicForm& o) const { return !(*this == o); }
    bool operator<(const BinaryCubicForm& o) const;
    std::string to_string() const;
};

// Monic cubic x^3 + a*x^2 + b*x + c.
struct MonicCubic {
    Int a, b, c;

    IntPoly poly() const { return IntPoly::monic_cubic(a, b, c); }
    BinaryCubicForm form() const { return BinaryCubicForm{1, a, b, c}; }
    Int discriminant() const;
    bool is_irreducible() const { return cubic_is_irreducible(poly()); }

    bool operator==(const MonicCubic& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator!=(const MonicCubic& o) const { return !(*this == o); }
    bool operator<(const MonicCubic& o) const;
    std::string to_string() const;
};

// disc(x^3 + a*x^2 + b*x + 1) = a^2 b^2 - 4a^3 - 4b^3 + 18ab - 27.
Int family_discriminant(const Int& a, const Int& b);

// Action of [[p, q], [r, s]] in GL_2(Z): (F.gamma)(x, y) = F(px+qy, rx+sy).
BinaryCubicForm apply_gl2(const BinaryCubicForm& f, const Int& p, const Int& q, const Int& r,
                          const Int& s);

bool form_is_irreducible(const BinaryCubicForm& f);

// Canonical GL_2(Z)-orbit representative (Belabas' reduction: Hessian-based
// for positive discriminant, the standard negative-discriminant variant
// otherwise).  Idempotent and constant on orbits.
// Throws std::domain_error on degenerate (disc = 0) or reducible input.
BinaryCubicForm reduce_form(BinaryCubicForm f);

// Same GL_2(Z)-orbit?  For forms of maximal monic cubics this decides
// isomorphism of the associated cubic fields.
bool forms_equivalent(const BinaryCubicForm& f, const BinaryCubicForm& g);

// Dedekind's criterion at p for Z[x]/(f): with fbar = prod gbar_i^{e_i},
// g = prod g_i, h a lift of fbar/gbar, F = (g*h - f)/p, the order is maximal
// at p iff gcd(Fbar, gbar, hbar) = 1 over F_p.
// Throws std::domain_error on reducible f or composite p.
bool dedekind_is_maximal_at(const MonicCubic& f, const Int& p);

// Maximal at every prime, i.e. Z[alpha] is the maximal order.  Primes needing
// a check are those with p^2 | disc; they are found by factoring the
// discriminant (trial division, then Pollard rho with bounded effort).
// Throws unresolved_factorization if the discriminant cannot be resolved far
// enough to certify the answer, and std::domain_error on reducible f.
bool is_maximal(const MonicCubic& f);

// f(x + n); the discriminant is invariant.
MonicCubic translate(const MonicCubic& f, const Int& n);

// All integers n with f(n) = 1, i.e. translates x -> x+n keeping the constant
// coefficient equal to 1.  At most three exist (degree-3 equation); enforced.
std::vector<Int> unit_constant_translates(const MonicCubic& f);

// Precomputed table of every maximal unit-constant cubic x^3+ax^2+bx+1 with
// max(|a|, |b|) <= search_bound, grouped into translation classes and keyed by
// discriminant, so that repeated multiplicity queries stay cheap.
class MonogeniserScan {
public:
    explicit MonogeniserScan(const Int& search_bound);

    struct TranslationClass {
        MonicCubic representative;       // lexicographically least unit-constant translate
        std::vector<MonicCubic> members; // all unit-constant translates (<= 3)
        BinaryCubicForm reduced;         // canonical form of the underlying field
    };

    // Distinct translation classes in the window whose field is isomorphic to
    // Q[x]/(f); count asserted <= 60.
    std::pair<unsigned, std::vector<MonicCubic>> multiplicity_for(const MonicCubic& f) const;

    const std::vector<TranslationClass>& classes() const { return classes_; }
    const Int& search_bound() const { return bound_; }

private:
    Int bound_;
    std::vector<TranslationClass> classes_;
    std::map<Int, std::vector<size_t>> by_disc_;
};

// How many times, up to translation, Q[x]/(f) arises from a maximal
// x^3+ax^2+bx+1 with max(|a|, |b|) <= search_bound.  The count is asserted
// to be <= 60; violation throws std::logic_error.
// Throws std::domain_error if f is reducible or not maximal.
std::pair<unsigned, std::vector<MonicCubic>> monogeniser_multiplicity(const MonicCubic& f,
                                                                      const Int& search_bound);

// 2-rank of the class group of Q(sqrt(d)) for squarefree d < 0 by genus
// theory: omega(D) - 1 with D = d if d = 1 mod 4 else 4d.
// Throws std::domain_error on nonnegative or non-squarefree d.
unsigned quadratic_genus_two_rank(const Int& d);

} // namespace cubiclab

#endif
