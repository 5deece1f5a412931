#ifndef CUBICLAB_MODPOLY_HPP
#define CUBICLAB_MODPOLY_HPP

#include <vector>

#include "cubiclab/poly.hpp"

namespace cubiclab {

// Monic polynomial factorisation over F_p, p prime.
// Returns the irreducible factors (monic, coefficients reduced into [0, p))
// with multiplicities, sorted by (degree, coefficient tuple) so the output
// order is canonical.  Randomised splitting (Cantor-Zassenhaus) draws from a
// generator seeded by (f, p, seed), so results replay identically no matter
// how calls interleave.
std::vector<std::pair<IntPoly, unsigned>> factor_mod_p(const IntPoly& f, const Int& p,
                                                       uint64_t seed = 0);

// Residue degree pattern of f mod p: multiset of degrees of irreducible
// factors, with repeated factors listed per multiplicity; sorted ascending.
std::vector<int> splitting_degrees(const IntPoly& f, const Int& p, uint64_t seed = 0);

// Number of distinct roots of f in F_p (deg gcd(x^p - x, f)); much cheaper
// than a full factorisation for large p.
int count_roots_mod_p(const IntPoly& f, const Int& p);

// polynomial gcd over F_p, monic output
IntPoly gcd_mod_p(const IntPoly& a, const IntPoly& b, const Int& p);

// reduce coefficients into [0, p)
IntPoly reduce_mod_p(const IntPoly& f, const Int& p);

} // namespace cubiclab

#endif
