#ifndef CUBICLAB_NUMBER_FIELD_HPP
#define CUBICLAB_NUMBER_FIELD_HPP

#include <array>
#include <optional>
#include <vector>

#include "cubiclab/cubic_forms.hpp"
#include "cubiclab/integer.hpp"
#include "cubiclab/intmatrix.hpp"
#include "cubiclab/interval.hpp"
#include "cubiclab/lattice.hpp"

namespace cubiclab {

// x + y*alpha + z*alpha^2 in the power basis of Z[alpha]
using ElementCoords = std::array<Int, 3>;

// The cubic field Q[x]/(f) for a maximal monic cubic f, so Z[alpha] is the
// full ring of integers.  Immutable after make_field.
struct CubicField {
    MonicCubic defining;
    Int disc;
    int r1 = 3, r2 = 0;             // (3,0) iff disc > 0, else (1,1)
    mpfr_prec_t precision = 128;
    std::vector<Interval> real_embeddings;      // increasing; 3 or 1 entries
    std::vector<CInterval> complex_embeddings;  // upper-half-plane root, or empty
    IntMatrix mul_alpha;            // multiplication by alpha on column coords
    IntMatrix mul_alpha_sq;
    BinaryCubicForm reduced_form;   // canonical orbit representative of (1,a,b,c)
};

// Validated construction: requires f irreducible and maximal (domain error
// otherwise); root enclosures are refined until every radius is below
// 2^(-precision/2).
CubicField make_field(const MonicCubic& f, mpfr_prec_t precision = 128);

// multiplication-by-theta matrix in the power basis
IntMatrix mul_matrix(const CubicField& k, const ElementCoords& v);
ElementCoords ring_mul(const CubicField& k, const ElementCoords& u, const ElementCoords& v);
ElementCoords eval_at_alpha(const CubicField& k, const IntPoly& g);

// N(theta) = det of the multiplication matrix.
Int element_norm(const CubicField& k, const ElementCoords& v);
// Independent route: Res(f(t), x + y t + z t^2); equals element_norm.
Int element_norm_resultant(const CubicField& k, const ElementCoords& v);
Int element_trace(const CubicField& k, const ElementCoords& v);

// Fractional ideal of the maximal order: column lattice of num/den in the
// power basis.  Canonical form: num is the 3x3 column HNF (lower triangular,
// positive diagonal), den > 0, gcd(den, content(num)) = 1.
struct FracIdeal {
    IntMatrix num;
    Int den = 1;
    bool operator==(const FracIdeal& o) const { return num == o.num && den == o.den; }
    bool operator!=(const FracIdeal& o) const { return !(*this == o); }
    bool operator<(const FracIdeal& o) const;  // lexicographic, for map keys
};

FracIdeal ideal_one();
// HNF + content/denominator reduction; throws on singular num or den <= 0.
FracIdeal canonicalize_ideal(IntMatrix num, Int den);
// lattice generated by the columns of a 3xN matrix, over den
FracIdeal ideal_from_columns(const IntMatrix& cols, const Int& den);
FracIdeal principal_ideal(const CubicField& k, const ElementCoords& v);
FracIdeal ideal_mul(const CubicField& k, const FracIdeal& i, const FracIdeal& j);
FracIdeal ideal_inverse(const CubicField& k, const FracIdeal& i);
Rat ideal_norm(const FracIdeal& i);  // |det num| / den^3

bool ideal_contains(const FracIdeal& i, const std::array<Rat, 3>& x);
bool ideal_contains_element(const FracIdeal& i, const ElementCoords& v);
// j subset of i
bool ideal_contains_ideal(const FracIdeal& i, const FracIdeal& j);

struct PrimeIdeal {
    Int p;
    IntPoly generator_poly;  // irreducible factor of f mod p; ideal = (p, g(alpha))
    int residue_degree = 1;
    int ramification = 1;
    FracIdeal hnf;
    Int norm() const;  // p^residue_degree
};

// Primes above p, via the factorisation of f mod p (valid at every p because
// the index of Z[alpha] is 1).  Sum of e_i * f_i is checked to be 3.
std::vector<PrimeIdeal> split_prime(const CubicField& k, const Int& p);

// v_P(i) for an integral ideal i: repeated division by P.  Throws
// std::domain_error if i is not integral.
int ideal_valuation(const CubicField& k, const FracIdeal& i, const PrimeIdeal& p);

// Exact rational upper bound on (3!/3^3) (4/pi)^{r2} sqrt|disc|; tight enough
// that perfect-square discriminants give the exact value.
Rat minkowski_bound(const CubicField& k);

// Weighted logarithmic embedding (ln|sigma| for real, ln|sigma|^2 for the
// complex place), length r1+r2; the coordinates of a unit sum to an enclosure
// of 0.  Returns nullopt when the working precision cannot certify theta's
// embeddings away from zero.
std::optional<std::vector<Interval>> log_embedding(const CubicField& k, const ElementCoords& v);

// T2 Gram matrix (sum over embeddings of |sigma(.)|^2) on the power basis.
// Totally real: exact integer trace form.
RatMat t2_gram_exact(const CubicField& k);
// Complex signature: validated interval Gram at the given precision,
// recomputed from scratch (does not touch the field's stored enclosures).
std::vector<std::vector<Interval>> t2_gram_intervals(const CubicField& k, mpfr_prec_t prec);

// Every nonzero theta in Z[alpha] with T2(theta) <= bound, one per antipodal
// pair.  For totally real fields the list is exact; for complex signature it
// is a certified superset (near-boundary extras possible, nothing missing).
std::vector<ElementCoords> short_elements(const CubicField& k, const Rat& t2_bound);

} // namespace cubiclab

#endif
