#ifndef CUBICLAB_LATTICE_HPP
#define CUBICLAB_LATTICE_HPP

#include <vector>

#include "cubiclab/integer.hpp"
#include "cubiclab/intmatrix.hpp"

namespace cubiclab {

// Dense rational matrix, row major.  Quadratic-form inputs must be symmetric.
using RatMat = std::vector<std::vector<Rat>>;

struct LdlResult {
    bool positive_definite = false;
    RatMat lower;           // unit lower-triangular factor
    std::vector<Rat> diag;  // pivots; gram = L * diag * L^T when positive_definite
};

// Exact LDL^T factorisation of a symmetric rational matrix.  If a pivot fails
// to be positive the matrix is not positive definite; the partial factors up to
// (and including) the offending pivot are returned with positive_definite=false.
LdlResult ldl_decompose(const RatMat& gram);

bool is_positive_definite(const RatMat& gram);

// All nonzero integer vectors v with v^T G v <= bound, one representative per
// antipodal pair (first nonzero coordinate positive), sorted lexicographically.
// Exact throughout: no vector on the boundary is missed or spuriously included.
// Throws std::domain_error if the gram matrix is not positive definite.
std::vector<std::vector<Int>> enumerate_short_vectors(const RatMat& gram, const Rat& bound);

struct LllResult {
    IntMatrix transform;  // unimodular; row i gives the i-th reduced vector in input coordinates
    RatMat gram;          // transform * G * transform^T
};

// Exact LLL reduction (delta = 3/4) of a lattice presented by its gram matrix.
// Throws std::domain_error if the gram matrix is not positive definite.
LllResult lll_reduce_gram(const RatMat& gram);

// Positive rational lambda such that x^T G x > lambda * x^T x for every nonzero
// real vector x, found by bisecting on positive definiteness of G - lambda*I.
// Throws std::domain_error if the gram matrix is not positive definite.
Rat lambda_min_lower_bound(const RatMat& gram, int iterations = 40);

} // namespace cubiclab

#endif
