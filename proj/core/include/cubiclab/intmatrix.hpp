#ifndef CUBICLAB_INTMATRIX_HPP
#define CUBICLAB_INTMATRIX_HPP

#include <vector>

#include "cubiclab/integer.hpp"

namespace cubiclab {

// Dense row-major integer matrix.  Vectors are columns unless stated
// otherwise, matching the column conventions of the lattice code.
struct IntMatrix {
    size_t rows = 0, cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, Int(0)) {}
    static IntMatrix identity(size_t n);

    Int& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Int& at(size_t i, size_t j) const { return a[i * cols + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix transpose() const;
    std::vector<Int> mul_vec(const std::vector<Int>& v) const;

    // fraction-free Gaussian elimination (Bareiss); square input required
    Int determinant() const;

    bool is_zero() const;
    std::string to_string() const;
};

// Column-style Hermite normal form H = M * V for some unimodular V (V is not
// returned).  Canonical shape: pivot rows strictly increase column by column,
// pivots are positive, entries to the left of a pivot in its row are reduced
// into [0, pivot), and entries to the right are zero.  Zero columns are
// pushed to the right.  For square nonsingular M this is the unique
// lower-triangular column HNF of the column lattice.
IntMatrix hermite_normal_form(const IntMatrix& M);

struct SmithResult {
    IntMatrix D; // diagonal, nonnegative, d1 | d2 | ... | dr
    IntMatrix U; // unimodular rows transform
    IntMatrix V; // unimodular cols transform; U*M*V = D
};

SmithResult smith_normal_form(const IntMatrix& M);

// nonzero diagonal entries of the SNF (the elementary divisors of the
// cokernel that are > 1 come from this list)
std::vector<Int> smith_divisors(const IntMatrix& M);

} // namespace cubiclab

#endif
