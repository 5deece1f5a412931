#include "cubiclab/intmatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace cubiclab {

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; i++) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols != o.rows) throw std::domain_error("IntMatrix: dimension mismatch in product");
    IntMatrix r(rows, o.cols);
    for (size_t i = 0; i < rows; i++)
        for (size_t k = 0; k < cols; k++) {
            if (at(i, k) == 0) continue;
            for (size_t j = 0; j < o.cols; j++) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(cols, rows);
    for (size_t i = 0; i < rows; i++)
        for (size_t j = 0; j < cols; j++) r.at(j, i) = at(i, j);
    return r;
}

std::vector<Int> IntMatrix::mul_vec(const std::vector<Int>& v) const {
    if (v.size() != cols) throw std::domain_error("IntMatrix: dimension mismatch in mul_vec");
    std::vector<Int> r(rows, Int(0));
    for (size_t i = 0; i < rows; i++)
        for (size_t j = 0; j < cols; j++) r[i] += at(i, j) * v[j];
    return r;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows; i++) {
        os << (i == 0 ? "[" : " ");
        for (size_t j = 0; j < cols; j++) os << at(i, j).get_str() << (j + 1 < cols ? " " : "");
        os << (i + 1 < rows ? "\n" : "]");
    }
    return os.str();
}

Int IntMatrix::determinant() const {
    if (rows != cols) throw std::domain_error("determinant: square matrix required");
    size_t n = rows;
    if (n == 0) return Int(1);
    IntMatrix m = *this;
    Int prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; k++) {
        if (m.at(k, k) == 0) { // pivot search
            size_t p = k + 1;
            while (p < n && m.at(p, k) == 0) p++;
            if (p == n) return Int(0);
            for (size_t j = 0; j < n; j++) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; i++)
            for (size_t j = k + 1; j < n; j++) {
                Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = t / prev; // exact by Bareiss
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

namespace {

// column operations
void col_swap(IntMatrix& m, size_t j1, size_t j2) {
    for (size_t i = 0; i < m.rows; i++) std::swap(m.at(i, j1), m.at(i, j2));
}
void col_neg(IntMatrix& m, size_t j) {
    for (size_t i = 0; i < m.rows; i++) m.at(i, j) = -m.at(i, j);
}
// col_j1 -= q * col_j2
void col_submul(IntMatrix& m, size_t j1, size_t j2, const Int& q) {
    if (q == 0) return;
    for (size_t i = 0; i < m.rows; i++) m.at(i, j1) -= q * m.at(i, j2);
}
// (col_j1, col_j2) <- (u*col_j1 + v*col_j2, -b/g*col_j1 + a/g*col_j2)
// where a = row entry of j1, b = of j2, g = u*a + v*b = gcd
void col_gcd_combine(IntMatrix& m, size_t row, size_t j1, size_t j2) {
    Int a = m.at(row, j1), b = m.at(row, j2);
    if (b == 0) return;
    if (a == 0) {
        col_swap(m, j1, j2);
        return;
    }
    Int u, v;
    Int g = gcdext(a, b, u, v);
    Int da = a / g, db = b / g;
    for (size_t i = 0; i < m.rows; i++) {
        Int x = m.at(i, j1), y = m.at(i, j2);
        m.at(i, j1) = u * x + v * y;
        m.at(i, j2) = da * y - db * x;
    }
}

} // namespace

IntMatrix hermite_normal_form(const IntMatrix& M) {
    IntMatrix h = M;
    size_t cursor = 0; // next pivot column
    for (size_t i = 0; i < h.rows && cursor < h.cols; i++) {
        // gather row i into column `cursor`
        bool any = false;
        for (size_t j = cursor; j < h.cols; j++)
            if (h.at(i, j) != 0) { any = true; break; }
        if (!any) continue;
        for (size_t j = cursor + 1; j < h.cols; j++)
            if (h.at(i, j) != 0) col_gcd_combine(h, i, cursor, j);
        if (h.at(i, cursor) < 0) col_neg(h, cursor);
        // reduce the entries to the left of the pivot into [0, pivot)
        for (size_t j = 0; j < cursor; j++) {
            Int q = fdiv_q(h.at(i, j), h.at(i, cursor));
            col_submul(h, j, cursor, q);
        }
        cursor++;
    }
    return h;
}

SmithResult smith_normal_form(const IntMatrix& M) {
    SmithResult res;
    res.D = M;
    res.U = IntMatrix::identity(M.rows);
    res.V = IntMatrix::identity(M.cols);
    IntMatrix& D = res.D;
    IntMatrix& U = res.U;
    IntMatrix& V = res.V;

    auto row_swap = [&](size_t i1, size_t i2) {
        for (size_t j = 0; j < D.cols; j++) std::swap(D.at(i1, j), D.at(i2, j));
        for (size_t j = 0; j < U.cols; j++) std::swap(U.at(i1, j), U.at(i2, j));
    };
    auto row_submul = [&](size_t i1, size_t i2, const Int& q) {
        if (q == 0) return;
        for (size_t j = 0; j < D.cols; j++) D.at(i1, j) -= q * D.at(i2, j);
        for (size_t j = 0; j < U.cols; j++) U.at(i1, j) -= q * U.at(i2, j);
    };
    auto row_neg = [&](size_t i) {
        for (size_t j = 0; j < D.cols; j++) D.at(i, j) = -D.at(i, j);
        for (size_t j = 0; j < U.cols; j++) U.at(i, j) = -U.at(i, j);
    };
    auto vcol_swap = [&](size_t j1, size_t j2) {
        col_swap(D, j1, j2);
        col_swap(V, j1, j2);
    };
    auto vcol_submul = [&](size_t j1, size_t j2, const Int& q) {
        col_submul(D, j1, j2, q);
        col_submul(V, j1, j2, q);
    };

    size_t n = std::min(D.rows, D.cols);
    for (size_t t = 0; t < n; t++) {
        // choose the smallest nonzero entry in the remaining block as pivot
        // (cheap guard against coefficient blowup)
        size_t pi = t, pj = t;
        bool found = false;
        for (size_t i = t; i < D.rows; i++)
            for (size_t j = t; j < D.cols; j++) {
                if (D.at(i, j) == 0) continue;
                if (!found || cubiclab::abs(D.at(i, j)) < cubiclab::abs(D.at(pi, pj))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        if (pi != t) row_swap(t, pi);
        if (pj != t) vcol_swap(t, pj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            // clear column t
            for (size_t i = t + 1; i < D.rows; i++) {
                if (D.at(i, t) == 0) continue;
                Int q = fdiv_q(D.at(i, t), D.at(t, t));
                row_submul(i, t, q);
                if (D.at(i, t) != 0) { // remainder smaller than pivot: swap up
                    row_swap(t, i);
                    dirty = true;
                }
            }
            // clear row t
            for (size_t j = t + 1; j < D.cols; j++) {
                if (D.at(t, j) == 0) continue;
                Int q = fdiv_q(D.at(t, j), D.at(t, t));
                vcol_submul(j, t, q);
                if (D.at(t, j) != 0) {
                    vcol_swap(t, j);
                    dirty = true;
                }
            }
        }
        if (D.at(t, t) < 0) row_neg(t);
    }
    // enforce the divisibility chain on the (now diagonal) D:
    // diag(d1, d2) -> diag(g, d1*d2/g) via
    //   [u v; -d2/g d1/g] * diag(d1,d2) * [1, -v*d2/g; 1, u*d1/g]
    auto row2 = [&](size_t t, const Int& a, const Int& b, const Int& c, const Int& d) {
        for (IntMatrix* m : {&D, &U})
            for (size_t j = 0; j < m->cols; j++) {
                Int x = m->at(t, j), y = m->at(t + 1, j);
                m->at(t, j) = a * x + b * y;
                m->at(t + 1, j) = c * x + d * y;
            }
    };
    auto col2 = [&](size_t t, const Int& a, const Int& b, const Int& c, const Int& d) {
        // right-multiplication by [a b; c d] on columns t, t+1
        for (IntMatrix* m : {&D, &V})
            for (size_t i = 0; i < m->rows; i++) {
                Int x = m->at(i, t), y = m->at(i, t + 1);
                m->at(i, t) = a * x + c * y;
                m->at(i, t + 1) = b * x + d * y;
            }
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t t = 0; t + 1 < n; t++) {
            Int d1 = D.at(t, t), d2 = D.at(t + 1, t + 1);
            if (d1 == 0 && d2 != 0) { // move zeros to the end
                row_swap(t, t + 1);
                vcol_swap(t, t + 1);
                changed = true;
                continue;
            }
            if (d1 != 0 && d2 % d1 != 0) {
                Int u, v;
                Int g = gcdext(d1, d2, u, v);
                row2(t, u, v, -d2 / g, d1 / g);
                col2(t, Int(1), -v * d2 / g, Int(1), u * d1 / g);
                if (D.at(t, t) < 0) row_neg(t);
                if (D.at(t + 1, t + 1) < 0) row_neg(t + 1);
                changed = true;
            }
        }
    }
    return res;
}

std::vector<Int> smith_divisors(const IntMatrix& M) {
    SmithResult s = smith_normal_form(M);
    std::vector<Int> d;
    for (size_t t = 0; t < std::min(M.rows, M.cols); t++)
        if (s.D.at(t, t) != 0) d.push_back(s.D.at(t, t));
    return d;
}

} // namespace cubiclab
