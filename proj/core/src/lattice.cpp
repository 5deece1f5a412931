#include "cubiclab/lattice.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace cubiclab {

LdlResult ldl_decompose(const RatMat& gram) {
    const size_t n = gram.size();
    LdlResult res;
    res.lower.assign(n, std::vector<Rat>(n, Rat(0)));
    res.diag.assign(n, Rat(0));
    for (size_t i = 0; i < n; ++i) res.lower[i][i] = 1;
    for (size_t j = 0; j < n; ++j) {
        Rat d = gram[j][j];
        for (size_t k = 0; k < j; ++k) d -= res.lower[j][k] * res.lower[j][k] * res.diag[k];
        res.diag[j] = d;
        if (d <= 0) return res;  // positive_definite stays false
        for (size_t i = j + 1; i < n; ++i) {
            Rat v = gram[i][j];
            for (size_t k = 0; k < j; ++k) v -= res.lower[i][k] * res.lower[j][k] * res.diag[k];
            res.lower[i][j] = v / d;
        }
    }
    res.positive_definite = true;
    return res;
}

bool is_positive_definite(const RatMat& gram) { return ldl_decompose(gram).positive_definite; }

std::vector<std::vector<Int>> enumerate_short_vectors(const RatMat& gram, const Rat& bound) {
    const size_t n = gram.size();
    LdlResult ldl = ldl_decompose(gram);
    if (!ldl.positive_definite)
        throw std::domain_error("enumerate_short_vectors: gram matrix is not positive definite");
    std::vector<Int> x(n, 0);
    std::vector<std::vector<Int>> out;
    // Q(x) = sum_i diag[i] * y_i^2 with y_i = x_i + sum_{j>i} lower[j][i] * x_j.
    std::function<void(size_t, const Rat&)> descend = [&](size_t level, const Rat& budget) {
        if (level == 0) {
            for (size_t j = 0; j < n; ++j) {
                if (x[j] == 0) continue;
                if (x[j] > 0) out.push_back(x);  // negated copy is enumerated too; keep one
                return;
            }
            return;  // zero vector
        }
        const size_t i = level - 1;
        Rat s(0);
        for (size_t j = i + 1; j < n; ++j)
            if (x[j] != 0) s += ldl.lower[j][i] * Rat(x[j]);
        const Rat r = budget / ldl.diag[i];
        const Int lo = ceil_sub_sqrt(-s, r);
        const Int hi = floor_add_sqrt(-s, r);
        for (Int xi = lo; xi <= hi; ++xi) {
            x[i] = xi;
            const Rat y = Rat(xi) + s;
            descend(i, budget - ldl.diag[i] * y * y);
        }
        x[i] = 0;
    };
    if (bound >= 0) descend(n, bound);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

Int round_to_nearest(const Rat& q) {
    // floor(q + 1/2); ties round up
    return fdiv_q(q.get_num() * 2 + q.get_den(), q.get_den() * 2);
}

}  // namespace

LllResult lll_reduce_gram(const RatMat& gram) {
    const size_t n = gram.size();
    RatMat C = gram;
    IntMatrix U = IntMatrix::identity(n);
    std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n, Rat(0)));
    std::vector<Rat> B(n, Rat(0));

    auto compute_gs = [&]() {
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < i; ++j) {
                Rat t = C[i][j];
                for (size_t k = 0; k < j; ++k) t -= mu[j][k] * mu[i][k] * B[k];
                mu[i][j] = t / B[j];
            }
            Rat b = C[i][i];
            for (size_t k = 0; k < i; ++k) b -= mu[i][k] * mu[i][k] * B[k];
            if (b <= 0) throw std::domain_error("lll_reduce_gram: gram matrix is not positive definite");
            B[i] = b;
        }
    };
    auto row_op = [&](size_t k, size_t j, const Int& q) {
        // row_k -= q*row_j, applied to U and as a congruence to the form C
        for (size_t c = 0; c < n; ++c) U.at(k, c) -= q * U.at(j, c);
        for (size_t c = 0; c < n; ++c) C[k][c] -= Rat(q) * C[j][c];
        for (size_t r = 0; r < n; ++r) C[r][k] -= Rat(q) * C[r][j];
    };
    auto row_swap = [&](size_t k) {
        for (size_t c = 0; c < n; ++c) std::swap(U.at(k - 1, c), U.at(k, c));
        for (size_t c = 0; c < n; ++c) std::swap(C[k - 1][c], C[k][c]);
        for (size_t r = 0; r < n; ++r) std::swap(C[r][k - 1], C[r][k]);
    };

    if (n > 0) compute_gs();
    const Rat delta(3, 4);
    size_t k = 1;
    while (k < n) {
        for (size_t j = k; j-- > 0;) {
            const Int q = round_to_nearest(mu[k][j]);
            if (q != 0) {
                row_op(k, j, q);
                compute_gs();
            }
        }
        if (B[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
            ++k;
        } else {
            row_swap(k);
            compute_gs();
            k = (k > 1) ? k - 1 : 1;
        }
    }
    return LllResult{std::move(U), std::move(C)};
}

Rat lambda_min_lower_bound(const RatMat& gram, int iterations) {
    const size_t n = gram.size();
    if (n == 0) throw std::domain_error("lambda_min_lower_bound: empty matrix");
    if (!is_positive_definite(gram))
        throw std::domain_error("lambda_min_lower_bound: gram matrix is not positive definite");
    Rat hi = gram[0][0];  // lambda_min <= min_i G_ii, so G - hi*I is never positive definite
    for (size_t i = 1; i < n; ++i) hi = std::min(hi, gram[i][i]);
    Rat lo(0);
    for (int it = 0; it < iterations; ++it) {
        const Rat mid = (lo + hi) / 2;
        RatMat shifted = gram;
        for (size_t i = 0; i < n; ++i) shifted[i][i] -= mid;
        if (is_positive_definite(shifted)) lo = mid;
        else hi = mid;
    }
    return lo;
}

} // namespace cubiclab
