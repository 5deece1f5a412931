#include "cubiclab/number_field.hpp"

#include <stdexcept>
#include <tuple>

#include "cubiclab/modpoly.hpp"

namespace cubiclab {

namespace {

IntMatrix mul_alpha_matrix(const MonicCubic& f) {
    IntMatrix m(3, 3);
    // alpha maps (1, alpha, alpha^2) to (alpha, alpha^2, -c - b*alpha - a*alpha^2)
    m.at(1, 0) = 1;
    m.at(2, 1) = 1;
    m.at(0, 2) = -f.c;
    m.at(1, 2) = -f.b;
    m.at(2, 2) = -f.a;
    return m;
}

// adj(T) with T * adj(T) = det(T) * I
IntMatrix adjugate3(const IntMatrix& t) {
    IntMatrix adj(3, 3);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            const size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3;
            const size_t c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            adj.at(i, j) = t.at(r0, c0) * t.at(r1, c1) - t.at(r0, c1) * t.at(r1, c0);
        }
    return adj;
}

} // namespace

CubicField make_field(const MonicCubic& f, mpfr_prec_t precision) {
    if (!f.is_irreducible()) throw std::domain_error("make_field: f is reducible");
    if (!is_maximal(f)) throw std::domain_error("make_field: f is not maximal");
    CubicField k;
    k.defining = f;
    k.disc = f.discriminant();
    k.precision = precision;
    k.r1 = k.disc > 0 ? 3 : 1;
    k.r2 = k.disc > 0 ? 0 : 1;
    k.mul_alpha = mul_alpha_matrix(f);
    k.mul_alpha_sq = k.mul_alpha * k.mul_alpha;
    k.reduced_form = reduce_form(f.form());

    const IntPoly poly = f.poly();
    const Rat target = Rat(1) / (Int(1) << static_cast<unsigned long>(precision / 2));
    unsigned long extra = 8;
    for (int attempt = 0; attempt < 10; ++attempt, extra *= 2) {
        const mpfr_prec_t wp = precision + 64;
        const Rat width =
            Rat(1) / (Int(1) << (static_cast<unsigned long>(precision / 2) + extra));
        const auto isolated = isolate_real_roots(poly);
        if (isolated.size() != static_cast<size_t>(k.r1))
            throw std::logic_error("make_field: real root count contradicts the signature");
        std::vector<Interval> reals;
        for (const auto& iv : isolated) {
            const auto refined = refine_root(poly, iv, width);
            reals.push_back(Interval::from_endpoints(refined.first, refined.second, wp));
        }
        std::vector<CInterval> cplx;
        if (k.r2 == 1) {
            // f = (x - r)(x^2 + u x + v) with u = a + r, v = b + r*u
            const Interval& r = reals[0];
            const Interval u = Interval::from_int(f.a, wp) + r;
            const Interval v = Interval::from_int(f.b, wp) + r * u;
            const Interval d = Interval::exact(4, wp) * v - u.sqr();
            if (!d.is_positive()) continue;  // not tight enough yet
            const Interval two = Interval::exact(2, wp);
            Interval im = d.sqrt() / two;
            Interval re = Interval::exact(0, wp) - u / two;
            cplx.emplace_back(std::move(re), std::move(im));
        }
        bool tight = true;
        for (const auto& iv : reals)
            if (!(iv.radius() < target)) tight = false;
        for (const auto& z : cplx)
            if (!(z.re.radius() < target) || !(z.im.radius() < target)) tight = false;
        if (!tight) continue;
        k.real_embeddings = std::move(reals);
        k.complex_embeddings = std::move(cplx);
        return k;
    }
    throw std::logic_error("make_field: embedding refinement failed to converge");
}

IntMatrix mul_matrix(const CubicField& k, const ElementCoords& v) {
    IntMatrix out(3, 3);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            Int e = v[1] * k.mul_alpha.at(i, j) + v[2] * k.mul_alpha_sq.at(i, j);
            if (i == j) e += v[0];
            out.at(i, j) = e;
        }
    return out;
}

ElementCoords ring_mul(const CubicField& k, const ElementCoords& u, const ElementCoords& v) {
    const std::vector<Int> w = mul_matrix(k, u).mul_vec({v[0], v[1], v[2]});
    return ElementCoords{w[0], w[1], w[2]};
}

ElementCoords eval_at_alpha(const CubicField& k, const IntPoly& g) {
    std::vector<Int> c = g.coeffs;
    const MonicCubic& f = k.defining;
    while (c.size() > 3) {
        const Int lc = c.back();
        const size_t d = c.size() - 1;
        c[d] = 0;
        c[d - 1] -= lc * f.a;
        c[d - 2] -= lc * f.b;
        c[d - 3] -= lc * f.c;
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    ElementCoords out{Int(0), Int(0), Int(0)};
    for (size_t i = 0; i < c.size(); ++i) out[i] = c[i];
    return out;
}

Int element_norm(const CubicField& k, const ElementCoords& v) {
    return mul_matrix(k, v).determinant();
}

Int element_norm_resultant(const CubicField& k, const ElementCoords& v) {
    const IntPoly g({v[0], v[1], v[2]});
    if (g.is_zero()) return 0;
    return resultant(k.defining.poly(), g);
}

Int element_trace(const CubicField& k, const ElementCoords& v) {
    const IntMatrix m = mul_matrix(k, v);
    return m.at(0, 0) + m.at(1, 1) + m.at(2, 2);
}

bool FracIdeal::operator<(const FracIdeal& o) const {
    return std::tie(den, num.a) < std::tie(o.den, o.num.a);
}

FracIdeal ideal_one() { return FracIdeal{IntMatrix::identity(3), Int(1)}; }

FracIdeal canonicalize_ideal(IntMatrix num, Int den) {
    if (den == 0) throw std::domain_error("canonicalize_ideal: zero denominator");
    if (den < 0) den = -den;  // column lattice is symmetric under negation
    if (num.rows != 3) throw std::domain_error("canonicalize_ideal: need 3 rows");
    const IntMatrix h = hermite_normal_form(num);
    IntMatrix n3(3, 3);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3 && j < h.cols; ++j) n3.at(i, j) = h.at(i, j);
    for (size_t j = 0; j < 3; ++j)
        if (n3.at(j, j) <= 0) throw std::domain_error("canonicalize_ideal: singular ideal basis");
    Int g = den;
    for (const Int& e : n3.a) g = gcd(g, e);
    if (g > 1) {
        for (Int& e : n3.a) e /= g;
        den /= g;
    }
    return FracIdeal{std::move(n3), std::move(den)};
}

FracIdeal ideal_from_columns(const IntMatrix& cols, const Int& den) {
    return canonicalize_ideal(cols, den);
}

FracIdeal principal_ideal(const CubicField& k, const ElementCoords& v) {
    if (v[0] == 0 && v[1] == 0 && v[2] == 0)
        throw std::domain_error("principal_ideal: zero element");
    return canonicalize_ideal(mul_matrix(k, v), Int(1));
}

FracIdeal ideal_mul(const CubicField& k, const FracIdeal& i, const FracIdeal& j) {
    IntMatrix prod(3, 9);
    size_t col = 0;
    for (size_t ci = 0; ci < 3; ++ci) {
        const ElementCoords u{i.num.at(0, ci), i.num.at(1, ci), i.num.at(2, ci)};
        const IntMatrix mu = mul_matrix(k, u);
        for (size_t cj = 0; cj < 3; ++cj, ++col)
            for (size_t r = 0; r < 3; ++r) {
                Int s = 0;
                for (size_t t = 0; t < 3; ++t) s += mu.at(r, t) * j.num.at(t, cj);
                prod.at(r, col) = s;
            }
    }
    return canonicalize_ideal(std::move(prod), i.den * j.den);
}

FracIdeal ideal_inverse(const CubicField& k, const FracIdeal& i) {
    // x in I^-1  iff  x * b in O for the three basis vectors b of I, i.e. x
    // lies in den * (dual of the row lattice of the stacked mult. matrices).
    IntMatrix stacked(9, 3);
    for (size_t c = 0; c < 3; ++c) {
        const ElementCoords u{i.num.at(0, c), i.num.at(1, c), i.num.at(2, c)};
        const IntMatrix mu = mul_matrix(k, u);
        for (size_t r = 0; r < 3; ++r)
            for (size_t cc = 0; cc < 3; ++cc) stacked.at(3 * c + r, cc) = mu.at(r, cc);
    }
    const IntMatrix h = hermite_normal_form(stacked.transpose());
    IntMatrix basis(3, 3);
    for (size_t r = 0; r < 3; ++r)
        for (size_t c = 0; c < 3; ++c) basis.at(r, c) = h.at(r, c);
    const IntMatrix t = basis.transpose();
    const Int det = t.determinant();
    if (det == 0) throw std::domain_error("ideal_inverse: singular ideal");
    IntMatrix numraw = adjugate3(t);  // columns of adj(T)/det form the dual basis
    for (Int& e : numraw.a) e *= i.den;
    return canonicalize_ideal(std::move(numraw), det);
}

Rat ideal_norm(const FracIdeal& i) {
    Rat n(abs(i.num.determinant()));
    const Rat d(i.den);
    return n / (d * d * d);
}

bool ideal_contains(const FracIdeal& i, const std::array<Rat, 3>& x) {
    // forward substitution against the lower-triangular HNF basis
    std::array<Rat, 3> rhs;
    for (size_t r = 0; r < 3; ++r) rhs[r] = Rat(i.den) * x[r];
    std::array<Rat, 3> c;
    for (size_t r = 0; r < 3; ++r) {
        Rat v = rhs[r];
        for (size_t j = 0; j < r; ++j) v -= Rat(i.num.at(r, j)) * c[j];
        c[r] = v / Rat(i.num.at(r, r));
        if (c[r].get_den() != 1) return false;
    }
    return true;
}

bool ideal_contains_element(const FracIdeal& i, const ElementCoords& v) {
    return ideal_contains(i, {Rat(v[0]), Rat(v[1]), Rat(v[2])});
}

bool ideal_contains_ideal(const FracIdeal& i, const FracIdeal& j) {
    for (size_t c = 0; c < 3; ++c) {
        const Rat d(j.den);
        if (!ideal_contains(i, {Rat(j.num.at(0, c)) / d, Rat(j.num.at(1, c)) / d,
                                Rat(j.num.at(2, c)) / d}))
            return false;
    }
    return true;
}

Int PrimeIdeal::norm() const {
    Int n;
    mpz_pow_ui(n.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(residue_degree));
    return n;
}

std::vector<PrimeIdeal> split_prime(const CubicField& k, const Int& p) {
    const auto factors = factor_mod_p(k.defining.poly(), p);
    std::vector<PrimeIdeal> out;
    int ef_sum = 0;
    for (const auto& [g, e] : factors) {
        PrimeIdeal pr;
        pr.p = p;
        pr.generator_poly = g;
        pr.residue_degree = g.degree();
        pr.ramification = static_cast<int>(e);
        const ElementCoords ga = eval_at_alpha(k, g);
        IntMatrix cols(3, 6);
        for (size_t d = 0; d < 3; ++d) cols.at(d, d) = p;
        const IntMatrix mg = mul_matrix(k, ga);
        for (size_t r = 0; r < 3; ++r)
            for (size_t c = 0; c < 3; ++c) cols.at(r, 3 + c) = mg.at(r, c);
        pr.hnf = ideal_from_columns(cols, Int(1));
        ef_sum += pr.residue_degree * pr.ramification;
        out.push_back(std::move(pr));
    }
    if (ef_sum != 3) throw std::logic_error("split_prime: sum of e*f is not 3");
    return out;
}

int ideal_valuation(const CubicField& k, const FracIdeal& i, const PrimeIdeal& p) {
    if (i.den != 1) throw std::domain_error("ideal_valuation: ideal is not integral");
    const FracIdeal pinv = ideal_inverse(k, p.hnf);
    FracIdeal cur = i;
    int v = 0;
    while (ideal_contains_ideal(p.hnf, cur)) {
        cur = ideal_mul(k, cur, pinv);
        if (++v > 300) throw std::logic_error("ideal_valuation: runaway valuation");
    }
    return v;
}

Rat minkowski_bound(const CubicField& k) {
    const Int ad = abs(k.disc);
    if (k.r2 == 0) {
        // (2/9) sqrt(ad); exact when ad is a perfect square
        const unsigned long sh = 64;
        const Int n2 = ad << (2 * sh);
        const Int r = isqrt(n2);
        const Rat u = (r * r == n2) ? Rat(r) / (Int(1) << sh) : Rat(r + 1) / (Int(1) << sh);
        return Rat(2, 9) * u;
    }
    const mpfr_prec_t wp = 192;
    const Interval s = Interval::from_int(ad, wp).sqrt();
    const Interval b =
        (Interval::exact(8, wp) / (Interval::exact(9, wp) * Interval::pi(wp))) * s;
    return b.upper();
}

std::optional<std::vector<Interval>> log_embedding(const CubicField& k, const ElementCoords& v) {
    const IntPoly g({v[0], v[1], v[2]});
    std::vector<Interval> out;
    for (const Interval& s : k.real_embeddings) {
        const Interval val = g.eval(s).abs();
        if (!val.is_positive()) return std::nullopt;
        out.push_back(val.log());
    }
    for (const CInterval& s : k.complex_embeddings) {
        const Interval n2 = g.eval(s).norm2();
        if (!n2.is_positive()) return std::nullopt;
        out.push_back(n2.log());  // ln|sigma|^2 = the doubled complex coordinate
    }
    return out;
}

RatMat t2_gram_exact(const CubicField& k) {
    if (k.r2 != 0) throw std::domain_error("t2_gram_exact: complex signature");
    const Int &a = k.defining.a, &b = k.defining.b, &c = k.defining.c;
    // power sums of the roots by Newton's identities
    std::vector<Int> p(5);
    p[0] = 3;
    p[1] = -a;
    p[2] = a * a - 2 * b;
    p[3] = -a * p[2] - b * p[1] - 3 * c;
    p[4] = -a * p[3] - b * p[2] - c * p[1];
    RatMat g(3, std::vector<Rat>(3));
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) g[i][j] = Rat(p[i + j]);
    return g;
}

std::vector<std::vector<Interval>> t2_gram_intervals(const CubicField& k, mpfr_prec_t prec) {
    const IntPoly poly = k.defining.poly();
    const Rat width = Rat(1) / (Int(1) << (static_cast<unsigned long>(prec / 2) + 8));
    std::vector<Interval> reals;
    for (const auto& iv : isolate_real_roots(poly)) {
        const auto refined = refine_root(poly, iv, width);
        reals.push_back(Interval::from_endpoints(refined.first, refined.second, prec));
    }
    std::vector<std::vector<Interval>> g(3, std::vector<Interval>(3, Interval::exact(0, prec)));
    for (const Interval& s : reals) {
        std::vector<Interval> pw{Interval::exact(1, prec), s, s.sqr()};
        pw.push_back(pw[1] * pw[2]);
        pw.push_back(pw[2] * pw[2]);
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) g[i][j] = g[i][j] + pw[i + j];
    }
    if (k.r2 == 1) {
        const Interval& r = reals[0];
        const Interval u = Interval::from_int(k.defining.a, prec) + r;
        const Interval v = Interval::from_int(k.defining.b, prec) + r * u;
        const Interval d = Interval::exact(4, prec) * v - u.sqr();
        if (!d.is_positive())
            throw std::logic_error("t2_gram_intervals: complex pair not separated");
        const Interval two = Interval::exact(2, prec);
        const CInterval z{Interval::exact(0, prec) - u / two, d.sqrt() / two};
        const CInterval one{Interval::exact(1, prec), Interval::exact(0, prec)};
        const std::vector<CInterval> zp{one, z, z * z};
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j)
                g[i][j] = g[i][j] + two * (zp[i].re * zp[j].re + zp[i].im * zp[j].im);
    }
    return g;
}

std::vector<ElementCoords> short_elements(const CubicField& k, const Rat& t2_bound) {
    std::vector<ElementCoords> out;
    if (t2_bound < 0) return out;
    std::vector<std::vector<Int>> vecs;
    if (k.r2 == 0) {
        vecs = enumerate_short_vectors(t2_gram_exact(k), t2_bound);
    } else {
        mpfr_prec_t prec = k.precision;
        for (int attempt = 0;; ++attempt, prec *= 2) {
            if (attempt > 8) throw std::logic_error("short_elements: gram certification failed");
            const auto gi = t2_gram_intervals(k, prec);
            RatMat mid(3, std::vector<Rat>(3));
            Rat rmax(0);
            for (size_t i = 0; i < 3; ++i)
                for (size_t j = i; j < 3; ++j) {
                    mid[i][j] = mid[j][i] = gi[i][j].mid();
                    rmax = std::max(rmax, gi[i][j].radius());
                }
            if (!is_positive_definite(mid)) continue;
            const Rat lam = lambda_min_lower_bound(mid);
            // entrywise error r gives |v'Gv - v'Mv| <= 3*r*|v|^2 <= (3r/lam) v'Mv,
            // so true short vectors satisfy v'Mv <= bound/(1 - 3r/lam); demand
            // the inflation stays below 2x before trusting the proxy
            if (lam <= 6 * rmax || lam == 0) continue;
            const Rat inflated = t2_bound / (1 - 3 * rmax / lam);
            vecs = enumerate_short_vectors(mid, inflated);
            break;
        }
    }
    out.reserve(vecs.size());
    for (const auto& v : vecs) out.push_back(ElementCoords{v[0], v[1], v[2]});
    return out;
}

} // namespace cubiclab
