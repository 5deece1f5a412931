#include "cubiclab/poly.hpp"

#include <sstream>
#include <stdexcept>

#include "cubiclab/intmatrix.hpp"

namespace cubiclab {

IntPoly IntPoly::from_ints(std::initializer_list<long> c) {
    std::vector<Int> v;
    for (long x : c) v.emplace_back(x);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::monic_cubic(const Int& a, const Int& b, const Int& c) {
    return IntPoly({c, b, a, Int(1)});
}

void IntPoly::normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> c(std::max(coeffs.size(), o.coeffs.size()), Int(0));
    for (size_t i = 0; i < coeffs.size(); i++) c[i] += coeffs[i];
    for (size_t i = 0; i < o.coeffs.size(); i++) c[i] += o.coeffs[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> c(std::max(coeffs.size(), o.coeffs.size()), Int(0));
    for (size_t i = 0; i < coeffs.size(); i++) c[i] += coeffs[i];
    for (size_t i = 0; i < o.coeffs.size(); i++) c[i] -= o.coeffs[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> c(coeffs.size() + o.coeffs.size() - 1, Int(0));
    for (size_t i = 0; i < coeffs.size(); i++)
        for (size_t j = 0; j < o.coeffs.size(); j++) c[i + j] += coeffs[i] * o.coeffs[j];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const Int& k) const {
    std::vector<Int> c(coeffs);
    for (auto& x : c) x *= k;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-() const { return *this * Int(-1); }

Int IntPoly::eval(const Int& x) const {
    Int v(0);
    for (size_t i = coeffs.size(); i-- > 0;) v = v * x + coeffs[i];
    return v;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat v(0);
    for (size_t i = coeffs.size(); i-- > 0;) v = v * x + Rat(coeffs[i]);
    return v;
}

Interval IntPoly::eval(const Interval& x) const {
    Interval v = Interval::exact(0, x.precision());
    for (size_t i = coeffs.size(); i-- > 0;)
        v = v * x + Interval::from_int(coeffs[i], x.precision());
    return v;
}

CInterval IntPoly::eval(const CInterval& x) const {
    mpfr_prec_t prec = x.re.precision();
    CInterval v(prec);
    for (size_t i = coeffs.size(); i-- > 0;) {
        v = v * x;
        v.re = v.re + Interval::from_int(coeffs[i], prec);
    }
    return v;
}

IntPoly IntPoly::derivative() const {
    if (degree() < 1) return IntPoly();
    std::vector<Int> c(coeffs.size() - 1);
    for (size_t i = 1; i < coeffs.size(); i++) c[i - 1] = coeffs[i] * Int(i);
    return IntPoly(std::move(c));
}

Int IntPoly::content() const {
    Int g(0);
    for (const auto& c : coeffs) g = gcd(g, c);
    return g;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] == 0) continue;
        if (!first) os << (coeffs[i] > 0 ? " + " : " - ");
        else if (coeffs[i] < 0) os << "-";
        Int a = cubiclab::abs(coeffs[i]);
        if (a != 1 || i == 0) os << a.get_str();
        if (i >= 1) {
            os << "x";
            if (i >= 2) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

Int resultant(const IntPoly& f, const IntPoly& g) {
    int m = f.degree(), n = g.degree();
    if (m < 0 || n < 0) return Int(0);
    if (m == 0) { // Res(c, g) = c^deg(g)
        Int r;
        mpz_pow_ui(r.get_mpz_t(), f.coeffs[0].get_mpz_t(), n);
        return r;
    }
    if (n == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), g.coeffs[0].get_mpz_t(), m);
        return r;
    }
    // Sylvester matrix, (m+n) x (m+n)
    IntMatrix S(m + n, m + n);
    for (int i = 0; i < n; i++)
        for (int j = 0; j <= m; j++) S.at(i, i + j) = f.coeffs[m - j];
    for (int i = 0; i < m; i++)
        for (int j = 0; j <= n; j++) S.at(n + i, i + j) = g.coeffs[n - j];
    return S.determinant();
}

Int poly_discriminant(const IntPoly& f) {
    int n = f.degree();
    if (n < 1) throw std::domain_error("poly_discriminant: degree must be >= 1");
    if (n == 1) return Int(1);
    Int r = resultant(f, f.derivative());
    Int d = r / f.lc(); // exact division
    long s = static_cast<long>(n) * (n - 1) / 2;
    if (s % 2 != 0) d = -d;
    return d;
}

std::vector<Int> integer_roots(const IntPoly& f) {
    std::vector<Int> roots;
    if (f.is_zero()) throw std::domain_error("integer_roots: zero polynomial");
    IntPoly g = f;
    // peel off x | g
    while (!g.coeffs.empty() && g.coeffs[0] == 0) {
        if (roots.empty() || roots.back() != 0) roots.push_back(Int(0));
        g.coeffs.erase(g.coeffs.begin());
    }
    if (g.degree() < 1) {
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    Int c0 = cubiclab::abs(g.coeffs[0]);
    // candidate roots divide the trailing coefficient
    Factorization fac = factor_integer(c0);
    std::vector<Int> divisors{Int(1)};
    for (const auto& [p, e] : fac.exponents) {
        size_t sz = divisors.size();
        Int pk(1);
        for (unsigned k = 1; k <= e; k++) {
            pk *= p;
            for (size_t i = 0; i < sz; i++) divisors.push_back(divisors[i] * pk);
        }
    }
    if (!fac.complete()) {
        // also fold in the unfactored cofactor's trivial divisors
        size_t sz = divisors.size();
        for (size_t i = 0; i < sz; i++) divisors.push_back(divisors[i] * fac.cofactor);
    }
    for (const Int& d : divisors) {
        if (g.eval(d) == 0) roots.push_back(d);
        if (g.eval(-d) == 0) roots.push_back(-d);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

bool cubic_is_irreducible(const IntPoly& f) {
    if (f.degree() != 3) throw std::domain_error("cubic_is_irreducible: degree must be 3");
    if (f.lc() != 1) throw std::domain_error("cubic_is_irreducible: monic input expected");
    return integer_roots(f).empty();
}

namespace {

// pseudo-remainder with a positive scale factor, so signs match the rational
// remainder up to a positive constant (what Sturm needs)
IntPoly prem_pos(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    Int lb = b.lc();
    Int lb2 = lb * lb;
    while (r.degree() >= b.degree()) {
        int d = r.degree() - b.degree();
        Int cr = r.lc();
        // scale by lb^2 (positive) then subtract multiple of b
        IntPoly shifted;
        shifted.coeffs.assign(d, Int(0));
        shifted.coeffs.insert(shifted.coeffs.end(), b.coeffs.begin(), b.coeffs.end());
        r = r * lb2 - shifted * (cr * lb);
    }
    // strip positive content to keep coefficients small
    Int c = r.content();
    if (c > 1) {
        for (auto& x : r.coeffs) x /= c;
    }
    return r;
}

int sign(const Rat& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

} // namespace

std::vector<IntPoly> sturm_chain(const IntPoly& f) {
    std::vector<IntPoly> chain;
    chain.push_back(f);
    chain.push_back(f.derivative());
    while (!chain.back().is_zero() && chain.back().degree() >= 1) {
        IntPoly r = prem_pos(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

int sturm_sign_changes(const std::vector<IntPoly>& chain, const Rat& x) {
    int changes = 0, last = 0;
    for (const auto& p : chain) {
        int s = sign(p.eval(x));
        if (s != 0) {
            if (last != 0 && s != last) changes++;
            last = s;
        }
    }
    return changes;
}

int count_roots_in(const std::vector<IntPoly>& chain, const Rat& lo, const Rat& hi) {
    return sturm_sign_changes(chain, lo) - sturm_sign_changes(chain, hi);
}

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const IntPoly& f) {
    if (f.degree() < 1) throw std::domain_error("isolate_real_roots: degree must be >= 1");
    if (poly_discriminant(f) == 0)
        throw std::domain_error("isolate_real_roots: input must be squarefree");
    auto chain = sturm_chain(f);
    // Cauchy bound: all real roots lie in (-B, B)
    Int maxc(0);
    for (const auto& c : f.coeffs) maxc = std::max(maxc, cubiclab::abs(c));
    Rat B = Rat(maxc) / Rat(cubiclab::abs(f.lc())) + 1;
    std::vector<std::pair<Rat, Rat>> done;
    std::vector<std::pair<Rat, Rat>> todo{{-B, B}};
    while (!todo.empty()) {
        auto [lo, hi] = todo.back();
        todo.pop_back();
        // Sturm counts roots in (lo, hi]; endpoints chosen off the root set
        int k = count_roots_in(chain, lo, hi);
        if (k == 0) continue;
        if (k == 1 && f.eval(hi) != 0) {
            done.push_back({lo, hi});
            continue;
        }
        Rat m = (lo + hi) / 2;
        // nudge the midpoint off a root
        while (f.eval(m) == 0) m = (lo + m) / 2;
        todo.push_back({lo, m});
        todo.push_back({m, hi});
    }
    std::sort(done.begin(), done.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return done;
}

std::pair<Rat, Rat> refine_root(const IntPoly& f, std::pair<Rat, Rat> iv, const Rat& width) {
    int slo = sign(f.eval(iv.first));
    if (slo == 0) throw std::domain_error("refine_root: endpoint is a root");
    while (iv.second - iv.first > width) {
        Rat m = (iv.first + iv.second) / 2;
        int sm = sign(f.eval(m));
        if (sm == 0) {
            // rational root hit dead-centre: shift the midpoint slightly
            m = iv.first + (iv.second - iv.first) / 3;
            sm = sign(f.eval(m));
            if (sm == 0) throw std::domain_error("refine_root: interval collapsed on a root");
        }
        if (sm == slo) iv.first = m;
        else iv.second = m;
    }
    return iv;
}

} // namespace cubiclab
