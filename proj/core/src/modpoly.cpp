#include "cubiclab/modpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubiclab {

namespace {

// helpers operating on coefficient vectors already reduced mod p

using PVec = std::vector<Int>;

void normalize(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec reduce(const IntPoly& f, const Int& p) {
    PVec a(f.coeffs.size());
    for (size_t i = 0; i < a.size(); i++) a[i] = mod(f.coeffs[i], p);
    normalize(a);
    return a;
}

Int inv_mod(const Int& a, const Int& p) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
        throw std::domain_error("inv_mod: not invertible (p not prime?)");
    return r;
}

PVec mul(const PVec& a, const PVec& b, const Int& p) {
    if (a.empty() || b.empty()) return {};
    PVec c(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); i++) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); j++) c[i + j] += a[i] * b[j];
    }
    for (auto& x : c) x = mod(x, p);
    normalize(c);
    return c;
}

PVec sub(const PVec& a, const PVec& b, const Int& p) {
    PVec c(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); i++) c[i] = a[i];
    for (size_t i = 0; i < b.size(); i++) c[i] = mod(c[i] - b[i], p);
    normalize(c);
    return c;
}

// remainder of a mod b, b nonzero
PVec rem(PVec a, const PVec& b, const Int& p) {
    normalize(a);
    Int binv = inv_mod(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
        Int q = mod(a.back() * binv, p);
        size_t shift = a.size() - b.size();
        if (q != 0)
            for (size_t i = 0; i < b.size(); i++) a[shift + i] = mod(a[shift + i] - q * b[i], p);
        a.pop_back();
        normalize(a);
    }
    return a;
}

PVec divexact(PVec a, const PVec& b, const Int& p) {
    // quotient of exact division a / b
    PVec q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Int(0));
    Int binv = inv_mod(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
        Int c = mod(a.back() * binv, p);
        size_t shift = a.size() - b.size();
        q[shift] = c;
        // c != 0 here: a is normalized, so its leading coefficient is nonzero
        for (size_t i = 0; i < b.size(); i++) a[shift + i] = mod(a[shift + i] - c * b[i], p);
        normalize(a);
    }
    if (!a.empty()) throw std::domain_error("modpoly divexact: division not exact");
    normalize(q);
    return q;
}

PVec make_monic(PVec a, const Int& p) {
    if (a.empty()) return a;
    Int inv = inv_mod(a.back(), p);
    for (auto& x : a) x = mod(x * inv, p);
    return a;
}

PVec gcd(PVec a, PVec b, const Int& p) {
    while (!b.empty()) {
        PVec r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, p);
}

PVec derivative(const PVec& a, const Int& p) {
    if (a.size() <= 1) return {};
    PVec d(a.size() - 1);
    for (size_t i = 1; i < a.size(); i++) d[i - 1] = mod(a[i] * Int(i), p);
    normalize(d);
    return d;
}

// x^e mod f (by square and multiply on the exponent's bits)
PVec x_pow_mod(const Int& e, const PVec& f, const Int& p) {
    PVec result{Int(1)};
    PVec base{Int(0), Int(1)}; // x
    Int n = e;
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) result = rem(mul(result, base, p), f, p);
        base = rem(mul(base, base, p), f, p);
        n >>= 1;
    }
    return result;
}

PVec pow_mod(PVec b, const Int& e, const PVec& f, const Int& p) {
    PVec result{Int(1)};
    Int n = e;
    b = rem(std::move(b), f, p);
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) result = rem(mul(result, b, p), f, p);
        b = rem(mul(b, b, p), f, p);
        n >>= 1;
    }
    return result;
}

PVec random_poly(size_t deg_below, const Int& p, SplitMix64& rng) {
    PVec r(deg_below);
    for (auto& c : r) c = mod(Int(static_cast<unsigned long>(rng.next() >> 16)), p);
    normalize(r);
    return r;
}

// equal-degree splitting of a product of irreducibles of degree d
void edf(const PVec& f, int d, const Int& p, SplitMix64& rng, std::vector<PVec>& out) {
    int n = static_cast<int>(f.size()) - 1;
    if (n == d) {
        out.push_back(f);
        return;
    }
    Int q;
    mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), d);
    PVec split;
    while (split.empty()) {
        PVec r = random_poly(f.size() - 1, p, rng);
        if (r.empty()) continue;
        PVec g = gcd(f, r, p);
        if (g.size() > 1 && g.size() < f.size()) {
            split = g; // lucky gcd
            break;
        }
        if (p == 2) {
            // trace map T(r) = r + r^2 + ... + r^(2^(d-1));  + == - in F_2
            PVec t = r, acc = r;
            for (int i = 1; i < d; i++) {
                acc = rem(mul(acc, acc, p), f, p);
                t = sub(t, acc, p);
            }
            PVec g2 = gcd(f, t, p);
            if (g2.size() > 1 && g2.size() < f.size()) split = g2;
        } else {
            Int e = (q - 1) / 2;
            PVec s = pow_mod(r, e, f, p);
            if (!s.empty()) s[0] = mod(s[0] - 1, p);
            normalize(s);
            if (s.empty()) continue;
            PVec g2 = gcd(f, s, p);
            if (g2.size() > 1 && g2.size() < f.size()) split = g2;
        }
    }
    PVec other = divexact(f, split, p);
    edf(make_monic(split, p), d, p, rng, out);
    edf(make_monic(other, p), d, p, rng, out);
}

// distinct-degree on a squarefree monic input
void ddf(const PVec& f, const Int& p, SplitMix64& rng, std::vector<PVec>& out) {
    PVec h{Int(0), Int(1)}; // x
    PVec rest = f;
    int d = 0;
    while (static_cast<int>(rest.size()) - 1 > 0) {
        d++;
        if (2 * d > static_cast<int>(rest.size()) - 1) {
            out.push_back(rest); // remaining factor is irreducible
            break;
        }
        h = pow_mod(h, p, rest, p); // h = x^(p^d) mod rest
        PVec hm = h;
        if (hm.size() < 2) hm.resize(2, Int(0));
        hm[1] = mod(hm[1] - 1, p); // h - x
        normalize(hm);
        PVec g = hm.empty() ? rest : gcd(rest, hm, p);
        if (g.size() > 1) {
            edf(g, d, p, rng, out);
            rest = divexact(rest, g, p);
            rest = make_monic(rest, p);
            h = rem(h, rest, p);
        }
    }
}

IntPoly to_poly(const PVec& v) {
    return IntPoly(std::vector<Int>(v.begin(), v.end()));
}

void factor_squarefree(const PVec& f, const Int& p, SplitMix64& rng, unsigned mult,
                       std::vector<std::pair<IntPoly, unsigned>>& out);

// full squarefree decomposition handling the derivative-zero (p-th power) case
void factor_monic(const PVec& f, const Int& p, SplitMix64& rng, unsigned mult,
                  std::vector<std::pair<IntPoly, unsigned>>& out) {
    if (f.size() <= 1) return;
    PVec df = derivative(f, p);
    if (df.empty()) {
        // f = g(x^p); over the prime field, g's coefficients are their own
        // p-th roots, so strip the exponent
        if (!mpz_fits_ulong_p(p.get_mpz_t()))
            throw std::domain_error("factor_mod_p: p-th power case with huge p");
        unsigned long pl = mpz_get_ui(p.get_mpz_t());
        PVec g((f.size() - 1) / pl + 1, Int(0));
        for (size_t i = 0; i < f.size(); i += pl) g[i / pl] = f[i];
        normalize(g);
        factor_monic(g, p, rng, mult * static_cast<unsigned>(pl), out);
        return;
    }
    PVec g0 = gcd(f, df, p);
    if (g0.size() == 1) { // squarefree
        factor_squarefree(f, p, rng, mult, out);
        return;
    }
    PVec sqfree = divexact(f, g0, p);
    sqfree = make_monic(sqfree, p);
    // factors of sqfree appear in f with multiplicities recovered by division
    std::vector<std::pair<IntPoly, unsigned>> parts;
    factor_squarefree(sqfree, p, rng, 1, parts);
    PVec remf = f;
    for (auto& [fac, m] : parts) {
        (void)m;
        PVec fv = reduce(fac, p);
        unsigned e = 0;
        while (true) {
            // divisible?
            PVec r = rem(remf, fv, p);
            if (!r.empty()) break;
            remf = make_monic(divexact(remf, fv, p), p);
            e++;
        }
        out.push_back({fac, mult * e});
    }
    if (remf.size() > 1) // leftover p-th power part untouched by sqfree factors
        factor_monic(remf, p, rng, mult, out);
}

void factor_squarefree(const PVec& f, const Int& p, SplitMix64& rng, unsigned mult,
                       std::vector<std::pair<IntPoly, unsigned>>& out) {
    std::vector<PVec> irr;
    ddf(f, p, rng, irr);
    for (auto& g : irr) out.push_back({to_poly(make_monic(g, p)), mult});
}

} // namespace

std::vector<std::pair<IntPoly, unsigned>> factor_mod_p(const IntPoly& f, const Int& p,
                                                       uint64_t seed) {
    if (p < 2 || !is_probable_prime(p)) throw std::domain_error("factor_mod_p: p must be prime");
    PVec fv = reduce(f, p);
    if (fv.empty()) throw std::domain_error("factor_mod_p: f vanishes mod p");
    if (fv.size() == 1) return {};
    // deterministic seeding from (f mod p, p, seed)
    std::string key = p.get_str() + "|";
    for (const auto& c : fv) key += c.get_str() + ",";
    SplitMix64 rng(fnv1a64_str(key, 0x9e3779b97f4a7c15ull ^ seed));
    fv = make_monic(fv, p);
    std::vector<std::pair<IntPoly, unsigned>> out;
    factor_monic(fv, p, rng, 1, out);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.first.degree() != y.first.degree()) return x.first.degree() < y.first.degree();
        return x.first.coeffs < y.first.coeffs;
    });
    // merge repeated factors (can arise across recursion levels)
    std::vector<std::pair<IntPoly, unsigned>> merged;
    for (auto& fe : out) {
        if (!merged.empty() && merged.back().first == fe.first) merged.back().second += fe.second;
        else merged.push_back(fe);
    }
    return merged;
}

std::vector<int> splitting_degrees(const IntPoly& f, const Int& p, uint64_t seed) {
    auto fac = factor_mod_p(f, p, seed);
    std::vector<int> d;
    for (const auto& [g, e] : fac)
        for (unsigned i = 0; i < e; i++) d.push_back(g.degree());
    std::sort(d.begin(), d.end());
    return d;
}

int count_roots_mod_p(const IntPoly& f, const Int& p) {
    PVec fv = reduce(f, p);
    if (fv.empty()) throw std::domain_error("count_roots_mod_p: f vanishes mod p");
    if (fv.size() == 1) return 0;
    fv = make_monic(fv, p);
    PVec xp = x_pow_mod(p, fv, p); // x^p mod f
    if (xp.size() < 2) xp.resize(2, Int(0));
    xp[1] = mod(xp[1] - 1, p); // x^p - x
    normalize(xp);
    if (xp.empty()) return static_cast<int>(fv.size()) - 1; // f | x^p - x
    PVec g = gcd(fv, xp, p);
    return static_cast<int>(g.size()) - 1;
}

IntPoly gcd_mod_p(const IntPoly& a, const IntPoly& b, const Int& p) {
    return IntPoly(std::vector<Int>(gcd(reduce(a, p), reduce(b, p), p)));
}

IntPoly reduce_mod_p(const IntPoly& f, const Int& p) {
    PVec v = reduce(f, p);
    return IntPoly(std::vector<Int>(v.begin(), v.end()));
}

} // namespace cubiclab
