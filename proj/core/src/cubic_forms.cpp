#include "cubiclab/cubic_forms.hpp"

#include <sstream>
#include <stdexcept>
#include <tuple>

#include "cubiclab/modpoly.hpp"

namespace cubiclab {

Int BinaryCubicForm::discriminant() const {
    return b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d +
           18 * a * b * c * d;
}

IntPoly BinaryCubicForm::dehomogenise() const { return IntPoly({d, c, b, a}); }

bool BinaryCubicForm::operator<(const BinaryCubicForm& o) const {
    return std::tie(a, b, c, d) < std::tie(o.a, o.b, o.c, o.d);
}

std::string BinaryCubicForm::to_string() const {
    std::ostringstream os;
    os << "(" << a << "," << b << "," << c << "," << d << ")";
    return os.str();
}

Int MonicCubic::discriminant() const { return form().discriminant(); }

bool MonicCubic::operator<(const MonicCubic& o) const {
    return std::tie(a, b, c) < std::tie(o.a, o.b, o.c);
}

std::string MonicCubic::to_string() const { return poly().to_string(); }

Int family_discriminant(const Int& a, const Int& b) {
    return a * a * b * b - 4 * a * a * a - 4 * b * b * b + 18 * a * b - 27;
}

BinaryCubicForm apply_gl2(const BinaryCubicForm& f, const Int& p, const Int& q, const Int& r,
                          const Int& s) {
    const Int &a = f.a, &b = f.b, &c = f.c, &d = f.d;
    BinaryCubicForm g;
    g.a = a * p * p * p + b * p * p * r + c * p * r * r + d * r * r * r;
    g.b = 3 * a * p * p * q + b * (p * p * s + 2 * p * q * r) + c * (r * r * q + 2 * p * r * s) +
          3 * d * r * r * s;
    g.c = 3 * a * p * q * q + b * (q * q * r + 2 * p * q * s) + c * (p * s * s + 2 * q * r * s) +
          3 * d * r * s * s;
    g.d = a * q * q * q + b * q * q * s + c * q * s * s + d * s * s * s;
    return g;
}

bool form_is_irreducible(const BinaryCubicForm& f) {
    if (f.a == 0 || f.d == 0) return false;  // divisible by y resp. x
    // a rational root p/q of f(x,1) needs p | d and q | a
    std::vector<Int> ps, qs;
    for (Int p = 1; p * p <= abs(f.d); ++p)
        if (f.d % p == 0) {
            ps.push_back(p);
            ps.push_back(abs(f.d) / p);
        }
    for (Int q = 1; q * q <= abs(f.a); ++q)
        if (f.a % q == 0) {
            qs.push_back(q);
            qs.push_back(abs(f.a) / q);
        }
    for (const Int& p : ps)
        for (const Int& q : qs)
            for (int sign : {1, -1}) {
                const Int x = sign * p;
                if (f.a * x * x * x + f.b * x * x * q + f.c * x * q * q + f.d * q * q * q == 0)
                    return false;
            }
    return true;
}

namespace {

BinaryCubicForm swap_xy(const BinaryCubicForm& f) { return {f.d, f.c, f.b, f.a}; }

BinaryCubicForm shift_x(const BinaryCubicForm& f, const Int& k) {
    // f(x + k*y, y)
    return {f.a, 3 * f.a * k + f.b, 3 * f.a * k * k + 2 * f.b * k + f.c,
            f.a * k * k * k + f.b * k * k + f.c * k + f.d};
}

BinaryCubicForm flip_x(const BinaryCubicForm& f) { return {-f.a, f.b, -f.c, f.d}; }

BinaryCubicForm flip_y(const BinaryCubicForm& f) { return {f.a, -f.b, f.c, -f.d}; }

} // namespace

BinaryCubicForm reduce_form(BinaryCubicForm f) {
    const Int disc = f.discriminant();
    if (disc == 0) throw std::domain_error("reduce_form: degenerate form (disc = 0)");
    if (!form_is_irreducible(f)) throw std::domain_error("reduce_form: reducible form");
    // Belabas' reduction; each loop strictly descends in a well-founded order.
    const int iteration_cap = 100000;
    int iterations = 0;
    if (disc > 0) {
        while (true) {
            if (++iterations > iteration_cap)
                throw std::logic_error("reduce_form: reduction failed to terminate");
            const Int p = f.hessian_p(), q = f.hessian_q(), r = f.hessian_r();
            if (f.a < 0) f = flip_x(f);
            else if (f.b < 0 || (f.b == 0 && f.d < 0)) f = flip_y(f);
            else if (p > r || (p == r && (f.a > abs(f.d) ||
                                          (f.a == abs(f.d) && f.b >= abs(f.c)))))
                f = swap_xy(f);
            else if (q > p) f = shift_x(f, Int(-1));
            else if (-q > p) f = shift_x(f, Int(1));
            else if (q == 0 && f.d >= 0)
                throw std::logic_error("reduce_form: unreachable state (Q = 0, d >= 0)");
            else if (p == q && f.b >= abs(3 * f.a - f.b)) f = shift_x(f, Int(-1));
            else break;
        }
    } else {
        while (true) {
            if (++iterations > iteration_cap)
                throw std::logic_error("reduce_form: reduction failed to terminate");
            if (f.d * f.d - f.a * f.a + f.a * f.c - f.b * f.d <= 0) f = swap_xy(f);
            else if (f.a < 0) f = flip_x(f);
            else if (f.b < 0 || (f.b == 0 && f.d < 0)) f = flip_y(f);
            else if (f.a * f.d - f.b * f.c >= (f.a + f.b) * (f.a + f.b) + f.a * f.c)
                f = shift_x(f, Int(1));
            else if (f.a * f.d - f.b * f.c <= -(f.a - f.b) * (f.a - f.b) - f.a * f.c)
                f = shift_x(f, Int(-1));
            else break;
        }
    }
    return f;
}

bool forms_equivalent(const BinaryCubicForm& f, const BinaryCubicForm& g) {
    if (f.discriminant() != g.discriminant()) return false;
    return reduce_form(f) == reduce_form(g);
}

bool dedekind_is_maximal_at(const MonicCubic& f, const Int& p) {
    if (!is_probable_prime(p)) throw std::domain_error("dedekind_is_maximal_at: p is not prime");
    if (!f.is_irreducible()) throw std::domain_error("dedekind_is_maximal_at: f is reducible");
    const IntPoly fp = f.poly();
    const auto factors = factor_mod_p(fp, p);
    IntPoly g = IntPoly::from_ints({1});
    IntPoly h = IntPoly::from_ints({1});
    for (const auto& [gi, ei] : factors) {
        g = g * gi;
        for (unsigned k = 1; k < ei; ++k) h = h * gi;
    }
    g = reduce_mod_p(g, p);
    h = reduce_mod_p(h, p);
    const IntPoly diff = g * h - fp;  // every coefficient divisible by p
    std::vector<Int> fc(diff.coeffs.size());
    for (size_t i = 0; i < diff.coeffs.size(); ++i) {
        Int quo, rem;
        mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), diff.coeffs[i].get_mpz_t(), p.get_mpz_t());
        if (rem != 0) throw std::logic_error("dedekind_is_maximal_at: lift product mismatch");
        fc[i] = quo;
    }
    const IntPoly big_f(std::move(fc));
    const IntPoly d = gcd_mod_p(gcd_mod_p(big_f, g, p), h, p);
    return d.degree() == 0;
}

bool is_maximal(const MonicCubic& f) {
    if (!f.is_irreducible()) throw std::domain_error("is_maximal: f is reducible");
    const Int disc = f.discriminant();
    for (const Int& p : squarefull_primes(abs(disc)))
        if (!dedekind_is_maximal_at(f, p)) return false;
    return true;
}

MonicCubic translate(const MonicCubic& f, const Int& n) {
    return MonicCubic{f.a + 3 * n, f.b + 2 * f.a * n + 3 * n * n,
                      f.c + f.b * n + f.a * n * n + n * n * n};
}

std::vector<Int> unit_constant_translates(const MonicCubic& f) {
    const std::vector<Int> roots = integer_roots(IntPoly({f.c - 1, f.b, f.a, Int(1)}));
    if (roots.size() > 3)
        throw std::logic_error("unit_constant_translates: more than three translates");
    return roots;
}

MonogeniserScan::MonogeniserScan(const Int& search_bound) : bound_(search_bound) {
    if (search_bound < 0) throw std::domain_error("MonogeniserScan: negative search bound");
    std::map<MonicCubic, size_t> seen;  // canonical representative -> class index
    for (Int a = -bound_; a <= bound_; ++a) {
        for (Int b = -bound_; b <= bound_; ++b) {
            const MonicCubic g{a, b, Int(1)};
            if (!g.is_irreducible()) continue;
            if (!is_maximal(g)) continue;
            std::vector<MonicCubic> members;
            MonicCubic rep = g;
            for (const Int& n : unit_constant_translates(g)) {
                const MonicCubic t = translate(g, n);
                members.push_back(t);
                if (t < rep) rep = t;
            }
            if (seen.count(rep)) continue;
            seen.emplace(rep, classes_.size());
            by_disc_[g.discriminant()].push_back(classes_.size());
            classes_.push_back(TranslationClass{rep, std::move(members), reduce_form(g.form())});
        }
    }
}

std::pair<unsigned, std::vector<MonicCubic>> MonogeniserScan::multiplicity_for(
    const MonicCubic& f) const {
    if (!f.is_irreducible()) throw std::domain_error("multiplicity_for: f is reducible");
    if (!is_maximal(f)) throw std::domain_error("multiplicity_for: f is not maximal");
    std::pair<unsigned, std::vector<MonicCubic>> out{0, {}};
    const auto bucket = by_disc_.find(f.discriminant());
    if (bucket == by_disc_.end()) return out;
    const BinaryCubicForm reduced = reduce_form(f.form());
    for (const size_t idx : bucket->second) {
        if (classes_[idx].reduced != reduced) continue;
        ++out.first;
        out.second.push_back(classes_[idx].representative);
    }
    if (out.first > 60)
        throw std::logic_error("monogeniser multiplicity exceeds the proven bound of 60");
    return out;
}

std::pair<unsigned, std::vector<MonicCubic>> monogeniser_multiplicity(const MonicCubic& f,
                                                                      const Int& search_bound) {
    return MonogeniserScan(search_bound).multiplicity_for(f);
}

unsigned quadratic_genus_two_rank(const Int& d) {
    if (d >= 0) throw std::domain_error("quadratic_genus_two_rank: d must be negative");
    if (!is_squarefree(abs(d))) throw std::domain_error("quadratic_genus_two_rank: d must be squarefree");
    const Int delta = (mod(d, Int(4)) == 1) ? d : 4 * d;
    return omega(abs(delta)) - 1;
}

} // namespace cubiclab
