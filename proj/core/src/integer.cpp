#include "cubiclab/integer.hpp"
#include "cubiclab/errors.hpp"

#include <algorithm>
#include <mutex>
#include <string>

namespace cubiclab {

Int iroot(const Int& a, unsigned long k) {
    Int r;
    mpz_root(r.get_mpz_t(), a.get_mpz_t(), k);
    return r;
}

bool is_probable_prime(const Int& n) {
    // 40 Miller-Rabin rounds on top of GMP's BPSW-style screening; no known
    // composite passes, and inputs here are far below any plausible risk.
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

const std::vector<uint32_t>& primes_up_to(uint32_t limit) {
    static std::vector<uint32_t> primes;
    static uint32_t sieved_to = 0;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    if (limit > sieved_to) {
        uint32_t n = std::max(limit, 1u << 16);
        std::vector<bool> composite(n + 1, false);
        primes.clear();
        for (uint32_t p = 2; p <= n; p++) {
            if (composite[p]) continue;
            primes.push_back(p);
            for (uint64_t q = uint64_t(p) * p; q <= n; q += p) composite[q] = true;
        }
        sieved_to = n;
    }
    return primes;
}

Int floor_add_sqrt(const Rat& m1, const Rat& t) {
    // largest n with n <= m1 + sqrt(t);  n - m1 <= sqrt(t)
    if (t < 0) throw std::domain_error("floor_add_sqrt: negative radicand");
    // floor(m1) + floor(sqrt(t)) is within 2 of the answer; fix up exactly
    Int n = fdiv_q(m1.get_num(), m1.get_den()) + floor_root_rat(t, 2);
    auto ok = [&](const Int& c) { // c <= m1 + sqrt(t) ?
        Rat d = Rat(c) - m1;
        if (d <= 0) return true;
        return d * d <= t;
    };
    while (!ok(n)) n -= 1;
    while (ok(n + 1)) n += 1;
    return n;
}

Int ceil_sub_sqrt(const Rat& m1, const Rat& t) {
    if (t < 0) throw std::domain_error("ceil_sub_sqrt: negative radicand");
    Rat neg_m1 = -m1;
    return -floor_add_sqrt(neg_m1, t);
}

Int floor_root_rat(const Rat& q, unsigned long k) {
    if (q < 0) throw std::domain_error("floor_root_rat: negative argument");
    Int r = iroot(q.get_num() / q.get_den(), k); // first guess from the integer part
    auto ok = [&](const Int& c) {
        if (c < 0) return true;
        Int p;
        mpz_pow_ui(p.get_mpz_t(), c.get_mpz_t(), k);
        return Rat(p) <= q;
    };
    while (!ok(r)) r -= 1;
    while (ok(r + 1)) r += 1;
    return r;
}

namespace {

// Brent's cycle variant of Pollard rho; returns a nontrivial factor or 0.
Int rho_brent(const Int& n, unsigned long c0, unsigned long max_iters) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    Int y(2), c(c0), m(128), g(1), r(1), q(1), x, ys;
    while (g == 1 && 2 * r <= max_iters) {
        x = y;
        for (Int i = 0; i < r; i++) y = (y * y + c) % n;
        Int k(0);
        while (k < r && g == 1) {
            ys = y;
            Int lim = std::min(m, Int(r - k));
            for (Int i = 0; i < lim; i++) {
                y = (y * y + c) % n;
                q = q * cubiclab::abs(x - y) % n;
            }
            g = gcd(q, n);
            k += m;
        }
        r *= 2;
    }
    if (g == n) { // backtrack
        g = 1;
        while (g == 1) {
            ys = (ys * ys + c) % n;
            g = gcd(cubiclab::abs(x - ys), n);
        }
    }
    if (g == n || g == 1) return 0;
    return g;
}

void factor_rec(const Int& n, Factorization& out, unsigned rho_rounds, unsigned long rho_iters) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out.exponents[n]++;
        return;
    }
    if (is_perfect_square(n)) {
        Int r = isqrt(n);
        factor_rec(r, out, rho_rounds, rho_iters);
        factor_rec(r, out, rho_rounds, rho_iters);
        return;
    }
    for (unsigned round = 0; round < rho_rounds; round++) {
        Int g = rho_brent(n, 1 + round, rho_iters);
        if (g != 0 && g != 1 && g != n) {
            factor_rec(g, out, rho_rounds, rho_iters);
            factor_rec(n / g, out, rho_rounds, rho_iters);
            return;
        }
    }
    out.cofactor *= n;
}

} // namespace

Factorization factor_integer(const Int& n, uint32_t trial_limit, unsigned rho_rounds,
                             unsigned long rho_iters) {
    Factorization out;
    Int m = cubiclab::abs(n);
    if (m == 0) throw std::domain_error("factor_integer: zero");
    if (m == 1) return out;
    for (uint32_t p : primes_up_to(trial_limit)) {
        if (Int(p) * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            out.exponents[Int(p)]++;
        }
        if (m == 1) return out;
    }
    if (m == 1) return out;
    if (Int(trial_limit) * trial_limit >= m) { // remaining factor is prime
        out.exponents[m]++;
        return out;
    }
    factor_rec(m, out, rho_rounds, rho_iters);
    return out;
}

std::vector<Int> squarefull_primes(const Int& n, uint32_t trial_limit) {
    Int m = cubiclab::abs(n);
    if (m == 0) throw std::domain_error("squarefull_primes: zero");
    std::vector<Int> out;
    Int tl(trial_limit);
    for (uint32_t p : primes_up_to(trial_limit)) {
        if (Int(p) * p > m) break;
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
                e++;
            }
            if (e >= 2) out.push_back(Int(p));
        }
    }
    // Leftover m has all prime factors > trial_limit.  If m < trial_limit^3 it
    // has at most two of them counted with multiplicity, so it is p, p^2 or pq.
    if (m != 1 && !is_probable_prime(m)) {
        if (is_perfect_square(m)) {
            Int r = isqrt(m);
            if (is_probable_prime(r)) {
                out.push_back(r);
                m = 1;
            }
        }
        if (m != 1 && !is_probable_prime(m)) {
            if (m < tl * tl * tl) {
                // pq with distinct p, q > trial_limit: squarefree, nothing to add
            } else {
                Factorization f = factor_integer(m, 2, 64, 1u << 20);
                if (!f.complete())
                    throw unresolved_factorization(
                        "squarefull_primes: composite cofactor " + f.cofactor.get_str() +
                        " resisted factorisation");
                for (const auto& [p, e] : f.exponents)
                    if (e >= 2) out.push_back(p);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_squarefree(const Int& n, uint32_t trial_limit) {
    return squarefull_primes(n, trial_limit).empty();
}

unsigned omega(const Int& n) {
    Factorization f = factor_integer(n);
    if (!f.complete())
        throw unresolved_factorization("omega: cofactor " + f.cofactor.get_str() +
                                       " resisted factorisation");
    return static_cast<unsigned>(f.exponents.size());
}

uint64_t fnv1a64(const void* data, size_t len, uint64_t seed) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    uint64_t h = seed;
    for (size_t i = 0; i < len; i++) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

uint64_t fnv1a64_str(const std::string& s, uint64_t seed) {
    return fnv1a64(s.data(), s.size(), seed);
}

} // namespace cubiclab
