#ifndef CUBICLAB_INTEGER_HPP
#define CUBICLAB_INTEGER_HPP

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace cubiclab {

using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// g = u*a + v*b
inline Int gcdext(const Int& a, const Int& b, Int& u, Int& v) {
    Int g;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int abs(const Int& a) {
    Int r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

// floor(a/b) and the matching remainder (sign conventions from mpz_fdiv).
inline Int fdiv_q(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int mod(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int isqrt(const Int& a) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& a) {
    return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

// largest r with r^k <= a  (a >= 0, k >= 1)
Int iroot(const Int& a, unsigned long k);

bool is_probable_prime(const Int& n);

// Primes <= limit, shared read-only sieve output.
const std::vector<uint32_t>& primes_up_to(uint32_t limit);

// floor(m1 + sqrt(t)) resp. ceil(m1 - sqrt(t)) for rationals, t >= 0, exact.
Int floor_add_sqrt(const Rat& m1, const Rat& t);
Int ceil_sub_sqrt(const Rat& m1, const Rat& t);

// largest integer r with r^k <= q (q >= 0 rational)
Int floor_root_rat(const Rat& q, unsigned long k);

struct Factorization {
    std::map<Int, unsigned> exponents; // prime -> multiplicity
    Int cofactor = 1;                  // composite leftover beyond the effort budget, 1 if none
    bool complete() const { return cofactor == 1; }
};

// Trial division up to trial_limit, then Miller-Rabin + Pollard rho (Brent
// variant, deterministic start points) with a bounded iteration effort.
// Whatever resists ends up in .cofactor; callers decide how bad that is.
Factorization factor_integer(const Int& n, uint32_t trial_limit = 1000000,
                             unsigned rho_rounds = 64, unsigned long rho_iters = 1u << 18);

// Primes p with p^2 | n, or unresolved_factorization if the leftover cofactor
// could still hide one.  Uses the fact that a cofactor < trial_limit^3 with no
// prime factor <= trial_limit has at most two prime factors.
std::vector<Int> squarefull_primes(const Int& n, uint32_t trial_limit = 1000000);

bool is_squarefree(const Int& n, uint32_t trial_limit = 1000000);

// number of distinct prime factors; throws unresolved_factorization when the
// effort ladder fails
unsigned omega(const Int& n);

// SplitMix64: small deterministic generator for algorithmic choices that must
// replay identically regardless of call interleaving.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [0, n)
    uint64_t below(uint64_t n) { return next() % n; }
};

uint64_t fnv1a64(const void* data, size_t len, uint64_t seed = 0xcbf29ce484222325ull);
uint64_t fnv1a64_str(const std::string& s, uint64_t seed = 0xcbf29ce484222325ull);

} // namespace cubiclab

#endif
