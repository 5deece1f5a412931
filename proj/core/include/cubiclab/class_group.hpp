#ifndef CUBICLAB_CLASS_GROUP_HPP
#define CUBICLAB_CLASS_GROUP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cubiclab/errors.hpp"
#include "cubiclab/interval.hpp"
#include "cubiclab/number_field.hpp"

namespace cubiclab {

// principal-ideal factorisation over the factor base: (theta) = prod P_i^{e_i}
struct Relation {
    ElementCoords element;
    std::vector<int> exponents;
    std::vector<Interval> log_embedding;  // weighted; may be empty if not certified away from 0
};

enum class CertStatus { certified, heuristic, oracle };
std::string to_string(CertStatus s);

struct Certification {
    Interval analytic_ratio;  // (computed h*R) / (analytic h*R estimate)
    Int euler_cutoff = 0;
    long relation_budget = 0;
    CertStatus status = CertStatus::heuristic;
};

struct ClassGroupResult {
    std::vector<Int> elementary_divisors;  // ascending divisibility chain, all > 1
    Int h = 1;
    unsigned two_rank = 0;
    Int cl2_size = 1;
    Interval regulator;
    Certification certification;
};

struct ClassGroupConfig {
    long relation_budget = 20000;  // candidate elements examined per attempt
    Int euler_cutoff = 100000;
    Rat tail_widening = Rat(6, 5);  // symmetric multiplicative Euler-tail allowance (heuristic)
    mpfr_prec_t precision = 128;
    int max_escalations = 3;  // ladder: budget x4 on provable deficit, precision x2 on width
    uint64_t seed = 0;
};

// all prime ideals of norm <= minkowski_bound(k)
std::vector<PrimeIdeal> factor_base(const CubicField& k);

// Scan nonzero primitive elements in boxes of doubling side (deterministic
// order), keeping those whose principal ideal is supported on fb; valuations
// are exact.  Throws insufficient_relations if the budget is exhausted before
// the exponent lattice reaches full rank.
std::vector<Relation> collect_relations(const CubicField& k, const std::vector<PrimeIdeal>& fb,
                                        long budget, uint64_t seed = 0);

// Validated enclosure of h*R from the analytic class number formula:
// h*R = 2 sqrt|d| L(1) / (2^{r1} (2 pi)^{r2}), L(1) truncated at the cutoff
// and widened symmetrically by tail_widening (heuristic allowance).
// Requires euler_cutoff >= 100.
Interval analytic_hr_estimate(const CubicField& k, const Int& euler_cutoff,
                              const Rat& tail_widening = Rat(6, 5), mpfr_prec_t prec = 128);

// Relation-based class group with hR-vs-analytic certification.  The ratio
// test passes when (hR_computed / hR_analytic)^2 is certified inside (1/2, 2);
// any unit/relation sublattice deficit makes the computed product an integer
// multiple >= 2 of the truth, which the test detects.  Escalation: budget x4
// when more relations are provably needed, precision x2 on wide intervals;
// after max_escalations the result is labelled heuristic.
// Throws insufficient_relations, regulator_rank_deficient, or
// certification_failure (computed product certainly below the analytic window).
ClassGroupResult class_group(const CubicField& k, const ClassGroupConfig& config = {});

// Exhaustive small-field oracle: every integral ideal of norm <= Minkowski
// bound, principality decided by a complete short-vector search whose radius
// is certified from a full-rank sublattice of the unit lattice (a sublattice
// only enlarges the radius, so the decision stays rigorous), group structure
// from element orders.  Requires minkowski_bound(k) <= bound_cap.
ClassGroupResult class_group_oracle(const CubicField& k, const Rat& bound_cap = Rat(20));

// number of even entries of a divisibility chain
unsigned two_rank_of(const std::vector<Int>& divisors);

} // namespace cubiclab

#endif
