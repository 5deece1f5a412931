#ifndef CUBICLAB_ERRORS_HPP
#define CUBICLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cubiclab {

// Raised when an integer resisted the factorisation effort ladder and the
// caller must not guess (e.g. maximality tests that depend on square factors).
struct unresolved_factorization : std::runtime_error {
    explicit unresolved_factorization(const std::string& what) : std::runtime_error(what) {}
};

// Relation search exhausted its budget before the relation matrix reached
// full rank.
struct insufficient_relations : std::runtime_error {
    explicit insufficient_relations(const std::string& what) : std::runtime_error(what) {}
};

// The kernel-unit search did not reach the full unit rank.
struct regulator_rank_deficient : std::runtime_error {
    explicit regulator_rank_deficient(const std::string& what) : std::runtime_error(what) {}
};

// Interval arithmetic broke down (e.g. a regulator enclosure straddling zero)
// even at the precision cap, so no honest result can be reported.
struct certification_failure : std::runtime_error {
    explicit certification_failure(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cubiclab

#endif
