#ifndef ELL1_COMMUTANT_HPP
#define ELL1_COMMUTANT_HPP

#include <optional>
#include <utility>

#include "ell1/algebra.hpp"

namespace ell1 {

/// Outcome of the structural commutant membership test. When the element is
/// not in the commutant of C(X), witness holds a pair (degree k, point x)
/// with a_k(x) != 0 and sigma^k(x) != x.
struct CommutantCheck {
    bool in_commutant = false;
    std::optional<std::pair<long long, int>> witness;
};

/// Structural test: a commutes with all of C(X) iff every coefficient a_k is
/// supported inside Fix_k. Decided on the stored (canonical) coefficients.
CommutantCheck in_commutant(const Ell1Elem& a);

/// Brute-force commutation test against the point indicators e_x, which span
/// C(X) for a finite system. True iff |a e_x - e_x a| <= tol for every x.
bool commutes_with_cx_oracle(const Ell1Elem& a, double tol = 1e-12);

/// Projection onto the commutant support pattern: zeroes a_k outside Fix_k.
/// Idempotent; the output always passes in_commutant.
Ell1Elem commutant_component(const Ell1Elem& a);

}  // namespace ell1

#endif
