#ifndef ELL1_IDEALS_HPP
#define ELL1_IDEALS_HPP

#include <vector>

#include "ell1/algebra.hpp"

namespace ell1 {

/// A unimodular function g built for a target point x0 and step data
/// (k0, n0): g is 1 on U = {x0} and satisfies
/// g(x) conj(g(sigma^{-k0-j*n0} x)) = lambda for all x in U and all j.
struct UnimodularWitness {
    PointSet U;
    CFun g;
    Complex lambda;
};

/// Constructs the witness above. Requires sigma^{k0}(x0) != x0 and, for
/// n0 >= 1, that x0 is fixed by sigma^{n0}. |lambda| must be 1.
UnimodularWitness build_unimodular(const DynSys& sys, int x0, long long k0, int n0,
                                   Complex lambda);

/// One averaging pass: (1/2)(g a conj(g) + conj(g) a g). Scales each
/// coefficient a_k pointwise by Re(g . (conj(g) o sigma^{-k})); the degree-0
/// coefficient is unchanged. g must be unimodular (tol 1e-12).
Ell1Elem average_conjugate(const Ell1Elem& a, const CFun& g);

/// The averaging data produced by the coefficient killer: U = {x0}, the 2^N
/// unimodular functions from the doubling recursion (all equal to 1 on U),
/// and the cutoff f = indicator of {x0}.
struct KillerKit {
    PointSet U;
    std::vector<CFun> thetas;
    CFun f;
};

struct KillResult {
    KillerKit kit;
    Ell1Elem averaged;
};

/// Averages a over the unimodular family for the degrees in klist, then cuts
/// off by f. In the result a':
///   - a'_0 = f . a_0 exactly,
///   - a'_{k + j*n0} vanishes on U for every k in klist and every j,
///   - every coefficient is supported in U.
/// Requires sigma^k(x0) != x0 for each k in klist, x0 in Fix_{n0} when
/// n0 >= 1, and E(a)(x0) != 0.
KillResult kill_coefficients(const Ell1Elem& a, int x0, int n0,
                             const std::vector<long long>& klist);

/// An element of the two-sided principal ideal generated by a that lies in
/// the commutant of C(X) and has nonzero degree-0 coefficient at x0.
/// Requires a_{k0}(x0) != 0; n0 is taken as the exact period of x0.
Ell1Elem principal_to_commutant(const Ell1Elem& a, int x0, long long k0);

/// The two-sided ideal of elements all of whose coefficients vanish on an
/// invariant set S (a union of orbits). I(X) = {0}; I(empty) = everything.
class VanishingIdeal {
public:
    VanishingIdeal(DynSys sys, PointSet s);
    const DynSys& sys() const { return sys_; }
    const PointSet& set() const { return s_; }
    /// Exact test on the stored coefficients.
    bool member(const Ell1Elem& a) const;

private:
    DynSys sys_;
    PointSet s_;
};

/// The vanishing ideal of the union of the selected orbits (indices into the
/// orbit partition ordered by smallest member).
VanishingIdeal vanishing_ideal(const DynSys& sys, const std::vector<int>& orbit_indices);

/// I(S1) ∩ I(S2) = I(S1 ∪ S2).
VanishingIdeal intersect(const VanishingIdeal& a, const VanishingIdeal& b);

}  // namespace ell1

#endif
