#ifndef ELL1_DYNSYS_HPP
#define ELL1_DYNSYS_HPP

#include <optional>
#include <string>
#include <vector>

namespace ell1 {

/// A finite dynamical system: a set {0,...,m-1} together with a permutation
/// sigma, given as its image sequence. The space carries the discrete
/// topology, so closure and interior of any subset are the subset itself.
class DynSys {
public:
    /// Builds the system from the image sequence perm[x] = sigma(x).
    /// Throws std::invalid_argument unless perm is a bijection on its indices.
    explicit DynSys(std::vector<int> perm);

    int size() const { return static_cast<int>(perm_.size()); }

    /// sigma(x)
    int image(int x) const;
    /// sigma^{-1}(x)
    int preimage(int x) const;
    /// sigma^n(x) for any integer n (reduced mod the cycle length of x)
    int iterate(int x, long long n) const;

    /// Exact period of x: the least n >= 1 with sigma^n(x) = x.
    int period(int x) const;
    /// Order of sigma as a group element (lcm of cycle lengths).
    long long order() const;

    const std::vector<int>& perm() const { return perm_; }

    bool operator==(const DynSys& other) const { return perm_ == other.perm_; }
    bool operator!=(const DynSys& other) const { return !(*this == other); }

private:
    std::vector<int> perm_;
    std::vector<int> inv_;
    std::vector<int> period_;

    void check_index(int x) const;
};

/// A subset of the points of a system, kept sorted and duplicate-free.
struct PointSet {
    int universe = 0;
    std::vector<int> members;

    bool contains(int x) const;
    bool empty() const { return members.empty(); }
    int size() const { return static_cast<int>(members.size()); }
    bool is_full() const { return size() == universe; }

    static PointSet full(int universe);
    static PointSet of(int universe, std::vector<int> members);
    static PointSet single(int universe, int x);

    bool operator==(const PointSet&) const = default;
};

PointSet set_union(const PointSet& a, const PointSet& b);
PointSet set_complement(const PointSet& a);

/// Fix_n(sigma) = {x : sigma^n(x) = x}. Fix_n = Fix_{-n}; Fix_0 = X.
PointSet fix_points(const DynSys& sys, long long n);

/// Per_n(sigma): points of exact period n. Requires n >= 1.
PointSet per_points(const DynSys& sys, int n);

/// The orbit (cycle) of x.
PointSet orbit(const DynSys& sys, int x);

/// Orbit partition, ordered by smallest member.
std::vector<PointSet> orbit_partition(const DynSys& sys);

/// Whether S is invariant under sigma (for a permutation this is
/// equivalent to invariance under sigma^{-1}).
bool is_invariant(const DynSys& sys, const PointSet& s);

/// Topological-dynamics report for a finite system.
///
/// On a finite discrete space no point is aperiodic, so the system is never
/// free and never topologically free; minimality and topological
/// transitivity both reduce to the permutation being a single cycle.
struct DynReport {
    int size = 0;
    bool is_free = false;
    bool is_top_free = false;
    bool is_minimal = false;
    bool is_transitive = false;
    std::vector<PointSet> orbits;
    std::vector<int> orbit_periods;
    /// Smallest n >= 1 with Fix_n nonempty; witnesses non-(topological-)freeness.
    int witness_fix_n = 0;
    PointSet witness_fix_points;
};

DynReport analyze(const DynSys& sys);

/// Relabels the points of one orbit as 0..p-1 along the cycle starting at
/// the smallest member. global_of_local[j] = sigma^j(base) in the parent.
struct SubSystem {
    DynSys sys;
    std::vector<int> global_of_local;
};

SubSystem restrict_to_orbit(const DynSys& sys, const PointSet& orb);

}  // namespace ell1

#endif
