#include "ell1/dynsys.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ell1 {

DynSys::DynSys(std::vector<int> perm) : perm_(std::move(perm)) {
    const int m = static_cast<int>(perm_.size());
    if (m < 1) throw std::invalid_argument("DynSys: permutation must be nonempty");
    std::vector<bool> seen(m, false);
    inv_.assign(m, -1);
    for (int x = 0; x < m; ++x) {
        const int y = perm_[x];
        if (y < 0 || y >= m) throw std::invalid_argument("DynSys: image out of range");
        if (seen[y]) throw std::invalid_argument("DynSys: not a bijection");
        seen[y] = true;
        inv_[y] = x;
    }
    period_.assign(m, 0);
    for (int x = 0; x < m; ++x) {
        if (period_[x] != 0) continue;
        int len = 0;
        int y = x;
        do {
            y = perm_[y];
            ++len;
        } while (y != x);
        y = x;
        do {
            period_[y] = len;
            y = perm_[y];
        } while (y != x);
    }
}

void DynSys::check_index(int x) const {
    if (x < 0 || x >= size()) throw std::invalid_argument("DynSys: point index out of range");
}

int DynSys::image(int x) const {
    check_index(x);
    return perm_[x];
}

int DynSys::preimage(int x) const {
    check_index(x);
    return inv_[x];
}

int DynSys::iterate(int x, long long n) const {
    check_index(x);
    const long long len = period_[x];
    long long r = n % len;
    if (r < 0) r += len;
    int y = x;
    for (long long i = 0; i < r; ++i) y = perm_[y];
    return y;
}

int DynSys::period(int x) const {
    check_index(x);
    return period_[x];
}

long long DynSys::order() const {
    long long o = 1;
    for (int x = 0; x < size(); ++x) o = std::lcm(o, static_cast<long long>(period_[x]));
    return o;
}

bool PointSet::contains(int x) const {
    return std::binary_search(members.begin(), members.end(), x);
}

PointSet PointSet::full(int universe) {
    PointSet s;
    s.universe = universe;
    s.members.resize(universe);
    std::iota(s.members.begin(), s.members.end(), 0);
    return s;
}

PointSet PointSet::of(int universe, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (int x : members)
        if (x < 0 || x >= universe) throw std::invalid_argument("PointSet: member out of range");
    PointSet s;
    s.universe = universe;
    s.members = std::move(members);
    return s;
}

PointSet PointSet::single(int universe, int x) { return of(universe, {x}); }

PointSet set_union(const PointSet& a, const PointSet& b) {
    if (a.universe != b.universe) throw std::invalid_argument("PointSet: universe mismatch");
    std::vector<int> out;
    std::set_union(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                   std::back_inserter(out));
    return PointSet::of(a.universe, std::move(out));
}

PointSet set_complement(const PointSet& a) {
    std::vector<int> out;
    for (int x = 0; x < a.universe; ++x)
        if (!a.contains(x)) out.push_back(x);
    return PointSet::of(a.universe, std::move(out));
}

PointSet fix_points(const DynSys& sys, long long n) {
    std::vector<int> out;
    for (int x = 0; x < sys.size(); ++x)
        if (sys.iterate(x, n) == x) out.push_back(x);
    return PointSet::of(sys.size(), std::move(out));
}

PointSet per_points(const DynSys& sys, int n) {
    if (n < 1) throw std::invalid_argument("per_points: n must be >= 1");
    std::vector<int> out;
    for (int x = 0; x < sys.size(); ++x)
        if (sys.period(x) == n) out.push_back(x);
    return PointSet::of(sys.size(), std::move(out));
}

PointSet orbit(const DynSys& sys, int x) {
    std::vector<int> out;
    int y = x;
    do {
        out.push_back(y);
        y = sys.image(y);
    } while (y != x);
    return PointSet::of(sys.size(), std::move(out));
}

std::vector<PointSet> orbit_partition(const DynSys& sys) {
    std::vector<bool> seen(sys.size(), false);
    std::vector<PointSet> parts;
    for (int x = 0; x < sys.size(); ++x) {
        if (seen[x]) continue;
        PointSet orb = orbit(sys, x);
        for (int y : orb.members) seen[y] = true;
        parts.push_back(std::move(orb));
    }
    return parts;
}

bool is_invariant(const DynSys& sys, const PointSet& s) {
    if (s.universe != sys.size()) throw std::invalid_argument("is_invariant: universe mismatch");
    for (int x : s.members)
        if (!s.contains(sys.image(x))) return false;
    return true;
}

DynReport analyze(const DynSys& sys) {
    DynReport rep;
    rep.size = sys.size();
    rep.orbits = orbit_partition(sys);
    for (const PointSet& orb : rep.orbits) rep.orbit_periods.push_back(orb.size());

    // Finite permutations have no aperiodic points, so the system is neither
    // free nor topologically free; the smallest period witnesses both.
    rep.is_free = false;
    rep.is_top_free = false;
    int min_period = sys.size() + 1;
    for (int x = 0; x < sys.size(); ++x) min_period = std::min(min_period, sys.period(x));
    rep.witness_fix_n = min_period;
    rep.witness_fix_points = fix_points(sys, min_period);

    const bool single_orbit = rep.orbits.size() == 1;
    rep.is_minimal = single_orbit;
    rep.is_transitive = single_orbit;
    return rep;
}

SubSystem restrict_to_orbit(const DynSys& sys, const PointSet& orb) {
    if (orb.empty()) throw std::invalid_argument("restrict_to_orbit: empty orbit");
    const int base = orb.members.front();
    const int p = orb.size();
    std::vector<int> global_of_local(p);
    int y = base;
    for (int j = 0; j < p; ++j) {
        global_of_local[j] = y;
        y = sys.image(y);
    }
    if (y != base || orbit(sys, base).members != orb.members)
        throw std::invalid_argument("restrict_to_orbit: set is not a single orbit");
    std::vector<int> perm(p);
    for (int j = 0; j < p; ++j) perm[j] = (j + 1) % p;
    return SubSystem{DynSys(perm), std::move(global_of_local)};
}

}  // namespace ell1
