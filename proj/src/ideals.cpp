#include "ell1/ideals.hpp"

#include <cmath>
#include <stdexcept>

namespace ell1 {

UnimodularWitness build_unimodular(const DynSys& sys, int x0, long long k0, int n0,
                                   Complex lambda) {
    if (n0 < 0) throw std::invalid_argument("build_unimodular: n0 must be >= 0");
    if (std::abs(std::abs(lambda) - 1.0) > 1e-12)
        throw std::invalid_argument("build_unimodular: lambda must be unimodular");
    if (n0 >= 1 && sys.iterate(x0, n0) != x0)
        throw std::invalid_argument("build_unimodular: x0 is not fixed by sigma^n0");
    if (sys.iterate(x0, k0) == x0)
        throw std::invalid_argument("build_unimodular: sigma^k0 fixes x0");

    // x0 is fixed by sigma^{n0}, so sigma^{-k0-j*n0}(x0) = sigma^{-k0}(x0)
    // for every j: the twist lands on a single point, distinct from x0.
    const int y = sys.iterate(x0, -k0);
    CFun g = constant_fun(sys.size(), Complex(1.0, 0.0));
    g[y] = std::conj(lambda);
    return UnimodularWitness{PointSet::single(sys.size(), x0), std::move(g), lambda};
}

Ell1Elem average_conjugate(const Ell1Elem& a, const CFun& g) {
    if (static_cast<int>(g.size()) != a.dim())
        throw std::invalid_argument("average_conjugate: dimension mismatch");
    for (const Complex& v : g)
        if (std::abs(std::abs(v) - 1.0) > 1e-12)
            throw std::invalid_argument("average_conjugate: g is not unimodular");
    const Ell1Elem ge = Ell1Elem::embed(a.sys(), g);
    const Ell1Elem gc = Ell1Elem::embed(a.sys(), conj(g));
    return scale(Complex(0.5, 0.0),
                 multiply(multiply(ge, a), gc) + multiply(multiply(gc, a), ge));
}

KillResult kill_coefficients(const Ell1Elem& a, int x0, int n0,
                             const std::vector<long long>& klist) {
    const DynSys& sys = a.sys();
    if (n0 < 0) throw std::invalid_argument("kill_coefficients: n0 must be >= 0");
    if (n0 >= 1 && sys.iterate(x0, n0) != x0)
        throw std::invalid_argument("kill_coefficients: x0 is not fixed by sigma^n0");
    for (long long k : klist)
        if (sys.iterate(x0, k) == x0)
            throw std::invalid_argument("kill_coefficients: sigma^k fixes x0 for a listed k");
    if (e_project(a)[x0] == Complex(0.0, 0.0))
        throw std::invalid_argument("kill_coefficients: E(a) vanishes at x0");

    KillerKit kit;
    kit.U = PointSet::single(sys.size(), x0);
    kit.f = indicator(sys.size(), x0);
    kit.thetas = {constant_fun(sys.size(), Complex(1.0, 0.0))};

    // One averaging pass per listed degree; the theta family doubles each
    // pass, mirroring the induction. lambda = i makes the killed values
    // cancel exactly in floating point.
    Ell1Elem acc = a;
    for (long long k : klist) {
        const UnimodularWitness w = build_unimodular(sys, x0, k, n0, Complex(0.0, 1.0));
        acc = average_conjugate(acc, w.g);
        std::vector<CFun> doubled;
        doubled.reserve(kit.thetas.size() * 2);
        for (const CFun& t : kit.thetas) doubled.push_back(pointwise_mul(w.g, t));
        for (const CFun& t : kit.thetas) doubled.push_back(pointwise_mul(conj(w.g), t));
        kit.thetas = std::move(doubled);
    }
    const Ell1Elem cutoff = multiply(Ell1Elem::embed(sys, kit.f), acc);
    return KillResult{std::move(kit), cutoff};
}

Ell1Elem principal_to_commutant(const Ell1Elem& a, int x0, long long k0) {
    const DynSys& sys = a.sys();
    if (a.coefficient(k0)[x0] == Complex(0.0, 0.0))
        throw std::invalid_argument("principal_to_commutant: a_{k0} vanishes at x0");
    const Ell1Elem b = multiply(a, Ell1Elem::delta_power(sys, -k0));
    const int n0 = sys.period(x0);
    if (n0 == 1) {
        // No averaging needed: cutting off by the indicator of x0 confines
        // every coefficient to a fixed point of all powers of sigma.
        return multiply(Ell1Elem::embed(sys, indicator(sys.size(), x0)), b);
    }
    std::vector<long long> klist;
    for (int k = 1; k < n0; ++k) klist.push_back(k);
    return kill_coefficients(b, x0, n0, klist).averaged;
}

VanishingIdeal::VanishingIdeal(DynSys sys, PointSet s) : sys_(std::move(sys)), s_(std::move(s)) {
    if (s_.universe != sys_.size())
        throw std::invalid_argument("VanishingIdeal: universe mismatch");
    if (!is_invariant(sys_, s_))
        throw std::invalid_argument("VanishingIdeal: set is not invariant under sigma");
}

bool VanishingIdeal::member(const Ell1Elem& a) const {
    if (a.sys() != sys_) throw std::invalid_argument("VanishingIdeal: system mismatch");
    for (const auto& [k, f] : a.terms())
        for (int x : s_.members)
            if (f[x] != Complex(0.0, 0.0)) return false;
    return true;
}

VanishingIdeal vanishing_ideal(const DynSys& sys, const std::vector<int>& orbit_indices) {
    const std::vector<PointSet> parts = orbit_partition(sys);
    PointSet s = PointSet::of(sys.size(), {});
    for (int i : orbit_indices) {
        if (i < 0 || i >= static_cast<int>(parts.size()))
            throw std::invalid_argument("vanishing_ideal: orbit index out of range");
        s = set_union(s, parts[i]);
    }
    return VanishingIdeal(sys, std::move(s));
}

VanishingIdeal intersect(const VanishingIdeal& a, const VanishingIdeal& b) {
    if (a.sys() != b.sys()) throw std::invalid_argument("intersect: system mismatch");
    return VanishingIdeal(a.sys(), set_union(a.set(), b.set()));
}

}  // namespace ell1
