#include "ell1/commutant.hpp"

namespace ell1 {

CommutantCheck in_commutant(const Ell1Elem& a) {
    for (const auto& [k, f] : a.terms()) {
        for (int x = 0; x < a.dim(); ++x) {
            if (f[x] == Complex(0.0, 0.0)) continue;
            if (a.sys().iterate(x, k) != x) return {false, std::make_pair(k, x)};
        }
    }
    return {true, std::nullopt};
}

bool commutes_with_cx_oracle(const Ell1Elem& a, double tol) {
    for (int x = 0; x < a.dim(); ++x) {
        const Ell1Elem ex = Ell1Elem::embed(a.sys(), indicator(a.dim(), x));
        if (norm(multiply(a, ex) - multiply(ex, a)) > tol) return false;
    }
    return true;
}

Ell1Elem commutant_component(const Ell1Elem& a) {
    std::map<long long, CFun> acc;
    for (const auto& [k, f] : a.terms()) {
        CFun g(f.size(), Complex(0.0, 0.0));
        for (int x = 0; x < a.dim(); ++x)
            if (a.sys().iterate(x, k) == x) g[x] = f[x];
        acc.emplace(k, std::move(g));
    }
    return Ell1Elem::from_terms(a.sys(), std::move(acc));
}

}  // namespace ell1
