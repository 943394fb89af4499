#include "ell1/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace ell1 {

double sup_norm(const CFun& f) {
    double m = 0.0;
    for (const Complex& v : f) m = std::max(m, std::abs(v));
    return m;
}

bool is_zero(const CFun& f) {
    for (const Complex& v : f)
        if (v.real() != 0.0 || v.imag() != 0.0) return false;
    return true;
}

CFun conj(const CFun& f) {
    CFun out(f.size());
    for (size_t i = 0; i < f.size(); ++i) out[i] = std::conj(f[i]);
    return out;
}

CFun pointwise_mul(const CFun& f, const CFun& g) {
    if (f.size() != g.size()) throw std::invalid_argument("pointwise_mul: dimension mismatch");
    CFun out(f.size());
    for (size_t i = 0; i < f.size(); ++i) out[i] = f[i] * g[i];
    return out;
}

CFun indicator(int dim, int x) {
    if (x < 0 || x >= dim) throw std::invalid_argument("indicator: point out of range");
    CFun f(dim, Complex(0.0, 0.0));
    f[x] = Complex(1.0, 0.0);
    return f;
}

CFun constant_fun(int dim, Complex c) { return CFun(dim, c); }

CFun alpha(const DynSys& sys, const CFun& f, long long n) {
    if (static_cast<int>(f.size()) != sys.size())
        throw std::invalid_argument("alpha: dimension mismatch");
    CFun out(f.size());
    for (int x = 0; x < sys.size(); ++x) out[x] = f[sys.iterate(x, -n)];
    return out;
}

void Ell1Elem::insert_term(long long k, CFun f) {
    if (static_cast<int>(f.size()) != sys_.size())
        throw std::invalid_argument("Ell1Elem: coefficient dimension mismatch");
    if (ell1::is_zero(f)) return;
    terms_[k] = std::move(f);
}

Ell1Elem Ell1Elem::identity(const DynSys& sys) { return delta_power(sys, 0); }

Ell1Elem Ell1Elem::delta_power(const DynSys& sys, long long n) {
    Ell1Elem a(sys);
    a.insert_term(n, constant_fun(sys.size(), Complex(1.0, 0.0)));
    return a;
}

Ell1Elem Ell1Elem::embed(const DynSys& sys, CFun f) {
    Ell1Elem a(sys);
    a.insert_term(0, std::move(f));
    return a;
}

Ell1Elem Ell1Elem::single_term(const DynSys& sys, long long k, CFun f) {
    Ell1Elem a(sys);
    a.insert_term(k, std::move(f));
    return a;
}

Ell1Elem Ell1Elem::from_terms(const DynSys& sys, std::map<long long, CFun> terms) {
    Ell1Elem a(sys);
    for (auto& [k, f] : terms) a.insert_term(k, std::move(f));
    return a;
}

CFun Ell1Elem::coefficient(long long k) const {
    auto it = terms_.find(k);
    if (it == terms_.end()) return CFun(sys_.size(), Complex(0.0, 0.0));
    return it->second;
}

long long Ell1Elem::min_degree() const {
    if (terms_.empty()) return 0;
    return terms_.begin()->first;
}

long long Ell1Elem::max_degree() const {
    if (terms_.empty()) return 0;
    return terms_.rbegin()->first;
}

long long Ell1Elem::support_radius() const {
    long long r = 0;
    for (const auto& [k, f] : terms_) r = std::max(r, std::abs(k));
    return r;
}

static void check_same_system(const Ell1Elem& a, const Ell1Elem& b, const char* op) {
    if (a.sys() != b.sys())
        throw std::invalid_argument(std::string(op) + ": elements live over different systems");
}

Ell1Elem multiply(const Ell1Elem& a, const Ell1Elem& b) {
    check_same_system(a, b, "multiply");
    std::map<long long, CFun> acc;
    const int m = a.dim();
    for (const auto& [k, ak] : a.terms()) {
        for (const auto& [j, bj] : b.terms()) {
            const CFun shifted = alpha(a.sys(), bj, k);
            auto [it, fresh] = acc.try_emplace(k + j, CFun(m, Complex(0.0, 0.0)));
            CFun& target = it->second;
            for (int x = 0; x < m; ++x) target[x] += ak[x] * shifted[x];
        }
    }
    return Ell1Elem::from_terms(a.sys(), std::move(acc));
}

Ell1Elem add(const Ell1Elem& a, const Ell1Elem& b) {
    check_same_system(a, b, "add");
    std::map<long long, CFun> acc = a.terms();
    for (const auto& [k, f] : b.terms()) {
        auto [it, fresh] = acc.try_emplace(k, CFun(a.dim(), Complex(0.0, 0.0)));
        CFun& target = it->second;
        for (int x = 0; x < a.dim(); ++x) target[x] += f[x];
    }
    return Ell1Elem::from_terms(a.sys(), std::move(acc));
}

Ell1Elem scale(Complex c, const Ell1Elem& a) {
    std::map<long long, CFun> acc;
    for (const auto& [k, f] : a.terms()) {
        CFun g(f.size());
        for (size_t i = 0; i < f.size(); ++i) g[i] = c * f[i];
        acc.emplace(k, std::move(g));
    }
    return Ell1Elem::from_terms(a.sys(), std::move(acc));
}

Ell1Elem adjoint(const Ell1Elem& a) {
    std::map<long long, CFun> acc;
    for (const auto& [k, f] : a.terms()) acc.emplace(-k, conj(alpha(a.sys(), f, -k)));
    return Ell1Elem::from_terms(a.sys(), std::move(acc));
}

double norm(const Ell1Elem& a) {
    std::vector<double> maxima;
    maxima.reserve(a.terms().size());
    for (const auto& [k, f] : a.terms()) maxima.push_back(sup_norm(f));
    std::sort(maxima.begin(), maxima.end());
    double s = 0.0;
    for (double v : maxima) s += v;
    return s;
}

CFun e_project(const Ell1Elem& a) { return a.coefficient(0); }

}  // namespace ell1
