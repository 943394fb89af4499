#ifndef ELL1_ALGEBRA_HPP
#define ELL1_ALGEBRA_HPP

#include <complex>
#include <map>
#include <vector>

#include "ell1/dynsys.hpp"

namespace ell1 {

using Complex = std::complex<double>;

/// A complex function on the points of a system, stored as one value per point.
using CFun = std::vector<Complex>;

/// max_x |f(x)|
double sup_norm(const CFun& f);
/// true iff every entry is exactly zero
bool is_zero(const CFun& f);
CFun conj(const CFun& f);
CFun pointwise_mul(const CFun& f, const CFun& g);
CFun indicator(int dim, int x);
CFun constant_fun(int dim, Complex c);

/// alpha^n(f) = f o sigma^{-n}, the automorphism of C(X) induced by sigma.
CFun alpha(const DynSys& sys, const CFun& f, long long n);

/// A finitely supported element a = sum_k a_k delta^k of the crossed product
/// of a finite system. Coefficients are kept in canonical form: the map is
/// sorted by degree and holds no exactly-zero function.
class Ell1Elem {
public:
    explicit Ell1Elem(DynSys sys) : sys_(std::move(sys)) {}

    static Ell1Elem zero(const DynSys& sys) { return Ell1Elem(sys); }
    /// chi_0, the identity.
    static Ell1Elem identity(const DynSys& sys);
    /// delta^n = chi_n.
    static Ell1Elem delta_power(const DynSys& sys, long long n);
    /// f placed at degree zero.
    static Ell1Elem embed(const DynSys& sys, CFun f);
    /// f * delta^k.
    static Ell1Elem single_term(const DynSys& sys, long long k, CFun f);
    /// Canonicalizing constructor from an arbitrary coefficient map.
    static Ell1Elem from_terms(const DynSys& sys, std::map<long long, CFun> terms);

    const DynSys& sys() const { return sys_; }
    int dim() const { return sys_.size(); }
    const std::map<long long, CFun>& terms() const { return terms_; }

    /// a_k, with the zero function when the degree is absent.
    CFun coefficient(long long k) const;
    bool is_zero() const { return terms_.empty(); }
    long long min_degree() const;
    long long max_degree() const;
    /// max |k| over the support (0 for the zero element).
    long long support_radius() const;

    bool operator==(const Ell1Elem& other) const {
        return sys_ == other.sys_ && terms_ == other.terms_;
    }
    bool operator!=(const Ell1Elem& other) const { return !(*this == other); }

private:
    DynSys sys_;
    std::map<long long, CFun> terms_;

    void insert_term(long long k, CFun f);
    friend Ell1Elem multiply(const Ell1Elem&, const Ell1Elem&);
    friend Ell1Elem add(const Ell1Elem&, const Ell1Elem&);
    friend Ell1Elem scale(Complex, const Ell1Elem&);
    friend Ell1Elem adjoint(const Ell1Elem&);
};

/// Twisted convolution: (ab)(n) = sum_k a_k . alpha^k(b_{n-k}).
Ell1Elem multiply(const Ell1Elem& a, const Ell1Elem& b);
Ell1Elem add(const Ell1Elem& a, const Ell1Elem& b);
Ell1Elem scale(Complex c, const Ell1Elem& a);
/// Involution: a*(n) = conj(alpha^n(a_{-n})).
Ell1Elem adjoint(const Ell1Elem& a);
/// The norm sum_k sup|a_k|. Per-degree maxima are summed in sorted order so
/// the value is invariant under degree reindexing.
double norm(const Ell1Elem& a);
/// E(a) = a_0, the canonical norm-one projection onto C(X).
CFun e_project(const Ell1Elem& a);

inline Ell1Elem operator*(const Ell1Elem& a, const Ell1Elem& b) { return multiply(a, b); }
inline Ell1Elem operator+(const Ell1Elem& a, const Ell1Elem& b) { return add(a, b); }
inline Ell1Elem operator*(Complex c, const Ell1Elem& a) { return scale(c, a); }
inline Ell1Elem operator-(const Ell1Elem& a, const Ell1Elem& b) {
    return add(a, scale(Complex(-1.0, 0.0), b));
}

}  // namespace ell1

#endif
