#ifndef ELL1_REPR_HPP
#define ELL1_REPR_HPP

#include "ell1/algebra.hpp"

namespace ell1 {

/// A dense complex matrix carrying a representation value. basis_offset is
/// the index of the first basis vector for windows of the bilateral-shift
/// representation; it is 0 for the finite-dimensional family.
struct ReprMatrix {
    int dim = 0;
    int basis_offset = 0;
    std::vector<Complex> data;  // row-major, dim*dim

    ReprMatrix() = default;
    ReprMatrix(int dim_, int basis_offset_ = 0)
        : dim(dim_), basis_offset(basis_offset_), data(static_cast<size_t>(dim_) * dim_) {}

    Complex& at(int i, int j) { return data[static_cast<size_t>(i) * dim + j]; }
    const Complex& at(int i, int j) const { return data[static_cast<size_t>(i) * dim + j]; }

    static ReprMatrix identity(int dim, int basis_offset = 0);
    bool operator==(const ReprMatrix&) const = default;
};

ReprMatrix rm_mul(const ReprMatrix& a, const ReprMatrix& b);
ReprMatrix rm_add(const ReprMatrix& a, const ReprMatrix& b);
ReprMatrix rm_sub(const ReprMatrix& a, const ReprMatrix& b);
ReprMatrix rm_adjoint(const ReprMatrix& a);
/// max_{i,j} |a_ij|
double rm_max_abs(const ReprMatrix& a);
/// Largest singular value.
double operator_norm(const ReprMatrix& a);
/// true iff a equals its conjugate transpose entrywise, exactly.
bool is_conjugate_symmetric(const ReprMatrix& a);

/// The n-dimensional representation at a point x fixed by sigma^n, with the
/// cyclic shift carrying corner entry z = exp(i theta): functions act
/// diagonally by f(sigma^j x), delta acts by e_j -> e_{j+1}, e_{n-1} -> z e_0.
ReprMatrix pi_finite(const DynSys& sys, int x, int n, double theta, const Ell1Elem& a);

/// The [lo, hi] window of the bilateral representation at x: functions act
/// diagonally by f(sigma^j x) and delta shifts e_j -> e_{j+1}. Entry
/// (row j, col i) of the window is a_{j-i}(sigma^j x); rows/columns are
/// indexed by basis indices lo..hi.
ReprMatrix pi_window(const DynSys& sys, int x, const Ell1Elem& a, int lo, int hi);

/// w = f chi_0 - f delta^{n0} for f supported in Fix_{n0}. The finite
/// representations at z = 1 over Fix_{n0} and the windowed representations
/// outside Fix_{n0} all vanish on w.
Ell1Elem kernel_witness(const DynSys& sys, int n0, const CFun& f);

}  // namespace ell1

#endif
