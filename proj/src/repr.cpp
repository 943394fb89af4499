#include "ell1/repr.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <stdexcept>

namespace ell1 {

ReprMatrix ReprMatrix::identity(int dim, int basis_offset) {
    ReprMatrix m(dim, basis_offset);
    for (int i = 0; i < dim; ++i) m.at(i, i) = Complex(1.0, 0.0);
    return m;
}

static void check_dims(const ReprMatrix& a, const ReprMatrix& b, const char* op) {
    if (a.dim != b.dim) throw std::invalid_argument(std::string(op) + ": dimension mismatch");
}

ReprMatrix rm_mul(const ReprMatrix& a, const ReprMatrix& b) {
    check_dims(a, b, "rm_mul");
    ReprMatrix c(a.dim, a.basis_offset);
    for (int i = 0; i < a.dim; ++i)
        for (int k = 0; k < a.dim; ++k) {
            const Complex aik = a.at(i, k);
            if (aik == Complex(0.0, 0.0)) continue;
            for (int j = 0; j < a.dim; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

ReprMatrix rm_add(const ReprMatrix& a, const ReprMatrix& b) {
    check_dims(a, b, "rm_add");
    ReprMatrix c = a;
    for (size_t i = 0; i < c.data.size(); ++i) c.data[i] += b.data[i];
    return c;
}

ReprMatrix rm_sub(const ReprMatrix& a, const ReprMatrix& b) {
    check_dims(a, b, "rm_sub");
    ReprMatrix c = a;
    for (size_t i = 0; i < c.data.size(); ++i) c.data[i] -= b.data[i];
    return c;
}

ReprMatrix rm_adjoint(const ReprMatrix& a) {
    ReprMatrix c(a.dim, a.basis_offset);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) c.at(i, j) = std::conj(a.at(j, i));
    return c;
}

double rm_max_abs(const ReprMatrix& a) {
    double m = 0.0;
    for (const Complex& v : a.data) m = std::max(m, std::abs(v));
    return m;
}

double operator_norm(const ReprMatrix& a) {
    Eigen::MatrixXcd m(a.dim, a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) m(i, j) = a.at(i, j);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    return a.dim == 0 ? 0.0 : svd.singularValues()(0);
}

bool is_conjugate_symmetric(const ReprMatrix& a) {
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            if (a.at(i, j) != std::conj(a.at(j, i))) return false;
    return true;
}

ReprMatrix pi_finite(const DynSys& sys, int x, int n, double theta, const Ell1Elem& a) {
    if (a.sys() != sys) throw std::invalid_argument("pi_finite: system mismatch");
    if (n < 1) throw std::invalid_argument("pi_finite: n must be >= 1");
    if (sys.iterate(x, n) != x)
        throw std::invalid_argument("pi_finite: x is not fixed by sigma^n");
    const Complex z = std::exp(Complex(0.0, theta));

    ReprMatrix shift(n);
    for (int j = 0; j + 1 < n; ++j) shift.at(j + 1, j) = Complex(1.0, 0.0);
    shift.at(0, n - 1) = z;
    const ReprMatrix shift_inv = rm_adjoint(shift);  // unitary for |z| = 1

    ReprMatrix out(n);
    for (const auto& [k, f] : a.terms()) {
        ReprMatrix power = ReprMatrix::identity(n);
        const ReprMatrix& step = k >= 0 ? shift : shift_inv;
        for (long long i = 0; i < std::llabs(k); ++i) power = rm_mul(step, power);
        // diag(f(sigma^j x)) applied after the shift
        for (int row = 0; row < n; ++row) {
            const Complex fv = f[sys.iterate(x, row)];
            for (int col = 0; col < n; ++col) out.at(row, col) += fv * power.at(row, col);
        }
    }
    return out;
}

ReprMatrix pi_window(const DynSys& sys, int x, const Ell1Elem& a, int lo, int hi) {
    if (a.sys() != sys) throw std::invalid_argument("pi_window: system mismatch");
    if (lo > hi) throw std::invalid_argument("pi_window: lo must be <= hi");
    const int dim = hi - lo + 1;
    ReprMatrix out(dim, lo);
    for (int row = 0; row < dim; ++row) {
        const int j = lo + row;
        for (int col = 0; col < dim; ++col) {
            const int i = lo + col;
            const CFun f = a.coefficient(j - i);
            out.at(row, col) = f[sys.iterate(x, j)];
        }
    }
    return out;
}

Ell1Elem kernel_witness(const DynSys& sys, int n0, const CFun& f) {
    if (n0 < 1) throw std::invalid_argument("kernel_witness: n0 must be >= 1");
    if (static_cast<int>(f.size()) != sys.size())
        throw std::invalid_argument("kernel_witness: dimension mismatch");
    if (is_zero(f)) throw std::invalid_argument("kernel_witness: f must be nonzero");
    const PointSet fix = fix_points(sys, n0);
    if (fix.empty()) throw std::invalid_argument("kernel_witness: Fix_n0 is empty");
    for (int x = 0; x < sys.size(); ++x)
        if (f[x] != Complex(0.0, 0.0) && !fix.contains(x))
            throw std::invalid_argument("kernel_witness: f is supported outside Fix_n0");
    return Ell1Elem::embed(sys, f) - Ell1Elem::single_term(sys, n0, f);
}

}  // namespace ell1
