#ifndef ELL1_WIENER_HPP
#define ELL1_WIENER_HPP

#include <complex>
#include <map>
#include <vector>

namespace ell1 {

using Complex = std::complex<double>;

/// A truncated absolutely convergent Fourier series sum_n c_n z^n on the
/// circle. Canonical form drops exactly-zero coefficients.
class FourierSeries {
public:
    FourierSeries() = default;
    static FourierSeries constant(Complex c);
    static FourierSeries monomial(long long n, Complex c = Complex(1.0, 0.0));
    static FourierSeries from_coeffs(std::map<long long, Complex> coeffs);

    Complex coeff(long long n) const;
    const std::map<long long, Complex>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long long min_degree() const { return c_.empty() ? 0 : c_.begin()->first; }
    long long max_degree() const { return c_.empty() ? 0 : c_.rbegin()->first; }
    /// Number of degrees spanned by the support (0 for the zero series).
    long long support_width() const {
        return c_.empty() ? 0 : max_degree() - min_degree() + 1;
    }

    bool operator==(const FourierSeries& other) const { return c_ == other.c_; }
    bool operator!=(const FourierSeries& other) const { return !(*this == other); }

private:
    std::map<long long, Complex> c_;
};

/// Coefficient convolution = pointwise product of the functions on the circle.
FourierSeries conv(const FourierSeries& u, const FourierSeries& v);
FourierSeries add(const FourierSeries& u, const FourierSeries& v);
FourierSeries sub(const FourierSeries& u, const FourierSeries& v);
FourierSeries scale(Complex c, const FourierSeries& u);
/// Involution c_n -> conj(c_{-n}); corresponds to pointwise conjugation on the circle.
FourierSeries ac_adjoint(const FourierSeries& u);
/// sum_n |c_n|, summed over moduli in sorted order.
double ac_norm(const FourierSeries& u);
/// Value at z = exp(i theta).
Complex eval_at(const FourierSeries& u, double theta);

inline FourierSeries operator*(const FourierSeries& u, const FourierSeries& v) {
    return conv(u, v);
}
inline FourierSeries operator+(const FourierSeries& u, const FourierSeries& v) {
    return add(u, v);
}
inline FourierSeries operator-(const FourierSeries& u, const FourierSeries& v) {
    return sub(u, v);
}
inline FourierSeries operator*(Complex c, const FourierSeries& u) { return scale(c, u); }

/// In-place radix-2 FFT; data.size() must be a power of two.
void fft(std::vector<Complex>& data, bool inverse);

/// Samples u at the N grid angles 2*pi*t/N.
std::vector<Complex> sample_grid(const FourierSeries& u, int grid_size);

/// Minimum of |u| over a power-of-two grid of size >= max(floor, 8*width).
double grid_min_abs(const FourierSeries& u, int floor_size = 256);

struct InvertReport {
    FourierSeries inverse;
    double residual = 0.0;       // |u * inverse - 1| in the coefficient norm
    double dropped_mass = 0.0;   // total coefficient mass removed by truncation
    int grid_size = 0;
    bool converged = false;
};

/// Reciprocal in the coefficient algebra: pointwise reciprocal on a grid as
/// the initial guess, then Newton steps v <- v(2 - uv) with truncation, until
/// |u v - 1| <= tol. Coefficients of the result are confined to
/// |n| <= max_support. Throws when u vanishes on the grid (threshold 1e-10);
/// reports converged = false with the best residual when tol is unreachable.
InvertReport invert_detailed(const FourierSeries& u, double tol, long long max_support);

/// As invert_detailed, but throws when the tolerance is unreachable.
FourierSeries invert(const FourierSeries& u, double tol, long long max_support = 4096);

}  // namespace ell1

#endif
