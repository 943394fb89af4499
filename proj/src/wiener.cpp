#include "ell1/wiener.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ell1 {

FourierSeries FourierSeries::constant(Complex c) { return monomial(0, c); }

FourierSeries FourierSeries::monomial(long long n, Complex c) {
    FourierSeries u;
    if (c != Complex(0.0, 0.0)) u.c_[n] = c;
    return u;
}

FourierSeries FourierSeries::from_coeffs(std::map<long long, Complex> coeffs) {
    FourierSeries u;
    for (auto& [n, c] : coeffs)
        if (c != Complex(0.0, 0.0)) u.c_.emplace(n, c);
    return u;
}

Complex FourierSeries::coeff(long long n) const {
    auto it = c_.find(n);
    return it == c_.end() ? Complex(0.0, 0.0) : it->second;
}

FourierSeries conv(const FourierSeries& u, const FourierSeries& v) {
    std::map<long long, Complex> acc;
    for (const auto& [n, cn] : u.coeffs())
        for (const auto& [m, cm] : v.coeffs()) acc[n + m] += cn * cm;
    return FourierSeries::from_coeffs(std::move(acc));
}

FourierSeries add(const FourierSeries& u, const FourierSeries& v) {
    std::map<long long, Complex> acc = u.coeffs();
    for (const auto& [n, c] : v.coeffs()) acc[n] += c;
    return FourierSeries::from_coeffs(std::move(acc));
}

FourierSeries sub(const FourierSeries& u, const FourierSeries& v) {
    std::map<long long, Complex> acc = u.coeffs();
    for (const auto& [n, c] : v.coeffs()) acc[n] -= c;
    return FourierSeries::from_coeffs(std::move(acc));
}

FourierSeries scale(Complex c, const FourierSeries& u) {
    std::map<long long, Complex> acc;
    for (const auto& [n, cn] : u.coeffs()) acc[n] = c * cn;
    return FourierSeries::from_coeffs(std::move(acc));
}

FourierSeries ac_adjoint(const FourierSeries& u) {
    std::map<long long, Complex> acc;
    for (const auto& [n, c] : u.coeffs()) acc[-n] = std::conj(c);
    return FourierSeries::from_coeffs(std::move(acc));
}

double ac_norm(const FourierSeries& u) {
    std::vector<double> mods;
    mods.reserve(u.coeffs().size());
    for (const auto& [n, c] : u.coeffs()) mods.push_back(std::abs(c));
    std::sort(mods.begin(), mods.end());
    double s = 0.0;
    for (double v : mods) s += v;
    return s;
}

Complex eval_at(const FourierSeries& u, double theta) {
    Complex s(0.0, 0.0);
    for (const auto& [n, c] : u.coeffs())
        s += c * std::exp(Complex(0.0, theta * static_cast<double>(n)));
    return s;
}

void fft(std::vector<Complex>& data, bool inverse) {
    const size_t n = data.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("fft: size must be a power of two");
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        const double ang = 2.0 * std::numbers::pi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
        const Complex wlen(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            Complex w(1.0, 0.0);
            for (size_t j = 0; j < len / 2; ++j) {
                const Complex u = data[i + j];
                const Complex v = data[i + j + len / 2] * w;
                data[i + j] = u + v;
                data[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
    if (inverse)
        for (Complex& v : data) v /= static_cast<double>(n);
}

std::vector<Complex> sample_grid(const FourierSeries& u, int grid_size) {
    // u(theta_t) = sum_n c_n e^{2 pi i n t / N}: a size-N inverse transform of
    // the coefficients folded mod N, without the 1/N factor.
    if (grid_size <= 0 || (grid_size & (grid_size - 1)) != 0)
        throw std::invalid_argument("sample_grid: grid size must be a power of two");
    std::vector<Complex> folded(grid_size, Complex(0.0, 0.0));
    for (const auto& [n, c] : u.coeffs()) {
        long long r = n % grid_size;
        if (r < 0) r += grid_size;
        folded[static_cast<size_t>(r)] += c;
    }
    fft(folded, true);
    for (Complex& v : folded) v *= static_cast<double>(grid_size);
    return folded;
}

static int pow2_at_least(long long n) {
    int g = 1;
    while (g < n) g <<= 1;
    return g;
}

double grid_min_abs(const FourierSeries& u, int floor_size) {
    const int grid = pow2_at_least(std::max<long long>(floor_size, 8 * u.support_width()));
    double m = std::numeric_limits<double>::infinity();
    for (const Complex& v : sample_grid(u, grid)) m = std::min(m, std::abs(v));
    return m;
}

// Drops coefficients below the threshold or outside |n| <= max_support;
// returns the removed coefficient mass.
static double truncate_series(FourierSeries& u, double threshold, long long max_support) {
    std::map<long long, Complex> kept;
    double dropped = 0.0;
    for (const auto& [n, c] : u.coeffs()) {
        if (std::llabs(n) > max_support || std::abs(c) <= threshold)
            dropped += std::abs(c);
        else
            kept.emplace(n, c);
    }
    u = FourierSeries::from_coeffs(std::move(kept));
    return dropped;
}

InvertReport invert_detailed(const FourierSeries& u, double tol, long long max_support) {
    if (tol <= 0.0) throw std::invalid_argument("invert: tol must be positive");
    if (max_support < 1) throw std::invalid_argument("invert: max_support must be >= 1");

    const int grid = pow2_at_least(std::max<long long>(256, 8 * u.support_width()));
    const std::vector<Complex> samples = sample_grid(u, grid);
    double min_abs = std::numeric_limits<double>::infinity();
    for (const Complex& v : samples) min_abs = std::min(min_abs, std::abs(v));
    if (min_abs <= 1e-10)
        throw std::domain_error("invert: series is not invertible (grid minimum " +
                                std::to_string(min_abs) + " at threshold 1e-10)");

    InvertReport rep;
    rep.grid_size = grid;

    // Initial guess: pointwise reciprocal transformed back, coefficients read
    // off in the balanced window (-grid/2, grid/2].
    std::vector<Complex> recip(samples.size());
    for (size_t t = 0; t < samples.size(); ++t) recip[t] = Complex(1.0, 0.0) / samples[t];
    fft(recip, false);
    for (Complex& c : recip) c /= static_cast<double>(grid);
    std::map<long long, Complex> guess;
    for (int t = 0; t < grid; ++t) {
        const long long n = (t <= grid / 2) ? t : t - grid;
        if (std::llabs(n) <= max_support) guess[n] = recip[static_cast<size_t>(t)];
    }
    FourierSeries v = FourierSeries::from_coeffs(std::move(guess));

    const FourierSeries one = FourierSeries::constant(Complex(1.0, 0.0));
    const double long_width = std::max<long long>(1, u.support_width() + 2 * max_support);
    const double threshold = tol / (4.0 * long_width);

    rep.dropped_mass += truncate_series(v, threshold, max_support);
    double best_residual = std::numeric_limits<double>::infinity();
    FourierSeries best = v;
    int stalled = 0;
    for (int step = 0; step < 64; ++step) {
        const double residual = ac_norm(sub(conv(u, v), one));
        if (residual < best_residual) {
            best_residual = residual;
            best = v;
            stalled = 0;
        } else if (++stalled >= 2) {
            break;
        }
        if (residual <= tol) break;
        FourierSeries next = conv(v, sub(scale(Complex(2.0, 0.0), one), conv(u, v)));
        rep.dropped_mass += truncate_series(next, threshold, max_support);
        v = std::move(next);
    }
    rep.inverse = best;
    rep.residual = best_residual;
    rep.converged = best_residual <= tol;
    return rep;
}

FourierSeries invert(const FourierSeries& u, double tol, long long max_support) {
    InvertReport rep = invert_detailed(u, tol, max_support);
    if (!rep.converged)
        throw std::domain_error("invert: tolerance unreachable within max_support (best residual " +
                                std::to_string(rep.residual) + ")");
    return rep.inverse;
}

}  // namespace ell1
