#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <variant>
#include <vector>

namespace twu {

// Two-channel bank parameterized by rotation angles theta_0..theta_K. The
// filters come from the cascade
//
//   [H0(z); H1(z)] = diag(1,-1) R_K L(z^2) ... R_1 L(z^2) R_0 [1; z^-1]
//
// with R_k a Givens rotation and L(z^2) a one-sample delay on the second
// branch. Any angle values yield an orthogonal pair of length 2K+2, so
// double-shift orthogonality is structural, not numerical.
class LatticeFilterBank {
public:
    explicit LatticeFilterBank(std::vector<double> angles);

    const std::vector<double>& angles() const { return angles_; }
    std::size_t stages() const { return angles_.size() - 1; }  // K
    std::size_t taps() const { return 2 * angles_.size(); }    // filter length 2K+2

private:
    std::vector<double> angles_;
};

// Free-coefficient bank. Only the low-pass taps are independent; the
// high-pass is always the alias-cancellation mirror
//   h1(n) = (-1)^n h0(N-1-n)
// and is recomputed from h0 on construction, never stored independently.
class CoefficientFilterBank {
public:
    explicit CoefficientFilterBank(std::vector<double> lowpass);

    const std::vector<double>& h0() const { return h0_; }
    const std::vector<double>& h1() const { return h1_; }
    std::size_t taps() const { return h0_.size(); }

private:
    std::vector<double> h0_;
    std::vector<double> h1_;
};

// Half-band penalty value together with its weight in a composite loss.
struct PrPenalty {
    double value = 0.0;  // >= 0, zero exactly on the half-band manifold
    double alpha = 0.0;  // >= 0
    double weighted() const { return alpha * value; }
};

enum class BankMode { lattice, free_taps };

using AnyFilterBank = std::variant<LatticeFilterBank, CoefficientFilterBank>;

// Expand the lattice cascade into tap coefficients.
CoefficientFilterBank lattice_to_filters(const LatticeFilterBank& bank);

// h1(n) = (-1)^n h0(N-1-n); length must be even and >= 2.
std::vector<double> highpass_from_lowpass(std::span<const double> h0);

// Half-band deviation: |1 - sum h^2|^2 plus the squared double-shift
// correlations sum_n h(n) h(n+2l) for l = 1..N/2.
double pr_loss(std::span<const double> h0);

// Analytic d(pr_loss)/dh0.
std::vector<double> pr_loss_gradient(std::span<const double> h0);

// d tap / d angle for every tap of h0 and h1, row-major over angles.
struct FilterJacobian {
    std::size_t n_angles = 0;
    std::size_t n_taps = 0;
    std::vector<double> dh0;  // n_angles x n_taps
    std::vector<double> dh1;

    double dh0_at(std::size_t angle, std::size_t tap) const { return dh0[angle * n_taps + tap]; }
    double dh1_at(std::size_t angle, std::size_t tap) const { return dh1[angle * n_taps + tap]; }
};

FilterJacobian filters_jacobian(const LatticeFilterBank& bank);

// Reference initializations: 2 -> Haar, 4 -> DB2, 6 -> DB3, 8 -> DB4.
LatticeFilterBank init_lattice_bank(int taps);
CoefficientFilterBank init_free_bank(int taps);
AnyFilterBank init_filter_bank(int taps, BankMode mode);

// Recover lattice angles whose expansion reproduces the given orthogonal
// low-pass taps: peel the cascade stage by stage, then polish with
// Gauss-Newton on the tap residuals.
std::vector<double> fit_lattice_angles(std::span<const double> h0_reference);

// Plain-text key-value serialization: mode, taps, then angles= or h0= as
// comma-separated decimals with 17 significant digits.
void save_filter_bank(std::ostream& out, const LatticeFilterBank& bank);
void save_filter_bank(std::ostream& out, const CoefficientFilterBank& bank);
AnyFilterBank load_filter_bank(std::istream& in);

// |H0|, |H1| sampled at omega_k = k*pi/(n_samples-1); rows are
// {omega, |H0|, |H1|}.
std::vector<std::array<double, 3>> frequency_response(const CoefficientFilterBank& bank,
                                                      std::size_t n_samples);

}  // namespace twu
