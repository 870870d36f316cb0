#pragma once

// Theta nullwerte, their z-gradients and the modular action on the Siegel
// upper half-space.

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "thetafay/characteristic.hpp"
#include "thetafay/group.hpp"
#include "thetafay/symplectic.hpp"

namespace thetafay {

using Complex = std::complex<double>;
using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using IntegerMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// A point tau = re + i*im of the Siegel upper half-space.
class SiegelPoint {
public:
    /// Throws NumericalError unless both parts are symmetric to 1e-12 and im
    /// is positive definite.
    SiegelPoint(RealMatrix re, RealMatrix im);
    static SiegelPoint from_complex(const ComplexMatrix& tau);
    /// i*scale*I
    static SiegelPoint scaled_identity(int g, double scale);

    int genus() const { return static_cast<int>(re_.rows()); }
    const RealMatrix& re() const { return re_; }
    const RealMatrix& im() const { return im_; }
    ComplexMatrix tau() const;
    double lambda_min() const { return lambda_min_; }

private:
    RealMatrix re_;
    RealMatrix im_;
    double lambda_min_ = 0;
};

/// im = I + Q'Q/4 and re symmetric, all entries of Q and re uniform in [-1/2, 1/2].
SiegelPoint sample_siegel(int g, std::mt19937_64& rng);
std::vector<SiegelPoint> sample_siegel_points(int g, std::size_t count, std::uint64_t seed);

/// Sampling guard on the smallest eigenvalue of im(tau).
inline constexpr double kMinImaginaryEigenvalue = 0.3;
inline constexpr int kMaxRadius = 40;
inline constexpr double kDefaultThetaTol = 1e-13;

struct ThetaEval {
    Complex value;
    double trunc_bound = 0;
    int radius = 0;
};

struct GradientEval {
    std::vector<Complex> value;
    double trunc_bound = 0;
    int radius = 0;
};

/// Bound on the discarded part of the series when summing over
/// ||p + a/2||_inf <= radius. Points with T-1 < ||x||_inf <= T number at most
/// 2g(2T+1)^{g-1} and each term is below exp(-pi lambda (T-1)^2); gradient
/// terms carry an extra factor 2 pi T.
double truncation_bound(int g, double lambda_min, int radius, bool gradient);

/// Smallest radius whose truncation bound is <= tol. Throws NumericalError
/// past kMaxRadius.
int truncation_radius(int g, double lambda_min, double tol, bool gradient);

/// theta[m](tau) = sum_p exp(pi i tau[p + a/2] + 2 pi i (p + a/2)'(b/2)).
/// Throws NumericalError if lambda_min(im tau) < kMinImaginaryEigenvalue.
ThetaEval theta_nullwert(const Characteristic& m, const SiegelPoint& tau, double tol = kDefaultThetaTol);
/// Same sum at a fixed radius; trunc_bound is the bound for that radius.
ThetaEval theta_nullwert_at_radius(const Characteristic& m, const SiegelPoint& tau, int radius);

/// grad_z theta[m](tau, z) at z = 0. Throws ParityError for even m.
GradientEval theta_gradient(const Characteristic& m, const SiegelPoint& tau, double tol = kDefaultThetaTol);
GradientEval theta_gradient_at_radius(const Characteristic& m, const SiegelPoint& tau, int radius);

namespace detail {

/// The series with a z argument, summed at a fixed radius. Only used to
/// cross-check gradients.
Complex theta_with_z(const Characteristic& m, const SiegelPoint& tau, const ComplexVector& z, int radius);

}  // namespace detail

/// Coefficients v_i v_j v_k v_l on the multisets i <= j <= k <= l in
/// lexicographic order; C(g+3, 4) entries.
struct Sym4Tensor {
    int g = 0;
    std::vector<Complex> coefficients;
};

/// The multisets indexing Sym4Tensor, zero-based.
std::vector<std::array<int, 4>> sym4_multisets(int g);
Sym4Tensor sym4(const std::vector<Complex>& v);

/// A 2g x 2g integer matrix (A,B;C,D) with sigma' J sigma = J, J = (0,I;-I,0).
class IntegerSymplectic {
public:
    /// Throws AlgebraError unless symplectic over Z.
    explicit IntegerSymplectic(IntegerMatrix mat);

    static IntegerSymplectic identity(int g);
    /// (0,-I;I,0)
    static IntegerSymplectic j_lift(int g);
    /// (I,S;0,I) with S symmetric 0/1.
    static IntegerSymplectic translation(const F2Matrix& s);
    static IntegerSymplectic translation(const IntegerMatrix& s);
    /// The lift recorded with a generator of Sp(g, F2).
    static IntegerSymplectic lift(const Generator& gen);

    int genus() const { return static_cast<int>(mat_.rows() / 2); }
    const IntegerMatrix& matrix() const { return mat_; }
    IntegerMatrix a() const { return mat_.topLeftCorner(genus(), genus()); }
    IntegerMatrix b() const { return mat_.topRightCorner(genus(), genus()); }
    IntegerMatrix c() const { return mat_.bottomLeftCorner(genus(), genus()); }
    IntegerMatrix d() const { return mat_.bottomRightCorner(genus(), genus()); }

    SymplecticF2 reduce_mod2() const;

    friend IntegerSymplectic operator*(const IntegerSymplectic& x, const IntegerSymplectic& y);

private:
    IntegerMatrix mat_;
};

bool is_integer_symplectic(const IntegerMatrix& m);

/// (A tau + B)(C tau + D)^{-1}, re-validated as a Siegel point.
SiegelPoint modular_apply(const IntegerSymplectic& sigma, const SiegelPoint& tau);

/// det(C tau + D) by partially pivoted LU.
Complex automorphy_det(const IntegerSymplectic& sigma, const SiegelPoint& tau);

/// |theta[sigma{m}]^4(sigma tau) - eps_m(sigma) det(C tau + D)^2 theta[m]^4(tau)|
/// divided by max(1, |theta[m]^4(tau)| |det|^2).
double check_transformation_4th(const IntegerSymplectic& sigma, const Characteristic& m, const SiegelPoint& tau,
                                double tol = kDefaultThetaTol);

/// "rows cols" header then one row per line of "re+imi" entries.
std::string complex_matrix_to_text(const ComplexMatrix& m);

}  // namespace thetafay
