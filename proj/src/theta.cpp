#include "thetafay/theta.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>

#include "thetafay/errors.hpp"

namespace thetafay {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSymmetryTol = 1e-12;

void check_symmetric(const RealMatrix& m, const char* what) {
    if (m.rows() != m.cols() || m.rows() < 1) throw DimensionError(std::string(what) + " must be a nonempty square matrix");
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol) {
        throw NumericalError(std::string(what) + " is not symmetric to 1e-12");
    }
}

// Values of p_i + a_i/2 with |p_i + a_i/2| <= radius.
std::vector<double> coordinate_values(bool half, int radius) {
    std::vector<double> xs;
    if (half) {
        for (int p = -radius; p < radius; ++p) xs.push_back(p + 0.5);
    } else {
        for (int p = -radius; p <= radius; ++p) xs.push_back(p);
    }
    return xs;
}

// Calls visit(x) for every x in Z^g + a/2 with ||x||_inf <= radius.
template <typename Visit>
void for_each_lattice_point(const Characteristic& m, int radius, Visit&& visit) {
    const int g = m.genus();
    std::vector<std::vector<double>> axes;
    axes.reserve(static_cast<std::size_t>(g));
    for (int i = 0; i < g; ++i) axes.push_back(coordinate_values(m.a().get(static_cast<std::size_t>(i)), radius));
    std::vector<std::size_t> pos(static_cast<std::size_t>(g), 0);
    Eigen::VectorXd x(g);
    while (true) {
        for (int i = 0; i < g; ++i) x(i) = axes[static_cast<std::size_t>(i)][pos[static_cast<std::size_t>(i)]];
        visit(x);
        int i = g - 1;
        while (i >= 0 && ++pos[static_cast<std::size_t>(i)] == axes[static_cast<std::size_t>(i)].size()) {
            pos[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }
}

Eigen::VectorXd half_b(const Characteristic& m) {
    Eigen::VectorXd b(m.genus());
    for (int i = 0; i < m.genus(); ++i) b(i) = m.b().get(static_cast<std::size_t>(i)) ? 0.5 : 0.0;
    return b;
}

// exp(pi i x'tau x + 2 pi i x'(b/2))
Complex series_term(const Eigen::VectorXd& x, const RealMatrix& re, const RealMatrix& im, const Eigen::VectorXd& hb) {
    const double qre = x.dot(re * x);
    const double qim = x.dot(im * x);
    const double phase = kPi * qre + 2 * kPi * x.dot(hb);
    return std::exp(-kPi * qim) * Complex(std::cos(phase), std::sin(phase));
}

void check_sampling_guard(const SiegelPoint& tau) {
    if (tau.lambda_min() < kMinImaginaryEigenvalue) {
        throw NumericalError("smallest eigenvalue of im(tau) is " + std::to_string(tau.lambda_min()) +
                             ", below the sampling guard " + std::to_string(kMinImaginaryEigenvalue));
    }
}

void check_genus(const Characteristic& m, const SiegelPoint& tau) {
    if (m.genus() != tau.genus()) throw DimensionError("characteristic and tau have different genus");
}

}  // namespace

SiegelPoint::SiegelPoint(RealMatrix re, RealMatrix im) : re_(std::move(re)), im_(std::move(im)) {
    check_symmetric(re_, "re(tau)");
    check_symmetric(im_, "im(tau)");
    if (re_.rows() != im_.rows()) throw DimensionError("re(tau) and im(tau) differ in size");
    const RealMatrix sym = (im_ + im_.transpose()) / 2;
    if (sym.llt().info() != Eigen::Success) throw NumericalError("im(tau) is not positive definite");
    lambda_min_ = Eigen::SelfAdjointEigenSolver<RealMatrix>(sym, Eigen::EigenvaluesOnly).eigenvalues()(0);
    if (!(lambda_min_ > 0)) throw NumericalError("im(tau) is not positive definite");
}

SiegelPoint SiegelPoint::from_complex(const ComplexMatrix& tau) { return {tau.real(), tau.imag()}; }

SiegelPoint SiegelPoint::scaled_identity(int g, double scale) {
    return {RealMatrix::Zero(g, g), scale * RealMatrix::Identity(g, g)};
}

ComplexMatrix SiegelPoint::tau() const {
    ComplexMatrix t(re_.rows(), re_.cols());
    t.real() = re_;
    t.imag() = im_;
    return t;
}

SiegelPoint sample_siegel(int g, std::mt19937_64& rng) {
    if (g < 1) throw GenusError("sample_siegel: genus must be >= 1");
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    RealMatrix q(g, g), re(g, g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) q(i, j) = u(rng);
    for (int i = 0; i < g; ++i) {
        for (int j = i; j < g; ++j) re(i, j) = re(j, i) = u(rng);
    }
    RealMatrix im = RealMatrix::Identity(g, g) + 0.25 * q.transpose() * q;
    im = (im + im.transpose()) / 2;
    return {re, im};
}

std::vector<SiegelPoint> sample_siegel_points(int g, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<SiegelPoint> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(sample_siegel(g, rng));
    return out;
}

double truncation_bound(int g, double lambda_min, int radius, bool gradient) {
    double tail = 0;
    for (int t = radius + 1;; ++t) {
        const double shell = 2.0 * g * std::pow(2.0 * t + 1, g - 1);
        double term = shell * std::exp(-kPi * lambda_min * double(t - 1) * double(t - 1));
        if (gradient) term *= 2 * kPi * t;
        tail += term;
        if (term <= tail * 1e-18 || term < std::numeric_limits<double>::min()) break;
    }
    return tail;
}

int truncation_radius(int g, double lambda_min, double tol, bool gradient) {
    if (!(tol > 0)) throw NumericalError("tolerance must be positive");
    for (int r = 1; r <= kMaxRadius; ++r) {
        if (truncation_bound(g, lambda_min, r, gradient) <= tol) return r;
    }
    throw NumericalError("tolerance " + std::to_string(tol) + " unreachable within radius " +
                         std::to_string(kMaxRadius) + " (ill-conditioned tau)");
}

ThetaEval theta_nullwert_at_radius(const Characteristic& m, const SiegelPoint& tau, int radius) {
    check_genus(m, tau);
    const auto hb = half_b(m);
    Complex sum = 0;
    for_each_lattice_point(m, radius, [&](const Eigen::VectorXd& x) { sum += series_term(x, tau.re(), tau.im(), hb); });
    return {sum, truncation_bound(m.genus(), tau.lambda_min(), radius, false), radius};
}

ThetaEval theta_nullwert(const Characteristic& m, const SiegelPoint& tau, double tol) {
    check_genus(m, tau);
    check_sampling_guard(tau);
    return theta_nullwert_at_radius(m, tau, truncation_radius(m.genus(), tau.lambda_min(), tol, false));
}

GradientEval theta_gradient_at_radius(const Characteristic& m, const SiegelPoint& tau, int radius) {
    check_genus(m, tau);
    if (parity(m) == Parity::Even) {
        throw ParityError("theta gradient requested for even characteristic " + m.to_string() +
                          "; it vanishes identically");
    }
    const int g = m.genus();
    const auto hb = half_b(m);
    Eigen::VectorXcd grad = Eigen::VectorXcd::Zero(g);
    for_each_lattice_point(m, radius, [&](const Eigen::VectorXd& x) {
        const Complex term = series_term(x, tau.re(), tau.im(), hb);
        for (int j = 0; j < g; ++j) grad(j) += Complex(0, 2 * kPi * x(j)) * term;
    });
    return {std::vector<Complex>(grad.data(), grad.data() + g), truncation_bound(g, tau.lambda_min(), radius, true),
            radius};
}

GradientEval theta_gradient(const Characteristic& m, const SiegelPoint& tau, double tol) {
    check_genus(m, tau);
    check_sampling_guard(tau);
    if (parity(m) == Parity::Even) {
        throw ParityError("theta gradient requested for even characteristic " + m.to_string() +
                          "; it vanishes identically");
    }
    return theta_gradient_at_radius(m, tau, truncation_radius(m.genus(), tau.lambda_min(), tol, true));
}

namespace detail {

Complex theta_with_z(const Characteristic& m, const SiegelPoint& tau, const ComplexVector& z, int radius) {
    check_genus(m, tau);
    if (z.size() != m.genus()) throw DimensionError("theta_with_z: z has the wrong length");
    const auto hb = half_b(m);
    const ComplexMatrix t = tau.tau();
    const Complex i(0, 1);
    Complex sum = 0;
    for_each_lattice_point(m, radius, [&](const Eigen::VectorXd& x) {
        const Eigen::VectorXcd xc = x.cast<Complex>();
        const Complex q = xc.dot(t * xc);
        const Complex lin = xc.dot(z + hb.cast<Complex>());
        sum += std::exp(i * kPi * q + 2.0 * i * kPi * lin);
    });
    return sum;
}

}  // namespace detail

std::vector<std::array<int, 4>> sym4_multisets(int g) {
    std::vector<std::array<int, 4>> out;
    for (int i = 0; i < g; ++i)
        for (int j = i; j < g; ++j)
            for (int k = j; k < g; ++k)
                for (int l = k; l < g; ++l) out.push_back({i, j, k, l});
    return out;
}

Sym4Tensor sym4(const std::vector<Complex>& v) {
    const int g = static_cast<int>(v.size());
    Sym4Tensor out{g, {}};
    for (const auto& [i, j, k, l] : sym4_multisets(g)) {
        out.coefficients.push_back(v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)] *
                                   v[static_cast<std::size_t>(k)] * v[static_cast<std::size_t>(l)]);
    }
    return out;
}

bool is_integer_symplectic(const IntegerMatrix& m) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0 || m.rows() == 0) return false;
    const auto g = m.rows() / 2;
    IntegerMatrix j = IntegerMatrix::Zero(2 * g, 2 * g);
    j.topRightCorner(g, g) = IntegerMatrix::Identity(g, g);
    j.bottomLeftCorner(g, g) = -IntegerMatrix::Identity(g, g);
    return m.transpose() * j * m == j;
}

IntegerSymplectic::IntegerSymplectic(IntegerMatrix mat) : mat_(std::move(mat)) {
    if (!is_integer_symplectic(mat_)) throw AlgebraError("matrix is not in Sp(g, Z)");
}

IntegerSymplectic IntegerSymplectic::identity(int g) { return IntegerSymplectic(IntegerMatrix::Identity(2 * g, 2 * g)); }

IntegerSymplectic IntegerSymplectic::j_lift(int g) {
    IntegerMatrix m = IntegerMatrix::Zero(2 * g, 2 * g);
    m.topRightCorner(g, g) = -IntegerMatrix::Identity(g, g);
    m.bottomLeftCorner(g, g) = IntegerMatrix::Identity(g, g);
    return IntegerSymplectic(m);
}

IntegerSymplectic IntegerSymplectic::translation(const IntegerMatrix& s) {
    const auto g = s.rows();
    IntegerMatrix m = IntegerMatrix::Identity(2 * g, 2 * g);
    m.topRightCorner(g, g) = s;
    return IntegerSymplectic(m);
}

IntegerSymplectic IntegerSymplectic::translation(const F2Matrix& s) {
    IntegerMatrix si(static_cast<Eigen::Index>(s.rows()), static_cast<Eigen::Index>(s.cols()));
    for (std::size_t r = 0; r < s.rows(); ++r)
        for (std::size_t c = 0; c < s.cols(); ++c) si(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = s.get(r, c);
    return translation(si);
}

IntegerSymplectic IntegerSymplectic::lift(const Generator& gen) {
    return gen.kind == GeneratorKind::J ? j_lift(gen.element.genus()) : translation(gen.s);
}

SymplecticF2 IntegerSymplectic::reduce_mod2() const {
    F2Matrix m(static_cast<std::size_t>(mat_.rows()), static_cast<std::size_t>(mat_.cols()));
    for (Eigen::Index r = 0; r < mat_.rows(); ++r)
        for (Eigen::Index c = 0; c < mat_.cols(); ++c) m.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c), (mat_(r, c) & 1) != 0);
    return SymplecticF2(std::move(m));
}

IntegerSymplectic operator*(const IntegerSymplectic& x, const IntegerSymplectic& y) {
    if (x.genus() != y.genus()) throw DimensionError("IntegerSymplectic product: genus mismatch");
    return IntegerSymplectic(x.mat_ * y.mat_);
}

Complex automorphy_det(const IntegerSymplectic& sigma, const SiegelPoint& tau) {
    if (sigma.genus() != tau.genus()) throw DimensionError("automorphy_det: genus mismatch");
    const ComplexMatrix ct = sigma.c().cast<double>().cast<Complex>() * tau.tau() + sigma.d().cast<double>().cast<Complex>();
    return ct.partialPivLu().determinant();
}

SiegelPoint modular_apply(const IntegerSymplectic& sigma, const SiegelPoint& tau) {
    if (sigma.genus() != tau.genus()) throw DimensionError("modular_apply: genus mismatch");
    const ComplexMatrix t = tau.tau();
    const ComplexMatrix num = sigma.a().cast<double>().cast<Complex>() * t + sigma.b().cast<double>().cast<Complex>();
    const ComplexMatrix den = sigma.c().cast<double>().cast<Complex>() * t + sigma.d().cast<double>().cast<Complex>();
    const Eigen::PartialPivLU<ComplexMatrix> lu(den);
    if (std::abs(lu.determinant()) == 0) throw NumericalError("C tau + D is singular");
    // X = num * den^{-1}, i.e. den' X' = num'
    const ComplexMatrix x = den.transpose().partialPivLu().solve(num.transpose()).transpose();
    const double scale = std::max(1.0, x.cwiseAbs().maxCoeff());
    if ((x - x.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale) {
        throw NumericalError("modular_apply: result is not symmetric");
    }
    const ComplexMatrix sym = (x + x.transpose()) / 2.0;
    return SiegelPoint::from_complex(sym);
}

double check_transformation_4th(const IntegerSymplectic& sigma, const Characteristic& m, const SiegelPoint& tau,
                                double tol) {
    if (parity(m) != Parity::Even) throw ParityError("check_transformation_4th expects an even characteristic");
    const auto reduced = sigma.reduce_mod2();
    const auto image = affine_action(reduced, m);
    const int sign = epsilon(reduced, m);
    const auto moved = modular_apply(sigma, tau);
    const Complex det = automorphy_det(sigma, tau);
    const Complex lhs = std::pow(theta_nullwert(image, moved, tol).value, 4);
    const Complex th4 = std::pow(theta_nullwert(m, tau, tol).value, 4);
    const Complex rhs = static_cast<double>(sign) * det * det * th4;
    return std::abs(lhs - rhs) / std::max(1.0, std::abs(th4) * std::norm(det));
}

std::string complex_matrix_to_text(const ComplexMatrix& m) {
    std::ostringstream os;
    os << m.rows() << ' ' << m.cols() << '\n' << std::setprecision(17);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c) os << ' ';
            const auto z = m(r, c);
            os << z.real() << (z.imag() < 0 || std::signbit(z.imag()) ? "-" : "+") << std::abs(z.imag()) << 'i';
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace thetafay
