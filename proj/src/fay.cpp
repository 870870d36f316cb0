#include "thetafay/fay.hpp"

#include <string>

#include "thetafay/errors.hpp"
#include "thetafay/indrep.hpp"

namespace thetafay {

namespace {

std::int64_t pow2(int e) { return std::int64_t{1} << e; }

void check_genus(int g) {
    if (g < 1 || g > 4) throw GenusError("Fay operators are built for 1 <= g <= 4, got g=" + std::to_string(g));
}

IntMatrix shifted(const IntMatrix& m, std::int64_t lambda) {
    IntMatrix out = m;
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, i) -= lambda;
    return out;
}

ExactSubspaceBasis eigenspace(const FayOperator& m, std::int64_t lambda) {
    ExactSubspaceBasis out;
    out.eigenvalue = lambda;
    out.vectors = integer_kernel(shifted(m.matrix(), lambda));
    for (const auto& v : out.vectors) {
        if (!is_eigenvector(m, v, lambda)) {
            throw SpectrumViolation("kernel vector of M - " + std::to_string(lambda) + "I is not an eigenvector");
        }
    }
    return out;
}

}  // namespace

FayOperator::FayOperator(int g, Parity sector, IntMatrix mat) : g_(g), sector_(sector), mat_(std::move(mat)) {
    if (mat_.rows() != mat_.cols() || mat_.rows() != characteristic_count(g, sector)) {
        throw DimensionError("FayOperator: matrix size does not match the sector");
    }
}

FayOperator build_fay(int g, Parity sector) {
    check_genus(g);
    const Sector sec(g, sector);
    IntMatrix m(sec.size(), sec.size());
    for (std::size_t i = 0; i < sec.size(); ++i) {
        for (std::size_t j = i; j < sec.size(); ++j) m(i, j) = m(j, i) = pairing_e(sec[i], sec[j]);
    }
    return {g, sector, std::move(m)};
}

FayEigenvalues fay_eigenvalues(int g, Parity sector) {
    if (sector == Parity::Even) return {-pow2(g - 1), pow2(g)};
    return {pow2(g - 1), -pow2(g)};
}

FayDimensions fay_dimension_formulas(int g) {
    const auto v = static_cast<std::size_t>((pow2(2 * g) - 1) / 3);
    return {v, static_cast<std::size_t>((pow2(g) + 1) * (pow2(g - 1) + 1) / 3), v,
            static_cast<std::size_t>((pow2(g) - 1) * (pow2(g - 1) - 1) / 3)};
}

FayEigenspaces exact_eigenspaces(const FayOperator& m) {
    const auto ev = fay_eigenvalues(m.genus(), m.sector());
    FayEigenspaces out{eigenspace(m, ev.v), eigenspace(m, ev.w)};
    if (out.v.dim() + out.w.dim() != m.size()) {
        throw SpectrumViolation("M has an eigenvector outside the two declared eigenspaces: dims " +
                                std::to_string(out.v.dim()) + " + " + std::to_string(out.w.dim()) +
                                " != " + std::to_string(m.size()));
    }
    return out;
}

FayDimensions fay_dimensions(int g) {
    const auto even = exact_eigenspaces(build_fay(g, Parity::Even));
    const auto odd = exact_eigenspaces(build_fay(g, Parity::Odd));
    return {even.v.dim(), even.w.dim(), odd.v.dim(), odd.w.dim()};
}

bool commutation_check(const SymplecticF2& sigma, const FayOperator& m) {
    if (sigma.genus() != m.genus()) throw DimensionError("commutation_check: genus mismatch");
    const auto r = rep_matrix(sigma, m.sector());
    return r.left_multiply(m.matrix()) == r.right_multiply(m.matrix());
}

bool quadratic_relation_holds(const FayOperator& m) {
    const int g = m.genus();
    const std::int64_t lin = m.sector() == Parity::Even ? pow2(g - 1) : -pow2(g - 1);
    const auto& a = m.matrix();
    return a * a == lin * a + pow2(2 * g - 1) * IntMatrix::identity(a.rows());
}

RationalProjector::RationalProjector(const FayOperator& m, std::int64_t eigenvalue) : eigenvalue_(eigenvalue) {
    const auto ev = fay_eigenvalues(m.genus(), m.sector());
    std::int64_t other = 0;
    if (eigenvalue == ev.v) {
        other = ev.w;
    } else if (eigenvalue == ev.w) {
        other = ev.v;
    } else {
        throw AlgebraError("projector: " + std::to_string(eigenvalue) + " is not an eigenvalue of this operator");
    }
    numerator_ = shifted(m.matrix(), other);
    denominator_ = eigenvalue - other;
}

mpq_class RationalProjector::entry(std::size_t r, std::size_t c) const {
    mpq_class q(static_cast<long>(numerator_(r, c)), static_cast<long>(denominator_));
    q.canonicalize();
    return q;
}

bool RationalProjector::is_idempotent() const { return numerator_ * numerator_ == denominator_ * numerator_; }

bool RationalProjector::maps_into_eigenspace(const FayOperator& m) const {
    return m.matrix() * numerator_ == eigenvalue_ * numerator_;
}

bool RationalProjector::commutes_with(const FayOperator& m) const {
    return m.matrix() * numerator_ == numerator_ * m.matrix();
}

std::size_t RationalProjector::rank() const { return exact_rank(to_big(numerator_)); }

RationalProjector projector(const FayOperator& m, std::int64_t eigenvalue) { return {m, eigenvalue}; }

BigVector distinguished_v(int g) {
    BigVector u(characteristic_count(g, Parity::Even), -1);
    u[0] = pow2(g) - 1;
    return u;
}

BigVector distinguished_w(int g) {
    BigVector u(characteristic_count(g, Parity::Even), 1);
    u[0] = pow2(g - 1) + 1;
    return u;
}

bool is_eigenvector(const FayOperator& m, const BigVector& v, std::int64_t lambda) {
    if (v.size() != m.size()) throw DimensionError("is_eigenvector: vector length differs from operator size");
    const auto mv = m.matrix().apply(v);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (mv[i] != v[i] * static_cast<long>(lambda)) return false;
    }
    return true;
}

}  // namespace thetafay
