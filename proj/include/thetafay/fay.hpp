#pragma once

// Fay's operators M+ (even sector) and M- (odd sector): the +-1 matrices
// (e(m,n)) and their exact eigenspaces.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "thetafay/characteristic.hpp"
#include "thetafay/exact.hpp"
#include "thetafay/symplectic.hpp"

namespace thetafay {

class FayOperator {
public:
    FayOperator(int g, Parity sector, IntMatrix mat);

    int genus() const { return g_; }
    Parity sector() const { return sector_; }
    std::size_t size() const { return mat_.rows(); }
    const IntMatrix& matrix() const { return mat_; }

private:
    int g_;
    Parity sector_;
    IntMatrix mat_;
};

/// Entry (m,n) = e(m,n) in canonical order; g <= 4.
FayOperator build_fay(int g, Parity sector);

/// The two eigenvalues, relation space first:
/// even (-2^{g-1}, 2^g), odd (2^{g-1}, -2^g).
struct FayEigenvalues {
    std::int64_t v;
    std::int64_t w;
};
FayEigenvalues fay_eigenvalues(int g, Parity sector);

struct FayDimensions {
    std::size_t v_plus, w_plus, v_minus, w_minus;
};

/// (2^{2g}-1)/3, (2^g+1)(2^{g-1}+1)/3, (2^{2g}-1)/3, (2^g-1)(2^{g-1}-1)/3.
FayDimensions fay_dimension_formulas(int g);

struct ExactSubspaceBasis {
    std::int64_t eigenvalue = 0;
    std::vector<BigVector> vectors;

    std::size_t dim() const { return vectors.size(); }
};

/// V (eigenvalue fay_eigenvalues().v) and W. For M+ these are V+ and W+.
struct FayEigenspaces {
    ExactSubspaceBasis v;
    ExactSubspaceBasis w;
};

/// Exact kernels of M - lambda I. Throws SpectrumViolation when a kernel
/// vector fails M v = lambda v or the dimensions do not fill the sector.
FayEigenspaces exact_eigenspaces(const FayOperator& m);

/// Dimensions of all four eigenspaces computed exactly.
FayDimensions fay_dimensions(int g);

/// rep_matrix(sigma)·M == M·rep_matrix(sigma), exactly.
bool commutation_check(const SymplecticF2& sigma, const FayOperator& m);

/// M^2 == 2^{g-1} M + 2^{2g-1} I (even) or -2^{g-1} M + 2^{2g-1} I (odd).
bool quadratic_relation_holds(const FayOperator& m);

/// P = (M - mu I) / (lambda - mu), with mu the other eigenvalue. Stored as an
/// integer numerator and a nonzero integer denominator.
class RationalProjector {
public:
    RationalProjector(const FayOperator& m, std::int64_t eigenvalue);

    std::int64_t eigenvalue() const { return eigenvalue_; }
    const IntMatrix& numerator() const { return numerator_; }
    std::int64_t denominator() const { return denominator_; }
    mpq_class entry(std::size_t r, std::size_t c) const;

    /// P^2 = P, i.e. N^2 = d N.
    bool is_idempotent() const;
    /// M P = lambda P.
    bool maps_into_eigenspace(const FayOperator& m) const;
    bool commutes_with(const FayOperator& m) const;
    std::size_t rank() const;

private:
    std::int64_t eigenvalue_;
    IntMatrix numerator_;
    std::int64_t denominator_;
};

RationalProjector projector(const FayOperator& m, std::int64_t eigenvalue);

/// Over the even sector: u_V = (2^g-1) e_0 - sum_{m != 0} e_m = -(M - 2^g) e_0
/// lies in V+, and u_W = (2^{g-1}+1) e_0 + sum_{m != 0} e_m = (M + 2^{g-1}) e_0
/// lies in W+.
BigVector distinguished_v(int g);
BigVector distinguished_w(int g);

/// M v == lambda v exactly.
bool is_eigenvector(const FayOperator& m, const BigVector& v, std::int64_t lambda);

}  // namespace thetafay
