#pragma once

// The induced representations Ind_H^G(eps_H), Ind_K^G(eps_K) and Ind_H^G(1),
// realised as signed permutation actions on one parity sector:
//     sigma(e_m) = eps_m(sigma) e_{sigma{m}}.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "thetafay/characteristic.hpp"
#include "thetafay/exact.hpp"
#include "thetafay/group.hpp"
#include "thetafay/symplectic.hpp"

namespace thetafay {

class SignedPermMatrix {
public:
    SignedPermMatrix(int g, Parity sector, std::vector<std::uint32_t> perm, std::vector<std::int8_t> signs);

    int genus() const { return g_; }
    Parity sector() const { return sector_; }
    std::size_t size() const { return perm_.size(); }

    /// Column i has its single nonzero entry signs()[i] in row perm()[i].
    const std::vector<std::uint32_t>& perm() const { return perm_; }
    const std::vector<std::int8_t>& signs() const { return signs_; }

    std::int64_t trace() const;
    IntMatrix dense() const;

    /// (P*Q) e_i = P(Q e_i)
    friend SignedPermMatrix operator*(const SignedPermMatrix& p, const SignedPermMatrix& q);
    friend bool operator==(const SignedPermMatrix&, const SignedPermMatrix&) = default;

    template <typename T>
    std::vector<T> apply(const std::vector<T>& v) const {
        std::vector<T> out(v.size());
        for (std::size_t i = 0; i < perm_.size(); ++i) out[perm_[i]] = signs_[i] < 0 ? T(-v[i]) : v[i];
        return out;
    }

    /// P*M and M*P without forming the dense permutation.
    IntMatrix left_multiply(const IntMatrix& m) const;
    IntMatrix right_multiply(const IntMatrix& m) const;

private:
    int g_;
    Parity sector_;
    std::vector<std::uint32_t> perm_;
    std::vector<std::int8_t> signs_;
};

/// Signed permutation of sigma on the given sector.
SignedPermMatrix rep_matrix(const SymplecticF2& sigma, Parity sector);
SignedPermMatrix rep_matrix(const SymplecticF2& sigma, const Sector& sector);

/// chi(sigma) = sum over fixed m of eps_m(sigma) (signed) or the number of
/// fixed points (unsigned, the trivial-character induction).
std::int64_t character(const SymplecticF2& sigma, const Sector& sector, bool signed_character);

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    std::string to_string() const;
    friend bool operator==(const Rational&, const Rational&) = default;
};

struct CharacterNorm {
    Rational norm;
    std::size_t group_order = 0;
};

/// <chi, chi> = |G|^{-1} sum_sigma chi(sigma)^2, streamed over the enumeration.
CharacterNorm character_norm(const GroupEnumeration& group, Parity sector, bool signed_character);

/// The basis function X(m) (base = 0) or Y(m) (base = odd n) of the induced
/// representation. Zero off the coset H(base)*sigma_m where sigma_m{m} = base;
/// there X(m)(h sigma_m) = eps_base(h) eps_m(sigma_m). Values are computed on
/// demand.
class InducedFunction {
public:
    InducedFunction(Characteristic base, Characteristic m, SymplecticF2 representative);

    const Characteristic& base() const { return base_; }
    const Characteristic& m() const { return m_; }
    const SymplecticF2& representative() const { return rep_; }

    bool in_support(const SymplecticF2& tau) const;
    int value(const SymplecticF2& tau) const;

private:
    Characteristic base_;
    Characteristic m_;
    SymplecticF2 rep_;
    SymplecticF2 rep_inverse_;
    int rep_sign_;
};

/// Base of the sector: 0 for even, n for odd.
Characteristic sector_base(int g, Parity sector);

/// Builds X(m)/Y(m) from several transporters sigma_i{m} = base and checks
/// that they agree on random points of the common coset.
bool verify_basis_welldefined(const Characteristic& m, std::size_t trials, std::mt19937_64& rng);

/// True iff rep_matrix(sigma)·v stays in span(basis) for every sample and
/// every basis vector. Exact over the rationals.
bool invariant_subspace_check(const std::vector<RationalVector>& basis, int g, Parity sector,
                              const std::vector<SymplecticF2>& samples);
bool invariant_subspace_check(const std::vector<BigVector>& basis, int g, Parity sector,
                              const std::vector<SymplecticF2>& samples);

}  // namespace thetafay
