#pragma once

#include <cstdint>
#include <functional>

#include "thetafay/bits.hpp"
#include "thetafay/characteristic.hpp"

namespace thetafay {

/// sigma'J sigma = J over F2 with J = (0,I;I,0).
bool is_symplectic(const F2Matrix& m);

/// An element sigma = (A,B;C,D) of Sp(g, F2), g <= 32.
///
/// The block structure is read straight from the packed rows: row i < g holds
/// (A_i | B_i), row g+i holds (C_i | D_i).
class SymplecticF2 {
public:
    /// Validates the symplectic condition; throws AlgebraError otherwise.
    explicit SymplecticF2(F2Matrix mat);

    static SymplecticF2 identity(int g);
    /// J = (0,I;I,0).
    static SymplecticF2 j(int g);
    /// T_S = (I,S;0,I) for symmetric S.
    static SymplecticF2 translation(const F2Matrix& s);
    static SymplecticF2 from_blocks(const F2Matrix& a, const F2Matrix& b, const F2Matrix& c, const F2Matrix& d);
    /// Inverse of code(); g <= 4. Does not re-check the symplectic condition.
    static SymplecticF2 from_code(int g, std::uint64_t code);

    int genus() const { return g_; }
    const F2Matrix& matrix() const { return mat_; }

    F2Matrix a() const { return mat_.block(0, 0, gs(), gs()); }
    F2Matrix b() const { return mat_.block(0, gs(), gs(), gs()); }
    F2Matrix c() const { return mat_.block(gs(), 0, gs(), gs()); }
    F2Matrix d() const { return mat_.block(gs(), gs(), gs(), gs()); }

    /// Row i of a block as a g-bit mask (bit j = column j).
    std::uint64_t a_row(int i) const { return low(i); }
    std::uint64_t b_row(int i) const { return high(i); }
    std::uint64_t c_row(int i) const { return low(g_ + i); }
    std::uint64_t d_row(int i) const { return high(g_ + i); }

    /// Gauss-Jordan inverse over F2.
    SymplecticF2 inverse() const;

    /// The 4g^2-bit row-major encoding; g <= 4.
    std::uint64_t code() const { return mat_.encode(); }

    friend SymplecticF2 operator*(const SymplecticF2& x, const SymplecticF2& y);
    friend bool operator==(const SymplecticF2&, const SymplecticF2&) = default;

private:
    struct Unchecked {};
    SymplecticF2(F2Matrix mat, Unchecked);

    std::size_t gs() const { return static_cast<std::size_t>(g_); }
    std::uint64_t low(int r) const { return mat_.row_words(static_cast<std::size_t>(r))[0] & mask_; }
    std::uint64_t high(int r) const { return (mat_.row_words(static_cast<std::size_t>(r))[0] >> g_) & mask_; }

    int g_ = 0;
    std::uint64_t mask_ = 0;
    F2Matrix mat_;
};

/// sigma{m} = sigma'^{-1} m + ((CD')_0 ; (AB')_0).
Characteristic affine_action(const SymplecticF2& sigma, const Characteristic& m);

/// Index form of affine_action on the canonical 2g-bit index; g <= 15.
std::uint32_t affine_action_index(const SymplecticF2& sigma, std::uint32_t index);

/// epsilon_m(sigma) = (-1)^{tr(B'C) + (B'D)[a] + (A'C)[b]}; returns +1 or -1.
int epsilon(const SymplecticF2& sigma, const Characteristic& m);
int epsilon_index(const SymplecticF2& sigma, std::uint32_t index);

}  // namespace thetafay

template <>
struct std::hash<thetafay::SymplecticF2> {
    std::size_t operator()(const thetafay::SymplecticF2& s) const noexcept {
        std::size_t h = static_cast<std::size_t>(s.genus());
        for (std::size_t r = 0; r < s.matrix().rows(); ++r) {
            h = h * 1099511628211ULL ^ std::hash<std::uint64_t>{}(s.matrix().row_words(r)[0]);
        }
        return h;
    }
};
