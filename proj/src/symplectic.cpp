#include "thetafay/symplectic.hpp"

#include <bit>

#include "thetafay/errors.hpp"

namespace thetafay {

namespace {

inline bool par(std::uint64_t x) { return std::popcount(x) & 1; }

F2Matrix standard_j(std::size_t g) {
    F2Matrix j(2 * g, 2 * g);
    for (std::size_t i = 0; i < g; ++i) {
        j.set(i, g + i);
        j.set(g + i, i);
    }
    return j;
}

// Masks with bit j = coordinate j of a (resp. b) for the canonical index.
inline std::uint64_t a_mask(int g, std::uint32_t index) {
    std::uint64_t m = 0;
    for (int i = 0; i < g; ++i) m |= static_cast<std::uint64_t>((index >> (2 * g - 1 - i)) & 1u) << i;
    return m;
}

inline std::uint64_t b_mask(int g, std::uint32_t index) {
    std::uint64_t m = 0;
    for (int i = 0; i < g; ++i) m |= static_cast<std::uint64_t>((index >> (g - 1 - i)) & 1u) << i;
    return m;
}

inline std::uint32_t to_index(int g, std::uint64_t a, std::uint64_t b) {
    std::uint32_t idx = 0;
    for (int i = 0; i < g; ++i) idx = (idx << 1) | static_cast<std::uint32_t>((a >> i) & 1u);
    for (int i = 0; i < g; ++i) idx = (idx << 1) | static_cast<std::uint32_t>((b >> i) & 1u);
    return idx;
}

inline std::uint64_t mask_of(const BitVec& v) { return v.words()[0]; }

BitVec bitvec_of(int g, std::uint64_t mask) {
    BitVec v(static_cast<std::size_t>(g));
    v.words()[0] = mask;
    return v;
}

struct ActionResult {
    std::uint64_t a;
    std::uint64_t b;
};

inline ActionResult act(const SymplecticF2& s, std::uint64_t a, std::uint64_t b) {
    // sigma'^{-1} = J sigma J = (D,C;B,A) over F2.
    const int g = s.genus();
    std::uint64_t na = 0;
    std::uint64_t nb = 0;
    for (int i = 0; i < g; ++i) {
        const auto ar = s.a_row(i), br = s.b_row(i), cr = s.c_row(i), dr = s.d_row(i);
        const bool ai = par(dr & a) ^ par(cr & b) ^ par(cr & dr);
        const bool bi = par(br & a) ^ par(ar & b) ^ par(ar & br);
        na |= static_cast<std::uint64_t>(ai) << i;
        nb |= static_cast<std::uint64_t>(bi) << i;
    }
    return {na, nb};
}

inline int eps(const SymplecticF2& s, std::uint64_t a, std::uint64_t b) {
    const int g = s.genus();
    bool exponent = false;
    std::uint64_t ba = 0, da = 0, ab = 0, cb = 0;
    for (int k = 0; k < g; ++k) {
        const auto ar = s.a_row(k), br = s.b_row(k), cr = s.c_row(k), dr = s.d_row(k);
        exponent ^= par(br & cr);  // tr(B'C)
        ba |= static_cast<std::uint64_t>(par(br & a)) << k;
        da |= static_cast<std::uint64_t>(par(dr & a)) << k;
        ab |= static_cast<std::uint64_t>(par(ar & b)) << k;
        cb |= static_cast<std::uint64_t>(par(cr & b)) << k;
    }
    exponent ^= par(ba & da);  // (B'D)[a] = (Ba)'(Da)
    exponent ^= par(ab & cb);  // (A'C)[b] = (Ab)'(Cb)
    return exponent ? -1 : 1;
}

void check_genus(const SymplecticF2& s, const Characteristic& m, const char* what) {
    if (s.genus() != m.genus()) throw DimensionError(std::string(what) + ": genus mismatch");
}

}  // namespace

bool is_symplectic(const F2Matrix& m) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0 || m.rows() == 0) return false;
    const auto j = standard_j(m.rows() / 2);
    return m.transpose() * j * m == j;
}

SymplecticF2::SymplecticF2(F2Matrix mat, Unchecked)
    : g_(static_cast<int>(mat.rows() / 2)),
      mask_(g_ == 32 ? ~std::uint64_t{0} >> 32 : ((std::uint64_t{1} << g_) - 1)),
      mat_(std::move(mat)) {}

SymplecticF2::SymplecticF2(F2Matrix mat) : SymplecticF2(std::move(mat), Unchecked{}) {
    if (mat_.rows() > 64) throw GenusError("SymplecticF2: genus must be <= 32");
    if (!is_symplectic(mat_)) throw AlgebraError("SymplecticF2: matrix is not symplectic over F2");
}

SymplecticF2 SymplecticF2::identity(int g) {
    if (g < 1) throw GenusError("SymplecticF2::identity: genus must be >= 1");
    return SymplecticF2(F2Matrix::identity(2 * static_cast<std::size_t>(g)), Unchecked{});
}

SymplecticF2 SymplecticF2::j(int g) {
    if (g < 1) throw GenusError("SymplecticF2::j: genus must be >= 1");
    return SymplecticF2(standard_j(static_cast<std::size_t>(g)), Unchecked{});
}

SymplecticF2 SymplecticF2::translation(const F2Matrix& s) {
    if (!s.is_symmetric()) throw AlgebraError("SymplecticF2::translation: S must be symmetric");
    const auto g = s.rows();
    F2Matrix m = F2Matrix::identity(2 * g);
    m.set_block(0, g, s);
    return SymplecticF2(std::move(m), Unchecked{});
}

SymplecticF2 SymplecticF2::from_blocks(const F2Matrix& a, const F2Matrix& b, const F2Matrix& c, const F2Matrix& d) {
    const auto g = a.rows();
    for (const auto* blk : {&a, &b, &c, &d}) {
        if (blk->rows() != g || blk->cols() != g) throw DimensionError("SymplecticF2::from_blocks: blocks must be g x g");
    }
    F2Matrix m(2 * g, 2 * g);
    m.set_block(0, 0, a);
    m.set_block(0, g, b);
    m.set_block(g, 0, c);
    m.set_block(g, g, d);
    return SymplecticF2(std::move(m));
}

SymplecticF2 SymplecticF2::from_code(int g, std::uint64_t code) {
    if (g < 1 || g > 4) throw GenusError("SymplecticF2::from_code: genus must be in [1, 4]");
    const auto n = 2 * static_cast<std::size_t>(g);
    return SymplecticF2(F2Matrix::decode(n, n, code), Unchecked{});
}

SymplecticF2 SymplecticF2::inverse() const { return SymplecticF2(mat_.inverse(), Unchecked{}); }

SymplecticF2 operator*(const SymplecticF2& x, const SymplecticF2& y) {
    if (x.g_ != y.g_) throw DimensionError("SymplecticF2 product: genus mismatch");
    return SymplecticF2(x.mat_ * y.mat_, SymplecticF2::Unchecked{});
}

Characteristic affine_action(const SymplecticF2& sigma, const Characteristic& m) {
    check_genus(sigma, m, "affine_action");
    const auto r = act(sigma, mask_of(m.a()), mask_of(m.b()));
    return {bitvec_of(sigma.genus(), r.a), bitvec_of(sigma.genus(), r.b)};
}

std::uint32_t affine_action_index(const SymplecticF2& sigma, std::uint32_t index) {
    const int g = sigma.genus();
    const auto r = act(sigma, a_mask(g, index), b_mask(g, index));
    return to_index(g, r.a, r.b);
}

int epsilon(const SymplecticF2& sigma, const Characteristic& m) {
    check_genus(sigma, m, "epsilon");
    return eps(sigma, mask_of(m.a()), mask_of(m.b()));
}

int epsilon_index(const SymplecticF2& sigma, std::uint32_t index) {
    const int g = sigma.genus();
    return eps(sigma, a_mask(g, index), b_mask(g, index));
}

}  // namespace thetafay
