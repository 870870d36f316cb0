#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "thetafay/bits.hpp"

namespace thetafay {

enum class Parity { Even, Odd };

const char* to_string(Parity p);
Parity parse_parity(std::string_view s);

/// A characteristic m = (a;b) in F2^{2g}.
class Characteristic {
public:
    Characteristic() = default;
    Characteristic(BitVec a, BitVec b);

    static Characteristic zero(int g);
    /// Decodes the 2g-bit integer whose most significant bit is a_1 and least
    /// significant bit is b_g; this is the canonical lexicographic order.
    static Characteristic from_index(int g, std::uint32_t index);
    /// Parses "a_1...a_g|b_1...b_g".
    static Characteristic parse(std::string_view text);

    int genus() const { return static_cast<int>(a_.size()); }
    const BitVec& a() const { return a_; }
    const BitVec& b() const { return b_; }

    std::uint32_t index() const;
    bool is_zero() const { return !a_.any() && !b_.any(); }
    std::string to_string() const;

    friend bool operator==(const Characteristic&, const Characteristic&) = default;
    friend bool operator<(const Characteristic& x, const Characteristic& y) { return x.index() < y.index(); }

private:
    BitVec a_;
    BitVec b_;
};

/// Even iff a'b = 0 over F2.
Parity parity(const Characteristic& m);

/// e(m,n) = (-1)^{a'beta + b'alpha}; returns +1 or -1.
int pairing_e(const Characteristic& m, const Characteristic& n);

/// k_g^+ or k_g^-: 2^{g-1}(2^g +- 1).
std::size_t characteristic_count(int g, Parity p);

/// All characteristics of one parity in canonical order. Every matrix indexed
/// by characteristics uses this as its row/column order.
class Sector {
public:
    Sector(int g, Parity p);

    int genus() const { return g_; }
    Parity parity() const { return parity_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<Characteristic>& elements() const { return elements_; }
    const Characteristic& operator[](std::size_t i) const { return elements_[i]; }

    /// Position of m in this sector; throws ParityError/DimensionError on misuse.
    std::size_t position(const Characteristic& m) const;
    std::size_t position_of_index(std::uint32_t index) const;
    bool contains(const Characteristic& m) const;

private:
    int g_;
    Parity parity_;
    std::vector<Characteristic> elements_;
    std::vector<std::int32_t> lookup_;  // index -> position, -1 if other parity
};

/// The odd base characteristic n with n' = (1,0,...,0,1,0,...,0).
Characteristic odd_base(int g);

}  // namespace thetafay
