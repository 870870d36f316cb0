#pragma once

// Generation and enumeration of G = Sp(g, F2) and its action on characteristics.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "thetafay/bits.hpp"
#include "thetafay/characteristic.hpp"
#include "thetafay/symplectic.hpp"

namespace thetafay {

/// How a generator lifts to Sp(g, Z): J-type lifts to (0,-I;I,0), translations
/// to (I,S;0,I) with the same symmetric 0/1 matrix S.
enum class GeneratorKind { J, Translation };

struct Generator {
    GeneratorKind kind;
    SymplecticF2 element;
    F2Matrix s;  // symmetric S for translations; empty for J
};

struct GeneratorSet {
    int g = 0;
    std::vector<Generator> elements;
};

/// J together with T_S for S in {E_ii} and {E_ij + E_ji, i < j}.
GeneratorSet generators(int g);

/// 2^{g^2} prod_{i=1..g} (4^i - 1).
std::uint64_t sp_order_formula(int g);

/// Product of `length` generators chosen uniformly at random.
SymplecticF2 random_word(const GeneratorSet& gens, std::size_t length, std::mt19937_64& rng);

/// Every element of Sp(g, F2), g <= 3, stored by its 4g^2-bit code.
class GroupEnumeration {
public:
    int genus() const { return g_; }
    std::size_t size() const { return codes_.size(); }
    const std::vector<std::uint64_t>& codes() const { return codes_; }
    SymplecticF2 element(std::size_t i) const { return SymplecticF2::from_code(g_, codes_[i]); }

    /// Whether the BFS count agrees with sp_order_formula. The BFS count is
    /// authoritative; a mismatch means the formula flag is raised.
    bool order_formula_matches() const { return size() == sp_order_formula(g_); }

    bool contains(const SymplecticF2& s) const;

    /// Binary dump: little-endian u32 g, u64 count, then count records of
    /// ceil(4g^2/8) bytes each holding the little-endian code.
    void write_binary(const std::filesystem::path& path) const;
    static GroupEnumeration read_binary(const std::filesystem::path& path);

private:
    friend GroupEnumeration enumerate_group(int g);
    int g_ = 0;
    std::vector<std::uint64_t> codes_;  // sorted
};

/// Breadth-first closure of generators(g); throws GenusError for g > 3.
GroupEnumeration enumerate_group(int g);

struct Stabilizer {
    Characteristic base;
    std::vector<std::uint64_t> codes;
    int g = 0;

    std::size_t size() const { return codes.size(); }
    SymplecticF2 element(std::size_t i) const { return SymplecticF2::from_code(g, codes[i]); }
};

/// H(m) = { sigma : sigma{m} = m }.
Stabilizer stabilizer(const Characteristic& base, const GroupEnumeration& group);

/// Some sigma with sigma{m} = target, found by BFS over generator moves in the
/// characteristic orbit graph. Works for any genus. Throws ParityError when the
/// parities differ.
SymplecticF2 transporter(const Characteristic& m, const Characteristic& target);
SymplecticF2 transporter(const Characteristic& m, const Characteristic& target, const GeneratorSet& gens);

/// A uniformly random word followed by a transporter back to m; lands in H(m).
SymplecticF2 random_stabilizer_element(const Characteristic& m, const GeneratorSet& gens, std::mt19937_64& rng);

/// |H(base) \ G / H(base)|, computed as the number of H(base)-orbits on the
/// characteristics of parity(base).
std::size_t double_coset_count(const Characteristic& base, const GroupEnumeration& group);

/// Size of the orbit of `m` under every element of `group`.
std::size_t orbit_size(const Characteristic& m, const GroupEnumeration& group);

struct TransitivityReport {
    int g = 0;
    std::size_t group_order = 0;
    std::size_t even_orbit = 0;       // orbit of 0 among even characteristics
    std::size_t odd_orbit = 0;        // orbit of n among odd characteristics
    std::size_t even_pair_orbit = 0;  // orbit of one ordered pair of distinct even characteristics
    std::size_t odd_pair_orbit = 0;
    std::size_t mixed_pair_orbit = 0;  // orbit of one (even, odd) pair
    bool transitive_even = false;
    bool transitive_odd = false;
    bool double_transitive_even = false;
    bool double_transitive_odd = false;
    bool transitive_mixed_pairs = false;

    bool all() const {
        return transitive_even && transitive_odd && double_transitive_even && double_transitive_odd &&
               transitive_mixed_pairs;
    }
};

TransitivityReport transitivity_report(const GroupEnumeration& group);

}  // namespace thetafay
