#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <set>

#include "thetafay/errors.hpp"
#include "thetafay/group.hpp"

using namespace thetafay;

namespace {

// |H\G/H| by brute force: classes of G under sigma ~ h1 sigma h2.
std::size_t brute_double_cosets(const Characteristic& base, const GroupEnumeration& group) {
    const auto h = stabilizer(base, group);
    std::set<std::uint64_t> unseen(group.codes().begin(), group.codes().end());
    std::size_t classes = 0;
    while (!unseen.empty()) {
        const auto s = SymplecticF2::from_code(group.genus(), *unseen.begin());
        ++classes;
        for (std::size_t i = 0; i < h.size(); ++i) {
            for (std::size_t j = 0; j < h.size(); ++j) unseen.erase((h.element(i) * s * h.element(j)).code());
        }
    }
    return classes;
}

}  // namespace

TEST(Generators, Counts) {
    EXPECT_EQ(generators(1).elements.size(), 2u);
    EXPECT_EQ(generators(2).elements.size(), 4u);
    EXPECT_EQ(generators(3).elements.size(), 7u);
    for (const auto& gen : generators(3).elements) EXPECT_TRUE(is_symplectic(gen.element.matrix()));
    EXPECT_EQ(generators(2).elements[0].kind, GeneratorKind::J);
}

TEST(Enumeration, OrdersMatchFormula) {
    const std::uint64_t expected[] = {6, 720};
    for (int g = 1; g <= 2; ++g) {
        const auto group = enumerate_group(g);
        EXPECT_EQ(group.size(), expected[g - 1]);
        EXPECT_TRUE(group.order_formula_matches());
        for (std::size_t i = 0; i < group.size(); ++i) {
            const auto s = group.element(i);
            ASSERT_TRUE(is_symplectic(s.matrix()));
            for (const auto& gen : generators(g).elements) ASSERT_TRUE(group.contains(s * gen.element));
        }
    }
    EXPECT_EQ(sp_order_formula(3), 1451520u);
    EXPECT_THROW(enumerate_group(4), GenusError);
}

TEST(Enumeration, BinaryRoundTrip) {
    const auto group = enumerate_group(2);
    const auto path = std::filesystem::temp_directory_path() / "thetafay_group2.bin";
    group.write_binary(path);
    EXPECT_EQ(std::filesystem::file_size(path), 4u + 8u + 720u * 2u);
    const auto back = GroupEnumeration::read_binary(path);
    EXPECT_EQ(back.codes(), group.codes());
    std::filesystem::remove(path);
}

TEST(Stabilizer, IndicesAndConjugacy) {
    const auto g1 = enumerate_group(1);
    const auto h = stabilizer(Characteristic::zero(1), g1);
    EXPECT_EQ(h.size(), 2u);
    EXPECT_EQ(g1.size() / h.size(), 3u);

    const auto g2 = enumerate_group(2);
    for (std::uint32_t i = 0; i < 16; ++i) {
        const auto m = Characteristic::from_index(2, i);
        const auto hm = stabilizer(m, g2);
        EXPECT_EQ(g2.size() / hm.size(), characteristic_count(2, parity(m)));
        EXPECT_EQ(orbit_size(m, g2) * hm.size(), g2.size());
        for (std::size_t k = 0; k < hm.size(); ++k) ASSERT_EQ(affine_action(hm.element(k), m), m);
    }
}

TEST(Stabilizer, EpsilonIsANontrivialCharacter) {
    const auto g2 = enumerate_group(2);
    for (std::uint32_t i = 0; i < 16; ++i) {
        const auto m = Characteristic::from_index(2, i);
        const auto hm = stabilizer(m, g2);
        bool nontrivial = false;
        for (std::size_t x = 0; x < hm.size(); ++x) {
            const auto hx = hm.element(x);
            nontrivial |= epsilon(hx, m) == -1;
            for (std::size_t y = 0; y < hm.size(); y += 7) {
                ASSERT_EQ(epsilon(hx * hm.element(y), m), epsilon(hx, m) * epsilon(hm.element(y), m));
            }
        }
        EXPECT_TRUE(nontrivial) << m.to_string();
    }
    const auto h0 = stabilizer(Characteristic::zero(2), g2);
    for (std::size_t x = 0; x < h0.size(); ++x) {
        for (std::uint32_t i = 0; i < 16; ++i) {
            const auto m = Characteristic::from_index(2, i);
            ASSERT_EQ(epsilon(h0.element(x), m), epsilon(h0.element(x), Characteristic::zero(2)));
        }
    }
}

TEST(Transporter, ReachesTargetOrRejectsParity) {
    const auto m = Characteristic::parse("0|1");
    EXPECT_EQ(affine_action(transporter(m, Characteristic::zero(1)), m), Characteristic::zero(1));
    EXPECT_EQ(transporter(m, m), SymplecticF2::identity(1));
    EXPECT_THROW(transporter(Characteristic::zero(2), odd_base(2)), ParityError);
    for (int g = 1; g <= 4; ++g) {
        const auto gens = generators(g);
        for (std::uint32_t i = 0; i < (1u << (2 * g)); i += 3) {
            const auto x = Characteristic::from_index(g, i);
            const auto target = parity(x) == Parity::Even ? Characteristic::zero(g) : odd_base(g);
            ASSERT_EQ(affine_action(transporter(x, target, gens), x), target);
        }
    }
}

TEST(Transporter, RandomStabilizerElementFixesBase) {
    std::mt19937_64 rng(2);
    const auto gens = generators(4);
    for (int t = 0; t < 50; ++t) {
        const auto n = odd_base(4);
        EXPECT_EQ(affine_action(random_stabilizer_element(n, gens, rng), n), n);
    }
}

TEST(DoubleCosets, AgreeWithBruteForce) {
    for (int g = 1; g <= 2; ++g) {
        const auto group = enumerate_group(g);
        for (const auto& base : {Characteristic::zero(g), odd_base(g)}) {
            const auto fast = double_coset_count(base, group);
            EXPECT_EQ(fast, brute_double_cosets(base, group)) << "g=" << g << " base=" << base.to_string();
            if (!(g == 1 && parity(base) == Parity::Odd)) EXPECT_EQ(fast, 2u);
        }
    }
}

TEST(Transitivity, GenusOneAndTwo) {
    const auto r1 = transitivity_report(enumerate_group(1));
    EXPECT_EQ(r1.even_orbit, 3u);
    EXPECT_TRUE(r1.all());
    const auto r2 = transitivity_report(enumerate_group(2));
    EXPECT_EQ(r2.even_pair_orbit, 90u);
    EXPECT_EQ(r2.mixed_pair_orbit, 60u);
    EXPECT_EQ(r2.odd_pair_orbit, 30u);
    EXPECT_TRUE(r2.all());
}
