#include "thetafay/group.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <unordered_set>

#include "thetafay/errors.hpp"

namespace thetafay {

namespace {

constexpr int kMaxEnumerationGenus = 3;

std::size_t record_bytes(int g) { return (4 * static_cast<std::size_t>(g) * g + 7) / 8; }

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

std::uint64_t pair_key(std::uint32_t x, std::uint32_t y) { return (static_cast<std::uint64_t>(x) << 32) | y; }

std::size_t pair_orbit(std::uint32_t x, std::uint32_t y, const GroupEnumeration& group) {
    std::unordered_set<std::uint64_t> seen;
    for (auto code : group.codes()) {
        const auto s = SymplecticF2::from_code(group.genus(), code);
        seen.insert(pair_key(affine_action_index(s, x), affine_action_index(s, y)));
    }
    return seen.size();
}

}  // namespace

GeneratorSet generators(int g) {
    if (g < 1) throw GenusError("generators: genus must be >= 1");
    GeneratorSet set{g, {}};
    set.elements.push_back({GeneratorKind::J, SymplecticF2::j(g), F2Matrix{}});
    const auto n = static_cast<std::size_t>(g);
    for (std::size_t i = 0; i < n; ++i) {
        F2Matrix s(n, n);
        s.set(i, i);
        set.elements.push_back({GeneratorKind::Translation, SymplecticF2::translation(s), s});
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            F2Matrix s(n, n);
            s.set(i, j);
            s.set(j, i);
            set.elements.push_back({GeneratorKind::Translation, SymplecticF2::translation(s), s});
        }
    }
    return set;
}

std::uint64_t sp_order_formula(int g) {
    if (g < 1 || g > 4) throw GenusError("sp_order_formula: genus must be in [1, 4]");
    std::uint64_t order = std::uint64_t{1} << (g * g);
    for (int i = 1; i <= g; ++i) order *= (std::uint64_t{1} << (2 * i)) - 1;
    return order;
}

SymplecticF2 random_word(const GeneratorSet& gens, std::size_t length, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, gens.elements.size() - 1);
    auto s = SymplecticF2::identity(gens.g);
    for (std::size_t i = 0; i < length; ++i) s = s * gens.elements[pick(rng)].element;
    return s;
}

bool GroupEnumeration::contains(const SymplecticF2& s) const {
    if (s.genus() != g_) return false;
    return std::binary_search(codes_.begin(), codes_.end(), s.code());
}

GroupEnumeration enumerate_group(int g) {
    if (g < 1 || g > kMaxEnumerationGenus) {
        throw GenusError("enumerate_group: genus " + std::to_string(g) + " is outside [1, 3] (memory guard)");
    }
    const auto gens = generators(g);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(static_cast<std::size_t>(sp_order_formula(g)) * 2);
    std::deque<std::uint64_t> frontier;
    const auto id = SymplecticF2::identity(g).code();
    seen.insert(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        const auto current = SymplecticF2::from_code(g, frontier.front());
        frontier.pop_front();
        for (const auto& gen : gens.elements) {
            const auto next = (current * gen.element).code();
            if (seen.insert(next).second) frontier.push_back(next);
        }
    }
    GroupEnumeration out;
    out.g_ = g;
    out.codes_.assign(seen.begin(), seen.end());
    std::sort(out.codes_.begin(), out.codes_.end());
    return out;
}

void GroupEnumeration::write_binary(const std::filesystem::path& path) const {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error("cannot open " + path.string() + " for writing");
    auto put = [&os](std::uint64_t v, std::size_t bytes) {
        for (std::size_t i = 0; i < bytes; ++i) os.put(static_cast<char>((v >> (8 * i)) & 0xff));
    };
    put(static_cast<std::uint64_t>(g_), 4);
    put(codes_.size(), 8);
    const auto rb = record_bytes(g_);
    for (auto c : codes_) put(c, rb);
}

GroupEnumeration GroupEnumeration::read_binary(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw Error("cannot open " + path.string());
    auto get = [&is](std::size_t bytes) {
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < bytes; ++i) {
            const int c = is.get();
            if (c == EOF) throw Error("truncated group dump");
            v |= static_cast<std::uint64_t>(c) << (8 * i);
        }
        return v;
    };
    GroupEnumeration out;
    out.g_ = static_cast<int>(get(4));
    if (out.g_ < 1 || out.g_ > 4) throw GenusError("group dump: invalid genus");
    const auto count = get(8);
    const auto rb = record_bytes(out.g_);
    out.codes_.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) out.codes_.push_back(get(rb));
    std::sort(out.codes_.begin(), out.codes_.end());
    return out;
}

Stabilizer stabilizer(const Characteristic& base, const GroupEnumeration& group) {
    if (base.genus() != group.genus()) throw DimensionError("stabilizer: genus mismatch");
    Stabilizer h{base, {}, group.genus()};
    const auto idx = base.index();
    for (auto code : group.codes()) {
        if (affine_action_index(SymplecticF2::from_code(group.genus(), code), idx) == idx) h.codes.push_back(code);
    }
    return h;
}

SymplecticF2 transporter(const Characteristic& m, const Characteristic& target) {
    return transporter(m, target, generators(m.genus()));
}

SymplecticF2 transporter(const Characteristic& m, const Characteristic& target, const GeneratorSet& gens) {
    if (m.genus() != target.genus() || m.genus() != gens.g) throw DimensionError("transporter: genus mismatch");
    if (parity(m) != parity(target)) {
        throw ParityError("transporter: " + m.to_string() + " and " + target.to_string() +
                          " have different parity; no symplectic map relates them");
    }
    const int g = m.genus();
    const std::uint32_t start = m.index();
    const std::uint32_t goal = target.index();
    const std::size_t nodes = std::size_t{1} << (2 * g);
    constexpr std::int32_t kUnseen = -1;
    std::vector<std::int32_t> via(nodes, kUnseen);  // generator used to reach the node
    std::vector<std::uint32_t> prev(nodes, 0);
    std::deque<std::uint32_t> queue{start};
    via[start] = static_cast<std::int32_t>(gens.elements.size());  // root marker
    while (!queue.empty() && via[goal] == kUnseen) {
        const auto cur = queue.front();
        queue.pop_front();
        for (std::size_t k = 0; k < gens.elements.size(); ++k) {
            const auto next = affine_action_index(gens.elements[k].element, cur);
            if (via[next] != kUnseen) continue;
            via[next] = static_cast<std::int32_t>(k);
            prev[next] = cur;
            queue.push_back(next);
        }
    }
    if (via[goal] == kUnseen) throw AlgebraError("transporter: target not in the orbit (generator set incomplete)");
    // Path start -> ... -> goal applies g_1 first, so sigma = g_k ... g_1.
    auto sigma = SymplecticF2::identity(g);
    for (auto node = goal; node != start; node = prev[node]) {
        sigma = sigma * gens.elements[static_cast<std::size_t>(via[node])].element;
    }
    return sigma;
}

SymplecticF2 random_stabilizer_element(const Characteristic& m, const GeneratorSet& gens, std::mt19937_64& rng) {
    const auto w = random_word(gens, 4 * static_cast<std::size_t>(gens.g) + 8, rng);
    return transporter(affine_action(w, m), m, gens) * w;
}

std::size_t double_coset_count(const Characteristic& base, const GroupEnumeration& group) {
    const auto h = stabilizer(base, group);
    const Sector sector(base.genus(), parity(base));
    UnionFind uf(sector.size());
    for (auto code : h.codes) {
        const auto s = SymplecticF2::from_code(h.g, code);
        for (std::size_t i = 0; i < sector.size(); ++i) {
            uf.unite(i, sector.position_of_index(affine_action_index(s, sector[i].index())));
        }
    }
    std::size_t orbits = 0;
    for (std::size_t i = 0; i < sector.size(); ++i) orbits += uf.find(i) == i;
    return orbits;
}

std::size_t orbit_size(const Characteristic& m, const GroupEnumeration& group) {
    if (m.genus() != group.genus()) throw DimensionError("orbit_size: genus mismatch");
    std::unordered_set<std::uint32_t> seen;
    const auto idx = m.index();
    for (auto code : group.codes()) seen.insert(affine_action_index(SymplecticF2::from_code(group.genus(), code), idx));
    return seen.size();
}

TransitivityReport transitivity_report(const GroupEnumeration& group) {
    const int g = group.genus();
    const Sector even(g, Parity::Even);
    const Sector odd(g, Parity::Odd);
    const auto kp = even.size();
    const auto km = odd.size();

    TransitivityReport r;
    r.g = g;
    r.group_order = group.size();
    r.even_orbit = orbit_size(even[0], group);
    r.odd_orbit = orbit_size(odd_base(g), group);
    r.transitive_even = r.even_orbit == kp;
    r.transitive_odd = r.odd_orbit == km;

    r.even_pair_orbit = pair_orbit(even[0].index(), even[1].index(), group);
    r.double_transitive_even = r.even_pair_orbit == kp * (kp - 1);

    if (km >= 2) {
        const auto n = odd_base(g).index();
        const auto other = odd[0].index() == n ? odd[1].index() : odd[0].index();
        r.odd_pair_orbit = pair_orbit(n, other, group);
        r.double_transitive_odd = r.odd_pair_orbit == km * (km - 1);
    } else {
        r.double_transitive_odd = true;  // a single point has no distinct pairs
    }

    r.mixed_pair_orbit = pair_orbit(even[0].index(), odd_base(g).index(), group);
    r.transitive_mixed_pairs = r.mixed_pair_orbit == kp * km;
    return r;
}

}  // namespace thetafay
