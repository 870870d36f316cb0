#include "thetafay/characteristic.hpp"

#include "thetafay/errors.hpp"

namespace thetafay {

const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

Parity parse_parity(std::string_view s) {
    if (s == "even") return Parity::Even;
    if (s == "odd") return Parity::Odd;
    throw Error("unknown parity '" + std::string(s) + "' (expected even|odd)");
}

Characteristic::Characteristic(BitVec a, BitVec b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.size() != b_.size() || a_.size() == 0) {
        throw DimensionError("Characteristic: a and b must both have length g >= 1");
    }
}

Characteristic Characteristic::zero(int g) {
    if (g < 1) throw GenusError("Characteristic::zero: genus must be >= 1");
    return {BitVec(static_cast<std::size_t>(g)), BitVec(static_cast<std::size_t>(g))};
}

Characteristic Characteristic::from_index(int g, std::uint32_t index) {
    if (g < 1 || g > 15) throw GenusError("Characteristic::from_index: genus out of range");
    if (index >= (std::uint32_t{1} << (2 * g))) throw DimensionError("Characteristic::from_index: index too large");
    BitVec a(static_cast<std::size_t>(g));
    BitVec b(static_cast<std::size_t>(g));
    for (int i = 0; i < g; ++i) {
        if ((index >> (2 * g - 1 - i)) & 1u) a.set(static_cast<std::size_t>(i));
        if ((index >> (g - 1 - i)) & 1u) b.set(static_cast<std::size_t>(i));
    }
    return {std::move(a), std::move(b)};
}

Characteristic Characteristic::parse(std::string_view text) {
    const auto bar = text.find('|');
    if (bar == std::string_view::npos) throw DimensionError("Characteristic::parse: expected 'a|b', got '" + std::string(text) + "'");
    const auto a = text.substr(0, bar);
    const auto b = text.substr(bar + 1);
    if (a.size() != b.size() || a.empty()) throw DimensionError("Characteristic::parse: halves must have equal length g >= 1");
    return {BitVec::from_string(a), BitVec::from_string(b)};
}

std::uint32_t Characteristic::index() const {
    const auto g = a_.size();
    std::uint32_t idx = 0;
    for (std::size_t i = 0; i < g; ++i) idx = (idx << 1) | static_cast<std::uint32_t>(a_.get(i));
    for (std::size_t i = 0; i < g; ++i) idx = (idx << 1) | static_cast<std::uint32_t>(b_.get(i));
    return idx;
}

std::string Characteristic::to_string() const { return a_.to_string() + "|" + b_.to_string(); }

Parity parity(const Characteristic& m) { return m.a().dot(m.b()) ? Parity::Odd : Parity::Even; }

int pairing_e(const Characteristic& m, const Characteristic& n) {
    if (m.genus() != n.genus()) throw DimensionError("pairing_e: genus mismatch");
    const bool exponent = m.a().dot(n.b()) ^ m.b().dot(n.a());
    return exponent ? -1 : 1;
}

std::size_t characteristic_count(int g, Parity p) {
    if (g < 1 || g > 15) throw GenusError("characteristic_count: genus out of range");
    const std::size_t half = std::size_t{1} << (g - 1);
    const std::size_t full = std::size_t{1} << g;
    return p == Parity::Even ? half * (full + 1) : half * (full - 1);
}

Sector::Sector(int g, Parity p) : g_(g), parity_(p) {
    if (g < 1 || g > 10) throw GenusError("Sector: genus must be in [1, 10]");
    const std::uint32_t total = std::uint32_t{1} << (2 * g);
    lookup_.assign(total, -1);
    elements_.reserve(characteristic_count(g, p));
    for (std::uint32_t idx = 0; idx < total; ++idx) {
        auto m = Characteristic::from_index(g, idx);
        if (thetafay::parity(m) == p) {
            lookup_[idx] = static_cast<std::int32_t>(elements_.size());
            elements_.push_back(std::move(m));
        }
    }
}

std::size_t Sector::position_of_index(std::uint32_t index) const {
    if (index >= lookup_.size()) throw DimensionError("Sector::position: index out of range");
    const auto pos = lookup_[index];
    if (pos < 0) throw ParityError("Sector::position: characteristic has the wrong parity for this sector");
    return static_cast<std::size_t>(pos);
}

std::size_t Sector::position(const Characteristic& m) const {
    if (m.genus() != g_) throw DimensionError("Sector::position: genus mismatch");
    return position_of_index(m.index());
}

bool Sector::contains(const Characteristic& m) const {
    return m.genus() == g_ && thetafay::parity(m) == parity_;
}

Characteristic odd_base(int g) {
    BitVec a(static_cast<std::size_t>(g));
    BitVec b(static_cast<std::size_t>(g));
    a.set(0);
    b.set(0);
    return {std::move(a), std::move(b)};
}

}  // namespace thetafay
