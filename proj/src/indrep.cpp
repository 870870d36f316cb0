#include "thetafay/indrep.hpp"

#include <numeric>

#include "thetafay/errors.hpp"
#include "thetafay/parallel.hpp"

namespace thetafay {

SignedPermMatrix::SignedPermMatrix(int g, Parity sector, std::vector<std::uint32_t> perm, std::vector<std::int8_t> signs)
    : g_(g), sector_(sector), perm_(std::move(perm)), signs_(std::move(signs)) {
    if (perm_.size() != signs_.size()) throw DimensionError("SignedPermMatrix: perm/sign length mismatch");
    std::vector<bool> hit(perm_.size(), false);
    for (auto p : perm_) {
        if (p >= perm_.size() || hit[p]) throw AlgebraError("SignedPermMatrix: perm is not a bijection");
        hit[p] = true;
    }
    for (auto s : signs_) {
        if (s != 1 && s != -1) throw AlgebraError("SignedPermMatrix: signs must be +1 or -1");
    }
}

std::int64_t SignedPermMatrix::trace() const {
    std::int64_t t = 0;
    for (std::size_t i = 0; i < perm_.size(); ++i) {
        if (perm_[i] == i) t += signs_[i];
    }
    return t;
}

IntMatrix SignedPermMatrix::dense() const {
    IntMatrix m(size(), size());
    for (std::size_t i = 0; i < perm_.size(); ++i) m(perm_[i], i) = signs_[i];
    return m;
}

SignedPermMatrix operator*(const SignedPermMatrix& p, const SignedPermMatrix& q) {
    if (p.size() != q.size() || p.g_ != q.g_ || p.sector_ != q.sector_) {
        throw DimensionError("SignedPermMatrix product: operands act on different sectors");
    }
    std::vector<std::uint32_t> perm(q.size());
    std::vector<std::int8_t> signs(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        const auto mid = q.perm_[i];
        perm[i] = p.perm_[mid];
        signs[i] = static_cast<std::int8_t>(q.signs_[i] * p.signs_[mid]);
    }
    return {p.g_, p.sector_, std::move(perm), std::move(signs)};
}

IntMatrix SignedPermMatrix::left_multiply(const IntMatrix& m) const {
    if (m.rows() != size()) throw DimensionError("SignedPermMatrix::left_multiply: dimension mismatch");
    IntMatrix out(m.rows(), m.cols());
    // (P M)(perm[i], j) = sign[i] * M(i, j)
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out(perm_[i], j) = signs_[i] * m(i, j);
    }
    return out;
}

IntMatrix SignedPermMatrix::right_multiply(const IntMatrix& m) const {
    if (m.cols() != size()) throw DimensionError("SignedPermMatrix::right_multiply: dimension mismatch");
    IntMatrix out(m.rows(), m.cols());
    // (M P)(r, i) = M(r, perm[i]) * sign[i]
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t i = 0; i < size(); ++i) out(r, i) = m(r, perm_[i]) * signs_[i];
    }
    return out;
}

SignedPermMatrix rep_matrix(const SymplecticF2& sigma, const Sector& sector) {
    if (sigma.genus() != sector.genus()) throw DimensionError("rep_matrix: genus mismatch");
    std::vector<std::uint32_t> perm(sector.size());
    std::vector<std::int8_t> signs(sector.size());
    for (std::size_t i = 0; i < sector.size(); ++i) {
        const auto idx = sector[i].index();
        perm[i] = static_cast<std::uint32_t>(sector.position_of_index(affine_action_index(sigma, idx)));
        signs[i] = static_cast<std::int8_t>(epsilon_index(sigma, idx));
    }
    return {sector.genus(), sector.parity(), std::move(perm), std::move(signs)};
}

SignedPermMatrix rep_matrix(const SymplecticF2& sigma, Parity sector) {
    return rep_matrix(sigma, Sector(sigma.genus(), sector));
}

std::int64_t character(const SymplecticF2& sigma, const Sector& sector, bool signed_character) {
    std::int64_t chi = 0;
    for (const auto& m : sector.elements()) {
        const auto idx = m.index();
        if (affine_action_index(sigma, idx) != idx) continue;
        chi += signed_character ? epsilon_index(sigma, idx) : 1;
    }
    return chi;
}

std::string Rational::to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

CharacterNorm character_norm(const GroupEnumeration& group, Parity sector, bool signed_character) {
    const Sector sec(group.genus(), sector);
    const std::size_t chunks = 64;
    std::vector<std::int64_t> partial(chunks, 0);
    parallel_chunks(group.size(), chunks, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
        std::int64_t acc = 0;
        for (std::size_t i = begin; i < end; ++i) {
            const auto chi = character(group.element(i), sec, signed_character);
            acc += chi * chi;
        }
        partial[chunk] = acc;
    });
    const std::int64_t total = std::accumulate(partial.begin(), partial.end(), std::int64_t{0});
    const auto order = static_cast<std::int64_t>(group.size());
    const auto d = std::gcd(total, order);
    return {{total / d, order / d}, group.size()};
}

Characteristic sector_base(int g, Parity sector) {
    return sector == Parity::Even ? Characteristic::zero(g) : odd_base(g);
}

InducedFunction::InducedFunction(Characteristic base, Characteristic m, SymplecticF2 representative)
    : base_(std::move(base)),
      m_(std::move(m)),
      rep_(std::move(representative)),
      rep_inverse_(rep_.inverse()),
      rep_sign_(epsilon(rep_, m_)) {
    if (affine_action(rep_, m_) != base_) {
        throw AlgebraError("InducedFunction: representative does not send m to the base characteristic");
    }
}

bool InducedFunction::in_support(const SymplecticF2& tau) const { return affine_action(tau, m_) == base_; }

int InducedFunction::value(const SymplecticF2& tau) const {
    if (!in_support(tau)) return 0;
    const auto h = tau * rep_inverse_;  // tau = h * rep with h in H(base)
    return epsilon(h, base_) * rep_sign_;
}

bool verify_basis_welldefined(const Characteristic& m, std::size_t trials, std::mt19937_64& rng) {
    const int g = m.genus();
    const auto sector = parity(m);
    const auto base = sector_base(g, sector);
    const auto gens = generators(g);
    const InducedFunction reference(base, m, transporter(m, base, gens));
    for (std::size_t t = 0; t < trials; ++t) {
        const auto k = random_stabilizer_element(m, gens, rng);
        const InducedFunction other(base, m, reference.representative() * k);
        std::vector<SymplecticF2> points{reference.representative(), other.representative()};
        for (int i = 0; i < 4; ++i) {
            points.push_back(random_stabilizer_element(base, gens, rng) * reference.representative());
            points.push_back(random_word(gens, 12, rng));
        }
        for (const auto& tau : points) {
            if (reference.value(tau) != other.value(tau)) return false;
        }
    }
    return true;
}

namespace {

BigMatrix rows_of(const std::vector<BigVector>& vs) { return BigMatrix(vs.begin(), vs.end()); }

}  // namespace

bool invariant_subspace_check(const std::vector<BigVector>& basis, int g, Parity sector,
                              const std::vector<SymplecticF2>& samples) {
    const Sector sec(g, sector);
    for (const auto& v : basis) {
        if (v.size() != sec.size()) throw DimensionError("invariant_subspace_check: vector length differs from sector size");
    }
    if (basis.empty()) return true;
    const auto base_rank = exact_rank(rows_of(basis));
    for (const auto& sigma : samples) {
        const auto rep = rep_matrix(sigma, sec);
        auto stacked = rows_of(basis);
        for (const auto& v : basis) stacked.push_back(rep.apply(v));
        if (exact_rank(stacked) != base_rank) return false;
    }
    return true;
}

bool invariant_subspace_check(const std::vector<RationalVector>& basis, int g, Parity sector,
                              const std::vector<SymplecticF2>& samples) {
    std::vector<BigVector> ints;
    ints.reserve(basis.size());
    for (const auto& v : basis) ints.push_back(to_primitive_integer(v));
    return invariant_subspace_check(ints, g, sector, samples);
}

}  // namespace thetafay
