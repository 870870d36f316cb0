#include "thetafay/relcheck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "thetafay/errors.hpp"
#include "thetafay/fay.hpp"
#include "thetafay/group.hpp"
#include "thetafay/parallel.hpp"

namespace thetafay {

namespace {

void check_numeric_genus(int g) {
    if (g < 1 || g > 3) throw GenusError("numerical checks run for 1 <= g <= 3, got g=" + std::to_string(g));
}

double l1(const BigVector& v) {
    double s = 0;
    for (const auto& x : v) s += std::abs(x.get_d());
    return s;
}

Eigen::VectorXcd to_complex(const BigVector& v) {
    Eigen::VectorXcd out(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i].get_d();
    return out;
}

// Largest entry of |A v| / ||v||_1.
double annihilation_residual(const Eigen::MatrixXcd& a, const BigVector& v) {
    return (a * to_complex(v)).cwiseAbs().maxCoeff() / l1(v);
}

std::size_t binomial(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::int64_t pow2(int e) { return std::int64_t{1} << e; }

}  // namespace

Eigen::MatrixXcd theta_table(int g, const std::vector<SiegelPoint>& samples, double theta_tol) {
    const Sector even(g, Parity::Even);
    Eigen::MatrixXcd table(static_cast<Eigen::Index>(samples.size()), static_cast<Eigen::Index>(even.size()));
    parallel_for(samples.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t j = begin; j < end; ++j) {
            if (samples[j].genus() != g) throw DimensionError("theta_table: sample has the wrong genus");
            for (std::size_t i = 0; i < even.size(); ++i) {
                table(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) =
                    theta_nullwert(even[i], samples[j], theta_tol).value;
            }
        }
    });
    return table;
}

Eigen::MatrixXcd theta_power_matrix(const Eigen::MatrixXcd& table, int k) {
    if (k < 1) throw DimensionError("theta powers need k >= 1");
    Eigen::MatrixXcd out = table.unaryExpr([k](const Complex& z) { return std::pow(z, k); });
    normalize_rows(out);
    return out;
}

Eigen::MatrixXcd gradient_tensor_matrix(int g, const std::vector<SiegelPoint>& samples, double theta_tol) {
    const Sector odd(g, Parity::Odd);
    const auto block = static_cast<Eigen::Index>(binomial(static_cast<std::size_t>(g) + 3, 4));
    Eigen::MatrixXcd out(block * static_cast<Eigen::Index>(samples.size()), static_cast<Eigen::Index>(odd.size()));
    parallel_for(samples.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t j = begin; j < end; ++j) {
            const auto row0 = static_cast<Eigen::Index>(j) * block;
            for (std::size_t i = 0; i < odd.size(); ++i) {
                const auto s = sym4(theta_gradient(odd[i], samples[j], theta_tol).value);
                for (Eigen::Index r = 0; r < block; ++r) {
                    out(row0 + r, static_cast<Eigen::Index>(i)) = s.coefficients[static_cast<std::size_t>(r)];
                }
            }
            const double scale = out.middleRows(row0, block).cwiseAbs().maxCoeff();
            if (scale > 0) out.middleRows(row0, block) /= scale;
        }
    });
    return out;
}

RelationCheck verify_vplus_relations(int g, std::size_t nsamples, std::uint64_t seed, double theta_tol) {
    check_numeric_genus(g);
    const auto vplus = exact_eigenspaces(build_fay(g, Parity::Even)).v;
    const auto samples = sample_siegel_points(g, nsamples, seed);
    const auto table = theta_table(g, samples, theta_tol);
    RelationCheck out{0, vplus.dim(), nsamples};
    for (Eigen::Index j = 0; j < table.rows(); ++j) {
        const Eigen::VectorXcd p = table.row(j).transpose().unaryExpr([](const Complex& z) { return std::pow(z, 4); });
        const double scale = p.cwiseAbs().maxCoeff();
        for (const auto& v : vplus.vectors) {
            const double r = std::abs(p.cwiseProduct(to_complex(v)).sum()) / (l1(v) * scale);
            out.max_residual = std::max(out.max_residual, r);
        }
    }
    return out;
}

RankReport rank_theta_powers(int g, int k, std::size_t nsamples, std::uint64_t seed, double tol) {
    check_numeric_genus(g);
    const auto kplus = characteristic_count(g, Parity::Even);
    if (nsamples < kplus + 8) {
        throw DimensionError("rank_theta_powers needs at least " + std::to_string(kplus + 8) + " samples at g=" +
                             std::to_string(g));
    }
    const auto table = theta_table(g, sample_siegel_points(g, nsamples, seed));
    return numerical_rank(theta_power_matrix(table, k), tol);
}

KernelMatch kernel_matches_vplus(int g, std::size_t nsamples, std::uint64_t seed, double tol) {
    check_numeric_genus(g);
    const auto kplus = characteristic_count(g, Parity::Even);
    if (nsamples < kplus + 8) throw DimensionError("kernel_matches_vplus needs at least k_g^+ + 8 samples");
    const auto spaces = exact_eigenspaces(build_fay(g, Parity::Even));
    const auto a = theta_power_matrix(theta_table(g, sample_siegel_points(g, nsamples, seed)), 4);
    KernelMatch out;
    out.rank = numerical_rank(a, tol);
    out.dim_vplus = spaces.v.dim();
    for (const auto& v : spaces.v.vectors) out.max_vplus_residual = std::max(out.max_vplus_residual, annihilation_residual(a, v));
    out.min_wplus_residual = std::numeric_limits<double>::infinity();
    for (const auto& w : spaces.w.vectors) out.min_wplus_residual = std::min(out.min_wplus_residual, annihilation_residual(a, w));
    out.matches = out.rank.conclusive && out.max_vplus_residual < tol && out.min_wplus_residual >= 1e3 * tol &&
                  out.rank.rank + out.dim_vplus == kplus;
    return out;
}

RankReport rank_gradient_span(int g, std::size_t nsamples, std::uint64_t seed, double tol) {
    check_numeric_genus(g);
    const auto kminus = characteristic_count(g, Parity::Odd);
    if (nsamples * binomial(static_cast<std::size_t>(g) + 3, 4) < kminus) {
        throw DimensionError("rank_gradient_span: too few samples for " + std::to_string(kminus) + " columns");
    }
    return numerical_rank(gradient_tensor_matrix(g, sample_siegel_points(g, nsamples, seed)), tol);
}

RelationCheck verify_wminus_relations(int g, std::size_t nsamples, std::uint64_t seed, double theta_tol) {
    check_numeric_genus(g);
    const auto wminus = exact_eigenspaces(build_fay(g, Parity::Odd)).w;
    RelationCheck out{0, wminus.dim(), nsamples};
    if (wminus.dim() == 0) return out;
    const Sector odd(g, Parity::Odd);
    for (const auto& tau : sample_siegel_points(g, nsamples, seed)) {
        std::vector<Sym4Tensor> tensors;
        double scale = 0;
        for (const auto& m : odd.elements()) {
            tensors.push_back(sym4(theta_gradient(m, tau, theta_tol).value));
            for (const auto& c : tensors.back().coefficients) scale = std::max(scale, std::abs(c));
        }
        for (const auto& w : wminus.vectors) {
            std::vector<Complex> sum(tensors.front().coefficients.size(), 0.0);
            for (std::size_t i = 0; i < tensors.size(); ++i) {
                const double wi = w[i].get_d();
                for (std::size_t r = 0; r < sum.size(); ++r) sum[r] += wi * tensors[i].coefficients[r];
            }
            double worst = 0;
            for (const auto& c : sum) worst = std::max(worst, std::abs(c));
            out.max_residual = std::max(out.max_residual, worst / (l1(w) * scale));
        }
    }
    return out;
}

FormalThetaSum::FormalThetaSum(int g, int k) : g_(g), k_(k) {
    if (g < 1) throw GenusError("FormalThetaSum: genus must be >= 1");
    if (k < 1) throw DimensionError("FormalThetaSum: degree must be >= 1");
}

FormalThetaSum FormalThetaSum::power(const Characteristic& m, int k, const mpq_class& c) {
    FormalThetaSum s(m.genus(), k);
    s.add_power(m, c);
    return s;
}

mpq_class FormalThetaSum::coefficient(const Characteristic& m) const {
    const auto it = terms_.find(Monomial{{m.index(), k_}});
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void FormalThetaSum::add_power(const Characteristic& m, const mpq_class& c) {
    if (m.genus() != g_) throw DimensionError("FormalThetaSum: genus mismatch");
    if (parity(m) != Parity::Even) throw ParityError("FormalThetaSum holds even characteristics only");
    add(Monomial{{m.index(), k_}}, c);
}

void FormalThetaSum::add(Monomial mono, const mpq_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(mono), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

FormalThetaSum operator+(const FormalThetaSum& x, const FormalThetaSum& y) {
    if (x.g_ != y.g_ || x.k_ != y.k_) throw DimensionError("FormalThetaSum sum: genus or degree mismatch");
    FormalThetaSum out = x;
    for (const auto& [mono, c] : y.terms_) out.add(mono, c);
    return out;
}

FormalThetaSum operator*(const mpq_class& c, const FormalThetaSum& x) {
    FormalThetaSum out(x.g_, x.k_);
    for (const auto& [mono, d] : x.terms_) out.add(mono, c * d);
    return out;
}

FormalThetaSum operator*(const FormalThetaSum& x, const FormalThetaSum& y) {
    if (x.g_ != y.g_) throw DimensionError("FormalThetaSum product: genus mismatch");
    FormalThetaSum out(x.g_, x.k_ + y.k_);
    for (const auto& [mx, cx] : x.terms_) {
        for (const auto& [my, cy] : y.terms_) {
            std::map<std::uint32_t, int> merged;
            for (const auto& [idx, e] : mx) merged[idx] += e;
            for (const auto& [idx, e] : my) merged[idx] += e;
            out.add(FormalThetaSum::Monomial(merged.begin(), merged.end()), cx * cy);
        }
    }
    return out;
}

std::string FormalThetaSum::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        for (const auto& [idx, e] : mono) os << "*theta[" << Characteristic::from_index(g_, idx).to_string() << "]^" << e;
    }
    return os.str();
}

FormalThetaSum phi_operator(const FormalThetaSum& s, int times) {
    if (times < 0 || times >= s.g_) {
        throw GenusError("phi_operator: cannot apply " + std::to_string(times) + " times at genus " +
                         std::to_string(s.g_));
    }
    FormalThetaSum cur = s;
    for (int step = 0; step < times; ++step) {
        const int g = cur.g_;
        FormalThetaSum next(g - 1, cur.k_);
        for (const auto& [mono, c] : cur.terms_) {
            std::map<std::uint32_t, int> reduced;
            bool killed = false;
            for (const auto& [idx, e] : mono) {
                const auto m = Characteristic::from_index(g, idx);
                if (m.a().get(static_cast<std::size_t>(g - 1))) {
                    killed = true;
                    break;
                }
                BitVec a(static_cast<std::size_t>(g - 1)), b(static_cast<std::size_t>(g - 1));
                for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(g); ++i) {
                    a.set(i, m.a().get(i));
                    b.set(i, m.b().get(i));
                }
                reduced[Characteristic(a, b).index()] += e;
            }
            if (!killed) next.add(FormalThetaSum::Monomial(reduced.begin(), reduced.end()), c);
        }
        cur = std::move(next);
    }
    return cur;
}

FormalThetaSum component_witness(int g, int k, SplitComponent which) {
    FormalThetaSum s(g, k);
    const Sector even(g, Parity::Even);
    const bool v = which == SplitComponent::V;
    for (const auto& m : even.elements()) {
        if (m.is_zero()) {
            s.add_power(m, v ? pow2(g) - 1 : pow2(g - 1) + 1);
        } else {
            s.add_power(m, v ? -1 : 1);
        }
    }
    return s;
}

FormalThetaSum genus1_target(int k, SplitComponent which) {
    const bool v = which == SplitComponent::V;
    FormalThetaSum s(1, k);
    s.add_power(Characteristic::parse("0|0"), v ? 1 : 2);
    s.add_power(Characteristic::parse("0|1"), v ? -1 : 1);
    s.add_power(Characteristic::parse("1|0"), v ? -1 : 1);
    return s;
}

double genus1_nonvanishing(int k, const std::vector<SiegelPoint>& samples, SplitComponent which, double theta_tol) {
    const auto target = genus1_target(k, which);
    const Sector even(1, Parity::Even);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& tau : samples) {
        Complex value = 0;
        for (const auto& m : even.elements()) {
            value += target.coefficient(m).get_d() * std::pow(theta_nullwert(m, tau, theta_tol).value, k);
        }
        best = std::min(best, std::abs(value));
    }
    return best;
}

TranslationSeparation translation_character_separation(int g, int k, const SiegelPoint& tau, double theta_tol) {
    if (g < 1 || g > 2) throw GenusError("translation_character_separation is defined for g <= 2");
    if (tau.genus() != g) throw DimensionError("translation_character_separation: tau has the wrong genus");
    const auto gens = generators(g);
    auto ratio = [&](const Characteristic& m, const F2Matrix& s) {
        RealMatrix shift(g, g);
        for (int r = 0; r < g; ++r)
            for (int c = 0; c < g; ++c) shift(r, c) = 2.0 * s.get(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        const SiegelPoint moved(tau.re() + shift, tau.im());
        return std::pow(theta_nullwert(m, moved, theta_tol).value / theta_nullwert(m, tau, theta_tol).value, k);
    };
    const auto zero = Characteristic::zero(g);
    TranslationSeparation out;
    out.separated = true;
    for (std::uint32_t a = 1; a < (1u << g); ++a) {
        const auto n = Characteristic::from_index(g, a << g);
        double best = 0;
        for (const auto& gen : gens.elements) {
            if (gen.kind != GeneratorKind::Translation) continue;
            best = std::max(best, std::abs(ratio(zero, gen.s) - ratio(n, gen.s)));
        }
        out.best_gap.emplace_back(n, best);
        out.separated = out.separated && best > 0.5;
    }
    return out;
}

}  // namespace thetafay
