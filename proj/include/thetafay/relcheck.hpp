#pragma once

// Numerical certificates for the theta relations: ranks of k-th powers of
// theta nullwerte, the quartic relations from V+, the gradient tensors and
// their relations from W-, and the Siegel Phi-operator on formal sums.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "thetafay/characteristic.hpp"
#include "thetafay/numrank.hpp"
#include "thetafay/theta.hpp"

namespace thetafay {

/// theta[m](tau_j) for every even m (columns, canonical order) and every
/// sample tau_j (rows). Samples are evaluated in parallel.
Eigen::MatrixXcd theta_table(int g, const std::vector<SiegelPoint>& samples, double theta_tol = kDefaultThetaTol);

/// Entrywise k-th power of a theta table with every row scaled to max modulus 1.
Eigen::MatrixXcd theta_power_matrix(const Eigen::MatrixXcd& table, int k);

/// Rows: the C(g+3,4) Sym4 coefficients of S(theta[m])(tau_j) for each sample;
/// columns: odd m. Each sample block is scaled to max modulus 1.
Eigen::MatrixXcd gradient_tensor_matrix(int g, const std::vector<SiegelPoint>& samples,
                                        double theta_tol = kDefaultThetaTol);

struct RelationCheck {
    double max_residual = 0;
    std::size_t relations = 0;
    std::size_t samples = 0;
};

/// max over samples and V+ basis vectors v of
/// |sum_m v_m theta[m]^4| / (||v||_1 max_m |theta[m]^4|).
RelationCheck verify_vplus_relations(int g, std::size_t nsamples, std::uint64_t seed,
                                     double theta_tol = kDefaultThetaTol);

/// Rank of the nsamples x k_g^+ matrix of k-th powers. nsamples >= k_g^+ + 8.
RankReport rank_theta_powers(int g, int k, std::size_t nsamples, std::uint64_t seed, double tol = kDefaultRankTol);

struct KernelMatch {
    RankReport rank;
    std::size_t dim_vplus = 0;
    double max_vplus_residual = 0;  // must stay below tol
    double min_wplus_residual = 0;  // must stay above 1e3 * tol
    bool matches = false;
};

/// The kernel of the k = 4 sample matrix is exactly V+: every V+ basis vector
/// annihilates it within tol, no W+ basis vector does within 1e3 * tol, and
/// rank + dim V+ = k_g^+.
KernelMatch kernel_matches_vplus(int g, std::size_t nsamples, std::uint64_t seed, double tol = kDefaultRankTol);

/// Rank of gradient_tensor_matrix; g <= 3 and nsamples * C(g+3,4) >= k_g^-.
RankReport rank_gradient_span(int g, std::size_t nsamples, std::uint64_t seed, double tol = kDefaultRankTol);

/// max over samples and W- basis vectors w of
/// ||sum_m w_m S(theta[m])||_inf / (||w||_1 max_m ||S(theta[m])||_inf). Zero
/// relations at g = 1.
RelationCheck verify_wminus_relations(int g, std::size_t nsamples, std::uint64_t seed,
                                      double theta_tol = kDefaultThetaTol);

/// A homogeneous polynomial of degree k in the symbols theta[m], m even,
/// with exact rational coefficients.
class FormalThetaSum {
public:
    /// Sorted (characteristic index, exponent) pairs.
    using Monomial = std::vector<std::pair<std::uint32_t, int>>;

    FormalThetaSum(int g, int k);

    /// c * theta[m]^k
    static FormalThetaSum power(const Characteristic& m, int k, const mpq_class& c = 1);

    int genus() const { return g_; }
    int degree() const { return k_; }
    const std::map<Monomial, mpq_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of theta[m]^k.
    mpq_class coefficient(const Characteristic& m) const;

    void add_power(const Characteristic& m, const mpq_class& c);

    friend FormalThetaSum operator+(const FormalThetaSum& x, const FormalThetaSum& y);
    friend FormalThetaSum operator*(const mpq_class& c, const FormalThetaSum& x);
    friend FormalThetaSum operator*(const FormalThetaSum& x, const FormalThetaSum& y);
    friend bool operator==(const FormalThetaSum&, const FormalThetaSum&) = default;

    std::string to_string() const;

private:
    friend FormalThetaSum phi_operator(const FormalThetaSum& s, int times);
    void add(Monomial mono, const mpq_class& c);

    int g_;
    int k_;
    std::map<Monomial, mpq_class> terms_;
};

/// Applies the Siegel Phi-operator `times` times: theta[(a, a_g; b, b_g)]
/// becomes theta[(a; b)] when a_g = 0 and 0 when a_g = 1. Throws GenusError
/// unless times < g.
FormalThetaSum phi_operator(const FormalThetaSum& s, int times);

enum class SplitComponent { V, W };

/// The image of e_0 in V+ or W+ read as a theta sum:
///   V: (2^g-1) theta[0]^k - sum_{m != 0} theta[m]^k
///   W: (2^{g-1}+1) theta[0]^k + sum_{m != 0} theta[m]^k
FormalThetaSum component_witness(int g, int k, SplitComponent which);

/// The genus-one combination that Phi^{g-1} sends the witness to, up to the
/// factor 2^{g-1}: (1, -1, -1) for V and (2, 1, 1) for W on
/// theta[(0;0)]^k, theta[(0;1)]^k, theta[(1;0)]^k.
FormalThetaSum genus1_target(int k, SplitComponent which);

/// min over samples of |c_00 theta00^k + c_01 theta01^k + c_10 theta10^k| with
/// the coefficients of genus1_target.
double genus1_nonvanishing(int k, const std::vector<SiegelPoint>& samples, SplitComponent which = SplitComponent::V,
                           double theta_tol = kDefaultThetaTol);

struct TranslationSeparation {
    bool separated = false;
    /// For each n = (a;0), a != 0: the largest |ratio_0 - ratio_n| over the
    /// translation generators, ratio = theta^k(tau + 2S) / theta^k(tau).
    std::vector<std::pair<Characteristic, double>> best_gap;
};

/// Whether theta[0]^k and each theta[(a;0)]^k, a != 0, transform by different
/// characters under tau -> tau + 2S. g <= 2. Separation needs 4 not dividing k;
/// for 4 | k every ratio is 1 and the result is false.
TranslationSeparation translation_character_separation(int g, int k, const SiegelPoint& tau,
                                                       double theta_tol = kDefaultThetaTol);

}  // namespace thetafay
