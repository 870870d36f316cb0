#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "thetafay/errors.hpp"
#include "thetafay/fay.hpp"
#include "thetafay/group.hpp"
#include "thetafay/indrep.hpp"
#include "thetafay/relcheck.hpp"
#include "thetafay/theta.hpp"

namespace thetafay::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kMaxGenus = 4;
constexpr int kDefaultExactGenus = 4;
constexpr int kDefaultNumericGenus = 3;
constexpr int kDefaultEnumerationGenus = 3;
constexpr int kMaxNumericGenus = 3;
constexpr int kMaxEnumerationGenus = 3;
constexpr double kRelationTol = 1e-8;
constexpr double kTransformTol = 1e-9;
constexpr double kNonvanishingTol = 1e-6;
constexpr std::size_t kTransformSamples = 5;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::optional<int> g;  // unset: subcommand default
    std::uint64_t seed = 1;
    double tol = 0;  // 0: subcommand default
    std::size_t samples = 0;
    std::string out;
    std::string sector = "even";
    bool signed_character = true;
    std::string m;
    std::uint64_t tau_seed = 1;
    int k = 4;
    std::string dump;
};

class Stopwatch {
public:
    double seconds() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

private:
    using Clock = std::chrono::steady_clock;
    Clock::time_point start_ = Clock::now();
};

int genus_or(const Config& cfg, int fallback, int limit) {
    const int g = cfg.g.value_or(fallback);
    if (g < 1 || g > limit) {
        throw UsageError("genus " + std::to_string(g) + " outside 1.." + std::to_string(limit) +
                         " for this subcommand");
    }
    return g;
}

Parity sector_of(const Config& cfg) {
    if (cfg.sector == "even") return Parity::Even;
    if (cfg.sector == "odd") return Parity::Odd;
    throw UsageError("--sector must be even or odd");
}

const char* sector_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

Json config_echo(const Config& cfg, int g) {
    Json c;
    c["g"] = g;
    c["seed"] = cfg.seed;
    if (cfg.tol > 0) c["tol"] = cfg.tol;
    if (cfg.samples > 0) c["samples"] = cfg.samples;
    return c;
}

Json envelope(const std::string& command, Json config) {
    Json j;
    j["tool"] = "thetafay";
    j["version"] = kToolVersion;
    j["schema"] = kSchemaVersion;
    j["command"] = command;
    j["config"] = std::move(config);
    return j;
}

Json rank_json(const RankReport& r) {
    Json j;
    j["rank"] = r.rank;
    j["rows"] = r.rows;
    j["cols"] = r.cols;
    j["tol"] = r.tol;
    j["smallest_accepted_pivot"] = r.rank > 0 ? r.pivots[r.rank - 1] : 0.0;
    j["largest_rejected_pivot"] = r.rank < r.pivots.size() ? r.pivots[r.rank] : 0.0;
    j["gap_ratio"] = r.gap_ratio;
    j["conclusive"] = r.conclusive;
    return j;
}

// --- verification battery -------------------------------------------------

struct Check {
    std::string tag;
    std::string theorem;
    std::string status;  // pass, fail or skipped
    Json evidence;
    double seconds = 0;
};

struct Battery {
    int g;
    std::uint64_t seed;
    double rank_tol;
    std::size_t samples;  // 0: per-check default
    std::optional<GroupEnumeration> group;

    const GroupEnumeration& enumeration() {
        if (!group) group = enumerate_group(g);
        return *group;
    }

    std::size_t power_samples() const {
        return samples > 0 ? samples : characteristic_count(g, Parity::Even) + 20;
    }
};

Check skipped(std::string tag, std::string theorem, const std::string& reason) {
    Check c{std::move(tag), std::move(theorem), "skipped", Json::object(), 0};
    c.evidence["reason"] = reason;
    return c;
}

const char* status_of(bool ok) { return ok ? "pass" : "fail"; }

Check check_tvg(Battery& b) {
    const char* theorem = "theta fourth powers span a space of dimension dim W+ with relations V+";
    if (b.g > kMaxNumericGenus) return skipped("tvg", theorem, "numerical checks run for g <= 3");
    Stopwatch sw;
    const auto dims = fay_dimension_formulas(b.g);
    const auto n = b.power_samples();
    const auto rank = rank_theta_powers(b.g, 4, n, b.seed, b.rank_tol);
    const auto kernel = kernel_matches_vplus(b.g, n, b.seed, b.rank_tol);
    const auto rel = verify_vplus_relations(b.g, n, b.seed);
    Json ev;
    ev["samples"] = n;
    ev["expected_rank"] = dims.w_plus;
    ev["rank"] = rank_json(rank);
    ev["dim_vplus"] = kernel.dim_vplus;
    ev["kernel_max_vplus_residual"] = kernel.max_vplus_residual;
    ev["kernel_min_wplus_residual"] = kernel.min_wplus_residual;
    ev["kernel_matches_vplus"] = kernel.matches;
    ev["relations"] = rel.relations;
    ev["relation_residual"] = rel.max_residual;
    ev["relation_tol"] = kRelationTol;
    const bool ok = rank.rank == dims.w_plus && rank.conclusive && kernel.matches && rel.max_residual < kRelationTol;
    return {"tvg", theorem, status_of(ok), ev, sw.seconds()};
}

Check check_fay(Battery& b, Parity sector) {
    Stopwatch sw;
    const std::string tag = sector == Parity::Even ? "fay-even" : "fay-odd";
    const auto m = build_fay(b.g, sector);
    const auto spaces = exact_eigenspaces(m);
    const auto formulas = fay_dimension_formulas(b.g);
    const auto ev_pair = fay_eigenvalues(b.g, sector);
    const std::size_t want_v = sector == Parity::Even ? formulas.v_plus : formulas.v_minus;
    const std::size_t want_w = sector == Parity::Even ? formulas.w_plus : formulas.w_minus;
    bool commutes = true;
    for (const auto& gen : generators(b.g).elements) commutes = commutes && commutation_check(gen.element, m);
    const bool quadratic = quadratic_relation_holds(m);
    bool projectors = true;
    Json proj = Json::object();
    for (auto lambda : {ev_pair.v, ev_pair.w}) {
        if ((lambda == ev_pair.w && want_w == 0)) continue;
        const auto p = projector(m, lambda);
        const bool ok = p.is_idempotent() && p.maps_into_eigenspace(m) && p.commutes_with(m);
        const auto rank = p.rank();
        const std::size_t want = lambda == ev_pair.v ? want_v : want_w;
        projectors = projectors && ok && rank == want;
        proj[std::to_string(lambda)] = {{"rank", rank}, {"idempotent_and_equivariant", ok}};
    }
    Json ev;
    ev["size"] = m.size();
    ev["eigenvalues"] = {{"V", ev_pair.v}, {"W", ev_pair.w}};
    ev["dim_V"] = spaces.v.dim();
    ev["dim_W"] = spaces.w.dim();
    ev["expected_dim_V"] = want_v;
    ev["expected_dim_W"] = want_w;
    ev["quadratic_relation"] = quadratic;
    ev["commutes_with_generators"] = commutes;
    ev["projectors"] = proj;
    const bool ok = spaces.v.dim() == want_v && spaces.w.dim() == want_w && quadratic && commutes && projectors;
    const std::string theorem = std::string("Fay operator on the ") + sector_name(sector) +
                                " sector has exactly two eigenvalues with the stated multiplicities";
    return {tag, theorem, status_of(ok), ev, sw.seconds()};
}

Check check_frame(Battery& b, Parity sector) {
    const std::string tag = sector == Parity::Even ? "frame-even" : "frame-odd";
    const std::string theorem = std::string("the ") + sector_name(sector) +
                                " frame is a sum of non-isomorphic irreducibles, one per nonzero eigenspace";
    if (b.g > kMaxEnumerationGenus) return skipped(tag, theorem, "group enumeration runs for g <= 3");
    Stopwatch sw;
    const auto& group = b.enumeration();
    const auto dims = fay_dimension_formulas(b.g);
    const std::size_t w = sector == Parity::Even ? dims.w_plus : dims.w_minus;
    const std::int64_t expected = w > 0 ? 2 : 1;
    const auto signed_norm = character_norm(group, sector, true);
    bool ok = signed_norm.norm == Rational{expected, 1};
    Json ev;
    ev["group_order"] = group.size();
    ev["expected_norm"] = std::to_string(expected);
    ev["signed_norm"] = signed_norm.norm.to_string();
    if (sector == Parity::Even) {
        const auto trivial = character_norm(group, sector, false);
        ev["trivial_character_norm"] = trivial.norm.to_string();
        ok = ok && trivial.norm == Rational{2, 1};
    }
    return {tag, theorem, status_of(ok), ev, sw.seconds()};
}

Check check_smt(Battery& b) {
    const char* theorem = "gradient tensors of odd thetas span a space of dimension k_g^- - dim W- with relations W-";
    if (b.g > kMaxNumericGenus) return skipped("smt", theorem, "numerical checks run for g <= 3");
    Stopwatch sw;
    const auto dims = fay_dimension_formulas(b.g);
    const std::size_t kminus = characteristic_count(b.g, Parity::Odd);
    const std::size_t n = b.samples > 0 ? b.samples : 20;
    const auto rank = rank_gradient_span(b.g, n, b.seed, b.rank_tol);
    const auto rel = verify_wminus_relations(b.g, n, b.seed);
    Json ev;
    ev["samples"] = n;
    ev["columns"] = kminus;
    ev["expected_rank"] = kminus - dims.w_minus;
    ev["rank"] = rank_json(rank);
    ev["relations"] = rel.relations;
    ev["relation_residual"] = rel.max_residual;
    ev["relation_tol"] = kRelationTol;
    const bool ok = rank.rank == kminus - dims.w_minus && rank.conclusive && rel.relations == dims.w_minus &&
                    rel.max_residual < kRelationTol;
    return {"smt", theorem, status_of(ok), ev, sw.seconds()};
}

Check check_ci(Battery& b) {
    const char* theorem = "k-th powers of even thetas are linearly independent unless k = 4";
    if (b.g > kMaxNumericGenus) return skipped("ci", theorem, "numerical checks run for g <= 3");
    Stopwatch sw;
    const std::size_t kplus = characteristic_count(b.g, Parity::Even);
    const auto n = b.power_samples();
    // At g = 3 the k = 12 matrix has pivots near the default threshold.
    const std::vector<int> ks = b.g <= 2 ? std::vector<int>{1, 2, 8, 12} : std::vector<int>{1, 2, 8};
    bool ok = true;
    Json ranks = Json::object();
    for (int k : ks) {
        const auto r = rank_theta_powers(b.g, k, n, b.seed, b.rank_tol);
        ok = ok && r.rank == kplus && r.conclusive;
        ranks[std::to_string(k)] = rank_json(r);
    }
    const auto k4 = rank_theta_powers(b.g, 4, n, b.seed, b.rank_tol);
    ok = ok && k4.rank < kplus;
    ranks["4"] = rank_json(k4);

    const auto genus1 = sample_siegel_points(1, kTransformSamples, b.seed);
    Json nonvanishing = Json::object();
    for (int k : {8, 12, 20}) {
        const double v = genus1_nonvanishing(k, genus1, SplitComponent::V);
        const double w = genus1_nonvanishing(k, genus1, SplitComponent::W);
        ok = ok && v > kNonvanishingTol && w > kNonvanishingTol;
        nonvanishing[std::to_string(k)] = {{"V", v}, {"W", w}};
    }
    Json ev;
    ev["samples"] = n;
    ev["columns"] = kplus;
    ev["ranks"] = ranks;
    ev["genus1_min_modulus"] = nonvanishing;
    ev["nonvanishing_tol"] = kNonvanishingTol;
    if (b.g <= 2) {
        const auto tau = sample_siegel_points(b.g, 1, b.seed)[0];
        Json sep = Json::object();
        for (int k : {1, 2, 3}) {
            const auto s = translation_character_separation(b.g, k, tau);
            ok = ok && s.separated;
            sep[std::to_string(k)] = s.separated;
        }
        ev["translation_separation"] = sep;
    }
    return {"ci", theorem, status_of(ok), ev, sw.seconds()};
}

Check check_phi(Battery& b) {
    Stopwatch sw;
    bool ok = true;
    Json ev;
    for (auto which : {SplitComponent::V, SplitComponent::W}) {
        const char* name = which == SplitComponent::V ? "V" : "W";
        for (int k : {4, 8, 12}) {
            const auto image = phi_operator(component_witness(b.g, k, which), b.g - 1);
            ok = ok && image == mpq_class(1 << (b.g - 1)) * genus1_target(k, which);
        }
        ev[name] = {{"witness", component_witness(b.g, 8, which).to_string()},
                    {"image", phi_operator(component_witness(b.g, 8, which), b.g - 1).to_string()}};
    }
    ev["scale"] = 1 << (b.g - 1);
    return {"phi", "Phi^{g-1} sends the e_0 witnesses to 2^{g-1} times the genus-one combinations",
            status_of(ok), ev, sw.seconds()};
}

Check guarded(const std::string& tag, const std::function<Check()>& body) {
    try {
        return body();
    } catch (const DimensionError&) {
        throw;
    } catch (const Error& e) {
        Check c{tag, "", "fail", Json::object(), 0};
        c.evidence["error"] = e.what();
        return c;
    }
}

// --- subcommands ------------------------------------------------------------

int emit(const Json& report, const Config& cfg, std::ostream& out) {
    const std::string text = report.dump(2) + "\n";
    if (cfg.out.empty()) {
        out << text;
    } else {
        std::ofstream f(cfg.out);
        if (!f) throw UsageError("cannot write " + cfg.out);
        f << text;
    }
    return report.contains("status") && report["status"] != "pass" ? kFail : kPass;
}

int write_text(const std::string& text, const Config& cfg, std::ostream& out) {
    if (cfg.out.empty()) {
        out << text;
        return kPass;
    }
    std::ofstream f(cfg.out);
    if (!f) throw UsageError("cannot write " + cfg.out);
    f << text;
    return kPass;
}

int run_verify(const std::string& which, const Config& cfg, std::ostream& out) {
    Stopwatch sw;
    const int g = genus_or(cfg, kDefaultNumericGenus, kMaxGenus);
    Battery b{g, cfg.seed, cfg.tol > 0 ? cfg.tol : kDefaultRankTol, cfg.samples, std::nullopt};
    std::vector<std::pair<std::string, std::function<Check()>>> plan;
    auto add = [&](const std::string& tag, std::function<Check()> f) { plan.emplace_back(tag, std::move(f)); };
    const bool all = which == "all";
    if (all || which == "tvg") add("tvg", [&] { return check_tvg(b); });
    if (all) {
        add("fay-even", [&] { return check_fay(b, Parity::Even); });
        add("fay-odd", [&] { return check_fay(b, Parity::Odd); });
        add("frame-even", [&] { return check_frame(b, Parity::Even); });
        add("frame-odd", [&] { return check_frame(b, Parity::Odd); });
    }
    if (all || which == "smt") add("smt", [&] { return check_smt(b); });
    if (all || which == "ci") add("ci", [&] { return check_ci(b); });
    if (all || which == "phi") add("phi", [&] { return check_phi(b); });

    Json cfg_json = config_echo(cfg, g);
    cfg_json["rank_tol"] = b.rank_tol;
    Json report = envelope("verify " + which, cfg_json);
    Json checks = Json::object();
    bool pass = true;
    for (const auto& [tag, body] : plan) {
        const auto c = guarded(tag, body);
        pass = pass && c.status != "fail";
        checks[c.tag] = {{"theorem", c.theorem}, {"status", c.status}, {"evidence", c.evidence}, {"seconds", c.seconds}};
    }
    report["checks"] = checks;
    report["status"] = status_of(pass);
    report["seconds"] = sw.seconds();
    return emit(report, cfg, out);
}

int run_group(const std::string& which, const Config& cfg, std::ostream& out) {
    Stopwatch sw;
    const int g = genus_or(cfg, kDefaultEnumerationGenus, kMaxEnumerationGenus);
    const auto group = enumerate_group(g);
    Json report = envelope("group " + which, config_echo(cfg, g));
    bool ok = true;
    if (which == "order") {
        report["order"] = group.size();
        report["formula"] = sp_order_formula(g);
        report["formula_matches"] = group.order_formula_matches();
        ok = group.order_formula_matches();
        if (!cfg.dump.empty()) {
            group.write_binary(cfg.dump);
            report["dump"] = cfg.dump;
        }
    } else if (which == "cosets") {
        const auto sector = sector_of(cfg);
        const auto base = sector_base(g, sector);
        const auto count = double_coset_count(base, group);
        const std::size_t expected = characteristic_count(g, sector) > 1 ? 2 : 1;
        report["sector"] = sector_name(sector);
        report["base"] = base.to_string();
        report["double_cosets"] = count;
        report["expected"] = expected;
        ok = count == expected;
    } else {
        const auto t = transitivity_report(group);
        report["group_order"] = t.group_order;
        report["even_orbit"] = t.even_orbit;
        report["odd_orbit"] = t.odd_orbit;
        report["even_pair_orbit"] = t.even_pair_orbit;
        report["odd_pair_orbit"] = t.odd_pair_orbit;
        report["mixed_pair_orbit"] = t.mixed_pair_orbit;
        report["transitive_even"] = t.transitive_even;
        report["transitive_odd"] = t.transitive_odd;
        report["double_transitive_even"] = t.double_transitive_even;
        report["double_transitive_odd"] = t.double_transitive_odd;
        report["transitive_mixed_pairs"] = t.transitive_mixed_pairs;
        ok = t.all();
    }
    report["status"] = status_of(ok);
    report["seconds"] = sw.seconds();
    return emit(report, cfg, out);
}

int run_rep_norm(const Config& cfg, std::ostream& out) {
    Stopwatch sw;
    const int g = genus_or(cfg, kDefaultEnumerationGenus, kMaxEnumerationGenus);
    const auto sector = sector_of(cfg);
    const auto norm = character_norm(enumerate_group(g), sector, cfg.signed_character);
    Json report;
    report["norm"] = norm.norm.to_string();
    report["group_order"] = norm.group_order;
    report["seconds"] = sw.seconds();
    Json cfg_json = config_echo(cfg, g);
    cfg_json["sector"] = sector_name(sector);
    cfg_json["signed"] = cfg.signed_character;
    Json full = envelope("rep norm", cfg_json);
    full.update(report);
    return emit(full, cfg, out);
}

int run_fay(const std::string& which, const Config& cfg, std::ostream& out) {
    const int g = genus_or(cfg, kDefaultExactGenus, kMaxGenus);
    if (which == "dims") {
        const auto d = fay_dimensions(g);
        const auto f = fay_dimension_formulas(g);
        Json j;
        j["V+"] = d.v_plus;
        j["W+"] = d.w_plus;
        j["V-"] = d.v_minus;
        j["W-"] = d.w_minus;
        const std::string text = j.dump() + "\n";
        write_text(text, cfg, out);
        const bool ok = d.v_plus == f.v_plus && d.w_plus == f.w_plus && d.v_minus == f.v_minus &&
                        d.w_minus == f.w_minus;
        return ok ? kPass : kFail;
    }
    if (which == "dump") return write_text(build_fay(g, sector_of(cfg)).matrix().to_text(), cfg, out);
    Stopwatch sw;
    Battery b{g, cfg.seed, kDefaultRankTol, 0, std::nullopt};
    const auto c = check_fay(b, sector_of(cfg));
    Json cfg_json = config_echo(cfg, g);
    cfg_json["sector"] = cfg.sector;
    Json report = envelope("fay check", cfg_json);
    report["evidence"] = c.evidence;
    report["status"] = c.status;
    report["seconds"] = sw.seconds();
    return emit(report, cfg, out);
}

int run_theta(const std::string& which, const Config& cfg, std::ostream& out) {
    const double tol = cfg.tol > 0 ? cfg.tol : kDefaultThetaTol;
    if (which == "eval") {
        if (cfg.m.empty()) throw UsageError("theta eval needs --m a_1..a_g|b_1..b_g");
        Characteristic m;
        try {
            m = Characteristic::parse(cfg.m);
        } catch (const Error& e) {
            throw UsageError(std::string("bad --m: ") + e.what());
        }
        const int g = genus_or(cfg, m.genus(), kMaxNumericGenus);
        if (g != m.genus()) throw UsageError("--m has genus " + std::to_string(m.genus()) + ", --g is " + std::to_string(g));
        const auto tau = sample_siegel_points(g, 1, cfg.tau_seed)[0];
        const auto eval = theta_nullwert(m, tau, tol);
        Json j;
        j["re"] = eval.value.real();
        j["im"] = eval.value.imag();
        j["trunc_bound"] = eval.trunc_bound;
        return write_text(j.dump() + "\n", cfg, out);
    }
    Stopwatch sw;
    const int g = genus_or(cfg, kDefaultNumericGenus, kMaxNumericGenus);
    const std::size_t n = cfg.samples > 0 ? cfg.samples : kTransformSamples;
    const Sector even(g, Parity::Even);
    double worst = 0;
    std::size_t cases = 0;
    for (const auto& tau : sample_siegel_points(g, n, cfg.seed)) {
        for (const auto& gen : generators(g).elements) {
            const auto sigma = IntegerSymplectic::lift(gen);
            for (const auto& m : even.elements()) {
                worst = std::max(worst, check_transformation_4th(sigma, m, tau, tol));
                ++cases;
            }
        }
    }
    Json cfg_json = config_echo(cfg, g);
    cfg_json["theta_tol"] = tol;
    Json report = envelope("theta transform", cfg_json);
    report["cases"] = cases;
    report["max_residual"] = worst;
    report["residual_tol"] = kTransformTol;
    report["status"] = status_of(worst < kTransformTol);
    report["seconds"] = sw.seconds();
    return emit(report, cfg, out);
}

void add_common(CLI::App* app, Config& cfg) {
    app->add_option("--g", cfg.g, "genus");
    app->add_option("--seed", cfg.seed, "sampling seed");
    app->add_option("--tol", cfg.tol, "tolerance override (rank threshold; theta truncation for theta)")
        ->check(CLI::PositiveNumber);
    app->add_option("--samples", cfg.samples, "number of sample points");
    app->add_option("--out", cfg.out, "write the output here instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Exact and numerical checks of the Fay operators and theta relations", "thetafay"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    std::string action;
    auto* group = app.add_subcommand("group", "enumeration of Sp(g, F2)")->require_subcommand(1);
    for (const char* name : {"order", "cosets", "transitivity"}) {
        auto* sub = group->add_subcommand(name);
        add_common(sub, cfg);
        sub->add_option("--sector", cfg.sector, "even or odd");
        sub->add_option("--dump", cfg.dump, "binary dump of the enumeration (order only)");
        sub->callback([&action, name] { action = std::string("group ") + name; });
    }
    auto* rep = app.add_subcommand("rep", "induced representations")->require_subcommand(1);
    auto* norm = rep->add_subcommand("norm", "character inner product <chi, chi>");
    add_common(norm, cfg);
    norm->add_option("--sector", cfg.sector, "even or odd");
    norm->add_option("--signed", cfg.signed_character, "true: the epsilon character; false: the trivial one");
    norm->callback([&action] { action = "rep norm"; });

    auto* fay = app.add_subcommand("fay", "Fay operators")->require_subcommand(1);
    for (const char* name : {"dims", "dump", "check"}) {
        auto* sub = fay->add_subcommand(name);
        add_common(sub, cfg);
        sub->add_option("--sector", cfg.sector, "even or odd");
        sub->callback([&action, name] { action = std::string("fay ") + name; });
    }
    auto* theta = app.add_subcommand("theta", "theta nullwerte")->require_subcommand(1);
    for (const char* name : {"eval", "transform"}) {
        auto* sub = theta->add_subcommand(name);
        add_common(sub, cfg);
        sub->add_option("--m", cfg.m, "characteristic a_1..a_g|b_1..b_g");
        sub->add_option("--tau-seed", cfg.tau_seed, "seed of the sampled tau");
        sub->callback([&action, name] { action = std::string("theta ") + name; });
    }
    auto* verify = app.add_subcommand("verify", "verification battery")->require_subcommand(1);
    for (const char* name : {"all", "tvg", "smt", "ci", "phi"}) {
        auto* sub = verify->add_subcommand(name);
        add_common(sub, cfg);
        sub->callback([&action, name] { action = std::string("verify ") + name; });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << "\n";
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return kUsage;
    }

    try {
        const auto space = action.find(' ');
        const std::string head = action.substr(0, space);
        const std::string tail = action.substr(space + 1);
        if (cfg.tol < 0) throw UsageError("--tol must be positive");
        if (head == "verify") return run_verify(tail, cfg, out);
        if (head == "group") return run_group(tail, cfg, out);
        if (head == "rep") return run_rep_norm(cfg, out);
        if (head == "fay") return run_fay(tail, cfg, out);
        return run_theta(tail, cfg, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const GenusError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const DimensionError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kFail;
    }
}

}  // namespace thetafay::cli
