// Command-line surface for the hole-correlation library: exact coupling
// values, correlations of JSON-described hole configurations, asymptotic
// predictions, identity verification, and brute-force torus counts.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "holecorr/correlation.hpp"
#include "holecorr/coupling.hpp"
#include "holecorr/detident.hpp"
#include "holecorr/holes.hpp"
#include "holecorr/predictions.hpp"
#include "holecorr/torus.hpp"
#include "holecorr/ucoef.hpp"

using namespace holecorr;
using nlohmann::json;

namespace {

Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0 || r.get_den() == 0)
        throw std::invalid_argument("bad rational: " + text);
    r.canonicalize();
    return r;
}

mpfr_prec_t default_precision() {
    if (const char* env = std::getenv("HOLECORR_PRECISION")) {
        long p = std::atol(env);
        if (p >= 53) return static_cast<mpfr_prec_t>(p);
    }
    return 256;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot write " + path);
    return file;
}

std::vector<PredMultihole> parse_multiholes(const std::string& text) {
    json j = json::parse(text);
    std::vector<PredMultihole> out;
    for (const auto& jm : j.at("multiholes")) {
        PredMultihole m;
        std::string o = jm.at("orientation").get<std::string>();
        if (o != "E" && o != "W") throw std::invalid_argument("orientation must be E or W");
        m.spec.orientation = o == "E" ? Orientation::E : Orientation::W;
        if (jm.contains("slope")) {
            if (jm["slope"].is_string())
                m.spec.q = parse_rational(jm["slope"].get<std::string>());
            else
                m.spec.q = rat(jm["slope"].get<long>());
        } else if (j.contains("slope")) {
            if (j["slope"].is_string())
                m.spec.q = parse_rational(j["slope"].get<std::string>());
            else
                m.spec.q = rat(j["slope"].get<long>());
        }
        for (const auto& p : jm.at("positions")) m.spec.positions.push_back(p.get<long>());
        auto off = jm.at("offset");
        m.spec.offset = {off.at(0).get<long>(), off.at(1).get<long>()};
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<long> parse_sizes(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
    if (out.empty()) throw std::invalid_argument("empty size list");
    return out;
}

int cmd_p(long x, long y, int grid, mpfr_prec_t prec) {
    PValue v = p_exact(x, y);
    std::cout << "P(" << x << "," << y << ") = " << v.to_string(2) << " ~= "
              << v.eval(prec).to_string() << "\n";
    if (grid > 0)
        std::cout << "quadrature(grid=" << grid << ") = " << p_numeric(x, y, grid) << "\n";
    return 0;
}

int cmd_ucoef(long s, long a, long b, mpfr_prec_t prec) {
    UValue u = u_coef(s, a, b);
    std::cout << "U_" << s << "(" << a << "," << b << ") = " << u.to_string(2) << " ~= "
              << u.eval(prec).to_string() << "\n";
    return 0;
}

int cmd_omega(const std::string& config_path, mpfr_prec_t prec) {
    HoleConfig config = parse_config_json(read_file(config_path));
    OmegaHat w = omega_hat(config, prec);
    std::cout << "omega = " << w.exact.to_string() << " ~= " << w.value << "\n";
    return 0;
}

int cmd_predict(const std::string& config_path, long R) {
    auto ms = parse_multiholes(read_file(config_path));
    std::cout << "predicted = " << predict_general_slopes(ms, R) << "\n";
    return 0;
}

int cmd_ratio_exp(const std::string& config_path, const std::string& scales,
                  const std::string& out_path, mpfr_prec_t prec) {
    auto ms = parse_multiholes(read_file(config_path));
    auto rows = ratio_experiment(ms, parse_sizes(scales), prec);
    std::ofstream file;
    std::ostream& out = open_out(file, out_path);
    out << "R,exact,predicted,ratio,abs_err\n";
    out.precision(12);
    for (const auto& r : rows)
        out << r.R << "," << r.exact << "," << r.predicted << "," << r.ratio << "," << r.abs_err
            << "\n";
    return 0;
}

void run_block_suite(json& reports, const char* name, uint64_t seed, int trials,
                     bool per_hole_slopes) {
    std::mt19937_64 rng(seed);
    int failures = 0;
    for (int i = 0; i < trials; ++i) {
        BlockSpec sp = random_spec(rng, 6, per_hole_slopes, false);
        if (det_rational(build_Mpp(sp)) != formula_Mpp(sp)) ++failures;
    }
    reports.push_back({{"identity", name}, {"trials", trials}, {"failures", failures},
                       {"seed", seed}});
}

void run_cv_suite(json& reports, uint64_t seed, int trials) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> mcount(1, 3), ncount(0, 2), size(1, 3), num(-9, 9),
        den(1, 3);
    int failures = 0, done = 0;
    while (done < trials) {
        std::vector<long> s, t;
        long S = 0, T = 0;
        int m = mcount(rng), n = ncount(rng);
        for (int i = 0; i < m && S < 7; ++i) {
            long v = std::min<long>(size(rng), 7 - S);
            s.push_back(v);
            S += v;
        }
        for (int j = 0; j < n && T < S; ++j) {
            long v = std::min<long>(size(rng), S - T);
            t.push_back(v);
            T += v;
        }
        std::sort(s.rbegin(), s.rend());
        std::sort(t.rbegin(), t.rend());
        std::vector<Rational> x, z;
        auto draw = [&](std::vector<Rational>& dst, size_t count) {
            while (dst.size() < count) {
                Rational r = rat(num(rng), den(rng));
                bool dup = false;
                for (const auto& v : dst) dup |= (v == r);
                if (!dup) dst.push_back(r);
            }
        };
        draw(x, s.size());
        draw(z, t.size());
        bool singular = false;
        for (const auto& xi : x)
            for (const auto& zj : z)
                if (-xi - zj == 0) singular = true;
        if (singular) continue;
        if (det_rational(build_N(s, t, x, z)) != formula_N(s, t, x, z)) ++failures;
        ++done;
    }
    reports.push_back({{"identity", "binomial_power_determinant"}, {"trials", trials},
                       {"failures", failures}, {"seed", seed}});
}

void run_deformed_suite(json& reports, uint64_t seed, int trials) {
    std::mt19937_64 rng(seed);
    int failures = 0;
    for (int i = 0; i < trials; ++i) {
        BlockSpec sp = random_spec(rng, 5, false, true);
        if (det_rational(build_M0h(sp)) != formula_M0h(sp)) ++failures;
    }
    reports.push_back({{"identity", "deformed_block_determinant"}, {"trials", trials},
                       {"failures", failures}, {"seed", seed}});
}

void run_vanishing_suite(json& reports, uint64_t seed, int trials) {
    std::mt19937_64 rng(seed);
    int row_fail = 0, pair_fail = 0, shift_fail = 0;
    int row_done = 0, pair_done = 0, shift_done = 0;
    while (row_done < trials || pair_done < trials || shift_done < trials) {
        BlockSpec sp = random_spec(rng, 5, false, true);
        std::uniform_int_distribution<int> coin(0, 1);
        if (row_done < trials && sp.s.size() >= 2) {
            VanishInstance inst;
            inst.kind = VanishKind::RowPairDifference;
            inst.i = 0;
            inst.j = 1;
            std::uniform_int_distribution<long> kd(0, sp.s[0] - 1), ld(0, sp.s[1] - 1);
            inst.k = kd(rng);
            inst.l = ld(rng);
            try {
                for (const auto& r : vanishing_residual(sp, inst))
                    if (r != 0) {
                        ++row_fail;
                        break;
                    }
                ++row_done;
            } catch (const std::exception&) {
            }
        }
        if (!sp.t.empty()) {
            std::uniform_int_distribution<size_t> ei(0, sp.s.size() - 1), wj(0, sp.t.size() - 1);
            VanishInstance inst;
            inst.i = ei(rng);
            inst.j = wj(rng);
            inst.sign_plus = coin(rng) == 0;
            if (pair_done < trials) {
                inst.kind = VanishKind::ColumnPairWithinWest;
                std::uniform_int_distribution<long> ad(0, sp.s[inst.i] + sp.t[inst.j] - 2),
                    ld(0, sp.t[inst.j] - 1);
                inst.a = ad(rng);
                inst.l = ld(rng);
                try {
                    for (const auto& r : vanishing_residual(sp, inst))
                        if (r != 0) {
                            ++pair_fail;
                            break;
                        }
                    ++pair_done;
                } catch (const std::exception&) {
                }
            }
            if (shift_done < trials && sp.t[inst.j] >= 2) {
                inst.kind = VanishKind::ColumnShiftWithinWest;
                std::uniform_int_distribution<long> ad(0, sp.t[inst.j] - 2);
                inst.a = ad(rng);
                std::uniform_int_distribution<long> kd(0, sp.t[inst.j] - 2 - inst.a);
                inst.k = kd(rng);
                try {
                    for (const auto& r : vanishing_residual(sp, inst))
                        if (r != 0) {
                            ++shift_fail;
                            break;
                        }
                    ++shift_done;
                } catch (const std::exception&) {
                }
            }
        }
    }
    reports.push_back({{"identity", "vanishing_row_pairs"}, {"trials", trials},
                       {"failures", row_fail}, {"seed", seed}});
    reports.push_back({{"identity", "vanishing_column_pairs"}, {"trials", trials},
                       {"failures", pair_fail}, {"seed", seed}});
    reports.push_back({{"identity", "vanishing_column_shifts"}, {"trials", trials},
                       {"failures", shift_fail}, {"seed", seed}});
}

int cmd_verify(const std::string& suite, int trials, uint64_t seed, const std::string& out_path) {
    json reports = json::array();
    bool all = suite == "all";
    if (all || suite == "blockdet") run_block_suite(reports, "block_determinant", seed, trials, false);
    if (all || suite == "blockdet-slopes")
        run_block_suite(reports, "block_determinant_per_slopes", seed, trials, true);
    if (all || suite == "cauchy-vandermonde") run_cv_suite(reports, seed, trials);
    if (all || suite == "deformed") run_deformed_suite(reports, seed, trials);
    if (all || suite == "vanishing") run_vanishing_suite(reports, seed, trials);
    if (all || suite == "hyperg") {
        for (const auto& rep : hyperg_identity_suite(seed, trials))
            reports.push_back({{"identity", rep.identity}, {"trials", rep.trials},
                               {"failures", rep.failures}, {"seed", seed}});
    }
    if (reports.empty()) throw std::invalid_argument("unknown suite: " + suite);
    std::ofstream file;
    std::ostream& out = open_out(file, out_path);
    out << reports.dump(2) << "\n";
    int failures = 0;
    for (const auto& r : reports) failures += r.at("failures").get<int>();
    return failures == 0 ? 0 : 1;
}

int cmd_oracle(const std::string& config_path, const std::string& sizes,
               const std::string& out_path, bool trend) {
    HoleConfig config = parse_config_json(read_file(config_path));
    double reference = charge(config) == 0 ? omega_hat(config).value : 0.0;
    auto rows = omega1_estimate(config, parse_sizes(sizes));
    std::ofstream file;
    std::ostream& out = open_out(file, out_path);
    out << "N,count_with_holes,count_free,ratio,reference_value\n";
    out.precision(12);
    for (const auto& r : rows)
        out << r.n << "," << r.with_holes.get_str() << "," << r.free.get_str() << "," << r.ratio
            << "," << reference << "\n";
    if (trend) {
        bool monotone = true;
        for (size_t i = 1; i < rows.size(); ++i)
            if (std::abs(rows[i].ratio - reference) > std::abs(rows[i - 1].ratio - reference))
                monotone = false;
        out << "# |ratio - reference| " << (monotone ? "non-increasing" : "not monotone") << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact correlations of triangular holes in lozenge tilings"};
    app.require_subcommand(1);
    mpfr_prec_t prec = default_precision();
    long precision_flag = 0;

    long px = 0, py = 0;
    int pgrid = 0;
    auto* sub_p = app.add_subcommand("p", "exact coupling value");
    sub_p->add_option("--x", px)->required();
    sub_p->add_option("--y", py)->required();
    sub_p->add_option("--grid", pgrid, "also run the numeric quadrature");

    long us = 0, ua = 0, ub = 0;
    auto* sub_u = app.add_subcommand("ucoef", "asymptotic coefficient");
    sub_u->add_option("--s", us)->required();
    sub_u->add_option("--a", ua)->required();
    sub_u->add_option("--b", ub)->required();

    std::string config_path, out_path, scales = "3,6,12,24", suite = "all";
    long R = 8;
    int trials = 50;
    uint64_t seed = 1;

    auto* sub_o = app.add_subcommand("omega", "exact correlation of a hole config");
    sub_o->add_option("--config", config_path)->required();

    auto* sub_pr = app.add_subcommand("predict", "superposition prediction at scale R");
    sub_pr->add_option("--config", config_path)->required();
    sub_pr->add_option("--R", R);

    auto* sub_rx = app.add_subcommand("ratio-exp", "exact vs predicted across scales");
    sub_rx->add_option("--config", config_path)->required();
    sub_rx->add_option("--scales", scales);
    sub_rx->add_option("--out", out_path);

    auto* sub_v = app.add_subcommand("verify-identities", "randomized exact identity checks");
    sub_v->add_option("--suite", suite,
                      "blockdet|blockdet-slopes|cauchy-vandermonde|deformed|vanishing|hyperg|all");
    sub_v->add_option("--trials", trials);
    sub_v->add_option("--seed", seed);
    sub_v->add_option("--out", out_path);

    auto* sub_or = app.add_subcommand("oracle", "torus tiling counts and ratios");
    sub_or->add_option("--config", config_path)->required();
    sub_or->add_option("--sizes", scales)->required();
    sub_or->add_option("--out", out_path);

    auto* sub_c = app.add_subcommand("convergence", "torus ratios with trend summary");
    sub_c->add_option("--config", config_path)->required();
    sub_c->add_option("--sizes", scales)->required();
    sub_c->add_option("--out", out_path);

    for (auto* sub : {sub_p, sub_u, sub_o, sub_rx})
        sub->add_option("--precision", precision_flag, "mpfr bits (>= 53)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (precision_flag >= 53) prec = static_cast<mpfr_prec_t>(precision_flag);
    else if (precision_flag != 0) {
        std::cerr << "precision must be at least 53 bits\n";
        return 2;
    }

    try {
        if (sub_p->parsed()) return cmd_p(px, py, pgrid, prec);
        if (sub_u->parsed()) return cmd_ucoef(us, ua, ub, prec);
        if (sub_o->parsed()) return cmd_omega(config_path, prec);
        if (sub_pr->parsed()) return cmd_predict(config_path, R);
        if (sub_rx->parsed()) return cmd_ratio_exp(config_path, scales, out_path, prec);
        if (sub_v->parsed()) return cmd_verify(suite, trials, seed, out_path);
        if (sub_or->parsed()) return cmd_oracle(config_path, scales, out_path, false);
        if (sub_c->parsed()) return cmd_oracle(config_path, scales, out_path, true);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
