#include <CLI11.hpp>
#include <cstdio>
#include <set>
#include <iostream>
#include <json.hpp>
#include <string>

#include "sixstate/photon_bounds.hpp"
#include "sixstate/rates.hpp"
#include "sixstate/verify.hpp"

using nlohmann::json;
using namespace sixstate;

namespace {

// 12 significant digits, re-parsed so JSON serialization round-trips the
// same value that the CSV path prints
std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

double num12(double x) { return std::stod(fmt12(x)); }

int emit(const json& payload) {
    std::cout << payload.dump(2) << "\n";
    return 0;
}

int cmd_threshold(const std::string& protocol) {
    Protocol p;
    if (protocol == "sixstate-threshold")
        p = Protocol::SixStateThreshold;
    else if (protocol == "sixstate-qubit")
        p = Protocol::SixStateQubit;
    else if (protocol == "bb84")
        p = Protocol::Bb84;
    else {
        std::cerr << "unknown protocol '" << protocol
                  << "' (expected sixstate-threshold | sixstate-qubit | bb84)\n";
        return 2;
    }
    return emit({{"protocol", protocol},
                 {"threshold", num12(threshold(p))},
                 {"tolerance", 1e-10}});
}

int cmd_keyrate(double min, double max, double step, const std::string& format, double n_sif) {
    if (!(min >= 0.0 && min < max && max <= 0.25 && step > 0.0)) {
        std::cerr << "bad range: need 0 <= min < max <= 0.25 and step > 0\n";
        return 2;
    }
    const Envelope env = tangent_envelope();
    std::vector<KeyRateRow> rows;
    for (double e = min; e <= max + 1e-15; e += step)
        rows.push_back(keyrate(std::min(e, 0.25), env, n_sif));

    if (format == "csv") {
        std::cout << "e_b,hzx_upper,rate\n";
        for (const KeyRateRow& r : rows)
            std::cout << fmt12(r.e_b) << "," << fmt12(r.hzx_upper) << "," << fmt12(r.rate)
                      << "\n";
        return 0;
    }
    json out = json::array();
    for (const KeyRateRow& r : rows)
        out.push_back({{"e_b", num12(r.e_b)},
                       {"hzx_upper", num12(r.hzx_upper)},
                       {"rate", num12(r.rate)}});
    return emit({{"n_sif", num12(n_sif)}, {"rows", out}});
}

int cmd_region(int grid, const std::string& format) {
    if (grid < 2 || grid > 10000) {
        std::cerr << "grid must be in [2, 10000]\n";
        return 2;
    }
    const SquashResult sq = construct_squash_y();
    std::vector<std::array<double, 3>> pts;
    std::set<std::array<double, 3>> seen;
    auto push = [&](const ErrorPoint& pt) {
        const std::array<double, 3> row{num12(pt.e_b), num12(pt.e_y),
                                        num12(h3(pt.e_b, pt.e_y))};
        if (seen.insert(row).second) pts.push_back(row);
    };
    // exact vertices first
    push(region_map({1.0, 1.0, -1.0}, sq));
    push(region_map({1.0, 1.0, 1.0}, sq));
    push(region_map({1.0, 0.0, 0.0}, sq));
    for (int iu = 0; iu < grid; ++iu)
        for (int it = 0; it < grid; ++it)
            for (int is = 0; is < grid; ++is)
                push(region_map({static_cast<double>(iu) / (grid - 1),
                                 static_cast<double>(it) / (grid - 1),
                                 -1.0 + 2.0 * static_cast<double>(is) / (grid - 1)},
                                sq));

    if (format == "csv") {
        std::cout << "e_b,e_y,h3\n";
        for (const auto& p : pts)
            std::cout << fmt12(p[0]) << "," << fmt12(p[1]) << "," << fmt12(p[2]) << "\n";
        return 0;
    }
    json out = json::array();
    for (const auto& p : pts) out.push_back({{"e_b", p[0]}, {"e_y", p[1]}, {"h3", p[2]}});
    return emit({{"points", out}});
}

int cmd_minerr(int nmax, const std::string& format) {
    if (nmax < 1 || nmax > kNMaxDefault) {
        std::cerr << "nmax must be in [1, " << kNMaxDefault << "]\n";
        return 2;
    }
    const auto table = min_error_table(nmax);
    if (format == "csv") {
        std::cout << "n,min_e_b,exceeds_0.25677\n";
        for (const MinErrorRow& r : table)
            std::cout << r.n << "," << fmt12(r.min_e_b) << ","
                      << (r.min_e_b > 0.25677 ? "true" : "false") << "\n";
        return 0;
    }
    json out = json::array();
    for (const MinErrorRow& r : table)
        out.push_back({{"n", r.n},
                       {"min_e_b", num12(r.min_e_b)},
                       {"reduced_check", num12(r.reduced_check)},
                       {"exceeds_0.25677", r.min_e_b > 0.25677}});
    return emit({{"rows", out}});
}

int cmd_squash() {
    const SquashResult sq = construct_squash_y();
    json out{{"choi_min_eig", num12(sq.choi_min_eig)},
             {"constraint_residual", num12(sq.constraint_residual)},
             {"kraus_rank", sq.kraus ? sq.kraus->size() : 0}};
    if (sq.lambda_ansatz) out["lambda"] = num12(*sq.lambda_ansatz);
    return emit(out);
}

int cmd_envelope() {
    const Envelope env = tangent_envelope();
    const TangentB b = tangent_at_b();
    return emit({{"e_d", num12(env.e_d)},
                 {"slope", num12(env.slope)},
                 {"intercept", num12(env.intercept)},
                 {"v3", num12(env.v3)},
                 {"h12_at_e_d", num12(h12(env.e_d))},
                 {"e_b", num12(b.e_b)},
                 {"e_c", num12(b.e_c)},
                 // the figure quotes h(e_B); the intersection ordinate is 1-h(e_B)
                 {"h_at_e_b", num12(binary_entropy(b.e_b))},
                 {"one_minus_h_at_e_b", num12(1.0 - binary_entropy(b.e_b))}});
}

int cmd_verify(const std::string& suite, std::uint64_t seed, bool inject) {
    if (suite != "fast" && suite != "all") {
        std::cerr << "suite must be 'fast' or 'all'\n";
        return 2;
    }
    VerifyOptions opts;
    opts.fast = (suite == "fast");
    opts.seed = seed;
    opts.inject_projector_perturbation = inject;
    const auto results = run_verify(opts);
    json checks = json::array();
    bool all_pass = true;
    for (const CheckResult& c : results) {
        checks.push_back({{"name", c.name},
                          {"pass", c.pass},
                          {"residual", num12(c.residual)},
                          {"tolerance", num12(c.tolerance)}});
        all_pass = all_pass && c.pass;
        if (!c.pass)
            std::cerr << "FAIL " << c.name << " residual=" << fmt12(c.residual)
                      << " tol=" << fmt12(c.tolerance) << "\n";
    }
    const double tt = threshold(Protocol::SixStateThreshold);
    emit({{"suite", suite},
          {"checks", checks},
          {"pass", all_pass},
          {"sixstate_threshold", num12(tt)},
          {"sixstate_threshold_deviation", num12(std::abs(tt - 0.126112))}});
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Six-state QKD with threshold detectors: key rates, thresholds, and checks"};
    app.require_subcommand(1);

    std::uint64_t seed = 20240601;
    app.add_option("--seed", seed, "PRNG seed for randomized checks");

    std::string protocol;
    auto* threshold_cmd = app.add_subcommand("threshold", "bit error rate threshold");
    threshold_cmd->add_option("--protocol", protocol)->required();

    double kr_min = 0.0, kr_max = 0.25, kr_step = 0.01, n_sif = 1.0;
    std::string kr_format = "json";
    auto* keyrate_cmd = app.add_subcommand("keyrate", "key rate table over e_b");
    keyrate_cmd->add_option("--min", kr_min);
    keyrate_cmd->add_option("--max", kr_max);
    keyrate_cmd->add_option("--step", kr_step);
    keyrate_cmd->add_option("--n-sif", n_sif);
    keyrate_cmd->add_option("--format", kr_format)->check(CLI::IsMember({"csv", "json"}));

    int region_grid = 20;
    std::string region_format = "json";
    auto* region_cmd = app.add_subcommand("region", "sampled 3-photon error region");
    region_cmd->add_option("--grid", region_grid);
    region_cmd->add_option("--format", region_format)->check(CLI::IsMember({"csv", "json"}));

    int nmax = kNMaxDefault;
    std::string minerr_format = "json";
    auto* minerr_cmd = app.add_subcommand("minerr", "minimum bit error rate per photon number");
    minerr_cmd->add_option("--nmax", nmax);
    minerr_cmd->add_option("--format", minerr_format)->check(CLI::IsMember({"csv", "json"}));

    app.add_subcommand("squash", "fictitious-Y squash construction diagnostics");
    app.add_subcommand("envelope", "piecewise envelope and tangent points");

    std::string suite = "fast";
    bool inject = false;
    auto* verify_cmd = app.add_subcommand("verify", "run the invariant suites");
    verify_cmd->add_option("--suite", suite);
    verify_cmd->add_flag("--inject-perturbation", inject)->group("");  // test harness hook

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (threshold_cmd->parsed()) return cmd_threshold(protocol);
        if (keyrate_cmd->parsed()) return cmd_keyrate(kr_min, kr_max, kr_step, kr_format, n_sif);
        if (region_cmd->parsed()) return cmd_region(region_grid, region_format);
        if (minerr_cmd->parsed()) return cmd_minerr(nmax, minerr_format);
        if (app.get_subcommand("squash")->parsed()) return cmd_squash();
        if (app.get_subcommand("envelope")->parsed()) return cmd_envelope();
        if (verify_cmd->parsed()) return cmd_verify(suite, seed, inject);
    } catch (const DomainError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "check failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
