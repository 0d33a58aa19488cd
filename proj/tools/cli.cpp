// blockshift: abacus combinatorics of multipartition blocks.
// Exit codes: 0 success, 1 precondition/usage error, 2 internal invariant error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "blockshift/abacus.hpp"
#include "blockshift/binmat.hpp"
#include "blockshift/multipartition.hpp"
#include "blockshift/oracle.hpp"
#include "blockshift/stuttering.hpp"

using namespace blockshift;
using nlohmann::json;

namespace {

// Inline JSON if the argument looks like JSON, otherwise a file path.
json load_json_argument(const std::string& arg) {
    if (!arg.empty() && (arg.front() == '[' || arg.front() == '{')) return json::parse(arg);
    std::ifstream in(arg);
    require(static_cast<bool>(in), "cannot open file: " + arg);
    return json::parse(in);
}

Partition partition_from_json(const json& j) {
    require(j.is_array(), "partition must be a JSON array of integers");
    return Partition(j.get<std::vector<int>>());
}

Multipartition multipartition_from_json(const json& j) {
    require(j.is_array(), "multipartition must be a JSON array of arrays");
    Multipartition lambda;
    for (const auto& component : j) lambda.push_back(partition_from_json(component));
    return lambda;
}

json partition_to_json(const Partition& lambda) { return json(lambda.parts()); }

json multipartition_to_json(const Multipartition& lambda) {
    json out = json::array();
    for (const Partition& component : lambda) out.push_back(partition_to_json(component));
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) values.push_back(std::stoi(token));
    return values;
}

std::string vector_to_string(const std::vector<int>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out + "]";
}

struct LevelArgs {
    int d = 0, eta = 0, p = 0;
    std::string kappa_text;
    std::string config_path;

    std::pair<LevelConfig, Multicharge> resolve() const {
        if (!config_path.empty()) {
            const json cfg = load_json_argument(config_path);
            const LevelConfig config(cfg.at("d").get<int>(), cfg.at("eta").get<int>(),
                                     cfg.at("p").get<int>());
            Multicharge kappa = cfg.at("kappa").get<std::vector<int>>();
            for (int& k : kappa) k = mod(k, config.e());
            return {config, kappa};
        }
        require(d > 0 && eta > 0 && p > 0, "provide --config or all of --d/--eta/--p");
        const LevelConfig config(d, eta, p);
        Multicharge kappa = parse_int_list(kappa_text);
        for (int& k : kappa) k = mod(k, config.e());
        return {config, kappa};
    }

    void attach(CLI::App* app, bool need_kappa) {
        app->add_option("--config", config_path, "config JSON {d, eta, p, kappa:[..]}");
        app->add_option("--d", d, "number of orbits of components");
        app->add_option("--eta", eta, "shift step on residues");
        app->add_option("--p", p, "order of the shift");
        if (need_kappa) app->add_option("--kappa", kappa_text, "comma-separated multicharge");
    }
};

unsigned long long cap_from_env(unsigned long long fallback) {
    if (const char* text = std::getenv("STUTTER_CAP")) return std::strtoull(text, nullptr, 10);
    return fallback;
}

int run(int argc, char** argv) {
    CLI::App app{"abacus calculus on multipartitions, block shifts and stuttering witnesses"};
    app.require_subcommand(1);

    // abacus show
    auto* abacus_cmd = app.add_subcommand("abacus", "abacus representation");
    abacus_cmd->require_subcommand(1);
    auto* abacus_show = abacus_cmd->add_subcommand("show", "render the e-abacus of a partition");
    std::string abacus_partition;
    int abacus_e = 0, abacus_window = 6;
    bool abacus_json = false;
    abacus_show->add_option("--e", abacus_e, "number of runners")->required();
    abacus_show->add_option("--partition", abacus_partition, "partition JSON, e.g. [3,2,2,1]")->required();
    abacus_show->add_option("--window", abacus_window, "half-width of the rendered window");
    abacus_show->add_flag("--json", abacus_json, "emit {e, params, core, n0}");

    // core from-params / core of
    auto* core_cmd = app.add_subcommand("core", "e-cores and abacus parameters");
    core_cmd->require_subcommand(1);
    auto* core_from = core_cmd->add_subcommand("from-params", "e-core of a zero-sum vector");
    std::string core_x;
    bool core_from_json = false;
    core_from->add_option("--e", abacus_e, "length check for --x (optional)");
    core_from->add_option("--x", core_x, "comma-separated abacus parameters")->required();
    core_from->add_flag("--json", core_from_json, "emit JSON");
    auto* core_of = core_cmd->add_subcommand("of", "e-core and weight of a partition");
    std::string core_partition;
    int core_e = 0;
    bool core_of_json = false;
    core_of->add_option("--e", core_e, "modulus")->required();
    core_of->add_option("--partition", core_partition, "partition JSON")->required();
    core_of->add_flag("--json", core_of_json, "emit JSON");

    // alpha
    auto* alpha_cmd = app.add_subcommand("alpha", "residue vector of a multipartition");
    std::string alpha_kappa_text, alpha_mp;
    int alpha_e = 0;
    bool alpha_json = false;
    alpha_cmd->add_option("--e", alpha_e, "modulus")->required();
    alpha_cmd->add_option("--kappa", alpha_kappa_text, "comma-separated multicharge")->required();
    alpha_cmd->add_option("--mp", alpha_mp, "multipartition JSON, e.g. [[5,2,1],[1,1]]")->required();
    alpha_cmd->add_flag("--json", alpha_json, "emit JSON");

    // shift mp / shift alpha
    auto* shift_cmd = app.add_subcommand("shift", "apply the shift maps");
    shift_cmd->require_subcommand(1);
    auto* shift_mp = shift_cmd->add_subcommand("mp", "rotate a multipartition by d components");
    LevelArgs shift_mp_args;
    std::string shift_mp_input;
    shift_mp_args.attach(shift_mp, false);
    shift_mp->add_option("--mp", shift_mp_input, "multipartition JSON or file")->required();
    auto* shift_alpha_cmd = shift_cmd->add_subcommand("alpha", "rotate a residue vector by eta");
    LevelArgs shift_alpha_args;
    std::string shift_alpha_input;
    shift_alpha_args.attach(shift_alpha_cmd, false);
    shift_alpha_cmd->add_option("--alpha", shift_alpha_input, "residue vector JSON or file")->required();

    // stutter find
    auto* stutter_cmd = app.add_subcommand("stutter", "shift-invariant witnesses");
    stutter_cmd->require_subcommand(1);
    auto* stutter_find = stutter_cmd->add_subcommand("find", "find a stuttering multipartition");
    LevelArgs stutter_args;
    std::string stutter_mp;
    int stutter_power = 1;
    bool stutter_json = false;
    bool stutter_minimal = false;
    stutter_args.attach(stutter_find, true);
    stutter_find->add_option("--multipartition", stutter_mp, "multipartition JSON or file")->required();
    stutter_find->add_option("--power", stutter_power, "find mu fixed by sigma^j (default 1)");
    stutter_find->add_flag("--minimal", stutter_minimal,
                           "find mu whose orbit size equals the alpha orbit size");
    stutter_find->add_flag("--json", stutter_json, "emit JSON");

    // binmat rectify
    auto* binmat_cmd = app.add_subcommand("binmat", "binary matrices with prescribed sums");
    binmat_cmd->require_subcommand(1);
    auto* binmat_rectify = binmat_cmd->add_subcommand("rectify", "repair block sums by interchanges");
    std::string binmat_input, binmat_output;
    binmat_rectify->add_option("--input", binmat_input, "JSON {p, d, blockWidth, E}")->required();
    binmat_rectify->add_option("--output", binmat_output, "output path (default: stdout)");

    // oracle verify
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force verification");
    oracle_cmd->require_subcommand(1);
    auto* oracle_verify = oracle_cmd->add_subcommand("verify", "verify the main theorem at size n");
    LevelArgs oracle_args;
    int oracle_n = 0;
    std::string oracle_report;
    oracle_args.attach(oracle_verify, true);
    oracle_verify->add_option("--n", oracle_n, "size of the multipartitions")->required();
    oracle_verify->add_option("--report", oracle_report, "write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage problems are precondition errors
    }

    if (abacus_show->parsed()) {
        require(abacus_e >= 2, "e must be >= 2");
        const Partition lambda = partition_from_json(load_json_argument(abacus_partition));
        if (abacus_json) {
            const auto [core, weight] = e_core_and_weight(lambda, abacus_e);
            (void)weight;
            const AbacusParams x = params_of_core(core, abacus_e);
            json out = {{"e", abacus_e},
                        {"params", x},
                        {"core", partition_to_json(core)},
                        {"n0", n0_of_core(x)}};
            std::cout << out.dump() << "\n";
        } else {
            std::cout << render_abacus(abacus_from_partition(lambda, abacus_e), abacus_window);
        }
        return 0;
    }
    if (core_from->parsed()) {
        const AbacusParams x = parse_int_list(core_x);
        if (abacus_e > 0)
            require(static_cast<int>(x.size()) == abacus_e, "--x length must equal --e");
        const Partition core = core_from_params(x);
        if (core_from_json) {
            json out = {{"core", partition_to_json(core)},
                        {"params", x},
                        {"n0", n0_of_core(x)}};
            std::cout << out.dump() << "\n";
        } else {
            std::cout << core.to_string() << "\n";
        }
        return 0;
    }
    if (core_of->parsed()) {
        const Partition lambda = partition_from_json(load_json_argument(core_partition));
        const auto [core, weight] = e_core_and_weight(lambda, core_e);
        if (core_of_json) {
            json out = {{"core", partition_to_json(core)}, {"weight", weight}};
            std::cout << out.dump() << "\n";
        } else {
            std::cout << core.to_string() << " weight " << weight << "\n";
        }
        return 0;
    }
    if (alpha_cmd->parsed()) {
        Multicharge kappa = parse_int_list(alpha_kappa_text);
        for (int& k : kappa) k = mod(k, alpha_e);
        const Multipartition lambda = multipartition_from_json(load_json_argument(alpha_mp));
        const ResidueVector alpha = alpha_kappa(lambda, kappa, alpha_e);
        if (alpha_json)
            std::cout << json{{"alpha", alpha}}.dump() << "\n";
        else
            std::cout << vector_to_string(alpha) << "\n";
        return 0;
    }
    if (shift_mp->parsed()) {
        const auto [config, kappa] = [&] {
            if (!shift_mp_args.config_path.empty()) return shift_mp_args.resolve();
            require(shift_mp_args.d > 0 && shift_mp_args.eta > 0 && shift_mp_args.p > 0,
                    "provide --config or all of --d/--eta/--p");
            return std::pair<LevelConfig, Multicharge>(
                LevelConfig(shift_mp_args.d, shift_mp_args.eta, shift_mp_args.p), {});
        }();
        (void)kappa;
        const Multipartition lambda = multipartition_from_json(load_json_argument(shift_mp_input));
        std::cout << multipartition_to_json(shift_multipartition(lambda, config)).dump() << "\n";
        return 0;
    }
    if (shift_alpha_cmd->parsed()) {
        const auto [config, kappa] = [&] {
            if (!shift_alpha_args.config_path.empty()) return shift_alpha_args.resolve();
            require(shift_alpha_args.d > 0 && shift_alpha_args.eta > 0 && shift_alpha_args.p > 0,
                    "provide --config or all of --d/--eta/--p");
            return std::pair<LevelConfig, Multicharge>(
                LevelConfig(shift_alpha_args.d, shift_alpha_args.eta, shift_alpha_args.p), {});
        }();
        (void)kappa;
        const ResidueVector alpha =
            load_json_argument(shift_alpha_input).get<std::vector<int>>();
        std::cout << json(shift_alpha(alpha, config)).dump() << "\n";
        return 0;
    }
    if (stutter_find->parsed()) {
        const auto [config, kappa] = stutter_args.resolve();
        const Multipartition lambda = multipartition_from_json(load_json_argument(stutter_mp));
        const ResidueVector alpha = alpha_kappa(lambda, kappa, config.e());
        Multipartition mu;
        if (stutter_minimal) {
            mu = find_minimal_orbit(lambda, kappa, config);
        } else {
            require(stutter_power >= 1 && config.p % stutter_power == 0,
                    "--power must divide p");
            const LevelConfig derived(config.d * stutter_power, config.eta * stutter_power,
                                      config.p / stutter_power);
            mu = find_stuttering(lambda, kappa, derived);
        }
        const int orbit_before = orbit_size_multipartition(lambda, config);
        const int orbit_after = orbit_size_multipartition(mu, config);
        const bool alpha_ok = alpha_kappa(mu, kappa, config.e()) == alpha;
        ensure(alpha_ok, "witness left the block");
        if (stutter_json) {
            json out = {{"witness", multipartition_to_json(mu)},
                        {"alpha", alpha},
                        {"orbitBefore", orbit_before},
                        {"orbitAfter", orbit_after},
                        {"checks", "all-pass"}};
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "witness: " << multipartition_to_json(mu).dump() << "\n";
            std::cout << "alpha: " << vector_to_string(alpha) << "\n";
            std::cout << "orbit: " << orbit_before << " -> " << orbit_after << "\n";
            std::cout << "checks: all-pass\n";
        }
        return 0;
    }
    if (binmat_rectify->parsed()) {
        const json input = load_json_argument(binmat_input);
        const int p = input.at("p").get<int>();
        const int block_width = input.value("blockWidth", p);
        std::vector<BinaryMatrix> matrices;
        for (const auto& rows : input.at("E"))
            matrices.push_back(BinaryMatrix::from_rows(rows.get<std::vector<std::vector<int>>>()));
        require(static_cast<int>(matrices.size()) == p, "expected p matrices in E");
        require(!matrices.empty() && matrices[0].cols() % block_width == 0,
                "columns must split into whole blocks");
        const int block_count = matrices[0].cols() / block_width;
        std::vector<int> targets(static_cast<std::size_t>(block_count), 0);
        for (int i = 0; i < block_count; ++i) {
            long long sum = 0;
            for (const auto& m : matrices)
                for (int l = 0; l < m.rows(); ++l)
                    for (int t = 0; t < block_width; ++t) sum += m.at(l, i * block_width + t);
            require(sum % p == 0, "block targets are not integers");
            targets[static_cast<std::size_t>(i)] = static_cast<int>(sum / p);
        }
        const RectifyResult result = rectify_block_sums(matrices, block_width, targets);
        json out = {{"p", p},
                    {"d", input.value("d", result.matrices[0].rows())},
                    {"blockWidth", block_width},
                    {"targets", targets}};
        out["E"] = json::array();
        for (const auto& m : result.matrices) out["E"].push_back(m.to_rows());
        out["log"] = json::array();
        for (const auto& entry : result.log)
            out["log"].push_back({{"jPlus", entry.j_plus},
                                  {"jMinus", entry.j_minus},
                                  {"row", entry.row},
                                  {"colFrom", entry.col_from},
                                  {"colTo", entry.col_to}});
        if (binmat_output.empty()) {
            std::cout << out.dump(2) << "\n";
        } else {
            std::ofstream file(binmat_output);
            require(static_cast<bool>(file), "cannot write " + binmat_output);
            file << out.dump(2) << "\n";
        }
        return 0;
    }
    if (oracle_verify->parsed()) {
        const auto [config, kappa] = oracle_args.resolve();
        const unsigned long long cap = cap_from_env(1000000ULL);
        const TheoremReport report = verify_main_theorem(oracle_n, kappa, config, cap);
        const BlockTable table = enumerate_blocks(oracle_n, kappa, config, cap);
        json blocks = json::array();
        for (const auto& [alpha, block] : table.blocks)
            blocks.push_back({{"alpha", alpha},
                              {"size", block.members.size()},
                              {"alphaOrbit", block.alpha_orbit},
                              {"minOrbit", block.min_member_orbit},
                              {"maxOrbit", block.max_member_orbit}});
        json out = {{"config",
                     {{"d", config.d}, {"eta", config.eta}, {"p", config.p}, {"kappa", kappa}}},
                    {"n", oracle_n},
                    {"total", table.total},
                    {"blocks", blocks},
                    {"failures", report.failures}};
        if (!oracle_report.empty()) {
            std::ofstream file(oracle_report);
            require(static_cast<bool>(file), "cannot write " + oracle_report);
            file << out.dump(2) << "\n";
        } else {
            std::cout << out.dump(2) << "\n";
        }
        std::cout << (report.pass ? "verified" : "FAILED") << ": " << report.blocks_checked
                  << " blocks, " << table.total << " multipartitions\n";
        return report.pass ? 0 : 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const invariant_error& err) {
        std::cerr << "internal invariant error: " << err.what() << "\n";
        return 2;
    } catch (const precondition_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
}
