#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "critdeg/instance_io.hpp"
#include "critdeg/random_family.hpp"

using namespace critdeg;
using nlohmann::json;

namespace {

// Exit codes: 0 analysis completed, 1 formula/oracle disagreement,
// 2 input error, 3 genericity budget exhausted.
constexpr int kOk = 0;
constexpr int kDisagreement = 1;
constexpr int kInputError = 2;
constexpr int kGenericityExhausted = 3;

int verdict_exit_code(Verdict v) {
    switch (v) {
        case Verdict::Disagree: return kDisagreement;
        case Verdict::Indeterminate: return kGenericityExhausted;
        default: return kOk;
    }
}

int run_analyze(const std::string& path, const std::string& format) {
    const InstanceFile instance = load_instance(path);
    const PolytopeFamily family = family_from_instance(instance);
    const OracleOptions oracle = oracle_from_instance(instance, family);
    const CodimReport report = analyze_family(family, oracle);
    if (format == "json")
        std::cout << report_json_string(report);
    else
        std::cout << report_text(report);
    return verdict_exit_code(report.verdict);
}

int run_e1_table(const std::string& path, const std::string& format) {
    const InstanceFile instance = load_instance(path);
    const PolytopeFamily family = family_from_instance(instance);
    const CodimReport report = analyze_family(family);
    if (!report.essential.essential) {
        std::cerr << "e1-table: the family is not essential; the E1 table is undefined\n";
        return kInputError;
    }
    if (format == "json") {
        json j;
        j["n"] = report.n;
        j["e1_table"] = *report.e1;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << e1_table_text(report);
    }
    return kOk;
}

int run_verify(const std::string& path, std::uint64_t seed, int trials) {
    const InstanceFile instance = load_instance(path);
    const PolytopeFamily family = family_from_instance(instance);
    if (!is_essential(family).essential) {
        std::cerr << "verify: the family is not essential; there are no claims to check\n";
        return kInputError;
    }

    json out;
    out["n"] = family.n();
    out["verify"]["base_seed"] = seed;
    out["verify"]["trials"] = trials;
    json results = json::array();
    int exit_code = kOk;
    for (int t = 0; t < trials; ++t) {
        OracleOptions oracle;
        oracle.enabled = true;
        oracle.seed = seed + static_cast<std::uint64_t>(t);
        const CodimReport report = analyze_family(family, oracle);
        if (t == 0) {
            out["bounds"] = {{"lower", report.bounds->lower}, {"upper", report.bounds->upper}};
            out["formula"]["applicable"] = report.formula_value.has_value();
            if (report.formula_value) out["formula"]["value"] = *report.formula_value;
            out["genfor"]["applicable"] = report.genfor_value.has_value();
            if (report.genfor_value) out["genfor"]["value"] = *report.genfor_value;
        }
        json trial;
        trial["seed"] = oracle.seed;
        trial["seed_used"] = *report.oracle_seed_used;
        trial["reseeds"] = report.reseeds_used;
        trial["value"] = *report.oracle_value;
        trial["verdict"] = verdict_name(report.verdict);
        results.push_back(std::move(trial));
        const int code = verdict_exit_code(report.verdict);
        exit_code = std::max(exit_code, code);
        if (code != kOk) out["verify"]["failing_seed"] = oracle.seed;
    }
    out["verify"]["results"] = std::move(results);
    out["verify"]["all_ok"] = (exit_code == kOk);
    std::cout << out.dump(2) << "\n";
    return exit_code;
}

int run_random(int n, Int max_coord, std::uint64_t seed, const std::string& out_path) {
    const PolytopeFamily family = random_family(n, max_coord, seed);
    InstanceFile instance;
    instance.n = n;
    for (int i = 0; i <= n; ++i) instance.polytopes.push_back(family.member(i).vertices());
    instance.generic_seed = seed;
    const std::string text = serialize_instance(instance);
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "random: cannot write " << out_path << "\n";
            return kInputError;
        }
        out << text;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"codimension of polynomial ideals in the critical degree of toric Cox rings"};
    app.require_subcommand(1);

    std::string path, format = "text", out_path;
    std::uint64_t seed = 0;
    int trials = 5, n = 2;
    Int max_coord = 2;

    auto* analyze = app.add_subcommand("analyze", "run the full analysis of an instance file");
    analyze->add_option("file", path, "instance JSON file")->required();
    analyze->add_option("--format", format, "output format: json|text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* verify = app.add_subcommand("verify", "check formulas against generic oracle draws");
    verify->add_option("file", path, "instance JSON file")->required();
    verify->add_option("--seed", seed, "base seed for the generic draws");
    verify->add_option("--trials", trials, "number of independent draws")->check(CLI::PositiveNumber);

    auto* random = app.add_subcommand("random", "generate a random essential instance");
    random->add_option("--n", n, "ambient dimension (1..4)")->required();
    random->add_option("--max-coord", max_coord, "coordinate range [0, C]")->required();
    random->add_option("--seed", seed, "generator seed")->required();
    random->add_option("--out", out_path, "output path ('-' for stdout)");

    auto* e1 = app.add_subcommand("e1-table", "print the E1 dimension table of an instance");
    e1->add_option("file", path, "instance JSON file")->required();
    e1->add_option("--format", format, "output format: json|text")
        ->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kInputError : kOk;
    }

    try {
        if (app.got_subcommand(analyze)) return run_analyze(path, format);
        if (app.got_subcommand(verify)) return run_verify(path, seed, trials);
        if (app.got_subcommand(random)) return run_random(n, max_coord, seed, out_path);
        if (app.got_subcommand(e1)) return run_e1_table(path, format);
    } catch (const InstanceError& e) {
        std::cerr << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
