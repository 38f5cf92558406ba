#include "snortcgt/engine.hpp"
#include "snortcgt/families.hpp"
#include "snortcgt/notation.hpp"
#include "snortcgt/position_io.hpp"
#include "snortcgt/search.hpp"
#include "snortcgt/thermograph.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitVerifyFailed = 3;

// Input problems (bad files, bad game literals) exit with kExitInput.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

snort::Position load_position(const std::string& path) {
    try {
        return snort::load_position_file(path);
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
}

cgt::Game parse_game_or_fail(const std::string& text) {
    try {
        return cgt::parse_game(text);
    } catch (const cgt::ParseError& e) {
        throw InputError(std::string("cannot parse game literal: ") + e.what());
    }
}

void apply_memo_limit_from_env() {
    if (const char* env = std::getenv("SNORT_MEMO_LIMIT")) {
        char* end = nullptr;
        unsigned long long cap = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0') {
            throw InputError("SNORT_MEMO_LIMIT must be a non-negative integer");
        }
        snort::set_value_memo_limit(static_cast<std::size_t>(cap));
    }
}

int cmd_eval(const std::string& file, bool json, bool with_temperature) {
    snort::Position p = load_position(file);
    cgt::Game g = snort::value(p);
    std::string form = cgt::format_game(g);
    if (json) {
        nlohmann::ordered_json out;
        out["canonicalForm"] = form;
        if (with_temperature) out["temperature"] = cgt::temperature(g).str();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << form << "\n";
        if (with_temperature) std::cout << "t = " << cgt::temperature(g).str() << "\n";
    }
    return kExitOk;
}

int cmd_temp(const std::string& file, const std::string& game_literal, bool json) {
    cgt::Dyadic t = game_literal.empty()
                        ? snort::position_temperature(load_position(file))
                        : cgt::temperature(parse_game_or_fail(game_literal));
    if (json) {
        nlohmann::ordered_json out;
        out["temperature"] = t.str();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << t.str() << "\n";
    }
    return kExitOk;
}

int cmd_thermo(const std::string& file, const std::string& game_literal, bool json,
               const std::string& svg_path) {
    cgt::Game g = game_literal.empty() ? snort::value(load_position(file))
                                       : parse_game_or_fail(game_literal);
    cgt::Thermograph th = cgt::thermograph(g);
    if (!svg_path.empty()) {
        std::ofstream out(svg_path);
        if (!out) throw InputError("cannot write SVG file: " + svg_path);
        out << cgt::thermograph_svg(th);
    }
    if (json) {
        std::cout << cgt::thermograph_json(th);
    } else {
        std::cout << "game: " << cgt::format_game(cgt::canonicalize(g)) << "\n";
        std::cout << "temperature: " << th.temperature.str() << "\n";
        std::cout << "mast: " << th.mast.str() << "\n";
        auto print = [](const char* name, const cgt::Trajectory& tr) {
            std::cout << name << ":";
            for (const auto& p : tr.breakpoints()) {
                std::cout << " (" << p.t.str() << ", " << p.value.str() << ")";
            }
            std::cout << "\n";
        };
        print("left boundary", th.left);
        print("right boundary", th.right);
    }
    return kExitOk;
}

int cmd_verify(const std::string& family, int n_max, bool json) {
    snort::Family f;
    try {
        f = snort::family_from_name(family);
    } catch (const snort::UnsupportedFamily& e) {
        throw InputError(e.what());
    }
    snort::VerifyReport report = snort::verify_family(f, 1, n_max);
    if (json) {
        std::cout << snort::report_json(report).dump(2) << "\n";
    } else {
        std::cout << snort::report_text(report);
    }
    return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

int cmd_search(const std::string& config_path, const std::string& resume_path,
               const std::string& out_path, bool seed_set, std::uint64_t seed) {
    snort::SearchConfig cfg;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw InputError("cannot open config file: " + config_path);
        try {
            cfg = snort::config_from_json(nlohmann::json::parse(in));
        } catch (const snort::ConfigError&) {
            throw;
        } catch (const std::exception& e) {
            throw InputError(std::string("bad config: ") + e.what());
        }
    }
    if (seed_set) cfg.rng_seed = seed;
    std::vector<snort::Position> seeds;
    if (!resume_path.empty()) {
        std::ifstream in(resume_path);
        if (!in) throw InputError("cannot open resume file: " + resume_path);
        try {
            seeds = snort::hall_of_fame_positions(nlohmann::json::parse(in));
        } catch (const std::exception& e) {
            throw InputError(std::string("bad resume file: ") + e.what());
        }
    }
    if (seeds.empty()) {
        std::vector<snort::Position> defaults;
        defaults.push_back(snort::make_witness_tree());
        for (int n = 2; n <= 4; ++n) defaults.push_back(snort::make_star(n, snort::Tint::None));
        for (auto& d : defaults) {
            if (d.size() <= cfg.max_vertices) seeds.push_back(std::move(d));
        }
        if (seeds.empty()) throw InputError("maxVertices too small for the default seed set");
    }
    snort::HallOfFame hof = snort::evolve(cfg, seeds);
    std::string dump = snort::hall_of_fame_to_json(cfg, hof).dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << dump;
    } else {
        std::ofstream out(out_path);
        if (!out) throw InputError("cannot write output file: " + out_path);
        out << dump;
        if (!hof.entries.empty()) {
            std::cout << "best fitness " << hof.entries.front().fitness.str() << " over "
                      << hof.best_per_generation.size() << " generations; hall of fame written to "
                      << out_path << "\n";
        }
    }
    return kExitOk;
}

int cmd_conjecture(const std::vector<std::string>& files, bool json) {
    std::vector<snort::Position> positions;
    for (const std::string& f : files) positions.push_back(load_position(f));
    snort::ConjectureReport report = snort::check_conjecture(positions);
    if (json) {
        std::cout << snort::conjecture_json(report).dump(2) << "\n";
    } else {
        std::cout << snort::conjecture_text(report);
    }
    return report.any_violation ? kExitVerifyFailed : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Snort game values, canonical forms, thermographs and temperature search"};
    app.require_subcommand(1);

    std::string file, game_literal, svg_path, family = "caterpillar";
    std::string config_path, resume_path, out_path;
    std::vector<std::string> files;
    bool json = false, with_temperature = false;
    int n_max = 4;
    std::uint64_t seed = 0;

    auto* eval = app.add_subcommand("eval", "Canonical form of a position file");
    eval->add_option("file", file)->required();
    eval->add_flag("--json", json);
    eval->add_flag("--temperature", with_temperature);

    auto* temp = app.add_subcommand("temp", "Temperature of a position or game literal");
    temp->add_option("file", file);
    temp->add_option("--game", game_literal);
    temp->add_flag("--json", json);

    auto* thermo = app.add_subcommand("thermo", "Thermograph of a position or game literal");
    thermo->add_option("file", file);
    thermo->add_option("--game", game_literal);
    thermo->add_flag("--json", json);
    thermo->add_option("--svg", svg_path);

    auto* verify = app.add_subcommand("verify", "Check a family against its closed forms");
    verify->add_option("--family", family);
    verify->add_option("--n-max", n_max);
    verify->add_flag("--json", json);

    auto* search = app.add_subcommand("search", "Genetic search for positions with large t - deg");
    search->add_option("--config", config_path);
    search->add_option("--resume", resume_path);
    search->add_option("--out", out_path);
    auto* seed_opt = search->add_option("--seed", seed);

    auto* conjecture = app.add_subcommand("conjecture", "Check t <= deg + deg2/2 on positions");
    conjecture->add_option("files", files);
    conjecture->add_flag("--json", json);

    CLI11_PARSE(app, argc, argv);

    try {
        apply_memo_limit_from_env();
        if (eval->parsed()) return cmd_eval(file, json, with_temperature);
        if (temp->parsed()) {
            if (file.empty() == game_literal.empty()) {
                throw InputError("temp needs exactly one of a position file or --game");
            }
            return cmd_temp(file, game_literal, json);
        }
        if (thermo->parsed()) {
            if (file.empty() == game_literal.empty()) {
                throw InputError("thermo needs exactly one of a position file or --game");
            }
            return cmd_thermo(file, game_literal, json, svg_path);
        }
        if (verify->parsed()) return cmd_verify(family, n_max, json);
        if (search->parsed()) {
            return cmd_search(config_path, resume_path, out_path, seed_opt->count() > 0, seed);
        }
        if (conjecture->parsed()) {
            if (files.empty()) throw InputError("conjecture needs at least one position file");
            return cmd_conjecture(files, json);
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const snort::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
