#pragma once

#include "snortcgt/dyadic.hpp"
#include "snortcgt/position.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace snort {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class FitnessKind { TempMinusDeg, TempMinusDegMinusHalfDeg2 };

const char* fitness_name(FitnessKind f);
FitnessKind fitness_from_name(const std::string& name);

struct SearchConfig {
    int population_size = 48;
    int generations = 30;
    std::map<std::string, double> mutation_rates = {
        {"edge-toggle", 0.5},
        {"add-pendant", 0.2},
        {"delete-low-degree", 0.2},
        {"add-joined-vertex", 0.1},
    };
    double crossover_rate = 0.3;
    int tournament_size = 3;
    int elite_count = 4;
    int max_vertices = 16;
    std::uint64_t rng_seed = 20220717;
    FitnessKind fitness = FitnessKind::TempMinusDeg;
};

struct HallOfFameEntry {
    Position position;
    cgt::Dyadic fitness;
    int generation = 0;
};

struct HallOfFame {
    // Sorted by fitness descending (ties: generation, then canonical key);
    // no two entries are isomorphic.
    std::vector<HallOfFameEntry> entries;
    std::vector<cgt::Dyadic> best_per_generation;
};

// t(p) - deg(p), or the deg2-penalized variant; cached by canonical key.
cgt::Dyadic fitness(const Position& p, const SearchConfig& cfg);

// Seeded genetic search over untinted simple graphs. The population starts
// from the seeds padded with random connected graphs; each generation runs
// tournament selection, crossover (graft a random induced subgraph of one
// parent onto a random vertex of the other), one mutation drawn from
// mutation_rates, and elitism. All randomness comes from cfg.rng_seed, so a
// run is reproducible bit-for-bit.
HallOfFame evolve(const SearchConfig& cfg, const std::vector<Position>& seeds);

struct ConjectureRow {
    Position position;
    cgt::Dyadic temperature;
    int degree = 0;
    int second_degree = 0;
    cgt::Dyadic margin;  // deg + deg2/2 - t
    bool violated = false;
};

struct ConjectureReport {
    std::vector<ConjectureRow> rows;
    bool any_violation = false;
};

// Checks t(G) <= deg(G) + deg2(G)/2 for each position. A violation is a
// headline finding: callers must surface it loudly, never drop it.
ConjectureReport check_conjecture(const std::vector<Position>& positions);

std::string conjecture_text(const ConjectureReport& report);
nlohmann::ordered_json conjecture_json(const ConjectureReport& report);

nlohmann::ordered_json config_to_json(const SearchConfig& cfg);
SearchConfig config_from_json(const nlohmann::json& j);

nlohmann::ordered_json hall_of_fame_to_json(const SearchConfig& cfg, const HallOfFame& hof);
std::vector<Position> hall_of_fame_positions(const nlohmann::json& j);

}  // namespace snort
