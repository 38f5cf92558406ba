#include "snortcgt/search.hpp"

#include "snortcgt/engine.hpp"
#include "snortcgt/position_io.hpp"
#include "snortcgt/rng.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace snort {

using cgt::Dyadic;

const char* fitness_name(FitnessKind f) {
    switch (f) {
        case FitnessKind::TempMinusDeg: return "temp-minus-deg";
        case FitnessKind::TempMinusDegMinusHalfDeg2: return "temp-minus-deg-minus-half-deg2";
    }
    return "?";
}

FitnessKind fitness_from_name(const std::string& name) {
    if (name == "temp-minus-deg") return FitnessKind::TempMinusDeg;
    if (name == "temp-minus-deg-minus-half-deg2") return FitnessKind::TempMinusDegMinusHalfDeg2;
    throw ConfigError("unknown fitness: " + name);
}

namespace {

struct FitnessCache {
    std::mutex mutex;
    std::unordered_map<std::string, Dyadic> values;
};

FitnessCache& fitness_cache() {
    static FitnessCache c;
    return c;
}

void validate(const SearchConfig& cfg) {
    if (cfg.population_size < 2) throw ConfigError("populationSize must be at least 2");
    if (cfg.generations < 0) throw ConfigError("generations must be non-negative");
    if (cfg.elite_count < 0 || cfg.elite_count >= cfg.population_size) {
        throw ConfigError("eliteCount must be in [0, populationSize)");
    }
    if (cfg.tournament_size < 1) throw ConfigError("tournamentSize must be at least 1");
    if (cfg.max_vertices < 1 || cfg.max_vertices > Position::kMaxVertices) {
        throw ConfigError("maxVertices must be in [1, 64]");
    }
    if (cfg.crossover_rate < 0.0 || cfg.crossover_rate > 1.0) {
        throw ConfigError("crossoverRate must be in [0, 1]");
    }
    double total = 0.0;
    for (const auto& [name, p] : cfg.mutation_rates) {
        if (p < 0.0 || p > 1.0) throw ConfigError("mutation rate out of [0, 1]: " + name);
        total += p;
    }
    if (total > 1.0 + 1e-9) throw ConfigError("mutation rates sum beyond 1");
}

Position random_connected_graph(Rng& rng, int max_vertices) {
    int lo = std::min(3, max_vertices);
    int n = rng.range(lo, max_vertices);
    Position p;
    for (int i = 0; i < n; ++i) p.add_vertex("v" + std::to_string(i));
    for (int i = 1; i < n; ++i) p.add_edge(i, rng.range(0, i - 1));  // random spanning tree
    int extra = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    for (int k = 0; k < extra; ++k) {
        int u = rng.range(0, n - 1);
        int v = rng.range(0, n - 2);
        if (v >= u) ++v;
        if (!p.has_edge(u, v)) p.add_edge(u, v);
    }
    return p;
}

// Fresh labels so grafted vertices never collide with host labels.
Position relabelled(const Position& p) {
    Position q;
    for (int v = 0; v < p.size(); ++v) q.add_vertex("v" + std::to_string(v), p.tint(v));
    for (auto [u, v] : p.edge_list()) q.add_edge(u, v);
    return q;
}

Position crossover(const Position& host, const Position& donor, int max_vertices, Rng& rng) {
    Position child = relabelled(host);
    if (donor.size() == 0) return child;
    int want = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(donor.size())));
    int room = max_vertices - child.size();
    int take = std::min(want, room);
    if (take <= 0) return child;
    // Random induced subgraph of the donor on `take` vertices.
    std::vector<int> pool(donor.size());
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<int>(i);
    std::vector<int> chosen;
    for (int k = 0; k < take; ++k) {
        std::size_t idx = rng.below(pool.size());
        chosen.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<long>(idx));
    }
    std::vector<int> map(donor.size(), -1);
    int base = child.size();
    for (std::size_t i = 0; i < chosen.size(); ++i) {
        map[chosen[i]] = child.add_vertex("g" + std::to_string(base + static_cast<int>(i)));
    }
    for (auto [u, v] : donor.edge_list()) {
        if (map[u] >= 0 && map[v] >= 0) child.add_edge(map[u], map[v]);
    }
    // One bridging edge grafts the subgraph onto the host.
    if (base > 0) {
        int from = map[chosen[rng.below(chosen.size())]];
        int to = rng.range(0, base - 1);
        if (!child.has_edge(from, to)) child.add_edge(from, to);
    }
    return child;
}

void mutate(Position& p, const SearchConfig& cfg, Rng& rng) {
    double x = rng.unit();
    double acc = 0.0;
    std::string op;
    for (const auto& [name, prob] : cfg.mutation_rates) {  // std::map: fixed order
        acc += prob;
        if (x < acc) {
            op = name;
            break;
        }
    }
    if (op.empty()) return;  // rates may sum below 1: remainder mutates nothing
    const int n = p.size();
    if (op == "edge-toggle") {
        if (n < 2) return;
        int u = rng.range(0, n - 1);
        int v = rng.range(0, n - 2);
        if (v >= u) ++v;
        p.toggle_edge(u, v);
    } else if (op == "add-pendant") {
        if (n >= cfg.max_vertices) return;
        int anchor = n > 0 ? rng.range(0, n - 1) : -1;
        int fresh = p.add_vertex("p" + std::to_string(n));
        if (anchor >= 0) p.add_edge(anchor, fresh);
    } else if (op == "delete-low-degree") {
        std::vector<int> candidates;
        for (int v = 0; v < n; ++v) {
            if (p.vertex_degree(v) <= 1) candidates.push_back(v);
        }
        if (candidates.empty()) return;
        p.remove_vertex(candidates[rng.below(candidates.size())]);
    } else if (op == "add-joined-vertex") {
        if (n >= cfg.max_vertices || n == 0) return;
        int joins = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(n, 3))));
        std::vector<int> pool(n);
        for (int i = 0; i < n; ++i) pool[i] = i;
        int fresh = p.add_vertex("j" + std::to_string(n));
        for (int k = 0; k < joins; ++k) {
            std::size_t idx = rng.below(pool.size());
            p.add_edge(fresh, pool[idx]);
            pool.erase(pool.begin() + static_cast<long>(idx));
        }
    } else {
        throw ConfigError("unknown mutation operator: " + op);
    }
}

}  // namespace

Dyadic fitness(const Position& p, const SearchConfig& cfg) {
    if (p.size() > cfg.max_vertices) {
        throw ConfigError("position exceeds maxVertices");
    }
    std::string key = canonical_key(normalize(p));
    key.push_back(static_cast<char>(cfg.fitness));
    {
        FitnessCache& c = fitness_cache();
        std::lock_guard<std::mutex> lock(c.mutex);
        auto it = c.values.find(key);
        if (it != c.values.end()) return it->second;
    }
    Dyadic f = position_temperature(p) - Dyadic(degree(p));
    if (cfg.fitness == FitnessKind::TempMinusDegMinusHalfDeg2) {
        f -= Dyadic::fraction(second_degree(p), 1);
    }
    FitnessCache& c = fitness_cache();
    std::lock_guard<std::mutex> lock(c.mutex);
    c.values.emplace(std::move(key), f);
    return f;
}

HallOfFame evolve(const SearchConfig& cfg, const std::vector<Position>& seeds) {
    validate(cfg);
    if (seeds.empty()) throw ConfigError("seed list must not be empty");
    for (const Position& s : seeds) {
        if (s.size() > cfg.max_vertices) throw ConfigError("seed exceeds maxVertices");
    }
    Rng rng(cfg.rng_seed);
    std::vector<Position> pop;
    for (const Position& s : seeds) {
        if (static_cast<int>(pop.size()) >= cfg.population_size) break;
        pop.push_back(relabelled(s));
    }
    while (static_cast<int>(pop.size()) < cfg.population_size) {
        pop.push_back(random_connected_graph(rng, cfg.max_vertices));
    }

    struct HofSlot {
        Position position;
        Dyadic fitness;
        int generation;
        std::string key;
    };
    std::unordered_map<std::string, HofSlot> hof;
    HallOfFame result;

    std::vector<Dyadic> fits(pop.size(), Dyadic(0));
    for (int gen = 0;; ++gen) {
        for (std::size_t i = 0; i < pop.size(); ++i) fits[i] = fitness(pop[i], cfg);
        Dyadic best = fits[0];
        for (std::size_t i = 0; i < pop.size(); ++i) {
            best = Dyadic::max(best, fits[i]);
            std::string key = canonical_key(pop[i]);
            auto it = hof.find(key);
            if (it == hof.end()) {
                hof.emplace(key, HofSlot{pop[i], fits[i], gen, key});
            }
        }
        result.best_per_generation.push_back(best);
        if (gen == cfg.generations) break;

        auto tournament = [&]() -> int {
            int winner = static_cast<int>(rng.below(pop.size()));
            for (int k = 1; k < cfg.tournament_size; ++k) {
                int challenger = static_cast<int>(rng.below(pop.size()));
                if (fits[challenger] > fits[winner] ||
                    (fits[challenger] == fits[winner] && challenger < winner)) {
                    winner = challenger;
                }
            }
            return winner;
        };

        std::vector<int> order(pop.size());
        for (std::size_t i = 0; i < pop.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (fits[a] != fits[b]) return fits[b] < fits[a];
            return a < b;
        });
        std::vector<Position> next;
        for (int e = 0; e < cfg.elite_count; ++e) next.push_back(pop[order[e]]);
        while (static_cast<int>(next.size()) < cfg.population_size) {
            int pa = tournament();
            Position child;
            if (rng.chance(cfg.crossover_rate)) {
                int pb = tournament();
                child = crossover(pop[pa], pop[pb], cfg.max_vertices, rng);
            } else {
                child = relabelled(pop[pa]);
            }
            mutate(child, cfg, rng);
            next.push_back(std::move(child));
        }
        pop = std::move(next);
    }

    for (auto& [key, slot] : hof) {
        result.entries.push_back(HallOfFameEntry{std::move(slot.position), slot.fitness, slot.generation});
    }
    std::sort(result.entries.begin(), result.entries.end(),
              [](const HallOfFameEntry& a, const HallOfFameEntry& b) {
                  if (a.fitness != b.fitness) return b.fitness < a.fitness;
                  if (a.generation != b.generation) return a.generation < b.generation;
                  return canonical_key(a.position) < canonical_key(b.position);
              });
    return result;
}

ConjectureReport check_conjecture(const std::vector<Position>& positions) {
    ConjectureReport report;
    for (const Position& p : positions) {
        ConjectureRow row;
        row.position = p;
        row.temperature = position_temperature(p);
        row.degree = degree(p);
        row.second_degree = second_degree(p);
        row.margin = Dyadic(row.degree) + Dyadic::fraction(row.second_degree, 1) - row.temperature;
        row.violated = row.margin.sign() < 0;
        if (row.violated) report.any_violation = true;
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string conjecture_text(const ConjectureReport& report) {
    std::ostringstream out;
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const auto& row = report.rows[i];
        out << "position " << i << ": t = " << row.temperature.str() << ", deg = " << row.degree
            << ", deg2 = " << row.second_degree << ", margin = " << row.margin.str() << " -> "
            << (row.violated ? "VIOLATION" : "ok") << "\n";
    }
    if (report.any_violation) {
        out << "*** CONJECTURE VIOLATION: some position has t > deg + deg2/2."
            << " This is a notable finding; inspect the rows above. ***\n";
    } else {
        out << "all positions satisfy t <= deg + deg2/2\n";
    }
    return out.str();
}

nlohmann::ordered_json conjecture_json(const ConjectureReport& report) {
    nlohmann::ordered_json j;
    j["anyViolation"] = report.any_violation;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
        nlohmann::ordered_json r;
        r["temperature"] = row.temperature.str();
        r["degree"] = row.degree;
        r["secondDegree"] = row.second_degree;
        r["margin"] = row.margin.str();
        r["violated"] = row.violated;
        r["position"] = position_to_json(row.position);
        j["rows"].push_back(std::move(r));
    }
    return j;
}

nlohmann::ordered_json config_to_json(const SearchConfig& cfg) {
    nlohmann::ordered_json j;
    j["populationSize"] = cfg.population_size;
    j["generations"] = cfg.generations;
    j["mutationRates"] = nlohmann::ordered_json::object();
    for (const auto& [name, p] : cfg.mutation_rates) j["mutationRates"][name] = p;
    j["crossoverRate"] = cfg.crossover_rate;
    j["tournamentSize"] = cfg.tournament_size;
    j["eliteCount"] = cfg.elite_count;
    j["maxVertices"] = cfg.max_vertices;
    j["rngSeed"] = cfg.rng_seed;
    j["fitness"] = fitness_name(cfg.fitness);
    return j;
}

SearchConfig config_from_json(const nlohmann::json& j) {
    SearchConfig cfg;
    if (j.contains("populationSize")) cfg.population_size = j.at("populationSize").get<int>();
    if (j.contains("generations")) cfg.generations = j.at("generations").get<int>();
    if (j.contains("mutationRates")) {
        cfg.mutation_rates.clear();
        for (const auto& [name, p] : j.at("mutationRates").items()) {
            cfg.mutation_rates[name] = p.get<double>();
        }
    }
    if (j.contains("crossoverRate")) cfg.crossover_rate = j.at("crossoverRate").get<double>();
    if (j.contains("tournamentSize")) cfg.tournament_size = j.at("tournamentSize").get<int>();
    if (j.contains("eliteCount")) cfg.elite_count = j.at("eliteCount").get<int>();
    if (j.contains("maxVertices")) cfg.max_vertices = j.at("maxVertices").get<int>();
    if (j.contains("rngSeed")) cfg.rng_seed = j.at("rngSeed").get<std::uint64_t>();
    if (j.contains("fitness")) cfg.fitness = fitness_from_name(j.at("fitness").get<std::string>());
    return cfg;
}

nlohmann::ordered_json hall_of_fame_to_json(const SearchConfig& cfg, const HallOfFame& hof) {
    nlohmann::ordered_json j;
    j["config"] = config_to_json(cfg);
    j["bestPerGeneration"] = nlohmann::ordered_json::array();
    for (const Dyadic& d : hof.best_per_generation) j["bestPerGeneration"].push_back(d.str());
    j["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : hof.entries) {
        nlohmann::ordered_json entry;
        entry["fitness"] = e.fitness.str();
        entry["generation"] = e.generation;
        entry["position"] = position_to_json(e.position);
        j["entries"].push_back(std::move(entry));
    }
    return j;
}

std::vector<Position> hall_of_fame_positions(const nlohmann::json& j) {
    std::vector<Position> out;
    for (const auto& e : j.at("entries")) {
        out.push_back(position_from_json(e.at("position")));
    }
    return out;
}

}  // namespace snort
