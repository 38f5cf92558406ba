#include "snortcgt/position_io.hpp"

#include <fstream>
#include <sstream>

namespace snort {

namespace {

Tint tint_from_name(const std::string& s) {
    if (s == "none") return Tint::None;
    if (s == "blue") return Tint::Blue;
    if (s == "red") return Tint::Red;
    throw std::runtime_error("unknown tint: " + s);
}

}  // namespace

nlohmann::ordered_json position_to_json(const Position& p) {
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (int v = 0; v < p.size(); ++v) {
        j["vertices"].push_back({{"id", p.label(v)}, {"tint", tint_name(p.tint(v))}});
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (auto [u, v] : p.edge_list()) {
        j["edges"].push_back({p.label(u), p.label(v)});
    }
    return j;
}

Position position_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertices")) {
        throw std::runtime_error("position JSON must be an object with a \"vertices\" array");
    }
    std::vector<std::pair<std::string, Tint>> vertices;
    for (const auto& v : j.at("vertices")) {
        std::string id = v.at("id").get<std::string>();
        Tint t = Tint::None;
        if (v.contains("tint")) t = tint_from_name(v.at("tint").get<std::string>());
        vertices.emplace_back(std::move(id), t);
    }
    std::vector<std::pair<std::string, std::string>> edges;
    if (j.contains("edges")) {
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw std::runtime_error("edge must be a pair");
            edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
    }
    return Position(std::move(vertices), edges);
}

Position position_from_edge_list(std::string_view text) {
    std::vector<std::string> order;                  // insertion order
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::pair<std::string, Tint>> tinted;
    auto note_vertex = [&](const std::string& id) {
        for (const auto& o : order) {
            if (o == id) return;
        }
        order.push_back(id);
    };
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "blue:" || first == "red:") {
            Tint t = first[0] == 'b' ? Tint::Blue : Tint::Red;
            std::string rest;
            std::getline(ls, rest);
            std::string id;
            for (char c : rest + ",") {
                if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
                    if (!id.empty()) {
                        note_vertex(id);
                        tinted.emplace_back(id, t);
                        id.clear();
                    }
                } else {
                    id.push_back(c);
                }
            }
            continue;
        }
        std::string second;
        if (ls >> second) {
            std::string extra;
            if (ls >> extra) throw std::runtime_error("edge line has more than two vertices: " + line);
            note_vertex(first);
            note_vertex(second);
            edges.emplace_back(first, second);
        } else {
            note_vertex(first);  // isolated vertex
        }
    }
    std::vector<std::pair<std::string, Tint>> vertices;
    for (const auto& id : order) {
        Tint t = Tint::None;
        for (const auto& [tid, tt] : tinted) {
            if (tid == id) t = tt;
        }
        vertices.emplace_back(id, t);
    }
    return Position(std::move(vertices), edges);
}

Position load_position_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open position file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
    if (!json) {
        for (char c : text) {
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            json = c == '{';
            break;
        }
    }
    if (json) {
        return position_from_json(nlohmann::json::parse(text));
    }
    return position_from_edge_list(text);
}

}  // namespace snort
