#pragma once

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "pecman/geometry.hpp"

namespace pecman {

struct AgentSpec {
    Point2 start;
    Point2 goal;
    double radius = 0.4;
    double speed = 2.0;
    int priority = 0;

    bool operator==(const AgentSpec&) const = default;
};

struct PedestrianSpec {
    int count = 0;
    double speed_min = 0.5;
    double speed_max = 2.0;
    double radius = 0.3;

    bool operator==(const PedestrianSpec&) const = default;
};

// Static world description. Immutable once generated or loaded.
struct Scenario {
    std::string name;
    double width = 0.0;
    double height = 0.0;
    std::vector<WallSegment> walls;
    int rrt_iterations = 5000;
    std::vector<AgentSpec> agents;
    PedestrianSpec pedestrians;
    uint64_t seed = 0;

    Rect bounds() const { return {{0.0, 0.0}, {width, height}}; }
    bool small_map() const { return std::max(width, height) <= 48.0; }
    double sensor_range() const { return small_map() ? 10.0 : 20.0; }
    double time_limit() const { return small_map() ? 120.0 : 600.0; }

    bool operator==(const Scenario& o) const {
        if (name != o.name || width != o.width || height != o.height ||
            rrt_iterations != o.rrt_iterations || seed != o.seed ||
            !(pedestrians == o.pedestrians) || walls.size() != o.walls.size() ||
            agents.size() != o.agents.size())
            return false;
        for (size_t i = 0; i < walls.size(); ++i) {
            if (walls[i].id != o.walls[i].id || walls[i].a != o.walls[i].a ||
                walls[i].b != o.walls[i].b)
                return false;
        }
        for (size_t i = 0; i < agents.size(); ++i) {
            if (!(agents[i] == o.agents[i])) return false;
        }
        return true;
    }
};

inline nlohmann::json scenario_to_json(const Scenario& s) {
    nlohmann::json j;
    j["version"] = 1;
    j["name"] = s.name;
    j["size"] = {s.width, s.height};
    j["rrt_iterations"] = s.rrt_iterations;
    j["seed"] = s.seed;
    nlohmann::json walls = nlohmann::json::array();
    for (const auto& w : s.walls) walls.push_back({{w.a.x, w.a.y}, {w.b.x, w.b.y}});
    j["walls"] = std::move(walls);
    nlohmann::json agents = nlohmann::json::array();
    for (const auto& a : s.agents) {
        agents.push_back({{"start", {a.start.x, a.start.y}},
                          {"goal", {a.goal.x, a.goal.y}},
                          {"radius", a.radius},
                          {"speed", a.speed},
                          {"priority", a.priority}});
    }
    j["agents"] = std::move(agents);
    j["pedestrians"] = {{"count", s.pedestrians.count},
                        {"speed_min", s.pedestrians.speed_min},
                        {"speed_max", s.pedestrians.speed_max},
                        {"radius", s.pedestrians.radius}};
    return j;
}

inline Scenario scenario_from_json(const nlohmann::json& j) {
    if (j.value("version", 0) != 1) throw std::runtime_error("unsupported scenario version");
    Scenario s;
    s.name = j.at("name").get<std::string>();
    s.width = j.at("size")[0].get<double>();
    s.height = j.at("size")[1].get<double>();
    s.rrt_iterations = j.at("rrt_iterations").get<int>();
    s.seed = j.at("seed").get<uint64_t>();
    int id = 0;
    for (const auto& w : j.at("walls")) {
        WallSegment seg;
        seg.a = {w[0][0].get<double>(), w[0][1].get<double>()};
        seg.b = {w[1][0].get<double>(), w[1][1].get<double>()};
        seg.id = id++;
        s.walls.push_back(seg);
    }
    for (const auto& a : j.at("agents")) {
        AgentSpec spec;
        spec.start = {a.at("start")[0].get<double>(), a.at("start")[1].get<double>()};
        spec.goal = {a.at("goal")[0].get<double>(), a.at("goal")[1].get<double>()};
        spec.radius = a.at("radius").get<double>();
        spec.speed = a.at("speed").get<double>();
        spec.priority = a.at("priority").get<int>();
        s.agents.push_back(spec);
    }
    const auto& p = j.at("pedestrians");
    s.pedestrians.count = p.at("count").get<int>();
    s.pedestrians.speed_min = p.at("speed_min").get<double>();
    s.pedestrians.speed_max = p.at("speed_max").get<double>();
    s.pedestrians.radius = p.at("radius").get<double>();
    return s;
}

inline void save_scenario(const Scenario& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << scenario_to_json(s).dump(2) << "\n";
}

inline Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    in >> j;
    return scenario_from_json(j);
}

} // namespace pecman
