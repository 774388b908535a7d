#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

#include "pecman/geometry.hpp"
#include "pecman/grid.hpp"
#include "pecman/rng.hpp"
#include "pecman/scenario.hpp"

namespace pecman {

struct PresetInfo {
    std::string name;
    double size = 0.0;
    int walls = 0;
    int rrt_iterations = 0;
    int min_agents = 2;
    int max_agents = 4;
    int default_agents = 4;
    int pedestrians = 0;
};

inline const std::vector<PresetInfo>& floorplan_presets() {
    static const std::vector<PresetInfo> presets = {
        {"building", 32.0, 41, 5000, 2, 4, 4, 8},
        {"office", 32.0, 42, 5000, 2, 4, 4, 8},
        {"warehouse", 32.0, 28, 5000, 2, 4, 4, 8},
        {"hospital", 96.0, 200, 30000, 4, 4, 4, 20},
        {"hospital-64", 64.0, 89, 13000, 4, 4, 4, 12},
        {"airport", 160.0, 250, 50000, 4, 4, 4, 24},
        {"campus", 128.0, 300, 80000, 4, 4, 4, 24},
        {"university", 192.0, 400, 160000, 4, 4, 4, 30},
    };
    return presets;
}

inline const PresetInfo* find_preset(const std::string& name) {
    for (const auto& p : floorplan_presets())
        if (p.name == name) return &p;
    return nullptr;
}

namespace detail {

constexpr double kMinRoomSide = 5.0;
constexpr double kDoorMin = 1.8;
constexpr double kDoorMax = 2.4;
constexpr double kPlacementClearance = 0.7;
constexpr double kSolveResolution = 0.25;
constexpr double kSolveInflate = 0.45; // agent radius + collision margin

struct Room {
    double x0, y0, x1, y1;
    double w() const { return x1 - x0; }
    double h() const { return y1 - y0; }
};

inline void add_boundary(Scenario& s) {
    double W = s.width, H = s.height;
    auto add = [&](Point2 a, Point2 b) {
        s.walls.push_back({a, b, static_cast<int>(s.walls.size())});
    };
    add({0, 0}, {W, 0});
    add({W, 0}, {W, H});
    add({W, H}, {0, H});
    add({0, H}, {0, 0});
}

// Recursive room subdivision. Every split wall carries one door gap, either
// mid-wall (two segments) or flush at an end (one segment), which lets the
// generator land on the exact target wall count.
inline void subdivide_rooms(Scenario& s, RngStream& rng, int interior_target) {
    std::vector<Room> rooms = {{0, 0, s.width, s.height}};
    int emitted = 0;
    auto add_wall = [&](Point2 a, Point2 b) {
        s.walls.push_back({a, b, static_cast<int>(s.walls.size())});
        ++emitted;
    };

    while (emitted < interior_target) {
        int pick = -1;
        double best_dim = 2.0 * kMinRoomSide - 1e-9;
        for (size_t i = 0; i < rooms.size(); ++i) {
            double d = std::max(rooms[i].w(), rooms[i].h());
            if (d > best_dim) {
                best_dim = d;
                pick = static_cast<int>(i);
            }
        }
        if (pick < 0) break;

        Room r = rooms[pick];
        bool vertical = r.w() >= r.h(); // vertical cut line splits the wider room
        double dim = vertical ? r.w() : r.h();
        double cut = rng.uniform(kMinRoomSide, dim - kMinRoomSide);
        double len = vertical ? r.h() : r.w();
        double dw = rng.uniform(kDoorMin, kDoorMax);

        int remaining = interior_target - emitted;
        bool flush = remaining == 1 || rng.chance(0.15);
        auto wall_point = [&](double along) {
            return vertical ? Point2{r.x0 + cut, r.y0 + along} : Point2{r.x0 + along, r.y0 + cut};
        };
        if (flush) {
            bool at_start = rng.chance(0.5);
            if (at_start)
                add_wall(wall_point(dw), wall_point(len));
            else
                add_wall(wall_point(0), wall_point(len - dw));
        } else {
            double off = rng.uniform(0.5, len - dw - 0.5);
            add_wall(wall_point(0), wall_point(off));
            add_wall(wall_point(off + dw), wall_point(len));
        }

        Room a = r, b = r;
        if (vertical) {
            a.x1 = r.x0 + cut;
            b.x0 = r.x0 + cut;
        } else {
            a.y1 = r.y0 + cut;
            b.y0 = r.y0 + cut;
        }
        rooms[pick] = a;
        rooms.push_back(b);
    }

    // Rooms ran out (sparse layouts never hit this): short free-standing
    // partition stubs make up the remainder.
    int guard = 0;
    while (emitted < interior_target && guard++ < 1000) {
        SegmentGrid existing(4.0);
        for (const auto& w : s.walls) existing.insert(w);
        size_t base = rng.uniform_int(s.walls.size());
        const WallSegment& host = s.walls[base];
        double t = rng.uniform(0.2, 0.8);
        Point2 p = lerp(host.a, host.b, t);
        Point2 n = normalized(perp_left(host.b - host.a));
        if (rng.chance(0.5)) n = n * -1.0;
        double len = rng.uniform(1.5, 3.0);
        Point2 q = p + n * len;
        if (q.x < 1.0 || q.y < 1.0 || q.x > s.width - 1.0 || q.y > s.height - 1.0) continue;
        bool clear = true;
        existing.for_each_near(p, q, kDoorMin, [&](const WallSegment& w) {
            if (w.a == host.a && w.b == host.b) return;
            if (segment_segment_distance(p, q, w.a, w.b) < kDoorMin) clear = false;
        });
        if (!clear) continue;
        add_wall(p, q);
    }
}

inline double min_wall_distance(const SegmentGrid& grid, const Point2& p, double pad) {
    double best = kInfinity;
    grid.for_each_near(p, pad, [&](const WallSegment& w) {
        best = std::min(best, point_segment_distance(p, w.a, w.b));
    });
    return best;
}

// Deterministic spiral search for a spot with wall clearance.
inline bool find_clear_spot(const SegmentGrid& grid, const Rect& bounds, Point2& p) {
    if (min_wall_distance(grid, p, kPlacementClearance) >= kPlacementClearance) return true;
    for (double radius = 0.5; radius <= 6.0; radius += 0.5) {
        for (int k = 0; k < 16; ++k) {
            double ang = k * (2.0 * 3.14159265358979323846 / 16.0);
            Point2 c = p + Point2{std::cos(ang), std::sin(ang)} * radius;
            if (c.x < 1.0 || c.y < 1.0 || c.x > bounds.max.x - 1.0 || c.y > bounds.max.y - 1.0)
                continue;
            if (min_wall_distance(grid, c, kPlacementClearance) >= kPlacementClearance) {
                p = c;
                return true;
            }
        }
    }
    return false;
}

// Occupancy-grid BFS reachability for every agent at the planning inflation.
inline bool scenario_solvable(const Scenario& s, const SegmentGrid& grid) {
    const double res = kSolveResolution;
    int nx = static_cast<int>(std::ceil(s.width / res));
    int ny = static_cast<int>(std::ceil(s.height / res));
    std::vector<uint8_t> blocked(static_cast<size_t>(nx) * ny, 0);
    for (int cy = 0; cy < ny; ++cy) {
        for (int cx = 0; cx < nx; ++cx) {
            Point2 c{(cx + 0.5) * res, (cy + 0.5) * res};
            if (min_wall_distance(grid, c, kSolveInflate + res) <= kSolveInflate)
                blocked[static_cast<size_t>(cy) * nx + cx] = 1;
        }
    }
    auto cell_of = [&](const Point2& p) {
        int cx = std::clamp(static_cast<int>(p.x / res), 0, nx - 1);
        int cy = std::clamp(static_cast<int>(p.y / res), 0, ny - 1);
        return std::pair<int, int>{cx, cy};
    };
    std::vector<int32_t> dist_id(static_cast<size_t>(nx) * ny, -1);
    for (size_t ai = 0; ai < s.agents.size(); ++ai) {
        auto [sx, sy] = cell_of(s.agents[ai].start);
        auto [gx, gy] = cell_of(s.agents[ai].goal);
        if (blocked[static_cast<size_t>(sy) * nx + sx] || blocked[static_cast<size_t>(gy) * nx + gx])
            return false;
        std::fill(dist_id.begin(), dist_id.end(), -1);
        std::deque<std::pair<int, int>> q{{sx, sy}};
        dist_id[static_cast<size_t>(sy) * nx + sx] = 0;
        bool found = false;
        while (!q.empty() && !found) {
            auto [cx, cy] = q.front();
            q.pop_front();
            if (cx == gx && cy == gy) {
                found = true;
                break;
            }
            const int dx[4] = {1, -1, 0, 0}, dy[4] = {0, 0, 1, -1};
            for (int k = 0; k < 4; ++k) {
                int tx = cx + dx[k], ty = cy + dy[k];
                if (tx < 0 || ty < 0 || tx >= nx || ty >= ny) continue;
                size_t idx = static_cast<size_t>(ty) * nx + tx;
                if (blocked[idx] || dist_id[idx] >= 0) continue;
                dist_id[idx] = 0;
                q.emplace_back(tx, ty);
            }
        }
        if (!found) return false;
    }
    return true;
}

inline Scenario corridor_stress_scenario(uint64_t seed) {
    Scenario s;
    s.name = "corridor-stress";
    s.width = 24.0;
    s.height = 8.0;
    s.rrt_iterations = 4000;
    s.seed = seed;
    s.pedestrians.count = 0;
    add_boundary(s);
    auto add = [&](Point2 a, Point2 b) {
        s.walls.push_back({a, b, static_cast<int>(s.walls.size())});
    };
    // 2 m wide, 8 m long corridor between two open chambers.
    add({8, 3}, {16, 3});
    add({8, 5}, {16, 5});
    add({8, 0}, {8, 3});
    add({8, 5}, {8, 8});
    add({16, 0}, {16, 3});
    add({16, 5}, {16, 8});

    // Three agents per end, goals across the corridor. Priorities interleave
    // the two ends so successive kings alternate direction.
    const double ys[3] = {1.6, 4.0, 6.4};
    for (int i = 0; i < 6; ++i) {
        AgentSpec a;
        bool left = (i % 2) == 0;
        double y = ys[i / 2];
        a.start = left ? Point2{2.0, y} : Point2{22.0, y};
        a.goal = left ? Point2{22.0, y} : Point2{2.0, y};
        a.priority = 6 - i;
        s.agents.push_back(a);
    }
    return s;
}

} // namespace detail

// Builds a preset scenario. Deterministic in (preset, seed, agent_count);
// regenerates with a perturbed stream on unsolvable layouts, at most 100
// attempts before giving up.
inline Scenario generate_floorplan(const std::string& preset, uint64_t seed, int agent_count = 0) {
    if (preset == "corridor-stress") return detail::corridor_stress_scenario(seed);
    const PresetInfo* info = find_preset(preset);
    if (!info) throw std::invalid_argument("unknown preset: " + preset);
    int agents = agent_count > 0 ? agent_count : info->default_agents;
    if (agents < info->min_agents || agents > info->max_agents)
        throw std::invalid_argument(preset + " supports " + std::to_string(info->min_agents) +
                                    ".." + std::to_string(info->max_agents) + " agents");

    for (int attempt = 0; attempt < 100; ++attempt) {
        RngStream rng = RngStream::derive(seed, 0xF100u + attempt);
        Scenario s;
        s.name = info->name;
        s.width = info->size;
        s.height = info->size;
        s.rrt_iterations = info->rrt_iterations;
        s.seed = seed;
        s.pedestrians.count = info->pedestrians;
        detail::add_boundary(s);
        detail::subdivide_rooms(s, rng, info->walls - 4);
        if (static_cast<int>(s.walls.size()) != info->walls) continue;

        SegmentGrid grid(2.0);
        for (const auto& w : s.walls) grid.insert(w);

        // Cross mode: corner starts, opposite-corner goals.
        const double m = 2.0;
        Point2 corners[4] = {{m, m},
                             {s.width - m, m},
                             {s.width - m, s.height - m},
                             {m, s.height - m}};
        int corner_of[4] = {0, 1, 2, 3};
        if (agents == 2) {
            corner_of[0] = 0;
            corner_of[1] = 2;
        }
        bool placed = true;
        for (int i = 0; i < agents && placed; ++i) {
            AgentSpec a;
            a.start = corners[corner_of[i]];
            a.goal = corners[(corner_of[i] + 2) % 4];
            a.priority = agents - i;
            placed = detail::find_clear_spot(grid, s.bounds(), a.start) &&
                     detail::find_clear_spot(grid, s.bounds(), a.goal);
            s.agents.push_back(a);
        }
        if (!placed) continue;
        if (!detail::scenario_solvable(s, grid)) continue;
        return s;
    }
    throw std::runtime_error("could not generate a solvable " + preset + " floorplan");
}

} // namespace pecman
