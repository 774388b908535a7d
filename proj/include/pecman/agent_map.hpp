#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <unordered_set>
#include <vector>

#include "pecman/geometry.hpp"
#include "pecman/grid.hpp"

namespace pecman {

// Discovered wall knowledge is quantized to fixed-length cells along each
// wall, keyed by (wall id, cell index). Set algebra on keys is exact, so map
// union, deltas and equality checks never suffer float comparisons.
inline constexpr double kFragmentCell = 0.25;

inline uint32_t wall_cell_count(const WallSegment& w) {
    return std::max<uint32_t>(1, static_cast<uint32_t>(std::ceil(w.length() / kFragmentCell)));
}

inline uint64_t wall_cell_key(int wall_id, uint32_t cell) {
    return (static_cast<uint64_t>(static_cast<uint32_t>(wall_id)) << 32) | cell;
}

inline int key_wall_id(uint64_t key) { return static_cast<int>(key >> 32); }
inline uint32_t key_cell(uint64_t key) { return static_cast<uint32_t>(key & 0xffffffffu); }

// The sub-segment a cell covers, clipped to the wall's end.
inline WallSegment wall_cell_segment(const WallSegment& w, uint32_t cell) {
    double len = w.length();
    double lo = std::min(cell * kFragmentCell, len);
    double hi = std::min((cell + 1) * kFragmentCell, len);
    if (hi - lo < 1e-9) lo = std::max(0.0, hi - 1e-9);
    return {lerp(w.a, w.b, lo / len), lerp(w.a, w.b, hi / len), w.id};
}

inline uint32_t wall_cell_at(const WallSegment& w, double wall_param) {
    double len = w.length();
    uint32_t n = wall_cell_count(w);
    auto c = static_cast<uint32_t>(clamp01(wall_param) * len / kFragmentCell);
    return std::min(c, n - 1);
}

// One agent's accumulated knowledge of the static walls. Monotone: cells are
// only ever added.
class AgentMap {
  public:
    explicit AgentMap(const std::vector<WallSegment>* walls)
        : walls_(walls), frag_grid_(2.0) {}

    // Fully known map (every cell of every wall discovered).
    static AgentMap full(const std::vector<WallSegment>* walls) {
        AgentMap m(walls);
        for (const auto& w : *walls) {
            uint32_t n = wall_cell_count(w);
            for (uint32_t c = 0; c < n; ++c) m.add_one(wall_cell_key(w.id, c));
        }
        return m;
    }

    bool contains(uint64_t key) const { return cells_.count(key) != 0; }
    size_t cell_count() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    const std::unordered_set<uint64_t>& cells() const { return cells_; }
    const std::vector<WallSegment>& walls() const { return *walls_; }

    WallSegment cell_segment(uint64_t key) const {
        return wall_cell_segment((*walls_)[key_wall_id(key)], key_cell(key));
    }

    // Inserts keys; returns the ones that were actually new, in input order.
    std::vector<uint64_t> add(std::span<const uint64_t> keys) {
        std::vector<uint64_t> fresh;
        for (uint64_t k : keys) {
            if (add_one(k)) fresh.push_back(k);
        }
        return fresh;
    }

    bool point_blocked(const Point2& p, double clearance) const {
        if (cells_.empty()) return false;
        bool hit = false;
        frag_grid_.for_each_near(p, clearance + 0.01, [&](const WallSegment& s) {
            if (!hit && point_segment_distance(p, s.a, s.b) <= clearance) hit = true;
        });
        return hit;
    }

    bool segment_blocked(const Point2& a, const Point2& b, double clearance) const {
        if (cells_.empty()) return false;
        bool hit = false;
        frag_grid_.for_each_near(a, b, clearance + 0.01, [&](const WallSegment& s) {
            if (!hit && segment_segment_distance(a, b, s.a, s.b) <= clearance) hit = true;
        });
        return hit;
    }

    // Contiguous discovered runs merged into maximal sub-segments, ordered by
    // (wall id, position along wall).
    std::vector<WallSegment> merged_fragments() const {
        std::map<int, std::vector<uint32_t>> per_wall;
        for (uint64_t k : cells_) per_wall[key_wall_id(k)].push_back(key_cell(k));
        std::vector<WallSegment> out;
        for (auto& [wid, idx] : per_wall) {
            std::sort(idx.begin(), idx.end());
            const WallSegment& w = (*walls_)[wid];
            double len = w.length();
            size_t i = 0;
            while (i < idx.size()) {
                size_t j = i;
                while (j + 1 < idx.size() && idx[j + 1] == idx[j] + 1) ++j;
                double lo = std::min(idx[i] * kFragmentCell, len);
                double hi = std::min((idx[j] + 1) * kFragmentCell, len);
                out.push_back({lerp(w.a, w.b, lo / len), lerp(w.a, w.b, hi / len), wid});
                i = j + 1;
            }
        }
        return out;
    }

    bool set_equal(const AgentMap& o) const { return cells_ == o.cells_; }

    bool subset_of(const AgentMap& o) const {
        if (cells_.size() > o.cells_.size()) return false;
        for (uint64_t k : cells_)
            if (!o.contains(k)) return false;
        return true;
    }

  private:
    bool add_one(uint64_t key) {
        if (!cells_.insert(key).second) return false;
        frag_grid_.insert(cell_segment(key));
        return true;
    }

    const std::vector<WallSegment>* walls_;
    std::unordered_set<uint64_t> cells_;
    SegmentGrid frag_grid_;
};

} // namespace pecman
