#pragma once

#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "pecman/geometry.hpp"

namespace pecman {

inline int64_t grid_cell_key(int32_t cx, int32_t cy) {
    return (static_cast<int64_t>(cx) << 32) ^ static_cast<int64_t>(static_cast<uint32_t>(cy));
}

// Uniform hash grid over line segments. Queries may report a segment more
// than once when it spans several cells; callers tolerate duplicates.
class SegmentGrid {
  public:
    explicit SegmentGrid(double cell_size = 2.0) : cell_(cell_size) {}

    double cell_size() const { return cell_; }
    size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    const std::vector<WallSegment>& items() const { return items_; }

    int insert(const WallSegment& s) {
        int idx = static_cast<int>(items_.size());
        items_.push_back(s);
        visit_segment_cells(s.a, s.b, [&](int64_t key) { cells_[key].push_back(idx); });
        return idx;
    }

    void clear() {
        items_.clear();
        cells_.clear();
    }

    // Calls f(segment) for every stored segment in cells overlapping the
    // query segment's neighborhood (pad meters in every direction).
    template <class F>
    void for_each_near(const Point2& a, const Point2& b, double pad, F&& f) const {
        if (cells_.empty()) return;
        int32_t x0 = coord(std::min(a.x, b.x) - pad), x1 = coord(std::max(a.x, b.x) + pad);
        int32_t y0 = coord(std::min(a.y, b.y) - pad), y1 = coord(std::max(a.y, b.y) + pad);
        for (int32_t cy = y0; cy <= y1; ++cy) {
            for (int32_t cx = x0; cx <= x1; ++cx) {
                auto it = cells_.find(grid_cell_key(cx, cy));
                if (it == cells_.end()) continue;
                for (int idx : it->second) f(items_[idx]);
            }
        }
    }

    template <class F>
    void for_each_near(const Point2& p, double pad, F&& f) const {
        for_each_near(p, p, pad, std::forward<F>(f));
    }

    template <class F>
    void for_each_in_cell(int32_t cx, int32_t cy, F&& f) const {
        auto it = cells_.find(grid_cell_key(cx, cy));
        if (it == cells_.end()) return;
        for (int idx : it->second) f(idx, items_[idx]);
    }

    int32_t coord(double v) const { return static_cast<int32_t>(std::floor(v / cell_)); }

  private:
    template <class F>
    void visit_segment_cells(const Point2& a, const Point2& b, F&& f) {
        int32_t x0 = coord(std::min(a.x, b.x)), x1 = coord(std::max(a.x, b.x));
        int32_t y0 = coord(std::min(a.y, b.y)), y1 = coord(std::max(a.y, b.y));
        for (int32_t cy = y0; cy <= y1; ++cy) {
            for (int32_t cx = x0; cx <= x1; ++cx) {
                // Conservative: register in every cell whose box the segment
                // comes within half a diagonal of.
                Point2 c{(cx + 0.5) * cell_, (cy + 0.5) * cell_};
                if (point_segment_distance(c, a, b) <= cell_ * 0.7072) f(grid_cell_key(cx, cy));
            }
        }
    }

    double cell_;
    std::vector<WallSegment> items_;
    std::unordered_map<int64_t, std::vector<int32_t>> cells_;
};

// Uniform hash grid over points with integer payload ids. Ids are stable;
// points never move once inserted.
class PointGrid {
  public:
    explicit PointGrid(double cell_size = 1.5) : cell_(cell_size) {}

    double cell_size() const { return cell_; }

    void insert(int32_t id, const Point2& p) {
        cells_[grid_cell_key(coord(p.x), coord(p.y))].push_back(id);
    }

    void clear() { cells_.clear(); }

    template <class F>
    void for_each_in_radius(const Point2& center, double radius, F&& f) const {
        int32_t x0 = coord(center.x - radius), x1 = coord(center.x + radius);
        int32_t y0 = coord(center.y - radius), y1 = coord(center.y + radius);
        for (int32_t cy = y0; cy <= y1; ++cy) {
            for (int32_t cx = x0; cx <= x1; ++cx) {
                auto it = cells_.find(grid_cell_key(cx, cy));
                if (it == cells_.end()) continue;
                for (int32_t id : it->second) f(id);
            }
        }
    }

    // Visits ids in cells within pad of the segment's bounding box.
    template <class F>
    void for_each_near_segment(const Point2& a, const Point2& b, double pad, F&& f) const {
        int32_t x0 = coord(std::min(a.x, b.x) - pad), x1 = coord(std::max(a.x, b.x) + pad);
        int32_t y0 = coord(std::min(a.y, b.y) - pad), y1 = coord(std::max(a.y, b.y) + pad);
        for (int32_t cy = y0; cy <= y1; ++cy) {
            for (int32_t cx = x0; cx <= x1; ++cx) {
                auto it = cells_.find(grid_cell_key(cx, cy));
                if (it == cells_.end()) continue;
                for (int32_t id : it->second) f(id);
            }
        }
    }

    // Expanding ring search; dist_fn(id) returns the metric (infinity to
    // reject a candidate). Returns -1 when the grid holds no acceptable id.
    template <class DistFn>
    int32_t nearest(const Point2& p, DistFn&& dist_fn) const {
        if (cells_.empty()) return -1;
        int32_t pcx = coord(p.x), pcy = coord(p.y);
        int32_t best = -1;
        double best_d = kInfinity;
        for (int32_t ring = 0; ring < 4096; ++ring) {
            // Once a hit exists, finish scanning rings that could still beat it.
            if (best >= 0 && (static_cast<double>(ring) - 1.0) * cell_ > best_d) break;
            bool any_cell = false;
            auto visit = [&](int32_t cx, int32_t cy) {
                auto it = cells_.find(grid_cell_key(cx, cy));
                if (it == cells_.end()) return;
                any_cell = true;
                for (int32_t id : it->second) {
                    double d = dist_fn(id);
                    if (d < best_d) {
                        best_d = d;
                        best = id;
                    }
                }
            };
            if (ring == 0) {
                visit(pcx, pcy);
            } else {
                for (int32_t i = -ring; i <= ring; ++i) {
                    visit(pcx + i, pcy - ring);
                    visit(pcx + i, pcy + ring);
                }
                for (int32_t i = -ring + 1; i <= ring - 1; ++i) {
                    visit(pcx - ring, pcy + i);
                    visit(pcx + ring, pcy + i);
                }
            }
            (void)any_cell;
        }
        return best;
    }

    int32_t coord(double v) const { return static_cast<int32_t>(std::floor(v / cell_)); }

  private:
    double cell_;
    std::unordered_map<int64_t, std::vector<int32_t>> cells_;
};

} // namespace pecman
