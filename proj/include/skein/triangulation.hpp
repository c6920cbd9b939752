#pragma once

#include "skein/errors.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace skein {

/// One side slot of an ideal triangle.
struct SlotRef {
    int triangle = 0;
    int side = 0; // 0..2

    friend bool operator==(const SlotRef&, const SlotRef&) = default;
};

/// Identification of two side slots. Edge k of a triangulation is its k-th gluing.
///
/// `reversed` fixes how intersection points on the two sides line up when a
/// curve is traced across the edge: with `reversed == false` point i seen from
/// `first` meets point f(e)-1-i seen from `second` (the orientation-preserving
/// convention for two counterclockwise triangles); with `reversed == true`
/// point i meets point i.
struct Gluing {
    SlotRef first;
    SlotRef second;
    bool reversed = false;
};

class ValidationReport {
public:
    ValidationReport() = default;
    explicit ValidationReport(std::vector<std::string> problems)
        : problems_(std::move(problems)) {}

    bool valid() const { return problems_.empty(); }
    const std::vector<std::string>& problems() const { return problems_; }

private:
    std::vector<std::string> problems_;
};

/// Combinatorial ideal triangulation: triangles with all sides identified in
/// pairs (self-identifications produce folded triangles). Immutable after
/// construction; all members are const and thread-safe.
class Triangulation {
public:
    Triangulation(int triangle_count, std::vector<Gluing> gluings)
        : triangle_count_(triangle_count), gluings_(std::move(gluings)) {
        slot_edge_.assign(static_cast<std::size_t>(std::max(triangle_count_, 0)),
                          {-1, -1, -1});
        for (std::size_t k = 0; k < gluings_.size(); ++k) {
            for (const SlotRef& s : {gluings_[k].first, gluings_[k].second}) {
                if (!slot_in_range(s)) continue;
                int& cell = slot_edge_[static_cast<std::size_t>(s.triangle)]
                                      [static_cast<std::size_t>(s.side)];
                if (cell < 0) cell = static_cast<int>(k);
            }
        }
    }

    int triangle_count() const { return triangle_count_; }
    std::size_t edge_count() const { return gluings_.size(); }
    const std::vector<Gluing>& gluings() const { return gluings_; }
    const Gluing& edge(std::size_t k) const { return gluings_.at(k); }

    ValidationReport validate() const {
        std::vector<std::string> problems;
        if (triangle_count_ <= 0) problems.push_back("triangulation has no triangles");
        std::vector<std::array<int, 3>> uses(
            static_cast<std::size_t>(std::max(triangle_count_, 0)), {0, 0, 0});
        for (std::size_t k = 0; k < gluings_.size(); ++k) {
            const Gluing& g = gluings_[k];
            if (g.first == g.second) {
                problems.push_back("edge " + std::to_string(k) +
                                   " glues a side slot to itself");
            }
            for (const SlotRef& s : {g.first, g.second}) {
                if (!slot_in_range(s)) {
                    problems.push_back("edge " + std::to_string(k) +
                                       " references unknown slot " + slot_name(s));
                    continue;
                }
                ++uses[static_cast<std::size_t>(s.triangle)]
                       [static_cast<std::size_t>(s.side)];
            }
        }
        for (int t = 0; t < triangle_count_; ++t) {
            for (int s = 0; s < 3; ++s) {
                int n = uses[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)];
                if (n == 0) {
                    problems.push_back("slot " + slot_name({t, s}) + " is unglued");
                } else if (n > 1) {
                    problems.push_back("slot " + slot_name({t, s}) + " is glued " +
                                       std::to_string(n) + " times");
                }
            }
        }
        return ValidationReport(std::move(problems));
    }

    bool is_valid() const { return validate().valid(); }

    /// e = -triangles/2. Requires a valid triangulation with an even number
    /// of triangles.
    int euler_characteristic() const {
        ensure_valid();
        if (triangle_count_ % 2 != 0)
            throw Error("triangle count is odd; no Euler characteristic");
        return -(triangle_count_ / 2);
    }

    /// Edge indices whose gluing pairs two sides of one triangle.
    std::vector<int> folded_edges() const {
        ensure_valid();
        std::vector<int> out;
        for (std::size_t k = 0; k < gluings_.size(); ++k)
            if (gluings_[k].first.triangle == gluings_[k].second.triangle)
                out.push_back(static_cast<int>(k));
        return out;
    }

    bool is_folded_triangle(int t) const {
        ensure_valid();
        const auto& e = slot_edge_.at(static_cast<std::size_t>(t));
        return e[0] == e[1] || e[1] == e[2] || e[0] == e[2];
    }

    /// Edge index at a side slot (valid triangulations only).
    int edge_at(int t, int side) const {
        ensure_valid();
        return slot_edge_.at(static_cast<std::size_t>(t))
                          .at(static_cast<std::size_t>(side));
    }

    std::array<int, 3> triangle_edges(int t) const {
        ensure_valid();
        return slot_edge_.at(static_cast<std::size_t>(t));
    }

    void ensure_valid() const {
        ValidationReport r = validate();
        if (!r.valid()) throw Error("invalid triangulation: " + r.problems().front());
    }

private:
    bool slot_in_range(const SlotRef& s) const {
        return s.triangle >= 0 && s.triangle < triangle_count_ && s.side >= 0 &&
               s.side < 3;
    }

    static std::string slot_name(const SlotRef& s) {
        return std::to_string(s.triangle) + "." + std::to_string(s.side);
    }

    int triangle_count_;
    std::vector<Gluing> gluings_;
    std::vector<std::array<int, 3>> slot_edge_;
};

} // namespace skein
