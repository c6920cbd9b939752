#pragma once

#include "skein/coloring.hpp"
#include "skein/errors.hpp"
#include "skein/triangulation.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace skein {

/// Per triangle, per corner: the number of arcs cutting that corner. Corner k
/// is the one opposite side k, so its count is (v_{k+1} + v_{k+2} - v_k) / 2.
struct CornerData {
    std::vector<std::array<Int, 3>> counts;
};

namespace detail {

inline void require_unfolded(const Triangulation& tri) {
    tri.ensure_valid();
    for (int t = 0; t < tri.triangle_count(); ++t)
        if (tri.is_folded_triangle(t)) throw FoldedUnsupported(t);
}

} // namespace detail

inline CornerData corner_counts(const Coloring& f) {
    const Triangulation& tri = *f.context();
    detail::require_unfolded(tri);
    CornerData out;
    out.counts.reserve(static_cast<std::size_t>(tri.triangle_count()));
    for (int t = 0; t < tri.triangle_count(); ++t) {
        const auto edges = tri.triangle_edges(t);
        std::array<Int, 3> v{f.value(static_cast<std::size_t>(edges[0])),
                             f.value(static_cast<std::size_t>(edges[1])),
                             f.value(static_cast<std::size_t>(edges[2]))};
        std::array<Int, 3> m;
        for (int k = 0; k < 3; ++k)
            m[static_cast<std::size_t>(k)] =
                (v[static_cast<std::size_t>((k + 1) % 3)] +
                 v[static_cast<std::size_t>((k + 2) % 3)] -
                 v[static_cast<std::size_t>(k)]) /
                2;
        out.counts.push_back(m);
    }
    return out;
}

/// Connected components of the normal curve system carried by an admissible
/// coloring, one coloring per component.
///
/// Points on edge e are indexed 0..f(e)-1 as seen from the edge's first slot.
/// Inside each triangle, corner arcs pair the points nearest each corner in
/// nested order; across an edge, points line up per the gluing's `reversed`
/// convention. Components are the cycles of the composition of those two
/// pairings.
class ArcTracer {
public:
    explicit ArcTracer(const Coloring& f) : coloring_(&f), tri_(f.context().get()) {
        detail::require_unfolded(*tri_);
        const std::size_t ne = tri_->edge_count();
        counts_.resize(ne);
        offsets_.resize(ne + 1, 0);
        for (std::size_t e = 0; e < ne; ++e) {
            const Int& v = f.value(e);
            if (v > Int(50'000'000))
                throw Error("coloring too large to trace");
            counts_[e] = static_cast<std::size_t>(v.convert_to<unsigned long long>());
            offsets_[e + 1] = offsets_[e] + counts_[e];
        }
        corners_.reserve(static_cast<std::size_t>(tri_->triangle_count()));
        for (int t = 0; t < tri_->triangle_count(); ++t) {
            const auto edges = tri_->triangle_edges(t);
            std::array<std::size_t, 3> v{counts_[static_cast<std::size_t>(edges[0])],
                                         counts_[static_cast<std::size_t>(edges[1])],
                                         counts_[static_cast<std::size_t>(edges[2])]};
            std::array<std::size_t, 3> m;
            for (int k = 0; k < 3; ++k)
                m[static_cast<std::size_t>(k)] = (v[(k + 1u) % 3] + v[(k + 2u) % 3] -
                                                  v[static_cast<std::size_t>(k)]) /
                                                 2;
            side_counts_.push_back(v);
            corners_.push_back(m);
        }
    }

    std::vector<Coloring> components() const {
        std::vector<Coloring> out;
        std::vector<bool> visited(offsets_.back(), false);
        for (std::size_t e = 0; e < counts_.size(); ++e) {
            for (std::size_t i = 0; i < counts_[e]; ++i) {
                if (visited[offsets_[e] + i]) continue;
                std::vector<Int> edge_hits(counts_.size(), Int(0));
                const End start{tri_->edge(e).first, i_to_side(e, /*first=*/true, i)};
                End u = start;
                do {
                    const auto [pe, pi] = point_of(u);
                    visited[offsets_[pe] + pi] = true;
                    ++edge_hits[pe];
                    u = cross(partner(u));
                } while (!(u.slot == start.slot && u.index == start.index));
                out.emplace_back(coloring_->context(), std::move(edge_hits));
            }
        }
        return out;
    }

private:
    struct End {
        SlotRef slot;
        std::size_t index; // position along the side in the triangle's own order
    };

    std::size_t side_count(const SlotRef& s) const {
        return side_counts_[static_cast<std::size_t>(s.triangle)]
                           [static_cast<std::size_t>(s.side)];
    }

    // Side-local index <-> canonical edge index (first slot's order).
    std::size_t i_to_side(std::size_t edge, bool first, std::size_t i) const {
        const Gluing& g = tri_->edge(edge);
        if (first) return i;
        return g.reversed ? i : counts_[edge] - 1 - i;
    }

    std::pair<std::size_t, std::size_t> point_of(const End& u) const {
        const std::size_t e =
            static_cast<std::size_t>(tri_->edge_at(u.slot.triangle, u.slot.side));
        const Gluing& g = tri_->edge(e);
        std::size_t i = u.index;
        if (!(g.first == u.slot)) i = g.reversed ? u.index : counts_[e] - 1 - u.index;
        return {e, i};
    }

    // The other end of the arc through u inside u's triangle.
    End partner(const End& u) const {
        const int t = u.slot.triangle;
        const int s = u.slot.side;
        const auto& m = corners_[static_cast<std::size_t>(t)];
        const std::size_t near_start = m[static_cast<std::size_t>((s + 1) % 3)];
        if (u.index < near_start) {
            const int p = (s + 2) % 3;
            const std::size_t vp = side_counts_[static_cast<std::size_t>(t)]
                                               [static_cast<std::size_t>(p)];
            return End{{t, p}, vp - 1 - u.index};
        }
        const int p = (s + 1) % 3;
        return End{{t, p}, side_count(u.slot) - 1 - u.index};
    }

    // The same point seen from the opposite side of its edge.
    End cross(const End& u) const {
        const std::size_t e =
            static_cast<std::size_t>(tri_->edge_at(u.slot.triangle, u.slot.side));
        const Gluing& g = tri_->edge(e);
        const auto [pe, pi] = point_of(u);
        const bool u_is_first = (g.first == u.slot);
        const SlotRef other = u_is_first ? g.second : g.first;
        return End{other, i_to_side(pe, !u_is_first, pi)};
    }

    const Coloring* coloring_;
    const Triangulation* tri_;
    std::vector<std::size_t> counts_;
    std::vector<std::size_t> offsets_;
    std::vector<std::array<std::size_t, 3>> side_counts_;
    std::vector<std::array<std::size_t, 3>> corners_;
};

inline std::vector<Coloring> trace_components(const Coloring& f) {
    return ArcTracer(f).components();
}

struct PrimitiveDecomposition {
    // (primitive coloring, multiplicity), ordered lexicographically by coloring.
    std::vector<std::pair<Coloring, std::size_t>> parts;
};

/// Group the traced components by equal colorings; multiplicities are the
/// group sizes, so sum(multiplicity * part) reconstructs the input.
inline PrimitiveDecomposition primitive_decomposition(const Coloring& f) {
    std::map<std::vector<Int>, std::size_t> groups;
    for (const Coloring& c : trace_components(f)) ++groups[c.values()];
    PrimitiveDecomposition out;
    out.parts.reserve(groups.size());
    for (auto& [values, count] : groups)
        out.parts.emplace_back(Coloring(f.context(), values), count);
    return out;
}

} // namespace skein
