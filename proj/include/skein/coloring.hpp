#pragma once

#include "skein/bigint.hpp"
#include "skein/errors.hpp"
#include "skein/triangulation.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace skein {

using TriangulationPtr = std::shared_ptr<const Triangulation>;

inline void require_odd_modulus(std::int64_t n) {
    if (n < 1 || n % 2 == 0)
        throw Error("modulus must be an odd integer >= 1, got " + std::to_string(n));
}

/// First triangle (if any) at which the edge weights fail the conditions of a
/// simple diagram's normal coordinates: on a triangle with three distinct side
/// edges a,b,c the sum f(a)+f(b)+f(c) must be even and the triangle
/// inequalities must hold; on a folded triangle with doubled edge a and
/// remaining edge b, f(b) must be even and 2 f(a) >= f(b). Negative entries
/// are reported against triangle -1.
inline std::optional<int> admissibility_violation(const Triangulation& tri,
                                                  std::span<const Int> values) {
    tri.ensure_valid();
    if (values.size() != tri.edge_count())
        throw Error("coloring has " + std::to_string(values.size()) +
                    " entries for " + std::to_string(tri.edge_count()) + " edges");
    for (const Int& v : values)
        if (v < 0) return -1;
    for (int t = 0; t < tri.triangle_count(); ++t) {
        const auto edges = tri.triangle_edges(t);
        if (tri.is_folded_triangle(t)) {
            int doubled = -1, other = -1;
            for (int s = 0; s < 3; ++s) {
                int e = edges[static_cast<std::size_t>(s)];
                bool twice = false;
                for (int s2 = 0; s2 < 3; ++s2)
                    if (s2 != s && edges[static_cast<std::size_t>(s2)] == e) twice = true;
                (twice ? doubled : other) = e;
            }
            const Int& fa = values[static_cast<std::size_t>(doubled)];
            const Int& fb = values[static_cast<std::size_t>(other)];
            if (fb % 2 != 0 || 2 * fa < fb) return t;
        } else {
            const Int& x = values[static_cast<std::size_t>(edges[0])];
            const Int& y = values[static_cast<std::size_t>(edges[1])];
            const Int& z = values[static_cast<std::size_t>(edges[2])];
            if ((x + y + z) % 2 != 0) return t;
            if (x > y + z || y > x + z || z > x + y) return t;
        }
    }
    return std::nullopt;
}

inline bool is_admissible(const Triangulation& tri, std::span<const Int> values) {
    return !admissibility_violation(tri, values).has_value();
}

/// The residue of a coloring: an E-tuple over Z_N, N odd.
class Residue {
public:
    Residue(std::int64_t modulus, std::vector<std::int64_t> values)
        : modulus_(modulus), values_(std::move(values)) {
        require_odd_modulus(modulus_);
        for (std::int64_t v : values_)
            if (v < 0 || v >= modulus_)
                throw Error("residue entry " + std::to_string(v) +
                            " out of range for modulus " + std::to_string(modulus_));
    }

    std::int64_t modulus() const { return modulus_; }
    const std::vector<std::int64_t>& values() const { return values_; }

    bool is_zero() const {
        for (std::int64_t v : values_)
            if (v != 0) return false;
        return true;
    }

    friend Residue operator+(const Residue& a, const Residue& b) {
        if (a.modulus_ != b.modulus_) throw ModulusMismatch();
        if (a.values_.size() != b.values_.size())
            throw Error("residues have different lengths");
        std::vector<std::int64_t> out(a.values_.size());
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = (a.values_[i] + b.values_[i]) % a.modulus_;
        return Residue(a.modulus_, std::move(out));
    }

    friend bool operator==(const Residue&, const Residue&) = default;

private:
    std::int64_t modulus_;
    std::vector<std::int64_t> values_;
};

/// An admissible coloring of a triangulation's edges; the normal coordinates
/// of a simple diagram. Immutable value type.
class Coloring {
public:
    Coloring(TriangulationPtr tri, std::vector<Int> values)
        : tri_(std::move(tri)), values_(std::move(values)) {
        if (!tri_) throw Error("coloring needs a triangulation");
        if (!is_admissible(*tri_, values_))
            throw Error("coloring is not admissible");
    }

    static Coloring zero(TriangulationPtr tri) {
        std::vector<Int> v(tri->edge_count(), Int(0));
        return Coloring(std::move(tri), std::move(v));
    }

    const TriangulationPtr& context() const { return tri_; }
    const std::vector<Int>& values() const { return values_; }
    const Int& value(std::size_t edge) const { return values_.at(edge); }
    bool is_zero() const {
        for (const Int& v : values_)
            if (v != 0) return false;
        return true;
    }

    friend Coloring operator+(const Coloring& a, const Coloring& b) {
        a.require_same_context(b);
        std::vector<Int> out(a.values_.size());
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = a.values_[i] + b.values_[i];
        return Coloring(a.tri_, std::move(out));
    }

    /// Entrywise k-fold parallel.
    friend Coloring operator*(const Int& k, const Coloring& c) {
        if (k < 0) throw Error("negative multiple of a coloring");
        std::vector<Int> out(c.values_.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = k * c.values_[i];
        return Coloring(c.tri_, std::move(out));
    }

    friend bool operator==(const Coloring& a, const Coloring& b) {
        return a.tri_ == b.tri_ && a.values_ == b.values_;
    }

    void require_same_context(const Coloring& other) const {
        if (tri_ != other.tri_) throw ContextMismatch();
    }

private:
    TriangulationPtr tri_;
    std::vector<Int> values_;
};

/// Lexicographic comparison with respect to the fixed edge order. Total order
/// compatible with addition: f < g implies f+h < g+h.
inline std::strong_ordering lex_compare(const Coloring& a, const Coloring& b) {
    a.require_same_context(b);
    const auto& va = a.values();
    const auto& vb = b.values();
    for (std::size_t i = 0; i < va.size(); ++i) {
        if (va[i] < vb[i]) return std::strong_ordering::less;
        if (va[i] > vb[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

inline bool operator<(const Coloring& a, const Coloring& b) {
    return lex_compare(a, b) == std::strong_ordering::less;
}

/// Entrywise reduction modulo odd N.
inline Residue residue(const Coloring& f, std::int64_t n) {
    require_odd_modulus(n);
    std::vector<std::int64_t> out;
    out.reserve(f.values().size());
    for (const Int& v : f.values())
        out.push_back(static_cast<std::int64_t>(v % n));
    return Residue(n, std::move(out));
}

/// Constructive section of the residue map: entries with odd residue lift to
/// g(a)+3N, even ones to g(a)+2N. All lifted values are even and at least 2N,
/// so every triangle condition holds with slack; the result reduces back to g.
inline Coloring lift_residue(TriangulationPtr tri, const Residue& g) {
    if (!tri) throw Error("lift needs a triangulation");
    if (g.values().size() != tri->edge_count())
        throw Error("residue length does not match the triangulation");
    const std::int64_t n = g.modulus();
    std::vector<Int> out;
    out.reserve(g.values().size());
    for (std::int64_t v : g.values())
        out.push_back(Int(v) + (v % 2 != 0 ? 3 * n : 2 * n));
    return Coloring(std::move(tri), std::move(out));
}

} // namespace skein
