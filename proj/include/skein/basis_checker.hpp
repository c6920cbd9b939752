#pragma once

#include "skein/bigint.hpp"
#include "skein/coloring.hpp"
#include "skein/errors.hpp"
#include "skein/exactlinalg.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace skein {

enum class Verdict { LocalBasis, NotBasis };

struct BasisRanks {
    Int over_characters;                       // N^|E|, |E| = -3e
    std::optional<Int> over_extended_center;   // N^(|E|-k) after adjoining k boundary curves
    std::optional<Int> over_center;            // N^(6g-6+2p) when genus/punctures are known
};

/// Evidence that a curve family's residues span Z_N^E: the integer matrix of
/// the family, its exact determinant, and the unit-mod-N verdict. Reduction
/// mod N is deferred to the unit test, so one determinant serves every odd N.
struct BasisCertificate {
    std::int64_t modulus = 1;
    IntMatrix matrix{0, 0};
    Int det;
    bool unit = false;
    Verdict verdict = Verdict::NotBasis;
    std::size_t edge_count = 0;
    std::size_t boundary_count = 0;
    BasisRanks ranks;
};

/// Square matrix whose i-th row is the i-th curve's coloring over the ordered
/// edges. Entries stay integral; only the unit test looks at them mod N.
inline IntMatrix residue_matrix(const std::vector<Coloring>& family, std::int64_t n) {
    require_odd_modulus(n);
    if (family.empty()) throw Error("empty curve family");
    const std::size_t ne = family.front().context()->edge_count();
    if (family.size() != ne)
        throw Error("family has " + std::to_string(family.size()) + " curves for " +
                    std::to_string(ne) + " edges");
    IntMatrix m(ne, ne);
    for (std::size_t i = 0; i < family.size(); ++i) {
        family[i].require_same_context(family.front());
        for (std::size_t j = 0; j < ne; ++j) m.at(i, j) = family[i].value(j);
    }
    return m;
}

/// Local-basis certificate: when det(residue_matrix) is a unit mod N, the
/// threaded family T_{k_1}(S_1)*...*T_{k_E}(S_E), 0 <= k_i <= N-1, is a local
/// basis of rank N^|E| over the threading image.
inline BasisCertificate certify_local_basis(const std::vector<Coloring>& family,
                                            std::int64_t n) {
    BasisCertificate cert;
    cert.modulus = n;
    cert.matrix = residue_matrix(family, n);
    cert.det = det_exact(cert.matrix);
    cert.unit = is_unit_mod(cert.det, n);
    cert.verdict = cert.unit ? Verdict::LocalBasis : Verdict::NotBasis;
    cert.edge_count = family.size();
    cert.ranks.over_characters = pow_int(Int(n), cert.edge_count);
    return cert;
}

/// Same certificate with a designated set of boundary curves adjoined to the
/// coefficient ring: the remaining subfamily has rank N^(|E|-k) over it.
inline BasisCertificate certify_over_extended_center(
    const std::vector<Coloring>& family, const std::vector<std::size_t>& boundary_indices,
    std::int64_t n) {
    std::set<std::size_t> seen;
    for (std::size_t idx : boundary_indices) {
        if (idx >= family.size())
            throw Error("boundary index " + std::to_string(idx) + " out of range");
        if (!seen.insert(idx).second)
            throw Error("boundary index " + std::to_string(idx) + " repeated");
    }
    BasisCertificate cert = certify_local_basis(family, n);
    if (cert.verdict != Verdict::LocalBasis)
        throw Error("full family is not a local basis; cannot extend the center");
    cert.boundary_count = boundary_indices.size();
    cert.ranks.over_extended_center =
        pow_int(Int(n), cert.edge_count - cert.boundary_count);
    return cert;
}

struct DimensionReport {
    Int dim_over_characters;   // N^(6g-6+3p)
    Int dim_over_center;       // N^(6g-6+2p)
    Int pants_subalgebra_rank; // N^(3g-3+p)
    std::int64_t pants_curve_count = 0; // 3g-3+p
    std::int64_t edge_count = 0;        // 6g-6+3p
};

inline DimensionReport dimensions(std::int64_t g, std::int64_t p, std::int64_t n) {
    require_odd_modulus(n);
    if (g < 0 || p < 1 || 2 - 2 * g - p >= 0)
        throw Error("surface must have punctures and negative Euler characteristic");
    DimensionReport r;
    r.edge_count = 6 * g - 6 + 3 * p;
    r.pants_curve_count = 3 * g - 3 + p;
    r.dim_over_characters = pow_int(Int(n), static_cast<std::uint64_t>(r.edge_count));
    r.dim_over_center =
        pow_int(Int(n), static_cast<std::uint64_t>(6 * g - 6 + 2 * p));
    r.pants_subalgebra_rank =
        pow_int(Int(n), static_cast<std::uint64_t>(r.pants_curve_count));
    return r;
}

} // namespace skein
