#pragma once

#include "skein/coloring.hpp"
#include "skein/errors.hpp"
#include "skein/normal_curves.hpp"

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

namespace skein {

/// A nonzero scalar determined only up to integer powers of the deformation
/// unit, so no equality is offered; the representative is bookkeeping only.
/// Everything downstream uses just closure under products and nonvanishing.
class ScalarClass {
public:
    explicit ScalarClass(std::complex<double> representative)
        : rep_(representative) {
        if (rep_ == std::complex<double>(0.0, 0.0))
            throw Error("scalar class cannot be zero");
    }

    static ScalarClass one() { return ScalarClass(1.0); }

    std::complex<double> representative() const { return rep_; }
    bool nonzero() const { return true; }

    friend ScalarClass operator*(const ScalarClass& a, const ScalarClass& b) {
        return ScalarClass(a.rep_ * b.rep_);
    }

private:
    std::complex<double> rep_;
};

/// The largest simple diagram of a skein together with its coefficient class.
struct LeadTerm {
    Coloring coloring;
    ScalarClass scalar;
};

/// Product of lead terms: colorings add, scalar classes multiply, and the
/// result is never zero.
inline LeadTerm product_lead(const LeadTerm& u, const LeadTerm& v) {
    return LeadTerm{u.coloring + v.coloring, u.scalar * v.scalar};
}

/// A product of Chebyshev-threaded primitive curves, tracked at the level of
/// colorings and levels. Factors carry pairwise distinct primitive colorings.
class ThreadedWord {
public:
    struct Factor {
        Coloring primitive;
        std::size_t level = 0;
    };

    ThreadedWord() = default;

    explicit ThreadedWord(std::vector<Factor> factors) : factors_(std::move(factors)) {
        for (std::size_t i = 0; i < factors_.size(); ++i)
            for (std::size_t j = i + 1; j < factors_.size(); ++j)
                if (factors_[i].primitive == factors_[j].primitive)
                    throw Error("threaded word repeats a primitive coloring");
    }

    const std::vector<Factor>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }

private:
    std::vector<Factor> factors_;
};

/// Lead term of a threaded word: T_k is monic, so the lead coloring is the
/// level-weighted sum of the primitives and the scalar class is 1.
inline LeadTerm lead_of_word(const ThreadedWord& w, TriangulationPtr tri) {
    Coloring sum = Coloring::zero(std::move(tri));
    for (const auto& f : w.factors()) sum = sum + Int(f.level) * f.primitive;
    return LeadTerm{std::move(sum), ScalarClass::one()};
}

/// Rewrite an admissible coloring as the threaded word over its primitive
/// decomposition: levels are the parallel multiplicities.
inline ThreadedWord threaded_form(const Coloring& f) {
    std::vector<ThreadedWord::Factor> factors;
    for (auto& [part, mult] : primitive_decomposition(f).parts)
        factors.push_back({part, mult});
    return ThreadedWord(std::move(factors));
}

/// True when the diagram is the lead term of a threading-image element, i.e.
/// its residue mod N vanishes.
inline bool lead_in_characters(const Coloring& f, std::int64_t n) {
    return residue(f, n).is_zero();
}

/// Residues summing to zero in Z_N^E; the trace pairing of skeins with
/// complementary lead residues is nonzero.
inline bool complementary(const Residue& r1, const Residue& r2) {
    return (r1 + r2).is_zero();
}

} // namespace skein
