#pragma once

#include "skein/bigint.hpp"
#include "skein/errors.hpp"

#include <complex>
#include <map>
#include <utility>
#include <vector>

namespace skein {

/// Sparse integer polynomial in one variable; zero coefficients are never stored.
class IntPolynomial {
public:
    IntPolynomial() = default;

    static IntPolynomial constant(Int c) {
        IntPolynomial p;
        p.set(0, std::move(c));
        return p;
    }

    static IntPolynomial x() {
        IntPolynomial p;
        p.set(1, 1);
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree of the polynomial; -1 for the zero polynomial.
    int degree() const {
        return coeffs_.empty() ? -1 : static_cast<int>(coeffs_.rbegin()->first);
    }

    Int coeff(unsigned k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? Int(0) : it->second;
    }

    const std::map<unsigned, Int>& coefficients() const { return coeffs_; }

    void set(unsigned k, Int c) {
        if (c == 0)
            coeffs_.erase(k);
        else
            coeffs_[k] = std::move(c);
    }

    void add_term(unsigned k, const Int& c) {
        if (c == 0) return;
        Int& slot = coeffs_[k];
        slot += c;
        if (slot == 0) coeffs_.erase(k);
    }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        IntPolynomial out = a;
        for (const auto& [k, c] : b.coeffs_) out.add_term(k, c);
        return out;
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        IntPolynomial out = a;
        for (const auto& [k, c] : b.coeffs_) out.add_term(k, -c);
        return out;
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        IntPolynomial out;
        for (const auto& [ka, ca] : a.coeffs_)
            for (const auto& [kb, cb] : b.coeffs_) out.add_term(ka + kb, ca * cb);
        return out;
    }

    /// this(inner), by Horner evaluation in the polynomial ring.
    IntPolynomial compose(const IntPolynomial& inner) const {
        IntPolynomial out;
        int prev = degree();
        if (prev < 0) return out;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            const int k = static_cast<int>(it->first);
            for (int step = 0; step < prev - k; ++step) out = out * inner;
            out.add_term(0, it->second);
            prev = k;
        }
        for (int step = 0; step < prev; ++step) out = out * inner;
        return out;
    }

    std::complex<double> evaluate(std::complex<double> z) const {
        std::complex<double> out = 0.0;
        int prev = degree();
        if (prev < 0) return out;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            const int k = static_cast<int>(it->first);
            for (int step = 0; step < prev - k; ++step) out *= z;
            out += static_cast<double>(it->second);
            prev = k;
        }
        for (int step = 0; step < prev; ++step) out *= z;
        return out;
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    std::map<unsigned, Int> coeffs_;
};

/// T_0 = 2, T_1 = x, T_k = x T_{k-1} - T_{k-2}.
inline IntPolynomial chebyshev_T(unsigned k) {
    IntPolynomial prev = IntPolynomial::constant(2);
    if (k == 0) return prev;
    IntPolynomial cur = IntPolynomial::x();
    for (unsigned i = 2; i <= k; ++i) {
        IntPolynomial next = IntPolynomial::x() * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Closed form: sum over i of (-1)^i k/(k-i) C(k-i,i) x^(k-2i). The rational
/// factor is evaluated as the exact integer k*C(k-i,i)/(k-i); divisibility is
/// checked and a failure reported, since it would mean a transcription bug.
inline IntPolynomial chebyshev_T_closed_form(unsigned k) {
    if (k == 0) return IntPolynomial::constant(2);
    IntPolynomial out;
    for (unsigned i = 0; 2 * i <= k; ++i) {
        Int binom = 1; // C(k-i, i)
        for (unsigned j = 1; j <= i; ++j) {
            binom *= Int(k - i - j + 1);
            binom /= Int(j);
        }
        Int numerator = Int(k) * binom;
        if (numerator % Int(k - i) != 0)
            throw Error("closed-form coefficient is not an integer at k=" +
                        std::to_string(k) + ", i=" + std::to_string(i));
        Int term = numerator / Int(k - i);
        if (i % 2 == 1) term = -term;
        out.add_term(k - 2 * i, term);
    }
    return out;
}

/// T_a T_b == T_{a+b} + T_{|a-b|}, exactly.
inline bool product_to_sum_check(unsigned a, unsigned b) {
    const unsigned diff = a > b ? a - b : b - a;
    return chebyshev_T(a) * chebyshev_T(b) ==
           chebyshev_T(a + b) + chebyshev_T(diff);
}

/// T_a(T_b(x)) == T_{ab}(x), exactly.
inline bool compose_check(unsigned a, unsigned b) {
    return chebyshev_T(a).compose(chebyshev_T(b)) == chebyshev_T(a * b);
}

/// |T_k(z + 1/z) - (z^k + z^-k)| < tol at floating precision.
inline bool de_moivre_check(unsigned k, std::complex<double> z, double tol = 1e-9) {
    if (std::abs(z) == 0.0) throw Error("de Moivre check needs a nonzero sample");
    const std::complex<double> lhs = chebyshev_T(k).evaluate(z + 1.0 / z);
    const std::complex<double> rhs =
        std::pow(z, static_cast<int>(k)) + std::pow(z, -static_cast<int>(k));
    return std::abs(lhs - rhs) < tol;
}

} // namespace skein
