#pragma once

#include "skein/bigint.hpp"
#include "skein/errors.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace skein {

/// Dense matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw Error("ragged matrix initializer");
            for (long long v : r) data_.emplace_back(v);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Int& at(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }
    const Int& at(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
inline Int det_exact(const IntMatrix& m) {
    if (!m.square()) throw Error("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t pivot = k;
            while (pivot < n && a.at(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(pivot, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

/// gcd(d, N) == 1 for odd N; works for composite N, where "nonzero mod N" is
/// not enough.
inline bool is_unit_mod(const Int& d, std::int64_t n) {
    if (n < 1 || n % 2 == 0)
        throw Error("modulus must be an odd integer >= 1, got " + std::to_string(n));
    Int r = d % n;
    if (r < 0) r += n;
    return gcd_int(r, Int(n)) == 1;
}

/// Columns of m form a basis of the free module Z_N^n iff det is a unit mod N.
inline bool is_basis_mod(const IntMatrix& m, std::int64_t n) {
    if (!m.square()) throw Error("basis test needs a square matrix");
    return is_unit_mod(det_exact(m), n);
}

/// |d| when d = +-2^k; nullopt-style: returns -1 if d is not (plus or minus) a
/// power of two, the exponent k otherwise.
inline int power_of_two_exponent(Int d) {
    if (d == 0) return -1;
    if (d < 0) d = -d;
    int k = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++k;
    }
    return d == 1 ? k : -1;
}

} // namespace skein
