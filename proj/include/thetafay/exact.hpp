#pragma once

// Exact integer linear algebra: small int64 matrices for the Fay operators and
// fraction-free (Bareiss-style) Gauss-Jordan elimination over GMP integers.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace thetafay {

using BigInt = mpz_class;
using BigVector = std::vector<BigInt>;
using RationalVector = std::vector<mpq_class>;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix transpose() const;
    bool is_symmetric() const;
    std::int64_t trace() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(std::int64_t k, const IntMatrix& a);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    BigVector apply(const BigVector& v) const;

    /// "rows cols" header followed by one whitespace-separated row per line.
    std::string to_text() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

using BigMatrix = std::vector<BigVector>;

/// Reduced row echelon form scaled so every pivot equals `pivot_value` (the
/// last Bareiss pivot). Entries stay integral throughout the elimination.
struct FractionFreeEchelon {
    BigMatrix rows;
    std::vector<std::size_t> pivot_columns;
    BigInt pivot_value = 1;

    std::size_t rank() const { return pivot_columns.size(); }
};

FractionFreeEchelon fraction_free_gauss_jordan(BigMatrix m);

BigMatrix to_big(const IntMatrix& m);

std::size_t exact_rank(const BigMatrix& m);

/// A basis of the integer kernel: one vector per free column, each divided by
/// its content and with first nonzero entry positive.
std::vector<BigVector> integer_kernel(const IntMatrix& m);
std::vector<BigVector> integer_kernel(const BigMatrix& m);

/// Divides by the gcd of the entries and makes the first nonzero entry positive.
BigVector make_primitive(BigVector v);

/// Clears denominators (lcm) and then makes the vector primitive.
BigVector to_primitive_integer(const RationalVector& v);

}  // namespace thetafay
