#pragma once

// Bit-packed vectors and matrices over F2.
//
// Storage is little-endian within 64-bit words: bit i of a vector lives in
// word i / 64 at position i % 64. Matrices are row-major, every row padded to
// a whole number of words so row operations are word-parallel XORs.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace thetafay {

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t length);

    /// Parses a string of '0'/'1' characters; bit 0 is the first character.
    static BitVec from_string(std::string_view bits);

    std::size_t size() const { return length_; }
    std::size_t word_count() const { return words_.size(); }

    bool get(std::size_t i) const;
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i);

    /// Number of set bits.
    std::size_t popcount() const;
    bool any() const;

    /// Inner product over F2: parity of popcount(this & other).
    bool dot(const BitVec& other) const;

    BitVec& operator^=(const BitVec& other);
    BitVec& operator&=(const BitVec& other);
    friend BitVec operator^(BitVec lhs, const BitVec& rhs) { return lhs ^= rhs; }
    friend BitVec operator&(BitVec lhs, const BitVec& rhs) { return lhs &= rhs; }
    friend bool operator==(const BitVec&, const BitVec&) = default;

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    std::string to_string() const;

private:
    void check_same_length(const BitVec& other) const;

    std::size_t length_ = 0;
    std::vector<std::uint64_t> words_;
};

class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols);

    static F2Matrix identity(std::size_t n);
    /// Rows given as '0'/'1' strings of equal length.
    static F2Matrix from_rows(const std::vector<std::string>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value = true);

    std::span<const std::uint64_t> row_words(std::size_t r) const;
    std::span<std::uint64_t> row_words(std::size_t r);
    BitVec row(std::size_t r) const;

    /// row(dst) ^= row(src)
    void add_row(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);

    F2Matrix transpose() const;
    BitVec multiply(const BitVec& v) const;
    F2Matrix multiply(const F2Matrix& other) const;
    friend F2Matrix operator*(const F2Matrix& a, const F2Matrix& b) { return a.multiply(b); }
    friend BitVec operator*(const F2Matrix& a, const BitVec& v) { return a.multiply(v); }
    F2Matrix& operator+=(const F2Matrix& other);
    friend F2Matrix operator+(F2Matrix a, const F2Matrix& b) { return a += b; }

    /// Gauss-Jordan inverse; throws AlgebraError when the matrix is singular.
    F2Matrix inverse() const;
    std::size_t rank() const;

    /// The diagonal written as a column vector.
    BitVec diagonal() const;
    bool trace() const;
    bool is_symmetric() const;

    F2Matrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
    void set_block(std::size_t r0, std::size_t c0, const F2Matrix& src);

    /// Row-major bit string packed into one word; requires rows*cols <= 64.
    std::uint64_t encode() const;
    static F2Matrix decode(std::size_t rows, std::size_t cols, std::uint64_t code);

    friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

    std::string to_string() const;

private:
    void check_index(std::size_t r, std::size_t c) const;

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> data_;
};

}  // namespace thetafay
