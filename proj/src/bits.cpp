#include "thetafay/bits.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "thetafay/errors.hpp"

namespace thetafay {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

}  // namespace

// ---------------------------------------------------------------- BitVec

BitVec::BitVec(std::size_t length) : length_(length), words_(words_for(length), 0) {}

BitVec BitVec::from_string(std::string_view bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw DimensionError("BitVec::from_string: invalid character '" + std::string(1, bits[i]) + "'");
        }
    }
    return v;
}

bool BitVec::get(std::size_t i) const {
    if (i >= length_) throw DimensionError("BitVec::get: index out of range");
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void BitVec::set(std::size_t i, bool value) {
    if (i >= length_) throw DimensionError("BitVec::set: index out of range");
    const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (value) {
        words_[i / kWordBits] |= mask;
    } else {
        words_[i / kWordBits] &= ~mask;
    }
}

void BitVec::flip(std::size_t i) {
    if (i >= length_) throw DimensionError("BitVec::flip: index out of range");
    words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits);
}

std::size_t BitVec::popcount() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool BitVec::any() const {
    for (auto w : words_) {
        if (w != 0) return true;
    }
    return false;
}

bool BitVec::dot(const BitVec& other) const {
    check_same_length(other);
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
    return std::popcount(acc) & 1;
}

BitVec& BitVec::operator^=(const BitVec& other) {
    check_same_length(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

BitVec& BitVec::operator&=(const BitVec& other) {
    check_same_length(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

std::string BitVec::to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

void BitVec::check_same_length(const BitVec& other) const {
    if (length_ != other.length_) {
        throw DimensionError("BitVec length mismatch: " + std::to_string(length_) + " vs " +
                             std::to_string(other.length_));
    }
}

// -------------------------------------------------------------- F2Matrix

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_per_row_(words_for(cols)), data_(rows * words_for(cols), 0) {}

F2Matrix F2Matrix::identity(std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

F2Matrix F2Matrix::from_rows(const std::vector<std::string>& rows) {
    if (rows.empty()) return {};
    F2Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw DimensionError("F2Matrix::from_rows: ragged rows");
        for (std::size_t c = 0; c < m.cols_; ++c) {
            if (rows[r][c] == '1') {
                m.set(r, c);
            } else if (rows[r][c] != '0') {
                throw DimensionError("F2Matrix::from_rows: invalid character");
            }
        }
    }
    return m;
}

void F2Matrix::check_index(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw DimensionError("F2Matrix: index out of range");
}

bool F2Matrix::get(std::size_t r, std::size_t c) const {
    check_index(r, c);
    return (data_[r * words_per_row_ + c / kWordBits] >> (c % kWordBits)) & 1u;
}

void F2Matrix::set(std::size_t r, std::size_t c, bool value) {
    check_index(r, c);
    auto& w = data_[r * words_per_row_ + c / kWordBits];
    const std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
    w = value ? (w | mask) : (w & ~mask);
}

std::span<const std::uint64_t> F2Matrix::row_words(std::size_t r) const {
    return {data_.data() + r * words_per_row_, words_per_row_};
}

std::span<std::uint64_t> F2Matrix::row_words(std::size_t r) {
    return {data_.data() + r * words_per_row_, words_per_row_};
}

BitVec F2Matrix::row(std::size_t r) const {
    if (r >= rows_) throw DimensionError("F2Matrix::row: index out of range");
    BitVec v(cols_);
    auto src = row_words(r);
    auto dst = v.words();
    for (std::size_t i = 0; i < words_per_row_; ++i) dst[i] = src[i];
    return v;
}

void F2Matrix::add_row(std::size_t dst, std::size_t src) {
    auto d = row_words(dst);
    auto s = row_words(src);
    for (std::size_t i = 0; i < words_per_row_; ++i) d[i] ^= s[i];
}

void F2Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    auto ra = row_words(a);
    auto rb = row_words(b);
    for (std::size_t i = 0; i < words_per_row_; ++i) std::swap(ra[i], rb[i]);
}

F2Matrix F2Matrix::transpose() const {
    F2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (get(r, c)) t.set(c, r);
        }
    }
    return t;
}

BitVec F2Matrix::multiply(const BitVec& v) const {
    if (v.size() != cols_) throw DimensionError("F2Matrix * BitVec: dimension mismatch");
    BitVec out(rows_);
    auto vw = v.words();
    for (std::size_t r = 0; r < rows_; ++r) {
        auto rw = row_words(r);
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < words_per_row_; ++i) acc ^= rw[i] & vw[i];
        if (std::popcount(acc) & 1) out.set(r);
    }
    return out;
}

F2Matrix F2Matrix::multiply(const F2Matrix& other) const {
    if (cols_ != other.rows_) throw DimensionError("F2Matrix * F2Matrix: dimension mismatch");
    F2Matrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        auto dst = out.row_words(r);
        auto lhs = row_words(r);
        for (std::size_t w = 0; w < words_per_row_; ++w) {
            std::uint64_t bits = lhs[w];
            while (bits != 0) {
                const std::size_t k = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                auto src = other.row_words(k);
                for (std::size_t i = 0; i < out.words_per_row_; ++i) dst[i] ^= src[i];
            }
        }
    }
    return out;
}

F2Matrix& F2Matrix::operator+=(const F2Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("F2Matrix + F2Matrix: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] ^= other.data_[i];
    return *this;
}

F2Matrix F2Matrix::inverse() const {
    if (rows_ != cols_) throw DimensionError("F2Matrix::inverse: matrix is not square");
    const std::size_t n = rows_;
    F2Matrix work = *this;
    F2Matrix inv = identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && !work.get(pivot, c)) ++pivot;
        if (pivot == n) throw AlgebraError("F2Matrix::inverse: matrix is singular");
        work.swap_rows(c, pivot);
        inv.swap_rows(c, pivot);
        for (std::size_t r = 0; r < n; ++r) {
            if (r != c && work.get(r, c)) {
                work.add_row(r, c);
                inv.add_row(r, c);
            }
        }
    }
    return inv;
}

std::size_t F2Matrix::rank() const {
    F2Matrix work = *this;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows_ && !work.get(pivot, c)) ++pivot;
        if (pivot == rows_) continue;
        work.swap_rows(rank, pivot);
        for (std::size_t r = rank + 1; r < rows_; ++r) {
            if (work.get(r, c)) work.add_row(r, rank);
        }
        ++rank;
    }
    return rank;
}

BitVec F2Matrix::diagonal() const {
    const std::size_t n = std::min(rows_, cols_);
    BitVec d(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (get(i, i)) d.set(i);
    }
    return d;
}

bool F2Matrix::trace() const { return diagonal().popcount() & 1; }

bool F2Matrix::is_symmetric() const { return rows_ == cols_ && *this == transpose(); }

F2Matrix F2Matrix::block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
    if (r0 + nrows > rows_ || c0 + ncols > cols_) throw DimensionError("F2Matrix::block: out of range");
    F2Matrix b(nrows, ncols);
    for (std::size_t r = 0; r < nrows; ++r) {
        for (std::size_t c = 0; c < ncols; ++c) {
            if (get(r0 + r, c0 + c)) b.set(r, c);
        }
    }
    return b;
}

void F2Matrix::set_block(std::size_t r0, std::size_t c0, const F2Matrix& src) {
    if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_) throw DimensionError("F2Matrix::set_block: out of range");
    for (std::size_t r = 0; r < src.rows_; ++r) {
        for (std::size_t c = 0; c < src.cols_; ++c) set(r0 + r, c0 + c, src.get(r, c));
    }
}

std::uint64_t F2Matrix::encode() const {
    if (rows_ * cols_ > kWordBits) throw DimensionError("F2Matrix::encode: more than 64 entries");
    std::uint64_t code = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
        const std::uint64_t mask = cols_ == kWordBits ? ~std::uint64_t{0} : ((std::uint64_t{1} << cols_) - 1);
        code |= (data_[r * words_per_row_] & mask) << (r * cols_);
    }
    return code;
}

F2Matrix F2Matrix::decode(std::size_t rows, std::size_t cols, std::uint64_t code) {
    if (rows * cols > kWordBits) throw DimensionError("F2Matrix::decode: more than 64 entries");
    F2Matrix m(rows, cols);
    const std::uint64_t mask = cols == kWordBits ? ~std::uint64_t{0} : ((std::uint64_t{1} << cols) - 1);
    for (std::size_t r = 0; r < rows; ++r) m.data_[r * m.words_per_row_] = (code >> (r * cols)) & mask;
    return m;
}

std::string F2Matrix::to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) s += get(r, c) ? '1' : '0';
        s += '\n';
    }
    return s;
}

}  // namespace thetafay
