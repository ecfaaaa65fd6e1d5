#include "orcas/bitmath.hpp"

#include <bit>
#include <stdexcept>

namespace orcas {

BitVector::BitVector(std::initializer_list<int> bits) : BitVector(bits.size()) {
    std::size_t i = 0;
    for (int b : bits) set(i++, b != 0);
}

std::size_t BitVector::weight() const {
    std::size_t w = 0;
    for (std::uint64_t word : words_) w += std::popcount(word);
    return w;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (size_ != other.size_) throw std::invalid_argument("BitVector xor: length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

bool BitVector::operator==(const BitVector& other) const {
    return size_ == other.size_ && words_ == other.words_;
}

bool BitVector::is_zero() const {
    for (std::uint64_t word : words_)
        if (word) return false;
    return true;
}

BitVector BitVector::concat(const BitVector& a, const BitVector& b) {
    BitVector out(a.size() + b.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.set(i, a.get(i));
    for (std::size_t i = 0; i < b.size(); ++i) out.set(a.size() + i, b.get(i));
    return out;
}

BitVector BitVector::slice(std::size_t begin, std::size_t len) const {
    if (begin + len > size_) throw std::out_of_range("BitVector slice out of range");
    BitVector out(len);
    for (std::size_t i = 0; i < len; ++i) out.set(i, get(begin + i));
    return out;
}

std::string BitVector::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

bool BitMatrix::operator==(const BitMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::string BitMatrix::to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
        s += data_[r].to_string();
        s += '\n';
    }
    return s;
}

BitVector binary_expansion(std::uint64_t i, unsigned m) {
    if (m < 64 && i >= (std::uint64_t(1) << m))
        throw std::invalid_argument("binary_expansion: value does not fit in m bits");
    BitVector v(m);
    for (unsigned b = 0; b < m; ++b) v.set(b, (i >> b) & 1u);
    return v;
}

unsigned bit_length(std::uint64_t i) {
    unsigned bits = 0;
    while (i) {
        ++bits;
        i >>= 1;
    }
    return bits;
}

BitMatrix expansion_matrix(unsigned m, std::size_t n) {
    if (m >= 64 || n > (std::uint64_t(1) << m) - 1)
        throw std::invalid_argument("expansion_matrix: n exceeds 2^m - 1");
    BitMatrix mat(m, n);
    for (std::size_t j = 1; j <= n; ++j)
        for (unsigned b = 0; b < m; ++b)
            mat.set(b, j - 1, (j >> b) & 1u);
    return mat;
}

namespace {

// Row echelon over GF(2); returns pivot column per eliminated row.
std::vector<std::size_t> eliminate(BitMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && !m.get(sel, col)) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row) std::swap(m.row(sel), m.row(row));
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (r != row && m.get(r, col)) m.row(r) ^= m.row(row);
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t gf2_rank(BitMatrix m) { return eliminate(m).size(); }

std::vector<std::size_t> gf2_free_columns(const BitMatrix& m) {
    BitMatrix work = m;
    std::vector<std::size_t> pivots = eliminate(work);
    std::vector<std::size_t> free_cols;
    std::size_t p = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (p < pivots.size() && pivots[p] == c) ++p;
        else free_cols.push_back(c);
    }
    return free_cols;
}

BitMatrix gf2_nullspace(const BitMatrix& m) {
    BitMatrix work = m;
    std::vector<std::size_t> pivots = eliminate(work);
    std::vector<std::size_t> free_cols = gf2_free_columns(m);

    BitMatrix basis(free_cols.size(), m.cols());
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        std::size_t f = free_cols[i];
        basis.set(i, f, true);
        // Pivot variables are determined by the free variable: row r of the
        // reduced form reads x_{pivot_r} + sum over free cols = 0.
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (work.get(r, f)) basis.set(i, pivots[r], true);
    }
    return basis;
}

BitVector gf2_vecmat(const BitVector& v, const BitMatrix& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("gf2_vecmat: dimension mismatch");
    BitVector out(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (v.get(r)) out ^= m.row(r);
    return out;
}

BitVector gf2_matvec(const BitMatrix& m, const BitVector& v) {
    if (v.size() == m.cols()) {
        BitVector out(m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r) {
            std::size_t parity = 0;
            const auto& rw = m.row(r).words();
            const auto& vw = v.words();
            for (std::size_t w = 0; w < rw.size(); ++w)
                parity ^= std::popcount(rw[w] & vw[w]);
            out.set(r, parity & 1u);
        }
        return out;
    }
    if (v.size() == m.rows()) return gf2_vecmat(v, m);
    throw std::invalid_argument("gf2_matvec: dimension mismatch");
}

}  // namespace orcas
