#pragma once

#include <cstdint>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace orcas {

// Vector over GF(2), bit-packed into 64-bit words.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}
    BitVector(std::initializer_list<int> bits);

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (v) words_[i >> 6] |= mask; else words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    std::size_t weight() const;

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { a ^= b; return a; }
    bool operator==(const BitVector& other) const;
    bool operator!=(const BitVector& other) const { return !(*this == other); }

    bool is_zero() const;

    // Concatenation and slicing, used by the Plotkin recursion.
    static BitVector concat(const BitVector& a, const BitVector& b);
    BitVector slice(std::size_t begin, std::size_t len) const;

    std::string to_string() const;  // e.g. "1011"

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

// Dense matrix over GF(2), row-major, rows bit-packed.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { data_[r].set(c, v); }

    const BitVector& row(std::size_t r) const { return data_[r]; }
    BitVector& row(std::size_t r) { return data_[r]; }

    bool operator==(const BitMatrix& other) const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BitVector> data_;
};

// LSB-first binary expansion of i into m bits; requires i < 2^m.
BitVector binary_expansion(std::uint64_t i, unsigned m);

// ceil(log2(i+1)): number of bits needed to write i.
unsigned bit_length(std::uint64_t i);

// m x n matrix whose column j (1-indexed) is the m-bit expansion of j.
// Requires n <= 2^m - 1.
BitMatrix expansion_matrix(unsigned m, std::size_t n);

std::size_t gf2_rank(BitMatrix m);

// Rows form a basis of {x : M x^T = 0}. Each basis row has a 1 at "its"
// free column and zeros at the other free columns, so a codeword's
// coordinates at the free columns recover the combination directly.
BitMatrix gf2_nullspace(const BitMatrix& m);

// Free-column positions of the row echelon form, ascending; these are the
// pivot columns of gf2_nullspace(m)'s output rows.
std::vector<std::size_t> gf2_free_columns(const BitMatrix& m);

// Multiplies in whichever orientation conforms: v * M when |v| == rows,
// M * v^T when |v| == cols (syndrome style). Square ambiguity resolves
// to M * v^T. Throws std::invalid_argument on dimension mismatch.
BitVector gf2_matvec(const BitMatrix& m, const BitVector& v);

// v * M with |v| == rows(M): XOR of the rows selected by v.
BitVector gf2_vecmat(const BitVector& v, const BitMatrix& m);

inline std::size_t hamming_weight(const BitVector& v) { return v.weight(); }

}  // namespace orcas
