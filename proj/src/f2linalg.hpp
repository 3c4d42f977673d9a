// Exact linear algebra over the two-element field.
//
// Bit-packed rows, word-level XOR elimination, deterministic pivoting
// (first nonzero column, lowest row index) so every basis returned by
// these routines is reproducible.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fukalg {

// Dense F2 vector, bit-packed into 64-bit words.
class F2Vec {
public:
    F2Vec() : n_(0) {}
    explicit F2Vec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const {
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool v) {
        if (v) w_[i >> 6] |= (std::uint64_t{1} << (i & 63));
        else   w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    void flip(std::size_t i) { w_[i >> 6] ^= (std::uint64_t{1} << (i & 63)); }

    F2Vec& operator^=(const F2Vec& o);
    friend F2Vec operator^(F2Vec a, const F2Vec& b) { a ^= b; return a; }

    bool is_zero() const;
    bool operator==(const F2Vec& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const F2Vec& o) const { return !(*this == o); }
    bool operator<(const F2Vec& o) const;  // for use as map key

    // Index of first set bit, or npos.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t first_set() const;

    std::vector<std::size_t> support() const;
    std::size_t popcount() const;

private:
    std::size_t n_;
    std::vector<std::uint64_t> w_;
};

// Dense row-major F2 matrix.
class F2Matrix {
public:
    F2Matrix() : rows_(0), cols_(0) {}
    F2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), row_(rows, F2Vec(cols)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return row_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { row_[r].set(c, v); }

    const F2Vec& row(std::size_t r) const { return row_[r]; }
    F2Vec& row(std::size_t r) { return row_[r]; }
    void set_row(std::size_t r, const F2Vec& v);

    F2Vec apply(const F2Vec& x) const;       // M x, x has cols() entries
    F2Matrix multiply(const F2Matrix& o) const;
    F2Matrix transpose() const;
    bool is_zero() const;
    bool operator==(const F2Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && row_ == o.row_;
    }

    static F2Matrix identity(std::size_t n);
    // Columns are the given vectors.
    static F2Matrix from_columns(const std::vector<F2Vec>& cols, std::size_t dim);

private:
    std::size_t rows_, cols_;
    std::vector<F2Vec> row_;
};

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::size_t rank(const F2Matrix& m);

// Basis of {x : Mx = 0}, deterministic.
std::vector<F2Vec> kernel_basis(const F2Matrix& m);

// Basis of the column space, deterministic.
std::vector<F2Vec> image_basis(const F2Matrix& m);

// Some x with Mx = b, or nullopt if b is outside the column space.
std::optional<F2Vec> solve(const F2Matrix& m, const F2Vec& b);

// Given spanning vectors of a subspace U inside a space V (spanned by
// `space`, all of ambient dimension dim), return representatives that
// complete a basis of U to a basis of V.  Representatives are chosen
// among the `space` vectors by pivot order, so they are reproducible.
std::vector<F2Vec> quotient_basis(const std::vector<F2Vec>& sub,
                                  const std::vector<F2Vec>& space,
                                  std::size_t dim);

// Row-reduced span of the given vectors (deterministic reduced echelon form).
std::vector<F2Vec> reduced_span(const std::vector<F2Vec>& vecs, std::size_t dim);

// Expresses `target` as an F2 combination of `basis`, or nullopt.
std::optional<F2Vec> express_in_span(const std::vector<F2Vec>& basis,
                                     const F2Vec& target);

}  // namespace fukalg
