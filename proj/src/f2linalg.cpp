#include "f2linalg.hpp"

#include <algorithm>
#include <bit>

namespace fukalg {

F2Vec& F2Vec::operator^=(const F2Vec& o) {
    if (n_ != o.n_) throw DimensionError("F2Vec xor: size mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

bool F2Vec::is_zero() const {
    for (auto w : w_) if (w) return false;
    return true;
}

bool F2Vec::operator<(const F2Vec& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return w_ < o.w_;
}

std::size_t F2Vec::first_set() const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (w_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(w_[i]));
    }
    return npos;
}

std::vector<std::size_t> F2Vec::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n_; ++i) if (get(i)) s.push_back(i);
    return s;
}

std::size_t F2Vec::popcount() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

void F2Matrix::set_row(std::size_t r, const F2Vec& v) {
    if (v.size() != cols_) throw DimensionError("F2Matrix::set_row: size mismatch");
    row_[r] = v;
}

F2Vec F2Matrix::apply(const F2Vec& x) const {
    if (x.size() != cols_) throw DimensionError("F2Matrix::apply: size mismatch");
    F2Vec y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::size_t par = 0;
        for (std::size_t c : row_[r].support()) par ^= x.get(c) ? 1u : 0u;
        y.set(r, par & 1u);
    }
    return y;
}

F2Matrix F2Matrix::multiply(const F2Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("F2Matrix::multiply: shape mismatch");
    F2Matrix out(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        F2Vec acc(o.cols_);
        for (std::size_t c : row_[r].support()) acc ^= o.row_[c];
        out.row_[r] = acc;
    }
    return out;
}

F2Matrix F2Matrix::transpose() const {
    F2Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c : row_[r].support()) out.set(c, r, true);
    return out;
}

bool F2Matrix::is_zero() const {
    for (const auto& r : row_) if (!r.is_zero()) return false;
    return true;
}

F2Matrix F2Matrix::identity(std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

F2Matrix F2Matrix::from_columns(const std::vector<F2Vec>& cols, std::size_t dim) {
    F2Matrix m(dim, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != dim) throw DimensionError("from_columns: size mismatch");
        for (std::size_t r : cols[c].support()) m.set(r, c, true);
    }
    return m;
}

namespace {

// Row echelon reduction. Returns pivot columns; rows of `m` are modified
// in place into reduced echelon form (also clears above pivots).
std::vector<std::size_t> echelonize(std::vector<F2Vec>& rows) {
    std::vector<std::size_t> pivots;
    std::size_t next_row = 0;
    if (rows.empty()) return pivots;
    std::size_t ncols = rows[0].size();
    for (std::size_t col = 0; col < ncols && next_row < rows.size(); ++col) {
        std::size_t p = F2Vec::npos;
        for (std::size_t r = next_row; r < rows.size(); ++r) {
            if (rows[r].get(col)) { p = r; break; }
        }
        if (p == F2Vec::npos) continue;
        std::swap(rows[next_row], rows[p]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != next_row && rows[r].get(col)) rows[r] ^= rows[next_row];
        }
        pivots.push_back(col);
        ++next_row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const F2Matrix& m) {
    std::vector<F2Vec> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    return echelonize(rows).size();
}

std::vector<F2Vec> kernel_basis(const F2Matrix& m) {
    // Reduce [M^T | I] row-wise; rows whose M^T-part vanished span ker M.
    F2Matrix t = m.transpose();
    std::size_t n = m.cols();
    std::vector<F2Vec> aug(n, F2Vec(m.rows() + n));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c : t.row(r).support()) aug[r].set(c, true);
        aug[r].set(m.rows() + r, true);
    }
    echelonize(aug);
    std::vector<F2Vec> out;
    for (const auto& row : aug) {
        bool left_zero = true;
        for (std::size_t c = 0; c < m.rows(); ++c) {
            if (row.get(c)) { left_zero = false; break; }
        }
        if (!left_zero) continue;
        F2Vec v(n);
        for (std::size_t c = 0; c < n; ++c) if (row.get(m.rows() + c)) v.set(c, true);
        if (!v.is_zero()) out.push_back(v);
    }
    return out;
}

std::vector<F2Vec> image_basis(const F2Matrix& m) {
    // Deterministic image basis: the original columns that increase rank,
    // scanned in column order.
    std::vector<F2Vec> out;
    std::vector<F2Vec> cols;
    F2Matrix tt = m.transpose();
    for (std::size_t r = 0; r < tt.rows(); ++r) cols.push_back(tt.row(r));
    // Greedy: keep columns that increase rank, in column order.
    std::vector<F2Vec> basis;  // echelonized accumulator
    for (std::size_t c = 0; c < cols.size(); ++c) {
        F2Vec v = cols[c];
        for (const auto& b : basis) {
            std::size_t p = b.first_set();
            if (p != F2Vec::npos && v.get(p)) v ^= b;
        }
        if (!v.is_zero()) {
            basis.push_back(v);
            out.push_back(cols[c]);
        }
    }
    return out;
}

std::optional<F2Vec> solve(const F2Matrix& m, const F2Vec& b) {
    if (b.size() != m.rows()) throw DimensionError("solve: rhs size mismatch");
    // Reduce augmented system [M | b] by Gaussian elimination on rows.
    std::size_t n = m.cols();
    std::vector<F2Vec> aug(m.rows(), F2Vec(n + 1));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c : m.row(r).support()) aug[r].set(c, true);
        if (b.get(r)) aug[r].set(n, true);
    }
    std::vector<std::size_t> piv = echelonize(aug);
    // Inconsistent if a pivot landed in the augmented column.
    if (!piv.empty() && piv.back() == n) return std::nullopt;
    F2Vec x(n);
    for (std::size_t i = 0; i < piv.size(); ++i) {
        if (aug[i].get(n)) x.set(piv[i], true);
    }
    return x;
}

std::vector<F2Vec> reduced_span(const std::vector<F2Vec>& vecs, std::size_t dim) {
    std::vector<F2Vec> rows;
    for (const auto& v : vecs) {
        if (v.size() != dim) throw DimensionError("reduced_span: size mismatch");
        rows.push_back(v);
    }
    echelonize(rows);
    std::vector<F2Vec> out;
    for (const auto& r : rows) if (!r.is_zero()) out.push_back(r);
    return out;
}

std::vector<F2Vec> quotient_basis(const std::vector<F2Vec>& sub,
                                  const std::vector<F2Vec>& space,
                                  std::size_t dim) {
    std::vector<F2Vec> basis = reduced_span(sub, dim);
    std::vector<F2Vec> out;
    for (const auto& cand : space) {
        if (cand.size() != dim) throw DimensionError("quotient_basis: size mismatch");
        F2Vec v = cand;
        for (const auto& b : basis) {
            std::size_t p = b.first_set();
            if (p != F2Vec::npos && v.get(p)) v ^= b;
        }
        if (!v.is_zero()) {
            basis.push_back(v);
            out.push_back(cand);
        }
    }
    return out;
}

std::optional<F2Vec> express_in_span(const std::vector<F2Vec>& basis,
                                     const F2Vec& target) {
    F2Matrix m = F2Matrix::from_columns(basis, target.size());
    return solve(m, target);
}

}  // namespace fukalg
