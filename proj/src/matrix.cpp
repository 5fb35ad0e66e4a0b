#include "avw/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace avw {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(const std::vector<Element>& cols) {
    if (cols.empty()) return {};
    Matrix m(cols.front().dim(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].dim() != m.rows()) throw DimensionError("columns of unequal dimension");
        for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = cols[c][r];
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<Element>& rows) {
    if (rows.empty()) return {};
    Matrix m(rows.size(), rows.front().dim());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].dim() != m.cols()) throw DimensionError("rows of unequal dimension");
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Element Matrix::column(std::size_t c) const {
    Element e(rows_);
    for (std::size_t r = 0; r < rows_; ++r) e[r] = (*this)(r, c);
    return e;
}

Element Matrix::row(std::size_t r) const {
    Element e(cols_);
    for (std::size_t c = 0; c < cols_; ++c) e[c] = (*this)(r, c);
    return e;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return avw::is_zero(s); });
}

Matrix Matrix::stacked(const Matrix& below) const {
    if (rows_ == 0) return below;
    if (below.cols_ != cols_) throw DimensionError("stacking matrices with different column counts");
    Matrix m(rows_ + below.rows_, cols_);
    std::copy(data_.begin(), data_.end(), m.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
    Matrix m(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (is_zero(a(i, k))) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) m(i, j) += a(i, k) * b(k, j);
        }
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix sum shape mismatch");
    Matrix m = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) += b(i, j);
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix difference shape mismatch");
    Matrix m = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) -= b(i, j);
    return m;
}

Matrix operator*(const Scalar& s, Matrix m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= s;
    return m;
}

Element operator*(const Matrix& m, const Element& v) {
    if (m.cols() != v.dim()) throw DimensionError("matrix-vector shape mismatch");
    Element out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!is_zero(v[c])) out[r] += m(r, c) * v[c];
    return out;
}

RowEchelon rref(Matrix m) {
    RowEchelon out;
    std::size_t row = 0;
    Scalar factor;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && is_zero(m(p, col))) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
        const Scalar inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || is_zero(m(r, col))) continue;
            factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Element> kernel(const Matrix& m) {
    const auto ech = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : ech.pivots) is_pivot[p] = true;
    std::vector<Element> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Element v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Element> row_space(const Matrix& m) {
    const auto ech = rref(m);
    std::vector<Element> rows;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) rows.push_back(ech.reduced.row(r));
    return rows;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const auto ech = rref(std::move(aug));
    if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
    return inv;
}

bool independent(const std::vector<Element>& vs) {
    if (vs.empty()) return true;
    return rank(Matrix::from_rows(vs)) == vs.size();
}

Element Span::reduce(Element v) const {
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        const std::size_t p = pivots_[r];
        if (is_zero(v[p])) continue;
        const Scalar f = v[p];
        for (std::size_t c = 0; c < dim_; ++c)
            if (!is_zero(basis_[r][c])) v[c] -= f * basis_[r][c];
    }
    return v;
}

bool Span::contains(const Element& v) const {
    if (v.dim() != dim_) throw DimensionError("span membership with wrong dimension");
    return reduce(v).is_zero();
}

bool Span::add(const Element& v) {
    if (v.dim() != dim_) throw DimensionError("span extension with wrong dimension");
    Element w = reduce(v);
    std::size_t p = 0;
    while (p < dim_ && is_zero(w[p])) ++p;
    if (p == dim_) return false;
    w *= Scalar(1 / w[p]);
    // Keep the basis fully reduced: clear the new pivot column elsewhere.
    for (auto& b : basis_) {
        if (is_zero(b[p])) continue;
        const Scalar f = b[p];
        for (std::size_t c = 0; c < dim_; ++c)
            if (!is_zero(w[c])) b[c] -= f * w[c];
    }
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    basis_.insert(basis_.begin() + pos, std::move(w));
    return true;
}

}  // namespace avw
