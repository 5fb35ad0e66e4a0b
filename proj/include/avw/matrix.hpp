#pragma once

// Dense exact matrices over the rationals and the Gaussian-elimination
// routines the rest of the workbench is built on (kernels, ranks, inverses,
// span membership).

#include "avw/element.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace avw {

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    /// Matrix whose columns are the given elements.
    static Matrix from_columns(const std::vector<Element>& cols);
    /// Matrix whose rows are the given elements.
    static Matrix from_rows(const std::vector<Element>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Element column(std::size_t c) const;
    Element row(std::size_t r) const;

    Matrix transpose() const;
    bool is_zero() const;

    /// Rows of `below` appended under this matrix. Column counts must match.
    Matrix stacked(const Matrix& below) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& s, Matrix m);
/// Matrix-vector product; the vector must have valid element dimension.
Element operator*(const Matrix& m, const Element& v);

struct RowEchelon {
    Matrix reduced;                   // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of {v : M v = 0}, one vector per free column (in increasing column
/// order, free coordinate set to 1). Empty iff M is injective. Requires
/// M.cols() to be a valid element dimension.
std::vector<Element> kernel(const Matrix& m);

/// Basis of the row space (the nonzero rows of the RREF).
std::vector<Element> row_space(const Matrix& m);

/// Exact inverse, or nullopt for a singular matrix.
std::optional<Matrix> inverse(const Matrix& m);

/// Linear independence of a family of equal-dimension elements.
bool independent(const std::vector<Element>& vs);

/// Incrementally maintained span with exact membership tests. The stored
/// basis is kept in reduced row echelon form.
class Span {
public:
    explicit Span(std::size_t dim) : dim_(dim) {}

    /// Adds v; returns true when v was outside the span.
    bool add(const Element& v);
    bool contains(const Element& v) const;

    std::size_t size() const { return basis_.size(); }
    std::size_t ambient_dim() const { return dim_; }
    const std::vector<Element>& basis() const { return basis_; }

private:
    Element reduce(Element v) const;

    std::size_t dim_;
    std::vector<Element> basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace avw
