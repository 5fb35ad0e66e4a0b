#include "avw/algebra.hpp"

#include "avw/symbolic.hpp"

namespace avw {

Algebra::Algebra(std::size_t dim, std::vector<Scalar> structure, std::string label)
    : dim_(dim), structure_(std::move(structure)), label_(std::move(label)) {
    if (!valid_dim(dim)) throw DimensionError("algebra dimension must be 1, 2, 4 or 8");
    if (structure_.size() != dim * dim * dim) throw DimensionError("structure tensor has wrong size");
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) {
                const auto& c = this->structure(i, j, k);
                if (!is_zero(c)) terms_.push_back({i, j, k, c});
            }
}

Algebra Algebra::from_product(std::size_t dim, const std::function<Element(const Element&, const Element&)>& product,
                              std::string label) {
    std::vector<Scalar> t(dim * dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            const Element p = product(Element::basis(dim, i), Element::basis(dim, j));
            if (p.dim() != dim) throw DimensionError("product returned an element of the wrong dimension");
            for (std::size_t k = 0; k < dim; ++k) t[(i * dim + j) * dim + k] = p[k];
        }
    return Algebra(dim, std::move(t), std::move(label));
}

Algebra Algebra::cayley_dickson(std::size_t dim) {
    static const char* names[] = {"", "R", "C", "", "H", "", "", "", "O"};
    return from_product(dim, cd_mul, names[dim]);
}

Element Algebra::basis_product(std::size_t i, std::size_t j) const {
    Element e(dim_);
    for (std::size_t k = 0; k < dim_; ++k) e[k] = structure(i, j, k);
    return e;
}

Element alg_mul(const Algebra& a, const Element& x, const Element& y) {
    if (x.dim() != a.dim() || y.dim() != a.dim()) throw DimensionError("dimension mismatch in algebra product");
    Element out(a.dim());
    for (const auto& t : a.terms()) {
        if (is_zero(x[t.i]) || is_zero(y[t.j])) continue;
        out[t.k] += t.c * x[t.i] * y[t.j];
    }
    return out;
}

Matrix mul_operator_matrix(const Algebra& a, const Element& x, Side side) {
    if (x.dim() != a.dim()) throw DimensionError("dimension mismatch in operator matrix");
    const std::size_t n = a.dim();
    Matrix m(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        const Element e = Element::basis(n, c);
        const Element col = side == Side::Left ? alg_mul(a, x, e) : alg_mul(a, e, x);
        for (std::size_t r = 0; r < n; ++r) m(r, c) = col[r];
    }
    return m;
}

Element commutator(const Algebra& a, const Element& x, const Element& y) {
    return alg_mul(a, x, y) - alg_mul(a, y, x);
}

bool norm_multiplicative(const Algebra& a) {
    const std::size_t n = a.dim();
    const AlgPoly x = AlgPoly::generic(n, 0);
    const AlgPoly y = AlgPoly::generic(n, n);
    const AlgPoly xy = alg_mul(a, x, y);
    const Polynomial lhs = xy.norm2();
    const Polynomial rhs = x.norm2() * y.norm2();
    return (lhs - rhs).is_zero();
}

}  // namespace avw
