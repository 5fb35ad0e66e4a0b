#pragma once

// Finite-dimensional real algebras given by exact structure constants:
// e_i e_j = sum_k c(i, j, k) e_k.

#include "avw/element.hpp"
#include "avw/matrix.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace avw {

struct AlgebraSpec;

enum class Side { Left, Right };

class Algebra {
public:
    struct Term {
        std::size_t i, j, k;
        Scalar c;
    };

    Algebra() = default;
    /// Takes a dim*dim*dim tensor laid out as c[(i*dim + j)*dim + k].
    Algebra(std::size_t dim, std::vector<Scalar> structure, std::string label = {});

    /// Tabulates an arbitrary bilinear product on basis pairs.
    static Algebra from_product(std::size_t dim, const std::function<Element(const Element&, const Element&)>& product,
                                std::string label = {});
    /// The Cayley-Dickson algebra R, C, H or O.
    static Algebra cayley_dickson(std::size_t dim);

    std::size_t dim() const { return dim_; }
    const Scalar& structure(std::size_t i, std::size_t j, std::size_t k) const {
        return structure_[(i * dim_ + j) * dim_ + k];
    }
    /// Nonzero structure constants in (i, j, k) order.
    const std::vector<Term>& terms() const { return terms_; }
    /// The basis product e_i e_j.
    Element basis_product(std::size_t i, std::size_t j) const;

    const std::string& label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    const std::shared_ptr<const AlgebraSpec>& origin() const { return origin_; }
    void set_origin(std::shared_ptr<const AlgebraSpec> spec) { origin_ = std::move(spec); }

    bool same_structure(const Algebra& other) const { return dim_ == other.dim_ && structure_ == other.structure_; }

private:
    std::size_t dim_ = 0;
    std::vector<Scalar> structure_;
    std::vector<Term> terms_;
    std::string label_;
    std::shared_ptr<const AlgebraSpec> origin_;
};

/// Bilinear contraction of the structure tensor with x and y.
Element alg_mul(const Algebra& a, const Element& x, const Element& y);

/// Matrix of L_x (y -> xy) or R_x (y -> yx) over the canonical basis.
Matrix mul_operator_matrix(const Algebra& a, const Element& x, Side side);

/// Commutator [x, y] = xy - yx.
Element commutator(const Algebra& a, const Element& x, const Element& y);

/// True iff ||xy||^2 = ||x||^2 ||y||^2 holds identically, decided exactly by
/// expanding both sides as polynomials in the coordinates of x and y.
bool norm_multiplicative(const Algebra& a);

}  // namespace avw
