#pragma once

// Elements of R, C, H, O as exact coordinate vectors over the canonical
// basis {e0 = 1, e1, ..., e_{n-1}}. For dim 4 the basis is {1, i, j, k}.
//
// Cayley-Dickson convention: an element of the doubled algebra is a pair
// (a, b) = a + b*e_{n/2}, with product
//
//     (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)).
//
// The second half of the coordinates holds b, so e_{n/2 + m} = (0, e_m).
// With this convention i*j = k in H, and the octonion table is the one
// produced by applying the same rule once more.

#include "avw/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace avw {

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// True for 1, 2, 4, 8.
constexpr bool valid_dim(std::size_t dim) { return dim == 1 || dim == 2 || dim == 4 || dim == 8; }

class Element {
public:
    Element() = default;
    explicit Element(std::size_t dim);
    explicit Element(std::vector<Scalar> coords);

    static Element zero(std::size_t dim) { return Element(dim); }
    static Element one(std::size_t dim);
    /// The canonical basis vector e_index.
    static Element basis(std::size_t dim, std::size_t index);
    /// Integer coordinates, convenient in tests: Element::of({0, 1, 0, 0}) is i.
    static Element of(std::initializer_list<long> coords);

    std::size_t dim() const { return coords_.size(); }
    const std::vector<Scalar>& coords() const { return coords_; }
    const Scalar& operator[](std::size_t i) const { return coords_[i]; }
    Scalar& operator[](std::size_t i) { return coords_[i]; }

    bool is_zero() const;

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Scalar& s);

    friend bool operator==(const Element&, const Element&) = default;

private:
    std::vector<Scalar> coords_;
};

Element operator+(Element a, const Element& b);
Element operator-(Element a, const Element& b);
Element operator-(Element a);
Element operator*(const Scalar& s, Element a);
Element operator*(Element a, const Scalar& s);

/// Cayley-Dickson product. Throws DimensionError on mismatched or invalid dims.
Element cd_mul(const Element& x, const Element& y);

/// Standard involution: negates every coordinate but the first.
Element conjugate(const Element& x);

/// Euclidean inner product (x|y) = Re(x conj(y)) = sum of coordinate products.
Scalar inner(const Element& x, const Element& y);

/// ||x||^2.
Scalar norm2(const Element& x);

Scalar re(const Element& x);
Element im(const Element& x);
std::pair<Scalar, Element> re_im_split(const Element& x);

/// Inverse x^{-1} = conj(x) / ||x||^2 for a nonzero Cayley-Dickson element.
Element cd_inverse(const Element& x);

/// Maps a purely imaginary rational q to the rational unit (1+q)^2 / (1+||q||^2).
Element rational_unit(const Element& q);

/// Inverse stereographic projection of (s, t) onto the unit sphere of Im(H):
/// a purely imaginary rational quaternion of norm one.
Element imaginary_unit_from(const Scalar& s, const Scalar& t);

/// Element as a bracketed list of "p/q" strings.
std::string to_string(const Element& x);
/// Human form like "3/5 + 4/5*i" (dim <= 4 uses 1,i,j,k; otherwise e0..e7).
std::string pretty(const Element& x);
std::ostream& operator<<(std::ostream& os, const Element& x);

}  // namespace avw
