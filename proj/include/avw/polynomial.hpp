#pragma once

// Sparse distributed multivariate polynomials over the rationals, and
// symbolic algebra elements whose coordinates are such polynomials.
//
// A monomial packs up to 16 exponents into one 64-bit word, four bits per
// variable, variable 0 in the most significant nibble. Exponents of a single
// variable are limited to 15; the identities checked here have total degree
// at most 6 (one variable, dim 8: 1716 monomials) or 5 with 16 variables
// (two variables, dim 8: 2640 monomials of bidegree (4, 1)), so a coordinate
// polynomial stays below a few thousand terms and ~100 KB.
//
// Terms are kept sorted in graded-lexicographic order (higher total degree
// first, then lexicographic with x0 > x1 > ...) with no zero coefficients,
// so the zero test is syntactic.

#include "avw/rational.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace avw {

class Element;

struct Monomial {
    static constexpr std::size_t kMaxVars = 16;
    static constexpr unsigned kMaxExponent = 15;

    std::uint64_t key = 0;

    static Monomial variable(std::size_t v, unsigned power = 1);

    unsigned exponent(std::size_t v) const { return static_cast<unsigned>((key >> shift(v)) & 0xF); }
    unsigned degree() const;

    friend Monomial operator*(Monomial a, Monomial b) { return {a.key + b.key}; }
    friend bool operator==(Monomial a, Monomial b) { return a.key == b.key; }

    static constexpr unsigned shift(std::size_t v) { return static_cast<unsigned>(4 * (kMaxVars - 1 - v)); }
};

/// Graded-lexicographic "comes first" relation.
bool grlex_before(Monomial a, Monomial b);

class Polynomial {
public:
    struct Term {
        Monomial mono;
        Scalar coeff;
    };

    Polynomial() = default;
    Polynomial(const Scalar& constant);  // NOLINT(google-explicit-constructor)
    static Polynomial variable(std::size_t v);
    /// Builds from arbitrary terms: sorts, merges equal monomials, drops zeros.
    static Polynomial from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    unsigned degree() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Scalar& s);

    Scalar evaluate(const std::vector<Scalar>& point) const;

    /// Uses `name(v)` for variable v, e.g. "x0", "y3".
    std::string to_string(const std::function<std::string(std::size_t)>& name) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    std::vector<Term> terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Scalar& s, Polynomial a);

/// Sum of s_n * p_n over the given pairs in one sort-and-merge pass.
Polynomial linear_combination(const std::vector<std::pair<Scalar, const Polynomial*>>& parts);

/// A generic algebra element: coordinate m is a polynomial.
class AlgPoly {
public:
    AlgPoly() = default;
    explicit AlgPoly(std::size_t dim) : coords_(dim) {}
    explicit AlgPoly(std::vector<Polynomial> coords) : coords_(std::move(coords)) {}

    /// Coordinate m is the indeterminate number (first_var + m).
    static AlgPoly generic(std::size_t dim, std::size_t first_var);
    static AlgPoly constant(const Element& e);

    std::size_t dim() const { return coords_.size(); }
    const Polynomial& operator[](std::size_t m) const { return coords_[m]; }
    Polynomial& operator[](std::size_t m) { return coords_[m]; }
    const std::vector<Polynomial>& coords() const { return coords_; }

    bool is_zero() const;
    Polynomial norm2() const;
    Element evaluate(const std::vector<Scalar>& point) const;

    AlgPoly& operator+=(const AlgPoly& o);
    AlgPoly& operator-=(const AlgPoly& o);

    friend bool operator==(const AlgPoly&, const AlgPoly&) = default;

private:
    std::vector<Polynomial> coords_;
};

AlgPoly operator+(AlgPoly a, const AlgPoly& b);
AlgPoly operator-(AlgPoly a, const AlgPoly& b);

}  // namespace avw
