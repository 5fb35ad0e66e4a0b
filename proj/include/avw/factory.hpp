#pragma once

// Declarative construction of the absolute-valued algebras studied here:
// Cayley-Dickson algebras, their standard isotopes, the four families of
// principal isotopes of H, the octonion twists O^f, and cracovian algebras.

#include "avw/algebra.hpp"
#include "avw/matrix.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

namespace avw {

class SpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Family {
    CD,         // x y
    H1,         // a x y b              H(a, b)
    H2,         // conj(x) a y b        *H(a, b)
    H3,         // a x b conj(y)        H*(a, b)
    H4,         // a conj(x) conj(y) b  *H*(a, b)
    StarA,      // conj(x) y
    AStar,      // x conj(y)
    StarAStar,  // conj(x) conj(y)
    Of,         // f(x) f(y)
    Cracovian,  // x* y for the involution attached to a central idempotent
};

std::string family_name(Family f);
Family parse_family(const std::string& name);
/// 1..4 for H1..H4, 0 otherwise.
int principal_index(Family f);
Family principal_family(int n);

/// Generator of a rational isometry of O fixing 1: an 8x8 (or dim x dim)
/// skew-symmetric rational matrix with zero first row and column.
struct IsometrySeed {
    Matrix skew;
};

struct AlgebraSpec {
    Family family = Family::CD;
    std::size_t dim = 4;
    std::optional<Element> a, b;             // H1..H4
    std::optional<Matrix> f;                 // Of, explicit isometry
    std::optional<IsometrySeed> f_seed;      // Of, Cayley-transform seed
    std::shared_ptr<const AlgebraSpec> base; // Cracovian
    std::optional<Element> e;                // Cracovian

    static AlgebraSpec cayley_dickson(std::size_t dim);
    static AlgebraSpec standard(Family family, std::size_t dim);
    static AlgebraSpec principal(int n, Element a, Element b);
    static AlgebraSpec octonion_twist(Matrix f);
    static AlgebraSpec octonion_twist(IsometrySeed seed);
    static AlgebraSpec cracovian(AlgebraSpec base, Element e);

    bool is_principal() const { return principal_index(family) != 0; }
    int n() const { return principal_index(family); }
};

/// Human label such as "*H(i, 1)", "H*", "O^f", "(O^f)_*".
std::string describe(const AlgebraSpec& spec);

/// Builds the algebra. Validates the spec exactly (unit parameters,
/// orthogonality of f, central idempotent e) and checks exact norm
/// multiplicativity of the result. Throws SpecError.
Algebra build(const AlgebraSpec& spec);

/// f = (I - S)(I + S)^{-1}; orthogonal, rational, fixes e0.
Matrix cayley_isometry(const IsometrySeed& seed);

/// x -> 2(x|e)e - x as a matrix. Throws SpecError unless e is a nonzero
/// central idempotent of A and A is not the two-dimensional *C* case.
Matrix involution_from_idempotent(const Algebra& a, const Element& e);

/// Checks (x*)* = x, x x* = x* x and (xy)* = y* x* exactly.
bool is_involution(const Algebra& a, const Matrix& star);

/// The cracovian algebra A_* with product x (.) y = x* y.
Algebra cracovian(const Algebra& a, const Element& e);

bool is_idempotent(const Algebra& a, const Element& e);
/// Nonzero e with e e = e and L_e = R_e.
bool is_central_idempotent(const Algebra& a, const Element& e);
/// Nonzero e with e e = e and L_e R_e = R_e L_e.
bool is_flexible_idempotent(const Algebra& a, const Element& e);

}  // namespace avw
