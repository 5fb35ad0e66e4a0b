#include "avw/factory.hpp"

#include <array>

namespace avw {

namespace {

constexpr std::array<std::pair<Family, const char*>, 10> kFamilyNames{{
    {Family::CD, "CD"},
    {Family::H1, "H1"},
    {Family::H2, "H2"},
    {Family::H3, "H3"},
    {Family::H4, "H4"},
    {Family::StarA, "StarA"},
    {Family::AStar, "AStar"},
    {Family::StarAStar, "StarAStar"},
    {Family::Of, "Of"},
    {Family::Cracovian, "Cracovian"},
}};

std::string base_name(std::size_t dim) {
    switch (dim) {
        case 1: return "R";
        case 2: return "C";
        case 4: return "H";
        default: return "O";
    }
}

bool is_unit(const Element& x) { return norm2(x) == 1; }

Element conj_if(bool c, const Element& x) { return c ? conjugate(x) : x; }

}  // namespace

std::string family_name(Family f) {
    for (const auto& [fam, name] : kFamilyNames)
        if (fam == f) return name;
    return "?";
}

Family parse_family(const std::string& name) {
    for (const auto& [fam, n] : kFamilyNames)
        if (name == n) return fam;
    throw SpecError("unknown algebra family '" + name + "'");
}

int principal_index(Family f) {
    switch (f) {
        case Family::H1: return 1;
        case Family::H2: return 2;
        case Family::H3: return 3;
        case Family::H4: return 4;
        default: return 0;
    }
}

Family principal_family(int n) {
    switch (n) {
        case 1: return Family::H1;
        case 2: return Family::H2;
        case 3: return Family::H3;
        case 4: return Family::H4;
        default: throw SpecError("principal isotope index must be 1..4");
    }
}

AlgebraSpec AlgebraSpec::cayley_dickson(std::size_t dim) { return standard(Family::CD, dim); }

AlgebraSpec AlgebraSpec::standard(Family family, std::size_t dim) {
    AlgebraSpec s;
    s.family = family;
    s.dim = dim;
    return s;
}

AlgebraSpec AlgebraSpec::principal(int n, Element a, Element b) {
    AlgebraSpec s;
    s.family = principal_family(n);
    s.dim = 4;
    s.a = std::move(a);
    s.b = std::move(b);
    return s;
}

AlgebraSpec AlgebraSpec::octonion_twist(Matrix f) {
    AlgebraSpec s;
    s.family = Family::Of;
    s.dim = f.rows();
    s.f = std::move(f);
    return s;
}

AlgebraSpec AlgebraSpec::octonion_twist(IsometrySeed seed) {
    AlgebraSpec s;
    s.family = Family::Of;
    s.dim = seed.skew.rows();
    s.f_seed = std::move(seed);
    return s;
}

AlgebraSpec AlgebraSpec::cracovian(AlgebraSpec base, Element e) {
    AlgebraSpec s;
    s.family = Family::Cracovian;
    s.dim = base.dim;
    s.base = std::make_shared<const AlgebraSpec>(std::move(base));
    s.e = std::move(e);
    return s;
}

std::string describe(const AlgebraSpec& spec) {
    const std::string A = base_name(spec.dim);
    switch (spec.family) {
        case Family::CD: return A;
        case Family::StarA: return "*" + A;
        case Family::AStar: return A + "*";
        case Family::StarAStar: return "*" + A + "*";
        case Family::Of: return A + "^f";
        case Family::Cracovian: return "(" + (spec.base ? describe(*spec.base) : A) + ")_*";
        default: break;
    }
    static const char* prefix[] = {"", "", "*", "", "*"};
    static const char* suffix[] = {"", "", "", "*", "*"};
    const int n = spec.n();
    std::string args;
    if (spec.a && spec.b) args = "(" + pretty(*spec.a) + ", " + pretty(*spec.b) + ")";
    return std::string(prefix[n]) + "H" + suffix[n] + args;
}

Matrix cayley_isometry(const IsometrySeed& seed) {
    const Matrix& s = seed.skew;
    const std::size_t n = s.rows();
    if (s.cols() != n || !valid_dim(n)) throw SpecError("isometry seed must be a square matrix of size 1, 2, 4 or 8");
    if (!(s.transpose() == Scalar(-1) * s)) throw SpecError("isometry seed is not skew-symmetric");
    for (std::size_t i = 0; i < n; ++i)
        if (!is_zero(s(0, i))) throw SpecError("isometry seed must have zero first row and column");
    const Matrix id = Matrix::identity(n);
    const auto inv = inverse(id + s);
    if (!inv) throw SpecError("I + S is singular");  // impossible for real skew S
    return (id - s) * *inv;
}

bool is_idempotent(const Algebra& a, const Element& e) { return alg_mul(a, e, e) == e; }

bool is_central_idempotent(const Algebra& a, const Element& e) {
    if (e.is_zero() || !is_idempotent(a, e)) return false;
    return mul_operator_matrix(a, e, Side::Left) == mul_operator_matrix(a, e, Side::Right);
}

bool is_flexible_idempotent(const Algebra& a, const Element& e) {
    if (e.is_zero() || !is_idempotent(a, e)) return false;
    const Matrix l = mul_operator_matrix(a, e, Side::Left);
    const Matrix r = mul_operator_matrix(a, e, Side::Right);
    return l * r == r * l;
}

bool is_involution(const Algebra& a, const Matrix& star) {
    const std::size_t n = a.dim();
    if (star.rows() != n || star.cols() != n) return false;
    if (!(star * star == Matrix::identity(n))) return false;
    std::vector<Element> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(star.column(i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // (e_i e_j)* = e_j* e_i*
            if (!(star * a.basis_product(i, j) == alg_mul(a, images[j], images[i]))) return false;
            // polarized form of x x* = x* x
            if (j < i) continue;
            const Element ei = Element::basis(n, i), ej = Element::basis(n, j);
            const Element lhs = alg_mul(a, ei, images[j]) + alg_mul(a, ej, images[i]);
            const Element rhs = alg_mul(a, images[i], ej) + alg_mul(a, images[j], ei);
            if (!(lhs == rhs)) return false;
        }
    return true;
}

Matrix involution_from_idempotent(const Algebra& a, const Element& e) {
    if (e.dim() != a.dim()) throw SpecError("idempotent has the wrong dimension");
    if (!is_central_idempotent(a, e)) throw SpecError("e is not a nonzero central idempotent");
    if (a.dim() == 2 && !(mul_operator_matrix(a, e, Side::Left) == Matrix::identity(2)))
        throw SpecError("the algebra is *C*, which has no involution of this form");
    const std::size_t n = a.dim();
    Matrix star(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) star(r, c) = 2 * e[r] * e[c] - (r == c ? 1 : 0);
    if (!is_involution(a, star)) throw SpecError("x -> 2(x|e)e - x is not an involution of this algebra");
    return star;
}

Algebra cracovian(const Algebra& a, const Element& e) {
    const Matrix star = involution_from_idempotent(a, e);
    return Algebra::from_product(
        a.dim(), [&](const Element& x, const Element& y) { return alg_mul(a, star * x, y); },
        "(" + a.label() + ")_*");
}

Algebra build(const AlgebraSpec& spec) {
    const std::size_t n = spec.dim;
    if (!valid_dim(n)) throw SpecError("algebra dimension must be 1, 2, 4 or 8");
    Algebra out;
    switch (spec.family) {
        case Family::CD:
        case Family::StarA:
        case Family::AStar:
        case Family::StarAStar: {
            const bool cl = spec.family == Family::StarA || spec.family == Family::StarAStar;
            const bool cr = spec.family == Family::AStar || spec.family == Family::StarAStar;
            out = Algebra::from_product(
                n, [&](const Element& x, const Element& y) { return cd_mul(conj_if(cl, x), conj_if(cr, y)); });
            break;
        }
        case Family::H1:
        case Family::H2:
        case Family::H3:
        case Family::H4: {
            if (n != 4) throw SpecError("principal isotopes are four-dimensional");
            if (!spec.a || !spec.b) throw SpecError("principal isotope needs parameters a and b");
            const Element& a = *spec.a;
            const Element& b = *spec.b;
            if (a.dim() != 4 || b.dim() != 4) throw SpecError("parameters a, b must be quaternions");
            if (!is_unit(a) || !is_unit(b)) throw SpecError("parameters a, b must have norm exactly 1");
            // Products are evaluated left to right; H is associative.
            std::function<Element(const Element&, const Element&)> product;
            switch (spec.family) {
                case Family::H1:
                    product = [&](const Element& x, const Element& y) { return cd_mul(cd_mul(cd_mul(a, x), y), b); };
                    break;
                case Family::H2:
                    product = [&](const Element& x, const Element& y) {
                        return cd_mul(cd_mul(cd_mul(conjugate(x), a), y), b);
                    };
                    break;
                case Family::H3:
                    product = [&](const Element& x, const Element& y) {
                        return cd_mul(cd_mul(cd_mul(a, x), b), conjugate(y));
                    };
                    break;
                default:
                    product = [&](const Element& x, const Element& y) {
                        return cd_mul(cd_mul(cd_mul(a, conjugate(x)), conjugate(y)), b);
                    };
                    break;
            }
            out = Algebra::from_product(4, product);
            break;
        }
        case Family::Of: {
            Matrix f;
            if (spec.f)
                f = *spec.f;
            else if (spec.f_seed)
                f = cayley_isometry(*spec.f_seed);
            else
                throw SpecError("O^f needs an isometry f or a seed");
            if (f.rows() != n || f.cols() != n) throw SpecError("isometry f has the wrong size");
            if (!(f.transpose() * f == Matrix::identity(n))) throw SpecError("f is not orthogonal");
            if (!(f * Element::one(n) == Element::one(n))) throw SpecError("f does not fix 1");
            out = Algebra::from_product(n, [&](const Element& x, const Element& y) { return cd_mul(f * x, f * y); });
            break;
        }
        case Family::Cracovian: {
            if (!spec.base) throw SpecError("cracovian algebra needs a base spec");
            if (!spec.e) throw SpecError("cracovian algebra needs the central idempotent e");
            if (spec.base->dim != n) throw SpecError("cracovian base has a different dimension");
            out = cracovian(build(*spec.base), *spec.e);
            break;
        }
    }
    if (!norm_multiplicative(out)) throw SpecError("constructed algebra is not absolute-valued");
    out.set_label(describe(spec));
    out.set_origin(std::make_shared<const AlgebraSpec>(spec));
    return out;
}

}  // namespace avw
