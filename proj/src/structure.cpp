#include "avw/structure.hpp"

#include "avw/algebra.hpp"
#include "avw/matrix.hpp"

namespace avw {

namespace {

const Algebra& quaternions() {
    static const Algebra h = Algebra::cayley_dickson(4);
    return h;
}

void require_unit_quaternion(const Element& x) {
    if (x.dim() != 4) throw SpecError("principal isotope parameters must be quaternions");
    if (norm2(x) != 1) throw SpecError("principal isotope parameters must have norm exactly 1");
}

}  // namespace

std::vector<Element> isotope_kernel(const Element& a, const Element& b, const Element& a2, const Element& b2, int eps,
                                    int delta) {
    const Algebra& h = quaternions();
    const Matrix top =
        mul_operator_matrix(h, a2, Side::Left) - Scalar(eps) * mul_operator_matrix(h, a, Side::Right);
    const Matrix bottom =
        mul_operator_matrix(h, b2, Side::Left) - Scalar(delta) * mul_operator_matrix(h, b, Side::Right);
    return kernel(top.stacked(bottom));
}

std::optional<IsoWitness> isotope_isomorphic(int n, const Element& a, const Element& b, int m, const Element& a2,
                                             const Element& b2) {
    if (n < 1 || n > 4 || m < 1 || m > 4) throw SpecError("principal isotope index must be 1..4");
    for (const Element* x : {&a, &b, &a2, &b2}) require_unit_quaternion(*x);
    if (n != m) return std::nullopt;
    for (const auto& [eps, delta] : kSignOrder) {
        auto ker = isotope_kernel(a, b, a2, b2, eps, delta);
        if (!ker.empty()) return IsoWitness{std::move(ker.front()), eps, delta};
    }
    return std::nullopt;
}

std::optional<IsoWitness> isotope_isomorphic(const AlgebraSpec& s1, const AlgebraSpec& s2) {
    for (const AlgebraSpec* s : {&s1, &s2})
        if (!s->is_principal() || !s->a || !s->b) throw SpecError("isomorphism test needs two principal isotopes of H");
    return isotope_isomorphic(s1.n(), *s1.a, *s1.b, s2.n(), *s2.a, *s2.b);
}

bool witness_valid(const IsoWitness& w, const Element& a, const Element& b, const Element& a2, const Element& b2) {
    if (w.p.is_zero() || (w.eps != 1 && w.eps != -1) || (w.delta != 1 && w.delta != -1)) return false;
    return cd_mul(a2, w.p) == Scalar(w.eps) * cd_mul(w.p, a) && cd_mul(b2, w.p) == Scalar(w.delta) * cd_mul(w.p, b);
}

Element transport(const Element& a, const Element& p, int eps) {
    return Scalar(eps) * cd_mul(cd_mul(p, a), cd_inverse(p));
}

std::optional<Element> conjugacy_witness(const Element& a, const Element& b) {
    if (a.dim() != 4 || b.dim() != 4) throw DimensionError("conjugacy is decided in H");
    if (norm2(a) != norm2(b) || re(a) != re(b)) return std::nullopt;
    const Element ia = im(a), ib = im(b);
    if (!(ib == -ia)) return ia + ib;
    // b = conj(a): any imaginary u orthogonal to a works, since u Im(a) = -Im(a) u.
    const Scalar n2 = norm2(ia);
    for (std::size_t k = 1; k < 4; ++k) {
        Element u = Element::basis(4, k);
        if (!is_zero(n2)) u -= Scalar(inner(u, ia) / n2) * ia;
        if (!u.is_zero()) return u;
    }
    return std::nullopt;  // unreachable: Im(H) is three-dimensional
}

}  // namespace avw
