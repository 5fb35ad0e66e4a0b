#include "support.hpp"

#include "avw/symbolic.hpp"

#include <doctest.h>

using namespace avw;
using namespace avw::test;

namespace {

Polynomial x(std::size_t v) { return Polynomial::variable(v); }

std::vector<Scalar> point(Rng& rng, std::size_t n) {
    std::vector<Scalar> p(n);
    for (auto& c : p) c = rng.rational(4);
    return p;
}

}  // namespace

TEST_CASE("monomials and grlex order") {
    const Monomial a = Monomial::variable(0, 2), b = Monomial::variable(3);
    CHECK((a * b).degree() == 3);
    CHECK((a * b).exponent(0) == 2);
    CHECK((a * b).exponent(3) == 1);
    CHECK(grlex_before(a, b));  // higher degree first
    CHECK(grlex_before(Monomial::variable(0), Monomial::variable(1)));
    CHECK_FALSE(grlex_before(b, b));
}

TEST_CASE("polynomial arithmetic is canonical") {
    const Polynomial p = x(0) + x(1);
    const Polynomial q = x(0) - x(1);
    CHECK(p * q == x(0) * x(0) - x(1) * x(1));
    CHECK((p - p).is_zero());
    CHECK(Polynomial::from_terms({{Monomial::variable(2), 3}, {Monomial::variable(2), -3}}).is_zero());
    CHECK((p * p).to_string([](std::size_t v) { return "x" + std::to_string(v); }) == "x0^2 + 2*x0*x1 + x1^2");
    Polynomial big = x(0);
    for (int k = 0; k < 14; ++k) big = big * x(0);
    CHECK(big.degree() == 15);
    CHECK_THROWS_AS(big * x(1), std::overflow_error);
}

TEST_CASE("polynomial products evaluate pointwise") {
    Rng rng(21);
    for (int t = 0; t < 50; ++t) {
        Polynomial p, q;
        for (int k = 0; k < 4; ++k) {
            p += rng.rational(3) * (x(static_cast<std::size_t>(rng.uniform(0, 5))) * x(static_cast<std::size_t>(rng.uniform(0, 5))));
            q += rng.rational(3) * x(static_cast<std::size_t>(rng.uniform(0, 5)));
        }
        q += rng.rational(3);
        const auto pt = point(rng, 6);
        CHECK((p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt));
        CHECK((p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt));
        CHECK(linear_combination({{Scalar(2), &p}, {Scalar(-1), &q}}) == Scalar(2) * p - q);
    }
}

TEST_CASE("alg_mul examples") {
    const Algebra h = Algebra::cayley_dickson(4);
    CHECK(alg_mul(h, qi(), qj()) == qk());
    const Algebra sh = build(AlgebraSpec::standard(Family::StarA, 4));
    CHECK(alg_mul(sh, qi(), one4()) == -qi());
    const Algebra hs = build(AlgebraSpec::standard(Family::AStar, 4));
    CHECK(alg_mul(hs, one4(), qi()) == -qi());
    CHECK_THROWS_AS(alg_mul(h, qi(), Element::one(8)), DimensionError);
}

TEST_CASE("operator matrices") {
    const Algebra h = Algebra::cayley_dickson(4);
    CHECK(mul_operator_matrix(h, one4(), Side::Left) == Matrix::identity(4));
    CHECK(mul_operator_matrix(h, qi(), Side::Left) * qj() == qk());
    CHECK(mul_operator_matrix(h, qi(), Side::Right) * qj() == -qk());
    // Central basis combinations in H: only multiples of 1.
    for (long w : {0, 1, 2})
        for (long a : {0, 1})
            for (long b : {0, -1})
                for (long c : {0, 1}) {
                    const Element e = quat(w, a, b, c);
                    const bool central = mul_operator_matrix(h, e, Side::Left) == mul_operator_matrix(h, e, Side::Right);
                    CHECK(central == im(e).is_zero());
                }
    Rng rng(22);
    for (const auto& ns : corpus()) {
        const Algebra a = build(ns.spec);
        const Element u = rng.element(a.dim(), 3), v = rng.element(a.dim(), 3);
        CHECK(mul_operator_matrix(a, u, Side::Left) * v == alg_mul(a, u, v));
        CHECK(mul_operator_matrix(a, u, Side::Right) * v == alg_mul(a, v, u));
    }
}

TEST_CASE("norm multiplicativity at random points for every constructed algebra") {
    Rng rng(23);
    for (const auto& ns : corpus()) {
        INFO(ns.name);
        const Algebra a = build(ns.spec);
        for (int t = 0; t < 100; ++t) {
            const Element u = rng.element(a.dim(), 3), v = rng.element(a.dim(), 3);
            CHECK(norm2(alg_mul(a, u, v)) == norm2(u) * norm2(v));
        }
    }
}

TEST_CASE("norm_multiplicative rejects a non-absolute-valued product") {
    const Algebra pointwise = Algebra::from_product(2, [](const Element& u, const Element& v) {
        Element w(2);
        w[0] = u[0] * v[0];
        w[1] = u[1] * v[1];
        return w;
    });
    CHECK_FALSE(norm_multiplicative(pointwise));
    CHECK(norm_multiplicative(Algebra::cayley_dickson(8)));
}

TEST_CASE("parallel symbolic product equals the serial reference") {
    for (const auto& ns : corpus()) {
        INFO(ns.name);
        const Algebra a = build(ns.spec);
        const AlgPoly u = AlgPoly::generic(a.dim(), 0), v = AlgPoly::generic(a.dim(), a.dim());
        const AlgPoly uv = alg_mul(a, u, v);
        CHECK(uv == alg_mul_reference(a, u, v));
        const AlgPoly uu = alg_mul(a, u, u);
        CHECK(alg_mul(a, uu, u) == alg_mul_reference(a, uu, u));
    }
}

TEST_CASE("symbolic products specialize to concrete products") {
    Rng rng(24);
    for (const auto& ns : corpus()) {
        const Algebra a = build(ns.spec);
        const std::size_t d = a.dim();
        const AlgPoly uv = alg_mul(a, AlgPoly::generic(d, 0), AlgPoly::generic(d, d));
        const auto pt = point(rng, 2 * d);
        const Element u(std::vector<Scalar>(pt.begin(), pt.begin() + static_cast<long>(d)));
        const Element v(std::vector<Scalar>(pt.begin() + static_cast<long>(d), pt.end()));
        CHECK(uv.evaluate(pt) == alg_mul(a, u, v));
    }
}
