#include "support.hpp"

#include "avw/classify.hpp"
#include "avw/subalgebra.hpp"

#include <doctest.h>

using namespace avw;
using namespace avw::test;

namespace {

std::size_t index_of(Plane p) { return static_cast<std::size_t>(p); }

}  // namespace

TEST_CASE("verify_closed") {
    const Algebra h = Algebra::cayley_dickson(4);
    CHECK(verify_closed(h, {one4(), qi()}));
    CHECK_FALSE(verify_closed(h, {one4(), qi(), qj()}));
    CHECK(verify_closed(h, {one4(), qi(), qj(), qk()}));
    CHECK_THROWS_AS(verify_closed(h, {qi(), Scalar(2) * qi()}), std::invalid_argument);
    CHECK_THROWS_AS(verify_closed(h, {}), std::invalid_argument);
}

TEST_CASE("generated_dim") {
    const Algebra h = Algebra::cayley_dickson(4);
    CHECK(generated_dim(h, one4()).dim == 1);
    const Generated g = generated_dim(h, quat(1, 1, 0, 0));
    CHECK(g.dim == 2);
    Span s(4);
    for (const auto& v : g.basis) s.add(v);
    CHECK(s.contains(one4()));
    CHECK(s.contains(qi()));
    CHECK_THROWS_AS(generated_dim(h, Element(4)), std::invalid_argument);
    const Algebra b = build(published_cracovian());
    Rng rng(71);
    CHECK(generated_dim(b, rng.nonzero_element(8, 3)).dim == 8);
}

TEST_CASE("degree_estimate") {
    CHECK(degree_estimate(Algebra::cayley_dickson(4), 20) == 2);
    CHECK(degree_estimate(build(AlgebraSpec::principal(4, one4(), one4())), 20) == 2);
    CHECK(degree_estimate(Algebra::cayley_dickson(8), 20) == 2);
    CHECK(degree_estimate(build(published_cracovian()), 20) == 8);
    CHECK_THROWS_AS(degree_estimate(Algebra::cayley_dickson(4), 0), std::invalid_argument);
}

TEST_CASE("flexible_2dim") {
    const Algebra star_o = build(AlgebraSpec::cracovian(AlgebraSpec::octonion_twist(Matrix::identity(8)), Element::one(8)));
    const auto fo = flexible_2dim(star_o, Element::one(8));
    REQUIRE(fo);
    CHECK(fo->u == Element::basis(8, 1));
    CHECK(fo->alpha == 1);
    CHECK(fo->beta == -1);
    CHECK(alg_mul(star_o, fo->u, fo->u) == Element::one(8));

    const Algebra h = Algebra::cayley_dickson(4);
    const auto fh = flexible_2dim(h, one4());
    REQUIRE(fh);
    CHECK(fh->alpha == 1);
    CHECK(fh->beta == 1);
    CHECK(cd_mul(fh->u, fh->u) == -one4());

    const Element a = rational_unit(Scalar(1, 2) * qi());
    const Algebra sas = build(AlgebraSpec::principal(4, a, conjugate(a)));
    const auto fs = flexible_2dim(sas, one4());
    REQUIRE(fs);
    CHECK(verify_closed(sas, {fs->e, fs->u}));

    CHECK_THROWS_AS(flexible_2dim(h, qi()), std::invalid_argument);
    CHECK_THROWS_AS(flexible_2dim(Algebra::cayley_dickson(1), Element::one(1)), std::invalid_argument);
}

TEST_CASE("plane types of the two-dimensional algebras") {
    for (Plane p : kPlanes) {
        const Family f = p == Plane::C ? Family::CD : p == Plane::StarC ? Family::StarA : p == Plane::CStar ? Family::AStar : Family::StarAStar;
        const Algebra a = build(AlgebraSpec::standard(f, 2));
        CHECK(plane_type(a, {Element::one(2), Element::basis(2, 1)}) == p);
    }
}

TEST_CASE("dim2_criteria examples") {
    CHECK(dim2_criteria(AlgebraSpec::principal(2, qi(), one4()))[index_of(Plane::StarC)]);
    const Element u = rational_unit(Scalar(1, 2) * qi());
    CHECK(dim2_criteria(AlgebraSpec::principal(1, u, u))[index_of(Plane::C)]);
    CHECK(dim2_criteria(AlgebraSpec::principal(4, qi(), qj()))[index_of(Plane::C)]);
    const auto none = dim2_criteria(AlgebraSpec::principal(1, rational_unit(Scalar(1, 2) * qi()), rational_unit(Scalar(1, 3) * qj())));
    CHECK(none == std::array<bool, 4>{false, false, false, false});
    CHECK_THROWS_AS(dim2_criteria(AlgebraSpec::cayley_dickson(4)), SpecError);
}

TEST_CASE("discovered planes agree with the criteria") {
    Rng rng(72);
    std::vector<AlgebraSpec> specs;
    for (const auto& i : IdentitySpec::all_one_var())
        for (const auto& l : table_row(i).finite) specs.push_back(*representative(l));
    for (int t = 0; t < 40; ++t) {
        const auto [a, b] = mixed_pair(rng);
        specs.push_back(AlgebraSpec::principal(static_cast<int>(rng.uniform(1, 4)), a, b));
    }
    for (const auto& s : specs) {
        INFO(describe(s));
        const SubalgebraReport rep = subalgebra_report(s);
        REQUIRE(rep.criteria);
        const Algebra alg = build(s);
        for (const auto& d : rep.discovered) {
            CHECK(verify_closed(alg, d.basis));
            CHECK((*rep.criteria)[index_of(d.type)]);
        }
    }
}

TEST_CASE("table representatives contain two-dimensional subalgebras") {
    for (const auto& i : IdentitySpec::all_one_var())
        for (const auto& l : table_row(i).finite) {
            const AlgebraSpec s = *representative(l);
            INFO(describe(s));
            const SubalgebraReport rep = subalgebra_report(s);
            CHECK_FALSE(rep.discovered.empty());
            const auto& c = *rep.criteria;
            CHECK((c[0] || c[1] || c[2] || c[3]));
        }
}

TEST_CASE("four-dimensional subalgebra search") {
    const Algebra o = Algebra::cayley_dickson(8);
    const auto found = search_4dim_subalgebra(o, 20);
    REQUIRE(found);
    CHECK(found->size() == 4);
    CHECK(verify_closed(o, *found));
    CHECK_THROWS_AS(search_4dim_subalgebra(Algebra::cayley_dickson(4), 10), DimensionError);
}
