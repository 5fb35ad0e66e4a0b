#include "avw/random.hpp"

namespace avw {

long Rng::uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
}

Scalar Rng::rational(long height) {
    Scalar q(uniform(-height, height), uniform(1, height));
    q.canonicalize();
    return q;
}

Element Rng::element(std::size_t dim, long height) {
    Element e(dim);
    for (std::size_t i = 0; i < dim; ++i) e[i] = rational(height);
    return e;
}

Element Rng::nonzero_element(std::size_t dim, long height) {
    for (;;) {
        Element e = element(dim, height);
        if (!e.is_zero()) return e;
    }
}

Element Rng::imaginary(std::size_t dim, long height) {
    Element e = element(dim, height);
    e[0] = 0;
    return e;
}

Element Rng::unit_quaternion(long height) {
    Element u = rational_unit(imaginary(4, height));
    return coin() ? u : -u;
}

Element Rng::imaginary_unit(long height) {
    const Scalar s = rational(height);
    const Scalar t = rational(height);
    Element u = imaginary_unit_from(s, t);
    return coin() ? u : -u;
}

IsometrySeed Rng::isometry_seed(std::size_t dim, long height) {
    Matrix s(dim, dim);
    for (std::size_t r = 1; r < dim; ++r)
        for (std::size_t c = r + 1; c < dim; ++c) {
            s(r, c) = rational(height);
            s(c, r) = -s(r, c);
        }
    return IsometrySeed{s};
}

IsometrySeed published_isometry_seed() { return Rng(kDefaultSeed).isometry_seed(8, 2); }

AlgebraSpec published_cracovian() {
    return AlgebraSpec::cracovian(AlgebraSpec::octonion_twist(published_isometry_seed()), Element::one(8));
}

}  // namespace avw
