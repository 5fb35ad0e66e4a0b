#include "support.hpp"

#include "avw/classify.hpp"

namespace avw::test {

Quat hamilton(const Quat& x, const Quat& y) {
    const auto& [a1, b1, c1, d1] = x;
    const auto& [a2, b2, c2, d2] = y;
    return {a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2, a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2, a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2};
}

Quat quat_conj(const Quat& x) { return {x[0], -x[1], -x[2], -x[3]}; }

Quat to_quat(const Element& e) { return {e[0], e[1], e[2], e[3]}; }

Element from_quat(const Quat& q) { return Element(std::vector<Scalar>(q.begin(), q.end())); }

Element octonion_oracle(const Element& x, const Element& y) {
    const Quat p = {x[0], x[1], x[2], x[3]}, q = {x[4], x[5], x[6], x[7]};
    const Quat r = {y[0], y[1], y[2], y[3]}, s = {y[4], y[5], y[6], y[7]};
    const Quat pr = hamilton(p, r), sq = hamilton(quat_conj(s), q);
    const Quat sp = hamilton(s, p), qr = hamilton(q, quat_conj(r));
    Element out(8);
    for (std::size_t k = 0; k < 4; ++k) {
        out[k] = pr[k] - sq[k];
        out[k + 4] = sp[k] + qr[k];
    }
    return out;
}

Element quat(long w, long x, long y, long z) { return Element::of({w, x, y, z}); }

Element mixed_unit(Rng& rng) {
    const Element sign = rng.coin() ? one4() : -one4();
    switch (rng.uniform(0, 3)) {
        case 0: return sign;
        case 1: return cd_mul(sign, rational_unit(rng.rational(3) * qi()));
        case 2: return rng.imaginary_unit();
        default: return rng.unit_quaternion();
    }
}

std::pair<Element, Element> mixed_pair(Rng& rng) {
    Element a = mixed_unit(rng);
    if (rng.uniform(0, 3) != 0) return {a, mixed_unit(rng)};
    Element b = rng.coin() ? a : conjugate(a);
    if (rng.coin()) b = -b;
    return {std::move(a), std::move(b)};
}

AlgebraSpec random_principal(Rng& rng, int n) {
    Element a = rng.unit_quaternion();
    Element b = rng.unit_quaternion();
    return AlgebraSpec::principal(n, std::move(a), std::move(b));
}

std::vector<NamedSpec> corpus() {
    std::vector<NamedSpec> out;
    for (std::size_t d : {1, 2, 4, 8})
        for (Family f : {Family::CD, Family::StarA, Family::AStar, Family::StarAStar}) {
            AlgebraSpec s = AlgebraSpec::standard(f, d);
            out.push_back({describe(s), s});
        }
    for (const auto& id : IdentitySpec::all_one_var())
        for (const auto& l : table_row(id).finite) {
            AlgebraSpec s = *representative(l);
            const std::string name = describe(s);
            bool dup = false;
            for (const auto& e : out) dup = dup || e.name == name;
            if (!dup) out.push_back({name, s});
        }
    for (int n : {2, 3})
        for (const auto& t : circle_parameters(3)) {
            AlgebraSpec s = circle_point_t(n, t);
            out.push_back({describe(s), s});
        }
    Rng rng(0x434f5250);
    for (int k = 0; k < 8; ++k) {
        AlgebraSpec s = random_principal(rng, k % 4 + 1);
        out.push_back({describe(s), s});
    }
    for (int k = 0; k < 2; ++k) {
        AlgebraSpec of = AlgebraSpec::octonion_twist(rng.isometry_seed());
        out.push_back({"O^f #" + std::to_string(k), of});
        out.push_back({"(O^f)_* #" + std::to_string(k), AlgebraSpec::cracovian(of, Element::one(8))});
    }
    out.push_back({"(H)_*", AlgebraSpec::cracovian(AlgebraSpec::cayley_dickson(4), Element::one(4))});
    return out;
}

}  // namespace avw::test
