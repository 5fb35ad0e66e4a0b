#include "avw/subalgebra.hpp"

#include "avw/random.hpp"

#include <algorithm>
#include <stdexcept>

namespace avw {

std::string plane_name(Plane p) {
    switch (p) {
        case Plane::C: return "C";
        case Plane::StarC: return "*C";
        case Plane::CStar: return "C*";
        case Plane::StarCStar: return "*C*";
    }
    return "?";
}

bool verify_closed(const Algebra& a, const std::vector<Element>& basis) {
    if (basis.empty()) throw std::invalid_argument("empty basis");
    for (const auto& b : basis)
        if (b.dim() != a.dim()) throw DimensionError("basis element of wrong dimension");
    if (!independent(basis)) throw std::invalid_argument("basis is linearly dependent");
    Span s(a.dim());
    for (const auto& b : basis) s.add(b);
    for (const auto& x : basis)
        for (const auto& y : basis)
            if (!s.contains(alg_mul(a, x, y))) return false;
    return true;
}

Span close_span(const Algebra& a, const std::vector<Element>& generators, std::size_t cap) {
    Span s(a.dim());
    for (const auto& g : generators) s.add(g);
    bool grew = true;
    while (grew && (cap == 0 || s.size() <= cap)) {
        grew = false;
        const std::vector<Element> current = s.basis();
        for (const auto& x : current) {
            for (const auto& y : current) {
                if (s.add(alg_mul(a, x, y))) grew = true;
                if (cap != 0 && s.size() > cap) return s;
            }
        }
    }
    return s;
}

Generated generated_dim(const Algebra& a, const Element& x) {
    if (x.is_zero()) throw std::invalid_argument("generator must be nonzero");
    Span s = close_span(a, {x});
    return {s.size(), s.basis()};
}

namespace {

// Whether some combination c0 b0 + c1 b1 acts as the identity on the basis
// from the given side.
bool has_unit(const Algebra& a, const std::vector<Element>& basis, Side side) {
    const std::size_t d = a.dim(), m = basis.size();
    Matrix aug(m * d, m + 1);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k) {
            const Element prod = side == Side::Left ? alg_mul(a, basis[k], basis[j]) : alg_mul(a, basis[j], basis[k]);
            for (std::size_t r = 0; r < d; ++r) aug(j * d + r, k) = prod[r];
        }
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t r = 0; r < d; ++r) aug(j * d + r, m) = basis[j][r];
    const auto ech = rref(aug);
    return std::find(ech.pivots.begin(), ech.pivots.end(), m) == ech.pivots.end();
}

bool is_imaginary(const Element& x) { return is_zero(x[0]); }

std::vector<Element> sorted_basis(std::vector<Element> basis) {
    auto lead = [](const Element& v) {
        std::size_t p = 0;
        while (p < v.dim() && is_zero(v[p])) ++p;
        return p;
    };
    std::sort(basis.begin(), basis.end(), [&](const Element& x, const Element& y) { return lead(x) < lead(y); });
    return basis;
}

}  // namespace

Plane plane_type(const Algebra& a, const std::vector<Element>& basis) {
    if (basis.size() != 2 || !verify_closed(a, basis))
        throw std::invalid_argument("plane_type needs a closed two-dimensional subalgebra");
    const bool left = has_unit(a, basis, Side::Left);
    const bool right = has_unit(a, basis, Side::Right);
    if (left && right) return Plane::C;
    if (left) return Plane::StarC;
    if (right) return Plane::CStar;
    return Plane::StarCStar;
}

std::array<bool, 4> dim2_criteria(const AlgebraSpec& spec) {
    if (!spec.is_principal() || !spec.a || !spec.b) throw SpecError("dimension-2 criteria need a principal isotope of H");
    const Element& a = *spec.a;
    const Element& b = *spec.b;
    if (norm2(a) != 1 || norm2(b) != 1) throw SpecError("principal isotope parameters must have norm exactly 1");
    const Element ab = cd_mul(a, b), ba = cd_mul(b, a);
    const bool commute = ab == ba;
    const bool a_ab = is_imaginary(a) && is_imaginary(ab);
    const bool a_ba = is_imaginary(a) && is_imaginary(ba);
    const bool b_ba = is_imaginary(b) && is_imaginary(ba);
    const bool a_b = is_imaginary(a) && is_imaginary(b);
    // Rows C, *C, C*, *C*; columns H, *H, H*, *H*.
    const bool table[4][4] = {
        {commute, a_ba, b_ba, a_b},
        {a_ab, commute, a_ba, a_ba},
        {b_ba, b_ba, commute, b_ba},
        {a_b, a_b, a_b, commute},
    };
    const int col = spec.n() - 1;
    return {table[0][col], table[1][col], table[2][col], table[3][col]};
}

std::optional<FlexiblePlane> flexible_2dim(const Algebra& a, const Element& e) {
    if (a.dim() < 2) throw std::invalid_argument("flexible_2dim needs dim >= 2");
    if (!is_flexible_idempotent(a, e)) throw std::invalid_argument("e is not a nonzero flexible idempotent");
    const std::size_t d = a.dim();
    const Matrix le = mul_operator_matrix(a, e, Side::Left);
    const Matrix rer = mul_operator_matrix(a, e, Side::Right);
    const Matrix id = Matrix::identity(d);
    const Matrix orth = Matrix::from_rows({e});
    const Scalar ee = norm2(e);
    for (const auto& [alpha, beta] : {std::pair{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}) {
        const Matrix sys = (le - Scalar(alpha) * id).stacked(rer - Scalar(beta) * id).stacked(orth);
        for (const auto& u : kernel(sys)) {
            // With ||e|| = 1 the target is -alpha beta ||u||^2 e.
            const Element uu = alg_mul(a, u, u);
            if (uu != Scalar(-alpha * beta) * norm2(u) / ee * e) continue;
            if (!verify_closed(a, {e, u})) continue;
            return FlexiblePlane{e, u, alpha, beta};
        }
    }
    return std::nullopt;
}

std::vector<DiscoveredSubalgebra> discover_planes(const Algebra& a, const std::vector<Element>& extra) {
    const std::size_t d = a.dim();
    std::vector<Element> seeds;
    for (std::size_t k = 0; k < d; ++k) seeds.push_back(Element::basis(d, k));
    for (const auto& x : extra)
        if (!x.is_zero()) seeds.push_back(x);
    std::vector<Element> candidates = seeds;
    const Element one = Element::one(d);
    for (const auto& x : seeds) {
        candidates.push_back(one + x);
        candidates.push_back(one - x);
        if (!im(x).is_zero()) candidates.push_back(im(x));
    }
    for (std::size_t i = 0; i < seeds.size(); ++i)
        for (std::size_t j = i + 1; j < seeds.size(); ++j) candidates.push_back(seeds[i] + seeds[j]);

    std::vector<DiscoveredSubalgebra> found;
    std::vector<std::vector<Element>> seen;
    for (const auto& x : candidates) {
        if (x.is_zero()) continue;
        const Span s = close_span(a, {x}, 2);
        if (s.size() != 2) continue;
        auto basis = sorted_basis(s.basis());
        if (std::find(seen.begin(), seen.end(), basis) != seen.end()) continue;
        if (!verify_closed(a, basis)) continue;
        seen.push_back(basis);
        found.push_back({basis, plane_type(a, basis)});
    }
    return found;
}

SubalgebraReport subalgebra_report(const AlgebraSpec& spec) {
    SubalgebraReport rep;
    const Algebra alg = build(spec);
    std::vector<Element> extra;
    if (spec.is_principal() && spec.a && spec.b) {
        rep.criteria = dim2_criteria(spec);
        const Element& a = *spec.a;
        const Element& b = *spec.b;
        extra = {a, b, cd_mul(a, b), cd_mul(b, a), conjugate(a), conjugate(b), a + b, a - b};
    }
    rep.discovered = discover_planes(alg, extra);
    if (alg.dim() >= 2 && is_flexible_idempotent(alg, Element::one(alg.dim())))
        if (auto fp = flexible_2dim(alg, Element::one(alg.dim()))) {
            auto basis = sorted_basis({fp->e, fp->u});
            bool dup = false;
            for (const auto& f : rep.discovered) {
                Span s(alg.dim());
                for (const auto& v : f.basis) s.add(v);
                dup = dup || (s.contains(fp->e) && s.contains(fp->u));
            }
            if (!dup) rep.discovered.push_back({basis, plane_type(alg, basis)});
        }
    return rep;
}

std::size_t degree_estimate(const Algebra& a, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    Rng rng(seed);
    std::vector<Element> xs;
    for (int t = 0; t < trials; ++t) xs.push_back(rng.nonzero_element(a.dim(), 3));
    std::vector<std::size_t> dims(xs.size());
#pragma omp parallel for schedule(dynamic)
    for (long t = 0; t < static_cast<long>(xs.size()); ++t)
        dims[static_cast<std::size_t>(t)] = close_span(a, {xs[static_cast<std::size_t>(t)]}).size();
    return *std::max_element(dims.begin(), dims.end());
}

std::optional<std::vector<Element>> search_4dim_subalgebra(const Algebra& a, int attempts, std::uint64_t seed) {
    if (a.dim() != 8) throw DimensionError("the four-dimensional subalgebra search runs in dimension 8");
    if (attempts < 1) throw std::invalid_argument("attempts must be at least 1");
    const bool unital_one = is_idempotent(a, Element::one(8));
    Rng rng(seed);
    std::vector<std::pair<Element, Element>> pairs;
    for (int t = 0; t < attempts; ++t) {
        Element x = rng.nonzero_element(8, 3);
        Element y = rng.nonzero_element(8, 3);
        pairs.emplace_back(std::move(x), std::move(y));
    }
    std::vector<std::optional<std::vector<Element>>> hits(pairs.size());
#pragma omp parallel for schedule(dynamic)
    for (long t = 0; t < static_cast<long>(pairs.size()); ++t) {
        const auto& [x, y] = pairs[static_cast<std::size_t>(t)];
        Span s = close_span(a, {x, y}, 4);
        if (s.size() != 4 && unital_one) s = close_span(a, {Element::one(8), x}, 4);
        if (s.size() == 4) hits[static_cast<std::size_t>(t)] = s.basis();
    }
    for (auto& h : hits)
        if (h && verify_closed(a, *h)) return h;
    return std::nullopt;
}

}  // namespace avw
