#include "avw/symbolic.hpp"

#include <cstdint>


#ifdef _OPENMP
#include <omp.h>
#endif

namespace avw {

namespace {

void check_dims(const Algebra& a, const AlgPoly& x, const AlgPoly& y) {
    if (x.dim() != a.dim() || y.dim() != a.dim()) throw DimensionError("dimension mismatch in symbolic product");
}

}  // namespace

int worker_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

AlgPoly alg_mul_reference(const Algebra& a, const AlgPoly& x, const AlgPoly& y) {
    check_dims(a, x, y);
    AlgPoly out(a.dim());
    for (const auto& t : a.terms()) {
        if (x[t.i].is_zero() || y[t.j].is_zero()) continue;
        out[t.k] += t.c * (x[t.i] * y[t.j]);
    }
    return out;
}

AlgPoly alg_mul(const Algebra& a, const AlgPoly& x, const AlgPoly& y) {
    check_dims(a, x, y);
    const std::size_t n = a.dim();

    // Distinct (i, j) pairs that carry a structure constant and nonzero factors.
    std::vector<std::size_t> pair_slot(n * n, SIZE_MAX);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& t : a.terms()) {
        const std::size_t s = t.i * n + t.j;
        if (pair_slot[s] != SIZE_MAX || x[t.i].is_zero() || y[t.j].is_zero()) continue;
        pair_slot[s] = pairs.size();
        pairs.emplace_back(t.i, t.j);
    }

    std::vector<Polynomial> products(pairs.size());
    const auto np = static_cast<std::ptrdiff_t>(pairs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t p = 0; p < np; ++p) {
        const auto [i, j] = pairs[static_cast<std::size_t>(p)];
        products[static_cast<std::size_t>(p)] = x[i] * y[j];
    }

    std::vector<std::vector<std::pair<Scalar, const Polynomial*>>> parts(n);
    for (const auto& t : a.terms()) {
        const std::size_t s = pair_slot[t.i * n + t.j];
        if (s == SIZE_MAX) continue;
        parts[t.k].emplace_back(t.c, &products[s]);
    }

    AlgPoly out(n);
    const auto nk = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < nk; ++k)
        out[static_cast<std::size_t>(k)] = linear_combination(parts[static_cast<std::size_t>(k)]);
    return out;
}

}  // namespace avw
