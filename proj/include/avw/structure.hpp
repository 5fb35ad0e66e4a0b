#pragma once

// Isomorphism of principal isotopes of H and conjugacy of unit quaternions.
//
// H_n(a, b) and H_m(a', b') are isomorphic exactly when n = m and there are
// a nonzero p and signs eps, delta with a' p = eps p a and b' p = delta p b.
// For fixed signs these are linear equations in p, so the question reduces
// to intersecting two exact kernels in H.

#include "avw/element.hpp"
#include "avw/factory.hpp"

#include <optional>
#include <vector>

namespace avw {

struct IsoWitness {
    Element p;      // nonzero, generally not normalized
    int eps = 1;    // +1 or -1
    int delta = 1;  // +1 or -1
};

/// The sign pairs in search order.
inline constexpr std::pair<int, int> kSignOrder[] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};

/// Basis of ker(L_{a'} - eps R_a) intersected with ker(L_{b'} - delta R_b).
std::vector<Element> isotope_kernel(const Element& a, const Element& b, const Element& a2, const Element& b2, int eps,
                                    int delta);

/// Decides H_n(a, b) ~ H_m(a2, b2). Throws SpecError for non-unit parameters
/// or n, m outside 1..4.
std::optional<IsoWitness> isotope_isomorphic(int n, const Element& a, const Element& b, int m, const Element& a2,
                                             const Element& b2);
/// Same for two principal-isotope specs (SpecError otherwise).
std::optional<IsoWitness> isotope_isomorphic(const AlgebraSpec& s1, const AlgebraSpec& s2);

/// True iff the witness satisfies both defining equalities exactly.
bool witness_valid(const IsoWitness& w, const Element& a, const Element& b, const Element& a2, const Element& b2);

/// eps * p a p^{-1}: the parameter carried to an isomorphic isotope.
Element transport(const Element& a, const Element& p, int eps);

/// Nonzero v with b v = v a when a, b are conjugate quaternions (equal norm
/// and real part); nullopt otherwise. v is left unnormalized.
std::optional<Element> conjugacy_witness(const Element& a, const Element& b);

}  // namespace avw
