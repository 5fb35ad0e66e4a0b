#pragma once

// Subalgebras: closure under the product, the dimension-2 criteria for
// principal isotopes of H, flexible-idempotent planes, and sampled
// estimates of the degree (largest single-generated subalgebra).

#include "avw/algebra.hpp"
#include "avw/factory.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace avw {

/// The four two-dimensional absolute-valued algebras.
enum class Plane { C, StarC, CStar, StarCStar };
inline constexpr std::array<Plane, 4> kPlanes = {Plane::C, Plane::StarC, Plane::CStar, Plane::StarCStar};
std::string plane_name(Plane p);

/// True iff every product of basis elements lies in their span. Throws
/// std::invalid_argument for an empty or dependent basis.
bool verify_closed(const Algebra& a, const std::vector<Element>& basis);

/// Smallest subalgebra containing the generators. When `cap` is nonzero the
/// closure stops as soon as its dimension exceeds cap (the returned span is
/// then only a lower bound).
Span close_span(const Algebra& a, const std::vector<Element>& generators, std::size_t cap = 0);

struct Generated {
    std::size_t dim = 0;
    std::vector<Element> basis;
};

/// Subalgebra generated by a single nonzero x.
Generated generated_dim(const Algebra& a, const Element& x);

/// Which of C, *C, C*, *C* a closed two-dimensional subalgebra is, decided
/// by which one-sided units it has.
Plane plane_type(const Algebra& a, const std::vector<Element>& basis);

/// The sixteen conditions of the dimension-2 table for a principal isotope:
/// entry k says whether the isotope contains kPlanes[k].
std::array<bool, 4> dim2_criteria(const AlgebraSpec& spec);

struct FlexiblePlane {
    Element e, u;
    int alpha = 1;  // e u = alpha u
    int beta = 1;   // u e = beta u
};

/// For a nonzero flexible idempotent e, a common eigenvector u of L_e and
/// R_e orthogonal to e with eigenvalues in {+1, -1} and u u = -alpha beta
/// ||u||^2 e, so that span{e, u} is a subalgebra. nullopt when no rational
/// eigenvector passes. Throws std::invalid_argument if e is not a flexible
/// idempotent or dim < 2.
std::optional<FlexiblePlane> flexible_2dim(const Algebra& a, const Element& e);

struct DiscoveredSubalgebra {
    std::vector<Element> basis;
    Plane type = Plane::C;
};

struct SubalgebraReport {
    /// Criteria table entries; present for principal isotopes only.
    std::optional<std::array<bool, 4>> criteria;
    /// Closed two-dimensional subalgebras found from structured candidates.
    std::vector<DiscoveredSubalgebra> discovered;
};

SubalgebraReport subalgebra_report(const AlgebraSpec& spec);
/// Discovery only, for algebras without a principal-isotope spec.
std::vector<DiscoveredSubalgebra> discover_planes(const Algebra& a, const std::vector<Element>& extra = {});

inline constexpr int kDegreeTrials = 20;
/// Largest generated dimension over `trials` seeded random generators.
std::size_t degree_estimate(const Algebra& a, int trials = kDegreeTrials, std::uint64_t seed = 0x41565731);

inline constexpr int kSearchAttempts = 500;
/// Random search for a four-dimensional subalgebra of an eight-dimensional
/// algebra. A returned basis passes verify_closed; nullopt is evidence only.
std::optional<std::vector<Element>> search_4dim_subalgebra(const Algebra& a, int attempts = kSearchAttempts,
                                                           std::uint64_t seed = 0x41565731);

}  // namespace avw
