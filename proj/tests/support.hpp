#pragma once

// Shared test helpers: independent reference multiplications and the spec
// corpus used by the property tests and the acceptance runner.

#include "avw/factory.hpp"
#include "avw/random.hpp"

#include <array>
#include <string>
#include <vector>

namespace avw::test {

using Quat = std::array<Scalar, 4>;

/// Hamilton's formula, written out coordinate by coordinate.
Quat hamilton(const Quat& x, const Quat& y);
Quat quat_conj(const Quat& x);
Quat to_quat(const Element& e);
Element from_quat(const Quat& q);

/// Octonions as pairs of quaternions, (p, q)(r, s) = (pr - conj(s) q, s p + q conj(r)),
/// on top of hamilton().
Element octonion_oracle(const Element& x, const Element& y);

Element quat(long w, long x, long y, long z);
inline Element one4() { return Element::one(4); }
inline Element qi() { return Element::basis(4, 1); }
inline Element qj() { return Element::basis(4, 2); }
inline Element qk() { return Element::basis(4, 3); }

struct NamedSpec {
    std::string name;
    AlgebraSpec spec;
};

/// Every algebra family the factory builds: standard isotopes of R, C, H, O,
/// table representatives, seeded random principal isotopes, seeded O^f and
/// their cracovians.
std::vector<NamedSpec> corpus();

/// Unit quaternion drawn from a mix of +-1, circle points, pure imaginary
/// units and generic units.
Element mixed_unit(Rng& rng);
/// Parameter pair (a, b) from mixed_unit, with b tied to a (b = +-a,
/// b = +-conj(a)) a quarter of the time.
std::pair<Element, Element> mixed_pair(Rng& rng);

/// Seeded random principal isotope spec.
AlgebraSpec random_principal(Rng& rng, int n);

}  // namespace avw::test
