#pragma once

// Associator identities (x^p, x^q, x^r) = 0 with p, q, r in {1, 2}, and the
// two-variable identity (x^2, y, x^2) = 0.
//
// check_symbolic is the authority: it expands the associator with one
// indeterminate per coordinate and tests every coefficient. check_sampled
// is a fast falsifier; its "holds" answers are tentative.

#include "avw/algebra.hpp"
#include "avw/polynomial.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace avw {

struct IdentitySpec {
    enum class Kind { OneVar, TwoVarX2YX2 };

    Kind kind = Kind::OneVar;
    int p = 1, q = 1, r = 1;

    static IdentitySpec one_var(int p, int q, int r);
    static IdentitySpec x2yx2() { return {Kind::TwoVarX2YX2, 2, 1, 2}; }
    /// "p,q,r" or "x2yx2". Throws std::invalid_argument.
    static IdentitySpec parse(const std::string& text);
    /// The eight one-variable identities in lexicographic (p, q, r) order.
    static const std::array<IdentitySpec, 8>& all_one_var();

    bool two_var() const { return kind == Kind::TwoVarX2YX2; }
    /// (p, q, r) -> (r, q, p).
    IdentitySpec mirror() const { return two_var() ? *this : one_var(r, q, p); }
    /// Index 0..7 in all_one_var().
    int index() const { return (p - 1) * 4 + (q - 1) * 2 + (r - 1); }
    /// "p,q,r" or "x2yx2".
    std::string name() const;
    /// "(x^2,x,x^2)" style.
    std::string pretty() const;

    friend bool operator==(const IdentitySpec&, const IdentitySpec&) = default;
};

struct Verdict {
    IdentitySpec identity;
    bool holds = false;
    /// False for sampled "holds" answers, which are only tentative.
    bool authoritative = true;
    /// x, or x and y for the two-variable identity.
    std::vector<Element> witness;
    /// Associator value at the witness (nonzero when present).
    std::optional<Element> value;
    /// One nonzero coefficient of the symbolic associator, e.g. "coord 1: -2*x0*x1^2".
    std::optional<std::string> residual;
};

/// The identity profile: which of the eight one-variable identities hold.
class Profile {
public:
    Profile() = default;
    explicit Profile(std::uint8_t mask) : mask_(mask) {}
    static Profile of(std::initializer_list<IdentitySpec> ids);
    static Profile all() { return Profile(0xFF); }

    bool holds(const IdentitySpec& id) const { return (mask_ >> id.index()) & 1U; }
    void set(const IdentitySpec& id, bool value);
    std::uint8_t mask() const { return mask_; }
    std::vector<IdentitySpec> list() const;
    /// Profile under (p, q, r) -> (r, q, p).
    Profile mirrored() const;
    /// "{1,1,1; 1,2,1}" style.
    std::string to_string() const;

    friend bool operator==(Profile, Profile) = default;

private:
    std::uint8_t mask_ = 0;
};

Element associator(const Algebra& a, const Element& x, const Element& y, const Element& z);
AlgPoly associator(const Algebra& a, const AlgPoly& x, const AlgPoly& y, const AlgPoly& z);
Element power2(const Algebra& a, const Element& x);
AlgPoly power2(const Algebra& a, const AlgPoly& x);

/// The associator (x^p, x^q, x^r), or (x^2, y, x^2), at a concrete point.
Element identity_value(const Algebra& a, const IdentitySpec& id, const Element& x, const Element& y = {});
/// The same associator with symbolic x (variables 0..dim-1) and y (dim..2dim-1).
AlgPoly identity_polynomial(const Algebra& a, const IdentitySpec& id);

Verdict check_symbolic(const Algebra& a, const IdentitySpec& id);

inline constexpr int kDefaultTrials = 8;
inline constexpr long kSampleHeight = 3;

Verdict check_sampled(const Algebra& a, const IdentitySpec& id, int trials = kDefaultTrials,
                      std::uint64_t seed = 0x41565731);

/// All eight one-variable identities checked symbolically, in parallel.
Profile identity_profile(const Algebra& a);
/// Serial reference for identity_profile.
Profile identity_profile_serial(const Algebra& a);

}  // namespace avw
