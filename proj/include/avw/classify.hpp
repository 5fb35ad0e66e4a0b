#pragma once

// Isomorphism classes of principal isotopes of H that satisfy one of the
// eight one-variable associator identities, and the classifier that maps a
// spec onto them.
//
// Circle families *H(1, e^{ia}) and H*(e^{ia}, 1) are represented at
// rational points: cos a = (1 - t^2) / (1 + t^2), sin a = 2t / (1 + t^2).

#include "avw/factory.hpp"
#include "avw/identity.hpp"
#include "avw/structure.hpp"

#include <optional>
#include <string>
#include <vector>

namespace avw {

struct ClassLabel {
    enum class Pattern { Base, PureImaginaryPair, CircleFamily, Unclassified };

    int family = 1;  // n in 1..4
    Pattern pattern = Pattern::Base;
    /// PureImaginaryPair: false for *H(i,1) / H*(1,i), true for *H(i,i) / H*(i,i).
    bool paired = false;
    /// CircleFamily: |cos a|, in [0, 1].
    Scalar alpha_cos;
    Profile profile;

    /// "H", "*H", "H*", "*H*", "*H(i,1)", "*H(i,i)", "H*(1,i)", "H*(i,i)",
    /// "*H(1,e^{ia})", "H*(e^{ia},1)" or "Unclassified".
    std::string name() const;
    /// name() plus the cos a invariant for circle members.
    std::string display() const;
    /// Same isomorphism class (profile compared only for Unclassified).
    bool same_class(const ClassLabel& o) const;
};

ClassLabel base_label(int n);
ClassLabel pair_label(int n, bool paired);
ClassLabel circle_label(int n, Scalar alpha_cos);

/// A rational point on a circle family, or nullopt if sin a is irrational.
std::optional<AlgebraSpec> circle_point(int n, const Scalar& alpha_cos);
/// The circle member with parameter rational_unit(t i).
AlgebraSpec circle_point_t(int n, const Scalar& t);
/// Canonical representative spec of a non-Unclassified label (nullopt for
/// circle points without a rational representative).
std::optional<AlgebraSpec> representative(const ClassLabel& label);

/// Parameters t in [0, 1) giving distinct |cos a|: 0, 1/2, 2/3 first
/// (cos a = 1, 3/5, 5/13), then p/q by increasing q.
std::vector<Scalar> circle_parameters(std::size_t count);

/// Identity profile the classification table assigns to a label.
Profile expected_profile(const ClassLabel& label);

struct Classification {
    ClassLabel label;
    /// Witness against the canonical representative when one is rational.
    std::optional<IsoWitness> witness;
    /// True when the computed profile agrees with expected_profile.
    bool profile_consistent = true;
};

/// Throws SpecError for non-principal specs or non-unit parameters.
Classification classify(const AlgebraSpec& spec);

struct TableRow {
    IdentitySpec identity;
    std::vector<ClassLabel> finite;
    /// Families n (2 or 3) whose circle of classes is part of the row.
    std::vector<int> circles;
    bool infinite() const { return !circles.empty(); }
    /// Number of classes, or -1 for infinitely many.
    long count() const { return infinite() ? -1 : static_cast<long>(finite.size()); }
};

/// The row of the classification table for a one-variable identity.
TableRow table_row(const IdentitySpec& id);

struct Enumeration {
    TableRow row;
    /// Finite labels followed by sampled circle members.
    std::vector<AlgebraSpec> members;
    std::vector<std::string> member_names;
    /// Every pair of members checked and found non-isomorphic.
    bool pairwise_distinct = false;
};

/// Builds the row and verifies pairwise non-isomorphism, sampling
/// `circle_samples` points on each circle family.
Enumeration enumerate_classes(const IdentitySpec& id, std::size_t circle_samples = 10);

}  // namespace avw
