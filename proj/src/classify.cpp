#include "avw/classify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace avw {

namespace {

const Element kOne = Element::one(4);
const Element kI = Element::basis(4, 1);

bool is_sign_one(const Element& x) { return x == kOne || x == -kOne; }
bool is_pure(const Element& x) { return is_zero(x[0]); }

std::string base_name(int n) {
    switch (n) {
        case 1: return "H";
        case 2: return "*H";
        case 3: return "H*";
        default: return "*H*";
    }
}

}  // namespace

std::string ClassLabel::name() const {
    switch (pattern) {
        case Pattern::Base: return base_name(family);
        case Pattern::PureImaginaryPair:
            if (family == 2) return paired ? "*H(i,i)" : "*H(i,1)";
            return paired ? "H*(i,i)" : "H*(1,i)";
        case Pattern::CircleFamily: return family == 2 ? "*H(1,e^{ia})" : "H*(e^{ia},1)";
        case Pattern::Unclassified: break;
    }
    return "Unclassified";
}

std::string ClassLabel::display() const {
    if (pattern == Pattern::CircleFamily) return name() + " [cos a = " + to_string(alpha_cos) + "]";
    if (pattern == Pattern::Unclassified) return name() + " " + profile.to_string();
    return name();
}

bool ClassLabel::same_class(const ClassLabel& o) const {
    if (family != o.family || pattern != o.pattern) return false;
    switch (pattern) {
        case Pattern::Base: return true;
        case Pattern::PureImaginaryPair: return paired == o.paired;
        case Pattern::CircleFamily: return alpha_cos == o.alpha_cos;
        case Pattern::Unclassified: return profile == o.profile;
    }
    return false;
}

ClassLabel base_label(int n) {
    ClassLabel l;
    l.family = n;
    return l;
}

ClassLabel pair_label(int n, bool paired) {
    if (n != 2 && n != 3) throw std::invalid_argument("pure imaginary pairs occur only in families 2 and 3");
    ClassLabel l;
    l.family = n;
    l.pattern = ClassLabel::Pattern::PureImaginaryPair;
    l.paired = paired;
    return l;
}

ClassLabel circle_label(int n, Scalar alpha_cos) {
    if (n != 2 && n != 3) throw std::invalid_argument("circle families occur only in families 2 and 3");
    alpha_cos = abs(alpha_cos);
    if (alpha_cos > 1) throw std::invalid_argument("|cos a| must not exceed 1");
    if (alpha_cos == 1) return base_label(n);
    ClassLabel l;
    l.family = n;
    l.pattern = ClassLabel::Pattern::CircleFamily;
    l.alpha_cos = alpha_cos;
    return l;
}

std::optional<AlgebraSpec> circle_point(int n, const Scalar& alpha_cos) {
    const auto s = rational_sqrt(1 - alpha_cos * alpha_cos);
    if (!s) return std::nullopt;
    Element u = Element::one(4);
    u[0] = alpha_cos;
    u[1] = *s;
    return n == 2 ? AlgebraSpec::principal(2, kOne, u) : AlgebraSpec::principal(3, u, kOne);
}

AlgebraSpec circle_point_t(int n, const Scalar& t) {
    const Element u = rational_unit(t * kI);
    if (n == 2) return AlgebraSpec::principal(2, kOne, u);
    if (n == 3) return AlgebraSpec::principal(3, u, kOne);
    throw std::invalid_argument("circle families occur only in families 2 and 3");
}

std::optional<AlgebraSpec> representative(const ClassLabel& label) {
    switch (label.pattern) {
        case ClassLabel::Pattern::Base: return AlgebraSpec::principal(label.family, kOne, kOne);
        case ClassLabel::Pattern::PureImaginaryPair:
            if (label.family == 2) return AlgebraSpec::principal(2, kI, label.paired ? kI : kOne);
            return AlgebraSpec::principal(3, label.paired ? kI : kOne, kI);
        case ClassLabel::Pattern::CircleFamily: return circle_point(label.family, label.alpha_cos);
        case ClassLabel::Pattern::Unclassified: break;
    }
    return std::nullopt;
}

std::vector<Scalar> circle_parameters(std::size_t count) {
    std::vector<Scalar> ts = {Scalar(0), Scalar(1, 2), Scalar(2, 3)};
    for (long q = 3; ts.size() < count; ++q)
        for (long p = 1; p < q && ts.size() < count; ++p) {
            if (std::gcd(p, q) != 1) continue;
            const Scalar t(p, q);
            if (std::find(ts.begin(), ts.end(), t) == ts.end()) ts.push_back(t);
        }
    ts.resize(count);
    return ts;
}

TableRow table_row(const IdentitySpec& id) {
    if (id.two_var()) throw std::invalid_argument("the classification table covers one-variable identities");
    TableRow row;
    row.identity = id;
    const auto H = base_label(1), sH = base_label(2), Hs = base_label(3), sHs = base_label(4);
    switch (id.index()) {
        case 0:  // 1,1,1
        case 2:  // 1,2,1
            row.finite = {H, sHs};
            break;
        case 1: row.finite = {H, Hs}; break;                     // 1,1,2
        case 3: row.finite = {H, Hs, pair_label(3, false)}; break; // 1,2,2
        case 4: row.finite = {H, sH}; break;                     // 2,1,1
        case 6: row.finite = {H, sH, pair_label(2, false)}; break; // 2,2,1
        case 5:                                                  // 2,1,2
            row.finite = {H, sHs};
            row.circles = {2, 3};
            break;
        case 7:  // 2,2,2
            row.finite = {H, sHs, pair_label(2, false), pair_label(2, true), pair_label(3, false), pair_label(3, true)};
            row.circles = {2, 3};
            break;
    }
    return row;
}

namespace {

bool row_contains(const TableRow& row, const ClassLabel& label) {
    for (const auto& l : row.finite)
        if (l.same_class(label)) return true;
    const bool on_circle = label.pattern == ClassLabel::Pattern::CircleFamily ||
                           (label.pattern == ClassLabel::Pattern::Base && (label.family == 2 || label.family == 3));
    return on_circle && std::find(row.circles.begin(), row.circles.end(), label.family) != row.circles.end();
}

ClassLabel structural_label(int n, const Element& a, const Element& b) {
    if (is_sign_one(a) && is_sign_one(b)) return base_label(n);
    if (n == 2) {
        if (is_sign_one(a)) return circle_label(2, re(b));
        if (is_pure(a)) {
            if (is_sign_one(b)) return pair_label(2, false);
            if (b == a || b == -a) return pair_label(2, true);
        }
    } else if (n == 3) {
        if (is_sign_one(b)) return circle_label(3, re(a));
        if (is_pure(b)) {
            if (is_sign_one(a)) return pair_label(3, false);
            if (a == b || a == -b) return pair_label(3, true);
        }
    }
    ClassLabel l;
    l.family = n;
    l.pattern = ClassLabel::Pattern::Unclassified;
    return l;
}

}  // namespace

Profile expected_profile(const ClassLabel& label) {
    Profile pr;
    for (const auto& id : IdentitySpec::all_one_var()) pr.set(id, row_contains(table_row(id), label));
    return pr;
}

Classification classify(const AlgebraSpec& spec) {
    if (!spec.is_principal() || !spec.a || !spec.b) throw SpecError("classification needs a principal isotope of H");
    const Algebra alg = build(spec);
    Classification c;
    c.label = structural_label(spec.n(), *spec.a, *spec.b);
    c.label.profile = identity_profile(alg);
    c.profile_consistent = c.label.profile == expected_profile(c.label);
    if (const auto rep = representative(c.label)) {
        c.witness = isotope_isomorphic(spec, *rep);
        if (!c.witness) throw std::logic_error("spec is not isomorphic to the representative of " + c.label.name());
    }
    return c;
}

Enumeration enumerate_classes(const IdentitySpec& id, std::size_t circle_samples) {
    Enumeration en;
    en.row = table_row(id);
    for (const auto& l : en.row.finite) {
        en.members.push_back(*representative(l));
        en.member_names.push_back(l.display());
    }
    const auto ts = circle_parameters(circle_samples);
    for (int n : en.row.circles)
        for (const auto& t : ts) {
            en.members.push_back(circle_point_t(n, t));
            en.member_names.push_back(circle_label(n, re(rational_unit(t * kI))).display());
        }
    const std::size_t m = en.members.size();
    std::vector<char> distinct(m * m, 1);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(m); ++i)
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < m; ++j)
            distinct[static_cast<std::size_t>(i) * m + j] =
                !isotope_isomorphic(en.members[static_cast<std::size_t>(i)], en.members[j]);
    en.pairwise_distinct = std::all_of(distinct.begin(), distinct.end(), [](char d) { return d != 0; });
    return en;
}

}  // namespace avw
