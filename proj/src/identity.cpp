#include "avw/identity.hpp"

#include "avw/random.hpp"
#include "avw/symbolic.hpp"

#include <stdexcept>

namespace avw {

IdentitySpec IdentitySpec::one_var(int p, int q, int r) {
    for (int e : {p, q, r})
        if (e != 1 && e != 2) throw std::invalid_argument("identity exponents must be 1 or 2");
    return {Kind::OneVar, p, q, r};
}

IdentitySpec IdentitySpec::parse(const std::string& text) {
    if (text == "x2yx2") return x2yx2();
    if (text.size() == 5 && text[1] == ',' && text[3] == ',')
        return one_var(text[0] - '0', text[2] - '0', text[4] - '0');
    throw std::invalid_argument("identity must be 'p,q,r' with p,q,r in {1,2} or 'x2yx2', got '" + text + "'");
}

const std::array<IdentitySpec, 8>& IdentitySpec::all_one_var() {
    static const std::array<IdentitySpec, 8> ids = [] {
        std::array<IdentitySpec, 8> out;
        for (int n = 0; n < 8; ++n) out[static_cast<std::size_t>(n)] = one_var(n / 4 + 1, (n / 2) % 2 + 1, n % 2 + 1);
        return out;
    }();
    return ids;
}

std::string IdentitySpec::name() const {
    if (two_var()) return "x2yx2";
    return std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r);
}

std::string IdentitySpec::pretty() const {
    if (two_var()) return "(x^2,y,x^2)";
    auto pw = [](int e) { return e == 1 ? std::string("x") : std::string("x^2"); };
    return "(" + pw(p) + "," + pw(q) + "," + pw(r) + ")";
}

Profile Profile::of(std::initializer_list<IdentitySpec> ids) {
    Profile pr;
    for (const auto& id : ids) pr.set(id, true);
    return pr;
}

void Profile::set(const IdentitySpec& id, bool value) {
    const auto bit = static_cast<std::uint8_t>(1U << id.index());
    mask_ = value ? static_cast<std::uint8_t>(mask_ | bit) : static_cast<std::uint8_t>(mask_ & ~bit);
}

std::vector<IdentitySpec> Profile::list() const {
    std::vector<IdentitySpec> out;
    for (const auto& id : IdentitySpec::all_one_var())
        if (holds(id)) out.push_back(id);
    return out;
}

Profile Profile::mirrored() const {
    Profile m;
    for (const auto& id : IdentitySpec::all_one_var()) m.set(id.mirror(), holds(id));
    return m;
}

std::string Profile::to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto& id : list()) {
        if (!first) s += "; ";
        first = false;
        s += id.name();
    }
    return s + "}";
}

Element associator(const Algebra& a, const Element& x, const Element& y, const Element& z) {
    return alg_mul(a, alg_mul(a, x, y), z) - alg_mul(a, x, alg_mul(a, y, z));
}

AlgPoly associator(const Algebra& a, const AlgPoly& x, const AlgPoly& y, const AlgPoly& z) {
    return alg_mul(a, alg_mul(a, x, y), z) - alg_mul(a, x, alg_mul(a, y, z));
}

Element power2(const Algebra& a, const Element& x) { return alg_mul(a, x, x); }
AlgPoly power2(const Algebra& a, const AlgPoly& x) { return alg_mul(a, x, x); }

namespace {

template <typename T>
T evaluate_identity(const Algebra& a, const IdentitySpec& id, const T& x, const T* y) {
    const T x2 = power2(a, x);
    if (id.two_var()) return associator(a, x2, *y, x2);
    auto pick = [&](int e) -> const T& { return e == 1 ? x : x2; };
    return associator(a, pick(id.p), pick(id.q), pick(id.r));
}

std::string variable_name(std::size_t v, std::size_t dim) {
    return v < dim ? "x" + std::to_string(v) : "y" + std::to_string(v - dim);
}

// Deterministic scan of integer points with coordinates in {-2..2}, then
// pseudorandom rational points, until the associator is nonzero.
bool find_witness(const Algebra& a, const IdentitySpec& id, Verdict& v) {
    const std::size_t n = a.dim();
    const std::size_t nv = id.two_var() ? 2 * n : n;
    auto try_point = [&](const std::vector<Scalar>& pt) {
        Element x(std::vector<Scalar>(pt.begin(), pt.begin() + static_cast<std::ptrdiff_t>(n)));
        Element y;
        if (id.two_var()) y = Element(std::vector<Scalar>(pt.begin() + static_cast<std::ptrdiff_t>(n), pt.end()));
        Element val = identity_value(a, id, x, y);
        if (val.is_zero()) return false;
        v.witness = {x};
        if (id.two_var()) v.witness.push_back(y);
        v.value = std::move(val);
        return true;
    };

    constexpr std::size_t kScanLimit = 20000;
    std::vector<int> digits(nv, -2);
    std::vector<Scalar> pt(nv);
    auto advance = [&] {
        for (std::size_t pos = nv; pos-- > 0;) {
            if (++digits[pos] <= 2) return true;
            digits[pos] = -2;
        }
        return false;
    };
    std::size_t count = 0;
    do {
        for (std::size_t i = 0; i < nv; ++i) pt[i] = digits[i];
        if (try_point(pt)) return true;
    } while (++count < kScanLimit && advance());
    Rng rng(0x57495431);
    for (int k = 0; k < 10000; ++k) {
        for (auto& c : pt) c = rng.rational(7);
        if (try_point(pt)) return true;
    }
    return false;
}

}  // namespace

Element identity_value(const Algebra& a, const IdentitySpec& id, const Element& x, const Element& y) {
    if (id.two_var() && y.dim() != a.dim()) throw DimensionError("two-variable identity needs y");
    return evaluate_identity(a, id, x, &y);
}

AlgPoly identity_polynomial(const Algebra& a, const IdentitySpec& id) {
    const AlgPoly x = AlgPoly::generic(a.dim(), 0);
    if (!id.two_var()) return evaluate_identity<AlgPoly>(a, id, x, nullptr);
    const AlgPoly y = AlgPoly::generic(a.dim(), a.dim());
    return evaluate_identity(a, id, x, &y);
}

Verdict check_symbolic(const Algebra& a, const IdentitySpec& id) {
    Verdict v;
    v.identity = id;
    const AlgPoly value = identity_polynomial(a, id);
    v.holds = value.is_zero();
    if (v.holds) return v;
    const std::size_t n = a.dim();
    for (std::size_t k = 0; k < n; ++k) {
        if (value[k].is_zero()) continue;
        const auto& lead = value[k].terms().front();
        const Polynomial term = Polynomial::from_terms({lead});
        v.residual = "coord " + std::to_string(k) + ": " +
                     term.to_string([n](std::size_t var) { return variable_name(var, n); });
        break;
    }
    find_witness(a, id, v);
    return v;
}

Verdict check_sampled(const Algebra& a, const IdentitySpec& id, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    Verdict v;
    v.identity = id;
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        Element x = rng.element(a.dim(), kSampleHeight);
        Element y;
        if (id.two_var()) y = rng.element(a.dim(), kSampleHeight);
        Element val = identity_value(a, id, x, y);
        if (!val.is_zero()) {
            v.holds = false;
            v.witness = {x};
            if (id.two_var()) v.witness.push_back(y);
            v.value = std::move(val);
            return v;
        }
    }
    v.holds = true;
    v.authoritative = false;
    return v;
}

Profile identity_profile(const Algebra& a) {
    const auto& ids = IdentitySpec::all_one_var();
    std::array<bool, 8> holds{};
#pragma omp parallel for schedule(dynamic)
    for (int n = 0; n < 8; ++n) holds[static_cast<std::size_t>(n)] = identity_polynomial(a, ids[static_cast<std::size_t>(n)]).is_zero();
    Profile pr;
    for (std::size_t n = 0; n < 8; ++n) pr.set(ids[n], holds[n]);
    return pr;
}

Profile identity_profile_serial(const Algebra& a) {
    Profile pr;
    for (const auto& id : IdentitySpec::all_one_var()) {
        const AlgPoly x = AlgPoly::generic(a.dim(), 0);
        const AlgPoly x2 = alg_mul_reference(a, x, x);
        auto pick = [&](int e) -> const AlgPoly& { return e == 1 ? x : x2; };
        const AlgPoly& u = pick(id.p);
        const AlgPoly& w = pick(id.q);
        const AlgPoly& z = pick(id.r);
        const AlgPoly lhs = alg_mul_reference(a, alg_mul_reference(a, u, w), z);
        const AlgPoly rhs = alg_mul_reference(a, u, alg_mul_reference(a, w, z));
        pr.set(id, (lhs - rhs).is_zero());
    }
    return pr;
}

}  // namespace avw
