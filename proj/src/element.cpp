#include "avw/element.hpp"

#include <array>
#include <ostream>
#include <sstream>

namespace avw {

Element::Element(std::size_t dim) : coords_(dim) {
    if (!valid_dim(dim)) throw DimensionError("element dimension must be 1, 2, 4 or 8");
}

Element::Element(std::vector<Scalar> coords) : coords_(std::move(coords)) {
    if (!valid_dim(coords_.size())) throw DimensionError("element dimension must be 1, 2, 4 or 8");
}

Element Element::one(std::size_t dim) { return basis(dim, 0); }

Element Element::basis(std::size_t dim, std::size_t index) {
    Element e(dim);
    if (index >= dim) throw DimensionError("basis index out of range");
    e.coords_[index] = 1;
    return e;
}

Element Element::of(std::initializer_list<long> coords) {
    std::vector<Scalar> v;
    v.reserve(coords.size());
    for (long c : coords) v.emplace_back(c);
    return Element(std::move(v));
}

bool Element::is_zero() const {
    for (const auto& c : coords_)
        if (!avw::is_zero(c)) return false;
    return true;
}

Element& Element::operator+=(const Element& o) {
    if (dim() != o.dim()) throw DimensionError("dimension mismatch in addition");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

Element& Element::operator-=(const Element& o) {
    if (dim() != o.dim()) throw DimensionError("dimension mismatch in subtraction");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

Element& Element::operator*=(const Scalar& s) {
    for (auto& c : coords_) c *= s;
    return *this;
}

Element operator+(Element a, const Element& b) { return a += b; }
Element operator-(Element a, const Element& b) { return a -= b; }
Element operator-(Element a) { return a *= Scalar(-1); }
Element operator*(const Scalar& s, Element a) { return a *= s; }
Element operator*(Element a, const Scalar& s) { return a *= s; }

namespace {

// Plain recursive doubling on coordinate vectors, used once to tabulate the
// basis products e_i e_j = sign(i, j) e_{i xor j}.
std::vector<int> doubling_product(const std::vector<int>& x, const std::vector<int>& y) {
    const std::size_t n = x.size();
    if (n == 1) return {x[0] * y[0]};
    const std::size_t h = n / 2;
    auto conj = [](std::vector<int> v) {
        for (std::size_t i = 1; i < v.size(); ++i) v[i] = -v[i];
        return v;
    };
    std::vector<int> a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
    std::vector<int> c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
    auto ac = doubling_product(a, c);
    auto db = doubling_product(conj(d), b);
    auto da = doubling_product(d, a);
    auto bc = doubling_product(b, conj(c));
    std::vector<int> out(n);
    for (std::size_t i = 0; i < h; ++i) {
        out[i] = ac[i] - db[i];
        out[h + i] = da[i] + bc[i];
    }
    return out;
}

struct SignTable {
    std::array<std::array<int, 8>, 8> sign{};
    SignTable() {
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) {
                std::vector<int> x(8, 0), y(8, 0);
                x[i] = 1;
                y[j] = 1;
                auto p = doubling_product(x, y);
                sign[i][j] = p[i ^ j];
            }
    }
};

const SignTable& sign_table() {
    static const SignTable table;
    return table;
}

}  // namespace

Element cd_mul(const Element& x, const Element& y) {
    if (x.dim() != y.dim()) throw DimensionError("dimension mismatch in Cayley-Dickson product");
    const std::size_t n = x.dim();
    const auto& s = sign_table().sign;
    Element out(n);
    Scalar t;
    for (std::size_t i = 0; i < n; ++i) {
        if (is_zero(x[i])) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (is_zero(y[j])) continue;
            t = x[i] * y[j];
            if (s[i][j] > 0)
                out[i ^ j] += t;
            else
                out[i ^ j] -= t;
        }
    }
    return out;
}

Element conjugate(const Element& x) {
    Element out = x;
    for (std::size_t i = 1; i < out.dim(); ++i) out[i] = -out[i];
    return out;
}

Scalar inner(const Element& x, const Element& y) {
    if (x.dim() != y.dim()) throw DimensionError("dimension mismatch in inner product");
    Scalar s = 0;
    for (std::size_t i = 0; i < x.dim(); ++i) s += x[i] * y[i];
    return s;
}

Scalar norm2(const Element& x) { return inner(x, x); }

Scalar re(const Element& x) { return x[0]; }

Element im(const Element& x) {
    Element out = x;
    out[0] = 0;
    return out;
}

std::pair<Scalar, Element> re_im_split(const Element& x) { return {re(x), im(x)}; }

Element cd_inverse(const Element& x) {
    const Scalar n = norm2(x);
    if (is_zero(n)) throw std::domain_error("inverse of zero element");
    return conjugate(x) * Scalar(1 / n);
}

Element rational_unit(const Element& q) {
    if (!is_zero(re(q))) throw std::invalid_argument("rational_unit expects a purely imaginary element");
    const Element one_plus_q = Element::one(q.dim()) + q;
    const Scalar denom = 1 + norm2(q);
    return cd_mul(one_plus_q, one_plus_q) * Scalar(1 / denom);
}

Element imaginary_unit_from(const Scalar& s, const Scalar& t) {
    const Scalar d = 1 + s * s + t * t;
    Element u(4);
    u[1] = 2 * s / d;
    u[2] = 2 * t / d;
    u[3] = (1 - s * s - t * t) / d;
    return u;
}

std::string to_string(const Element& x) {
    std::string out = "[";
    for (std::size_t i = 0; i < x.dim(); ++i) {
        if (i) out += ", ";
        out += "\"" + to_string(x[i]) + "\"";
    }
    return out + "]";
}

std::string pretty(const Element& x) {
    static const char* quat[] = {"", "i", "j", "k"};
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        if (is_zero(x[i])) continue;
        Scalar c = x[i];
        if (!first) {
            os << (sgn(c) < 0 ? " - " : " + ");
            c = abs(c);
        } else if (sgn(c) < 0) {
            os << "-";
            c = abs(c);
        }
        first = false;
        const std::string name = x.dim() <= 4 ? quat[i] : (i == 0 ? "" : "e" + std::to_string(i));
        if (name.empty())
            os << to_string(c);
        else if (c == 1)
            os << name;
        else
            os << to_string(c) << "*" << name;
    }
    return first ? "0" : os.str();
}

std::ostream& operator<<(std::ostream& os, const Element& x) { return os << pretty(x); }

}  // namespace avw
