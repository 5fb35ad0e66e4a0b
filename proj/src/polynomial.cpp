#include "avw/polynomial.hpp"

#include "avw/element.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace avw {

Monomial Monomial::variable(std::size_t v, unsigned power) {
    if (v >= kMaxVars) throw std::out_of_range("polynomial variable index exceeds 16");
    if (power > kMaxExponent) throw std::out_of_range("monomial exponent exceeds 15");
    return {static_cast<std::uint64_t>(power) << shift(v)};
}

unsigned Monomial::degree() const {
    // Nibble sum: fold nibbles into bytes, then sum bytes with a multiply.
    std::uint64_t x = (key & 0x0F0F0F0F0F0F0F0FULL) + ((key >> 4) & 0x0F0F0F0F0F0F0F0FULL);
    return static_cast<unsigned>((x * 0x0101010101010101ULL) >> 56);
}

bool grlex_before(Monomial a, Monomial b) {
    const unsigned da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.key > b.key;
}

Polynomial::Polynomial(const Scalar& constant) {
    if (!avw::is_zero(constant)) terms_.push_back({Monomial{}, constant});
}

Polynomial Polynomial::variable(std::size_t v) {
    Polynomial p;
    p.terms_.push_back({Monomial::variable(v), Scalar(1)});
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return grlex_before(a.mono, b.mono); });
    Polynomial p;
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
        } else {
            if (!p.terms_.empty() && avw::is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && avw::is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
    return p;
}

unsigned Polynomial::degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

namespace {

template <typename Combine>
std::vector<Polynomial::Term> merge(const std::vector<Polynomial::Term>& a, const std::vector<Polynomial::Term>& b,
                                    Combine sign_b) {
    std::vector<Polynomial::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && grlex_before(a[i].mono, b[j].mono))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || grlex_before(b[j].mono, a[i].mono)) {
            out.push_back({b[j].mono, sign_b(b[j].coeff)});
            ++j;
        } else {
            Scalar c = a[i].coeff + sign_b(b[j].coeff);
            if (!is_zero(c)) out.push_back({a[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    terms_ = merge(terms_, o.terms_, [](const Scalar& c) { return c; });
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    terms_ = merge(terms_, o.terms_, [](const Scalar& c) { return Scalar(-c); });
    return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& s) {
    if (avw::is_zero(s)) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= s;
    return *this;
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
    Scalar total = 0;
    Scalar term;
    for (const auto& t : terms_) {
        term = t.coeff;
        for (std::size_t v = 0; v < Monomial::kMaxVars; ++v) {
            const unsigned e = t.mono.exponent(v);
            if (e == 0) continue;
            if (v >= point.size()) throw std::out_of_range("evaluation point has too few coordinates");
            for (unsigned r = 0; r < e; ++r) term *= point[v];
        }
        total += term;
    }
    return total;
}

std::string Polynomial::to_string(const std::function<std::string(std::size_t)>& name) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Scalar c = t.coeff;
        if (!first) {
            os << (sgn(c) < 0 ? " - " : " + ");
            c = abs(c);
        } else if (sgn(c) < 0) {
            os << "-";
            c = abs(c);
        }
        first = false;
        std::string mono;
        for (std::size_t v = 0; v < Monomial::kMaxVars; ++v) {
            const unsigned e = t.mono.exponent(v);
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += name(v);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty())
            os << avw::to_string(c);
        else if (c == 1)
            os << mono;
        else
            os << avw::to_string(c) << "*" << mono;
    }
    return os.str();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator-(Polynomial a) { return a *= Scalar(-1); }
Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.degree() + b.degree() > Monomial::kMaxExponent)
        throw std::overflow_error("polynomial product exceeds the packed exponent range");
    std::vector<Polynomial::Term> terms;
    terms.reserve(a.size() * b.size());
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms()) terms.push_back({ta.mono * tb.mono, ta.coeff * tb.coeff});
    return Polynomial::from_terms(std::move(terms));
}

Polynomial linear_combination(const std::vector<std::pair<Scalar, const Polynomial*>>& parts) {
    std::size_t n = 0;
    for (const auto& [s, p] : parts) n += p->size();
    std::vector<Polynomial::Term> terms;
    terms.reserve(n);
    for (const auto& [s, p] : parts) {
        if (is_zero(s)) continue;
        for (const auto& t : p->terms()) terms.push_back({t.mono, s * t.coeff});
    }
    return Polynomial::from_terms(std::move(terms));
}

AlgPoly AlgPoly::generic(std::size_t dim, std::size_t first_var) {
    AlgPoly x(dim);
    for (std::size_t m = 0; m < dim; ++m) x.coords_[m] = Polynomial::variable(first_var + m);
    return x;
}

AlgPoly AlgPoly::constant(const Element& e) {
    AlgPoly x(e.dim());
    for (std::size_t m = 0; m < e.dim(); ++m) x.coords_[m] = Polynomial(e[m]);
    return x;
}

bool AlgPoly::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

Polynomial AlgPoly::norm2() const {
    std::vector<Polynomial::Term> terms;
    for (const auto& c : coords_) {
        const Polynomial sq = c * c;
        terms.insert(terms.end(), sq.terms().begin(), sq.terms().end());
    }
    return Polynomial::from_terms(std::move(terms));
}

Element AlgPoly::evaluate(const std::vector<Scalar>& point) const {
    Element e(dim());
    for (std::size_t m = 0; m < dim(); ++m) e[m] = coords_[m].evaluate(point);
    return e;
}

AlgPoly& AlgPoly::operator+=(const AlgPoly& o) {
    if (dim() != o.dim()) throw DimensionError("dimension mismatch in symbolic addition");
    for (std::size_t m = 0; m < dim(); ++m) coords_[m] += o.coords_[m];
    return *this;
}

AlgPoly& AlgPoly::operator-=(const AlgPoly& o) {
    if (dim() != o.dim()) throw DimensionError("dimension mismatch in symbolic subtraction");
    for (std::size_t m = 0; m < dim(); ++m) coords_[m] -= o.coords_[m];
    return *this;
}

AlgPoly operator+(AlgPoly a, const AlgPoly& b) { return a += b; }
AlgPoly operator-(AlgPoly a, const AlgPoly& b) { return a -= b; }

}  // namespace avw
