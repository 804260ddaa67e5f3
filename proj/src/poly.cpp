#include "pjordan/poly.hpp"

#include <algorithm>
#include <sstream>

namespace pjordan {

Indet Indet::x(int i, int j, int k) {
    if (!(1 <= i && i < j)) throw error("x-indeterminate requires 1 <= i < j");
    if (k < 1) throw error("x-indeterminate requires k >= 1");
    Indet v;
    v.kind_ = Kind::X;
    v.i_ = i;
    v.j_ = j;
    v.k_ = k;
    return v;
}

Indet Indet::r(int i, int j) {
    if (i < 1 || j < 1) throw error("r-indeterminate requires positive indices");
    Indet v;
    v.kind_ = Kind::R;
    v.i_ = i;
    v.j_ = j;
    return v;
}

Indet Indet::param(std::string name) {
    if (name.empty()) throw error("empty parameter name");
    Indet v;
    v.kind_ = Kind::Param;
    v.name_ = std::move(name);
    return v;
}

std::string Indet::str() const {
    switch (kind_) {
        case Kind::X:
            return "x[" + std::to_string(i_) + "," + std::to_string(j_) + "]^" +
                   std::to_string(k_);
        case Kind::R:
            return "r[" + std::to_string(i_) + "," + std::to_string(j_) + "]";
        default:
            return name_;
    }
}

bool operator<(const Indet& a, const Indet& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
    if (a.i_ != b.i_) return a.i_ < b.i_;
    if (a.j_ != b.j_) return a.j_ < b.j_;
    if (a.k_ != b.k_) return a.k_ < b.k_;
    return a.name_ < b.name_;
}

Monomial::Monomial(const Indet& v, unsigned e) {
    if (e > 0) f_.emplace_back(v, e);
}

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (auto& [v, e] : f_) d += e;
    return d;
}

unsigned Monomial::degree_in(const Indet& v) const {
    for (auto& [w, e] : f_)
        if (w == v) return e;
    return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    auto ia = a.f_.begin(), ib = b.f_.begin();
    while (ia != a.f_.end() || ib != b.f_.end()) {
        if (ib == b.f_.end() || (ia != a.f_.end() && ia->first < ib->first)) {
            out.f_.push_back(*ia++);
        } else if (ia == a.f_.end() || ib->first < ia->first) {
            out.f_.push_back(*ib++);
        } else {
            out.f_.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }
    return out;
}

bool Monomial::divides(const Monomial& other) const {
    for (auto& [v, e] : f_)
        if (other.degree_in(v) < e) return false;
    return true;
}

Monomial Monomial::divide(const Monomial& div) const {
    Monomial out;
    for (auto& [v, e] : f_) {
        unsigned de = div.degree_in(v);
        if (de > e) throw arith_error("monomial division underflow");
        if (e - de > 0) out.f_.emplace_back(v, e - de);
    }
    return out;
}

std::string Monomial::str() const {
    if (f_.empty()) return "1";
    std::string out;
    for (auto& [v, e] : f_) {
        if (!out.empty()) out += "*";
        out += v.str();
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // Same degree: compare exponents along increasing indeterminates; the
    // monomial with the larger exponent on the earliest differing variable
    // is the larger one.
    auto ia = a.f_.begin(), ib = b.f_.begin();
    while (ia != a.f_.end() && ib != b.f_.end()) {
        if (ia->first != ib->first) {
            // The one owning the earlier variable is grlex-greater.
            return ib->first < ia->first ? true : false;
        }
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia;
        ++ib;
    }
    return ia == a.f_.end() && ib != b.f_.end();
}

namespace {
bool term_order_desc(const std::pair<Monomial, Rational>& a,
                     const std::pair<Monomial, Rational>& b) {
    return grlex_less(b.first, a.first);
}
}  // namespace

Polynomial::Polynomial(const Rational& c) {
    if (!c.is_zero()) terms_.emplace_back(Monomial(), c);
}

Polynomial Polynomial::variable(const Indet& v) {
    Polynomial p;
    p.terms_.emplace_back(Monomial(v), Rational(1));
    return p;
}

Polynomial Polynomial::term(const Rational& c, const Monomial& m) {
    Polynomial p;
    if (!c.is_zero()) p.terms_.emplace_back(m, c);
    return p;
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!terms_[0].first.is_one()) throw error("polynomial is not constant");
    return terms_[0].second;
}

unsigned Polynomial::total_degree() const {
    unsigned d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

unsigned Polynomial::degree_in(const Indet& v) const {
    unsigned d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree_in(v));
    return d;
}

std::vector<Indet> Polynomial::variables() const {
    std::vector<Indet> out;
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m.factors())
            if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw error("zero polynomial has no leading monomial");
    return terms_[0].first;
}

const Rational& Polynomial::leading_coeff() const {
    if (terms_.empty()) throw error("zero polynomial has no leading coefficient");
    return terms_[0].second;
}

Rational Polynomial::coeff(const Monomial& m) const {
    for (auto& [mm, c] : terms_)
        if (mm == m) return c;
    return Rational(0);
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(), term_order_desc);
    std::vector<std::pair<Monomial, Rational>> out;
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first) {
            out.back().second += t.second;
            if (out.back().second.is_zero()) out.pop_back();
        } else if (!t.second.is_zero()) {
            out.push_back(t);
        }
    }
    terms_ = std::move(out);
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    out.terms_ = a.terms_;
    out.terms_.insert(out.terms_.end(), b.terms_.begin(), b.terms_.end());
    out.normalize();
    return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    out.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (auto& [ma, ca] : a.terms_)
        for (auto& [mb, cb] : b.terms_) out.terms_.emplace_back(ma * mb, ca * cb);
    out.normalize();
    return out;
}

Polynomial Polynomial::scale(const Rational& c) const {
    if (c.is_zero()) return Polynomial();
    Polynomial out = *this;
    for (auto& [m, cc] : out.terms_) cc *= c;
    return out;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial acc(Rational(1));
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

bool operator<(const Polynomial& a, const Polynomial& b) {
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() && ib != b.terms_.end()) {
        if (ia->first != ib->first) return grlex_less(ia->first, ib->first);
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia;
        ++ib;
    }
    return ia == a.terms_.end() && ib != b.terms_.end();
}

std::vector<Polynomial> Polynomial::coefficients_in(const Indet& v) const {
    std::vector<Polynomial> out(degree_in(v) + 1);
    for (auto& [m, c] : terms_) {
        unsigned e = m.degree_in(v);
        Monomial rest;
        for (auto& [w, we] : m.factors())
            if (!(w == v)) rest = rest * Monomial(w, we);
        out[e] += Polynomial::term(c, rest);
    }
    return out;
}

Polynomial Polynomial::substitute(const Indet& v, const Polynomial& value) const {
    auto cs = coefficients_in(v);
    Polynomial out;
    Polynomial p(Rational(1));
    for (unsigned e = 0; e < cs.size(); ++e) {
        if (!cs[e].is_zero()) out += cs[e] * p;
        if (e + 1 < cs.size()) p = p * value;
    }
    return out;
}

Scalar Polynomial::evaluate(const Assignment& a) const {
    Scalar acc(0);
    for (auto& [m, c] : terms_) {
        Scalar t{Rational(1)};
        for (auto& [v, e] : m.factors()) {
            auto it = a.find(v);
            if (it == a.end())
                throw error("evaluate: missing assignment for " + v.str());
            t *= it->second.pow(static_cast<long>(e));
        }
        acc += t * Scalar(c);
    }
    return acc;
}

Rational Polynomial::content() const {
    Rational g(0);
    for (auto& [m, c] : terms_) g = rational_gcd(g, c);
    return g;
}

Polynomial Polynomial::canonical_representative() const {
    if (terms_.empty()) return *this;
    Rational g = content();
    if (leading_coeff().sign() < 0) g = -g;
    return scale(g.inv());
}

std::optional<Rational> proportional_match(const Polynomial& p, const Polynomial& q) {
    if (p.terms_.size() != q.terms_.size()) return std::nullopt;
    if (p.is_zero()) return std::nullopt;  // only nonzero ratios
    Rational lambda = p.terms_[0].second / q.terms_[0].second;
    for (std::size_t t = 0; t < p.terms_.size(); ++t) {
        if (p.terms_[t].first != q.terms_[t].first) return std::nullopt;
        if (p.terms_[t].second != lambda * q.terms_[t].second) return std::nullopt;
    }
    return lambda;
}

Polynomial Polynomial::reduce(const std::vector<Polynomial>& divisors) const {
    Polynomial rem;
    Polynomial cur = *this;
    while (!cur.is_zero()) {
        bool divided = false;
        for (const auto& d : divisors) {
            if (d.is_zero()) continue;
            if (d.leading_monomial().divides(cur.leading_monomial())) {
                Monomial q = cur.leading_monomial().divide(d.leading_monomial());
                Rational qc = cur.leading_coeff() / d.leading_coeff();
                cur -= d * Polynomial::term(qc, q);
                divided = true;
                break;
            }
        }
        if (!divided) {
            rem += Polynomial::term(cur.leading_coeff(), cur.leading_monomial());
            cur -= Polynomial::term(cur.leading_coeff(), cur.leading_monomial());
        }
    }
    return rem;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (m.is_one()) {
            os << mag.str();
        } else if (mag.is_one()) {
            os << m.str();
        } else {
            os << mag.str() << "*" << m.str();
        }
    }
    return os.str();
}

}  // namespace pjordan
