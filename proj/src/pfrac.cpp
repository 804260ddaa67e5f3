#include "pjordan/pfrac.hpp"

#include <cctype>

namespace pjordan {

PolyFraction::PolyFraction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw arith_error("polynomial fraction with zero denominator");
    tidy();
}

void PolyFraction::tidy() {
    if (num_.is_zero()) {
        den_ = Polynomial(Rational(1));
        return;
    }
    if (den_.is_constant()) {
        num_ = num_.scale(den_.constant_value().inv());
        den_ = Polynomial(Rational(1));
    }
}

Polynomial PolyFraction::as_polynomial() const {
    if (!is_polynomial())
        throw error("expression is not polynomial: " + str());
    return den_.constant_value().is_one() ? num_
                                          : num_.scale(den_.constant_value().inv());
}

PolyFraction PolyFraction::operator-() const { return PolyFraction(-num_, den_); }

PolyFraction operator+(const PolyFraction& a, const PolyFraction& b) {
    if (a.den_ == b.den_) return PolyFraction(a.num_ + b.num_, a.den_);
    return PolyFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

PolyFraction operator-(const PolyFraction& a, const PolyFraction& b) { return a + (-b); }

PolyFraction operator*(const PolyFraction& a, const PolyFraction& b) {
    return PolyFraction(a.num_ * b.num_, a.den_ * b.den_);
}

PolyFraction operator/(const PolyFraction& a, const PolyFraction& b) {
    if (b.num_.is_zero()) throw arith_error("division by zero expression");
    return PolyFraction(a.num_ * b.den_, a.den_ * b.num_);
}

PolyFraction PolyFraction::pow(long e) const {
    if (e < 0) return PolyFraction(Polynomial(Rational(1))) / pow(-e);
    PolyFraction acc{Polynomial(Rational(1))};
    for (long i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

Scalar PolyFraction::evaluate(const Assignment& a) const {
    Scalar d = den_.evaluate(a);
    if (d.is_zero()) throw arith_error("expression denominator vanishes: " + str());
    return num_.evaluate(a) / d;
}

std::string PolyFraction::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ---------------------------------------------------------------------------
// Expression parsing. Two modes share one grammar: symbolic mode produces
// PolyFraction (names become Param indeterminates, sqrt is rejected);
// numeric mode produces Scalar (names resolved via env, sqrt(INT) allowed).

namespace {

struct Tok {
    enum Type { Num, Name, XAtom, RAtom, Sqrt, Plus, Minus, Star, Slash, Caret,
                LParen, RParen, End } type;
    std::string text;
    int i = 0, j = 0, k = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { next(); }
    const Tok& peek() const { return tok_; }
    Tok take() {
        Tok t = tok_;
        next();
        return t;
    }

private:
    void next() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ >= s_.size()) {
            tok_ = {Tok::End, ""};
            return;
        }
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            tok_ = {Tok::Num, s_.substr(start, pos_ - start)};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if ((name == "x" || name == "r") && pos_ < s_.size() && s_[pos_] == '[') {
                tok_ = lex_atom(name);
                return;
            }
            if (name == "sqrt") {
                tok_ = {Tok::Sqrt, name};
                return;
            }
            tok_ = {Tok::Name, name};
            return;
        }
        ++pos_;
        switch (c) {
            case '+': tok_ = {Tok::Plus, "+"}; return;
            case '-': tok_ = {Tok::Minus, "-"}; return;
            case '*': tok_ = {Tok::Star, "*"}; return;
            case '/': tok_ = {Tok::Slash, "/"}; return;
            case '^': tok_ = {Tok::Caret, "^"}; return;
            case '(': tok_ = {Tok::LParen, "("}; return;
            case ')': tok_ = {Tok::RParen, ")"}; return;
            default:
                throw parse_error(std::string("unexpected character '") + c +
                                  "' in expression: " + s_);
        }
    }

    Tok lex_atom(const std::string& head) {
        // x[i,j]^k or r[i,j]
        auto expect = [&](char c) {
            if (pos_ >= s_.size() || s_[pos_] != c)
                throw parse_error("malformed indeterminate atom in: " + s_);
            ++pos_;
        };
        auto integer = [&]() {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (start == pos_) throw parse_error("expected index in atom: " + s_);
            return std::stoi(s_.substr(start, pos_ - start));
        };
        expect('[');
        int i = integer();
        expect(',');
        int j = integer();
        expect(']');
        Tok t;
        t.i = i;
        t.j = j;
        if (head == "x") {
            expect('^');
            t.k = integer();
            t.type = Tok::XAtom;
        } else {
            t.type = Tok::RAtom;
        }
        return t;
    }

    const std::string& s_;
    size_t pos_ = 0;
    Tok tok_;
};

// One parser templated over the value type via small adaptor policies.
struct SymbolicOps {
    using Value = PolyFraction;
    static Value number(const std::string& digits) {
        return PolyFraction(Polynomial(Rational::parse(digits)));
    }
    Value name(const std::string& n) const {
        return PolyFraction(Polynomial::variable(Indet::param(n)));
    }
    static Value x_atom(int i, int j, int k) {
        return PolyFraction(Polynomial::variable(Indet::x(i, j, k)));
    }
    static Value r_atom(int i, int j) {
        return PolyFraction(Polynomial::variable(Indet::r(i, j)));
    }
    static Value sqrt_of(long long) {
        throw parse_error("sqrt() is not allowed in symbolic expressions");
    }
    static Value add(const Value& a, const Value& b) { return a + b; }
    static Value sub(const Value& a, const Value& b) { return a - b; }
    static Value mul(const Value& a, const Value& b) { return a * b; }
    static Value div(const Value& a, const Value& b) { return a / b; }
    static Value neg(const Value& a) { return -a; }
    static Value pow(const Value& a, long e) { return a.pow(e); }
};

struct NumericOps {
    using Value = Scalar;
    const std::map<std::string, Scalar>* env;
    static Value number(const std::string& digits) {
        return Scalar(Rational::parse(digits));
    }
    Value name(const std::string& n) const {
        auto it = env->find(n);
        if (it == env->end()) throw error("unbound name in expression: " + n);
        return it->second;
    }
    static Value x_atom(int, int, int) {
        throw parse_error("indeterminate atom in numeric expression");
    }
    static Value r_atom(int, int) {
        throw parse_error("indeterminate atom in numeric expression");
    }
    static Value sqrt_of(long long d) {
        if (d == 0) return Scalar(0);
        if (d == 1) return Scalar(1);
        return Scalar::sqrt_of(d);
    }
    static Value add(const Value& a, const Value& b) { return a + b; }
    static Value sub(const Value& a, const Value& b) { return a - b; }
    static Value mul(const Value& a, const Value& b) { return a * b; }
    static Value div(const Value& a, const Value& b) { return a / b; }
    static Value neg(const Value& a) { return -a; }
    static Value pow(const Value& a, long e) { return a.pow(e); }
};

template <class Ops>
class Parser {
public:
    Parser(const std::string& s, Ops ops) : lex_(s), ops_(ops), src_(s) {}

    typename Ops::Value parse() {
        auto v = expr();
        if (lex_.peek().type != Tok::End)
            throw parse_error("trailing tokens in expression: " + src_);
        return v;
    }

private:
    using V = typename Ops::Value;

    V expr() {
        V v = term();
        while (lex_.peek().type == Tok::Plus || lex_.peek().type == Tok::Minus) {
            bool plus = lex_.take().type == Tok::Plus;
            V t = term();
            v = plus ? Ops::add(v, t) : Ops::sub(v, t);
        }
        return v;
    }

    V term() {
        V v = unary();
        while (lex_.peek().type == Tok::Star || lex_.peek().type == Tok::Slash) {
            bool mul = lex_.take().type == Tok::Star;
            V t = unary();
            v = mul ? Ops::mul(v, t) : Ops::div(v, t);
        }
        return v;
    }

    V unary() {
        if (lex_.peek().type == Tok::Minus) {
            lex_.take();
            return Ops::neg(unary());
        }
        if (lex_.peek().type == Tok::Plus) {
            lex_.take();
            return unary();
        }
        return power();
    }

    V power() {
        V base = primary();
        if (lex_.peek().type == Tok::Caret) {
            lex_.take();
            bool negexp = false;
            if (lex_.peek().type == Tok::Minus) {
                lex_.take();
                negexp = true;
            }
            Tok e = lex_.take();
            if (e.type != Tok::Num)
                throw parse_error("expected integer exponent in: " + src_);
            long exp = std::stol(e.text);
            return Ops::pow(base, negexp ? -exp : exp);
        }
        return base;
    }

    V primary() {
        Tok t = lex_.take();
        switch (t.type) {
            case Tok::Num:
                return Ops::number(t.text);
            case Tok::Name:
                return ops_.name(t.text);
            case Tok::XAtom:
                return Ops::x_atom(t.i, t.j, t.k);
            case Tok::RAtom:
                return Ops::r_atom(t.i, t.j);
            case Tok::Sqrt: {
                if (lex_.take().type != Tok::LParen)
                    throw parse_error("expected ( after sqrt in: " + src_);
                bool neg = false;
                if (lex_.peek().type == Tok::Minus) {
                    lex_.take();
                    neg = true;
                }
                Tok num = lex_.take();
                if (num.type != Tok::Num)
                    throw parse_error("expected integer inside sqrt(): " + src_);
                if (lex_.take().type != Tok::RParen)
                    throw parse_error("unterminated sqrt() in: " + src_);
                long long d = std::stoll(num.text);
                if (neg) d = -d;
                if (d != 0 && d != 1 && !is_squarefree(d))
                    throw parse_error("sqrt of non-squarefree integer: " + src_);
                return Ops::sqrt_of(d);
            }
            case Tok::LParen: {
                V v = expr();
                if (lex_.take().type != Tok::RParen)
                    throw parse_error("missing ) in expression: " + src_);
                return v;
            }
            default:
                throw parse_error("unexpected token '" + t.text +
                                  "' in expression: " + src_);
        }
    }

    Lexer lex_;
    Ops ops_;
    const std::string& src_;
};

}  // namespace

PolyFraction parse_polyfraction(const std::string& text) {
    return Parser<SymbolicOps>(text, SymbolicOps{}).parse();
}

Polynomial parse_polynomial(const std::string& text) {
    return parse_polyfraction(text).as_polynomial();
}

Scalar parse_value(const std::string& text, const std::map<std::string, Scalar>& env) {
    return Parser<NumericOps>(text, NumericOps{&env}).parse();
}

}  // namespace pjordan
