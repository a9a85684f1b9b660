#include "jdomain/poly.hpp"

#include <cctype>
#include <numeric>

namespace jdomain {

bool GradedLexGreater::operator()(const Exponent& a, const Exponent& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da > db;
    return a > b;
}

VarList make_vars(std::vector<std::string> names) {
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

MultiPoly MultiPoly::constant(VarList vars, const Gaussian& c) {
    MultiPoly p(vars);
    p.add_term(Exponent(p.nvars(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(VarList vars, std::size_t i) {
    MultiPoly p(vars);
    Exponent e(p.nvars(), 0);
    e.at(i) = 1;
    p.add_term(e, Gaussian(1));
    return p;
}

void MultiPoly::check_same(const MultiPoly& o) const {
    if (vars_ == o.vars_) return;
    if (!vars_ || !o.vars_ || *vars_ != *o.vars_)
        throw std::invalid_argument("polynomials over different variable lists");
}

int MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.begin()->first;
    return static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
}

Gaussian MultiPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Gaussian() : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Gaussian& c) {
    if (e.size() != nvars()) throw std::invalid_argument("exponent length mismatch");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    if (var >= nvars()) throw std::invalid_argument("no such variable");
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponent f = e;
        --f[var];
        out.add_term(f, c * Gaussian(static_cast<long>(e[var])));
    }
    return out;
}

template <class S>
static S monomial_value(const Exponent& e, const std::vector<S>& point) {
    S v(1);
    for (std::size_t k = 0; k < e.size(); ++k)
        for (unsigned p = 0; p < e[k]; ++p) v = v * point[k];
    return v;
}

Gaussian MultiPoly::eval(const CVec& point) const {
    if (point.size() != nvars()) throw std::invalid_argument("point dimension mismatch");
    Gaussian s;
    for (const auto& [e, c] : terms_) s += c * monomial_value(e, point);
    return s;
}

std::complex<double> MultiPoly::eval(const std::vector<std::complex<double>>& point) const {
    if (point.size() != nvars()) throw std::invalid_argument("point dimension mismatch");
    std::complex<double> s;
    for (const auto& [e, c] : terms_) s += c.to_complex() * monomial_value(e, point);
    return s;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(*this);
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_same(b);
    MultiPoly out(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e(ea.size());
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            out.add_term(e, ca * cb);
        }
    return out;
}

MultiPoly operator*(const Gaussian& s, const MultiPoly& a) {
    MultiPoly out(a.vars_);
    if (s.is_zero()) return out;
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, s * c);
    return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    a.check_same(b);
    return a.terms_ == b.terms_;
}

// Printing: canonical order, explicit '*', coefficient forms "r", "r*i", "(a+b*i)".

static bool leading_negative(const Gaussian& c) {
    return c.re().sign() < 0 || (c.re().is_zero() && c.im().sign() < 0);
}

static std::string coefficient_token(const Gaussian& c) {
    if (c.is_real()) return c.re().str();
    if (c.re().is_zero()) return c.im() == Rational(1) ? "i" : c.im().str() + "*i";
    std::string im = c.im().abs() == Rational(1) ? "i" : c.im().abs().str() + "*i";
    return "(" + c.re().str() + (c.im().sign() > 0 ? "+" : "-") + im + ")";
}

std::string format_term(const Gaussian& c0, const std::string& atom, bool first) {
    bool neg = leading_negative(c0);
    Gaussian c = neg ? -c0 : c0;
    std::string body;
    if (atom.empty())
        body = coefficient_token(c);
    else if (c == Gaussian(1))
        body = atom;
    else
        body = coefficient_token(c) + "*" + atom;
    if (first) return (neg ? "-" : "") + body;
    return (neg ? " - " : " + ") + body;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += (*vars_)[k];
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        out += format_term(c, mono, out.empty());
    }
    return out;
}

namespace {

class Parser {
public:
    Parser(std::string_view s, VarList vars) : s_(s), vars_(std::move(vars)) {}

    MultiPoly run() {
        MultiPoly p = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing characters");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("polynomial '" + std::string(s_) + "': " + why + " at " + std::to_string(pos_));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MultiPoly expr() {
        MultiPoly acc(vars_);
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        MultiPoly t = term();
        acc = neg ? -t : t;
        while (true) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    MultiPoly term() {
        MultiPoly acc = power();
        while (true) {
            if (eat('*')) {
                acc = acc * power();
            } else if (eat('/')) {
                MultiPoly d = power();
                if (d.degree() != 0) fail("division by a non-constant");
                Gaussian c = d.terms().begin()->second;
                acc = (Gaussian(1) / c) * acc;
            } else {
                break;
            }
        }
        return acc;
    }

    MultiPoly power() {
        MultiPoly base = atom();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            unsigned k = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
            MultiPoly r = MultiPoly::constant(vars_, Gaussian(1));
            for (unsigned q = 0; q < k; ++q) r = r * base;
            return r;
        }
        return base;
    }

    MultiPoly atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
                ++pos_;
            return MultiPoly::constant(vars_, Gaussian(Rational::parse(s_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            if (name == "i") return MultiPoly::constant(vars_, Gaussian::i());
            for (std::size_t k = 0; k < vars_->size(); ++k)
                if ((*vars_)[k] == name) return MultiPoly::variable(vars_, k);
            fail("unknown variable " + name);
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    VarList vars_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text, VarList vars) {
    for (const auto& v : *vars)
        if (v == "i") throw ParseError("variable name 'i' is reserved");
    return Parser(text, std::move(vars)).run();
}

}  // namespace jdomain
