#include "jdomain/scalar.hpp"

#include "jdomain/errors.hpp"

#include <cctype>

namespace jdomain {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::domain_error("zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

static bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    mpq_class out;
    auto slash = s.find('/');
    auto dot = s.find('.');
    if (slash != std::string_view::npos) {
        auto p = s.substr(0, slash), q = s.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q)) throw ParseError("bad rational: " + std::string(text));
        mpz_class den{std::string(q)};
        if (den == 0) throw ParseError("zero denominator: " + std::string(text));
        out = mpq_class(mpz_class(std::string(p)), den);
    } else if (dot != std::string_view::npos) {
        auto ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty()))
            throw ParseError("bad rational: " + std::string(text));
        mpz_class scale = 1;
        for (std::size_t k = 0; k < fp.size(); ++k) scale *= 10;
        mpz_class whole(std::string(ip.empty() ? "0" : ip));
        mpz_class frac(std::string(fp.empty() ? "0" : fp));
        out = mpq_class(whole * scale + frac, scale);
    } else {
        if (!all_digits(s)) throw ParseError("bad rational: " + std::string(text));
        out = mpq_class(mpz_class(std::string(s)));
    }
    out.canonicalize();
    if (neg) out = -out;
    return Rational(out);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

Gaussian& Gaussian::operator/=(const Gaussian& o) {
    Rational n = o.norm2();
    if (n.is_zero()) throw std::domain_error("division by zero");
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

std::string Gaussian::str() const {
    if (im_.is_zero()) return re_.str();
    std::string im = im_ == Rational(1) ? "" : (im_ == Rational(-1) ? "-" : im_.str());
    if (re_.is_zero()) return im + "i";
    std::string out = re_.str();
    if (im_.sign() > 0) out += "+";
    return out + im + "i";
}

}  // namespace jdomain
