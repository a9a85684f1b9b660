#ifndef JDOMAIN_SCALAR_HPP
#define JDOMAIN_SCALAR_HPP

#include <gmpxx.h>

#include <complex>
#include <compare>
#include <string>
#include <string_view>

namespace jdomain {

/// Arbitrary-precision rational, always in lowest terms.
class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}
    Rational(long n, long d);
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    /// Accepts "p", "p/q" and finite decimals such as "-0.25".
    static Rational parse(std::string_view s);

    std::string str() const;
    double to_double() const { return v_.get_d(); }
    const mpq_class& raw() const { return v_; }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class v_;
};

/// Element of Q(i).
class Gaussian {
public:
    Gaussian() = default;
    Gaussian(long v) : re_(v) {}
    Gaussian(Rational re) : re_(std::move(re)) {}
    Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Gaussian i() { return Gaussian(0, 1); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    Gaussian conj() const { return Gaussian(re_, -im_); }
    Rational norm2() const { return re_ * re_ + im_ * im_; }
    std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

    /// "a", "bi", "a+bi" with rational parts.
    std::string str() const;

    Gaussian operator-() const { return Gaussian(-re_, -im_); }
    Gaussian& operator+=(const Gaussian& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Gaussian& operator-=(const Gaussian& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Gaussian& operator*=(const Gaussian& o);
    Gaussian& operator/=(const Gaussian& o);

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
    friend bool operator==(const Gaussian& a, const Gaussian& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

private:
    Rational re_, im_;
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Gaussian& x) { return x.is_zero(); }
inline bool is_zero(const std::complex<double>& x) { return x == std::complex<double>(); }

inline Rational conj(const Rational& x) { return x; }
inline Gaussian conj(const Gaussian& x) { return x.conj(); }

}  // namespace jdomain

#endif
