#ifndef JDOMAIN_POLY_HPP
#define JDOMAIN_POLY_HPP

#include "jdomain/linalg.hpp"

#include <complex>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace jdomain {

using Exponent = std::vector<unsigned>;

/// Higher total degree first, then lexicographically larger exponent first.
struct GradedLexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

using VarList = std::shared_ptr<const std::vector<std::string>>;

VarList make_vars(std::vector<std::string> names);

/// One summand "c*atom" of a printed linear combination, with the sign folded into the joiner.
std::string format_term(const Gaussian& c, const std::string& atom, bool first);

/// Polynomial in the holomorphic coordinates with Q(i) coefficients.
class MultiPoly {
public:
    using Terms = std::map<Exponent, Gaussian, GradedLexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(VarList vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(VarList vars, const Gaussian& c);
    static MultiPoly variable(VarList vars, std::size_t i);
    /// Parse the canonical printed form (and ordinary arithmetic with + - * / ^ and parentheses).
    static MultiPoly parse(std::string_view text, VarList vars);

    const VarList& vars() const { return vars_; }
    std::size_t nvars() const { return vars_ ? vars_->size() : 0; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;
    Gaussian coefficient(const Exponent& e) const;

    void add_term(const Exponent& e, const Gaussian& c);

    MultiPoly derivative(std::size_t var) const;
    Gaussian eval(const CVec& point) const;
    std::complex<double> eval(const std::vector<std::complex<double>>& point) const;

    std::string str() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Gaussian& s, const MultiPoly& a);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

private:
    void check_same(const MultiPoly& o) const;

    VarList vars_;
    Terms terms_;
};

}  // namespace jdomain

#endif
