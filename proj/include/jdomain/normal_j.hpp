#ifndef JDOMAIN_NORMAL_J_HPP
#define JDOMAIN_NORMAL_J_HPP

#include "jdomain/lie.hpp"

#include <string>
#include <vector>

namespace jdomain {

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckItem> items;
    bool ok() const;
    const CheckItem* first_failure() const;
    std::string text() const;
};

/// <e_i, e_j> = omega([j e_i, e_j]).
QMatrix gram_matrix(const LieAlgebra& b, const QMatrix& j, const QVec& omega);

/// Split solvability, j^2 = -1, integrability, and <.,.> symmetric, j-invariant, positive definite.
ValidationReport validate_normal_j(const LieAlgebra& b, const QMatrix& j, const QVec& omega);

/// omega'(X) = tr(ad(jX) - j ad(X)).
QVec koszul_form(const LieAlgebra& b, const QMatrix& j);

enum class RootKind { Alpha, Half, Minus, Plus };

/// Root space for alpha_k, alpha_k/2, (alpha_l - alpha_k)/2 or (alpha_l + alpha_k)/2 with k < l (0-based).
struct RootSpace {
    RootKind kind;
    std::size_t k = 0, l = 0;
    QVec coords;
    std::vector<QVec> basis;
    std::string name() const;
    Rational grade() const;
};

class NormalJAlgebra {
public:
    LieAlgebra b;
    QMatrix j;
    QVec omega;
    QMatrix gram;
    std::size_t rank = 0;
    std::vector<QVec> A, E;
    /// Every candidate root of the pattern, including absent ones (empty basis).
    std::vector<RootSpace> roots;
    std::vector<QVec> b0, bhalf, b1;

    std::size_t dim() const { return b.dim(); }
    QVec apply_j(const QVec& x) const { return j * x; }
    CVec apply_j(const CVec& x) const;
    Rational inner(const QVec& x, const QVec& y) const;
    /// jE = A_1 + ... + A_r.
    QVec jE() const;
    QVec E_sum() const;
    const RootSpace& root(RootKind kind, std::size_t k, std::size_t l = 0) const;

    struct Parts {
        QVec t, v, u;  // components in b(0), b(1/2), b(1)
    };
    Parts split(const QVec& x) const;
    /// Grade of x under ad(jE) if homogeneous.
    std::optional<Rational> grade_of(const QVec& x) const;
};

/// Throws ValidationError / GradingShapeError when the data is not a normal j-algebra of the expected shape.
NormalJAlgebra compute_grading(LieAlgebra b, QMatrix j, QVec omega);

/// The connection defined by -2<nabla_X Y, Z> = <[X,Y],Z> - <[Z,X],Y> - <X,[Z,Y]>.
QVec nabla_tilde(const NormalJAlgebra& N, const QVec& x, const QVec& y);

}  // namespace jdomain

#endif
