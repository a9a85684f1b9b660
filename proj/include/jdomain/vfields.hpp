#ifndef JDOMAIN_VFIELDS_HPP
#define JDOMAIN_VFIELDS_HPP

#include "jdomain/normal_j.hpp"
#include "jdomain/poly.hpp"
#include "jdomain/siegel.hpp"

#include <map>
#include <optional>

namespace jdomain {

/// Holomorphic polynomial vector field; the first udim components are the u-directions.
struct PolyVectorField {
    VarList vars;
    std::size_t udim = 0;
    std::vector<MultiPoly> comp;

    static PolyVectorField zero(VarList vars, std::size_t udim);
    static PolyVectorField parse(const std::vector<std::string>& components, VarList vars, std::size_t udim);

    std::size_t vdim() const { return comp.size() - udim; }
    bool is_zero() const;
    int degree() const;
    CVec eval(const CVec& point) const;
    NVec eval(const NVec& point) const;
    std::string str() const;

    PolyVectorField& operator+=(const PolyVectorField& o);
    PolyVectorField& operator-=(const PolyVectorField& o);
    friend PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b) { return a += b; }
    friend PolyVectorField operator-(PolyVectorField a, const PolyVectorField& b) { return a -= b; }
    friend PolyVectorField operator*(const Gaussian& s, PolyVectorField a);
    friend bool operator==(const PolyVectorField& a, const PolyVectorField& b);
};

/// [X,Y] = D_X Y - D_Y X.
PolyVectorField vf_bracket(const PolyVectorField& X, const PolyVectorField& Y);

/// Coordinates of S with names; defaults to u1.., v1...
VarList default_vars(const SiegelDomain& S);

PolyVectorField field_d_u(const SiegelDomain& S, const VarList& vars, const CVec& u0);
PolyVectorField field_dtilde_v(const SiegelDomain& S, const VarList& vars, const CVec& v0);
PolyVectorField field_linear(const SiegelDomain& S, const VarList& vars, const CMatrix& A, const CMatrix& B);
PolyVectorField field_euler(const SiegelDomain& S, const VarList& vars);
PolyVectorField field_dprime(const SiegelDomain& S, const VarList& vars);
/// X^# for X in b: d/dt exp(tX) applied to the point.
PolyVectorField field_of_element(const SiegelDomain& S, const VarList& vars, const QVec& x);

/// Y_{Phi,c}: Phi is vdim x udim, c[a][b] in v-coordinates.
struct YData {
    CMatrix Phi;
    std::vector<std::vector<CVec>> c;
};
/// Z_{a,b}: a[i][k] in u-coordinates, b[i][a] in v-coordinates.
struct ZData {
    std::vector<std::vector<CVec>> a;
    std::vector<std::vector<CVec>> b;
};
PolyVectorField field_Y(const SiegelDomain& S, const VarList& vars, const YData& y);
PolyVectorField field_Z(const SiegelDomain& S, const VarList& vars, const ZData& z);
/// Solves (Y2) for the symmetric c belonging to Phi.
std::optional<YData> complete_Y(const SiegelDomain& S, const CMatrix& Phi);

/// Bracket closure of {ad T|b(1) : T in b(0)} inside gl(b(1)).
struct ConeAlgebra {
    std::vector<QMatrix> basis;
    std::size_t dim() const { return basis.size(); }
    bool contains(const QMatrix& m) const;
};
ConeAlgebra cone_algebra(const SiegelDomain& S);

ValidationReport check_Y_conditions(const SiegelDomain& S, const ConeAlgebra& g0, const YData& y);
ValidationReport check_Z_conditions(const SiegelDomain& S, const ConeAlgebra& g0, const ZData& z);

/// gamma with [euler, X] = gamma X, or nullopt (not homogeneous, or zero).
std::optional<Rational> grade_classify(const PolyVectorField& X);
std::map<Rational, PolyVectorField> decompose_by_grade(const PolyVectorField& X);

PolyVectorField psi_map(const SiegelDomain& S, const PolyVectorField& Y);
PolyVectorField phi_map(const SiegelDomain& S, const PolyVectorField& Z);

/// Finite-dimensional real Lie algebra of fields; g has [X,Y] = coordinates of [Y^#, X^#].
struct FieldAlgebra {
    VarList vars;
    std::size_t udim = 0;
    std::vector<std::string> labels;
    std::vector<PolyVectorField> fields;
    LieAlgebra g;
    /// Real coefficient vectors of the fields over (component, monomial) keys.
    std::map<std::pair<std::size_t, Exponent>, std::size_t> keys;
    std::vector<QVec> flat;

    std::optional<QVec> coords(const PolyVectorField& f) const;
    PolyVectorField field_of(const QVec& x) const;
    PolyVectorField field_of(const CVec& x) const;
};
/// Throws ValidationError if the fields are dependent or not closed under the bracket.
FieldAlgebra make_field_algebra(VarList vars, std::size_t udim, std::vector<std::string> labels,
                                std::vector<PolyVectorField> fields);

/// Real span of fields vanishing at the point, in g-coordinates.
std::vector<QVec> isotropy_at(const FieldAlgebra& F, const CVec& point);
/// Complex kernel of the C-linear extension of X -> X^#_p.
std::vector<CVec> compute_g_minus(const FieldAlgebra& F, const CVec& point);
/// Matrix of j on span(b_basis) from (jX)^#_p = i X^#_p.
QMatrix infer_j(const FieldAlgebra& F, const std::vector<QVec>& b_basis, const CVec& point);

/// Each isotropy element X satisfies X(-1) = phi(X(1)) and X(-1/2) = psi(X(1/2)).
ValidationReport check_isotropy_shape(const SiegelDomain& S, const FieldAlgebra& F, const std::vector<QVec>& k);

}  // namespace jdomain

#endif
