#ifndef JDOMAIN_SIEGEL_HPP
#define JDOMAIN_SIEGEL_HPP

#include "jdomain/normal_j.hpp"

#include <complex>
#include <memory>

namespace jdomain {

using cplx = std::complex<double>;
using NVec = std::vector<cplx>;

inline constexpr double kPivotTolerance = 1e-12;

/// Siegel domain D(Omega, Q) attached to a normal j-algebra, in coordinates
/// u (complex coordinates on b(1)_C w.r.t. a real root-adapted basis) and
/// v (complex coordinates on (b(1/2), j)).
class SiegelDomain {
public:
    std::shared_ptr<const NormalJAlgebra> N;
    std::vector<QVec> ubasis;
    std::vector<QVec> vbasis;
    /// Q(v_a, v_b) in u coordinates.
    std::vector<std::vector<CVec>> Q;
    QVec E_u;

    std::vector<std::size_t> e_index;
    /// Basis of the sum of the (alpha_l - alpha_k)/2 spaces, grouped by k.
    std::vector<QVec> lower;
    std::vector<std::size_t> lower_k;
    std::vector<QMatrix> lower_ad_u;
    std::vector<CMatrix> lower_ad_v;
    std::vector<std::vector<std::size_t>> lower_of_k, plus_of_k;
    std::vector<QMatrix> elim_inv;
    /// Diagonal of ad(A_k) on u and v coordinates.
    std::vector<QVec> scale_u, scale_v;

    std::size_t udim() const { return ubasis.size(); }
    std::size_t vdim() const { return vbasis.size(); }
    std::size_t rank() const { return N->rank; }

    QVec u_coords(const QVec& x) const;
    CVec v_coords(const QVec& x) const;
    QVec from_u(const QVec& u) const;
    QVec from_v(const CVec& v) const;

    CVec Qform(const CVec& v, const CVec& w) const;
    NVec Qform(const NVec& v, const NVec& w) const;

    /// ad(t) on b(1) in u coordinates and on b(1/2) in complex v coordinates, t in b(0).
    QMatrix ad_u(const QVec& t) const;
    CMatrix ad_v(const QVec& t) const;

    /// Reference point (iE, 0) as holomorphic coordinates (u, v).
    CVec reference_point() const;
};

SiegelDomain build_siegel(std::shared_ptr<const NormalJAlgebra> N);

struct SiegelChecks {
    bool hermitian = false;
    bool complex_linear = false;
    bool positive = false;
    std::string detail;
};
SiegelChecks check_siegel(const SiegelDomain& S);

/// U = Ad(exp Y_1) ... Ad(exp Y_r) (sum_k p_k E_k); lower holds the coefficients of the Y_k on S.lower.
template <class T>
struct ConeDecomposition {
    std::vector<T> pivots;
    std::vector<T> lower;
};

ConeDecomposition<Rational> peel(const SiegelDomain& S, const QVec& u);
ConeDecomposition<Gaussian> peel(const SiegelDomain& S, const CVec& u);
ConeDecomposition<double> peel(const SiegelDomain& S, const std::vector<double>& u);
ConeDecomposition<cplx> peel(const SiegelDomain& S, const NVec& u);

QVec replay(const SiegelDomain& S, const ConeDecomposition<Rational>& d);
CVec replay(const SiegelDomain& S, const ConeDecomposition<Gaussian>& d);
std::vector<double> replay(const SiegelDomain& S, const ConeDecomposition<double>& d);
NVec replay(const SiegelDomain& S, const ConeDecomposition<cplx>& d);

bool in_cone(const SiegelDomain& S, const QVec& u);

struct DomainPoint {
    NVec u, v;
};

struct Letter {
    enum Kind { Translate, Shear, Scale, Lower } kind = Translate;
    std::vector<double> u0;  // Translate
    NVec v0;                 // Shear
    std::size_t index = 0;   // Scale: k; Lower: position in S.lower
    double t = 0;            // Scale, Lower
};
using BWord = std::vector<Letter>;

/// Left-to-right group composition: the rightmost letter acts first.
DomainPoint affine_action(const SiegelDomain& S, const BWord& word, const DomainPoint& p, bool check = true);
bool in_domain(const SiegelDomain& S, const DomainPoint& p);
/// Ad(t0) on b(1)_C for a word of Scale/Lower letters.
NVec ad_action_u(const SiegelDomain& S, const BWord& word, const NVec& u);
/// Real coordinates in b of the element X with exp(X) equal to the letter.
std::vector<double> letter_generator(const SiegelDomain& S, const Letter& l);

}  // namespace jdomain

#endif
