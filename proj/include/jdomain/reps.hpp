#ifndef JDOMAIN_REPS_HPP
#define JDOMAIN_REPS_HPP

#include "jdomain/vfields.hpp"

#include <memory>
#include <optional>

namespace jdomain {

/// g realized by fields, with b, its normal j-structure, the Siegel domain, k and g_-.
struct GroupModel {
    std::string name;
    FieldAlgebra F;
    std::vector<std::string> b_labels;
    std::vector<QVec> b_in_g;
    std::shared_ptr<const NormalJAlgebra> N;
    std::shared_ptr<const SiegelDomain> S;
    CVec reference;
    std::vector<QVec> k;
    std::vector<CVec> g_minus;
    ConeAlgebra g0;

    const LieAlgebra& g() const { return F.g; }
    QVec b_to_g(const QVec& x) const;
    CVec b_to_g(const CVec& x) const;
};

/// Infers j at the reference point and uses omega (default: the Koszul form) on span(b_labels).
GroupModel build_model(std::string name, FieldAlgebra F, std::vector<std::string> b_labels, CVec reference,
                       std::optional<QVec> omega = std::nullopt);

/// tau(U+V+T) = (V+ijV)/2 + T + ijT, in b coordinates; the CVec overload is the C-linear extension.
CVec tau(const NormalJAlgebra& N, const QVec& x);
CVec tau(const NormalJAlgebra& N, const CVec& x);
/// Complex span of tau(b).
std::vector<CVec> b_minus(const NormalJAlgebra& N);

/// theta(Z) = sum_i theta_i Z_i on g_C.
struct ThetaChar {
    CVec theta;
};
ThetaChar theta_from_xi(const QVec& xi);
/// Empty when theta kills [g_-, g_-]; otherwise a witness pair.
std::optional<std::string> character_violation(const GroupModel& M, const ThetaChar& th);

/// d chi^theta(X) = theta(tau(X)) for X in b coordinates.
Gaussian dchi(const GroupModel& M, const ThetaChar& th, const QVec& x);
/// sigma_k = d chi(A_k).
CVec sigma(const GroupModel& M, const ThetaChar& th);
cplx chi_word(const GroupModel& M, const ThetaChar& th, const BWord& word);
/// d chi on the basis of b, for repeated chi_word evaluations.
std::vector<cplx> dchi_table(const GroupModel& M, const ThetaChar& th);
cplx chi_word(const SiegelDomain& S, const std::vector<cplx>& table, const BWord& word);

ValidationReport check_zero_extension(const GroupModel& M, const ThetaChar& th);

/// Delta(W) = prod_k p_k^{2 Re sigma_k} from the peel pivots.
cplx delta_eval(const SiegelDomain& S, const CVec& sigma, const NVec& W);
/// Delta_{xi,xi'}(W) = prod_k p_k^{conj(sigma_k - sigma'_k)}.
cplx delta_eval2(const SiegelDomain& S, const CVec& sigma, const CVec& sigma2, const NVec& W);
/// K((U,V),(U',V')) = Delta((U - conj U')/i - 2Q(V,V')).
cplx kernel_eval(const SiegelDomain& S, const CVec& sigma, const DomainPoint& z, const DomainPoint& w);

/// Real covectors on g killing [g_-, g_-].
std::vector<QVec> characters_space(const LieAlgebra& g, const std::vector<CVec>& g_minus);

struct XiParam {
    Rational x, y;
    long n = 0, nprime = 0;
};
bool is_unitarizable(const XiParam& xi);
enum class Level { B, G };
/// Class tag; throws NotUnitarizable.
std::string partition_label(const XiParam& xi, Level level);

}  // namespace jdomain

#endif
