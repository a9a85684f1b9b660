#ifndef JDOMAIN_LIE_HPP
#define JDOMAIN_LIE_HPP

#include "jdomain/linalg.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace jdomain {

/// Finite-dimensional Lie algebra given by structure constants [e_i,e_j] = sum_k c[i][j][k] e_k.
class LieAlgebra {
public:
    LieAlgebra() = default;
    explicit LieAlgebra(std::vector<std::string> labels);

    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<std::size_t> index_of(const std::string& label) const;

    /// Sets [e_i,e_j] = v and [e_j,e_i] = -v.
    void set_bracket(std::size_t i, std::size_t j, const CVec& v);
    /// Sets a single constant without touching the mirrored entry (used by importers).
    void set_constant(std::size_t i, std::size_t j, std::size_t k, const Gaussian& c);
    const CVec& structure(std::size_t i, std::size_t j) const { return c_[i * dim() + j]; }

    bool is_real() const;
    CVec bracket(const CVec& x, const CVec& y) const;
    QVec bracket(const QVec& x, const QVec& y) const;
    /// Column j is [x, e_j].
    CMatrix ad(const CVec& x) const;
    QMatrix ad(const QVec& x) const;

    CVec basis_vector(std::size_t i) const { return unit<Gaussian>(dim(), i); }
    QVec real_basis_vector(std::size_t i) const { return unit<Rational>(dim(), i); }

    /// Human-readable linear combination over the basis labels.
    std::string format(const CVec& x) const;
    std::string format(const QVec& x) const { return format(to_complex(x)); }

private:
    std::vector<std::string> labels_;
    std::vector<CVec> c_;
};

std::optional<std::array<std::size_t, 2>> antisymmetry_violation(const LieAlgebra& L);
/// First basis triple (i<j<k) where the Jacobi identity fails.
std::optional<std::array<std::size_t, 3>> jacobi_violation(const LieAlgebra& L);

/// Real span of [a, b] over basis pairs, reduced-echelon.
std::vector<QVec> bracket_span(const LieAlgebra& L, const std::vector<QVec>& a, const std::vector<QVec>& b);
std::vector<CVec> bracket_span(const LieAlgebra& L, const std::vector<CVec>& a, const std::vector<CVec>& b);

std::vector<std::vector<QVec>> derived_series(const LieAlgebra& L);
bool is_solvable(const LieAlgebra& L);

/// Characteristic polynomial det(t I - A), coefficients from constant term upward.
QVec characteristic_polynomial(const QMatrix& a);
/// Rational roots with multiplicities.
std::vector<std::pair<Rational, unsigned>> rational_roots(const QVec& poly);
bool has_rational_spectrum(const QMatrix& a);
/// Solvable and every ad(e_i) has a rational spectrum.
bool is_split_solvable(const LieAlgebra& L);

struct WeightSpace {
    QVec weight;
    std::vector<QVec> basis;
};

/// Joint eigenspaces of ad(a), a in commuting, ordered by first appearance of the eigenvalues.
std::vector<WeightSpace> simultaneous_eigenspaces(const LieAlgebra& L, const std::vector<QVec>& commuting);

/// {x in V : [x, W] contained in W}.
std::vector<QVec> relative_normalizer(const LieAlgebra& L, const std::vector<QVec>& V, const std::vector<QVec>& W);

/// Restriction of L to a closed subspace, with new basis labels.
LieAlgebra subalgebra(const LieAlgebra& L, const std::vector<QVec>& basis, std::vector<std::string> labels);

}  // namespace jdomain

#endif
