#ifndef JDOMAIN_SUITE_HPP
#define JDOMAIN_SUITE_HPP

#include "jdomain/serialize.hpp"

#include <cstdint>
#include <random>

namespace jdomain {

struct SuiteOptions {
    std::size_t chi_samples = 200;
    std::size_t cone_samples = 100;
    std::size_t numeric_samples = 100;
    double tolerance = 1e-9;
    std::uint32_t seed = 20240611;
    /// 0 reads JDOMAIN_THREADS (default 1).
    unsigned threads = 0;
};

struct SuiteReport {
    std::string name;
    std::vector<CheckItem> items;

    bool ok() const;
    std::string text() const;
    json to_json() const;
};

unsigned thread_count(unsigned requested);

/// Runs every generic check on a fields dataset; never throws for mathematical failures.
SuiteReport run_suite(const FieldsSpec& spec, const SuiteOptions& opt = {});
/// Jacobi, normal j-algebra axioms and grading shape for a bare algebra.
SuiteReport run_normal_j_suite(const std::string& name, const NormalJSpec& spec);
SuiteReport run_lie_suite(const std::string& name, const LieAlgebra& g);

using Rng = std::mt19937_64;

Rational random_rational(Rng& rng, long num_range, long den_max);
double random_real(Rng& rng, double lo, double hi);
/// Exact random cone decomposition with positive pivots.
ConeDecomposition<Rational> random_decomposition(const SiegelDomain& S, Rng& rng);
std::vector<double> random_cone_point(const SiegelDomain& S, Rng& rng);
DomainPoint random_domain_point(const SiegelDomain& S, Rng& rng);
BWord random_word(const SiegelDomain& S, Rng& rng, std::size_t length, bool b0_only);

CheckItem check_jacobi(const LieAlgebra& g);
CheckItem check_corrupted_constant(const LieAlgebra& g);
CheckItem check_grading_law(const NormalJAlgebra& N);
CheckItem check_tau_homomorphism(const GroupModel& M);
CheckItem check_peel_replay(const SiegelDomain& S, std::size_t samples, Rng& rng);
CheckItem check_chi_multiplicativity(const GroupModel& M, const ThetaChar& th, std::size_t samples, Rng& rng);
CheckItem check_delta_law(const GroupModel& M, const ThetaChar& th, std::size_t samples, double tol, Rng& rng);
CheckItem check_kernel_invariance(const GroupModel& M, const ThetaChar& th, std::size_t samples, double tol,
                                  Rng& rng);
/// Bracket identities, psi, X(1)/X(1/2) annihilation and the jPhi closure property on random tableaux.
std::vector<CheckItem> check_field_calculus(const GroupModel& M, Rng& rng);
std::vector<CheckItem> check_grade_table(const GroupModel& M, const Expected& e);
std::vector<CheckItem> check_classification(const Expected& e);

/// Y and Z tableaux read off from a homogeneous field.
YData y_from_field(const SiegelDomain& S, const PolyVectorField& f);
ZData z_from_field(const SiegelDomain& S, const PolyVectorField& f);

}  // namespace jdomain

#endif
