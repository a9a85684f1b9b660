#ifndef JDOMAIN_BUILTINS_HPP
#define JDOMAIN_BUILTINS_HPP

#include "jdomain/reps.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace jdomain {

/// Sparse element of g: (label, coefficient text) pairs.
using SparseElem = std::vector<std::pair<std::string, std::string>>;

struct BracketRelation {
    SparseElem x, y, result;
};

struct UnitaritySample {
    std::vector<std::string> xi;
    bool unitarizable = false;
};

struct PartitionSample {
    std::vector<std::string> a, b;
    std::string level;
    bool same = false;
};

/// Golden data a dataset must reproduce.
struct Expected {
    std::map<std::string, long> dims;
    std::vector<SparseElem> isotropy;
    std::vector<SparseElem> b_minus;
    std::vector<BracketRelation> brackets;
    std::vector<std::pair<std::string, std::string>> grades;
    std::optional<long> characters_dim;
    std::vector<UnitaritySample> unitarity;
    std::vector<PartitionSample> partition;
};

/// A domain given by its generating vector fields.
struct FieldsSpec {
    std::string name;
    std::vector<std::string> coordinates;
    long udim = 0;
    std::vector<std::string> reference;
    std::vector<std::string> labels;
    std::vector<std::vector<std::string>> components;
    std::vector<std::string> b_labels;
    std::vector<std::string> xi_names;
    std::vector<SparseElem> xi_basis;
    std::vector<bool> xi_integral;
    Expected expected;
};

FieldsSpec vinberg5_spec();
FieldsSpec dI21_spec();
FieldsSpec halfplane_spec();
std::vector<std::string> builtin_names();
std::optional<FieldsSpec> builtin_spec(const std::string& name);

Gaussian parse_gaussian(std::string_view text);
CVec parse_element(const LieAlgebra& g, const SparseElem& e);
QVec parse_covector(const LieAlgebra& g, const SparseElem& e);

FieldAlgebra field_algebra_of(const FieldsSpec& spec);
GroupModel model_of(const FieldsSpec& spec);

/// Covector sum_k coords_k * xi_basis_k on g.
QVec xi_covector(const FieldsSpec& spec, const LieAlgebra& g, const std::vector<Rational>& coords);

}  // namespace jdomain

#endif
