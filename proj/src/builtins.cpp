#include "jdomain/builtins.hpp"

namespace jdomain {

namespace {

Expected vinberg5_expected() {
    Expected e;
    e.dims = {{"g", 12}, {"b", 10}, {"k", 2}, {"rank", 3}, {"udim", 5}, {"vdim", 0}};
    e.isotropy = {{{"W1", "1"}}, {{"W2", "1"}}};
    e.b_minus = {{{"E1", "1"}, {"A1", "i"}},
                 {{"E2", "1"}, {"A2", "i"}},
                 {{"E3", "1"}, {"A3", "i"}},
                 {{"E31", "1"}, {"A31", "i"}},
                 {{"E32", "1"}, {"A32", "i"}}};
    e.brackets = {
        {{{"W1", "1"}}, {{"E1", "1"}, {"A1", "i"}}, {{"A1", "-2"}, {"E1", "2*i"}, {"W1", "i"}}},
        {{{"W1", "1"}}, {{"E31", "1"}, {"A31", "i"}}, {{"E31", "i"}, {"A31", "-1"}}},
        {{{"W2", "1"}}, {{"E2", "1"}, {"A2", "i"}}, {{"A2", "-2"}, {"W2", "i"}, {"E2", "2*i"}}},
        {{{"W2", "1"}}, {{"E32", "1"}, {"A32", "i"}}, {{"E32", "i"}, {"A32", "-1"}}},
    };
    e.grades = {{"E1", "-1"}, {"E2", "-1"}, {"E3", "-1"}, {"E31", "-1"}, {"E32", "-1"},
                {"A1", "0"},  {"A2", "0"},  {"A3", "0"},  {"A31", "0"},  {"A32", "0"},
                {"W1", "mixed"}, {"W2", "mixed"}};
    e.characters_dim = 4;
    e.unitarity = {{{"-1", "0", "1", "1"}, true},
                   {{"0", "5", "0", "0"}, true},
                   {{"-1", "0", "0", "1"}, false},
                   {{"1", "0", "1", "1"}, false}};
    e.partition = {{{"-1", "0", "2", "3"}, {"-2", "7", "2", "3"}, "G", true},
                   {{"-1", "0", "1", "1"}, {"-2", "3", "4", "5"}, "B", true},
                   {{"0", "1", "0", "0"}, {"0", "2", "0", "0"}, "B", false},
                   {{"0", "1", "0", "0"}, {"0", "2", "0", "0"}, "G", false}};
    return e;
}

}  // namespace

FieldsSpec vinberg5_spec() {
    FieldsSpec s;
    s.name = "vinberg5";
    s.coordinates = {"z1", "z2", "z3", "z4", "z5"};
    s.udim = 5;
    s.reference = {"i", "i", "i", "0", "0"};
    s.labels = {"A1", "A2", "A3", "A31", "A32", "E1", "E2", "E3", "E31", "E32", "W1", "W2"};
    s.components = {
        {"z1", "0", "0", "z4/2", "0"},
        {"0", "z2", "0", "0", "z5/2"},
        {"0", "0", "z3", "z4/2", "z5/2"},
        {"0", "0", "2*z4", "z1", "0"},
        {"0", "0", "2*z5", "0", "z2"},
        {"1", "0", "0", "0", "0"},
        {"0", "1", "0", "0", "0"},
        {"0", "0", "1", "0", "0"},
        {"0", "0", "0", "1", "0"},
        {"0", "0", "0", "0", "1"},
        {"-z1^2 - 1", "0", "-z4^2", "-z1*z4", "0"},
        {"0", "-z2^2 - 1", "-z5^2", "0", "-z2*z5"},
    };
    s.b_labels = {"A1", "A2", "A3", "A31", "A32", "E1", "E2", "E3", "E31", "E32"};
    s.xi_names = {"x", "y", "n", "nprime"};
    s.xi_basis = {{{"E3", "1"}}, {{"A3", "1"}}, {{"W1", "1"}, {"E1", "-1/2"}}, {{"W2", "1"}, {"E2", "-1/2"}}};
    s.xi_integral = {false, false, true, true};
    s.expected = vinberg5_expected();
    return s;
}

FieldsSpec dI21_spec() {
    FieldsSpec s;
    s.name = "dI21";
    s.coordinates = {"U", "V"};
    s.udim = 1;
    s.reference = {"i", "0"};
    s.labels = {"A", "E", "V1", "V2", "Dp", "Y1", "Yi", "Z"};
    s.components = {
        {"U", "V/2"}, {"1", "0"}, {"i*V", "1"}, {"V", "i"},
        {"0", "i*V"}, {"i*U*V", "U + i*V^2"}, {"U*V", "i*U + V^2"}, {"U^2", "U*V"},
    };
    s.b_labels = {"A", "E", "V1", "V2"};
    s.xi_names = {"lambda"};
    s.xi_basis = {{{"E", "3"}, {"Dp", "2"}, {"Z", "3"}}};
    s.xi_integral = {false};
    Expected& e = s.expected;
    e.dims = {{"g", 8}, {"b", 4}, {"k", 4}, {"rank", 1}, {"udim", 1}, {"vdim", 1}};
    e.isotropy = {{{"Dp", "1"}}, {{"Y1", "1"}, {"V2", "-1"}}, {{"Yi", "1"}, {"V1", "1"}}, {{"Z", "1"}, {"E", "1"}}};
    e.b_minus = {{{"E", "1"}, {"A", "i"}}, {{"V1", "1"}, {"V2", "i"}}};
    e.grades = {{"E", "-1"}, {"V1", "-1/2"}, {"V2", "-1/2"}, {"A", "0"},
                {"Dp", "0"}, {"Y1", "1/2"},  {"Yi", "1/2"},  {"Z", "1"}};
    e.characters_dim = 1;
    return s;
}

FieldsSpec halfplane_spec() {
    FieldsSpec s;
    s.name = "halfplane";
    s.coordinates = {"z"};
    s.udim = 1;
    s.reference = {"i"};
    s.labels = {"A", "E", "W"};
    s.components = {{"z"}, {"1"}, {"-z^2 - 1"}};
    s.b_labels = {"A", "E"};
    s.xi_names = {"n"};
    s.xi_basis = {{{"W", "1"}, {"E", "-1/2"}}};
    s.xi_integral = {true};
    Expected& e = s.expected;
    e.dims = {{"g", 3}, {"b", 2}, {"k", 1}, {"rank", 1}, {"udim", 1}, {"vdim", 0}};
    e.isotropy = {{{"W", "1"}}};
    e.b_minus = {{{"E", "1"}, {"A", "i"}}};
    e.brackets = {{{{"W", "1"}}, {{"E", "1"}, {"A", "i"}}, {{"A", "-2"}, {"E", "2*i"}, {"W", "i"}}}};
    e.grades = {{"E", "-1"}, {"A", "0"}, {"W", "mixed"}};
    e.characters_dim = 1;
    return s;
}

std::vector<std::string> builtin_names() { return {"vinberg5", "dI21", "halfplane"}; }

std::optional<FieldsSpec> builtin_spec(const std::string& name) {
    if (name == "vinberg5") return vinberg5_spec();
    if (name == "dI21") return dI21_spec();
    if (name == "halfplane") return halfplane_spec();
    return std::nullopt;
}

Gaussian parse_gaussian(std::string_view text) {
    MultiPoly p = MultiPoly::parse(text, make_vars({}));
    return p.coefficient(Exponent{});
}

CVec parse_element(const LieAlgebra& g, const SparseElem& e) {
    CVec out(g.dim());
    for (const auto& [label, coeff] : e) {
        auto i = g.index_of(label);
        if (!i) throw ParseError("unknown label " + label);
        out[*i] += parse_gaussian(coeff);
    }
    return out;
}

QVec parse_covector(const LieAlgebra& g, const SparseElem& e) {
    CVec c = parse_element(g, e);
    if (!is_real_vec(c)) throw ParseError("covector coefficients must be rational");
    return real_part(c);
}

FieldAlgebra field_algebra_of(const FieldsSpec& spec) {
    if (spec.components.size() != spec.labels.size()) throw ParseError("labels and components differ in length");
    if (spec.udim < 0 || static_cast<std::size_t>(spec.udim) > spec.coordinates.size())
        throw ParseError("udim out of range");
    VarList vars = make_vars(spec.coordinates);
    std::vector<PolyVectorField> fields;
    for (const auto& c : spec.components) {
        if (c.size() != spec.coordinates.size()) throw ParseError("field has the wrong number of components");
        fields.push_back(PolyVectorField::parse(c, vars, static_cast<std::size_t>(spec.udim)));
    }
    return make_field_algebra(vars, static_cast<std::size_t>(spec.udim), spec.labels, std::move(fields));
}

GroupModel model_of(const FieldsSpec& spec) {
    if (spec.reference.size() != spec.coordinates.size()) throw ParseError("reference has the wrong length");
    CVec ref;
    for (const auto& r : spec.reference) ref.push_back(parse_gaussian(r));
    return build_model(spec.name, field_algebra_of(spec), spec.b_labels, std::move(ref));
}

QVec xi_covector(const FieldsSpec& spec, const LieAlgebra& g, const std::vector<Rational>& coords) {
    if (coords.size() != spec.xi_basis.size()) throw ParseError("expected " + std::to_string(spec.xi_basis.size()) +
                                                                " parameters");
    QVec xi(g.dim());
    for (std::size_t k = 0; k < coords.size(); ++k) xi = add(xi, scale(coords[k], parse_covector(g, spec.xi_basis[k])));
    return xi;
}

}  // namespace jdomain
