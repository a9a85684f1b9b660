#include "helpers.hpp"

using namespace testing;

namespace {

const PolyVectorField& field(const GroupModel& M, const std::string& label) {
    return M.F.fields[*M.g().index_of(label)];
}

PolyVectorField parse_field(const GroupModel& M, const std::vector<std::string>& comps) {
    return PolyVectorField::parse(comps, M.F.vars, M.F.udim);
}

}  // namespace

TEST_CASE("field bracket on the five-dimensional fields") {
    const GroupModel& M = model("vinberg5");
    CHECK(vf_bracket(field(M, "E1"), field(M, "A1")) == field(M, "E1"));
    CHECK(vf_bracket(field(M, "W1"), field(M, "W1")).is_zero());
    // z d/dz with z^2 d/dz: z * 2z - z^2 * 1
    const GroupModel& H = model("halfplane");
    PolyVectorField a = parse_field(H, {"z"}), b = parse_field(H, {"z^2"});
    CHECK(vf_bracket(a, b) == parse_field(H, {"z^2"}));
}

TEST_CASE("abstract bracket is the reversed field bracket") {
    const GroupModel& M = model("vinberg5");
    for (std::size_t a = 0; a < M.g().dim(); ++a)
        for (std::size_t b = 0; b < M.g().dim(); ++b) {
            PolyVectorField f = vf_bracket(M.F.fields[b], M.F.fields[a]);
            CHECK(M.F.field_of(M.g().structure(a, b)) == f);
        }
}

TEST_CASE("euler field grades translations by -1") {
    const GroupModel& M = model("vinberg5");
    const SiegelDomain& S = *M.S;
    VarList vars = default_vars(S);
    CVec u0{Gaussian(1), Gaussian(2), Gaussian(0), gi(0, 1), Gaussian(q(1, 2))};
    PolyVectorField d = field_d_u(S, vars, u0);
    CHECK(vf_bracket(field_euler(S, vars), d) == Gaussian(-1) * d);
    CHECK(grade_classify(d) == q(-1));
}

TEST_CASE("constant, euler and Z fields in coordinates") {
    const GroupModel& M = model("vinberg5");
    const SiegelDomain& S = *M.S;
    CVec e;
    for (const auto& x : S.E_u) e.push_back(Gaussian(x));
    CHECK(field_d_u(S, M.F.vars, e) == parse_field(M, {"1", "1", "1", "0", "0"}));
    CHECK(field_euler(S, M.F.vars) == parse_field(M, {"z1", "z2", "z3", "z4", "z5"}));

    const GroupModel& D = model("dI21");
    ZData z;
    z.a = {{CVec{Gaussian(1)}}};
    z.b = {{CVec{Gaussian(1)}}};
    CHECK(field_Z(*D.S, D.F.vars, z) == parse_field(D, {"U^2", "U*V"}));
    CHECK(field_euler(*D.S, D.F.vars) == parse_field(D, {"U", "V/2"}));
}

TEST_CASE("Y and Z condition checks") {
    const GroupModel& D = model("dI21");
    const SiegelDomain& S = *D.S;
    YData zero;
    zero.Phi = CMatrix(1, 1);
    zero.c = {{CVec{Gaussian(0)}}};
    CHECK(check_Y_conditions(S, D.g0, zero).ok());

    CMatrix phi(1, 1);
    phi(0, 0) = Gaussian(1);
    auto y = complete_Y(S, phi);
    REQUIRE(y);
    CHECK(check_Y_conditions(S, D.g0, *y).ok());
    CHECK(grade_classify(field_Y(S, D.F.vars, *y)) == q(1, 2));

    YData no_c = *y;
    no_c.c = {{CVec{Gaussian(0)}}};
    auto rep = check_Y_conditions(S, D.g0, no_c);
    CHECK_FALSE(rep.ok());

    ZData z;
    z.a = {{CVec{Gaussian(1)}}};
    z.b = {{CVec{Gaussian(1)}}};
    CHECK(check_Z_conditions(S, D.g0, z).ok());
}

TEST_CASE("grade classification") {
    const GroupModel& M = model("vinberg5");
    CHECK_FALSE(grade_classify(field(M, "W1")));
    CHECK(grade_classify(field(M, "A1")) == q(0));
    CHECK(grade_classify(field(M, "E1")) == q(-1));
    auto parts = decompose_by_grade(field(M, "W1"));
    REQUIRE(parts.size() == 2);
    CHECK(parts.at(q(-1)) == parse_field(M, {"-1", "0", "0", "0", "0"}));
    CHECK(parts.at(q(1)) == parse_field(M, {"-z1^2", "0", "-z4^2", "-z1*z4", "0"}));

    const GroupModel& D = model("dI21");
    std::map<std::string, std::string> want{{"E", "-1"}, {"V1", "-1/2"}, {"V2", "-1/2"}, {"A", "0"},
                                            {"Dp", "0"}, {"Y1", "1/2"},   {"Yi", "1/2"},   {"Z", "1"}};
    for (const auto& [label, g] : want) CHECK(grade_classify(field(D, label)) == Rational::parse(g));
}

TEST_CASE("psi and phi maps") {
    const GroupModel& D = model("dI21");
    const SiegelDomain& S = *D.S;
    CMatrix phi(1, 1);
    phi(0, 0) = Gaussian(1);
    auto y = complete_Y(S, phi);
    REQUIRE(y);
    CHECK(psi_map(S, field_Y(S, D.F.vars, *y)) == field_dtilde_v(S, D.F.vars, CVec{gi(0, -1)}));
    CHECK(psi_map(S, PolyVectorField::zero(D.F.vars, 1)).is_zero());

    const GroupModel& M = model("vinberg5");
    PolyVectorField quad = parse_field(M, {"z1^2", "0", "z4^2", "z1*z4", "0"});
    CHECK(phi_map(*M.S, quad) == field(M, "E1"));
}

TEST_CASE("isotropy at the reference point") {
    const GroupModel& M = model("vinberg5");
    CHECK(same_span(M.k, {g_real(M, {{"W1", "1"}}), g_real(M, {{"W2", "1"}})}, M.g().dim()));
    for (const auto& x : M.F.fields) {
        bool vanishes = is_zero_vec(x.eval(M.reference));
        bool in_k = x == field(M, "W1") || x == field(M, "W2");
        CHECK(vanishes == in_k);
    }
    CHECK(isotropy_at(model("halfplane").F, model("halfplane").reference).size() == 1);

    std::vector<PolyVectorField> bf;
    for (const auto& l : M.b_labels) bf.push_back(field(M, l));
    FieldAlgebra B = make_field_algebra(M.F.vars, M.F.udim, M.b_labels, bf);
    CHECK(isotropy_at(B, M.reference).empty());
    CHECK(compute_g_minus(B, M.reference).size() == 5);
}

TEST_CASE("g_minus of the five-dimensional example") {
    const GroupModel& M = model("vinberg5");
    CHECK(M.g_minus.size() == 7);
    for (const char* s : {"1", "2", "3", "31", "32"}) {
        std::string e = std::string("E") + s, a = std::string("A") + s;
        CHECK(in_span(M.g_minus, g_elem(M, {{e, "1"}, {a, "i"}})));
    }
    for (const auto& k : M.k) CHECK(in_span(M.g_minus, to_complex(k)));
}

TEST_CASE("dependent or non-closed fields are rejected") {
    const GroupModel& H = model("halfplane");
    CHECK_THROWS_AS(make_field_algebra(H.F.vars, 1, {"a", "b"}, {parse_field(H, {"z"}), parse_field(H, {"2*z"})}),
                    ValidationError);
    CHECK_THROWS_AS(make_field_algebra(H.F.vars, 1, {"a", "b"}, {parse_field(H, {"1"}), parse_field(H, {"z^3"})}),
                    ValidationError);
}
