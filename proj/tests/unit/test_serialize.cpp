#include "helpers.hpp"

#include "jdomain/suite.hpp"

using namespace testing;

TEST_CASE("lie algebra json round trip") {
    const GroupModel& M = model("vinberg5");
    json j = lie_algebra_to_json(M.g());
    LieAlgebra back = lie_algebra_from_json(j);
    CHECK(back.labels() == M.g().labels());
    for (std::size_t a = 0; a < back.dim(); ++a)
        for (std::size_t b = 0; b < back.dim(); ++b) CHECK(back.structure(a, b) == M.g().structure(a, b));
    CHECK(lie_algebra_to_json(back).dump() == j.dump());
}

TEST_CASE("fields envelope round trip is byte-identical") {
    for (const auto& name : builtin_names()) {
        std::string text = export_fields(*builtin_spec(name));
        Envelope env = parse_envelope(text);
        CHECK(env.kind == "fields");
        const auto& spec = std::get<FieldsSpec>(env.payload);
        CHECK(export_fields(spec) == text);
    }
}

TEST_CASE("imported dataset gives the same suite report") {
    SuiteOptions opt;
    opt.chi_samples = 20;
    opt.cone_samples = 10;
    opt.numeric_samples = 10;
    FieldsSpec orig = *builtin_spec("halfplane");
    FieldsSpec back = std::get<FieldsSpec>(parse_envelope(export_fields(orig)).payload);
    CHECK(run_suite(back, opt).text() == run_suite(orig, opt).text());
}

TEST_CASE("normal j envelope") {
    const NormalJAlgebra& N = *model("dI21").N;
    Envelope env = parse_envelope(export_normal_j(N));
    const auto& s = std::get<NormalJSpec>(env.payload);
    CHECK(s.j == N.j);
    REQUIRE(s.omega);
    CHECK(*s.omega == N.omega);
    CHECK(validate_normal_j(s.algebra, s.j, *s.omega).ok());
}

TEST_CASE("gaussian json") {
    Gaussian g(q(-3, 4), q(2));
    CHECK(gaussian_from_json(gaussian_to_json(g)) == g);
}

TEST_CASE("malformed envelopes are parse errors") {
    CHECK_THROWS_AS(parse_envelope("{not json"), ParseError);
    CHECK_THROWS_AS(parse_envelope(R"({"version":1,"kind":"nope","payload":{}})"), ParseError);
    CHECK_THROWS_AS(parse_envelope(R"({"version":2,"kind":"xi_batch","payload":{"params":[]}})"), ParseError);
    CHECK_THROWS_AS(parse_envelope(R"({"version":1,"kind":"xi_batch","payload":{"params":[]},"extra":0})"),
                    ParseError);
    CHECK_THROWS_AS(parse_envelope(R"({"version":1,"kind":"xi_batch"})"), ParseError);
    CHECK_THROWS_AS(
        parse_envelope(R"({"version":1,"kind":"xi_batch","payload":{"params":[{"x":"0","y":"0","n":"1/2","nprime":"0"}]}})"),
        ParseError);
    CHECK_THROWS_AS(load_envelope("/nonexistent/file.json"), ParseError);
}

TEST_CASE("xi batch envelope") {
    Envelope env = parse_envelope(
        R"({"version":1,"kind":"xi_batch","payload":{"params":[{"x":"-1/2","y":"3","n":"2","nprime":"0"}]}})");
    const auto& v = std::get<std::vector<XiParam>>(env.payload);
    REQUIRE(v.size() == 1);
    CHECK(v[0].x == q(-1, 2));
    CHECK(v[0].y == q(3));
    CHECK(v[0].n == 2);
    CHECK(v[0].nprime == 0);
}

TEST_CASE("corrupted structure constant is detected") {
    const GroupModel& M = model("vinberg5");
    json env = make_envelope("lie_algebra", lie_algebra_to_json(M.g()));
    LieAlgebra g = std::get<LieAlgebra>(parse_envelope(env.dump()).payload);
    CHECK(check_jacobi(g).pass);
    CHECK(check_corrupted_constant(g).pass);
    // [A1, E1] = E1 + E2 breaks the triple (A1, A2, E1)
    std::size_t a1 = *g.index_of("A1"), e1 = *g.index_of("E1");
    g.set_bracket(a1, e1, g_elem(M, {{"E1", "1"}, {"E2", "1"}}));
    auto item = check_jacobi(g);
    CHECK_FALSE(item.pass);
    CHECK(item.detail.find("witness") != std::string::npos);
}
