#include "helpers.hpp"

using namespace testing;

TEST_CASE("rational parsing and canonical form") {
    CHECK(Rational::parse("3/6").str() == "1/2");
    CHECK(Rational::parse("-0.25") == q(-1, 4));
    CHECK(Rational::parse("7") == q(7));
    CHECK(Rational::parse("-4/2").str() == "-2");
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
    CHECK_THROWS_AS(q(1) / q(0), std::domain_error);
}

TEST_CASE("rational arithmetic and ordering") {
    CHECK(q(1, 3) + q(1, 6) == q(1, 2));
    CHECK(q(2, 3) * q(3, 4) == q(1, 2));
    CHECK(q(1, 2) - q(3, 4) == q(-1, 4));
    CHECK(q(-1, 3) < q(-1, 4));
    CHECK(q(5, 1).is_integer());
    CHECK_FALSE(q(5, 2).is_integer());
    CHECK((-q(3, 7)).abs() == q(3, 7));
}

TEST_CASE("gaussian rationals") {
    Gaussian a = gi(1, 2), b = gi(3, -1);
    CHECK(a * b == gi(5, 5));
    CHECK((a * b) / b == a);
    CHECK(Gaussian::i() * Gaussian::i() == Gaussian(-1));
    CHECK(a.conj() == gi(1, -2));
    CHECK(a.norm2() == q(5));
    CHECK(Gaussian(q(1, 2), q(-3)).str() == "1/2-3i");
    CHECK(Gaussian::i().str() == "i");
    CHECK_THROWS_AS(a / Gaussian(), std::domain_error);
}

TEST_CASE("polynomial product, derivative and expansion") {
    VarList v = make_vars({"z1", "z2", "z3", "z4"});
    MultiPoly z1 = MultiPoly::variable(v, 0), z4 = MultiPoly::variable(v, 3);
    CHECK((z1 * z1) == MultiPoly::parse("z1^2", v));
    CHECK((z1 * z4).derivative(3) == z1);
    MultiPoly i = MultiPoly::constant(v, Gaussian::i());
    CHECK(((z1 + i) * (z1 - i)).str() == "z1^2 + 1");
    CHECK((z1 - z1).is_zero());
}

TEST_CASE("polynomial printing is graded-lex and parses back") {
    VarList v = make_vars({"z1", "z2"});
    MultiPoly p = MultiPoly::parse("(z1 + i*z2)^2 - z1/3", v);
    CHECK(p.str() == "z1^2 + 2*i*z1*z2 - z2^2 - 1/3*z1");
    CHECK(MultiPoly::parse(p.str(), v) == p);
    CHECK(p.derivative(0).str() == "2*z1 + 2*i*z2 - 1/3");
    CHECK(p.degree() == 2);
    CHECK(p.eval(CVec{Gaussian(3), Gaussian::i()}) == Gaussian(9 - 6 + 1 - 1));
}

TEST_CASE("linear solve: identity, zero matrix, rank-deficient, inconsistent") {
    QMatrix id = QMatrix::identity(3);
    QVec b{q(1), q(-2), q(1, 3)};
    auto s = solve_linear(id, b);
    CHECK(s.x == b);
    CHECK(s.kernel.empty());

    auto z = solve_linear(QMatrix(2, 2), QVec(2));
    CHECK(z.kernel.size() == 2);

    QMatrix a = QMatrix::from_rows({{q(1), q(2), q(3)}, {q(4), q(5), q(6)}, {q(7), q(8), q(9)}}, 3);
    auto r = solve_linear(a, QVec{q(6), q(15), q(24)});
    REQUIRE(r.kernel.size() == 1);
    // back-substitution oracle: a k = 0 row by row
    const QVec& k = r.kernel[0];
    for (std::size_t i = 0; i < 3; ++i) CHECK(a(i, 0) * k[0] + a(i, 1) * k[1] + a(i, 2) * k[2] == q(0));
    CHECK(a * r.x == QVec{q(6), q(15), q(24)});

    CHECK_THROWS_AS(solve_linear(a, QVec{q(1), q(0), q(0)}), NoSolution);
}

TEST_CASE("complex linear algebra over Q(i)") {
    CMatrix m = CMatrix::from_rows({{gi(1, 0), gi(0, 1)}, {gi(0, -1), gi(1, 0)}}, 2);
    CHECK(determinant(m) == Gaussian(0));
    CHECK(kernel(m).size() == 1);
    CMatrix n = CMatrix::from_rows({{gi(2, 1), gi(0, 0)}, {gi(1, 0), gi(0, 3)}}, 2);
    auto inv = inverse(n);
    REQUIRE(inv);
    CHECK(*inv * n == CMatrix::identity(2));
}

TEST_CASE("spans") {
    std::vector<QVec> a{{q(1), q(0), q(0)}, {q(0), q(1), q(0)}}, b{{q(0), q(1), q(0)}, {q(0), q(0), q(1)}};
    auto c = span_intersection(a, b, 3);
    REQUIRE(c.size() == 1);
    CHECK(c[0] == QVec{q(0), q(1), q(0)});
    CHECK(span_sum(a, b, 3).size() == 3);
    CHECK(same_span(a, {{q(1), q(1), q(0)}, {q(1), q(-1), q(0)}}, 3));
    CHECK_FALSE(in_span(a, QVec{q(0), q(0), q(1)}));
}
