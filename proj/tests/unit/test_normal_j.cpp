#include "helpers.hpp"

using namespace testing;

namespace {

/// b = span{A, E}, [A, E] = E, jA = -E, jE = A.
LieAlgebra ax_plus_b() {
    LieAlgebra b({"A", "E"});
    b.set_bracket(0, 1, CVec{0, 1});
    return b;
}

QMatrix j_rank1() { return QMatrix::from_rows({{q(0), q(1)}, {q(-1), q(0)}}, 2); }

}  // namespace

TEST_CASE("rank-one axioms hold and fail for negative omega") {
    auto rep = validate_normal_j(ax_plus_b(), j_rank1(), QVec{q(0), q(1)});
    CHECK(rep.ok());
    auto neg = validate_normal_j(ax_plus_b(), j_rank1(), QVec{q(0), q(-1)});
    CHECK_FALSE(neg.ok());
    REQUIRE(neg.first_failure());
    CHECK(neg.first_failure()->name.find("positive") != std::string::npos);
}

TEST_CASE("koszul form by hand") {
    // tr ad(jE) = tr ad(A) = 1 and j ad(E) sends A to -jE = -A, so omega'(E) = 1 + 1
    QVec w = koszul_form(ax_plus_b(), j_rank1());
    CHECK(w == QVec{q(0), q(2)});
    QMatrix g = gram_matrix(ax_plus_b(), j_rank1(), w);
    CHECK(g(1, 1) == q(2));
    CHECK(g(0, 0) == q(2));
    CHECK(g(0, 1) == q(0));

    LieAlgebra ab({"x", "y"});
    CHECK(is_zero_vec(koszul_form(ab, j_rank1())));
}

TEST_CASE("grading of the rank-one algebra") {
    NormalJAlgebra N = compute_grading(ax_plus_b(), j_rank1(), QVec{q(0), q(1)});
    CHECK(N.rank == 1);
    CHECK(N.b1.size() == 1);
    CHECK(N.b0.size() == 1);
    CHECK(N.bhalf.empty());
    CHECK(N.E[0] == QVec{q(0), q(1)});
    CHECK(N.A[0] == QVec{q(1), q(0)});
}

TEST_CASE("five-dimensional example: inferred j, koszul form and grading") {
    const GroupModel& M = model("vinberg5");
    const NormalJAlgebra& N = *M.N;
    CHECK(validate_normal_j(N.b, N.j, N.omega).ok());
    CHECK(N.omega == koszul_form(N.b, N.j));
    // omega'(E1) = tr ad(A1) - tr(j ad E1) = 1 + 2, omega'(E3) = 2 + 2
    CHECK(N.omega == b_elem(M, {{"E1", "3"}, {"E2", "3"}, {"E3", "4"}}));
    CHECK(N.rank == 3);
    CHECK(N.b1.size() == 5);
    CHECK(N.bhalf.empty());
    CHECK(N.b0.size() == 5);
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(N.apply_j(N.A[k]) == scale(q(-1), N.E[k]));
        for (std::size_t l = 0; l < 3; ++l)
            CHECK(N.b.bracket(N.A[k], N.E[l]) == (k == l ? N.E[l] : QVec(N.dim())));
    }
    CHECK(N.apply_j(b_elem(M, {{"E1", "1"}})) == b_elem(M, {{"A1", "1"}}));
    CHECK(N.apply_j(b_elem(M, {{"E31", "1"}})) == b_elem(M, {{"A31", "1"}}));
    CHECK(N.j * N.j == q(-1) * QMatrix::identity(N.dim()));
}

TEST_CASE("five-dimensional example: root table") {
    const NormalJAlgebra& N = *model("vinberg5").N;
    CHECK(N.root(RootKind::Minus, 0, 1).basis.empty());
    CHECK(N.root(RootKind::Plus, 0, 1).basis.empty());
    CHECK(N.root(RootKind::Minus, 0, 2).basis.size() == 1);
    CHECK(N.root(RootKind::Minus, 1, 2).basis.size() == 1);
    CHECK(N.root(RootKind::Plus, 0, 2).basis.size() == 1);
    CHECK(N.root(RootKind::Plus, 1, 2).basis.size() == 1);
    for (std::size_t k = 0; k < 3; ++k) CHECK(N.root(RootKind::Half, k).basis.empty());
    CHECK(N.root(RootKind::Minus, 0, 2).name() == "(a3-a1)/2");
    CHECK(N.root(RootKind::Plus, 0, 2).grade() == q(1));
    CHECK(N.root(RootKind::Minus, 0, 2).grade() == q(0));
}

TEST_CASE("half-dimensional grade in the D_I(2,1) algebra") {
    const NormalJAlgebra& N = *model("dI21").N;
    CHECK(N.rank == 1);
    CHECK(N.bhalf.size() == 2);
    CHECK(validate_normal_j(N.b, N.j, N.omega).ok());
    CHECK(same_span(N.bhalf, {N.apply_j(N.bhalf[0]), N.apply_j(N.bhalf[1])}, N.dim()));
}

TEST_CASE("grade_of on homogeneous and mixed elements") {
    const GroupModel& M = model("vinberg5");
    const NormalJAlgebra& N = *M.N;
    CHECK(N.grade_of(b_elem(M, {{"E31", "1"}})) == q(1));
    CHECK(N.grade_of(b_elem(M, {{"A32", "1"}})) == q(0));
    CHECK_FALSE(N.grade_of(b_elem(M, {{"A1", "1"}, {"E2", "1"}})));
    auto parts = N.split(b_elem(M, {{"A1", "1"}, {"E2", "1"}}));
    CHECK(parts.t == b_elem(M, {{"A1", "1"}}));
    CHECK(parts.u == b_elem(M, {{"E2", "1"}}));
}

TEST_CASE("connection nabla-tilde") {
    const GroupModel& M = model("vinberg5");
    const NormalJAlgebra& N = *M.N;
    QVec E1 = b_elem(M, {{"E1", "1"}}), E3 = b_elem(M, {{"E3", "1"}}), E31 = b_elem(M, {{"E31", "1"}});
    CHECK(is_zero_vec(nabla_tilde(N, E1, E3)));
    CHECK(nabla_tilde(N, E1, E31) == b_elem(M, {{"A31", "1/2"}}));
    for (const auto& x : N.b1)
        for (const auto& y : N.b1) CHECK(nabla_tilde(N, x, y) == nabla_tilde(N, y, x));
}

TEST_CASE("a non-normal structure is rejected") {
    // j that does not square to -1
    QMatrix bad = QMatrix::from_rows({{q(0), q(1)}, {q(1), q(0)}}, 2);
    auto rep = validate_normal_j(ax_plus_b(), bad, QVec{q(0), q(1)});
    CHECK_FALSE(rep.ok());
    CHECK_THROWS_AS(compute_grading(ax_plus_b(), bad, QVec{q(0), q(1)}), ValidationError);
}
