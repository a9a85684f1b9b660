#include "helpers.hpp"

using namespace testing;

namespace {

LieAlgebra sl2() {
    LieAlgebra L({"h", "e", "f"});
    L.set_bracket(0, 1, CVec{0, 2, 0});
    L.set_bracket(0, 2, CVec{0, 0, -2});
    L.set_bracket(1, 2, CVec{1, 0, 0});
    return L;
}

LieAlgebra abelian(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
    return LieAlgebra(labels);
}

}  // namespace

TEST_CASE("bracket in the five-dimensional example") {
    const GroupModel& M = model("vinberg5");
    CHECK(M.g().bracket(g_elem(M, {{"A1", "1"}}), g_elem(M, {{"E1", "1"}})) == g_elem(M, {{"E1", "1"}}));
    CVec x = g_elem(M, {{"W1", "1"}, {"E3", "2"}});
    CHECK(is_zero_vec(M.g().bracket(x, x)));
    CHECK(M.g().bracket(g_elem(M, {{"W1", "1"}}), g_elem(M, {{"E1", "1"}, {"A1", "i"}})) ==
          g_elem(M, {{"A1", "-2"}, {"E1", "2*i"}, {"W1", "i"}}));
}

TEST_CASE("jacobi identity and antisymmetry") {
    CHECK_FALSE(jacobi_violation(sl2()));
    CHECK_FALSE(antisymmetry_violation(sl2()));
    CHECK_FALSE(jacobi_violation(model("vinberg5").g()));

    LieAlgebra bad = sl2();
    bad.set_bracket(1, 2, CVec{1, 1, 0});
    auto w = jacobi_violation(bad);
    REQUIRE(w);
    CHECK((*w)[0] < (*w)[1]);
    CHECK((*w)[1] < (*w)[2]);

    LieAlgebra skew = sl2();
    skew.set_constant(0, 1, 1, Gaussian(3));
    CHECK(antisymmetry_violation(skew));
}

TEST_CASE("derived series and solvability") {
    auto s = derived_series(abelian(2));
    REQUIRE(s.size() == 2);
    CHECK(s[0].size() == 2);
    CHECK(s[1].empty());
    CHECK(is_solvable(model("vinberg5").N->b));
    CHECK(is_split_solvable(model("vinberg5").N->b));
    CHECK_FALSE(is_solvable(sl2()));
}

TEST_CASE("characteristic polynomial and rational roots") {
    QMatrix adh = sl2().ad(sl2().real_basis_vector(0));
    QVec p = characteristic_polynomial(adh);
    // t (t - 2) (t + 2) = t^3 - 4 t
    CHECK(p == QVec{q(0), q(-4), q(0), q(1)});
    auto roots = rational_roots(p);
    CHECK(roots.size() == 3);
    CHECK(has_rational_spectrum(adh));
    QMatrix rot = QMatrix::from_rows({{q(0), q(-1)}, {q(1), q(0)}}, 2);
    CHECK_FALSE(has_rational_spectrum(rot));
}

TEST_CASE("weight spaces of the split Cartan subalgebra") {
    const NormalJAlgebra& N = *model("vinberg5").N;
    auto ws = simultaneous_eigenspaces(N.b, N.A);
    std::size_t total = 0;
    for (const auto& w : ws) total += w.basis.size();
    CHECK(total == N.dim());
    for (std::size_t k = 0; k < 3; ++k) {
        QVec alpha(3);
        alpha[k] = q(1);
        bool found = false;
        for (const auto& w : ws)
            if (w.weight == alpha) {
                found = true;
                CHECK(w.basis.size() == 1);
                CHECK(same_span(w.basis, {N.E[k]}, N.dim()));
            }
        CHECK(found);
    }
    for (const auto& w : ws) CHECK(w.weight != QVec{q(-1, 2), q(1, 2), q(0)});

    auto one = simultaneous_eigenspaces(N.b, {});
    REQUIRE(one.size() == 1);
    CHECK(one[0].basis.size() == N.dim());
}

TEST_CASE("relative normalizer") {
    LieAlgebra L = sl2();
    std::vector<QVec> all{L.real_basis_vector(0), L.real_basis_vector(1), L.real_basis_vector(2)};
    CHECK(relative_normalizer(L, all, all).size() == 3);
    CHECK(relative_normalizer(L, all, {}).size() == 3);
    CHECK(relative_normalizer(abelian(3), {QVec{q(1), q(0), q(0)}}, {}).size() == 1);

    const GroupModel& M = model("vinberg5");
    auto btriv = relative_normalizer(M.g(), M.b_in_g, M.k);
    for (const auto& x : btriv)
        for (const auto& y : M.k) CHECK(is_zero_vec(M.g().bracket(x, y)));
}

TEST_CASE("subalgebra restriction keeps the brackets") {
    const GroupModel& M = model("halfplane");
    LieAlgebra b = subalgebra(M.g(), M.b_in_g, {"A", "E"});
    CHECK(b.bracket(b.real_basis_vector(0), b.real_basis_vector(1)) == b.real_basis_vector(1));
}
