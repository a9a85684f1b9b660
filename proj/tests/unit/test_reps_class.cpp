#include "helpers.hpp"

#include "jdomain/suite.hpp"

#include <cmath>

using namespace testing;

namespace {

ThetaChar vinberg_theta(long x, long y, long n, long np) {
    const GroupModel& M = model("vinberg5");
    return theta_from_xi(xi_covector(*builtin_spec("vinberg5"), M.g(), {q(x), q(y), q(n), q(np)}));
}

XiParam xi(Rational x, Rational y, long n, long np) { return XiParam{std::move(x), std::move(y), n, np}; }

}  // namespace

TEST_CASE("tau on basis elements") {
    const GroupModel& M = model("vinberg5");
    const NormalJAlgebra& N = *M.N;
    CHECK(is_zero_vec(tau(N, b_elem(M, {{"E1", "1"}}))));
    CHECK(tau(N, b_elem(M, {{"A1", "1"}})) == parse_element(N.b, {{"A1", "1"}, {"E1", "-i"}}));
    CHECK(tau(N, b_elem(M, {{"A31", "1"}})) == parse_element(N.b, {{"A31", "1"}, {"E31", "-i"}}));
    CHECK(b_minus(N).size() == 5);
}

TEST_CASE("tau is a homomorphism into b_minus") {
    for (std::string name : {"vinberg5", "dI21", "halfplane"}) {
        const NormalJAlgebra& N = *model(name).N;
        auto bm = b_minus(N);
        for (std::size_t a = 0; a < N.dim(); ++a) {
            CVec ta = tau(N, N.b.real_basis_vector(a));
            CHECK(in_span(bm, ta));
            for (std::size_t b = 0; b < N.dim(); ++b)
                CHECK(tau(N, N.b.bracket(N.b.real_basis_vector(a), N.b.real_basis_vector(b))) ==
                      N.b.bracket(ta, tau(N, N.b.real_basis_vector(b))));
        }
    }
}

TEST_CASE("chi on simple words") {
    const GroupModel& M = model("vinberg5");
    ThetaChar th = vinberg_theta(-1, 2, 1, 3);
    CHECK(chi_word(M, th, {}) == cplx(1));
    Letter tr;
    tr.kind = Letter::Translate;
    tr.u0 = {0.7, 0, 0, 0, 0};
    CHECK(close(chi_word(M, th, {tr}), cplx(1)));
    // theta(tau(A3)) = i (xi(A3) - i xi(E3)) = x + i y
    Letter sc;
    sc.kind = Letter::Scale;
    sc.index = 2;
    sc.t = 0.3;
    CHECK(close(chi_word(M, th, {sc}), std::exp(0.3 * cplx(-1, 2))));
    CHECK(dchi(M, th, b_elem(M, {{"A3", "1"}})) == gi(-1, 2));
    // sigma_k = xi(E_k) + i xi(A_k)
    CHECK(sigma(M, th) == CVec{Gaussian(q(-1, 2)), Gaussian(q(-3, 2)), gi(-1, 2)});
}

TEST_CASE("chi is multiplicative on split words") {
    const GroupModel& M = model("dI21");
    ThetaChar th = theta_from_xi(xi_covector(*builtin_spec("dI21"), M.g(), {q(5, 3)}));
    Rng rng(3);
    for (int s = 0; s < 200; ++s) {
        BWord w = random_word(*M.S, rng, 6, false);
        BWord w1(w.begin(), w.begin() + 2), w2(w.begin() + 2, w.end());
        CHECK(close(chi_word(M, th, w), chi_word(M, th, w1) * chi_word(M, th, w2)));
    }
}

TEST_CASE("zero extension of characters") {
    const GroupModel& M = model("vinberg5");
    CHECK(check_zero_extension(M, vinberg_theta(-2, 3, 0, 0)).ok());
    CHECK(check_zero_extension(M, ThetaChar{CVec(M.g().dim())}).ok());
    auto rep = check_zero_extension(M, vinberg_theta(-1, 0, 1, 1));
    CHECK_FALSE(rep.ok());
    REQUIRE(rep.first_failure());
    CHECK_FALSE(rep.first_failure()->detail.empty());
}

TEST_CASE("characters space dimensions") {
    CHECK(characters_space(model("vinberg5").g(), model("vinberg5").g_minus).size() == 4);
    CHECK(characters_space(model("halfplane").g(), model("halfplane").g_minus).size() == 1);
    CHECK(characters_space(model("dI21").g(), model("dI21").g_minus).size() == 1);
    LieAlgebra ab({"x", "y", "z"});
    CHECK(characters_space(ab, {CVec{1, 0, 0}, CVec{0, 1, 0}}).size() == 3);
    const GroupModel& M = model("vinberg5");
    for (const auto& c : characters_space(M.g(), M.g_minus))
        CHECK_FALSE(character_violation(M, theta_from_xi(c)));
}

TEST_CASE("delta at E and on rays") {
    const GroupModel& M = model("vinberg5");
    const SiegelDomain& S = *M.S;
    CVec sg = sigma(M, vinberg_theta(-1, 4, 2, 3));
    NVec E;
    for (const auto& x : S.E_u) E.push_back(x.to_double());
    CHECK(close(delta_eval(S, sg, E), 1.0));
    // Delta(lambda E) = lambda^(2x - n - n')
    for (double lam : {0.5, 2.0, 3.7}) {
        NVec W;
        for (const auto& x : E) W.push_back(lam * x);
        CHECK(close(delta_eval(S, sg, W), std::pow(lam, -2.0 - 2 - 3)));
    }
    DomainPoint z;
    z.u = NVec(E.size());
    for (std::size_t i = 0; i < E.size(); ++i) z.u[i] = cplx(0, E[i].real());
    NVec twoE;
    for (const auto& x : E) twoE.push_back(2.0 * x);
    CHECK(close(kernel_eval(S, sg, z, z), delta_eval(S, sg, twoE)));
}

TEST_CASE("delta transformation law and kernel invariance on a few samples") {
    Rng rng(5);
    const GroupModel& M = model("dI21");
    ThetaChar th = theta_from_xi(xi_covector(*builtin_spec("dI21"), M.g(), {q(-2)}));
    CHECK(check_delta_law(M, th, 50, 1e-9, rng).pass);
    CHECK(check_kernel_invariance(M, th, 50, 1e-9, rng).pass);
}

TEST_CASE("unitarizability of sample parameters") {
    CHECK(is_unitarizable(xi(-1, 0, 1, 1)));
    CHECK(is_unitarizable(xi(0, 5, 0, 0)));
    CHECK_FALSE(is_unitarizable(xi(-1, 0, 0, 1)));
    CHECK_FALSE(is_unitarizable(xi(1, 0, 1, 1)));
    CHECK_FALSE(is_unitarizable(xi(q(1, 2), 0, 1, 1)));
    CHECK(is_unitarizable(xi(q(-1, 2), 0, 1, 1)));
}

TEST_CASE("partition classes") {
    CHECK(partition_label(xi(-1, 0, 2, 3), Level::G) == partition_label(xi(-2, 7, 2, 3), Level::G));
    CHECK(partition_label(xi(-1, 0, 1, 1), Level::B) == partition_label(xi(-2, 3, 4, 5), Level::B));
    CHECK(partition_label(xi(-1, 0, 1, 1), Level::G) != partition_label(xi(-2, 3, 4, 5), Level::G));
    for (Level l : {Level::B, Level::G})
        CHECK(partition_label(xi(0, 1, 0, 0), l) != partition_label(xi(0, 2, 0, 0), l));
    CHECK(partition_label(xi(-1, 0, 1, 1), Level::B) == "B:MinusClass");
    CHECK(partition_label(xi(-1, 0, 1, 1), Level::G) == "G:Minus(1,1)");
    CHECK(partition_label(xi(0, 3, 0, 2), Level::G) == "G:Singleton(3,0,2)");
    CHECK_THROWS_AS(partition_label(xi(1, 0, 1, 1), Level::B), NotUnitarizable);
}
