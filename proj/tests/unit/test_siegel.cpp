#include "helpers.hpp"

#include "jdomain/suite.hpp"

#include <cmath>

using namespace testing;

namespace {

/// Leading minors of [[z1,0,z4],[0,z2,z5],[z4,z5,z3]], expanded by hand.
bool sylvester_positive(const QVec& z) {
    Rational d1 = z[0], d2 = z[0] * z[1];
    Rational d3 = z[0] * (z[1] * z[2] - z[4] * z[4]) - z[3] * z[3] * z[1];
    return d1.sign() > 0 && d2.sign() > 0 && d3.sign() > 0;
}

QVec zq(std::initializer_list<Rational> v) { return QVec(v); }

}  // namespace

TEST_CASE("Siegel data of the built-ins") {
    const SiegelDomain& V = *model("vinberg5").S;
    CHECK(V.udim() == 5);
    CHECK(V.vdim() == 0);
    const SiegelDomain& H = *model("halfplane").S;
    CHECK(H.udim() == 1);
    CHECK(H.vdim() == 0);
    const SiegelDomain& D = *model("dI21").S;
    CHECK(D.udim() == 1);
    CHECK(D.vdim() == 1);
    // Q(v, v') = conj(v') v / 2
    CHECK(D.Qform(CVec{Gaussian(1)}, CVec{Gaussian(1)}) == CVec{Gaussian(q(1, 2))});
    CHECK(D.Qform(CVec{gi(2, 1)}, CVec{gi(0, 1)}) == CVec{gi(2, 1) * gi(0, -1) * Gaussian(q(1, 2))});
    for (const auto* S : {&V, &H, &D}) {
        auto c = check_siegel(*S);
        CHECK(c.hermitian);
        CHECK(c.complex_linear);
        CHECK(c.positive);
    }
}

TEST_CASE("peel at E is the identity decomposition") {
    for (std::string name : {"vinberg5", "dI21", "halfplane"}) {
        const SiegelDomain& S = *model(name).S;
        auto d = peel(S, S.E_u);
        for (const auto& p : d.pivots) CHECK(p == q(1));
        for (const auto& l : d.lower) CHECK(l == q(0));
    }
}

TEST_CASE("peel agrees with the Sylvester criterion on explicit matrices") {
    const SiegelDomain& S = *model("vinberg5").S;
    QVec good = zq({q(1), q(1), q(2), q(1), q(0)});
    CHECK(sylvester_positive(good));
    CHECK(in_cone(S, good));
    CHECK(replay(S, peel(S, good)) == good);

    QVec bad = zq({q(1), q(1), q(1, 2), q(1), q(0)});
    CHECK_FALSE(sylvester_positive(bad));
    CHECK_FALSE(in_cone(S, bad));
    CHECK_THROWS_AS(peel(S, bad), PivotNotPositive);

    QVec singular = zq({q(1), q(1), q(1), q(1), q(0)});
    CHECK_FALSE(in_cone(S, singular));
    CHECK_THROWS_AS(peel(S, singular), ValidationError);
}

TEST_CASE("peel agrees with the Sylvester criterion on random rationals") {
    const SiegelDomain& S = *model("vinberg5").S;
    Rng rng(7);
    int inside = 0;
    for (int s = 0; s < 300; ++s) {
        QVec z(5);
        for (int i = 0; i < 3; ++i) z[i] = s % 2 ? random_rational(rng, 4, 3).abs() : random_rational(rng, 4, 3);
        for (int i = 3; i < 5; ++i) z[i] = random_rational(rng, 3, 3);
        bool want = sylvester_positive(z);
        inside += want;
        CHECK(in_cone(S, z) == want);
    }
    CHECK(inside > 20);
}

TEST_CASE("peel and replay are inverse on exact points") {
    Rng rng(11);
    for (std::string name : {"vinberg5", "dI21", "halfplane"}) {
        const SiegelDomain& S = *model(name).S;
        for (int s = 0; s < 50; ++s) {
            auto d = random_decomposition(S, rng);
            QVec u = replay(S, d);
            auto d2 = peel(S, u);
            CHECK(d2.pivots == d.pivots);
            CHECK(d2.lower == d.lower);
        }
    }
}

TEST_CASE("floating peel matches the exact peel") {
    const SiegelDomain& S = *model("vinberg5").S;
    QVec u = zq({q(2), q(3), q(5), q(1), q(-1)});
    auto e = peel(S, u);
    std::vector<double> ud;
    for (const auto& x : u) ud.push_back(x.to_double());
    auto f = peel(S, ud);
    for (std::size_t k = 0; k < e.pivots.size(); ++k) CHECK(f.pivots[k] == doctest::Approx(e.pivots[k].to_double()));
    for (std::size_t k = 0; k < e.lower.size(); ++k) CHECK(f.lower[k] == doctest::Approx(e.lower[k].to_double()));
}

TEST_CASE("affine action: identity, translation and diagonal scaling") {
    const SiegelDomain& S = *model("vinberg5").S;
    DomainPoint p;
    for (const auto& z : S.reference_point()) p.u.push_back(z.to_complex());
    DomainPoint same = affine_action(S, {}, p);
    CHECK(same.u == p.u);

    Letter tr;
    tr.kind = Letter::Translate;
    tr.u0 = {1, -2, 0.5, 0.25, 0};
    DomainPoint moved = affine_action(S, {tr}, p);
    for (std::size_t i = 0; i < 5; ++i) CHECK(close(moved.u[i], p.u[i] + tr.u0[i]));

    // exp(t A1) is U -> T U T^t with T = diag(e^{t/2}, 1, 1); t = log 4 gives i diag(4, 1, 1)
    Letter sc;
    sc.kind = Letter::Scale;
    sc.index = 0;
    sc.t = std::log(4.0);
    DomainPoint scaled = affine_action(S, {sc}, p);
    CHECK(close(scaled.u[0], cplx(0, 4)));
    CHECK(close(scaled.u[1], cplx(0, 1)));
    CHECK(close(scaled.u[2], cplx(0, 1)));

    // the same against the matrix formula on a generic point
    DomainPoint g;
    g.u = {cplx(0.3, 2), cplx(-1, 1.5), cplx(0.2, 3), cplx(0.5, 0.4), cplx(-0.1, 0.2)};
    REQUIRE(in_domain(S, g));
    DomainPoint h = affine_action(S, {sc}, g);
    double a = std::exp(sc.t / 2);
    CHECK(close(h.u[0], a * a * g.u[0]));
    CHECK(close(h.u[1], g.u[1]));
    CHECK(close(h.u[2], g.u[2]));
    CHECK(close(h.u[3], a * g.u[3]));
    CHECK(close(h.u[4], g.u[4]));
}

TEST_CASE("points outside the domain are rejected") {
    const SiegelDomain& S = *model("halfplane").S;
    DomainPoint p;
    p.u = {cplx(0, -1)};
    CHECK_FALSE(in_domain(S, p));
    CHECK_THROWS_AS(affine_action(S, {}, p), DomainViolation);
}
