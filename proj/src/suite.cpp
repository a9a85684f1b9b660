#include "jdomain/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>

namespace jdomain {

namespace {

const Gaussian I = Gaussian::i();

std::string num(std::size_t n) { return std::to_string(n); }

std::string sci(double x) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

CheckItem item(std::string name, bool pass, std::string detail = "") {
    return {std::move(name), pass, std::move(detail)};
}

void append(std::vector<CheckItem>& out, const ValidationReport& rep, const std::string& prefix) {
    for (const auto& it : rep.items) out.push_back({prefix + it.name, it.pass, it.detail});
}

double rel_err(cplx a, cplx b) {
    double s = std::max(std::abs(a), std::abs(b));
    return s == 0 ? 0 : std::abs(a - b) / s;
}

Gaussian random_gaussian(Rng& rng) { return Gaussian(random_rational(rng, 5, 4), random_rational(rng, 5, 4)); }

CVec random_real_cvec(Rng& rng, std::size_t n) {
    CVec v(n);
    for (auto& x : v) x = Gaussian(random_rational(rng, 5, 4));
    return v;
}

CVec random_cvec(Rng& rng, std::size_t n) {
    CVec v(n);
    for (auto& x : v) x = random_gaussian(rng);
    return v;
}

CMatrix random_cmatrix(Rng& rng, std::size_t r, std::size_t c) {
    CMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = random_gaussian(rng);
    return m;
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

/// Linear tableau X(A,B) from T in b(0) and s * d'.
struct LinearTableau {
    CMatrix A, B;
};

LinearTableau random_linear(const SiegelDomain& S, Rng& rng) {
    QVec t(S.N->dim());
    for (const auto& x : S.N->b0) t = add(t, scale(random_rational(rng, 4, 3), x));
    CMatrix B = S.ad_v(t);
    Gaussian s = Gaussian(random_rational(rng, 4, 3)) * I;
    for (std::size_t a = 0; a < S.vdim(); ++a) B(a, a) += s;
    return {to_complex(S.ad_u(t)), B};
}

CVec c_apply(const YData& y, const CVec& v, const CVec& w) {
    CVec out(v.size());
    for (std::size_t a = 0; a < v.size(); ++a)
        for (std::size_t b = 0; b < w.size(); ++b) {
            Gaussian s = v[a] * w[b];
            if (!s.is_zero()) out = add(out, scale(s, y.c[a][b]));
        }
    return out;
}

/// Grade-gamma parts of the fields of F, as a spanning list.
std::vector<PolyVectorField> graded_parts(const FieldAlgebra& F, const Rational& gamma) {
    std::vector<PolyVectorField> out;
    for (const auto& f : F.fields) {
        auto parts = decompose_by_grade(f);
        auto it = parts.find(gamma);
        if (it != parts.end() && !it->second.is_zero()) out.push_back(it->second);
    }
    return out;
}

QVec g_to_b(const GroupModel& M, const QVec& x) {
    auto c = coords_in(M.b_in_g, x);
    if (!c) throw ValidationError("element is not in b");
    return *c;
}

std::vector<CVec> cvecs(const std::vector<QVec>& v) {
    std::vector<CVec> out;
    for (const auto& x : v) out.push_back(to_complex(x));
    return out;
}

std::vector<CheckItem> structure_checks(const FieldsSpec& spec, const GroupModel& M) {
    std::vector<CheckItem> out;
    const Expected& e = spec.expected;
    const LieAlgebra& g = M.g();
    const NormalJAlgebra& N = *M.N;
    const SiegelDomain& S = *M.S;
    const std::size_t n = g.dim();

    std::map<std::string, long> got = {{"g", static_cast<long>(n)},
                                       {"b", static_cast<long>(N.dim())},
                                       {"k", static_cast<long>(M.k.size())},
                                       {"rank", static_cast<long>(N.rank)},
                                       {"udim", static_cast<long>(S.udim())},
                                       {"vdim", static_cast<long>(S.vdim())}};
    {
        std::string detail;
        bool pass = true;
        for (const auto& [k, v] : got) {
            detail += (detail.empty() ? "" : " ") + k + "=" + std::to_string(v);
            auto it = e.dims.find(k);
            if (it != e.dims.end() && it->second != v) {
                pass = false;
                detail += "(expected " + std::to_string(it->second) + ")";
            }
        }
        out.push_back(item("dimensions", pass, detail));
    }
    out.push_back(item("g_equals_b_plus_k", M.k.size() + N.dim() == n &&
                                                  independent(span_sum(M.b_in_g, M.k, n), n),
                       "dim b + dim k = " + num(M.k.size() + N.dim())));

    if (!e.isotropy.empty()) {
        std::vector<QVec> want;
        for (const auto& x : e.isotropy) want.push_back(real_part(parse_element(g, x)));
        out.push_back(item("isotropy_span", same_span(want, M.k, n), "k = span of " + num(M.k.size()) + " fields"));
    }
    {
        bool abelian = true;
        for (std::size_t a = 0; a < M.k.size(); ++a)
            for (std::size_t b = a + 1; b < M.k.size(); ++b)
                if (!is_zero_vec(g.bracket(M.k[a], M.k[b]))) abelian = false;
        bool closed = true;
        for (const auto& z : bracket_span(g, M.k, M.k)) closed = closed && in_span(M.k, z);
        out.push_back(item("k_subalgebra", closed, abelian ? "[k,k] = 0" : "[k,k] != 0"));
    }
    append(out, check_isotropy_shape(S, M.F, M.k), "isotropy_shape.");
    append(out, validate_normal_j(N.b, N.j, N.omega), "normal_j.");

    {
        std::string detail;
        for (const auto& rs : N.roots) detail += (detail.empty() ? "" : " ") + rs.name() + ":" + num(rs.basis.size());
        out.push_back(item("root_spaces", true, detail));
    }
    out.push_back(check_grading_law(N));
    {
        bool ok = true;
        std::string detail;
        for (const auto& [label, gr] : e.grades) {
            auto it = std::find(M.b_labels.begin(), M.b_labels.end(), label);
            if (it == M.b_labels.end()) continue;
            auto got_g = N.grade_of(N.b.real_basis_vector(static_cast<std::size_t>(it - M.b_labels.begin())));
            if (gr == "mixed" || !got_g || *got_g != -Rational::parse(gr)) {
                ok = false;
                detail = label + " has grade " + (got_g ? got_g->str() : "mixed") + " under ad(jE)";
                break;
            }
        }
        out.push_back(item("b_grades", ok, detail));
    }
    {
        bool orth = true;
        for (std::size_t a = 0; a < N.roots.size() && orth; ++a)
            for (std::size_t b = a + 1; b < N.roots.size() && orth; ++b)
                for (const auto& x : N.roots[a].basis)
                    for (const auto& y : N.roots[b].basis)
                        if (!N.inner(x, y).is_zero()) orth = false;
        out.push_back(item("root_orthogonality", orth));
    }
    {
        auto sc = check_siegel(S);
        out.push_back(item("siegel.hermitian", sc.hermitian, sc.detail));
        out.push_back(item("siegel.complex_linear", sc.complex_linear, sc.detail));
        out.push_back(item("siegel.positive", sc.positive, sc.detail));
    }

    {
        // b_triv = {X in b : [X,k] in k}.
        auto triv_g = relative_normalizer(g, M.b_in_g, M.k);
        std::vector<QVec> triv;
        for (const auto& x : triv_g) triv.push_back(g_to_b(M, x));
        bool commute = true;
        for (const auto& x : triv_g)
            for (const auto& kv : M.k)
                if (!is_zero_vec(g.bracket(x, kv))) commute = false;
        QMatrix adjE = N.b.ad(N.jE());
        bool inv = true;
        for (const auto& x : triv) inv = inv && in_span(triv, adjE * x);
        std::vector<QVec> perp;
        if (!triv.empty()) {
            std::vector<QVec> rows;
            for (const auto& x : triv) rows.push_back(N.gram * x);
            perp = kernel(QMatrix::from_rows(rows, N.dim()));
        } else {
            for (std::size_t i = 0; i < N.dim(); ++i) perp.push_back(N.b.real_basis_vector(i));
        }
        bool inv_perp = true;
        for (const auto& x : perp) inv_perp = inv_perp && in_span(perp, adjE * x);
        out.push_back(item("b_triv.commutes_with_k", commute, "dim b_triv = " + num(triv.size())));
        out.push_back(item("b_triv.adjE_invariant", inv));
        out.push_back(item("b_triv_perp.adjE_invariant", inv_perp));
    }

    // g_-, b_- and tau.
    const std::size_t cdim = S.udim() + S.vdim();
    out.push_back(item("g_minus.dimension", M.g_minus.size() == n - cdim, "dim = " + num(M.g_minus.size())));
    {
        bool ok = true;
        for (const auto& kv : M.k) ok = ok && in_span(M.g_minus, to_complex(kv));
        out.push_back(item("g_minus.contains_k", ok));
    }
    auto bC = cvecs(M.b_in_g);
    auto bminus_g = span_intersection(M.g_minus, bC, n);
    std::vector<CVec> tau_img;
    for (std::size_t i = 0; i < N.dim(); ++i) tau_img.push_back(M.b_to_g(tau(N, N.b.real_basis_vector(i))));
    out.push_back(item("b_minus.dimension", bminus_g.size() == cdim, "dim = " + num(bminus_g.size())));
    out.push_back(item("b_minus.equals_tau_image", same_span(bminus_g, tau_img, n)));
    out.push_back(item("g_minus.equals_b_minus_plus_k", same_span(M.g_minus, span_sum(bminus_g, cvecs(M.k), n), n)));
    if (!e.b_minus.empty()) {
        std::vector<CVec> want;
        for (const auto& x : e.b_minus) want.push_back(parse_element(g, x));
        out.push_back(item("b_minus.expected_basis", same_span(want, bminus_g, n) && want.size() == bminus_g.size()));
    }
    out.push_back(check_tau_homomorphism(M));
    {
        bool ok = true;
        for (const auto& x : b_minus(N)) ok = ok && tau(N, x) == x;
        out.push_back(item("tau.identity_on_b_minus", ok));
    }

    {
        bool ok = true;
        std::string detail;
        for (const auto& r : e.brackets) {
            CVec x = parse_element(g, r.x), y = parse_element(g, r.y), want = parse_element(g, r.result);
            CVec got_v = g.bracket(x, y);
            if (got_v != want) {
                ok = false;
                detail = "[" + g.format(x) + ", " + g.format(y) + "] = " + g.format(got_v);
                break;
            }
        }
        out.push_back(item("expected_brackets", ok, num(e.brackets.size()) + " relations" +
                                                        (detail.empty() ? "" : ": " + detail)));
    }

    // Characters.
    auto chars = characters_space(g, M.g_minus);
    {
        bool ok = !e.characters_dim || static_cast<long>(chars.size()) == *e.characters_dim;
        out.push_back(item("characters.dimension", ok, "dim = " + num(chars.size())));
        std::vector<QVec> xis;
        for (const auto& x : spec.xi_basis) xis.push_back(parse_covector(g, x));
        out.push_back(item("characters.parameter_basis", same_span(xis, chars, n) && xis.size() == chars.size(),
                           num(xis.size()) + " parameters"));
        bool all_chars = true;
        for (const auto& xi : xis) all_chars = all_chars && !character_violation(M, theta_from_xi(xi));
        out.push_back(item("characters.kill_g_minus_brackets", all_chars));
        for (std::size_t q = 0; q < xis.size(); ++q) {
            ThetaChar th = theta_from_xi(xis[q]);
            bool is_char = true;
            for (std::size_t a = 0; a < N.dim() && is_char; ++a)
                for (std::size_t b = a + 1; b < N.dim(); ++b)
                    if (!dchi(M, th, N.b.bracket(N.b.real_basis_vector(a), N.b.real_basis_vector(b))).is_zero()) {
                        is_char = false;
                        break;
                    }
            out.push_back(item("dchi_is_character." + spec.xi_names[q], is_char));
            auto rep = check_zero_extension(M, th);
            bool kills_k = rep.items.front().pass;
            bool pass = kills_k ? rep.ok() : !rep.items.front().detail.empty();
            std::string detail = kills_k ? (rep.ok() ? "extension is a character" : rep.items.back().detail)
                                         : "witness " + rep.items.front().detail;
            out.push_back(item("zero_extension." + spec.xi_names[q], pass, detail));
        }
    }
    return out;
}

std::vector<CheckItem> numeric_checks(const FieldsSpec& spec, const GroupModel& M, const SuiteOptions& opt,
                                      Rng& rng) {
    std::vector<CheckItem> out;
    const SiegelDomain& S = *M.S;
    out.push_back(check_peel_replay(S, opt.cone_samples, rng));
    std::vector<Rational> coords;
    for (std::size_t q = 0; q < spec.xi_basis.size(); ++q)
        coords.push_back(spec.xi_integral[q] ? Rational(static_cast<long>(rng() % 7) - 3) : random_rational(rng, 6, 4));
    ThetaChar th = theta_from_xi(xi_covector(spec, M.g(), coords));
    out.push_back(check_chi_multiplicativity(M, th, opt.chi_samples, rng));
    out.push_back(check_delta_law(M, th, opt.numeric_samples, opt.tolerance, rng));
    out.push_back(check_kernel_invariance(M, th, opt.numeric_samples, opt.tolerance, rng));
    {
        CVec sg = sigma(M, th);
        NVec E(S.udim());
        for (std::size_t i = 0; i < E.size(); ++i) E[i] = S.E_u[i].to_double();
        double expo = 0;
        for (const auto& s : sg) expo += 2 * s.re().to_double();
        bool ok = rel_err(delta_eval(S, sg, E), 1.0) <= opt.tolerance;
        for (double lam : {0.5, 2.0, 3.7}) {
            NVec W = E;
            for (auto& w : W) w *= lam;
            ok = ok && rel_err(delta_eval(S, sg, W), std::pow(lam, expo)) <= opt.tolerance;
        }
        DomainPoint ref{E, NVec(S.vdim())};
        for (auto& u : ref.u) u *= cplx(0, 1);
        NVec twoE = E;
        for (auto& w : twoE) w *= 2.0;
        ok = ok && rel_err(kernel_eval(S, sg, ref, ref), delta_eval(S, sg, twoE)) <= opt.tolerance;
        out.push_back(item("delta.closed_form", ok, "Delta(lambda E) = lambda^" + sci(expo)));
    }
    return out;
}

std::vector<CheckItem> algebra_checks(const LieAlgebra& g) {
    return {check_jacobi(g), check_corrupted_constant(g)};
}

SuiteReport run_tasks(std::string name, std::vector<std::function<std::vector<CheckItem>()>> tasks,
                      unsigned threads) {
    std::vector<std::vector<CheckItem>> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t; (t = next++) < tasks.size();) {
            try {
                results[t] = tasks[t]();
            } catch (const std::exception& e) {
                results[t] = {item("task_" + num(t), false, e.what())};
            }
        }
    };
    unsigned nt = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < nt; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    SuiteReport rep;
    rep.name = std::move(name);
    for (auto& r : results) rep.items.insert(rep.items.end(), r.begin(), r.end());
    return rep;
}

}  // namespace

bool SuiteReport::ok() const {
    return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.pass; });
}

std::string SuiteReport::text() const {
    std::ostringstream os;
    os << "suite " << name << "\n";
    std::size_t passed = 0;
    for (const auto& c : items) {
        passed += c.pass;
        os << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) os << ": " << c.detail;
        os << "\n";
    }
    os << "summary: " << passed << "/" << items.size() << " passed\n";
    return os.str();
}

json SuiteReport::to_json() const {
    json checks = json::array();
    for (const auto& c : items) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return {{"suite", name}, {"ok", ok()}, {"checks", checks}};
}

unsigned thread_count(unsigned requested) {
    if (requested) return requested;
    if (const char* env = std::getenv("JDOMAIN_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

Rational random_rational(Rng& rng, long num_range, long den_max) {
    long p = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * num_range + 1)) - num_range;
    long q = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(den_max));
    return Rational(p, q);
}

double random_real(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

ConeDecomposition<Rational> random_decomposition(const SiegelDomain& S, Rng& rng) {
    ConeDecomposition<Rational> d;
    for (std::size_t k = 0; k < S.rank(); ++k) {
        Rational p;
        while (p.sign() <= 0) p = random_rational(rng, 9, 5);
        d.pivots.push_back(p);
    }
    for (std::size_t q = 0; q < S.lower.size(); ++q) d.lower.push_back(random_rational(rng, 6, 4));
    return d;
}

std::vector<double> random_cone_point(const SiegelDomain& S, Rng& rng) {
    ConeDecomposition<double> d;
    for (std::size_t k = 0; k < S.rank(); ++k) d.pivots.push_back(std::exp(random_real(rng, -1, 1)));
    for (std::size_t q = 0; q < S.lower.size(); ++q) d.lower.push_back(random_real(rng, -1, 1));
    return replay(S, d);
}

DomainPoint random_domain_point(const SiegelDomain& S, Rng& rng) {
    DomainPoint p;
    for (std::size_t a = 0; a < S.vdim(); ++a) p.v.push_back(cplx(random_real(rng, -1, 1), random_real(rng, -1, 1)));
    NVec q = S.Qform(p.v, p.v);
    auto y = random_cone_point(S, rng);
    for (std::size_t i = 0; i < S.udim(); ++i) p.u.push_back(cplx(random_real(rng, -1, 1), y[i] + q[i].real()));
    return p;
}

BWord random_word(const SiegelDomain& S, Rng& rng, std::size_t length, bool b0_only) {
    std::vector<Letter::Kind> kinds = {Letter::Scale};
    if (!S.lower.empty()) kinds.push_back(Letter::Lower);
    if (!b0_only) {
        kinds.push_back(Letter::Translate);
        if (S.vdim()) kinds.push_back(Letter::Shear);
    }
    BWord w;
    for (std::size_t i = 0; i < length; ++i) {
        Letter l;
        l.kind = kinds[rng() % kinds.size()];
        switch (l.kind) {
            case Letter::Translate:
                for (std::size_t k = 0; k < S.udim(); ++k) l.u0.push_back(random_real(rng, -1, 1));
                break;
            case Letter::Shear:
                for (std::size_t a = 0; a < S.vdim(); ++a)
                    l.v0.push_back(cplx(random_real(rng, -0.5, 0.5), random_real(rng, -0.5, 0.5)));
                break;
            case Letter::Scale:
                l.index = rng() % S.rank();
                l.t = random_real(rng, -0.7, 0.7);
                break;
            case Letter::Lower:
                l.index = rng() % S.lower.size();
                l.t = random_real(rng, -0.7, 0.7);
                break;
        }
        w.push_back(l);
    }
    return w;
}

CheckItem check_jacobi(const LieAlgebra& g) {
    if (auto a = antisymmetry_violation(g))
        return item("jacobi", false, "antisymmetry fails at (" + g.labels()[(*a)[0]] + ", " + g.labels()[(*a)[1]] + ")");
    if (auto t = jacobi_violation(g))
        return item("jacobi", false,
                    "witness (" + g.labels()[(*t)[0]] + ", " + g.labels()[(*t)[1]] + ", " + g.labels()[(*t)[2]] + ")");
    std::size_t n = g.dim();
    return item("jacobi", true, num(n * (n - 1) * (n - 2) / 6) + " triples");
}

CheckItem check_corrupted_constant(const LieAlgebra& g) {
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i + 1; j < g.dim(); ++j)
            for (std::size_t k = 0; k < g.dim(); ++k) {
                LieAlgebra h = g;
                Gaussian c = g.structure(i, j)[k] + Gaussian(1);
                h.set_constant(i, j, k, c);
                h.set_constant(j, i, k, -c);
                if (auto t = jacobi_violation(h))
                    return item("negative_control.corrupted_constant", true,
                                "c[" + g.labels()[i] + "," + g.labels()[j] + "][" + g.labels()[k] + "] += 1 -> witness (" +
                                    h.labels()[(*t)[0]] + ", " + h.labels()[(*t)[1]] + ", " + h.labels()[(*t)[2]] + ")");
            }
    return item("negative_control.corrupted_constant", g.dim() < 3, "no corruption broke the Jacobi identity");
}

CheckItem check_grading_law(const NormalJAlgebra& N) {
    std::vector<std::pair<QVec, Rational>> hom;
    for (const auto& x : N.b0) hom.emplace_back(x, Rational(0));
    for (const auto& x : N.bhalf) hom.emplace_back(x, Rational(1, 2));
    for (const auto& x : N.b1) hom.emplace_back(x, Rational(1));
    std::size_t pairs = 0;
    for (std::size_t a = 0; a < hom.size(); ++a) {
        auto ga = N.grade_of(hom[a].first);
        if (!ga || *ga != hom[a].second) return item("grading_law", false, "basis vector has the wrong grade");
        for (std::size_t b = 0; b < hom.size(); ++b) {
            ++pairs;
            QVec z = N.b.bracket(hom[a].first, hom[b].first);
            if (is_zero_vec(z)) continue;
            Rational want = hom[a].second + hom[b].second;
            auto gz = N.grade_of(z);
            if (!gz || *gz != want)
                return item("grading_law", false,
                            "[b(" + hom[a].second.str() + "), b(" + hom[b].second.str() + ")] not in b(" + want.str() +
                                ")");
        }
    }
    return item("grading_law", true, num(pairs) + " pairs");
}

CheckItem check_tau_homomorphism(const GroupModel& M) {
    const NormalJAlgebra& N = *M.N;
    std::size_t pairs = 0;
    for (std::size_t a = 0; a < N.dim(); ++a) {
        CVec ta = tau(N, N.b.real_basis_vector(a));
        if (!in_span(M.g_minus, M.b_to_g(ta)))
            return item("tau.homomorphism_into_b_minus", false, "tau(" + M.b_labels[a] + ") not in g_-");
        for (std::size_t b = a + 1; b < N.dim(); ++b) {
            ++pairs;
            CVec lhs = tau(N, N.b.bracket(N.b.real_basis_vector(a), N.b.real_basis_vector(b)));
            CVec rhs = N.b.bracket(ta, tau(N, N.b.real_basis_vector(b)));
            if (lhs != rhs)
                return item("tau.homomorphism_into_b_minus", false,
                            "fails at (" + M.b_labels[a] + ", " + M.b_labels[b] + ")");
        }
    }
    return item("tau.homomorphism_into_b_minus", true, num(pairs) + " pairs");
}

CheckItem check_peel_replay(const SiegelDomain& S, std::size_t samples, Rng& rng) {
    for (std::size_t s = 0; s < samples; ++s) {
        auto d = random_decomposition(S, rng);
        QVec u = replay(S, d);
        auto d2 = peel(S, u);
        if (d2.pivots != d.pivots || d2.lower != d.lower || replay(S, d2) != u)
            return item("peel_replay", false, "mismatch at sample " + num(s));
        auto bad = d;
        bad.pivots[rng() % bad.pivots.size()] = -random_rational(rng, 5, 3).abs();
        bool threw = false;
        try {
            peel(S, replay(S, bad));
        } catch (const PivotNotPositive&) {
            threw = true;
        }
        if (!threw) return item("peel_replay", false, "non-positive pivot accepted at sample " + num(s));
    }
    return item("peel_replay", true, num(samples) + " exact samples");
}

CheckItem check_chi_multiplicativity(const GroupModel& M, const ThetaChar& th, std::size_t samples, Rng& rng) {
    const auto table = dchi_table(M, th);
    auto chi = [&](const BWord& w) { return chi_word(*M.S, table, w); };
    double worst = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        BWord w = random_word(*M.S, rng, 2 + rng() % 7, false);
        std::size_t cut = rng() % (w.size() + 1);
        BWord w1(w.begin(), w.begin() + static_cast<long>(cut)), w2(w.begin() + static_cast<long>(cut), w.end());
        worst = std::max(worst, rel_err(chi(w), chi(w1) * chi(w2)));
    }
    return item("chi.multiplicativity", worst <= 1e-12, num(samples) + " splits, max rel err " + sci(worst));
}

CheckItem check_delta_law(const GroupModel& M, const ThetaChar& th, std::size_t samples, double tol, Rng& rng) {
    const SiegelDomain& S = *M.S;
    CVec sg = sigma(M, th);
    const auto table = dchi_table(M, th);
    double worst = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        auto y = random_cone_point(S, rng);
        NVec W(S.udim());
        for (std::size_t i = 0; i < W.size(); ++i) W[i] = cplx(y[i], random_real(rng, -1, 1));
        BWord t0 = random_word(S, rng, 1 + rng() % 5, true);
        NVec W2 = ad_action_u(S, t0, W);
        cplx c = chi_word(S, table, t0);
        worst = std::max(worst, rel_err(delta_eval(S, sg, W2), std::norm(c) * delta_eval(S, sg, W)));
    }
    return item("delta.transformation_law", worst <= tol, num(samples) + " samples, max rel err " + sci(worst));
}

CheckItem check_kernel_invariance(const GroupModel& M, const ThetaChar& th, std::size_t samples, double tol,
                                  Rng& rng) {
    const SiegelDomain& S = *M.S;
    CVec sg = sigma(M, th);
    const auto table = dchi_table(M, th);
    double worst = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        DomainPoint z = random_domain_point(S, rng), w = random_domain_point(S, rng);
        BWord b = random_word(S, rng, 1 + rng() % 6, false);
        DomainPoint bz = affine_action(S, b, z), bw = affine_action(S, b, w);
        cplx c = chi_word(S, table, b);
        worst = std::max(worst, rel_err(kernel_eval(S, sg, bz, bw), c * kernel_eval(S, sg, z, w) * std::conj(c)));
    }
    return item("kernel.b_invariance", worst <= tol, num(samples) + " samples, max rel err " + sci(worst));
}

YData y_from_field(const SiegelDomain& S, const PolyVectorField& f) {
    const std::size_t U = S.udim(), V = S.vdim();
    YData y;
    y.Phi = CMatrix(V, U);
    y.c.assign(V, std::vector<CVec>(V, CVec(V)));
    const std::size_t nv = U + V;
    for (std::size_t d = 0; d < V; ++d) {
        const MultiPoly& p = f.comp[U + d];
        for (std::size_t k = 0; k < U; ++k) {
            Exponent e(nv, 0);
            e[k] = 1;
            y.Phi(d, k) = p.coefficient(e);
        }
        for (std::size_t a = 0; a < V; ++a)
            for (std::size_t b = 0; b < V; ++b) {
                Exponent e(nv, 0);
                e[U + a] += 1;
                e[U + b] += 1;
                Gaussian c = p.coefficient(e);
                y.c[a][b][d] = a == b ? c : Gaussian(Rational(1, 2)) * c;
            }
    }
    return y;
}

ZData z_from_field(const SiegelDomain& S, const PolyVectorField& f) {
    const std::size_t U = S.udim(), V = S.vdim();
    const std::size_t nv = U + V;
    ZData z;
    z.a.assign(U, std::vector<CVec>(U, CVec(U)));
    z.b.assign(U, std::vector<CVec>(V, CVec(V)));
    for (std::size_t i = 0; i < U; ++i) {
        for (std::size_t k = 0; k < U; ++k) {
            Exponent e(nv, 0);
            e[i] += 1;
            e[k] += 1;
            for (std::size_t o = 0; o < U; ++o) {
                Gaussian c = f.comp[o].coefficient(e);
                z.a[i][k][o] = i == k ? c : Gaussian(Rational(1, 2)) * c;
            }
        }
        for (std::size_t a = 0; a < V; ++a) {
            Exponent e(nv, 0);
            e[i] = 1;
            e[U + a] = 1;
            for (std::size_t d = 0; d < V; ++d) z.b[i][a][d] = f.comp[U + d].coefficient(e);
        }
    }
    return z;
}

std::vector<CheckItem> check_field_calculus(const GroupModel& M, Rng& rng) {
    std::vector<CheckItem> out;
    const SiegelDomain& S = *M.S;
    const VarList& vars = M.F.vars;
    const std::size_t U = S.udim(), V = S.vdim();
    const int rounds = 6;

    bool d1 = true, d2 = true, d3 = true;
    for (int r = 0; r < rounds; ++r) {
        auto X = random_linear(S, rng), X2 = random_linear(S, rng);
        auto fX = field_linear(S, vars, X.A, X.B), fX2 = field_linear(S, vars, X2.A, X2.B);
        CVec u0 = random_real_cvec(rng, U), v0 = random_cvec(rng, V);
        d1 = d1 && vf_bracket(fX, field_d_u(S, vars, u0)) == Gaussian(-1) * field_d_u(S, vars, X.A * u0);
        d2 = d2 && vf_bracket(fX, field_dtilde_v(S, vars, v0)) == Gaussian(-1) * field_dtilde_v(S, vars, X.B * v0);
        d3 = d3 && vf_bracket(fX, fX2) ==
                       Gaussian(-1) * field_linear(S, vars, commutator(X.A, X2.A), commutator(X.B, X2.B));
    }
    out.push_back(item("bracket.linear_with_d_u", d1, num(rounds) + " tableaux"));
    out.push_back(item("bracket.linear_with_dtilde_v", d2, num(rounds) + " tableaux"));
    out.push_back(item("bracket.linear_with_linear", d3, num(rounds) + " tableaux"));

    auto z_fields = graded_parts(M.F, Rational(1));
    {
        bool ok = true, cond = true;
        std::string detail;
        for (const auto& zf : z_fields) {
            ZData z = z_from_field(S, zf);
            if (field_Z(S, vars, z) != zf) {
                ok = false;
                detail = "grade 1 field is not of the form Z_{a,b}";
                break;
            }
            auto rep = check_Z_conditions(S, M.g0, z);
            if (!rep.ok()) {
                cond = false;
                detail = rep.first_failure()->name + " " + rep.first_failure()->detail;
            }
            for (int r = 0; r < rounds && ok; ++r) {
                CVec u = random_real_cvec(rng, U);
                CMatrix A(U, U), B(V, V);
                for (std::size_t i = 0; i < U; ++i) {
                    if (u[i].is_zero()) continue;
                    for (std::size_t k = 0; k < U; ++k)
                        for (std::size_t o = 0; o < U; ++o) A(o, k) += u[i] * z.a[i][k][o];
                    for (std::size_t a = 0; a < V; ++a)
                        for (std::size_t d = 0; d < V; ++d) B(d, a) += Gaussian(Rational(1, 2)) * u[i] * z.b[i][a][d];
                }
                ok = vf_bracket(field_d_u(S, vars, u), zf) == Gaussian(2) * field_linear(S, vars, A, B);
            }
        }
        out.push_back(item("bracket.d_u_with_Z", ok && cond, num(z_fields.size()) + " grade 1 fields" +
                                                               (detail.empty() ? "" : ": " + detail)));
    }

    if (V == 0) return out;

    std::vector<CMatrix> phis;
    for (std::size_t d = 0; d < V; ++d)
        for (std::size_t k = 0; k < U; ++k) {
            CMatrix m(V, U);
            m(d, k) = Gaussian(1);
            phis.push_back(m);
            m(d, k) = I;
            phis.push_back(m);
        }
    for (int r = 0; r < 3; ++r) phis.push_back(random_cmatrix(rng, V, U));

    bool d4 = true, d5 = true, lem_i = true, lem_ii = true, psi_ok = true, yconds = true, core = true;
    bool y2_negative = true;
    for (const auto& Phi : phis) {
        auto yd = complete_Y(S, Phi);
        if (!yd) {
            yconds = false;
            continue;
        }
        auto Y = field_Y(S, vars, *yd);
        yconds = yconds && check_Y_conditions(S, M.g0, *yd).ok();
        YData bare{Phi, {}};
        bare.c.assign(V, std::vector<CVec>(V, CVec(V)));
        bool c_zero = true;
        for (const auto& row : yd->c)
            for (const auto& x : row) c_zero = c_zero && is_zero_vec(x);
        if (!c_zero) {
            auto rep = check_Y_conditions(S, M.g0, bare);
            const CheckItem* f = rep.first_failure();
            y2_negative = y2_negative && f && f->name == "Y2";
        }

        CVec u = random_real_cvec(rng, U), v = random_cvec(rng, V);
        d4 = d4 && vf_bracket(field_d_u(S, vars, u), Y) == field_dtilde_v(S, vars, Phi * u);

        CMatrix A(U, U), B(V, V);
        for (std::size_t k = 0; k < U; ++k) {
            CVec pk = Phi.column(k);
            CVec col = scale(Gaussian(2) * I, sub(S.Qform(v, pk), S.Qform(pk, v)));
            for (std::size_t i = 0; i < U; ++i) A(i, k) = col[i];
        }
        for (std::size_t a = 0; a < V; ++a) {
            CVec ea = unit<Gaussian>(V, a);
            CVec col = add(scale(Gaussian(2) * I, Phi * S.Qform(ea, v)), scale(Gaussian(2), c_apply(*yd, v, ea)));
            for (std::size_t d = 0; d < V; ++d) B(d, a) = col[d];
        }
        d5 = d5 && vf_bracket(field_dtilde_v(S, vars, v), Y) == field_linear(S, vars, A, B);

        auto X = random_linear(S, rng);
        auto YX = vf_bracket(Y, field_linear(S, vars, X.A, X.B));
        YData yp = y_from_field(S, YX);
        lem_i = lem_i && yp.Phi == X.B * Phi - Phi * X.A;
        for (std::size_t a = 0; a < V; ++a)
            for (std::size_t b = a; b < V; ++b) {
                CVec w = a == b ? unit<Gaussian>(V, a) : add(unit<Gaussian>(V, a), unit<Gaussian>(V, b));
                CVec lhs = c_apply(yp, w, w);
                CVec rhs = sub(X.B * c_apply(*yd, w, w), scale(Gaussian(2), c_apply(*yd, X.B * w, w)));
                lem_ii = lem_ii && lhs == rhs;
            }

        CVec e = to_complex(S.E_u);
        psi_ok = psi_ok && psi_map(S, Y) == field_dtilde_v(S, vars, scale(-I, Phi * e));

        auto ydi = complete_Y(S, I * Phi);
        if (ydi) {
            auto Zf = vf_bracket(Y, field_Y(S, vars, *ydi));
            ZData z = z_from_field(S, Zf);
            for (int r = 0; r < 3; ++r) {
                CVec uu = random_real_cvec(rng, U);
                CVec lhs(U);
                for (std::size_t i = 0; i < U; ++i)
                    for (std::size_t k = 0; k < U; ++k)
                        if (!(uu[i] * uu[k]).is_zero()) lhs = add(lhs, scale(uu[i] * uu[k], z.a[i][k]));
                core = core && lhs == scale(Gaussian(4), S.Qform(Phi * uu, Phi * uu));
            }
        } else {
            core = false;
        }
    }
    std::string nphi = num(phis.size()) + " tableaux";
    out.push_back(item("Y.conditions_hold", yconds, nphi));
    out.push_back(item("Y.negative_control_c0_fails_Y2", y2_negative));
    out.push_back(item("bracket.d_u_with_Y", d4, nphi));
    out.push_back(item("bracket.dtilde_v_with_Y", d5, nphi));
    out.push_back(item("bracket.Y_with_linear.Phi", lem_i, nphi));
    out.push_back(item("bracket.Y_with_linear.c", lem_ii, nphi));
    out.push_back(item("psi_e.Y_Phi", psi_ok, nphi));
    out.push_back(item("Y_Phi_Y_iPhi.a_equals_4Q", core, nphi));

    // If [d_{u0}, X(1)] = 0 then [d_{u0}, X(1/2)] = 0.
    {
        auto y_fields = graded_parts(M.F, Rational(1, 2));
        std::vector<CVec> cands;
        cands.push_back(CVec(U));
        for (std::size_t i = 0; i < U; ++i) cands.push_back(to_complex(unit<Rational>(U, i)));
        for (int r = 0; r < 8; ++r) cands.push_back(random_real_cvec(rng, U));
        std::size_t hyp = 0;
        bool ok = true;
        for (const auto& u0 : cands) {
            auto du = field_d_u(S, vars, u0);
            bool kills_z = std::all_of(z_fields.begin(), z_fields.end(),
                                       [&](const PolyVectorField& z) { return vf_bracket(du, z).is_zero(); });
            if (!kills_z) continue;
            ++hyp;
            for (const auto& y : y_fields) ok = ok && vf_bracket(du, y).is_zero();
        }
        out.push_back(item("kills_X1_implies_kills_Xhalf", ok,
                           num(cands.size()) + " candidates, " + num(hyp) + " satisfy the hypothesis"));
    }
    // Y_Phi in f implies Y_{i Phi} in f.
    {
        std::size_t in_f = 0;
        bool ok = true;
        for (const auto& Phi : phis) {
            auto yd = complete_Y(S, Phi);
            if (!yd || !M.F.coords(field_Y(S, vars, *yd))) continue;
            ++in_f;
            auto ydi = complete_Y(S, I * Phi);
            ok = ok && ydi && M.F.coords(field_Y(S, vars, *ydi)).has_value();
        }
        out.push_back(item("Y_iPhi_in_f", ok && in_f > 0, num(in_f) + " of " + nphi + " lie in f"));
    }
    return out;
}

std::vector<CheckItem> check_grade_table(const GroupModel& M, const Expected& e) {
    std::vector<CheckItem> out;
    bool ok = true;
    std::string detail;
    for (const auto& [label, gr] : e.grades) {
        auto idx = M.g().index_of(label);
        if (!idx) throw ValidationError("grade table names unknown label " + label);
        auto got = grade_classify(M.F.fields[*idx]);
        std::string g = got ? got->str() : "mixed";
        if (g != gr) {
            ok = false;
            detail = label + " has grade " + g + ", expected " + gr;
            break;
        }
    }
    out.push_back(item("grade_table", ok, detail.empty() ? num(e.grades.size()) + " fields" : detail));

    // [X,Y] lands in the sum of grades for homogeneous parts.
    std::vector<std::pair<PolyVectorField, Rational>> parts;
    for (const auto& f : M.F.fields)
        for (const auto& [g, p] : decompose_by_grade(f)) parts.emplace_back(p, g);
    bool law = true;
    for (std::size_t a = 0; a < parts.size() && law; ++a)
        for (std::size_t b = 0; b < parts.size(); ++b) {
            auto br = vf_bracket(parts[a].first, parts[b].first);
            if (br.is_zero()) continue;
            auto g = grade_classify(br);
            Rational want = parts[a].second + parts[b].second;
            if (!g || *g != want || want > Rational(1) || want < Rational(-1)) {
                law = false;
                break;
            }
        }
    out.push_back(item("field_grading_law", law, num(parts.size()) + " homogeneous parts"));
    return out;
}

std::vector<CheckItem> check_classification(const Expected& e) {
    std::vector<CheckItem> out;
    auto parse_xi = [](const std::vector<std::string>& s) {
        if (s.size() != 4) throw ParseError("classification sample needs four parameters");
        XiParam xi;
        xi.x = Rational::parse(s[0]);
        xi.y = Rational::parse(s[1]);
        Rational n = Rational::parse(s[2]), np = Rational::parse(s[3]);
        if (!n.is_integer() || !np.is_integer()) throw ParseError("n and n' must be integers");
        xi.n = n.raw().get_num().get_si();
        xi.nprime = np.raw().get_num().get_si();
        return xi;
    };
    if (!e.unitarity.empty()) {
        bool ok = true;
        for (const auto& u : e.unitarity) ok = ok && is_unitarizable(parse_xi(u.xi)) == u.unitarizable;
        out.push_back(item("classification.unitarity_samples", ok, num(e.unitarity.size()) + " samples"));
    }
    if (!e.partition.empty()) {
        bool ok = true;
        for (const auto& p : e.partition) {
            Level lv = p.level == "B" ? Level::B : Level::G;
            ok = ok && (partition_label(parse_xi(p.a), lv) == partition_label(parse_xi(p.b), lv)) == p.same;
        }
        out.push_back(item("classification.partition_samples", ok, num(e.partition.size()) + " pairs"));
    }
    return out;
}

SuiteReport run_suite(const FieldsSpec& spec, const SuiteOptions& opt) {
    std::shared_ptr<const GroupModel> M;
    try {
        M = std::make_shared<const GroupModel>(model_of(spec));
    } catch (const ValidationError& e) {
        SuiteReport rep;
        rep.name = spec.name;
        rep.items.push_back(item("model", false, e.what()));
        return rep;
    }
    std::vector<std::function<std::vector<CheckItem>()>> tasks;
    tasks.push_back([M] {
        auto v = algebra_checks(M->g());
        v.insert(v.begin(), item("model", true, "fields close under the bracket"));
        return v;
    });
    tasks.push_back([M, &spec] { return structure_checks(spec, *M); });
    tasks.push_back([M, &spec] { return check_grade_table(*M, spec.expected); });
    tasks.push_back([M, &spec, &opt] {
        Rng rng(opt.seed);
        return numeric_checks(spec, *M, opt, rng);
    });
    tasks.push_back([M, &opt] {
        Rng rng(opt.seed + 1);
        return check_field_calculus(*M, rng);
    });
    tasks.push_back([&spec] { return check_classification(spec.expected); });
    return run_tasks(spec.name, std::move(tasks), thread_count(opt.threads));
}

SuiteReport run_lie_suite(const std::string& name, const LieAlgebra& g) {
    SuiteReport rep;
    rep.name = name;
    rep.items.push_back(check_jacobi(g));
    return rep;
}

SuiteReport run_normal_j_suite(const std::string& name, const NormalJSpec& spec) {
    SuiteReport rep = run_lie_suite(name, spec.algebra);
    if (!rep.ok()) return rep;
    QVec omega = spec.omega ? *spec.omega : koszul_form(spec.algebra, spec.j);
    auto v = validate_normal_j(spec.algebra, spec.j, omega);
    append(rep.items, v, "normal_j.");
    if (!v.ok()) return rep;
    try {
        NormalJAlgebra N = compute_grading(spec.algebra, spec.j, omega);
        rep.items.push_back(item("grading_shape", true, "rank " + num(N.rank)));
        rep.items.push_back(check_grading_law(N));
    } catch (const ValidationError& e) {
        rep.items.push_back(item("grading_shape", false, e.what()));
    }
    return rep;
}

}  // namespace jdomain
