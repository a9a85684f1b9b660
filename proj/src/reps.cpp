#include "jdomain/reps.hpp"

#include <cmath>

namespace jdomain {

namespace {

CVec combine(const QVec& re, const QVec& im) {
    CVec out(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) out[i] = Gaussian(re[i], im[i]);
    return out;
}

Gaussian pair_with(const CVec& covector, const CVec& x) {
    Gaussian s;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) s += covector[i] * x[i];
    return s;
}

}  // namespace

QVec GroupModel::b_to_g(const QVec& x) const {
    QVec out(F.g.dim());
    for (std::size_t i = 0; i < x.size(); ++i) out = add(out, scale(x[i], b_in_g[i]));
    return out;
}

CVec GroupModel::b_to_g(const CVec& x) const {
    return combine(b_to_g(real_part(x)), b_to_g(imag_part(x)));
}

GroupModel build_model(std::string name, FieldAlgebra F, std::vector<std::string> b_labels, CVec reference,
                       std::optional<QVec> omega) {
    GroupModel M;
    M.name = std::move(name);
    const std::size_t n = F.g.dim();
    for (const auto& l : b_labels) {
        auto i = F.g.index_of(l);
        if (!i) throw ValidationError("unknown b label " + l);
        M.b_in_g.push_back(unit<Rational>(n, *i));
    }
    LieAlgebra b = subalgebra(F.g, M.b_in_g, b_labels);
    QMatrix j = infer_j(F, M.b_in_g, reference);
    QVec w = omega ? *omega : koszul_form(b, j);
    M.N = std::make_shared<const NormalJAlgebra>(compute_grading(std::move(b), std::move(j), std::move(w)));
    M.S = std::make_shared<const SiegelDomain>(build_siegel(M.N));
    if (M.S->udim() + M.S->vdim() != F.vars->size())
        throw ValidationError("domain dimension differs from the number of coordinates");
    if (M.S->reference_point() != reference)
        throw ValidationError("reference point is not (iE, 0) in the domain coordinates");
    for (std::size_t q = 0; q < b_labels.size(); ++q) {
        auto expect = field_of_element(*M.S, F.vars, M.N->b.real_basis_vector(q));
        if (expect != F.fields[*F.g.index_of(b_labels[q])])
            throw ValidationError("field " + b_labels[q] + " differs from the b-action " + expect.str());
    }
    M.b_labels = std::move(b_labels);
    M.reference = std::move(reference);
    M.k = isotropy_at(F, M.reference);
    M.g_minus = compute_g_minus(F, M.reference);
    M.g0 = cone_algebra(*M.S);
    M.F = std::move(F);
    return M;
}

CVec tau(const NormalJAlgebra& N, const QVec& x) {
    auto p = N.split(x);
    QVec re = add(scale(Rational(1, 2), p.v), p.t);
    QVec im = add(scale(Rational(1, 2), N.j * p.v), N.j * p.t);
    return combine(re, im);
}

CVec tau(const NormalJAlgebra& N, const CVec& x) {
    CVec a = tau(N, real_part(x)), b = tau(N, imag_part(x));
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += Gaussian::i() * b[i];
    return a;
}

std::vector<CVec> b_minus(const NormalJAlgebra& N) {
    std::vector<CVec> out;
    for (std::size_t i = 0; i < N.dim(); ++i) out.push_back(tau(N, N.b.real_basis_vector(i)));
    return span_basis(out, N.dim());
}

ThetaChar theta_from_xi(const QVec& xi) {
    ThetaChar th;
    for (const auto& x : xi) th.theta.push_back(Gaussian(Rational(0), x));
    return th;
}

std::optional<std::string> character_violation(const GroupModel& M, const ThetaChar& th) {
    const auto& gm = M.g_minus;
    for (std::size_t a = 0; a < gm.size(); ++a)
        for (std::size_t b = a + 1; b < gm.size(); ++b) {
            CVec br = M.g().bracket(gm[a], gm[b]);
            Gaussian v = pair_with(th.theta, br);
            if (!v.is_zero())
                return "theta([" + M.g().format(gm[a]) + ", " + M.g().format(gm[b]) + "]) = " + v.str();
        }
    return std::nullopt;
}

Gaussian dchi(const GroupModel& M, const ThetaChar& th, const QVec& x) {
    return pair_with(th.theta, M.b_to_g(tau(*M.N, x)));
}

CVec sigma(const GroupModel& M, const ThetaChar& th) {
    CVec s;
    for (const auto& a : M.N->A) s.push_back(dchi(M, th, a));
    return s;
}

std::vector<cplx> dchi_table(const GroupModel& M, const ThetaChar& th) {
    std::vector<cplx> d(M.N->dim());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = dchi(M, th, M.N->b.real_basis_vector(i)).to_complex();
    return d;
}

cplx chi_word(const SiegelDomain& S, const std::vector<cplx>& table, const BWord& word) {
    cplx s = 0;
    for (const auto& l : word) {
        auto x = letter_generator(S, l);
        for (std::size_t i = 0; i < table.size(); ++i) s += x[i] * table[i];
    }
    return std::exp(s);
}

cplx chi_word(const GroupModel& M, const ThetaChar& th, const BWord& word) {
    return chi_word(*M.S, dchi_table(M, th), word);
}

ValidationReport check_zero_extension(const GroupModel& M, const ThetaChar& th) {
    ValidationReport rep;
    CheckItem pre{"theta_kills_k", true, ""};
    for (const auto& kv : M.k) {
        Gaussian v = pair_with(th.theta, to_complex(kv));
        if (!v.is_zero()) {
            pre = {"theta_kills_k", false, "theta(" + M.g().format(kv) + ") = " + v.str()};
            break;
        }
    }
    rep.items.push_back(pre);
    if (!pre.pass) return rep;

    const std::size_t n = M.g().dim();
    std::vector<QVec> basis = M.b_in_g;
    basis.insert(basis.end(), M.k.begin(), M.k.end());
    CVec lambda(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto c = coords_in(basis, M.g().real_basis_vector(i));
        if (!c) throw ValidationError("g is not the direct sum of b and k");
        for (std::size_t q = 0; q < M.b_in_g.size(); ++q)
            if (!(*c)[q].is_zero()) lambda[i] += Gaussian((*c)[q]) * dchi(M, th, M.N->b.real_basis_vector(q));
    }
    CheckItem one{"zero_extension_is_character", true, ""};
    for (std::size_t i = 0; i < n && one.pass; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Gaussian v = pair_with(lambda, M.g().structure(i, j));
            if (!v.is_zero()) {
                one = {"zero_extension_is_character", false,
                       "lambda([" + M.g().labels()[i] + ", " + M.g().labels()[j] + "]) = " + v.str()};
                break;
            }
        }
    rep.items.push_back(one);
    return rep;
}

cplx delta_eval2(const SiegelDomain& S, const CVec& sigma, const CVec& sigma2, const NVec& W) {
    auto d = peel(S, W);
    cplx v = 1;
    for (std::size_t k = 0; k < d.pivots.size(); ++k) {
        cplx e = std::conj(sigma[k].to_complex() - (sigma2.empty() ? cplx(0) : sigma2[k].to_complex()));
        v *= std::exp(e * std::log(d.pivots[k]));
    }
    return v;
}

cplx delta_eval(const SiegelDomain& S, const CVec& sigma, const NVec& W) {
    auto d = peel(S, W);
    cplx v = 1;
    for (std::size_t k = 0; k < d.pivots.size(); ++k)
        v *= std::exp(2.0 * sigma[k].re().to_double() * std::log(d.pivots[k]));
    return v;
}

cplx kernel_eval(const SiegelDomain& S, const CVec& sigma, const DomainPoint& z, const DomainPoint& w) {
    NVec q = S.Qform(z.v, w.v);
    NVec arg(S.udim());
    const cplx I(0, 1);
    for (std::size_t i = 0; i < arg.size(); ++i) arg[i] = (z.u[i] - std::conj(w.u[i])) / I - 2.0 * q[i];
    return delta_eval(S, sigma, arg);
}

std::vector<QVec> characters_space(const LieAlgebra& g, const std::vector<CVec>& g_minus) {
    const std::size_t n = g.dim();
    std::vector<QVec> rows;
    for (const auto& z : bracket_span(g, g_minus, g_minus)) {
        rows.push_back(real_part(z));
        rows.push_back(imag_part(z));
    }
    if (rows.empty()) {
        std::vector<QVec> all;
        for (std::size_t i = 0; i < n; ++i) all.push_back(unit<Rational>(n, i));
        return all;
    }
    return kernel(QMatrix::from_rows(rows, n));
}

bool is_unitarizable(const XiParam& xi) {
    int s = xi.x.sign();
    return (s < 0 && xi.n > 0 && xi.nprime > 0) || (s == 0 && xi.n >= 0 && xi.nprime >= 0);
}

std::string partition_label(const XiParam& xi, Level level) {
    if (!is_unitarizable(xi)) throw NotUnitarizable("parameter is not unitarizable");
    std::string nn = std::to_string(xi.n) + "," + std::to_string(xi.nprime);
    if (xi.x.sign() < 0) return level == Level::B ? "B:MinusClass" : "G:Minus(" + nn + ")";
    std::string key = "(" + xi.y.str() + "," + nn + ")";
    return (level == Level::B ? "B:Singleton" : "G:Singleton") + key;
}

}  // namespace jdomain
