#include "jdomain/siegel.hpp"

#include <algorithm>
#include <cmath>
#include <type_traits>

namespace jdomain {

namespace {

std::size_t leading_index(const QVec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return i;
    return v.size();
}

template <class T>
T lift(const Rational& r);
template <>
Rational lift(const Rational& r) { return r; }
template <>
Gaussian lift(const Rational& r) { return Gaussian(r); }
template <>
double lift(const Rational& r) { return r.to_double(); }
template <>
cplx lift(const Rational& r) { return cplx(r.to_double(), 0.0); }

template <class T>
constexpr bool is_exact = std::is_same_v<T, Rational> || std::is_same_v<T, Gaussian>;

template <class T>
Vec<T> qapply(const QMatrix& m, const Vec<T>& v) {
    Vec<T> out(m.rows(), T{});
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < m.cols(); ++k)
            if (!m(i, k).is_zero()) out[i] += lift<T>(m(i, k)) * v[k];
    return out;
}

/// exp(sign * sum_i s_i M_i) u for nilpotent M_i.
template <class T>
Vec<T> exp_apply(const SiegelDomain& S, const std::vector<std::size_t>& idx, const std::vector<T>& s, int sign,
                 const Vec<T>& u) {
    Vec<T> term = u, acc = u;
    for (std::size_t m = 1; m <= u.size(); ++m) {
        Vec<T> next(u.size(), T{});
        for (std::size_t q = 0; q < idx.size(); ++q) {
            auto w = qapply(S.lower_ad_u[idx[q]], term);
            for (std::size_t i = 0; i < w.size(); ++i) next[i] += s[q] * w[i];
        }
        T f = lift<T>(Rational(sign, static_cast<long>(m)));
        for (auto& x : next) x = x * f;
        term = std::move(next);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += term[i];
    }
    return acc;
}

std::string pivot_text(std::size_t k, const std::string& v) {
    return "pivot " + std::to_string(k + 1) + " = " + v;
}

void check_pivot(const Rational& p, std::size_t k) {
    if (p.sign() <= 0) throw PivotNotPositive(pivot_text(k, p.str()));
}
void check_pivot(const Gaussian& p, std::size_t k) {
    if (p.is_zero()) throw PivotZero(pivot_text(k, "0"));
}
void check_pivot(double p, std::size_t k) {
    if (!(p > kPivotTolerance)) throw PivotNotPositive(pivot_text(k, std::to_string(p)));
}
void check_pivot(const cplx& p, std::size_t k) {
    if (!(std::abs(p) > kPivotTolerance)) throw PivotZero(pivot_text(k, std::to_string(std::abs(p))));
}

template <class T>
ConeDecomposition<T> peel_impl(const SiegelDomain& S, Vec<T> u) {
    if (u.size() != S.udim()) throw std::invalid_argument("point has wrong dimension");
    ConeDecomposition<T> d;
    d.lower.assign(S.lower.size(), T{});
    for (std::size_t k = 0; k < S.rank(); ++k) {
        T p = u[S.e_index[k]];
        check_pivot(p, k);
        d.pivots.push_back(p);
        const auto& li = S.lower_of_k[k];
        if (li.empty()) continue;
        const auto& pi = S.plus_of_k[k];
        Vec<T> target(pi.size());
        for (std::size_t q = 0; q < pi.size(); ++q) target[q] = u[pi[q]] / p;
        Vec<T> s = qapply(S.elim_inv[k], target);
        u = exp_apply(S, li, s, -1, u);
        for (std::size_t q = 0; q < li.size(); ++q) d.lower[li[q]] = s[q];
        if constexpr (is_exact<T>) {
            for (auto q : pi)
                if (!is_zero(u[q])) throw std::logic_error("peel elimination left a residue");
        }
    }
    if constexpr (is_exact<T>) {
        for (std::size_t i = 0; i < u.size(); ++i)
            if (std::find(S.e_index.begin(), S.e_index.end(), i) == S.e_index.end() && !is_zero(u[i]))
                throw std::logic_error("peel did not reach a diagonal point");
    }
    return d;
}

template <class T>
Vec<T> replay_impl(const SiegelDomain& S, const ConeDecomposition<T>& d) {
    Vec<T> u(S.udim(), T{});
    for (std::size_t k = 0; k < S.rank(); ++k) u[S.e_index[k]] = d.pivots[k];
    for (std::size_t k = S.rank(); k-- > 0;) {
        const auto& li = S.lower_of_k[k];
        if (li.empty()) continue;
        std::vector<T> s;
        for (auto q : li) s.push_back(d.lower[q]);
        u = exp_apply(S, li, s, 1, u);
    }
    return u;
}

NVec matvec(const CMatrix& m, const NVec& v) {
    NVec out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < m.cols(); ++k)
            if (!m(i, k).is_zero()) out[i] += m(i, k).to_complex() * v[k];
    return out;
}

NVec matvec(const QMatrix& m, const NVec& v) {
    NVec out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < m.cols(); ++k)
            if (!m(i, k).is_zero()) out[i] += m(i, k).to_double() * v[k];
    return out;
}

template <class M>
NVec exp_nilpotent(const M& m, double s, const NVec& v) {
    NVec term = v, acc = v;
    for (std::size_t k = 1; k <= v.size(); ++k) {
        term = matvec(m, term);
        for (auto& x : term) x *= s / static_cast<double>(k);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += term[i];
    }
    return acc;
}

}  // namespace

QVec SiegelDomain::u_coords(const QVec& x) const {
    auto c = coords_in(ubasis, x);
    if (!c) throw WrongGrade("element is not in b(1)");
    return *c;
}

CVec SiegelDomain::v_coords(const QVec& x) const {
    std::vector<QVec> real;
    for (const auto& v : vbasis) {
        real.push_back(v);
        real.push_back(N->apply_j(v));
    }
    auto c = coords_in(real, x);
    if (!c) throw WrongGrade("element is not in b(1/2)");
    CVec out(vdim());
    for (std::size_t a = 0; a < vdim(); ++a) out[a] = Gaussian((*c)[2 * a], (*c)[2 * a + 1]);
    return out;
}

QVec SiegelDomain::from_u(const QVec& u) const {
    QVec x(N->dim());
    for (std::size_t i = 0; i < u.size(); ++i) x = add(x, scale(u[i], ubasis[i]));
    return x;
}

QVec SiegelDomain::from_v(const CVec& v) const {
    QVec x(N->dim());
    for (std::size_t a = 0; a < v.size(); ++a) {
        x = add(x, scale(v[a].re(), vbasis[a]));
        x = add(x, scale(v[a].im(), N->apply_j(vbasis[a])));
    }
    return x;
}

CVec SiegelDomain::Qform(const CVec& v, const CVec& w) const {
    CVec out(udim());
    for (std::size_t a = 0; a < vdim(); ++a)
        for (std::size_t b = 0; b < vdim(); ++b) {
            Gaussian c = v[a] * w[b].conj();
            if (c.is_zero()) continue;
            for (std::size_t i = 0; i < udim(); ++i) out[i] += c * Q[a][b][i];
        }
    return out;
}

NVec SiegelDomain::Qform(const NVec& v, const NVec& w) const {
    NVec out(udim());
    for (std::size_t a = 0; a < vdim(); ++a)
        for (std::size_t b = 0; b < vdim(); ++b) {
            cplx c = v[a] * std::conj(w[b]);
            for (std::size_t i = 0; i < udim(); ++i) out[i] += c * Q[a][b][i].to_complex();
        }
    return out;
}

QMatrix SiegelDomain::ad_u(const QVec& t) const {
    std::vector<QVec> cols;
    for (const auto& e : ubasis) cols.push_back(u_coords(N->b.bracket(t, e)));
    return QMatrix::from_columns(cols, udim());
}

CMatrix SiegelDomain::ad_v(const QVec& t) const {
    CMatrix m(vdim(), vdim());
    for (std::size_t a = 0; a < vdim(); ++a) {
        CVec c = v_coords(N->b.bracket(t, vbasis[a]));
        CVec cj = v_coords(N->b.bracket(t, N->apply_j(vbasis[a])));
        for (std::size_t b = 0; b < vdim(); ++b) {
            if (cj[b] != Gaussian::i() * c[b]) throw ValidationError("ad(b(0)) is not complex linear on b(1/2)");
            m(b, a) = c[b];
        }
    }
    return m;
}

CVec SiegelDomain::reference_point() const {
    CVec p(udim() + vdim());
    for (std::size_t i = 0; i < udim(); ++i) p[i] = Gaussian(Rational(0), E_u[i]);
    return p;
}

SiegelDomain build_siegel(std::shared_ptr<const NormalJAlgebra> Np) {
    SiegelDomain S;
    S.N = Np;
    const auto& N = *Np;
    const std::size_t n = N.dim(), r = N.rank;

    for (const auto& rs : N.roots)
        if (rs.kind == RootKind::Alpha || rs.kind == RootKind::Plus)
            for (const auto& v : rs.basis) S.ubasis.push_back(v);
    std::stable_sort(S.ubasis.begin(), S.ubasis.end(),
                     [](const QVec& a, const QVec& b) { return leading_index(a) < leading_index(b); });
    for (std::size_t k = 0; k < r; ++k) {
        auto it = std::find(S.ubasis.begin(), S.ubasis.end(), N.E[k]);
        S.e_index.push_back(static_cast<std::size_t>(it - S.ubasis.begin()));
    }

    std::vector<QVec> real;
    for (const auto& rs : N.roots) {
        if (rs.kind != RootKind::Half) continue;
        for (const auto& v : rs.basis) {
            auto trial = real;
            trial.push_back(v);
            trial.push_back(N.j * v);
            if (!independent(trial, n)) continue;
            real = std::move(trial);
            S.vbasis.push_back(v);
        }
    }
    if (real.size() != N.bhalf.size()) throw GradingShapeError("b(1/2) has no complex basis");

    const std::size_t m = S.vdim();
    S.Q.assign(m, std::vector<CVec>(m));
    const Gaussian quarter(Rational(1, 4));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            QVec re = S.u_coords(N.b.bracket(N.j * S.vbasis[a], S.vbasis[b]));
            QVec im = S.u_coords(N.b.bracket(S.vbasis[a], S.vbasis[b]));
            CVec q(S.udim());
            for (std::size_t i = 0; i < q.size(); ++i) q[i] = quarter * Gaussian(re[i], im[i]);
            S.Q[a][b] = std::move(q);
        }
    S.E_u = S.u_coords(N.E_sum());

    S.lower_of_k.resize(r);
    S.plus_of_k.resize(r);
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t l = k + 1; l < r; ++l) {
            for (const auto& v : N.root(RootKind::Minus, k, l).basis) {
                S.lower_of_k[k].push_back(S.lower.size());
                S.lower.push_back(v);
                S.lower_k.push_back(k);
            }
            for (const auto& v : N.root(RootKind::Plus, k, l).basis) {
                auto it = std::find(S.ubasis.begin(), S.ubasis.end(), v);
                S.plus_of_k[k].push_back(static_cast<std::size_t>(it - S.ubasis.begin()));
            }
        }
    for (const auto& y : S.lower) {
        S.lower_ad_u.push_back(S.ad_u(y));
        S.lower_ad_v.push_back(S.ad_v(y));
    }
    for (std::size_t k = 0; k < r; ++k) {
        const auto& li = S.lower_of_k[k];
        const auto& pi = S.plus_of_k[k];
        if (li.size() != pi.size()) throw GradingShapeError("lower and upper mixed spaces differ in size");
        QMatrix M(pi.size(), li.size());
        for (std::size_t c = 0; c < li.size(); ++c) {
            QVec col = S.lower_ad_u[li[c]].column(S.e_index[k]);
            for (std::size_t q = 0; q < pi.size(); ++q) M(q, c) = col[pi[q]];
        }
        auto inv = inverse(M);
        if (!inv) throw GradingShapeError("mixed root action on E_" + std::to_string(k + 1) + " is singular");
        S.elim_inv.push_back(*inv);
    }
    for (std::size_t k = 0; k < r; ++k) {
        QMatrix au = S.ad_u(N.A[k]);
        CMatrix av = S.ad_v(N.A[k]);
        QVec du(S.udim());
        QVec dv(m);
        for (std::size_t i = 0; i < S.udim(); ++i)
            for (std::size_t j = 0; j < S.udim(); ++j) {
                if (i == j) du[i] = au(i, i);
                else if (!au(i, j).is_zero()) throw GradingShapeError("ad(A_k) is not diagonal on b(1)");
            }
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                if (a == b) dv[a] = require_real(CVec{av(a, a)})[0];
                else if (!av(a, b).is_zero()) throw GradingShapeError("ad(A_k) is not diagonal on b(1/2)");
            }
        S.scale_u.push_back(std::move(du));
        S.scale_v.push_back(std::move(dv));
    }
    return S;
}

SiegelChecks check_siegel(const SiegelDomain& S) {
    SiegelChecks c;
    c.hermitian = c.complex_linear = c.positive = true;
    const auto& N = *S.N;
    const std::size_t m = S.vdim();
    for (std::size_t a = 0; a < m && c.hermitian; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            CVec back(S.udim());
            for (std::size_t i = 0; i < back.size(); ++i) back[i] = S.Q[b][a][i].conj();
            if (S.Q[a][b] != back) {
                c.hermitian = false;
                c.detail += "Q not Hermitian at (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ") ";
                break;
            }
        }
    for (std::size_t a = 0; a < m && c.complex_linear; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            QVec jb = N.j * S.vbasis[b];
            if (N.b.bracket(N.j * S.vbasis[a], jb) != N.b.bracket(S.vbasis[a], S.vbasis[b])) {
                c.complex_linear = false;
                c.detail += "Q not antilinear in the second slot at (" + std::to_string(a + 1) + "," +
                            std::to_string(b + 1) + ") ";
                break;
            }
        }
    const Rational eps(1, 1000000);
    auto closed_cone = [&](const CVec& q) {
        if (!is_real_vec(q) || is_zero_vec(q)) return false;
        return in_cone(S, add(real_part(q), scale(eps, S.E_u)));
    };
    for (std::size_t a = 0; a < m; ++a) {
        CVec e = unit<Gaussian>(m, a);
        if (!closed_cone(S.Qform(e, e))) {
            c.positive = false;
            c.detail += "Q(v_" + std::to_string(a + 1) + ",v_" + std::to_string(a + 1) + ") outside the closed cone ";
        }
        for (std::size_t b = a + 1; b < m; ++b) {
            CVec f = add(e, unit<Gaussian>(m, b));
            if (!closed_cone(S.Qform(f, f))) {
                c.positive = false;
                c.detail += "Q(v,v) outside the closed cone for v = v_" + std::to_string(a + 1) + "+v_" +
                            std::to_string(b + 1) + " ";
            }
        }
    }
    return c;
}

ConeDecomposition<Rational> peel(const SiegelDomain& S, const QVec& u) { return peel_impl(S, u); }
ConeDecomposition<Gaussian> peel(const SiegelDomain& S, const CVec& u) { return peel_impl(S, u); }
ConeDecomposition<double> peel(const SiegelDomain& S, const std::vector<double>& u) { return peel_impl(S, u); }
ConeDecomposition<cplx> peel(const SiegelDomain& S, const NVec& u) { return peel_impl(S, u); }

QVec replay(const SiegelDomain& S, const ConeDecomposition<Rational>& d) { return replay_impl(S, d); }
CVec replay(const SiegelDomain& S, const ConeDecomposition<Gaussian>& d) { return replay_impl(S, d); }
std::vector<double> replay(const SiegelDomain& S, const ConeDecomposition<double>& d) { return replay_impl(S, d); }
NVec replay(const SiegelDomain& S, const ConeDecomposition<cplx>& d) { return replay_impl(S, d); }

bool in_cone(const SiegelDomain& S, const QVec& u) {
    try {
        peel(S, u);
        return true;
    } catch (const PivotNotPositive&) {
        return false;
    } catch (const PivotZero&) {
        return false;
    }
}

bool in_domain(const SiegelDomain& S, const DomainPoint& p) {
    NVec q = S.Qform(p.v, p.v);
    std::vector<double> w(S.udim());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = p.u[i].imag() - q[i].real();
    try {
        peel(S, w);
        return true;
    } catch (const PivotNotPositive&) {
        return false;
    }
}

DomainPoint affine_action(const SiegelDomain& S, const BWord& word, const DomainPoint& p0, bool check) {
    if (p0.u.size() != S.udim() || p0.v.size() != S.vdim()) throw std::invalid_argument("point has wrong dimension");
    DomainPoint p = p0;
    const cplx I(0, 1);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const Letter& l = *it;
        switch (l.kind) {
            case Letter::Translate:
                if (l.u0.size() != S.udim()) throw std::invalid_argument("translation has wrong dimension");
                for (std::size_t i = 0; i < S.udim(); ++i) p.u[i] += l.u0[i];
                break;
            case Letter::Shear: {
                if (l.v0.size() != S.vdim()) throw std::invalid_argument("shear has wrong dimension");
                NVec a = S.Qform(p.v, l.v0), b = S.Qform(l.v0, l.v0);
                for (std::size_t i = 0; i < S.udim(); ++i) p.u[i] += 2.0 * I * a[i] + I * b[i];
                for (std::size_t i = 0; i < S.vdim(); ++i) p.v[i] += l.v0[i];
                break;
            }
            case Letter::Scale:
                if (l.index >= S.rank()) throw std::invalid_argument("scale index out of range");
                for (std::size_t i = 0; i < S.udim(); ++i) p.u[i] *= std::exp(l.t * S.scale_u[l.index][i].to_double());
                for (std::size_t i = 0; i < S.vdim(); ++i) p.v[i] *= std::exp(l.t * S.scale_v[l.index][i].to_double());
                break;
            case Letter::Lower:
                if (l.index >= S.lower.size()) throw std::invalid_argument("lower index out of range");
                p.u = exp_nilpotent(S.lower_ad_u[l.index], l.t, p.u);
                p.v = exp_nilpotent(S.lower_ad_v[l.index], l.t, p.v);
                break;
        }
    }
    if (check && !in_domain(S, p)) throw DomainViolation("image point left the domain");
    return p;
}

NVec ad_action_u(const SiegelDomain& S, const BWord& word, const NVec& u) {
    DomainPoint p{u, NVec(S.vdim())};
    for (const auto& l : word)
        if (l.kind != Letter::Scale && l.kind != Letter::Lower) throw std::invalid_argument("word is not in B(0)");
    return affine_action(S, word, p, false).u;
}

std::vector<double> letter_generator(const SiegelDomain& S, const Letter& l) {
    const auto& N = *S.N;
    std::vector<double> x(N.dim());
    auto acc = [&](const QVec& v, double c) {
        for (std::size_t i = 0; i < v.size(); ++i) x[i] += c * v[i].to_double();
    };
    switch (l.kind) {
        case Letter::Translate:
            for (std::size_t i = 0; i < l.u0.size(); ++i) acc(S.ubasis[i], l.u0[i]);
            break;
        case Letter::Shear:
            for (std::size_t a = 0; a < l.v0.size(); ++a) {
                acc(S.vbasis[a], l.v0[a].real());
                acc(N.j * S.vbasis[a], l.v0[a].imag());
            }
            break;
        case Letter::Scale: acc(N.A.at(l.index), l.t); break;
        case Letter::Lower: acc(S.lower.at(l.index), l.t); break;
    }
    return x;
}

}  // namespace jdomain
