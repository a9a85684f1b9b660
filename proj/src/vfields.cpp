#include "jdomain/vfields.hpp"

#include <sstream>

namespace jdomain {

namespace {

const Gaussian I = Gaussian::i();

MultiPoly var(const VarList& vars, std::size_t i) { return MultiPoly::variable(vars, i); }
MultiPoly cst(const VarList& vars, const Gaussian& c) { return MultiPoly::constant(vars, c); }

void check_vars(const SiegelDomain& S, const VarList& vars) {
    if (!vars || vars->size() != S.udim() + S.vdim()) throw std::invalid_argument("coordinate list does not match the domain");
}

std::string idx(std::size_t a) { return std::to_string(a + 1); }

/// Real-linear map given by the imaginary parts of u-vectors, as columns.
QMatrix imag_columns(const std::vector<CVec>& cols, std::size_t n) {
    std::vector<QVec> q;
    for (const auto& c : cols) q.push_back(imag_part(c));
    return QMatrix::from_columns(q, n);
}

CVec mat_apply(const CMatrix& m, const CVec& v) { return m * v; }

QVec flatten(const QMatrix& m) {
    QVec out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
    return out;
}

PolyVectorField euler_like(const VarList& vars, std::size_t udim) {
    auto X = PolyVectorField::zero(vars, udim);
    for (std::size_t i = 0; i < X.comp.size(); ++i)
        X.comp[i] = (i < udim ? Gaussian(1) : Gaussian(Rational(1, 2))) * var(vars, i);
    return X;
}

}  // namespace

PolyVectorField PolyVectorField::zero(VarList vars, std::size_t udim) {
    PolyVectorField f;
    f.udim = udim;
    f.comp.assign(vars->size(), MultiPoly(vars));
    f.vars = std::move(vars);
    return f;
}

PolyVectorField PolyVectorField::parse(const std::vector<std::string>& components, VarList vars, std::size_t udim) {
    if (components.size() != vars->size()) throw ParseError("field needs one component per coordinate");
    auto f = zero(vars, udim);
    for (std::size_t i = 0; i < components.size(); ++i) f.comp[i] = MultiPoly::parse(components[i], vars);
    return f;
}

bool PolyVectorField::is_zero() const {
    for (const auto& p : comp)
        if (!p.is_zero()) return false;
    return true;
}

int PolyVectorField::degree() const {
    int d = -1;
    for (const auto& p : comp) d = std::max(d, p.degree());
    return d;
}

CVec PolyVectorField::eval(const CVec& point) const {
    CVec out;
    for (const auto& p : comp) out.push_back(p.eval(point));
    return out;
}

NVec PolyVectorField::eval(const NVec& point) const {
    NVec out;
    for (const auto& p : comp) out.push_back(p.eval(point));
    return out;
}

std::string PolyVectorField::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < comp.size(); ++i) s += (i ? ", " : "") + comp[i].str();
    return s + ")";
}

PolyVectorField& PolyVectorField::operator+=(const PolyVectorField& o) {
    if (comp.size() != o.comp.size()) throw std::invalid_argument("fields on different domains");
    for (std::size_t i = 0; i < comp.size(); ++i) comp[i] += o.comp[i];
    return *this;
}

PolyVectorField& PolyVectorField::operator-=(const PolyVectorField& o) {
    if (comp.size() != o.comp.size()) throw std::invalid_argument("fields on different domains");
    for (std::size_t i = 0; i < comp.size(); ++i) comp[i] -= o.comp[i];
    return *this;
}

PolyVectorField operator*(const Gaussian& s, PolyVectorField a) {
    for (auto& p : a.comp) p = s * p;
    return a;
}

bool operator==(const PolyVectorField& a, const PolyVectorField& b) {
    return a.udim == b.udim && a.comp == b.comp;
}

PolyVectorField vf_bracket(const PolyVectorField& X, const PolyVectorField& Y) {
    if (X.comp.size() != Y.comp.size() || X.udim != Y.udim) throw std::invalid_argument("fields on different domains");
    auto out = PolyVectorField::zero(X.vars, X.udim);
    const std::size_t n = X.comp.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!X.comp[j].is_zero()) out.comp[i] += X.comp[j] * Y.comp[i].derivative(j);
            if (!Y.comp[j].is_zero()) out.comp[i] -= Y.comp[j] * X.comp[i].derivative(j);
        }
    return out;
}

VarList default_vars(const SiegelDomain& S) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < S.udim(); ++i) names.push_back("u" + idx(i));
    for (std::size_t a = 0; a < S.vdim(); ++a) names.push_back("v" + idx(a));
    return make_vars(std::move(names));
}

PolyVectorField field_d_u(const SiegelDomain& S, const VarList& vars, const CVec& u0) {
    check_vars(S, vars);
    if (u0.size() != S.udim()) throw std::invalid_argument("u0 has wrong dimension");
    auto f = PolyVectorField::zero(vars, S.udim());
    for (std::size_t i = 0; i < S.udim(); ++i) f.comp[i] = cst(vars, u0[i]);
    return f;
}

PolyVectorField field_dtilde_v(const SiegelDomain& S, const VarList& vars, const CVec& v0) {
    check_vars(S, vars);
    if (v0.size() != S.vdim()) throw std::invalid_argument("v0 has wrong dimension");
    const std::size_t U = S.udim();
    auto f = PolyVectorField::zero(vars, U);
    for (std::size_t a = 0; a < S.vdim(); ++a) {
        CVec q = S.Qform(unit<Gaussian>(S.vdim(), a), v0);
        for (std::size_t i = 0; i < U; ++i) f.comp[i] += (Gaussian(2) * I * q[i]) * var(vars, U + a);
        f.comp[U + a] = cst(vars, v0[a]);
    }
    return f;
}

PolyVectorField field_linear(const SiegelDomain& S, const VarList& vars, const CMatrix& A, const CMatrix& B) {
    check_vars(S, vars);
    const std::size_t U = S.udim(), V = S.vdim();
    if (A.rows() != U || A.cols() != U || B.rows() != V || B.cols() != V)
        throw std::invalid_argument("linear field has wrong shape");
    auto f = PolyVectorField::zero(vars, U);
    for (std::size_t i = 0; i < U; ++i)
        for (std::size_t k = 0; k < U; ++k) f.comp[i] += A(i, k) * var(vars, k);
    for (std::size_t a = 0; a < V; ++a)
        for (std::size_t b = 0; b < V; ++b) f.comp[U + a] += B(a, b) * var(vars, U + b);
    return f;
}

PolyVectorField field_euler(const SiegelDomain& S, const VarList& vars) {
    return field_linear(S, vars, CMatrix::identity(S.udim()),
                        Gaussian(Rational(1, 2)) * CMatrix::identity(S.vdim()));
}

PolyVectorField field_dprime(const SiegelDomain& S, const VarList& vars) {
    return field_linear(S, vars, CMatrix(S.udim(), S.udim()), I * CMatrix::identity(S.vdim()));
}

PolyVectorField field_of_element(const SiegelDomain& S, const VarList& vars, const QVec& x) {
    auto parts = S.N->split(x);
    auto f = field_linear(S, vars, to_complex(S.ad_u(parts.t)), S.ad_v(parts.t));
    f += field_dtilde_v(S, vars, S.v_coords(parts.v));
    f += field_d_u(S, vars, to_complex(S.u_coords(parts.u)));
    return f;
}

PolyVectorField field_Y(const SiegelDomain& S, const VarList& vars, const YData& y) {
    check_vars(S, vars);
    const std::size_t U = S.udim(), V = S.vdim();
    if (y.Phi.rows() != V || y.Phi.cols() != U) throw std::invalid_argument("Phi has wrong shape");
    auto f = PolyVectorField::zero(vars, U);
    for (std::size_t a = 0; a < V; ++a)
        for (std::size_t b = 0; b < V; ++b)
            for (std::size_t k = 0; k < U; ++k) {
                Gaussian c = Gaussian(2) * I * y.Phi(b, k).conj();
                if (c.is_zero()) continue;
                MultiPoly m = var(vars, U + a) * var(vars, k);
                for (std::size_t i = 0; i < U; ++i)
                    if (!S.Q[a][b][i].is_zero()) f.comp[i] += (c * S.Q[a][b][i]) * m;
            }
    for (std::size_t d = 0; d < V; ++d)
        for (std::size_t k = 0; k < U; ++k) f.comp[U + d] += y.Phi(d, k) * var(vars, k);
    if (!y.c.empty())
        for (std::size_t a = 0; a < V; ++a)
            for (std::size_t b = 0; b < V; ++b) {
                MultiPoly m = var(vars, U + a) * var(vars, U + b);
                for (std::size_t d = 0; d < V; ++d)
                    if (!y.c[a][b][d].is_zero()) f.comp[U + d] += y.c[a][b][d] * m;
            }
    return f;
}

PolyVectorField field_Z(const SiegelDomain& S, const VarList& vars, const ZData& z) {
    check_vars(S, vars);
    const std::size_t U = S.udim(), V = S.vdim();
    auto f = PolyVectorField::zero(vars, U);
    for (std::size_t i = 0; i < U; ++i)
        for (std::size_t k = 0; k < U; ++k) {
            MultiPoly m = var(vars, i) * var(vars, k);
            for (std::size_t o = 0; o < U; ++o)
                if (!z.a[i][k][o].is_zero()) f.comp[o] += z.a[i][k][o] * m;
        }
    if (!z.b.empty())
        for (std::size_t i = 0; i < U; ++i)
            for (std::size_t a = 0; a < V; ++a) {
                MultiPoly m = var(vars, i) * var(vars, U + a);
                for (std::size_t d = 0; d < V; ++d)
                    if (!z.b[i][a][d].is_zero()) f.comp[U + d] += z.b[i][a][d] * m;
            }
    return f;
}

std::optional<YData> complete_Y(const SiegelDomain& S, const CMatrix& Phi) {
    const std::size_t U = S.udim(), V = S.vdim();
    // unknowns c[a][b][d] with a <= b
    std::vector<std::array<std::size_t, 3>> unk;
    std::map<std::array<std::size_t, 3>, std::size_t> pos;
    for (std::size_t a = 0; a < V; ++a)
        for (std::size_t b = a; b < V; ++b)
            for (std::size_t d = 0; d < V; ++d) {
                pos[{a, b, d}] = unk.size();
                unk.push_back({a, b, d});
            }
    std::vector<CVec> rows;
    CVec rhs;
    auto vprimes = [&] {
        std::vector<CVec> out;
        for (std::size_t a = 0; a < V; ++a) {
            out.push_back(unit<Gaussian>(V, a));
            for (std::size_t b = a + 1; b < V; ++b) out.push_back(add(unit<Gaussian>(V, a), unit<Gaussian>(V, b)));
        }
        return out;
    }();
    for (std::size_t e = 0; e < V; ++e) {
        CVec ve = unit<Gaussian>(V, e);
        for (const auto& vp : vprimes) {
            CVec r = scale(Gaussian(2) * I, S.Qform(vp, mat_apply(Phi, S.Qform(ve, vp))));
            std::vector<CVec> lhs(U, CVec(unk.size()));
            for (std::size_t a = 0; a < V; ++a)
                for (std::size_t b = 0; b < V; ++b) {
                    Gaussian w = vp[a] * vp[b];
                    if (w.is_zero()) continue;
                    for (std::size_t d = 0; d < V; ++d) {
                        std::size_t col = pos.at({std::min(a, b), std::max(a, b), d});
                        for (std::size_t i = 0; i < U; ++i) lhs[i][col] += w * S.Q[d][e][i];
                    }
                }
            for (std::size_t i = 0; i < U; ++i) {
                rows.push_back(lhs[i]);
                rhs.push_back(r[i]);
            }
        }
    }
    YData y{Phi, std::vector<std::vector<CVec>>(V, std::vector<CVec>(V, CVec(V)))};
    if (unk.empty()) return y;
    auto sol = try_solve(CMatrix::from_rows(rows, unk.size()), rhs);
    if (!sol) return std::nullopt;
    for (std::size_t q = 0; q < unk.size(); ++q) {
        auto [a, b, d] = unk[q];
        y.c[a][b][d] = y.c[b][a][d] = (*sol)[q];
    }
    return y;
}

bool ConeAlgebra::contains(const QMatrix& m) const {
    std::vector<QVec> flat;
    for (const auto& b : basis) flat.push_back(flatten(b));
    return in_span(flat, flatten(m));
}

ConeAlgebra cone_algebra(const SiegelDomain& S) {
    ConeAlgebra g;
    const std::size_t U = S.udim();
    auto try_add = [&](const QMatrix& m) {
        if (g.contains(m)) return false;
        g.basis.push_back(m);
        return true;
    };
    for (const auto& t : S.N->b0) try_add(S.ad_u(t));
    bool grew = true;
    while (grew) {
        grew = false;
        std::size_t n = g.basis.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (try_add(g.basis[i] * g.basis[j] - g.basis[j] * g.basis[i])) grew = true;
        if (g.basis.size() > U * U) throw std::logic_error("cone algebra closure overflow");
    }
    return g;
}

ValidationReport check_Y_conditions(const SiegelDomain& S, const ConeAlgebra& g0, const YData& y) {
    ValidationReport rep;
    const std::size_t U = S.udim(), V = S.vdim();
    bool shape = y.Phi.rows() == V && y.Phi.cols() == U && y.c.size() == V;
    for (const auto& row : y.c) shape = shape && row.size() == V;
    rep.items.push_back({"shapes", shape, shape ? "" : "Phi must be vdim x udim and c vdim x vdim"});
    if (!shape) return rep;

    CheckItem sym{"c_symmetric", true, ""};
    for (std::size_t a = 0; a < V && sym.pass; ++a)
        for (std::size_t b = 0; b < V; ++b)
            if (y.c[a][b] != y.c[b][a]) {
                sym = {"c_symmetric", false, "c(v" + idx(a) + ",v" + idx(b) + ") != c(v" + idx(b) + ",v" + idx(a) + ")"};
                break;
            }
    rep.items.push_back(sym);

    CheckItem y1{"Y1", true, ""};
    for (std::size_t a = 0; a < V && y1.pass; ++a)
        for (const Gaussian& s : {Gaussian(1), I}) {
            CVec v0 = scale(s, unit<Gaussian>(V, a));
            std::vector<CVec> cols;
            for (std::size_t k = 0; k < U; ++k) cols.push_back(S.Qform(y.Phi.column(k), v0));
            if (!g0.contains(imag_columns(cols, U))) {
                y1 = {"Y1", false, "Phi_{v0} not in g(Omega) for v0 = " + s.str() + "*v" + idx(a)};
                break;
            }
        }
    rep.items.push_back(y1);

    CheckItem y2{"Y2", true, ""};
    auto cmap = [&](const CVec& v) {
        CVec out(V);
        for (std::size_t a = 0; a < V; ++a)
            for (std::size_t b = 0; b < V; ++b) out = add(out, scale(v[a] * v[b], y.c[a][b]));
        return out;
    };
    for (std::size_t e = 0; e < V && y2.pass; ++e)
        for (std::size_t a = 0; a < V && y2.pass; ++a)
            for (std::size_t b = a; b < V; ++b) {
                CVec v = unit<Gaussian>(V, e);
                CVec vp = a == b ? unit<Gaussian>(V, a) : add(unit<Gaussian>(V, a), unit<Gaussian>(V, b));
                CVec lhs = S.Qform(cmap(vp), v);
                CVec rhs = scale(Gaussian(2) * I, S.Qform(vp, mat_apply(y.Phi, S.Qform(v, vp))));
                if (lhs != rhs) {
                    std::string w = a == b ? "v" + idx(a) : "v" + idx(a) + "+v" + idx(b);
                    y2 = {"Y2", false, "fails at v = v" + idx(e) + ", v' = " + w};
                    break;
                }
            }
    rep.items.push_back(y2);
    return rep;
}

ValidationReport check_Z_conditions(const SiegelDomain& S, const ConeAlgebra& g0, const ZData& z) {
    ValidationReport rep;
    const std::size_t U = S.udim(), V = S.vdim();
    bool shape = z.a.size() == U && z.b.size() == U;
    for (const auto& row : z.a) {
        shape = shape && row.size() == U;
        for (const auto& x : row) shape = shape && x.size() == U;
    }
    for (const auto& row : z.b) {
        shape = shape && row.size() == V;
        for (const auto& x : row) shape = shape && x.size() == V;
    }
    rep.items.push_back({"shapes", shape, shape ? "" : "a must be udim x udim -> U and b udim x vdim -> V"});
    if (!shape) return rep;

    CheckItem sym{"a_symmetric_real", true, ""};
    for (std::size_t i = 0; i < U && sym.pass; ++i)
        for (std::size_t k = 0; k < U; ++k)
            if (z.a[i][k] != z.a[k][i] || !is_real_vec(z.a[i][k])) {
                sym = {"a_symmetric_real", false, "entry (" + idx(i) + "," + idx(k) + ")"};
                break;
            }
    rep.items.push_back(sym);
    if (!sym.pass) return rep;

    auto A_of = [&](std::size_t i) {
        std::vector<QVec> cols;
        for (std::size_t k = 0; k < U; ++k) cols.push_back(real_part(z.a[i][k]));
        return QMatrix::from_columns(cols, U);
    };
    CheckItem z1{"Z1", true, ""};
    for (std::size_t i = 0; i < U; ++i)
        if (!g0.contains(A_of(i))) {
            z1 = {"Z1", false, "A_{u0} not in g(Omega) for u0 = u" + idx(i)};
            break;
        }
    rep.items.push_back(z1);

    CheckItem z2{"Z2", true, ""};
    for (std::size_t i = 0; i < U && z2.pass; ++i) {
        CMatrix B(V, V);
        for (std::size_t a = 0; a < V; ++a)
            for (std::size_t d = 0; d < V; ++d) B(d, a) = Gaussian(Rational(1, 2)) * z.b[i][a][d];
        if (!B.trace().im().is_zero()) {
            z2 = {"Z2", false, "Im tr B_{u0} != 0 for u0 = u" + idx(i)};
            break;
        }
        CMatrix A = to_complex(A_of(i));
        for (std::size_t a = 0; a < V && z2.pass; ++a)
            for (std::size_t b = 0; b < V; ++b) {
                CVec ea = unit<Gaussian>(V, a), eb = unit<Gaussian>(V, b);
                CVec lhs = A * S.Q[a][b];
                CVec rhs = add(S.Qform(B * ea, eb), S.Qform(ea, B * eb));
                if (lhs != rhs) {
                    z2 = {"Z2", false, "B_{u0} not associated with A_{u0} for u0 = u" + idx(i) + " at (v" + idx(a) +
                                           ",v" + idx(b) + ")"};
                    break;
                }
            }
    }
    rep.items.push_back(z2);

    auto bmap = [&](const CVec& u, const CVec& v) {
        CVec out(V);
        for (std::size_t k = 0; k < U; ++k)
            for (std::size_t a = 0; a < V; ++a) {
                Gaussian w = u[k] * v[a];
                if (!w.is_zero()) out = add(out, scale(w, z.b[k][a]));
            }
        return out;
    };
    CheckItem z3{"Z3", true, ""};
    std::vector<std::pair<CVec, std::string>> realbasis;
    for (std::size_t a = 0; a < V; ++a) {
        realbasis.push_back({unit<Gaussian>(V, a), "v" + idx(a)});
        realbasis.push_back({scale(I, unit<Gaussian>(V, a)), "i*v" + idx(a)});
    }
    for (const auto& [v, vn] : realbasis) {
        for (const auto& [vp, vpn] : realbasis) {
            std::vector<CVec> cols;
            for (std::size_t k = 0; k < U; ++k) cols.push_back(S.Qform(bmap(unit<Gaussian>(U, k), v), vp));
            if (!g0.contains(imag_columns(cols, U))) {
                z3 = {"Z3", false, "map not in g(Omega) for v = " + vn + ", v' = " + vpn};
                break;
            }
        }
        if (!z3.pass) break;
    }
    rep.items.push_back(z3);

    CheckItem z4{"Z4", true, ""};
    for (std::size_t e = 0; e < V && z4.pass; ++e)
        for (std::size_t f = 0; f < V && z4.pass; ++f)
            for (std::size_t a = 0; a < V && z4.pass; ++a)
                for (std::size_t b = a; b < V; ++b) {
                    CVec v = unit<Gaussian>(V, e), vp = unit<Gaussian>(V, f);
                    CVec vpp = a == b ? unit<Gaussian>(V, a) : add(unit<Gaussian>(V, a), unit<Gaussian>(V, b));
                    CVec lhs = S.Qform(bmap(S.Qform(vpp, vp), vpp), v);
                    CVec rhs = S.Qform(vpp, bmap(S.Qform(v, vpp), vp));
                    if (lhs != rhs) {
                        z4 = {"Z4", false, "fails at v = v" + idx(e) + ", v' = v" + idx(f)};
                        break;
                    }
                }
    rep.items.push_back(z4);
    return rep;
}

std::optional<Rational> grade_classify(const PolyVectorField& X) {
    if (X.is_zero()) return std::nullopt;
    auto B = vf_bracket(euler_like(X.vars, X.udim), X);
    for (std::size_t i = 0; i < X.comp.size(); ++i) {
        if (X.comp[i].is_zero()) continue;
        const auto& [e, c] = *X.comp[i].terms().begin();
        Gaussian g = B.comp[i].coefficient(e) / c;
        if (!g.is_real()) return std::nullopt;
        if (B == g * X) return g.re();
        return std::nullopt;
    }
    return std::nullopt;
}

std::map<Rational, PolyVectorField> decompose_by_grade(const PolyVectorField& X) {
    std::map<Rational, PolyVectorField> out;
    const Rational half(1, 2);
    for (std::size_t i = 0; i < X.comp.size(); ++i)
        for (const auto& [e, c] : X.comp[i].terms()) {
            Rational w = i < X.udim ? Rational(-1) : -half;
            for (std::size_t k = 0; k < e.size(); ++k) w += (k < X.udim ? Rational(1) : half) * Rational(e[k]);
            auto it = out.find(w);
            if (it == out.end()) it = out.emplace(w, PolyVectorField::zero(X.vars, X.udim)).first;
            it->second.comp[i].add_term(e, c);
        }
    return out;
}

PolyVectorField psi_map(const SiegelDomain& S, const PolyVectorField& Y) {
    if (Y.is_zero()) return Y;
    auto g = grade_classify(Y);
    if (!g || *g != Rational(1, 2)) throw WrongGrade("psi_e needs a field of grade 1/2");
    auto de = field_d_u(S, Y.vars, to_complex(S.E_u));
    return vf_bracket(field_dprime(S, Y.vars), vf_bracket(de, Y));
}

PolyVectorField phi_map(const SiegelDomain& S, const PolyVectorField& Z) {
    if (Z.is_zero()) return Z;
    auto g = grade_classify(Z);
    if (!g || *g != Rational(1)) throw WrongGrade("phi_e needs a field of grade 1");
    auto de = field_d_u(S, Z.vars, to_complex(S.E_u));
    return Gaussian(Rational(1, 2)) * vf_bracket(de, vf_bracket(de, Z));
}

namespace {

std::optional<QVec> flatten_field(const FieldAlgebra& F, const PolyVectorField& f, bool extend,
                                  std::map<std::pair<std::size_t, Exponent>, std::size_t>* keys) {
    auto& km = *keys;
    for (std::size_t i = 0; i < f.comp.size(); ++i)
        for (const auto& [e, c] : f.comp[i].terms()) {
            auto key = std::make_pair(i, e);
            if (km.count(key)) continue;
            if (!extend) return std::nullopt;
            std::size_t n = km.size();
            km[key] = n;
        }
    (void)F;
    QVec v(2 * km.size());
    for (std::size_t i = 0; i < f.comp.size(); ++i)
        for (const auto& [e, c] : f.comp[i].terms()) {
            std::size_t k = km.at({i, e});
            v[2 * k] = c.re();
            v[2 * k + 1] = c.im();
        }
    return v;
}

}  // namespace

std::optional<QVec> FieldAlgebra::coords(const PolyVectorField& f) const {
    auto keys_copy = keys;
    auto v = flatten_field(*this, f, false, &keys_copy);
    if (!v) return std::nullopt;
    return coords_in(flat, *v);
}

PolyVectorField FieldAlgebra::field_of(const QVec& x) const {
    auto f = PolyVectorField::zero(vars, udim);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) f += Gaussian(x[i]) * fields[i];
    return f;
}

PolyVectorField FieldAlgebra::field_of(const CVec& x) const {
    auto f = PolyVectorField::zero(vars, udim);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) f += x[i] * fields[i];
    return f;
}

FieldAlgebra make_field_algebra(VarList vars, std::size_t udim, std::vector<std::string> labels,
                                std::vector<PolyVectorField> fields) {
    if (labels.size() != fields.size()) throw std::invalid_argument("one label per field");
    FieldAlgebra F;
    F.vars = vars;
    F.udim = udim;
    for (const auto& f : fields)
        if (!f.vars || *f.vars != *vars || f.udim != udim) throw std::invalid_argument("field on another coordinate list");
    for (const auto& f : fields) flatten_field(F, f, true, &F.keys);
    for (const auto& f : fields) F.flat.push_back(*flatten_field(F, f, false, &F.keys));
    if (!independent(F.flat, 2 * F.keys.size())) throw ValidationError("fields are linearly dependent over R");
    F.labels = labels;
    F.fields = std::move(fields);
    F.g = LieAlgebra(labels);
    const std::size_t n = F.fields.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            auto br = vf_bracket(F.fields[j], F.fields[i]);
            auto c = F.coords(br);
            if (!c) throw ValidationError("bracket of " + labels[i] + " and " + labels[j] + " leaves the span");
            F.g.set_bracket(i, j, to_complex(*c));
        }
    return F;
}

std::vector<QVec> isotropy_at(const FieldAlgebra& F, const CVec& point) {
    const std::size_t n = F.fields.size(), m = F.vars->size();
    QMatrix R(2 * m, n);
    for (std::size_t k = 0; k < n; ++k) {
        CVec v = F.fields[k].eval(point);
        for (std::size_t i = 0; i < m; ++i) {
            R(2 * i, k) = v[i].re();
            R(2 * i + 1, k) = v[i].im();
        }
    }
    return span_basis(kernel(R), n);
}

std::vector<CVec> compute_g_minus(const FieldAlgebra& F, const CVec& point) {
    const std::size_t n = F.fields.size(), m = F.vars->size();
    CMatrix C(m, n);
    for (std::size_t k = 0; k < n; ++k) {
        CVec v = F.fields[k].eval(point);
        for (std::size_t i = 0; i < m; ++i) C(i, k) = v[i];
    }
    return span_basis(kernel(C), n);
}

QMatrix infer_j(const FieldAlgebra& F, const std::vector<QVec>& b_basis, const CVec& point) {
    const std::size_t m = F.vars->size(), d = b_basis.size();
    auto real_flat = [&](const CVec& v) {
        QVec out(2 * m);
        for (std::size_t i = 0; i < m; ++i) {
            out[2 * i] = v[i].re();
            out[2 * i + 1] = v[i].im();
        }
        return out;
    };
    std::vector<QVec> cols;
    std::vector<CVec> evs;
    for (const auto& x : b_basis) {
        evs.push_back(F.field_of(x).eval(point));
        cols.push_back(real_flat(evs.back()));
    }
    QMatrix R = QMatrix::from_columns(cols, 2 * m);
    if (rank(R) != d) throw NotInvertibleAtReference("evaluation at the reference point is not injective on b");
    QMatrix J(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        auto x = try_solve(R, real_flat(scale(I, evs[k])));
        if (!x) throw NotInvertibleAtReference("i X^#_p is not attained by b for X = b_" + idx(k));
        for (std::size_t r = 0; r < d; ++r) J(r, k) = (*x)[r];
    }
    if (J * J != Rational(-1) * QMatrix::identity(d)) throw std::logic_error("inferred j does not square to -1");
    return J;
}

ValidationReport check_isotropy_shape(const SiegelDomain& S, const FieldAlgebra& F, const std::vector<QVec>& k) {
    ValidationReport rep;
    const Rational half(1, 2);
    for (std::size_t q = 0; q < k.size(); ++q) {
        auto X = F.field_of(k[q]);
        auto parts = decompose_by_grade(X);
        auto get = [&](const Rational& g) {
            auto it = parts.find(g);
            return it == parts.end() ? PolyVectorField::zero(F.vars, F.udim) : it->second;
        };
        std::string name = "isotropy_" + std::to_string(q + 1);
        bool ok = true;
        std::string detail = F.g.format(k[q]);
        for (const auto& [g, f] : parts)
            if (g < Rational(-1) || g > Rational(1)) {
                ok = false;
                detail += " has a component of grade " + g.str();
            }
        if (ok && get(Rational(-1)) != phi_map(S, get(Rational(1)))) {
            ok = false;
            detail += ": grade -1 part differs from phi_e of the grade 1 part";
        }
        if (ok && get(-half) != psi_map(S, get(half))) {
            ok = false;
            detail += ": grade -1/2 part differs from psi_e of the grade 1/2 part";
        }
        rep.items.push_back({name, ok, detail});
    }
    return rep;
}

}  // namespace jdomain
