#include "jdomain/normal_j.hpp"

#include <algorithm>
#include <sstream>

namespace jdomain {

bool ValidationReport::ok() const {
    return first_failure() == nullptr;
}

const CheckItem* ValidationReport::first_failure() const {
    for (const auto& it : items)
        if (!it.pass) return &it;
    return nullptr;
}

std::string ValidationReport::text() const {
    std::ostringstream os;
    for (const auto& it : items) {
        os << (it.pass ? "PASS " : "FAIL ") << it.name;
        if (!it.detail.empty()) os << ": " << it.detail;
        os << "\n";
    }
    return os.str();
}

QMatrix gram_matrix(const LieAlgebra& b, const QMatrix& j, const QVec& omega) {
    std::size_t n = b.dim();
    QMatrix g(n, n);
    for (std::size_t p = 0; p < n; ++p) {
        QVec jx = j * b.real_basis_vector(p);
        for (std::size_t q = 0; q < n; ++q) g(p, q) = dot(omega, b.bracket(jx, b.real_basis_vector(q)));
    }
    return g;
}

ValidationReport validate_normal_j(const LieAlgebra& b, const QMatrix& j, const QVec& omega) {
    ValidationReport rep;
    std::size_t n = b.dim();
    if (j.rows() != n || j.cols() != n || omega.size() != n) {
        rep.items.push_back({"shapes", false, "j must be dim x dim and omega a covector of length dim"});
        return rep;
    }
    if (!b.is_real()) {
        rep.items.push_back({"real_structure_constants", false, "structure constants are not real"});
        return rep;
    }
    {
        bool ok = is_split_solvable(b);
        rep.items.push_back({"split_solvable", ok, ok ? "" : "not solvable or ad has irrational spectrum"});
    }
    {
        QMatrix j2 = j * j + QMatrix::identity(n);
        CheckItem it{"j_squared_minus_one", true, ""};
        for (std::size_t c = 0; c < n && it.pass; ++c)
            if (!is_zero_vec(j2.column(c))) {
                it.pass = false;
                it.detail = "j^2 " + b.labels()[c] + " != -" + b.labels()[c];
            }
        rep.items.push_back(it);
    }
    {
        CheckItem it{"integrability", true, ""};
        for (std::size_t p = 0; p < n && it.pass; ++p)
            for (std::size_t q = 0; q < n && it.pass; ++q) {
                QVec x = b.real_basis_vector(p), y = b.real_basis_vector(q);
                QVec jx = j * x, jy = j * y;
                QVec lhs = add(add(b.bracket(x, y), j * b.bracket(jx, y)), j * b.bracket(x, jy));
                if (lhs != b.bracket(jx, jy)) {
                    it.pass = false;
                    it.detail = "witness (" + b.labels()[p] + ", " + b.labels()[q] + ")";
                }
            }
        rep.items.push_back(it);
    }
    QMatrix g = gram_matrix(b, j, omega);
    {
        CheckItem it{"form_symmetric", true, ""};
        for (std::size_t p = 0; p < n && it.pass; ++p)
            for (std::size_t q = p + 1; q < n && it.pass; ++q)
                if (g(p, q) != g(q, p)) {
                    it.pass = false;
                    it.detail = "witness (" + b.labels()[p] + ", " + b.labels()[q] + ")";
                }
        rep.items.push_back(it);
    }
    {
        QMatrix gj = j.transpose() * g * j;
        CheckItem it{"form_j_invariant", gj == g, ""};
        if (!it.pass)
            for (std::size_t p = 0; p < n && it.detail.empty(); ++p)
                for (std::size_t q = 0; q < n && it.detail.empty(); ++q)
                    if (gj(p, q) != g(p, q)) it.detail = "witness (" + b.labels()[p] + ", " + b.labels()[q] + ")";
        rep.items.push_back(it);
    }
    {
        auto minors = leading_minors(g);
        CheckItem it{"form_positive_definite", true, ""};
        for (std::size_t k = 0; k < minors.size(); ++k)
            if (minors[k].sign() <= 0) {
                it.pass = false;
                it.detail = "leading minor " + std::to_string(k + 1) + " = " + minors[k].str() + " (witness " +
                            b.labels()[k] + ", <" + b.labels()[k] + "," + b.labels()[k] + "> = " + g(k, k).str() + ")";
                break;
            }
        rep.items.push_back(it);
    }
    return rep;
}

QVec koszul_form(const LieAlgebra& b, const QMatrix& j) {
    std::size_t n = b.dim();
    QVec w(n);
    for (std::size_t p = 0; p < n; ++p) {
        QVec x = b.real_basis_vector(p);
        w[p] = b.ad(j * x).trace() - (j * b.ad(x)).trace();
    }
    return w;
}

std::string RootSpace::name() const {
    std::string K = std::to_string(k + 1), L = std::to_string(l + 1);
    switch (kind) {
        case RootKind::Alpha: return "a" + K;
        case RootKind::Half: return "a" + K + "/2";
        case RootKind::Minus: return "(a" + L + "-a" + K + ")/2";
        case RootKind::Plus: return "(a" + L + "+a" + K + ")/2";
    }
    return "";
}

Rational RootSpace::grade() const {
    switch (kind) {
        case RootKind::Alpha:
        case RootKind::Plus: return Rational(1);
        case RootKind::Half: return Rational(1, 2);
        case RootKind::Minus: return Rational(0);
    }
    return Rational(0);
}

CVec NormalJAlgebra::apply_j(const CVec& x) const {
    QVec re = j * real_part(x), im = j * imag_part(x);
    CVec out(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) out[k] = Gaussian(re[k], im[k]);
    return out;
}

Rational NormalJAlgebra::inner(const QVec& x, const QVec& y) const {
    return dot(x, gram * y);
}

QVec NormalJAlgebra::jE() const {
    QVec s(dim());
    for (const auto& a : A) s = add(s, a);
    return s;
}

QVec NormalJAlgebra::E_sum() const {
    QVec s(dim());
    for (const auto& e : E) s = add(s, e);
    return s;
}

const RootSpace& NormalJAlgebra::root(RootKind kind, std::size_t k, std::size_t l) const {
    for (const auto& r : roots)
        if (r.kind == kind && r.k == k && (r.l == l || kind == RootKind::Alpha || kind == RootKind::Half)) return r;
    throw std::out_of_range("no such root");
}

NormalJAlgebra::Parts NormalJAlgebra::split(const QVec& x) const {
    std::vector<QVec> all = b0;
    all.insert(all.end(), bhalf.begin(), bhalf.end());
    all.insert(all.end(), b1.begin(), b1.end());
    auto c = coords_in(all, x);
    if (!c) throw std::logic_error("grading does not span the algebra");
    Parts p{QVec(dim()), QVec(dim()), QVec(dim())};
    for (std::size_t i = 0; i < all.size(); ++i) {
        QVec term = scale((*c)[i], all[i]);
        if (i < b0.size())
            p.t = add(p.t, term);
        else if (i < b0.size() + bhalf.size())
            p.v = add(p.v, term);
        else
            p.u = add(p.u, term);
    }
    return p;
}

std::optional<Rational> NormalJAlgebra::grade_of(const QVec& x) const {
    if (is_zero_vec(x)) return std::nullopt;
    QVec y = b.bracket(jE(), x);
    std::size_t p = 0;
    while (x[p].is_zero()) ++p;
    Rational g = y[p] / x[p];
    if (scale(g, x) != y) return std::nullopt;
    return g;
}

static std::size_t leading_index(const QVec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return i;
    return v.size();
}

NormalJAlgebra compute_grading(LieAlgebra b, QMatrix j, QVec omega) {
    auto rep = validate_normal_j(b, j, omega);
    if (auto f = rep.first_failure()) throw ValidationError("not a normal j-algebra: " + f->name + " " + f->detail);
    std::size_t n = b.dim();
    NormalJAlgebra N;
    N.gram = gram_matrix(b, j, omega);

    std::vector<QVec> all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(b.real_basis_vector(i));
    auto derived = bracket_span(b, all, all);
    std::vector<QVec> rows;
    for (const auto& d : derived) rows.push_back(N.gram * d);
    std::vector<QVec> abasis = rows.empty() ? all : kernel(QMatrix::from_rows(rows, n));
    std::size_t r = abasis.size();
    if (r == 0) throw GradingShapeError("[b,b] has no orthogonal complement");

    auto spaces = simultaneous_eigenspaces(b, abasis);
    const QVec zero(r);
    std::vector<WeightSpace> nonzero;
    for (auto& ws : spaces) {
        if (ws.weight == zero) {
            if (!same_span(ws.basis, abasis, n)) throw GradingShapeError("zero weight space differs from the orthogonal complement of [b,b]");
        } else {
            nonzero.push_back(std::move(ws));
        }
    }

    // idempotent roots: one-dimensional root spaces mapped into a by j
    std::vector<const WeightSpace*> idem;
    for (const auto& ws : nonzero) {
        if (ws.basis.size() != 1) continue;
        if (in_span(abasis, j * ws.basis[0])) idem.push_back(&ws);
    }
    if (idem.size() != r) throw GradingShapeError("found " + std::to_string(idem.size()) + " idempotent roots, rank is " + std::to_string(r));
    QMatrix W(r, r);
    for (std::size_t l = 0; l < r; ++l)
        for (std::size_t i = 0; i < r; ++i) W(l, i) = idem[l]->weight[i];
    auto Winv = inverse(W);
    if (!Winv) throw GradingShapeError("idempotent roots are linearly dependent");
    std::vector<QVec> A(r), E(r);
    for (std::size_t k = 0; k < r; ++k) {
        QVec a(n);
        for (std::size_t i = 0; i < r; ++i) a = add(a, scale((*Winv)(i, k), abasis[i]));
        A[k] = a;
        E[k] = scale(Rational(-1), j * a);
        if (!same_span({E[k]}, idem[k]->basis, n)) throw GradingShapeError("-jA_k is not in the root space of alpha_k");
    }
    auto alpha_coords = [&](const QVec& weight) {
        QVec m(r);
        for (std::size_t k = 0; k < r; ++k)
            for (std::size_t i = 0; i < r; ++i) m[k] += (*Winv)(i, k) * weight[i];
        return m;
    };

    // order: every mixed weight (alpha_l - alpha_k)/2 needs k before l; ties by position of E_k
    std::vector<std::vector<bool>> before(r, std::vector<bool>(r, false));
    const Rational half(1, 2);
    for (const auto& ws : nonzero) {
        QVec m = alpha_coords(ws.weight);
        std::vector<std::size_t> pos, neg;
        for (std::size_t k = 0; k < r; ++k) {
            if (m[k] == half) pos.push_back(k);
            else if (m[k] == -half) neg.push_back(k);
        }
        if (pos.size() == 1 && neg.size() == 1) {
            std::size_t nz = 0;
            for (const auto& x : m) nz += !x.is_zero();
            if (nz == 2) before[neg[0]][pos[0]] = true;
        }
    }
    std::vector<std::size_t> order;
    std::vector<bool> used(r, false);
    for (std::size_t step = 0; step < r; ++step) {
        std::size_t best = r;
        for (std::size_t c = 0; c < r; ++c) {
            if (used[c]) continue;
            bool free = true;
            for (std::size_t p = 0; p < r; ++p)
                if (!used[p] && before[p][c]) free = false;
            if (!free) continue;
            if (best == r || leading_index(E[c]) < leading_index(E[best])) best = c;
        }
        if (best == r) throw GradingShapeError("mixed roots admit no consistent ordering of alpha_k");
        used[best] = true;
        order.push_back(best);
    }
    std::vector<std::size_t> rank_of(r);
    for (std::size_t p = 0; p < r; ++p) rank_of[order[p]] = p;

    N.rank = r;
    for (std::size_t p = 0; p < r; ++p) {
        N.A.push_back(A[order[p]]);
        N.E.push_back(E[order[p]]);
    }
    for (std::size_t k = 0; k < r; ++k) N.roots.push_back({RootKind::Alpha, k, 0, {}, {}});
    for (std::size_t k = 0; k < r; ++k) N.roots.push_back({RootKind::Half, k, 0, {}, {}});
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t l = k + 1; l < r; ++l) N.roots.push_back({RootKind::Minus, k, l, {}, {}});
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t l = k + 1; l < r; ++l) N.roots.push_back({RootKind::Plus, k, l, {}, {}});
    for (auto& rs : N.roots) {
        rs.coords = QVec(r);
        switch (rs.kind) {
            case RootKind::Alpha: rs.coords[rs.k] = 1; break;
            case RootKind::Half: rs.coords[rs.k] = half; break;
            case RootKind::Minus: rs.coords[rs.l] = half; rs.coords[rs.k] = -half; break;
            case RootKind::Plus: rs.coords[rs.l] = half; rs.coords[rs.k] = half; break;
        }
    }
    for (auto& ws : nonzero) {
        QVec m0 = alpha_coords(ws.weight);
        QVec m(r);
        for (std::size_t k = 0; k < r; ++k) m[rank_of[k]] = m0[k];
        auto it = std::find_if(N.roots.begin(), N.roots.end(), [&](const RootSpace& rs) { return rs.coords == m; });
        if (it == N.roots.end()) {
            std::string s;
            for (const auto& x : m) s += (s.empty() ? "" : ",") + x.str();
            throw GradingShapeError("weight (" + s + ") in alpha coordinates does not fit the root pattern");
        }
        it->basis = ws.basis;
    }
    for (std::size_t k = 0; k < r; ++k) {
        auto& ra = N.roots[k];
        ra.basis = {N.E[k]};
        for (std::size_t l = 0; l < r; ++l)
            if (b.bracket(N.A[k], N.E[l]) != (k == l ? N.E[l] : QVec(n)))
                throw GradingShapeError("[A_k, E_l] != delta_kl E_l");
    }
    auto jspan = [&](const std::vector<QVec>& vs) {
        std::vector<QVec> out;
        for (const auto& v : vs) out.push_back(j * v);
        return span_basis(out, n);
    };
    for (const auto& rs : N.roots) {
        if (rs.kind == RootKind::Half && !same_span(jspan(rs.basis), rs.basis, n))
            throw GradingShapeError("j does not preserve " + rs.name());
        if (rs.kind == RootKind::Minus) {
            const auto& plus = N.root(RootKind::Plus, rs.k, rs.l);
            if (!same_span(jspan(rs.basis), plus.basis, n))
                throw GradingShapeError("j does not map " + rs.name() + " onto " + plus.name());
        }
    }
    N.b0 = abasis;
    for (const auto& rs : N.roots) {
        auto& dst = rs.kind == RootKind::Minus ? N.b0 : (rs.kind == RootKind::Half ? N.bhalf : N.b1);
        dst.insert(dst.end(), rs.basis.begin(), rs.basis.end());
    }
    N.b0 = span_basis(N.b0, n);
    N.bhalf = span_basis(N.bhalf, n);
    N.b1 = span_basis(N.b1, n);
    if (N.b0.size() + N.bhalf.size() + N.b1.size() != n) throw GradingShapeError("graded pieces do not span b");
    N.b = std::move(b);
    N.j = std::move(j);
    N.omega = std::move(omega);
    return N;
}

QVec nabla_tilde(const NormalJAlgebra& N, const QVec& x, const QVec& y) {
    std::size_t n = N.dim();
    QVec rhs(n);
    QVec xy = N.b.bracket(x, y);
    for (std::size_t m = 0; m < n; ++m) {
        QVec z = N.b.real_basis_vector(m);
        Rational v = N.inner(xy, z) - N.inner(N.b.bracket(z, x), y) - N.inner(x, N.b.bracket(z, y));
        rhs[m] = v / Rational(-2);
    }
    return solve_linear(N.gram.transpose(), rhs).x;
}

}  // namespace jdomain
