#include "jdomain/lie.hpp"

#include "jdomain/poly.hpp"

#include <algorithm>

namespace jdomain {

LieAlgebra::LieAlgebra(std::vector<std::string> labels) : labels_(std::move(labels)) {
    c_.assign(dim() * dim(), CVec(dim()));
}

std::optional<std::size_t> LieAlgebra::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const CVec& v) {
    if (v.size() != dim()) throw std::invalid_argument("bracket value has wrong dimension");
    c_[i * dim() + j] = v;
    c_[j * dim() + i] = scale(Gaussian(-1), v);
}

void LieAlgebra::set_constant(std::size_t i, std::size_t j, std::size_t k, const Gaussian& c) {
    c_.at(i * dim() + j).at(k) = c;
}

bool LieAlgebra::is_real() const {
    for (const auto& v : c_)
        if (!is_real_vec(v)) return false;
    return true;
}

CVec LieAlgebra::bracket(const CVec& x, const CVec& y) const {
    if (x.size() != dim() || y.size() != dim()) throw std::invalid_argument("element dimension mismatch");
    CVec out(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (y[j].is_zero()) continue;
            Gaussian f = x[i] * y[j];
            const CVec& c = structure(i, j);
            for (std::size_t k = 0; k < dim(); ++k)
                if (!c[k].is_zero()) out[k] += f * c[k];
        }
    }
    return out;
}

QVec LieAlgebra::bracket(const QVec& x, const QVec& y) const {
    return require_real(bracket(to_complex(x), to_complex(y)));
}

CMatrix LieAlgebra::ad(const CVec& x) const {
    CMatrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        CVec col = bracket(x, basis_vector(j));
        for (std::size_t i = 0; i < dim(); ++i) m(i, j) = col[i];
    }
    return m;
}

QMatrix LieAlgebra::ad(const QVec& x) const {
    return require_real(ad(to_complex(x)));
}

std::string LieAlgebra::format(const CVec& x) const {
    std::string out;
    for (std::size_t k = 0; k < dim(); ++k)
        if (!x[k].is_zero()) out += format_term(x[k], labels_[k], out.empty());
    return out.empty() ? "0" : out;
}

std::optional<std::array<std::size_t, 2>> antisymmetry_violation(const LieAlgebra& L) {
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = i; j < L.dim(); ++j)
            if (add(L.structure(i, j), L.structure(j, i)) != CVec(L.dim()))
                return std::array<std::size_t, 2>{i, j};
    return std::nullopt;
}

std::optional<std::array<std::size_t, 3>> jacobi_violation(const LieAlgebra& L) {
    std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                CVec a = L.basis_vector(i), b = L.basis_vector(j), c = L.basis_vector(k);
                CVec s = add(add(L.bracket(a, L.bracket(b, c)), L.bracket(b, L.bracket(c, a))),
                             L.bracket(c, L.bracket(a, b)));
                if (!is_zero_vec(s)) return std::array<std::size_t, 3>{i, j, k};
            }
    return std::nullopt;
}

std::vector<QVec> bracket_span(const LieAlgebra& L, const std::vector<QVec>& a, const std::vector<QVec>& b) {
    std::vector<QVec> out;
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(L.bracket(x, y));
    return span_basis(out, L.dim());
}

std::vector<CVec> bracket_span(const LieAlgebra& L, const std::vector<CVec>& a, const std::vector<CVec>& b) {
    std::vector<CVec> out;
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(L.bracket(x, y));
    return span_basis(out, L.dim());
}

std::vector<std::vector<QVec>> derived_series(const LieAlgebra& L) {
    std::vector<QVec> cur;
    for (std::size_t i = 0; i < L.dim(); ++i) cur.push_back(L.real_basis_vector(i));
    std::vector<std::vector<QVec>> series{cur};
    while (!cur.empty()) {
        auto next = bracket_span(L, cur, cur);
        if (next.size() == cur.size()) break;
        series.push_back(next);
        cur = std::move(next);
    }
    return series;
}

bool is_solvable(const LieAlgebra& L) {
    return derived_series(L).back().empty();
}

QVec characteristic_polynomial(const QMatrix& a) {
    std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
    // Faddeev-LeVerrier
    QVec c(n + 1);
    c[n] = Rational(1);
    QMatrix m(n, n);
    QMatrix id = QMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m + c[n - k + 1] * id;
        c[n - k] = -(a * m).trace() / Rational(static_cast<long>(k));
    }
    return c;
}

static std::vector<mpz_class> divisors(mpz_class v) {
    v = abs(v);
    if (v == 0) return {};
    if (v > mpz_class("1000000000000000000")) throw NonRationalSpectrum("characteristic polynomial coefficients too large");
    std::vector<std::pair<mpz_class, unsigned>> fac;
    for (mpz_class p = 2; p * p <= v; ++p) {
        unsigned e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        if (e) fac.push_back({p, e});
    }
    if (v > 1) fac.push_back({v, 1});
    std::vector<mpz_class> out{1};
    for (auto& [p, e] : fac) {
        std::size_t cur = out.size();
        mpz_class pk = 1;
        for (unsigned k = 0; k < e; ++k) {
            pk *= p;
            for (std::size_t q = 0; q < cur; ++q) out.push_back(out[q] * pk);
        }
    }
    return out;
}

static Rational eval_poly(const QVec& p, const Rational& x) {
    Rational s;
    for (std::size_t k = p.size(); k-- > 0;) s = s * x + p[k];
    return s;
}

static QVec deflate(const QVec& p, const Rational& r) {
    // divide by (t - r)
    std::size_t n = p.size() - 1;
    QVec q(n);
    Rational carry;
    for (std::size_t k = n; k-- > 0;) {
        carry = p[k + 1] + carry * r;
        q[k] = carry;
    }
    return q;
}

std::vector<std::pair<Rational, unsigned>> rational_roots(const QVec& poly) {
    QVec p = poly;
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    std::vector<std::pair<Rational, unsigned>> out;
    if (p.size() <= 1) return out;
    unsigned zeros = 0;
    while (p.size() > 1 && p.front().is_zero()) {
        p.erase(p.begin());
        ++zeros;
    }
    if (zeros) out.push_back({Rational(0), zeros});
    if (p.size() <= 1) return out;
    mpz_class l = 1;
    for (const auto& c : p) l = lcm(l, c.raw().get_den());
    mpz_class a0 = mpq_class(p.front().raw() * l).get_num();
    mpz_class an = mpq_class(p.back().raw() * l).get_num();
    auto dn = divisors(a0), dd = divisors(an);
    std::vector<Rational> cands;
    for (const auto& a : dn)
        for (const auto& b : dd) {
            Rational r(mpq_class(a, b));
            cands.push_back(r);
            cands.push_back(-r);
        }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (const auto& r : cands) {
        unsigned m = 0;
        while (p.size() > 1 && eval_poly(p, r).is_zero()) {
            p = deflate(p, r);
            ++m;
        }
        if (m) out.push_back({r, m});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

bool has_rational_spectrum(const QMatrix& a) {
    unsigned total = 0;
    for (const auto& [r, m] : rational_roots(characteristic_polynomial(a))) total += m;
    return total == a.rows();
}

bool is_split_solvable(const LieAlgebra& L) {
    if (!L.is_real() || !is_solvable(L)) return false;
    for (std::size_t i = 0; i < L.dim(); ++i)
        if (!has_rational_spectrum(L.ad(L.real_basis_vector(i)))) return false;
    return true;
}

std::vector<WeightSpace> simultaneous_eigenspaces(const LieAlgebra& L, const std::vector<QVec>& commuting) {
    std::size_t n = L.dim();
    std::vector<QMatrix> ads;
    for (const auto& a : commuting) ads.push_back(L.ad(a));
    for (std::size_t p = 0; p < ads.size(); ++p)
        for (std::size_t q = p + 1; q < ads.size(); ++q)
            if (ads[p] * ads[q] != ads[q] * ads[p])
                throw NonCommuting("ad(" + L.format(commuting[p]) + ") and ad(" + L.format(commuting[q]) +
                                   ") do not commute");
    std::vector<WeightSpace> blocks;
    {
        WeightSpace all;
        for (std::size_t i = 0; i < n; ++i) all.basis.push_back(L.real_basis_vector(i));
        blocks.push_back(std::move(all));
    }
    for (std::size_t p = 0; p < ads.size(); ++p) {
        std::vector<WeightSpace> next;
        for (const auto& blk : blocks) {
            std::size_t d = blk.basis.size();
            QMatrix P = QMatrix::from_columns(blk.basis, n);
            // restricted operator R with ad * P = P * R
            QMatrix R(d, d);
            for (std::size_t j = 0; j < d; ++j) {
                auto c = coords_in(blk.basis, ads[p] * blk.basis[j]);
                if (!c) throw NonCommuting("joint eigenspace is not invariant");
                for (std::size_t i = 0; i < d; ++i) R(i, j) = (*c)[i];
            }
            std::size_t got = 0;
            for (const auto& [lam, mult] : rational_roots(characteristic_polynomial(R))) {
                auto ker = kernel(R - lam * QMatrix::identity(d));
                WeightSpace ws;
                ws.weight = blk.weight;
                ws.weight.push_back(lam);
                for (const auto& k : ker) ws.basis.push_back(P * k);
                ws.basis = span_basis(ws.basis, n);
                got += ws.basis.size();
                next.push_back(std::move(ws));
            }
            if (got != d)
                throw NonRationalSpectrum("ad(" + L.format(commuting[p]) +
                                          ") is not diagonalizable with rational spectrum");
        }
        blocks = std::move(next);
    }
    return blocks;
}

std::vector<QVec> relative_normalizer(const LieAlgebra& L, const std::vector<QVec>& V, const std::vector<QVec>& W) {
    std::size_t n = L.dim();
    if (V.empty()) return {};
    // rows f with f . w = 0 for w in W cut out span(W)
    std::vector<QVec> ann;
    if (W.empty()) {
        for (std::size_t i = 0; i < n; ++i) ann.push_back(unit<Rational>(n, i));
    } else {
        ann = kernel(QMatrix::from_rows(W, n));
    }
    std::vector<QVec> rows;
    for (const auto& w : W)
        for (const auto& f : ann) {
            QVec r;
            for (const auto& v : V) r.push_back(dot(f, L.bracket(v, w)));
            rows.push_back(std::move(r));
        }
    std::vector<QVec> coeffs;
    if (rows.empty()) {
        for (std::size_t i = 0; i < V.size(); ++i) coeffs.push_back(unit<Rational>(V.size(), i));
    } else {
        coeffs = kernel(QMatrix::from_rows(rows, V.size()));
    }
    std::vector<QVec> out;
    for (const auto& c : coeffs) {
        QVec x(n);
        for (std::size_t i = 0; i < V.size(); ++i) x = add(x, scale(c[i], V[i]));
        out.push_back(std::move(x));
    }
    return span_basis(out, n);
}

LieAlgebra subalgebra(const LieAlgebra& L, const std::vector<QVec>& basis, std::vector<std::string> labels) {
    if (basis.size() != labels.size()) throw std::invalid_argument("label count mismatch");
    if (!independent(basis, L.dim())) throw ValidationError("subalgebra basis is dependent");
    LieAlgebra S(std::move(labels));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            auto c = coords_in(basis, L.bracket(basis[i], basis[j]));
            if (!c) throw ValidationError("subspace is not closed under the bracket");
            S.set_bracket(i, j, to_complex(*c));
        }
    return S;
}

}  // namespace jdomain
