#include "jdomain/linalg.hpp"

namespace jdomain {

CVec to_complex(const QVec& v) {
    return CVec(v.begin(), v.end());
}

CMatrix to_complex(const QMatrix& m) {
    CMatrix c(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = m(i, j);
    return c;
}

QVec real_part(const CVec& v) {
    QVec out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.re());
    return out;
}

QVec imag_part(const CVec& v) {
    QVec out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.im());
    return out;
}

bool is_real_vec(const CVec& v) {
    for (const auto& x : v)
        if (!x.is_real()) return false;
    return true;
}

QVec require_real(const CVec& v) {
    if (!is_real_vec(v)) throw ValidationError("expected a real vector");
    return real_part(v);
}

QMatrix require_real(const CMatrix& m) {
    QMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_real()) throw ValidationError("expected a real matrix");
            out(i, j) = m(i, j).re();
        }
    return out;
}

}  // namespace jdomain
