#ifndef JDOMAIN_TEST_HELPERS_HPP
#define JDOMAIN_TEST_HELPERS_HPP

#include "jdomain/serialize.hpp"

#include <doctest.h>

#include <map>
#include <mutex>

namespace testing {

using namespace jdomain;

/// Models are expensive to build; each built-in is built once per process.
inline const GroupModel& model(const std::string& name) {
    static std::map<std::string, GroupModel> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, model_of(*builtin_spec(name))).first;
    return it->second;
}

inline Rational q(long p, long d = 1) { return Rational(p, d); }
inline Gaussian gi(long re, long im) { return Gaussian(Rational(re), Rational(im)); }

/// Element of g from a sparse label list such as {{"E1","1"},{"A1","i"}}.
inline CVec g_elem(const GroupModel& M, const SparseElem& e) { return parse_element(M.g(), e); }
inline QVec g_real(const GroupModel& M, const SparseElem& e) { return real_part(parse_element(M.g(), e)); }

/// Element of b (b-label coordinates).
inline QVec b_elem(const GroupModel& M, const SparseElem& e) { return real_part(parse_element(M.N->b, e)); }

inline bool close(cplx a, cplx b, double tol = 1e-12) {
    return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

}  // namespace testing

#endif
