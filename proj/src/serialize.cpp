#include "jdomain/serialize.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace jdomain {

namespace {

void require_keys(const json& j, const std::string& where, const std::set<std::string>& required,
                  const std::set<std::string>& optional = {}) {
    if (!j.is_object()) throw ParseError(where + ": expected an object");
    for (const auto& [k, v] : j.items())
        if (!required.count(k) && !optional.count(k)) throw ParseError(where + ": unknown key \"" + k + "\"");
    for (const auto& k : required)
        if (!j.contains(k)) throw ParseError(where + ": missing key \"" + k + "\"");
}

template <class T>
T get_as(const json& j, const std::string& where) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(where + ": " + e.what());
    }
}

std::vector<std::string> strings(const json& j, const std::string& where) {
    return get_as<std::vector<std::string>>(j, where);
}

json sparse_to_json(const SparseElem& e) {
    json out = json::object();
    for (const auto& [l, c] : e) out[l] = c;
    return out;
}

SparseElem sparse_from_json(const json& j, const std::string& where) {
    if (!j.is_object()) throw ParseError(where + ": expected an object");
    SparseElem out;
    for (const auto& [k, v] : j.items()) out.emplace_back(k, get_as<std::string>(v, where));
    return out;
}

json sparse_list(const std::vector<SparseElem>& es) {
    json out = json::array();
    for (const auto& e : es) out.push_back(sparse_to_json(e));
    return out;
}

std::vector<SparseElem> sparse_list_from(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array");
    std::vector<SparseElem> out;
    for (const auto& e : j) out.push_back(sparse_from_json(e, where));
    return out;
}

json expected_to_json(const Expected& e) {
    json out = json::object();
    json dims = json::object();
    for (const auto& [k, v] : e.dims) dims[k] = v;
    out["dims"] = dims;
    out["isotropy"] = sparse_list(e.isotropy);
    out["b_minus"] = sparse_list(e.b_minus);
    json br = json::array();
    for (const auto& r : e.brackets)
        br.push_back({{"x", sparse_to_json(r.x)}, {"y", sparse_to_json(r.y)}, {"result", sparse_to_json(r.result)}});
    out["brackets"] = br;
    json gr = json::object();
    for (const auto& [l, g] : e.grades) gr[l] = g;
    out["grades"] = gr;
    if (e.characters_dim) out["characters_dim"] = *e.characters_dim;
    json un = json::array();
    for (const auto& u : e.unitarity) un.push_back({{"xi", u.xi}, {"unitarizable", u.unitarizable}});
    out["unitarity"] = un;
    json pa = json::array();
    for (const auto& p : e.partition) pa.push_back({{"a", p.a}, {"b", p.b}, {"level", p.level}, {"same", p.same}});
    out["partition"] = pa;
    return out;
}

Expected expected_from_json(const json& j) {
    const std::string w = "expected";
    require_keys(j, w, {}, {"dims", "isotropy", "b_minus", "brackets", "grades", "characters_dim", "unitarity",
                            "partition"});
    Expected e;
    if (j.contains("dims")) e.dims = get_as<std::map<std::string, long>>(j["dims"], w + ".dims");
    if (j.contains("isotropy")) e.isotropy = sparse_list_from(j["isotropy"], w + ".isotropy");
    if (j.contains("b_minus")) e.b_minus = sparse_list_from(j["b_minus"], w + ".b_minus");
    if (j.contains("brackets")) {
        for (const auto& r : j["brackets"]) {
            require_keys(r, w + ".brackets", {"x", "y", "result"});
            e.brackets.push_back({sparse_from_json(r["x"], w), sparse_from_json(r["y"], w),
                                  sparse_from_json(r["result"], w)});
        }
    }
    if (j.contains("grades")) {
        if (!j["grades"].is_object()) throw ParseError(w + ".grades: expected an object");
        for (const auto& [k, v] : j["grades"].items()) e.grades.emplace_back(k, get_as<std::string>(v, w));
    }
    if (j.contains("characters_dim")) e.characters_dim = get_as<long>(j["characters_dim"], w);
    if (j.contains("unitarity"))
        for (const auto& u : j["unitarity"]) {
            require_keys(u, w + ".unitarity", {"xi", "unitarizable"});
            e.unitarity.push_back({strings(u["xi"], w), get_as<bool>(u["unitarizable"], w)});
        }
    if (j.contains("partition"))
        for (const auto& p : j["partition"]) {
            require_keys(p, w + ".partition", {"a", "b", "level", "same"});
            e.partition.push_back({strings(p["a"], w), strings(p["b"], w), get_as<std::string>(p["level"], w),
                                   get_as<bool>(p["same"], w)});
        }
    return e;
}

json qmatrix_to_json(const QMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
        rows.push_back(row);
    }
    return rows;
}

Rational rational_from(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    return Rational::parse(get_as<std::string>(j, where));
}

QMatrix qmatrix_from_json(const json& j, std::size_t n, const std::string& where) {
    if (!j.is_array() || j.size() != n) throw ParseError(where + ": expected " + std::to_string(n) + " rows");
    QMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        if (!j[r].is_array() || j[r].size() != n) throw ParseError(where + ": row length mismatch");
        for (std::size_t c = 0; c < n; ++c) m(r, c) = rational_from(j[r][c], where);
    }
    return m;
}

NormalJSpec normal_j_from_json(const json& p) {
    require_keys(p, "payload", {"algebra", "j"}, {"omega"});
    NormalJSpec s;
    s.algebra = lie_algebra_from_json(p["algebra"]);
    s.j = qmatrix_from_json(p["j"], s.algebra.dim(), "payload.j");
    if (p.contains("omega")) {
        const auto& o = p["omega"];
        if (!o.is_array() || o.size() != s.algebra.dim()) throw ParseError("payload.omega: wrong length");
        QVec w;
        for (const auto& x : o) w.push_back(rational_from(x, "payload.omega"));
        s.omega = w;
    }
    return s;
}

std::vector<XiParam> xi_batch_from_json(const json& p) {
    require_keys(p, "payload", {"params"});
    if (!p["params"].is_array()) throw ParseError("payload.params: expected an array");
    std::vector<XiParam> out;
    for (const auto& q : p["params"]) {
        require_keys(q, "params", {"x", "y", "n", "nprime"});
        XiParam xi;
        xi.x = rational_from(q["x"], "params.x");
        xi.y = rational_from(q["y"], "params.y");
        for (auto [key, dst] : {std::pair<const char*, long*>{"n", &xi.n}, {"nprime", &xi.nprime}}) {
            Rational r = rational_from(q[key], std::string("params.") + key);
            if (!r.is_integer()) throw ParseError(std::string("params.") + key + " must be an integer");
            *dst = r.raw().get_num().get_si();
        }
        out.push_back(xi);
    }
    return out;
}

}  // namespace

json gaussian_to_json(const Gaussian& g) { return {{"re", g.re().str()}, {"im", g.im().str()}}; }

Gaussian gaussian_from_json(const json& j) {
    require_keys(j, "gaussian", {"re", "im"});
    return Gaussian(rational_from(j["re"], "gaussian.re"), rational_from(j["im"], "gaussian.im"));
}

json lie_algebra_to_json(const LieAlgebra& g) {
    json triples = json::array();
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i + 1; j < g.dim(); ++j) {
            const CVec& s = g.structure(i, j);
            for (std::size_t k = 0; k < g.dim(); ++k)
                if (!s[k].is_zero())
                    triples.push_back(json::array(
                        {i, j, k, s[k].is_real() ? json(s[k].re().str()) : gaussian_to_json(s[k])}));
        }
    return {{"labels", g.labels()}, {"brackets", triples}};
}

LieAlgebra lie_algebra_from_json(const json& j) {
    require_keys(j, "algebra", {"labels", "brackets"});
    auto labels = strings(j["labels"], "algebra.labels");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) throw ParseError("algebra.labels: duplicate label");
    LieAlgebra g(labels);
    const std::size_t n = g.dim();
    if (!j["brackets"].is_array()) throw ParseError("algebra.brackets: expected an array");
    for (const auto& t : j["brackets"]) {
        if (!t.is_array() || t.size() != 4 || !t[0].is_number_unsigned() || !t[1].is_number_unsigned() ||
            !t[2].is_number_unsigned() || !(t[3].is_string() || t[3].is_object()))
            throw ParseError("algebra.brackets: expected [i, j, k, \"p/q\"]");
        std::size_t a = t[0].get<std::size_t>(), b = t[1].get<std::size_t>(), k = t[2].get<std::size_t>();
        if (a >= n || b >= n || k >= n) throw ParseError("algebra.brackets: index out of range");
        if (a >= b) throw ParseError("algebra.brackets: expected i < j");
        Gaussian c = t[3].is_string() ? Gaussian(Rational::parse(t[3].get<std::string>())) : gaussian_from_json(t[3]);
        g.set_constant(a, b, k, c);
        g.set_constant(b, a, k, -c);
    }
    return g;
}

json fields_to_json(const FieldsSpec& s) {
    json xb = json::array();
    for (std::size_t k = 0; k < s.xi_basis.size(); ++k)
        xb.push_back({{"name", s.xi_names[k]}, {"covector", sparse_to_json(s.xi_basis[k])},
                      {"integral", static_cast<bool>(s.xi_integral[k])}});
    return {{"name", s.name},
            {"coordinates", s.coordinates},
            {"udim", s.udim},
            {"reference", s.reference},
            {"labels", s.labels},
            {"components", s.components},
            {"b_labels", s.b_labels},
            {"xi_basis", xb},
            {"expected", expected_to_json(s.expected)}};
}

FieldsSpec fields_from_json(const json& j) {
    require_keys(j, "payload",
                 {"name", "coordinates", "udim", "reference", "labels", "components", "b_labels"},
                 {"xi_basis", "expected"});
    FieldsSpec s;
    s.name = get_as<std::string>(j["name"], "payload.name");
    s.coordinates = strings(j["coordinates"], "payload.coordinates");
    s.udim = get_as<long>(j["udim"], "payload.udim");
    s.reference = strings(j["reference"], "payload.reference");
    s.labels = strings(j["labels"], "payload.labels");
    s.components = get_as<std::vector<std::vector<std::string>>>(j["components"], "payload.components");
    s.b_labels = strings(j["b_labels"], "payload.b_labels");
    if (j.contains("xi_basis")) {
        if (!j["xi_basis"].is_array()) throw ParseError("payload.xi_basis: expected an array");
        for (const auto& x : j["xi_basis"]) {
            require_keys(x, "payload.xi_basis", {"name", "covector", "integral"});
            s.xi_names.push_back(get_as<std::string>(x["name"], "xi_basis.name"));
            s.xi_basis.push_back(sparse_from_json(x["covector"], "xi_basis.covector"));
            s.xi_integral.push_back(get_as<bool>(x["integral"], "xi_basis.integral"));
        }
    }
    if (j.contains("expected")) s.expected = expected_from_json(j["expected"]);
    return s;
}

json make_envelope(const std::string& kind, json payload) {
    return {{"version", kEnvelopeVersion}, {"kind", kind}, {"payload", std::move(payload)}};
}

Envelope parse_envelope(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    require_keys(j, "envelope", {"version", "kind", "payload"});
    if (!j["version"].is_number_integer() || j["version"].get<long>() != kEnvelopeVersion)
        throw ParseError("unsupported envelope version");
    Envelope env;
    env.kind = get_as<std::string>(j["kind"], "envelope.kind");
    const json& p = j["payload"];
    if (env.kind == "lie_algebra") {
        env.payload = lie_algebra_from_json(p);
    } else if (env.kind == "normal_j" || env.kind == "domain") {
        env.payload = normal_j_from_json(p);
    } else if (env.kind == "fields") {
        env.payload = fields_from_json(p);
    } else if (env.kind == "xi_batch") {
        env.payload = xi_batch_from_json(p);
    } else {
        throw ParseError("unknown kind \"" + env.kind + "\"");
    }
    return env;
}

Envelope load_envelope(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_envelope(ss.str());
}

std::string export_fields(const FieldsSpec& s) { return make_envelope("fields", fields_to_json(s)).dump(2) + "\n"; }

std::string export_normal_j(const NormalJAlgebra& N, const std::string& kind) {
    json w = json::array();
    for (const auto& x : N.omega) w.push_back(x.str());
    json p = {{"algebra", lie_algebra_to_json(N.b)}, {"j", qmatrix_to_json(N.j)}, {"omega", w}};
    return make_envelope(kind, p).dump(2) + "\n";
}

}  // namespace jdomain
