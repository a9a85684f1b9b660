#include "jdomain/suite.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace jdomain;

namespace {

FieldsSpec spec_of(const std::string& name) {
    auto s = builtin_spec(name);
    if (!s) throw py::value_error("unknown built-in " + name);
    return *s;
}

std::vector<Rational> rationals(const std::vector<std::string>& xs) {
    std::vector<Rational> out;
    for (const auto& x : xs) out.push_back(Rational::parse(x));
    return out;
}

XiParam xi_param(const std::string& x, const std::string& y, long n, long nprime) {
    return XiParam{Rational::parse(x), Rational::parse(y), n, nprime};
}

py::dict classify(const std::string& x, const std::string& y, long n, long nprime) {
    XiParam p = xi_param(x, y, n, nprime);
    bool u = is_unitarizable(p);
    py::dict d;
    d["xi"] = std::vector<std::string>{p.x.str(), p.y.str(), std::to_string(n), std::to_string(nprime)};
    d["unitarizable"] = u;
    d["B_class"] = u ? partition_label(p, Level::B) : "-";
    d["G_class"] = u ? partition_label(p, Level::G) : "-";
    return d;
}

struct Model {
    FieldsSpec spec;
    GroupModel M;

    explicit Model(const std::string& name) : spec(spec_of(name)), M(model_of(spec)) {}

    CVec sigma_of(const std::vector<std::string>& xi) const {
        return sigma(M, theta_from_xi(xi_covector(spec, M.g(), rationals(xi))));
    }
    cplx delta(const std::vector<std::string>& xi, const NVec& W) const {
        if (W.size() != M.S->udim()) throw py::value_error("point has the wrong length");
        return delta_eval(*M.S, sigma_of(xi), W);
    }
    cplx kernel(const std::vector<std::string>& xi, const NVec& z, const NVec& w) const {
        const std::size_t U = M.S->udim(), V = M.S->vdim();
        if (z.size() != U + V || w.size() != U + V) throw py::value_error("points have the wrong length");
        DomainPoint p{NVec(z.begin(), z.begin() + U), NVec(z.begin() + U, z.end())};
        DomainPoint q{NVec(w.begin(), w.begin() + U), NVec(w.begin() + U, w.end())};
        if (!in_domain(*M.S, p) || !in_domain(*M.S, q)) throw DomainViolation("point outside the domain");
        return kernel_eval(*M.S, sigma_of(xi), p, q);
    }
    std::vector<std::string> bracket_table() const {
        std::vector<std::string> out;
        const LieAlgebra& g = M.g();
        for (std::size_t a = 0; a < g.dim(); ++a)
            for (std::size_t b = a + 1; b < g.dim(); ++b)
                out.push_back("[" + g.labels()[a] + ", " + g.labels()[b] + "] = " + g.format(g.structure(a, b)));
        return out;
    }
    std::map<std::string, std::string> grades() const {
        std::map<std::string, std::string> out;
        for (std::size_t i = 0; i < M.F.fields.size(); ++i) {
            auto g = grade_classify(M.F.fields[i]);
            out[M.F.labels[i]] = g ? g->str() : "mixed";
        }
        return out;
    }
    bool in_cone(const std::vector<std::string>& u) const { return jdomain::in_cone(*M.S, rationals(u)); }
};

}  // namespace

PYBIND11_MODULE(_jdomain, m) {
    m.doc() = "Normal j-algebras, Siegel domains and line-bundle parameters";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ArithmeticError);

    m.def("builtin_names", &builtin_names);
    m.def("export_fields", [](const std::string& name) { return export_fields(spec_of(name)); });
    m.def(
        "run_suite",
        [](const std::string& name, std::size_t samples, double tolerance) {
            SuiteOptions opt;
            opt.cone_samples = opt.numeric_samples = samples;
            opt.chi_samples = 2 * samples;
            opt.tolerance = tolerance;
            return run_suite(spec_of(name), opt).text();
        },
        py::arg("name"), py::arg("samples") = 100, py::arg("tolerance") = 1e-9);
    m.def(
        "suite_from_json",
        [](const std::string& text) {
            Envelope env = parse_envelope(text);
            auto* f = std::get_if<FieldsSpec>(&env.payload);
            if (!f) throw ParseError("expected a fields envelope, got " + env.kind);
            return run_suite(*f).text();
        },
        py::arg("text"));
    m.def("is_unitarizable",
          [](const std::string& x, const std::string& y, long n, long np) { return is_unitarizable(xi_param(x, y, n, np)); },
          py::arg("x"), py::arg("y"), py::arg("n"), py::arg("nprime"));
    m.def(
        "partition_label",
        [](const std::string& x, const std::string& y, long n, long np, const std::string& level) {
            if (level != "B" && level != "G") throw py::value_error("level must be B or G");
            return partition_label(xi_param(x, y, n, np), level == "B" ? Level::B : Level::G);
        },
        py::arg("x"), py::arg("y"), py::arg("n"), py::arg("nprime"), py::arg("level"));
    m.def("classify", &classify, py::arg("x"), py::arg("y"), py::arg("n"), py::arg("nprime"));

    py::class_<Model>(m, "Model")
        .def(py::init<const std::string&>(), py::arg("name"))
        .def_property_readonly("name", [](const Model& s) { return s.spec.name; })
        .def_property_readonly("dims",
                               [](const Model& s) {
                                   std::map<std::string, std::size_t> d{{"g", s.M.g().dim()},
                                                                        {"b", s.M.b_in_g.size()},
                                                                        {"k", s.M.k.size()},
                                                                        {"rank", s.M.N->rank},
                                                                        {"udim", s.M.S->udim()},
                                                                        {"vdim", s.M.S->vdim()}};
                                   return d;
                               })
        .def_property_readonly("labels", [](const Model& s) { return s.M.g().labels(); })
        .def_property_readonly("xi_names", [](const Model& s) { return s.spec.xi_names; })
        .def("bracket_table", &Model::bracket_table)
        .def("grades", &Model::grades)
        .def("in_cone", &Model::in_cone, py::arg("u"))
        .def("delta", &Model::delta, py::arg("xi"), py::arg("point"))
        .def("kernel", &Model::kernel, py::arg("xi"), py::arg("z"), py::arg("w"));
}
