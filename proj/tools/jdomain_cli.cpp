#include "jdomain/suite.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

using namespace jdomain;

namespace {

struct Source {
    std::string builtin;
    std::string path;
};

void add_source(CLI::App* sub, Source& src) {
    sub->add_option("--builtin", src.builtin, "Built-in dataset: vinberg5, dI21, halfplane");
    sub->add_option("spec", src.path, "JSON envelope file");
}

Envelope load(const Source& src) {
    if (!src.builtin.empty()) {
        auto spec = builtin_spec(src.builtin);
        if (!spec) throw ParseError("unknown built-in " + src.builtin);
        return {"fields", *spec};
    }
    if (src.path.empty()) throw ParseError("give --builtin NAME or a spec file");
    return load_envelope(src.path);
}

FieldsSpec load_fields(const Source& src) {
    Envelope env = load(src);
    if (auto* f = std::get_if<FieldsSpec>(&env.payload)) return *f;
    throw ParseError("expected a fields envelope, got " + env.kind);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

double parse_real(const std::string& s) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw ParseError("bad number: " + s);
    }
    if (used != s.size()) throw ParseError("bad number: " + s);
    return v;
}

/// "a", "bi", "a+bi", "a-bi", "i", "-i".
cplx parse_cplx(const std::string& s) {
    if (s.empty()) throw ParseError("empty number");
    if (s.back() != 'i') return parse_real(s);
    std::string body = s.substr(0, s.size() - 1);
    std::size_t cut = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;)
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            cut = k;
            break;
        }
    std::string re = cut == std::string::npos ? "" : body.substr(0, cut);
    std::string im = cut == std::string::npos ? body : body.substr(cut);
    double iv = (im.empty() || im == "+") ? 1.0 : (im == "-" ? -1.0 : parse_real(im));
    return {re.empty() ? 0.0 : parse_real(re), iv};
}

std::string fmt15(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

std::string fmt_cplx(cplx z) {
    if (z.imag() == 0) return fmt15(z.real());
    std::string im = fmt15(std::abs(z.imag())) + "i";
    if (z.real() == 0) return (z.imag() < 0 ? "-" : "") + im;
    return fmt15(z.real()) + (z.imag() < 0 ? "-" : "+") + im;
}

std::vector<Rational> parse_xi(const FieldsSpec& spec, const std::string& text) {
    auto parts = split_list(text);
    if (parts.size() != spec.xi_basis.size())
        throw ParseError("expected " + std::to_string(spec.xi_basis.size()) + " xi parameters");
    std::vector<Rational> out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        Rational r = Rational::parse(parts[k]);
        if (spec.xi_integral[k] && !r.is_integer()) throw ParseError(spec.xi_names[k] + " must be an integer");
        out.push_back(r);
    }
    return out;
}

long parse_integer(const std::string& s, const std::string& name) {
    Rational r = Rational::parse(s);
    if (!r.is_integer()) throw ParseError(name + " must be an integer");
    return r.raw().get_num().get_si();
}

void print_report(const SuiteReport& rep, bool as_json) {
    if (as_json)
        std::cout << rep.to_json().dump(2) << "\n";
    else
        std::cout << rep.text();
}

int cmd_validate(const Source& src, bool as_json) {
    Envelope env = load(src);
    SuiteReport rep;
    if (auto* g = std::get_if<LieAlgebra>(&env.payload)) {
        rep = run_lie_suite(src.path, *g);
    } else if (auto* nj = std::get_if<NormalJSpec>(&env.payload)) {
        rep = run_normal_j_suite(src.path, *nj);
    } else if (auto* f = std::get_if<FieldsSpec>(&env.payload)) {
        rep.name = f->name;
        try {
            GroupModel M = model_of(*f);
            rep.items.push_back(check_jacobi(M.g()));
            auto v = validate_normal_j(M.N->b, M.N->j, M.N->omega);
            for (const auto& it : v.items) rep.items.push_back({"normal_j." + it.name, it.pass, it.detail});
            rep.items.push_back({"grading_shape", true, "rank " + std::to_string(M.N->rank)});
            rep.items.push_back(check_grading_law(*M.N));
        } catch (const ValidationError& e) {
            rep.items.push_back({"model", false, e.what()});
        }
    } else {
        auto& xs = std::get<std::vector<XiParam>>(env.payload);
        rep.name = src.path;
        rep.items.push_back({"xi_batch", true, std::to_string(xs.size()) + " parameters"});
    }
    print_report(rep, as_json);
    return rep.ok() ? 0 : 1;
}

NormalJAlgebra algebra_of(const Source& src) {
    Envelope env = load(src);
    if (auto* f = std::get_if<FieldsSpec>(&env.payload)) return *model_of(*f).N;
    if (auto* nj = std::get_if<NormalJSpec>(&env.payload)) {
        QVec w = nj->omega ? *nj->omega : koszul_form(nj->algebra, nj->j);
        return compute_grading(nj->algebra, nj->j, w);
    }
    throw ParseError("expected a fields, normal_j or domain envelope");
}

int cmd_roots(const Source& src, bool as_json) {
    NormalJAlgebra N = algebra_of(src);
    if (as_json) {
        json rows = json::array();
        for (const auto& rs : N.roots)
            rows.push_back({{"root", rs.name()}, {"grade", rs.grade().str()}, {"dim", rs.basis.size()}});
        std::cout << json{{"rank", N.rank}, {"roots", rows}}.dump(2) << "\n";
        return 0;
    }
    std::cout << "rank " << N.rank << "\n";
    for (const auto& rs : N.roots) {
        std::string line = rs.name();
        line.resize(std::max<std::size_t>(line.size() + 1, 14), ' ');
        std::cout << line << "grade " << rs.grade().str() << "  dim " << rs.basis.size() << "\n";
    }
    return 0;
}

int cmd_grade(const Source& src, bool as_json) {
    GroupModel M = model_of(load_fields(src));
    std::map<Rational, std::vector<std::string>> rows;
    std::vector<std::pair<std::string, std::string>> mixed;
    json fields = json::object();
    for (std::size_t q = 0; q < M.F.fields.size(); ++q) {
        const auto& label = M.F.labels[q];
        if (auto g = grade_classify(M.F.fields[q])) {
            rows[*g].push_back(label);
            fields[label] = g->str();
        } else {
            std::string parts;
            for (const auto& [g, p] : decompose_by_grade(M.F.fields[q])) parts += (parts.empty() ? "" : ",") + g.str();
            mixed.emplace_back(label, parts);
            fields[label] = "mixed";
        }
    }
    if (as_json) {
        json table = json::array();
        for (const auto& [g, labels] : rows) table.push_back({{"grade", g.str()}, {"fields", labels}});
        std::cout << json{{"fields", fields}, {"table", table}}.dump(2) << "\n";
        return 0;
    }
    for (const auto& [g, labels] : rows) {
        std::cout << g.str() << ":";
        for (const auto& l : labels) std::cout << " " << l;
        std::cout << "\n";
    }
    for (const auto& [l, parts] : mixed) std::cout << "mixed: " << l << " (" << parts << ")\n";
    return 0;
}

int cmd_brackets(const Source& src, bool as_json) {
    Envelope env = load(src);
    LieAlgebra g;
    if (auto* f = std::get_if<FieldsSpec>(&env.payload))
        g = field_algebra_of(*f).g;
    else if (auto* a = std::get_if<LieAlgebra>(&env.payload))
        g = *a;
    else if (auto* nj = std::get_if<NormalJSpec>(&env.payload))
        g = nj->algebra;
    else
        throw ParseError("expected an algebra");
    if (as_json) {
        std::cout << make_envelope("lie_algebra", lie_algebra_to_json(g)).dump(2) << "\n";
        return 0;
    }
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i + 1; j < g.dim(); ++j)
            std::cout << "[" << g.labels()[i] << ", " << g.labels()[j] << "] = " << g.format(g.structure(i, j)) << "\n";
    return 0;
}

json classify_row(const XiParam& xi) {
    bool u = is_unitarizable(xi);
    return {{"xi", {xi.x.str(), xi.y.str(), std::to_string(xi.n), std::to_string(xi.nprime)}},
            {"unitarizable", u},
            {"B_class", u ? partition_label(xi, Level::B) : "-"},
            {"G_class", u ? partition_label(xi, Level::G) : "-"}};
}

std::vector<XiParam> classify_grid() {
    const std::vector<std::string> xs = {"-4", "-3", "-2", "-3/2", "-1", "-1/2", "0", "1/2", "1", "2"};
    std::vector<XiParam> out;
    for (const auto& x : xs)
        for (long y = -4; y <= 5; ++y)
            for (long n = -2; n <= 7; ++n)
                for (long m = -2; m <= 7; ++m) out.push_back({Rational::parse(x), Rational(y), n, m});
    return out;
}

int cmd_classify(const std::string& x, const std::string& y, const std::string& n, const std::string& np, bool grid,
                 const std::string& batch, bool as_json) {
    std::vector<XiParam> params;
    if (grid) {
        params = classify_grid();
        as_json = true;
    } else if (!batch.empty()) {
        Envelope env = load_envelope(batch);
        auto* xs = std::get_if<std::vector<XiParam>>(&env.payload);
        if (!xs) throw ParseError("expected an xi_batch envelope");
        params = *xs;
    } else {
        if (x.empty() || y.empty() || n.empty() || np.empty()) throw ParseError("give --x --y --n --nprime or --grid");
        params.push_back({Rational::parse(x), Rational::parse(y), parse_integer(n, "n"), parse_integer(np, "nprime")});
    }
    for (const auto& xi : params) {
        json row = classify_row(xi);
        if (as_json) {
            std::cout << row.dump() << "\n";
        } else {
            std::cout << "xi(" << xi.x.str() << "," << xi.y.str() << "," << xi.n << "," << xi.nprime << ")"
                      << (row["unitarizable"].get<bool>() ? " unitarizable" : " not-unitarizable") << " "
                      << row["B_class"].get<std::string>() << " " << row["G_class"].get<std::string>() << "\n";
        }
    }
    return 0;
}

NVec parse_point(const SiegelDomain& S, const std::string& text, std::size_t len) {
    if (!text.empty() && text.back() == 'E' && len == S.udim()) {
        double lam = text.size() == 1 ? 1.0 : parse_real(text.substr(0, text.size() - 1));
        NVec w(S.udim());
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = lam * S.E_u[i].to_double();
        return w;
    }
    auto parts = split_list(text);
    if (parts.size() != len) throw ParseError("point needs " + std::to_string(len) + " coordinates");
    NVec out;
    for (const auto& p : parts) out.push_back(parse_cplx(p));
    return out;
}

int cmd_delta(const Source& src0, const std::string& xi_text, const std::string& point, const std::string& z,
              const std::string& w, bool as_json) {
    Source src = src0;
    if (src.builtin.empty() && src.path.empty()) src.builtin = "vinberg5";
    FieldsSpec spec = load_fields(src);
    std::vector<Rational> coords = parse_xi(spec, xi_text);
    GroupModel M = model_of(spec);
    const SiegelDomain& S = *M.S;
    CVec sg = sigma(M, theta_from_xi(xi_covector(spec, M.g(), coords)));
    cplx value;
    std::string what;
    if (!point.empty()) {
        NVec W = parse_point(S, point, S.udim());
        std::vector<double> re;
        for (const auto& c : W) re.push_back(c.real());
        peel(S, re);
        value = delta_eval(S, sg, W);
        what = "delta";
    } else {
        if (z.empty() || w.empty()) throw ParseError("give --point or both --z and --w");
        const std::size_t n = S.udim() + S.vdim();
        NVec zz = parse_point(S, z, n), ww = parse_point(S, w, n);
        DomainPoint p{NVec(zz.begin(), zz.begin() + static_cast<long>(S.udim())),
                      NVec(zz.begin() + static_cast<long>(S.udim()), zz.end())};
        DomainPoint q{NVec(ww.begin(), ww.begin() + static_cast<long>(S.udim())),
                      NVec(ww.begin() + static_cast<long>(S.udim()), ww.end())};
        if (!in_domain(S, p) || !in_domain(S, q)) throw DomainViolation("point is not in the domain");
        value = kernel_eval(S, sg, p, q);
        what = "kernel";
    }
    if (as_json)
        std::cout << json{{what, {{"re", fmt15(value.real())}, {"im", fmt15(value.imag())}}}}.dump() << "\n";
    else
        std::cout << what << " = " << fmt_cplx(value) << "\n";
    return 0;
}

int cmd_suite(const Source& src, bool as_json, double tol, std::size_t samples) {
    FieldsSpec spec = load_fields(src);
    SuiteOptions opt;
    opt.tolerance = tol;
    if (samples) opt.chi_samples = opt.cone_samples = opt.numeric_samples = samples;
    SuiteReport rep = run_suite(spec, opt);
    print_report(rep, as_json);
    return rep.ok() ? 0 : 1;
}

int cmd_export(const Source& src, const std::string& kind, const std::string& out) {
    FieldsSpec spec = load_fields(src);
    std::string text;
    if (kind == "fields")
        text = export_fields(spec);
    else if (kind == "normal_j" || kind == "domain")
        text = export_normal_j(*model_of(spec).N, kind);
    else if (kind == "lie_algebra")
        text = make_envelope("lie_algebra", lie_algebra_to_json(field_algebra_of(spec).g)).dump(2) + "\n";
    else
        throw ParseError("unknown export kind " + kind);
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out);
        if (!f) throw ParseError("cannot write " + out);
        f << text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Normal j-algebras, Siegel domains and line-bundle parameters"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Machine-readable output");

    Source src;
    auto* validate = app.add_subcommand("validate", "Jacobi identity, normal j-algebra axioms and grading shape");
    auto* roots = app.add_subcommand("roots", "Root spaces of b with grades and dimensions");
    auto* grade = app.add_subcommand("grade", "Grade of each field under the Euler field");
    auto* brackets = app.add_subcommand("brackets", "Full bracket table in basis order");
    auto* suite = app.add_subcommand("suite", "Run every check on a dataset");
    auto* exp = app.add_subcommand("export", "Write a dataset as a JSON envelope");
    for (auto* s : {validate, roots, grade, brackets, suite, exp}) {
        add_source(s, src);
        s->add_flag("--json", as_json, "Machine-readable output");
    }
    double tol = 1e-9;
    std::size_t samples = 0;
    suite->add_option("--tolerance", tol, "Relative tolerance for numeric checks");
    suite->add_option("--samples", samples, "Random samples per numeric check");
    std::string kind = "fields", out;
    exp->add_option("--kind", kind, "fields, normal_j, domain or lie_algebra");
    exp->add_option("-o,--output", out, "Output file");

    auto* classify = app.add_subcommand("classify", "Unitarizability and partition classes of xi(x,y,n,n')");
    std::string cx, cy, cn, cnp, batch;
    bool grid = false;
    classify->add_option("--x", cx);
    classify->add_option("--y", cy);
    classify->add_option("--n", cn);
    classify->add_option("--nprime", cnp);
    classify->add_flag("--grid", grid, "Stream the 10x10x10x10 grid as JSON lines");
    classify->add_option("--batch", batch, "xi_batch envelope file");
    classify->add_flag("--json", as_json);

    auto* delta = app.add_subcommand("delta", "Evaluate Delta_xi at a point, or the kernel at two points");
    std::string xi_text, point, zt, wt;
    add_source(delta, src);
    delta->add_option("--xi", xi_text, "Comma-separated parameters, e.g. --xi=-1,0,1,1")->required();
    delta->add_option("--point", point, "Point of b(1)_C: comma-separated complex numbers, or E, 2E, ...");
    delta->add_option("--z", zt, "First domain point (u then v coordinates)");
    delta->add_option("--w", wt, "Second domain point");
    delta->add_option("--tolerance", tol, "Accepted for uniformity");
    delta->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*validate) return cmd_validate(src, as_json);
        if (*roots) return cmd_roots(src, as_json);
        if (*grade) return cmd_grade(src, as_json);
        if (*brackets) return cmd_brackets(src, as_json);
        if (*suite) return cmd_suite(src, as_json, tol, samples);
        if (*exp) return cmd_export(src, kind, out);
        if (*classify) return cmd_classify(cx, cy, cn, cnp, grid, batch, as_json);
        if (*delta) return cmd_delta(src, xi_text, point, zt, wt, as_json);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
