#include "tpk/json_io.hpp"

#include <fstream>

#include "tpk/courant.hpp"
#include "tpk/dirac.hpp"
#include "tpk/errors.hpp"

namespace tpk {

using nlohmann::json;

json to_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [exp, c] : p.terms())
        terms.push_back({{"exp", exp}, {"coef", c.str()}});
    return {{"dim", p.dim()}, {"terms", terms}};
}

json to_json(const RationalFunction& f) {
    if (f.is_polynomial() && f.den().constant_value() == Rational(1))
        return {{"num", to_json(f.num())}};
    return {{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

json to_json(const Graded& g) {
    json terms = json::array();
    for (const auto& [idx, c] : g.terms()) {
        std::vector<int> one_based;
        for (int i : idx)
            one_based.push_back(i + 1);
        terms.push_back({{"indices", one_based}, {"coef", to_json(c)}});
    }
    return {{"dim", g.dim()},
            {"degree", g.degree()},
            {"kind", g.kind() == Kind::form ? "form" : "multivector"},
            {"terms", terms}};
}

json to_json(const CourantSection& e) {
    return {{"X", to_json(e.X)}, {"xi", to_json(e.xi)}};
}

json to_json(const AxiomReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json residuals = json::array();
        for (const auto& g : c.residual)
            residuals.push_back(to_json(g));
        checks.push_back({{"axiom", c.axiom},
                          {"pass", c.pass},
                          {"description", c.description},
                          {"residual", residuals}});
    }
    return {{"pass", r.all_pass()}, {"axioms", checks}};
}

json to_json(const GaugeResult& r) {
    json j = {{"ok", r.ok}, {"singular", r.singular}, {"det", to_json(r.det)}};
    if (r.pi_prime)
        j["pi_prime"] = to_json(*r.pi_prime);
    return j;
}

namespace {

const json& need(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end())
        throw InputError(std::string("missing key '") + key + "' in JSON object");
    return *it;
}

} // namespace

Polynomial polynomial_from_json(const json& j) {
    int dim = need(j, "dim").get<int>();
    Polynomial p(dim);
    for (const auto& t : need(j, "terms")) {
        auto exp = need(t, "exp").get<std::vector<uint32_t>>();
        p.add_term(exp, Rational::parse(need(t, "coef").get<std::string>()));
    }
    return p;
}

RationalFunction ratfun_from_json(const json& j) {
    Polynomial num = polynomial_from_json(need(j, "num"));
    if (!j.contains("den"))
        return RationalFunction(std::move(num));
    return RationalFunction(std::move(num), polynomial_from_json(j["den"]));
}

Graded graded_from_json(const json& j) {
    int dim = need(j, "dim").get<int>();
    int degree = need(j, "degree").get<int>();
    std::string kind = need(j, "kind").get<std::string>();
    if (kind != "form" && kind != "multivector")
        throw InputError("graded kind must be 'form' or 'multivector'");
    Graded g(kind == "form" ? Kind::form : Kind::multivector, dim, degree);
    for (const auto& t : need(j, "terms")) {
        auto one_based = need(t, "indices").get<std::vector<int>>();
        Graded::Indices idx;
        for (int i : one_based) {
            if (i < 1 || i > dim)
                throw InputError("graded index out of range (one-based)");
            idx.push_back(i - 1);
        }
        g.add_term(idx, ratfun_from_json(need(t, "coef")));
    }
    return g;
}

CourantSection section_from_json(const json& j) {
    Graded X = graded_from_json(need(j, "X"));
    Graded xi = graded_from_json(need(j, "xi"));
    return CourantSection{std::move(X), std::move(xi)};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("parse error in '" + path + "': " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

} // namespace tpk
