#include "lfmra/io.hpp"

#include <sstream>

namespace lfmra {

std::string vertex_name(const FieldParams& f, int idx) {
    auto e = f.elem(idx);
    std::string s;
    for (size_t i = 0; i < e.d.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(e.d[i]);
    }
    return s;
}

int vertex_parse(const FieldParams& f, const std::string& name) {
    GFElem e;
    std::stringstream ss(name);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size() || v < 0 || v >= f.p())
            throw ValidationError("bad vertex digit '" + tok + "'");
        e.d.push_back(v);
    }
    if (static_cast<int>(e.d.size()) != f.s())
        throw ValidationError("vertex '" + name + "' needs " + std::to_string(f.s()) +
                              " digits");
    return f.index(e);
}

json field_to_json(const FieldParams& f) {
    return json{{"p", f.p()}, {"s", f.s()}, {"modulus", f.modulus()}};
}

FieldParams field_from_json(const json& j) {
    return FieldParams(j.at("p").get<int>(), j.at("s").get<int>(),
                       j.at("modulus").get<std::vector<int>>());
}

json element_to_json(const FieldParams& f, const LocalElem& a) {
    json digits = json::array();
    for (int d : a.digits) digits.push_back(f.elem(d).d);
    return json{{"lo", a.lo}, {"digits", digits}};
}

LocalElem element_from_json(const FieldParams& f, const json& j) {
    std::vector<int> digits;
    for (const auto& d : j.at("digits"))
        digits.push_back(f.index(GFElem{d.get<std::vector<int>>()}));
    return make_local(j.at("lo").get<int>(), std::move(digits));
}

json character_to_json(const FieldParams& f, const Character& chi) {
    json exps = json::array();
    for (int e : chi.exps) exps.push_back(f.elem(e).d);
    return json{{"lo", chi.lo}, {"exponents", exps}};
}

Character character_from_json(const FieldParams& f, const json& j) {
    std::vector<int> exps;
    for (const auto& e : j.at("exponents"))
        exps.push_back(f.index(GFElem{e.get<std::vector<int>>()}));
    return make_character(j.at("lo").get<int>(), std::move(exps));
}

json coset_to_json(const FieldParams& f, const CosetId& c) {
    json digits = json::array();
    for (int d : c.digits) digits.push_back(vertex_name(f, d));
    return json{{"N", c.N}, {"M", c.M}, {"digits", digits}};
}

CosetId coset_from_json(const FieldParams& f, const json& j) {
    CosetId c;
    c.N = j.at("N").get<int>();
    c.M = j.at("M").get<int>();
    for (const auto& d : j.at("digits"))
        c.digits.push_back(vertex_parse(f, d.get<std::string>()));
    if (c.digits.size() != static_cast<size_t>(c.N + c.M))
        throw ValidationError("coset digits must have length N+M");
    return c;
}

json tree_to_json(const FieldParams& f, const RootedTree& t) {
    json parent = json::object();
    for (int v = 1; v < f.order(); ++v)
        parent[vertex_name(f, v)] = vertex_name(f, t.parent[v]);
    return json{{"field", field_to_json(f)}, {"parent", parent}};
}

std::pair<FieldParams, RootedTree> tree_from_json(const json& j) {
    FieldParams f = field_from_json(j.at("field"));
    std::map<int, int> parent;
    for (const auto& [k, v] : j.at("parent").items())
        parent[vertex_parse(f, k)] = vertex_parse(f, v.get<std::string>());
    RootedTree t = tree_validate(f, parent);
    return {std::move(f), std::move(t)};
}

json cyclo_to_json(const Cyclo& v) {
    return json{{"coeffs", v.coeffs()}, {"scale", v.scale()}};
}

Cyclo cyclo_from_json(int p, const json& j) {
    auto coeffs = j.at("coeffs").get<std::vector<long long>>();
    if (coeffs.size() != static_cast<size_t>(p))
        throw ValidationError("cyclotomic value needs p coefficients");
    Cyclo v(p);
    for (int i = 0; i < p; ++i)
        v = v + Cyclo::integer(p, coeffs[i]) * Cyclo::from_root(RootOfUnity{p, i});
    return v.scaled(j.at("scale").get<int>());
}

json mask_to_json(const FieldParams& f, const MaskTable& m) {
    json entries = json::array();
    for (int i = 0; i < m.q; ++i)
        for (int j2 = 0; j2 < m.q; ++j2)
            if (m.at(i, j2) >= 0)
                entries.push_back(json{{"i", vertex_name(f, i)},
                                       {"j", vertex_name(f, j2)},
                                       {"exp", m.at(i, j2)}});
    return json{{"field", field_to_json(f)}, {"entries", entries}};
}

MaskTable mask_from_json(const FieldParams& f, const json& j) {
    MaskTable m;
    m.q = f.order();
    m.lam.assign(static_cast<size_t>(m.q) * m.q, -1);
    for (const auto& e : j.at("entries")) {
        int i = vertex_parse(f, e.at("i").get<std::string>());
        int j2 = vertex_parse(f, e.at("j").get<std::string>());
        int exp = e.at("exp").get<int>();
        if (exp < 0 || exp >= f.p())
            throw ValidationError("mask exponent out of range");
        m.at(i, j2) = exp;
    }
    return m;
}

json spectrum_to_json(const FieldParams& f, const SpectrumTable& s) {
    json entries = json::array();
    for (const auto& [digits, e] : s.vals) {
        json d = json::array();
        for (int v : digits) d.push_back(vertex_name(f, v));
        entries.push_back(json{{"digits", d}, {"exp", e}});
    }
    return json{{"M", s.M}, {"entries", entries}};
}

SpectrumTable spectrum_from_json(const FieldParams& f, const json& j) {
    SpectrumTable s;
    s.M = j.at("M").get<int>();
    for (const auto& e : j.at("entries")) {
        std::vector<int> digits;
        for (const auto& d : e.at("digits"))
            digits.push_back(vertex_parse(f, d.get<std::string>()));
        if (digits.size() != static_cast<size_t>(s.M + 1))
            throw ValidationError("spectrum digits must have length M+1");
        s.vals[digits] = e.at("exp").get<int>();
    }
    return s;
}

json coeffs_to_json(const FieldParams& f, const CoeffTable& c) {
    json entries = json::array();
    for (const auto& [digits, beta] : c.beta) {
        json d = json::array();
        for (int v : digits) d.push_back(vertex_name(f, v));
        entries.push_back(json{{"digits", d}, {"beta", cyclo_to_json(beta)}});
    }
    return json{{"N", c.N}, {"entries", entries}};
}

json report_to_json(const FieldParams& f, const RootedTree& t, const Report& r) {
    json criteria = json::array();
    for (const auto& v : r.criteria)
        criteria.push_back(json{{"name", v.criterion},
                                {"pass", v.pass},
                                {"witnesses", v.witnesses},
                                {"notes", v.notes}});
    return json{{"tree", tree_to_json(f, t)},
                {"height", r.height},
                {"criteria", criteria},
                {"certified_mra", r.certified}};
}

namespace {

std::string digits_name(const FieldParams& f, const std::vector<int>& digits) {
    std::string s;
    for (size_t i = 0; i < digits.size(); ++i) {
        if (i) s += '|';
        s += vertex_name(f, digits[i]);
    }
    return s;
}

std::string cyclo_exact_string(const Cyclo& v) {
    // p-power rationals print as "n*p^-m"; anything else as the full tuple
    if (v.is_zero()) return "0";
    long long n = v.coeffs()[0];
    bool rational = true;
    for (size_t i = 1; i < v.coeffs().size(); ++i)
        if (v.coeffs()[i] != 0) rational = false;
    if (rational) {
        if (v.scale() == 0) return std::to_string(n);
        return std::to_string(n) + "*" + std::to_string(v.p()) + "^-" +
               std::to_string(v.scale());
    }
    std::string s = "coeffs=[";
    for (size_t i = 0; i < v.coeffs().size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v.coeffs()[i]);
    }
    return s + "];scale=" + std::to_string(v.scale());
}

} // namespace

json phi_to_json(const FieldParams& f, const StepFn& phi) {
    json cells = json::array();
    for (long long i = 0; i < phi.grid.size(); ++i) {
        if (phi.vals[i].is_zero()) continue;
        json d = json::array();
        for (int v : phi.grid.point(i)) d.push_back(vertex_name(f, v));
        cells.push_back(json{{"digits", d}, {"value", cyclo_to_json(phi.vals[i])}});
    }
    return json{{"field", field_to_json(f)},
                {"Nw", phi.grid.Nw},
                {"M", phi.grid.M},
                {"cells", cells}};
}

std::string phi_to_csv(const FieldParams& f, const StepFn& phi) {
    std::string out = "digits,value_re_exact\n";
    for (long long i = 0; i < phi.grid.size(); ++i)
        out += digits_name(f, phi.grid.point(i)) + "," +
               cyclo_exact_string(phi.vals[i]) + "\n";
    return out;
}

LambdaFile lambdas_from_json(const FieldParams& f, const json& j) {
    LambdaFile out;
    for (const auto& [k, v] : j.items()) {
        int vert = vertex_parse(f, k);
        if (v.is_object()) {
            out.phases[vert] = v.at("phase").get<double>();
            out.floating = true;
        } else {
            out.exact[vert] = v.get<int>();
        }
    }
    return out;
}

} // namespace lfmra
