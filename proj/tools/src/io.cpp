#include "osp/io.hpp"

#include <sstream>
#include <stdexcept>

namespace osp::io {

namespace {

json terms_to_json(const std::vector<std::pair<int, mpz_class>>& terms) {
    json out = json::array();
    for (const auto& [e, c] : terms) {
        if (c.fits_slong_p()) out.push_back({e, c.get_si()});
        else out.push_back({e, c.get_str()});
    }
    return out;
}

std::vector<std::pair<int, mpz_class>> terms_from_json(const json& j) {
    std::vector<std::pair<int, mpz_class>> out;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2) throw std::invalid_argument("scalar term must be [exp, coeff]");
        mpz_class c = t[1].is_string() ? mpz_class(t[1].get<std::string>()) : mpz_class(t[1].get<long>());
        out.emplace_back(t[0].get<int>(), c);
    }
    return out;
}

std::pair<int, int> parse_pair(const std::string& key) {
    auto v = parse_int_list(key);
    if (v.size() != 2) throw std::invalid_argument("root key must be \"i,j\", got \"" + key + "\"");
    return {v[0], v[1]};
}

}  // namespace

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, ',')) {
        std::size_t a = tok.find_first_not_of(" \t()");
        std::size_t b = tok.find_last_not_of(" \t()");
        if (a == std::string::npos) continue;
        tok = tok.substr(a, b - a + 1);
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("not an integer: \"" + tok + "\"");
        out.push_back(v);
    }
    return out;
}

json scalar_to_json(const Scalar& s) {
    return json{{"num", terms_to_json(s.num_terms())}, {"den", terms_to_json(s.den_terms())}};
}

Scalar scalar_from_json(const json& j) {
    return Scalar::from_terms(terms_from_json(j.at("num")), terms_from_json(j.at("den")));
}

json weight_to_json(const Weight& w) { return json(w); }

json rad_to_json(const RadCrystal& C, const RadArray& x) {
    json c = json::object();
    const RootSystem& rs = C.roots();
    for (int k = 0; k < C.n_rad(); ++k) {
        int v = x.c[static_cast<std::size_t>(k)];
        if (v) c[std::to_string(rs.rad(k).i) + "," + std::to_string(rs.rad(k).j)] = v;
    }
    return json{{"c", c}};
}

RadArray rad_from_json(const RadCrystal& C, const json& j) {
    const json& c = j.contains("c") ? j.at("c") : j;
    if (!c.is_object()) throw std::invalid_argument("exponent array must be an object {\"i,j\": int}");
    std::map<std::pair<int, int>, int> entries;
    for (const auto& [key, v] : c.items()) entries[parse_pair(key)] = v.get<int>();
    return C.from_pairs(entries);
}

json tableau_to_json(const HookTableau& t) { return json(t.rows); }

HookTableau tableau_from_json(int m, int n, const json& j) {
    return tableau_from_rows(j.get<std::vector<std::vector<int>>>(), m, n);
}

json pv_to_json(const PVCrystal& P, const PVElement& b) {
    json out = rad_to_json(P.rad(), b.rad);
    out["tableau"] = tableau_to_json(b.tab);
    return out;
}

PVElement pv_from_json(const PVCrystal& P, const json& j) {
    const AlgebraType& g = P.type();
    PVElement b{rad_from_json(P.rad(), j), tableau_from_json(g.m, g.n, j.at("tableau"))};
    if (!(b.tab.shape == P.lambda()))
        throw std::invalid_argument("tableau shape " + b.tab.shape.to_string() + " differs from lambda " +
                                    P.lambda().to_string());
    return b;
}

json roots_to_json(const RootSystem& rs) {
    json out = json::array();
    for (int k = 0; k < rs.n_rad(); ++k) {
        const Root& r = rs.rad(k);
        out.push_back(json{{"pos", k}, {"i", r.i}, {"j", r.j}, {"class", parity_name(r.parity)},
                           {"weight", weight_to_json(r.weight)}, {"ht", r.ht}});
    }
    return out;
}

json report_to_json(const Report& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"method", c.method}, {"detail", c.detail}});
    return json{{"suite", r.suite},        {"algebra", r.algebra},  {"total", r.checks.size()},
                {"passed", r.passed()},    {"failed", r.failed()},  {"ok", r.ok()},
                {"checks", checks}};
}

json graph_to_json(const CrystalGraph& g) {
    PVCrystal P(g.type, g.lambda);
    json vertices = json::array();
    for (std::size_t k = 0; k < g.vertices.size(); ++k) {
        json v{{"index", k}, {"id", P.to_string(g.vertices[k])}};
        json body = pv_to_json(P, g.vertices[k]);
        for (auto& [key, val] : body.items()) v[key] = val;
        vertices.push_back(v);
    }
    json edges = json::array();
    for (const auto& e : g.edges) edges.push_back(json{e.src, e.color, e.dst});
    return json{{"family", std::string(1, family_char(g.type.family))},
                {"m", g.type.m},
                {"n", g.type.n},
                {"lambda", g.lambda.parts},
                {"max_degree", g.max_degree},
                {"vertices", vertices},
                {"edges", edges}};
}

CrystalGraph graph_from_json(const json& j) {
    CrystalGraph g;
    g.type = AlgebraType::parse(j.at("family").get<std::string>(), j.at("m").get<int>(), j.at("n").get<int>());
    g.lambda = hook_partition(j.at("lambda").get<std::vector<int>>(), g.type.m, g.type.n);
    g.max_degree = j.at("max_degree").get<int>();
    PVCrystal P(g.type, g.lambda);
    for (const auto& v : j.at("vertices")) {
        if (v.at("index").get<std::size_t>() != g.vertices.size())
            throw std::invalid_argument("vertex indices must be 0, 1, 2, ...");
        g.vertices.push_back(pv_from_json(P, v));
    }
    for (const auto& e : j.at("edges")) {
        CrystalEdge edge{e.at(0).get<std::size_t>(), e.at(1).get<int>(), e.at(2).get<std::size_t>()};
        if (edge.src >= g.vertices.size() || edge.dst >= g.vertices.size())
            throw std::invalid_argument("edge endpoint out of range");
        g.edges.push_back(edge);
    }
    return g;
}

}  // namespace osp::io
