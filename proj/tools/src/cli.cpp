#include "osp/cli.hpp"

#include "osp/io.hpp"
#include "osp/pbw.hpp"
#include "osp/radverify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <thread>

namespace osp::cli {

namespace {

using io::json;

struct RunConfig {
    std::string family;
    int m = 0;
    int n = 0;
    std::string lambda;
    int max_degree = -1;
    std::string format = "json";
    std::string convention = "bracket-default";
    unsigned threads = 0;
    std::string out;

    // subcommand arguments
    std::string ops;
    std::string element;
    std::string tableau;
    std::string alpha;
    std::string beta;
    std::string directions;
    std::string appendix_case = "all";
    int max_ac = 4;
    int max_height = 8;
    int samples = 100;
    std::uint64_t seed = 1;
    std::size_t cap = kDefaultVertexCap;
    bool walk = false;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

AlgebraType algebra(const RunConfig& cfg) {
    if (cfg.family.empty()) throw UsageError("--type is required");
    try {
        return AlgebraType::parse(cfg.family, cfg.m, cfg.n);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

HookPartition partition(const RunConfig& cfg, int m, int n) {
    try {
        return hook_partition(io::parse_int_list(cfg.lambda), m, n);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--lambda: ") + e.what());
    }
}

int degree(const RunConfig& cfg, int fallback) {
    if (cfg.max_degree < 0) {
        if (fallback < 0) throw UsageError("--max-degree is required");
        return fallback;
    }
    return cfg.max_degree;
}

unsigned threads(const RunConfig& cfg) {
    if (cfg.threads) return cfg.threads;
    return std::max(1u, std::thread::hardware_concurrency());
}

BracketConvention convention(const RunConfig& cfg) {
    return cfg.convention == "bracket-odd-braces" ? BracketConvention::odd_braces : BracketConvention::standard;
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (cfg.format == f) return;
    throw UsageError("--format " + cfg.format + " is not available for this command");
}

json read_json_arg(const std::string& arg, const char* what) {
    std::string text = arg;
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw UsageError(std::string(what) + ": cannot read " + arg.substr(1));
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw UsageError(std::string(what) + ": " + e.what());
    }
}

struct OpStep {
    bool raise = false;
    int i = 0;
};

// "f1 f1 e3", "f4^6", "f1,e0": evaluated left to right
std::vector<OpStep> parse_ops(const std::string& s) {
    static const std::regex tok(R"(([ef])(\d+)(?:\^(\d+))?)");
    std::vector<OpStep> out;
    std::string cleaned = s;
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    std::istringstream is(cleaned);
    std::string t;
    while (is >> t) {
        std::smatch mt;
        if (!std::regex_match(t, mt, tok)) throw UsageError("bad operator \"" + t + "\" (expected f<i>, e<i>, f<i>^k)");
        int reps = mt[3].matched ? std::stoi(mt[3].str()) : 1;
        for (int r = 0; r < reps; ++r) out.push_back({mt[1].str() == "e", std::stoi(mt[2].str())});
    }
    return out;
}

std::string ops_string(const std::vector<OpStep>& ops) {
    std::string s;
    for (const auto& o : ops) s += (s.empty() ? "" : " ") + std::string(o.raise ? "e" : "f") + std::to_string(o.i);
    return s;
}

void check_index(int i, int lo, int hi) {
    if (i < lo || i >= hi)
        throw UsageError("operator index " + std::to_string(i) + " outside " + std::to_string(lo) + ".." +
                         std::to_string(hi - 1));
}

struct Output {
    std::string text;
    int code = ok;
};

Output emit(const RunConfig& cfg, const json& j, const std::string& text, int code) {
    if (cfg.format == "text") return {text, code};
    return {j.dump(2) + "\n", code};
}

std::string weight_text(const Weight& w) {
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < w.size(); ++k) os << (k ? "," : "") << w[k];
    os << ')';
    return os.str();
}

// roots

Output cmd_roots(const RunConfig& cfg) {
    require_format(cfg, {"json", "text"});
    AlgebraType g = algebra(cfg);
    RootSystem rs(g);
    std::ostringstream os;
    os << g.name() << ": " << rs.n_rad() << " radical roots\n    ";
    for (int j = 1; j <= g.N(); ++j) os << std::setw(4) << j;
    os << '\n';
    for (int i = 1; i <= g.N(); ++i) {
        os << std::setw(4) << i;
        for (int j = 1; j <= g.N(); ++j) {
            int k = j >= i ? rs.rad_index(i, j) : -1;
            if (k < 0) os << std::setw(4) << '.';
            else os << std::setw(4) << k;
        }
        os << '\n';
    }
    for (int k = 0; k < rs.n_rad(); ++k) {
        const Root& r = rs.rad(k);
        os << std::setw(3) << k << "  (" << r.i << ',' << r.j << ")  " << parity_name(r.parity) << "  ht "
           << r.ht << "  " << weight_text(r.weight) << '\n';
    }
    json j{{"algebra", g.name()}, {"count", rs.n_rad()}, {"roots", io::roots_to_json(rs)}};
    return emit(cfg, j, os.str(), ok);
}

// commutator

int root_arg(const RootSystem& rs, const std::string& s, const char* flag) {
    std::vector<int> v;
    try {
        v = io::parse_int_list(s);
    } catch (const std::exception&) {
        throw UsageError(std::string(flag) + " must be i,j");
    }
    if (v.size() != 2) throw UsageError(std::string(flag) + " must be i,j");
    int k = rs.rad_index(v[0], v[1]);
    if (k < 0) throw UsageError(std::string(flag) + " (" + s + ") is not a radical root");
    return k;
}

std::string root_label(const RootSystem& rs, int k) {
    return "(" + std::to_string(rs.rad(k).i) + "," + std::to_string(rs.rad(k).j) + ")";
}

Output cmd_commutator(const RunConfig& cfg) {
    require_format(cfg, {"json", "text"});
    AlgebraType g = algebra(cfg);
    PBWAlgebra A(g, convention(cfg));
    const RootSystem& rs = A.roots();
    int a = root_arg(rs, cfg.alpha, "--alpha");
    int b = root_arg(rs, cfg.beta, "--beta");
    if (a >= b) throw UsageError("--alpha must precede --beta in the PBW order");
    json terms = json::array();
    std::ostringstream os;
    os << "[f" << root_label(rs, b) << ", f" << root_label(rs, a) << "]_q =";
    auto table = A.commutator_table(a, b);
    if (table.empty()) os << " 0";
    for (const auto& t : table) {
        json roots = json::array();
        os << (&t == &table.front() ? " " : " + ") << '(' << t.c.to_string() << ')';
        for (int r : t.roots) {
            roots.push_back(json{rs.rad(r).i, rs.rad(r).j});
            os << " f" << root_label(rs, r);
        }
        terms.push_back(json{{"coeff", t.c.to_string()}, {"scalar", io::scalar_to_json(t.c)}, {"roots", roots}});
    }
    CheckResult c = verify_commutator_pair(A, a, b);
    os << "\n" << (c.pass ? "pass" : "FAIL") << ": " << c.method << "\n";
    json j{{"algebra", g.name()},
           {"convention", cfg.convention},
           {"alpha", json{rs.rad(a).i, rs.rad(a).j}},
           {"beta", json{rs.rad(b).i, rs.rad(b).j}},
           {"terms", terms},
           {"check", json{{"name", c.name}, {"pass", c.pass}, {"method", c.method}, {"detail", c.detail}}}};
    return emit(cfg, j, os.str(), c.pass ? ok : verification_failed);
}

// crystal-op

template <class Crystal, class Elem>
json string_data(const Crystal& C, const Elem& x, int lo, int hi) {
    json out = json::array();
    for (int i = lo; i < hi; ++i) {
        auto [eps, phi] = C.eps_phi(i, x);
        out.push_back(json{{"i", i}, {"eps", eps}, {"phi", phi}});
    }
    return out;
}

template <class Crystal, class Elem>
std::optional<Elem> apply_ops(const Crystal& C, Elem x, const std::vector<OpStep>& ops, int& vanished) {
    vanished = -1;
    for (std::size_t k = 0; k < ops.size(); ++k) {
        auto y = ops[k].raise ? C.e(ops[k].i, x) : C.f(ops[k].i, x);
        if (!y) {
            vanished = static_cast<int>(k);
            return std::nullopt;
        }
        x = *y;
    }
    return x;
}

Output cmd_crystal_op(const RunConfig& cfg) {
    require_format(cfg, {"json", "text"});
    AlgebraType g = algebra(cfg);
    auto ops = parse_ops(cfg.ops);
    int vanished = -1;
    json j{{"algebra", g.name()}, {"ops", ops_string(ops)}};
    std::ostringstream os;
    if (cfg.lambda.empty()) {
        RadCrystal C(g);
        for (const auto& o : ops) check_index(o.i, 0, g.N());
        RadArray x = C.zero();
        if (!cfg.element.empty()) {
            try {
                x = io::rad_from_json(C, read_json_arg(cfg.element, "--element"));
            } catch (const UsageError&) {
                throw;
            } catch (const std::exception& e) {
                throw UsageError(std::string("--element: ") + e.what());
            }
        }
        auto y = apply_ops(C, x, ops, vanished);
        j["input"] = io::rad_to_json(C, x);
        j["string_data"] = string_data(C, x, 0, g.N());
        j["result"] = y ? io::rad_to_json(C, *y) : json(nullptr);
        if (y) {
            j["weight"] = io::weight_to_json(C.weight(*y));
            j["degree"] = C.degree(*y);
        } else {
            j["vanished_at"] = vanished;
        }
        os << C.to_string(x) << " -> " << (y ? C.to_string(*y) : std::string("0")) << '\n';
    } else {
        PVCrystal P(g, partition(cfg, g.m, g.n));
        for (const auto& o : ops) check_index(o.i, 0, P.rank());
        PVElement x = P.highest();
        if (!cfg.element.empty()) {
            try {
                x = io::pv_from_json(P, read_json_arg(cfg.element, "--element"));
            } catch (const UsageError&) {
                throw;
            } catch (const std::exception& e) {
                throw UsageError(std::string("--element: ") + e.what());
            }
        }
        auto y = apply_ops(P, x, ops, vanished);
        j["lambda"] = P.lambda().parts;
        j["input"] = io::pv_to_json(P, x);
        j["string_data"] = string_data(P, x, 0, P.rank());
        j["result"] = y ? io::pv_to_json(P, *y) : json(nullptr);
        if (y) {
            j["weight"] = io::weight_to_json(P.weight(*y));
            j["degree"] = P.rad().degree(y->rad);
        } else {
            j["vanished_at"] = vanished;
        }
        os << P.to_string(x) << " -> " << (y ? P.to_string(*y) : std::string("0")) << '\n';
    }
    return emit(cfg, j, os.str(), ok);
}

// tableau

Output cmd_tableau(const RunConfig& cfg) {
    require_format(cfg, {"json", "text"});
    if (cfg.m < 1 || cfg.n < 1) throw UsageError("--m and --n must be positive");
    HookPartition lam = partition(cfg, cfg.m, cfg.n);
    HookCrystal H(cfg.m, cfg.n);
    auto ops = parse_ops(cfg.ops);
    for (const auto& o : ops) check_index(o.i, 1, H.N());
    HookTableau t = genuine_hw(cfg.m, cfg.n, lam);
    if (!cfg.tableau.empty()) {
        try {
            t = io::tableau_from_json(cfg.m, cfg.n, read_json_arg(cfg.tableau, "--tableau"));
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception& e) {
            throw UsageError(std::string("--tableau: ") + e.what());
        }
        if (!(t.shape == lam)) throw UsageError("--tableau shape differs from --lambda");
    }
    int vanished = -1;
    auto y = apply_ops(H, t, ops, vanished);
    json j{{"m", cfg.m},
           {"n", cfg.n},
           {"lambda", lam.parts},
           {"ops", ops_string(ops)},
           {"input", io::tableau_to_json(t)},
           {"string_data", string_data(H, t, 1, H.N())},
           {"result", y ? io::tableau_to_json(*y) : json(nullptr)}};
    if (y) j["weight"] = io::weight_to_json(H.weight(*y));
    else j["vanished_at"] = vanished;
    std::string text = t.to_string() + " -> " + (y ? y->to_string() : std::string("0")) + "\n";
    return emit(cfg, j, text, ok);
}

// graph

Output cmd_graph(const RunConfig& cfg) {
    require_format(cfg, {"json", "text", "dot"});
    AlgebraType g = algebra(cfg);
    HookPartition lam = partition(cfg, g.m, g.n);
    CrystalGraph G = build_graph(g, lam, degree(cfg, -1), threads(cfg), cfg.cap);
    if (cfg.format == "dot") return {graph_to_dot(G), ok};
    std::ostringstream os;
    PVCrystal P(g, lam);
    os << g.name() << " lambda=" << lam.to_string() << " D=" << G.max_degree << ": " << G.vertices.size()
       << " vertices, " << G.edges.size() << " edges\n";
    for (const auto& e : G.edges)
        os << P.to_string(G.vertices[e.src]) << " -" << e.color << "-> " << P.to_string(G.vertices[e.dst]) << '\n';
    return emit(cfg, io::graph_to_json(G), os.str(), ok);
}

// hw-scan

Output cmd_hw_scan(const RunConfig& cfg) {
    require_format(cfg, {"json", "text"});
    AlgebraType g = algebra(cfg);
    HookPartition lam = partition(cfg, g.m, g.n);
    int D = degree(cfg, -1);
    PVCrystal P(g, lam);
    ConnectivityReport r = check_connectivity(g, lam, D, threads(cfg), cfg.cap, cfg.walk);
    bool top_only = r.unique_source() && r.sources.front() == P.highest();
    json sources = json::array();
    std::ostringstream os;
    os << g.name() << " lambda=" << lam.to_string() << " D=" << D << ": " << r.vertices << " vertices, "
       << r.sources.size() << " source(s)\n";
    for (const auto& s : r.sources) {
        json v{{"id", P.to_string(s)}};
        json body = io::pv_to_json(P, s);
        for (auto& [k, val] : body.items()) v[k] = val;
        sources.push_back(v);
        os << "  " << P.to_string(s) << '\n';
    }
    os << "greedy reduction failures: " << r.greedy_failures << '\n';
    if (cfg.walk) os << "vertices with no path to the top: " << r.disconnected << '\n';
    json j{{"algebra", g.name()},  {"lambda", lam.parts},           {"max_degree", D},
           {"vertices", r.vertices}, {"sources", sources},           {"unique_source", top_only},
           {"greedy_failures", r.greedy_failures}};
    if (cfg.walk) j["disconnected"] = r.disconnected;
    if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
    bool pass = top_only && r.greedy_failures == 0 && r.disconnected == 0;
    j["ok"] = pass;
    return emit(cfg, j, os.str(), pass ? ok : verification_failed);
}

// decompose

Output cmd_decompose(const RunConfig& cfg) {
    require_format(cfg, {"json", "text"});
    AlgebraType g = algebra(cfg);
    int D = degree(cfg, -1);
    RadCrystal C(g);
    BranchingReport r = l_branching(g, D, threads(cfg));
    json mult = json::array();
    std::ostringstream os;
    os << g.name() << " D=" << D << '\n';
    for (const auto& [mu, k] : r.multiplicity) {
        mult.push_back(json{{"mu", mu.parts}, {"multiplicity", k}});
        os << "  " << mu.to_string() << " x" << k << '\n';
    }
    json fake = json::array();
    for (const auto& x : r.fake) {
        json v = io::rad_to_json(C, x);
        v["weight"] = io::weight_to_json(C.weight(x));
        fake.push_back(v);
        os << "  non-genuine l-highest: " << C.to_string(x) << '\n';
    }
    json missing = json::array();
    for (const auto& mu : r.expected)
        if (!r.multiplicity.count(mu)) missing.push_back(mu.parts);
    json extra = json::array();
    for (const auto& [mu, k] : r.multiplicity)
        if (!std::binary_search(r.expected.begin(), r.expected.end(), mu)) extra.push_back(mu.parts);
    os << "expected " << r.expected.size() << ", found " << r.multiplicity.size() << ": "
       << (r.ok() ? "match" : "MISMATCH") << '\n';
    json j{{"algebra", g.name()}, {"max_degree", D},  {"multiplicities", mult}, {"non_genuine", fake},
           {"expected_count", r.expected.size()}, {"missing", missing}, {"extra", extra}, {"ok", r.ok()}};
    return emit(cfg, j, os.str(), r.ok() ? ok : verification_failed);
}

// verify

std::string report_text(const Report& r) {
    std::ostringstream os;
    for (const auto& c : r.checks)
        if (!c.pass) os << "FAIL " << c.name << ": " << c.detail << '\n';
    os << r.suite << ' ' << r.algebra << ": " << r.passed() << '/' << r.checks.size() << " passed\n";
    return os.str();
}

Output emit_report(const RunConfig& cfg, const Report& r) {
    return emit(cfg, io::report_to_json(r), report_text(r), r.ok() ? ok : verification_failed);
}

Output cmd_verify(const RunConfig& cfg, const std::string& which) {
    require_format(cfg, {"json", "text"});
    if (which == "omega") {
        if (cfg.m < 1 || cfg.n < 1) throw UsageError("--m and --n must be positive");
        if (!cfg.family.empty() && cfg.family != "c" && cfg.family != "C")
            throw UsageError("verify omega takes the c_{m|n} side: --type c");
        return emit_report(cfg, verify_omega(cfg.m, cfg.n, cfg.samples, degree(cfg, 5), cfg.seed));
    }
    if (which == "appendix") {
        Report all{"appendix", "three-root blocks", {}};
        const auto& cases = appendix_cases();
        if (cfg.appendix_case != "all" && std::find(cases.begin(), cases.end(), cfg.appendix_case) == cases.end())
            throw UsageError("unknown appendix case " + cfg.appendix_case);
        for (const auto& c : cases) {
            if (cfg.appendix_case != "all" && c != cfg.appendix_case) continue;
            Report r = verify_appendix(c, cfg.max_ac);
            for (auto& chk : r.checks) all.add(std::move(chk));
        }
        return emit_report(cfg, all);
    }
    AlgebraType g = algebra(cfg);
    PBWAlgebra A(g, convention(cfg));
    if (which == "commutators") return emit_report(cfg, verify_commutators(A));
    if (which == "adjoint") return emit_report(cfg, verify_adjoint(A));
    if (which == "pbw") return emit_report(cfg, verify_pbw(A, degree(cfg, 6), cfg.max_height));
    std::vector<int> dirs;
    if (!cfg.directions.empty()) dirs = io::parse_int_list(cfg.directions);
    for (int i : dirs) check_index(i, 1, g.N());
    return emit_report(cfg, verify_lattice(A, degree(cfg, 5), dirs));
}

enum Common : unsigned {
    kType = 1, kMN = 2, kLambda = 4, kDegree = 8, kConvention = 16, kThreads = 32
};

void add_common(CLI::App* sub, RunConfig& cfg, unsigned which) {
    if (which & kType)
        sub->add_option("--type", cfg.family, "algebra family")->check(CLI::IsMember({"b", "c", "d"}));
    if (which & kMN) {
        sub->add_option("--m", cfg.m, "even rank m")->check(CLI::NonNegativeNumber);
        sub->add_option("--n", cfg.n, "odd rank n")->check(CLI::NonNegativeNumber);
    }
    if (which & kLambda) sub->add_option("--lambda", cfg.lambda, "hook partition, comma separated");
    if (which & kDegree) sub->add_option("--max-degree", cfg.max_degree, "degree truncation")->check(CLI::NonNegativeNumber);
    if (which & kConvention)
        sub->add_option("--convention", cfg.convention, "bracket normalisation")
            ->check(CLI::IsMember({"bracket-default", "bracket-odd-braces"}));
    if (which & kThreads) {
        sub->add_option("--threads", cfg.threads, "worker threads (default: all cores)");
        sub->add_option("--vertex-cap", cfg.cap, "refuse truncations with more vertices");
    }
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text", "dot"}));
    sub->add_option("--out", cfg.out, "write the report to a file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"exact crystal and PBW computations for U_q(osp) radicals", "osp"};
    app.require_subcommand(1);

    auto* roots = app.add_subcommand("roots", "ordered radical roots");
    add_common(roots, cfg, kType | kMN);

    auto* comm = app.add_subcommand("commutator", "q-commutator of two radical root vectors");
    add_common(comm, cfg, kType | kMN | kConvention);
    comm->add_option("--alpha", cfg.alpha, "earlier root i,j")->required();
    comm->add_option("--beta", cfg.beta, "later root k,l")->required();

    auto* cop = app.add_subcommand("crystal-op", "apply crystal operators to an exponent array (or c (x) T)");
    add_common(cop, cfg, kType | kMN | kLambda);
    cop->add_option("--ops", cfg.ops, "operators such as \"f1 f1 e3\" or \"f4^6\", left to right")->required();
    cop->add_option("--element", cfg.element, "JSON element, or @file");

    auto* tab = app.add_subcommand("tableau", "apply crystal operators to a hook tableau");
    add_common(tab, cfg, kMN | kLambda);
    tab->add_option("--ops", cfg.ops, "operators, left to right")->required();
    tab->add_option("--tableau", cfg.tableau, "JSON rows, or @file (default: H_lambda)");

    auto* graph = app.add_subcommand("graph", "truncated crystal graph of B(N) (x) B(V(lambda))");
    add_common(graph, cfg, kType | kMN | kLambda | kDegree | kThreads);

    auto* hw = app.add_subcommand("hw-scan", "elements killed by every e~_i in the truncation");
    add_common(hw, cfg, kType | kMN | kLambda | kDegree | kThreads);
    hw->add_flag("--walk", cfg.walk, "also check that every vertex has a path to the top");

    auto* dec = app.add_subcommand("decompose", "l-highest elements of B(N) by shape");
    add_common(dec, cfg, kType | kMN | kDegree | kThreads);

    auto* ver = app.add_subcommand("verify", "verification suites");
    ver->require_subcommand(1);
    std::string which;
    for (const char* name : {"commutators", "adjoint", "pbw", "lattice", "appendix", "omega"}) {
        auto* s = ver->add_subcommand(name);
        s->callback([&which, name] { which = name; });
        add_common(s, cfg, kType | kMN | kDegree | kConvention);
        if (std::string(name) == "pbw")
            s->add_option("--max-height", cfg.max_height, "height bound for the root-vector check");
        if (std::string(name) == "lattice") s->add_option("--directions", cfg.directions, "subset of 1..m+n-1");
        if (std::string(name) == "appendix") {
            s->add_option("--case", cfg.appendix_case, "one block case, or all");
            s->add_option("--max-ac", cfg.max_ac, "bound on a and c");
        }
        if (std::string(name) == "omega") {
            s->add_option("--samples", cfg.samples, "number of random products");
            s->add_option("--seed", cfg.seed, "random seed");
        }
    }

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    Output result;
    try {
        if (*roots) result = cmd_roots(cfg);
        else if (*comm) result = cmd_commutator(cfg);
        else if (*cop) result = cmd_crystal_op(cfg);
        else if (*tab) result = cmd_tableau(cfg);
        else if (*graph) result = cmd_graph(cfg);
        else if (*hw) result = cmd_hw_scan(cfg);
        else if (*dec) result = cmd_decompose(cfg);
        else result = cmd_verify(cfg, which);
    } catch (const UsageError& e) {
        err << "osp: " << e.what() << '\n';
        return usage_error;
    } catch (const ResourceError& e) {
        err << "osp: resource limit: " << e.what() << '\n';
        return resource_error;
    } catch (const std::invalid_argument& e) {
        err << "osp: " << e.what() << '\n';
        return usage_error;
    }

    if (cfg.out.empty()) {
        out << result.text;
    } else {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) {
            err << "osp: cannot write " << cfg.out << '\n';
            return usage_error;
        }
        f << result.text;
    }
    return result.code;
}

}  // namespace osp::cli
