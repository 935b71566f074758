#include "osp/pvcrystal.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

namespace osp {
namespace {

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body) {
    const unsigned t = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (t == 1) {
        for (std::size_t k = 0; k < n; ++k) body(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < t; ++w)
        pool.emplace_back([&] {
            for (std::size_t k = next++; k < n; k = next++) body(k);
        });
    for (std::thread& th : pool) th.join();
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

// closure of x under f~_i and e~_i for i in 1..rank-1
template <class Crystal, class Elem>
std::set<Elem> closure(const Crystal& C, int rank, const Elem& x) {
    std::set<Elem> seen{x};
    std::deque<Elem> queue{x};
    while (!queue.empty()) {
        Elem y = queue.front();
        queue.pop_front();
        for (int i = 1; i < rank; ++i)
            for (const std::optional<Elem>& z : {C.f(i, y), C.e(i, y)})
                if (z && seen.insert(*z).second) queue.push_back(*z);
    }
    return seen;
}

}  // namespace

PVCrystal::PVCrystal(const AlgebraType& g, const HookPartition& lambda)
    : rad_(g), tab_(g.m, g.n), lambda_(hook_partition(lambda.parts, g.m, g.n)) {}

PVElement PVCrystal::highest() const { return PVElement{rad_.zero(), genuine_hw(type().m, type().n, lambda_)}; }

Weight PVCrystal::weight(const PVElement& b) const { return rad_.weight(b.rad) + tab_.weight(b.tab); }

std::string PVCrystal::to_string(const PVElement& b) const {
    return rad_.to_string(b.rad) + " (x) " + (b.tab.rows.empty() ? std::string("()") : b.tab.to_string());
}

int PVCrystal::pick(int i, const PVElement& b, bool raise) const {
    if (i == 0) return 0;
    const Regime reg = rad_.regime(i);
    std::vector<FactorStat> st(2);
    if (reg == Regime::odd) {
        const Weight& am = rad_.roots().simple_roots()[static_cast<std::size_t>(type().m)];
        st[0].pairing = rad_.roots().bilinear(rad_.weight(b.rad), am);
        st[1].pairing = rad_.roots().bilinear(tab_.weight(b.tab), am);
    } else {
        auto [e0, p0] = rad_.eps_phi(i, b.rad);
        st[0].eps = e0;
        st[0].phi = p0;
        if (!b.tab.rows.empty()) {
            auto [e1, p1] = tab_.eps_phi(i, b.tab);
            st[1].eps = e1;
            st[1].phi = p1;
        }
    }
    SignaturePick p = signature_rule(reg, st);
    return raise ? p.e_factor : p.f_factor;
}

std::optional<PVElement> PVCrystal::f(int i, const PVElement& b) const {
    int k = pick(i, b, false);
    if (k < 0) return std::nullopt;
    if (k == 0) {
        std::optional<RadArray> c = rad_.f(i, b.rad);
        if (!c) return std::nullopt;
        return PVElement{*c, b.tab};
    }
    if (b.tab.rows.empty()) return std::nullopt;
    std::optional<HookTableau> t = tab_.f(i, b.tab);
    if (!t) return std::nullopt;
    return PVElement{b.rad, *t};
}

std::optional<PVElement> PVCrystal::e(int i, const PVElement& b) const {
    int k = pick(i, b, true);
    if (k < 0) return std::nullopt;
    if (k == 0) {
        std::optional<RadArray> c = rad_.e(i, b.rad);
        if (!c) return std::nullopt;
        return PVElement{*c, b.tab};
    }
    if (b.tab.rows.empty()) return std::nullopt;
    std::optional<HookTableau> t = tab_.e(i, b.tab);
    if (!t) return std::nullopt;
    return PVElement{b.rad, *t};
}

std::pair<int, int> PVCrystal::eps_phi(int i, const PVElement& b) const {
    if (i == 0) return rad_.eps_phi(0, b.rad);
    int eps = 0, phi = 0;
    for (std::optional<PVElement> x = e(i, b); x; x = e(i, *x)) ++eps;
    for (std::optional<PVElement> x = f(i, b); x; x = f(i, *x)) ++phi;
    return {eps, phi};
}

std::vector<PVElement> truncated_vertices(const PVCrystal& P, int max_degree, std::size_t cap) {
    std::vector<RadArray> rads = P.rad().enumerate(max_degree);
    std::vector<HookTableau> tabs = enumerate_sst(P.type().m, P.type().n, P.lambda());
    if (tabs.empty()) tabs.push_back(HookTableau{P.lambda(), {}});
    const std::size_t total = rads.size() * tabs.size();
    if (total > cap)
        throw ResourceError("truncated crystal has " + std::to_string(total) + " vertices, above the cap of " +
                            std::to_string(cap));
    std::vector<PVElement> out;
    out.reserve(total);
    for (const RadArray& c : rads)
        for (const HookTableau& t : tabs) out.push_back(PVElement{c, t});
    return out;
}

CrystalGraph build_graph(const AlgebraType& g, const HookPartition& lambda, int max_degree, unsigned threads,
                         std::size_t cap) {
    PVCrystal P(g, lambda);
    CrystalGraph G;
    G.type = g;
    G.lambda = P.lambda();
    G.max_degree = max_degree;
    G.vertices = truncated_vertices(P, max_degree, cap);
    std::map<PVElement, std::size_t> index;
    for (std::size_t k = 0; k < G.vertices.size(); ++k) index.emplace(G.vertices[k], k);
    std::vector<std::vector<CrystalEdge>> local(G.vertices.size());
    parallel_for(G.vertices.size(), threads, [&](std::size_t k) {
        for (int i = 0; i < P.rank(); ++i) {
            std::optional<PVElement> t = P.f(i, G.vertices[k]);
            if (!t) continue;
            auto it = index.find(*t);
            if (it != index.end()) local[k].push_back(CrystalEdge{k, i, it->second});
        }
    });
    for (auto& v : local) G.edges.insert(G.edges.end(), v.begin(), v.end());
    return G;
}

std::string graph_to_dot(const CrystalGraph& graph) {
    PVCrystal P(graph.type, graph.lambda);
    std::ostringstream os;
    os << "digraph crystal {\n";
    os << "  label=" << quote(graph.type.name() + " lambda=" + graph.lambda.to_string() +
                             " D=" + std::to_string(graph.max_degree))
       << ";\n";
    for (std::size_t k = 0; k < graph.vertices.size(); ++k)
        os << "  v" << k << " [label=" << quote(P.to_string(graph.vertices[k])) << "];\n";
    for (const CrystalEdge& e : graph.edges)
        os << "  v" << e.src << " -> v" << e.dst << " [label=\"" << e.color << "\"];\n";
    os << "}\n";
    return os.str();
}

std::vector<PVElement> hw_scan(const AlgebraType& g, const HookPartition& lambda, int max_degree, unsigned threads,
                               std::size_t cap) {
    PVCrystal P(g, lambda);
    std::vector<PVElement> verts = truncated_vertices(P, max_degree, cap);
    std::vector<char> hw(verts.size(), 0);
    parallel_for(verts.size(), threads, [&](std::size_t k) {
        for (int i = 0; i < P.rank(); ++i)
            if (P.e(i, verts[k])) return;
        hw[k] = 1;
    });
    std::vector<PVElement> out;
    for (std::size_t k = 0; k < verts.size(); ++k)
        if (hw[k]) out.push_back(verts[k]);
    return out;
}

PVElement greedy_reduce(const PVCrystal& P, const PVElement& b) {
    PVElement cur = b;
    // every e~ raises the weight, so the walk is bounded by the depth of the crystal
    for (std::size_t steps = 0; steps < 1000000; ++steps) {
        bool moved = false;
        for (int i = 0; i < P.rank() && !moved; ++i)
            if (std::optional<PVElement> x = P.e(i, cur)) {
                cur = *x;
                moved = true;
            }
        if (!moved) return cur;
    }
    throw std::runtime_error("greedy reduction did not terminate");
}

std::vector<PVElement> l_component(const PVCrystal& P, const PVElement& b) {
    std::set<PVElement> s = closure(P, P.rank(), b);
    return {s.begin(), s.end()};
}

namespace {

// walk of connects_to_highest; every element visited on a successful walk is recorded in good
bool walk_to_highest(const PVCrystal& P, const PVElement& b, std::set<PVElement>& good) {
    const PVElement top = P.highest();
    std::vector<std::set<PVElement>> seen;
    PVElement cur = b;
    bool ok = false;
    // e~_0 lowers |wt c|, which l-moves preserve, so the walk is finite
    for (;;) {
        seen.push_back(closure(P, P.rank(), cur));
        const std::set<PVElement>& comp = seen.back();
        if (comp.count(top) || std::any_of(comp.begin(), comp.end(), [&](const PVElement& x) {
                return good.count(x) > 0;
            })) {
            ok = true;
            break;
        }
        std::optional<PVElement> next;
        for (const PVElement& x : comp)
            if ((next = P.e(0, x))) break;
        if (!next) break;
        cur = *next;
    }
    if (ok)
        for (const auto& comp : seen) good.insert(comp.begin(), comp.end());
    return ok;
}

}  // namespace

bool connects_to_highest(const PVCrystal& P, const PVElement& b) {
    std::set<PVElement> good;
    return walk_to_highest(P, b, good);
}

ConnectivityReport check_connectivity(const AlgebraType& g, const HookPartition& lambda, int max_degree,
                                      unsigned threads, std::size_t cap, bool walk) {
    PVCrystal P(g, lambda);
    std::vector<PVElement> verts = truncated_vertices(P, max_degree, cap);
    const PVElement top = P.highest();
    std::vector<char> hw(verts.size(), 0);
    std::vector<PVElement> ends(verts.size());
    parallel_for(verts.size(), threads, [&](std::size_t k) {
        bool is_hw = true;
        for (int i = 0; i < P.rank() && is_hw; ++i)
            if (P.e(i, verts[k])) is_hw = false;
        hw[k] = is_hw ? 1 : 0;
        ends[k] = greedy_reduce(P, verts[k]);
    });
    ConnectivityReport r;
    r.vertices = verts.size();
    // every vertex reaches its greedy end by e~ moves, so only the ends need a walk
    std::map<PVElement, bool> end_ok;
    std::set<PVElement> good;
    for (std::size_t k = 0; k < verts.size(); ++k) {
        if (hw[k]) r.sources.push_back(verts[k]);
        if (!(ends[k] == top)) {
            if (r.first_failure.empty()) r.first_failure = "greedy reduction stops early from " + P.to_string(verts[k]);
            ++r.greedy_failures;
        }
        if (!walk) continue;
        auto it = end_ok.find(ends[k]);
        if (it == end_ok.end()) it = end_ok.emplace(ends[k], walk_to_highest(P, ends[k], good)).first;
        if (!it->second) {
            if (r.first_failure.empty()) r.first_failure = "no path to the top from " + P.to_string(verts[k]);
            ++r.disconnected;
        }
    }
    return r;
}

std::optional<HookPartition> genuine_shape(const RadCrystal& C, const RadArray& c) {
    const AlgebraType& g = C.type();
    const int N = C.roots().N();
    for (int i = 1; i < N; ++i)
        if (C.e(i, c)) return std::nullopt;
    std::optional<HookPartition> mu = partition_of_weight(g.m, g.n, C.weight(c));
    if (!mu) return std::nullopt;
    HookCrystal H(g.m, g.n);
    // simultaneous search from c and H_mu; the map must be a well-defined bijection commuting with f~, e~
    std::map<RadArray, HookTableau> fwd;
    std::set<HookTableau> image;
    std::deque<RadArray> queue{c};
    fwd.emplace(c, genuine_hw(g.m, g.n, *mu));
    image.insert(fwd.at(c));
    while (!queue.empty()) {
        RadArray x = queue.front();
        queue.pop_front();
        const HookTableau t = fwd.at(x);
        for (int i = 1; i < N; ++i)
            for (int raise = 0; raise < 2; ++raise) {
                std::optional<RadArray> y = raise ? C.e(i, x) : C.f(i, x);
                std::optional<HookTableau> s = raise ? H.e(i, t) : H.f(i, t);
                if (y.has_value() != s.has_value()) return std::nullopt;
                if (!y) continue;
                auto it = fwd.find(*y);
                if (it != fwd.end()) {
                    if (!(it->second == *s)) return std::nullopt;
                    continue;
                }
                if (!image.insert(*s).second) return std::nullopt;
                fwd.emplace(*y, *s);
                queue.push_back(*y);
            }
    }
    return mu;
}

bool in_branching_set(Family fam, const HookPartition& mu) {
    switch (fam) {
        case Family::b: return true;
        case Family::c:
            return std::all_of(mu.parts.begin(), mu.parts.end(), [](int p) { return p % 2 == 0; });
        case Family::d: {
            std::vector<int> conj = conjugate(mu.parts);
            return std::all_of(conj.begin(), conj.end(), [](int p) { return p % 2 == 0; });
        }
    }
    return false;
}

std::vector<HookPartition> expected_branching(const AlgebraType& g, int max_degree) {
    RootSystem rs(g);
    std::vector<HookPartition> out;
    // |Lambda_mu| <= 2 deg, since every radical root has at most two unit entries
    for (const HookPartition& mu : hook_partitions(g.m, g.n, 2 * std::max(max_degree, 0))) {
        if (!in_branching_set(g.family, mu)) continue;
        Weight w = hw_weight(g.m, g.n, mu);
        if (rs.height2(-w) <= 2 * max_degree) out.push_back(mu);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool BranchingReport::ok() const {
    std::vector<HookPartition> got;
    for (const auto& [mu, k] : multiplicity) {
        if (k != 1) return false;
        got.push_back(mu);
    }
    return got == expected;
}

BranchingReport l_branching(const AlgebraType& g, int max_degree, unsigned threads) {
    RadCrystal C(g);
    std::vector<RadArray> all = C.enumerate(max_degree);
    // 0: not l-highest, 1: genuine, 2: fake
    std::vector<char> kind(all.size(), 0);
    std::vector<std::optional<HookPartition>> shape(all.size());
    parallel_for(all.size(), threads, [&](std::size_t k) {
        for (int i = 1; i < C.roots().N(); ++i)
            if (C.e(i, all[k])) return;
        shape[k] = genuine_shape(C, all[k]);
        kind[k] = shape[k] ? 1 : 2;
    });
    BranchingReport r;
    for (std::size_t k = 0; k < all.size(); ++k) {
        if (kind[k] == 1) r.multiplicity[*shape[k]]++;
        if (kind[k] == 2) r.fake.push_back(all[k]);
    }
    r.expected = expected_branching(g, max_degree);
    return r;
}

bool TableauReport::ok(int m, int n, const HookPartition& lambda) const {
    return sources.size() == 1 && sources.front() == genuine_hw(m, n, lambda) && reached == size;
}

TableauReport check_tableau_crystal(int m, int n, const HookPartition& lambda) {
    HookCrystal H(m, n);
    std::vector<HookTableau> all = enumerate_sst(m, n, lambda);
    TableauReport r;
    r.size = all.size();
    std::set<HookTableau> known(all.begin(), all.end());
    for (const HookTableau& t : all) {
        bool src = true;
        for (int i = 1; i < m + n && src; ++i)
            if (H.e(i, t)) src = false;
        if (src) r.sources.push_back(t);
    }
    // breadth-first search from H_lambda along f~ and e~
    std::set<HookTableau> seen;
    std::deque<HookTableau> queue;
    HookTableau top = genuine_hw(m, n, lambda);
    seen.insert(top);
    queue.push_back(top);
    while (!queue.empty()) {
        HookTableau t = queue.front();
        queue.pop_front();
        for (int i = 1; i < m + n; ++i)
            for (const std::optional<HookTableau>& x : {H.f(i, t), H.e(i, t)})
                if (x && known.count(*x) && seen.insert(*x).second) queue.push_back(*x);
    }
    r.reached = seen.size();
    return r;
}

}  // namespace osp
