#pragma once

#include "osp/hooktab.hpp"
#include "osp/radcrystal.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace osp {

// Raised when a requested graph would exceed the configured vertex cap.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// c (x) T in B(N) (x) B(V_l(lambda))
struct PVElement {
    RadArray rad;
    HookTableau tab;

    friend bool operator==(const PVElement& a, const PVElement& b) { return a.rad == b.rad && a.tab == b.tab; }
    friend bool operator<(const PVElement& a, const PVElement& b) {
        return std::tie(a.rad, a.tab) < std::tie(b.rad, b.tab);
    }
};

class PVCrystal {
public:
    PVCrystal(const AlgebraType& g, const HookPartition& lambda);

    const RadCrystal& rad() const { return rad_; }
    const HookCrystal& tab() const { return tab_; }
    const HookPartition& lambda() const { return lambda_; }
    const AlgebraType& type() const { return rad_.type(); }
    int rank() const { return rad_.roots().N(); }  // I = {0, ..., rank-1}

    PVElement highest() const;  // O (x) H_lambda
    Weight weight(const PVElement& b) const;
    std::string to_string(const PVElement& b) const;  // canonical vertex id

    std::optional<PVElement> f(int i, const PVElement& b) const;
    std::optional<PVElement> e(int i, const PVElement& b) const;
    std::pair<int, int> eps_phi(int i, const PVElement& b) const;

private:
    RadCrystal rad_;
    HookCrystal tab_;
    HookPartition lambda_;
    // which factor the operator acts on: 0 for c, 1 for T, -1 for none
    int pick(int i, const PVElement& b, bool raise) const;
};

struct CrystalEdge {
    std::size_t src = 0;
    int color = 0;
    std::size_t dst = 0;
    friend bool operator==(const CrystalEdge& a, const CrystalEdge& b) {
        return a.src == b.src && a.color == b.color && a.dst == b.dst;
    }
};

// Vertices c (x) T with deg c <= D, sorted by (deg c, c, T); f~-edges whose target stays in range.
struct CrystalGraph {
    AlgebraType type;
    HookPartition lambda;
    int max_degree = 0;
    std::vector<PVElement> vertices;
    std::vector<CrystalEdge> edges;  // sorted by (src, color)
};

constexpr std::size_t kDefaultVertexCap = 2000000;

// all vertices of the truncated crystal; throws ResourceError above the cap
std::vector<PVElement> truncated_vertices(const PVCrystal& P, int max_degree, std::size_t cap = kDefaultVertexCap);
CrystalGraph build_graph(const AlgebraType& g, const HookPartition& lambda, int max_degree, unsigned threads = 1,
                         std::size_t cap = kDefaultVertexCap);
std::string graph_to_dot(const CrystalGraph& graph);

// vertices with e~_i b = 0 for every i in I
std::vector<PVElement> hw_scan(const AlgebraType& g, const HookPartition& lambda, int max_degree, unsigned threads = 1,
                               std::size_t cap = kDefaultVertexCap);
// apply the first nonzero e~_i (i = 0, 1, ...) until none applies
PVElement greedy_reduce(const PVCrystal& P, const PVElement& b);

// all elements reachable from b by f~_i and e~_i with i in 1..rank-1 (no truncation)
std::vector<PVElement> l_component(const PVCrystal& P, const PVElement& b);
// follow l-components and e~_0 down to O (x) H_lambda; false if the walk gets stuck
bool connects_to_highest(const PVCrystal& P, const PVElement& b);

struct ConnectivityReport {
    std::size_t vertices = 0;
    std::vector<PVElement> sources;  // e~_i b = 0 for every i in I
    std::size_t greedy_failures = 0;
    std::size_t disconnected = 0;  // vertices with no path to O (x) H_lambda
    std::string first_failure;
    bool unique_source() const { return sources.size() == 1; }
    bool connected() const { return disconnected == 0; }
    bool ok() const { return unique_source() && greedy_failures == 0; }
};
// unique-source, greedy-reduction and path-to-top checks over the truncation
// with walk = false the path-to-top check is skipped and disconnected stays 0
ConnectivityReport check_connectivity(const AlgebraType& g, const HookPartition& lambda, int max_degree,
                                      unsigned threads = 1, std::size_t cap = kDefaultVertexCap, bool walk = true);

// shape mu if the I\{0}-component of c is isomorphic to SST(mu) by a map sending c to H_mu
std::optional<HookPartition> genuine_shape(const RadCrystal& C, const RadArray& c);

// genuine l-highest elements of B(N) with degree <= D, by shape
struct BranchingReport {
    std::map<HookPartition, int> multiplicity;
    std::vector<RadArray> fake;  // e~_i c = 0 for i >= 1 but c is not a genuine highest element
    std::vector<HookPartition> expected;
    bool ok() const;
};
bool in_branching_set(Family fam, const HookPartition& mu);
// mu in P(g) with deg Lambda_mu <= D, by brute-force partition enumeration
std::vector<HookPartition> expected_branching(const AlgebraType& g, int max_degree);
BranchingReport l_branching(const AlgebraType& g, int max_degree, unsigned threads = 1);

// tableau connectivity: unique source H_lambda for the gl(m|n) crystal on SST(lambda)
struct TableauReport {
    std::size_t size = 0;
    std::vector<HookTableau> sources;
    std::size_t reached = 0;  // vertices reached from H_lambda by f~ and e~ moves
    bool connected() const { return reached == size; }
    bool ok(int m, int n, const HookPartition& lambda) const;
};
TableauReport check_tableau_crystal(int m, int n, const HookPartition& lambda);

}  // namespace osp
