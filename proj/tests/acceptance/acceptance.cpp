// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "osp/pbw.hpp"
#include "osp/pvcrystal.hpp"
#include "osp/radverify.hpp"
#include "osp/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>

using namespace osp;

namespace {

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failures;
    std::printf("%s %2d %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", id, title, secs, o.detail.c_str());
    std::fflush(stdout);
}

AlgebraType alg(const char* f, int m, int n) { return AlgebraType::parse(f, m, n); }

std::string first_failure(const Report& r) {
    for (const auto& c : r.checks)
        if (!c.pass) return c.name + ": " + c.detail;
    return "";
}

// tally reports into an outcome
struct Tally {
    Outcome o;
    std::ostringstream os;
    void add(const Report& r, std::size_t expected = 0) {
        bool count_ok = expected == 0 || r.checks.size() == expected;
        os << r.algebra << ' ' << r.passed() << '/' << r.checks.size();
        if (!count_ok) os << " (expected " << expected << " checks)";
        os << "; ";
        if (!r.ok() || !count_ok) {
            if (o.pass && !r.ok()) os << "first failure " << first_failure(r) << "; ";
            o.pass = false;
        }
    }
    Outcome done() {
        o.detail = os.str();
        return o;
    }
};

using Pairs = std::map<std::pair<int, int>, int>;

Outcome worked_examples() {
    Outcome o;
    std::ostringstream os;
    auto expect = [&](bool cond, const char* what) {
        if (!cond) {
            o.pass = false;
            os << "mismatch: " << what << "; ";
        }
    };
    {
        RadCrystal C(alg("b", 2, 3));
        Pairs base{{{1, 1}, 2}, {{1, 2}, 2}, {{1, 3}, 1}, {{1, 5}, 1}, {{2, 2}, 1},
                   {{2, 4}, 1}, {{3, 4}, 2}, {{3, 5}, 1}, {{4, 4}, 1}, {{5, 5}, 1}};
        RadArray c = C.from_pairs(base);
        Pairs f1 = base, f3 = base;
        f1[{1, 1}] = 1;
        f1[{2, 2}] = 2;
        f3[{1, 3}] = 0;
        f3[{1, 4}] = 1;
        expect(C.f(1, c) == C.from_pairs(f1), "b23 f1");
        expect(!C.f(2, c), "b23 f2 = 0");
        expect(C.f(3, c) == C.from_pairs(f3), "b23 f3");
        expect(C.eps_phi(1, c) == std::pair{2, 4}, "b23 eps1, phi1");
        expect(C.eps_phi(3, c) == std::pair{1, 1}, "b23 eps3, phi3");
    }
    {
        RadCrystal C(alg("c", 2, 3));
        RadArray c = C.from_pairs({{{1, 1}, 1}, {{1, 3}, 1}, {{1, 5}, 1}, {{2, 4}, 1}, {{3, 5}, 2}, {{4, 5}, 1}});
        expect(C.eps_phi(1, c) == std::pair{0, 3}, "c23 eps1, phi1");
        expect(C.eps_phi(3, c) == std::pair{1, 2}, "c23 eps3, phi3");
        auto x = C.f(1, c);
        for (int k = 0; k < 2 && x; ++k) x = C.f(1, *x);
        expect(x == C.from_pairs({{{2, 2}, 1}, {{1, 3}, 1}, {{2, 4}, 1}, {{2, 5}, 1}, {{3, 5}, 2}, {{4, 5}, 1}}),
               "c23 f1^3");
        auto y = C.f(3, c);
        if (y) y = C.f(3, *y);
        expect(y == C.from_pairs({{{1, 1}, 1}, {{1, 4}, 1}, {{2, 4}, 1}, {{1, 5}, 1}, {{3, 5}, 1}, {{4, 5}, 2}}),
               "c23 f3^2");
    }
    {
        RadCrystal C(alg("d", 3, 3));
        RadArray c = C.from_pairs({{{1, 3}, 2}, {{1, 5}, 1}, {{2, 3}, 1}, {{2, 4}, 1}, {{2, 6}, 1}, {{3, 4}, 1},
                                   {{3, 6}, 1}, {{4, 4}, 2}, {{4, 5}, 2}, {{4, 6}, 3}, {{5, 5}, 1}, {{5, 6}, 2}});
        expect(C.eps_phi(4, c) == std::pair{2, 6}, "d33 eps4, phi4");
        std::optional<RadArray> x = c;
        for (int k = 0; k < 6 && x; ++k) x = C.f(4, *x);
        expect(x == C.from_pairs({{{1, 3}, 2}, {{2, 3}, 1}, {{2, 4}, 1}, {{1, 5}, 1}, {{3, 5}, 1}, {{4, 5}, 2},
                                  {{5, 5}, 3}, {{2, 6}, 1}, {{3, 6}, 1}, {{4, 6}, 2}, {{5, 6}, 3}}),
               "d33 f4^6");
    }
    {
        AlgebraType g = alg("b", 2, 3);
        PVCrystal P(g, hook_partition({5, 3, 3, 2, 2}, 2, 3));
        Pairs base{{{1, 1}, 2}, {{1, 2}, 2}, {{1, 3}, 1}, {{1, 5}, 1}, {{2, 2}, 1},
                   {{2, 4}, 1}, {{3, 4}, 2}, {{3, 5}, 1}, {{4, 4}, 1}, {{5, 5}, 1}};
        HookTableau T = tableau_from_rows({{1, 1, 1, 2, 2}, {2, 2, 3}, {3, 4, 5}, {4, 5}, {4, 5}}, 2, 3);
        PVElement b{P.rad().from_pairs(base), T};
        Pairs f0 = base, f13 = base, f3 = base;
        f0[{1, 1}] = 3;
        f13[{1, 1}] = 1;
        f13[{1, 2}] = 1;
        f13[{2, 2}] = 4;
        f3[{1, 3}] = 0;
        f3[{1, 4}] = 1;
        expect(P.f(0, b) == PVElement{P.rad().from_pairs(f0), T}, "tensor f0");
        std::optional<PVElement> x = b;
        for (int k = 0; k < 3 && x; ++k) x = P.f(1, *x);
        HookTableau T1 = tableau_from_rows({{1, 1, 2, 2, 2}, {2, 2, 3}, {3, 4, 5}, {4, 5}, {4, 5}}, 2, 3);
        expect(x == PVElement{P.rad().from_pairs(f13), T1}, "tensor f1^3");
        expect(!P.f(2, b), "tensor f2 = 0");
        expect(P.f(3, b) == PVElement{P.rad().from_pairs(f3), T}, "tensor f3");
    }
    o.detail = o.pass ? "3 arrays on B(N) and 4 tensor computations reproduced" : os.str();
    return o;
}

Outcome branching() {
    Outcome o;
    std::ostringstream os;
    for (auto [f, m, n] : {std::tuple{"b", 2, 2}, {"c", 2, 2}, {"d", 2, 2}, {"b", 2, 3}}) {
        AlgebraType g = alg(f, m, n);
        BranchingReport r = l_branching(g, 8, workers());
        bool once = true;
        for (const auto& [mu, k] : r.multiplicity) once = once && k == 1;
        os << g.name() << ' ' << r.multiplicity.size() << '/' << r.expected.size()
           << (r.ok() && once ? " ok" : " MISMATCH");
        if (!r.fake.empty()) os << " (" << r.fake.size() << " non-genuine l-highest)";
        os << "; ";
        o.pass = o.pass && r.ok() && once;
    }
    o.detail = os.str();
    return o;
}

Outcome unique_source() {
    std::size_t cases = 0, failed = 0, multi = 0, greedy = 0, disconnected = 0;
    std::string example;
    for (const char* f : {"b", "c", "d"})
        for (int m = 2; m <= 3; ++m)
            for (int n = 1; n <= 3; ++n) {
                AlgebraType g = alg(f, m, n);
                PVCrystal P(g, hook_partition({}, m, n));
                // a vertex's verdict does not depend on the truncation, so D = 5 covers D <= 5
                for (const auto& lam : hook_partitions(m, n, 4)) {
                    ConnectivityReport r = check_connectivity(g, lam, 5, workers());
                    PVCrystal Q(g, lam);
                    bool top = r.unique_source() && r.sources.front() == Q.highest();
                    ++cases;
                    disconnected += r.disconnected;
                    if (top && r.greedy_failures == 0) continue;
                    ++failed;
                    if (!r.unique_source()) ++multi;
                    greedy += r.greedy_failures;
                    if (example.empty()) {
                        for (const auto& s : r.sources)
                            if (!(s == Q.highest())) {
                                example = g.name() + " lambda=" + lam.to_string() + " extra source " + Q.to_string(s);
                                break;
                            }
                    }
                }
            }
    std::ostringstream os;
    os << cases << " cases, " << failed << " fail: " << multi << " have extra sources, " << greedy
       << " vertices reduce greedily to a vertex other than the top";
    if (!example.empty()) os << ", e.g. " << example;
    os << "; path to the top exists from every vertex: " << (disconnected == 0 ? "yes" : "no");
    return {failed == 0, os.str()};
}

Outcome tableau_crystals() {
    std::size_t shapes = 0, multi = 0, disconnected = 0;
    std::string example;
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n)
            for (const auto& lam : hook_partitions(m, n, 6)) {
                TableauReport r = check_tableau_crystal(m, n, lam);
                ++shapes;
                if (!r.connected()) ++disconnected;
                if (r.sources.size() != 1) {
                    ++multi;
                    if (example.empty()) {
                        std::ostringstream e;
                        e << "SST_{" << m << '|' << n << "}" << lam.to_string() << " has " << r.sources.size()
                          << " sources";
                        example = e.str();
                    }
                }
            }
    std::ostringstream os;
    os << shapes << " shapes; connected: " << shapes - disconnected << '/' << shapes << "; unique source: "
       << shapes - multi << '/' << shapes;
    if (!example.empty()) os << ", e.g. " << example;
    return {multi == 0 && disconnected == 0, os.str()};
}

}  // namespace

int main() {
    criterion(1, "commutator tables", [] {
        Tally t;
        t.add(verify_commutators(PBWAlgebra(alg("b", 2, 3))), 105);
        t.add(verify_commutators(PBWAlgebra(alg("c", 2, 3))), 66);
        t.add(verify_commutators(PBWAlgebra(alg("d", 3, 3))), 153);
        t.add(verify_commutators(PBWAlgebra(alg("d", 2, 2))), 28);
        return t.done();
    });
    criterion(2, "adjoint tables", [] {
        Tally t;
        for (auto [f, m, n] : {std::tuple{"b", 2, 3}, {"c", 2, 3}, {"d", 3, 3}, {"d", 2, 2}})
            t.add(verify_adjoint(PBWAlgebra(alg(f, m, n))));
        return t.done();
    });
    criterion(3, "PBW independence, degree <= 6", [] {
        Tally t;
        for (const char* f : {"b", "c", "d"})
            for (int m = 2; m <= 3; ++m)
                for (int n = 1; n <= 3; ++n) t.add(verify_pbw(PBWAlgebra(alg(f, m, n)), 6));
        return t.done();
    });
    criterion(4, "worked examples", worked_examples);
    criterion(5, "lattice stability, m,n <= 2, degree <= 5", [] {
        Tally t;
        for (const char* f : {"b", "c", "d"})
            for (int n = 1; n <= 2; ++n) t.add(verify_lattice(PBWAlgebra(alg(f, 2, n)), 5));
        return t.done();
    });
    criterion(6, "maximal vectors of the three-root blocks, a,c <= 4", [] {
        Tally t;
        for (const auto& c : appendix_cases()) t.add(verify_appendix(c, 4));
        return t.done();
    });
    criterion(7, "branching up to degree 8", branching);
    criterion(8, "unique source and greedy reduction, |lambda| <= 4, D <= 5", unique_source);
    criterion(9, "omega duality, 100 samples", [] {
        Tally t;
        t.add(verify_omega(2, 2, 100, 5, 2024), 100);
        t.add(verify_omega(2, 3, 100, 5, 2024), 100);
        return t.done();
    });
    criterion(10, "tableau crystals, |lambda| <= 6", tableau_crystals);
    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
