// Acceptance gate: ten numbered criteria, one pass/fail line each, with
// pinned tolerances and runtime budgets. Exit code 0 iff every line passes.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "graphmax/covering.hpp"
#include "graphmax/enumerate.hpp"
#include "graphmax/exact_norms.hpp"
#include "graphmax/maximal.hpp"
#include "graphmax/numeric_norms.hpp"

using namespace graphmax;

namespace {

struct Criterion {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.str().empty()) detail << "; ";
            detail << what;
        }
    }
};

Rat strong1(const Graph& g) { return *strong_norm_exact(g, Exponent::fraction(1, 1)).exact; }

// 1. Exact 1-norms of the six connected four-vertex graphs; rational equality.
void criterion1(Criterion& c) {
    auto check = [&](const Graph& g, Rat expect, const char* name) {
        Rat got = strong1(g);
        c.require(got == expect, std::string(name) + " gave " + rat_to_string(got) +
                                     ", expected " + rat_to_string(expect));
    };
    check(Graph::named(Family::Path, 4), Rat(13, 6), "path");
    check(Graph::named(Family::Cycle, 4), Rat(23, 12), "cycle");
    check(Graph::named(Family::Star, 4), Rat(5, 2), "star");
    check(Graph::named(Family::Complete, 4), Rat(7, 4), "complete");
    check(Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}), Rat(23, 12), "diamond");
    check(Graph::from_edges(4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}}), Rat(13, 6), "paw");
}

// 2. Complete/star closed forms, n in 2..10, p in {1/4,1/2,3/4,1}, tol 1e-12.
void criterion2(Criterion& c) {
    for (int n = 2; n <= 10; ++n) {
        for (auto [num, den] : {std::pair{1, 4}, {1, 2}, {3, 4}, {1, 1}}) {
            Exponent p = Exponent::fraction(num, den);
            double pv = p.value;
            double k_expect = std::pow(1 + (n - 1) / std::pow(n, pv), 1 / pv);
            double s_expect = std::pow(1 + (n - 1) / std::pow(2, pv), 1 / pv);
            NormResult rk = strong_norm_exact(Graph::named(Family::Complete, n), p);
            NormResult rs = strong_norm_exact(Graph::named(Family::Star, n), p);
            if (p.is_one()) {
                c.require(*rk.exact == Rat(2 * n - 1, n), "complete exact n=" + std::to_string(n));
                c.require(*rs.exact == Rat(n + 1, 2), "star exact n=" + std::to_string(n));
            } else {
                c.require(std::abs(rk.value - k_expect) <= 1e-12 * k_expect,
                          "complete n=" + std::to_string(n) + " p=" + std::to_string(pv));
                c.require(std::abs(rs.value - s_expect) <= 1e-12 * s_expect,
                          "star n=" + std::to_string(n) + " p=" + std::to_string(pv));
            }
        }
    }
}

// 3. Extremal characterization over all isomorphism classes, n <= 6.
void criterion3(Criterion& c) {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : enumerate_connected_all(n, /*up_to_iso=*/true)) {
            bool complete = g.edge_count() == n * (n - 1) / 2;
            bool star = n == 2 || [&] {
                int centers = 0, leaves = 0;
                for (int v = 1; v <= n; ++v) {
                    centers += g.degree(v) == n - 1;
                    leaves += g.degree(v) == 1;
                }
                return centers == 1 && leaves == n - 1;
            }();
            Rat v1 = strong1(g);
            c.require((v1 == Rat(2 * n - 1, n)) == complete, "p=1 lower equality, n=" +
                                                                 std::to_string(n));
            c.require((v1 == Rat(n + 1, 2)) == star, "p=1 upper equality, n=" + std::to_string(n));
            double vh = strong_norm_exact(g, Exponent::fraction(1, 2)).value;
            double lo = std::pow(1 + (n - 1) / std::sqrt(n), 2.0);
            double hi = std::pow(1 + (n - 1) / std::sqrt(2.0), 2.0);
            c.require(vh >= lo - 1e-9 && vh <= hi + 1e-9, "p=1/2 sandwich, n=" + std::to_string(n));
            c.require((std::abs(vh - lo) < 1e-9) == complete,
                      "p=1/2 lower equality, n=" + std::to_string(n));
            c.require((std::abs(vh - hi) < 1e-9) == star,
                      "p=1/2 upper equality, n=" + std::to_string(n));
        }
}

// 4. Two-vertex graph at p = 2: closed-form value and alpha root.
void criterion4(Criterion& c) {
    double expect = std::sqrt(3.0 + std::sqrt(5.0)) / 2.0;
    NormResult r = strong_norm_estimate(Graph::named(Family::Complete, 2), Exponent::of(2.0));
    c.require(std::abs(r.value - expect) <= 1e-6,
              "estimate " + std::to_string(r.value) + " vs " + std::to_string(expect));
    double a = k2_alpha_root(2.0);
    c.require(std::abs(a - (std::sqrt(5.0) - 2.0)) <= 1e-10, "alpha root " + std::to_string(a));
}

// 5. Restricted closed form vs 2^n subset scan, plus strict improvement.
void criterion5(Criterion& c) {
    for (int n = 2; n <= 10; ++n)
        for (auto [num, den] : {std::pair{3, 2}, {2, 1}, {5, 2}, {3, 1}}) {
            Exponent p = Exponent::fraction(num, den);
            double scan = restricted_norm(Graph::named(Family::Complete, n), p).value;
            double closed = restricted_norm_complete_closed_form(n, p).value;
            c.require(std::abs(scan - closed) <= 1e-9, "n=" + std::to_string(n) + " p=" +
                                                           std::to_string(p.value) + ": scan " +
                                                           std::to_string(scan) + " vs closed " +
                                                           std::to_string(closed));
            if (n > p.conjugate()) {
                double delta_value = std::pow(1 + (n - 1) / std::pow(n, p.value), 1 / p.value);
                c.require(closed > delta_value + 1e-12,
                          "strict improvement fails at n=" + std::to_string(n) + " p=" +
                              std::to_string(p.value) + ": restricted value " +
                              std::to_string(closed) + " equals the singleton value");
            }
        }
}

// 6. Weak-norm values for the named families.
void criterion6(Criterion& c) {
    for (int n = 2; n <= 10; ++n) {
        // complete: delta lower bound meets n^{1/p-1} for p <= 1
        for (auto [num, den] : {std::pair{1, 4}, {1, 2}, {1, 1}}) {
            Exponent p = Exponent::fraction(num, den);
            NormResult r = weak_norm_delta_lower(Graph::named(Family::Complete, n), p);
            double expect = std::pow(n, 1.0 / p.value - 1.0);
            c.require(std::abs(r.value - expect) <= 1e-12 * expect,
                      "complete weak n=" + std::to_string(n));
        }
        // complete: optimizer estimates stay in [1, 1 + 1e-6] for p >= 1
        for (double pv : {1.0, 1.5, 2.0}) {
            NormResult est = weak_norm_estimate(Graph::named(Family::Complete, n), Exponent::of(pv));
            c.require(est.value >= 1.0 - 1e-9 && est.value <= 1.0 + 1e-6,
                      "complete weak estimate n=" + std::to_string(n) + " p=" + std::to_string(pv) +
                          " gave " + std::to_string(est.value));
        }
        // star: delta bound max{n^{1/p}/2, 1}
        for (auto [num, den] : {std::pair{1, 2}, {1, 1}}) {
            Exponent p = Exponent::fraction(num, den);
            NormResult r = weak_norm_delta_lower(Graph::named(Family::Star, n), p);
            double expect = std::max(std::pow(n, 1.0 / p.value) / 2.0, 1.0);
            c.require(std::abs(r.value - expect) <= 1e-12 * expect,
                      "star weak n=" + std::to_string(n));
        }
    }
    // odd paths: required value 2n/(n-1), exact rationals
    for (int n = 3; n <= 15; n += 2) {
        Rat got = *weak_norm_delta_lower(Graph::named(Family::Path, n), Exponent::fraction(1, 1)).exact;
        c.require(got == Rat(2 * n, n - 1),
                  "odd path n=" + std::to_string(n) + ": measured " + rat_to_string(got) +
                      ", required " + rat_to_string(Rat(2 * n, n - 1)) +
                      " (> 2, above the proven upper bound 2)");
    }
}

// 7. Dilation and overlapping indices of the named families.
void criterion7(Criterion& c) {
    for (int n = 2; n <= 7; ++n) {
        c.require(dilation_index(Graph::named(Family::Complete, n)) == 1, "D complete");
        c.require(dilation_index(Graph::named(Family::Star, n)) == Rat(n, 2), "D star");
        c.require(overlapping_index(Graph::named(Family::Complete, n)) == 1, "O complete");
        c.require(overlapping_index(Graph::named(Family::Star, n)) == n - 1, "O star");
    }
    const Rat d_path[] = {Rat(3, 2), Rat(2), Rat(2), Rat(2), Rat(7, 3)};
    for (int n = 3; n <= 7; ++n) {
        c.require(dilation_index(Graph::named(Family::Path, n)) == d_path[n - 3],
                  "D path n=" + std::to_string(n));
        c.require(overlapping_index(Graph::named(Family::Path, n)) == 2,
                  "O path n=" + std::to_string(n));
    }
    for (int n = 4; n <= 7; ++n)
        c.require(overlapping_index(Graph::named(Family::Cycle, n)) == 2,
                  "O cycle n=" + std::to_string(n));
}

// 8. Weak (1,1) bounds below min{D,O} for n <= 6; exhaustive Vitali families n <= 5.
void criterion8(Criterion& c) {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : enumerate_connected_all(n, /*up_to_iso=*/true)) {
            IndexReport rep = weak11_upper_bound(g);
            double cap = to_double(rep.weak11_upper);
            Exponent one = Exponent::fraction(1, 1);
            c.require(weak_norm_delta_lower(g, one).value <= cap + 1e-9, "delta bound exceeded");
            c.require(weak_norm_estimate(g, one).value <= cap + 1e-9, "optimizer bound exceeded");
        }
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : enumerate_connected_all(n, /*up_to_iso=*/true)) {
            std::vector<Ball> balls = distinct_balls(g);
            Rat d = dilation_index(g);
            const size_t m = balls.size();
            for (std::uint64_t family = 1; family < (std::uint64_t{1} << m); ++family) {
                std::vector<Ball> chosen;
                std::uint64_t covered = 0;
                for (size_t i = 0; i < m; ++i)
                    if (family >> i & 1) {
                        chosen.push_back(balls[i]);
                        covered |= balls[i].mask();
                    }
                std::vector<Ball> picked = vitali_select(chosen, g);
                long long total = 0;
                for (const Ball& b : picked) total += static_cast<long long>(b.members.size());
                if (Rat(__builtin_popcountll(covered)) > d * Rat(total)) {
                    c.require(false, "vitali inequality failed, n=" + std::to_string(n));
                    return;
                }
            }
        }
}

// 9. Reconstruction round-trip on every class through n = 6.
void criterion9(Criterion& c) {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : enumerate_connected_all(n, /*up_to_iso=*/true))
            c.require(reconstruct_from_deltas(delta_response_matrix(g)).same_edges(g),
                      "round-trip failed at n=" + std::to_string(n));
}

// 10. Frozen regressions: path-norm growth vs log n, path dilation trend,
// and delta-lemma domination on random functions.
void criterion10(Criterion& c) {
    Rat prev_norm(0), prev_dil(0);
    double prev_ratio = 1e9;
    for (int n = 3; n <= 64; ++n) {
        Graph ln = Graph::named(Family::Path, n);
        Rat v = strong1(ln);
        double ratio = to_double(v) / std::log(n);
        c.require(v >= prev_norm, "path norm not monotone at n=" + std::to_string(n));
        c.require(ratio <= prev_ratio + 1e-12, "ratio not decreasing at n=" + std::to_string(n));
        if (n >= 8)
            c.require(ratio >= 1.14 && ratio <= 1.34,
                      "ratio window broken at n=" + std::to_string(n) + ": " + std::to_string(ratio));
        Rat d = dilation_index(ln);
        c.require(d >= prev_dil && d < 3, "dilation trend broken at n=" + std::to_string(n));
        prev_norm = v;
        prev_ratio = ratio;
        prev_dil = d;
    }
    c.require(prev_dil == Rat(32, 11), "dilation endpoint " + rat_to_string(prev_dil));

    std::mt19937_64 rng(2026);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : enumerate_connected_all(n, /*up_to_iso=*/true))
            for (auto [num, den] : {std::pair{1, 2}, {1, 1}}) {
                Exponent p = Exponent::fraction(num, den);
                double cbound = strong_norm_exact(g, p).value;
                for (int trial = 0; trial < 100; ++trial) {
                    std::vector<double> f(n + 1, 0.0);
                    for (int v = 1; v <= n; ++v) f[v] = uni(rng);
                    auto m = eval_maximal(g, f);
                    double fn = 0, mn = 0;
                    for (int v = 1; v <= n; ++v) {
                        fn += std::pow(f[v], p.value);
                        mn += std::pow(m[v], p.value);
                    }
                    if (std::pow(mn, 1 / p.value) > cbound * std::pow(fn, 1 / p.value) * (1 + 1e-9)) {
                        c.require(false, "delta-lemma domination failed at n=" + std::to_string(n));
                        return;
                    }
                }
            }
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* title;
        double budget_seconds;
        std::function<void(Criterion&)> fn;
    };
    const std::vector<Entry> entries = {
        {1, "four-vertex exact 1-norm table (rational equality)", 1, criterion1},
        {2, "complete/star closed forms, n<=10, p<=1 (tol 1e-12)", 5, criterion2},
        {3, "extremal characterization over all classes, n<=6", 60, criterion3},
        {4, "two-vertex p=2 value (tol 1e-6) and alpha root (tol 1e-10)", 1, criterion4},
        {5, "restricted closed form vs subset scan, n<=10 (tol 1e-9)", 10, criterion5},
        {6, "weak-norm values for the named families, n<=10/15 (exact at p=1)", 30, criterion6},
        {7, "dilation and overlapping indices of the named families", 300, criterion7},
        {8, "weak (1,1) bounds under min{D,O}; exhaustive Vitali families", 600, criterion8},
        {9, "reconstruction round-trip, all classes n<=6 (exact)", 60, criterion9},
        {10, "frozen growth/trend windows and delta-lemma domination", 300, criterion10},
    };

    int failures = 0;
    for (const Entry& e : entries) {
        Criterion c;
        auto t0 = std::chrono::steady_clock::now();
        e.fn(c);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > e.budget_seconds) c.require(false, "over budget: " + std::to_string(secs) + " s");
        std::printf("%s criterion %2d: %s [%.2f s]%s%s\n", c.pass ? "PASS" : "FAIL", e.id, e.title,
                    secs, c.pass ? "" : " -- ", c.pass ? "" : c.detail.str().c_str());
        failures += !c.pass;
    }
    std::printf("%d/10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
