#include "graphmax/covering.hpp"

#include <algorithm>
#include <cmath>

#include "graphmax/errors.hpp"

namespace graphmax {

Rat dilation_index(const Graph& g, std::pair<int, int>* witness) {
    Rat best(0);
    std::pair<int, int> arg{1, 1};
    for (int x = 1; x <= g.size(); ++x)
        for (int r = 1; r <= g.diameter(); ++r) {
            Rat ratio(g.ball_size(x, 3 * r), g.ball_size(x, r));
            if (ratio > best) {
                best = ratio;
                arg = {x, r};
            }
        }
    if (best == 0) best = 1;  // diameter 0 cannot happen for n >= 2, K_1 guard
    if (witness) *witness = arg;
    return best;
}

std::vector<Ball> distinct_balls(const Graph& g) {
    std::vector<Ball> balls;
    std::vector<std::vector<int>> seen;
    for (int v = 1; v <= g.size(); ++v)
        for (int r = 0; r <= g.eccentricity(v); ++r) {
            Ball b = g.ball(v, r);
            if (std::find(seen.begin(), seen.end(), b.members) != seen.end()) continue;
            seen.push_back(b.members);
            balls.push_back(std::move(b));
        }
    std::sort(balls.begin(), balls.end(),
              [](const Ball& a, const Ball& b) { return a.members < b.members; });
    return balls;
}

namespace {

// The worst family is irredundant (every ball keeps a privately covered
// vertex): adding a union-preserving ball only helps the subfamily chooser,
// and an irredundant family admits no proper union-preserving subfamily, so
// its cost is its own pointwise overlap. DFS over distinct balls, pruning as
// soon as any chosen ball loses its private vertex.
struct OverlapSearch {
    int n;
    std::vector<std::uint64_t> masks;
    std::vector<int> cover;      // cover count per vertex (1-based)
    std::vector<int> chosen;
    int best = 1;
    std::vector<int> best_family;

    bool all_private() const {
        for (int idx : chosen) {
            bool has_private = false;
            for (int v = 1; v <= n && !has_private; ++v)
                if ((masks[idx] >> (v - 1) & 1) && cover[v] == 1) has_private = true;
            if (!has_private) return false;
        }
        return true;
    }

    void dfs(size_t next) {
        int overlap = 0;
        for (int v = 1; v <= n; ++v) overlap = std::max(overlap, cover[v]);
        if (!chosen.empty() && overlap > best) {
            best = overlap;
            best_family = chosen;
        }
        for (size_t i = next; i < masks.size(); ++i) {
            chosen.push_back(static_cast<int>(i));
            for (int v = 1; v <= n; ++v)
                if (masks[i] >> (v - 1) & 1) ++cover[v];
            if (all_private()) dfs(i + 1);
            for (int v = 1; v <= n; ++v)
                if (masks[i] >> (v - 1) & 1) --cover[v];
            chosen.pop_back();
        }
    }
};

}  // namespace

int overlapping_index(const Graph& g, int cap, std::vector<Ball>* witness) {
    if (g.size() > cap)
        throw CapExceeded("overlapping index: n = " + std::to_string(g.size()) +
                          " exceeds cap " + std::to_string(cap));
    std::vector<Ball> balls = distinct_balls(g);
    OverlapSearch search;
    search.n = g.size();
    for (const Ball& b : balls) search.masks.push_back(b.mask());
    search.cover.assign(g.size() + 1, 0);
    search.dfs(0);
    if (witness) {
        witness->clear();
        for (int idx : search.best_family) witness->push_back(balls[idx]);
        if (witness->empty() && !balls.empty()) witness->push_back(balls.front());
    }
    return search.best;
}

std::vector<Ball> vitali_select(std::vector<Ball> balls, const Graph& g) {
    if (balls.empty()) throw InputError("vitali selection needs a nonempty ball list");
    std::stable_sort(balls.begin(), balls.end(), [](const Ball& a, const Ball& b) {
        if (a.radius != b.radius) return a.radius > b.radius;
        return a.center < b.center;
    });
    std::vector<Ball> selected;
    std::vector<bool> covered(g.size() + 1, false);
    for (const Ball& b : balls) {
        bool disjoint = true;
        for (int v : b.members)
            if (covered[v]) {
                disjoint = false;
                break;
            }
        if (!disjoint) continue;
        for (int v : b.members) covered[v] = true;
        selected.push_back(b);
    }
    return selected;
}

IndexReport weak11_upper_bound(const Graph& g, bool skip_overlap, int cap) {
    IndexReport report;
    report.dilation = dilation_index(g, &report.dilation_witness);
    if (skip_overlap) {
        report.overlapping_skipped = true;
        report.weak11_upper = report.dilation;
    } else {
        report.overlapping = overlapping_index(g, cap, &report.overlap_witness);
        report.weak11_upper = std::min(report.dilation, Rat(report.overlapping));
    }
    return report;
}

double interpolation_bound(double p, double c1, double cinf) {
    if (!(p > 1.0)) throw InvalidExponent("interpolation bound needs p > 1");
    double conj = p / (p - 1.0);
    return std::pow(conj, 1.0 / conj) * std::pow(p, 1.0 / p) * std::pow(c1, 1.0 / p) *
           std::pow(cinf, 1.0 / conj);
}

bool is_ultrametric(const Graph& g) {
    for (int x = 1; x <= g.size(); ++x)
        for (int y = 1; y <= g.size(); ++y)
            for (int z = 1; z <= g.size(); ++z)
                if (g.dist(x, y) > std::max(g.dist(x, z), g.dist(z, y))) return false;
    return true;
}

}  // namespace graphmax
