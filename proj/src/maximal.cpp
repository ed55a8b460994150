#include "graphmax/maximal.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>

#include <json.hpp>

namespace graphmax {

namespace {

template <class T>
void absify(std::vector<T>& f) {
    for (auto& x : f)
        if (x < T(0)) x = -x;
}

template <class T>
T divide(const T& sum, int count);

template <>
Rat divide(const Rat& sum, int count) {
    return sum / count;
}

template <>
double divide(const double& sum, int count) {
    return sum / count;
}

}  // namespace

template <class T>
std::vector<T> eval_maximal(const Graph& g, std::vector<T> f) {
    const int n = g.size();
    if (static_cast<int>(f.size()) != n + 1) throw LengthMismatch(static_cast<int>(f.size()) - 1, n);
    absify(f);
    std::vector<T> out(n + 1, T(0));
    for (int v = 1; v <= n; ++v) {
        const auto& ord = g.by_distance(v);
        T best = f[v];
        T sum(0);
        for (int i = 0; i < n; ++i) {
            sum += f[ord[i]];
            // Close the ball when the next vertex is strictly farther.
            if (i + 1 == n || g.dist(v, ord[i + 1]) > g.dist(v, ord[i])) {
                T avg = divide(sum, i + 1);
                if (avg > best) best = avg;
            }
        }
        out[v] = best;
    }
    return out;
}

template std::vector<Rat> eval_maximal(const Graph&, std::vector<Rat>);
template std::vector<double> eval_maximal(const Graph&, std::vector<double>);

DeltaResponseMatrix delta_response_matrix(const Graph& g) {
    const int n = g.size();
    DeltaResponseMatrix m;
    m.n = n;
    m.entries.assign(static_cast<size_t>(n) * n, Rat(0));
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) m.at(j, k) = Rat(1, g.ball_size(j, g.dist(j, k)));
    return m;
}

Graph reconstruct_from_deltas(const DeltaResponseMatrix& m) {
    const int n = m.n;
    if (n < 1) throw InconsistentMatrix("empty matrix");
    for (int j = 1; j <= n; ++j) {
        if (m.at(j, j) != 1) throw InconsistentMatrix("diagonal entry is not 1");
        for (int k = 1; k <= n; ++k)
            if (m.at(j, k) < Rat(1, n) || m.at(j, k) > 1)
                throw InconsistentMatrix("entry outside [1/n, 1]");
    }
    if (n == 1) throw InconsistentMatrix("no connected graph on one vertex is supported");

    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j <= n; ++j) {
        Rat best(0);
        for (int k = 1; k <= n; ++k)
            if (k != j) best = std::max(best, m.at(j, k));
        for (int k = 1; k <= n; ++k)
            if (k != j && m.at(j, k) == best && j < k) edges.emplace_back(j, k);
        // Neighbors attain the row maximum exactly; symmetry is not assumed
        // here, the recheck below rejects anything inconsistent.
        for (int k = 1; k <= n; ++k)
            if (k != j && m.at(j, k) == best && k < j) edges.emplace_back(k, j);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g = [&] {
        try {
            return Graph::from_edges(n, edges);
        } catch (const InputError& e) {
            throw InconsistentMatrix(std::string("matrix is not realizable: ") + e.what());
        }
    }();

    DeltaResponseMatrix check = delta_response_matrix(g);
    if (check.entries != m.entries)
        throw InconsistentMatrix("matrix is not the delta response of any connected graph");
    return g;
}

template <class T>
std::vector<T> eval_isoclass_maximal(const Graph& g, std::vector<T> f, int cap) {
    const int n = g.size();
    if (n > cap)
        throw CapExceeded("isoclass scan: n = " + std::to_string(n) + " exceeds cap " +
                          std::to_string(cap));
    if (static_cast<int>(f.size()) != n + 1) throw LengthMismatch(static_cast<int>(f.size()) - 1, n);
    absify(f);

    std::vector<T> out = f;  // M_H f >= f for every H
    std::vector<int> perm(n + 1);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (int c = 1; c <= n; ++c) {
            const auto& ord = g.by_distance(c);
            T& best = out[perm[c]];
            T sum(0);
            for (int i = 0; i < n; ++i) {
                sum += f[perm[ord[i]]];
                if (i + 1 == n || g.dist(c, ord[i + 1]) > g.dist(c, ord[i])) {
                    T avg = divide(sum, i + 1);
                    if (avg > best) best = avg;
                }
            }
        }
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return out;
}

template std::vector<Rat> eval_isoclass_maximal(const Graph&, std::vector<Rat>, int);
template std::vector<double> eval_isoclass_maximal(const Graph&, std::vector<double>, int);

void DeltaResponseMatrix::write_json(std::ostream& out) const {
    nlohmann::json rows = nlohmann::json::array();
    for (int j = 1; j <= n; ++j) {
        nlohmann::json row = nlohmann::json::array();
        for (int k = 1; k <= n; ++k) row.push_back(rat_to_string(at(j, k)));
        rows.push_back(std::move(row));
    }
    out << rows.dump();
}

DeltaResponseMatrix DeltaResponseMatrix::read_json(std::istream& in) {
    nlohmann::json rows = nlohmann::json::parse(in);
    DeltaResponseMatrix m;
    m.n = static_cast<int>(rows.size());
    m.entries.assign(static_cast<size_t>(m.n) * m.n, Rat(0));
    for (int j = 1; j <= m.n; ++j) {
        const auto& row = rows[j - 1];
        if (static_cast<int>(row.size()) != m.n) throw InputError("matrix is not square");
        for (int k = 1; k <= m.n; ++k) m.at(j, k) = parse_rat(row[k - 1].get<std::string>());
    }
    return m;
}

RatVec read_vertex_function(std::istream& in, int n) {
    RatVec f(n + 1, Rat(0));
    std::string line;
    for (int v = 1; v <= n; ++v) {
        if (!(in >> line)) throw InputError("vertex function needs " + std::to_string(n) + " values");
        f[v] = parse_rat(line);
    }
    return f;
}

void write_vertex_function(std::ostream& out, const RatVec& f) {
    for (size_t v = 1; v < f.size(); ++v) out << rat_to_string(f[v]) << "\n";
}

}  // namespace graphmax
