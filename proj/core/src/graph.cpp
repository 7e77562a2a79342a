#include "sfgft/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sfgft/errors.hpp"
#include "sfgft/eigensolver.hpp"

namespace sfgft {

void Graph::add_edge(int i, int j, double w) {
    if (i < 0 || j < 0 || i >= n() || j >= n()) throw std::out_of_range("add_edge: vertex out of range");
    if (i == j) throw std::invalid_argument("add_edge: self loops not allowed");
    if (w < 0.0) throw std::invalid_argument("add_edge: negative weight");
    weights_(i, j) = w;
    weights_(j, i) = w;
}

VertexPartition::VertexPartition(std::vector<int> sample_set, int n) : sample_(std::move(sample_set)), n_(n) {
    std::sort(sample_.begin(), sample_.end());
    sample_.erase(std::unique(sample_.begin(), sample_.end()), sample_.end());
    if (sample_.empty()) throw std::invalid_argument("VertexPartition: empty sample set");
    if (static_cast<int>(sample_.size()) >= n_) throw std::invalid_argument("VertexPartition: sample set must be a strict subset");
    if (sample_.front() < 0 || sample_.back() >= n_) throw std::out_of_range("VertexPartition: index out of range");
}

std::vector<int> VertexPartition::complement() const {
    std::vector<int> comp;
    comp.reserve(n_ - size());
    size_t pos = 0;
    for (int v = 0; v < n_; ++v) {
        if (pos < sample_.size() && sample_[pos] == v) {
            ++pos;
        } else {
            comp.push_back(v);
        }
    }
    return comp;
}

Graph build_knn_graph(const std::vector<Point2>& points, int k, double sigma_d) {
    const int n = static_cast<int>(points.size());
    if (n < 2) throw std::invalid_argument("build_knn_graph: need at least 2 points");
    if (k < 1) throw std::invalid_argument("build_knn_graph: k must be positive");
    if (sigma_d <= 0.0) throw std::invalid_argument("build_knn_graph: sigma_d must be positive");
    if (n < k + 1) throw std::invalid_argument("build_knn_graph: insufficient points");

    Graph g(n);
    const double inv = 1.0 / (2.0 * sigma_d * sigma_d);
    std::vector<std::pair<double, int>> cand(n - 1);
    for (int i = 0; i < n; ++i) {
        cand.clear();
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const double dx = points[i].x - points[j].x;
            const double dy = points[i].y - points[j].y;
            cand.emplace_back(dx * dx + dy * dy, j);
        }
        // Ties in distance go to the lower index; keeps results deterministic.
        std::partial_sort(cand.begin(), cand.begin() + k, cand.end());
        for (int m = 0; m < k; ++m) {
            const auto [d2, j] = cand[m];
            g.add_edge(i, j, std::exp(-d2 * inv));
        }
    }
    return g;
}

std::vector<double> degree_table(const Graph& g) {
    const int n = g.n();
    std::vector<double> d(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (double w : g.weights().row(i)) s += w;
        d[i] = s;
    }
    return d;
}

Matrix laplacian(const Graph& g) {
    const int n = g.n();
    Matrix lap(n, n);
    for (int i = 0; i < n; ++i) {
        double deg = 0.0;
        for (int j = 0; j < n; ++j) {
            const double w = g.weight(i, j);
            deg += w;
            lap(i, j) = -w;
        }
        lap(i, i) = deg;
    }
    return lap;
}

Matrix principal_submatrix(const Matrix& a, const std::vector<int>& rows, const std::vector<int>& cols) {
    Matrix sub(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t p = 0; p < rows.size(); ++p) {
        const int r = rows[p];
        if (r < 0 || r >= a.rows()) throw std::out_of_range("principal_submatrix: row index");
        for (size_t q = 0; q < cols.size(); ++q) {
            const int c = cols[q];
            if (c < 0 || c >= a.cols()) throw std::out_of_range("principal_submatrix: col index");
            sub(static_cast<int>(p), static_cast<int>(q)) = a(r, c);
        }
    }
    return sub;
}

namespace {

// Finds a connected component (within `members`, using graph weights read
// from the Laplacian off-diagonal) with no edge leaving to the other side.
// Returns the first vertex of such a component, or -1.
int isolated_component(const Matrix& lap, const std::vector<int>& members, const std::vector<char>& in_members) {
    const int n = lap.rows();
    std::vector<char> visited(members.size(), 0);
    std::vector<int> where(n, -1);
    for (size_t p = 0; p < members.size(); ++p) where[members[p]] = static_cast<int>(p);

    for (size_t start = 0; start < members.size(); ++start) {
        if (visited[start]) continue;
        std::vector<int> stack{static_cast<int>(start)};
        visited[start] = 1;
        bool crosses = false;
        while (!stack.empty()) {
            const int p = stack.back();
            stack.pop_back();
            const int v = members[p];
            for (int u = 0; u < n; ++u) {
                if (u == v || lap(v, u) == 0.0) continue;
                if (!in_members[u]) {
                    crosses = true;
                } else if (!visited[where[u]]) {
                    visited[where[u]] = 1;
                    stack.push_back(where[u]);
                }
            }
        }
        if (!crosses) return members[start];
    }
    return -1;
}

}  // namespace

AdmissibilityReport check_partition_admissible(const Matrix& lap, const VertexPartition& p) {
    const std::vector<int>& s = p.sample_set();
    const std::vector<int> sc = p.complement();

    const Matrix lss = principal_submatrix(lap, s, s);
    const Matrix lscsc = principal_submatrix(lap, sc, sc);
    const bool ok_s = cholesky_is_spd(lss, 1e-10);
    const bool ok_sc = cholesky_is_spd(lscsc, 1e-10);
    if (ok_s && ok_sc) return {true, "both Laplacian blocks positive definite"};

    AdmissibilityReport rep;
    std::vector<char> in_s(p.n(), 0);
    for (int v : s) in_s[v] = 1;
    std::vector<char> in_sc(p.n(), 0);
    for (int v : sc) in_sc[v] = 1;

    if (!ok_s) {
        const int v = isolated_component(lap, s, in_s);
        rep.detail = v >= 0 ? "component of S containing vertex " + std::to_string(v) + " has no edge into the complement"
                            : "L_SS not positive definite";
    } else {
        const int v = isolated_component(lap, sc, in_sc);
        rep.detail = v >= 0 ? "component of the complement containing vertex " + std::to_string(v) + " has no edge into S"
                            : "L_ScSc not positive definite";
    }
    return rep;
}

}  // namespace sfgft
