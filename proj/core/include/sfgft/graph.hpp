#pragma once

#include <string>
#include <vector>

#include "sfgft/matrix.hpp"

namespace sfgft {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

// Undirected weighted graph, dense storage. Fine up to a few thousand
// vertices; the target workloads sit around n = 500.
class Graph {
public:
    explicit Graph(int n) : weights_(n, n) {}

    int n() const { return weights_.rows(); }

    // Stores both (i,j) and (j,i) so symmetry holds exactly.
    void add_edge(int i, int j, double w);

    double weight(int i, int j) const { return weights_(i, j); }
    const Matrix& weights() const { return weights_; }

private:
    Matrix weights_;
};

// Sample set S as sorted unique indices; the complement is implied.
class VertexPartition {
public:
    VertexPartition(std::vector<int> sample_set, int n);

    const std::vector<int>& sample_set() const { return sample_; }
    std::vector<int> complement() const;
    int n() const { return n_; }
    int size() const { return static_cast<int>(sample_.size()); }

    // True when |S| >= |S^c|; downstream assumptions want a small S.
    bool majority_sampled() const { return 2 * size() >= n_; }

private:
    std::vector<int> sample_;
    int n_;
};

Graph build_knn_graph(const std::vector<Point2>& points, int k, double sigma_d);

std::vector<double> degree_table(const Graph& g);
Matrix laplacian(const Graph& g);

Matrix principal_submatrix(const Matrix& a, const std::vector<int>& rows, const std::vector<int>& cols);

struct AdmissibilityReport {
    bool admissible = false;
    std::string detail;
};

// Both Laplacian blocks L_SS and L_ScSc must be positive definite for the
// folding transform to exist. Equivalent graph condition: every connected
// component induced by S touches S^c through at least one edge, and vice
// versa. The diagnostic names the first offending component.
AdmissibilityReport check_partition_admissible(const Matrix& lap, const VertexPartition& p);

}  // namespace sfgft
