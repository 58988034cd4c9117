#pragma once

#include <utility>
#include <vector>

#include "capsp/graph.hpp"
#include "capsp/types.hpp"

namespace capsp {

// Square matrix over the (min,+) semiring, stored sparsely: absent entry = INF.
// Rows/cols are 1..n. density() is (number of finite entries)/n.
class TropicalMatrix {
public:
    explicit TropicalMatrix(int n = 0) : n_(n), rows_(n + 1) {}

    int n() const { return n_; }
    std::size_t finite_entries() const { return nnz_; }
    double density() const { return n_ ? static_cast<double>(nnz_) / n_ : 0.0; }

    Weight at(NodeId r, NodeId c) const;
    void set(NodeId r, NodeId c, Weight w);  // w == INF erases

    // entries sorted by column
    const std::vector<std::pair<NodeId, Weight>>& row(NodeId r) const { return rows_[r]; }

    // Replace a whole row; entries must have distinct in-range columns.
    void set_row(NodeId r, std::vector<std::pair<NodeId, Weight>> entries);

    bool operator==(const TropicalMatrix& o) const {
        return n_ == o.n_ && rows_ == o.rows_;
    }

private:
    int n_;
    std::size_t nnz_ = 0;
    std::vector<std::vector<std::pair<NodeId, Weight>>> rows_;
};

// Adjacency matrix of g with explicit zero diagonal; undirected edges fill
// both triangles.
TropicalMatrix adjacency_matrix(const Graph& g);

// C[i,j] = min_k A[i,k] + B[k,j]  (exact, cost ~ sum of |row_A| * |row_B|)
TropicalMatrix minplus_mul(const TropicalMatrix& a, const TropicalMatrix& b);

// A^h in the (min,+) semiring. With a zero diagonal this is the <=h-hop
// distance closure. Requires h >= 1.
TropicalMatrix minplus_power(const TropicalMatrix& a, int h);

}  // namespace capsp
