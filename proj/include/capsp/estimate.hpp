#pragma once

#include <unordered_map>
#include <vector>

#include "capsp/types.hpp"

namespace capsp {

// Full n x n distance estimate with a claimed approximation factor a:
// d(u,v) <= at(u,v) <= a * d(u,v) is the contract (soundness is audited in
// tests, never assumed).
class ApspEstimate {
public:
    ApspEstimate() = default;
    ApspEstimate(int n, double claimed_factor)
        : n_(n), factor_(claimed_factor),
          d_(static_cast<std::size_t>(n) * n, INF) {
        for (NodeId v = 1; v <= n; ++v) set(v, v, 0);
    }

    int n() const { return n_; }
    double claimed_factor() const { return factor_; }
    void set_claimed_factor(double f) { factor_ = f; }

    Weight at(NodeId u, NodeId v) const { return d_[idx(u, v)]; }
    void set(NodeId u, NodeId v, Weight w) { d_[idx(u, v)] = w; }

    Weight max_finite() const {
        Weight m = 0;
        for (Weight w : d_)
            if (w != INF && w > m) m = w;
        return m;
    }

private:
    std::size_t idx(NodeId u, NodeId v) const {
        if (u < 1 || u > n_ || v < 1 || v > n_)
            throw PreconditionViolated("estimate: index out of range");
        return static_cast<std::size_t>(u - 1) * n_ + (v - 1);
    }

    int n_ = 0;
    double factor_ = 1.0;
    std::vector<Weight> d_;
};

// Distance estimate defined only on declared (u,v) pairs (the candidate-set
// domain). Reads outside the domain throw: callers cannot silently consume
// values the distributed algorithm never computed.
class PartialEstimate {
public:
    PartialEstimate() = default;
    PartialEstimate(int n, double claimed_factor) : n_(n), factor_(claimed_factor), rows_(n + 1) {
        for (NodeId v = 1; v <= n; ++v) set(v, v, 0);
    }

    int n() const { return n_; }
    double claimed_factor() const { return factor_; }
    void set_claimed_factor(double f) { factor_ = f; }

    bool has(NodeId u, NodeId v) const {
        check(u, v);
        return rows_[u].count(v) != 0;
    }
    Weight at(NodeId u, NodeId v) const {
        check(u, v);
        auto it = rows_[u].find(v);
        if (it == rows_[u].end())
            throw PreconditionViolated("partial estimate: pair outside domain");
        return it->second;
    }
    void set(NodeId u, NodeId v, Weight w) {
        check(u, v);
        rows_[u][v] = w;
    }
    const std::unordered_map<NodeId, Weight>& row(NodeId u) const {
        check(u, u);
        return rows_[u];
    }

private:
    void check(NodeId u, NodeId v) const {
        if (u < 1 || u > n_ || v < 1 || v > n_)
            throw PreconditionViolated("partial estimate: index out of range");
    }

    int n_ = 0;
    double factor_ = 1.0;
    std::vector<std::unordered_map<NodeId, Weight>> rows_;
};

// Per-node k-nearest lists: entry = (node, dist), sorted by (dist, node id),
// exactly min(k, n) entries per node, self included at dist 0.
struct KNearestResult {
    int k = 0;
    // index 1..n; each inner vector: (neighbor id, distance)
    std::vector<std::vector<std::pair<NodeId, Weight>>> nearest;
};

}  // namespace capsp
