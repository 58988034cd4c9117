#include "capsp/tropical.hpp"

#include <algorithm>

namespace capsp {

Weight TropicalMatrix::at(NodeId r, NodeId c) const {
    if (r < 1 || r > n_ || c < 1 || c > n_)
        throw PreconditionViolated("tropical: index out of range");
    const auto& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, NodeId col) { return e.first < col; });
    if (it != row.end() && it->first == c) return it->second;
    return INF;
}

void TropicalMatrix::set(NodeId r, NodeId c, Weight w) {
    if (r < 1 || r > n_ || c < 1 || c > n_)
        throw PreconditionViolated("tropical: index out of range");
    auto& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, NodeId col) { return e.first < col; });
    bool present = (it != row.end() && it->first == c);
    if (w == INF) {
        if (present) {
            row.erase(it);
            --nnz_;
        }
        return;
    }
    if (present) {
        it->second = w;
    } else {
        row.insert(it, {c, w});
        ++nnz_;
    }
}

void TropicalMatrix::set_row(NodeId r, std::vector<std::pair<NodeId, Weight>> entries) {
    if (r < 1 || r > n_) throw PreconditionViolated("tropical: row out of range");
    std::sort(entries.begin(), entries.end());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].first < 1 || entries[i].first > n_ || entries[i].second == INF)
            throw PreconditionViolated("tropical: bad row entry");
        if (i > 0 && entries[i].first == entries[i - 1].first)
            throw PreconditionViolated("tropical: duplicate column in row");
    }
    nnz_ -= rows_[r].size();
    rows_[r] = std::move(entries);
    nnz_ += rows_[r].size();
}

TropicalMatrix adjacency_matrix(const Graph& g) {
    TropicalMatrix a(g.n());
    for (NodeId v = 1; v <= g.n(); ++v) a.set(v, v, 0);
    for (const Edge& e : g.edges()) {
        if (e.w < a.at(e.u, e.v)) a.set(e.u, e.v, e.w);
        if (!g.directed() && e.w < a.at(e.v, e.u)) a.set(e.v, e.u, e.w);
    }
    return a;
}

TropicalMatrix minplus_mul(const TropicalMatrix& a, const TropicalMatrix& b) {
    if (a.n() != b.n()) throw PreconditionViolated("tropical: size mismatch");
    int n = a.n();
    TropicalMatrix c(n);
    std::vector<Weight> acc(n + 1, INF);
    std::vector<NodeId> touched;
    for (NodeId i = 1; i <= n; ++i) {
        touched.clear();
        for (const auto& [k, w1] : a.row(i)) {
            for (const auto& [j, w2] : b.row(k)) {
                Weight cand = sat_add(w1, w2);
                if (cand < acc[j]) {
                    if (acc[j] == INF) touched.push_back(j);
                    acc[j] = cand;
                }
            }
        }
        std::vector<std::pair<NodeId, Weight>> row;
        row.reserve(touched.size());
        for (NodeId j : touched) {
            row.push_back({j, acc[j]});
            acc[j] = INF;
        }
        c.set_row(i, std::move(row));
    }
    return c;
}

TropicalMatrix minplus_power(const TropicalMatrix& a, int h) {
    if (h < 1) throw PreconditionViolated("tropical: power requires h >= 1");
    TropicalMatrix r = a;
    for (int t = 2; t <= h; ++t) r = minplus_mul(r, a);
    return r;
}

}  // namespace capsp
