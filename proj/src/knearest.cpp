#include "capsp/knearest.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>
#include <unordered_map>

namespace capsp {

FilteredMatrix filter_rows(const TropicalMatrix& a, int k) {
    if (k < 1) throw PreconditionViolated("filter_rows: k must be >= 1");
    FilteredMatrix f{TropicalMatrix(a.n()), k};
    for (NodeId r = 1; r <= a.n(); ++r) {
        std::vector<std::pair<NodeId, Weight>> row = a.row(r);
        std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) {
            return std::tie(x.second, x.first) < std::tie(y.second, y.first);
        });
        if (static_cast<int>(row.size()) > k) row.resize(k);
        f.base.set_row(r, std::move(row));
    }
    return f;
}

FilteredMatrix filtered_union_adjacency(const Graph& g,
                                        const std::vector<Edge>& extra, int k) {
    if (k < 1) throw PreconditionViolated("filtered_union_adjacency: k must be >= 1");
    int n = g.n();
    std::vector<std::vector<std::pair<NodeId, Weight>>> inc(n + 1);
    for (const Edge& e : extra) {
        if (e.u < 1 || e.u > n || e.v < 1 || e.v > n)
            throw PreconditionViolated("filtered_union_adjacency: extra edge out of range");
        inc[e.u].push_back({e.v, e.w});
        if (e.u != e.v) inc[e.v].push_back({e.u, e.w});
    }
    FilteredMatrix f{TropicalMatrix(n), k};
    std::unordered_map<NodeId, Weight> best;
    for (NodeId u = 1; u <= n; ++u) {
        best.clear();
        best[u] = 0;
        auto fold = [&](NodeId v, Weight w) {
            auto it = best.find(v);
            if (it == best.end())
                best.emplace(v, w);
            else if (w < it->second)
                it->second = w;
        };
        for (const auto& [v, w] : g.arcs()[u]) fold(v, w);
        for (const auto& [v, w] : inc[u]) fold(v, w);
        std::vector<std::pair<NodeId, Weight>> row(best.begin(), best.end());
        std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) {
            return std::tie(x.second, x.first) < std::tie(y.second, y.first);
        });
        if (static_cast<int>(row.size()) > k) row.resize(k);
        f.base.set_row(u, std::move(row));
    }
    return f;
}

BinAssignment make_bins(int n, int h, int k) {
    if (n < 1 || h < 1 || k < 1) throw PreconditionViolated("make_bins: bad parameters");
    BinAssignment b;
    b.h = h;
    b.slots = static_cast<long long>(n) * k;
    b.p = static_cast<int>(std::floor(
        std::pow(static_cast<double>(n), 1.0 / h) * h / 4.0 + 1e-12));
    if (b.p < h || b.p < 1 || (b.slots / std::max(b.p, 1)) <= k) {
        b.degenerate = true;
        return b;
    }
    b.start.resize(b.p + 1);
    for (int i = 0; i <= b.p; ++i) b.start[i] = b.slots * i / b.p;

    // (first, sorted rest) in lexicographic order; count = p * C(p-1, h-1) <= n
    std::vector<int> rest(h - 1);
    for (int first = 0; first < b.p; ++first) {
        // enumerate (h-1)-subsets of {0..p-1} \ {first} in lex order
        std::vector<int> pool;
        for (int i = 0; i < b.p; ++i)
            if (i != first) pool.push_back(i);
        std::vector<int> idx(h - 1);
        for (int i = 0; i < h - 1; ++i) idx[i] = i;
        while (true) {
            for (int i = 0; i < h - 1; ++i) rest[i] = pool[idx[i]];
            b.combos.push_back({first, rest});
            int i = h - 2;
            while (i >= 0 && idx[i] == static_cast<int>(pool.size()) - (h - 1 - i)) --i;
            if (i < 0) break;  // h == 1 lands here immediately: one combo per bin
            ++idx[i];
            for (int j = i + 1; j < h - 1; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    if (static_cast<long long>(b.combos.size()) > n)
        throw SizeViolation("make_bins: " + std::to_string(b.combos.size()) +
                            " combinations exceed n=" + std::to_string(n));
    return b;
}

namespace {

struct Triplet {
    NodeId u, v;
    Weight w;
};

// k smallest (dist, node) targets reachable from src in <= h hops over edges
std::vector<std::pair<NodeId, Weight>> hop_limited_nearest(
    NodeId src, int h, int k, const std::vector<Triplet>& edges) {
    std::unordered_map<NodeId, Weight> cur;
    cur[src] = 0;
    for (int t = 0; t < h; ++t) {
        std::unordered_map<NodeId, Weight> next = cur;
        bool changed = false;
        for (const Triplet& e : edges) {
            auto it = cur.find(e.u);
            if (it == cur.end()) continue;
            Weight nd = sat_add(it->second, e.w);
            auto jt = next.find(e.v);
            if (jt == next.end() || nd < jt->second) {
                next[e.v] = nd;
                changed = true;
            }
        }
        cur = std::move(next);
        if (!changed) break;
    }
    std::vector<std::pair<NodeId, Weight>> out(cur.begin(), cur.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::tie(a.second, a.first) < std::tie(b.second, b.first);
    });
    if (static_cast<int>(out.size()) > k) out.resize(k);
    return out;
}

// Row filter of a^h computed row by row: the intermediate powers of even a
// filtered matrix can be quadratically dense, so the full product is never
// materialized. Matches filter_rows(minplus_power(a, h), k) entry for entry.
FilteredMatrix filtered_power(const TropicalMatrix& a, int h, int k) {
    const int n = a.n();
    FilteredMatrix out{TropicalMatrix(n), k};
    std::vector<Weight> da(n + 1, INF), db(n + 1, INF);
    std::vector<std::uint32_t> sa(n + 1, 0), sb(n + 1, 0);
    std::uint32_t epoch = 0;
    std::vector<NodeId> cur, next;
    for (NodeId r = 1; r <= n; ++r) {
        ++epoch;
        cur.clear();
        for (const auto& [v, w] : a.row(r)) {
            da[v] = w;
            sa[v] = epoch;
            cur.push_back(v);
        }
        for (int step = 1; step < h; ++step) {
            std::uint32_t prev = epoch++;
            next.clear();
            for (NodeId w : cur) {
                Weight dw = (sa[w] == prev) ? da[w] : INF;
                for (const auto& [v, wv] : a.row(w)) {
                    Weight nd = sat_add(dw, wv);
                    if (sb[v] != epoch) {
                        sb[v] = epoch;
                        db[v] = nd;
                        next.push_back(v);
                    } else if (nd < db[v]) {
                        db[v] = nd;
                    }
                }
            }
            std::swap(da, db);
            std::swap(sa, sb);
            std::swap(cur, next);
        }
        std::vector<std::pair<NodeId, Weight>> row;
        row.reserve(cur.size());
        for (NodeId v : cur) row.push_back({v, da[v]});
        std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) {
            return std::tie(x.second, x.first) < std::tie(y.second, y.first);
        });
        if (static_cast<int>(row.size()) > k) row.resize(k);
        out.base.set_row(r, std::move(row));
    }
    return out;
}

}  // namespace

FilteredMatrix knearest_one_iter(const TropicalMatrix& a, int h, int k,
                                 RoundLedger& ledger, const KnearestOpts& opts) {
    int n = a.n();
    if (h < 1) throw PreconditionViolated("knearest: h must be >= 1");
    if (k < 1) throw PreconditionViolated("knearest: k must be >= 1");
    double kcap = opts.c_k * std::pow(static_cast<double>(n), 1.0 / h);
    if (static_cast<double>(k) > kcap + 1e-9)
        throw PreconditionViolated("knearest: k=" + std::to_string(k) +
                                   " exceeds c_k * n^(1/h) = " + std::to_string(kcap));

    FilteredMatrix abar = filter_rows(a, k);
    BinAssignment bins = make_bins(n, h, k);

    if (bins.degenerate) {
        // tiny regime: every node learns every list and solves locally
        broadcast(ledger, static_cast<std::uint64_t>(n) * k, "knearest_broadcast");
        return filtered_power(abar.base, h, k);
    }

    bool simulate = n <= opts.materialize_threshold;

    // padded slot list: node u owns slots [(u-1)*k, u*k)
    std::vector<Triplet> slot(bins.slots);
    for (NodeId u = 1; u <= n; ++u) {
        const auto& row = abar.base.row(u);
        std::vector<std::pair<NodeId, Weight>> ord(row.begin(), row.end());
        std::sort(ord.begin(), ord.end(), [](const auto& x, const auto& y) {
            return std::tie(x.second, x.first) < std::tie(y.second, y.first);
        });
        for (int j = 0; j < k; ++j) {
            long long s = static_cast<long long>(u - 1) * k + j;
            if (j < static_cast<int>(ord.size()))
                slot[s] = {u, ord[j].first, ord[j].second};
            else
                slot[s] = {u, 0, INF};  // padding, ignored by path computations
        }
    }
    auto owner_of = [&](long long s) { return static_cast<NodeId>(s / k) + 1; };

    // Step 3: each combination node learns the contents of its h bins
    int ncombo = static_cast<int>(bins.combos.size());
    MessageBatch learn;
    for (int ci = 0; ci < ncombo; ++ci) {
        NodeId w = ci + 1;
        std::vector<int> all_bins = bins.combos[ci].second;
        all_bins.push_back(bins.combos[ci].first);
        std::sort(all_bins.begin(), all_bins.end());
        for (int bi : all_bins) {
            long long s = bins.start[bi];
            while (s < bins.start[bi + 1]) {
                NodeId u = owner_of(s);
                long long end = std::min(bins.start[bi + 1],
                                         static_cast<long long>(u) * k);
                std::size_t words = static_cast<std::size_t>(end - s);
                if (simulate) {
                    std::vector<std::uint64_t> payload;
                    payload.reserve(words * 3);
                    for (long long t = s; t < end; ++t) {
                        payload.push_back(static_cast<std::uint64_t>(slot[t].u));
                        payload.push_back(static_cast<std::uint64_t>(slot[t].v));
                        payload.push_back(slot[t].w);
                    }
                    learn.add_packed(u, w, std::move(payload), words);
                } else {
                    learn.add_sized(u, w, words);
                }
                s = end;
            }
        }
    }
    auto learn_inbox = route_validated(ledger, learn, 12.0, "knearest_bins");

    // Step 4: owners query the combination nodes whose first bin holds part of
    // their list; responses carry each queried node's k nearest candidates.
    std::vector<std::vector<int>> queries_of(n + 1);  // u -> combo indices
    long long per_first = static_cast<long long>(ncombo) / bins.p;
    for (NodeId u = 1; u <= n; ++u) {
        long long lo = static_cast<long long>(u - 1) * k, hi = lo + k;
        for (int ci = 0; ci < ncombo; ++ci) {
            int fb = bins.combos[ci].first;
            if (bins.start[fb] < hi && lo < bins.start[fb + 1]) queries_of[u].push_back(ci);
        }
        if (static_cast<long long>(queries_of[u].size()) > 2 * per_first)
            throw SizeViolation("knearest: node " + std::to_string(u) + " queries " +
                                std::to_string(queries_of[u].size()) +
                                " combination nodes, bound " + std::to_string(2 * per_first));
    }
    MessageBatch queries;
    for (NodeId u = 1; u <= n; ++u)
        for (int ci : queries_of[u])
            queries.add_packed(u, ci + 1, {static_cast<std::uint64_t>(u)}, 1);
    route_validated(ledger, queries, 4.0, "knearest_queries");

    FilteredMatrix out{TropicalMatrix(n), k};

    if (simulate) {
        // reconstruct each combination node's edge set from its inbox
        std::vector<std::vector<Triplet>> known(ncombo + 1);
        for (int ci = 0; ci < ncombo; ++ci) {
            NodeId w = ci + 1;
            for (const Message& m : learn_inbox[w])
                for (std::size_t i = 0; i + 2 < m.payload.size(); i += 3)
                    if (m.payload[i + 2] != INF)
                        known[w].push_back({static_cast<NodeId>(m.payload[i]),
                                            static_cast<NodeId>(m.payload[i + 1]),
                                            m.payload[i + 2]});
        }
        MessageBatch responses;
        std::vector<std::vector<std::vector<std::pair<NodeId, Weight>>>> reply(n + 1);
        for (NodeId u = 1; u <= n; ++u) {
            for (int ci : queries_of[u]) {
                auto nearest = hop_limited_nearest(u, h, k, known[ci + 1]);
                std::vector<std::uint64_t> payload;
                payload.reserve(nearest.size() * 2);
                for (const auto& [v, d] : nearest) {
                    payload.push_back(static_cast<std::uint64_t>(v));
                    payload.push_back(d);
                }
                responses.add_packed(ci + 1, u, std::move(payload), nearest.size());
                reply[u].push_back(std::move(nearest));
            }
        }
        route_validated(ledger, responses, 12.0, "knearest_responses");
        for (NodeId u = 1; u <= n; ++u) {
            std::unordered_map<NodeId, Weight> best;
            for (const auto& lst : reply[u])
                for (const auto& [v, d] : lst) {
                    auto it = best.find(v);
                    if (it == best.end() || d < it->second) best[v] = d;
                }
            std::vector<std::pair<NodeId, Weight>> merged(best.begin(), best.end());
            std::sort(merged.begin(), merged.end(), [](const auto& x, const auto& y) {
                return std::tie(x.second, x.first) < std::tie(y.second, y.first);
            });
            if (static_cast<int>(merged.size()) > k) merged.resize(k);
            out.base.set_row(u, std::move(merged));
        }
    } else {
        // size-only responses, algebraic result (provably the same rows)
        MessageBatch responses;
        for (NodeId u = 1; u <= n; ++u)
            for (int ci : queries_of[u])
                responses.add_sized(ci + 1, u, static_cast<std::size_t>(k));
        route_validated(ledger, responses, 12.0, "knearest_responses");
        out = filtered_power(abar.base, h, k);
    }
    return out;
}

FilteredMatrix knearest_iter(const TropicalMatrix& a, int h, int k, int iters,
                             RoundLedger& ledger, const KnearestOpts& opts) {
    if (iters < 1) throw PreconditionViolated("knearest_iter: iters must be >= 1");
    FilteredMatrix cur{a, k};
    for (int i = 0; i < iters; ++i) cur = knearest_one_iter(cur.base, h, k, ledger, opts);
    return cur;
}

}  // namespace capsp
