#pragma once

#include <string>
#include <unordered_map>
#include <vector>
#include <iosfwd>

#include "capsp/types.hpp"

namespace capsp {

struct Edge {
    NodeId u = 0;
    NodeId v = 0;
    Weight w = 0;
};

// Simple weighted graph on nodes 1..n. Undirected edges are stored once with
// u < v; directed graphs keep (u,v) as given. No self loops; parallel inserts
// keep the minimum weight.
class Graph {
public:
    // weight_cap: maximum admissible edge weight, 0 = use n^3 (default bound),
    // INF = uncapped (for derived graphs whose weights are path sums).
    explicit Graph(int n = 0, bool directed = false, Weight weight_cap = 0);

    int n() const { return n_; }
    bool directed() const { return directed_; }
    Weight weight_cap() const { return weight_cap_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    void add_edge(NodeId u, NodeId v, Weight w);
    bool has_zero_weight_edge() const;
    Weight max_weight() const;

    // out-arcs per node (index 1..n); undirected edges appear both ways
    const std::vector<std::vector<std::pair<NodeId, Weight>>>& arcs() const;

private:
    std::uint64_t key(NodeId u, NodeId v) const;

    int n_;
    bool directed_;
    Weight weight_cap_;
    std::vector<Edge> edges_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
    mutable std::vector<std::vector<std::pair<NodeId, Weight>>> arcs_;
    mutable bool arcs_dirty_ = true;
};

// ---- generation ----------------------------------------------------------

// Parsed form of a --gen descriptor, e.g. "erdos_renyi:64:0.2:w=1-100".
struct GenSpec {
    std::string family;  // path | star | grid | clique | erdos_renyi | random_geometric
    int n = 0;
    double param = 0.0;  // edge probability / radius, family dependent
    Weight wmin = 1;
    Weight wmax = 1;
    static GenSpec parse(const std::string& descriptor);
    std::string to_string() const;
};

Graph gen_graph(const GenSpec& spec, std::uint64_t seed);

// ---- edge-list text format ----------------------------------------------
//
//   # n=<N> directed=<0|1>
//   u v w          (one line per edge, 1-based IDs)
//
// serialize(parse(s)) reproduces the canonical form bit-exactly.

Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_file(const std::string& path);
std::string serialize_edge_list(const Graph& g);
void write_edge_list_file(const Graph& g, const std::string& path);

// ---- derived graphs ------------------------------------------------------

// Undirected union of g with extra edges (parallel edges collapse to min).
Graph augment_undirected(const Graph& g, const std::vector<Edge>& extra);

}  // namespace capsp
