#include "capsp/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>

#include "capsp/rng.hpp"

namespace capsp {

Graph::Graph(int n, bool directed, Weight weight_cap)
    : n_(n), directed_(directed), weight_cap_(weight_cap) {
    if (n < 0) throw PreconditionViolated("graph: negative node count");
    if (weight_cap_ == 0) {
        Weight nn = static_cast<Weight>(std::max(n, 1));
        weight_cap_ = sat_mul(sat_mul(nn, nn), nn);  // n^3 default bound
    }
}

std::uint64_t Graph::key(NodeId u, NodeId v) const {
    if (!directed_ && u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

void Graph::add_edge(NodeId u, NodeId v, Weight w) {
    if (u < 1 || u > n_ || v < 1 || v > n_)
        throw PreconditionViolated("graph: node id out of range");
    if (u == v) throw PreconditionViolated("graph: self loop");
    if (w > weight_cap_ && w != INF)
        throw PreconditionViolated("graph: edge weight exceeds cap");
    if (w == INF) throw PreconditionViolated("graph: infinite edge weight");
    auto it = index_.find(key(u, v));
    if (it != index_.end()) {
        if (w < edges_[it->second].w) edges_[it->second].w = w;
        arcs_dirty_ = true;
        return;
    }
    Edge e{u, v, w};
    if (!directed_ && e.u > e.v) std::swap(e.u, e.v);
    index_.emplace(key(u, v), edges_.size());
    edges_.push_back(e);
    arcs_dirty_ = true;
}

bool Graph::has_zero_weight_edge() const {
    for (const Edge& e : edges_)
        if (e.w == 0) return true;
    return false;
}

Weight Graph::max_weight() const {
    Weight m = 0;
    for (const Edge& e : edges_) m = std::max(m, e.w);
    return m;
}

const std::vector<std::vector<std::pair<NodeId, Weight>>>& Graph::arcs() const {
    if (arcs_dirty_) {
        arcs_.assign(n_ + 1, {});
        for (const Edge& e : edges_) {
            arcs_[e.u].push_back({e.v, e.w});
            if (!directed_) arcs_[e.v].push_back({e.u, e.w});
        }
        for (auto& a : arcs_) std::sort(a.begin(), a.end());
        arcs_dirty_ = false;
    }
    return arcs_;
}

// ---- generation ----------------------------------------------------------

GenSpec GenSpec::parse(const std::string& descriptor) {
    GenSpec s;
    std::vector<std::string> parts;
    std::stringstream ss(descriptor);
    std::string tok;
    while (std::getline(ss, tok, ':')) parts.push_back(tok);
    if (parts.empty()) throw PreconditionViolated("gen: empty descriptor");

    std::size_t i = 0;
    s.family = parts[i++];
    if (i >= parts.size()) throw PreconditionViolated("gen: missing node count");
    s.n = std::stoi(parts[i++]);

    bool needs_param = (s.family == "erdos_renyi" || s.family == "random_geometric");
    if (needs_param) {
        if (i >= parts.size()) throw PreconditionViolated("gen: missing parameter for " + s.family);
        s.param = std::stod(parts[i++]);
    }
    if (i < parts.size()) {
        const std::string& wr = parts[i];
        if (wr.rfind("w=", 0) != 0) throw PreconditionViolated("gen: bad weight range " + wr);
        auto dash = wr.find('-', 2);
        if (dash == std::string::npos) {
            s.wmin = s.wmax = std::stoull(wr.substr(2));
        } else {
            s.wmin = std::stoull(wr.substr(2, dash - 2));
            s.wmax = std::stoull(wr.substr(dash + 1));
        }
        if (s.wmin > s.wmax) throw PreconditionViolated("gen: wmin > wmax");
        ++i;
    }
    if (i != parts.size()) throw PreconditionViolated("gen: trailing tokens in descriptor");
    return s;
}

std::string GenSpec::to_string() const {
    std::ostringstream os;
    os << family << ':' << n;
    if (family == "erdos_renyi" || family == "random_geometric") os << ':' << param;
    os << ":w=" << wmin << '-' << wmax;
    return os.str();
}

namespace {

Weight draw_weight(const GenSpec& s, SplitRng& rng) {
    if (s.wmin == s.wmax) return s.wmin;
    return rng.next_in(s.wmin, s.wmax);
}

}  // namespace

Graph gen_graph(const GenSpec& spec, std::uint64_t seed) {
    if (spec.n < 1) throw PreconditionViolated("gen: n must be >= 1");
    Graph g(spec.n, false);
    if (spec.wmax > g.weight_cap())
        throw PreconditionViolated("gen: weight range exceeds n^3 cap");
    SplitRng rng(seed, "gen", static_cast<std::uint64_t>(spec.n));

    if (spec.family == "path") {
        for (int u = 1; u < spec.n; ++u) g.add_edge(u, u + 1, draw_weight(spec, rng));
    } else if (spec.family == "star") {
        for (int u = 2; u <= spec.n; ++u) g.add_edge(1, u, draw_weight(spec, rng));
    } else if (spec.family == "grid") {
        // r x c row-major grid truncated to exactly n nodes
        int r = static_cast<int>(std::sqrt(static_cast<double>(spec.n)));
        if (r < 1) r = 1;
        int c = (spec.n + r - 1) / r;
        auto id = [&](int row, int col) { return row * c + col + 1; };
        for (int row = 0; row * c < spec.n; ++row) {
            for (int col = 0; col < c; ++col) {
                int u = id(row, col);
                if (u > spec.n) break;
                if (col + 1 < c && id(row, col + 1) <= spec.n)
                    g.add_edge(u, id(row, col + 1), draw_weight(spec, rng));
                if (id(row + 1, col) <= spec.n)
                    g.add_edge(u, id(row + 1, col), draw_weight(spec, rng));
            }
        }
    } else if (spec.family == "clique") {
        for (int u = 1; u <= spec.n; ++u)
            for (int v = u + 1; v <= spec.n; ++v) g.add_edge(u, v, draw_weight(spec, rng));
    } else if (spec.family == "erdos_renyi") {
        if (spec.param < 0.0 || spec.param > 1.0)
            throw PreconditionViolated("gen: erdos_renyi probability out of [0,1]");
        for (int u = 1; u <= spec.n; ++u)
            for (int v = u + 1; v <= spec.n; ++v)
                if (rng.next_bernoulli(spec.param)) g.add_edge(u, v, draw_weight(spec, rng));
    } else if (spec.family == "random_geometric") {
        if (spec.param <= 0.0) throw PreconditionViolated("gen: radius must be positive");
        std::vector<double> x(spec.n + 1), y(spec.n + 1);
        for (int u = 1; u <= spec.n; ++u) {
            x[u] = rng.next_double();
            y[u] = rng.next_double();
        }
        double r2 = spec.param * spec.param;
        for (int u = 1; u <= spec.n; ++u)
            for (int v = u + 1; v <= spec.n; ++v) {
                double dx = x[u] - x[v], dy = y[u] - y[v];
                if (dx * dx + dy * dy <= r2) g.add_edge(u, v, draw_weight(spec, rng));
            }
    } else {
        throw PreconditionViolated("gen: unknown family " + spec.family);
    }
    return g;
}

// ---- edge-list text format ----------------------------------------------

Graph parse_edge_list(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw PreconditionViolated("edge list: empty input");
    int n = -1, directed = -1;
    {
        std::istringstream hs(line);
        std::string hash, kv;
        hs >> hash;
        if (hash != "#") throw PreconditionViolated("edge list: missing '#' header");
        while (hs >> kv) {
            auto eq = kv.find('=');
            if (eq == std::string::npos) throw PreconditionViolated("edge list: bad header token " + kv);
            std::string k = kv.substr(0, eq), v = kv.substr(eq + 1);
            if (k == "n") n = std::stoi(v);
            else if (k == "directed") directed = std::stoi(v);
            else throw PreconditionViolated("edge list: unknown header key " + k);
        }
    }
    if (n < 0 || directed < 0) throw PreconditionViolated("edge list: header must set n and directed");
    Graph g(n, directed != 0);
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        long long u, v;
        unsigned long long w;
        if (!(ls >> u >> v >> w)) throw PreconditionViolated("edge list: bad edge line: " + line);
        g.add_edge(static_cast<NodeId>(u), static_cast<NodeId>(v), static_cast<Weight>(w));
    }
    return g;
}

Graph parse_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionViolated("edge list: cannot open " + path);
    return parse_edge_list(in);
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream os;
    os << "# n=" << g.n() << " directed=" << (g.directed() ? 1 : 0) << '\n';
    std::vector<Edge> sorted = g.edges();
    std::sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    for (const Edge& e : sorted) os << e.u << ' ' << e.v << ' ' << e.w << '\n';
    return os.str();
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw PreconditionViolated("edge list: cannot write " + path);
    out << serialize_edge_list(g);
}

Graph augment_undirected(const Graph& g, const std::vector<Edge>& extra) {
    if (g.directed()) throw PreconditionViolated("augment: base graph must be undirected");
    Graph out(g.n(), false, INF);
    for (const Edge& e : g.edges()) out.add_edge(e.u, e.v, e.w);
    for (const Edge& e : extra)
        if (e.u != e.v) out.add_edge(e.u, e.v, e.w);
    return out;
}

}  // namespace capsp
