#include "dpchroma/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace dpchroma {

namespace {

// Sized for desk-scale graphs; grows nothing, resets in O(n).
struct Dsu {
    std::vector<int> parent;

    explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) { reset(); }

    void reset() { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }

    // true when the union merged two components
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(b)] = a;
        return true;
    }
};

} // namespace

int popcount(EdgeMask m) noexcept { return std::popcount(m); }

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw ValidationError("graph needs at least one vertex");
    for (auto& e : edges_) {
        if (e.u == e.v)
            throw ValidationError("loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n_)
            throw ValidationError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") out of range for n=" + std::to_string(n_));
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw ValidationError("duplicate edge in edge list");
    adj_.assign(static_cast<std::size_t>(n_), {});
    for (const auto& e : edges_) {
        adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::adjacent(int u, int v) const {
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    const Edge probe{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), probe);
    if (it == edges_.end() || *it != probe) return -1;
    return static_cast<int>(it - edges_.begin());
}

bool Graph::is_connected() const {
    return static_cast<int>(bfs_order(0).size()) == n_;
}

std::vector<int> Graph::bfs_order(int root) const {
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n_));
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    seen[static_cast<std::size_t>(root)] = 1;
    order.push_back(root);
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (int w : neighbors(order[head])) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                order.push_back(w);
            }
        }
    }
    return order;
}

ParsedGraph parse_edge_list(std::string_view text) {
    std::vector<std::pair<long long, long long>> raw_edges;
    long long header_n = -1;
    int line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::string_view body = std::string_view(line).substr(start);
        while (!body.empty() && (body.back() == '\r' || body.back() == ' ' || body.back() == '\t'))
            body.remove_suffix(1);
        if (body.starts_with("n=")) {
            long long k = -1;
            auto [p, ec] = std::from_chars(body.data() + 2, body.data() + body.size(), k);
            if (ec != std::errc{} || p != body.data() + body.size() || k < 1)
                throw ParseError("line " + std::to_string(line_no) + ": bad vertex-count header");
            header_n = k;
            continue;
        }
        long long u = -1, v = -1;
        std::istringstream ls{std::string(body)};
        std::string extra;
        if (!(ls >> u >> v) || (ls >> extra) || u < 0 || v < 0)
            throw ParseError("line " + std::to_string(line_no) + ": expected \"u v\" with nonnegative integers");
        if (u == v)
            throw ValidationError("line " + std::to_string(line_no) + ": loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        raw_edges.emplace_back(u, v);
    }
    {
        auto sorted = raw_edges;
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end())
            throw ValidationError("duplicate edge (" + std::to_string(dup->first) + "," +
                                  std::to_string(dup->second) + ")");
    }

    std::set<long long> label_set;
    for (auto [u, v] : raw_edges) {
        label_set.insert(u);
        label_set.insert(v);
    }
    // Dense 0-based label sets keep identity indexing (n = 1 + max label);
    // sparse ones are remapped in sorted order.
    std::vector<long long> labels(label_set.begin(), label_set.end());
    const bool dense = labels.empty() ||
                       (labels.front() == 0 && labels.back() == static_cast<long long>(labels.size()) - 1);
    std::map<long long, int> index;
    long long n = 0;
    if (dense) {
        n = labels.empty() ? 0 : labels.back() + 1;
        for (long long l : labels) index[l] = static_cast<int>(l);
        labels.clear();
        for (long long i = 0; i < n; ++i) labels.push_back(i);
    } else {
        n = static_cast<long long>(labels.size());
        for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = static_cast<int>(i);
    }
    if (header_n >= 0) {
        if (header_n < n)
            throw ValidationError("header n=" + std::to_string(header_n) + " smaller than the " +
                                  std::to_string(n) + " vertices used by edges");
        for (long long i = n; i < header_n; ++i) labels.push_back(dense ? i : -1);
        n = header_n;
    }
    if (n == 0) throw ParseError("empty edge list and no n=<k> header");
    if (n > 1'000'000) throw CapacityError("vertex count " + std::to_string(n) + " exceeds 1000000");

    std::vector<Edge> edges;
    edges.reserve(raw_edges.size());
    for (auto [u, v] : raw_edges) edges.push_back(Edge{index[u], index[v]});
    return ParsedGraph{Graph(static_cast<int>(n), std::move(edges)), std::move(labels)};
}

namespace {

Graph cycle_graph(int k) {
    if (k < 3) throw ValidationError("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int i = 0; i < k; ++i) e.push_back(Edge{i, (i + 1) % k});
    return Graph(k, std::move(e));
}

Graph complete_graph(int k) {
    if (k < 1) throw ValidationError("complete graph needs at least 1 vertex");
    std::vector<Edge> e;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) e.push_back(Edge{u, v});
    return Graph(k, std::move(e));
}

Graph path_graph(int k) {
    if (k < 1) throw ValidationError("path needs at least 1 vertex");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < k; ++i) e.push_back(Edge{i, i + 1});
    return Graph(k, std::move(e));
}

Graph glue_cycles(int g) {
    if (g < 3) throw ValidationError("glue-cycles needs g >= 3");
    // a g-cycle 0..g-1 and a (g+1)-cycle through 0 and g fresh vertices
    std::vector<Edge> e;
    for (int i = 0; i < g; ++i) e.push_back(Edge{i, (i + 1) % g});
    e.push_back(Edge{0, g});
    for (int i = g; i < 2 * g - 1; ++i) e.push_back(Edge{i, i + 1});
    e.push_back(Edge{0, 2 * g - 1});
    return Graph(2 * g, std::move(e));
}

int parse_positive(std::string_view s, const char* what) {
    int k = -1;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), k);
    if (ec != std::errc{} || p != s.data() + s.size() || k < 1)
        throw ParseError(std::string("bad ") + what + " parameter: \"" + std::string(s) + "\"");
    return k;
}

} // namespace

Graph make_named_graph(std::string_view spec) {
    std::string s(spec);
    // trim
    const auto first = s.find_first_not_of(" \t");
    const auto last = s.find_last_not_of(" \t");
    if (first == std::string::npos) throw ParseError("empty graph spec");
    s = s.substr(first, last - first + 1);

    auto split_arg = [&](std::string_view name) -> std::string {
        // "name k" or "name:k"
        std::string_view rest = std::string_view(s).substr(name.size());
        if (!rest.empty() && (rest[0] == ' ' || rest[0] == ':')) rest.remove_prefix(1);
        std::size_t b = rest.find_first_not_of(" \t");
        if (b == std::string_view::npos) throw ParseError("missing parameter in spec \"" + s + "\"");
        return std::string(rest.substr(b));
    };

    if (s.starts_with("cone ") || s.starts_with("cone:")) {
        const std::string inner = split_arg("cone");
        if (std::filesystem::exists(inner)) {
            std::ifstream f(inner);
            std::stringstream buf;
            buf << f.rdbuf();
            return cone(parse_edge_list(buf.str()).graph);
        }
        return cone(make_named_graph(inner));
    }
    if (s.starts_with("glue-cycles ") || s.starts_with("glue-cycles:"))
        return glue_cycles(parse_positive(split_arg("glue-cycles"), "glue-cycles"));
    if (s.starts_with("glue ") || s.starts_with("glue:"))
        return glue_cycles(parse_positive(split_arg("glue"), "glue-cycles"));
    if (s.starts_with("Cn ") || s.starts_with("Cn:")) return cycle_graph(parse_positive(split_arg("Cn"), "cycle"));
    if (s.starts_with("Kn ") || s.starts_with("Kn:")) return complete_graph(parse_positive(split_arg("Kn"), "complete"));
    if (s.starts_with("Pn ") || s.starts_with("Pn:")) return path_graph(parse_positive(split_arg("Pn"), "path"));
    if (s.starts_with("Wn ") || s.starts_with("Wn:")) return cone(cycle_graph(parse_positive(split_arg("Wn"), "wheel")));

    if (s.size() >= 2) {
        const char head = s[0];
        const std::string_view digits = std::string_view(s).substr(1);
        const bool numeric = std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; });
        if (numeric) {
            switch (head) {
                case 'C': return cycle_graph(parse_positive(digits, "cycle"));
                case 'K': return complete_graph(parse_positive(digits, "complete"));
                case 'P': return path_graph(parse_positive(digits, "path"));
                case 'W': return cone(cycle_graph(parse_positive(digits, "wheel")));
                default: break;
            }
        }
    }
    throw ParseError("unknown graph spec \"" + s + "\"");
}

int girth(const Graph& g) {
    // shortest cycle through each root via BFS; min over roots is exact
    const int n = g.vertex_count();
    int best = kGirthInfinity;
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(n));
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        queue.push_back(root);
        dist[static_cast<std::size_t>(root)] = 0;
        parent[static_cast<std::size_t>(root)] = -1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int x = queue[head];
            for (int w : g.neighbors(x)) {
                if (w == parent[static_cast<std::size_t>(x)]) continue;
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(x)] + 1;
                    parent[static_cast<std::size_t>(w)] = x;
                    queue.push_back(w);
                } else {
                    const int len = dist[static_cast<std::size_t>(x)] + dist[static_cast<std::size_t>(w)] + 1;
                    best = std::min(best, len);
                }
            }
        }
    }
    return best;
}

int component_count(const Graph& g, EdgeMask edge_subset) {
    const int s = g.edge_count();
    if (s > kMaxEdgeMaskBits)
        throw CapacityError("edge masks support at most " + std::to_string(kMaxEdgeMaskBits) + " edges");
    if (s < 64 && (edge_subset >> s) != 0)
        throw ValidationError("edge subset out of range");
    Dsu dsu(g.vertex_count());
    int merges = 0;
    for (EdgeMask bits = edge_subset; bits != 0; bits &= bits - 1) {
        const int i = std::countr_zero(bits);
        if (dsu.unite(g.edge(i).u, g.edge(i).v)) ++merges;
    }
    return g.vertex_count() - merges;
}

EdgeMask spanning_tree(const Graph& g) {
    if (g.edge_count() > kMaxEdgeMaskBits)
        throw CapacityError("edge masks support at most " + std::to_string(kMaxEdgeMaskBits) + " edges");
    const int n = g.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    EdgeMask tree = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int x = queue[head];
        for (int w : g.neighbors(x)) {
            if (seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = 1;
            tree |= EdgeMask{1} << g.edge_index(x, w);
            queue.push_back(w);
        }
    }
    if (static_cast<int>(queue.size()) != n)
        throw ValidationError("graph is disconnected; handle components separately");
    return tree;
}

EdgeMask star_tree(const Graph& g, int apex) {
    if (apex < 0 || apex >= g.vertex_count()) throw ValidationError("apex out of range");
    if (g.degree(apex) != g.vertex_count() - 1)
        throw ValidationError("vertex " + std::to_string(apex) + " is not adjacent to every other vertex");
    if (g.edge_count() > kMaxEdgeMaskBits)
        throw CapacityError("edge masks support at most " + std::to_string(kMaxEdgeMaskBits) + " edges");
    EdgeMask star = 0;
    for (int w : g.neighbors(apex)) star |= EdgeMask{1} << g.edge_index(apex, w);
    return star;
}

long long count_cycles_of_length(const Graph& g, int length) {
    if (length < 3) throw ValidationError("cycles have length >= 3");
    const int n = g.vertex_count();
    long long doubled = 0;
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    std::vector<int> path;
    // paths rooted at the cycle's minimum vertex, so each cycle is seen
    // exactly twice (once per direction)
    auto dfs = [&](auto&& self, int root, int last) -> void {
        if (static_cast<int>(path.size()) == length) {
            if (g.adjacent(last, root)) ++doubled;
            return;
        }
        for (int w : g.neighbors(last)) {
            if (w <= root || on_path[static_cast<std::size_t>(w)]) continue;
            on_path[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            self(self, root, w);
            path.pop_back();
            on_path[static_cast<std::size_t>(w)] = 0;
        }
    };
    for (int root = 0; root < n; ++root) {
        path.assign(1, root);
        on_path[static_cast<std::size_t>(root)] = 1;
        dfs(dfs, root, root);
        on_path[static_cast<std::size_t>(root)] = 0;
    }
    return doubled / 2;
}

Graph cone(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Edge> edges = g.edges();
    for (int v = 0; v < n; ++v) edges.push_back(Edge{v, n});
    return Graph(n + 1, std::move(edges));
}

int find_apex(const Graph& g) {
    for (int v = g.vertex_count() - 1; v >= 0; --v)
        if (g.degree(v) == g.vertex_count() - 1) return v;
    return -1;
}

std::string refined_canonical_key(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = g.degree(v);

    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (int round = 0; round < n; ++round) {
        for (int v = 0; v < n; ++v) {
            auto& s = sig[static_cast<std::size_t>(v)];
            s.clear();
            s.push_back(color[static_cast<std::size_t>(v)]);
            for (int w : g.neighbors(v)) s.push_back(color[static_cast<std::size_t>(w)]);
            std::sort(s.begin() + 1, s.end());
        }
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)];
        });
        std::vector<int> next(static_cast<std::size_t>(n));
        int c = 0;
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (i > 0 && sig[static_cast<std::size_t>(order[i])] != sig[static_cast<std::size_t>(order[i - 1])]) ++c;
            next[static_cast<std::size_t>(order[i])] = c;
        }
        if (next == color) break;
        color = std::move(next);
    }

    // deterministic relabel: stable order by final color, ties by old index
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return color[static_cast<std::size_t>(a)] < color[static_cast<std::size_t>(b)];
    });
    std::vector<int> relabel(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < order.size(); ++i) relabel[static_cast<std::size_t>(order[i])] = static_cast<int>(i);

    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const auto& e : g.edges()) {
        int a = relabel[static_cast<std::size_t>(e.u)];
        int b = relabel[static_cast<std::size_t>(e.v)];
        if (a > b) std::swap(a, b);
        edges.push_back(Edge{a, b});
    }
    std::sort(edges.begin(), edges.end());
    std::string key = std::to_string(n) + ";";
    for (const auto& e : edges) key += std::to_string(e.u) + "-" + std::to_string(e.v) + ",";
    return key;
}

} // namespace dpchroma
