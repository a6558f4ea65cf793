#include "semireg/multigraph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace semireg {

namespace {

void check_vertex(int v, int n) {
    if (v < 0 || v >= n) throw std::invalid_argument("vertex index out of range");
}

std::pair<int, int> norm_pair(int u, int v) {
    return u <= v ? std::make_pair(u, v) : std::make_pair(v, u);
}

// neighbor lists; a loop at v appears once in adj[v]
std::vector<std::vector<int>> adjacency_lists(const Multigraph& g) {
    std::vector<std::vector<int>> adj(g.n);
    for (auto [u, v] : g.edges) {
        check_vertex(u, g.n);
        check_vertex(v, g.n);
        if (u == v) {
            adj[u].push_back(u);
        } else {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
    }
    return adj;
}

}  // namespace

bool Multigraph::has_loops() const {
    return std::any_of(edges.begin(), edges.end(),
                       [](const auto& e) { return e.first == e.second; });
}

bool Multigraph::has_multi_edges() const {
    std::vector<std::pair<int, int>> norm;
    norm.reserve(edges.size());
    for (auto [u, v] : edges) norm.push_back(norm_pair(u, v));
    std::sort(norm.begin(), norm.end());
    return std::adjacent_find(norm.begin(), norm.end()) != norm.end();
}

std::vector<int> degree_sequence(const Multigraph& g) {
    std::vector<int> deg(g.n, 0);
    for (auto [u, v] : g.edges) {
        check_vertex(u, g.n);
        check_vertex(v, g.n);
        if (u == v) {
            deg[u] += 1;  // loop convention: a loop adds 1
        } else {
            deg[u] += 1;
            deg[v] += 1;
        }
    }
    return deg;
}

std::vector<std::pair<int, int>> degree_histogram(const Multigraph& g) {
    std::map<int, int> h;
    for (int d : degree_sequence(g)) h[d] += 1;
    return {h.begin(), h.end()};
}

DenseMatrix adjacency(const Multigraph& g) {
    DenseMatrix m;
    m.n = g.n;
    m.a.assign(static_cast<std::size_t>(g.n) * g.n, 0.0);
    for (auto [u, v] : g.edges) {
        if (u == v) {
            m.at(u, u) += 1.0;
        } else {
            m.at(u, v) += 1.0;
            m.at(v, u) += 1.0;
        }
    }
    return m;
}

DenseMatrix laplacian(const Multigraph& g) {
    DenseMatrix m;
    m.n = g.n;
    m.a.assign(static_cast<std::size_t>(g.n) * g.n, 0.0);
    for (auto [u, v] : g.edges) {
        if (u == v) continue;  // self-loops do not change the Laplacian
        m.at(u, u) += 1.0;
        m.at(v, v) += 1.0;
        m.at(u, v) -= 1.0;
        m.at(v, u) -= 1.0;
    }
    return m;
}

bool is_connected(const Multigraph& g) {
    if (g.n < 1) throw std::invalid_argument("is_connected: empty graph");
    if (g.n == 1) return true;
    auto adj = adjacency_lists(g);
    std::vector<char> seen(g.n, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int count = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : adj[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                queue.push_back(v);
            }
        }
    }
    return count == g.n;
}

std::optional<int> girth(const Multigraph& g) {
    if (g.has_loops()) return 1;
    if (g.has_multi_edges()) return 2;

    // simple graph: min over BFS roots of dist[u]+dist[v]+1 at non-tree edges
    auto adj = adjacency_lists(g);
    const int inf = std::numeric_limits<int>::max();
    int best = inf;
    std::vector<int> dist(g.n), parent(g.n);
    for (int root = 0; root < g.n; ++root) {
        std::fill(dist.begin(), dist.end(), inf);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> queue{root};
        dist[root] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            if (best != inf && 2 * dist[u] >= best) break;
            for (int v : adj[u]) {
                if (dist[v] == inf) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (v != parent[u]) {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
        if (best == 3) break;  // cannot improve
    }
    if (best == inf) return std::nullopt;
    return best;
}

Multigraph subdivide(const Multigraph& g) {
    if (g.has_loops())
        throw std::invalid_argument("subdivide: graph has self-loops");
    Multigraph out;
    const int m = g.edge_count();
    out.n = g.n + m;
    out.edges.reserve(2 * static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        auto [u, v] = g.edges[i];
        int mid = g.n + i;
        out.edges.emplace_back(u, mid);
        out.edges.emplace_back(mid, v);
    }
    return out;
}

Multigraph contract_degree2(const Multigraph& g) {
    auto deg = degree_sequence(g);

    // incidence: vertex -> list of (edge id, other endpoint)
    std::vector<std::vector<std::pair<int, int>>> inc(g.n);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges[e];
        inc[u].emplace_back(e, v);
        if (u != v) inc[v].emplace_back(e, u);
    }
    for (int v = 0; v < g.n; ++v) {
        if (deg[v] != 2) continue;
        for (auto [e, other] : inc[v])
            if (other == v)
                throw std::invalid_argument("contract_degree2: degree-2 vertex carries a loop");
    }

    // anchors = vertices of degree != 2, relabelled compactly
    std::vector<int> relabel(g.n, -1);
    int n_out = 0;
    for (int v = 0; v < g.n; ++v)
        if (deg[v] != 2) relabel[v] = n_out++;
    if (n_out == 0)
        throw std::invalid_argument("contract_degree2: no vertex of degree != 2 to anchor on");

    Multigraph out;
    out.n = n_out;
    std::vector<char> used(g.edge_count(), 0);
    for (int a = 0; a < g.n; ++a) {
        if (deg[a] == 2) continue;
        for (auto [e0, first] : inc[a]) {
            if (used[e0]) continue;
            used[e0] = 1;
            int prev = a, cur = first, via = e0;
            while (deg[cur] == 2) {
                // follow the other incident edge of the degree-2 vertex
                int next_e = -1, next_v = -1;
                for (auto [e, other] : inc[cur]) {
                    if (e != via) {
                        next_e = e;
                        next_v = other;
                    }
                }
                if (next_v == prev)  // parallel pair through a degree-2 vertex
                    throw std::invalid_argument("contract_degree2: degree-2 vertex on a 2-cycle");
                used[next_e] = 1;
                prev = cur;
                cur = next_v;
                via = next_e;
            }
            out.edges.emplace_back(relabel[a], relabel[cur]);
        }
    }
    for (int e = 0; e < g.edge_count(); ++e)
        if (!used[e])
            throw std::invalid_argument("contract_degree2: cycle of degree-2 vertices with no anchor");
    return out;
}

std::optional<std::vector<int>> bipartition(const Multigraph& g) {
    auto adj = adjacency_lists(g);
    std::vector<int> color(g.n, -1);
    for (int start = 0; start < g.n; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : adj[u]) {
                if (v == u) return std::nullopt;  // loop
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

Multigraph rewire_to_simple(const Multigraph& g, RngStream& rng) {
    Multigraph out = g;
    const int m = out.edge_count();
    if (m == 0) return out;

    auto parts = bipartition(out);

    std::map<std::pair<int, int>, int> count;
    for (auto [u, v] : out.edges) count[norm_pair(u, v)] += 1;

    auto offending_total = [&]() {
        long long t = 0;
        for (const auto& [key, c] : count) {
            if (key.first == key.second)
                t += c;
            else if (c > 1)
                t += c - 1;
        }
        return t;
    };
    auto is_offending = [&](int e) {
        auto [u, v] = out.edges[e];
        return u == v || count[norm_pair(u, v)] > 1;
    };

    long long offending = offending_total();
    const long long cap = 100LL * m;
    long long attempts = 0;
    int since_progress = 0;

    while (offending > 0) {
        if (++attempts > cap)
            throw std::runtime_error(
                "rewire_to_simple: degree sequence not realizable or pathological "
                "(attempt cap exceeded)");

        // pick a uniformly random offending edge occurrence
        int ei = -1;
        {
            std::vector<int> offenders;
            for (int e = 0; e < m; ++e)
                if (is_offending(e)) offenders.push_back(e);
            ei = offenders[rng.uniform_below(offenders.size())];
        }
        int ej = static_cast<int>(rng.uniform_below(m - 1));
        if (ej >= ei) ++ej;

        auto [a, b] = out.edges[ei];
        auto [c, d] = out.edges[ej];
        if (parts && (*parts)[c] == (*parts)[a]) std::swap(c, d);

        // new edges (a,c) and (b,d)
        auto cnt = [&](std::pair<int, int> key) {
            auto it = count.find(key);
            return it == count.end() ? 0 : it->second;
        };
        bool worsens = (a == c) || (b == d) || cnt(norm_pair(a, c)) > 0 || cnt(norm_pair(b, d)) > 0;
        if (since_progress >= 50 && worsens) continue;

        count[norm_pair(out.edges[ei].first, out.edges[ei].second)] -= 1;
        count[norm_pair(out.edges[ej].first, out.edges[ej].second)] -= 1;
        out.edges[ei] = {a, c};
        out.edges[ej] = {b, d};
        count[norm_pair(a, c)] += 1;
        count[norm_pair(b, d)] += 1;

        long long now = offending_total();
        since_progress = now < offending ? 0 : since_progress + 1;
        offending = now;
    }
    return out;
}

std::vector<double> closed_walk_counts(const Multigraph& g, int s_max) {
    if (s_max < 0) throw std::invalid_argument("closed_walk_counts: s_max < 0");
    if (g.n == 0) throw std::invalid_argument("closed_walk_counts: empty graph");
    auto adj = adjacency_lists(g);
    std::vector<double> phi(s_max + 1, 0.0);
    phi[0] = 1.0;
    std::vector<double> x(g.n), y(g.n);
    for (int start = 0; start < g.n; ++start) {
        std::fill(x.begin(), x.end(), 0.0);
        x[start] = 1.0;
        for (int s = 1; s <= s_max; ++s) {
            std::fill(y.begin(), y.end(), 0.0);
            for (int u = 0; u < g.n; ++u) {
                if (x[u] == 0.0) continue;
                for (int v : adj[u]) y[v] += x[u];
            }
            x.swap(y);
            phi[s] += x[start];
        }
    }
    for (int s = 1; s <= s_max; ++s) phi[s] /= g.n;
    return phi;
}

void write_edge_csv(const Multigraph& g, std::ostream& out) {
    out << "u,v\n";
    for (auto [u, v] : g.edges) out << u << ',' << v << '\n';
}

void write_edge_csv_file(const Multigraph& g, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    write_edge_csv(g, f);
}

Multigraph read_edge_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || (line != "u,v" && line != "u,v\r"))
        throw std::runtime_error("edge CSV: missing 'u,v' header");
    Multigraph g;
    int max_v = -1;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("edge CSV: malformed line: " + line);
        int u = std::stoi(line.substr(0, comma));
        int v = std::stoi(line.substr(comma + 1));
        if (u < 0 || v < 0) throw std::runtime_error("edge CSV: negative vertex index");
        g.edges.emplace_back(u, v);
        max_v = std::max({max_v, u, v});
    }
    g.n = max_v + 1;
    return g;
}

Multigraph read_edge_csv_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open: " + path);
    return read_edge_csv(f);
}

}  // namespace semireg
