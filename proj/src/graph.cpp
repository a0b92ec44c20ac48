#include "qsl/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace qsl {

namespace {

std::string edge_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw domain_error("vertex count must be nonnegative, got " + std::to_string(n));
    for (auto& [u, v] : edges) {
        if (u == v) throw domain_error("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw domain_error("edge " + edge_str(u, v) + " out of range for n=" + std::to_string(n));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1])
            throw domain_error("duplicate edge " + edge_str(edges[i].first, edges[i].second));
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw domain_error("vertex " + std::to_string(v) + " out of range");
    return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph build_primitive(PrimitiveKind kind, const std::vector<int>& params) {
    auto need = [&](std::size_t count, const char* what) {
        if (params.size() != count)
            throw domain_error(std::string("primitive expects ") + what);
    };
    auto at_least = [](int value, int minimum, const char* what) {
        if (value < minimum)
            throw domain_error(std::string(what) + " requires order >= " + std::to_string(minimum) +
                               ", got " + std::to_string(value));
    };
    switch (kind) {
        case PrimitiveKind::PATH: {
            need(1, "one parameter (order)");
            int n = params[0];
            at_least(n, 1, "PATH");
            std::vector<Edge> e;
            for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
            return Graph(n, e);
        }
        case PrimitiveKind::CYCLE: {
            need(1, "one parameter (order)");
            int n = params[0];
            at_least(n, 3, "CYCLE");
            std::vector<Edge> e;
            for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
            return Graph(n, e);
        }
        case PrimitiveKind::STAR: {
            need(1, "one parameter (order)");
            int n = params[0];
            at_least(n, 1, "STAR");
            // Leaves 0..n-2, center n-1.
            std::vector<Edge> e;
            for (int i = 0; i + 1 < n; ++i) e.push_back({i, n - 1});
            return Graph(n, e);
        }
        case PrimitiveKind::STAR_PLUS: {
            need(1, "one parameter (order)");
            int n = params[0];
            at_least(n, 3, "STAR_PLUS");
            std::vector<Edge> e;
            for (int i = 0; i + 1 < n; ++i) e.push_back({i, n - 1});
            e.push_back({0, 1});  // one extra edge between two leaves
            return Graph(n, e);
        }
        case PrimitiveKind::DOUBLE_STAR: {
            need(2, "two parameters (pendant counts a, b)");
            int a = params[0], b = params[1];
            if (a < 1 || b < 1)
                throw domain_error("DOUBLE_STAR requires pendant counts >= 1, got (" +
                                   std::to_string(a) + "," + std::to_string(b) + ")");
            // Centers a and a+b+1; a pendants before the first center, b after.
            std::vector<Edge> e;
            int c1 = a, c2 = a + b + 1;
            for (int i = 0; i < a; ++i) e.push_back({i, c1});
            for (int i = 0; i < b; ++i) e.push_back({c1 + 1 + i, c2});
            e.push_back({c1, c2});
            return Graph(a + b + 2, e);
        }
        case PrimitiveKind::EDGELESS: {
            need(1, "one parameter (order)");
            int n = params[0];
            at_least(n, 0, "EDGELESS");
            return Graph(n, {});
        }
    }
    throw domain_error("unknown primitive kind");
}

Graph path_graph(int n) { return build_primitive(PrimitiveKind::PATH, {n}); }
Graph cycle_graph(int n) { return build_primitive(PrimitiveKind::CYCLE, {n}); }
Graph star_graph(int n) { return build_primitive(PrimitiveKind::STAR, {n}); }
Graph star_plus_graph(int n) { return build_primitive(PrimitiveKind::STAR_PLUS, {n}); }
Graph double_star_graph(int a, int b) { return build_primitive(PrimitiveKind::DOUBLE_STAR, {a, b}); }
Graph edgeless_graph(int n) { return build_primitive(PrimitiveKind::EDGELESS, {n}); }

Graph disjoint_union(const std::vector<Graph>& gs, const std::vector<int>& multiplicities) {
    if (gs.size() != multiplicities.size())
        throw domain_error("disjoint_union: graphs and multiplicities differ in length");
    for (int m : multiplicities)
        if (m < 0) throw domain_error("disjoint_union: negative multiplicity " + std::to_string(m));
    int n = 0;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        for (int rep = 0; rep < multiplicities[i]; ++rep) {
            for (const auto& [u, v] : gs[i].edges()) edges.push_back({u + n, v + n});
            n += gs[i].vertex_count();
        }
    }
    return Graph(n, edges);
}

Graph disjoint_union(const Graph& g, const Graph& h) { return disjoint_union({g, h}, {1, 1}); }

Graph join(const Graph& g, const Graph& h) {
    int ng = g.vertex_count(), nh = h.vertex_count();
    std::vector<Edge> edges = g.edges();
    for (const auto& [u, v] : h.edges()) edges.push_back({u + ng, v + ng});
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v) edges.push_back({u, ng + v});
    return Graph(ng + nh, edges);
}

StructuralProfile structural_profile(const Graph& g) {
    StructuralProfile p;
    int n = g.vertex_count();
    p.degree_sequence.reserve(n);
    for (int v = 0; v < n; ++v) p.degree_sequence.push_back(g.degree(v));
    std::sort(p.degree_sequence.rbegin(), p.degree_sequence.rend());
    p.max_degree = n ? p.degree_sequence.front() : 0;
    p.min_degree = n ? p.degree_sequence.back() : 0;
    for (int d : p.degree_sequence) {
        if (d == 1) ++p.pendant_count;
        if (d == 0) ++p.isolated_count;
    }
    p.component_count = static_cast<int>(components(g).size());
    return p;
}

std::vector<std::vector<int>> components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> stack{s}, members;
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int u : g.neighbors(v))
                if (comp[u] == -1) {
                    comp[u] = comp[s];
                    stack.push_back(u);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
    int n = g.vertex_count();
    if (static_cast<int>(perm.size()) != n)
        throw domain_error("permutation length != vertex count");
    std::vector<bool> seen(n, false);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[p]) throw domain_error("not a permutation");
        seen[p] = true;
    }
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const auto& [u, v] : g.edges()) edges.push_back({perm[u], perm[v]});
    return Graph(n, edges);
}

Graph add_edges(const Graph& g, const std::vector<Edge>& added) {
    std::vector<Edge> edges = g.edges();
    edges.insert(edges.end(), added.begin(), added.end());
    return Graph(g.vertex_count(), edges);
}

Graph remove_edges(const Graph& g, const std::vector<Edge>& removed) {
    std::set<Edge> gone;
    for (auto [u, v] : removed) {
        if (u > v) std::swap(u, v);
        if (!g.has_edge(u, v))
            throw domain_error("cannot remove absent edge " + edge_str(u, v));
        gone.insert({u, v});
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (!gone.count(e)) edges.push_back(e);
    return Graph(g.vertex_count(), edges);
}

Graph add_vertices(const Graph& g, int count) {
    if (count < 0) throw domain_error("add_vertices: negative count");
    return Graph(g.vertex_count() + count, g.edges());
}

}  // namespace qsl
