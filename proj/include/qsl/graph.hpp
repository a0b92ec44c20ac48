#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qsl/errors.hpp"

namespace qsl {

using Edge = std::pair<int, int>;

// Immutable simple undirected graph with dense vertex ids 0..n-1.
// Isolated vertices are first-class: they are counted in n and survive
// unions and joins. Construction validates simplicity (no loops, no
// duplicate edges); all accessors are const and the value is safe to share
// across threads.
class Graph {
  public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Edges normalized to u < v and sorted lexicographically.
    const std::vector<Edge>& edges() const { return edges_; }
    // Sorted neighbor list.
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

enum class PrimitiveKind { PATH, CYCLE, STAR, DOUBLE_STAR, STAR_PLUS, EDGELESS };

// Standard small graphs. Orders follow the usual conventions: PATH/CYCLE/
// STAR/STAR_PLUS take the vertex count n, DOUBLE_STAR takes the two pendant
// counts (a, b). STAR of order n is K_{1,n-1}, labeled leaves first and
// center last (the center-last layout keeps composed graphs' equitable cell
// order aligned with the stored quotient templates). STAR_PLUS is K_{1,n-1}
// plus one edge between two leaves. DOUBLE_STAR(a, b) joins the centers of
// K_{1,a} and K_{1,b}.
Graph build_primitive(PrimitiveKind kind, const std::vector<int>& params);

// Convenience wrappers over build_primitive.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);
Graph star_plus_graph(int n);
Graph double_star_graph(int a, int b);
Graph edgeless_graph(int n);

// Vertex-disjoint union; block i repeats multiplicities[i] times, vertices
// relabeled in argument order so compositions are reproducible.
Graph disjoint_union(const std::vector<Graph>& gs, const std::vector<int>& multiplicities);
Graph disjoint_union(const Graph& g, const Graph& h);

// Join: disjoint union plus all edges between the two sides; g's block keeps
// the low labels.
Graph join(const Graph& g, const Graph& h);

struct StructuralProfile {
    std::vector<int> degree_sequence;  // sorted descending
    int max_degree = 0;
    int min_degree = 0;
    int pendant_count = 0;   // vertices of degree exactly 1
    int isolated_count = 0;  // vertices of degree 0
    int component_count = 0;

    bool is_two_leaves_free() const { return pendant_count <= 1; }
    bool is_leaf_free() const { return pendant_count == 0; }
};

StructuralProfile structural_profile(const Graph& g);

// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> components(const Graph& g);

// Relabel by a permutation: vertex v of g becomes perm[v].
Graph apply_permutation(const Graph& g, const std::vector<int>& perm);

// Edge-local edits used by the surgery checks; both validate simplicity.
Graph add_edges(const Graph& g, const std::vector<Edge>& added);
Graph remove_edges(const Graph& g, const std::vector<Edge>& removed);
// Append extra isolated vertices.
Graph add_vertices(const Graph& g, int count);

}  // namespace qsl
