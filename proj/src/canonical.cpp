#include "qsl/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

namespace qsl {

std::vector<int> refine_colors(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);
    // Normalize initial ids to 0..c-1 by sorted value.
    for (;;) {
        // Signature: (own color, sorted multiset of neighbor colors).
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s;
            s.push_back(color[v]);
            for (int u : g.neighbors(v)) s.push_back(color[u]);
            std::sort(s.begin() + 1, s.end());
            sig[v] = {std::move(s), v};
        }
        std::map<std::vector<int>, int> ids;
        for (const auto& [ ss, v ] : sig) ids.emplace(ss, 0);
        int next = 0;
        for (auto& [ss, id] : ids) id = next++;
        std::vector<int> fresh(n);
        for (int v = 0; v < n; ++v) fresh[v] = ids[sig[v].first];
        if (fresh == color) return color;
        color = std::move(fresh);
    }
}

namespace {

struct CanonSearch {
    int n;
    std::vector<uint32_t> adj_mask;      // adjacency as bitmask (n <= 12)
    std::vector<int> class_of_position;  // color id expected at each position
    std::vector<std::vector<int>> classes;

    std::vector<uint8_t> best;  // best full bitstring found so far
    bool have_best = false;

    std::vector<int> order;
    std::vector<uint8_t> bits;
    std::vector<bool> used;

    void run() {
        order.reserve(n);
        bits.reserve(n * (n - 1) / 2);
        used.assign(n, false);
        dfs(0, true);
    }

    // tight: current prefix equals best's prefix (prefix-smaller branches
    // carry tight=false and can no longer be pruned).
    void dfs(int pos, bool tight) {
        if (pos == n) {
            if (!have_best) {
                best = bits;
                have_best = true;
            } else if (!tight && bits < best) {
                // tight completions equal best exactly; everything else is
                // compared outright (branches begun before a best existed
                // were never compared bit-by-bit).
                best = bits;
            }
            return;
        }
        for (int v : classes[class_of_position[pos]]) {
            if (used[v]) continue;
            bool child_tight = tight && have_best;
            bool pruned = false;
            std::size_t base = bits.size();
            for (int i = 0; i < pos; ++i) {
                uint8_t b = (adj_mask[v] >> order[i]) & 1u;
                if (child_tight) {
                    uint8_t bb = best[base + i];
                    if (b > bb) {
                        pruned = true;
                        break;
                    }
                    if (b < bb) child_tight = false;
                }
                bits.push_back(b);
            }
            if (pruned) {
                bits.resize(base);
                continue;
            }
            used[v] = true;
            order.push_back(v);
            dfs(pos + 1, child_tight && have_best);
            order.pop_back();
            used[v] = false;
            bits.resize(base);
        }
    }
};

}  // namespace

Graph canonical_form(const Graph& g) {
    int n = g.vertex_count();
    if (n > kCanonicalizationBound)
        throw capability_error("canonical_form supports n <= " +
                               std::to_string(kCanonicalizationBound) + ", got n=" +
                               std::to_string(n));
    if (n <= 1) return g;

    std::vector<int> color = refine_colors(g);
    int num_colors = *std::max_element(color.begin(), color.end()) + 1;

    CanonSearch s;
    s.n = n;
    s.adj_mask.assign(n, 0);
    for (const auto& [u, v] : g.edges()) {
        s.adj_mask[u] |= (1u << v);
        s.adj_mask[v] |= (1u << u);
    }
    s.classes.assign(num_colors, {});
    for (int v = 0; v < n; ++v) s.classes[color[v]].push_back(v);
    for (int c = 0; c < num_colors; ++c)
        for (std::size_t i = 0; i < s.classes[c].size(); ++i)
            s.class_of_position.push_back(c);
    s.run();

    // Rebuild the graph from the winning bitstring (placement order is the
    // column-wise upper triangle).
    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (s.best[bit]) edges.push_back({u, v});
    return Graph(n, edges);
}

namespace {

// Backtracking isomorphism search over refinement-color-compatible maps.
struct IsoSearch {
    const Graph& g;
    const Graph& h;
    const std::vector<int>& cg;
    const std::vector<int>& ch;
    std::vector<int> g_order;       // g vertices in match order
    std::vector<int> mapping;       // g vertex -> h vertex or -1
    std::vector<bool> h_used;

    bool feasible(int gv, int hv) const {
        if (cg[gv] != ch[hv]) return false;
        // Adjacency to every already-mapped vertex must agree.
        for (int u : g.neighbors(gv)) {
            int hu = mapping[u];
            if (hu != -1 && !h.has_edge(hv, hu)) return false;
        }
        for (int hu : h.neighbors(hv)) {
            // A mapped h-neighbor must pull back to a g-neighbor.
            auto it = std::find(mapping.begin(), mapping.end(), hu);
            if (it != mapping.end() && !g.has_edge(gv, static_cast<int>(it - mapping.begin())))
                return false;
        }
        return true;
    }

    bool dfs(std::size_t pos) {
        if (pos == g_order.size()) return true;
        int gv = g_order[pos];
        for (int hv = 0; hv < h.vertex_count(); ++hv) {
            if (h_used[hv] || !feasible(gv, hv)) continue;
            mapping[gv] = hv;
            h_used[hv] = true;
            if (dfs(pos + 1)) return true;
            mapping[gv] = -1;
            h_used[hv] = false;
        }
        return false;
    }
};

}  // namespace

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    int n = g.vertex_count();
    if (n == 0) return true;

    std::vector<int> cg = refine_colors(g), ch = refine_colors(h);
    std::vector<int> hg = cg, hh = ch;
    std::sort(hg.begin(), hg.end());
    std::sort(hh.begin(), hh.end());
    if (hg != hh) return false;

    if (n <= kCanonicalizationBound) return canonical_form(g) == canonical_form(h);

    // Match rare colors first, preferring vertices attached to the already
    // ordered ones so adjacency constraints bite early.
    std::vector<int> class_size(*std::max_element(cg.begin(), cg.end()) + 1, 0);
    for (int c : cg) ++class_size[c];
    std::vector<int> rest(n);
    std::iota(rest.begin(), rest.end(), 0);
    std::sort(rest.begin(), rest.end(), [&](int a, int b) {
        if (class_size[cg[a]] != class_size[cg[b]]) return class_size[cg[a]] < class_size[cg[b]];
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    IsoSearch s{g, h, cg, ch, {}, std::vector<int>(n, -1), std::vector<bool>(n, false)};
    std::vector<bool> placed(n, false);
    // Greedy connectivity-aware ordering seeded by the sorted list.
    for (int i = 0; i < n; ++i) {
        int pick = -1;
        for (int v : rest) {
            if (placed[v]) continue;
            bool touches = false;
            for (int u : g.neighbors(v))
                if (placed[u]) {
                    touches = true;
                    break;
                }
            if (touches) {
                pick = v;
                break;
            }
        }
        if (pick == -1)
            for (int v : rest)
                if (!placed[v]) {
                    pick = v;
                    break;
                }
        placed[pick] = true;
        s.g_order.push_back(pick);
    }
    return s.dfs(0);
}

}  // namespace qsl
