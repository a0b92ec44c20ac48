#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsl/certificate.hpp"
#include "qsl/graph.hpp"

namespace qsl {

// Pendant-count filters applied to finished enumeration levels. The
// two-leaves-free class (at most one degree-1 vertex) is not closed under
// edge deletion, so filters never prune intermediate levels.
enum class Filter { ALL, TWO_LEAVES_FREE, LEAF_FREE };

std::string filter_name(Filter f);  // "all", "two-leaves-free", "leaf-free"
std::optional<Filter> parse_filter(const std::string& name);
bool passes_filter(const Graph& g, Filter f);

// Hard caps for exhaustive generation; beyond them the class counts and the
// canonical-form cost stop being desk-scale.
inline constexpr int kMaxEnumEdges = 10;
inline constexpr int kMaxEnumVertices = 12;

// Default vertex cap min(m+1, 12): an m-edge graph without isolated
// vertices can have up to 2m vertices, but the high-Q-index candidates are
// dense, and results always record the cap they were computed under.
int default_max_n(int m);

// One canonically labelled representative per isomorphism class of simple
// graphs with exactly m edges, no isolated vertices, at most max_n
// vertices, passing the filter. Built by levelwise edge augmentation (add
// an edge between existing vertices, hang an edge on one new vertex, or
// start a fresh disjoint edge) with canonical-form deduplication per level;
// every class is reached because deleting any edge and dropping the
// vertices it isolates yields a smaller in-universe graph. Output is sorted
// by graph6 string. Throws capability_error when a cap is exceeded.
std::vector<Graph> enumerate_graphs(int m, int max_n, Filter filter = Filter::ALL);
std::vector<Graph> enumerate_graphs(int m);

struct SearchResult {
    int m = 0;
    int max_n = 0;
    Filter filter = Filter::ALL;
    int graph_count = 0;
    double max_q = 0.0;
    std::vector<std::string> argmax;  // graph6, lexicographic
    // Whether any maximizer is disconnected (never observed; recorded so
    // the connectivity question stays an empirical check, not an
    // assumption).
    bool argmax_has_disconnected = false;
    long long runtime_ms = 0;
};

// Q-index maximum over every enumerated class; argmax collects all classes
// within 1e-9 of the maximum. max_n < 0 selects default_max_n(m).
SearchResult extremal_search(int m, Filter filter, int max_n = -1);

nlohmann::json search_result_json(const SearchResult& r);

// JSON-lines cache, one {"graph6":"..."} record per class in enumeration
// order; identical parameters always produce byte-identical files.
std::string enumeration_cache_name(int m, int max_n, Filter filter);
void write_enumeration_cache(const std::string& path, const std::vector<Graph>& graphs);
std::vector<Graph> read_enumeration_cache(const std::string& path);

// Exhaustive check that every two-leaves-free class with m in
// [m_min, m_max] satisfies max degree <= floor((2m+1)/3); equality
// achievers are listed per m. Status PASS/FAIL tracks the bound alone.
Certificate verify_delta_bound(int m_min, int m_max);

// Equality achievers diffed against the stated catalog of extremal
// constructions instantiated at k = floor(m/3). Catalog members invalid at
// that k are skipped with a reason, members whose built edge count differs
// from m are flagged, and set mismatches are recorded with both sides.
// Always REPORTED: these edge counts sit below the size hypothesis of the
// theorem the catalog supports.
Certificate delta_equality_comparison(int m_min, int m_max);

}  // namespace qsl
