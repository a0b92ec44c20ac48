#include "qsl/partition.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "qsl/errors.hpp"
#include "qsl/spectral.hpp"

namespace qsl {

namespace {

// Neighbor counts of v into each cell, in cell order.
std::vector<int> cell_signature(const Graph& g, const Partition& p, int v) {
    std::vector<int> cell_of(g.vertex_count(), -1);
    for (std::size_t c = 0; c < p.size(); ++c)
        for (int u : p[c]) cell_of[u] = static_cast<int>(c);
    std::vector<int> sig(p.size(), 0);
    for (int u : g.neighbors(v)) ++sig[cell_of[u]];
    return sig;
}

void sort_cells(Partition& p) {
    for (auto& cell : p) std::sort(cell.begin(), cell.end());
    std::sort(p.begin(), p.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
}

}  // namespace

Partition trivial_partition(const Graph& g) {
    std::vector<int> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    return {all};
}

void validate_partition(const Graph& g, const Partition& p) {
    std::vector<bool> seen(g.vertex_count(), false);
    for (const auto& cell : p) {
        if (cell.empty()) throw domain_error("partition contains an empty cell");
        for (int v : cell) {
            if (v < 0 || v >= g.vertex_count())
                throw domain_error("partition names vertex " + std::to_string(v) + " outside the graph");
            if (seen[v])
                throw domain_error("vertex " + std::to_string(v) + " appears in two cells");
            seen[v] = true;
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!seen[v]) throw domain_error("vertex " + std::to_string(v) + " is missing from the partition");
}

bool is_equitable(const Graph& g, const Partition& p) {
    validate_partition(g, p);
    for (const auto& cell : p) {
        auto ref = cell_signature(g, p, cell[0]);
        for (std::size_t i = 1; i < cell.size(); ++i)
            if (cell_signature(g, p, cell[i]) != ref) return false;
    }
    return true;
}

Partition coarsest_equitable(const Graph& g, const Partition& seed) {
    validate_partition(g, seed);
    Partition p = seed;
    sort_cells(p);
    for (;;) {
        // Split each cell by the (cell index, per-cell neighbor count) key.
        std::vector<int> cell_of(g.vertex_count(), -1);
        for (std::size_t c = 0; c < p.size(); ++c)
            for (int u : p[c]) cell_of[u] = static_cast<int>(c);
        std::map<std::pair<int, std::vector<int>>, std::vector<int>> groups;
        for (int v = 0; v < g.vertex_count(); ++v) {
            std::vector<int> sig(p.size(), 0);
            for (int u : g.neighbors(v)) ++sig[cell_of[u]];
            groups[{cell_of[v], sig}].push_back(v);
        }
        if (groups.size() == p.size()) break;
        Partition next;
        next.reserve(groups.size());
        for (auto& [key, members] : groups) next.push_back(std::move(members));
        sort_cells(next);
        p = std::move(next);
    }
    sort_cells(p);
    return p;
}

QuotientMatrix quotient_q(const Graph& g, const Partition& p) {
    validate_partition(g, p);
    int dim = static_cast<int>(p.size());
    std::vector<int> cell_of(g.vertex_count(), -1);
    for (int c = 0; c < dim; ++c)
        for (int u : p[c]) cell_of[u] = c;
    QuotientMatrix out;
    out.cells = p;
    out.entries.assign(dim, std::vector<Int>(dim, Int(0)));
    for (int i = 0; i < dim; ++i) {
        auto count_into = [&](int v) {
            std::vector<int> sig(dim, 0);
            for (int u : g.neighbors(v)) ++sig[cell_of[u]];
            return sig;
        };
        auto ref = count_into(p[i][0]);
        for (std::size_t t = 1; t < p[i].size(); ++t) {
            auto other = count_into(p[i][t]);
            if (other != ref) {
                for (int j = 0; j < dim; ++j)
                    if (other[j] != ref[j])
                        throw domain_error(
                            "partition not equitable: cells (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") distinguish vertices " +
                            std::to_string(p[i][0]) + " and " + std::to_string(p[i][static_cast<int>(t)]));
            }
        }
        int degree = 0;
        for (int c : ref) degree += c;
        for (int j = 0; j < dim; ++j) out.entries[i][j] = ref[j];
        out.entries[i][i] += degree;
    }
    return out;
}

std::vector<double> quotient_spectrum(const QuotientMatrix& b) {
    int dim = b.dim();
    // Conjugate by diag(sqrt(cell size)) to reach a symmetric matrix with
    // the same spectrum.
    std::vector<double> root_size(dim);
    for (int i = 0; i < dim; ++i) root_size[i] = std::sqrt(static_cast<double>(b.cells[i].size()));
    std::vector<std::vector<double>> sym(dim, std::vector<double>(dim));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            sym[i][j] = to_double(b.entries[i][j]) * root_size[i] / root_size[j];
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            double avg = (sym[i][j] + sym[j][i]) / 2.0;  // symmetric up to roundoff
            sym[i][j] = sym[j][i] = avg;
        }
    auto eig = symmetric_eigenvalues(std::move(sym));
    std::sort(eig.rbegin(), eig.rend());
    return eig;
}

}  // namespace qsl
