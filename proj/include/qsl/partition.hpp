#pragma once

#include <vector>

#include "qsl/exact.hpp"
#include "qsl/graph.hpp"

namespace qsl {

// Ordered list of disjoint vertex cells covering the vertex set.
using Partition = std::vector<std::vector<int>>;

// Single-cell partition of all vertices.
Partition trivial_partition(const Graph& g);

// Throws domain_error unless the cells are disjoint, in range, and cover V.
void validate_partition(const Graph& g, const Partition& p);

// A partition is equitable when, for every ordered cell pair (i, j), all
// vertices of cell i have the same number of neighbors in cell j.
bool is_equitable(const Graph& g, const Partition& p);

// Coarsest equitable refinement of the seed: cells split by neighbor-count
// signature until stable.  Cell order is deterministic (by minimal vertex).
Partition coarsest_equitable(const Graph& g, const Partition& seed);

// Quotient of Q = D + A over an equitable partition: entry (i, j) is the
// common neighbor count from cell i into cell j, with the common degree
// added on the diagonal.  Its spectrum is contained in the spectrum of Q,
// and for connected graphs its largest eigenvalue is the Q-index.
struct QuotientMatrix {
    std::vector<std::vector<Int>> entries;
    Partition cells;
    int dim() const { return static_cast<int>(entries.size()); }
};

// Builds the quotient; rejects non-equitable partitions with a message
// naming the violating cell pair and witness vertices.
QuotientMatrix quotient_q(const Graph& g, const Partition& p);

// Full eigenvalue list of the quotient, descending.  The quotient is
// similar to a symmetric matrix via scaling by sqrt(cell size), which is
// what gets diagonalized.
std::vector<double> quotient_spectrum(const QuotientMatrix& b);

}  // namespace qsl
