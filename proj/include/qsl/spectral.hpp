#pragma once

#include <set>
#include <vector>

#include "qsl/exact.hpp"
#include "qsl/graph.hpp"

namespace qsl {

// Result of a certified Q-index computation.  `perron` has one entry per
// vertex: strictly positive on the component whose Q-index attains the
// maximum, zero elsewhere, unit Euclidean norm overall.  `residual` is the
// infinity norm of Q*x - q*x for that vector.
struct QSpectrumResult {
    double q = 0.0;
    std::vector<double> perron;
    double residual = 0.0;
    std::vector<double> component_q;
};

// Largest eigenvalue of the signless Laplacian Q = D + A, computed per
// connected component and certified by the residual bound for symmetric
// matrices (|lambda - q| <= ||Qx - qx||_2 for unit x).  Throws numeric_error
// carrying the best iterate if certification to `tol` fails.
QSpectrumResult q_index(const Graph& g, double tol = 1e-10);

// Positive unit eigenvector of Q for a connected graph on >= 2 vertices.
// Disconnected input is rejected: uniqueness needs irreducibility.
std::vector<double> perron_vector(const Graph& g);

// Per-vertex record in a degree bound report.  m_v is the average degree over
// the neighbors of v, kept as an exact rational.
struct DegreeBoundRecord {
    int v = 0;
    int degree = 0;
    Rat m_v;
    Rat d_plus_m;
};

// Exact-arithmetic evaluation of the classical degree bounds: the Q-index is
// at most max_v (d(v) + m(v)), and m(v) obeys two universal upper bounds in
// terms of the edge count.  Records cover non-isolated vertices only.
struct DegreeBoundReport {
    std::vector<DegreeBoundRecord> records;
    Rat max_d_plus_m;
    bool average_degree_bounds_ok = false;
};

DegreeBoundReport degree_bound_report(const Graph& g);

// Edge rotation: detach each vertex of `moved` from v and attach it to u.
// Requires every moved vertex to be adjacent to v, non-adjacent to u, and
// distinct from u, so the result stays simple.
Graph rotate_edges(const Graph& g, int u, int v, const std::set<int>& moved);

// True iff the rotation strictly increases the Q-index (beyond a 1e-12
// margin).  Preconditions: the rotation is valid, the Perron weight of u is
// at least that of v, and the rotated graph is connected.
bool check_rotation_monotonicity(const Graph& g, int u, int v, const std::set<int>& moved);

// All eigenvalues of a dense symmetric matrix (cyclic Jacobi), unsorted.
std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a);

}  // namespace qsl
