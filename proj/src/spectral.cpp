#include "qsl/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsl/errors.hpp"

namespace qsl {

namespace {

constexpr double kResidualCeiling = 1e-8;  // hard cap from the result contract
constexpr int kPowerIterationBudget = 200000;

struct LocalComponent {
    std::vector<int> degree;                // degrees within the component
    std::vector<std::vector<int>> adjacency;  // local indices
};

LocalComponent localize(const Graph& g, const std::vector<int>& comp) {
    LocalComponent lc;
    int k = static_cast<int>(comp.size());
    std::vector<int> local_of(g.vertex_count(), -1);
    for (int i = 0; i < k; ++i) local_of[comp[i]] = i;
    lc.degree.resize(k);
    lc.adjacency.resize(k);
    for (int i = 0; i < k; ++i) {
        lc.degree[i] = g.degree(comp[i]);
        for (int u : g.neighbors(comp[i])) lc.adjacency[i].push_back(local_of[u]);
    }
    return lc;
}

// y = Q x for the local component (Q = D + A).
void apply_q(const LocalComponent& lc, const std::vector<double>& x, std::vector<double>& y) {
    int k = static_cast<int>(x.size());
    for (int i = 0; i < k; ++i) {
        double s = lc.degree[i] * x[i];
        for (int j : lc.adjacency[i]) s += x[j];
        y[i] = s;
    }
}

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double t : v) s += t * t;
    return std::sqrt(s);
}

struct ComponentEig {
    double q = 0.0;
    std::vector<double> vec;  // unit norm, entrywise positive
    double residual_inf = 0.0;
    double residual_2 = 0.0;
};

// Measure the Rayleigh quotient and residual norms of the current iterate.
void measure(const LocalComponent& lc, const std::vector<double>& x, ComponentEig& out) {
    int k = static_cast<int>(x.size());
    std::vector<double> y(k);
    apply_q(lc, x, y);
    double lambda = 0.0;
    for (int i = 0; i < k; ++i) lambda += x[i] * y[i];
    double r2 = 0.0, rinf = 0.0;
    for (int i = 0; i < k; ++i) {
        double r = y[i] - lambda * x[i];
        r2 += r * r;
        rinf = std::max(rinf, std::fabs(r));
    }
    out.q = lambda;
    out.vec = x;
    out.residual_2 = std::sqrt(r2);
    out.residual_inf = rinf;
}

// Cyclic Jacobi eigensolver for a dense symmetric matrix; returns eigenvalues
// and accumulates eigenvectors as columns of V.  Used as a fallback when
// power iteration stalls (tiny spectral gaps).
void jacobi_eigen(std::vector<std::vector<double>> a, std::vector<double>& eigvals,
                  std::vector<std::vector<double>>& V) {
    int n = static_cast<int>(a.size());
    V.assign(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) V[i][i] = 1.0;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (off < 1e-30) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::fabs(a[p][q]) < 1e-18) continue;
                double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (int i = 0; i < n; ++i) {
                    double aip = a[i][p], aiq = a[i][q];
                    a[i][p] = c * aip - s * aiq;
                    a[i][q] = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    double api = a[p][i], aqi = a[q][i];
                    a[p][i] = c * api - s * aqi;
                    a[q][i] = s * api + c * aqi;
                }
                for (int i = 0; i < n; ++i) {
                    double vip = V[i][p], viq = V[i][q];
                    V[i][p] = c * vip - s * viq;
                    V[i][q] = s * vip + c * viq;
                }
            }
        }
    }
    eigvals.resize(n);
    for (int i = 0; i < n; ++i) eigvals[i] = a[i][i];
}

ComponentEig solve_component(const Graph& g, const std::vector<int>& comp, double tol) {
    ComponentEig out;
    int k = static_cast<int>(comp.size());
    if (k == 1) {
        out.q = 0.0;
        out.vec = {1.0};
        return out;
    }
    LocalComponent lc = localize(g, comp);
    double stop = std::min(tol, kResidualCeiling);

    // Power iteration from the all-ones vector.  Q is nonnegative and
    // irreducible on a connected component, so iterates stay entrywise
    // positive and converge to the Perron pair.
    std::vector<double> x(k, 1.0 / std::sqrt(static_cast<double>(k))), y(k);
    for (int it = 0; it < kPowerIterationBudget; ++it) {
        measure(lc, x, out);
        if (out.residual_2 <= stop) return out;
        apply_q(lc, x, y);
        double ny = norm2(y);
        for (int i = 0; i < k; ++i) x[i] = y[i] / ny;
    }

    // Fallback: full dense decomposition, then a positivity-restoring
    // refinement of the extracted top eigenvector.
    std::vector<std::vector<double>> q(k, std::vector<double>(k, 0.0)), V;
    for (int i = 0; i < k; ++i) {
        q[i][i] = lc.degree[i];
        for (int j : lc.adjacency[i]) q[i][j] = 1.0;
    }
    std::vector<double> eig;
    jacobi_eigen(q, eig, V);
    int top = static_cast<int>(std::max_element(eig.begin(), eig.end()) - eig.begin());
    for (int i = 0; i < k; ++i) x[i] = std::fabs(V[i][top]);
    double nx = norm2(x);
    for (int i = 0; i < k; ++i) x[i] /= nx;
    for (int it = 0; it < 200; ++it) {
        measure(lc, x, out);
        if (out.residual_2 <= stop) return out;
        apply_q(lc, x, y);
        double ny = norm2(y);
        for (int i = 0; i < k; ++i) x[i] = y[i] / ny;
    }
    measure(lc, x, out);
    if (out.residual_2 <= stop) return out;
    throw numeric_error("eigen iteration failed to certify tolerance", out.q, out.residual_2);
}

}  // namespace

QSpectrumResult q_index(const Graph& g, double tol) {
    if (g.vertex_count() < 1) throw domain_error("q_index requires at least one vertex");
    if (tol < 1e-12) throw domain_error("tolerance below 1e-12 is not certifiable");
    auto comps = components(g);
    QSpectrumResult result;
    result.perron.assign(g.vertex_count(), 0.0);
    std::vector<ComponentEig> solved;
    solved.reserve(comps.size());
    for (const auto& comp : comps) {
        solved.push_back(solve_component(g, comp, tol));
        result.component_q.push_back(solved.back().q);
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < comps.size(); ++i)
        if (solved[i].q > solved[best].q) best = i;
    result.q = solved[best].q;
    result.residual = solved[best].residual_inf;
    for (std::size_t i = 0; i < comps[best].size(); ++i)
        result.perron[comps[best][i]] = solved[best].vec[i];
    return result;
}

std::vector<double> perron_vector(const Graph& g) {
    if (g.vertex_count() < 2) throw domain_error("Perron vector needs at least two vertices");
    if (components(g).size() != 1)
        throw domain_error("Perron vector requires a connected graph");
    return q_index(g).perron;
}

DegreeBoundReport degree_bound_report(const Graph& g) {
    if (g.edge_count() == 0) throw domain_error("degree bounds need at least one edge");
    DegreeBoundReport rep;
    rep.average_degree_bounds_ok = true;
    Int total_edges = g.edge_count();
    bool first = true;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int d = g.degree(v);
        if (d == 0) continue;  // average neighbor degree undefined
        Int neighbor_degree_sum = 0;
        for (int u : g.neighbors(v)) neighbor_degree_sum += g.degree(u);
        DegreeBoundRecord rec;
        rec.v = v;
        rec.degree = d;
        rec.m_v = Rat(neighbor_degree_sum, d);
        rec.d_plus_m = rec.m_v + d;
        // m(v) <= 2m/d(v) - 1 and m(v) <= m/d(v) + (d(v)-1)/2, both exact.
        if (rec.m_v > Rat(2 * total_edges, d) - 1) rep.average_degree_bounds_ok = false;
        if (rec.m_v > Rat(total_edges, d) + Rat(d - 1, 2)) rep.average_degree_bounds_ok = false;
        if (first || rec.d_plus_m > rep.max_d_plus_m) rep.max_d_plus_m = rec.d_plus_m;
        first = false;
        rep.records.push_back(std::move(rec));
    }
    return rep;
}

Graph rotate_edges(const Graph& g, int u, int v, const std::set<int>& moved) {
    int n = g.vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n) throw domain_error("rotation endpoint out of range");
    if (u == v) throw domain_error("rotation endpoints must differ");
    if (components(g).size() != 1) throw domain_error("rotation requires a connected graph");
    for (int w : moved) {
        if (w < 0 || w >= n) throw domain_error("moved vertex " + std::to_string(w) + " out of range");
        if (w == u) throw domain_error("moved vertex " + std::to_string(w) + " equals the target endpoint");
        if (!g.has_edge(w, v))
            throw domain_error("moved vertex " + std::to_string(w) + " is not adjacent to the source endpoint");
        if (g.has_edge(w, u))
            throw domain_error("moved vertex " + std::to_string(w) + " is already adjacent to the target endpoint");
    }
    std::vector<Edge> detach, attach;
    for (int w : moved) {
        detach.push_back({w, v});
        attach.push_back({w, u});
    }
    return add_edges(remove_edges(g, detach), attach);
}

std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a) {
    std::vector<double> eig;
    std::vector<std::vector<double>> vecs;
    jacobi_eigen(std::move(a), eig, vecs);
    return eig;
}

bool check_rotation_monotonicity(const Graph& g, int u, int v, const std::set<int>& moved) {
    Graph rotated = rotate_edges(g, u, v, moved);  // validates the move
    auto x = perron_vector(g);
    // Accept equality of Perron weights up to numerical noise: symmetric
    // instances hit x_u == x_v exactly in theory.
    if (x[u] < x[v] - 1e-9)
        throw domain_error("Perron weight of the target endpoint is below the source endpoint");
    if (components(rotated).size() != 1)
        throw domain_error("rotation disconnected the graph");
    double before = q_index(g).q;
    double after = q_index(rotated).q;
    return after > before + 1e-12;
}

}  // namespace qsl
