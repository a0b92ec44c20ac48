#pragma once

#include <string>
#include <vector>

#include "qsl/certificate.hpp"

namespace qsl {

// Shared knobs for the verification suites. The tolerance defaults are the
// fixed reference values every certificate records; the CLI can override
// them per run.
struct SuiteOptions {
    int k_min = 2;
    int k_max = 40;
    int m_max = 9;
    double num_tol = 1e-7;     // polynomial root vs eigensolver agreement
    double gap_tol = 1e-9;     // strict-inequality margin
    double closed_tol = 1e-8;  // closed form vs eigensolver agreement
    unsigned seed = 97;        // property-suite RNG seed
};

// Closed-form values (2k+3 +- sqrt(...))/2 for the two pure pair families
// against the eigensolver.
Certificate closed_form_agreement_cert(int k_min, int k_max, double tol);

// Largest roots of the stored quintics/quartics against the eigensolver for
// their families; for the 3k family the two stored quintics are also
// compared with each other.
Certificate root_cross_validation_cert(int k_min, int k_max, double tol);

// Exact lower bounds 2k+1+2/(2k-1), 2k+2, and 2k+2+1/k via Sturm counts on
// exact quotient characteristic polynomials; no floating point anywhere.
Certificate lower_bounds_cert(int k_min, int k_max);

// Strict Q-index orderings among the same-size families, each inequality
// checked over the k range where both sides exist.
Certificate ordering_chain_cert(int k_min, int k_max, double gap);

// Spot comparisons mirroring the edge-surgery steps, each from its stated
// k threshold.
Certificate surgery_checks_cert(int k_max, double gap);

// Sum of (x_u + x_v)^2 over edges equals the Q-index for the Perron vector.
Certificate perron_identity_cert(int trials, unsigned seed, double tol);

// Removing an edge from a connected graph strictly lowers the Q-index.
Certificate subgraph_monotonicity_cert(int pairs, unsigned seed, double gap);

// Rotating edges toward a vertex of no smaller Perron weight strictly
// raises the Q-index: random valid instances plus two fixed ones whose
// rotated graphs are known family members.
Certificate rotation_monotonicity_cert(int random_instances, unsigned seed);

// Exact average-degree bounds m(v) <= 2m/d(v) - 1 and
// m(v) <= m/d(v) + (d(v)-1)/2 on every enumerated class.
Certificate degree_bounds_enumerated_cert(int m_min, int m_max);

// Exhaustive two-leaves-free maxima diffed against the residue-class
// prediction; always REPORTED below the size hypothesis.
Certificate search_report_cert(int m_min, int m_max);

const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

// Runs one of {lemmas, polynomials, theorem12, delta-bound, all} and
// returns its certificates in a fixed order.
std::vector<Certificate> run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace qsl
