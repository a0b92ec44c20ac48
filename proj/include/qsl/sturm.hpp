#pragma once

#include <vector>

#include "qsl/exact.hpp"

namespace qsl {

// Integer polynomial in one variable, ascending coefficients, trailing zeros
// allowed on input but stripped by the helpers.
using IntPoly = std::vector<Int>;

int poly_degree(const IntPoly& p);
IntPoly poly_derivative(const IntPoly& p);
Int poly_eval(const IntPoly& p, const Int& t);

// Exact sign of p at a rational point, via the scaled form
// sum c_i * num^i * den^(d-i) which avoids building rationals.
int sign_at(const IntPoly& p, const Rat& t);

// Strict bound C such that every real root r satisfies |r| < C.
Rat cauchy_root_bound(const IntPoly& p);

// Sturm chain of p, each member scaled to a primitive integer polynomial by
// a positive rational (sign-preserving, so variation counts are unaffected).
std::vector<IntPoly> sturm_chain(const IntPoly& p);

// Number of distinct real roots in the interval from a to b with selectable
// endpoint inclusion.  Endpoint roots are handled by exact deflation, so the
// count is correct even when p vanishes at a or b.
int count_real_roots_in(const IntPoly& p, const Rat& a, const Rat& b,
                        bool include_a, bool include_b);

// True iff the largest real root of p exceeds t (strictly).
bool has_root_above(const IntPoly& p, const Rat& t);

// Largest real root isolated by Sturm bisection to an interval of width at
// most tol; returns the midpoint (or the exact root when bisection lands on
// it).  Throws domain_error when p has no real root or tol < 1e-12.
double largest_real_root(const IntPoly& p, double tol);

}  // namespace qsl
