#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsl/certificate.hpp"
#include "qsl/families.hpp"
#include "qsl/polyk.hpp"
#include "qsl/sturm.hpp"

namespace qsl {

// Catalog keys for the reference polynomials the toolkit checks.  The keys
// are fixed interface strings (certificates and CLI reports use them
// verbatim).
enum class PolynomialClaim {
    THM12_GAMMA,  // quintic asserted for the 3k-edge extremal family
    THM12_XI,     // quintic asserted for the (3k+2)-edge extremal family
    THM11_ALPHA,  // quartic for the apex over (k-2) pairs and a 4-star
    THM11_BETA,   // quartic for the apex over (k-1) pairs and a 3-star
    F_L2,         // quartic for the gadget graph L2
    F1_S3P1,      // quintic for the apex over (k-2) pairs, 3-star, lone vertex
    G_KP2P1,      // cubic for the apex over k pairs and a lone vertex
};

std::vector<PolynomialClaim> all_polynomial_claims();
std::string claim_name(PolynomialClaim c);
std::optional<PolynomialClaim> parse_claim(const std::string& name);

// The exact reference coefficients checked by this toolkit.
PolyKX stored_polynomial(PolynomialClaim c);

// Family whose Q-index the claim polynomial is supposed to describe.
FamilyTag claim_family(PolynomialClaim c);

// True for families with a stored symbolic quotient template.
bool has_symbolic_template(FamilyTag id);

// Parameterized quotient matrix of the family's canonical equitable
// partition, entries affine in k; capability_error when no template is
// stored.  Evaluating at a concrete k (with every cell nonempty) matches
// quotient_q of the built graph exactly.
KMatrix symbolic_quotient(FamilyTag id);

// Smallest k at which every cell of the template partition is nonempty.
int template_min_k(FamilyTag id);

// Two-part verification of one claim polynomial: (a) where the family has a
// quotient template, charpoly(template) must equal the stored polynomial
// coefficient-by-coefficient in Z[k]; (b) for each k in range, the largest
// real root of the stored polynomial specialized at k must match the
// eigensolver's Q-index of the built family graph within num_tol.
Certificate verify_polynomial_claim(PolynomialClaim c, int k_min, int k_max,
                                    double num_tol = 1e-7);

// REPORTED companion findings for the two claims whose stored coefficients
// disagree with the derived quotient algebra: full root sets of the stored
// quintics next to the derived characteristic polynomial for the 3k family,
// and the derived 5-cell template polynomial for the (3k+2) family.
std::vector<Certificate> polynomial_findings(int k_min, int k_max);

// Integer characteristic polynomial of an equitable quotient of the family
// member at k, so its largest real root is exactly the member's Q-index.
// Uses the symbolic template when every template cell is nonempty, and the
// coarsest equitable partition of the built graph otherwise.
IntPoly exact_family_charpoly(FamilyTag id, int k);

}  // namespace qsl
