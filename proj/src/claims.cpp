#include "qsl/claims.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "qsl/errors.hpp"
#include "qsl/partition.hpp"
#include "qsl/spectral.hpp"
#include "qsl/sturm.hpp"

namespace qsl {

namespace {

struct ClaimInfo {
    const char* name;
    FamilyTag family;
    bool symbolic;  // the family template's charpoly is claimed to equal it
};

const ClaimInfo& claim_info(PolynomialClaim c) {
    static const ClaimInfo table[] = {
        {"THM12_GAMMA", FamilyTag::K1vS3P1, false},
        {"THM12_XI", FamilyTag::K1vS4P1, false},
        {"THM11_ALPHA", FamilyTag::K1vKP2_S4, true},
        {"THM11_BETA", FamilyTag::K1vKP2_S3, true},
        {"F_L2", FamilyTag::L2, true},
        {"F1_S3P1", FamilyTag::K1vS3P1, true},
        {"G_KP2P1", FamilyTag::K1vKP2P1, true},
    };
    return table[static_cast<int>(c)];
}

// All real roots of an integer polynomial, located by Sturm-count bisection.
std::vector<double> all_real_roots(const IntPoly& p, double tol) {
    std::vector<double> roots;
    Rat bound = cauchy_root_bound(p);
    std::function<void(Rat, Rat, int)> rec = [&](Rat a, Rat b, int count) {
        if (count == 0) return;
        if (b - a <= Rat(tol)) {
            double mid = to_double((a + b) / 2);
            for (int i = 0; i < count; ++i) roots.push_back(mid);
            return;
        }
        Rat mid = (a + b) / 2;
        int left = count_real_roots_in(p, a, mid, false, true);
        rec(a, mid, left);
        rec(mid, b, count - left);
    };
    rec(-bound, bound, count_real_roots_in(p, -bound, bound, false, true));
    std::sort(roots.begin(), roots.end());
    return roots;
}

nlohmann::json roots_json(const std::vector<double>& roots) {
    nlohmann::json arr = nlohmann::json::array();
    for (double r : roots) arr.push_back(r);
    return arr;
}

}  // namespace

std::vector<PolynomialClaim> all_polynomial_claims() {
    return {PolynomialClaim::THM12_GAMMA, PolynomialClaim::THM12_XI, PolynomialClaim::THM11_ALPHA,
            PolynomialClaim::THM11_BETA,  PolynomialClaim::F_L2,     PolynomialClaim::F1_S3P1,
            PolynomialClaim::G_KP2P1};
}

std::string claim_name(PolynomialClaim c) { return claim_info(c).name; }

std::optional<PolynomialClaim> parse_claim(const std::string& name) {
    for (PolynomialClaim c : all_polynomial_claims())
        if (claim_name(c) == name) return c;
    return std::nullopt;
}

PolyKX stored_polynomial(PolynomialClaim c) {
    using P = PolyK;
    switch (c) {
        case PolynomialClaim::THM12_GAMMA:
            return poly_from_descending({P(1), P::affine(-2, -8), P::affine(14, 19),
                                         P::affine(-28, -11), P::affine(16, -15), P(12)});
        case PolynomialClaim::THM12_XI:
            return poly_from_descending({P(1), P::affine(-2, -10), P::affine(16, 33),
                                         P::affine(-36, -42), P::affine(24, 0), P(18)});
        case PolynomialClaim::THM11_ALPHA:
            return poly_from_descending({P(1), P::affine(-2, -9), P::affine(16, 23),
                                         P::affine(-34, -19), P::affine(20, -4)});
        case PolynomialClaim::THM11_BETA:
            return poly_from_descending({P(1), P::affine(-2, -9), P::affine(14, 26),
                                         P::affine(-28, -28), P::affine(16, 8)});
        case PolynomialClaim::F_L2:
            return poly_from_descending({P(1), P::affine(-2, -7), P::affine(10, 15),
                                         P::affine(-14, -9), P::affine(4, 0)});
        case PolynomialClaim::F1_S3P1:
            return poly_from_descending({P(1), P::affine(-2, -9), P::affine(16, 27),
                                         P::affine(-42, -3), P::affine(44, 4), P::affine(-16, 8)});
        case PolynomialClaim::G_KP2P1:
            return poly_from_descending({P(1), P(-2)}) *
                   poly_from_descending({P(1), P::affine(-2, -3), P::affine(2, 0)});
    }
    throw domain_error("unknown polynomial claim");
}

FamilyTag claim_family(PolynomialClaim c) { return claim_info(c).family; }

bool has_symbolic_template(FamilyTag id) {
    switch (id) {
        case FamilyTag::K1vKP2:
        case FamilyTag::K1vKP2P1:
        case FamilyTag::K1vKP2_S3:
        case FamilyTag::K1vKP2_S4:
        case FamilyTag::K1vS3P1:
        case FamilyTag::K1vS4P1:
        case FamilyTag::L2:
            return true;
        default:
            return false;
    }
}

KMatrix symbolic_quotient(FamilyTag id) {
    auto A = [](long long a, long long b) { return PolyK::affine(a, b); };
    auto C = [](long long c) { return PolyK(c); };
    KMatrix m;
    switch (id) {
        case FamilyTag::K1vKP2:
            m.rows = {{A(2, 0), A(2, 0)}, {C(1), C(3)}};
            return m;
        case FamilyTag::K1vKP2P1:
            m.rows = {{A(2, 1), A(2, 0), C(1)}, {C(1), C(3), C(0)}, {C(1), C(0), C(1)}};
            return m;
        case FamilyTag::K1vKP2_S3:
            m.rows = {{A(2, 1), A(2, -2), C(2), C(1)},
                      {C(1), C(3), C(0), C(0)},
                      {C(1), C(0), C(2), C(1)},
                      {C(1), C(0), C(2), C(3)}};
            return m;
        case FamilyTag::K1vKP2_S4:
            m.rows = {{A(2, 0), A(2, -4), C(3), C(1)},
                      {C(1), C(3), C(0), C(0)},
                      {C(1), C(0), C(2), C(1)},
                      {C(1), C(0), C(3), C(4)}};
            return m;
        case FamilyTag::K1vS3P1:
            m.rows = {{A(2, 0), A(2, -4), C(2), C(1), C(1)},
                      {C(1), C(3), C(0), C(0), C(0)},
                      {C(1), C(0), C(2), C(1), C(0)},
                      {C(1), C(0), C(2), C(3), C(0)},
                      {C(1), C(0), C(0), C(0), C(1)}};
            return m;
        case FamilyTag::K1vS4P1:
            m.rows = {{A(2, 1), A(2, -4), C(3), C(1), C(1)},
                      {C(1), C(3), C(0), C(0), C(0)},
                      {C(1), C(0), C(2), C(1), C(0)},
                      {C(1), C(0), C(3), C(4), C(0)},
                      {C(1), C(0), C(0), C(0), C(1)}};
            return m;
        case FamilyTag::L2:
            m.rows = {{A(2, 1), A(2, 0), C(1), C(0)},
                      {C(1), C(3), C(0), C(0)},
                      {C(1), C(0), C(2), C(1)},
                      {C(0), C(0), C(1), C(1)}};
            return m;
        default:
            throw capability_error("no symbolic quotient template for " + family_name(id));
    }
}

int template_min_k(FamilyTag id) {
    switch (id) {
        case FamilyTag::K1vKP2:
        case FamilyTag::K1vKP2P1:
            return 1;
        case FamilyTag::K1vKP2_S3:
        case FamilyTag::L2:
            return 2;
        case FamilyTag::K1vKP2_S4:
        case FamilyTag::K1vS3P1:
        case FamilyTag::K1vS4P1:
            return 3;
        default:
            throw capability_error("no symbolic quotient template for " + family_name(id));
    }
}

IntPoly exact_family_charpoly(FamilyTag id, int k) {
    if (has_symbolic_template(id) && k >= template_min_k(id))
        return charpoly(symbolic_quotient(id)).eval_k(Int(k));
    FamilyInstance fi = build_family(id, k);
    QuotientMatrix qm = quotient_q(fi.graph, coarsest_equitable(fi.graph, trivial_partition(fi.graph)));
    KMatrix km;
    km.rows.resize(qm.entries.size());
    for (std::size_t i = 0; i < qm.entries.size(); ++i)
        for (const Int& e : qm.entries[i]) km.rows[i].push_back(PolyK(e));
    return charpoly(km).eval_k(Int(0));
}

Certificate verify_polynomial_claim(PolynomialClaim c, int k_min, int k_max, double num_tol) {
    const ClaimInfo& info = claim_info(c);
    FamilyTag fam = info.family;
    Certificate cert = make_certificate(
        "polynomial." + std::string(info.name),
        std::string("Stored reference polynomial for family ") + family_name(fam) +
            ": its largest real root must equal the family's Q-index for every k in range" +
            (info.symbolic
                 ? ", and the characteristic polynomial of the family's quotient template must "
                   "reproduce the stored coefficients exactly"
                 : "") +
            ".");
    cert.parameters = {{"claim", info.name},
                       {"family", family_name(fam)},
                       {"k_min", k_min},
                       {"k_max", k_max},
                       {"numeric_tolerance", num_tol},
                       {"root_isolation_tolerance", 1e-9}};
    bool ok = true;
    PolyKX stored = stored_polynomial(c);

    if (info.symbolic) {
        PolyKX derived = charpoly(symbolic_quotient(fam));
        bool equal = derived == stored;
        nlohmann::json rec{{"part", "symbolic"},
                           {"derived_charpoly", derived.str()},
                           {"stored", stored.str()},
                           {"equal", equal}};
        if (!equal) rec["stored_minus_derived"] = (stored - derived).str();
        cert.evidence.push_back(rec);
        ok = ok && equal;
    }

    int lo = std::max(k_min, min_k(fam));
    for (int k = lo; k <= k_max; ++k) {
        double root = largest_real_root(stored.eval_k(Int(k)), 1e-9);
        double q = q_index(build_family(fam, k).graph, 1e-10).q;
        double delta = std::fabs(root - q);
        bool within = delta <= num_tol;
        nlohmann::json rec{{"part", "numeric"}, {"k", k},          {"largest_root", root},
                           {"q_index", q},      {"abs_delta", delta}, {"within_tolerance", within}};
        if (c == PolynomialClaim::THM12_GAMMA) {
            // companion cross-check: the two stored quintics for this family
            // are asserted for the same quantity, so their largest roots
            // should coincide tightly
            double f1root =
                largest_real_root(stored_polynomial(PolynomialClaim::F1_S3P1).eval_k(Int(k)), 1e-10);
            double cross = std::fabs(root - f1root);
            rec["companion_quintic_root"] = f1root;
            rec["companion_abs_delta"] = cross;
            rec["companion_tolerance"] = 1e-9;
            within = within && cross <= 1e-9;
            rec["within_tolerance"] = within;
        }
        cert.evidence.push_back(rec);
        ok = ok && within;
    }
    cert.status = ok ? Status::PASS : Status::FAIL;
    return cert;
}

std::vector<Certificate> polynomial_findings(int k_min, int k_max) {
    std::vector<Certificate> out;
    auto sample_ks = [&](int lo) {
        std::vector<int> ks{std::max(k_min, lo)};
        for (int k : {6, 12, 25, k_max})
            if (k > ks.back() && k <= k_max) ks.push_back(k);
        return ks;
    };

    {
        // Derived quotient algebra for the 3k-edge family next to the two
        // stored quintics that both claim its Q-index.
        Certificate cert = make_certificate(
            "finding.root_sets." + family_name(FamilyTag::K1vS3P1),
            "Complete real root sets of the two stored quintics for family " +
                family_name(FamilyTag::K1vS3P1) +
                " next to the characteristic polynomial derived from the family's quotient "
                "template; only the derived polynomial's largest root tracks the eigensolver.");
        PolyKX derived = charpoly(symbolic_quotient(FamilyTag::K1vS3P1));
        PolyKX gamma = stored_polynomial(PolynomialClaim::THM12_GAMMA);
        PolyKX f1 = stored_polynomial(PolynomialClaim::F1_S3P1);
        cert.parameters = {{"family", family_name(FamilyTag::K1vS3P1)},
                           {"derived_charpoly", derived.str()},
                           {"stored_THM12_GAMMA", gamma.str()},
                           {"stored_F1_S3P1", f1.str()},
                           {"stored_F1_minus_derived", (f1 - derived).str()}};
        for (int k : sample_ks(template_min_k(FamilyTag::K1vS3P1))) {
            double q = q_index(build_family(FamilyTag::K1vS3P1, k).graph, 1e-10).q;
            cert.evidence.push_back(
                {{"k", k},
                 {"q_index", q},
                 {"derived_roots", roots_json(all_real_roots(derived.eval_k(Int(k)), 1e-9))},
                 {"stored_THM12_GAMMA_roots", roots_json(all_real_roots(gamma.eval_k(Int(k)), 1e-9))},
                 {"stored_F1_S3P1_roots", roots_json(all_real_roots(f1.eval_k(Int(k)), 1e-9))}});
        }
        cert.status = Status::REPORTED;
        out.push_back(std::move(cert));
    }

    {
        // Derived 5-cell template polynomial for the (3k+2)-edge family; the
        // stored quintic for that family has no stored quotient matrix, so
        // the derivation itself is the reportable artifact.
        Certificate cert = make_certificate(
            "finding.derived_template." + family_name(FamilyTag::K1vS4P1),
            "Characteristic polynomial of the derived 5-cell quotient template for family " +
                family_name(FamilyTag::K1vS4P1) +
                ", compared coefficient-by-coefficient with the stored quintic for the same "
                "family.");
        PolyKX derived = charpoly(symbolic_quotient(FamilyTag::K1vS4P1));
        PolyKX xi = stored_polynomial(PolynomialClaim::THM12_XI);
        bool equal = derived == xi;
        cert.parameters = {{"family", family_name(FamilyTag::K1vS4P1)},
                           {"derived_charpoly", derived.str()},
                           {"stored_THM12_XI", xi.str()},
                           {"coefficients_equal", equal},
                           {"stored_minus_derived", (xi - derived).str()}};
        for (int k : sample_ks(template_min_k(FamilyTag::K1vS4P1))) {
            double q = q_index(build_family(FamilyTag::K1vS4P1, k).graph, 1e-10).q;
            double droot = largest_real_root(derived.eval_k(Int(k)), 1e-9);
            double xroot = largest_real_root(xi.eval_k(Int(k)), 1e-9);
            cert.evidence.push_back({{"k", k},
                                     {"q_index", q},
                                     {"derived_largest_root", droot},
                                     {"stored_largest_root", xroot},
                                     {"derived_abs_delta", std::fabs(droot - q)},
                                     {"stored_abs_delta", std::fabs(xroot - q)}});
        }
        cert.status = Status::REPORTED;
        out.push_back(std::move(cert));
    }
    return out;
}

}  // namespace qsl
