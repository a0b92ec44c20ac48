#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsl/exact.hpp"
#include "qsl/graph.hpp"

namespace qsl {

// Named parameterized graph families: an apex vertex joined over unions of
// matched pairs, stars, paths, and cycles, plus the five hand-built gadget
// graphs L1..L5.  Tag names encode the construction (e.g. K1vS3P1 is the
// apex join over (k-2) pairs, one 3-vertex star, and one lone vertex).
enum class FamilyTag {
    K1vKP2,
    K1vKP2_S4,
    K1vKP2_S3,
    K1vKP2P1,
    K1vS3P1,
    K1vS4P1,
    K1v2S3P1,
    K1vP4P1,
    K1vS5,
    K1vS6,
    K1vS7P1,
    K1vS5P1,
    K1vS6P1,
    K1vC3,
    K1vC3P1,
    K1vC4,
    K1vC4P1,
    K1vC3S3,
    K1vS3C3P1,
    L1,
    L2,
    L3,
    L4,
    L5,
};

std::vector<FamilyTag> all_family_tags();

// Smallest k for which every block multiplicity is nonnegative.
int min_k(FamilyTag id);

// Edge count as a function of k (always 3k, 3k+1, or 3k+2).
int expected_size(FamilyTag id, int k);

struct FamilyInstance {
    FamilyTag id;
    int k;
    Graph graph;
    int expected_m;
    int expected_delta;
};

// Constructs the family member at parameter k with a fixed vertex layout:
// apex (or hub w) first, matched pairs next, remaining blocks in tag order,
// stars laid out leaves before center.  Throws domain_error below min_k.
FamilyInstance build_family(FamilyTag id, int k);

// Residue-class prediction of the extremal family for a given edge count:
// 3k -> K1vS3P1, 3k+1 -> K1vKP2P1, 3k+2 -> K1vS4P1.  Sizes below 17 fall
// outside the supporting theorem's hypothesis and carry a warning flag.
struct PredictedExtremal {
    FamilyTag id;
    int k;
    bool below_size_hypothesis;
};

PredictedExtremal predicted_extremal(int m);

// Exact value (a + sqrt(b)) / c.
struct QuadraticSurd {
    Int a;
    Int b;
    Int c;
    double value() const;
};

// Closed-form Q-index where one exists (the two pure pair families);
// nullopt for families handled by polynomial root isolation.
std::optional<QuadraticSurd> closed_form_q(FamilyTag id, int k);

// Stable CLI-facing names, e.g. "K1v(kP2+P1)", "L3".
std::string family_name(FamilyTag id);
std::optional<FamilyTag> parse_family(const std::string& name);

}  // namespace qsl
