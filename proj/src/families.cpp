#include "qsl/families.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "qsl/errors.hpp"

namespace qsl {

namespace {

// Join families are an apex over (k + pair_offset) matched pairs plus fixed
// extra blocks (built in listed order, stars leaves-first).
struct JoinSpec {
    int pair_offset;
    std::vector<std::pair<PrimitiveKind, int>> extras;
    int size_residue;  // edge count is 3k + size_residue
};

const std::map<FamilyTag, JoinSpec>& join_specs() {
    static const std::map<FamilyTag, JoinSpec> specs = {
        {FamilyTag::K1vKP2, {0, {}, 0}},
        {FamilyTag::K1vKP2_S4, {-2, {{PrimitiveKind::STAR, 4}}, 1}},
        {FamilyTag::K1vKP2_S3, {-1, {{PrimitiveKind::STAR, 3}}, 2}},
        {FamilyTag::K1vKP2P1, {0, {{PrimitiveKind::PATH, 1}}, 1}},
        {FamilyTag::K1vS3P1, {-2, {{PrimitiveKind::STAR, 3}, {PrimitiveKind::PATH, 1}}, 0}},
        {FamilyTag::K1vS4P1, {-2, {{PrimitiveKind::STAR, 4}, {PrimitiveKind::PATH, 1}}, 2}},
        {FamilyTag::K1v2S3P1,
         {-3, {{PrimitiveKind::STAR, 3}, {PrimitiveKind::STAR, 3}, {PrimitiveKind::PATH, 1}}, 2}},
        {FamilyTag::K1vP4P1, {-2, {{PrimitiveKind::PATH, 4}, {PrimitiveKind::PATH, 1}}, 2}},
        {FamilyTag::K1vS5, {-3, {{PrimitiveKind::STAR, 5}}, 0}},
        {FamilyTag::K1vS6, {-3, {{PrimitiveKind::STAR, 6}}, 2}},
        {FamilyTag::K1vS7P1, {-4, {{PrimitiveKind::STAR, 7}, {PrimitiveKind::PATH, 1}}, 2}},
        {FamilyTag::K1vS5P1, {-3, {{PrimitiveKind::STAR, 5}, {PrimitiveKind::PATH, 1}}, 1}},
        {FamilyTag::K1vS6P1, {-4, {{PrimitiveKind::STAR, 6}, {PrimitiveKind::PATH, 1}}, 0}},
        {FamilyTag::K1vC3, {-2, {{PrimitiveKind::CYCLE, 3}}, 0}},
        {FamilyTag::K1vC3P1, {-2, {{PrimitiveKind::CYCLE, 3}, {PrimitiveKind::PATH, 1}}, 1}},
        {FamilyTag::K1vC4, {-2, {{PrimitiveKind::CYCLE, 4}}, 2}},
        {FamilyTag::K1vC4P1, {-3, {{PrimitiveKind::CYCLE, 4}, {PrimitiveKind::PATH, 1}}, 0}},
        {FamilyTag::K1vC3S3, {-3, {{PrimitiveKind::CYCLE, 3}, {PrimitiveKind::STAR, 3}}, 2}},
        {FamilyTag::K1vS3C3P1,
         {-4, {{PrimitiveKind::STAR, 3}, {PrimitiveKind::CYCLE, 3}, {PrimitiveKind::PATH, 1}}, 0}},
    };
    return specs;
}

// Hub-based gadgets: hub w joined to 2k+1 (L1, L2) or 2k (L3..L5) vertices,
// with a single outside vertex w' attached as described per tag.
Graph build_gadget(FamilyTag id, int k) {
    std::vector<Edge> edges;
    auto pair_block = [&edges](int first, int count) {
        for (int i = 0; i < count; ++i) edges.push_back({first + 2 * i, first + 2 * i + 1});
    };
    switch (id) {
        case FamilyTag::L1: {
            // w=0; k-1 pairs; pendant u1; u2,u3 covered by w'
            int n = 2 * k + 3, wp = 2 * k + 2;
            for (int v = 1; v <= 2 * k + 1; ++v) edges.push_back({0, v});
            pair_block(1, k - 1);
            edges.push_back({2 * k, wp});
            edges.push_back({2 * k + 1, wp});
            return Graph(n, edges);
        }
        case FamilyTag::L2: {
            // w=0; k pairs; u3 carrying the outside pendant w'
            int n = 2 * k + 3, wp = 2 * k + 2;
            for (int v = 1; v <= 2 * k + 1; ++v) edges.push_back({0, v});
            pair_block(1, k);
            edges.push_back({2 * k + 1, wp});
            return Graph(n, edges);
        }
        case FamilyTag::L3: {
            // w=0; k-1 pairs; u1,u2 covered by w'; leaf-free
            int n = 2 * k + 2, wp = 2 * k + 1;
            for (int v = 1; v <= 2 * k; ++v) edges.push_back({0, v});
            pair_block(1, k - 1);
            edges.push_back({2 * k - 1, wp});
            edges.push_back({2 * k, wp});
            return Graph(n, edges);
        }
        case FamilyTag::L4: {
            // w=0; k-3 pairs; u1,u2 covered by w'; a 3-star; one pendant
            int n = 2 * k + 2, wp = 2 * k + 1;
            for (int v = 1; v <= 2 * k; ++v) edges.push_back({0, v});
            pair_block(1, k - 3);
            edges.push_back({2 * k - 5, wp});
            edges.push_back({2 * k - 4, wp});
            edges.push_back({2 * k - 1, 2 * k - 3});  // star center to leaves
            edges.push_back({2 * k - 1, 2 * k - 2});
            return Graph(n, edges);
        }
        case FamilyTag::L5: {
            // w=0; k-2 pairs; u1,u2,u3 covered by a degree-3 w'; one pendant
            int n = 2 * k + 2, wp = 2 * k + 1;
            for (int v = 1; v <= 2 * k; ++v) edges.push_back({0, v});
            pair_block(1, k - 2);
            edges.push_back({2 * k - 3, wp});
            edges.push_back({2 * k - 2, wp});
            edges.push_back({2 * k - 1, wp});
            return Graph(n, edges);
        }
        default:
            throw std::logic_error("not a gadget tag");
    }
}

bool is_gadget(FamilyTag id) {
    return id == FamilyTag::L1 || id == FamilyTag::L2 || id == FamilyTag::L3 ||
           id == FamilyTag::L4 || id == FamilyTag::L5;
}

const std::map<FamilyTag, std::string>& name_table() {
    static const std::map<FamilyTag, std::string> names = {
        {FamilyTag::K1vKP2, "K1v(kP2)"},
        {FamilyTag::K1vKP2_S4, "K1v(kP2+S4)"},
        {FamilyTag::K1vKP2_S3, "K1v(kP2+S3)"},
        {FamilyTag::K1vKP2P1, "K1v(kP2+P1)"},
        {FamilyTag::K1vS3P1, "K1v(S3+P1)"},
        {FamilyTag::K1vS4P1, "K1v(S4+P1)"},
        {FamilyTag::K1v2S3P1, "K1v(2S3+P1)"},
        {FamilyTag::K1vP4P1, "K1v(P4+P1)"},
        {FamilyTag::K1vS5, "K1v(S5)"},
        {FamilyTag::K1vS6, "K1v(S6)"},
        {FamilyTag::K1vS7P1, "K1v(S7+P1)"},
        {FamilyTag::K1vS5P1, "K1v(S5+P1)"},
        {FamilyTag::K1vS6P1, "K1v(S6+P1)"},
        {FamilyTag::K1vC3, "K1v(C3)"},
        {FamilyTag::K1vC3P1, "K1v(C3+P1)"},
        {FamilyTag::K1vC4, "K1v(C4)"},
        {FamilyTag::K1vC4P1, "K1v(C4+P1)"},
        {FamilyTag::K1vC3S3, "K1v(C3+S3)"},
        {FamilyTag::K1vS3C3P1, "K1v(S3+C3+P1)"},
        {FamilyTag::L1, "L1"},
        {FamilyTag::L2, "L2"},
        {FamilyTag::L3, "L3"},
        {FamilyTag::L4, "L4"},
        {FamilyTag::L5, "L5"},
    };
    return names;
}

}  // namespace

std::vector<FamilyTag> all_family_tags() {
    std::vector<FamilyTag> tags;
    for (const auto& [tag, name] : name_table()) tags.push_back(tag);
    return tags;
}

int min_k(FamilyTag id) {
    switch (id) {
        case FamilyTag::L1:
        case FamilyTag::L2:
        case FamilyTag::L3:
        case FamilyTag::L5:
            return 2;
        case FamilyTag::L4:
            return 3;
        default:
            return std::max(1, -join_specs().at(id).pair_offset);
    }
}

int expected_size(FamilyTag id, int k) {
    switch (id) {
        case FamilyTag::L1:
        case FamilyTag::L2:
            return 3 * k + 2;
        case FamilyTag::L3:
        case FamilyTag::L4:
        case FamilyTag::L5:
            return 3 * k + 1;
        default:
            return 3 * k + join_specs().at(id).size_residue;
    }
}

FamilyInstance build_family(FamilyTag id, int k) {
    int lo = min_k(id);
    if (k < lo)
        throw domain_error(family_name(id) + " requires k >= " + std::to_string(lo));
    Graph graph;
    int delta = 0;
    if (is_gadget(id)) {
        graph = build_gadget(id, k);
        delta = (id == FamilyTag::L1 || id == FamilyTag::L2) ? 2 * k + 1 : 2 * k;
    } else {
        const JoinSpec& spec = join_specs().at(id);
        std::vector<Graph> blocks{path_graph(2)};
        std::vector<int> mult{k + spec.pair_offset};
        for (const auto& [kind, size] : spec.extras) {
            blocks.push_back(build_primitive(kind, {size}));
            mult.push_back(1);
        }
        Graph inner = disjoint_union(blocks, mult);
        graph = join(path_graph(1), inner);
        delta = inner.vertex_count();
    }
    FamilyInstance inst{id, k, graph, expected_size(id, k), delta};
    if (inst.graph.edge_count() != inst.expected_m ||
        structural_profile(inst.graph).max_degree != inst.expected_delta)
        throw std::logic_error("family construction violated its size/degree contract");
    return inst;
}

PredictedExtremal predicted_extremal(int m) {
    if (m < 3) throw domain_error("prediction needs at least 3 edges");
    PredictedExtremal out{};
    out.below_size_hypothesis = m < 17;
    switch (m % 3) {
        case 0:
            out.id = FamilyTag::K1vS3P1;
            out.k = m / 3;
            break;
        case 1:
            out.id = FamilyTag::K1vKP2P1;
            out.k = (m - 1) / 3;
            break;
        default:
            out.id = FamilyTag::K1vS4P1;
            out.k = (m - 2) / 3;
            break;
    }
    return out;
}

double QuadraticSurd::value() const {
    return (to_double(a) + std::sqrt(to_double(b))) / to_double(c);
}

std::optional<QuadraticSurd> closed_form_q(FamilyTag id, int k) {
    if (k < min_k(id))
        throw domain_error(family_name(id) + " requires k >= " + std::to_string(min_k(id)));
    Int kk = k;
    if (id == FamilyTag::K1vKP2P1)
        return QuadraticSurd{2 * kk + 3, 4 * kk * kk + 4 * kk + 9, 2};
    if (id == FamilyTag::K1vKP2)
        return QuadraticSurd{2 * kk + 3, 4 * kk * kk - 4 * kk + 9, 2};
    return std::nullopt;
}

std::string family_name(FamilyTag id) { return name_table().at(id); }

std::optional<FamilyTag> parse_family(const std::string& name) {
    for (const auto& [tag, n] : name_table())
        if (n == name) return tag;
    return std::nullopt;
}

}  // namespace qsl
