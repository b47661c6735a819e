#pragma once

#include "unicluster/catalog.hpp"

#include <set>

namespace unicluster {

// A basic maximal rigid object, canonically a sorted list of six distinct
// catalog ids containing the three projectives.
struct RigidObject {
    std::vector<CatalogId> ids;

    explicit RigidObject(std::vector<CatalogId> summands);
    static RigidObject initial();  // the running example: SOC2 + U32 + U12 + projectives

    std::vector<CatalogId> non_projectives() const;
    bool contains(CatalogId id) const;
    RigidObject replaced(CatalogId out, CatalogId in) const;
    std::string to_string() const;

    bool operator==(const RigidObject&) const = default;
    bool operator<(const RigidObject& o) const { return ids < o.ids; }
};

bool is_rigid(const Rep& x);
// Six distinct mutually Ext-orthogonal summands to which no thirteenth
// catalog module can be added.
bool is_basic_maximal_rigid(const std::vector<CatalogId>& ids);

// A minimal approximation together with the multiset of target summands.
struct Approximation {
    RepMap map;                         // left: X -> T', right: T' -> X
    std::vector<CatalogId> target_ids;  // summands of T' with multiplicity, sorted
};

// Minimal left add(T)-approximation of x: for each summand class, lift a
// basis of Hom(x, T_j) modulo maps factoring through radical morphisms.
Approximation left_approximation(const Rep& x, const std::vector<CatalogId>& t);
// Dual construction, reversing all arrows.
Approximation right_approximation(const Rep& x, const std::vector<CatalogId>& t);

// Certificates from the defining property: Hom(T', S) -> Hom(x, S) induced by
// the approximation is surjective for every summand S of t, and fails to be
// after dropping any copy from the target. The right-hand versions check the
// dual property Hom(S, T') -> Hom(S, x).
bool left_approximation_property(const Rep& x, const Approximation& appr, const std::vector<CatalogId>& t);
bool left_approximation_minimal(const Rep& x, const Approximation& appr, const std::vector<CatalogId>& t);
bool right_approximation_property(const Rep& x, const Approximation& appr, const std::vector<CatalogId>& t);
bool right_approximation_minimal(const Rep& x, const Approximation& appr, const std::vector<CatalogId>& t);

struct MutationResult {
    RigidObject object;             // the mutated rigid object
    CatalogId removed, added;       // T_i and T_i*
    Ses out_seq;                    // 0 -> T_i -> T_a -> T_i* -> 0
    Ses in_seq;                     // 0 -> T_i* -> T_b -> T_i -> 0
    std::vector<CatalogId> middle_out, middle_in;  // decompositions of T_a, T_b
};

// Mutation at a non-projective summand. Every property the exchange relies
// on is re-verified (injectivity, indecomposable non-projective cokernel,
// one-dimensional Ext^1 both ways, non-splitness, disjoint middle terms,
// maximal rigidity of the result); throws a named diagnostic otherwise.
MutationResult mutate(const RigidObject& t, CatalogId slot);

struct ExchangeGraph {
    struct Edge {
        int a, b;                        // vertex indices, a < b
        CatalogId removed, added;        // mutating `removed` in a yields b
        std::vector<CatalogId> middle_out, middle_in;
    };
    std::vector<RigidObject> vertices;  // sorted
    std::vector<Edge> edges;

    int vertex_index(const RigidObject& v) const;
    std::vector<int> neighbors(int v) const;
};

// Breadth-first closure of the seed under mutation at every non-projective
// slot.
ExchangeGraph exchange_graph(const RigidObject& seed);

// Brute-force oracle: all 3-subsets of the non-projective catalog modules
// with vanishing pairwise Ext^1, each united with the projectives.
std::vector<RigidObject> enumerate_maximal_rigid();

}  // namespace unicluster
