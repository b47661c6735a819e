#pragma once

#include "unicluster/character.hpp"

namespace unicluster {

// The diagram involution: swap vertices 1 and 3, exchange alpha with beta
// and alphastar with betastar. Exact on matrices, involutive on the nose.
Rep g_act(const Rep& x);

// Induced permutation of the catalog, certified by decompose(g_act(rep)).
CatalogId g_act_id(CatalogId id);

// Stable objects: the id multiset is fixed by the involution.
bool is_stable(const RigidObject& t);

// For a stable object: the g-fixed non-projective summand and the swapped
// pair among the non-projectives.
struct StableSlots {
    CatalogId fixed;
    std::pair<CatalogId, CatalogId> swapped;
};
StableSlots stable_slots(const RigidObject& t);

struct FoldedMutation {
    RigidObject object;
    std::vector<std::pair<CatalogId, CatalogId>> exchanged;  // (removed, added) per underlying mutation
};

// Slot 1 mutates both members of the swapped pair (both orders must agree);
// slot 2 mutates the fixed summand. Stability of the result is enforced.
FoldedMutation folded_mutate(const RigidObject& t, int slot);

struct FoldedGraph {
    struct Edge {
        int a, b;
        int slot;  // 1 or 2
        std::vector<std::pair<CatalogId, CatalogId>> exchanged;
    };
    std::vector<RigidObject> vertices;  // sorted
    std::vector<Edge> edges;

    int vertex_index(const RigidObject& v) const;
    std::vector<int> neighbors(int v) const;
};

// Stable vertices of the exchange graph connected by folded mutations.
FoldedGraph stable_exchange_graph();

// Restriction of functions to the fixed-point subgroup: substitute
// a34 -> a12 and a24 -> a12*a23 - a13. Rejects t-variables.
MultiPoly pi_project(const MultiPoly& p);

// The symplectic-form twist M -> Psi^{-1} (tM)^{-1} Psi on unitriangular
// matrices, computed symbolically.
SymUniMat g_act_matrix(const SymUniMat& m);

// Re-derives the projection from the fixed-point computation and cross-checks
// the hard-coded substitution; throws on drift. Runs once, lazily.
void folding_self_check();

}  // namespace unicluster
