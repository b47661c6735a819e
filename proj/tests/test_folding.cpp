#include "unicluster/folding.hpp"

#include <doctest.h>

using namespace unicluster;

namespace {
CatalogId id_of(const char* name) { return *catalog_id_from_string(name); }

RigidObject object_of(const std::vector<const char*>& names) {
    std::vector<CatalogId> ids;
    for (const char* n : names) ids.push_back(id_of(n));
    return RigidObject(ids);
}
}  // namespace

TEST_CASE("the involution on modules") {
    Rep g_s1 = g_act(catalog_rep(id_of("S1")));
    CHECK(g_s1.dim == DimVec{0, 0, 1});
    CHECK(is_iso(g_s1, catalog_rep(id_of("S3"))));
    CHECK(is_iso(g_act(catalog_rep(id_of("S2"))), catalog_rep(id_of("S2"))));
    CHECK(is_iso(g_act(catalog_rep(id_of("U12"))), catalog_rep(id_of("U32"))));

    CHECK(g_act_id(id_of("S1")) == id_of("S3"));
    CHECK(g_act_id(id_of("U21")) == id_of("U23"));
    CHECK(g_act_id(id_of("TOP2")) == id_of("TOP2"));
    CHECK(g_act_id(id_of("SOC2")) == id_of("SOC2"));
    CHECK(g_act_id(id_of("P1")) == id_of("P3"));
    CHECK(g_act_id(id_of("P2")) == id_of("P2"));

    // Involution up to isomorphism (here even on the nose).
    for (CatalogId id : all_catalog_ids()) {
        CHECK(is_iso(g_act(g_act(catalog_rep(id))), catalog_rep(id)));
        CHECK(g_act_id(g_act_id(id)) == id);
    }
}

TEST_CASE("stability of rigid objects") {
    CHECK(is_stable(object_of({"SOC2", "U32", "U12", "P1", "P2", "P3"})));
    CHECK(is_stable(object_of({"TOP2", "S1", "S3", "P1", "P2", "P3"})));
    CHECK_FALSE(is_stable(object_of({"SOC2", "S1", "U12", "P1", "P2", "P3"})));

    StableSlots slots = stable_slots(RigidObject::initial());
    CHECK(slots.fixed == id_of("SOC2"));
    CHECK(g_act_id(slots.swapped.first) == slots.swapped.second);
    CHECK_THROWS(stable_slots(object_of({"SOC2", "S1", "U12", "P1", "P2", "P3"})));
}

TEST_CASE("folded mutations") {
    RigidObject t0 = RigidObject::initial();
    for (int slot : {1, 2}) {
        FoldedMutation once = folded_mutate(t0, slot);
        CHECK(is_stable(once.object));
        FoldedMutation back = folded_mutate(once.object, slot);
        CHECK(back.object == t0);
    }
    CHECK(folded_mutate(t0, 1).exchanged.size() == 2);
    CHECK(folded_mutate(t0, 2).exchanged.size() == 1);
    CHECK_THROWS(folded_mutate(t0, 3));

    // The orbit under both folded mutations is the full hexagon.
    std::set<RigidObject> orbit{t0};
    std::vector<RigidObject> frontier{t0};
    while (!frontier.empty()) {
        RigidObject v = frontier.back();
        frontier.pop_back();
        for (int slot : {1, 2}) {
            RigidObject next = folded_mutate(v, slot).object;
            if (orbit.insert(next).second) frontier.push_back(next);
        }
    }
    CHECK(orbit.size() == 6);
}

TEST_CASE("stable exchange graph is a hexagon") {
    FoldedGraph g = stable_exchange_graph();
    CHECK(g.vertices.size() == 6);
    CHECK(g.edges.size() == 6);
    for (int v = 0; v < 6; ++v) CHECK(g.neighbors(v).size() == 2);
    int slot1 = 0, slot2 = 0;
    for (const auto& e : g.edges) (e.slot == 1 ? slot1 : slot2)++;
    CHECK(slot1 == 3);
    CHECK(slot2 == 3);
}

TEST_CASE("the projection to the fixed-point subgroup") {
    folding_self_check();
    auto proj = [](const char* spec) { return pi_project(generic_minor(MinorSpec::parse(spec))); };
    CHECK(proj("D[12][23]") == MultiPoly::parse("a12*a23 - a13"));
    CHECK(proj("D[2][4]") == MultiPoly::parse("a12*a23 - a13"));
    CHECK(proj("D[1][2]") == MultiPoly::parse("a12"));
    CHECK(proj("D[3][4]") == MultiPoly::parse("a12"));
    CHECK(proj("D[23][34]") == proj("D[1][3]"));
    CHECK(proj("D[1][4]") == proj("D[123][234]"));
    CHECK_THROWS(pi_project(MultiPoly::parse("t1 + a12")));

    // pi of the character is constant on every orbit.
    for (CatalogId id : all_catalog_ids())
        CHECK(pi_project(generic_minor(catalog_minor(id))) ==
              pi_project(generic_minor(catalog_minor(g_act_id(id)))));

    // The projection does not collapse distinct folded cluster variables.
    CHECK(proj("D[12][24]") != proj("D[13][34]"));
    CHECK(proj("D[2][3]") != proj("D[1][2]"));
    CHECK(proj("D[1][4]") != proj("D[12][34]"));
}

TEST_CASE("the symplectic twist of the generic matrix") {
    SymUniMat image = g_act_matrix(generic_matrix());
    CHECK(image.entry(1, 2) == MultiPoly::parse("a34"));
    CHECK(image.entry(2, 4) == MultiPoly::parse("a12*a23 - a13"));
    CHECK(image.entry(1, 4) == MultiPoly::parse("a12*a23*a34 - a12*a24 - a13*a34 + a14"));
    // Applying the twist twice recovers the generic matrix.
    CHECK(g_act_matrix(image) == generic_matrix());
}
