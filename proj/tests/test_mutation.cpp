#include "unicluster/mutation.hpp"

#include <doctest.h>

using namespace unicluster;

namespace {
CatalogId id_of(const char* name) { return *catalog_id_from_string(name); }

std::vector<CatalogId> ids_of(const std::vector<const char*>& names) {
    std::vector<CatalogId> out;
    for (const char* n : names) out.push_back(id_of(n));
    return out;
}
}  // namespace

TEST_CASE("basic maximal rigid detection") {
    CHECK(is_basic_maximal_rigid(ids_of({"SOC2", "U32", "U12", "P1", "P2", "P3"})));
    CHECK(is_basic_maximal_rigid(ids_of({"TOP2", "S1", "S3", "P1", "P2", "P3"})));
    // U12 and U21 coexist: their Ext^1 vanishes and this is a vertex of the
    // exchange graph.
    CHECK(ext1_table(id_of("U12"), id_of("U21")) == 0);
    CHECK(is_basic_maximal_rigid(ids_of({"U12", "U21", "P1", "P2", "P3", "S2"})));
    // Dropping a summand loses maximality; a non-orthogonal pair is not rigid.
    CHECK_FALSE(is_basic_maximal_rigid(ids_of({"SOC2", "U32", "P1", "P2", "P3"})));
    CHECK(ext1_table(id_of("S1"), id_of("S2")) == 1);
    CHECK_FALSE(is_basic_maximal_rigid(ids_of({"S1", "S2", "U12", "P1", "P2", "P3"})));
    CHECK_FALSE(is_basic_maximal_rigid(ids_of({"SOC2", "SOC2", "U12", "P1", "P2", "P3"})));
    CHECK(is_rigid(direct_sum({catalog_rep(id_of("SOC2")), catalog_rep(id_of("U32"))})));
    CHECK_FALSE(is_rigid(direct_sum({catalog_rep(id_of("S1")), catalog_rep(id_of("S2"))})));
}

TEST_CASE("left approximations") {
    // The worked example: U32 -> SOC2 inside T0 / U32.
    Approximation a = left_approximation(catalog_rep(id_of("U32")), ids_of({"SOC2", "U12", "P1", "P2", "P3"}));
    CHECK(a.target_ids == std::vector<CatalogId>{id_of("SOC2")});
    CHECK(a.map.is_injective());
    CHECK(left_approximation_property(catalog_rep(id_of("U32")), a, ids_of({"SOC2", "U12", "P1", "P2", "P3"})));
    CHECK(left_approximation_minimal(catalog_rep(id_of("U32")), a, ids_of({"SOC2", "U12", "P1", "P2", "P3"})));

    // No maps at all: the approximation is the zero map to the zero module.
    Approximation zero = left_approximation(catalog_rep(id_of("S2")), ids_of({"S1"}));
    CHECK(zero.target_ids.empty());
    CHECK(zero.map.target.dim.total() == 0);

    // Approximating inside a class containing the module itself picks the
    // identity coset.
    Approximation self = left_approximation(catalog_rep(id_of("S1")), ids_of({"S1"}));
    CHECK(self.target_ids == std::vector<CatalogId>{id_of("S1")});
    CHECK(self.map.is_injective());
    CHECK(self.map.is_surjective());
}

TEST_CASE("right approximations") {
    // Reverse sequence of the worked example: P3 surjects onto U32.
    Approximation a = right_approximation(catalog_rep(id_of("U32")), ids_of({"SOC2", "U12", "P1", "P2", "P3"}));
    CHECK(a.target_ids == std::vector<CatalogId>{id_of("P3")});
    CHECK(a.map.is_surjective());
    CHECK(right_approximation_property(catalog_rep(id_of("U32")), a, ids_of({"SOC2", "U12", "P1", "P2", "P3"})));
    CHECK(right_approximation_minimal(catalog_rep(id_of("U32")), a, ids_of({"SOC2", "U12", "P1", "P2", "P3"})));
    auto [ker, inc] = kernel_of(a.map);
    CHECK(decompose(ker) == std::vector<CatalogId>{id_of("S1")});

    CHECK(right_approximation(catalog_rep(id_of("S1")), ids_of({"S2"})).target_ids.empty());

    // Second worked mutation: SOC2 is approximated from U12 + P3.
    Approximation b = right_approximation(catalog_rep(id_of("SOC2")), ids_of({"S1", "U12", "P1", "P2", "P3"}));
    CHECK(b.target_ids == ids_of({"P3", "U12"}));
    CHECK(b.map.is_surjective());
    auto [ker2, inc2] = kernel_of(b.map);
    CHECK(decompose(ker2) == std::vector<CatalogId>{id_of("U21")});
}

TEST_CASE("mutation reproduces the worked example") {
    RigidObject t0 = RigidObject::initial();
    MutationResult mu2 = mutate(t0, id_of("U32"));
    CHECK(mu2.object == RigidObject(ids_of({"SOC2", "S1", "U12", "P1", "P2", "P3"})));
    CHECK(mu2.added == id_of("S1"));
    CHECK(mu2.middle_out == std::vector<CatalogId>{id_of("SOC2")});
    CHECK(mu2.middle_in == std::vector<CatalogId>{id_of("P3")});
    CHECK(is_exact(mu2.out_seq));
    CHECK(is_exact(mu2.in_seq));

    MutationResult mu12 = mutate(mu2.object, id_of("SOC2"));
    CHECK(mu12.object == RigidObject(ids_of({"U21", "S1", "U12", "P1", "P2", "P3"})));
    CHECK(mu12.middle_out == ids_of({"P2", "S1"}));
    CHECK(mu12.middle_in == ids_of({"P3", "U12"}));

    // Involutivity at this slot.
    MutationResult back = mutate(mu2.object, mu2.added);
    CHECK(back.object == t0);

    CHECK_THROWS(mutate(t0, id_of("P1")));
    CHECK_THROWS(mutate(t0, id_of("S1")));  // not a summand
}

TEST_CASE("short exact sequence validation") {
    RigidObject t0 = RigidObject::initial();
    MutationResult m = mutate(t0, id_of("U32"));
    CHECK(is_exact(m.out_seq));
    // Identity followed by identity is not exact in the middle.
    const Rep& p2 = catalog_rep(id_of("P2"));
    Ses bogus{identity_map(p2), identity_map(p2)};
    CHECK_FALSE(is_exact(bogus));
    // Swapping the two maps of a real sequence breaks exactness.
    Ses swapped{m.out_seq.right, m.out_seq.left};
    CHECK_FALSE(is_exact(swapped));
}

TEST_CASE("exchange graph combinatorics") {
    ExchangeGraph g = exchange_graph(RigidObject::initial());
    CHECK(g.vertices.size() == 14);
    CHECK(g.edges.size() == 21);
    for (int v = 0; v < 14; ++v) CHECK(g.neighbors(v).size() == 3);
    CHECK(g.vertex_index(RigidObject::initial()) >= 0);

    // Middle terms of the two sequences never share a summand.
    for (const auto& e : g.edges)
        for (CatalogId x : e.middle_out)
            for (CatalogId y : e.middle_in) CHECK(x != y);

    // The brute-force enumeration gives the same vertex set.
    std::vector<RigidObject> brute = enumerate_maximal_rigid();
    CHECK(brute.size() == 14);
    CHECK(brute == g.vertices);
    for (const RigidObject& v : brute) CHECK(is_basic_maximal_rigid(v.ids));
}

TEST_CASE("vertices project to the fourteen minor clusters") {
    // Mapping each maximal rigid object through the character table must
    // reproduce the minor exchange graph's extended clusters (with the three
    // projectives carrying the coefficient minors).
    ExchangeGraph g = exchange_graph(RigidObject::initial());
    auto cluster_of = [](const RigidObject& v) {
        std::set<std::string> s;
        for (CatalogId id : v.non_projectives()) s.insert(catalog_minor(id).to_string());
        return s;
    };
    std::set<std::set<std::string>> got;
    for (const RigidObject& v : g.vertices) got.insert(cluster_of(v));
    std::set<std::set<std::string>> expected = {
        {"D[12][24]", "D[2][4]", "D[3][4]"},   {"D[12][24]", "D[2][4]", "D[12][23]"},
        {"D[12][24]", "D[1][2]", "D[3][4]"},   {"D[23][34]", "D[2][4]", "D[3][4]"},
        {"D[13][34]", "D[1][2]", "D[3][4]"},   {"D[13][34]", "D[23][34]", "D[3][4]"},
        {"D[23][34]", "D[2][4]", "D[2][3]"},   {"D[12][23]", "D[2][4]", "D[2][3]"},
        {"D[12][24]", "D[1][2]", "D[12][23]"}, {"D[13][34]", "D[1][2]", "D[1][3]"},
        {"D[13][34]", "D[23][34]", "D[1][3]"}, {"D[23][34]", "D[2][3]", "D[1][3]"},
        {"D[12][23]", "D[2][3]", "D[1][3]"},   {"D[12][23]", "D[1][2]", "D[1][3]"},
    };
    CHECK(got == expected);
    for (CatalogId p : projective_ids())
        CHECK((catalog_minor(p) == MinorSpec::parse("D[1][4]") || catalog_minor(p) == MinorSpec::parse("D[12][34]") ||
               catalog_minor(p) == MinorSpec::parse("D[123][234]")));
}
