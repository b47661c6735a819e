#include "unicluster/folding.hpp"

#include <algorithm>
#include <map>

namespace unicluster {

Rep g_act(const Rep& x) {
    DimVec d{x.dim.at(3), x.dim.at(2), x.dim.at(1)};
    Rep y = Rep::make(x.field, d, x.a_beta, x.a_betastar, x.a_alphastar, x.a_alpha);
    if (!validate(y)) throw std::logic_error("g_act: image violates the relations");
    return y;
}

CatalogId g_act_id(CatalogId id) {
    static const std::map<CatalogId, CatalogId>& table = *new std::map<CatalogId, CatalogId>([] {
        std::map<CatalogId, CatalogId> t;
        for (CatalogId id : all_catalog_ids()) {
            std::vector<CatalogId> image = decompose(g_act(catalog_rep(id)));
            if (image.size() != 1) throw std::logic_error("g_act_id: image of an indecomposable decomposed");
            t[id] = image[0];
        }
        for (const auto& [a, b] : t)
            if (t.at(b) != a) throw std::logic_error("g_act_id: not an involution");
        return t;
    }());
    return table.at(id);
}

bool is_stable(const RigidObject& t) {
    std::vector<CatalogId> image;
    for (CatalogId id : t.ids) image.push_back(g_act_id(id));
    std::sort(image.begin(), image.end());
    return image == t.ids;
}

StableSlots stable_slots(const RigidObject& t) {
    if (!is_stable(t)) throw std::invalid_argument("stable_slots: object is not stable");
    std::vector<CatalogId> fixed, moved;
    for (CatalogId id : t.non_projectives())
        (g_act_id(id) == id ? fixed : moved).push_back(id);
    if (fixed.size() != 1 || moved.size() != 2 || g_act_id(moved[0]) != moved[1])
        throw std::logic_error("stable_slots: unexpected orbit structure on " + t.to_string());
    return StableSlots{fixed[0], {moved[0], moved[1]}};
}

FoldedMutation folded_mutate(const RigidObject& t, int slot) {
    StableSlots slots = stable_slots(t);
    if (slot == 2) {
        MutationResult m = mutate(t, slots.fixed);
        if (!is_stable(m.object))
            throw std::logic_error("folded_mutate: mu_2 image of a stable object is not stable");
        return FoldedMutation{m.object, {{m.removed, m.added}}};
    }
    if (slot != 1) throw std::invalid_argument("folded_mutate: slot must be 1 or 2");
    auto [x, y] = slots.swapped;
    MutationResult first = mutate(t, x);
    MutationResult second = mutate(first.object, y);
    MutationResult first_rev = mutate(t, y);
    MutationResult second_rev = mutate(first_rev.object, x);
    if (!(second.object == second_rev.object))
        throw std::logic_error("folded_mutate: mu_1 mu_3 and mu_3 mu_1 disagree on " + t.to_string());
    if (!is_stable(second.object))
        throw std::logic_error("folded_mutate: composed mutation image of a stable object is not stable");
    return FoldedMutation{second.object, {{first.removed, first.added}, {second.removed, second.added}}};
}

int FoldedGraph::vertex_index(const RigidObject& v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || !(*it == v)) return -1;
    return static_cast<int>(it - vertices.begin());
}

std::vector<int> FoldedGraph::neighbors(int v) const {
    std::vector<int> out;
    for (const Edge& e : edges) {
        if (e.a == v) out.push_back(e.b);
        if (e.b == v) out.push_back(e.a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

FoldedGraph stable_exchange_graph() {
    ExchangeGraph base = exchange_graph(RigidObject::initial());
    FoldedGraph g;
    for (const RigidObject& v : base.vertices)
        if (is_stable(v)) g.vertices.push_back(v);
    std::sort(g.vertices.begin(), g.vertices.end());
    std::set<std::pair<int, int>> seen;
    for (const RigidObject& v : g.vertices) {
        for (int slot : {1, 2}) {
            FoldedMutation m = folded_mutate(v, slot);
            int a = g.vertex_index(v);
            int b = g.vertex_index(m.object);
            if (b < 0) throw std::logic_error("stable_exchange_graph: folded mutation left the stable set");
            auto key = std::minmax(a, b);
            if (seen.count(key)) continue;
            seen.insert(key);
            g.edges.push_back(FoldedGraph::Edge{key.first, key.second, slot, m.exchanged});
        }
    }
    std::sort(g.edges.begin(), g.edges.end(), [](const FoldedGraph::Edge& x, const FoldedGraph::Edge& y) {
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    return g;
}

namespace {

const std::map<Var, MultiPoly>& pi_substitution() {
    static const std::map<Var, MultiPoly>& sub = *new std::map<Var, MultiPoly>{
        {Var::a34, MultiPoly::variable(Var::a12)},
        {Var::a24, MultiPoly::variable(Var::a12) * MultiPoly::variable(Var::a23) - MultiPoly::variable(Var::a13)},
    };
    return sub;
}

// 4x4 polynomial matrices, used only for the symplectic twist.
using PolyMat4 = std::array<std::array<MultiPoly, 4>, 4>;

PolyMat4 poly_mul(const PolyMat4& a, const PolyMat4& b) {
    PolyMat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            MultiPoly acc;
            for (int k = 0; k < 4; ++k) acc = acc + a[i][k] * b[k][j];
            r[i][j] = acc;
        }
    return r;
}

PolyMat4 from_uni(const SymUniMat& m) {
    PolyMat4 r;
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) r[i - 1][j - 1] = m.entry(i, j);
    return r;
}

PolyMat4 int_matrix(const std::array<std::array<long, 4>, 4>& m) {
    PolyMat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i][j] = MultiPoly(m[i][j]);
    return r;
}

PolyMat4 poly_transpose(const PolyMat4& a) {
    PolyMat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i][j] = a[j][i];
    return r;
}

// Inverse of a unitriangular matrix via the nilpotent part: (I+N)^{-1}
// = I - N + N^2 - N^3.
PolyMat4 uni_inverse(const SymUniMat& m) {
    PolyMat4 identity = int_matrix({{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}});
    PolyMat4 n = from_uni(m);
    for (int i = 0; i < 4; ++i) n[i][i] = MultiPoly();
    PolyMat4 n2 = poly_mul(n, n);
    PolyMat4 n3 = poly_mul(n2, n);
    PolyMat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i][j] = identity[i][j] - n[i][j] + n2[i][j] - n3[i][j];
    return r;
}

}  // namespace

SymUniMat g_act_matrix(const SymUniMat& m) {
    static const PolyMat4 psi = int_matrix({{{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}}});
    static const PolyMat4 psi_inv = int_matrix({{{0, 0, 0, -1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}}});
    PolyMat4 twisted = poly_mul(poly_mul(psi_inv, poly_transpose(uni_inverse(m))), psi);
    SymUniMat out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == j) {
                if (!(twisted[i][j] == MultiPoly(1))) throw std::logic_error("g_act_matrix: diagonal is not 1");
            } else if (i > j) {
                if (!twisted[i][j].is_zero()) throw std::logic_error("g_act_matrix: image is not unitriangular");
            } else {
                out.set(i + 1, j + 1, twisted[i][j]);
            }
        }
    return out;
}

void folding_self_check() {
    static const bool done = [] {
        SymUniMat generic = generic_matrix();
        SymUniMat image = g_act_matrix(generic);
        // The twist of the generic matrix, written out.
        auto a = [](Var v) { return MultiPoly::variable(v); };
        if (!(image.entry(1, 2) == a(Var::a34)) || !(image.entry(2, 3) == a(Var::a23)) ||
            !(image.entry(3, 4) == a(Var::a12)) ||
            !(image.entry(1, 3) == a(Var::a23) * a(Var::a34) - a(Var::a24)) ||
            !(image.entry(2, 4) == a(Var::a12) * a(Var::a23) - a(Var::a13)) ||
            !(image.entry(1, 4) ==
              a(Var::a12) * a(Var::a23) * a(Var::a34) - a(Var::a12) * a(Var::a24) - a(Var::a13) * a(Var::a34) +
                  a(Var::a14)))
            throw std::logic_error("folding_self_check: symplectic twist of the generic matrix is off");
        // The hard-coded projection must land in the fixed-point set.
        SymUniMat projected;
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j)
                projected.set(i, j, generic.entry(i, j).substitute(pi_substitution()));
        if (!(g_act_matrix(projected) == projected))
            throw std::logic_error("folding_self_check: projected matrix is not a fixed point");
        return true;
    }();
    (void)done;
}

MultiPoly pi_project(const MultiPoly& p) {
    folding_self_check();
    static const Var forbidden[] = {Var::t1, Var::t2, Var::t3, Var::t4, Var::t5, Var::t6, Var::q};
    for (Var v : forbidden)
        if (p.uses(v))
            throw std::invalid_argument(std::string("pi_project: polynomial uses ") + var_name(v) +
                                        "; only a-variables are allowed");
    return p.substitute(pi_substitution());
}

}  // namespace unicluster
