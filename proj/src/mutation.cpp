#include "unicluster/mutation.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace unicluster {

RigidObject::RigidObject(std::vector<CatalogId> summands) : ids(std::move(summands)) {
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw std::invalid_argument("RigidObject: repeated summand (object must be basic)");
}

RigidObject RigidObject::initial() {
    return RigidObject({CatalogId::SOC2, CatalogId::U32, CatalogId::U12, CatalogId::P1, CatalogId::P2, CatalogId::P3});
}

std::vector<CatalogId> RigidObject::non_projectives() const {
    std::vector<CatalogId> out;
    for (CatalogId id : ids)
        if (!is_projective(id)) out.push_back(id);
    return out;
}

bool RigidObject::contains(CatalogId id) const { return std::find(ids.begin(), ids.end(), id) != ids.end(); }

RigidObject RigidObject::replaced(CatalogId out, CatalogId in) const {
    std::vector<CatalogId> next;
    for (CatalogId id : ids)
        if (id != out) next.push_back(id);
    next.push_back(in);
    return RigidObject(next);
}

std::string RigidObject::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < ids.size(); ++i) os << (i ? "+" : "") << unicluster::to_string(ids[i]);
    return os.str();
}

bool is_rigid(const Rep& x) { return ext1_dim(x, x) == 0; }

bool is_basic_maximal_rigid(const std::vector<CatalogId>& ids) {
    std::vector<CatalogId> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    if (sorted.size() != 6) return false;
    for (CatalogId a : sorted)
        for (CatalogId b : sorted)
            if (ext1_table(a, b) != 0) return false;
    for (CatalogId c : all_catalog_ids()) {
        if (std::find(sorted.begin(), sorted.end(), c) != sorted.end()) continue;
        bool addable = ext1_table(c, c) == 0;
        for (CatalogId a : sorted)
            if (ext1_table(a, c) != 0 || ext1_table(c, a) != 0) addable = false;
        if (addable) return false;
    }
    return true;
}

namespace {

std::vector<CatalogId> sorted_distinct(const std::vector<CatalogId>& t) {
    std::vector<CatalogId> s = t;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) throw std::invalid_argument("approximation: empty target class");
    return s;
}

// Coordinates of `maps` in the span of `basis` (both flattened), then the
// indices of a complement of that span inside the basis coordinates. The
// complement is picked as the non-pivot coordinates of the column-echelon
// span, so lifting is just selecting basis elements.
std::vector<int> complement_indices(const std::vector<RepMap>& basis, const std::vector<RepMap>& maps, Field f) {
    int h = static_cast<int>(basis.size());
    if (h == 0) return {};
    int flat_len = static_cast<int>(basis[0].flatten().size());
    Mat b(flat_len, h, f);
    for (int j = 0; j < h; ++j) {
        auto v = basis[j].flatten();
        for (int i = 0; i < flat_len; ++i) b.set(i, j, v[static_cast<size_t>(i)]);
    }
    Mat coords(h, static_cast<int>(maps.size()), f);
    for (size_t j = 0; j < maps.size(); ++j) {
        auto sol = b.solve(Mat::column(maps[j].flatten(), f));
        if (!sol) throw std::logic_error("approximation: composite map escapes Hom");
        for (int i = 0; i < h; ++i) coords.set(i, static_cast<int>(j), sol->at(i, 0));
    }
    Mat span = coords.column_space();
    std::vector<int> pivots;
    for (int c = 0; c < span.cols(); ++c)
        for (int r = 0; r < h; ++r)
            if (!span.at(r, c).is_zero()) {
                pivots.push_back(r);
                break;
            }
    std::vector<int> complement;
    for (int r = 0; r < h; ++r)
        if (std::find(pivots.begin(), pivots.end(), r) == pivots.end()) complement.push_back(r);
    return complement;
}

}  // namespace

Approximation left_approximation(const Rep& x, const std::vector<CatalogId>& t) {
    if (!x.field.is_rational()) throw std::invalid_argument("left_approximation: needs rational field");
    std::vector<CatalogId> classes = sorted_distinct(t);
    std::vector<RepMap> chosen;
    std::vector<CatalogId> chosen_ids;
    for (CatalogId j : classes) {
        const Rep& tj = catalog_rep(j);
        std::vector<RepMap> hom_xj = hom_basis(x, tj);
        if (hom_xj.empty()) continue;
        // Every composite through radical morphisms into T_j.
        std::vector<RepMap> factoring;
        for (CatalogId i : classes) {
            const Rep& ti = catalog_rep(i);
            std::vector<RepMap> hom_xi = hom_basis(x, ti);
            if (hom_xi.empty()) continue;
            std::vector<RepMap> connectors =
                i == j ? radical_of_end(hom_basis(ti, ti)) : hom_basis(ti, tj);
            for (const RepMap& g : connectors)
                for (const RepMap& f : hom_xi) factoring.push_back(g.compose_after(f));
        }
        for (int idx : complement_indices(hom_xj, factoring, x.field)) {
            chosen.push_back(hom_xj[static_cast<size_t>(idx)]);
            chosen_ids.push_back(j);
        }
    }
    if (chosen.empty())
        return Approximation{zero_map(x, Rep::zero_rep(x.field)), {}};
    std::vector<Rep> targets;
    for (CatalogId id : chosen_ids) targets.push_back(catalog_rep(id));
    Rep target = direct_sum(targets);
    Mat f1 = chosen[0].f1, f2 = chosen[0].f2, f3 = chosen[0].f3;
    for (size_t k = 1; k < chosen.size(); ++k) {
        f1 = f1.vstack(chosen[k].f1);
        f2 = f2.vstack(chosen[k].f2);
        f3 = f3.vstack(chosen[k].f3);
    }
    RepMap map{x, target, f1, f2, f3};
    if (!is_valid_map(map)) throw std::logic_error("left_approximation: assembled map does not commute");
    return Approximation{map, chosen_ids};
}

Approximation right_approximation(const Rep& x, const std::vector<CatalogId>& t) {
    if (!x.field.is_rational()) throw std::invalid_argument("right_approximation: needs rational field");
    std::vector<CatalogId> classes = sorted_distinct(t);
    std::vector<RepMap> chosen;
    std::vector<CatalogId> chosen_ids;
    for (CatalogId j : classes) {
        const Rep& tj = catalog_rep(j);
        std::vector<RepMap> hom_jx = hom_basis(tj, x);
        if (hom_jx.empty()) continue;
        std::vector<RepMap> factoring;
        for (CatalogId i : classes) {
            const Rep& ti = catalog_rep(i);
            std::vector<RepMap> hom_ix = hom_basis(ti, x);
            if (hom_ix.empty()) continue;
            std::vector<RepMap> connectors =
                i == j ? radical_of_end(hom_basis(tj, tj)) : hom_basis(tj, ti);
            for (const RepMap& g : connectors)
                for (const RepMap& f : hom_ix) factoring.push_back(f.compose_after(g));
        }
        for (int idx : complement_indices(hom_jx, factoring, x.field)) {
            chosen.push_back(hom_jx[static_cast<size_t>(idx)]);
            chosen_ids.push_back(j);
        }
    }
    if (chosen.empty())
        return Approximation{zero_map(Rep::zero_rep(x.field), x), {}};
    std::vector<Rep> sources;
    for (CatalogId id : chosen_ids) sources.push_back(catalog_rep(id));
    Rep source = direct_sum(sources);
    Mat f1 = chosen[0].f1, f2 = chosen[0].f2, f3 = chosen[0].f3;
    for (size_t k = 1; k < chosen.size(); ++k) {
        f1 = f1.hstack(chosen[k].f1);
        f2 = f2.hstack(chosen[k].f2);
        f3 = f3.hstack(chosen[k].f3);
    }
    RepMap map{source, x, f1, f2, f3};
    if (!is_valid_map(map)) throw std::logic_error("right_approximation: assembled map does not commute");
    return Approximation{map, chosen_ids};
}

namespace {

// Rank of the image of Hom(T', S) -> Hom(X, S), h |-> h o f.
bool induced_surjective_left(const RepMap& f, const Rep& s) {
    const Rep& x = f.source;
    int want = hom_dim(x, s);
    if (want == 0) return true;
    std::vector<RepMap> hom_ts = hom_basis(f.target, s);
    if (hom_ts.empty()) return false;
    int flat_len = static_cast<int>(zero_map(x, s).flatten().size());
    Mat cols(flat_len, static_cast<int>(hom_ts.size()), x.field);
    for (size_t j = 0; j < hom_ts.size(); ++j) {
        auto v = hom_ts[j].compose_after(f).flatten();
        for (int i = 0; i < flat_len; ++i) cols.set(i, static_cast<int>(j), v[static_cast<size_t>(i)]);
    }
    return cols.rank() == want;
}

// Rank of the image of Hom(S, T') -> Hom(S, X), h |-> f o h.
bool induced_surjective_right(const RepMap& f, const Rep& s) {
    const Rep& x = f.target;
    int want = hom_dim(s, x);
    if (want == 0) return true;
    std::vector<RepMap> hom_st = hom_basis(s, f.source);
    if (hom_st.empty()) return false;
    int flat_len = static_cast<int>(zero_map(s, x).flatten().size());
    Mat cols(flat_len, static_cast<int>(hom_st.size()), x.field);
    for (size_t j = 0; j < hom_st.size(); ++j) {
        auto v = f.compose_after(hom_st[j]).flatten();
        for (int i = 0; i < flat_len; ++i) cols.set(i, static_cast<int>(j), v[static_cast<size_t>(i)]);
    }
    return cols.rank() == want;
}

Mat sub_rows(const Mat& m, int first, int count) {
    return m.transpose().sub_columns(first, count).transpose();
}

RepMap drop_target_copy(const Approximation& appr, size_t drop) {
    // Projection of the map that forgets the drop-th summand block of the
    // target.
    const auto& ids = appr.target_ids;
    const Rep& x = appr.map.source;
    Field f = x.field;
    std::vector<Rep> kept;
    for (size_t k = 0; k < ids.size(); ++k)
        if (k != drop) kept.push_back(catalog_rep(ids[k]));
    Rep target = kept.empty() ? Rep::zero_rep(f) : direct_sum(kept);
    std::vector<Mat> parts1, parts2, parts3;
    int off1 = 0, off2 = 0, off3 = 0;
    for (size_t k = 0; k < ids.size(); ++k) {
        const Rep& r = catalog_rep(ids[k]);
        if (k != drop) {
            parts1.push_back(sub_rows(appr.map.f1, off1, r.dim.at(1)));
            parts2.push_back(sub_rows(appr.map.f2, off2, r.dim.at(2)));
            parts3.push_back(sub_rows(appr.map.f3, off3, r.dim.at(3)));
        }
        off1 += r.dim.at(1);
        off2 += r.dim.at(2);
        off3 += r.dim.at(3);
    }
    auto stack = [&](const std::vector<Mat>& parts, int cols) {
        Mat acc(0, cols, f);
        for (const Mat& p : parts) acc = acc.vstack(p);
        return acc;
    };
    return RepMap{x, target, stack(parts1, x.dim.at(1)), stack(parts2, x.dim.at(2)), stack(parts3, x.dim.at(3))};
}

}  // namespace

bool left_approximation_property(const Rep& x, const Approximation& appr, const std::vector<CatalogId>& t) {
    (void)x;
    for (CatalogId s : sorted_distinct(t))
        if (!induced_surjective_left(appr.map, catalog_rep(s))) return false;
    return true;
}

bool left_approximation_minimal(const Rep& x, const Approximation& appr, const std::vector<CatalogId>& t) {
    for (size_t drop = 0; drop < appr.target_ids.size(); ++drop) {
        RepMap smaller = drop_target_copy(appr, drop);
        bool still_works = true;
        for (CatalogId s : sorted_distinct(t))
            if (!induced_surjective_left(smaller, catalog_rep(s))) {
                still_works = false;
                break;
            }
        if (still_works) return false;
        (void)x;
    }
    return true;
}

namespace {

RepMap drop_source_copy(const Approximation& appr, size_t drop) {
    // Restriction of the map that forgets the drop-th summand block of the
    // source.
    const auto& ids = appr.target_ids;
    const Rep& x = appr.map.target;
    Field f = x.field;
    std::vector<Rep> kept;
    for (size_t k = 0; k < ids.size(); ++k)
        if (k != drop) kept.push_back(catalog_rep(ids[k]));
    Rep source = kept.empty() ? Rep::zero_rep(f) : direct_sum(kept);
    std::vector<Mat> parts1, parts2, parts3;
    int off1 = 0, off2 = 0, off3 = 0;
    for (size_t k = 0; k < ids.size(); ++k) {
        const Rep& r = catalog_rep(ids[k]);
        if (k != drop) {
            parts1.push_back(appr.map.f1.sub_columns(off1, r.dim.at(1)));
            parts2.push_back(appr.map.f2.sub_columns(off2, r.dim.at(2)));
            parts3.push_back(appr.map.f3.sub_columns(off3, r.dim.at(3)));
        }
        off1 += r.dim.at(1);
        off2 += r.dim.at(2);
        off3 += r.dim.at(3);
    }
    auto stack = [&](const std::vector<Mat>& parts, int rows) {
        Mat acc(rows, 0, f);
        for (const Mat& p : parts) acc = acc.hstack(p);
        return acc;
    };
    return RepMap{source, x, stack(parts1, x.dim.at(1)), stack(parts2, x.dim.at(2)), stack(parts3, x.dim.at(3))};
}

}  // namespace

bool right_approximation_property(const Rep& x, const Approximation& appr, const std::vector<CatalogId>& t) {
    (void)x;
    for (CatalogId s : sorted_distinct(t))
        if (!induced_surjective_right(appr.map, catalog_rep(s))) return false;
    return true;
}

bool right_approximation_minimal(const Rep& x, const Approximation& appr, const std::vector<CatalogId>& t) {
    (void)x;
    for (size_t drop = 0; drop < appr.target_ids.size(); ++drop) {
        RepMap smaller = drop_source_copy(appr, drop);
        bool still_works = true;
        for (CatalogId s : sorted_distinct(t))
            if (!induced_surjective_right(smaller, catalog_rep(s))) {
                still_works = false;
                break;
            }
        if (still_works) return false;
    }
    return true;
}

MutationResult mutate(const RigidObject& t, CatalogId slot) {
    if (!t.contains(slot)) throw std::invalid_argument("mutate: object does not contain " + to_string(slot));
    if (is_projective(slot))
        throw std::invalid_argument("mutate: refusing to mutate the projective summand " + to_string(slot));
    if (!is_basic_maximal_rigid(t.ids)) throw std::invalid_argument("mutate: object is not basic maximal rigid");

    std::vector<CatalogId> rest;
    for (CatalogId id : t.ids)
        if (id != slot) rest.push_back(id);
    const Rep& x = catalog_rep(slot);

    Approximation left = left_approximation(x, rest);
    if (!left_approximation_property(x, left, rest))
        throw std::logic_error("mutate: left approximation fails the factorization property");
    if (!left_approximation_minimal(x, left, rest))
        throw std::logic_error("mutate: left approximation target is not minimal");
    if (!left.map.is_injective())
        throw std::logic_error("mutate: the minimal left approximation of " + to_string(slot) +
                               " is not injective");
    auto [coker, proj] = cokernel_of(left.map);
    Ses out_seq{left.map, proj};
    if (!is_exact(out_seq)) throw std::logic_error("mutate: outgoing exchange sequence is not exact");
    std::vector<CatalogId> coker_ids = decompose(coker);
    if (coker_ids.size() != 1)
        throw std::logic_error("mutate: the cokernel of the approximation is not indecomposable");
    CatalogId added = coker_ids[0];
    if (is_projective(added))
        throw std::logic_error("mutate: the cokernel of the approximation is projective");
    if (ext1_table(slot, added) != 1 || ext1_table(added, slot) != 1)
        throw std::logic_error("mutate: dim Ext^1 between the exchanged pair is not 1 both ways");
    std::vector<CatalogId> middle_out = left.target_ids;
    {
        std::vector<CatalogId> split{slot, added};
        std::sort(split.begin(), split.end());
        if (middle_out == split)
            throw std::logic_error("mutate: the outgoing exchange sequence splits");
    }

    Approximation right = right_approximation(x, rest);
    if (!right_approximation_property(x, right, rest))
        throw std::logic_error("mutate: right approximation fails the factorization property");
    if (!right_approximation_minimal(x, right, rest))
        throw std::logic_error("mutate: right approximation source is not minimal");
    if (!right.map.is_surjective())
        throw std::logic_error("mutate: the minimal right approximation of " + to_string(slot) +
                               " is not surjective");
    auto [ker, incl] = kernel_of(right.map);
    Ses in_seq{incl, right.map};
    if (!is_exact(in_seq)) throw std::logic_error("mutate: incoming exchange sequence is not exact");
    std::vector<CatalogId> ker_ids = decompose(ker);
    if (ker_ids != std::vector<CatalogId>{added})
        throw std::logic_error("mutate: the two exchange sequences disagree on " + to_string(slot) + "*");
    std::vector<CatalogId> middle_in = right.target_ids;
    {
        std::vector<CatalogId> split{slot, added};
        std::sort(split.begin(), split.end());
        if (middle_in == split)
            throw std::logic_error("mutate: the incoming exchange sequence splits");
    }
    for (CatalogId a : middle_out)
        for (CatalogId b : middle_in)
            if (a == b)
                throw std::logic_error("mutate: the two middle terms share the summand " +
                                       to_string(a));

    RigidObject result = t.replaced(slot, added);
    if (!is_basic_maximal_rigid(result.ids))
        throw std::logic_error("mutate: the mutated object is not basic maximal rigid");
    return MutationResult{result, slot, added, out_seq, in_seq, middle_out, middle_in};
}

int ExchangeGraph::vertex_index(const RigidObject& v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || !(*it == v)) return -1;
    return static_cast<int>(it - vertices.begin());
}

std::vector<int> ExchangeGraph::neighbors(int v) const {
    std::vector<int> out;
    for (const Edge& e : edges) {
        if (e.a == v) out.push_back(e.b);
        if (e.b == v) out.push_back(e.a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

ExchangeGraph exchange_graph(const RigidObject& seed) {
    std::set<RigidObject> seen{seed};
    std::deque<RigidObject> frontier{seed};
    struct RawEdge {
        RigidObject a, b;
        CatalogId removed, added;
        std::vector<CatalogId> middle_out, middle_in;
    };
    std::vector<RawEdge> raw;
    std::set<std::pair<RigidObject, RigidObject>> edge_seen;
    while (!frontier.empty()) {
        RigidObject v = frontier.front();
        frontier.pop_front();
        for (CatalogId slot : v.non_projectives()) {
            MutationResult m = mutate(v, slot);
            if (!seen.count(m.object)) {
                seen.insert(m.object);
                frontier.push_back(m.object);
            }
            RigidObject lo = std::min(v, m.object), hi = std::max(v, m.object);
            if (!edge_seen.count({lo, hi})) {
                edge_seen.insert({lo, hi});
                if (v == lo)
                    raw.push_back(RawEdge{lo, hi, m.removed, m.added, m.middle_out, m.middle_in});
                else
                    raw.push_back(RawEdge{lo, hi, m.added, m.removed, m.middle_in, m.middle_out});
            }
        }
    }
    ExchangeGraph g;
    g.vertices.assign(seen.begin(), seen.end());
    for (const RawEdge& e : raw)
        g.edges.push_back(ExchangeGraph::Edge{g.vertex_index(e.a), g.vertex_index(e.b), e.removed, e.added,
                                              e.middle_out, e.middle_in});
    std::sort(g.edges.begin(), g.edges.end(), [](const ExchangeGraph::Edge& x, const ExchangeGraph::Edge& y) {
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    return g;
}

std::vector<RigidObject> enumerate_maximal_rigid() {
    const auto& np = nonprojective_ids();
    std::vector<RigidObject> out;
    for (size_t i = 0; i < np.size(); ++i)
        for (size_t j = i + 1; j < np.size(); ++j)
            for (size_t k = j + 1; k < np.size(); ++k) {
                std::vector<CatalogId> trio{np[i], np[j], np[k]};
                bool rigid = true;
                for (CatalogId a : trio)
                    for (CatalogId b : trio)
                        if (ext1_table(a, b) != 0) rigid = false;
                if (!rigid) continue;
                trio.insert(trio.end(), projective_ids().begin(), projective_ids().end());
                out.emplace_back(trio);
            }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace unicluster
