#include "unicluster/catalog.hpp"

#include <algorithm>
#include <map>

namespace unicluster {

namespace {
constexpr const char* kNames[12] = {"P1", "P2", "P3", "S1", "S2", "S3",
                                    "SOC2", "TOP2", "U12", "U21", "U23", "U32"};
}

std::string to_string(CatalogId id) { return kNames[static_cast<int>(id)]; }

std::optional<CatalogId> catalog_id_from_string(const std::string& name) {
    for (int i = 0; i < 12; ++i)
        if (name == kNames[i]) return static_cast<CatalogId>(i);
    return std::nullopt;
}

const std::vector<CatalogId>& all_catalog_ids() {
    static const std::vector<CatalogId> ids = [] {
        std::vector<CatalogId> v;
        for (int i = 0; i < 12; ++i) v.push_back(static_cast<CatalogId>(i));
        return v;
    }();
    return ids;
}

const std::vector<CatalogId>& projective_ids() {
    static const std::vector<CatalogId> ids{CatalogId::P1, CatalogId::P2, CatalogId::P3};
    return ids;
}

const std::vector<CatalogId>& nonprojective_ids() {
    static const std::vector<CatalogId> ids = [] {
        std::vector<CatalogId> v;
        for (CatalogId id : all_catalog_ids())
            if (!is_projective(id)) v.push_back(id);
        return v;
    }();
    return ids;
}

bool is_projective(CatalogId id) {
    return id == CatalogId::P1 || id == CatalogId::P2 || id == CatalogId::P3;
}

namespace {

Mat q_mat(const std::vector<std::vector<long>>& rows, int r, int c) {
    Mat m(r, c, Field::rationals());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.set(i, j, Scalar(Rational(rows[i][j])));
    return m;
}

Rep build_catalog_rep(CatalogId id) {
    Field f = Field::rationals();
    auto rep = [&](int d1, int d2, int d3, std::vector<std::vector<long>> alpha,
                   std::vector<std::vector<long>> alphastar, std::vector<std::vector<long>> betastar,
                   std::vector<std::vector<long>> beta) {
        return Rep::make(f, DimVec{d1, d2, d3}, q_mat(alpha, d2, d1), q_mat(alphastar, d1, d2),
                         q_mat(betastar, d3, d2), q_mat(beta, d2, d3));
    };
    switch (id) {
        case CatalogId::S1: return rep(1, 0, 0, {}, {{}}, {}, {});
        case CatalogId::S2: return rep(0, 1, 0, {{}}, {}, {}, {{}});
        case CatalogId::S3: return rep(0, 0, 1, {}, {}, {{}}, {});
        case CatalogId::U12: return rep(1, 1, 0, {{1}}, {{0}}, {}, {{}});
        case CatalogId::U21: return rep(1, 1, 0, {{0}}, {{1}}, {}, {{}});
        case CatalogId::U23: return rep(0, 1, 1, {{}}, {}, {{1}}, {{0}});
        case CatalogId::U32: return rep(0, 1, 1, {{}}, {}, {{0}}, {{1}});
        case CatalogId::TOP2: return rep(1, 1, 1, {{0}}, {{1}}, {{1}}, {{0}});
        case CatalogId::SOC2: return rep(1, 1, 1, {{1}}, {{0}}, {{0}}, {{1}});
        case CatalogId::P1: return rep(1, 1, 1, {{1}}, {{0}}, {{1}}, {{0}});
        case CatalogId::P3: return rep(1, 1, 1, {{0}}, {{1}}, {{0}}, {{1}});
        case CatalogId::P2:
            return rep(1, 2, 1, {{0}, {-1}}, {{1, 0}}, {{1, 0}}, {{0}, {1}});
    }
    throw std::logic_error("build_catalog_rep");
}

}  // namespace

const Rep& catalog_rep(CatalogId id) {
    static const std::map<CatalogId, Rep>& table = *new std::map<CatalogId, Rep>([] {
        std::map<CatalogId, Rep> t;
        for (CatalogId id : all_catalog_ids()) {
            Rep r = build_catalog_rep(id);
            if (!validate(r)) throw std::logic_error("catalog module " + to_string(id) + " violates the relations");
            t.emplace(id, std::move(r));
        }
        return t;
    }());
    return table.at(id);
}

const MinorSpec& catalog_minor(CatalogId id) {
    static const std::map<CatalogId, MinorSpec>& table = *new std::map<CatalogId, MinorSpec>{
        {CatalogId::S1, MinorSpec({1}, {2})},
        {CatalogId::S2, MinorSpec({2}, {3})},
        {CatalogId::S3, MinorSpec({3}, {4})},
        {CatalogId::U12, MinorSpec({1, 2}, {2, 3})},
        {CatalogId::U21, MinorSpec({1}, {3})},
        {CatalogId::U23, MinorSpec({2, 3}, {3, 4})},
        {CatalogId::U32, MinorSpec({2}, {4})},
        {CatalogId::TOP2, MinorSpec({1, 3}, {3, 4})},
        {CatalogId::SOC2, MinorSpec({1, 2}, {2, 4})},
        {CatalogId::P1, MinorSpec({1, 2, 3}, {2, 3, 4})},
        {CatalogId::P2, MinorSpec({1, 2}, {3, 4})},
        {CatalogId::P3, MinorSpec({1}, {4})},
    };
    return table.at(id);
}

std::optional<CatalogId> catalog_id_of_minor(const MinorSpec& spec) {
    for (CatalogId id : all_catalog_ids())
        if (catalog_minor(id) == spec) return id;
    return std::nullopt;
}

int ext1_table(CatalogId x, CatalogId y) {
    static const auto& table = *new std::map<std::pair<CatalogId, CatalogId>, int>([] {
        std::map<std::pair<CatalogId, CatalogId>, int> t;
        for (CatalogId a : all_catalog_ids())
            for (CatalogId b : all_catalog_ids()) t[{a, b}] = ext1_dim(catalog_rep(a), catalog_rep(b));
        return t;
    }());
    return table.at({x, y});
}

int hom_table(CatalogId x, CatalogId y) {
    static const auto& table = *new std::map<std::pair<CatalogId, CatalogId>, int>([] {
        std::map<std::pair<CatalogId, CatalogId>, int> t;
        for (CatalogId a : all_catalog_ids())
            for (CatalogId b : all_catalog_ids()) t[{a, b}] = hom_dim(catalog_rep(a), catalog_rep(b));
        return t;
    }());
    return table.at({x, y});
}

std::optional<CatalogId> identify(const Rep& x) {
    for (CatalogId id : all_catalog_ids()) {
        const Rep& c = catalog_rep(id);
        if (!(c.dim == x.dim)) continue;
        if (is_iso(x, c)) return id;
    }
    return std::nullopt;
}

namespace {

RepMap power(const RepMap& e, int n) {
    RepMap acc = identity_map(e.source);
    for (int i = 0; i < n; ++i) acc = e.compose_after(acc);
    return acc;
}

// Deterministic candidate endomorphisms: basis elements, then pairwise sums,
// then signed combinations supported on at most three basis elements.
std::vector<RepMap> splitting_candidates(const std::vector<RepMap>& basis) {
    std::vector<RepMap> out = basis;
    size_t m = basis.size();
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) out.push_back(basis[i] + basis[j]);
    Field f = basis.empty() ? Field::rationals() : basis[0].source.field;
    Scalar minus_one = -Scalar::one(f);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            out.push_back(basis[i] + basis[j].scaled(minus_one));
            for (size_t k = j + 1; k < m; ++k)
                for (int sj = -1; sj <= 1; sj += 2)
                    for (int sk = -1; sk <= 1; sk += 2)
                        out.push_back(basis[i] + basis[j].scaled(sj < 0 ? minus_one : Scalar::one(f)) +
                                      basis[k].scaled(sk < 0 ? minus_one : Scalar::one(f)));
        }
    return out;
}

void decompose_into(const Rep& x, std::vector<CatalogId>& out) {
    if (x.dim.total() == 0) return;
    std::vector<RepMap> endos = hom_basis(x, x);
    int n = x.dim.total();
    for (const RepMap& e : splitting_candidates(endos)) {
        RepMap en = power(e, n);
        std::array<Mat, 3> image = {en.f1.column_space(), en.f2.column_space(), en.f3.column_space()};
        int image_dim = image[0].cols() + image[1].cols() + image[2].cols();
        if (image_dim == 0 || image_dim == n) continue;  // nilpotent or invertible
        std::array<Mat, 3> gen_kernel = {en.f1.kernel(), en.f2.kernel(), en.f3.kernel()};
        auto [img, img_inc] = sub_rep(x, image);
        auto [ker, ker_inc] = sub_rep(x, gen_kernel);
        if (img.dim.total() + ker.dim.total() != n)
            throw std::logic_error("decompose: Fitting split dimensions do not add up");
        decompose_into(img, out);
        decompose_into(ker, out);
        return;
    }
    // No candidate splits: certify indecomposability exactly. End modulo its
    // radical must be one-dimensional, with the identity outside the radical.
    if (x.field.is_rational()) {
        std::vector<RepMap> rad = radical_of_end(endos);
        if (rad.size() + 1 != endos.size())
            throw std::logic_error("decompose: no splitting found but End/rad has dimension " +
                                   std::to_string(endos.size() - rad.size()));
    }
    auto id = identify(x);
    if (!id) throw std::domain_error("decompose: indecomposable summand matches no catalog module (dim " +
                                     x.dim.to_string() + ")");
    out.push_back(*id);
}

}  // namespace

std::vector<CatalogId> decompose(const Rep& x) {
    if (!validate(x)) throw std::invalid_argument("decompose: input violates the relations");
    std::vector<CatalogId> out;
    decompose_into(x, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RepMap> radical_of_end(const std::vector<RepMap>& endos) {
    if (endos.empty()) return {};
    const Rep& x = endos[0].source;
    if (!x.field.is_rational()) throw std::invalid_argument("radical_of_end: needs characteristic zero");
    size_t m = endos.size();
    // Coordinates of arbitrary endomorphisms in the given basis.
    Mat basis_cols(static_cast<int>(endos[0].flatten().size()), static_cast<int>(m), x.field);
    for (size_t j = 0; j < m; ++j) {
        auto flat = endos[j].flatten();
        for (size_t i = 0; i < flat.size(); ++i) basis_cols.set(static_cast<int>(i), static_cast<int>(j), flat[i]);
    }
    auto coords = [&](const RepMap& e) {
        auto sol = basis_cols.solve(Mat::column(e.flatten(), x.field));
        if (!sol) throw std::logic_error("radical_of_end: product escapes the span");
        return *sol;
    };
    // Left-multiplication operators L_i in basis coordinates.
    std::vector<Mat> left(m, Mat(static_cast<int>(m), static_cast<int>(m), x.field));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            Mat c = coords(endos[i].compose_after(endos[j]));
            for (size_t k = 0; k < m; ++k) left[i].set(static_cast<int>(k), static_cast<int>(j), c.at(static_cast<int>(k), 0));
        }
    // Dickson: in characteristic zero the radical is the kernel of the trace
    // form (a, b) -> tr(L_a L_b).
    Mat gram(static_cast<int>(m), static_cast<int>(m), x.field);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            Mat prod = left[i] * left[j];
            Scalar tr = Scalar::zero(x.field);
            for (size_t k = 0; k < m; ++k) tr = tr + prod.at(static_cast<int>(k), static_cast<int>(k));
            gram.set(static_cast<int>(i), static_cast<int>(j), tr);
        }
    Mat null_basis = gram.kernel();
    std::vector<RepMap> rad;
    for (int c = 0; c < null_basis.cols(); ++c) {
        RepMap e = zero_map(x, endos[0].target);
        for (size_t i = 0; i < m; ++i) e = e + endos[i].scaled(null_basis.at(static_cast<int>(i), c));
        rad.push_back(e);
    }
    return rad;
}

}  // namespace unicluster
