#include "unicluster/character.hpp"

#include <doctest.h>

using namespace unicluster;

namespace {

CatalogId id_of(const char* name) { return *catalog_id_from_string(name); }
MultiPoly P(const std::string& s) { return MultiPoly::parse(s); }
Word w213213() { return *Word::parse("213213"); }
Word w121321() { return *Word::parse("121321"); }

std::vector<int> type_of(const std::string& digits) {
    std::vector<int> out;
    for (char c : digits) out.push_back(c - '0');
    return out;
}

// Independent oracle for small modules (vertex dimensions <= 2): enumerate
// all submodules by brute force and count complete chains through the
// inclusion lattice.
struct SubmoduleLattice {
    std::vector<std::array<Mat, 3>> nodes;

    static std::vector<Mat> subspaces(int dim, long p, Field f) {
        std::vector<Mat> out;
        out.push_back(Mat(dim, 0, f));
        if (dim == 0) return out;
        if (dim == 1) {
            out.push_back(Mat::identity(1, f));
            return out;
        }
        // dim == 2: q+1 lines plus the full space.
        for (long c = 0; c < p; ++c) {
            Mat line(2, 1, f);
            line.set(0, 0, Scalar::mod_p(p, Int(1)));
            line.set(1, 0, Scalar::mod_p(p, Int(c)));
            out.push_back(line);
        }
        Mat last(2, 1, f);
        last.set(1, 0, Scalar::mod_p(p, Int(1)));
        out.push_back(last);
        out.push_back(Mat::identity(2, f));
        return out;
    }

    explicit SubmoduleLattice(const Rep& x) {
        long p = x.field.p;
        auto s1 = subspaces(x.dim.at(1), p, x.field);
        auto s2 = subspaces(x.dim.at(2), p, x.field);
        auto s3 = subspaces(x.dim.at(3), p, x.field);
        for (const Mat& u1 : s1)
            for (const Mat& u2 : s2)
                for (const Mat& u3 : s3) {
                    std::array<Mat, 3> u{u1, u2, u3};
                    bool closed = true;
                    for (Arrow a : kArrows) {
                        const Mat& src = u[arrow_source(a) - 1];
                        const Mat& dst = u[arrow_target(a) - 1];
                        if (!columns_contained_in(x.arrow(a) * src, dst)) closed = false;
                    }
                    if (closed) nodes.push_back(u);
                }
    }

    static bool contains(const std::array<Mat, 3>& small, const std::array<Mat, 3>& big) {
        for (int v = 0; v < 3; ++v)
            if (!columns_contained_in(small[v], big[v])) return false;
        return true;
    }

    Int complete_chain_count(const Rep& x) const {
        int total = x.dim.total();
        std::vector<Int> ways(nodes.size(), Int(0));
        auto dim_of = [](const std::array<Mat, 3>& u) { return u[0].cols() + u[1].cols() + u[2].cols(); };
        for (size_t i = 0; i < nodes.size(); ++i)
            if (dim_of(nodes[i]) == 0) ways[i] = 1;
        for (int d = 1; d <= total; ++d)
            for (size_t i = 0; i < nodes.size(); ++i) {
                if (dim_of(nodes[i]) != d) continue;
                for (size_t j = 0; j < nodes.size(); ++j)
                    if (dim_of(nodes[j]) == d - 1 && contains(nodes[j], nodes[i])) ways[i] += ways[j];
            }
        Int result = 0;
        for (size_t i = 0; i < nodes.size(); ++i)
            if (dim_of(nodes[i]) == total) result += ways[i];
        return result;
    }
};

// All vertex sequences whose multiset matches the dimension vector.
void all_types(const DimVec& d, std::vector<int>& prefix, int r1, int r2, int r3, std::vector<std::vector<int>>& out) {
    if (r1 == 0 && r2 == 0 && r3 == 0) {
        out.push_back(prefix);
        return;
    }
    if (r1 > 0) {
        prefix.push_back(1);
        all_types(d, prefix, r1 - 1, r2, r3, out);
        prefix.pop_back();
    }
    if (r2 > 0) {
        prefix.push_back(2);
        all_types(d, prefix, r1, r2 - 1, r3, out);
        prefix.pop_back();
    }
    if (r3 > 0) {
        prefix.push_back(3);
        all_types(d, prefix, r1, r2, r3 - 1, out);
        prefix.pop_back();
    }
}

}  // namespace

TEST_CASE("composition series counting") {
    Rep s1 = reduce_mod(catalog_rep(id_of("S1")), 2);
    CHECK(count_comp_series(s1, type_of("1")) == 1);
    CHECK(count_comp_series(s1, type_of("2")) == 0);

    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        Rep p2 = reduce_mod(catalog_rep(id_of("P2")), p);
        CHECK(count_comp_series(p2, type_of("2132")) == 1);
        CHECK(count_comp_series(p2, type_of("2312")) == 1);
        CHECK(count_comp_series(p2, type_of("1232")) == 0);  // socle has no S1
        CHECK(count_comp_series(p2, type_of("21")) == 0);    // dimension mismatch
    }

    // Two independent lines at vertex 1: q + 1 composition series.
    Rep s1s1 = reduce_mod(direct_sum({catalog_rep(id_of("S1")), catalog_rep(id_of("S1"))}), 5);
    CHECK(count_comp_series(s1s1, type_of("11")) == 6);
}

TEST_CASE("type sum equals the brute-force flag count") {
    for (long p : {2L, 3L}) {
        for (const char* name : {"P2", "TOP2", "P1"}) {
            Rep x = reduce_mod(catalog_rep(id_of(name)), p);
            std::vector<std::vector<int>> types;
            std::vector<int> prefix;
            all_types(x.dim, prefix, x.dim.at(1), x.dim.at(2), x.dim.at(3), types);
            Int by_types = 0;
            for (const auto& t : types) by_types += count_comp_series(x, t);
            SubmoduleLattice lattice(x);
            CHECK(by_types == lattice.complete_chain_count(x));
        }
    }
}

TEST_CASE("euler characteristics") {
    CHECK(euler_char(catalog_rep(id_of("S1")), type_of("1")) == 1);
    CHECK(euler_char(catalog_rep(id_of("P2")), type_of("2312")) == 1);
    CHECK(euler_char(catalog_rep(id_of("P2")), type_of("2132")) == 1);
    CHECK(euler_char(catalog_rep(id_of("S2")), type_of("1")) == 0);

    // Independence of the prime subset.
    Rep p2 = catalog_rep(id_of("P2"));
    for (const auto& t : {type_of("2132"), type_of("2312")}) {
        Int a = euler_char_with_primes(p2, t, {2, 3, 5, 7, 11, 13}, 4);
        Int b = euler_char_with_primes(p2, t, {17, 19, 23, 29, 31, 37}, 4);
        CHECK(a == b);
    }
}

TEST_CASE("cluster characters match the worked values") {
    CHECK(cluster_char(catalog_rep(id_of("S1")), w213213()).poly == P("t2 + t5"));
    CHECK(cluster_char(catalog_rep(id_of("P2")), w213213()).poly == P("t1*t2*t3*t4"));
    CHECK(cluster_char(Rep::zero_rep(Field::rationals()), w213213()).poly == MultiPoly(1));
    // A square with a genuine factorial division.
    Rep s1s1 = direct_sum({catalog_rep(id_of("S1")), catalog_rep(id_of("S1"))});
    CHECK(cluster_char(s1s1, w213213()).poly == P("t2^2 + 2*t2*t5 + t5^2"));
    // Nonnegative integer coefficients across the catalog.
    for (CatalogId id : all_catalog_ids())
        for (const auto& [e, c] : catalog_char(id, w213213()).poly.terms()) CHECK(c > 0);
}

TEST_CASE("characters are isomorphism invariants") {
    // P2 with the -1 carried by beta instead of alpha: the opposite sign
    // convention for the same module.
    const Rep& p2 = catalog_rep(id_of("P2"));
    Rep resigned = Rep::make(p2.field, p2.dim, -p2.a_alpha, p2.a_alphastar, p2.a_betastar, -p2.a_beta);
    REQUIRE(validate(resigned));
    REQUIRE(is_iso(resigned, p2));
    CHECK(cluster_char(resigned, w213213()).poly == cluster_char(p2, w213213()).poly);
}

TEST_CASE("minor matching") {
    CHECK(match_minor(catalog_rep(id_of("U21")), w213213()) == MinorSpec::parse("D[1][3]"));
    CHECK(match_minor(catalog_rep(id_of("P1")), w213213()) == MinorSpec::parse("D[123][234]"));
    CHECK(match_minor(catalog_rep(id_of("TOP2")), w213213()) == MinorSpec::parse("D[13][34]"));
    // Word independence for the whole catalog.
    for (CatalogId id : all_catalog_ids())
        CHECK(match_minor(catalog_rep(id), w121321()) == match_minor(catalog_rep(id), w213213()));
    // A decomposable module matches no single minor.
    Rep sum = direct_sum({catalog_rep(id_of("S1")), catalog_rep(id_of("P2"))});
    CHECK_THROWS(match_minor(sum, w213213()));
}

TEST_CASE("the character-minor table holds for every reduced word") {
    for (int code = 0; code < 729; ++code) {
        int c = code;
        std::string digits;
        for (int k = 0; k < 6; ++k) {
            digits += static_cast<char>('1' + c % 3);
            c /= 3;
        }
        auto w = Word::parse(digits);
        if (!w) continue;
        for (CatalogId id : all_catalog_ids()) CHECK(match_minor(catalog_rep(id), *w) == catalog_minor(id));
    }
}

TEST_CASE("multiplicativity") {
    CHECK(verify_multiplicativity(catalog_rep(id_of("S1")), catalog_rep(id_of("P2")), w213213()));
    CHECK(verify_multiplicativity(Rep::zero_rep(Field::rationals()), catalog_rep(id_of("TOP2")), w213213()));
    CHECK(verify_multiplicativity(catalog_rep(id_of("S1")), catalog_rep(id_of("S1")), w213213()));
}

TEST_CASE("exchange identities through characters") {
    ExchangeGraph g = exchange_graph(RigidObject::initial());
    Word w = w213213();
    // The printed identity: phi_S1 phi_U32 = phi_SOC2 + phi_P3.
    CHECK(catalog_char(id_of("S1"), w).poly * catalog_char(id_of("U32"), w).poly ==
          catalog_char(id_of("SOC2"), w).poly + catalog_char(id_of("P3"), w).poly);
    for (const auto& e : g.edges) {
        CHECK(verify_exchange(e, w));
        CHECK(edge_minor_identity(e));
    }
}
