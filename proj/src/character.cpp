#include "unicluster/character.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace unicluster {

namespace {

std::vector<Arrow> arrows_out_of(int vertex) {
    std::vector<Arrow> out;
    for (Arrow a : kArrows)
        if (arrow_source(a) == vertex) out.push_back(a);
    return out;
}

// Reduce a column against a reduced column-echelon basis; the result has
// zeros in all pivot rows.
Mat reduce_against(const Mat& basis, Mat w) {
    for (int c = 0; c < basis.cols(); ++c) {
        int pivot = -1;
        for (int r = 0; r < basis.rows(); ++r)
            if (!basis.at(r, c).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        Scalar coef = w.at(pivot, 0);
        if (coef.is_zero()) continue;
        for (int r = 0; r < basis.rows(); ++r) w.set(r, 0, w.at(r, 0) - coef * basis.at(r, c));
    }
    return w;
}

Int count_rec(const Rep& x, const std::vector<int>& type, size_t step, std::array<Mat, 3>& span) {
    if (step == type.size()) return 1;
    int v = type[step];
    long p = x.field.p;
    // Candidate vectors w at vertex v with every arrow image inside the
    // current submodule.
    Mat conditions(0, x.dim.at(v), x.field);
    for (Arrow g : arrows_out_of(v)) {
        Mat lk = left_kernel(span[arrow_target(g) - 1]);
        conditions = conditions.vstack(lk * x.arrow(g));
    }
    Mat w_space = conditions.kernel();
    // Complement basis of the candidate space modulo the current span at v.
    std::vector<Mat> complement;
    Mat working = span[v - 1];
    for (int c = 0; c < w_space.cols(); ++c) {
        Mat residual = reduce_against(working, w_space.sub_columns(c, 1));
        if (residual.is_zero()) continue;
        working = working.hstack(residual).column_space();
        complement.push_back(residual);
    }
    size_t m = complement.size();
    Int total = 0;
    // One representative per line of W / U_v: leading coefficient 1 at
    // position j, free coefficients after.
    for (size_t j = 0; j < m; ++j) {
        size_t free_count = m - 1 - j;
        std::vector<long> c(free_count, 0);
        for (;;) {
            Mat rep = complement[j];
            for (size_t i = 0; i < free_count; ++i)
                if (c[i] != 0)
                    rep = rep + complement[j + 1 + i].scaled(Scalar::mod_p(p, Int(c[i])));
            std::array<Mat, 3> next = span;
            next[v - 1] = next[v - 1].hstack(rep).column_space();
            total += count_rec(x, type, step + 1, next);
            // Advance the coefficient tuple in base p.
            size_t i = 0;
            while (i < free_count && c[i] == p - 1) c[i++] = 0;
            if (i == free_count) break;
            ++c[i];
        }
    }
    return total;
}

}  // namespace

Int count_comp_series(const Rep& x, const std::vector<int>& type) {
    if (x.field.is_rational()) throw std::invalid_argument("count_comp_series: rep must be over a prime field");
    if (!validate(x)) throw std::invalid_argument("count_comp_series: rep violates the relations");
    int mult[3] = {0, 0, 0};
    for (int v : type) {
        if (v < 1 || v > 3) throw std::invalid_argument("count_comp_series: bad vertex in type");
        ++mult[v - 1];
    }
    if (mult[0] != x.dim.at(1) || mult[1] != x.dim.at(2) || mult[2] != x.dim.at(3)) return 0;
    std::array<Mat, 3> span = {Mat(x.dim.at(1), 0, x.field), Mat(x.dim.at(2), 0, x.field),
                               Mat(x.dim.at(3), 0, x.field)};
    return count_rec(x, type, 0, span);
}

std::vector<long> default_primes(int n) {
    std::vector<long> out;
    for (long c = 2; static_cast<int>(out.size()) < n; ++c)
        if (is_prime(c)) out.push_back(c);
    return out;
}

Int euler_char_with_primes(const Rep& x, const std::vector<int>& type, const std::vector<long>& primes,
                           int degree_bound) {
    if (!x.field.is_rational()) throw std::invalid_argument("euler_char: rep must be rational");
    std::vector<std::pair<long, Int>> points;
    for (long p : primes) points.emplace_back(p, count_comp_series(reduce_mod(x, p), type));
    QInterp fit = interpolate_q(points, degree_bound);
    if (!fit.integral || !fit.consistent) {
        std::string word;
        for (int v : type) word += static_cast<char>('0' + v);
        throw std::domain_error("euler_char: polynomial point-count certificate failed for type " + word +
                                (fit.integral ? " (surplus primes off the curve)" : " (non-integer coefficients)"));
    }
    Rational chi = fit.at(Rational(1));
    if (denominator(chi) != 1) throw std::domain_error("euler_char: non-integer value at q = 1");
    return numerator(chi);
}

Int euler_char(const Rep& x, const std::vector<int>& type) {
    int bound = x.dim.total();
    int points = std::max(6, bound + 3);  // always at least {2,3,5,7,11,13}, two surplus
    return euler_char_with_primes(x, type, default_primes(points), bound);
}

namespace {

// Exponent vectors compatible with the dimension vector: for each vertex the
// exponents at its word positions sum to the vertex dimension.
void enumerate_exponents(const Word& w, const DimVec& dim, std::vector<std::array<int, 6>>& out) {
    std::array<std::vector<int>, 3> positions;
    for (int k = 0; k < 6; ++k) positions[w.a[k] - 1].push_back(k);
    std::array<int, 6> expo{};
    std::function<void(int)> rec = [&](int vertex) {
        if (vertex == 3) {
            out.push_back(expo);
            return;
        }
        const auto& pos = positions[vertex];
        int need = dim.at(vertex + 1);
        std::function<void(size_t, int)> comp = [&](size_t idx, int remaining) {
            if (idx + 1 == pos.size()) {
                expo[pos[idx]] = remaining;
                rec(vertex + 1);
                return;
            }
            for (int take = 0; take <= remaining; ++take) {
                expo[pos[idx]] = take;
                comp(idx + 1, remaining - take);
            }
        };
        if (pos.empty()) {
            if (need == 0)
                rec(vertex + 1);
            return;
        }
        comp(0, need);
    };
    rec(0);
}

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

CharPoly cluster_char(const Rep& x, const Word& w) {
    if (!x.field.is_rational()) throw std::invalid_argument("cluster_char: rep must be rational");
    if (!validate(x)) throw std::invalid_argument("cluster_char: rep violates the relations");
    static const Var ts[6] = {Var::t1, Var::t2, Var::t3, Var::t4, Var::t5, Var::t6};
    std::vector<std::array<int, 6>> exponents;
    enumerate_exponents(w, x.dim, exponents);
    MultiPoly phi;
    for (const auto& expo : exponents) {
        std::vector<int> type;
        for (int k = 0; k < 6; ++k)
            for (int r = 0; r < expo[k]; ++r) type.push_back(w.a[k]);
        Int chi = euler_char(x, type);
        if (chi == 0) continue;
        Int denom = 1;
        for (int k = 0; k < 6; ++k) denom *= factorial(expo[k]);
        if (chi % denom != 0)
            throw std::domain_error("cluster_char: non-integer coefficient (chi = " + chi.str() + ", denominator " +
                                    denom.str() + ")");
        Int coeff = chi / denom;
        if (coeff < 0) throw std::domain_error("cluster_char: negative coefficient");
        Expo e{};
        for (int k = 0; k < 6; ++k) e[static_cast<int>(ts[k])] = static_cast<std::uint8_t>(expo[k]);
        phi = phi + MultiPoly::monomial(e, coeff);
    }
    return CharPoly{phi, w};
}

const CharPoly& catalog_char(CatalogId id, const Word& w) {
    static std::map<std::pair<CatalogId, std::string>, CharPoly> cache;
    auto key = std::make_pair(id, w.to_string());
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, cluster_char(catalog_rep(id), w)).first;
    return it->second;
}

const MultiPoly& minor_pullback(const MinorSpec& spec, const Word& w) {
    static std::map<std::pair<MinorSpec, std::string>, MultiPoly> cache;
    static std::map<std::string, SymUniMat> matrices;
    auto key = std::make_pair(spec, w.to_string());
    auto it = cache.find(key);
    if (it == cache.end()) {
        auto mit = matrices.find(w.to_string());
        if (mit == matrices.end()) mit = matrices.emplace(w.to_string(), word_matrix(w)).first;
        it = cache.emplace(key, minor(mit->second, spec)).first;
    }
    return it->second;
}

MinorSpec match_minor(const Rep& x, const Word& w) {
    MultiPoly phi = cluster_char(x, w).poly;
    std::vector<MinorSpec> matches;
    for (const MinorSpec& spec : nontrivial_minors())
        if (minor_pullback(spec, w) == phi) matches.push_back(spec);
    if (matches.size() != 1)
        throw std::domain_error("match_minor: expected exactly one matching minor, found " +
                                std::to_string(matches.size()));
    return matches[0];
}

bool verify_multiplicativity(const Rep& x, const Rep& y, const Word& w) {
    MultiPoly lhs = cluster_char(direct_sum({x, y}), w).poly;
    MultiPoly rhs = cluster_char(x, w).poly * cluster_char(y, w).poly;
    return lhs == rhs;
}

namespace {

MultiPoly product_char(const std::vector<CatalogId>& ids, const Word& w) {
    MultiPoly p(1);
    for (CatalogId id : ids) p = p * catalog_char(id, w).poly;
    return p;
}

}  // namespace

bool verify_exchange(const ExchangeGraph::Edge& e, const Word& w) {
    MultiPoly lhs = catalog_char(e.removed, w).poly * catalog_char(e.added, w).poly;
    MultiPoly rhs = product_char(e.middle_out, w) + product_char(e.middle_in, w);
    return lhs == rhs;
}

bool edge_minor_identity(const ExchangeGraph::Edge& e) {
    auto minors = [](const std::vector<CatalogId>& ids) {
        std::vector<MinorSpec> out;
        for (CatalogId id : ids) out.push_back(catalog_minor(id));
        return out;
    };
    return check_identity({catalog_minor(e.removed), catalog_minor(e.added)},
                          {minors(e.middle_out), minors(e.middle_in)});
}

}  // namespace unicluster
