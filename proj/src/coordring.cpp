#include "unicluster/coordring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace unicluster {

MinorSpec::MinorSpec(std::vector<int> r, std::vector<int> c) : rows(std::move(r)), cols(std::move(c)) {
    auto ok = [](const std::vector<int>& v) {
        if (v.empty() || v.size() >= 4) return false;
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i] < 1 || v[i] > 4) return false;
            if (i && v[i] <= v[i - 1]) return false;
        }
        return true;
    };
    if (!ok(rows) || !ok(cols) || rows.size() != cols.size())
        throw std::invalid_argument("MinorSpec: need equal-size strictly increasing proper subsets of {1..4}");
}

MinorSpec MinorSpec::parse(const std::string& text) {
    // Format: D[123][234]
    auto fail = [&] { throw std::invalid_argument("MinorSpec::parse: expected D[rows][cols], got '" + text + "'"); };
    size_t p = 0;
    if (p >= text.size() || text[p] != 'D') fail();
    ++p;
    auto read_block = [&]() {
        std::vector<int> out;
        if (p >= text.size() || text[p] != '[') fail();
        ++p;
        while (p < text.size() && text[p] != ']') {
            if (text[p] < '1' || text[p] > '4') fail();
            out.push_back(text[p] - '0');
            ++p;
        }
        if (p >= text.size()) fail();
        ++p;  // ']'
        return out;
    };
    std::vector<int> r = read_block();
    std::vector<int> c = read_block();
    if (p != text.size()) fail();
    return MinorSpec(std::move(r), std::move(c));
}

std::string MinorSpec::to_string() const {
    std::ostringstream os;
    os << "D[";
    for (int r : rows) os << r;
    os << "][";
    for (int c : cols) os << c;
    os << "]";
    return os.str();
}

bool MinorSpec::operator<(const MinorSpec& o) const {
    if (rows != o.rows) return rows < o.rows;
    return cols < o.cols;
}

SymUniMat generic_matrix() {
    SymUniMat m;
    m.set(1, 2, MultiPoly::variable(Var::a12));
    m.set(1, 3, MultiPoly::variable(Var::a13));
    m.set(1, 4, MultiPoly::variable(Var::a14));
    m.set(2, 3, MultiPoly::variable(Var::a23));
    m.set(2, 4, MultiPoly::variable(Var::a24));
    m.set(3, 4, MultiPoly::variable(Var::a34));
    return m;
}

SymUniMat one_param(int vertex, const MultiPoly& t) {
    if (vertex < 1 || vertex > 3) throw std::invalid_argument("one_param: vertex must be 1, 2 or 3");
    SymUniMat m;
    m.set(vertex, vertex + 1, t);
    return m;
}

template <typename T>
static T det(const std::vector<std::vector<T>>& a) {
    size_t n = a.size();
    if (n == 1) return a[0][0];
    T acc = ring_zero<T>();
    for (size_t k = 0; k < n; ++k) {
        std::vector<std::vector<T>> sub;
        for (size_t i = 1; i < n; ++i) {
            std::vector<T> row;
            for (size_t j = 0; j < n; ++j)
                if (j != k) row.push_back(a[i][j]);
            sub.push_back(std::move(row));
        }
        T term = a[0][k] * det(sub);
        if (k % 2 == 0)
            acc = acc + term;
        else
            acc = acc - term;
    }
    return acc;
}

template <typename T>
T minor(const UniMat<T>& m, const MinorSpec& spec) {
    std::vector<std::vector<T>> sub;
    for (int r : spec.rows) {
        std::vector<T> row;
        for (int c : spec.cols) row.push_back(m.entry(r, c));
        sub.push_back(std::move(row));
    }
    return det(sub);
}

template MultiPoly minor<MultiPoly>(const UniMat<MultiPoly>&, const MinorSpec&);
template Rational minor<Rational>(const UniMat<Rational>&, const MinorSpec&);

std::optional<Word> Word::parse(const std::string& digits) {
    if (digits.size() != 6) return std::nullopt;
    Word w{};
    for (size_t i = 0; i < 6; ++i) {
        if (digits[i] < '1' || digits[i] > '3') return std::nullopt;
        w.a[i] = digits[i] - '0';
    }
    if (!validate_word(std::vector<int>(w.a.begin(), w.a.end()))) return std::nullopt;
    return w;
}

std::string Word::to_string() const {
    std::string s;
    for (int v : a) s += static_cast<char>('0' + v);
    return s;
}

bool validate_word(const std::vector<int>& letters) {
    if (letters.size() != 6) return false;
    std::array<int, 4> perm{1, 2, 3, 4};
    for (int s : letters) {
        if (s < 1 || s > 3) return false;
        std::swap(perm[s - 1], perm[s]);
    }
    return perm == std::array<int, 4>{4, 3, 2, 1};
}

SymUniMat word_matrix(const Word& w) {
    if (!validate_word(std::vector<int>(w.a.begin(), w.a.end())))
        throw std::invalid_argument("word_matrix: " + w.to_string() + " does not represent the longest element");
    static const Var ts[6] = {Var::t1, Var::t2, Var::t3, Var::t4, Var::t5, Var::t6};
    SymUniMat m;  // identity
    for (int k = 0; k < 6; ++k) m = m * one_param(w.a[k], MultiPoly::variable(ts[k]));
    return m;
}

RatUniMat evaluate_at(const SymUniMat& m, const std::array<Rational, 6>& t) {
    std::map<Var, Rational> assign{
        {Var::t1, t[0]}, {Var::t2, t[1]}, {Var::t3, t[2]},
        {Var::t4, t[3]}, {Var::t5, t[4]}, {Var::t6, t[5]},
    };
    RatUniMat r;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) r.set(i, j, m.entry(i, j).evaluate(assign));
    return r;
}

const std::vector<MinorSpec>& nontrivial_minors() {
    static const std::vector<MinorSpec> list = {
        MinorSpec({1}, {2}),       MinorSpec({2}, {3}),       MinorSpec({3}, {4}),
        MinorSpec({1, 2}, {2, 3}), MinorSpec({1}, {3}),       MinorSpec({2, 3}, {3, 4}),
        MinorSpec({2}, {4}),       MinorSpec({1, 3}, {3, 4}), MinorSpec({1, 2}, {2, 4}),
        MinorSpec({1, 2, 3}, {2, 3, 4}), MinorSpec({1, 2}, {3, 4}), MinorSpec({1}, {4}),
    };
    return list;
}

const std::vector<MinorSpec>& criterion_six_minors() {
    static const std::vector<MinorSpec> list = {
        MinorSpec({1}, {4}),       MinorSpec({1, 2}, {3, 4}), MinorSpec({1, 2, 3}, {2, 3, 4}),
        MinorSpec({1, 2}, {2, 4}), MinorSpec({2}, {4}),       MinorSpec({3}, {4}),
    };
    return list;
}

const MultiPoly& generic_minor(const MinorSpec& spec) {
    static std::map<MinorSpec, MultiPoly> cache;
    auto it = cache.find(spec);
    if (it == cache.end()) it = cache.emplace(spec, minor(generic_matrix(), spec)).first;
    return it->second;
}

bool check_identity(const std::vector<MinorSpec>& lhs_product,
                    const std::vector<std::vector<MinorSpec>>& rhs_products) {
    MultiPoly lhs(1);
    for (const auto& s : lhs_product) lhs = lhs * generic_minor(s);
    MultiPoly rhs;
    for (const auto& product : rhs_products) {
        MultiPoly p(1);
        for (const auto& s : product) p = p * generic_minor(s);
        rhs = rhs + p;
    }
    return lhs == rhs;
}

static bool all_positive(const RatUniMat& m, const std::vector<MinorSpec>& specs) {
    for (const auto& s : specs)
        if (!(minor(m, s) > 0)) return false;
    return true;
}

bool is_totally_positive(const RatUniMat& m) { return all_positive(m, nontrivial_minors()); }

bool criterion_six(const RatUniMat& m) { return all_positive(m, criterion_six_minors()); }

}  // namespace unicluster
