#pragma once

#include "unicluster/poly.hpp"

#include <array>
#include <vector>

namespace unicluster {

// Minor symbol D[rows][cols]: strictly increasing nonempty proper subsets of
// {1,2,3,4} of equal size.
struct MinorSpec {
    std::vector<int> rows, cols;

    MinorSpec(std::vector<int> r, std::vector<int> c);
    static MinorSpec parse(const std::string& text);  // "D[12][23]"
    std::string to_string() const;

    bool operator==(const MinorSpec&) const = default;
    bool operator<(const MinorSpec& o) const;
};

template <typename T> T ring_zero();
template <typename T> T ring_one();
template <> inline MultiPoly ring_zero<MultiPoly>() { return MultiPoly(); }
template <> inline MultiPoly ring_one<MultiPoly>() { return MultiPoly(1); }
template <> inline Rational ring_zero<Rational>() { return Rational(0); }
template <> inline Rational ring_one<Rational>() { return Rational(1); }

// 4x4 upper unitriangular matrix: ones on the diagonal, zeros below, entries
// of type T above. Only the six strictly-upper entries are stored.
template <typename T>
struct UniMat {
    std::array<T, 6> upper{};

    static int index(int i, int j) {
        static constexpr int idx[4][4] = {
            {-1, 0, 1, 2}, {-1, -1, 3, 4}, {-1, -1, -1, 5}, {-1, -1, -1, -1}};
        if (i < 1 || j < 1 || i > 4 || j > 4 || i >= j) throw std::out_of_range("UniMat: not a strict upper entry");
        return idx[i - 1][j - 1];
    }

    T entry(int i, int j) const {  // 1-based
        if (i == j) return ring_one<T>();
        if (i > j) return ring_zero<T>();
        return upper[index(i, j)];
    }

    void set(int i, int j, const T& v) { upper[index(i, j)] = v; }

    UniMat<T> operator*(const UniMat<T>& o) const {
        UniMat<T> r;
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j) {
                T acc = ring_zero<T>();
                for (int k = i; k <= j; ++k) acc = acc + entry(i, k) * o.entry(k, j);
                r.set(i, j, acc);
            }
        return r;
    }

    bool operator==(const UniMat<T>&) const = default;
};

using SymUniMat = UniMat<MultiPoly>;
using RatUniMat = UniMat<Rational>;

// The generic element of N, entries a12 ... a34.
SymUniMat generic_matrix();

// x_v(t): identity plus t in position (v, v+1).
SymUniMat one_param(int vertex, const MultiPoly& t);

// Determinant of the selected submatrix, by cofactor expansion.
template <typename T>
T minor(const UniMat<T>& m, const MinorSpec& spec);

// Word in {1,2,3}: candidate reduced expression for the longest element.
struct Word {
    std::array<int, 6> a;
    static std::optional<Word> parse(const std::string& digits);
    std::string to_string() const;
    bool operator==(const Word&) const = default;
};

// True iff the letters compose to the order-reversing permutation of S4.
bool validate_word(const std::vector<int>& letters);

// x_{a1}(t1) ... x_{a6}(t6) with symbolic t's; rejects invalid words.
SymUniMat word_matrix(const Word& w);

// Substitute rational values for t1..t6.
RatUniMat evaluate_at(const SymUniMat& m, const std::array<Rational, 6>& t);

// The 12 non-trivial minors, in the fixed catalog order.
const std::vector<MinorSpec>& nontrivial_minors();
// The six minors of the Fomin-Zelevinsky positivity criterion.
const std::vector<MinorSpec>& criterion_six_minors();

// Symbolic equality, on the generic matrix, of a product of minors with a sum
// of products of minors.
bool check_identity(const std::vector<MinorSpec>& lhs_product,
                    const std::vector<std::vector<MinorSpec>>& rhs_products);

bool is_totally_positive(const RatUniMat& m);
bool criterion_six(const RatUniMat& m);

// Cached minor of the generic matrix.
const MultiPoly& generic_minor(const MinorSpec& spec);

}  // namespace unicluster
