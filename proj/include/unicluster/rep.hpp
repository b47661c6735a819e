#pragma once

#include "unicluster/matrix.hpp"

#include <array>
#include <vector>

namespace unicluster {

// The four arrows of the doubled A3 quiver. alpha: 1->2, alphastar: 2->1,
// betastar: 2->3, beta: 3->2. Paths are written left to right, so a path
// gamma1 gamma2 acts by A_{gamma2} * A_{gamma1}.
enum class Arrow : int { alpha, alphastar, betastar, beta };
int arrow_source(Arrow a);
int arrow_target(Arrow a);
inline constexpr std::array<Arrow, 4> kArrows{Arrow::alpha, Arrow::alphastar, Arrow::betastar, Arrow::beta};

struct DimVec {
    int d[3] = {0, 0, 0};
    int at(int vertex) const { return d[vertex - 1]; }  // 1-based
    int total() const { return d[0] + d[1] + d[2]; }
    bool operator==(const DimVec&) const = default;
    std::string to_string() const;
};

// A module over the preprojective algebra: graded vector spaces with arrow
// matrices. Vectors are columns; an arrow acts by left multiplication.
struct Rep {
    Field field;
    DimVec dim;
    Mat a_alpha;      // d2 x d1
    Mat a_alphastar;  // d1 x d2
    Mat a_betastar;   // d3 x d2
    Mat a_beta;       // d2 x d3

    static Rep zero_rep(Field f);
    static Rep make(Field f, DimVec d, Mat alpha, Mat alphastar, Mat betastar, Mat beta);

    const Mat& arrow(Arrow a) const;
    void check_shapes() const;
};

// True iff the three preprojective relations hold exactly:
//   A_{a*} A_a = 0,  A_a A_{a*} + A_b A_{b*} = 0,  A_{b*} A_b = 0.
bool validate(const Rep& x);

// Reduce a rational representation mod p (denominators must be prime to p).
Rep reduce_mod(const Rep& x, long p);

struct RepMap {
    Rep source, target;
    Mat f1, f2, f3;  // target.d_v x source.d_v

    const Mat& at_vertex(int v) const;
    bool is_injective() const;
    bool is_surjective() const;
    bool is_zero() const;
    RepMap compose_after(const RepMap& first) const;  // this o first
    RepMap operator+(const RepMap& o) const;
    RepMap scaled(const Scalar& c) const;
    std::vector<Scalar> flatten() const;
};

RepMap identity_map(const Rep& x);
RepMap zero_map(const Rep& source, const Rep& target);
// Commuting squares f_{t(g)} A^X_g = A^Y_g f_{s(g)} for all four arrows.
bool is_valid_map(const RepMap& f);

// Basis of Hom(x, y), deterministic order.
std::vector<RepMap> hom_basis(const Rep& x, const Rep& y);
int hom_dim(const Rep& x, const Rep& y);

// dim Ext^1(x, y) computed from the relation-differential complex
// C0 -> C1 -> C2 (vertex homs -> arrow homs -> relation homs).
int ext1_dim(const Rep& x, const Rep& y);

Rep direct_sum(const std::vector<Rep>& xs);

// Subrepresentation spanned by the given per-vertex column spans (which must
// be arrow-stable); returns the rep and the inclusion.
std::pair<Rep, RepMap> sub_rep(const Rep& x, const std::array<Mat, 3>& spans);
// Quotient by an arrow-stable family of per-vertex column spans; returns the
// rep and the projection.
std::pair<Rep, RepMap> quotient_rep(const Rep& x, const std::array<Mat, 3>& spans);

std::pair<Rep, RepMap> kernel_of(const RepMap& f);    // (K, inclusion K -> source)
std::pair<Rep, RepMap> cokernel_of(const RepMap& f);  // (C, projection target -> C)
std::pair<Rep, RepMap> image_of(const RepMap& f);     // (I, inclusion I -> target)

// Short exact sequence 0 -> left.source -> E -> right.target -> 0.
struct Ses {
    RepMap left;   // X -> E, injective
    RepMap right;  // E -> Y, surjective, ker = im(left)
};
bool is_exact(const Ses& s);

bool is_iso(const Rep& x, const Rep& y);

}  // namespace unicluster
