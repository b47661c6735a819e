#include "unicluster/rep.hpp"

#include <algorithm>
#include <sstream>

namespace unicluster {

int arrow_source(Arrow a) {
    switch (a) {
        case Arrow::alpha: return 1;
        case Arrow::alphastar: return 2;
        case Arrow::betastar: return 2;
        case Arrow::beta: return 3;
    }
    throw std::logic_error("arrow_source");
}

int arrow_target(Arrow a) {
    switch (a) {
        case Arrow::alpha: return 2;
        case Arrow::alphastar: return 1;
        case Arrow::betastar: return 3;
        case Arrow::beta: return 2;
    }
    throw std::logic_error("arrow_target");
}

std::string DimVec::to_string() const {
    std::ostringstream os;
    os << "(" << d[0] << "," << d[1] << "," << d[2] << ")";
    return os.str();
}

Rep Rep::zero_rep(Field f) {
    return make(f, DimVec{}, Mat(0, 0, f), Mat(0, 0, f), Mat(0, 0, f), Mat(0, 0, f));
}

Rep Rep::make(Field f, DimVec d, Mat alpha, Mat alphastar, Mat betastar, Mat beta) {
    Rep r{f, d, std::move(alpha), std::move(alphastar), std::move(betastar), std::move(beta)};
    r.check_shapes();
    return r;
}

const Mat& Rep::arrow(Arrow a) const {
    switch (a) {
        case Arrow::alpha: return a_alpha;
        case Arrow::alphastar: return a_alphastar;
        case Arrow::betastar: return a_betastar;
        case Arrow::beta: return a_beta;
    }
    throw std::logic_error("Rep::arrow");
}

void Rep::check_shapes() const {
    for (Arrow a : kArrows) {
        const Mat& m = arrow(a);
        if (!(m.field() == field)) throw std::invalid_argument("Rep: arrow matrix field mismatch");
        if (m.rows() != dim.at(arrow_target(a)) || m.cols() != dim.at(arrow_source(a)))
            throw std::invalid_argument("Rep: arrow matrix shape mismatch");
    }
}

bool validate(const Rep& x) {
    x.check_shapes();
    if (!(x.a_alphastar * x.a_alpha).is_zero()) return false;
    if (!(x.a_alpha * x.a_alphastar + x.a_beta * x.a_betastar).is_zero()) return false;
    if (!(x.a_betastar * x.a_beta).is_zero()) return false;
    return true;
}

static Mat reduce_mat_mod(const Mat& m, long p) {
    Field f = Field::mod(p);
    Mat r(m.rows(), m.cols(), f);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            r.set(i, j, Scalar::mod_p(p, Int(rational_mod_p(m.at(i, j).rat(), p))));
    return r;
}

Rep reduce_mod(const Rep& x, long p) {
    if (!x.field.is_rational()) throw std::invalid_argument("reduce_mod: input must be rational");
    return Rep::make(Field::mod(p), x.dim, reduce_mat_mod(x.a_alpha, p), reduce_mat_mod(x.a_alphastar, p),
                     reduce_mat_mod(x.a_betastar, p), reduce_mat_mod(x.a_beta, p));
}

const Mat& RepMap::at_vertex(int v) const {
    switch (v) {
        case 1: return f1;
        case 2: return f2;
        case 3: return f3;
    }
    throw std::out_of_range("RepMap::at_vertex");
}

bool RepMap::is_injective() const {
    return f1.kernel().cols() == 0 && f2.kernel().cols() == 0 && f3.kernel().cols() == 0;
}

bool RepMap::is_surjective() const {
    return f1.rank() == target.dim.at(1) && f2.rank() == target.dim.at(2) && f3.rank() == target.dim.at(3);
}

bool RepMap::is_zero() const { return f1.is_zero() && f2.is_zero() && f3.is_zero(); }

RepMap RepMap::compose_after(const RepMap& first) const {
    if (!(first.target.dim == source.dim)) throw std::invalid_argument("RepMap::compose_after: shape mismatch");
    return RepMap{first.source, target, f1 * first.f1, f2 * first.f2, f3 * first.f3};
}

RepMap RepMap::operator+(const RepMap& o) const {
    return RepMap{source, target, f1 + o.f1, f2 + o.f2, f3 + o.f3};
}

RepMap RepMap::scaled(const Scalar& c) const {
    return RepMap{source, target, f1.scaled(c), f2.scaled(c), f3.scaled(c)};
}

std::vector<Scalar> RepMap::flatten() const {
    std::vector<Scalar> v = f1.flatten();
    auto v2 = f2.flatten();
    auto v3 = f3.flatten();
    v.insert(v.end(), v2.begin(), v2.end());
    v.insert(v.end(), v3.begin(), v3.end());
    return v;
}

RepMap identity_map(const Rep& x) {
    return RepMap{x, x, Mat::identity(x.dim.at(1), x.field), Mat::identity(x.dim.at(2), x.field),
                  Mat::identity(x.dim.at(3), x.field)};
}

RepMap zero_map(const Rep& source, const Rep& target) {
    return RepMap{source, target, Mat(target.dim.at(1), source.dim.at(1), source.field),
                  Mat(target.dim.at(2), source.dim.at(2), source.field),
                  Mat(target.dim.at(3), source.dim.at(3), source.field)};
}

bool is_valid_map(const RepMap& f) {
    for (Arrow a : kArrows) {
        const Mat& ft = f.at_vertex(arrow_target(a));
        const Mat& fs = f.at_vertex(arrow_source(a));
        if (!(ft * f.source.arrow(a) == f.target.arrow(a) * fs)) return false;
    }
    return true;
}

namespace {

// Coefficient matrix builder for linear systems whose unknowns are blocks of
// matrices. Equations and unknowns are flattened row-major.
struct LinearSystem {
    Mat m;
    LinearSystem(int eq_dim, int unk_dim, Field f) : m(eq_dim, unk_dim, f) {}

    // Adds sign * L * U * R to the equation block at eq_offset, where U is
    // the unknown block at unk_offset with shape (L.cols() x R.rows()).
    void add_term(int eq_offset, int unk_offset, const Mat& left, const Mat& right, int sign) {
        Scalar s = sign >= 0 ? Scalar::one(m.field()) : -Scalar::one(m.field());
        for (int i = 0; i < left.rows(); ++i)
            for (int k = 0; k < left.cols(); ++k) {
                if (left.at(i, k).is_zero()) continue;
                for (int l = 0; l < right.rows(); ++l)
                    for (int j = 0; j < right.cols(); ++j) {
                        if (right.at(l, j).is_zero()) continue;
                        int eq = eq_offset + i * right.cols() + j;
                        int unk = unk_offset + k * right.rows() + l;
                        m.set(eq, unk, m.at(eq, unk) + s * left.at(i, k) * right.at(l, j));
                    }
            }
    }
};

struct HomLayout {
    int vertex_offset[3];
    int total;
    HomLayout(const Rep& x, const Rep& y) {
        int off = 0;
        for (int v = 1; v <= 3; ++v) {
            vertex_offset[v - 1] = off;
            off += y.dim.at(v) * x.dim.at(v);
        }
        total = off;
    }
};

struct ArrowLayout {
    int arrow_offset[4];
    int total;
    ArrowLayout(const Rep& x, const Rep& y) {
        int off = 0;
        for (int i = 0; i < 4; ++i) {
            arrow_offset[i] = off;
            off += y.dim.at(arrow_target(kArrows[i])) * x.dim.at(arrow_source(kArrows[i]));
        }
        total = off;
    }
};

// d0: vertex homs -> arrow homs, f |-> (f_{t} A^X_g - A^Y_g f_{s})_g.
Mat build_d0(const Rep& x, const Rep& y) {
    HomLayout c0(x, y);
    ArrowLayout c1(x, y);
    LinearSystem sys(c1.total, c0.total, x.field);
    for (int i = 0; i < 4; ++i) {
        Arrow g = kArrows[i];
        int s = arrow_source(g), t = arrow_target(g);
        sys.add_term(c1.arrow_offset[i], c0.vertex_offset[t - 1], Mat::identity(y.dim.at(t), x.field), x.arrow(g), +1);
        sys.add_term(c1.arrow_offset[i], c0.vertex_offset[s - 1], y.arrow(g), Mat::identity(x.dim.at(s), x.field), -1);
    }
    return sys.m;
}

// d1: arrow homs -> relation homs, formally differentiating each relation.
Mat build_d1(const Rep& x, const Rep& y) {
    ArrowLayout c1(x, y);
    // Relation blocks live at vertices 1, 2, 3.
    int rel_offset[3];
    int off = 0;
    for (int v = 1; v <= 3; ++v) {
        rel_offset[v - 1] = off;
        off += y.dim.at(v) * x.dim.at(v);
    }
    LinearSystem sys(off, c1.total, x.field);
    auto idx = [](Arrow a) { return static_cast<int>(a); };
    auto id = [&](int v) { return Mat::identity(v, x.field); };
    // alpha alphastar (at vertex 1): A^Y_{a*} g_a + g_{a*} A^X_a
    sys.add_term(rel_offset[0], c1.arrow_offset[idx(Arrow::alpha)], y.a_alphastar, id(x.dim.at(1)), +1);
    sys.add_term(rel_offset[0], c1.arrow_offset[idx(Arrow::alphastar)], id(y.dim.at(1)), x.a_alpha, +1);
    // alphastar alpha + betastar beta (at vertex 2):
    //   A^Y_a g_{a*} + g_a A^X_{a*} + A^Y_b g_{b*} + g_b A^X_{b*}
    sys.add_term(rel_offset[1], c1.arrow_offset[idx(Arrow::alphastar)], y.a_alpha, id(x.dim.at(2)), +1);
    sys.add_term(rel_offset[1], c1.arrow_offset[idx(Arrow::alpha)], id(y.dim.at(2)), x.a_alphastar, +1);
    sys.add_term(rel_offset[1], c1.arrow_offset[idx(Arrow::betastar)], y.a_beta, id(x.dim.at(2)), +1);
    sys.add_term(rel_offset[1], c1.arrow_offset[idx(Arrow::beta)], id(y.dim.at(2)), x.a_betastar, +1);
    // beta betastar (at vertex 3): A^Y_{b*} g_b + g_{b*} A^X_b
    sys.add_term(rel_offset[2], c1.arrow_offset[idx(Arrow::beta)], y.a_betastar, id(x.dim.at(3)), +1);
    sys.add_term(rel_offset[2], c1.arrow_offset[idx(Arrow::betastar)], id(y.dim.at(3)), x.a_beta, +1);
    return sys.m;
}

}  // namespace

std::vector<RepMap> hom_basis(const Rep& x, const Rep& y) {
    if (!(x.field == y.field)) throw std::invalid_argument("hom_basis: mixed fields");
    HomLayout layout(x, y);
    Mat k = build_d0(x, y).kernel();
    std::vector<RepMap> basis;
    for (int c = 0; c < k.cols(); ++c) {
        std::vector<Scalar> flat;
        flat.reserve(layout.total);
        for (int r = 0; r < k.rows(); ++r) flat.push_back(k.at(r, c));
        auto take = [&](int offset, int rows, int cols) {
            std::vector<Scalar> part(flat.begin() + offset, flat.begin() + offset + rows * cols);
            return Mat::unflatten(part, rows, cols, x.field);
        };
        basis.push_back(RepMap{x, y, take(layout.vertex_offset[0], y.dim.at(1), x.dim.at(1)),
                               take(layout.vertex_offset[1], y.dim.at(2), x.dim.at(2)),
                               take(layout.vertex_offset[2], y.dim.at(3), x.dim.at(3))});
    }
    return basis;
}

int hom_dim(const Rep& x, const Rep& y) {
    if (!(x.field == y.field)) throw std::invalid_argument("hom_dim: mixed fields");
    return build_d0(x, y).kernel().cols();
}

int ext1_dim(const Rep& x, const Rep& y) {
    if (!(x.field == y.field)) throw std::invalid_argument("ext1_dim: mixed fields");
    Mat d0 = build_d0(x, y);
    Mat d1 = build_d1(x, y);
    int c1_dim = d0.rows();
    int ker_d1 = c1_dim - d1.rank();
    return ker_d1 - d0.rank();
}

Rep direct_sum(const std::vector<Rep>& xs) {
    if (xs.empty()) throw std::invalid_argument("direct_sum: empty input");
    Rep acc = xs[0];
    for (size_t i = 1; i < xs.size(); ++i) {
        const Rep& b = xs[i];
        if (!(acc.field == b.field)) throw std::invalid_argument("direct_sum: mixed fields");
        DimVec d{acc.dim.at(1) + b.dim.at(1), acc.dim.at(2) + b.dim.at(2), acc.dim.at(3) + b.dim.at(3)};
        acc = Rep::make(acc.field, d, acc.a_alpha.block_diag(b.a_alpha), acc.a_alphastar.block_diag(b.a_alphastar),
                        acc.a_betastar.block_diag(b.a_betastar), acc.a_beta.block_diag(b.a_beta));
    }
    return acc;
}

std::pair<Rep, RepMap> sub_rep(const Rep& x, const std::array<Mat, 3>& spans) {
    DimVec d{spans[0].cols(), spans[1].cols(), spans[2].cols()};
    auto restrict_arrow = [&](Arrow a) {
        const Mat& c_s = spans[arrow_source(a) - 1];
        const Mat& c_t = spans[arrow_target(a) - 1];
        auto sol = c_t.solve(x.arrow(a) * c_s);
        if (!sol) throw std::invalid_argument("sub_rep: spans are not arrow-stable");
        return *sol;
    };
    Rep k = Rep::make(x.field, d, restrict_arrow(Arrow::alpha), restrict_arrow(Arrow::alphastar),
                      restrict_arrow(Arrow::betastar), restrict_arrow(Arrow::beta));
    RepMap inclusion{k, x, spans[0], spans[1], spans[2]};
    if (!is_valid_map(inclusion)) throw std::logic_error("sub_rep: inclusion does not commute");
    return {k, inclusion};
}

std::pair<Rep, RepMap> quotient_rep(const Rep& x, const std::array<Mat, 3>& spans) {
    // For each vertex, build the projection onto the complement coordinates
    // of the reduced column-echelon span.
    std::array<Mat, 3> proj = {Mat(0, 0, x.field), Mat(0, 0, x.field), Mat(0, 0, x.field)};
    for (int v = 1; v <= 3; ++v) {
        Mat basis = spans[v - 1].column_space();
        int dv = x.dim.at(v);
        std::vector<int> pivots;
        for (int c = 0; c < basis.cols(); ++c) {
            int first = -1;
            for (int r = 0; r < dv; ++r)
                if (!basis.at(r, c).is_zero()) {
                    first = r;
                    break;
                }
            pivots.push_back(first);
        }
        std::vector<int> complement;
        for (int r = 0; r < dv; ++r)
            if (std::find(pivots.begin(), pivots.end(), r) == pivots.end()) complement.push_back(r);
        Mat p(static_cast<int>(complement.size()), dv, x.field);
        for (size_t row = 0; row < complement.size(); ++row) {
            int j = complement[row];
            p.set(static_cast<int>(row), j, Scalar::one(x.field));
            for (int c = 0; c < basis.cols(); ++c)
                p.set(static_cast<int>(row), pivots[c], p.at(static_cast<int>(row), pivots[c]) - basis.at(j, c));
        }
        proj[v - 1] = p;
    }
    DimVec d{proj[0].rows(), proj[1].rows(), proj[2].rows()};
    // Quotient arrows satisfy A^Q_g P_s = P_t A^Y_g; solve via a section of P.
    auto quotient_arrow = [&](Arrow a) {
        const Mat& p_s = proj[arrow_source(a) - 1];
        const Mat& p_t = proj[arrow_target(a) - 1];
        auto sol = p_s.transpose().solve((p_t * x.arrow(a)).transpose());
        if (!sol) throw std::logic_error("quotient_rep: projection is not surjective");
        Mat q = sol->transpose();
        if (!(q * p_s == p_t * x.arrow(a))) throw std::logic_error("quotient_rep: spans are not arrow-stable");
        return q;
    };
    Rep q = Rep::make(x.field, d, quotient_arrow(Arrow::alpha), quotient_arrow(Arrow::alphastar),
                      quotient_arrow(Arrow::betastar), quotient_arrow(Arrow::beta));
    RepMap projection{x, q, proj[0], proj[1], proj[2]};
    if (!is_valid_map(projection)) throw std::logic_error("quotient_rep: projection does not commute");
    return {q, projection};
}

std::pair<Rep, RepMap> kernel_of(const RepMap& f) {
    return sub_rep(f.source, {f.f1.kernel(), f.f2.kernel(), f.f3.kernel()});
}

std::pair<Rep, RepMap> cokernel_of(const RepMap& f) {
    return quotient_rep(f.target, {f.f1.column_space(), f.f2.column_space(), f.f3.column_space()});
}

std::pair<Rep, RepMap> image_of(const RepMap& f) {
    return sub_rep(f.target, {f.f1.column_space(), f.f2.column_space(), f.f3.column_space()});
}

bool is_exact(const Ses& s) {
    if (!(s.left.target.dim == s.right.source.dim)) return false;
    if (!is_valid_map(s.left) || !is_valid_map(s.right)) return false;
    if (!s.left.is_injective() || !s.right.is_surjective()) return false;
    for (int v = 1; v <= 3; ++v) {
        const Mat& lv = s.left.at_vertex(v);
        const Mat& rv = s.right.at_vertex(v);
        if (!(rv * lv).is_zero()) return false;
        // im(left) = ker(right) per vertex, by dimension count.
        if (rv.cols() - rv.rank() != lv.rank()) return false;
    }
    return true;
}

namespace {

// Deterministic coefficient tuples for invertibility search: the
// Schwartz-Zippel grid {0..degree}^m covers every case soundly when
// feasible; a capped fallback only widens the search.
bool grid_next(std::vector<int>& tuple, int bound) {
    for (size_t i = 0; i < tuple.size(); ++i) {
        if (tuple[i] < bound) {
            ++tuple[i];
            for (size_t j = 0; j < i; ++j) tuple[j] = 0;
            return true;
        }
    }
    return false;
}

bool combo_invertible(const std::vector<RepMap>& basis, const std::vector<int>& tuple, const Rep& x, RepMap* out) {
    RepMap f = zero_map(basis[0].source, basis[0].target);
    for (size_t i = 0; i < basis.size(); ++i)
        if (tuple[i] != 0) f = f + basis[i].scaled(Scalar::of(x.field, Rational(tuple[i])));
    if (f.f1.is_invertible() && f.f2.is_invertible() && f.f3.is_invertible()) {
        if (out) *out = f;
        return true;
    }
    return false;
}

}  // namespace

bool is_iso(const Rep& x, const Rep& y) {
    if (!(x.field == y.field)) throw std::invalid_argument("is_iso: mixed fields");
    if (!(x.dim == y.dim)) return false;
    if (x.dim.total() == 0) return true;
    std::vector<RepMap> basis = hom_basis(x, y);
    if (basis.empty()) return false;
    size_t m = basis.size();
    int degree = x.dim.total();  // total degree of the product of vertex determinants
    // The product of vertex determinants is a polynomial of total degree
    // <= dim in the coefficients; if an invertible combination exists the
    // grid {0..degree}^m must contain one.
    double grid_size = 1;
    for (size_t i = 0; i < m; ++i) grid_size *= degree + 1;
    if (grid_size <= 300000.0) {
        std::vector<int> tuple(m, 0);
        do {
            if (combo_invertible(basis, tuple, x, nullptr)) return true;
        } while (grid_next(tuple, degree));
        return false;
    }
    // Fallback for hom spaces too large for the grid: deterministic seeded
    // trials. Sound for "yes"; at catalog scale the grid always applies.
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    auto next = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int trial = 0; trial < 4000; ++trial) {
        std::vector<int> tuple(m);
        for (size_t i = 0; i < m; ++i) tuple[i] = static_cast<int>(next() % (2 * degree + 1)) - degree;
        if (combo_invertible(basis, tuple, x, nullptr)) return true;
    }
    return false;
}

}  // namespace unicluster
