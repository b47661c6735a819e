#pragma once

#include "unicluster/scalar.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace unicluster {

// The fixed variable alphabet: coordinates of the generic unitriangular
// matrix, the six parametrization variables, and the counting variable q.
enum class Var : int {
    a12, a13, a14, a23, a24, a34,
    t1, t2, t3, t4, t5, t6,
    q,
};

inline constexpr int kNumVars = 13;

const char* var_name(Var v);
std::optional<Var> var_from_name(const std::string& name);

using Expo = std::array<std::uint8_t, kNumVars>;

// Graded lexicographic order: total degree first, then earlier variables in
// the alphabet dominate. Terms are stored in this order, so equality of
// polynomials is structural.
struct GradedLexLess {
    bool operator()(const Expo& a, const Expo& b) const;
};

// Multivariate polynomial with arbitrary-precision integer coefficients in
// canonical form (no zero terms, canonical term order).
class MultiPoly {
  public:
    MultiPoly() = default;
    explicit MultiPoly(long c) : MultiPoly(Int(c)) {}
    explicit MultiPoly(const Int& c);

    static MultiPoly variable(Var v);
    static MultiPoly monomial(const Expo& e, const Int& coeff);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const Int* constant_value() const;  // nullptr unless constant (incl. zero)
    int total_degree() const;
    int degree_in(Var v) const;
    bool uses(Var v) const { return degree_in(v) > 0; }
    const std::map<Expo, Int, GradedLexLess>& terms() const { return terms_; }
    Int coeff(const Expo& e) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly pow(int n) const;
    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }
    bool operator<(const MultiPoly& o) const;  // arbitrary total order for set keys

    // Replace each mapped variable by the given polynomial; unmapped
    // variables are left alone.
    MultiPoly substitute(const std::map<Var, MultiPoly>& assignment) const;
    // Full evaluation; every variable occurring in the polynomial must be
    // assigned.
    Rational evaluate(const std::map<Var, Rational>& assignment) const;

    std::string to_string() const;
    static MultiPoly parse(const std::string& text);

  private:
    std::map<Expo, Int, GradedLexLess> terms_;

    void add_term(const Expo& e, const Int& c);
};

// Exact univariate interpolation in q through integer point counts.
struct QInterp {
    std::vector<Rational> coeffs;  // ascending degree, size degree_bound + 1
    bool integral = false;         // all coefficients are integers
    bool consistent = false;       // every surplus point lies on the curve
    MultiPoly poly() const;        // requires integral
    Rational at(const Rational& x) const;
};

// Fit the unique polynomial of degree <= degree_bound through the first
// degree_bound+1 points, then check the remaining ones. Requires at least
// degree_bound+1 points with distinct q values.
QInterp interpolate_q(const std::vector<std::pair<long, Int>>& points, int degree_bound);

}  // namespace unicluster
