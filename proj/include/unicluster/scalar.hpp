#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace unicluster {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

bool is_prime(long n);

// Coefficient field: the rationals (p == 0) or a prime field F_p.
struct Field {
    long p = 0;

    static Field rationals() { return Field{0}; }
    static Field mod(long p);

    bool is_rational() const { return p == 0; }
    bool operator==(const Field&) const = default;
    std::string to_string() const;
};

// Exact field element. Rationals are kept in lowest terms with positive
// denominator (cpp_rational canonical form); F_p residues live in [0, p).
class Scalar {
  public:
    Scalar() = default;
    explicit Scalar(const Rational& v) : q_(v) {}
    explicit Scalar(long v) : q_(v) {}

    static Scalar of(const Field& f, const Rational& v);
    static Scalar zero(const Field& f) { return of(f, Rational(0)); }
    static Scalar one(const Field& f) { return of(f, Rational(1)); }
    static Scalar mod_p(long p, const Int& v);

    Field field() const { return Field{p_}; }
    bool is_zero() const;
    bool is_one() const;

    const Rational& rat() const;
    long residue() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    long p_ = 0;     // 0 = rational field
    Rational q_;     // value when p_ == 0
    long r_ = 0;     // residue when p_ > 0

    void check_same_field(const Scalar& o) const;
};

// Rendering/parsing of rational tokens: "p/q", or "p" when q == 1.
std::string rational_to_string(const Rational& v);
Rational parse_rational(const std::string& token);

// Residue of a rational mod p; the denominator must be prime to p.
long rational_mod_p(const Rational& v, long p);
long mod_inverse(long a, long p);

}  // namespace unicluster
