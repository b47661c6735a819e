#include "unicluster/scalar.hpp"

#include <sstream>

namespace unicluster {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::mod(long p) {
    if (!is_prime(p)) throw std::invalid_argument("Field::mod: " + std::to_string(p) + " is not prime");
    return Field{p};
}

std::string Field::to_string() const {
    return is_rational() ? "Q" : "F" + std::to_string(p);
}

Scalar Scalar::of(const Field& f, const Rational& v) {
    if (f.is_rational()) return Scalar(v);
    return mod_p(f.p, Int(rational_mod_p(v, f.p)));
}

Scalar Scalar::mod_p(long p, const Int& v) {
    if (!is_prime(p)) throw std::invalid_argument("Scalar::mod_p: modulus not prime");
    Scalar s;
    s.p_ = p;
    Int r = v % p;
    if (r < 0) r += p;
    s.r_ = static_cast<long>(r);
    return s;
}

bool Scalar::is_zero() const { return p_ == 0 ? q_.is_zero() : r_ == 0; }

bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

const Rational& Scalar::rat() const {
    if (p_ != 0) throw std::logic_error("Scalar::rat on prime-field element");
    return q_;
}

long Scalar::residue() const {
    if (p_ == 0) throw std::logic_error("Scalar::residue on rational element");
    return r_;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (p_ != o.p_) throw std::invalid_argument("Scalar: mixed fields");
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    if (p_ == 0) return Scalar(q_ + o.q_);
    return mod_p(p_, Int(r_) + o.r_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    if (p_ == 0) return Scalar(q_ - o.q_);
    return mod_p(p_, Int(r_) - o.r_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    if (p_ == 0) return Scalar(q_ * o.q_);
    return mod_p(p_, Int(r_) * o.r_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    if (p_ == 0) return Scalar(-q_);
    return mod_p(p_, Int(-r_));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: division by zero");
    if (p_ == 0) return Scalar(Rational(1) / q_);
    return mod_p(p_, Int(mod_inverse(r_, p_)));
}

bool Scalar::operator==(const Scalar& o) const {
    if (p_ != o.p_) return false;
    return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::to_string() const {
    if (p_ == 0) return rational_to_string(q_);
    return std::to_string(r_);
}

std::string rational_to_string(const Rational& v) {
    std::ostringstream os;
    os << numerator(v);
    if (denominator(v) != 1) os << "/" << denominator(v);
    return os.str();
}

Rational parse_rational(const std::string& token) {
    auto slash = token.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(token));
        Int num(token.substr(0, slash));
        Int den(token.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational token: '" + token + "'");
    }
}

long rational_mod_p(const Rational& v, long p) {
    Int den = denominator(v) % p;
    if (den == 0) throw std::domain_error("rational_mod_p: denominator divisible by " + std::to_string(p));
    Int num = numerator(v) % p;
    long n = static_cast<long>(num < 0 ? num + p : num);
    long d = static_cast<long>(den < 0 ? den + p : den);
    return static_cast<long>((Int(n) * mod_inverse(d, p)) % p);
}

long mod_inverse(long a, long p) {
    long t = 0, new_t = 1, r = p, new_r = a % p;
    if (new_r < 0) new_r += p;
    while (new_r != 0) {
        long quot = r / new_r;
        long tmp = t - quot * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quot * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::domain_error("mod_inverse: not invertible");
    return t < 0 ? t + p : t;
}

}  // namespace unicluster
