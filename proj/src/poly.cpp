#include "unicluster/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace unicluster {

namespace {
constexpr const char* kVarNames[kNumVars] = {
    "a12", "a13", "a14", "a23", "a24", "a34",
    "t1", "t2", "t3", "t4", "t5", "t6",
    "q",
};
}  // namespace

const char* var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

std::optional<Var> var_from_name(const std::string& name) {
    for (int i = 0; i < kNumVars; ++i)
        if (name == kVarNames[i]) return static_cast<Var>(i);
    return std::nullopt;
}

bool GradedLexLess::operator()(const Expo& a, const Expo& b) const {
    int da = 0, db = 0;
    for (int i = 0; i < kNumVars; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db;
    for (int i = 0; i < kNumVars; ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

MultiPoly::MultiPoly(const Int& c) {
    if (c != 0) terms_[Expo{}] = c;
}

MultiPoly MultiPoly::variable(Var v) {
    Expo e{};
    e[static_cast<int>(v)] = 1;
    return monomial(e, 1);
}

MultiPoly MultiPoly::monomial(const Expo& e, const Int& coeff) {
    MultiPoly p;
    if (coeff != 0) p.terms_[e] = coeff;
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Expo{});
}

const Int* MultiPoly::constant_value() const {
    static const Int kZero = 0;
    if (terms_.empty()) return &kZero;
    if (terms_.size() == 1 && terms_.begin()->first == Expo{}) return &terms_.begin()->second;
    return nullptr;
}

int MultiPoly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int i = 0; i < kNumVars; ++i) t += e[i];
        d = std::max(d, t);
    }
    return d;
}

int MultiPoly::degree_in(Var v) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[static_cast<int>(v)]));
    return d;
}

Int MultiPoly::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

void MultiPoly::add_term(const Expo& e, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator-() const { return MultiPoly() - *this; }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Expo e;
            for (int i = 0; i < kNumVars; ++i) {
                int s = ea[i] + eb[i];
                if (s > 255) throw std::overflow_error("MultiPoly: exponent overflow");
                e[i] = static_cast<std::uint8_t>(s);
            }
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::pow(int n) const {
    if (n < 0) throw std::invalid_argument("MultiPoly::pow: negative exponent");
    MultiPoly r(1);
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
}

bool MultiPoly::operator<(const MultiPoly& o) const {
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    GradedLexLess less;
    for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
        if (less(a->first, b->first)) return true;
        if (less(b->first, a->first)) return false;
        if (a->second != b->second) return a->second < b->second;
    }
    return a == terms_.end() && b != o.terms_.end();
}

MultiPoly MultiPoly::substitute(const std::map<Var, MultiPoly>& assignment) const {
    MultiPoly result;
    for (const auto& [e, c] : terms_) {
        MultiPoly term(c);
        Expo rest{};
        for (int i = 0; i < kNumVars; ++i) {
            if (e[i] == 0) continue;
            auto it = assignment.find(static_cast<Var>(i));
            if (it == assignment.end())
                rest[i] = e[i];
            else
                term = term * it->second.pow(e[i]);
        }
        result = result + term * monomial(rest, 1);
    }
    return result;
}

Rational MultiPoly::evaluate(const std::map<Var, Rational>& assignment) const {
    Rational result = 0;
    for (const auto& [e, c] : terms_) {
        Rational term(c);
        for (int i = 0; i < kNumVars; ++i) {
            if (e[i] == 0) continue;
            auto it = assignment.find(static_cast<Var>(i));
            if (it == assignment.end())
                throw std::invalid_argument(std::string("MultiPoly::evaluate: unassigned variable ") + kVarNames[i]);
            for (int k = 0; k < e[i]; ++k) term *= it->second;
        }
        result += term;
    }
    return result;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Leading (largest) term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool has_vars = !(e == Expo{});
        if (mag != 1 || !has_vars) os << mag;
        bool need_star = mag != 1 && has_vars;
        for (int i = 0; i < kNumVars; ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            need_star = true;
            os << kVarNames[i];
            if (e[i] > 1) os << "^" << static_cast<int>(e[i]);
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::optional<Int> integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) return std::nullopt;
        return Int(s.substr(start, pos - start));
    }

    std::optional<Var> variable() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) return std::nullopt;
        auto v = var_from_name(s.substr(start, pos - start));
        if (!v) throw std::invalid_argument("MultiPoly::parse: unknown variable '" + s.substr(start, pos - start) + "'");
        return v;
    }

    MultiPoly term() {
        Int coeff = 1;
        Expo e{};
        bool any = false;
        for (;;) {
            skip_ws();
            if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                coeff *= *integer();
                any = true;
            } else if (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) {
                Var v = *variable();
                int exp = 1;
                if (eat('^')) {
                    auto n = integer();
                    if (!n) throw std::invalid_argument("MultiPoly::parse: missing exponent");
                    exp = static_cast<int>(*n);
                }
                int idx = static_cast<int>(v);
                int total = e[idx] + exp;
                if (total > 255) throw std::overflow_error("MultiPoly::parse: exponent overflow");
                e[idx] = static_cast<std::uint8_t>(total);
                any = true;
            } else {
                break;
            }
            if (!eat('*')) break;
        }
        if (!any) throw std::invalid_argument("MultiPoly::parse: empty term");
        return MultiPoly::monomial(e, coeff);
    }

    MultiPoly parse() {
        MultiPoly result;
        bool negative = false;
        if (eat('-'))
            negative = true;
        else
            eat('+');
        for (;;) {
            MultiPoly t = term();
            result = negative ? result - t : result + t;
            skip_ws();
            if (eat('+'))
                negative = false;
            else if (eat('-'))
                negative = true;
            else
                break;
        }
        skip_ws();
        if (pos != s.size()) throw std::invalid_argument("MultiPoly::parse: trailing input at position " + std::to_string(pos));
        return result;
    }
};

}  // namespace

MultiPoly MultiPoly::parse(const std::string& text) {
    Parser p(text);
    return p.parse();
}

MultiPoly QInterp::poly() const {
    if (!integral) throw std::logic_error("QInterp::poly: coefficients are not all integers");
    MultiPoly p;
    for (size_t d = 0; d < coeffs.size(); ++d) {
        Expo e{};
        e[static_cast<int>(Var::q)] = static_cast<std::uint8_t>(d);
        p = p + MultiPoly::monomial(e, numerator(coeffs[d]));
    }
    return p;
}

Rational QInterp::at(const Rational& x) const {
    Rational acc = 0;
    for (size_t d = coeffs.size(); d-- > 0;) acc = acc * x + coeffs[d];
    return acc;
}

QInterp interpolate_q(const std::vector<std::pair<long, Int>>& points, int degree_bound) {
    if (degree_bound < 0) throw std::invalid_argument("interpolate_q: negative degree bound");
    size_t need = static_cast<size_t>(degree_bound) + 1;
    if (points.size() < need) throw std::invalid_argument("interpolate_q: not enough points");
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("interpolate_q: duplicate q values");

    // Newton divided differences on the first degree_bound+1 points.
    std::vector<Rational> xs(need), dd(need);
    for (size_t i = 0; i < need; ++i) {
        xs[i] = points[i].first;
        dd[i] = Rational(points[i].second);
    }
    for (size_t level = 1; level < need; ++level)
        for (size_t i = need - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);

    // Expand Newton form into monomial coefficients.
    std::vector<Rational> coeffs(need, Rational(0));
    std::vector<Rational> basis{Rational(1)};  // product of (x - xs[j]) so far
    for (size_t level = 0; level < need; ++level) {
        for (size_t d = 0; d < basis.size(); ++d) coeffs[d] += dd[level] * basis[d];
        if (level + 1 < need) {
            std::vector<Rational> next(basis.size() + 1, Rational(0));
            for (size_t d = 0; d < basis.size(); ++d) {
                next[d + 1] += basis[d];
                next[d] -= basis[d] * xs[level];
            }
            basis = next;
        }
    }

    QInterp result;
    result.coeffs = coeffs;
    result.integral = true;
    for (const auto& c : coeffs)
        if (denominator(c) != 1) result.integral = false;
    result.consistent = true;
    for (size_t i = need; i < points.size(); ++i)
        if (result.at(Rational(points[i].first)) != Rational(points[i].second)) result.consistent = false;
    return result;
}

}  // namespace unicluster
