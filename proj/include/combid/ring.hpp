#pragma once

// Exact commutative rings used for every weight in the library:
// big rationals and sparse multivariate polynomials over the integers.

#include <cctype>
#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace combid {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt &v) { return v.str(); }

inline std::string to_string(const Rational &v)
{
    const BigInt num = boost::multiprecision::numerator(v);
    const BigInt den = boost::multiprecision::denominator(v);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

inline bool is_identifier(std::string_view s)
{
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front())))
        return false;
    for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    }
    return s.front() <= 0x7f;
}

// Product of variables with positive exponents, kept sorted by variable name.
// Ordering is lexicographic on (name, exponent) pairs.
class Monomial {
public:
    using Factor = std::pair<std::string, unsigned>;

    Monomial() = default;

    static Monomial variable(std::string name, unsigned exponent = 1)
    {
        if (!is_identifier(name))
            throw input_error("invalid variable name '" + name + "'");
        Monomial m;
        if (exponent > 0)
            m.factors_.emplace_back(std::move(name), exponent);
        return m;
    }

    const std::vector<Factor> &factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    unsigned degree() const
    {
        unsigned d = 0;
        for (const auto &f : factors_)
            d += f.second;
        return d;
    }

    friend Monomial operator*(const Monomial &a, const Monomial &b)
    {
        Monomial out;
        out.factors_.reserve(a.factors_.size() + b.factors_.size());
        auto i = a.factors_.begin();
        auto j = b.factors_.begin();
        while (i != a.factors_.end() && j != b.factors_.end()) {
            if (i->first < j->first) {
                out.factors_.push_back(*i++);
            } else if (j->first < i->first) {
                out.factors_.push_back(*j++);
            } else {
                out.factors_.emplace_back(i->first, i->second + j->second);
                ++i;
                ++j;
            }
        }
        out.factors_.insert(out.factors_.end(), i, a.factors_.end());
        out.factors_.insert(out.factors_.end(), j, b.factors_.end());
        return out;
    }

    friend bool operator==(const Monomial &, const Monomial &) = default;
    friend auto operator<=>(const Monomial &a, const Monomial &b) { return a.factors_ <=> b.factors_; }

    std::string str() const
    {
        std::string s;
        for (const auto &[name, e] : factors_) {
            if (!s.empty())
                s += '*';
            s += name;
            if (e != 1)
                s += '^' + std::to_string(e);
        }
        return s;
    }

private:
    std::vector<Factor> factors_;
};

// Sparse polynomial with integer coefficients. No zero coefficient is ever
// stored, so structural equality is polynomial equality.
class MPoly {
public:
    using TermMap = std::map<Monomial, BigInt>;

    MPoly() = default;
    MPoly(int c) : MPoly(BigInt(c)) {}
    explicit MPoly(const BigInt &c)
    {
        if (c != 0)
            terms_.emplace(Monomial{}, c);
    }

    static MPoly variable(std::string name)
    {
        MPoly p;
        p.terms_.emplace(Monomial::variable(std::move(name)), BigInt(1));
        return p;
    }

    static MPoly term(const BigInt &coeff, Monomial m)
    {
        MPoly p;
        if (coeff != 0)
            p.terms_.emplace(std::move(m), coeff);
        return p;
    }

    const TermMap &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    BigInt constant_term() const
    {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    std::set<std::string> variables() const
    {
        std::set<std::string> out;
        for (const auto &[m, c] : terms_)
            for (const auto &f : m.factors())
                out.insert(f.first);
        return out;
    }

    MPoly &operator+=(const MPoly &o)
    {
        for (const auto &[m, c] : o.terms_)
            accumulate(m, c);
        return *this;
    }

    MPoly &operator-=(const MPoly &o)
    {
        for (const auto &[m, c] : o.terms_)
            accumulate(m, -c);
        return *this;
    }

    MPoly &operator*=(const MPoly &o)
    {
        *this = *this * o;
        return *this;
    }

    friend MPoly operator+(MPoly a, const MPoly &b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly &b) { return a -= b; }

    friend MPoly operator-(MPoly a)
    {
        for (auto &[m, c] : a.terms_)
            c = -c;
        return a;
    }

    friend MPoly operator*(const MPoly &a, const MPoly &b)
    {
        MPoly out;
        for (const auto &[ma, ca] : a.terms_)
            for (const auto &[mb, cb] : b.terms_)
                out.accumulate(ma * mb, ca * cb);
        return out;
    }

    friend bool operator==(const MPoly &, const MPoly &) = default;

    // Terms in ascending monomial order, e.g. "-1 + x^2" or "a*d - b*c".
    std::string str() const
    {
        if (terms_.empty())
            return "0";
        std::string s;
        bool first = true;
        for (const auto &[m, c] : terms_) {
            const bool negative = c < 0;
            const BigInt mag = negative ? BigInt(-c) : c;
            if (first)
                s += negative ? "-" : "";
            else
                s += negative ? " - " : " + ";
            if (m.is_one()) {
                s += mag.str();
            } else {
                if (mag != 1)
                    s += mag.str() + "*";
                s += m.str();
            }
            first = false;
        }
        return s;
    }

private:
    void accumulate(const Monomial &m, const BigInt &c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    TermMap terms_;
};

inline std::string to_string(const MPoly &p) { return p.str(); }

// Substitute rational values for every variable of p.
inline Rational eval(const MPoly &p, const std::map<std::string, Rational> &assignment)
{
    Rational total = 0;
    for (const auto &[m, c] : p.terms()) {
        Rational term = Rational(c);
        for (const auto &[name, e] : m.factors()) {
            auto it = assignment.find(name);
            if (it == assignment.end())
                throw input_error("eval: no value assigned to variable '" + name + "'");
            for (unsigned k = 0; k < e; ++k)
                term *= it->second;
        }
        total += term;
    }
    return total;
}

enum class Mode { rational, symbolic };

inline const char *to_string(Mode m) { return m == Mode::rational ? "rational" : "symbolic"; }

// Runtime-tagged weight. One computation uses one mode; combining modes throws.
class Weight {
public:
    Weight() = default;
    Weight(Rational r) : v_(std::move(r)) {}
    Weight(MPoly p) : v_(std::move(p)) {}

    static Weight zero(Mode m) { return m == Mode::rational ? Weight(Rational(0)) : Weight(MPoly()); }
    static Weight one(Mode m) { return m == Mode::rational ? Weight(Rational(1)) : Weight(MPoly(1)); }

    Mode mode() const { return std::holds_alternative<Rational>(v_) ? Mode::rational : Mode::symbolic; }
    const Rational &rational() const { return std::get<Rational>(v_); }
    const MPoly &poly() const { return std::get<MPoly>(v_); }

    bool is_zero() const
    {
        return mode() == Mode::rational ? rational() == 0 : poly().is_zero();
    }

    std::string str() const
    {
        return mode() == Mode::rational ? to_string(rational()) : poly().str();
    }

    friend Weight add(const Weight &a, const Weight &b)
    {
        check_same_mode(a, b);
        if (a.mode() == Mode::rational)
            return Weight(Rational(a.rational() + b.rational()));
        return Weight(a.poly() + b.poly());
    }

    friend Weight mul(const Weight &a, const Weight &b)
    {
        check_same_mode(a, b);
        if (a.mode() == Mode::rational)
            return Weight(Rational(a.rational() * b.rational()));
        return Weight(a.poly() * b.poly());
    }

    friend Weight neg(const Weight &a)
    {
        if (a.mode() == Mode::rational)
            return Weight(Rational(-a.rational()));
        return Weight(-a.poly());
    }

    friend Weight operator+(const Weight &a, const Weight &b) { return add(a, b); }
    friend Weight operator*(const Weight &a, const Weight &b) { return mul(a, b); }
    friend Weight operator-(const Weight &a) { return neg(a); }
    friend Weight operator-(const Weight &a, const Weight &b) { return add(a, neg(b)); }
    friend bool operator==(const Weight &, const Weight &) = default;

private:
    static void check_same_mode(const Weight &a, const Weight &b)
    {
        if (a.mode() != b.mode())
            throw mode_mismatch();
    }

    std::variant<Rational, MPoly> v_;
};

inline std::string to_string(const Weight &w) { return w.str(); }

// Name reserved for the indeterminate of characteristic polynomials.
inline constexpr std::string_view reserved_variable = "x";

namespace detail {

inline bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

inline BigInt parse_signed_integer(std::string_view s)
{
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw input_error("malformed integer '" + std::string(s) + "'");
    BigInt v{std::string(s)};
    return negative ? BigInt(-v) : v;
}

inline Rational parse_rational(std::string_view s)
{
    const auto slash = s.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_signed_integer(s));
    const BigInt num = parse_signed_integer(s.substr(0, slash));
    const std::string_view den_text = s.substr(slash + 1);
    if (!all_digits(den_text))
        throw input_error("malformed denominator in '" + std::string(s) + "'");
    const BigInt den(std::string{den_text});
    if (den == 0)
        throw input_error("zero denominator in '" + std::string(s) + "'");
    return Rational(num, den);
}

// Recursive-descent reader for the canonical polynomial form printed by
// MPoly::str().
class PolyReader {
public:
    explicit PolyReader(std::string_view s) : s_(s) {}

    MPoly read()
    {
        MPoly total;
        skip();
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        total = read_term();
        if (negative)
            total = -total;
        for (skip(); pos_ < s_.size(); skip()) {
            const char op = s_[pos_];
            if (op != '+' && op != '-')
                fail();
            ++pos_;
            MPoly t = read_term();
            if (op == '+')
                total += t;
            else
                total -= t;
        }
        return total;
    }

private:
    MPoly read_term()
    {
        BigInt coeff = 1;
        Monomial m;
        for (;;) {
            skip();
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff *= BigInt(std::string(take_while([](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; })));
            } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
                std::string name(take_while([](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }));
                unsigned e = 1;
                skip();
                if (peek() == '^') {
                    ++pos_;
                    skip();
                    auto digits = take_while([](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
                    if (digits.empty())
                        fail();
                    e = static_cast<unsigned>(std::stoul(std::string(digits)));
                    if (e == 0)
                        fail();
                }
                m = m * Monomial::variable(std::move(name), e);
            } else {
                fail();
            }
            skip();
            if (peek() != '*')
                break;
            ++pos_;
        }
        return MPoly::term(coeff, std::move(m));
    }

    template <class Pred>
    std::string_view take_while(Pred p)
    {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && p(s_[pos_]))
            ++pos_;
        return s_.substr(start, pos_ - start);
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    void skip()
    {
        while (pos_ < s_.size() && s_[pos_] == ' ')
            ++pos_;
    }

    [[noreturn]] void fail() const
    {
        throw input_error("malformed polynomial '" + std::string(s_) + "' at offset " + std::to_string(pos_));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace detail

// Input literal: signed decimal integer, "p/q", or a variable identifier.
// Integers and fractions yield rational weights, identifiers yield symbolic ones.
inline Weight parse_literal(std::string_view text)
{
    if (text.empty())
        throw input_error("empty weight literal");
    if (is_identifier(text)) {
        if (text == reserved_variable)
            throw input_error("variable name 'x' is reserved");
        return Weight(MPoly::variable(std::string(text)));
    }
    return Weight(detail::parse_rational(text));
}

// Reads back any weight printed by to_string() in the given mode.
inline Weight parse_weight(std::string_view text, Mode mode)
{
    if (mode == Mode::rational)
        return Weight(detail::parse_rational(text));
    return Weight(detail::PolyReader(text).read());
}

// Brings a set of parsed literals to one mode. Integers are valid in both
// rings; a proper fraction next to a variable is a mode mismatch.
inline Mode unify_modes(std::vector<Weight> &ws)
{
    bool symbolic = false;
    for (const auto &w : ws)
        symbolic = symbolic || w.mode() == Mode::symbolic;
    if (!symbolic)
        return Mode::rational;
    for (auto &w : ws) {
        if (w.mode() == Mode::symbolic)
            continue;
        const Rational &r = w.rational();
        if (boost::multiprecision::denominator(r) != 1)
            throw mode_mismatch("fraction '" + to_string(r) + "' cannot appear in a symbolic (integer polynomial) input");
        w = Weight(MPoly(boost::multiprecision::numerator(r)));
    }
    return Mode::symbolic;
}

// Ring values used by the generic algorithms below.
template <class T>
T ring_zero() { return T(0); }

template <class T>
T ring_one() { return T(1); }

template <class T>
bool is_zero(const T &v) { return v == T(0); }

inline bool is_zero(const MPoly &p) { return p.is_zero(); }

} // namespace combid
