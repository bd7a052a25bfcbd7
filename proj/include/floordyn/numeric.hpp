#pragma once

// Exact numbers for the floor map: canonical rationals, integers extended
// by +/-infinity, and the regime classification of the scale parameter.

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace floordyn {

using BigInt = boost::multiprecision::cpp_int;

/// Floored quotient of a / b for b > 0.
BigInt floor_div(const BigInt& a, const BigInt& b);

/// Number of significant bits of |n|; 0 for n == 0.
std::size_t bit_length(const BigInt& n);

/// Exact signed fraction kept in lowest terms with a positive denominator,
/// so two equal values are always structurally identical.
class Rational {
public:
    Rational() = default;
    Rational(BigInt value);  // NOLINT(google-explicit-constructor)
    Rational(int value) : Rational(BigInt(value)) {}  // NOLINT
    Rational(long long value) : Rational(BigInt(value)) {}  // NOLINT

    /// Throws std::domain_error when den == 0.
    Rational(BigInt num, BigInt den);

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return num_.sign(); }

    /// "p" for integers, "p/q" otherwise.
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    void normalize();

    BigInt num_{0};
    BigInt den_{1};
};

BigInt floor(const Rational& q);
BigInt ceil(const Rational& q);

/// f(x) = floor(lambda * x), computed as a floored division of integer products.
BigInt floor_scale(const Rational& lambda, const Rational& x);

/// Raised by parse_rational; position() is the byte offset of the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Accepts "p/q", an integer, or a finite decimal such as "-0.25".
/// A leading '+', '-' or U+2212 minus sign is allowed.
Rational parse_rational(std::string_view text);

/// Integer extended with two infinities; MinusInf < every finite value < PlusInf.
class ExtInt {
public:
    enum class Kind { MinusInf, Finite, PlusInf };

    ExtInt() = default;
    ExtInt(BigInt value) : value_(std::move(value)) {}  // NOLINT
    ExtInt(int value) : value_(value) {}  // NOLINT

    static ExtInt plus_inf() { return ExtInt(Kind::PlusInf); }
    static ExtInt minus_inf() { return ExtInt(Kind::MinusInf); }

    Kind kind() const noexcept { return kind_; }
    bool is_finite() const noexcept { return kind_ == Kind::Finite; }
    /// Only meaningful when is_finite().
    const BigInt& value() const noexcept { return value_; }

    /// Decimal digits, or "+inf" / "-inf".
    std::string str() const;

    friend bool operator==(const ExtInt& a, const ExtInt& b) noexcept {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
    }
    friend std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b);

private:
    explicit ExtInt(Kind kind) : kind_(kind) {}

    Kind kind_ = Kind::Finite;
    BigInt value_{0};
};

enum class Regime {
    NegSteep,    // lambda < -1
    NegOne,      // lambda == -1
    NegShallow,  // -1 < lambda < 0
    Zero,        // lambda == 0
    PosShallow,  // 0 < lambda < 1, indexed by m
    One,         // lambda == 1
    PosSteep,    // lambda > 1, indexed by m
};

std::string_view to_string(Regime regime);

/// Regime of lambda together with its index m.
///
/// PosShallow(m):  (m-1)/m < lambda <= m/(m+1)
/// PosSteep(m):    (m+1)/m <= lambda < m/(m-1), no upper bound when m == 1
///
/// m is 0 for the unindexed regimes.
struct ParamClass {
    Regime regime = Regime::Zero;
    BigInt m{0};

    bool indexed() const noexcept {
        return regime == Regime::PosShallow || regime == Regime::PosSteep;
    }
    /// e.g. "PosShallow(m=3)" or "NegOne".
    std::string str() const;

    friend bool operator==(const ParamClass&, const ParamClass&) = default;
};

ParamClass classify_lambda(const Rational& lambda);

/// True iff the bracketing inequality of `cls` holds exactly for lambda.
bool in_regime(const Rational& lambda, const ParamClass& cls);

/// Index m found by scanning m = 1, 2, ... against the bracketing inequality.
/// Only defined for 0 < lambda < 1 and lambda > 1; throws std::domain_error
/// otherwise. The scan is bounded by ceil(1/|1-lambda|) + 1.
BigInt index_by_scan(const Rational& lambda);

}  // namespace floordyn
