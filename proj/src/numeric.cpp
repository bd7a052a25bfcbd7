#include "floordyn/numeric.hpp"

#include <utility>

namespace floordyn {

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;  // truncates toward zero
    if (a.sign() < 0 && q * b != a) {
        --q;
    }
    return q;
}

std::size_t bit_length(const BigInt& n) {
    if (n.is_zero()) {
        return 0;
    }
    return boost::multiprecision::msb(abs(n)) + 1;
}

// ---------------------------------------------------------------- Rational

Rational::Rational(BigInt value) : num_(std::move(value)), den_(1) {}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) {
        throw std::domain_error("rational with zero denominator");
    }
    normalize();
}

void Rational::normalize() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    BigInt g = boost::multiprecision::gcd(abs(num_), den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::string Rational::str() const {
    if (is_integer()) {
        return num_.str();
    }
    return num_.str() + "/" + den_.str();
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

BigInt floor(const Rational& q) { return floor_div(q.num(), q.den()); }

BigInt ceil(const Rational& q) { return -floor_div(-q.num(), q.den()); }

BigInt floor_scale(const Rational& lambda, const Rational& x) {
    return floor_div(lambda.num() * x.num(), lambda.den() * x.den());
}

// ----------------------------------------------------------------- parsing

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

[[noreturn]] void fail(std::string_view text, std::size_t pos, std::string_view what) {
    throw ParseError("invalid rational '" + std::string(text) + "' at position " +
                         std::to_string(pos) + ": " + std::string(what),
                     pos);
}

std::size_t scan_digits(std::string_view text, std::size_t pos) {
    while (pos < text.size() && is_digit(text[pos])) {
        ++pos;
    }
    return pos;
}

BigInt digits_value(std::string_view digits) {
    BigInt v = 0;
    for (char c : digits) {
        v = v * 10 + (c - '0');
    }
    return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    constexpr std::string_view unicode_minus = "\xE2\x88\x92";

    std::size_t pos = 0;
    bool negative = false;
    if (text.substr(0, unicode_minus.size()) == unicode_minus) {
        negative = true;
        pos = unicode_minus.size();
    } else if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        negative = text[0] == '-';
        pos = 1;
    }

    const std::size_t int_begin = pos;
    pos = scan_digits(text, pos);
    const std::string_view int_digits = text.substr(int_begin, pos - int_begin);

    BigInt num;
    BigInt den = 1;
    if (pos < text.size() && text[pos] == '.') {
        const std::size_t frac_begin = ++pos;
        pos = scan_digits(text, pos);
        const std::string_view frac_digits = text.substr(frac_begin, pos - frac_begin);
        if (int_digits.empty() && frac_digits.empty()) {
            fail(text, frac_begin, "expected digit");
        }
        num = digits_value(int_digits);
        for (char c : frac_digits) {
            num = num * 10 + (c - '0');
            den *= 10;
        }
    } else {
        if (int_digits.empty()) {
            fail(text, int_begin, "expected digit");
        }
        num = digits_value(int_digits);
        if (pos < text.size() && text[pos] == '/') {
            const std::size_t den_begin = ++pos;
            pos = scan_digits(text, pos);
            if (pos == den_begin) {
                fail(text, den_begin, "expected denominator digits");
            }
            den = digits_value(text.substr(den_begin, pos - den_begin));
            if (den.is_zero()) {
                fail(text, den_begin, "zero denominator");
            }
        }
    }
    if (pos != text.size()) {
        fail(text, pos, "unexpected character");
    }
    return Rational(negative ? BigInt(-num) : num, den);
}

// ------------------------------------------------------------------ ExtInt

std::string ExtInt::str() const {
    switch (kind_) {
        case Kind::MinusInf: return "-inf";
        case Kind::PlusInf: return "+inf";
        case Kind::Finite: break;
    }
    return value_.str();
}

std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b) {
    if (a.kind_ != b.kind_) {
        return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
    }
    if (a.kind_ != ExtInt::Kind::Finite || a.value_ == b.value_) {
        return std::strong_ordering::equal;
    }
    return a.value_ < b.value_ ? std::strong_ordering::less : std::strong_ordering::greater;
}

// ---------------------------------------------------------------- regimes

std::string_view to_string(Regime regime) {
    switch (regime) {
        case Regime::NegSteep: return "NegSteep";
        case Regime::NegOne: return "NegOne";
        case Regime::NegShallow: return "NegShallow";
        case Regime::Zero: return "Zero";
        case Regime::PosShallow: return "PosShallow";
        case Regime::One: return "One";
        case Regime::PosSteep: return "PosSteep";
    }
    return "?";
}

std::string ParamClass::str() const {
    std::string s(to_string(regime));
    if (indexed()) {
        s += "(m=" + m.str() + ")";
    }
    return s;
}

bool in_regime(const Rational& lambda, const ParamClass& cls) {
    const Rational one = 1;
    switch (cls.regime) {
        case Regime::NegSteep: return lambda < -one;
        case Regime::NegOne: return lambda == -one;
        case Regime::NegShallow: return -one < lambda && lambda.sign() < 0;
        case Regime::Zero: return lambda.sign() == 0;
        case Regime::One: return lambda == one;
        case Regime::PosShallow: {
            if (cls.m < 1) return false;
            const Rational lower(cls.m - 1, cls.m);
            const Rational upper(cls.m, cls.m + 1);
            return lower < lambda && lambda <= upper;
        }
        case Regime::PosSteep: {
            if (cls.m < 1) return false;
            const Rational lower(cls.m + 1, cls.m);
            if (lambda < lower) return false;
            return cls.m == 1 || lambda < Rational(cls.m, cls.m - 1);
        }
    }
    return false;
}

ParamClass classify_lambda(const Rational& lambda) {
    const Rational one = 1;
    ParamClass cls;
    if (lambda.sign() == 0) {
        cls.regime = Regime::Zero;
    } else if (lambda == one) {
        cls.regime = Regime::One;
    } else if (lambda == -one) {
        cls.regime = Regime::NegOne;
    } else if (lambda < -one) {
        cls.regime = Regime::NegSteep;
    } else if (lambda.sign() < 0) {
        cls.regime = Regime::NegShallow;
    } else if (lambda < one) {
        // smallest m with lambda <= m/(m+1), i.e. m >= lambda/(1-lambda)
        cls.regime = Regime::PosShallow;
        cls.m = ceil(lambda / (one - lambda));
        if (cls.m < 1) cls.m = 1;
    } else {
        // smallest m with (m+1)/m <= lambda, i.e. m >= 1/(lambda-1)
        cls.regime = Regime::PosSteep;
        cls.m = ceil(one / (lambda - one));
    }
    if (!in_regime(lambda, cls)) {
        throw std::logic_error("closed-form index fails bracketing for lambda=" + lambda.str());
    }
    return cls;
}

BigInt index_by_scan(const Rational& lambda) {
    const Rational one = 1;
    Regime regime;
    if (lambda.sign() > 0 && lambda < one) {
        regime = Regime::PosShallow;
    } else if (lambda > one) {
        regime = Regime::PosSteep;
    } else {
        throw std::domain_error("index m undefined for lambda=" + lambda.str());
    }
    const Rational gap = lambda > one ? lambda - one : one - lambda;
    const BigInt bound = ceil(one / gap) + 1;
    for (BigInt m = 1; m <= bound; ++m) {
        if (in_regime(lambda, ParamClass{regime, m})) {
            return m;
        }
    }
    throw std::logic_error("index scan exceeded its bound for lambda=" + lambda.str());
}

}  // namespace floordyn
