#pragma once

// Reference computations used only by tests. Plain 128-bit integer
// arithmetic on small inputs, sharing no code with the library.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "floordyn/classifier.hpp"

namespace oracle {

using i128 = __int128;

struct Frac {
    std::int64_t num;
    std::int64_t den;  // > 0
};

/// floor(n / d) by stepping from the truncated quotient until the defining
/// inequality q*d <= n < (q+1)*d holds.
inline i128 floor_by_inequality(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 q = n / d;
    while (q * d > n) --q;
    while ((q + 1) * d <= n) ++q;
    return q;
}

inline i128 f(Frac lambda, i128 x_num, i128 x_den) {
    return floor_by_inequality(i128(lambda.num) * x_num, i128(lambda.den) * x_den);
}

/// Index m by linear scan: (m-1)/m < l <= m/(m+1) for 0<l<1, and
/// (m+1)/m <= l < m/(m-1) (m == 1: no upper bound) for l>1.
inline std::int64_t scan_m(Frac l) {
    const i128 p = l.num, q = l.den;
    for (i128 m = 1; m < 1'000'000; ++m) {
        if (p < q) {
            if ((m - 1) * q < m * p && p * (m + 1) <= m * q) return static_cast<std::int64_t>(m);
        } else {
            const bool lower = (m + 1) * q <= m * p;
            const bool upper = m == 1 || p * (m - 1) < m * q;
            if (lower && upper) return static_cast<std::int64_t>(m);
        }
    }
    return -1;
}

/// Parity limits by brute-force iteration: run the f-orbit for a long
/// time; if it leaves |v| <= 10^15 the signs on the next two steps decide
/// which parity goes to which infinity, otherwise the last even and odd
/// values are the limits. Encoded as strings ("+inf", "-inf", digits).
struct Limits {
    std::string even;
    std::string odd;
};

inline std::string to_str(i128 v) {
    if (v == 0) return "0";
    std::string s;
    const bool neg = v < 0;
    if (neg) v = -v;
    while (v > 0) {
        s.insert(s.begin(), char('0' + int(v % 10)));
        v /= 10;
    }
    return neg ? "-" + s : s;
}

inline Limits naive_parity(Frac lambda, Frac x0, int steps = 4000) {
    const i128 big = i128(1'000'000'000'000'000LL);
    i128 v = f(lambda, x0.num, x0.den);  // step 1
    i128 last[2] = {0, 0};
    bool seen[2] = {false, false};
    // step 0 is only a seed; limits come from the tail.
    for (int step = 1; step <= steps; ++step) {
        if (v > big || v < -big) {
            const i128 next = f(lambda, v, 1);
            const auto sign_str = [](i128 x) { return std::string(x > 0 ? "+inf" : "-inf"); };
            if (step % 2 == 0) return {sign_str(v), sign_str(next)};
            return {sign_str(next), sign_str(v)};
        }
        last[step % 2] = v;
        seen[step % 2] = true;
        v = f(lambda, v, 1);
    }
    return {to_str(last[0]), to_str(last[1])};
}

inline floordyn::Rational to_rational(Frac q) {
    return floordyn::Rational(floordyn::BigInt(q.num), floordyn::BigInt(q.den));
}

inline std::string str(const floordyn::ParityLimits& p) { return p.even.str() + "," + p.odd.str(); }
inline std::string str(const Limits& p) { return p.even + "," + p.odd; }

/// Deterministic generator of small rationals.
class RationalGen {
public:
    explicit RationalGen(std::uint64_t seed) : rng_(seed) {}

    Frac next(std::int64_t max_num, std::int64_t max_den) {
        std::uniform_int_distribution<std::int64_t> num(-max_num, max_num);
        std::uniform_int_distribution<std::int64_t> den(1, max_den);
        return {num(rng_), den(rng_)};
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// The parameter values exercised by the acceptance grid.
inline std::vector<floordyn::Rational> acceptance_lambdas() {
    using floordyn::Rational;
    return {Rational(-3),   Rational(-2),   Rational(-3, 2), Rational(-1), Rational(-1, 2),
            Rational(-1, 4), Rational(0),   Rational(1, 4),  Rational(1, 2), Rational(3, 4),
            Rational(1),    Rational(5, 4), Rational(3, 2),  Rational(2),  Rational(3)};
}

}  // namespace oracle
