#include "floordyn/dynamics.hpp"

#include <algorithm>
#include <limits>

namespace floordyn {

std::string LatticePoint::str() const { return "(" + x.str() + "," + y.str() + ")"; }

std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b) {
    if (a.x != b.x) return a.x < b.x ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.y != b.y) return a.y < b.y ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string ParityLimits::str() const { return "(" + even.str() + "," + odd.str() + ")"; }

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::size_t start_bits(const Rational& x) {
    return std::max(bit_length(x.num()), bit_length(x.den()));
}

}  // namespace

std::string describe(const TerminalVerdict& verdict) {
    return std::visit(
        overloaded{
            [](const FixedPointVerdict& v) {
                return "fixed point " + v.point.str() + " from step " + std::to_string(v.entry_step);
            },
            [](const TwoCycleVerdict& v) {
                return "two-cycle " + v.p.str() + " <-> " + v.q.str() + " from step " +
                       std::to_string(v.entry_step);
            },
            [](const DivergentVerdict& v) {
                return "divergent: x parity " + v.x_parity.str() + ", y parity " + v.y_parity.str();
            },
            [](const BudgetExhaustedVerdict&) { return std::string("budget exhausted"); },
        },
        verdict);
}

BigInt apply_f(const Rational& lambda, const Rational& x) { return floor_scale(lambda, x); }

LatticePoint apply_A(const Rational& lambda, const Point& z) {
    return LatticePoint{apply_f(lambda, z.y), apply_f(lambda, z.x)};
}

LatticePoint apply_A(const Rational& lambda, const LatticePoint& z) {
    return LatticePoint{floor_div(lambda.num() * z.y, lambda.den()),
                        floor_div(lambda.num() * z.x, lambda.den())};
}

std::size_t default_budget(const Rational& lambda, const Rational& x0) {
    const std::size_t bits = start_bits(x0);
    BigInt budget = 64 + bits;

    // Contracting regimes lose a factor |lambda| per step until the orbit is
    // within ~1/(1-|lambda|) of its limit, then at least one unit per two steps.
    const Rational magnitude = lambda.sign() < 0 ? -lambda : lambda;
    if (magnitude.sign() > 0 && magnitude < Rational(1)) {
        const BigInt contraction = ceil(Rational(1) / (Rational(1) - magnitude));
        budget += 4 * contraction * (bits + 2);
    }
    constexpr auto cap = std::numeric_limits<std::size_t>::max() / 2;
    return budget > cap ? cap : budget.convert_to<std::size_t>();
}

std::size_t default_budget(const Rational& lambda, const Point& z) {
    return std::max(default_budget(lambda, z.x), default_budget(lambda, z.y)) + 2;
}

std::optional<ParityLimits> certify(const Rational& lambda, const ParamClass& cls,
                                    const BigInt& n, std::size_t step) {
    const BigInt fn = floor_div(lambda.num() * n, lambda.den());
    if (fn == n) {
        return ParityLimits{n, n};
    }
    const BigInt ffn = floor_div(lambda.num() * fn, lambda.den());
    if (ffn == n) {
        return step % 2 == 0 ? ParityLimits{n, fn} : ParityLimits{fn, n};
    }

    switch (cls.regime) {
        case Regime::PosSteep:
            // floor(lambda n) >= n + 1 for n >= m, and <= n - 1 for n <= -1.
            if (n >= cls.m) return ParityLimits{ExtInt::plus_inf(), ExtInt::plus_inf()};
            if (n <= -1) return ParityLimits{ExtInt::minus_inf(), ExtInt::minus_inf()};
            break;
        case Regime::NegSteep:
            // Off zero the sign alternates and |value| grows over every two steps.
            if (!n.is_zero()) {
                const bool positive_on_even = (n.sign() > 0) == (step % 2 == 0);
                return positive_on_even
                           ? ParityLimits{ExtInt::plus_inf(), ExtInt::minus_inf()}
                           : ParityLimits{ExtInt::minus_inf(), ExtInt::plus_inf()};
            }
            break;
        default:
            break;
    }
    return std::nullopt;
}

OrbitTrace iterate_orbit(const Rational& lambda, const Point& z, std::size_t max_steps) {
    if (max_steps < 1) {
        throw std::invalid_argument("iterate_orbit needs max_steps >= 1");
    }
    const ParamClass cls = classify_lambda(lambda);

    OrbitTrace trace{z, {}, BudgetExhaustedVerdict{}, 0};
    LatticePoint current = apply_A(lambda, z);
    for (std::size_t step = 1;; ++step) {
        trace.steps.push_back(current);
        trace.steps_used = step;

        const LatticePoint next = apply_A(lambda, current);
        if (next == current) {
            trace.verdict = FixedPointVerdict{current, step};
            return trace;
        }
        if (apply_A(lambda, next) == current) {
            trace.verdict = TwoCycleVerdict{current, next, step};
            return trace;
        }

        // Even steps hold (f^j(x0), f^j(y0)); odd steps hold them swapped.
        const bool even = step % 2 == 0;
        const auto x_cert = certify(lambda, cls, even ? current.x : current.y, step);
        const auto y_cert = certify(lambda, cls, even ? current.y : current.x, step);
        if (x_cert && y_cert && !(x_cert->finite() && y_cert->finite())) {
            trace.verdict = DivergentVerdict{*x_cert, *y_cert};
            return trace;
        }

        if (step == max_steps) {
            return trace;
        }
        current = next;
    }
}

ParityLimits parity_limits_simulated(const Rational& lambda, const Rational& x0,
                                     std::size_t max_steps) {
    if (max_steps < 1) {
        throw std::invalid_argument("parity_limits_simulated needs max_steps >= 1");
    }
    const ParamClass cls = classify_lambda(lambda);

    std::vector<Rational> orbit{x0};
    for (std::size_t step = 0;; ++step) {
        const Rational& value = orbit.back();
        if (value.is_integer()) {
            if (auto limits = certify(lambda, cls, value.num(), step)) {
                return *limits;
            }
        }
        if (step == max_steps) {
            throw BudgetError("no verdict for x0=" + x0.str() + " at lambda=" + lambda.str() +
                                  " within " + std::to_string(max_steps) + " steps",
                              std::move(orbit));
        }
        orbit.emplace_back(apply_f(lambda, value));
    }
}

}  // namespace floordyn
