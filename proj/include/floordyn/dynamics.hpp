#pragma once

// The maps f(x) = floor(lambda x) and A(x, y) = (f(y), f(x)), exact orbit
// iteration with certified terminal verdicts, and the parity-split
// simulation of a single coordinate.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "floordyn/numeric.hpp"

namespace floordyn {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point&, const Point&) = default;
};

struct LatticePoint {
    BigInt x;
    BigInt y;

    /// "(x,y)"
    std::string str() const;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b);
};

inline Point lift(const LatticePoint& p) { return Point{Rational(p.x), Rational(p.y)}; }

/// Limits of the even- and odd-indexed iterates f^{2n}(x0), f^{2n+1}(x0).
/// Step 0 is x0 itself, so a rational start shifts nothing.
struct ParityLimits {
    ExtInt even;
    ExtInt odd;

    bool finite() const noexcept { return even.is_finite() && odd.is_finite(); }
    /// "(even,odd)"
    std::string str() const;

    friend bool operator==(const ParityLimits&, const ParityLimits&) = default;
};

struct FixedPointVerdict {
    LatticePoint point;
    std::size_t entry_step = 0;
};

/// A(p) == q, A(q) == p, p != q.
struct TwoCycleVerdict {
    LatticePoint p;
    LatticePoint q;
    std::size_t entry_step = 0;
};

/// Parity limits of the f-orbits of start.x and start.y; at least one is infinite.
struct DivergentVerdict {
    ParityLimits x_parity;
    ParityLimits y_parity;
};

struct BudgetExhaustedVerdict {};

using TerminalVerdict =
    std::variant<FixedPointVerdict, TwoCycleVerdict, DivergentVerdict, BudgetExhaustedVerdict>;

std::string describe(const TerminalVerdict& verdict);

/// steps[j] == A^{j+1}(start); the start itself is kept apart since it may
/// be off the lattice.
struct OrbitTrace {
    Point start;
    std::vector<LatticePoint> steps;
    TerminalVerdict verdict;
    std::size_t steps_used = 0;
};

/// Thrown by parity_limits_simulated when no stopping rule fires within the
/// budget. Carries the orbit computed so far.
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& message, std::vector<Rational> partial)
        : std::runtime_error(message), partial_(std::move(partial)) {}
    const std::vector<Rational>& partial_orbit() const noexcept { return partial_; }

private:
    std::vector<Rational> partial_;
};

BigInt apply_f(const Rational& lambda, const Rational& x);

/// (f(z.y), f(z.x)); note the swap.
LatticePoint apply_A(const Rational& lambda, const Point& z);
LatticePoint apply_A(const Rational& lambda, const LatticePoint& z);

/// Default number of steps allowed for the orbit of x0 (or of both
/// coordinates of z). Grows with the bit length of the start and, in the
/// contracting regimes, with 1/(1-|lambda|).
std::size_t default_budget(const Rational& lambda, const Rational& x0);
std::size_t default_budget(const Rational& lambda, const Point& z);

/// Stopping rule for the f-orbit sitting at integer n on step `step`.
/// Returns the parity limits once they are certain: n is a fixed value,
/// n lies on a 2-cycle, or the regime's escape criterion proves divergence.
std::optional<ParityLimits> certify(const Rational& lambda, const ParamClass& cls,
                                    const BigInt& n, std::size_t step);

/// Iterates A from z for at most max_steps steps (max_steps >= 1).
OrbitTrace iterate_orbit(const Rational& lambda, const Point& z, std::size_t max_steps);

/// Simulates the f-orbit of x0 until certify() fires. Throws BudgetError
/// after max_steps applications of f without a verdict.
ParityLimits parity_limits_simulated(const Rational& lambda, const Rational& x0,
                                     std::size_t max_steps);

}  // namespace floordyn
