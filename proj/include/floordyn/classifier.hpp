#pragma once

// Closed-form results for the floor map: the fixed-point set of A, the
// parity limits of one coordinate per regime, omega-limit set assembly,
// and the six-region statements transcribed as an independent oracle.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "floordyn/dynamics.hpp"
#include "floordyn/numeric.hpp"

namespace floordyn {

struct ExtLatticePoint {
    ExtInt x;
    ExtInt y;

    /// "(x,y)" with "+inf"/"-inf" tokens.
    std::string str() const;

    friend bool operator==(const ExtLatticePoint&, const ExtLatticePoint&) = default;
    friend std::strong_ordering operator<=>(const ExtLatticePoint&, const ExtLatticePoint&) = default;
};

/// One or two limit points, deduplicated and sorted lexicographically.
class OmegaSet {
public:
    OmegaSet(std::initializer_list<ExtLatticePoint> points);
    explicit OmegaSet(std::vector<ExtLatticePoint> points);

    const std::vector<ExtLatticePoint>& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool contains(const ExtLatticePoint& p) const;

    /// Canonical key, e.g. "{(-1,0),(0,-1)}".
    std::string str() const;

    friend bool operator==(const OmegaSet&, const OmegaSet&) = default;
    friend auto operator<=>(const OmegaSet&, const OmegaSet&) = default;

private:
    std::vector<ExtLatticePoint> points_;
};

/// omega(z) from the parity limits of z.x and z.y:
/// even iterates tend to (x.even, y.even), odd ones to (y.odd, x.odd).
OmegaSet assemble_omega(const ParityLimits& x, const ParityLimits& y);

ParityLimits parity_limits_analytic(const Rational& lambda, const Rational& x0);

enum class OmegaMethod { Analytic, Simulate };

/// Simulate runs the A-orbit to its certified verdict (max_steps == 0 picks
/// default_budget) and throws BudgetError if none is reached.
OmegaSet omega(const Rational& lambda, const Point& z, OmegaMethod method,
               std::size_t max_steps = 0);

class FixSet {
public:
    enum class Kind { Finite, AllDiagonal, AllAntiDiagonal };

    static FixSet finite(std::vector<LatticePoint> points);
    static FixSet all_diagonal() { return FixSet(Kind::AllDiagonal, {}); }
    static FixSet all_antidiagonal() { return FixSet(Kind::AllAntiDiagonal, {}); }

    Kind kind() const noexcept { return kind_; }
    /// Sorted and deduplicated; empty unless kind() == Finite.
    const std::vector<LatticePoint>& points() const noexcept { return points_; }
    bool contains(const LatticePoint& p) const;
    std::string str() const;

    friend bool operator==(const FixSet&, const FixSet&) = default;

private:
    FixSet(Kind kind, std::vector<LatticePoint> points)
        : kind_(kind), points_(std::move(points)) {}

    Kind kind_;
    std::vector<LatticePoint> points_;
};

FixSet fixed_points(const Rational& lambda);

/// One printed region that contains the queried point.
struct TheoremCase {
    OmegaSet omega;
    std::string case_id;  // "T1.1" .. "T3.6", or "T3.lambda1"
};

/// Every printed region containing z, in printed order.
std::vector<TheoremCase> theorem_cases(const Rational& lambda, const Point& z);

/// First matching printed region, or nullopt (uncovered) when none matches.
std::optional<TheoremCase> theorem_omega(const Rational& lambda, const Point& z);

}  // namespace floordyn
