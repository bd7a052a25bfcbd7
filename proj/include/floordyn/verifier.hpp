#pragma once

// Cross-checks: brute-force fixed points against the closed form, omega by
// simulation against the analytic assembly and the printed region oracle,
// and the period-two property at lambda = -1.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "floordyn/classifier.hpp"

namespace floordyn {

/// Square grid lo, lo+step, ... <= hi in both coordinates, for each lambda.
struct GridSpec {
    std::vector<Rational> lambdas;
    Rational lo;
    Rational hi;
    Rational step;

    /// Throws std::invalid_argument unless lo < hi and step > 0.
    void validate() const;
    std::vector<Rational> axis() const;
};

enum class Tag { Mismatch, KnownDiscrepancy, Uncovered };

/// "Mismatch", "KnownDiscrepancy(T1.3-mixed)" or "Uncovered".
std::string_view to_string(Tag tag);

struct DiscrepancyEntry {
    Rational lambda;
    Rational x;
    Rational y;
    std::string source_a;
    std::string source_b;
    std::string value_a;
    std::string value_b;
    Tag tag = Tag::Mismatch;
};

class DiscrepancyReport {
public:
    void add_note(std::string note);
    void add_entry(DiscrepancyEntry entry);
    /// Stats keep insertion order; re-adding a name accumulates.
    void add_stat(const std::string& name, std::uint64_t value);
    void merge(const DiscrepancyReport& other);

    const std::vector<std::string>& notes() const noexcept { return notes_; }
    const std::vector<DiscrepancyEntry>& entries() const noexcept { return entries_; }
    const std::vector<std::pair<std::string, std::uint64_t>>& stats() const noexcept {
        return stats_;
    }
    std::size_t count(Tag tag) const;
    std::optional<std::uint64_t> stat(std::string_view name) const;

    /// Notes as '#' lines, a tab-separated header plus one line per entry,
    /// then a "[summary]" block of name=value lines.
    std::string serialize() const;

private:
    std::vector<std::string> notes_;
    std::vector<DiscrepancyEntry> entries_;
    std::vector<std::pair<std::string, std::uint64_t>> stats_;
};

/// Brute force over |x|, |y| <= window_radius against fixed_points(lambda).
/// Stats: "fixed_points[<lambda>].found", "fixed_points[<lambda>].expected".
DiscrepancyReport verify_fixed_points(const Rational& lambda, std::uint64_t window_radius);

/// For every (lambda, z) of the grid: simulate vs analytic (Mismatch on any
/// difference), simulate vs the printed region oracle (KnownDiscrepancy for
/// the documented mixed-quadrant shape, Mismatch otherwise, Uncovered when no
/// printed region applies). max_steps == 0 uses the default budget.
/// Stats: "omega.cells", "omega.theorem_covered", "omega.theorem_agree",
/// "omega.theorem_overlap_points", "omega.theorem_overlap_conflicts".
DiscrepancyReport verify_omega(const GridSpec& grid, std::size_t max_steps = 0);

/// lambda = -1 on the integer window: A^2(z) = z everywhere and A(z) = z
/// exactly on the antidiagonal. Stats: "period2.points", "period2.fixed".
DiscrepancyReport verify_period2(std::uint64_t window_radius);

}  // namespace floordyn
