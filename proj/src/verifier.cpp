#include "floordyn/verifier.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace floordyn {

void GridSpec::validate() const {
    if (!(lo < hi)) {
        throw std::invalid_argument("grid window needs lo < hi, got " + lo.str() + ":" + hi.str());
    }
    if (step.sign() <= 0) {
        throw std::invalid_argument("grid step must be positive, got " + step.str());
    }
}

std::vector<Rational> GridSpec::axis() const {
    validate();
    std::vector<Rational> values;
    for (Rational v = lo; v <= hi; v += step) {
        values.push_back(v);
    }
    return values;
}

std::string_view to_string(Tag tag) {
    switch (tag) {
        case Tag::Mismatch: return "Mismatch";
        case Tag::KnownDiscrepancy: return "KnownDiscrepancy(T1.3-mixed)";
        case Tag::Uncovered: return "Uncovered";
    }
    return "?";
}

// ------------------------------------------------------------------ report

void DiscrepancyReport::add_note(std::string note) { notes_.push_back(std::move(note)); }

void DiscrepancyReport::add_entry(DiscrepancyEntry entry) { entries_.push_back(std::move(entry)); }

void DiscrepancyReport::add_stat(const std::string& name, std::uint64_t value) {
    auto it = std::find_if(stats_.begin(), stats_.end(),
                           [&](const auto& s) { return s.first == name; });
    if (it == stats_.end()) {
        stats_.emplace_back(name, value);
    } else {
        it->second += value;
    }
}

void DiscrepancyReport::merge(const DiscrepancyReport& other) {
    for (const auto& n : other.notes_) {
        if (std::find(notes_.begin(), notes_.end(), n) == notes_.end()) notes_.push_back(n);
    }
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
    for (const auto& [name, value] : other.stats_) add_stat(name, value);
}

std::size_t DiscrepancyReport::count(Tag tag) const {
    return static_cast<std::size_t>(std::count_if(
        entries_.begin(), entries_.end(), [tag](const auto& e) { return e.tag == tag; }));
}

std::optional<std::uint64_t> DiscrepancyReport::stat(std::string_view name) const {
    for (const auto& [n, v] : stats_) {
        if (n == name) return v;
    }
    return std::nullopt;
}

std::string DiscrepancyReport::serialize() const {
    std::ostringstream out;
    out << "# floordyn discrepancy report\n";
    for (const auto& n : notes_) out << "# " << n << "\n";
    out << "lambda\tx\ty\tsource_a\tsource_b\tvalue_a\tvalue_b\ttag\n";
    for (const auto& e : entries_) {
        out << e.lambda.str() << '\t' << e.x.str() << '\t' << e.y.str() << '\t' << e.source_a
            << '\t' << e.source_b << '\t' << e.value_a << '\t' << e.value_b << '\t'
            << to_string(e.tag) << '\n';
    }
    out << "[summary]\n";
    for (Tag tag : {Tag::Mismatch, Tag::KnownDiscrepancy, Tag::Uncovered}) {
        out << to_string(tag) << '=' << count(tag) << '\n';
    }
    for (const auto& [name, value] : stats_) out << name << '=' << value << '\n';
    return out.str();
}

// ------------------------------------------------------------ fixed points

DiscrepancyReport verify_fixed_points(const Rational& lambda, std::uint64_t window_radius) {
    DiscrepancyReport report;
    report.add_note(
        "fixed points of A have floor values as coordinates, so only lattice points are scanned");

    const BigInt r = window_radius;
    const std::size_t width = static_cast<std::size_t>(2 * window_radius + 1);
    std::vector<BigInt> f_of(width);
    for (std::size_t i = 0; i < width; ++i) {
        f_of[i] = floor_scale(lambda, Rational(BigInt(i) - r));
    }

    std::set<LatticePoint> found;
    for (std::size_t i = 0; i < width; ++i) {
        const BigInt x = BigInt(i) - r;
        for (std::size_t j = 0; j < width; ++j) {
            const BigInt y = BigInt(j) - r;
            if (x == f_of[j] && y == f_of[i]) found.insert({x, y});
        }
    }

    const FixSet closed = fixed_points(lambda);
    std::set<LatticePoint> expected;
    switch (closed.kind()) {
        case FixSet::Kind::Finite:
            for (const auto& p : closed.points()) {
                if (abs(p.x) <= r && abs(p.y) <= r) expected.insert(p);
            }
            break;
        case FixSet::Kind::AllDiagonal:
        case FixSet::Kind::AllAntiDiagonal:
            for (BigInt x = -r; x <= r; ++x) {
                const LatticePoint p{x, closed.kind() == FixSet::Kind::AllDiagonal ? x : BigInt(-x)};
                expected.insert(p);
            }
            break;
    }

    auto missing_from = [&](const std::set<LatticePoint>& a, const std::set<LatticePoint>& b,
                            const std::string& source_a, const std::string& source_b) {
        for (const auto& p : a) {
            if (b.count(p)) continue;
            report.add_entry({lambda, Rational(p.x), Rational(p.y), source_a, source_b, "fixed",
                              "absent", Tag::Mismatch});
        }
    };
    missing_from(found, expected, "brute_force", "closed_form");
    missing_from(expected, found, "closed_form", "brute_force");

    const std::string prefix = "fixed_points[" + lambda.str() + "]";
    report.add_stat(prefix + ".found", found.size());
    report.add_stat(prefix + ".expected", expected.size());
    return report;
}

// ------------------------------------------------------------------- omega

namespace {

bool is_known_mixed_shape(const TheoremCase& printed, const OmegaSet& simulated) {
    const OmegaSet mixed{{ExtInt::plus_inf(), ExtInt::minus_inf()},
                         {ExtInt::minus_inf(), ExtInt::plus_inf()}};
    return printed.case_id == "T1.3" && printed.omega == mixed && simulated.size() == 1 &&
           mixed.contains(simulated.points().front());
}

}  // namespace

DiscrepancyReport verify_omega(const GridSpec& grid, std::size_t max_steps) {
    DiscrepancyReport report;
    if (grid.lambdas.empty()) {
        return report;
    }
    const std::vector<Rational> axis = grid.axis();

    std::uint64_t cells = 0, covered = 0, agree = 0, overlaps = 0, conflicts = 0;
    for (const Rational& lambda : grid.lambdas) {
        for (const Rational& x : axis) {
            for (const Rational& y : axis) {
                ++cells;
                const Point z{x, y};
                const OmegaSet analytic = omega(lambda, z, OmegaMethod::Analytic);

                std::optional<OmegaSet> simulated;
                try {
                    simulated = omega(lambda, z, OmegaMethod::Simulate, max_steps);
                } catch (const BudgetError&) {
                    report.add_entry({lambda, x, y, "simulate", "analytic", "budget",
                                      analytic.str(), Tag::Mismatch});
                    continue;
                }
                if (*simulated != analytic) {
                    report.add_entry({lambda, x, y, "simulate", "analytic", simulated->str(),
                                      analytic.str(), Tag::Mismatch});
                }

                const std::vector<TheoremCase> cases = theorem_cases(lambda, z);
                if (cases.empty()) {
                    report.add_entry({lambda, x, y, "simulate", "theorem", simulated->str(),
                                      "uncovered", Tag::Uncovered});
                    continue;
                }
                ++covered;
                if (cases.size() > 1) {
                    ++overlaps;
                    const bool consistent =
                        std::all_of(cases.begin(), cases.end(),
                                    [&](const auto& c) { return c.omega == cases.front().omega; });
                    if (!consistent) ++conflicts;
                }

                const TheoremCase& printed = cases.front();
                if (printed.omega == *simulated) {
                    ++agree;
                    continue;
                }
                const Tag tag = is_known_mixed_shape(printed, *simulated) ? Tag::KnownDiscrepancy
                                                                          : Tag::Mismatch;
                report.add_entry({lambda, x, y, "simulate", "theorem:" + printed.case_id,
                                  simulated->str(), printed.omega.str(), tag});
            }
        }
    }
    report.add_stat("omega.cells", cells);
    report.add_stat("omega.theorem_covered", covered);
    report.add_stat("omega.theorem_agree", agree);
    report.add_stat("omega.theorem_overlap_points", overlaps);
    report.add_stat("omega.theorem_overlap_conflicts", conflicts);
    return report;
}

// ---------------------------------------------------------------- period 2

DiscrepancyReport verify_period2(std::uint64_t window_radius) {
    DiscrepancyReport report;
    const Rational lambda = -1;
    const BigInt r = window_radius;

    std::uint64_t points = 0, fixed = 0;
    for (BigInt x = -r; x <= r; ++x) {
        for (BigInt y = -r; y <= r; ++y) {
            ++points;
            const LatticePoint z{x, y};
            const LatticePoint once = apply_A(lambda, z);
            const LatticePoint twice = apply_A(lambda, once);
            if (twice != z) {
                report.add_entry({lambda, Rational(x), Rational(y), "A^2(z)", "z", twice.str(),
                                  z.str(), Tag::Mismatch});
            }
            const bool is_fixed = once == z;
            const bool antidiagonal = y == -x;
            if (is_fixed) ++fixed;
            if (is_fixed != antidiagonal) {
                report.add_entry({lambda, Rational(x), Rational(y), "A(z)", "antidiagonal",
                                  is_fixed ? "fixed" : "moved",
                                  antidiagonal ? "on" : "off", Tag::Mismatch});
            }
        }
    }
    report.add_stat("period2.points", points);
    report.add_stat("period2.fixed", fixed);
    return report;
}

}  // namespace floordyn
