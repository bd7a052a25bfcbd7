#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "floordyn/dynamics.hpp"
#include "oracles.hpp"

using floordyn::BigInt;
using floordyn::ExtInt;
using floordyn::LatticePoint;
using floordyn::ParityLimits;
using floordyn::Point;
using floordyn::Rational;

namespace {

Rational q(long long n, long long d = 1) { return Rational(BigInt(n), BigInt(d)); }

const ExtInt pinf = ExtInt::plus_inf();
const ExtInt minf = ExtInt::minus_inf();

}  // namespace

TEST_CASE("apply_f examples") {
    CHECK(floordyn::apply_f(q(-1, 2), q(73, 10)) == -4);
    CHECK(floordyn::apply_f(q(-1), q(-3)) == 3);
    CHECK(floordyn::apply_f(q(1, 2), q(-1)) == -1);
}

TEST_CASE("apply_A examples") {
    // trap box of lambda = -2 maps to the origin
    CHECK(floordyn::apply_A(q(-2), Point{q(-3, 10), q(-1, 4)}) == LatticePoint{0, 0});
    CHECK(floordyn::apply_A(q(1), Point{q(5, 2), q(-6, 5)}) == LatticePoint{-2, 2});
    CHECK(floordyn::apply_A(q(-1), Point{q(3), q(-3)}) == LatticePoint{3, -3});
}

TEST_CASE("iterate_orbit: contraction to the origin") {
    const auto trace = floordyn::iterate_orbit(q(-1, 2), Point{q(73, 10), q(-4)}, 100);
    const std::vector<LatticePoint> expected{{2, -4}, {2, -1}, {0, -1}, {0, 0}};
    CHECK(trace.steps == expected);
    const auto* fp = std::get_if<floordyn::FixedPointVerdict>(&trace.verdict);
    REQUIRE(fp);
    CHECK(fp->point == LatticePoint{0, 0});
    CHECK(fp->entry_step == 4);
    CHECK(trace.steps_used == 4);
}

TEST_CASE("iterate_orbit: period two at lambda = -1") {
    const auto trace = floordyn::iterate_orbit(q(-1), Point{q(23, 10), q(1)}, 100);
    const auto* cycle = std::get_if<floordyn::TwoCycleVerdict>(&trace.verdict);
    REQUIRE(cycle);
    CHECK(cycle->p == LatticePoint{-1, -3});
    CHECK(cycle->q == LatticePoint{3, 1});
    CHECK(cycle->entry_step == 1);
}

TEST_CASE("iterate_orbit: certified divergence") {
    const auto trace = floordyn::iterate_orbit(q(2), Point{q(-1), q(3)}, 100);
    REQUIRE(!trace.steps.empty());
    CHECK(trace.steps.front() == LatticePoint{6, -2});
    const auto* div = std::get_if<floordyn::DivergentVerdict>(&trace.verdict);
    REQUIRE(div);
    CHECK(div->x_parity == ParityLimits{minf, minf});
    CHECK(div->y_parity == ParityLimits{pinf, pinf});

    // certification waits for a converging coordinate to settle
    const auto mixed = floordyn::iterate_orbit(q(5, 4), Point{q(-3), q(3)}, 100);
    const auto* d2 = std::get_if<floordyn::DivergentVerdict>(&mixed.verdict);
    REQUIRE(d2);
    CHECK(d2->x_parity == ParityLimits{minf, minf});
    CHECK(d2->y_parity == ParityLimits{3, 3});
}

TEST_CASE("iterate_orbit: budget exhaustion is a verdict") {
    const auto trace = floordyn::iterate_orbit(q(99, 100), Point{q(-10000), q(-10000)}, 5);
    CHECK(std::holds_alternative<floordyn::BudgetExhaustedVerdict>(trace.verdict));
    CHECK(trace.steps.size() == 5);
    CHECK_THROWS_AS(floordyn::iterate_orbit(q(1), Point{q(0), q(0)}, 0), std::invalid_argument);
}

TEST_CASE("parity_limits_simulated examples") {
    // frozen values, each confirmed by the brute-force iteration oracle
    CHECK(oracle::str(oracle::naive_parity({-1, 1}, {23, 10})) == "3,-3");
    CHECK(oracle::str(oracle::naive_parity({3, 4}, {-10, 1})) == "-3,-3");
    CHECK(oracle::str(oracle::naive_parity({-2, 1}, {1, 1})) == "+inf,-inf");

    CHECK(floordyn::parity_limits_simulated(q(-1), q(23, 10), 100) == ParityLimits{3, -3});
    CHECK(floordyn::parity_limits_simulated(q(3, 4), q(-10), 100) == ParityLimits{-3, -3});
    CHECK(floordyn::parity_limits_simulated(q(-2), q(1), 100) == ParityLimits{pinf, minf});
}

TEST_CASE("parity_limits_simulated budget error carries the partial orbit") {
    try {
        floordyn::parity_limits_simulated(q(99, 100), q(-10000), 3);
        FAIL("expected BudgetError");
    } catch (const floordyn::BudgetError& e) {
        REQUIRE(e.partial_orbit().size() == 4);
        CHECK(e.partial_orbit()[0] == q(-10000));
        CHECK(e.partial_orbit()[1] == q(-9900));
    }
}

TEST_CASE("default budget covers slow contraction") {
    const Rational lambda = q(99, 100);
    const Rational x0 = q(-10000);
    // 78 steps (64 + bit length) is not enough here; the default must be.
    CHECK_THROWS_AS(floordyn::parity_limits_simulated(lambda, x0, 78), floordyn::BudgetError);
    CHECK(floordyn::parity_limits_simulated(lambda, x0, floordyn::default_budget(lambda, x0)) ==
          ParityLimits{-99, -99});

    const Rational neg = q(-999, 1000);
    const Rational start = q(123456789);
    const auto limits =
        floordyn::parity_limits_simulated(neg, start, floordyn::default_budget(neg, start));
    CHECK(limits == ParityLimits{0, 0});
}

TEST_CASE("parity simulation agrees with brute-force iteration") {
    oracle::RationalGen gen(21);
    for (int i = 0; i < 3000; ++i) {
        const auto l = gen.next(48, 12);
        const auto x = gen.next(400, 9);
        const Rational lambda = oracle::to_rational(l);
        const Rational x0 = oracle::to_rational(x);
        const auto limits =
            floordyn::parity_limits_simulated(lambda, x0, floordyn::default_budget(lambda, x0));
        INFO("lambda=", lambda.str(), " x0=", x0.str());
        REQUIRE(oracle::str(limits) == oracle::str(oracle::naive_parity(l, x)));
        // never one finite and one infinite tail
        REQUIRE(limits.even.is_finite() == limits.odd.is_finite());
    }
}

TEST_CASE("decoupling: even iterates act coordinatewise, odd iterates swap") {
    oracle::RationalGen gen(5);
    for (int i = 0; i < 400; ++i) {
        const Rational lambda = oracle::to_rational(gen.next(30, 8));
        const Point z{oracle::to_rational(gen.next(200, 7)), oracle::to_rational(gen.next(200, 7))};

        Rational fx = z.x, fy = z.y;  // f^n(x0), f^n(y0)
        LatticePoint a = floordyn::apply_A(lambda, z);
        const auto trace = floordyn::iterate_orbit(lambda, z, 12);
        for (std::size_t n = 1; n <= 12; ++n) {
            fx = floordyn::apply_f(lambda, fx);
            fy = floordyn::apply_f(lambda, fy);
            const LatticePoint expected =
                n % 2 == 0 ? LatticePoint{fx.num(), fy.num()} : LatticePoint{fy.num(), fx.num()};
            REQUIRE(a == expected);
            if (n <= trace.steps.size()) REQUIRE(trace.steps[n - 1] == expected);
            a = floordyn::apply_A(lambda, a);
        }
    }
}

TEST_CASE("swap symmetry and lattice image") {
    oracle::RationalGen gen(9);
    for (int i = 0; i < 2000; ++i) {
        const Rational lambda = oracle::to_rational(gen.next(40, 9));
        const Rational x = oracle::to_rational(gen.next(300, 11));
        const Rational y = oracle::to_rational(gen.next(300, 11));
        const LatticePoint a = floordyn::apply_A(lambda, Point{x, y});
        const LatticePoint b = floordyn::apply_A(lambda, Point{y, x});
        REQUIRE(a == LatticePoint{b.y, b.x});
        REQUIRE(floordyn::apply_A(lambda, a) == floordyn::apply_A(lambda, floordyn::lift(a)));
    }
}

TEST_CASE("orbit trace invariants") {
    oracle::RationalGen gen(13);
    for (int i = 0; i < 1000; ++i) {
        const Rational lambda = oracle::to_rational(gen.next(40, 10));
        const Point z{oracle::to_rational(gen.next(300, 7)), oracle::to_rational(gen.next(300, 7))};
        const auto trace = floordyn::iterate_orbit(lambda, z, floordyn::default_budget(lambda, z));
        REQUIRE(!trace.steps.empty());
        REQUIRE(trace.steps.front() == floordyn::apply_A(lambda, z));
        for (std::size_t s = 1; s < trace.steps.size(); ++s) {
            REQUIRE(trace.steps[s] == floordyn::apply_A(lambda, trace.steps[s - 1]));
        }
        std::visit(
            [&](const auto& v) {
                using V = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<V, floordyn::FixedPointVerdict>) {
                    REQUIRE(floordyn::apply_A(lambda, v.point) == v.point);
                    REQUIRE(trace.steps[v.entry_step - 1] == v.point);
                } else if constexpr (std::is_same_v<V, floordyn::TwoCycleVerdict>) {
                    REQUIRE(v.p != v.q);
                    REQUIRE(floordyn::apply_A(lambda, v.p) == v.q);
                    REQUIRE(floordyn::apply_A(lambda, v.q) == v.p);
                } else if constexpr (std::is_same_v<V, floordyn::DivergentVerdict>) {
                    REQUIRE(!(v.x_parity.finite() && v.y_parity.finite()));
                } else {
                    FAIL("budget exhausted for lambda=" << lambda.str());
                }
            },
            trace.verdict);
    }
}

TEST_CASE("lambda = -1: f(f(x)) = ceil(x)") {
    const Rational minus_one = q(-1);
    oracle::RationalGen gen(17);
    for (int i = 0; i < 1000; ++i) {
        const Rational x = oracle::to_rational(gen.next(1000, 13));
        const BigInt ffx = floordyn::apply_f(minus_one, floordyn::apply_f(minus_one, x));
        REQUIRE(ffx == floordyn::ceil(x));
    }
    for (int n = -50; n <= 50; ++n) {
        CHECK(floordyn::apply_f(minus_one, floordyn::apply_f(minus_one, q(n))) == n);
    }
}

TEST_CASE("certify stopping rules") {
    const auto steep = floordyn::classify_lambda(q(5, 4));  // m = 4
    CHECK(floordyn::certify(q(5, 4), steep, 4, 1) == ParityLimits{pinf, pinf});
    CHECK(floordyn::certify(q(5, 4), steep, -1, 1) == ParityLimits{minf, minf});
    CHECK(floordyn::certify(q(5, 4), steep, 3, 1) == ParityLimits{3, 3});

    const auto neg = floordyn::classify_lambda(q(-3, 2));
    CHECK(floordyn::certify(q(-3, 2), neg, 5, 2) == ParityLimits{pinf, minf});
    CHECK(floordyn::certify(q(-3, 2), neg, 5, 3) == ParityLimits{minf, pinf});
    CHECK(floordyn::certify(q(-3, 2), neg, 0, 3) == ParityLimits{0, 0});

    const auto shallow = floordyn::classify_lambda(q(-1, 2));
    CHECK_FALSE(floordyn::certify(q(-1, 2), shallow, 7, 0).has_value());
}
