#include "floordyn/classifier.hpp"

#include <algorithm>

namespace floordyn {

std::string ExtLatticePoint::str() const { return "(" + x.str() + "," + y.str() + ")"; }

// ---------------------------------------------------------------- OmegaSet

OmegaSet::OmegaSet(std::initializer_list<ExtLatticePoint> points)
    : OmegaSet(std::vector<ExtLatticePoint>(points)) {}

OmegaSet::OmegaSet(std::vector<ExtLatticePoint> points) : points_(std::move(points)) {
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
    if (points_.empty()) {
        throw std::invalid_argument("omega set must be nonempty");
    }
}

bool OmegaSet::contains(const ExtLatticePoint& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

std::string OmegaSet::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (i) s += ",";
        s += points_[i].str();
    }
    return s + "}";
}

OmegaSet assemble_omega(const ParityLimits& x, const ParityLimits& y) {
    return OmegaSet{{x.even, y.even}, {y.odd, x.odd}};
}

// --------------------------------------------------------- parity limits

ParityLimits parity_limits_analytic(const Rational& lambda, const Rational& x0) {
    const ParamClass cls = classify_lambda(lambda);
    const ExtInt pinf = ExtInt::plus_inf();
    const ExtInt minf = ExtInt::minus_inf();

    switch (cls.regime) {
        case Regime::Zero:
        case Regime::NegShallow:
            return {0, 0};
        case Regime::One: {
            const BigInt v = floor(x0);
            return {v, v};
        }
        case Regime::NegOne: {
            const BigInt v = ceil(x0);
            return {v, BigInt(-v)};
        }
        case Regime::NegSteep: {
            if (x0.sign() > 0) return {pinf, minf};
            if (x0 <= Rational(1) / lambda) return {minf, pinf};
            return {0, 0};
        }
        case Regime::PosShallow: {
            if (x0.sign() >= 0) return {0, 0};
            const Rational bottom = Rational(-cls.m) / lambda;
            if (x0 < bottom) return {BigInt(-cls.m), BigInt(-cls.m)};
            const BigInt k = floor_scale(lambda, x0);  // in {-m, ..., -1}
            return {k, k};
        }
        case Regime::PosSteep: {
            if (x0.sign() < 0) return {minf, minf};
            if (x0 >= Rational(cls.m) / lambda) return {pinf, pinf};
            const BigInt k = floor_scale(lambda, x0);  // in {0, ..., m-1}
            return {k, k};
        }
    }
    throw std::logic_error("unhandled regime");
}

OmegaSet omega(const Rational& lambda, const Point& z, OmegaMethod method,
               std::size_t max_steps) {
    if (method == OmegaMethod::Analytic) {
        return assemble_omega(parity_limits_analytic(lambda, z.x),
                              parity_limits_analytic(lambda, z.y));
    }

    if (max_steps == 0) {
        max_steps = default_budget(lambda, z);
    }
    const OrbitTrace trace = iterate_orbit(lambda, z, max_steps);
    if (const auto* fp = std::get_if<FixedPointVerdict>(&trace.verdict)) {
        return OmegaSet{{fp->point.x, fp->point.y}};
    }
    if (const auto* cycle = std::get_if<TwoCycleVerdict>(&trace.verdict)) {
        return OmegaSet{{cycle->p.x, cycle->p.y}, {cycle->q.x, cycle->q.y}};
    }
    if (const auto* div = std::get_if<DivergentVerdict>(&trace.verdict)) {
        return assemble_omega(div->x_parity, div->y_parity);
    }
    std::vector<Rational> partial{z.x, z.y};
    throw BudgetError("orbit of (" + z.x.str() + "," + z.y.str() + ") at lambda=" +
                          lambda.str() + " unresolved after " + std::to_string(max_steps) +
                          " steps",
                      std::move(partial));
}

// ------------------------------------------------------------ fixed points

FixSet FixSet::finite(std::vector<LatticePoint> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return FixSet(Kind::Finite, std::move(points));
}

bool FixSet::contains(const LatticePoint& p) const {
    switch (kind_) {
        case Kind::AllDiagonal: return p.x == p.y;
        case Kind::AllAntiDiagonal: return p.y == -p.x;
        case Kind::Finite: break;
    }
    return std::binary_search(points_.begin(), points_.end(), p);
}

std::string FixSet::str() const {
    switch (kind_) {
        case Kind::AllDiagonal: return "diagonal lattice {(m,m) | m in Z}";
        case Kind::AllAntiDiagonal: return "antidiagonal lattice {(m,-m) | m in Z}";
        case Kind::Finite: break;
    }
    std::string s = "{";
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (i) s += ",";
        s += points_[i].str();
    }
    return s + "}";
}

FixSet fixed_points(const Rational& lambda) {
    const ParamClass cls = classify_lambda(lambda);
    std::vector<LatticePoint> points;
    switch (cls.regime) {
        case Regime::NegOne: return FixSet::all_antidiagonal();
        case Regime::One: return FixSet::all_diagonal();
        case Regime::NegSteep:
        case Regime::NegShallow:
        case Regime::Zero:
            points.push_back({0, 0});
            break;
        case Regime::PosShallow:
            for (BigInt v = 0; v >= -cls.m; --v) points.push_back({v, v});
            break;
        case Regime::PosSteep:
            for (BigInt v = 0; v < cls.m; ++v) points.push_back({v, v});
            break;
    }
    return FixSet::finite(std::move(points));
}

// --------------------------------------------------------- printed regions

namespace {

const ExtInt kPlusInf = ExtInt::plus_inf();
const ExtInt kMinusInf = ExtInt::minus_inf();

// The k for which k/lambda <= v < (k+1)/lambda (lambda > 0), if it lies in
// [lo, hi]. The candidate comes from the floor of lambda*v; membership is
// then checked against the interval endpoints themselves.
std::optional<BigInt> interval_index(const Rational& lambda, const Rational& v,
                                     const BigInt& lo, const BigInt& hi) {
    const BigInt k = floor(lambda * v);
    if (k < lo || k > hi) return std::nullopt;
    if (Rational(k) / lambda <= v && v < Rational(k + 1) / lambda) return k;
    return std::nullopt;
}

void negative_cases(const Rational& lambda, const ParamClass& cls, const Point& z,
                    std::vector<TheoremCase>& out) {
    const Rational& x = z.x;
    const Rational& y = z.y;
    if (cls.regime == Regime::NegShallow) {
        out.push_back({OmegaSet{{0, 0}}, "T1.1"});
        return;
    }
    if (cls.regime == Regime::NegOne) {
        if (x.is_integer() && y.is_integer()) {
            const LatticePoint a = apply_A(lambda, z);
            out.push_back({OmegaSet{{x.num(), y.num()}, {a.x, a.y}}, "T1.2"});
        } else {
            const LatticePoint a = apply_A(lambda, z);
            const LatticePoint a2 = apply_A(lambda, a);
            out.push_back({OmegaSet{{a.x, a.y}, {a2.x, a2.y}}, "T1.2"});
        }
        return;
    }

    // lambda < -1: trap box 1/lambda < x, y <= 0. Only strict quadrants with
    // both coordinates outside the box's interval are covered; a point with
    // one coordinate inside that interval and the other outside is left
    // uncovered.
    const Rational edge = Rational(1) / lambda;
    auto in_box = [&](const Rational& v) { return edge < v && v.sign() <= 0; };
    if (in_box(x) && in_box(y)) {
        out.push_back({OmegaSet{{0, 0}}, "T1.3"});
        return;
    }
    if (in_box(x) || in_box(y) || x.sign() == 0 || y.sign() == 0) {
        return;
    }
    if (x.sign() == y.sign()) {
        out.push_back({OmegaSet{{kPlusInf, kPlusInf}, {kMinusInf, kMinusInf}}, "T1.3"});
    } else {
        // As printed; direct iteration stays in the starting mixed quadrant.
        out.push_back({OmegaSet{{kPlusInf, kMinusInf}, {kMinusInf, kPlusInf}}, "T1.3"});
    }
}

void shallow_cases(const Rational& lambda, const ParamClass& cls, const Point& z,
                   std::vector<TheoremCase>& out) {
    const Rational& x = z.x;
    const Rational& y = z.y;
    const BigInt neg_m = -cls.m;
    const Rational below_m = Rational(neg_m) / lambda;            // -m/lambda
    const Rational below_m1 = Rational(neg_m + 1) / lambda;       // (-m+1)/lambda
    const auto kx = interval_index(lambda, x, neg_m, BigInt(-1));
    const auto ky = interval_index(lambda, y, neg_m, BigInt(-1));
    const bool x_nonneg = x.sign() >= 0;
    const bool y_nonneg = y.sign() >= 0;

    if (x_nonneg && y_nonneg) {
        out.push_back({OmegaSet{{0, 0}}, "T2.1"});
    }
    if (kx && y_nonneg) {
        out.push_back({OmegaSet{{*kx, 0}, {0, *kx}}, "T2.2"});
    } else if (ky && x_nonneg) {
        out.push_back({OmegaSet{{*ky, 0}, {0, *ky}}, "T2.2"});
    }
    if ((x < below_m && y_nonneg) || (y < below_m && x_nonneg)) {
        out.push_back({OmegaSet{{neg_m, 0}, {0, neg_m}}, "T2.3"});
    }
    if (x < below_m1 && y < below_m1) {
        out.push_back({OmegaSet{{neg_m, neg_m}}, "T2.4"});
    }
    if (kx && ky) {
        out.push_back({OmegaSet{{*kx, *ky}, {*ky, *kx}}, "T2.5"});
    }
    if (x < below_m1 && ky) {
        out.push_back({OmegaSet{{*ky, neg_m}, {neg_m, *ky}}, "T2.6"});
    } else if (kx && y < below_m1) {
        out.push_back({OmegaSet{{*kx, neg_m}, {neg_m, *kx}}, "T2.6"});
    }
}

void steep_cases(const Rational& lambda, const ParamClass& cls, const Point& z,
                 std::vector<TheoremCase>& out) {
    const Rational& x = z.x;
    const Rational& y = z.y;
    const Rational top = Rational(cls.m) / lambda;  // m/lambda
    const auto kx = interval_index(lambda, x, BigInt(0), BigInt(cls.m - 1));
    const auto ky = interval_index(lambda, y, BigInt(0), BigInt(cls.m - 1));
    const bool x_neg = x.sign() < 0;
    const bool y_neg = y.sign() < 0;

    if (kx && y_neg) {
        out.push_back({OmegaSet{{*kx, kMinusInf}, {kMinusInf, *kx}}, "T3.1"});
    } else if (ky && x_neg) {
        out.push_back({OmegaSet{{*ky, kMinusInf}, {kMinusInf, *ky}}, "T3.1"});
    }
    if ((x_neg && y >= top) || (y_neg && x >= top)) {
        out.push_back({OmegaSet{{kPlusInf, kMinusInf}, {kMinusInf, kPlusInf}}, "T3.2"});
    }
    if (kx && ky) {
        out.push_back({OmegaSet{{*kx, *ky}, {*ky, *kx}}, "T3.3"});
    }
    if (kx && y >= top) {
        out.push_back({OmegaSet{{*kx, kPlusInf}, {kPlusInf, *kx}}, "T3.4"});
    } else if (ky && x >= top) {
        out.push_back({OmegaSet{{*ky, kPlusInf}, {kPlusInf, *ky}}, "T3.4"});
    }
    if (x_neg && y_neg) {
        out.push_back({OmegaSet{{kMinusInf, kMinusInf}}, "T3.5"});
    }
    if (x >= top && y >= top) {
        out.push_back({OmegaSet{{kPlusInf, kPlusInf}}, "T3.6"});
    }
}

}  // namespace

std::vector<TheoremCase> theorem_cases(const Rational& lambda, const Point& z) {
    const ParamClass cls = classify_lambda(lambda);
    std::vector<TheoremCase> out;
    switch (cls.regime) {
        case Regime::Zero:
            break;
        case Regime::NegSteep:
        case Regime::NegOne:
        case Regime::NegShallow:
            negative_cases(lambda, cls, z, out);
            break;
        case Regime::PosShallow:
            shallow_cases(lambda, cls, z, out);
            break;
        case Regime::One: {
            const BigInt fx = floor(z.x);
            const BigInt fy = floor(z.y);
            out.push_back({OmegaSet{{fx, fy}, {fy, fx}}, "T3.lambda1"});
            break;
        }
        case Regime::PosSteep:
            steep_cases(lambda, cls, z, out);
            break;
    }
    return out;
}

std::optional<TheoremCase> theorem_omega(const Rational& lambda, const Point& z) {
    auto cases = theorem_cases(lambda, z);
    if (cases.empty()) return std::nullopt;
    return std::move(cases.front());
}

}  // namespace floordyn
