#include "crindex.hpp"

#include <algorithm>
#include <cmath>

namespace fukalg {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTransversalityMargin = 1e-9;

// quadratic form <u(theta), a(t) u(theta)> with a linearly interpolated
double form(const SLProblem& p, double t, double theta) {
    if (p.constant) return p.angle0;
    std::size_t n = p.samples.size();
    double x = std::clamp(t, 0.0, 1.0) * static_cast<double>(n - 1);
    std::size_t i = std::min(static_cast<std::size_t>(x), n - 2);
    double w = x - static_cast<double>(i);
    double axx = (1 - w) * p.samples[i][0] + w * p.samples[i + 1][0];
    double axy = (1 - w) * p.samples[i][1] + w * p.samples[i + 1][1];
    double ayy = (1 - w) * p.samples[i][2] + w * p.samples[i + 1][2];
    double c = std::cos(theta), s = std::sin(theta);
    return axx * c * c + 2 * axy * c * s + ayy * s * s;
}

double form_bound(const SLProblem& p) {
    if (p.constant) return std::abs(p.angle0);
    double b = 0;
    for (const auto& a : p.samples)
        b = std::max(b, std::abs(a[0]) + 2 * std::abs(a[1]) + std::abs(a[2]));
    return b;
}

void check_transverse(const SLProblem& p) {
    double r = std::remainder(total_angle(p) - (p.theta1 - p.theta0), kPi);
    if (std::abs(r) < kTransversalityMargin)
        throw InputError("SLProblem: boundary lines are not transverse");
}

}  // namespace

void validate_sl(const SLProblem& p) {
    if (p.theta0 < 0 || p.theta0 >= kPi || p.theta1 < 0 || p.theta1 >= kPi)
        throw InputError("SLProblem: line angles must lie in [0, pi)");
    if (!p.constant && p.samples.size() < 2)
        throw InputError("SLProblem: sampled a_t needs at least two samples");
    if (p.constant && !p.samples.empty())
        throw InputError("SLProblem: constant problem carries samples");
}

double angle_defect(const SLProblem& p, double mu) {
    validate_sl(p);
    if (p.constant) return p.angle0 - mu;
    // theta' = <u(theta), a_t u(theta)> - mu, RK4 with fixed step
    std::size_t steps = std::max<std::size_t>(1000, 8 * (p.samples.size() - 1));
    double h = 1.0 / static_cast<double>(steps);
    double theta = p.theta0;
    for (std::size_t s = 0; s < steps; ++s) {
        double t = static_cast<double>(s) * h;
        double k1 = form(p, t, theta) - mu;
        double k2 = form(p, t + h / 2, theta + h / 2 * k1) - mu;
        double k3 = form(p, t + h / 2, theta + h / 2 * k2) - mu;
        double k4 = form(p, t + h, theta + h * k3) - mu;
        theta += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
    }
    return theta - p.theta0;
}

double total_angle(const SLProblem& p) { return angle_defect(p, 0.0); }

std::vector<Eigenvalue> spectrum_near_zero(const SLProblem& p, int k,
                                           double tol) {
    validate_sl(p);
    check_transverse(p);
    if (k <= 0) return {};
    double dtheta = p.theta1 - p.theta0;
    double ang = total_angle(p);
    double qb = form_bound(p);
    long j0 = std::lround((ang - dtheta) / kPi);

    std::vector<Eigenvalue> all;
    for (long j = j0 - (k + 3); j <= j0 + (k + 3); ++j) {
        double c = dtheta + static_cast<double>(j) * kPi;
        // angle_defect is strictly decreasing with slope -1 + bounded term
        double lo = -qb - c - 1, hi = qb - c + 1;
        int guard = 0;
        while (angle_defect(p, lo) <= c) {
            lo -= 1 + std::abs(lo);
            if (++guard > 60) throw NumericalError("spectrum: no lower bracket");
        }
        while (angle_defect(p, hi) >= c) {
            hi += 1 + std::abs(hi);
            if (++guard > 120) throw NumericalError("spectrum: no upper bracket");
        }
        int iter = 0;
        while (hi - lo > tol) {
            if (++iter > 200)
                throw NumericalError("spectrum: bisection budget exhausted");
            double mid = (lo + hi) / 2;
            (angle_defect(p, mid) > c ? lo : hi) = mid;
        }
        all.push_back({(lo + hi) / 2, c});
    }
    std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        return std::abs(a.mu) < std::abs(b.mu);
    });
    all.resize(static_cast<std::size_t>(k));
    std::sort(all.begin(), all.end(),
              [](const auto& a, const auto& b) { return a.mu < b.mu; });
    return all;
}

SLProblem relabel_output_as_input(const SLProblem& p) {
    SLProblem q = p;
    std::swap(q.theta0, q.theta1);
    q.angle0 = -q.angle0;
    std::reverse(q.samples.begin(), q.samples.end());
    for (auto& a : q.samples)
        for (double& e : a) e = -e;
    return q;
}

IndexResult cr_index(const CROperatorData& data, double tol) {
    double sum = 0;
    for (double a : data.arcs) sum += a;
    for (const End& e : data.ends) {
        validate_sl(e.problem);
        check_transverse(e.problem);
        double dtheta = e.problem.theta1 - e.problem.theta0;
        double ang = total_angle(e.problem);
        double j = std::floor((ang - dtheta) / kPi);
        if (e.input)
            sum += dtheta + j * kPi;  // largest lattice angle below ang
        else
            sum -= dtheta + (j + 1) * kPi;  // smallest one above, reversed
    }
    double deg_real = sum / kPi;
    long deg = std::lround(deg_real);
    if (std::abs(deg_real - static_cast<double>(deg)) > tol)
        throw InputError(
            "cr_index: boundary angle is not an integer multiple of pi");
    IndexResult out;
    out.deg = static_cast<int>(deg);
    out.index = data.euler + out.deg;
    out.injective = out.deg < 0;
    out.regular_if_index_zero = data.euler == 1 && out.index == 0;
    return out;
}

}  // namespace fukalg
