#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

namespace dcf::ode {

// y' = f(t, y), fixed small dimension handled via std::vector.
using Rhs = std::function<void(double t, const std::vector<double>& y,
                               std::vector<double>& dydt)>;

enum class StepStatus { Ok, EventHit, StepCollapse };

struct Options {
    double rel_tol = 1e-10;
    double abs_tol = 1e-10;
    double max_step = std::numeric_limits<double>::infinity();
    double initial_step = 0.0;  // 0 = auto
    // Optional terminal event: stop when event(t, y) crosses zero from above.
    std::function<double(double, const std::vector<double>&)> event;
};

// One accepted step of the DOPRI5 dense interpolant.
struct DenseSegment {
    double t0 = 0.0, h = 0.0;
    std::vector<double> r1, r2, r3, r4, r5;

    void eval(double t, std::vector<double>& y) const {
        const double th = (t - t0) / h;
        const double th1 = 1.0 - th;
        y.resize(r1.size());
        for (std::size_t i = 0; i < r1.size(); ++i)
            y[i] = r1[i] + th * (r2[i] + th1 * (r3[i] + th * (r4[i] + th1 * r5[i])));
    }
};

struct Solution {
    StepStatus status = StepStatus::Ok;
    std::vector<double> times;               // accepted step endpoints, times[0] = t_begin
    std::vector<std::vector<double>> states; // matching states
    std::vector<DenseSegment> dense;         // dense[i] covers [times[i], times[i+1]]
    double event_time = 0.0;
    std::size_t n_steps = 0, n_rejected = 0;

    double t_end() const { return times.back(); }

    // Dense evaluation; clamps to the covered span. Accepted times are
    // monotone in the direction of integration (either order).
    void eval(double t, std::vector<double>& y) const {
        if (dense.empty()) { y = states.front(); return; }
        std::size_t idx;
        if (times.back() >= times.front()) {
            auto it = std::upper_bound(times.begin(), times.end() - 1, t);
            idx = (it == times.begin()) ? 0 : static_cast<std::size_t>(it - times.begin()) - 1;
        } else {
            auto it = std::upper_bound(times.begin(), times.end() - 1, t,
                                       std::greater<double>());
            idx = (it == times.begin()) ? 0 : static_cast<std::size_t>(it - times.begin()) - 1;
        }
        if (idx >= dense.size()) idx = dense.size() - 1;
        dense[idx].eval(t, y);
    }
};

namespace detail {

// Dormand-Prince 5(4) tableau.
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                 a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0,
                 a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                 a65 = -5103.0 / 18656.0;
constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0, a74 = 125.0 / 192.0,
                 a75 = -2187.0 / 6784.0, a76 = 11.0 / 84.0;
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                 e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
constexpr double d1 = -12715105075.0 / 11282082432.0,
                 d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0,
                 d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0,
                 d7 = 69997945.0 / 29380423.0;

}  // namespace detail

// Integrate from t_begin to t_end (either direction), recording every
// accepted step.
inline Solution integrate(const Rhs& f, double t_begin, double t_end,
                          const std::vector<double>& y0, const Options& opt) {
    using namespace detail;
    const double dir = (t_end >= t_begin) ? 1.0 : -1.0;
    const std::size_t n = y0.size();
    Solution sol;
    sol.times.push_back(t_begin);
    sol.states.push_back(y0);

    std::vector<double> y = y0, ynew(n), k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ytmp(n);
    double t = t_begin;
    f(t, y, k1);

    double h = opt.initial_step;
    if (h <= 0.0) {
        // crude starter; the controller fixes it within a step or two
        double ynorm = 0.0, fnorm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            ynorm = std::max(ynorm, std::abs(y[i]));
            fnorm = std::max(fnorm, std::abs(k1[i]));
        }
        h = (fnorm > 0.0) ? 0.01 * std::max(ynorm, 1.0) / fnorm : 1e-3;
        h = std::min(h, std::abs(t_end - t_begin) * 0.1);
        h = std::max(h, 1e-10);
    }
    h = std::min(h, opt.max_step);

    double prev_event = opt.event ? opt.event(t, y) : 1.0;

    while ((t_end - t) * dir > 0.0) {
        h = std::min(h, std::abs(t_end - t));
        const double hmin = 16.0 * std::numeric_limits<double>::epsilon() *
                            std::max(std::abs(t), 1.0);
        if (h < hmin) {
            sol.status = StepStatus::StepCollapse;
            return sol;
        }
        const double hs = dir * h;

        for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + hs * a21 * k1[i];
        f(t + hs / 5.0, ytmp, k2);
        for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + hs * (a31 * k1[i] + a32 * k2[i]);
        f(t + 3.0 * hs / 10.0, ytmp, k3);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + hs * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        f(t + 4.0 * hs / 5.0, ytmp, k4);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + hs * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        f(t + 8.0 * hs / 9.0, ytmp, k5);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + hs * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                                  a65 * k5[i]);
        f(t + hs, ytmp, k6);
        for (std::size_t i = 0; i < n; ++i)
            ynew[i] = y[i] + hs * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] + a75 * k5[i] +
                                  a76 * k6[i]);
        f(t + hs, ynew, k7);

        double err = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double ei = hs * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                   e6 * k6[i] + e7 * k7[i]);
            const double sc = opt.abs_tol +
                              opt.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            err += (ei / sc) * (ei / sc);
        }
        err = std::sqrt(err / static_cast<double>(n));

        if (err <= 1.0) {
            DenseSegment seg;
            seg.t0 = t;
            seg.h = hs;
            seg.r1 = y;
            seg.r2.resize(n);
            seg.r3.resize(n);
            seg.r4.resize(n);
            seg.r5.resize(n);
            for (std::size_t i = 0; i < n; ++i) {
                const double dy = ynew[i] - y[i];
                const double bspl = hs * k1[i] - dy;
                seg.r2[i] = dy;
                seg.r3[i] = bspl;
                seg.r4[i] = dy - hs * k7[i] - bspl;
                seg.r5[i] = hs * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                                 d6 * k6[i] + d7 * k7[i]);
            }

            const double tnew = t + hs;
            if (opt.event) {
                const double ev = opt.event(tnew, ynew);
                if (ev <= 0.0 && prev_event > 0.0) {
                    // bisect on dense output for the crossing time
                    double lo = t, hi = tnew;
                    std::vector<double> ymid(n);
                    for (int it = 0; it < 80 && std::abs(hi - lo) > hmin; ++it) {
                        const double mid = 0.5 * (lo + hi);
                        seg.eval(mid, ymid);
                        (opt.event(mid, ymid) > 0.0 ? lo : hi) = mid;
                    }
                    seg.eval(hi, ymid);
                    sol.dense.push_back(seg);
                    sol.times.push_back(hi);
                    sol.states.push_back(ymid);
                    sol.status = StepStatus::EventHit;
                    sol.event_time = hi;
                    return sol;
                }
                prev_event = ev;
            }

            sol.dense.push_back(std::move(seg));
            t = tnew;
            y = ynew;
            k1 = k7;  // FSAL
            sol.times.push_back(t);
            sol.states.push_back(y);
            ++sol.n_steps;
        } else {
            ++sol.n_rejected;
        }

        double fac = 0.9 * std::pow(std::max(err, 1e-16), -0.2);
        fac = std::clamp(fac, 0.2, 5.0);
        h = std::min(h * fac, opt.max_step);
    }
    return sol;
}

}  // namespace dcf::ode
