/*
 * Copyright 2026 The qwent Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cmath>
#include <utility>

namespace qwent::detail {

struct RootResult {
    double x = 0.0;
    double fx = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Bracketing root finder: Illinois-modified regula falsi with a bisection
// step whenever three consecutive updates failed to halve the bracket.
// Requires f(lo) and f(hi) of opposite sign (either may be +-inf).
template <class F>
RootResult bracketed_root(F&& f, double lo, double hi, double f_lo, double f_hi, double x_tol, double f_tol,
                          int max_iterations = 400)
{
    RootResult r;
    if (f_lo == 0.0) {
        return {lo, 0.0, 0, true};
    }
    if (f_hi == 0.0) {
        return {hi, 0.0, 0, true};
    }
    double a = lo;
    double b = hi;
    double fa = f_lo;
    double fb = f_hi;
    int side = 0;
    int since_checkpoint = 0;
    double checkpoint_width = std::abs(b - a);
    bool force_bisect = false;
    for (int it = 1; it <= max_iterations; ++it) {
        double x = 0.5 * (a + b);
        if (!force_bisect && std::isfinite(fa) && std::isfinite(fb)) {
            const double secant = (a * fb - b * fa) / (fb - fa);
            if (secant > std::min(a, b) && secant < std::max(a, b)) {
                x = secant;
            }
        }
        const double fx = f(x);
        r = {x, fx, it, false};
        if (fx == 0.0 || std::abs(fx) < f_tol) {
            r.converged = true;
            return r;
        }
        if ((fx < 0.0) == (fb < 0.0)) {
            b = x;
            fb = fx;
            if (side == -1) {
                fa *= 0.5;
            }
            side = -1;
        } else {
            a = x;
            fa = fx;
            if (side == +1) {
                fb *= 0.5;
            }
            side = +1;
        }
        if (std::abs(b - a) <= x_tol) {
            r.converged = true;
            return r;
        }
        force_bisect = false;
        if (++since_checkpoint == 3) {
            force_bisect = std::abs(b - a) > 0.5 * checkpoint_width;
            checkpoint_width = std::abs(b - a);
            since_checkpoint = 0;
        }
    }
    return r;
}

}  // namespace qwent::detail
