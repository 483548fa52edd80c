// Copyright 2026 The qadvice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qadvice/qrac.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "qadvice/config.h"

namespace qadvice {

namespace {

using Vec3 = BlochVector;

Vec3 sub(const Vec3 &a, const Vec3 &b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
Vec3 add_scaled(const Vec3 &a, const Vec3 &b, double t) {
    return {a[0] + t * b[0], a[1] + t * b[1], a[2] + t * b[2]};
}
double dot(const Vec3 &a, const Vec3 &b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
Vec3 cross(const Vec3 &a, const Vec3 &b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double length(const Vec3 &a) {
    return std::sqrt(dot(a, a));
}

Vec3 closest_on_segment(const Vec3 &a, const Vec3 &b) {
    Vec3 d = sub(b, a);
    double dd = dot(d, d);
    if (dd == 0) {
        return a;
    }
    double t = std::clamp(-dot(a, d) / dd, 0.0, 1.0);
    return add_scaled(a, d, t);
}

/// Minimum-norm point of the convex hull of at most three points.
Vec3 min_norm_point(const std::vector<Vec3> &pts) {
    Vec3 best = pts[0];
    auto consider = [&](const Vec3 &v) {
        if (length(v) < length(best)) {
            best = v;
        }
    };
    for (const auto &p : pts) {
        consider(p);
    }
    for (size_t i = 0; i < pts.size(); i++) {
        for (size_t j = i + 1; j < pts.size(); j++) {
            consider(closest_on_segment(pts[i], pts[j]));
        }
    }
    if (pts.size() == 3) {
        // Projection of the origin onto the triangle's plane, if it lands inside.
        Vec3 e1 = sub(pts[1], pts[0]);
        Vec3 e2 = sub(pts[2], pts[0]);
        double a11 = dot(e1, e1), a12 = dot(e1, e2), a22 = dot(e2, e2);
        double b1 = -dot(pts[0], e1), b2 = -dot(pts[0], e2);
        double det = a11 * a22 - a12 * a12;
        if (std::abs(det) > 1e-14) {
            double s = (b1 * a22 - b2 * a12) / det;
            double t = (a11 * b2 - a12 * b1) / det;
            if (s >= 0 && t >= 0 && s + t <= 1) {
                consider(add_scaled(add_scaled(pts[0], e1, s), e2, t));
            }
        }
    }
    return best;
}

/// A unit vector r maximizing min_i c_i . r, and that maximum.
std::pair<Vec3, double> best_codeword(const std::vector<Vec3> &signed_axes) {
    Vec3 v = min_norm_point(signed_axes);
    double len = length(v);
    if (len > 1e-12) {
        return {{v[0] / len, v[1] / len, v[2] / len}, len};
    }
    // The origin is in the hull; the axes are coplanar, so their normal scores 0 on each.
    for (size_t i = 0; i < signed_axes.size(); i++) {
        for (size_t j = i + 1; j < signed_axes.size(); j++) {
            Vec3 c = cross(signed_axes[i], signed_axes[j]);
            double cl = length(c);
            if (cl > 1e-9) {
                return {{c[0] / cl, c[1] / cl, c[2] / cl}, 0.0};
            }
        }
    }
    Vec3 a = signed_axes[0];
    Vec3 helper = std::abs(a[0]) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    Vec3 c = cross(a, helper);
    double cl = length(c);
    return {{c[0] / cl, c[1] / cl, c[2] / cl}, 0.0};
}

Vec3 axis_from_angles(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

struct AxisEvaluation {
    double worst;
    std::vector<Vec3> codewords;
};

AxisEvaluation evaluate_axes(size_t n, const std::vector<double> &angles) {
    std::vector<Vec3> axes;
    for (size_t i = 0; i < n; i++) {
        axes.push_back(axis_from_angles(angles[2 * i], angles[2 * i + 1]));
    }
    AxisEvaluation e{1.0, {}};
    std::vector<Vec3> signed_axes(n);
    for (uint64_t xi = 0; xi < (uint64_t{1} << n); xi++) {
        auto x = BitString::from_index(xi, n);
        for (size_t i = 0; i < n; i++) {
            double s = x[i] ? -1 : 1;
            signed_axes[i] = {s * axes[i][0], s * axes[i][1], s * axes[i][2]};
        }
        auto [r, margin] = best_codeword(signed_axes);
        e.codewords.push_back(r);
        e.worst = std::min(e.worst, (1 + margin) / 2);
    }
    return e;
}

RacScheme scheme_from_bloch(size_t n, const std::vector<Vec3> &codewords, const std::vector<Vec3> &axes) {
    RacScheme s;
    s.n = n;
    s.m = 1;
    for (const auto &r : codewords) {
        s.codewords.push_back(bloch_state(r));
    }
    for (const auto &a : axes) {
        s.measurements.push_back(axis_measurement(a));
    }
    return s;
}

}  // namespace

double binary_entropy(double p) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("binary_entropy requires 0 <= p <= 1.");
    }
    if (p == 0 || p == 1) {
        return 0;
    }
    return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

size_t nayak_min_qubits(size_t n, double p) {
    if (!(p > 0.5 && p <= 1)) {
        throw std::invalid_argument("nayak_min_qubits requires 1/2 < p <= 1; the bound is vacuous otherwise.");
    }
    double v = (1 - binary_entropy(p)) * (double)n;
    return (size_t)std::ceil(v - 1e-12);
}

double BinaryMeasurement::probability(const Qustring &s, bool bit) const {
    double p = 0;
    for (size_t j = 0; j < basis.size(); j++) {
        if ((outcome[j] != 0) == bit) {
            p += std::norm(inner_product(basis[j], s));
        }
    }
    return p;
}

const Qustring &RacScheme::encode(const BitString &x) const {
    if (x.size() != n) {
        throw std::invalid_argument("RacScheme::encode length mismatch.");
    }
    return codewords.at(x.index());
}

double RacScheme::success_probability(const BitString &x, size_t i) const {
    return measurements.at(i).probability(encode(x), x[i]);
}

double scheme_success(const RacScheme &s) {
    if (s.n == 0 || s.n > 20) {
        throw std::invalid_argument("RacScheme needs 1 <= n <= 20.");
    }
    if (s.codewords.size() != (size_t{1} << s.n)) {
        throw std::invalid_argument("RacScheme encoder must cover all 2^n inputs.");
    }
    for (const auto &c : s.codewords) {
        if (c.num_qubits() != s.m) {
            throw std::invalid_argument("RacScheme codeword has the wrong number of qubits.");
        }
    }
    if (s.measurements.size() != s.n) {
        throw std::invalid_argument("RacScheme needs one measurement per encoded bit.");
    }
    double tol = tolerances().basis_orthonormal;
    size_t dim = size_t{1} << s.m;
    for (const auto &meas : s.measurements) {
        if (meas.basis.size() != dim || meas.outcome.size() != dim) {
            throw std::invalid_argument("Measurement basis must have 2^m labelled vectors.");
        }
        for (size_t a = 0; a < dim; a++) {
            if (meas.basis[a].num_qubits() != s.m) {
                throw std::invalid_argument("Measurement vector has the wrong number of qubits.");
            }
            for (size_t b = 0; b < dim; b++) {
                Complex ip = inner_product(meas.basis[a], meas.basis[b]);
                double expected = a == b ? 1 : 0;
                if (std::abs(ip - expected) > tol) {
                    throw std::invalid_argument("Measurement basis is not orthonormal.");
                }
            }
        }
    }
    double worst = 1;
    for (uint64_t xi = 0; xi < s.codewords.size(); xi++) {
        auto x = BitString::from_index(xi, s.n);
        for (size_t i = 0; i < s.n; i++) {
            worst = std::min(worst, s.success_probability(x, i));
        }
    }
    return worst;
}

Qustring bloch_state(const BlochVector &r) {
    double len = length(r);
    if (std::abs(len - 1) > 1e-9) {
        throw std::invalid_argument("Bloch vector of a pure state must have unit length.");
    }
    double theta = std::acos(std::clamp(r[2] / len, -1.0, 1.0));
    double phi = std::atan2(r[1], r[0]);
    return Qustring::from_amplitudes({std::cos(theta / 2), std::polar(std::sin(theta / 2), phi)});
}

BinaryMeasurement axis_measurement(const BlochVector &axis) {
    BinaryMeasurement m;
    m.basis.push_back(bloch_state(axis));
    m.basis.push_back(bloch_state({-axis[0], -axis[1], -axis[2]}));
    m.outcome = {0, 1};
    return m;
}

RacScheme rac21_scheme() {
    double r = 1 / std::sqrt(2.0);
    std::vector<Vec3> codewords;
    for (uint64_t xi = 0; xi < 4; xi++) {
        auto x = BitString::from_index(xi, 2);
        double s1 = x[0] ? -1 : 1, s2 = x[1] ? -1 : 1;
        codewords.push_back({s2 * r, 0, s1 * r});
    }
    return scheme_from_bloch(2, codewords, {{0, 0, 1}, {1, 0, 0}});
}

RacScheme rac31_scheme() {
    double r = 1 / std::sqrt(3.0);
    std::vector<Vec3> codewords;
    for (uint64_t xi = 0; xi < 8; xi++) {
        auto x = BitString::from_index(xi, 3);
        double s1 = x[0] ? -1 : 1, s2 = x[1] ? -1 : 1, s3 = x[2] ? -1 : 1;
        codewords.push_back({s2 * r, s3 * r, s1 * r});
    }
    return scheme_from_bloch(3, codewords, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
}

RacSearchResult rac_search(size_t n, size_t m, double resolution, uint64_t seed, size_t starts) {
    if (!(resolution > 0)) {
        throw std::invalid_argument("rac_search requires resolution > 0.");
    }
    if (n < 1 || n > 3) {
        throw std::invalid_argument("rac_search supports 1 <= n <= 3.");
    }
    if (m != 1) {
        throw std::invalid_argument("rac_search supports m = 1 only.");
    }
    if (starts == 0) {
        throw std::invalid_argument("rac_search needs at least one start.");
    }
    std::mt19937_64 rng(seed);
    long long theta_steps = std::max<long long>(1, (long long)std::floor(M_PI / resolution));
    long long phi_steps = std::max<long long>(1, (long long)std::floor(2 * M_PI / resolution));
    std::uniform_int_distribution<long long> pick_theta(0, theta_steps);
    std::uniform_int_distribution<long long> pick_phi(0, phi_steps - 1);

    double coarse = resolution;
    while (coarse * 2 <= M_PI / 4) {
        coarse *= 2;
    }

    RacSearchResult best;
    best.best_p = -1;
    std::vector<double> best_angles;
    for (size_t start = 0; start < starts; start++) {
        std::vector<double> angles(2 * n);
        for (size_t i = 0; i < n; i++) {
            angles[2 * i] = resolution * (double)pick_theta(rng);
            angles[2 * i + 1] = resolution * (double)pick_phi(rng);
        }
        double value = evaluate_axes(n, angles).worst;
        for (double step = coarse; step > 1e-10; step /= 2) {
            bool improved = true;
            while (improved) {
                improved = false;
                for (size_t c = 0; c < angles.size(); c++) {
                    for (double dir : {1.0, -1.0}) {
                        auto trial = angles;
                        trial[c] += dir * step;
                        double v = evaluate_axes(n, trial).worst;
                        if (v > value + 1e-15) {
                            value = v;
                            angles = std::move(trial);
                            improved = true;
                            break;
                        }
                    }
                }
            }
        }
        if (value > best.best_p) {
            best.best_p = value;
            best.best_start = start;
            best_angles = angles;
        }
    }
    auto eval = evaluate_axes(n, best_angles);
    std::vector<Vec3> axes;
    for (size_t i = 0; i < n; i++) {
        axes.push_back(axis_from_angles(best_angles[2 * i], best_angles[2 * i + 1]));
    }
    best.best_scheme = scheme_from_bloch(n, eval.codewords, axes);
    best.best_p = scheme_success(best.best_scheme);
    return best;
}

}  // namespace qadvice
