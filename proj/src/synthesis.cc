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

#include "qadvice/synthesis.h"

#include <algorithm>
#include <bit>
#include <cmath>

#include "qadvice/config.h"

namespace qadvice {

namespace {

constexpr size_t MAX_SK_DEPTH = 6;
constexpr double NEGLIGIBLE_ANGLE = 1e-14;
// Rotating the balanced pair about the axis of delta leaves the commutator fixed but
// changes how well the net approximates V and W; several twists are tried per level.
constexpr size_t SK_TWISTS = 4;
constexpr size_t SK_TOP_TWISTS = 32;

struct Word {
    std::vector<GateKind> gates;
    Quaternion q;
};

std::vector<GateKind> inverse_word(const std::vector<GateKind> &w) {
    std::vector<GateKind> out;
    out.reserve(w.size());
    for (size_t i = w.size(); i-- > 0;) {
        out.push_back(inverse(w[i]));
    }
    return out;
}

Word sk_recurse(const Quaternion &target, size_t depth, const SkNet &net, bool top = false) {
    if (depth == 0) {
        const auto &e = net.nearest(target);
        return {e.word, e.q};
    }
    Word prev = sk_recurse(target, depth - 1, net);
    Word best = prev;
    double best_dist = phase_distance(prev.q, target);
    Quaternion delta = target * prev.q.conjugate();
    size_t twists = top ? SK_TOP_TWISTS : SK_TWISTS;
    for (size_t t = 0; t < twists; t++) {
        auto [v, w] = balanced_commutator(delta, M_PI * (double)t / (double)twists);
        Word av = sk_recurse(v, depth - 1, net);
        Word aw = sk_recurse(w, depth - 1, net);
        // V W V^dag W^dag U_prev: U_prev acts first in time, V last.
        Word out;
        out.gates = prev.gates;
        auto append = [&](const std::vector<GateKind> &part) {
            out.gates.insert(out.gates.end(), part.begin(), part.end());
        };
        append(inverse_word(aw.gates));
        append(inverse_word(av.gates));
        append(aw.gates);
        append(av.gates);
        out.q = (av.q * aw.q * av.q.conjugate() * aw.q.conjugate() * prev.q).normalized();
        double dist = phase_distance(out.q, target);
        if (dist < best_dist) {
            best = std::move(out);
            best_dist = dist;
        }
    }
    return best;
}

Circuit word_circuit(const std::vector<GateKind> &word) {
    Circuit c(1);
    for (auto g : word) {
        c.append(g, 0);
    }
    return c.simplified();
}

// ---------------------------------------------------------------------------
// Decomposition plans: CNOTs, exact X gates, and continuous single-qubit rotations.

struct Step {
    enum Kind { CNOT, X, ROTATION } kind;
    uint32_t a = 0;
    uint32_t b = 0;
    Matrix rotation;
};

struct Plan {
    size_t width;
    std::vector<Step> steps;

    void cnot(uint32_t control, uint32_t target) {
        steps.push_back({Step::CNOT, control, target, {}});
    }
    void x(uint32_t q) {
        steps.push_back({Step::X, q, 0, {}});
    }
    void rotate(const Matrix &m, uint32_t q) {
        if (phase_distance(Quaternion::from_unitary(m), Quaternion{}) < NEGLIGIBLE_ANGLE) {
            return;
        }
        steps.push_back({Step::ROTATION, q, 0, m});
    }
    size_t rotation_count() const {
        return std::count_if(steps.begin(), steps.end(), [](const Step &s) {
            return s.kind == Step::ROTATION;
        });
    }
};

uint64_t gray(uint64_t i) {
    return i ^ (i >> 1);
}

/// Uniformly controlled rotation on `target`, controlled by qubits 0..target-1.
/// angles[c] applies when the controls read c (qubit 0 most significant).
void uniformly_controlled(Plan &plan, uint32_t target, const std::vector<double> &angles, bool z_axis) {
    bool trivial = std::all_of(angles.begin(), angles.end(), [](double a) {
        return std::abs(a) < NEGLIGIBLE_ANGLE;
    });
    if (trivial) {
        return;
    }
    auto rot = [&](double theta) {
        return z_axis ? rz(theta) : ry(theta);
    };
    size_t n = angles.size();
    if (n == 1) {
        plan.rotate(rot(angles[0]), target);
        return;
    }
    // Rotation i sees the target flipped once per control bit set in both c and gray(i),
    // so angles = M theta with M[c][i] = (-1)^{popcount(c & gray(i))}, and M^T M = n I.
    for (uint64_t i = 0; i < n; i++) {
        double theta = 0;
        for (uint64_t c = 0; c < n; c++) {
            double sign = (std::popcount(c & gray(i)) & 1) ? -1 : 1;
            theta += sign * angles[c];
        }
        theta /= (double)n;
        plan.rotate(rot(theta), target);
        uint64_t changed = gray(i) ^ gray((i + 1) % n);
        auto bit = (uint32_t)std::countr_zero(changed);
        plan.cnot(target - 1 - bit, target);
    }
}

/// Appends diag(e^{i phases[x]}) up to global phase.
void append_diagonal(Plan &plan, std::vector<double> phases) {
    size_t k = plan.width;
    for (size_t j = k; j-- > 0;) {
        size_t half = phases.size() / 2;
        std::vector<double> deltas(half), next(half);
        for (size_t c = 0; c < half; c++) {
            deltas[c] = phases[2 * c + 1] - phases[2 * c];
            next[c] = (phases[2 * c] + phases[2 * c + 1]) / 2;
        }
        uniformly_controlled(plan, (uint32_t)j, deltas, true);
        phases = std::move(next);
    }
}

struct Realized {
    Circuit circuit;
    size_t rotations = 0;
    double rotation_error_sum = 0;
};

Realized realize(const Plan &plan, double epsilon, const SkNet &net) {
    Realized r{Circuit(plan.width), plan.rotation_count(), 0};
    double share = r.rotations == 0 ? epsilon : epsilon / (double)r.rotations;
    for (const auto &s : plan.steps) {
        switch (s.kind) {
            case Step::CNOT:
                r.circuit.append_cnot(s.a, s.b);
                break;
            case Step::X:
                r.circuit.append(GateKind::X, s.a);
                break;
            case Step::ROTATION: {
                auto approx = sk_approximate_detailed(s.rotation, share, net);
                r.rotation_error_sum += approx.error;
                uint32_t map[1] = {s.a};
                r.circuit.append(approx.circuit, map);
                break;
            }
        }
    }
    r.circuit = r.circuit.simplified();
    return r;
}

/// Every circuit on `width` qubits with at most two gates, shortest first.
std::vector<Circuit> tiny_circuits(size_t width) {
    std::vector<Gate> gates;
    for (uint32_t q = 0; q < width; q++) {
        for (auto k : SINGLE_QUBIT_GATE_KINDS) {
            gates.push_back(Gate::single(k, q));
        }
    }
    for (uint32_t c = 0; c < width; c++) {
        for (uint32_t t = 0; t < width; t++) {
            if (c != t) {
                gates.push_back(Gate::cnot(c, t));
            }
        }
    }
    std::vector<Circuit> out;
    out.emplace_back(width);
    for (const auto &g : gates) {
        Circuit c(width);
        c.append(g);
        out.push_back(c);
    }
    for (const auto &g1 : gates) {
        for (const auto &g2 : gates) {
            Circuit c(width);
            c.append(g1);
            c.append(g2);
            out.push_back(c);
        }
    }
    return out;
}

double log2_cubed(double epsilon) {
    double l = std::log2(1 / epsilon);
    return l * l * l;
}

void finish_report(SynthesisReport &rep, const Realized &r) {
    rep.circuit = r.circuit;
    rep.size = r.circuit.size();
    rep.rotation_count = r.rotations;
    rep.rotation_error_sum = r.rotation_error_sum;
    rep.constant_ratio = rep.bound_value > 0 ? (double)rep.size / rep.bound_value : 0;
}

}  // namespace

std::pair<Quaternion, Quaternion> balanced_commutator(const Quaternion &delta, double twist) {
    Quaternion d = delta.normalized();
    if (d.w < 0) {
        d = {-d.w, -d.x, -d.y, -d.z};
    }
    double half = std::acos(std::clamp(d.w, -1.0, 1.0));
    double s = std::sin(half);
    if (s < 1e-15) {
        return {Quaternion{}, Quaternion{}};
    }
    double theta = 2 * half;
    std::array<double, 3> n{d.x / s, d.y / s, d.z / s};
    double phi = 2 * std::asin(std::sqrt(std::sin(theta / 4)));
    Quaternion v = Quaternion::rotation(phi, 1, 0, 0);
    Quaternion w = Quaternion::rotation(phi, 0, 1, 0);
    Quaternion c = v * w * v.conjugate() * w.conjugate();
    if (c.w < 0) {
        c = {-c.w, -c.x, -c.y, -c.z};
    }
    double cs = std::sqrt(c.x * c.x + c.y * c.y + c.z * c.z);
    std::array<double, 3> m{c.x / cs, c.y / cs, c.z / cs};
    // Rotation taking axis m onto axis n.
    std::array<double, 3> ax{m[1] * n[2] - m[2] * n[1], m[2] * n[0] - m[0] * n[2], m[0] * n[1] - m[1] * n[0]};
    double sin_a = std::sqrt(ax[0] * ax[0] + ax[1] * ax[1] + ax[2] * ax[2]);
    double cos_a = m[0] * n[0] + m[1] * n[1] + m[2] * n[2];
    Quaternion rot;
    if (sin_a > 1e-12) {
        rot = Quaternion::rotation(std::atan2(sin_a, cos_a), ax[0] / sin_a, ax[1] / sin_a, ax[2] / sin_a);
    } else if (cos_a < 0) {
        std::array<double, 3> helper = std::abs(m[0]) < 0.9 ? std::array<double, 3>{1, 0, 0}
                                                             : std::array<double, 3>{0, 1, 0};
        std::array<double, 3> p{m[1] * helper[2] - m[2] * helper[1], m[2] * helper[0] - m[0] * helper[2],
                                m[0] * helper[1] - m[1] * helper[0]};
        double pl = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
        rot = Quaternion::rotation(M_PI, p[0] / pl, p[1] / pl, p[2] / pl);
    }
    rot = Quaternion::rotation(twist, n[0], n[1], n[2]) * rot;
    return {(rot * v * rot.conjugate()).normalized(), (rot * w * rot.conjugate()).normalized()};
}

SkApproximation sk_approximate_detailed(const Matrix &u, double epsilon, const SkNet &net) {
    const auto &tol = tolerances();
    if (u.rows() != 2 || u.cols() != 2) {
        throw std::invalid_argument("sk_approximate needs a 2x2 unitary.");
    }
    if (!is_unitary(u, tol.target_unitarity)) {
        throw std::invalid_argument("sk_approximate target is not unitary within tolerance.");
    }
    if (!(epsilon >= tol.sk_precision_floor)) {
        throw UnsupportedPrecisionError(
            "sk_approximate cannot certify epsilon = " + std::to_string(epsilon) + " (floor " +
            std::to_string(tol.sk_precision_floor) + ").");
    }
    Quaternion target = Quaternion::from_unitary(u);
    SkApproximation best;
    best.error = INFINITY;
    for (size_t depth = 0; depth <= MAX_SK_DEPTH; depth++) {
        Word w = sk_recurse(target, depth, net, true);
        Circuit c = word_circuit(w.gates);
        double err = operator_distance_up_to_phase(circuit_unitary(c), u);
        if (err < best.error) {
            best = {c, err, depth};
        }
        if (err < epsilon) {
            return best;
        }
    }
    throw SynthesisError(
        "sk_approximate reached depth " + std::to_string(MAX_SK_DEPTH) + " with error " +
        std::to_string(best.error) + " >= " + std::to_string(epsilon));
}

Circuit sk_approximate(const Matrix &u, double epsilon, const SkNet &net) {
    return sk_approximate_detailed(u, epsilon, net).circuit;
}

std::array<double, 4> zyz_decompose(const Matrix &u) {
    if (u.rows() != 2 || u.cols() != 2) {
        throw std::invalid_argument("zyz_decompose needs a 2x2 matrix.");
    }
    Complex det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
    double alpha = std::arg(det) / 2;
    Matrix w = std::polar(1.0, -alpha) * u;
    double gamma = 2 * std::atan2(std::abs(w(1, 0)), std::abs(w(0, 0)));
    double sum = std::abs(w(1, 1)) > 1e-12 ? 2 * std::arg(w(1, 1)) : 0;
    double diff = std::abs(w(1, 0)) > 1e-12 ? 2 * std::arg(w(1, 0)) : 0;
    return {alpha, (sum + diff) / 2, gamma, (sum - diff) / 2};
}

SynthesisReport synthesize_state(const Qustring &target, double epsilon, const SkNet &net) {
    const auto &tol = tolerances();
    size_t k = target.num_qubits();
    if (k < 1 || k > 4) {
        throw std::invalid_argument("synthesize_state supports 1 <= k <= 4 qubits.");
    }
    if (!(epsilon >= tol.state_precision_floor)) {
        throw UnsupportedPrecisionError(
            "synthesize_state cannot certify epsilon = " + std::to_string(epsilon) + " (floor " +
            std::to_string(tol.state_precision_floor) + ").");
    }
    if (std::abs(target.norm_squared() - 1) > tol.normalization) {
        throw std::invalid_argument("synthesize_state target is not normalized.");
    }
    SynthesisReport rep;
    rep.target_kind = TargetKind::STATE;
    rep.k = k;
    rep.epsilon = epsilon;
    rep.bound_value = std::pow(2.0, 2.0 * (double)k) * log2_cubed(epsilon);

    Realized realized{Circuit(k), 0, 0};
    bool exact = false;
    auto zero = Qustring::zero(k);
    for (const auto &c : tiny_circuits(k)) {
        if (l2_distance_up_to_phase(apply(c, zero), target) < tol.exact_match) {
            realized.circuit = c;
            exact = true;
            break;
        }
    }
    if (!exact) {
        size_t d = target.dimension();
        std::vector<double> mags(d), phases(d);
        for (size_t x = 0; x < d; x++) {
            mags[x] = std::abs(target[x]);
            phases[x] = mags[x] > 0 ? std::arg(target[x]) : 0;
        }
        Plan plan{k, {}};
        // Squared weights of every prefix, level by level from the full register up.
        std::vector<std::vector<double>> weight(k + 1);
        weight[k].resize(d);
        for (size_t x = 0; x < d; x++) {
            weight[k][x] = mags[x] * mags[x];
        }
        for (size_t j = k; j-- > 0;) {
            weight[j].resize(size_t{1} << j);
            for (size_t c = 0; c < weight[j].size(); c++) {
                weight[j][c] = weight[j + 1][2 * c] + weight[j + 1][2 * c + 1];
            }
        }
        for (size_t j = 0; j < k; j++) {
            std::vector<double> angles(size_t{1} << j);
            for (size_t c = 0; c < angles.size(); c++) {
                angles[c] = 2 * std::atan2(std::sqrt(weight[j + 1][2 * c + 1]), std::sqrt(weight[j + 1][2 * c]));
            }
            uniformly_controlled(plan, (uint32_t)j, angles, false);
        }
        append_diagonal(plan, phases);
        realized = realize(plan, epsilon, net);
    }
    finish_report(rep, realized);
    rep.achieved_error = l2_distance_up_to_phase(apply(rep.circuit, zero), target);
    if (!(rep.achieved_error < epsilon)) {
        throw SynthesisError(
            "synthesize_state achieved " + std::to_string(rep.achieved_error) + " >= " + std::to_string(epsilon));
    }
    return rep;
}

SynthesisReport synthesize_unitary(const Matrix &u, double epsilon, const SkNet &net) {
    const auto &tol = tolerances();
    if (u.rows() != u.cols() || (u.rows() != 2 && u.rows() != 4)) {
        throw std::invalid_argument("synthesize_unitary supports 1 or 2 qubits.");
    }
    if (!is_unitary(u, tol.target_unitarity)) {
        throw std::invalid_argument("synthesize_unitary target is not unitary within tolerance.");
    }
    if (!(epsilon >= tol.unitary_precision_floor)) {
        throw UnsupportedPrecisionError(
            "synthesize_unitary cannot certify epsilon = " + std::to_string(epsilon) + " (floor " +
            std::to_string(tol.unitary_precision_floor) + ").");
    }
    size_t k = u.rows() == 2 ? 1 : 2;
    SynthesisReport rep;
    rep.target_kind = TargetKind::UNITARY;
    rep.k = k;
    rep.epsilon = epsilon;
    rep.bound_value = std::pow(2.0, 3.0 * (double)k) * log2_cubed(epsilon);

    Realized realized{Circuit(k), 0, 0};
    bool exact = false;
    double dim = (double)u.rows();
    for (const auto &c : tiny_circuits(k)) {
        Complex overlap = (circuit_unitary(c).adjoint() * u).trace();
        if (std::abs(overlap) > dim * (1 - tol.exact_match)) {
            realized.circuit = c;
            exact = true;
            break;
        }
    }
    if (!exact) {
        Plan plan{k, {}};
        if (k == 1) {
            plan.rotate(u, 0);
        } else {
            // Gray order makes neighbouring rows differ in exactly one qubit.
            const std::array<size_t, 4> order = {0, 1, 3, 2};
            Matrix m(4, 4);
            for (size_t a = 0; a < 4; a++) {
                for (size_t b = 0; b < 4; b++) {
                    m(a, b) = u(order[a], order[b]);
                }
            }
            struct Givens {
                size_t row;
                Matrix g;
            };
            std::vector<Givens> eliminations;
            for (size_t c = 0; c + 1 < 4; c++) {
                for (size_t r = 3; r > c; r--) {
                    Complex a = m(r - 1, c), b = m(r, c);
                    if (std::abs(b) < 1e-15) {
                        continue;
                    }
                    double nrm = std::sqrt(std::norm(a) + std::norm(b));
                    Matrix g(2, 2);
                    g << std::conj(a) / nrm, std::conj(b) / nrm, -b / nrm, a / nrm;
                    Matrix rows = m.block(r - 1, 0, 2, 4);
                    m.block(r - 1, 0, 2, 4) = g * rows;
                    eliminations.push_back({r - 1, g});
                }
            }
            // u = G_1^dag ... G_N^dag D, so D acts first in time and G_1^dag last.
            std::vector<double> phases(4);
            for (size_t a = 0; a < 4; a++) {
                phases[order[a]] = std::arg(m(a, a));
            }
            append_diagonal(plan, phases);
            for (size_t e = eliminations.size(); e-- > 0;) {
                size_t s1 = order[eliminations[e].row], s2 = order[eliminations[e].row + 1];
                Matrix block = eliminations[e].g.adjoint();
                uint32_t target = (s1 ^ s2) == 1 ? 1 : 0;
                uint32_t other = 1 - target;
                bool s1_target_bit = (s1 >> (1 - target)) & 1;
                bool control_value = (s1 >> (1 - other)) & 1;
                Matrix v = block;
                if (s1_target_bit) {
                    Matrix x(2, 2);
                    x << 0, 1, 1, 0;
                    v = x * block * x;
                }
                auto [alpha, beta, gamma, delta] = zyz_decompose(v);
                if (!control_value) {
                    plan.x(other);
                }
                plan.rotate(rz((delta - beta) / 2), target);
                plan.cnot(other, target);
                plan.rotate(ry(-gamma / 2) * rz(-(delta + beta) / 2), target);
                plan.cnot(other, target);
                plan.rotate(rz(beta) * ry(gamma / 2), target);
                plan.rotate(rz(alpha), other);
                if (!control_value) {
                    plan.x(other);
                }
            }
        }
        realized = realize(plan, epsilon, net);
    }
    finish_report(rep, realized);
    rep.achieved_error = operator_distance_up_to_phase(circuit_unitary(rep.circuit), u);
    if (!(rep.achieved_error < epsilon)) {
        throw SynthesisError(
            "synthesize_unitary achieved " + std::to_string(rep.achieved_error) + " >= " + std::to_string(epsilon));
    }
    return rep;
}

}  // namespace qadvice
