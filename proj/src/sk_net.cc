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

#include "qadvice/sk_net.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <random>
#include <unordered_set>

namespace qadvice {

Quaternion Quaternion::operator*(const Quaternion &o) const {
    return {
        w * o.w - x * o.x - y * o.y - z * o.z,
        w * o.x + o.w * x + (y * o.z - z * o.y),
        w * o.y + o.w * y + (z * o.x - x * o.z),
        w * o.z + o.w * z + (x * o.y - y * o.x),
    };
}

Quaternion Quaternion::normalized() const {
    double n = std::sqrt(dot(*this));
    return {w / n, x / n, y / n, z / n};
}

Quaternion Quaternion::rotation(double angle, double ax, double ay, double az) {
    double s = std::sin(angle / 2);
    return {std::cos(angle / 2), s * ax, s * ay, s * az};
}

Quaternion Quaternion::from_unitary(const Matrix &u) {
    if (u.rows() != 2 || u.cols() != 2) {
        throw std::invalid_argument("Quaternion::from_unitary needs a 2x2 matrix.");
    }
    Complex det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
    Complex s = std::sqrt(det);
    Complex a = u(0, 0) / s;
    Complex b = u(0, 1) / s;
    return Quaternion{a.real(), -b.imag(), -b.real(), -a.imag()}.normalized();
}

Matrix Quaternion::to_matrix() const {
    Matrix m(2, 2);
    m(0, 0) = Complex(w, -z);
    m(0, 1) = Complex(-y, -x);
    m(1, 0) = Complex(y, -x);
    m(1, 1) = Complex(w, z);
    return m;
}

double phase_distance(const Quaternion &a, const Quaternion &b) {
    double d = std::min(1.0, std::abs(a.dot(b)));
    return std::sqrt(2 * (1 - d));
}

namespace {

const Quaternion &gate_quaternion(GateKind kind) {
    static const std::array<Quaternion, 8> table = [] {
        std::array<Quaternion, 8> t{};
        for (auto k : SINGLE_QUBIT_GATE_KINDS) {
            t[(size_t)k] = Quaternion::from_unitary(gate_matrix(k));
        }
        return t;
    }();
    return table[(size_t)kind];
}

struct Key {
    std::array<int64_t, 4> c;
    bool operator==(const Key &o) const = default;
};

struct KeyHash {
    size_t operator()(const Key &k) const {
        size_t h = 1469598103934665603ull;
        for (auto v : k.c) {
            h ^= (size_t)v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

Key canonical_key(const Quaternion &q) {
    std::array<double, 4> v{q.w, q.x, q.y, q.z};
    double sign = 1;
    for (double c : v) {
        if (std::abs(c) > 1e-7) {
            sign = c > 0 ? 1 : -1;
            break;
        }
    }
    Key k;
    for (size_t i = 0; i < 4; i++) {
        k.c[i] = (int64_t)std::llround(sign * v[i] * 1e7);
    }
    return k;
}

}  // namespace

Quaternion word_quaternion(const std::vector<GateKind> &word) {
    Quaternion q;
    for (auto g : word) {
        q = gate_quaternion(g) * q;
    }
    return q;
}

SkNet SkNet::build(size_t max_length) {
    SkNet net;
    net.max_length_ = max_length;
    std::unordered_set<Key, KeyHash> seen;
    net.entries_.push_back({Quaternion{}, {}});
    seen.insert(canonical_key(Quaternion{}));
    size_t frontier_begin = 0;
    for (size_t len = 1; len <= max_length; len++) {
        size_t frontier_end = net.entries_.size();
        for (size_t e = frontier_begin; e < frontier_end; e++) {
            for (auto g : SINGLE_QUBIT_GATE_KINDS) {
                const auto &prev = net.entries_[e];
                if (!prev.word.empty() && prev.word.back() == inverse(g)) {
                    continue;
                }
                Quaternion q = (gate_quaternion(g) * prev.q).normalized();
                if (seen.insert(canonical_key(q)).second) {
                    auto word = prev.word;
                    word.push_back(g);
                    net.entries_.push_back({q, std::move(word)});
                }
            }
        }
        frontier_begin = frontier_end;
    }
    net.index();
    net.measure_epsilon0();
    return net;
}

void SkNet::measure_epsilon0() {
    std::mt19937_64 rng(0x5eed0);
    std::normal_distribution<double> normal;
    double worst = 0;
    for (int s = 0; s < 2000; s++) {
        Quaternion q = Quaternion{normal(rng), normal(rng), normal(rng), normal(rng)}.normalized();
        worst = std::max(worst, phase_distance(nearest(q).q, q));
    }
    epsilon0_ = worst;
}

namespace {

constexpr int GRID_CELLS = 16;
constexpr double GRID_STEP = 2.0 / GRID_CELLS;

int grid_coord(double v) {
    return std::clamp((int)std::floor((v + 1) / GRID_STEP), 0, GRID_CELLS - 1);
}

size_t grid_cell(const std::array<int, 4> &c) {
    return (((size_t)c[0] * GRID_CELLS + c[1]) * GRID_CELLS + c[2]) * GRID_CELLS + c[3];
}

std::array<int, 4> grid_coords(const Quaternion &q) {
    return {grid_coord(q.w), grid_coord(q.x), grid_coord(q.y), grid_coord(q.z)};
}

}  // namespace

void SkNet::index() {
    // Both q and -q are stored, so Euclidean nearest equals phase-quotiented nearest.
    size_t cells = (size_t)GRID_CELLS * GRID_CELLS * GRID_CELLS * GRID_CELLS;
    std::vector<uint32_t> counts(cells + 1, 0);
    auto cell_of = [&](size_t item) {
        Quaternion q = entries_[item / 2].q;
        if (item % 2) {
            q = {-q.w, -q.x, -q.y, -q.z};
        }
        return grid_cell(grid_coords(q));
    };
    for (size_t item = 0; item < 2 * entries_.size(); item++) {
        counts[cell_of(item) + 1]++;
    }
    for (size_t c = 0; c < cells; c++) {
        counts[c + 1] += counts[c];
    }
    cell_start_ = counts;
    cell_items_.assign(2 * entries_.size(), 0);
    for (size_t item = 0; item < 2 * entries_.size(); item++) {
        cell_items_[counts[cell_of(item)]++] = (uint32_t)item;
    }
}

const SkNet::Entry &SkNet::nearest(const Quaternion &target) const {
    auto center = grid_coords(target);
    size_t best = entries_.size();
    double best_dot = -1;
    auto consider = [&](size_t e) {
        double d = std::abs(entries_[e].q.dot(target));
        if (d > best_dot || (d == best_dot && e < best)) {
            best_dot = d;
            best = e;
        }
    };
    for (int r = 0; r <= GRID_CELLS; r++) {
        std::array<int, 4> c;
        for (c[0] = center[0] - r; c[0] <= center[0] + r; c[0]++) {
            for (c[1] = center[1] - r; c[1] <= center[1] + r; c[1]++) {
                for (c[2] = center[2] - r; c[2] <= center[2] + r; c[2]++) {
                    for (c[3] = center[3] - r; c[3] <= center[3] + r; c[3]++) {
                        bool shell = false, inside = true;
                        for (size_t i = 0; i < 4; i++) {
                            shell |= std::abs(c[i] - center[i]) == r;
                            inside &= c[i] >= 0 && c[i] < GRID_CELLS;
                        }
                        if (!shell || !inside) {
                            continue;
                        }
                        size_t cell = grid_cell(c);
                        for (uint32_t k = cell_start_[cell]; k < cell_start_[cell + 1]; k++) {
                            consider(cell_items_[k] / 2);
                        }
                    }
                }
            }
        }
        // Anything in a farther shell is at least r cells away along some axis.
        if (best < entries_.size()) {
            double dist = std::sqrt(std::max(0.0, 2 * (1 - best_dot)));
            if (dist < r * GRID_STEP) {
                break;
            }
        }
    }
    return entries_[best];
}

void SkNet::save(const std::string &path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("Cannot write net cache '" + path + "'.");
    }
    auto put = [&](const void *p, size_t n) {
        out.write(reinterpret_cast<const char *>(p), (std::streamsize)n);
    };
    uint32_t version = NET_CACHE_VERSION;
    uint32_t len = (uint32_t)max_length_;
    uint64_t count = entries_.size();
    put("QNET", 4);
    put(&version, sizeof version);
    put(&len, sizeof len);
    put(&epsilon0_, sizeof epsilon0_);
    put(&count, sizeof count);
    for (const auto &e : entries_) {
        uint8_t l = (uint8_t)e.word.size();
        put(&l, 1);
        for (auto g : e.word) {
            uint8_t b = (uint8_t)g;
            put(&b, 1);
        }
    }
    if (!out) {
        throw std::runtime_error("Failed while writing net cache '" + path + "'.");
    }
}

std::optional<SkNet> SkNet::load(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return std::nullopt;
    }
    auto get = [&](void *p, size_t n) {
        in.read(reinterpret_cast<char *>(p), (std::streamsize)n);
        return (bool)in;
    };
    char magic[4];
    uint32_t version, len;
    uint64_t count;
    double eps0;
    if (!get(magic, 4) || std::memcmp(magic, "QNET", 4) != 0 || !get(&version, sizeof version) ||
        version != NET_CACHE_VERSION || !get(&len, sizeof len) || !get(&eps0, sizeof eps0) ||
        !get(&count, sizeof count) || count == 0 || count > (uint64_t{1} << 26)) {
        return std::nullopt;
    }
    SkNet net;
    net.max_length_ = len;
    net.epsilon0_ = eps0;
    net.entries_.reserve(count);
    for (uint64_t i = 0; i < count; i++) {
        uint8_t l;
        if (!get(&l, 1) || l > len) {
            return std::nullopt;
        }
        std::vector<GateKind> word;
        for (uint8_t j = 0; j < l; j++) {
            uint8_t b;
            if (!get(&b, 1) || b < (uint8_t)GateKind::H || b > (uint8_t)GateKind::X) {
                return std::nullopt;
            }
            word.push_back((GateKind)b);
        }
        net.entries_.push_back({word_quaternion(word), std::move(word)});
    }
    net.index();
    return net;
}

const SkNet &SkNet::standard() {
    static const SkNet net = [] {
        const char *path = std::getenv("QADVICE_NET_CACHE");
        if (path != nullptr && *path != '\0') {
            if (auto cached = SkNet::load(path); cached.has_value() && cached->max_length() == STANDARD_NET_LENGTH) {
                return std::move(*cached);
            }
            auto built = SkNet::build(STANDARD_NET_LENGTH);
            try {
                built.save(path);
            } catch (const std::exception &) {
                // An unwritable cache only costs a rebuild next time.
            }
            return built;
        }
        return SkNet::build(STANDARD_NET_LENGTH);
    }();
    return net;
}

}  // namespace qadvice
