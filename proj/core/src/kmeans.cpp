// Copyright 2026 The kgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kgraph/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>

#include "kgraph/error.hpp"
#include "kgraph/parallel.hpp"

namespace kgraph {

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Portable: std::uniform_*_distribution output is implementation-defined.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(gen_() % n); }

 private:
  std::mt19937_64 gen_;
};

struct Problem {
  std::span<const double> data;
  std::size_t rows;
  std::size_t dim;

  std::span<const double> row(std::size_t i) const { return data.subspan(i * dim, dim); }
};

std::vector<double> seed_centroids(const Problem& p, std::size_t k, Rng& rng) {
  std::vector<double> centroids;
  centroids.reserve(k * p.dim);
  auto push = [&](std::size_t i) {
    const auto r = p.row(i);
    centroids.insert(centroids.end(), r.begin(), r.end());
  };
  push(rng.index(p.rows));
  std::vector<double> d2(p.rows);
  for (std::size_t i = 0; i < p.rows; ++i) {
    d2[i] = squared_distance(p.row(i), std::span<const double>(centroids).subspan(0, p.dim));
  }
  for (std::size_t c = 1; c < k; ++c) {
    double total = 0.0;
    for (double d : d2) total += d;
    std::size_t pick = 0;
    if (total > 0.0) {
      const double target = rng.uniform01() * total;
      double cumulative = 0.0;
      pick = p.rows;
      std::size_t last_positive = 0;
      for (std::size_t i = 0; i < p.rows; ++i) {
        if (d2[i] <= 0.0) continue;
        last_positive = i;
        cumulative += d2[i];
        if (cumulative > target) {
          pick = i;
          break;
        }
      }
      if (pick == p.rows) pick = last_positive;
    } else {
      pick = rng.index(p.rows);
    }
    push(pick);
    const auto fresh = std::span<const double>(centroids).subspan(c * p.dim, p.dim);
    for (std::size_t i = 0; i < p.rows; ++i) {
      d2[i] = std::min(d2[i], squared_distance(p.row(i), fresh));
    }
  }
  return centroids;
}

struct Assignment {
  std::vector<std::size_t> cluster;
  std::vector<double> dist;  // squared distance to assigned centroid
};

void assign(const Problem& p, std::span<const double> centroids, std::size_t k,
            unsigned workers, Assignment& a) {
  a.cluster.resize(p.rows);
  a.dist.resize(p.rows);
  parallel_for(p.rows, workers, [&](std::size_t i) {
    const auto x = p.row(i);
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < k; ++c) {
      const double d = squared_distance(x, centroids.subspan(c * p.dim, p.dim));
      if (d < best_d) {
        best_d = d;
        best = c;
      }
    }
    a.cluster[i] = best;
    a.dist[i] = best_d;
  });
}

// Nearest-centroid assignment; an empty cluster takes the point farthest
// from its centroid (from clusters that can spare one) and everything is
// reassigned. Gives up when no point lies off its centroid.
void assign_with_repair(const Problem& p, std::vector<double>& centroids, std::size_t k,
                        unsigned workers, Assignment& a) {
  assign(p, centroids, k, workers, a);
  for (std::size_t attempt = 0; attempt < k; ++attempt) {
    std::vector<std::size_t> counts(k, 0);
    for (auto c : a.cluster) ++counts[c];
    const auto empty = std::find(counts.begin(), counts.end(), 0);
    if (empty == counts.end()) return;
    const auto target = static_cast<std::size_t>(empty - counts.begin());
    std::size_t far = p.rows;
    double far_d = 0.0;
    for (std::size_t i = 0; i < p.rows; ++i) {
      if (counts[a.cluster[i]] > 1 && a.dist[i] > far_d) {
        far_d = a.dist[i];
        far = i;
      }
    }
    if (far == p.rows) return;
    const auto r = p.row(far);
    std::copy(r.begin(), r.end(), centroids.begin() + static_cast<std::ptrdiff_t>(target * p.dim));
    assign(p, centroids, k, workers, a);
  }
}

double sum_in_order(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

}  // namespace

double squared_distance(std::span<const double> a, std::span<const double> b) noexcept {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double d = a[j] - b[j];
    s += d * d;
  }
  return s;
}

ClusterModel kmeans(std::span<const double> data, std::size_t rows, std::size_t dim,
                    const KMeansOptions& options) {
  const std::size_t k = options.k;
  if (k == 0) throw ParameterError("k must be >= 1");
  if (k > rows) {
    throw ParameterError("k (" + std::to_string(k) + ") exceeds the number of rows (" +
                         std::to_string(rows) + ")");
  }
  if (options.max_iter == 0) throw ParameterError("max_iter must be >= 1");
  if (!(options.tol >= 0.0)) throw ParameterError("tol must be >= 0");
  if (data.size() != rows * dim) throw ParameterError("data size does not match rows * dim");

  const Problem p{data, rows, dim};
  Rng rng(options.seed);
  ClusterModel model;
  model.k = k;
  model.dim = dim;
  model.seed = options.seed;
  model.centroids = seed_centroids(p, k, rng);

  Assignment a;
  std::vector<double> sums(k * dim);
  std::vector<std::size_t> counts(k);
  for (std::size_t it = 0; it < options.max_iter; ++it) {
    assign_with_repair(p, model.centroids, k, options.workers, a);
    model.inertia_history.push_back(sum_in_order(a.dist));

    std::fill(sums.begin(), sums.end(), 0.0);
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t i = 0; i < rows; ++i) {
      const auto x = p.row(i);
      double* s = sums.data() + a.cluster[i] * dim;
      for (std::size_t j = 0; j < dim; ++j) s[j] += x[j];
      ++counts[a.cluster[i]];
    }
    double shift = 0.0;
    for (std::size_t c = 0; c < k; ++c) {
      if (counts[c] == 0) continue;
      double* centroid = model.centroids.data() + c * dim;
      const double* s = sums.data() + c * dim;
      double moved = 0.0;
      for (std::size_t j = 0; j < dim; ++j) {
        const double next = s[j] / static_cast<double>(counts[c]);
        const double d = next - centroid[j];
        moved += d * d;
        centroid[j] = next;
      }
      shift = std::max(shift, std::sqrt(moved));
    }
    ++model.iterations;
    if (shift <= options.tol) {
      model.converged = true;
      break;
    }
  }

  assign_with_repair(p, model.centroids, k, options.workers, a);
  model.assignments = std::move(a.cluster);
  model.inertia = sum_in_order(a.dist);
  model.inertia_history.push_back(model.inertia);
  return model;
}

std::vector<std::ptrdiff_t> max_weight_assignment(std::span<const double> weights,
                                                  std::size_t rows, std::size_t cols) {
  if (weights.size() != rows * cols) throw ParameterError("weight matrix size mismatch");
  const std::size_t n = std::max(rows, cols);
  if (n == 0) return {};
  double max_w = 0.0;
  for (double w : weights) max_w = std::max(max_w, w);
  auto cost = [&](std::size_t r, std::size_t c) {
    const double w = (r < rows && c < cols) ? weights[r * cols + c] : 0.0;
    return max_w - w;
  };

  // Hungarian algorithm (shortest augmenting paths with potentials), 1-based.
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = match[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::ptrdiff_t> result(rows, -1);
  for (std::size_t j = 1; j <= n; ++j) {
    const std::size_t r = match[j] - 1;
    if (r < rows && j - 1 < cols) result[r] = static_cast<std::ptrdiff_t>(j - 1);
  }
  return result;
}

double best_map_accuracy(std::span<const std::size_t> assignments,
                         std::span<const std::size_t> labels) {
  if (assignments.size() != labels.size())
    throw ParameterError("assignments and labels differ in length");
  if (labels.empty()) throw ParameterError("labels must be nonempty");
  const std::size_t k = *std::max_element(assignments.begin(), assignments.end()) + 1;
  const std::size_t l = *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<double> table(k * l, 0.0);
  for (std::size_t i = 0; i < labels.size(); ++i) table[assignments[i] * l + labels[i]] += 1.0;
  const auto match = max_weight_assignment(table, k, l);
  double agree = 0.0;
  for (std::size_t c = 0; c < k; ++c) {
    if (match[c] >= 0) agree += table[c * l + static_cast<std::size_t>(match[c])];
  }
  return agree / static_cast<double>(labels.size());
}

namespace {

std::vector<std::size_t> label_indices(std::span<const std::string> labels) {
  std::map<std::string, std::size_t> ids;
  std::vector<std::size_t> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(ids.try_emplace(l, ids.size()).first->second);
  return out;
}

}  // namespace

double best_map_accuracy(std::span<const std::size_t> assignments,
                         std::span<const std::string> labels) {
  if (assignments.size() != labels.size())
    throw ParameterError("assignments and labels differ in length");
  return best_map_accuracy(assignments, label_indices(labels));
}

double purity(std::span<const std::size_t> assignments, std::span<const std::string> labels) {
  if (assignments.size() != labels.size())
    throw ParameterError("assignments and labels differ in length");
  if (labels.empty()) throw ParameterError("labels must be nonempty");
  const auto ids = label_indices(labels);
  std::map<std::size_t, std::map<std::size_t, std::size_t>> table;
  for (std::size_t i = 0; i < ids.size(); ++i) ++table[assignments[i]][ids[i]];
  std::size_t total = 0;
  for (const auto& [cluster, counts] : table) {
    std::size_t best = 0;
    for (const auto& [label, n] : counts) best = std::max(best, n);
    total += best;
  }
  return static_cast<double>(total) / static_cast<double>(labels.size());
}

}  // namespace kgraph
