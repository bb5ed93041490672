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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace kgraph {

/// Dense row-major matrix of document features with aligned ids and
/// (possibly empty) labels.
struct FeatureMatrix {
  std::size_t rows = 0;
  std::size_t dim = 0;
  std::vector<double> data;
  std::vector<std::string> doc_ids;
  std::vector<std::string> labels;  // empty, or one per row

  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(data).subspan(i * dim, dim);
  }
};

struct KMeansOptions {
  std::size_t k = 2;
  std::uint64_t seed = 42;
  std::size_t max_iter = 300;
  double tol = 1e-4;
  unsigned workers = 1;
};

struct ClusterModel {
  std::size_t k = 0;
  std::size_t dim = 0;
  std::vector<double> centroids;  // k * dim, row-major
  std::vector<std::size_t> assignments;
  double inertia = 0.0;
  std::size_t iterations = 0;
  std::uint64_t seed = 0;
  bool converged = false;
  /// Inertia after every assignment step, final assignment last.
  std::vector<double> inertia_history;

  std::span<const double> centroid(std::size_t c) const {
    return std::span<const double>(centroids).subspan(c * dim, dim);
  }

  friend bool operator==(const ClusterModel&, const ClusterModel&) = default;
};

/// Lloyd's algorithm from D^2-weighted seeding driven by a fixed-seed
/// mt19937_64. Stops when the largest centroid shift is <= tol or after
/// max_iter updates, then reassigns every point to its nearest final
/// centroid (ties go to the lower index). An emptied cluster takes the
/// point farthest from its centroid. Per-cluster sums are accumulated in
/// row order, so the model is bitwise identical for any worker count.
/// Throws ParameterError when k == 0, k > rows, max_iter == 0 or tol < 0.
ClusterModel kmeans(std::span<const double> data, std::size_t rows, std::size_t dim,
                    const KMeansOptions& options);

inline ClusterModel kmeans(const FeatureMatrix& m, const KMeansOptions& options) {
  return kmeans(m.data, m.rows, m.dim, options);
}

double squared_distance(std::span<const double> a, std::span<const double> b) noexcept;

/// Fraction of points agreeing with their label under the best injective
/// map from cluster index to label (optimal assignment on the contingency
/// table). Throws ParameterError on a length mismatch or empty input.
double best_map_accuracy(std::span<const std::size_t> assignments,
                         std::span<const std::string> labels);
double best_map_accuracy(std::span<const std::size_t> assignments,
                         std::span<const std::size_t> labels);

/// Sum over clusters of the majority label count, divided by n.
double purity(std::span<const std::size_t> assignments, std::span<const std::string> labels);

/// Maximum-weight assignment on a rows x cols matrix (row-major). Returns
/// the chosen column for each row, or -1 for rows left unmatched when
/// rows > cols.
std::vector<std::ptrdiff_t> max_weight_assignment(std::span<const double> weights,
                                                  std::size_t rows, std::size_t cols);

}  // namespace kgraph
