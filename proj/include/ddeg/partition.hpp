// Copyright 2026 The ddeg Authors
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

#ifndef DDEG_PARTITION_HPP_
#define DDEG_PARTITION_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ddeg/clusters.hpp"
#include "ddeg/error.hpp"
#include "ddeg/graph.hpp"

namespace ddeg {

// All logarithms here are natural. The relax_* factors scale the
// probability-side constants only; conclusions (i), (iii), (iv) are always
// checked exactly.
struct PartitionConfig {
  std::size_t k = 16;
  double m = 8;
  double lambda = 2;
  double alpha = 1;
  std::size_t max_attempts = 200;
  bool strict = true;
  double relax_floor = 1;  // degree floor relax_floor * M log^2 n
  double relax_a2 = 1;     // A2 cap scale
  double relax_a3 = 1;     // A3 diversity threshold scale (on 2^15 log n)
  double relax_ii = 1;     // conclusion (ii) bound scale
  double relax_v = 1;      // conclusion (v) bound scale
};

struct AttemptRecord {
  std::size_t index = 0;
  std::size_t u_size = 0;
  bool a1 = false;
  bool a2 = false;
  bool a3 = false;
  // Set only when all events held: whether (i), (iii), (iv) verified.
  bool verified = false;
};

struct PartitionResult {
  std::vector<Vertex> u_list;
  std::vector<VertexSet> v_sets;
  VertexSet s;
  std::vector<double> d_list;
  double gamma = 0;
  std::size_t t = 0;
  // Bucket and sampling parameters of the successful attempt.
  std::size_t bucket_l = 0;
  std::size_t bucket_t = 0;
  std::size_t bucket_size = 0;
  double p = 0;
  std::vector<AttemptRecord> event_log;
  std::size_t attempts_used = 0;
  // Hypothesis violations tolerated in relaxed mode.
  std::vector<std::string> violations;
};

class AttemptsExhausted : public ConstructionError {
 public:
  AttemptsExhausted(const std::string& what, std::vector<AttemptRecord> log)
      : ConstructionError(what), log_(std::move(log)) {}
  const std::vector<AttemptRecord>& log() const { return log_; }

 private:
  std::vector<AttemptRecord> log_;
};

// {v : relax_floor M log^2 n <= d(v) <= n/2, d(v) >= 1, |W_*(v)| <= alpha n},
// clusters taken with S = V.
VertexSet eligible_set(const Graph& g, const PartitionConfig& cfg);

PartitionResult run_partition(const Graph& g, const VertexSet& a, const PartitionConfig& cfg,
                              std::uint64_t seed);

struct ConclusionCheck {
  std::string name;
  bool ok = false;
  double measured = 0;
  double bound = 0;
  std::string detail;
};

struct PartitionReport {
  std::vector<ConclusionCheck> checks;  // (i) .. (v), in order
  double gamma_recomputed = 0;
  bool exact_ok() const;  // (i), (iii), (iv)
  bool all_ok() const;
};

PartitionReport verify_partition(const Graph& g, const PartitionResult& res,
                                 const PartitionConfig& cfg);

}  // namespace ddeg

#endif  // DDEG_PARTITION_HPP_
