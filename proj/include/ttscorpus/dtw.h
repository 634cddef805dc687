// Copyright (c) 2026 The ttscorpus Authors
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

#ifndef TTSCORPUS_DTW_H_
#define TTSCORPUS_DTW_H_

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ttscorpus/mel_cepstrum.h"

namespace ttscorpus {

struct DtwResult {
  std::vector<std::pair<int, int>> path;  // (ref frame, syn frame)
  std::vector<double> distances;          // local distance per path pair
  double total_cost = 0.0;
};

struct DtwOptions {
  // Sakoe-Chiba half-width in frames around the length-normalized diagonal;
  // unset means unconstrained.
  std::optional<int> band;
};

// Euclidean distance over columns 1..D (column 0 is excluded).
double CepstralDistance(const Eigen::Ref<const Eigen::RowVectorXd>& a,
                        const Eigen::Ref<const Eigen::RowVectorXd>& b);

// Minimal-cost monotone alignment with steps (1,0), (0,1), (1,1) from (0,0)
// to (Tr-1, Ts-1). Backtracking prefers the diagonal, then a ref step. The
// local-distance matrix is filled in parallel; DtwAlignSerial is the
// reference. Throws kEmptySequence.
DtwResult DtwAlign(const Eigen::MatrixXd& ref, const Eigen::MatrixXd& syn,
                   const DtwOptions& opt = {});
DtwResult DtwAlignSerial(const Eigen::MatrixXd& ref, const Eigen::MatrixXd& syn,
                         const DtwOptions& opt = {});

// Mean over aligned pairs of (10 / ln 10) * sqrt(2 * sum_d (c_d - c'_d)^2).
double MelCepstralDistortion(const DtwResult& alignment);
double MelCepstralDistortion(const MelCepstraSequence& ref,
                             const MelCepstraSequence& syn,
                             const DtwOptions& opt = {});

// Audio-level MCD. With `trim` set both signals are cut to their endpointed
// speech region before analysis.
struct McdOptions {
  MelCepstrumConfig cepstrum;
  DtwOptions dtw;
  bool trim = true;
};
double MelCepstralDistortion(const AudioBuffer& ref, const AudioBuffer& syn,
                             const McdOptions& opt = {});

}  // namespace ttscorpus

#endif  // TTSCORPUS_DTW_H_
