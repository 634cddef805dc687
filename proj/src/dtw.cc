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

#include "ttscorpus/dtw.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ttscorpus/audio_qc.h"
#include "ttscorpus/error.h"

namespace ttscorpus {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void CheckInputs(const Eigen::MatrixXd& ref, const Eigen::MatrixXd& syn) {
  if (ref.rows() == 0 || syn.rows() == 0) {
    throw Error(ErrorCode::kEmptySequence, "cannot align an empty sequence");
  }
  if (ref.cols() != syn.cols() || ref.cols() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "cepstral dimension mismatch: " + std::to_string(ref.cols()) +
                    " vs " + std::to_string(syn.cols()));
  }
}

bool InBand(Eigen::Index i, Eigen::Index j, Eigen::Index tr, Eigen::Index ts,
            const DtwOptions& opt) {
  if (!opt.band) return true;
  // Map syn index j onto the ref axis and compare with i.
  const double j_on_ref =
      ts > 1 ? static_cast<double>(j) * (tr - 1) / (ts - 1) : 0.0;
  return std::fabs(static_cast<double>(i) - j_on_ref) <= *opt.band;
}

DtwResult Accumulate(const Eigen::MatrixXd& local, const DtwOptions& opt) {
  const Eigen::Index tr = local.rows();
  const Eigen::Index ts = local.cols();
  Eigen::MatrixXd acc = Eigen::MatrixXd::Constant(tr, ts, kInf);
  for (Eigen::Index i = 0; i < tr; ++i) {
    for (Eigen::Index j = 0; j < ts; ++j) {
      if (!InBand(i, j, tr, ts, opt)) continue;
      double best;
      if (i == 0 && j == 0) {
        best = 0.0;
      } else {
        best = kInf;
        if (i > 0 && j > 0) best = std::min(best, acc(i - 1, j - 1));
        if (i > 0) best = std::min(best, acc(i - 1, j));
        if (j > 0) best = std::min(best, acc(i, j - 1));
      }
      if (best < kInf) acc(i, j) = best + local(i, j);
    }
  }
  if (!std::isfinite(acc(tr - 1, ts - 1))) {
    throw Error(ErrorCode::kInvalidArgument,
                "Sakoe-Chiba band leaves the end point unreachable");
  }

  DtwResult r;
  r.total_cost = acc(tr - 1, ts - 1);
  Eigen::Index i = tr - 1, j = ts - 1;
  r.path.emplace_back(static_cast<int>(i), static_cast<int>(j));
  while (i > 0 || j > 0) {
    const double diag = (i > 0 && j > 0) ? acc(i - 1, j - 1) : kInf;
    const double up = i > 0 ? acc(i - 1, j) : kInf;
    const double left = j > 0 ? acc(i, j - 1) : kInf;
    if (diag <= up && diag <= left) {
      --i;
      --j;
    } else if (up <= left) {
      --i;
    } else {
      --j;
    }
    r.path.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  std::reverse(r.path.begin(), r.path.end());
  r.distances.reserve(r.path.size());
  for (const auto& [a, b] : r.path) r.distances.push_back(local(a, b));
  return r;
}

}  // namespace

double CepstralDistance(const Eigen::Ref<const Eigen::RowVectorXd>& a,
                        const Eigen::Ref<const Eigen::RowVectorXd>& b) {
  const Eigen::Index d = a.size() - 1;
  return (a.tail(d) - b.tail(d)).norm();
}

DtwResult DtwAlignSerial(const Eigen::MatrixXd& ref, const Eigen::MatrixXd& syn,
                         const DtwOptions& opt) {
  CheckInputs(ref, syn);
  Eigen::MatrixXd local(ref.rows(), syn.rows());
  for (Eigen::Index i = 0; i < ref.rows(); ++i) {
    for (Eigen::Index j = 0; j < syn.rows(); ++j) {
      local(i, j) = CepstralDistance(ref.row(i), syn.row(j));
    }
  }
  return Accumulate(local, opt);
}

DtwResult DtwAlign(const Eigen::MatrixXd& ref, const Eigen::MatrixXd& syn,
                   const DtwOptions& opt) {
  CheckInputs(ref, syn);
  const Eigen::Index tr = ref.rows();
  const Eigen::Index ts = syn.rows();
  Eigen::MatrixXd local(tr, ts);
#pragma omp parallel for schedule(static)
  for (Eigen::Index i = 0; i < tr; ++i) {
    for (Eigen::Index j = 0; j < ts; ++j) {
      local(i, j) = CepstralDistance(ref.row(i), syn.row(j));
    }
  }
  return Accumulate(local, opt);
}

double MelCepstralDistortion(const DtwResult& alignment) {
  if (alignment.distances.empty()) {
    throw Error(ErrorCode::kEmptySequence, "empty alignment");
  }
  const double k = 10.0 / std::numbers::ln10 * std::numbers::sqrt2;
  double sum = 0.0;
  for (double d : alignment.distances) sum += k * d;
  return sum / static_cast<double>(alignment.distances.size());
}

double MelCepstralDistortion(const MelCepstraSequence& ref,
                             const MelCepstraSequence& syn,
                             const DtwOptions& opt) {
  return MelCepstralDistortion(DtwAlign(ref.frames, syn.frames, opt));
}

namespace {

AudioBuffer TrimToSpeech(const AudioBuffer& buf) {
  EndpointResult ep;
  try {
    ep = Endpoint(buf, QcThresholds{});
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kAllSilent) return buf;
    throw;
  }
  const int ch = std::max(1, buf.spec.channels);
  const auto sr = static_cast<double>(buf.spec.sample_rate);
  const auto b = static_cast<std::size_t>(std::lround(ep.speech_start * sr));
  const auto e = static_cast<std::size_t>(std::lround(ep.speech_end * sr));
  AudioBuffer out;
  out.spec = buf.spec;
  out.is_float = buf.is_float;
  out.samples.assign(buf.samples.begin() + b * ch, buf.samples.begin() + e * ch);
  return out;
}

}  // namespace

double MelCepstralDistortion(const AudioBuffer& ref, const AudioBuffer& syn,
                             const McdOptions& opt) {
  const AudioBuffer r = opt.trim ? TrimToSpeech(ref) : ref;
  const AudioBuffer s = opt.trim ? TrimToSpeech(syn) : syn;
  return MelCepstralDistortion(MelCepstra(r, opt.cepstrum),
                               MelCepstra(s, opt.cepstrum), opt.dtw);
}

}  // namespace ttscorpus
