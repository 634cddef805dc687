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

#include "ttscorpus/summary.h"

#include <cmath>
#include <cstdio>

#include "ttscorpus/error.h"

namespace ttscorpus {

MeanStd ComputeMeanStd(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorCode::kEmptyInput, "no values");
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / static_cast<double>(values.size())),
          static_cast<int>(values.size())};
}

std::string FormatMeanStd(double mean, double std, int decimals) {
  // Avoid rendering "-0.00".
  auto clean = [decimals](double v) {
    const double scale = std::pow(10.0, decimals);
    return std::round(v * scale) == 0.0 ? 0.0 : v;
  };
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f±%.*f", decimals, clean(mean),
                decimals, clean(std));
  return buf;
}

}  // namespace ttscorpus
