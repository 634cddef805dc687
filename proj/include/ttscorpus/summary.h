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

#ifndef TTSCORPUS_SUMMARY_H_
#define TTSCORPUS_SUMMARY_H_

#include <span>
#include <string>

namespace ttscorpus {

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;  // population standard deviation
  int n = 0;
};

// Throws kEmptyInput on an empty span.
MeanStd ComputeMeanStd(std::span<const double> values);

// "7.70±0.95"
std::string FormatMeanStd(double mean, double std, int decimals = 2);

}  // namespace ttscorpus

#endif  // TTSCORPUS_SUMMARY_H_
