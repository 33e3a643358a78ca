// Copyright 2026 The smu-codes Authors
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

#pragma once

#include <random>
#include <vector>

#include "smu/qalg.hpp"

namespace smu::testing {

inline const std::vector<Generator>& all_generators() {
  static const std::vector<Generator> gens{Generator::Alpha, Generator::AlphaStar,
                                           Generator::Gamma, Generator::GammaStar};
  return gens;
}

/// Random element built as a sum of random generator words of length <= max_degree.
inline AlgebraElement random_element(const DeformationParameter& d, int max_degree,
                                     std::mt19937_64& rng, int num_words = 4) {
  std::uniform_int_distribution<int> len(0, max_degree);
  std::uniform_int_distribution<int> pick(0, 3);
  std::normal_distribution<double> coeff(0.0, 1.0);
  AlgebraElement sum(d);
  for (int w = 0; w < num_words; ++w) {
    AlgebraElement word = AlgebraElement::scalar(d, Complex(coeff(rng), coeff(rng)));
    const int n = len(rng);
    for (int i = 0; i < n; ++i)
      word = word * AlgebraElement::generator(d, all_generators()[pick(rng)]);
    sum = sum + word;
  }
  return sum;
}

}  // namespace smu::testing
