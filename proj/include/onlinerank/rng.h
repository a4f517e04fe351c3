// Copyright 2026 The Authors.
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

#ifndef ONLINERANK_RNG_H_
#define ONLINERANK_RNG_H_

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace onlinerank {

// Mixes a master seed, a purpose tag and an index into an independent stream
// seed, so that e.g. the alpha guess and the rounding coins of one trial never
// share draws.
std::uint64_t DeriveSeed(std::uint64_t master, std::string_view purpose,
                         std::uint64_t index = 0);

// Seeded random source. Conversions to doubles and bounded integers are done
// here rather than through <random> distributions, whose output is
// implementation-defined, so a seed reproduces bit-identical draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng ForStream(std::uint64_t master, std::string_view purpose,
                       std::uint64_t index = 0) {
    return Rng(DeriveSeed(master, purpose, index));
  }

  std::uint64_t NextU64() { return engine_(); }
  // Uniform on [0, 1) with 53 random bits.
  double Uniform01();
  // True with probability p (p <= 0 never, p >= 1 always).
  bool Bernoulli(double p);
  // Uniform on [0, n); n >= 1.
  std::uint64_t UniformInt(std::uint64_t n);
  // Uniform on [lo, hi].
  int UniformRange(int lo, int hi);

  template <typename T>
  void Shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[UniformInt(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace onlinerank

#endif  // ONLINERANK_RNG_H_
