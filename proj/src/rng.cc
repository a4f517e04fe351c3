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

#include "onlinerank/rng.h"

#include <cassert>

namespace onlinerank {

namespace {

std::uint64_t SplitMix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t DeriveSeed(std::uint64_t master, std::string_view purpose,
                         std::uint64_t index) {
  // FNV-1a over the tag.
  std::uint64_t tag = 0xcbf29ce484222325ULL;
  for (char c : purpose) {
    tag ^= static_cast<unsigned char>(c);
    tag *= 0x100000001b3ULL;
  }
  return SplitMix64(SplitMix64(SplitMix64(master) ^ tag) ^ index);
}

double Rng::Uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

bool Rng::Bernoulli(double p) { return Uniform01() < p; }

std::uint64_t Rng::UniformInt(std::uint64_t n) {
  assert(n >= 1);
  // Rejection sampling keeps the result unbiased.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return draw % n;
}

int Rng::UniformRange(int lo, int hi) {
  assert(lo <= hi);
  return lo + static_cast<int>(
                  UniformInt(static_cast<std::uint64_t>(hi - lo) + 1));
}

}  // namespace onlinerank
