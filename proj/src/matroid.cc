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

#include "onlinerank/matroid.h"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>
#include <string>

#include "onlinerank/errors.h"

namespace onlinerank {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int Find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  // False when u and v were already connected.
  bool Union(int u, int v) {
    u = Find(u);
    v = Find(v);
    if (u == v) return false;
    parent_[u] = v;
    return true;
  }

 private:
  std::vector<int> parent_;
};

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

int GroundSize(const MatroidSpec& spec) {
  return std::visit(
      Overloaded{[](const UniformSpec& s) { return s.m; },
                 [](const PartitionSpec& s) { return s.m; },
                 [](const GraphicSpec& s) {
                   return static_cast<int>(s.edges.size());
                 },
                 [](const ExplicitSpec& s) { return s.m; }},
      spec);
}

ElementSet ToSet(const std::vector<int>& elements, int m,
                 const char* what) {
  ElementSet s;
  for (int e : elements) {
    if (e < 0 || e >= m) {
      throw InvalidInputError(std::string(what) + ": element " +
                              std::to_string(e) + " outside [0, " +
                              std::to_string(m) + ")");
    }
    if (s.Contains(e)) {
      throw InvalidInputError(std::string(what) + ": duplicate element " +
                              std::to_string(e));
    }
    s.Insert(e);
  }
  return s;
}

}  // namespace

void ValidateWeights(const WeightVector& w, int m) {
  if (static_cast<int>(w.size()) != m) {
    throw InvalidInputError("weight vector has length " +
                            std::to_string(w.size()) + ", expected " +
                            std::to_string(m));
  }
  for (std::size_t e = 0; e < w.size(); ++e) {
    if (!(w[e] >= 0.0)) {
      throw InvalidInputError("negative weight at element " +
                              std::to_string(e));
    }
  }
}

struct Matroid::RankTable {
  std::once_flag once;
  std::vector<std::uint8_t> ranks;
};

Matroid::Matroid(MatroidSpec spec)
    : spec_(std::move(spec)),
      m_(GroundSize(spec_)),
      table_(std::make_shared<RankTable>()) {
  if (m_ < 0) throw InvalidInputError("ground-set size must be nonnegative");
  std::visit(
      Overloaded{
          [&](const UniformSpec& s) {
            if (s.k < 0) throw InvalidInputError("uniform rank k < 0");
          },
          [&](const PartitionSpec& s) {
            if (s.blocks.size() != s.caps.size()) {
              throw InvalidInputError("partition: blocks/caps size mismatch");
            }
            block_of_.assign(m_, -1);
            for (std::size_t b = 0; b < s.blocks.size(); ++b) {
              if (s.caps[b] < 0) {
                throw InvalidInputError("partition: negative capacity");
              }
              for (int e : s.blocks[b]) {
                if (e < 0 || e >= m_) {
                  throw InvalidInputError("partition: element " +
                                          std::to_string(e) + " out of range");
                }
                if (block_of_[e] != -1) {
                  throw InvalidInputError("partition: element " +
                                          std::to_string(e) +
                                          " in two blocks");
                }
                block_of_[e] = static_cast<int>(b);
              }
            }
            for (int e = 0; e < m_; ++e) {
              if (block_of_[e] == -1) {
                throw InvalidInputError("partition: element " +
                                        std::to_string(e) +
                                        " not covered by any block");
              }
            }
          },
          [&](const GraphicSpec& s) {
            if (s.num_vertices < 0) {
              throw InvalidInputError("graphic: negative vertex count");
            }
            for (const auto& [u, v] : s.edges) {
              if (u < 0 || v < 0 || u >= s.num_vertices ||
                  v >= s.num_vertices) {
                throw InvalidInputError("graphic: edge endpoint out of range");
              }
            }
          },
          [&](const ExplicitSpec& s) {
            for (const auto& c : s.circuits) {
              if (c.empty()) throw InvalidInputError("explicit: empty circuit");
              circuits_.push_back(ToSet(c, m_, "explicit circuit"));
            }
            const std::size_t n = circuits_.size();
            for (std::size_t a = 0; a < n; ++a) {
              for (std::size_t b = 0; b < n; ++b) {
                if (a == b) continue;
                if (circuits_[a].IsSubsetOf(circuits_[b])) {
                  throw InvalidInputError(
                      "explicit: circuit contained in another circuit");
                }
              }
            }
            // Weak elimination: for distinct C1, C2 and e in both, some
            // circuit lies inside (C1 u C2) - e.
            for (std::size_t a = 0; a < n; ++a) {
              for (std::size_t b = a + 1; b < n; ++b) {
                const ElementSet both = circuits_[a] & circuits_[b];
                const ElementSet joint = circuits_[a] | circuits_[b];
                both.ForEach([&](int e) {
                  ElementSet rest = joint;
                  rest.Erase(e);
                  const bool found = std::any_of(
                      circuits_.begin(), circuits_.end(),
                      [&](const ElementSet& c) { return c.IsSubsetOf(rest); });
                  if (!found) {
                    throw InvalidInputError(
                        "explicit: circuits violate the elimination axiom");
                  }
                });
              }
            }
          }},
      spec_);
}

bool Matroid::HasClosedForm() const {
  return std::holds_alternative<UniformSpec>(spec_) ||
         std::holds_alternative<PartitionSpec>(spec_);
}

void Matroid::CheckElements(const ElementSet& s) const {
  if (s.Max() >= m_) {
    throw InvalidInputError("element " + std::to_string(s.Max()) +
                            " outside ground set of size " +
                            std::to_string(m_));
  }
}

bool Matroid::IndependentUnchecked(const ElementSet& s) const {
  return std::visit(
      Overloaded{
          [&](const UniformSpec& u) { return s.Size() <= u.k; },
          [&](const PartitionSpec& p) {
            std::vector<int> count(p.blocks.size(), 0);
            bool ok = true;
            s.ForEach([&](int e) {
              if (++count[block_of_[e]] > p.caps[block_of_[e]]) ok = false;
            });
            return ok;
          },
          [&](const GraphicSpec& g) {
            UnionFind uf(g.num_vertices);
            bool ok = true;
            s.ForEach([&](int e) {
              if (ok && !uf.Union(g.edges[e].first, g.edges[e].second)) {
                ok = false;
              }
            });
            return ok;
          },
          [&](const ExplicitSpec&) {
            return std::none_of(
                circuits_.begin(), circuits_.end(),
                [&](const ElementSet& c) { return c.IsSubsetOf(s); });
          }},
      spec_);
}

int Matroid::RankUnchecked(const ElementSet& s) const {
  return std::visit(
      Overloaded{
          [&](const UniformSpec& u) { return std::min(s.Size(), u.k); },
          [&](const PartitionSpec& p) {
            std::vector<int> count(p.blocks.size(), 0);
            s.ForEach([&](int e) { ++count[block_of_[e]]; });
            int r = 0;
            for (std::size_t b = 0; b < count.size(); ++b) {
              r += std::min(count[b], p.caps[b]);
            }
            return r;
          },
          [&](const GraphicSpec& g) {
            UnionFind uf(g.num_vertices);
            int r = 0;
            s.ForEach([&](int e) {
              if (uf.Union(g.edges[e].first, g.edges[e].second)) ++r;
            });
            return r;
          },
          [&](const ExplicitSpec&) { return RankByAugmentation(s); }},
      spec_);
}

bool Matroid::IsIndependent(const ElementSet& s) const {
  CheckElements(s);
  return IndependentUnchecked(s);
}

int Matroid::Rank(const ElementSet& s) const {
  CheckElements(s);
  if (m_ <= kMaxEnumerationSize && !HasClosedForm()) {
    return Table()[s.ToMask()];
  }
  return RankUnchecked(s);
}

int Matroid::RankByAugmentation(const ElementSet& s) const {
  CheckElements(s);
  ElementSet basis;
  s.ForEach([&](int e) {
    basis.Insert(e);
    if (!IndependentUnchecked(basis)) basis.Erase(e);
  });
  return basis.Size();
}

ElementSet Matroid::Span(const ElementSet& s) const {
  CheckElements(s);
  const int r = Rank(s);
  ElementSet out = s;
  for (int e = 0; e < m_; ++e) {
    if (s.Contains(e)) continue;
    ElementSet t = s;
    t.Insert(e);
    if (Rank(t) == r) out.Insert(e);
  }
  return out;
}

bool Matroid::IsLoop(int e) const {
  if (e < 0 || e >= m_) {
    throw InvalidInputError("element " + std::to_string(e) + " out of range");
  }
  return !IndependentUnchecked(ElementSet{e});
}

ElementSet Matroid::MaxWeightIndependentSubset(const ElementSet& s,
                                               const WeightVector& w) const {
  ValidateWeights(w, m_);
  CheckElements(s);
  std::vector<int> order = s.Elements();
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return w[a] > w[b]; });
  ElementSet basis;
  for (int e : order) {
    basis.Insert(e);
    if (!IndependentUnchecked(basis)) basis.Erase(e);
  }
  return basis;
}

double Matroid::WeightedRank(const ElementSet& s, const WeightVector& w) const {
  const ElementSet basis = MaxWeightIndependentSubset(s, w);
  double total = 0.0;
  basis.ForEach([&](int e) { total += w[e]; });
  return total;
}

ElementSet Matroid::MaxWeightBasis(const WeightVector& w) const {
  return MaxWeightIndependentSubset(GroundSet(), w);
}

const std::vector<std::uint8_t>& Matroid::Table() const {
  if (m_ > kMaxEnumerationSize) {
    throw CapabilityError("rank table requires m <= " +
                          std::to_string(kMaxEnumerationSize) + ", got m = " +
                          std::to_string(m_));
  }
  std::call_once(table_->once, [&] {
    const std::uint32_t count = std::uint32_t{1} << m_;
    table_->ranks.resize(count);
    for (std::uint32_t mask = 0; mask < count; ++mask) {
      table_->ranks[mask] =
          static_cast<std::uint8_t>(RankUnchecked(ElementSet::FromMask(mask)));
    }
  });
  return table_->ranks;
}

int Matroid::RankOfMask(std::uint32_t mask) const { return Table()[mask]; }

Matroid Matroid::DeleteElements(const ElementSet& removed) const {
  CheckElements(removed);
  return std::visit(
      Overloaded{
          [&](const UniformSpec& u) {
            PartitionSpec p{u.m, {}, {}};
            const ElementSet kept = GroundSet() - removed;
            if (!kept.Empty()) {
              p.blocks.push_back(kept.Elements());
              p.caps.push_back(u.k);
            }
            if (!removed.Empty()) {
              p.blocks.push_back(removed.Elements());
              p.caps.push_back(0);
            }
            return Matroid(p);
          },
          [&](const PartitionSpec& old) {
            PartitionSpec p{old.m, {}, {}};
            for (std::size_t b = 0; b < old.blocks.size(); ++b) {
              std::vector<int> kept;
              for (int e : old.blocks[b]) {
                if (!removed.Contains(e)) kept.push_back(e);
              }
              if (kept.empty()) continue;
              p.blocks.push_back(std::move(kept));
              p.caps.push_back(old.caps[b]);
            }
            if (!removed.Empty()) {
              p.blocks.push_back(removed.Elements());
              p.caps.push_back(0);
            }
            return Matroid(p);
          },
          [&](const GraphicSpec& old) {
            GraphicSpec g = old;
            removed.ForEach([&](int e) {
              g.edges[e].second = g.edges[e].first;
            });
            return Matroid(g);
          },
          [&](const ExplicitSpec& old) {
            ExplicitSpec x{old.m, {}};
            for (std::size_t c = 0; c < circuits_.size(); ++c) {
              if ((circuits_[c] & removed).Empty()) {
                x.circuits.push_back(old.circuits[c]);
              }
            }
            removed.ForEach([&](int e) { x.circuits.push_back({e}); });
            return Matroid(x);
          }},
      spec_);
}

std::vector<std::vector<int>> Circuits(const Matroid& matroid) {
  const int m = matroid.ground_size();
  if (m > kMaxEnumerationSize) {
    throw CapabilityError("circuit enumeration requires m <= " +
                          std::to_string(kMaxEnumerationSize));
  }
  // A dependent set is a circuit iff removing any single element makes it
  // independent, i.e. rank(C) = |C| - 1 and every C - e is independent.
  std::vector<std::uint32_t> masks;
  const std::uint32_t count = std::uint32_t{1} << m;
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    const int size = std::popcount(mask);
    if (matroid.RankOfMask(mask) == size) continue;
    bool minimal = true;
    for (std::uint32_t bits = mask; bits != 0 && minimal; bits &= bits - 1) {
      const std::uint32_t without = mask & ~(bits & -bits);
      if (matroid.RankOfMask(without) != size - 1) minimal = false;
    }
    if (minimal) masks.push_back(mask);
  }
  std::vector<std::vector<int>> out;
  out.reserve(masks.size());
  for (std::uint32_t mask : masks) {
    out.push_back(ElementSet::FromMask(mask).Elements());
  }
  return out;
}

}  // namespace onlinerank
