// Copyright 2026 The posetdp Authors
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

#include "posetdp/triangulation.h"

#include <cmath>
#include <string>
#include <utility>

#include "posetdp/error.h"

namespace posetdp {
namespace {

FilterChain BuildChain(const Poset& poset, const std::vector<int>& order) {
  FilterChain chain;
  chain.filters.reserve(order.size() + 1);
  Bitset filter(poset.size());
  chain.filters.push_back(filter);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    filter |= poset.UpSet(*it);
    chain.filters.push_back(filter);
  }
  return chain;
}

void ValidateChain(const Poset& poset, const FilterChain& chain,
                   const char* name) {
  const std::string tag(name);
  if (chain.filters.empty() || chain.filters.front().any()) {
    throw ValidationError(tag + " chain must start with the empty filter");
  }
  for (std::size_t i = 0; i < chain.filters.size(); ++i) {
    const Bitset& f = chain.filters[i];
    if (f.size() != poset.size()) {
      throw ValidationError(tag + " chain filter has the wrong size");
    }
    if (!IsFilter(poset, f)) {
      throw ValidationError(tag + " chain entry " + std::to_string(i) +
                            " is not upward closed");
    }
    if (i == 0) continue;
    const Bitset& prev = chain.filters[i - 1];
    if (!prev.IsSubsetOf(f) || prev == f) {
      throw ValidationError(tag + " chain is not strictly increasing at " +
                            std::to_string(i));
    }
    Bitset fresh = MinimalOf(poset, f);
    fresh.Subtract(MinimalOf(poset, prev));
    if (fresh.count() != 1) {
      throw ValidationError(tag + " chain step " + std::to_string(i) +
                            " adds " + std::to_string(fresh.count()) +
                            " minimal elements, expected 1");
    }
  }
}

std::vector<int> ReadOrder(const Poset& poset, const FilterChain& chain) {
  std::vector<int> order;
  for (std::size_t i = chain.filters.size() - 1; i >= 1; --i) {
    Bitset fresh = MinimalOf(poset, chain.filters[i]);
    fresh.Subtract(MinimalOf(poset, chain.filters[i - 1]));
    order.push_back(fresh.First());
  }
  return order;
}

}  // namespace

void ValidateChainPair(const Poset& poset, const FilterChainPair& pair) {
  ValidateChain(poset, pair.plus, "plus");
  ValidateChain(poset, pair.minus, "minus");
  const std::size_t total = pair.plus.filters.size() + pair.minus.filters.size();
  if (total != static_cast<std::size_t>(poset.size()) + 2) {
    throw ValidationError("chain pair has " + std::to_string(total) +
                          " filters, expected " +
                          std::to_string(poset.size() + 2));
  }
  for (const Bitset& jp : pair.plus.filters) {
    const Bitset min_plus = MinimalOf(poset, jp);
    for (const Bitset& jm : pair.minus.filters) {
      if (min_plus.Intersects(MinimalOf(poset, jm))) {
        throw ValidationError("chains interfere: a minimal element is shared");
      }
    }
  }
}

bool IsValidChainPair(const Poset& poset, const FilterChainPair& pair) {
  try {
    ValidateChainPair(poset, pair);
  } catch (const ValidationError&) {
    return false;
  }
  return true;
}

FilterChainPair BipartitionToChainsUnchecked(const Poset& poset,
                                             const ExtendedBipartition& eb) {
  return {BuildChain(poset, eb.a), BuildChain(poset, eb.b)};
}

FilterChainPair BipartitionToChains(const Poset& poset,
                                    const ExtendedBipartition& eb) {
  if (!IsValidBipartition(poset, eb)) {
    throw ValidationError("invalid extended bipartition: " +
                          FormatBipartition(eb));
  }
  return BipartitionToChainsUnchecked(poset, eb);
}

ExtendedBipartition ChainsToBipartition(const Poset& poset,
                                        const FilterChainPair& pair) {
  ValidateChainPair(poset, pair);
  ExtendedBipartition eb{ReadOrder(poset, pair.plus),
                         ReadOrder(poset, pair.minus)};
  if (!IsValidBipartition(poset, eb)) {
    throw ValidationError("chain pair does not encode a bipartition");
  }
  return eb;
}

Simplex::Simplex(int dimension, std::vector<std::int8_t> vertices)
    : dimension_(dimension), vertices_(std::move(vertices)) {
  if (dimension_ < 1 ||
      vertices_.size() != static_cast<std::size_t>(dimension_ + 1) *
                              static_cast<std::size_t>(dimension_)) {
    throw ValidationError("simplex needs d + 1 vertices of length d");
  }
}

Simplex ChainsToSimplex(const RootedPoset& rooted,
                        const FilterChainPair& pair) {
  const int d = rooted.dimension();
  const std::size_t count =
      pair.plus.filters.size() + pair.minus.filters.size();
  if (count != static_cast<std::size_t>(d) + 1) {
    throw ValidationError("chain pair has " + std::to_string(count) +
                          " filters; the rooted dimension needs " +
                          std::to_string(d + 1));
  }
  std::vector<std::int8_t> v(count * d, 0);
  std::size_t row = 0;
  for (int sign : {+1, -1}) {
    const FilterChain& chain = sign > 0 ? pair.plus : pair.minus;
    for (const Bitset& filter : chain.filters) {
      std::int8_t* out = v.data() + row * d;
      out[0] = static_cast<std::int8_t>(sign);
      filter.ForEach([&](int j) { out[j + 1] = static_cast<std::int8_t>(sign); });
      ++row;
    }
  }
  return Simplex(d, std::move(v));
}

Int128 SimplexAbsDeterminant(const Simplex& simplex) {
  const int d = simplex.dimension();
  std::vector<std::vector<Int128>> m(d, std::vector<Int128>(d));
  const auto v0 = simplex.vertex(0);
  for (int k = 0; k < d; ++k) {
    const auto vk = simplex.vertex(k + 1);
    for (int j = 0; j < d; ++j) m[k][j] = vk[j] - v0[j];
  }
  // Bareiss: every intermediate entry is a minor, so divisions are exact.
  Int128 sign = 1;
  Int128 prev = 1;
  for (int k = 0; k < d; ++k) {
    if (m[k][k] == 0) {
      int swap = -1;
      for (int i = k + 1; i < d; ++i) {
        if (m[i][k] != 0) {
          swap = i;
          break;
        }
      }
      if (swap < 0) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < d; ++i) {
      for (int j = k + 1; j < d; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  const Int128 det = sign * m[d - 1][d - 1];
  return det < 0 ? -det : det;
}

std::vector<double> BarycentricCoordinates(const Simplex& simplex,
                                           std::span<const double> point) {
  const int d = simplex.dimension();
  const int n = d + 1;
  if (static_cast<int>(point.size()) != d) {
    throw ValidationError("point dimension does not match the simplex");
  }
  // Columns are vertices; the last row enforces sum(lambda) = 1.
  std::vector<std::vector<double>> a(n, std::vector<double>(n + 1));
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < n; ++k) a[j][k] = simplex.vertex(k)[j];
    a[j][n] = point[j];
  }
  for (int k = 0; k < n; ++k) a[d][k] = 1.0;
  a[d][n] = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    std::swap(a[col], a[pivot]);
    if (a[col][col] == 0.0) {
      throw ValidationError("simplex vertices are affinely dependent");
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (int c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<double> lambda(n);
  for (int k = 0; k < n; ++k) lambda[k] = a[k][n] / a[k][k];
  return lambda;
}

}  // namespace posetdp
