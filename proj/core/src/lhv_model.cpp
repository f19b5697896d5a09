// Copyright 2026 The ghzlhv Authors
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

#include "ghzlhv/lhv_model.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ghzlhv/errors.hpp"
#include "ghzlhv/quantum_model.hpp"

namespace ghz {
namespace {

std::vector<std::size_t> party_offsets(std::span<const std::size_t> counts) {
  std::vector<std::size_t> offsets(counts.size());
  std::exclusive_scan(counts.begin(), counts.end(), offsets.begin(),
                      std::size_t{0});
  return offsets;
}

std::size_t checked_total(std::span<const std::size_t> counts, std::size_t cap) {
  validate_counts(counts);
  const std::size_t total =
      std::accumulate(counts.begin(), counts.end(), std::size_t{0});
  if (total > cap || total >= 63) throw CapExceededError(total, cap);
  return total;
}

// Kronecker product of the parties' outcome vectors, read from strategy bits.
void fill_tensor(std::span<const std::size_t> counts,
                 std::span<const std::size_t> offsets, std::uint64_t bits,
                 std::vector<std::int8_t>& out) {
  out.assign(1, 1);
  std::vector<std::int8_t> next;
  for (std::size_t p = 0; p < counts.size(); ++p) {
    next.resize(out.size() * counts[p]);
    std::size_t w = 0;
    for (std::int8_t v : out) {
      for (std::size_t i = 0; i < counts[p]; ++i) {
        const bool minus = (bits >> (offsets[p] + i)) & 1u;
        next[w++] = minus ? static_cast<std::int8_t>(-v) : v;
      }
    }
    out.swap(next);
  }
}

}  // namespace

std::vector<std::size_t> DeterministicStrategy::counts() const {
  std::vector<std::size_t> out;
  for (const auto& a : assignments) out.push_back(a.size());
  return out;
}

StrategyEnumeration::StrategyEnumeration(std::vector<std::size_t> counts,
                                         std::size_t cap)
    : counts_(std::move(counts)), total_(checked_total(counts_, cap)) {}

DeterministicStrategy StrategyEnumeration::at(std::uint64_t k) const {
  DeterministicStrategy s;
  s.assignments.resize(counts_.size());
  std::size_t bit = 0;
  for (std::size_t p = 0; p < counts_.size(); ++p) {
    s.assignments[p].resize(counts_[p]);
    for (std::size_t i = 0; i < counts_[p]; ++i, ++bit) {
      s.assignments[p][i] = ((k >> bit) & 1u) ? -1 : 1;
    }
  }
  return s;
}

StrategyEnumeration enumerate_strategies(const SettingsGrid& grid,
                                         std::size_t cap) {
  return StrategyEnumeration(grid.counts(), cap);
}

std::int8_t ProductTensor::at(std::span<const std::size_t> index) const {
  return values[flat_index(dims, index)];
}

ProductTensor product_tensor(const DeterministicStrategy& s) {
  ProductTensor t;
  t.dims = s.counts();
  t.values.assign(1, 1);
  std::vector<std::int8_t> next;
  for (const auto& party : s.assignments) {
    next.clear();
    next.reserve(t.values.size() * party.size());
    for (std::int8_t v : t.values) {
      for (std::int8_t a : party) {
        if (a != 1 && a != -1) {
          throw InputError("strategy assignments must be +1 or -1");
        }
        next.push_back(static_cast<std::int8_t>(v * a));
      }
    }
    t.values.swap(next);
  }
  return t;
}

const char* to_string(DedupMode mode) {
  switch (mode) {
    case DedupMode::kEvenFlips:
      return "even-flips";
    case DedupMode::kFixLastParty:
      return "fix-last-party";
    case DedupMode::kNone:
      return "none";
  }
  return "?";
}

std::uint64_t StrategyBasis::total_multiplicity() const {
  return std::accumulate(multiplicity.begin(), multiplicity.end(),
                         std::uint64_t{0});
}

StrategyBasis build_basis(const SettingsGrid& grid, const BasisOptions& opts) {
  const auto counts = grid.counts();
  return build_basis(counts, opts);
}

StrategyBasis build_basis(std::span<const std::size_t> counts,
                          const BasisOptions& opts) {
  const std::size_t total = checked_total(counts, opts.cap);
  const auto offsets = party_offsets(counts);
  const std::size_t parties = counts.size();

  // Bits pinned to zero (+1 outcome) for the chosen quotient.
  std::vector<std::size_t> pinned;
  std::uint64_t multiplicity = 1;
  switch (opts.mode) {
    case DedupMode::kEvenFlips:
      for (std::size_t p = 1; p < parties; ++p) pinned.push_back(offsets[p]);
      multiplicity = std::uint64_t{1} << (parties - 1);
      break;
    case DedupMode::kFixLastParty:
      pinned.push_back(offsets[parties - 1]);
      multiplicity = 2;
      break;
    case DedupMode::kNone:
      break;
  }
  std::vector<std::size_t> free_bits;
  for (std::size_t b = 0; b < total; ++b) {
    if (std::find(pinned.begin(), pinned.end(), b) == pinned.end()) {
      free_bits.push_back(b);
    }
  }

  const std::uint64_t columns = std::uint64_t{1} << free_bits.size();
  std::vector<ProductTensor> tensors(columns);
  std::vector<std::uint64_t> raw(columns);
  const std::vector<std::size_t> dims(counts.begin(), counts.end());
  for (std::uint64_t j = 0; j < columns; ++j) {
    std::uint64_t k = 0;
    for (std::size_t f = 0; f < free_bits.size(); ++f) {
      if ((j >> f) & 1u) k |= std::uint64_t{1} << free_bits[f];
    }
    raw[j] = k;
    tensors[j].dims = dims;
    fill_tensor(counts, offsets, k, tensors[j].values);
  }

  std::vector<std::size_t> order(columns);
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (opts.mode == DedupMode::kEvenFlips) {
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return tensors[a].values < tensors[b].values;
    });
  }

  StrategyBasis basis;
  basis.dims = dims;
  basis.mode = opts.mode;
  basis.tensors.reserve(columns);
  basis.representative.reserve(columns);
  for (std::size_t idx : order) {
    basis.tensors.push_back(std::move(tensors[idx]));
    basis.representative.push_back(raw[idx]);
  }
  basis.multiplicity.assign(columns, multiplicity);
  return basis;
}

}  // namespace ghz
