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

#ifndef GHZLHV_LHV_MODEL_HPP
#define GHZLHV_LHV_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <vector>

#include "ghzlhv/settings.hpp"

namespace ghz {

/// Default bound on the total number of settings (sum over parties), so at
/// most 2^24 raw strategies are enumerated.
inline constexpr std::size_t kDefaultEnumerationCap = 24;

/// One predetermined +1/-1 outcome for every setting of every party.
struct DeterministicStrategy {
  std::vector<std::vector<std::int8_t>> assignments;

  std::vector<std::size_t> counts() const;
  friend bool operator==(const DeterministicStrategy&,
                         const DeterministicStrategy&) = default;
};

/// All 2^(sum of counts) deterministic strategies of a grid.
///
/// Strategy number `k` is read off the bits of `k`: the settings are
/// concatenated party-major (party 0 setting 0 is bit 0), and a clear bit
/// means outcome +1, a set bit -1.
class StrategyEnumeration {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = DeterministicStrategy;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = DeterministicStrategy;

    iterator() = default;
    iterator(const StrategyEnumeration* owner, std::uint64_t k)
        : owner_(owner), k_(k) {}

    DeterministicStrategy operator*() const { return owner_->at(k_); }
    iterator& operator++() {
      ++k_;
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++k_;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.k_ == b.k_;
    }

   private:
    const StrategyEnumeration* owner_ = nullptr;
    std::uint64_t k_ = 0;
  };

  /// Throws CapExceededError when the settings total exceeds `cap`.
  StrategyEnumeration(std::vector<std::size_t> counts,
                      std::size_t cap = kDefaultEnumerationCap);

  std::uint64_t size() const { return std::uint64_t{1} << total_; }
  DeterministicStrategy at(std::uint64_t k) const;

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, size()); }

  const std::vector<std::size_t>& counts() const { return counts_; }

 private:
  std::vector<std::size_t> counts_;
  std::size_t total_;
};

StrategyEnumeration enumerate_strategies(
    const SettingsGrid& grid, std::size_t cap = kDefaultEnumerationCap);

/// Rank-one +1/-1 tensor of outcome products, row-major with the last party
/// fastest (the same layout as CorrelationTensor).
struct ProductTensor {
  std::vector<std::size_t> dims;
  std::vector<std::int8_t> values;

  std::int8_t at(std::span<const std::size_t> index) const;
  friend bool operator==(const ProductTensor&, const ProductTensor&) = default;
};

ProductTensor product_tensor(const DeterministicStrategy& s);

/// Which strategies become LP columns.
enum class DedupMode {
  /// One column per distinct product tensor. Flipping the signs of an even
  /// number of parties leaves the tensor unchanged, so each column stands for
  /// 2^(N-1) raw strategies and there are 2^(sum - N + 1) columns.
  kEvenFlips,
  /// The last party's first outcome is fixed to +1: 2^(sum - 1) columns,
  /// duplicates kept. Matches the half-sized column count used in the
  /// original three-party formulation.
  kFixLastParty,
  /// Every raw strategy, 2^sum columns.
  kNone,
};

const char* to_string(DedupMode mode);

struct BasisOptions {
  DedupMode mode = DedupMode::kEvenFlips;
  std::size_t cap = kDefaultEnumerationCap;
};

/// Generators of the local-hidden-variable correlation polytope.
struct StrategyBasis {
  std::vector<std::size_t> dims;
  DedupMode mode = DedupMode::kEvenFlips;
  std::vector<ProductTensor> tensors;
  /// Raw strategies represented by each column.
  std::vector<std::uint64_t> multiplicity;
  /// Strategy number (see StrategyEnumeration) that produced each column.
  std::vector<std::uint64_t> representative;

  std::size_t size() const { return tensors.size(); }
  std::uint64_t total_multiplicity() const;
};

/// Builds the column set. In kEvenFlips mode columns are sorted
/// lexicographically (-1 before +1, row-major entries), so the output does not
/// depend on enumeration order.
StrategyBasis build_basis(const SettingsGrid& grid, const BasisOptions& opts = {});
StrategyBasis build_basis(std::span<const std::size_t> counts,
                          const BasisOptions& opts = {});

}  // namespace ghz

#endif  // GHZLHV_LHV_MODEL_HPP
