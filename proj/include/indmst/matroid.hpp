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

#pragma once

#include <memory>
#include <span>
#include <vector>

#include "indmst/element_set.hpp"

namespace indmst {

/// Independent set that only grows. can_add(e) answers whether the current
/// set plus e is still independent.
class GrowingSet {
 public:
  virtual ~GrowingSet() = default;
  virtual bool can_add(ElementId e) const = 0;
  virtual void add(ElementId e) = 0;
  virtual const ElementSet& members() const = 0;
};

/// Independent set supporting insertion and deletion, used to maintain the
/// exchange forest of the one-pass solver.
class ExchangeSet {
 public:
  virtual ~ExchangeSet() = default;
  /// Circuit of members + e (including e), or an empty vector if members + e
  /// is independent. Ascending id order.
  virtual std::vector<ElementId> circuit_with(ElementId e) const = 0;
  /// Caller guarantees members + e is independent.
  virtual void add(ElementId e) = 0;
  virtual void remove(ElementId e) = 0;
  virtual const ElementSet& members() const = 0;
};

/// Independence oracle for a matroid M = (E, I) on the ground set
/// {0, ..., ground_size() - 1}.
///
/// Implementations must be pure: the same query always gets the same answer.
/// The virtual helpers below have oracle-only default implementations; a
/// concrete matroid with more structure (e.g. graphic) overrides them with
/// faster routines but must keep the same results.
class MatroidOracle {
 public:
  virtual ~MatroidOracle() = default;

  virtual std::size_t ground_size() const = 0;
  virtual bool is_independent(const ElementSet& set) const = 0;

  /// Unique circuit of X + e. Preconditions are checked by find_circuit().
  /// The default extracts it with |X| removal tests.
  virtual ElementSet circuit_of(const ElementSet& independent, ElementId e) const;

  virtual std::unique_ptr<GrowingSet> make_growing_set() const;
  virtual std::unique_ptr<ExchangeSet> make_exchange_set() const;
};

/// Size of a maximal independent subset of `set`.
std::size_t rank(const MatroidOracle& oracle, const ElementSet& set);

/// {e : rank(set + e) = rank(set)}.
ElementSet closure(const MatroidOracle& oracle, const ElementSet& set);

/// The unique circuit C of independent + e; e is always in C.
/// Throws kPreconditionViolated if `independent` is dependent or if
/// independent + e is independent.
ElementSet find_circuit(const MatroidOracle& oracle, const ElementSet& independent,
                        ElementId e);

/// Matroid greedy over `restrict`: nondecreasing weight, ties by ascending id.
ElementSet min_weight_basis(const MatroidOracle& oracle, const ElementSet& restrict,
                            std::span<const Weight> weights);

/// Some e' in y_basis with x_basis - e + e' and y_basis - e' + e both bases.
/// Scans y_basis in ascending id. Throws kInternalInvariantBroken when no
/// witness exists, which can only happen if the oracle is not a matroid.
ElementId strong_exchange_witness(const MatroidOracle& oracle, const ElementSet& x_basis,
                                  const ElementSet& y_basis, ElementId e);

/// Uniform matroid U(r, n): every set of at most r elements is independent.
class UniformMatroid final : public MatroidOracle {
 public:
  UniformMatroid(std::size_t rank, std::size_t ground_size);

  std::size_t ground_size() const override { return ground_size_; }
  bool is_independent(const ElementSet& set) const override {
    return set.size() <= rank_;
  }

 private:
  std::size_t rank_;
  std::size_t ground_size_;
};

/// Partition matroid: element e belongs to block block_of[e], and a set is
/// independent when it holds at most capacity[b] elements of every block b.
class PartitionMatroid final : public MatroidOracle {
 public:
  PartitionMatroid(std::vector<std::size_t> block_of, std::vector<std::size_t> capacity);

  std::size_t ground_size() const override { return block_of_.size(); }
  bool is_independent(const ElementSet& set) const override;

  const std::vector<std::size_t>& block_of() const { return block_of_; }
  const std::vector<std::size_t>& capacity() const { return capacity_; }

 private:
  std::vector<std::size_t> block_of_;
  std::vector<std::size_t> capacity_;
};

}  // namespace indmst
