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

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace indmst {

/// Dense index into a ground set.
using ElementId = std::size_t;

/// Element weight. Integral so that every comparison and sum is exact.
using Weight = std::int64_t;

/// Subset of a fixed-size ground set {0, ..., ground_size - 1}.
///
/// Membership is a flat byte vector, so contains/insert/erase are O(1).
/// Iteration always visits members in ascending id order, which is what
/// makes every greedy scan and tie-break in the library deterministic.
class ElementSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = ElementId;
    using difference_type = std::ptrdiff_t;
    using pointer = const ElementId*;
    using reference = ElementId;

    const_iterator() = default;
    const_iterator(const ElementSet* set, ElementId pos) : set_(set), pos_(pos) {
      skip();
    }

    ElementId operator*() const { return pos_; }
    const_iterator& operator++() {
      ++pos_;
      skip();
      return *this;
    }
    const_iterator operator++(int) {
      const_iterator tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const const_iterator& other) const { return pos_ == other.pos_; }

   private:
    void skip() {
      while (set_ != nullptr && pos_ < set_->bits_.size() && !set_->bits_[pos_]) ++pos_;
    }

    const ElementSet* set_ = nullptr;
    ElementId pos_ = 0;
  };

  ElementSet() = default;
  explicit ElementSet(std::size_t ground_size) : bits_(ground_size, 0) {}
  ElementSet(std::size_t ground_size, std::initializer_list<ElementId> members);

  static ElementSet full(std::size_t ground_size);

  std::size_t ground_size() const { return bits_.size(); }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(ElementId e) const { return e < bits_.size() && bits_[e] != 0; }

  /// Returns true if e was not already a member.
  bool insert(ElementId e);
  /// Returns true if e was a member.
  bool erase(ElementId e);
  void clear();

  const_iterator begin() const { return const_iterator(this, 0); }
  const_iterator end() const { return const_iterator(this, bits_.size()); }

  std::vector<ElementId> to_vector() const;

  /// Copies with one element added or removed.
  ElementSet with(ElementId e) const;
  ElementSet without(ElementId e) const;

  bool is_subset_of(const ElementSet& other) const;

  bool operator==(const ElementSet& other) const {
    return count_ == other.count_ && bits_ == other.bits_;
  }

 private:
  std::vector<unsigned char> bits_;
  std::size_t count_ = 0;
};

ElementSet set_union(const ElementSet& a, const ElementSet& b);
ElementSet set_difference(const ElementSet& a, const ElementSet& b);
ElementSet set_intersection(const ElementSet& a, const ElementSet& b);

/// Sum of weights over the members of a set.
Weight total_weight(const ElementSet& set, const std::vector<Weight>& weights);

}  // namespace indmst
