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

#include "indmst/element_set.hpp"

#include <cassert>

#include "indmst/error.hpp"

namespace indmst {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError: return "PARSE_ERROR";
    case ErrorCode::kInfeasibleInstance: return "INFEASIBLE_INSTANCE";
    case ErrorCode::kOverflowRisk: return "OVERFLOW_RISK";
    case ErrorCode::kPreconditionViolated: return "PRECONDITION_VIOLATED";
    case ErrorCode::kInternalInvariantBroken: return "INTERNAL_INVARIANT_BROKEN";
    case ErrorCode::kCapExceeded: return "CAP_EXCEEDED";
    case ErrorCode::kInvalidParams: return "INVALID_PARAMS";
  }
  return "UNKNOWN";
}

ElementSet::ElementSet(std::size_t ground_size, std::initializer_list<ElementId> members)
    : bits_(ground_size, 0) {
  for (ElementId e : members) insert(e);
}

ElementSet ElementSet::full(std::size_t ground_size) {
  ElementSet s(ground_size);
  for (ElementId e = 0; e < ground_size; ++e) s.insert(e);
  return s;
}

bool ElementSet::insert(ElementId e) {
  assert(e < bits_.size());
  if (bits_[e]) return false;
  bits_[e] = 1;
  ++count_;
  return true;
}

bool ElementSet::erase(ElementId e) {
  if (!contains(e)) return false;
  bits_[e] = 0;
  --count_;
  return true;
}

void ElementSet::clear() {
  std::fill(bits_.begin(), bits_.end(), 0);
  count_ = 0;
}

std::vector<ElementId> ElementSet::to_vector() const {
  std::vector<ElementId> out;
  out.reserve(count_);
  for (ElementId e : *this) out.push_back(e);
  return out;
}

ElementSet ElementSet::with(ElementId e) const {
  ElementSet copy = *this;
  copy.insert(e);
  return copy;
}

ElementSet ElementSet::without(ElementId e) const {
  ElementSet copy = *this;
  copy.erase(e);
  return copy;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  for (ElementId e : *this) {
    if (!other.contains(e)) return false;
  }
  return true;
}

ElementSet set_union(const ElementSet& a, const ElementSet& b) {
  ElementSet out = a;
  for (ElementId e : b) out.insert(e);
  return out;
}

ElementSet set_difference(const ElementSet& a, const ElementSet& b) {
  ElementSet out(a.ground_size());
  for (ElementId e : a) {
    if (!b.contains(e)) out.insert(e);
  }
  return out;
}

ElementSet set_intersection(const ElementSet& a, const ElementSet& b) {
  ElementSet out(a.ground_size());
  for (ElementId e : a) {
    if (b.contains(e)) out.insert(e);
  }
  return out;
}

Weight total_weight(const ElementSet& set, const std::vector<Weight>& weights) {
  Weight sum = 0;
  for (ElementId e : set) sum += weights[e];
  return sum;
}

}  // namespace indmst
