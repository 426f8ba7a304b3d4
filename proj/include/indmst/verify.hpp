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

#include "indmst/instance.hpp"
#include "indmst/io.hpp"
#include "indmst/reference.hpp"

namespace indmst {

struct VerifyOptions {
  std::size_t cap = kDefaultBruteForceCap;
  std::size_t extension_cap = kDefaultExtensionCap;
};

/// Runs all three solvers and the exhaustive oracle on one instance and
/// checks that they agree, that every objective meets the F-series lower
/// bound, the extension property (when T <= extension_cap), the trace audit
/// and the exchange-list audit. Throws kCapExceeded when T > cap.
Report certify(const Instance& instance, const VerifyOptions& options = {});

/// certify() over `count` corpus instances with seeds seed, seed + 1, ...
/// Instances are processed on up to `threads` workers; the merged report is
/// identical for any thread count. A failing check records the seed of the
/// first failing instance as its violation.
Report certify_corpus(const CorpusParams& params, std::size_t count, std::uint64_t seed,
                      const VerifyOptions& options = {}, std::size_t threads = 0);

}  // namespace indmst
