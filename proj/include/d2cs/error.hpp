/*
 * Copyright 2026 The d2cs Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace d2cs {

/// Malformed or out-of-range input supplied by a caller.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The exhaustive oracle refused a graph above its vertex cap.
class OracleLimitError : public InputError {
 public:
  OracleLimitError(int n, int limit)
      : InputError("graph has " + std::to_string(n) +
                   " vertices, above the oracle limit of " +
                   std::to_string(limit) +
                   " (raise with --limit or D2CS_ORACLE_LIMIT)"),
        n_(n),
        limit_(limit) {}

  int vertices() const noexcept { return n_; }
  int limit() const noexcept { return limit_; }

 private:
  int n_;
  int limit_;
};

/// A self-consistency check inside the library failed.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace d2cs
