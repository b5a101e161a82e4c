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

#ifndef POSETDP_ERROR_H_
#define POSETDP_ERROR_H_

#include <stdexcept>
#include <string>

namespace posetdp {

// Input that violates a documented precondition: malformed files, cycles,
// out-of-range indices, records that break the order. The CLI maps this to
// exit status 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A relation set that is not acyclic among distinct elements.
class CycleError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// An exhaustive routine was asked to run beyond its configured size cap.
class CapExceededError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A record (or count row) at `index` violates the poset.
class RecordError : public ValidationError {
 public:
  RecordError(std::size_t index, const std::string& what)
      : ValidationError(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

}  // namespace posetdp

#endif  // POSETDP_ERROR_H_
