// Copyright 2026 The ftcons Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FTC_ERROR_HPP
#define FTC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ftc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad files, dimension mismatches, broken graph invariants.
class InputError : public Error {
 public:
  using Error::Error;
};

// The input is well formed but a construction does not apply to it
// (e.g. adjacency candidate on a non-regular graph).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ftc

#endif  // FTC_ERROR_HPP
