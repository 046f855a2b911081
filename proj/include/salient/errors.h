// Copyright 2026 The salientpref Authors
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

#ifndef SALIENT_ERRORS_H_
#define SALIENT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace salient {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Index or vector length incompatible with the feature dimension / item count.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A comparison of an item against itself.
class InvalidPairError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// NaN / Inf produced during optimization.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// A metric has no eligible support (e.g. no pairs with a strict majority).
class UndefinedMetricError : public Error {
 public:
  using Error::Error;
};

// Malformed input file. The message carries the path and line number.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace salient

#endif  // SALIENT_ERRORS_H_
