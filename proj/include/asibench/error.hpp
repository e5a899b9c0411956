/**
 * Copyright 2026 The asibench Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ASIBENCH_ERROR_HPP
#define ASIBENCH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace asibench {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A kernel or constructor received a value outside its domain.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Malformed text or binary input. Messages carry line/record context.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates a domain invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Filesystem failure. Messages name the offending path.
class IoError : public Error {
 public:
  using Error::Error;
};

class EmptyInputError : public Error {
 public:
  using Error::Error;
};

/// CV, ASI or a relative delta is undefined at the given point.
class UndefinedMetricError : public Error {
 public:
  using Error::Error;
};

/// A classifier adapter failed to produce a label.
class AdapterError : public Error {
 public:
  using Error::Error;
};

}  // namespace asibench

#endif  // ASIBENCH_ERROR_HPP
