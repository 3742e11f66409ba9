/*
 * Copyright 2026 The fuzzypref Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
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

namespace fuzzypref {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A degree outside [0,1] (or NaN), or a matrix entry that is one.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Matrix shape does not match the universe.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Two relations over different label sequences were combined.
class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownLabel : public Error {
 public:
  explicit UnknownLabel(const std::string& label)
      : Error("unknown label '" + label + "'"), label_(label) {}
  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search would exceed its configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input (JSON/CSV).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace fuzzypref
