// Copyright 2026 The ovaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace ovaug {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad rate, alpha out of range, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Two operands that must agree in shape, length or grid do not.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// A serialized file is truncated, malformed or otherwise unreadable as its format.
class CorruptFile : public Error {
 public:
  using Error::Error;
};

/// A serialized file carries a format version this build does not understand.
class VersionMismatch : public Error {
 public:
  using Error::Error;
};

/// Filesystem-level failure (missing file, permission, short write).
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace ovaug
