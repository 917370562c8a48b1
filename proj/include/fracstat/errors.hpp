// Copyright 2026 The fracstat Authors
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

#include <stdexcept>
#include <string>

namespace fracstat {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid argument / failed validation (CLI exit code 2).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Numerical precondition failures (CLI exit code 3).
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// IO failures (CLI exit code 4).
class IoError : public Error {
 public:
  using Error::Error;
};

class SingularAngleError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class GridTooCoarseError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NotPositiveDefiniteError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DegreeOutOfRangeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class SizeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DimensionMismatchError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class OutOfIntervalError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DomainError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotPsdError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class SeedRequiredError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class TooFewRealizationsError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class GridMismatchError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace fracstat
