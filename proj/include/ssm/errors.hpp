// Copyright 2026 The ssm Authors.
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

namespace ssm {

// Division by zero, zero constant term in a series quotient, and similar.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An argument outside the documented domain of an operation (n < 1, odd
// population size, empty range, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A rational function evaluated at a root of its denominator.
class PoleError : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

// The guesser was handed too few points for the requested degree budget.
class DegenerateData : public DomainError {
 public:
  using DomainError::DomainError;
};

// No rational function within the degree budget reproduces the data.
class NoFit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A distribution with zero variance has no normalized moments.
class DegenerateDistribution : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

}  // namespace ssm
