// SPDX-License-Identifier: Apache-2.0
//
// risuav: simulation and optimization toolkit for RIS-carrying UAV networks
// Copyright (C) 2026 The risuav authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace risuav {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input outside the domain of an operation (non-positive frequency, node above the RIS, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Channel matrix without full column rank. Carries the 2-norm condition estimate.
class RankDeficientError : public Error {
public:
    RankDeficientError(const std::string &what, double condition)
        : Error(what), condition_(condition) {}
    double condition() const noexcept { return condition_; }

private:
    double condition_;
};

// Malformed configuration. `line` is 1-based, 0 when unknown.
class ConfigError : public Error {
public:
    ConfigError(const std::string &what, std::string key, int line = 0)
        : Error(what), key_(std::move(key)), line_(line) {}
    const std::string &key() const noexcept { return key_; }
    int line() const noexcept { return line_; }

private:
    std::string key_;
    int line_;
};

// Scenario failed validation; the individual violations are kept.
class ValidationError : public Error {
public:
    ValidationError(const std::string &what, std::vector<std::string> violations)
        : Error(what), violations_(std::move(violations)) {}
    const std::vector<std::string> &violations() const noexcept { return violations_; }

private:
    std::vector<std::string> violations_;
};

}  // namespace risuav
