// Copyright 2026 The ancnet Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ancnet {

// Process exit codes shared by every CLI command.
enum class ExitCode : int {
  kSuccess = 0,
  kOther = 1,
  kParse = 2,
  kRouting = 3,
  kInvariant = 4,
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual ExitCode exit_code() const noexcept { return ExitCode::kOther; }
};

// Malformed input text, JSON or command arguments.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }
  ExitCode exit_code() const noexcept override { return ExitCode::kParse; }

 private:
  std::size_t line_;
};

// A circuit instruction the compiler cannot lower; carries its index.
class CompileError : public Error {
 public:
  CompileError(const std::string& what, std::size_t instruction)
      : Error("instruction " + std::to_string(instruction) + ": " + what),
        instruction_(instruction) {}
  std::size_t instruction() const noexcept { return instruction_; }
  ExitCode exit_code() const noexcept override { return ExitCode::kParse; }

 private:
  std::size_t instruction_;
};

class RoutingError : public CompileError {
 public:
  using CompileError::CompileError;
  ExitCode exit_code() const noexcept override { return ExitCode::kRouting; }
};

// A schedule, topology or state that breaks a structural invariant.
class InvariantError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const noexcept override { return ExitCode::kInvariant; }
};

// Master-equation integration left its accuracy envelope (dt too large).
class IntegrationError : public Error {
 public:
  using Error::Error;
};

}  // namespace ancnet
