// Copyright 2026 The pbs-schedule Authors
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

// Text formats for instances and schedules. LF line endings, ASCII decimal
// integers separated by single spaces, 1-based station ids.
//
//   pbs-instance 1        pbs-schedule 1
//   n m d                 P
//   E                     D k      (per packet, followed by k item lines)
//   v u w   (E lines)     v u amount

#ifndef PBS_IO_HPP_
#define PBS_IO_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include "pbs/core_model.hpp"

namespace pbs {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(what + ", line " + std::to_string(line)), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

Instance parse_instance(std::string_view text);
std::string emit_instance(const Instance& instance);

/// Parses the syntax only; whether the schedule fits an instance is
/// validate_schedule's job.
Schedule parse_schedule(std::string_view text);
std::string emit_schedule(const Schedule& schedule);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace pbs

#endif  // PBS_IO_HPP_
