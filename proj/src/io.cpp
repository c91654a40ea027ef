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

#include "pbs/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace pbs {

namespace {

constexpr std::string_view kInstanceHeader = "pbs-instance 1";
constexpr std::string_view kScheduleHeader = "pbs-schedule 1";

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  int line() const { return line_; }

  // Next line without its terminator; throws at end of input.
  std::string_view next(std::string_view expecting) {
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input, expected " + std::string(expecting), line_ + 1);
    const std::size_t end = text_.find('\n', pos_);
    std::string_view s = text_.substr(pos_, end == std::string_view::npos ? end : end - pos_);
    pos_ = end == std::string_view::npos ? text_.size() : end + 1;
    ++line_;
    if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
    return s;
  }

  std::vector<std::int64_t> integers(std::size_t arity, std::string_view expecting) {
    const std::string_view s = next(expecting);
    std::vector<std::int64_t> out;
    std::size_t i = 0;
    while (i < s.size()) {
      if (s[i] == ' ') {
        ++i;
        continue;
      }
      std::size_t j = s.find(' ', i);
      if (j == std::string_view::npos) j = s.size();
      const std::string_view token = s.substr(i, j - i);
      std::int64_t value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError("bad integer '" + std::string(token) + "'", line_);
      }
      out.push_back(value);
      i = j;
    }
    if (out.size() != arity) {
      throw ParseError("expected " + std::to_string(arity) + " integers (" +
                           std::string(expecting) + "), found " +
                           std::to_string(out.size()),
                       line_);
    }
    return out;
  }

  void expect_end() {
    while (pos_ < text_.size()) {
      if (!next("end of input").empty()) {
        throw ParseError("unexpected content after the last record", line_);
      }
    }
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 0;
};

void expect_header(LineReader& in, std::string_view header) {
  if (in.next(header) != header) {
    throw ParseError("expected header '" + std::string(header) + "'", in.line());
  }
}

}  // namespace

Instance parse_instance(std::string_view text) {
  LineReader in(text);
  expect_header(in, kInstanceHeader);
  const auto dims = in.integers(3, "n m d");
  if (dims[0] < 1 || dims[1] < 1) throw ParseError("station counts must be ≥ 1", in.line());
  if (dims[2] < 1) throw ParseError("overhead must be ≥ 1", in.line());
  const auto count = in.integers(1, "edge count");
  if (count[0] < 0) throw ParseError("edge count must be ≥ 0", in.line());

  std::vector<Edge> edges;
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  for (std::int64_t k = 0; k < count[0]; ++k) {
    const auto f = in.integers(3, "v u w");
    if (f[0] < 1 || f[0] > dims[0]) throw ParseError("transmitter id out of range", in.line());
    if (f[1] < 1 || f[1] > dims[1]) throw ParseError("receiver id out of range", in.line());
    if (f[2] < 1) throw ParseError("weight must be ≥ 1", in.line());
    if (!seen.insert({f[0], f[1]}).second) {
      throw ParseError("duplicate edge (" + std::to_string(f[0]) + "," +
                           std::to_string(f[1]) + ")",
                       in.line());
    }
    edges.push_back({static_cast<int>(f[0] - 1), static_cast<int>(f[1] - 1), f[2]});
  }
  in.expect_end();
  return Instance(static_cast<int>(dims[0]), static_cast<int>(dims[1]), dims[2],
                  std::move(edges));
}

std::string emit_instance(const Instance& instance) {
  std::ostringstream out;
  out << kInstanceHeader << '\n'
      << instance.n_tx() << ' ' << instance.n_rx() << ' ' << instance.overhead() << '\n'
      << instance.edges().size() << '\n';
  for (const Edge& e : instance.edges()) {
    out << e.tx + 1 << ' ' << e.rx + 1 << ' ' << e.weight << '\n';
  }
  return out.str();
}

Schedule parse_schedule(std::string_view text) {
  LineReader in(text);
  expect_header(in, kScheduleHeader);
  const auto count = in.integers(1, "packet count");
  if (count[0] < 0) throw ParseError("packet count must be ≥ 0", in.line());
  Schedule schedule;
  for (std::int64_t p = 0; p < count[0]; ++p) {
    const auto head = in.integers(2, "D k");
    if (head[0] < 0) throw ParseError("duration must be ≥ 0", in.line());
    if (head[1] < 0) throw ParseError("item count must be ≥ 0", in.line());
    Packet packet{head[0], {}};
    for (std::int64_t k = 0; k < head[1]; ++k) {
      const auto f = in.integers(3, "v u amount");
      if (f[0] < 1 || f[1] < 1) throw ParseError("station ids are 1-based", in.line());
      packet.items.push_back(
          {static_cast<int>(f[0] - 1), static_cast<int>(f[1] - 1), f[2]});
    }
    schedule.packets.push_back(std::move(packet));
  }
  in.expect_end();
  return schedule;
}

std::string emit_schedule(const Schedule& schedule) {
  std::ostringstream out;
  out << kScheduleHeader << '\n' << schedule.packets.size() << '\n';
  for (const Packet& p : schedule.packets) {
    out << p.duration << ' ' << p.items.size() << '\n';
    for (const PacketItem& it : p.items) {
      out << it.tx + 1 << ' ' << it.rx + 1 << ' ' << it.amount << '\n';
    }
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace pbs
