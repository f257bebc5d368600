// Copyright 2026 The Authors.
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

#ifndef SUBSTREAM_FORMATS_HPP_
#define SUBSTREAM_FORMATS_HPP_

#include <iosfwd>
#include <string>

#include "substream/framework.hpp"
#include "substream/oracle.hpp"

namespace substream {

struct ProblemInput {
  Instance instance;
  OracleSpec oracle_spec;
};

// Two file formats, both line-based with '#' comments, element ids assigned
// by position starting at 1.
//
// Terse graph format (modular weights):
//   graph <n>
//   <u> <v> <w>            one edge per line, 1 <= u < v <= n, w >= 0
//
// Structured format:
//   kind graph|hypergraph|matroid_intersection
//   n <int>
//   p <int>                               hypergraph / matroid kinds
//   oracle modular | coverage | saturated_additive <cap>
//   element <v1> <v2> ... : <params>      weight, or covered points
//   matroid <cap> : <ids> | <cap> : <ids> | ...   one line per matroid
//
// Malformed lines, self-loops, duplicate edges, out-of-range vertices and
// overlapping matroid parts raise ParseError with the offending line number.
ProblemInput parse_instance(std::istream& in,
                            const std::string& name = "<stream>");
ProblemInput parse_instance_file(const std::string& path);

void write_instance(std::ostream& out, const Instance& instance,
                    const OracleSpec& oracle_spec);
void write_instance_file(const std::string& path, const Instance& instance,
                         const OracleSpec& oracle_spec);

// Replays the element lines of an instance file without retaining them;
// each for_each call re-reads the file, so a multi-pass driver holds only
// its own solution between passes. The file must have parsed successfully
// once before.
class FileStreamSource final : public StreamSource {
 public:
  explicit FileStreamSource(std::string path) : path_(std::move(path)) {}
  void for_each(const std::function<void(const Element&)>& fn) override;

 private:
  std::string path_;
};

// Shortest round-trip decimal for a double ("7" for 7.0, "3.5", ...).
std::string format_double(double value);

}  // namespace substream

#endif  // SUBSTREAM_FORMATS_HPP_
