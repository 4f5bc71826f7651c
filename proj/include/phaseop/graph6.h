// Copyright 2026 The phaseop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PHASEOP_GRAPH6_H
#define PHASEOP_GRAPH6_H

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "phaseop/graph.h"

namespace phaseop {

/// Raised on malformed graph6 input. offset() is the byte position of the
/// first offending character within the line.
class Graph6Error : public std::runtime_error {
   public:
    Graph6Error(const std::string &what, std::size_t offset);
    std::size_t offset() const { return offset_; }

   private:
    std::size_t offset_;
};

/// Decodes one graph6 line (short form only, so n <= 62; the Graph itself
/// caps n at kMaxVertices). A trailing "\n" or "\r\n" is accepted.
Graph parse_graph6(std::string_view line);

/// Encodes g in graph6 short form, without a trailing newline.
std::string encode_graph6(const Graph &g);

struct Graph6Entry {
    std::string text;
    Graph graph;
};

/// Reads every non-empty line of a graph6 file. An optional ">>graph6<<"
/// header on the first line is skipped. Parse failures are rethrown with
/// the line number prepended.
std::vector<Graph6Entry> read_graph6_file(const std::filesystem::path &path);

}  // namespace phaseop

#endif
