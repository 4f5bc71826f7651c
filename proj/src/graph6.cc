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

#include "phaseop/graph6.h"

#include <fstream>

namespace phaseop {

namespace {

constexpr int kOffset = 63;
constexpr int kMaxChar = 126;

std::string_view strip_line_end(std::string_view line) {
    if (!line.empty() && line.back() == '\n') {
        line.remove_suffix(1);
    }
    if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
    }
    return line;
}

}  // namespace

Graph6Error::Graph6Error(const std::string &what, std::size_t offset)
    : std::runtime_error("graph6 byte " + std::to_string(offset) + ": " + what), offset_(offset) {}

Graph parse_graph6(std::string_view line) {
    line = strip_line_end(line);
    if (line.empty()) {
        throw Graph6Error("empty input", 0);
    }
    for (std::size_t i = 0; i < line.size(); ++i) {
        int c = static_cast<unsigned char>(line[i]);
        if (c < kOffset || c > kMaxChar) {
            throw Graph6Error("character " + std::to_string(c) + " outside [63, 126]", i);
        }
    }
    int head = static_cast<unsigned char>(line[0]);
    if (head == kMaxChar) {
        throw Graph6Error("long-form vertex counts (n > 62) are not supported", 0);
    }
    std::size_t n = static_cast<std::size_t>(head - kOffset);
    if (n < 1 || n > kMaxVertices) {
        throw Graph6Error("vertex count " + std::to_string(n) + " outside [1, " + std::to_string(kMaxVertices) + "]", 0);
    }

    std::size_t num_bits = n * (n - 1) / 2;
    std::size_t expected = 1 + (num_bits + 5) / 6;
    if (line.size() < expected) {
        throw Graph6Error("truncated: expected " + std::to_string(expected) + " bytes", line.size());
    }
    if (line.size() > expected) {
        throw Graph6Error("trailing garbage", expected);
    }

    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++bit) {
            int chunk = static_cast<unsigned char>(line[1 + bit / 6]) - kOffset;
            if (chunk >> (5 - bit % 6) & 1) {
                edges.push_back({i, j});
            }
        }
    }
    for (; bit % 6 != 0; ++bit) {
        int chunk = static_cast<unsigned char>(line[1 + bit / 6]) - kOffset;
        if (chunk >> (5 - bit % 6) & 1) {
            throw Graph6Error("nonzero padding bits", 1 + bit / 6);
        }
    }
    return Graph(n, edges);
}

std::string encode_graph6(const Graph &g) {
    std::size_t n = g.num_vertices();
    std::size_t num_bits = n * (n - 1) / 2;
    std::vector<int> chunks((num_bits + 5) / 6, 0);
    std::size_t bit = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++bit) {
            if (g.has_edge(i, j)) {
                chunks[bit / 6] |= 1 << (5 - bit % 6);
            }
        }
    }
    std::string out(1, static_cast<char>(kOffset + n));
    for (int chunk : chunks) {
        out.push_back(static_cast<char>(kOffset + chunk));
    }
    return out;
}

std::vector<Graph6Entry> read_graph6_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open graph6 file " + path.string());
    }
    std::vector<Graph6Entry> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view text = strip_line_end(line);
        if (line_no == 1 && text.starts_with(">>graph6<<")) {
            text.remove_prefix(10);
        }
        if (text.empty()) {
            continue;
        }
        try {
            out.push_back({std::string(text), parse_graph6(text)});
        } catch (const Graph6Error &e) {
            throw Graph6Error(path.string() + ":" + std::to_string(line_no) + ": " + e.what(), e.offset());
        }
    }
    return out;
}

}  // namespace phaseop
