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

#include "substream/formats.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "substream/errors.hpp"

namespace substream {

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

namespace {

struct LineReader {
  std::istream* in;
  std::string name;
  int line_no = 0;

  // Next non-blank, non-comment line, tokenized.
  std::optional<std::vector<std::string>> next() {
    std::string line;
    while (std::getline(*in, line)) {
      ++line_no;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ss(line);
      std::vector<std::string> tokens;
      std::string tok;
      while (ss >> tok) tokens.push_back(tok);
      if (!tokens.empty()) return tokens;
    }
    return std::nullopt;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(name + ":" + std::to_string(line_no) + ": " + message);
  }
};

int parse_int(const LineReader& reader, const std::string& tok) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    reader.fail("expected an integer, got '" + tok + "'");
  }
  return value;
}

double parse_num(const LineReader& reader, const std::string& tok) {
  try {
    std::size_t used = 0;
    double value = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return value;
  } catch (const std::exception&) {
    reader.fail("expected a number, got '" + tok + "'");
  }
}

struct ElementLine {
  std::vector<int> vertices;
  std::vector<double> params_num;
  std::vector<int> params_int;
};

ElementLine split_element_line(LineReader& reader,
                               const std::vector<std::string>& tokens,
                               bool int_params) {
  ElementLine out;
  std::size_t i = 1;
  for (; i < tokens.size() && tokens[i] != ":"; ++i) {
    out.vertices.push_back(parse_int(reader, tokens[i]));
  }
  if (i == tokens.size()) reader.fail("element line is missing ':'");
  for (++i; i < tokens.size(); ++i) {
    if (int_params) {
      out.params_int.push_back(parse_int(reader, tokens[i]));
    } else {
      out.params_num.push_back(parse_num(reader, tokens[i]));
    }
  }
  return out;
}

void check_edge(LineReader& reader, int n, const std::vector<int>& vertices,
                InstanceKind kind, int p, std::set<std::vector<int>>& seen) {
  if (kind == InstanceKind::graph) {
    if (vertices.size() != 2) reader.fail("graph edge needs two endpoints");
    if (vertices[0] == vertices[1]) {
      reader.fail("self-loop " + std::to_string(vertices[0]));
    }
  } else if (kind == InstanceKind::hypergraph) {
    if (vertices.empty() || static_cast<int>(vertices.size()) > p) {
      reader.fail("hyperedge must have between 1 and " + std::to_string(p) +
                  " vertices");
    }
    std::set<int> uniq(vertices.begin(), vertices.end());
    if (uniq.size() != vertices.size()) reader.fail("repeated vertex");
  }
  for (int v : vertices) {
    if (v < 1 || v > n) {
      reader.fail("vertex " + std::to_string(v) + " outside [1, " +
                  std::to_string(n) + "]");
    }
  }
  std::vector<int> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  if (kind != InstanceKind::matroid_intersection && !seen.insert(sorted).second) {
    reader.fail("duplicate edge");
  }
}

// Shared walk over both formats. on_element receives elements in stream
// order; the remaining callbacks collect oracle and matroid data and may be
// null when the caller only wants the stream replayed.
struct ParseSink {
  std::function<void(const Element&)> on_element;
  OracleSpec* oracle = nullptr;
  std::vector<PartitionMatroid>* matroids = nullptr;
  InstanceKind* kind_out = nullptr;
  int* n_out = nullptr;
  int* p_out = nullptr;
};

void parse_into(std::istream& in, const std::string& name, ParseSink sink) {
  LineReader reader{&in, name};
  auto header = reader.next();
  if (!header) reader.fail("empty instance file");

  InstanceKind kind = InstanceKind::graph;
  int n = 0;
  int p = 2;
  OracleFamilyKind family = OracleFamilyKind::modular;
  double cap = 0.0;
  std::set<std::vector<int>> seen_edges;
  std::map<int, double> weights;
  std::map<int, std::vector<int>> covers;
  int next_id = 1;

  auto emit = [&](Element e, const ElementLine& parsed) {
    if (family == OracleFamilyKind::coverage) {
      covers[e.id] = parsed.params_int;
    } else {
      if (parsed.params_num.size() != 1) {
        reader.fail("expected exactly one weight after ':'");
      }
      double w = parsed.params_num[0];
      if (w < 0.0) reader.fail("negative weight");
      weights[e.id] = w;
      if (family == OracleFamilyKind::modular) e.given_weight = w;
    }
    if (sink.on_element) sink.on_element(e);
  };

  if ((*header)[0] == "graph") {
    // Terse graph format: "graph n" then "u v w" lines.
    if (header->size() != 2) reader.fail("expected 'graph <n>'");
    n = parse_int(reader, (*header)[1]);
    while (auto tokens = reader.next()) {
      if (tokens->size() != 3) reader.fail("expected 'u v w'");
      int u = parse_int(reader, (*tokens)[0]);
      int v = parse_int(reader, (*tokens)[1]);
      double w = parse_num(reader, (*tokens)[2]);
      if (u >= v) {
        if (u == v) reader.fail("self-loop " + std::to_string(u));
        reader.fail("endpoints must satisfy u < v");
      }
      if (w < 0.0) reader.fail("negative weight");
      check_edge(reader, n, {u, v}, InstanceKind::graph, 2,
                 seen_edges);
      Element e;
      e.id = next_id++;
      e.vertices = {u, v};
      e.given_weight = w;
      weights[e.id] = w;
      if (sink.on_element) sink.on_element(e);
    }
  } else if ((*header)[0] == "kind") {
    if (header->size() != 2) reader.fail("expected 'kind <kind>'");
    const std::string& kind_name = (*header)[1];
    if (kind_name == "graph") {
      kind = InstanceKind::graph;
    } else if (kind_name == "hypergraph") {
      kind = InstanceKind::hypergraph;
    } else if (kind_name == "matroid_intersection") {
      kind = InstanceKind::matroid_intersection;
    } else {
      reader.fail("unknown kind '" + kind_name + "'");
    }

    bool saw_n = false;
    bool saw_oracle = false;
    int matroid_lines = 0;
    while (auto tokens = reader.next()) {
      const std::string& key = (*tokens)[0];
      if (key == "n") {
        if (tokens->size() != 2) reader.fail("expected 'n <int>'");
        n = parse_int(reader, (*tokens)[1]);
        saw_n = true;
      } else if (key == "p") {
        if (tokens->size() != 2) reader.fail("expected 'p <int>'");
        p = parse_int(reader, (*tokens)[1]);
      } else if (key == "oracle") {
        if (tokens->size() < 2) reader.fail("expected 'oracle <family> ...'");
        const std::string& fam = (*tokens)[1];
        if (fam == "modular") {
          family = OracleFamilyKind::modular;
          if (tokens->size() != 2) reader.fail("modular oracle takes no args");
        } else if (fam == "coverage") {
          family = OracleFamilyKind::coverage;
          if (tokens->size() != 2) reader.fail("coverage oracle takes no args");
        } else if (fam == "saturated_additive") {
          family = OracleFamilyKind::saturated_additive;
          if (tokens->size() != 3) {
            reader.fail("expected 'oracle saturated_additive <cap>'");
          }
          cap = parse_num(reader, (*tokens)[2]);
          if (cap < 0.0) reader.fail("negative cap");
        } else {
          reader.fail("unknown oracle family '" + fam + "'");
        }
        saw_oracle = true;
      } else if (key == "element") {
        if (!saw_n || !saw_oracle) {
          reader.fail("element lines must follow 'n' and 'oracle'");
        }
        ElementLine parsed = split_element_line(
            reader, *tokens, family == OracleFamilyKind::coverage);
        check_edge(reader, n, parsed.vertices, kind, p, seen_edges);
        if (kind == InstanceKind::matroid_intersection &&
            !parsed.vertices.empty()) {
          reader.fail("matroid elements carry no vertices");
        }
        Element e;
        e.id = next_id++;
        e.vertices = parsed.vertices;
        emit(std::move(e), parsed);
      } else if (key == "matroid") {
        if (kind != InstanceKind::matroid_intersection) {
          reader.fail("matroid lines only belong to matroid_intersection");
        }
        ++matroid_lines;
        if (sink.matroids) {
          std::vector<std::vector<int>> parts;
          std::vector<int> caps;
          std::vector<int> current;
          int current_cap = -1;
          bool expecting_cap = true;
          bool expecting_colon = false;
          for (std::size_t i = 1; i < tokens->size(); ++i) {
            const std::string& tok = (*tokens)[i];
            if (tok == "|") {
              if (expecting_cap || expecting_colon) {
                reader.fail("malformed matroid line");
              }
              parts.push_back(std::move(current));
              caps.push_back(current_cap);
              current.clear();
              expecting_cap = true;
            } else if (expecting_cap) {
              current_cap = parse_int(reader, tok);
              expecting_cap = false;
              expecting_colon = true;
            } else if (expecting_colon) {
              if (tok != ":") reader.fail("expected ':' after capacity");
              expecting_colon = false;
            } else {
              current.push_back(parse_int(reader, tok));
            }
          }
          if (expecting_cap || expecting_colon) {
            reader.fail("malformed matroid line");
          }
          parts.push_back(std::move(current));
          caps.push_back(current_cap);
          try {
            sink.matroids->emplace_back(std::move(parts), std::move(caps));
          } catch (const ParamError& e) {
            reader.fail(e.what());
          }
        }
      } else {
        reader.fail("unknown directive '" + key + "'");
      }
    }
    if (kind == InstanceKind::matroid_intersection && sink.matroids &&
        matroid_lines != p) {
      reader.fail("expected " + std::to_string(p) + " matroid lines, got " +
                  std::to_string(matroid_lines));
    }
  } else {
    reader.fail("expected a 'graph <n>' or 'kind <kind>' header");
  }

  if (sink.kind_out) *sink.kind_out = kind;
  if (sink.n_out) *sink.n_out = n;
  if (sink.p_out) *sink.p_out = p;
  if (sink.oracle) {
    switch (family) {
      case OracleFamilyKind::modular:
        *sink.oracle = OracleSpec::modular(std::move(weights));
        break;
      case OracleFamilyKind::coverage:
        *sink.oracle = OracleSpec::coverage(std::move(covers));
        break;
      case OracleFamilyKind::saturated_additive:
        *sink.oracle =
            OracleSpec::saturated_additive(std::move(weights), cap);
        break;
    }
  }
}

}  // namespace

ProblemInput parse_instance(std::istream& in, const std::string& name) {
  std::vector<Element> elements;
  std::vector<PartitionMatroid> matroids;
  OracleSpec oracle;
  InstanceKind kind = InstanceKind::graph;
  int n = 0;
  int p = 2;
  ParseSink sink;
  sink.on_element = [&](const Element& e) { elements.push_back(e); };
  sink.oracle = &oracle;
  sink.matroids = &matroids;
  sink.kind_out = &kind;
  sink.n_out = &n;
  sink.p_out = &p;
  parse_into(in, name, std::move(sink));
  try {
    Instance instance(kind, n, p, std::move(elements), std::move(matroids));
    return ProblemInput{std::move(instance), std::move(oracle)};
  } catch (const ParamError& e) {
    throw ParseError(name + ": " + e.what());
  }
}

ProblemInput parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  return parse_instance(in, path);
}

void FileStreamSource::for_each(const std::function<void(const Element&)>& fn) {
  std::ifstream in(path_);
  if (!in) throw ParseError(path_ + ": cannot open");
  ParseSink sink;
  sink.on_element = fn;
  parse_into(in, path_, std::move(sink));
}

void write_instance(std::ostream& out, const Instance& instance,
                    const OracleSpec& oracle_spec) {
  bool terse = instance.kind() == InstanceKind::graph &&
               oracle_spec.kind == OracleFamilyKind::modular;
  if (terse) {
    out << "graph " << instance.vertex_bound() << "\n";
    for (const auto& e : instance.elements()) {
      out << e.vertices[0] << " " << e.vertices[1] << " "
          << format_double(oracle_spec.weights.at(e.id)) << "\n";
    }
    return;
  }
  out << "kind " << to_string(instance.kind()) << "\n";
  out << "n " << instance.vertex_bound() << "\n";
  if (instance.kind() != InstanceKind::graph) {
    out << "p " << instance.arity() << "\n";
  }
  out << "oracle " << to_string(oracle_spec.kind);
  if (oracle_spec.kind == OracleFamilyKind::saturated_additive) {
    out << " " << format_double(oracle_spec.cap);
  }
  out << "\n";
  for (const auto& e : instance.elements()) {
    out << "element";
    for (int v : e.vertices) out << " " << v;
    out << " :";
    if (oracle_spec.kind == OracleFamilyKind::coverage) {
      for (int pt : oracle_spec.covers.at(e.id)) out << " " << pt;
    } else {
      out << " " << format_double(oracle_spec.weights.at(e.id));
    }
    out << "\n";
  }
  for (const auto& matroid : instance.matroids()) {
    out << "matroid";
    for (int j = 0; j < matroid.part_count(); ++j) {
      if (j > 0) out << " |";
      out << " " << matroid.capacity(j) << " :";
      for (int id : matroid.part_members(j)) out << " " << id;
    }
    out << "\n";
  }
}

void write_instance_file(const std::string& path, const Instance& instance,
                         const OracleSpec& oracle_spec) {
  std::ofstream out(path);
  if (!out) throw ParseError(path + ": cannot open for writing");
  write_instance(out, instance, oracle_spec);
}

}  // namespace substream
