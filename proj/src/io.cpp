// Copyright 2026 The Tropicalis Authors
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

#include "tropicalis/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace tropicalis {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kPosInf = std::numeric_limits<double>::infinity();

[[noreturn]] void parse_fail(const std::string& what) {
  throw TropError(ErrorKind::Parse, what);
}

std::string strip(std::string line) {
  auto hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                           line.back() == '\t')) {
    line.pop_back();
  }
  std::size_t i = 0;
  while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
  return line.substr(i);
}

bool next_content_line(std::istream& in, std::string& out) {
  std::string raw;
  while (std::getline(in, raw)) {
    out = strip(raw);
    if (!out.empty()) return true;
  }
  return false;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::ifstream open_or_fail(const std::string& path) {
  std::ifstream f(path);
  if (!f) parse_fail("cannot open " + path);
  return f;
}

}  // namespace

std::string format_number(double v) {
  if (v == kNegInf) return "-inf";
  if (v == kPosInf) return "+inf";
  if (v == 0.0) return "0";  // merge the -0 representation
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_number(std::string_view token) {
  if (token == "-inf") return kNegInf;
  if (token == "+inf" || token == "inf") return kPosInf;
  double v = 0.0;
  auto res = std::from_chars(token.data(), token.data() + token.size(), v);
  if (res.ec != std::errc() || res.ptr != token.data() + token.size()) {
    parse_fail("bad number token '" + std::string(token) + "'");
  }
  return v;
}

TropMatrix read_matrix(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) parse_fail("missing matrix header");
  auto head = split_ws(line);
  if (head.size() != 3) parse_fail("matrix header must be 'rows cols semiring'");
  int rows = 0, cols = 0;
  try {
    rows = std::stoi(head[0]);
    cols = std::stoi(head[1]);
  } catch (...) {
    parse_fail("bad matrix shape");
  }
  if (rows < 1 || cols < 1) parse_fail("matrix shape must be positive");
  auto d = Semiring::parse(head[2]);
  if (!d) parse_fail("unknown semiring token '" + head[2] + "'");

  std::vector<Value> vals;
  vals.reserve(static_cast<std::size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r) {
    if (!next_content_line(in, line)) parse_fail("missing matrix row");
    auto toks = split_ws(line);
    if (static_cast<int>(toks.size()) != cols) {
      parse_fail("matrix row has " + std::to_string(toks.size()) +
                 " entries, expected " + std::to_string(cols));
    }
    for (const auto& t : toks) vals.push_back(d->value(parse_number(t)));
  }
  return TropMatrix(*d, rows, cols, std::move(vals));
}

TropMatrix read_matrix_file(const std::string& path) {
  auto f = open_or_fail(path);
  return read_matrix(f);
}

void write_matrix(std::ostream& out, const TropMatrix& m) {
  out << m.rows() << " " << m.cols() << " " << m.descriptor().name() << "\n";
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out << " ";
      out << format_number(m.at(i, j).payload());
    }
    out << "\n";
  }
}

CayleyStructure read_cayley(std::istream& in) {
  int n = -1;
  std::vector<std::string> labels;
  std::optional<std::vector<std::uint8_t>> add, mul;
  std::optional<int> zero, one;

  auto read_table = [&](std::istream& is) {
    std::vector<std::uint8_t> t;
    std::string line;
    for (int r = 0; r < n; ++r) {
      if (!next_content_line(is, line)) parse_fail("table row missing");
      auto toks = split_ws(line);
      if (static_cast<int>(toks.size()) != n) {
        parse_fail("table row needs " + std::to_string(n) + " entries");
      }
      for (const auto& tok : toks) {
        int v = -1;
        try {
          v = std::stoi(tok);
        } catch (...) {
          parse_fail("bad table index '" + tok + "'");
        }
        if (v < 0 || v >= n) parse_fail("table index out of range");
        t.push_back(static_cast<std::uint8_t>(v));
      }
    }
    return t;
  };

  std::string line;
  while (next_content_line(in, line)) {
    auto eq = line.find('=');
    if (eq == std::string::npos) parse_fail("expected key=value, got '" + line + "'");
    std::string key = line.substr(0, eq);
    std::string val = line.substr(eq + 1);
    if (key == "n") {
      try {
        n = std::stoi(val);
      } catch (...) {
        parse_fail("bad element count");
      }
    } else if (key == "labels") {
      labels.clear();
      std::string cur;
      for (char c : val) {
        if (c == ',') {
          labels.push_back(cur);
          cur.clear();
        } else {
          cur += c;
        }
      }
      labels.push_back(cur);
    } else if (key == "add") {
      if (n < 1) parse_fail("n= must come before add=");
      add = read_table(in);
    } else if (key == "mul") {
      if (n < 1) parse_fail("n= must come before mul=");
      mul = read_table(in);
    } else if (key == "zero") {
      zero = std::stoi(val);
    } else if (key == "one") {
      one = std::stoi(val);
    } else {
      parse_fail("unknown key '" + key + "'");
    }
  }
  if (n < 1 || !add) parse_fail("table file needs n= and add=");
  return CayleyStructure::make(n, std::move(*add), std::move(mul), zero, one,
                               std::move(labels));
}

CayleyStructure read_cayley_file(const std::string& path) {
  auto f = open_or_fail(path);
  return read_cayley(f);
}

void write_cayley(std::ostream& out, const CayleyStructure& s) {
  out << "n=" << s.n << "\n";
  out << "labels=";
  for (int i = 0; i < s.n; ++i) {
    if (i) out << ",";
    out << s.labels[i];
  }
  out << "\n";
  out << "add=\n";
  for (int i = 0; i < s.n; ++i) {
    for (int j = 0; j < s.n; ++j) {
      if (j) out << " ";
      out << s.add_at(i, j);
    }
    out << "\n";
  }
  if (s.mul) {
    out << "mul=\n";
    for (int i = 0; i < s.n; ++i) {
      for (int j = 0; j < s.n; ++j) {
        if (j) out << " ";
        out << s.mul_at(i, j);
      }
      out << "\n";
    }
  }
  if (s.zero_idx) out << "zero=" << *s.zero_idx << "\n";
  if (s.one_idx) out << "one=" << *s.one_idx << "\n";
}

Graph read_graph(std::istream& in) {
  Graph g;
  std::string line;
  while (next_content_line(in, line)) {
    auto toks = split_ws(line);
    if (toks.size() != 3) parse_fail("edge line must be 'u v w'");
    int u = -1, v = -1;
    try {
      u = std::stoi(toks[0]);
      v = std::stoi(toks[1]);
    } catch (...) {
      parse_fail("bad node id");
    }
    if (u < 0 || v < 0) parse_fail("node ids must be nonnegative");
    double w = parse_number(toks[2]);
    g.edges.push_back({u, v, w});
    g.n = std::max(g.n, std::max(u, v) + 1);
  }
  if (g.n == 0) parse_fail("graph file has no edges");
  return g;
}

Graph read_graph_file(const std::string& path) {
  auto f = open_or_fail(path);
  return read_graph(f);
}

SampledFunction read_function(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) parse_fail("missing function header");
  auto head = split_ws(line);
  if (head.size() != 4) {
    parse_fail("function header must be 'origin step count orientation'");
  }
  double origin = parse_number(head[0]);
  double step = parse_number(head[1]);
  int count = 0;
  try {
    count = std::stoi(head[2]);
  } catch (...) {
    parse_fail("bad sample count");
  }
  Orientation orient;
  if (head[3] == "max_plus") {
    orient = Orientation::MaxPlus;
  } else if (head[3] == "min_plus") {
    orient = Orientation::MinPlus;
  } else {
    parse_fail("orientation must be max_plus or min_plus");
  }
  std::vector<double> vals;
  vals.reserve(count);
  for (int i = 0; i < count; ++i) {
    if (!next_content_line(in, line)) parse_fail("missing sample value");
    vals.push_back(parse_number(line));
  }
  return SampledFunction(origin, step, std::move(vals), orient);
}

SampledFunction read_function_file(const std::string& path) {
  auto f = open_or_fail(path);
  return read_function(f);
}

void write_function(std::ostream& out, const SampledFunction& f) {
  out << format_number(f.origin()) << " " << format_number(f.step()) << " "
      << f.size() << " "
      << (f.orientation() == Orientation::MaxPlus ? "max_plus" : "min_plus")
      << "\n";
  for (int i = 0; i < f.size(); ++i) out << format_number(f.at(i)) << "\n";
}

}  // namespace tropicalis
