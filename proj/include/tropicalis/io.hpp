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

#ifndef TROPICALIS_IO_HPP_
#define TROPICALIS_IO_HPP_

#include <iosfwd>
#include <string>
#include <string_view>

#include "tropicalis/calculus.hpp"
#include "tropicalis/cayley.hpp"
#include "tropicalis/linalg.hpp"

namespace tropicalis {

// Shortest decimal that round-trips, with "-inf"/"+inf" literals.
std::string format_number(double v);
double parse_number(std::string_view token);

// Matrix file: first line "rows cols semiring", then rows of extended-real
// tokens.
TropMatrix read_matrix(std::istream& in);
TropMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const TropMatrix& m);

// Line-oriented table file: "n=", "labels=", "add=" plus n rows, optional
// "mul=", "zero=", "one="; '#' starts a comment.
CayleyStructure read_cayley(std::istream& in);
CayleyStructure read_cayley_file(const std::string& path);
void write_cayley(std::ostream& out, const CayleyStructure& s);

// Edge list "u v w" with '#' comments; node count is 1 + max id.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

// Sampled function: header "origin step count orientation", one value per
// line; orientation is max_plus or min_plus.
SampledFunction read_function(std::istream& in);
SampledFunction read_function_file(const std::string& path);
void write_function(std::ostream& out, const SampledFunction& f);

}  // namespace tropicalis

#endif  // TROPICALIS_IO_HPP_
