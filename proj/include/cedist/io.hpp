// Copyright 2026 The cedist Authors
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

#ifndef CEDIST_IO_HPP
#define CEDIST_IO_HPP

#include <string>
#include <string_view>

#include "cedist/generator_set.hpp"

namespace cedist {

/// Code file text format.
///
/// Header line:  n=<noisy frame size> fmt=<paulivec|gf4|binary>
/// Comment lines start with '#'. Then one generator per line:
///   paulivec:  comma-separated polynomials, '|' between Z and X parts;
///              columns beyond n are the catalytic ebit columns.
///   gf4:       frames separated by ';', each frame n symbols from 0 1 w W.
///              Every line imports to two Pauli generators.
///   binary:    n comma-separated polynomials forming one parity row,
///              imported as a purely-Z generator. With css_expand the rows
///              are duplicated into a purely-Z family and a purely-X family.
GeneratorSet parse_generator_set(std::string_view text, bool css_expand = false);
GeneratorSet load_generator_set(const std::string& path, bool css_expand = false);

/// Canonical on-disk form (always paulivec).
std::string format_generator_set(const GeneratorSet& g);
void save_generator_set(const GeneratorSet& g, const std::string& path);

/// Pauli window of one generator over its full support.
std::string generator_window_string(const GeneratorSet& g, size_t index);

/// Single-qubit error syndrome table over one signature span: one labelled
/// column per (qubit, letter) in the order X1 Z1 Y1 X2 Z2 ..., one row per
/// shift offset.
std::string syndrome_table_string(const GeneratorSet& g);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

}  // namespace cedist

#endif
