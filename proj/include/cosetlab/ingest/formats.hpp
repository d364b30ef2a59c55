#pragma once

#include <string>
#include <vector>

#include "cosetlab/mat/matrix.hpp"
#include "cosetlab/perm/permutation.hpp"

namespace cosetlab::ingest {

// All formats are line based with 1-based point indices. Blank lines and lines
// starting with '#' are ignored; a lone '/' also ends a line so short inputs fit
// on one command line.
//
//   images:      "perm <degree> <count>", then count lines of degree images
//   cycles:      "deg <n>", then one line per permutation: "(1,2,3)(4,5)" or "()"
//   matrix_text: "mat <p> <n> <count>", then count blocks of n rows of n digits
enum class Format { images, cycles, matrix_text, slp };

std::string to_string(Format f);
Format format_from_string(const std::string& s);
// Guess from the header keyword.
Format detect_format(const std::string& text);

std::vector<perm::Permutation> parse_images(const std::string& text);
std::string serialize_images(const std::vector<perm::Permutation>& gens);

std::vector<perm::Permutation> parse_cycles(const std::string& text);
std::string serialize_cycles(const std::vector<perm::Permutation>& gens);

std::vector<mat::Matrix> parse_matrix_text(const std::string& text);
std::string serialize_matrix_text(const std::vector<mat::Matrix>& gens);

// Non-comment lines with their 1-based line numbers.
std::vector<std::pair<std::size_t, std::string>> content_lines(const std::string& text);

}  // namespace cosetlab::ingest
