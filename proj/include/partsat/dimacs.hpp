#pragma once

#include <string>
#include <string_view>

#include "partsat/formula.hpp"

namespace partsat {

/// Parses DIMACS CNF: `c` comment lines, one `p cnf <n> <m>` header, then m
/// clauses as whitespace-separated signed integers, each terminated by 0.
/// Throws ParseError on malformed input.
Formula parse_dimacs(std::string_view text, BuildOptions opts = {});

/// Parses the matrix-grid format: one row per clause, whitespace-separated
/// cells from {+, -, 0}, one column per variable.
Formula parse_matrix(std::string_view text, BuildOptions opts = {});

enum class FileFormat { Auto, Dimacs, Matrix };

/// Loads a formula from disk, dispatching on extension (.cnf -> DIMACS,
/// .mat -> matrix) unless a format is forced.
Formula parse_file(const std::string& path, FileFormat format = FileFormat::Auto,
                   BuildOptions opts = {});

/// Serializes to DIMACS; parse_dimacs(write_dimacs(f)) reproduces f exactly.
std::string write_dimacs(const Formula& f);

} // namespace partsat
