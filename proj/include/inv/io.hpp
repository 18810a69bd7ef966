#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "inv/digraph.hpp"
#include "inv/f2matrix.hpp"

namespace inv {

struct parse_error : std::runtime_error {
  parse_error(int line, int col, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(col) +
                           ": " + msg),
        line(line),
        col(col) {}
  int line;
  int col;
};

// Digraph text format: optional '#' comment lines; first data line is n;
// then exactly n lines of n characters from {0,1}; entry (i,j) = 1 means
// edge i->j. Diagonal must be 0; digons are rejected.
Digraph read_digraph(std::istream& in);
void write_digraph(std::ostream& out, const Digraph& d);

// Family text format: first data line is k; then k lines, each a
// space-separated list of 0-based vertex indices (a blank line is the empty
// set). '#' comment lines are skipped.
InversionFamily read_family(std::istream& in);
void write_family(std::ostream& out, const InversionFamily& f);

// Matrix text format: first data line is n; then n lines of n bits.
BitMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const BitMatrix& m);

// Validates symmetry; reports the first offending entry otherwise.
SymMatrixF2 to_symmetric(const BitMatrix& m);

}  // namespace inv
