#include "inv/io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace inv {
namespace {

constexpr int kMaxVertices = 4096;

struct LineReader {
  explicit LineReader(std::istream& in) : in(in) {}

  // Next line that is not a comment; skip_blank controls whether empty lines
  // are also skipped. Returns false on EOF.
  bool next(std::string& out, bool skip_blank) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_no;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      std::size_t i = raw.find_first_not_of(" \t");
      if (i != std::string::npos && raw[i] == '#') continue;
      if (i == std::string::npos && skip_blank) continue;
      out = raw;
      return true;
    }
    return false;
  }

  std::istream& in;
  int line_no = 0;
};

int parse_count(const std::string& s, int line_no, const char* what) {
  std::istringstream iss(s);
  long v;
  if (!(iss >> v)) throw parse_error(line_no, 1, std::string("expected ") + what);
  std::string rest;
  if (iss >> rest) throw parse_error(line_no, 1, std::string("trailing input after ") + what);
  if (v < 0) throw parse_error(line_no, 1, std::string(what) + " must be non-negative");
  if (v > kMaxVertices) throw parse_error(line_no, 1, std::string(what) + " too large");
  return static_cast<int>(v);
}

std::string trim_right(std::string s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  return s;
}

// Square 0/1 block preceded by its size; fills `row_lines` with the source
// line of each row for diagnostics.
BitMatrix read_bit_rows(LineReader& r, const char* what, std::vector<int>* row_lines = nullptr) {
  std::string line;
  if (!r.next(line, true)) throw parse_error(r.line_no + 1, 1, std::string("expected ") + what);
  const int n = parse_count(line, r.line_no, what);
  BitMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    if (!r.next(line, true)) throw parse_error(r.line_no + 1, 1, "expected matrix row");
    if (row_lines) row_lines->push_back(r.line_no);
    line = trim_right(line);
    if (static_cast<int>(line.size()) != n)
      throw parse_error(r.line_no, static_cast<int>(line.size()) + 1,
                        "row must have exactly " + std::to_string(n) + " characters");
    for (int j = 0; j < n; ++j) {
      if (line[j] == '1')
        m.set(i, j);
      else if (line[j] != '0')
        throw parse_error(r.line_no, j + 1, "matrix entries must be 0 or 1");
    }
  }
  return m;
}

}  // namespace

Digraph read_digraph(std::istream& in) {
  LineReader r(in);
  std::vector<int> row_lines;
  BitMatrix m = read_bit_rows(r, "vertex count", &row_lines);
  const int n = static_cast<int>(m.rows());
  Digraph d(n);
  for (int i = 0; i < n; ++i) {
    if (m.at(i, i)) throw parse_error(row_lines[i], i + 1, "diagonal entry must be 0");
    for (int j = 0; j < n; ++j) {
      if (i == j || !m.at(i, j)) continue;
      if (j < i && m.at(j, i))
        throw parse_error(row_lines[i], j + 1,
                          "digon between " + std::to_string(j) + " and " + std::to_string(i));
      d.add_edge(i, j);
    }
  }
  return d;
}

void write_digraph(std::ostream& out, const Digraph& d) {
  out << d.n() << '\n';
  for (int i = 0; i < d.n(); ++i) {
    std::string row(d.n(), '0');
    d.out_row(i).for_each_set([&](int j) { row[j] = '1'; });
    out << row << '\n';
  }
}

InversionFamily read_family(std::istream& in) {
  LineReader r(in);
  std::string line;
  if (!r.next(line, true)) throw parse_error(r.line_no + 1, 1, "expected set count");
  const int k = parse_count(line, r.line_no, "set count");
  InversionFamily f;
  f.sets.reserve(k);
  for (int i = 0; i < k; ++i) {
    if (!r.next(line, false))
      throw parse_error(r.line_no + 1, 1,
                        "expected " + std::to_string(k) + " sets, got " + std::to_string(i));
    VertexList s;
    std::istringstream iss(line);
    long v;
    while (iss >> v) {
      if (v < 0 || v > kMaxVertices) throw parse_error(r.line_no, 1, "vertex index out of range");
      s.push_back(static_cast<int>(v));
    }
    if (!iss.eof()) throw parse_error(r.line_no, 1, "sets must be space-separated integers");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw parse_error(r.line_no, 1, "duplicate vertex in set");
    f.sets.push_back(std::move(s));
  }
  return f;
}

void write_family(std::ostream& out, const InversionFamily& f) {
  out << f.size() << '\n';
  for (const auto& s : f.sets) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out << ' ';
      out << s[i];
    }
    out << '\n';
  }
}

BitMatrix read_matrix(std::istream& in) {
  LineReader r(in);
  return read_bit_rows(r, "matrix size");
}

void write_matrix(std::ostream& out, const BitMatrix& m) {
  out << m.rows() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::string row(m.cols(), '0');
    m.row(i).for_each_set([&](int j) { row[j] = '1'; });
    out << row << '\n';
  }
}

SymMatrixF2 to_symmetric(const BitMatrix& m) {
  SymMatrixBuilder b(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j) {
      if (m.at(i, j) != m.at(j, i))
        throw std::invalid_argument("matrix is not symmetric at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
      b.set(i, j, m.at(i, j));
    }
  return std::move(b).seal();
}

}  // namespace inv
