#include "spinfer/matrix.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace spinfer {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string join_csv(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.push_back(',');
    out += parts[i];
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << text;
}

// Shared line scanner: collects header label lines and data rows.
struct ScannedText {
  std::vector<std::string> col_labels;
  std::vector<std::string> row_labels;
  std::vector<std::pair<std::size_t, std::string>> rows;  // (1-based line, text)
};

ScannedText scan_lines(const std::string& text) {
  ScannedText s;
  std::size_t line_no = 0;
  std::size_t header_count = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string line = text.substr(pos, nl == std::string::npos ? nl : nl - pos);
    pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string payload = line.substr(1);
      if (!payload.empty() && payload[0] == ' ') payload = payload.substr(1);
      if (header_count == 0 && !payload.empty()) s.col_labels = split_csv(payload);
      if (header_count == 1 && !payload.empty()) s.row_labels = split_csv(payload);
      ++header_count;
      continue;
    }
    s.rows.emplace_back(line_no, line);
  }
  return s;
}

void check_labels(ScannedText& s, std::size_t rows, std::size_t cols) {
  if (!s.col_labels.empty() && s.col_labels.size() != cols)
    throw ParseError(1, 0, "column label count " + std::to_string(s.col_labels.size()) +
                               " does not match " + std::to_string(cols) + " columns");
  if (!s.row_labels.empty() && s.row_labels.size() != rows)
    throw ParseError(2, 0, "row label count " + std::to_string(s.row_labels.size()) +
                               " does not match " + std::to_string(rows) + " rows");
}

}  // namespace

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  BinaryMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw DimensionError("ragged row in from_rows");
    for (std::size_t u = 0; u < m.cols(); ++u) {
      if (rows[i][u] != 0 && rows[i][u] != 1) throw Error("from_rows entry outside {0,1}");
      m.set(i, u, rows[i][u] != 0);
    }
  }
  return m;
}

std::size_t count_ones(const BinaryMatrix& m) {
  std::size_t n = 0;
  for (std::uint8_t b : m.data()) n += b;
  return n;
}

std::optional<SequenceViolation> validate_sequence(const ObservationSequence& seq) {
  if (seq.matrices.empty()) throw DimensionError("observation sequence is empty");
  const BinaryMatrix& first = seq.matrices.front();
  for (std::size_t t = 1; t < seq.size(); ++t) {
    const BinaryMatrix& m = seq.matrices[t];
    if (!m.same_shape(first))
      throw DimensionError("matrix at t=" + std::to_string(t) + " has mismatched shape");
    if (m.row_labels != first.row_labels || m.col_labels != first.col_labels)
      throw DimensionError("matrix at t=" + std::to_string(t) + " has mismatched labels");
  }
  for (std::size_t t = 1; t < seq.size(); ++t) {
    const BinaryMatrix& prev = seq.matrices[t - 1];
    const BinaryMatrix& cur = seq.matrices[t];
    for (std::size_t i = 0; i < cur.rows(); ++i)
      for (std::size_t u = 0; u < cur.cols(); ++u)
        if (prev(i, u) > cur(i, u)) return SequenceViolation{t, i, u};
  }
  return std::nullopt;
}

BinaryMatrix matrix_or(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (!a.same_shape(b)) throw DimensionError("matrix_or shape mismatch");
  BinaryMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t u = 0; u < a.cols(); ++u)
      if (b(i, u)) out.set(i, u, true);
  return out;
}

BinaryMatrix matrix_minus(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (!a.same_shape(b)) throw DimensionError("matrix_minus shape mismatch");
  BinaryMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t u = 0; u < a.cols(); ++u)
      if (b(i, u)) out.set(i, u, false);
  return out;
}

BinaryMatrix parse_matrix(const std::string& text) {
  ScannedText s = scan_lines(text);
  if (s.rows.empty()) throw EmptyInputError("no data rows");
  const std::size_t cols = split_csv(s.rows[0].second).size();
  BinaryMatrix m(s.rows.size(), cols);
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    const auto& [line_no, line] = s.rows[i];
    std::vector<std::string> toks = split_csv(line);
    if (toks.size() != cols)
      throw ParseError(line_no, 0, "expected " + std::to_string(cols) + " tokens, found " +
                                       std::to_string(toks.size()));
    for (std::size_t u = 0; u < cols; ++u) {
      if (toks[u] == "0") continue;
      if (toks[u] == "1") {
        m.set(i, u, true);
        continue;
      }
      throw ParseError(line_no, u + 1, "token '" + toks[u] + "' is not 0 or 1");
    }
  }
  check_labels(s, m.rows(), m.cols());
  m.col_labels = std::move(s.col_labels);
  m.row_labels = std::move(s.row_labels);
  return m;
}

BinaryMatrix load_matrix(const std::string& path) { return parse_matrix(read_file(path)); }

std::string format_matrix(const BinaryMatrix& m) {
  std::string out;
  if (!m.col_labels.empty() || !m.row_labels.empty()) {
    out += "# " + join_csv(m.col_labels) + "\n";
    if (!m.row_labels.empty()) out += "# " + join_csv(m.row_labels) + "\n";
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t u = 0; u < m.cols(); ++u) {
      if (u) out.push_back(',');
      out.push_back(m(i, u) ? '1' : '0');
    }
    out.push_back('\n');
  }
  return out;
}

void save_matrix(const BinaryMatrix& m, const std::string& path) {
  write_file(path, format_matrix(m));
}

RealMatrix parse_real_matrix(const std::string& text) {
  ScannedText s = scan_lines(text);
  if (s.rows.empty()) throw EmptyInputError("no data rows");
  const std::size_t cols = split_csv(s.rows[0].second).size();
  RealMatrix m(s.rows.size(), cols);
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    const auto& [line_no, line] = s.rows[i];
    std::vector<std::string> toks = split_csv(line);
    if (toks.size() != cols)
      throw ParseError(line_no, 0, "expected " + std::to_string(cols) + " tokens, found " +
                                       std::to_string(toks.size()));
    for (std::size_t u = 0; u < cols; ++u) {
      try {
        std::size_t consumed = 0;
        m.at(i, u) = std::stod(toks[u], &consumed);
        if (consumed != toks[u].size()) throw std::invalid_argument("trailing garbage");
      } catch (const std::exception&) {
        throw ParseError(line_no, u + 1, "token '" + toks[u] + "' is not a number");
      }
    }
  }
  check_labels(s, m.rows(), m.cols());
  m.col_labels = std::move(s.col_labels);
  m.row_labels = std::move(s.row_labels);
  return m;
}

RealMatrix load_real_matrix(const std::string& path) {
  return parse_real_matrix(read_file(path));
}

std::string format_real_matrix(const RealMatrix& m) {
  std::string out;
  if (!m.col_labels.empty() || !m.row_labels.empty()) {
    out += "# " + join_csv(m.col_labels) + "\n";
    if (!m.row_labels.empty()) out += "# " + join_csv(m.row_labels) + "\n";
  }
  char buf[64];
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t u = 0; u < m.cols(); ++u) {
      if (u) out.push_back(',');
      std::snprintf(buf, sizeof buf, "%.10g", m(i, u));
      out += buf;
    }
    out.push_back('\n');
  }
  return out;
}

void save_real_matrix(const RealMatrix& m, const std::string& path) {
  write_file(path, format_real_matrix(m));
}

std::string format_pgm(const RealMatrix& m) {
  std::string out = "P2\n";
  out += std::to_string(m.cols()) + " " + std::to_string(m.rows()) + "\n255\n";
  std::string line;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t u = 0; u < m.cols(); ++u) {
      double v = m(i, u);
      if (v < 0.0) v = 0.0;
      if (v > 1.0) v = 1.0;
      std::string tok = std::to_string(static_cast<int>(std::lround(255.0 * v)));
      if (!line.empty() && line.size() + 1 + tok.size() > 70) {
        out += line + "\n";
        line.clear();
      }
      if (!line.empty()) line.push_back(' ');
      line += tok;
    }
  }
  if (!line.empty()) out += line + "\n";
  return out;
}

void save_pgm(const RealMatrix& m, const std::string& path) {
  write_file(path, format_pgm(m));
}

}  // namespace spinfer
