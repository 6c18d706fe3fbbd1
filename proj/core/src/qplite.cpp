#include "qps/qplite.hpp"

#include "qps/errors.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace qps {

namespace {

struct LineReader {
  std::istream& in;
  int line_no = 0;
  std::optional<std::string> pushed;

  std::optional<std::string> next() {
    if (pushed) {
      auto s = std::move(*pushed);
      pushed.reset();
      return s;
    }
    std::string s;
    while (std::getline(in, s)) {
      ++line_no;
      const auto first = s.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;  // blank
      if (s[first] == '#') continue;             // comment
      return s;
    }
    return std::nullopt;
  }

  void push_back(std::string s) { pushed = std::move(s); }
};

std::vector<std::string> tokens_of(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

double parse_value(const std::string& tok, int line, bool allow_inf) {
  if (allow_inf) {
    if (tok == "inf" || tok == "+inf") return kInf;
    if (tok == "-inf") return -kInf;
  }
  try {
    std::size_t pos = 0;
    const double v = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected a number, got '" + tok + "'");
  }
}

long parse_int(const std::string& tok, int line) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
}

bool looks_like_triplet(const std::vector<std::string>& toks) {
  if (toks.size() != 3) return false;
  try {
    std::size_t pos = 0;
    (void)std::stol(toks[0], &pos);
    if (pos != toks[0].size()) return false;
    pos = 0;
    (void)std::stol(toks[1], &pos);
    return pos == toks[1].size();
  } catch (const std::exception&) {
    return false;
  }
}

Matrix read_block(LineReader& rd, Index rows, Index cols, const std::string& name,
                  bool allow_inf) {
  Matrix out = Matrix::Zero(rows, cols);
  if (rows == 0 || cols == 0) return out;

  auto first = rd.next();
  if (!first) throw ParseError(rd.line_no, "missing data for section " + name);
  auto toks = tokens_of(*first);

  if (toks.size() == 1 && toks[0] == "sparse") {
    while (auto line = rd.next()) {
      auto t = tokens_of(*line);
      if (!looks_like_triplet(t)) {
        rd.push_back(*line);  // next section header
        break;
      }
      const long i = parse_int(t[0], rd.line_no);
      const long j = parse_int(t[1], rd.line_no);
      if (i < 0 || i >= rows || j < 0 || j >= cols) {
        throw ParseError(rd.line_no, "index (" + std::to_string(i) + ", " + std::to_string(j) +
                                         ") out of range in section " + name);
      }
      out(i, j) = parse_value(t[2], rd.line_no, allow_inf);
    }
    return out;
  }

  // Dense: one line per matrix row; vectors (rows == 1) take one line.
  for (Index r = 0; r < rows; ++r) {
    if (r > 0) {
      auto line = rd.next();
      if (!line) throw ParseError(rd.line_no, "section " + name + " ends after " +
                                                  std::to_string(r) + " of " +
                                                  std::to_string(rows) + " rows");
      toks = tokens_of(*line);
    }
    if (static_cast<Index>(toks.size()) != cols) {
      throw ParseError(rd.line_no, "section " + name + " row " + std::to_string(r) + " has " +
                                       std::to_string(toks.size()) + " values, expected " +
                                       std::to_string(cols));
    }
    for (Index c = 0; c < cols; ++c) out(r, c) = parse_value(toks[c], rd.line_no, allow_inf);
  }
  return out;
}

Vector read_vector(LineReader& rd, Index len, const std::string& name, bool allow_inf = false) {
  Vector out = Vector::Zero(len);
  if (len == 0) return out;

  auto first = rd.next();
  if (!first) throw ParseError(rd.line_no, "missing data for section " + name);
  auto toks = tokens_of(*first);

  if (toks.size() == 1 && toks[0] == "sparse") {
    while (auto line = rd.next()) {
      auto t = tokens_of(*line);
      if (!looks_like_triplet(t)) {
        rd.push_back(*line);
        break;
      }
      const long i = parse_int(t[0], rd.line_no);
      const long j = parse_int(t[1], rd.line_no);
      if (j != 0) throw ParseError(rd.line_no, "vector section " + name + " requires j = 0");
      if (i < 0 || i >= len) {
        throw ParseError(rd.line_no,
                         "index " + std::to_string(i) + " out of range in section " + name);
      }
      out[i] = parse_value(t[2], rd.line_no, allow_inf);
    }
    return out;
  }

  if (static_cast<Index>(toks.size()) != len) {
    throw ParseError(rd.line_no, "section " + name + " has " + std::to_string(toks.size()) +
                                     " values, expected " + std::to_string(len));
  }
  for (Index i = 0; i < len; ++i) out[i] = parse_value(toks[i], rd.line_no, allow_inf);
  return out;
}

void expect_header(LineReader& rd, const std::string& want) {
  auto line = rd.next();
  if (!line) throw ParseError(rd.line_no, "expected section '" + want + "', got end of file");
  auto toks = tokens_of(*line);
  if (toks.size() != 1 || toks[0] != want) {
    throw ParseError(rd.line_no, "expected section '" + want + "', got '" + *line + "'");
  }
}

long expect_int_field(LineReader& rd, const std::string& key) {
  auto line = rd.next();
  if (!line) throw ParseError(rd.line_no, "expected '" + key + " <int>', got end of file");
  auto toks = tokens_of(*line);
  if (toks.size() != 2 || toks[0] != key) {
    throw ParseError(rd.line_no, "expected '" + key + " <int>', got '" + *line + "'");
  }
  const long v = parse_int(toks[1], rd.line_no);
  if (v < 0) throw ParseError(rd.line_no, key + " must be nonnegative");
  return v;
}

}  // namespace

QpProblem read_qplite(std::istream& in) {
  LineReader rd{in};

  {
    auto line = rd.next();
    if (!line) throw ParseError(rd.line_no, "empty file");
    auto toks = tokens_of(*line);
    if (toks.size() != 2 || toks[0] != "qplite" || toks[1] != "1") {
      throw ParseError(rd.line_no, "expected header 'qplite 1'");
    }
  }

  const Index n = expect_int_field(rd, "n");
  const Index meq = expect_int_field(rd, "meq");
  const Index mineq = expect_int_field(rd, "mineq");
  if (n == 0) throw ParseError(rd.line_no, "n must be positive");

  QpProblem p;
  expect_header(rd, "Q");
  p.Q = read_block(rd, n, n, "Q", false);
  expect_header(rd, "d");
  p.d = read_vector(rd, n, "d");
  expect_header(rd, "E");
  p.E = read_block(rd, meq, n, "E", false);
  expect_header(rd, "c_eq");
  p.c_eq = read_vector(rd, meq, "c_eq");

  {
    auto line = rd.next();
    if (!line) throw ParseError(rd.line_no, "expected section 'G sense(le|ge)'");
    auto toks = tokens_of(*line);
    RowSense sense;
    if (toks.size() == 2 && toks[0] == "G" && toks[1] == "sense(le)") {
      sense = RowSense::LessEq;
    } else if (toks.size() == 2 && toks[0] == "G" && toks[1] == "sense(ge)") {
      sense = RowSense::GreaterEq;
    } else {
      throw ParseError(rd.line_no, "expected 'G sense(le)' or 'G sense(ge)', got '" + *line + "'");
    }
    p.G = read_block(rd, mineq, n, "G", false);
    p.sense.assign(mineq, sense);
  }

  expect_header(rd, "c_in");
  p.c_in = read_vector(rd, mineq, "c_in");
  expect_header(rd, "lb");
  p.lb = read_vector(rd, n, "lb", true);
  expect_header(rd, "ub");
  p.ub = read_vector(rd, n, "ub", true);

  if (auto trailing = rd.next()) {
    throw ParseError(rd.line_no, "unexpected trailing content: '" + *trailing + "'");
  }

  try {
    normalize(p);
  } catch (const SolverError& e) {
    throw ParseError(rd.line_no, e.what());
  }
  return p;
}

QpProblem read_qplite_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return read_qplite(in);
}

namespace {

void write_value(std::ostream& out, double v) {
  if (std::isinf(v)) {
    out << (v > 0 ? "inf" : "-inf");
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out << buf;
}

void write_matrix(std::ostream& out, const Matrix& m) {
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      if (c > 0) out << ' ';
      write_value(out, m(r, c));
    }
    out << '\n';
  }
}

void write_vector(std::ostream& out, const Vector& v) {
  if (v.size() == 0) return;
  for (Index i = 0; i < v.size(); ++i) {
    if (i > 0) out << ' ';
    write_value(out, v[i]);
  }
  out << '\n';
}

}  // namespace

void write_qplite(std::ostream& out, const QpProblem& p) {
  Matrix G = p.G;
  Vector c_in = p.c_in;
  for (Index i = 0; i < G.rows(); ++i) {
    if (p.sense[i] == RowSense::LessEq) {
      G.row(i) = -G.row(i);
      c_in[i] = -c_in[i];
    }
  }

  out << "qplite 1\n";
  out << "n " << p.num_vars() << "\n";
  out << "meq " << p.num_eq() << "\n";
  out << "mineq " << p.num_ineq() << "\n";
  out << "Q\n";
  write_matrix(out, p.Q);
  out << "d\n";
  write_vector(out, p.d);
  out << "E\n";
  write_matrix(out, p.E);
  out << "c_eq\n";
  write_vector(out, p.c_eq);
  out << "G sense(ge)\n";
  write_matrix(out, G);
  out << "c_in\n";
  write_vector(out, c_in);
  out << "lb\n";
  write_vector(out, p.lb);
  out << "ub\n";
  write_vector(out, p.ub);
}

void write_qplite_file(const std::string& path, const QpProblem& p) {
  std::ofstream out(path);
  if (!out) throw ParseError(0, "cannot open '" + path + "' for writing");
  write_qplite(out, p);
}

}  // namespace qps
