#include "relaxfeas/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <vector>

#include "relaxfeas/errors.hpp"

namespace relaxfeas {

namespace {

using json = nlohmann::json;

[[noreturn]] void parse_error(const std::string& source, std::size_t line, std::size_t col,
                              const std::string& msg) {
  throw Error(ErrorCode::ParseError,
              source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
}

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

void read_meta_comment(std::string_view comment, Instance& inst) {
  comment = trim(comment);
  const auto colon = comment.find(':');
  if (colon == std::string_view::npos) return;
  const std::string key(trim(comment.substr(0, colon)));
  const std::string value(trim(comment.substr(colon + 1)));
  if (key == "name") {
    inst.name = value;
  } else if (key == "family") {
    if (auto f = family_from_string(value)) inst.family = *f;
  } else if (key == "seed") {
    std::uint64_t seed = 0;
    auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), seed);
    if (ec == std::errc() && p == value.data() + value.size()) inst.seed = seed;
  } else if (key.rfind("meta.", 0) == 0) {
    inst.meta[key.substr(5)] = value;
  }
}

Instance parse_text(std::string_view text, const std::string& source) {
  Instance inst;
  std::vector<std::pair<std::size_t, std::vector<Token>>> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string_view::npos) {
      read_meta_comment(line.substr(hash + 1), inst);
      line = line.substr(0, hash);
    }
    auto tokens = split(line);
    if (!tokens.empty()) lines.emplace_back(line_no, std::move(tokens));
    if (end == text.size()) break;
    pos = end + 1;
  }
  if (lines.empty()) parse_error(source, line_no, 1, "missing header `n m l`");

  auto parse_count = [&](const Token& t, std::size_t ln) {
    long v = -1;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || p != t.text.data() + t.text.size() || v < 0) {
      parse_error(source, ln, t.column, "expected a nonnegative integer, got `" +
                                            std::string(t.text) + "`");
    }
    return static_cast<Index>(v);
  };
  auto parse_value = [&](const Token& t, std::size_t ln) {
    double v = 0.0;
    const char* first = t.text.data();
    if (!t.text.empty() && t.text.front() == '+') ++first;
    auto [p, ec] = std::from_chars(first, t.text.data() + t.text.size(), v);
    if (ec != std::errc() || p != t.text.data() + t.text.size()) {
      parse_error(source, ln, t.column, "expected a number, got `" + std::string(t.text) + "`");
    }
    return v;
  };

  const auto& [header_line, header] = lines.front();
  if (header.size() != 3) {
    parse_error(source, header_line, header.empty() ? 1 : header.front().column,
                "header must be `n m l`");
  }
  const Index n = parse_count(header[0], header_line);
  const Index m = parse_count(header[1], header_line);
  const Index l = parse_count(header[2], header_line);

  if (static_cast<Index>(lines.size()) - 1 < m + l) {
    parse_error(source, line_no, 1,
                "expected " + std::to_string(m + l) + " coefficient rows, found " +
                    std::to_string(lines.size() - 1));
  }
  if (static_cast<Index>(lines.size()) - 1 > m + l) {
    const auto& [ln, toks] = lines[static_cast<std::size_t>(m + l + 1)];
    parse_error(source, ln, toks.front().column, "unexpected data after the last row");
  }

  Matrix A(m, n), C(l, n);
  Vector b(m), d(l);
  for (Index r = 0; r < m + l; ++r) {
    const auto& [ln, toks] = lines[static_cast<std::size_t>(r + 1)];
    if (static_cast<Index>(toks.size()) != n + 1) {
      const std::size_t col = static_cast<Index>(toks.size()) > n + 1
                                  ? toks[static_cast<std::size_t>(n + 1)].column
                                  : toks.back().column + toks.back().text.size();
      parse_error(source, ln, col,
                  "row has " + std::to_string(toks.size()) + " numbers, expected " +
                      std::to_string(n + 1));
    }
    for (Index j = 0; j <= n; ++j) {
      const double v = parse_value(toks[static_cast<std::size_t>(j)], ln);
      if (r < m) {
        (j < n ? A(r, j) : b(r)) = v;
      } else {
        (j < n ? C(r - m, j) : d(r - m)) = v;
      }
    }
  }
  inst.system = LinearSystem(std::move(A), std::move(b), std::move(C), std::move(d));
  return inst;
}

Matrix matrix_from_json(const json& j, const char* key, Index cols_hint) {
  if (!j.contains(key)) return Matrix(0, std::max<Index>(cols_hint, 0));
  const auto& rows = j.at(key);
  if (!rows.is_array()) throw Error(ErrorCode::ParseError, std::string(key) + " must be an array");
  if (rows.empty()) return Matrix(0, std::max<Index>(cols_hint, 0));
  const auto n = static_cast<Index>(rows.front().size());
  Matrix M(static_cast<Index>(rows.size()), n);
  for (Index i = 0; i < M.rows(); ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n) {
      throw Error(ErrorCode::DimensionMismatch,
                  std::string(key) + " row " + std::to_string(i) + " has the wrong length");
    }
    for (Index k = 0; k < n; ++k) M(i, k) = row[static_cast<std::size_t>(k)].get<double>();
  }
  return M;
}

Vector vector_from_json(const json& j, const char* key) {
  if (!j.contains(key)) return Vector(0);
  const auto& arr = j.at(key);
  Vector v(static_cast<Index>(arr.size()));
  for (Index i = 0; i < v.size(); ++i) v(i) = arr[static_cast<std::size_t>(i)].get<double>();
  return v;
}

Instance parse_json(std::string_view text, const std::string& source) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, source + ": " + e.what());
  }
  Instance inst;
  try {
    const Index n_hint = j.contains("n") ? j.at("n").get<Index>() : -1;
    Matrix A = matrix_from_json(j, "A", n_hint);
    Matrix C = matrix_from_json(j, "C", A.rows() ? A.cols() : n_hint);
    if (A.rows() == 0 && C.rows() > 0) A.resize(0, C.cols());
    Vector b = vector_from_json(j, "b");
    Vector d = vector_from_json(j, "d");
    if (A.rows() && C.rows() && A.cols() != C.cols()) {
      throw Error(ErrorCode::DimensionMismatch, "A and C have different widths");
    }
    inst.system = LinearSystem(std::move(A), std::move(b), std::move(C), std::move(d));
    inst.name = j.value("name", std::string());
    if (auto f = family_from_string(j.value("family", std::string("file")))) inst.family = *f;
    inst.seed = j.value("seed", std::uint64_t{0});
    if (j.contains("meta")) {
      for (auto it = j.at("meta").begin(); it != j.at("meta").end(); ++it) {
        inst.meta[it.key()] = it.value().get<std::string>();
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, source + ": " + e.what());
  }
  return inst;
}

}  // namespace

std::string format_number(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, p);
}

Instance parse_instance(std::string_view text, const std::string& source) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text, source);
  return parse_text(text, source);
}

std::string format_instance(const Instance& inst) {
  const LinearSystem& s = inst.system;
  std::ostringstream out;
  if (!inst.name.empty()) out << "# name: " << inst.name << '\n';
  out << "# family: " << to_string(inst.family) << '\n';
  out << "# seed: " << inst.seed << '\n';
  for (const auto& [k, v] : inst.meta) out << "# meta." << k << ": " << v << '\n';
  out << s.n() << ' ' << s.m() << ' ' << s.l() << '\n';
  auto row = [&](const auto& coeffs, double rhs) {
    for (Index j = 0; j < coeffs.size(); ++j) out << format_number(coeffs(j)) << ' ';
    out << format_number(rhs) << '\n';
  };
  for (Index i = 0; i < s.m(); ++i) row(s.A().row(i), s.b()(i));
  for (Index k = 0; k < s.l(); ++k) row(s.C().row(k), s.d()(k));
  return out.str();
}

std::string format_instance_json(const Instance& inst) {
  const LinearSystem& s = inst.system;
  auto rows = [](const Matrix& M) {
    json arr = json::array();
    for (Index i = 0; i < M.rows(); ++i) {
      json r = json::array();
      for (Index j = 0; j < M.cols(); ++j) r.push_back(M(i, j));
      arr.push_back(std::move(r));
    }
    return arr;
  };
  auto vec = [](const Vector& v) {
    json arr = json::array();
    for (Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
    return arr;
  };
  json j;
  j["name"] = inst.name;
  j["family"] = to_string(inst.family);
  j["seed"] = inst.seed;
  j["n"] = s.n();
  j["A"] = rows(s.A());
  j["b"] = vec(s.b());
  j["C"] = rows(s.C());
  j["d"] = vec(s.d());
  if (!inst.meta.empty()) j["meta"] = inst.meta;
  return j.dump(2) + "\n";
}

Instance read_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str(), path.string());
}

void write_instance(const Instance& inst, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << (path.extension() == ".json" ? format_instance_json(inst) : format_instance(inst));
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

std::optional<Vector> start_point(const Instance& inst) {
  const auto it = inst.meta.find("start");
  if (it == inst.meta.end()) return std::nullopt;
  std::istringstream in(it->second);
  std::vector<double> values;
  double v;
  while (in >> v) values.push_back(v);
  if (static_cast<Index>(values.size()) != inst.system.n()) return std::nullopt;
  return Eigen::Map<const Vector>(values.data(), static_cast<Index>(values.size()));
}

}  // namespace relaxfeas
