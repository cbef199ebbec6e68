#include "svc/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace svc {

namespace {

std::string trim(const std::string &s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos)
    return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string &s, const std::string &seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (seps.find(ch) != std::string::npos) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

Int parse_int(const std::string &tok) {
  Int x;
  if (tok.empty() || x.set_str(tok[0] == '+' ? tok.substr(1) : tok, 10) != 0)
    throw Error(ErrorKind::Parse, "not an integer: '" + tok + "'");
  return x;
}

std::string commas_to_spaces(std::string s) {
  std::replace(s.begin(), s.end(), ',', ' ');
  return s;
}

IntVec parse_row(const std::string &line) {
  std::istringstream in(commas_to_spaces(line));
  IntVec row;
  std::string tok;
  while (in >> tok)
    row.push_back(parse_int(tok));
  return row;
}

IntMatrix from_rows_checked(const std::vector<IntVec> &rows) {
  if (rows.empty())
    throw Error(ErrorKind::Parse, "matrix has no rows");
  for (const IntVec &r : rows)
    if (r.size() != rows.front().size())
      throw Error(ErrorKind::Parse, "rows have different lengths");
  if (rows.front().empty())
    throw Error(ErrorKind::Parse, "matrix has no columns");
  return IntMatrix::from_rows(rows, rows.front().size());
}

IntMatrix parse_json_matrix(const std::string &text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array())
    throw Error(ErrorKind::Parse, "JSON matrix needs a \"rows\" array");
  std::vector<IntVec> rows;
  for (const auto &r : j["rows"]) {
    if (!r.is_array())
      throw Error(ErrorKind::Parse, "each row must be an array");
    IntVec row;
    for (const auto &x : r) {
      if (x.is_number_integer())
        row.emplace_back(x.get<long>());
      else if (x.is_string())
        row.push_back(parse_int(x.get<std::string>()));
      else
        throw Error(ErrorKind::Parse, "matrix entries must be integers");
    }
    rows.push_back(std::move(row));
  }
  return from_rows_checked(rows);
}

}  // namespace

IntMatrix parse_matrix(const std::string &raw) {
  std::string text = trim(raw);
  if (text.empty())
    throw Error(ErrorKind::Parse, "empty matrix");
  if (text.front() == '{')
    return parse_json_matrix(text);
  std::vector<IntVec> rows;
  if (text.find('@') != std::string::npos ||
      text.find('\n') == std::string::npos) {
    for (const std::string &part : split(text, "@"))
      rows.push_back(parse_row(part));
    // "m n@row@...": the text form with '@' for newlines
    const IntVec &head = rows.front();
    if (rows.size() > 1 && head.size() == 2 && head[0] == Int(rows.size() - 1) &&
        head[1] > 0 &&
        std::all_of(rows.begin() + 1, rows.end(),
                    [&](const IntVec &r) { return head[1] == Int(r.size()); }))
      rows.erase(rows.begin());
    return from_rows_checked(rows);
  }
  std::vector<std::string> lines;
  for (const std::string &l : split(text, "\n"))
    if (!trim(l).empty() && trim(l).front() != '#')
      lines.push_back(l);
  IntVec header = parse_row(lines.front());
  if (header.size() != 2 || header[0] < 1 || header[1] < 1)
    throw Error(ErrorKind::Parse, "expected a header line \"m n\"");
  std::size_t m = header[0].get_ui(), n = header[1].get_ui();
  IntVec entries;
  for (std::size_t i = 1; i < lines.size(); ++i)
    for (const Int &x : parse_row(lines[i]))
      entries.push_back(x);
  if (entries.size() != m * n)
    throw Error(ErrorKind::Parse, "expected " + std::to_string(m * n) +
                                      " entries, found " +
                                      std::to_string(entries.size()));
  for (std::size_t i = 0; i < m; ++i)
    rows.emplace_back(entries.begin() + i * n, entries.begin() + (i + 1) * n);
  return from_rows_checked(rows);
}

Configuration parse_configuration(const std::string &text, std::string name) {
  return Configuration::from_matrix(parse_matrix(text), std::move(name));
}

IntVec parse_int_vector(const std::string &text) {
  IntVec v = parse_row(text);
  if (v.empty())
    throw Error(ErrorKind::Parse, "empty vector");
  return v;
}

RatVec parse_rat_vector(const std::string &text) {
  std::istringstream in(commas_to_spaces(text));
  RatVec v;
  std::string tok;
  while (in >> tok) {
    Rat x;
    if (x.set_str(tok[0] == '+' ? tok.substr(1) : tok, 10) != 0 ||
        x.get_den() == 0)
      throw Error(ErrorKind::Parse, "not a rational number: '" + tok + "'");
    x.canonicalize();
    v.push_back(x);
  }
  if (v.empty())
    throw Error(ErrorKind::Parse, "empty vector");
  return v;
}

std::vector<IntPoint2> parse_points(const std::string &text) {
  std::vector<IntPoint2> out;
  for (const std::string &part : split(text, ",;")) {
    if (trim(part).empty())
      continue;
    IntVec p = parse_row(part);
    if (p.size() != 2)
      throw Error(ErrorKind::Parse, "expected two coordinates in '" + part + "'");
    for (const Int &x : p)
      if (!x.fits_slong_p())
        throw Error(ErrorKind::Overflow, "coordinate too large");
    out.emplace_back(p[0].get_si(), p[1].get_si());
  }
  if (out.empty())
    throw Error(ErrorKind::Parse, "no points given");
  return out;
}

nlohmann::json to_json(const IntVec &v) {
  nlohmann::json j = nlohmann::json::array();
  for (const Int &x : v) {
    if (x.fits_slong_p())
      j.push_back(x.get_si());
    else
      j.push_back(x.get_str());
  }
  return j;
}

nlohmann::json to_json(const RatVec &v) {
  nlohmann::json j = nlohmann::json::array();
  for (const Rat &x : v) {
    if (x.get_den() == 1 && x.get_num().fits_slong_p())
      j.push_back(x.get_num().get_si());
    else
      j.push_back(x.get_str());
  }
  return j;
}

nlohmann::json to_json(const IntMatrix &m) {
  nlohmann::json rows = nlohmann::json::array();
  for (const IntVec &r : m.row_list())
    rows.push_back(to_json(r));
  return {{"rows", rows}};
}

nlohmann::json to_json(const Subdivision &s) {
  nlohmann::json j = nlohmann::json::array();
  for (const Cell &c : s.cells) {
    nlohmann::json t = nlohmann::json::array();
    for (std::size_t i : c)
      t.push_back(i + 1);
    j.push_back(t);
  }
  return j;
}

nlohmann::json census_json(const PlanarChamberComplex &pcc) {
  nlohmann::json faces = nlohmann::json::object();
  for (const auto &[sides, count] : pcc.facesByEdges)
    faces[std::to_string(sides)] = count;
  return {{"faces_by_edges", faces}, {"mu", pcc.mu}};
}

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::Parse, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace svc
