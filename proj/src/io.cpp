#include "qmut/io.hpp"

#include <fstream>
#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace qmut::io {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what);
}

bool parse_decimal(std::string_view token, Int& out) {
  if (token.empty()) return false;
  std::size_t start = (token[0] == '-' || token[0] == '+') ? 1 : 0;
  if (start == token.size()) return false;
  for (std::size_t i = start; i < token.size(); ++i) {
    if (token[i] < '0' || token[i] > '9') return false;
  }
  out = Int(std::string(token[0] == '+' ? token.substr(1) : token));
  return true;
}

}  // namespace

Quiver parse_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::vector<Arrow> arrows;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (!n) {
      Int count;
      if (tok.size() != 2 || tok[0] != "n" || !parse_decimal(tok[1], count)) {
        fail(line_no, "expected header \"n <count>\"");
      }
      if (count < 1 || count > 100000) fail(line_no, "vertex count must be positive");
      n = count.convert_to<std::size_t>();
      continue;
    }
    if (tok.size() != 3) fail(line_no, "expected \"<i> <j> <w>\"");
    Int i, j, w;
    if (!parse_decimal(tok[0], i) || !parse_decimal(tok[1], j) || !parse_decimal(tok[2], w)) {
      fail(line_no, "expected integers");
    }
    if (i < 1 || i > *n || j < 1 || j > *n) fail(line_no, "vertex out of range 1.." + std::to_string(*n));
    if (w < 1) fail(line_no, "weight must be at least 1");
    if (i == j) throw Error(ErrorCode::LoopForbidden, "line " + std::to_string(line_no) + ": loop forbidden");
    auto from = i.convert_to<std::size_t>() - 1;
    auto to = j.convert_to<std::size_t>() - 1;
    if (!seen.insert(std::minmax(from, to)).second) {
      throw Error(ErrorCode::ConflictingEdge,
                  "line " + std::to_string(line_no) + ": conflicting edge between " + tok[0] +
                      " and " + tok[1]);
    }
    arrows.push_back({from, to, w});
  }
  if (!n) fail(line_no == 0 ? 1 : line_no, "missing header \"n <count>\"");
  return Quiver::from_arrows(*n, arrows);
}

std::string to_text(const Quiver& q) {
  std::ostringstream out;
  out << "n " << q.size() << '\n';
  for (const auto& a : q.arrows()) {
    out << (a.from + 1) << ' ' << (a.to + 1) << ' ' << a.weight << '\n';
  }
  return out.str();
}

nlohmann::json int_to_json(const Int& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() &&
      x <= std::numeric_limits<std::int64_t>::max()) {
    return x.convert_to<std::int64_t>();
  }
  return x.str();
}

Int int_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    return Int(j.get<std::int64_t>());
  }
  Int out;
  if (j.is_string() && parse_decimal(j.get<std::string>(), out)) return out;
  throw Error(ErrorCode::Parse, "expected an integer");
}

Quiver from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::Parse, "quiver: expected an object");
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw Error(ErrorCode::Parse, "quiver.n: expected an integer");
  }
  const auto n_signed = j["n"].get<std::int64_t>();
  if (n_signed < 1) throw Error(ErrorCode::Parse, "quiver.n: must be positive");
  const auto n = static_cast<std::size_t>(n_signed);
  std::vector<Arrow> arrows;
  if (j.contains("arrows")) {
    const auto& arr = j["arrows"];
    if (!arr.is_array()) throw Error(ErrorCode::Parse, "quiver.arrows: expected an array");
    for (std::size_t idx = 0; idx < arr.size(); ++idx) {
      const auto& a = arr[idx];
      const std::string where = "quiver.arrows[" + std::to_string(idx) + "]";
      if (!a.is_array() || a.size() != 3) throw Error(ErrorCode::Parse, where + ": expected [i, j, w]");
      if (!a[0].is_number_integer() || !a[1].is_number_integer()) {
        throw Error(ErrorCode::Parse, where + ": vertices must be integers");
      }
      const auto i = a[0].get<std::int64_t>();
      const auto jj = a[1].get<std::int64_t>();
      Int w;
      try {
        w = int_from_json(a[2]);
      } catch (const Error&) {
        throw Error(ErrorCode::Parse, where + ": weight must be an integer");
      }
      if (i < 1 || jj < 1 || static_cast<std::size_t>(i) > n || static_cast<std::size_t>(jj) > n) {
        throw Error(ErrorCode::Parse, where + ": vertex out of range 1.." + std::to_string(n));
      }
      if (w < 1) throw Error(ErrorCode::Parse, where + ": weight must be at least 1");
      arrows.push_back({static_cast<std::size_t>(i) - 1, static_cast<std::size_t>(jj) - 1, w});
    }
  }
  Quiver q = Quiver::from_arrows(n, arrows);
  if (j.contains("labels") && !j["labels"].is_null()) {
    const auto& l = j["labels"];
    if (!l.is_array() || l.size() != n) {
      throw Error(ErrorCode::Parse, "quiver.labels: expected an array of n strings");
    }
    std::vector<std::string> labels;
    for (const auto& s : l) {
      if (!s.is_string()) throw Error(ErrorCode::Parse, "quiver.labels: expected strings");
      labels.push_back(s.get<std::string>());
    }
    q = q.with_labels(std::move(labels));
  }
  return q;
}

nlohmann::json to_json(const Quiver& q) {
  nlohmann::json arrows = nlohmann::json::array();
  for (const auto& a : q.arrows()) {
    arrows.push_back({a.from + 1, a.to + 1, int_to_json(a.weight)});
  }
  nlohmann::json out = {{"n", q.size()}, {"arrows", std::move(arrows)}};
  if (!q.labels().empty()) out["labels"] = q.labels();
  return out;
}

Quiver parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
  }
  return from_json(j);
}

Quiver parse_any(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
  return parse_text(text);
}

Quiver read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_any(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

}  // namespace qmut::io
