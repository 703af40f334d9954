#include <cctype>
#include <charconv>
#include <sstream>

#include <json.hpp>

#include "xorkneser/errors.hpp"
#include "xorkneser/setsystem.hpp"

namespace xorkneser {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i)
      out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_int(std::string_view field, std::size_t line, std::size_t col) {
  long long v = 0;
  auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || p != field.data() + field.size())
    throw ParseError(line, col, "expected an integer, got '" + std::string(field) + "'");
  return v;
}

Layout make_layout(long long ell, long long n, long long k, std::size_t line) {
  if (ell < 1 || n < 1 || k < 1 || k > n || ell > (1 << 20) || n > (1 << 24))
    throw ParseError(line, 1, "invalid layout parameters " + std::to_string(ell) + " " +
                                  std::to_string(n) + " " + std::to_string(k));
  return Layout(static_cast<int>(ell), static_cast<int>(n), static_cast<int>(k));
}

} // namespace

std::string encode(const Family &family) {
  const Layout &l = family.layout();
  std::ostringstream out;
  out << l.ell() << ' ' << l.n() << ' ' << l.k() << '\n';
  for (const auto &m : family.members()) {
    bool first = true;
    for (std::size_t e : m.elements()) {
      if (!first)
        out << ' ';
      out << e;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

Family decode(const std::string &text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  std::optional<Layout> layout;
  std::vector<TransversalSet> members;
  std::vector<std::size_t> first_line;
  while (std::getline(in, raw)) {
    ++line_no;
    auto fields = split_fields(raw);
    if (fields.empty())
      continue;
    if (!layout) {
      if (fields.size() != 3)
        throw ParseError(line_no, fields.size() < 3 ? fields.size() + 1 : 4,
                         "header must be 'ell n k'");
      layout = make_layout(parse_int(fields[0], line_no, 1), parse_int(fields[1], line_no, 2),
                           parse_int(fields[2], line_no, 3), line_no);
      continue;
    }
    Bitset bits(layout->universe_size());
    for (std::size_t f = 0; f < fields.size(); ++f) {
      const long long e = parse_int(fields[f], line_no, f + 1);
      if (e < 0 || static_cast<std::size_t>(e) >= layout->universe_size())
        throw ParseError(line_no, f + 1, "element " + std::to_string(e) + " outside universe");
      if (bits.test(static_cast<std::size_t>(e)))
        throw ParseError(line_no, f + 1, "duplicate element " + std::to_string(e));
      bits.set(static_cast<std::size_t>(e));
    }
    members.emplace_back(std::move(bits));
    first_line.push_back(line_no);
  }
  if (!layout)
    throw ParseError(line_no + 1, 1, "missing header line");
  try {
    return Family(*layout, std::move(members));
  } catch (const UsageError &e) {
    throw ParseError(line_no, 1, e.what());
  }
}

std::string encode_json(const Family &family) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["ell"] = family.layout().ell();
  j["n"] = family.layout().n();
  j["k"] = family.layout().k();
  auto members = nlohmann::ordered_json::array();
  for (const auto &m : family.members())
    members.push_back(m.elements());
  j["members"] = std::move(members);
  return j.dump() + "\n";
}

Family decode_json(const std::string &text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(1, e.byte, e.what());
  }
  auto get_int = [&](const char *key, std::size_t field) -> long long {
    if (!j.contains(key) || !j[key].is_number_integer())
      throw ParseError(1, field, std::string("missing or non-integer field '") + key + "'");
    return j[key].get<long long>();
  };
  Layout layout = make_layout(get_int("ell", 1), get_int("n", 2), get_int("k", 3), 1);
  if (!j.contains("members") || !j["members"].is_array())
    throw ParseError(1, 4, "missing 'members' array");
  std::vector<TransversalSet> members;
  std::size_t idx = 0;
  for (const auto &row : j["members"]) {
    ++idx;
    if (!row.is_array())
      throw ParseError(idx, 1, "member must be an array of element indices");
    Bitset bits(layout.universe_size());
    std::size_t f = 0;
    for (const auto &v : row) {
      ++f;
      if (!v.is_number_integer())
        throw ParseError(idx, f, "element must be an integer");
      const long long e = v.get<long long>();
      if (e < 0 || static_cast<std::size_t>(e) >= layout.universe_size())
        throw ParseError(idx, f, "element " + std::to_string(e) + " outside universe");
      if (bits.test(static_cast<std::size_t>(e)))
        throw ParseError(idx, f, "duplicate element " + std::to_string(e));
      bits.set(static_cast<std::size_t>(e));
    }
    members.emplace_back(std::move(bits));
  }
  try {
    return Family(layout, std::move(members));
  } catch (const UsageError &e) {
    throw ParseError(idx, 1, e.what());
  }
}

Family decode_any(const std::string &text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)))
      continue;
    return c == '{' ? decode_json(text) : decode(text);
  }
  throw ParseError(1, 1, "empty input");
}

} // namespace xorkneser
