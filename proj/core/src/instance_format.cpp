#include "sqdepth/instance_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "sqdepth/errors.hpp"

namespace sqdepth {
namespace {

std::string strip(std::string_view raw) {
  std::string out;
  for (char ch : raw) {
    if (ch == '#') break;
    if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
  }
  return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

Generators parse_generator_list(std::string_view body, int n, std::size_t line) {
  if (body.empty()) throw ParseError("empty generator list (use 0 for the zero ideal)", line);
  if (body == "0") return {};
  Generators gens;
  for (std::string_view token : split(body, ',')) gens.push_back(parse_monomial(token, n, line));
  return gens;
}

}  // namespace

Monomial parse_monomial(std::string_view token, int n, std::size_t line) {
  if (token.empty()) throw ParseError("empty monomial", line);
  if (token == "1") return Monomial::unit();
  Monomial m;
  for (std::string_view factor : split(token, '*')) {
    if (factor.size() < 2 || factor[0] != 'x') {
      throw ParseError("bad factor '" + std::string(factor) + "' (expected x<i>)", line);
    }
    auto index = parse_int(factor.substr(1));
    if (!index || *index < 1) {
      throw ParseError("bad variable index in '" + std::string(factor) + "'", line);
    }
    if (*index > n) {
      throw ParseError("variable x" + std::to_string(*index) + " exceeds n = " + std::to_string(n),
                       line);
    }
    Monomial x = Monomial::variable(*index);
    if (x.divides(m)) {
      throw ParseError("repeated variable x" + std::to_string(*index) +
                           " in '" + std::string(token) + "' (not square-free)",
                       line);
    }
    m = m.times(x);
  }
  return m;
}

IdealPair parse_ideal_pair(std::string_view text) {
  std::optional<int> n;
  std::optional<std::pair<std::string, std::size_t>> i_line, j_line;

  std::size_t line_no = 0;
  for (std::string_view raw : split(text, '\n')) {
    ++line_no;
    std::string line = strip(raw);
    if (line.empty()) continue;
    if (line.rfind("n=", 0) == 0) {
      if (n) throw ParseError("duplicate n line", line_no);
      n = parse_int(std::string_view(line).substr(2));
      if (!n || *n < 1 || *n > kMaxVariables) {
        throw ParseError("n must be an integer in [1, " + std::to_string(kMaxVariables) + "]",
                         line_no);
      }
    } else if (line.rfind("I:", 0) == 0) {
      if (i_line) throw ParseError("duplicate I line", line_no);
      i_line.emplace(line.substr(2), line_no);
    } else if (line.rfind("J:", 0) == 0) {
      if (j_line) throw ParseError("duplicate J line", line_no);
      j_line.emplace(line.substr(2), line_no);
    } else {
      throw ParseError("unrecognized line '" + std::string(raw) + "'", line_no);
    }
  }
  if (!n) throw ParseError("missing 'n = <int>' line", 0);
  if (!i_line) throw ParseError("missing 'I:' line", 0);
  if (!j_line) throw ParseError("missing 'J:' line", 0);

  Generators gi = parse_generator_list(i_line->first, *n, i_line->second);
  Generators gj = parse_generator_list(j_line->first, *n, j_line->second);
  return IdealPair(*n, gi, gj);
}

IdealPair read_ideal_pair(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ideal_pair(buf.str());
}

std::string format_generators(const Generators& gens) {
  if (gens.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += to_string(gens[i]);
  }
  return out;
}

std::string format_ideal_pair(const IdealPair& ip) {
  return "n = " + std::to_string(ip.n()) + "\nI: " + format_generators(ip.gens_i()) +
         "\nJ: " + format_generators(ip.gens_j()) + "\n";
}

}  // namespace sqdepth
