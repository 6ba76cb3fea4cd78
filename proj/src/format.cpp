#include "pairdiss/format.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

#include "pairdiss/error.hpp"

namespace pairdiss {

std::string format_number(double value) {
  if (std::isnan(value)) return "undef";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  // Avoid emitting "-0".
  if (value == 0.0) value = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string format_number(const std::optional<double>& value) {
  return value ? format_number(*value) : std::string("undef");
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

double parse_extended_real(std::string_view text) {
  const std::string token = lower(trim(text));
  if (token == "inf" || token == "+inf" || token == "infinity" || token == "+infinity")
    return std::numeric_limits<double>::infinity();
  if (token == "-inf" || token == "-infinity") return -std::numeric_limits<double>::infinity();
  if (token.empty()) throw Error(ErrorCode::InvalidArgument, "empty number");

  errno = 0;
  char* end = nullptr;
  const double value = std::strtod(token.c_str(), &end);
  if (end != token.c_str() + token.size() || errno == ERANGE || std::isnan(value) ||
      std::isinf(value))
    throw Error(ErrorCode::InvalidArgument, "not a number: '" + std::string(text) + "'");
  return value;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    const auto piece = text.substr(start, pos == std::string_view::npos ? pos : pos - start);
    parts.emplace_back(trim(piece));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace pairdiss
