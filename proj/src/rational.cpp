#include "jkinv/rational.hpp"

#include "jkinv/errors.hpp"

#include <cctype>

namespace jkinv {

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  auto num = s.substr(0, slash);
  auto den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false))
    throw InputError("malformed rational: '" + std::string(text) + "'");
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  Int d(std::string(den), 10);
  if (d == 0) throw InputError("zero denominator: '" + std::string(text) + "'");
  Rat q(Int(n, 10), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& q) { return q.get_str(); }

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Vec scaled(const Vec& v, const Rat& c) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * c;
  return out;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InputError("vector length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InputError("vector length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace jkinv
