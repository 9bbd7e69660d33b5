#include "jkinv/poly.hpp"

#include "jkinv/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace jkinv {

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }
Poly Poly::x() { return Poly(std::vector<Rat>{0, 1}); }
Poly Poly::linear(const Rat& root) { return Poly(std::vector<Rat>{-root, 1}); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly p = *this;
  const Rat l = lead();
  for (auto& c : p.c_) c /= l;
  return p;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return Poly(std::move(d));
}

Rat Poly::eval(const Rat& t) const {
  Rat s = 0;
  for (std::size_t i = c_.size(); i-- > 0;) s = s * t + c_[i];
  return s;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rat> p(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) p[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(p);
  trim();
  return *this;
}

Poly operator-(const Poly& a) {
  Poly p = a;
  for (auto& c : p.c_) c = -c;
  return p;
}

Poly operator*(const Rat& c, const Poly& a) {
  if (c == 0) return Poly();
  Poly p = a;
  for (auto& x : p.c_) x *= c;
  return p;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() <=> b.c_.size();
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    int s = cmp(a.c_[i], b.c_[i]);
    if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rat& c = c_[i];
    if (c == 0) continue;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

namespace {

// Term grammar: [coef]['*'][x['^'k]] where the coefficient is p or p/q.
Poly parse_term(std::string_view t, const std::string& whole) {
  if (t.empty()) throw InputError("malformed polynomial: '" + whole + "'");
  auto xpos = t.find('x');
  Rat coef = 1;
  std::size_t power = 0;
  if (xpos == std::string_view::npos) {
    coef = parse_rat(t);
  } else {
    auto cs = t.substr(0, xpos);
    if (!cs.empty() && cs.back() == '*') cs.remove_suffix(1);
    if (!cs.empty()) coef = parse_rat(cs);
    auto rest = t.substr(xpos + 1);
    power = 1;
    if (!rest.empty()) {
      if (rest[0] != '^' || rest.size() < 2) throw InputError("malformed polynomial: '" + whole + "'");
      for (char ch : rest.substr(1))
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          throw InputError("malformed polynomial: '" + whole + "'");
      power = std::stoul(std::string(rest.substr(1)));
    }
  }
  std::vector<Rat> c(power + 1);
  c[power] = coef;
  return Poly(std::move(c));
}

}  // namespace

Poly Poly::parse(std::string_view text) {
  std::string s;
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char ch = text[k];
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    // UTF-8 lambda is accepted as the variable name.
    if (ch == '\xce' && k + 1 < text.size() && text[k + 1] == '\xbb') {
      s.push_back('x');
      ++k;
      continue;
    }
    s.push_back(ch);
  }
  const std::string whole(text);
  if (s.empty()) throw InputError("empty polynomial");
  Poly out;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && !(s[j] == '-' && j > i && s[j - 1] != '^')) ++j;
    Poly term = parse_term(std::string_view(s).substr(i, j - i), whole);
    out += sign < 0 ? -term : term;
    i = j;
  }
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  std::vector<Rat> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  std::vector<Rat> q(static_cast<std::size_t>(a.degree() - db + 1));
  const Rat lb = b.lead();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rat f = r[static_cast<std::size_t>(k + db)] / lb;
    q[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= f * b.coeff(static_cast<std::size_t>(j));
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    Poly r = (x % y).monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

Bezout extended_gcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(1), s1;
  Poly t0, t1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {Poly(), Poly(), Poly()};
  const Rat l = r0.lead();
  const Rat inv = 1 / l;
  return {r0.monic(), inv * s0, inv * t0};
}

std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& a) {
  std::vector<std::pair<Poly, unsigned>> out;
  if (a.degree() <= 0) return out;
  Poly f = a.monic();
  Poly fp = f.derivative();
  Poly g = gcd(f, fp);
  Poly w = f / g;
  // Yun: w carries the remaining squarefree product, y the matching derivative cofactor.
  Poly y = fp / g;
  unsigned i = 1;
  while (w.degree() > 0) {
    Poly z = y - w.derivative();
    Poly h = gcd(w, z);
    if (h.degree() > 0) out.emplace_back(h, i);
    w = w / h;
    y = z / h;
    ++i;
  }
  return out;
}

Poly squarefree_part(const Poly& a) {
  if (a.degree() <= 0) return Poly::constant(1);
  Poly g = gcd(a, a.derivative());
  return (a / g).monic();
}

std::vector<Poly> coprime_basis(std::span<const Poly> ps) {
  std::vector<Poly> pieces;
  for (const auto& p : ps) {
    if (p.is_zero()) throw InputError("coprime_basis needs nonzero inputs");
    for (auto& [f, e] : squarefree_decomposition(p)) pieces.push_back(f);
  }
  // Refine until pairwise coprime: replace a, b sharing g by a/g, b/g, g.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < pieces.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < pieces.size() && !changed; ++j) {
        Poly g = gcd(pieces[i], pieces[j]);
        if (g.degree() <= 0) continue;
        Poly a = pieces[i] / g, b = pieces[j] / g;
        pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(j));
        pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(i));
        for (Poly* q : {&a, &b, &g})
          if (q->degree() > 0) pieces.push_back(q->monic());
        changed = true;
      }
  }
  std::sort(pieces.begin(), pieces.end());
  pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());
  return pieces;
}

Poly interpolate(std::span<const Rat> xs, std::span<const Rat> ys) {
  if (xs.size() != ys.size()) throw InputError("interpolation size mismatch");
  // Newton divided differences.
  const std::size_t n = xs.size();
  std::vector<Rat> d(ys.begin(), ys.end());
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) {
      d[i] = (d[i] - d[i - 1]) / (xs[i] - xs[i - k]);
      if (i == k) break;
    }
  Poly p;
  for (std::size_t i = n; i-- > 0;) {
    p = p * Poly::linear(xs[i]) + Poly::constant(d[i]);
  }
  return p;
}

unsigned multiplicity(const Poly& f, Poly a) {
  if (f.degree() <= 0) throw InputError("multiplicity of a constant");
  unsigned e = 0;
  while (!a.is_zero()) {
    auto [q, r] = divmod(a, f);
    if (!r.is_zero()) break;
    a = std::move(q);
    ++e;
  }
  return e;
}

bool BinForm::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rat& c) { return c == 0; });
}

std::string BinForm::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  const unsigned d = degree();
  bool first = true;
  for (unsigned i = 0; i <= d; ++i) {
    const Rat& c = coeffs[i];
    if (c == 0) continue;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const unsigned pa = d - i, pb = i;
    bool need_coef = mag != 1 || (pa == 0 && pb == 0);
    if (need_coef) os << mag.get_str();
    auto put = [&](const char* v, unsigned p) {
      if (p == 0) return;
      if (need_coef) os << "*";
      os << v;
      if (p > 1) os << "^" << p;
      need_coef = true;
    };
    put("a", pa);
    put("b", pb);
  }
  return os.str();
}

}  // namespace jkinv
