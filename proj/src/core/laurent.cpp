#include "core/laurent.hpp"

#include "core/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace deltalink {

bool LaurentPoly::ExponentOrder::operator()(const Exponents& a, const Exponents& b) const {
  // colex: the last variable is the most significant key
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

LaurentPoly LaurentPoly::constant(std::size_t nvars, const BigInt& c) {
  LaurentPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(Exponents exps, const BigInt& c) {
  LaurentPoly p(exps.size());
  p.add_term(exps, c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw ArithmeticError("variable index out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  return monomial(std::move(e));
}

BigInt LaurentPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(const Exponents& e, const BigInt& c) {
  if (e.size() != nvars_) throw ArithmeticError("exponent vector does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

const LaurentPoly::TermMap::value_type& LaurentPoly::leading() const {
  if (terms_.empty()) throw ArithmeticError("leading term of zero polynomial");
  return *terms_.rbegin();
}

LaurentPoly::Exponents LaurentPoly::min_exponents() const {
  Exponents m(nvars_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
    first = false;
  }
  return m;
}

LaurentPoly::Exponents LaurentPoly::max_exponents() const {
  Exponents m(nvars_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) m[i] = first ? e[i] : std::max(m[i], e[i]);
    first = false;
  }
  return m;
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
}

void LaurentPoly::check_same_ring(const LaurentPoly& o, const char* op) const {
  if (nvars_ != o.nvars_) {
    std::ostringstream msg;
    msg << "variable count mismatch in " << op << ": " << nvars_ << " vs " << o.nvars_;
    throw ArithmeticError(msg.str());
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_same_ring(o, "addition");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_same_ring(o, "subtraction");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same_ring(b, "multiplication");
  LaurentPoly r(a.nvars_);
  LaurentPoly::Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

BigInt LaurentPoly::evaluate(std::span<const long long> point) const {
  if (point.size() != nvars_) throw ArithmeticError("evaluation point has wrong dimension");
  BigInt total = 0;
  for (const auto& [e, c] : terms_) {
    BigInt term = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      long long v = point[i];
      int k = e[i];
      if (k < 0) {
        if (v != 1 && v != -1) throw ArithmeticError("negative power evaluated at a non-unit");
        k = -k;
      }
      term *= boost::multiprecision::pow(BigInt(v), static_cast<unsigned>(k));
    }
    total += term;
  }
  return total;
}

LaurentPoly LaurentPoly::map_exponents(std::size_t nvars, const std::function<Exponents(const Exponents&)>& f) const {
  LaurentPoly r(nvars);
  for (const auto& [e, c] : terms_) r.add_term(f(e), c);
  return r;
}

LaurentPoly LaurentPoly::shifted(const Exponents& shift) const {
  if (shift.size() != nvars_) throw ArithmeticError("shift has wrong dimension");
  return map_exponents(nvars_, [&](const Exponents& e) {
    Exponents out(e);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += shift[i];
    return out;
  });
}

std::vector<std::string> default_variable_names(std::size_t nvars) {
  if (nvars == 1) return {"t"};
  if (nvars == 2) return {"x", "y"};
  if (nvars == 3) return {"x", "y", "z"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("t" + std::to_string(i + 1));
  return names;
}

std::string LaurentPoly::to_string() const { return to_string(default_variable_names(nvars_)); }

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(i);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.str() + "*" + mono;
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t nvars, const std::vector<std::string>& names)
      : text_(text), nvars_(nvars), names_(names) {}

  LaurentPoly run() {
    LaurentPoly result(nvars_);
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      parse_term(result, sign);
    }
    return result;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return text_[pos_++]; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + std::string(text_) + "': " + what + " at offset " + std::to_string(pos_));
  }

  BigInt parse_uint() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected integer");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  int parse_exponent() {
    int sign = 1;
    if (peek() == '-') {
      ++pos_;
      sign = -1;
    }
    BigInt v = parse_uint();
    if (v > 1000000) fail("exponent out of range");
    return sign * v.convert_to<int>();
  }

  void parse_term(LaurentPoly& acc, int sign) {
    BigInt coeff = 1;
    LaurentPoly::Exponents e(nvars_, 0);
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_uint();
      have_factor = true;
      skip_ws();
      if (peek() != '*') {
        acc.add_term(e, coeff * sign);
        return;
      }
      ++pos_;
      skip_ws();
    }
    while (true) {
      std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      if (start == pos_) fail(have_factor ? "expected variable after '*'" : "expected term");
      std::string name(text_.substr(start, pos_ - start));
      auto it = std::find(names_.begin(), names_.end(), name);
      if (it == names_.end()) fail("unknown variable '" + name + "'");
      int power = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        power = parse_exponent();
        skip_ws();
      }
      e[static_cast<std::size_t>(it - names_.begin())] += power;
      have_factor = true;
      if (peek() != '*') break;
      ++pos_;
      skip_ws();
    }
    acc.add_term(e, coeff * sign);
  }

  std::string_view text_;
  std::size_t nvars_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text, std::size_t nvars, const std::vector<std::string>& names) {
  if (names.size() != nvars) throw ParseError("variable name list does not match variable count");
  return PolyParser(text, nvars, names).run();
}

LaurentPoly LaurentPoly::parse(std::string_view text, std::size_t nvars) {
  return parse(text, nvars, default_variable_names(nvars));
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars() != b.nvars()) return a.nvars() < b.nvars();
  return std::lexicographical_compare(
      a.terms().begin(), a.terms().end(), b.terms().begin(), b.terms().end(),
      [](const auto& x, const auto& y) {
        LaurentPoly::ExponentOrder ord;
        if (ord(x.first, y.first)) return true;
        if (ord(y.first, x.first)) return false;
        return x.second < y.second;
      });
}

std::optional<LaurentPoly> try_exact_divide(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.nvars() != q.nvars()) throw ArithmeticError("variable count mismatch in division");
  if (q.is_zero()) throw ArithmeticError("division by the zero polynomial");
  const std::size_t n = p.nvars();
  LaurentPoly quotient(n);
  if (p.is_zero()) return quotient;

  // Every term of a quotient lies in this box; leaving it proves non-divisibility.
  auto pmin = p.min_exponents(), pmax = p.max_exponents();
  auto qmin = q.min_exponents(), qmax = q.max_exponents();
  LaurentPoly::Exponents lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = pmin[i] - qmin[i];
    hi[i] = pmax[i] - qmax[i];
    if (lo[i] > hi[i]) return std::nullopt;
  }

  const auto& [qe, qc] = q.leading();
  LaurentPoly rem = p;
  while (!rem.is_zero()) {
    const auto& [re, rc] = rem.leading();
    if (rc % qc != 0) return std::nullopt;
    LaurentPoly::Exponents e(n);
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = re[i] - qe[i];
      if (e[i] < lo[i] || e[i] > hi[i]) return std::nullopt;
    }
    LaurentPoly term = LaurentPoly::monomial(e, rc / qc);
    quotient += term;
    rem -= term * q;
  }
  return quotient;
}

LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& q) {
  auto r = try_exact_divide(p, q);
  if (!r) throw ArithmeticError("polynomial " + p.to_string() + " is not divisible by " + q.to_string());
  return *r;
}

LaurentPoly normalize(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  auto m = p.min_exponents();
  for (auto& v : m) v = -v;
  LaurentPoly r = p.shifted(m);
  if (r.leading().second < 0) r = -r;
  return r;
}

bool equal_up_to_unit(const LaurentPoly& p, const LaurentPoly& q) { return normalize(p) == normalize(q); }

namespace {

// Polynomials in the last variable with coefficients in the remaining ones.
using Univariate = std::vector<LaurentPoly>;

Univariate to_univariate(const LaurentPoly& p) {
  const std::size_t n = p.nvars();
  Univariate u;
  for (const auto& [e, c] : p.terms()) {
    auto d = static_cast<std::size_t>(e[n - 1]);
    if (u.size() <= d) u.resize(d + 1, LaurentPoly(n - 1));
    u[d].add_term(LaurentPoly::Exponents(e.begin(), e.end() - 1), c);
  }
  while (!u.empty() && u.back().is_zero()) u.pop_back();
  return u;
}

LaurentPoly from_univariate(const Univariate& u, std::size_t n) {
  LaurentPoly p(n);
  for (std::size_t d = 0; d < u.size(); ++d) {
    for (const auto& [e, c] : u[d].terms()) {
      auto full = e;
      full.push_back(static_cast<int>(d));
      p.add_term(full, c);
    }
  }
  return p;
}

LaurentPoly polynomial_gcd(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly content(const Univariate& u, std::size_t n) {
  LaurentPoly g(n);
  for (const auto& c : u) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? normalize(c) : polynomial_gcd(g, c);
    if (g.is_unit()) break;
  }
  return g;
}

Univariate primitive_part(const Univariate& u, std::size_t n) {
  LaurentPoly c = content(u, n);
  if (c.is_zero()) return {};
  Univariate out;
  out.reserve(u.size());
  for (const auto& coef : u) out.push_back(exact_divide(coef, c));
  return out;
}

Univariate pseudo_remainder(Univariate f, const Univariate& g) {
  const LaurentPoly& lg = g.back();
  while (f.size() >= g.size() && !f.empty()) {
    std::size_t shift = f.size() - g.size();
    LaurentPoly lf = f.back();
    for (auto& c : f) c *= lg;
    for (std::size_t i = 0; i < g.size(); ++i) f[i + shift] -= lf * g[i];
    while (!f.empty() && f.back().is_zero()) f.pop_back();
  }
  return f;
}

// gcd of genuine polynomials (all exponents >= 0), up to sign.
LaurentPoly polynomial_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  const std::size_t n = a.nvars();
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  if (n == 0) {
    BigInt g = boost::multiprecision::gcd(a.leading().second, b.leading().second);
    return LaurentPoly::constant(0, g);
  }
  Univariate ua = to_univariate(a), ub = to_univariate(b);
  LaurentPoly c = polynomial_gcd(content(ua, n - 1), content(ub, n - 1));
  ua = primitive_part(ua, n - 1);
  ub = primitive_part(ub, n - 1);
  if (ua.size() < ub.size()) std::swap(ua, ub);
  while (!ub.empty()) {
    Univariate r = pseudo_remainder(ua, ub);
    ua = std::move(ub);
    ub = r.empty() ? Univariate{} : primitive_part(r, n - 1);
  }
  return normalize(from_univariate({c}, n) * from_univariate(primitive_part(ua, n - 1), n));
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars() != b.nvars()) throw ArithmeticError("variable count mismatch in gcd");
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  return normalize(polynomial_gcd(normalize(a), normalize(b)));
}

}  // namespace deltalink
