#pragma once

// Exact Laurent polynomials with arbitrary-precision integer coefficients.
//
// A LaurentPoly lives in Z[t_1^{+-1}, ..., t_n^{+-1}] for a fixed number of
// variables n. Terms are kept in a map keyed by exponent vector, ordered
// colexicographically (last variable most significant), which is also the
// order used for rendering: "-1 + x + y - x*y".

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace deltalink {

using BigInt = boost::multiprecision::cpp_int;

class LaurentPoly {
 public:
  using Exponents = std::vector<int>;

  struct ExponentOrder {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using TermMap = std::map<Exponents, BigInt, ExponentOrder>;

  explicit LaurentPoly(std::size_t nvars = 1) : nvars_(nvars) {}

  static LaurentPoly constant(std::size_t nvars, const BigInt& c);
  static LaurentPoly monomial(Exponents exps, const BigInt& c = 1);
  static LaurentPoly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  BigInt coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, const BigInt& c);

  /// Greatest term in the colex order. Precondition: nonzero.
  const TermMap::value_type& leading() const;
  Exponents min_exponents() const;
  Exponents max_exponents() const;
  bool is_unit() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  /// Exact substitution t_i = point[i]. Negative powers are only allowed at +-1.
  BigInt evaluate(std::span<const long long> point) const;

  /// Rewrites every exponent vector through `f`; the result has `nvars` variables.
  LaurentPoly map_exponents(std::size_t nvars, const std::function<Exponents(const Exponents&)>& f) const;

  /// Multiplies by the monomial t^shift.
  LaurentPoly shifted(const Exponents& shift) const;

  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string() const;

  static LaurentPoly parse(std::string_view text, std::size_t nvars, const std::vector<std::string>& names);
  static LaurentPoly parse(std::string_view text, std::size_t nvars);

 private:
  void check_same_ring(const LaurentPoly& o, const char* op) const;

  std::size_t nvars_;
  TermMap terms_;
};

/// "t" for one variable, "x","y","z" for two or three, "t1".."tn" beyond.
std::vector<std::string> default_variable_names(std::size_t nvars);

/// Total order on polynomials of the same ring (term sequence, then coefficients).
bool operator<(const LaurentPoly& a, const LaurentPoly& b);

/// The r with p = q*r in the Laurent ring, or nullopt when q does not divide p.
/// Throws ArithmeticError when q is zero or the rings differ.
std::optional<LaurentPoly> try_exact_divide(const LaurentPoly& p, const LaurentPoly& q);
/// As try_exact_divide, throwing ArithmeticError on non-divisibility.
LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& q);

/// Unit representative: minimum exponent 0 in every variable and a positive
/// leading coefficient. The zero polynomial is its own representative.
LaurentPoly normalize(const LaurentPoly& p);
bool equal_up_to_unit(const LaurentPoly& p, const LaurentPoly& q);

/// Greatest common divisor up to units, returned normalized.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace deltalink
