#include "core/alexander.hpp"

#include "core/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace deltalink {

namespace {

struct Generators {
  std::map<int, int> of_arc;  // arc label -> generator
  std::size_t count = 0;
};

// Wirtinger generators are the over-arcs: an arc label changes generator only
// when it passes under a crossing.
Generators wirtinger_generators(const LinkDiagram& d) {
  std::map<int, int> parent;
  std::function<int(int)> find = [&](int x) {
    auto it = parent.find(x);
    if (it == parent.end()) return parent[x] = x;
    return it->second == x ? x : it->second = find(it->second);
  };
  for (const auto& c : d.crossings()) {
    for (int a : c.arcs) find(a);
    parent[find(c.arcs[1])] = find(c.arcs[3]);
  }
  Generators g;
  std::map<int, int> root_index;
  for (auto& [label, p] : parent) {
    int r = find(label);
    auto [it, fresh] = root_index.emplace(r, static_cast<int>(g.count));
    if (fresh) ++g.count;
    g.of_arc[label] = it->second;
  }
  return g;
}

bool is_split_by_inspection(const LinkDiagram& d) {
  if (d.num_components() < 2) return false;
  if (d.free_loops() > 0) return true;
  if (projection_pieces(d) > 1) return true;
  return wirtinger_generators(d).count != d.num_crossings();
}

std::vector<std::vector<LaurentPoly>> minor_of(const AlexanderMatrix& a, std::size_t row, std::size_t col) {
  std::vector<std::vector<LaurentPoly>> m;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    if (i == row) continue;
    std::vector<LaurentPoly> r;
    for (std::size_t j = 0; j < a.rows[i].size(); ++j) {
      if (j != col) r.push_back(a.rows[i][j]);
    }
    m.push_back(std::move(r));
  }
  return m;
}

LaurentPoly one(std::size_t nvars) { return LaurentPoly::constant(nvars, 1); }

}  // namespace

AlexanderMatrix alexander_matrix(const LinkDiagram& d) {
  const std::size_t n = d.num_crossings();
  const std::size_t m = d.num_crossing_components();
  if (d.free_loops() > 0 && m > 0) throw ValidationError("Fox matrix needs a diagram without free loops");
  auto gens = wirtinger_generators(d);
  if (gens.count != n) throw ValidationError("a component never passes under; the diagram is split");

  AlexanderMatrix a;
  a.nvars = std::max<std::size_t>(m, 1);
  a.component_of.assign(n, 0);
  for (const auto& [label, g] : gens.of_arc) a.component_of[g] = d.component_of_arc(label);
  auto t = [&](int gen) { return LaurentPoly::variable(a.nvars, a.component_of[gen]); };
  auto t_inv = [&](int gen) {
    LaurentPoly::Exponents e(a.nvars, 0);
    e[a.component_of[gen]] = -1;
    return LaurentPoly::monomial(e);
  };

  for (const auto& c : d.crossings()) {
    std::vector<LaurentPoly> row(n, LaurentPoly(a.nvars));
    int k = gens.of_arc.at(c.arcs[1]);
    int i = gens.of_arc.at(c.under_in());
    int j = gens.of_arc.at(c.under_out());
    if (c.sign > 0) {
      // x_k x_i x_k^-1 x_j^-1
      row[k] += one(a.nvars) - t(i);
      row[i] += t(k);
    } else {
      // x_k^-1 x_i x_k x_j^-1
      row[k] += t_inv(k) * (t(i) - one(a.nvars));
      row[i] += t_inv(k);
    }
    row[j] -= one(a.nvars);
    a.rows.push_back(std::move(row));
  }
  return a;
}

LaurentPoly determinant(std::vector<std::vector<LaurentPoly>> a, std::size_t nvars) {
  const std::size_t n = a.size();
  if (n == 0) return one(nvars);
  LaurentPoly prev = one(nvars);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t r = k; r < n; ++r) {
      if (a[r][k].is_zero()) continue;
      if (pivot == n || a[r][k].size() < a[pivot][k].size()) pivot = r;
    }
    if (pivot == n) return LaurentPoly(nvars);
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = exact_divide(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      }
      a[i][k] = LaurentPoly(nvars);
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

LaurentPoly alexander_from_minor(const LinkDiagram& d, std::size_t row, std::size_t col) {
  auto a = alexander_matrix(d);
  if (row >= a.rows.size() || col >= a.rows.size()) throw ValidationError("minor index out of range");
  auto det = determinant(minor_of(a, row, col), a.nvars);
  if (d.num_components() == 1) return normalize(det);
  auto divisor = LaurentPoly::variable(a.nvars, a.component_of[col]) - one(a.nvars);
  auto q = try_exact_divide(det, divisor);
  if (!q) throw ConsistencyError("Fox minor is not divisible by (t_c - 1)");
  return normalize(*q);
}

LaurentPoly alexander_polynomial(const LinkDiagram& d) {
  const std::size_t m = d.num_components();
  if (is_split_by_inspection(d)) return LaurentPoly(m);
  if (m == 1 && d.num_crossings() <= 1) return one(1);
  auto first = alexander_from_minor(d, 0, 0);
  auto second = alexander_from_minor(d, 1, 1);
  if (!(first == second)) {
    throw ConsistencyError("Alexander minors disagree: " + first.to_string() + " vs " + second.to_string());
  }
  return first;
}

LaurentPoly alexander_poly_knot(const LinkDiagram& d) {
  if (d.num_components() != 1) throw ValidationError("expected a knot diagram");
  return alexander_polynomial(d);
}

LaurentPoly alexander_poly_link2(const LinkDiagram& d) {
  if (d.num_components() != 2) throw ValidationError("expected a 2-component diagram");
  return alexander_polynomial(d);
}

int arf_knot(const LinkDiagram& d) {
  auto delta = alexander_poly_knot(d);
  std::array<long long, 1> minus_one{-1};
  BigInt v = abs(delta.evaluate(minus_one));
  int r = static_cast<int>(v % 8);
  if (r == 1 || r == 7) return 0;
  if (r == 3 || r == 5) return 1;
  throw ConsistencyError("knot determinant is even");
}

long long milnor_1122(const LinkDiagram& d) {
  if (d.num_components() != 2) throw ValidationError("milnor_1122 needs a 2-component diagram");
  if (!is_algebraically_split(d)) throw ValidationError("milnor_1122 needs linking number 0");
  auto delta = alexander_poly_link2(d);
  auto x1 = LaurentPoly::variable(2, 0) - one(2);
  auto y1 = LaurentPoly::variable(2, 1) - one(2);
  auto f = exact_divide(delta, x1 * y1);
  std::array<long long, 2> at_one{1, 1};
  BigInt v = abs(f.evaluate(at_one));
  if (v > BigInt(std::numeric_limits<long long>::max())) throw ArithmeticError("milnor_1122 overflow");
  return static_cast<long long>(v);
}

LaurentPoly symmetric_canonical(const LaurentPoly& p) {
  const std::size_t n = p.nvars();
  if (p.is_zero()) return p;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<LaurentPoly> best;
  do {
    for (unsigned flips = 0; flips < (1u << n); ++flips) {
      auto q = p.map_exponents(n, [&](const LaurentPoly::Exponents& e) {
        LaurentPoly::Exponents r(n);
        for (std::size_t i = 0; i < n; ++i) r[i] = (flips >> i & 1u) ? -e[perm[i]] : e[perm[i]];
        return r;
      });
      q = normalize(q);
      if (!best || q < *best) best = std::move(q);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

bool Fingerprint::matches(const Fingerprint& o) const {
  if (m != o.m || lk != o.lk || !(delta == o.delta) || component_deltas != o.component_deltas ||
      pair_deltas != o.pair_deltas) {
    return false;
  }
  return !arf || !o.arf || *arf == *o.arf;
}

std::string Fingerprint::to_string() const {
  std::ostringstream out;
  out << "m=" << m << " lk=[";
  for (std::size_t i = 0; i < lk.size(); ++i) out << (i ? "," : "") << lk[i];
  out << "] delta=" << delta.to_string() << " components={";
  for (std::size_t i = 0; i < component_deltas.size(); ++i) out << (i ? ", " : "") << component_deltas[i].to_string();
  out << "}";
  if (!pair_deltas.empty()) {
    out << " pairs={";
    for (std::size_t i = 0; i < pair_deltas.size(); ++i) out << (i ? ", " : "") << pair_deltas[i].to_string();
    out << "}";
  }
  out << " arf=" << (arf ? std::to_string(*arf) : std::string("-"));
  return out.str();
}

Fingerprint fingerprint(const LinkDiagram& d, std::optional<int> link_arf) {
  Fingerprint f;
  f.m = d.num_components();
  auto lk = linking_matrix(d);
  for (std::size_t i = 0; i < f.m; ++i) {
    for (std::size_t j = i + 1; j < f.m; ++j) f.lk.push_back(std::abs(lk.at(i, j)));
  }
  std::sort(f.lk.begin(), f.lk.end());
  auto reduced = simplify(d);
  f.delta = symmetric_canonical(alexander_polynomial(reduced));
  if (f.m == 1) {
    f.component_deltas.push_back(f.delta);
    f.arf = arf_knot(reduced);
  } else {
    for (std::size_t i = 0; i < f.m; ++i) {
      std::array<int, 1> keep{static_cast<int>(i)};
      auto component = simplify(extract_sublink(reduced, keep));
      f.component_deltas.push_back(symmetric_canonical(alexander_poly_knot(component)));
    }
    std::sort(f.component_deltas.begin(), f.component_deltas.end());
    if (f.m >= 3) {
      for (std::size_t i = 0; i < f.m; ++i) {
        for (std::size_t j = i + 1; j < f.m; ++j) {
          std::array<int, 2> keep{static_cast<int>(i), static_cast<int>(j)};
          f.pair_deltas.push_back(symmetric_canonical(alexander_polynomial(simplify(extract_sublink(reduced, keep)))));
        }
      }
      std::sort(f.pair_deltas.begin(), f.pair_deltas.end());
    }
    if (is_proper(d)) f.arf = link_arf;
  }
  return f;
}

}  // namespace deltalink
