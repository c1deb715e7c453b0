#include "core/diagram.hpp"

#include "core/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

namespace deltalink {

namespace {

// Slot-level view of a diagram: slot 4*k+p is position p of crossing k, and
// mate[s] is the slot at the other end of the arc leaving s.
struct SlotGraph {
  std::vector<int> mate;
  std::vector<int> sign;
  std::vector<int> comp;        // component id per slot
  std::vector<int> loop_comps;  // component ids of free loops

  int crossings() const { return static_cast<int>(sign.size()); }
};

int crossing_of(int s) { return s / 4; }
int pos_of(int s) { return s % 4; }
int opposite(int s) { return s - s % 4 + (s % 4 + 2) % 4; }
int ccw_next(int s) { return s - s % 4 + (s % 4 + 1) % 4; }

bool slot_is_in(int pos, int sign) { return pos == 0 || (pos == 3 && sign > 0) || (pos == 1 && sign < 0); }
bool is_in(const SlotGraph& g, int s) { return slot_is_in(pos_of(s), g.sign[crossing_of(s)]); }

SlotGraph graph_from_diagram(const LinkDiagram& d) {
  SlotGraph g;
  const int n = static_cast<int>(d.num_crossings());
  g.mate.assign(4 * n, -1);
  g.comp.assign(4 * n, -1);
  std::map<int, std::vector<int>> slots;
  for (int k = 0; k < n; ++k) {
    const auto& c = d.crossings()[k];
    g.sign.push_back(c.sign);
    for (int p = 0; p < 4; ++p) {
      slots[c.arcs[p]].push_back(4 * k + p);
      g.comp[4 * k + p] = d.component_of_arc(c.arcs[p]);
    }
  }
  for (const auto& [label, ss] : slots) {
    g.mate[ss[0]] = ss[1];
    g.mate[ss[1]] = ss[0];
  }
  for (int i = 0; i < d.free_loops(); ++i) g.loop_comps.push_back(static_cast<int>(d.num_crossing_components()) + i);
  return g;
}

LinkDiagram diagram_from_graph(const SlotGraph& g) {
  const int n = g.crossings();
  std::set<int> crossing_comps(g.comp.begin(), g.comp.end());
  std::vector<int> label(4 * n, 0);
  int next_label = 1;
  for (int c : crossing_comps) {
    int start = -1;
    for (int s = 0; s < 4 * n; ++s) {
      if (g.comp[s] == c && !is_in(g, s)) {
        start = s;
        break;
      }
    }
    int out = start;
    do {
      int head = g.mate[out];
      label[out] = label[head] = next_label++;
      out = opposite(head);
    } while (out != start);
  }
  std::vector<Crossing> crossings(n);
  for (int k = 0; k < n; ++k) {
    crossings[k].sign = g.sign[k];
    for (int p = 0; p < 4; ++p) crossings[k].arcs[p] = label[4 * k + p];
  }
  return LinkDiagram(std::move(crossings), static_cast<int>(g.loop_comps.size()));
}

// Removes the marked crossings. Strands for which keep_strand(k, parity) holds
// are smoothed through (parity 0 = under strand, 1 = over strand); the others
// are deleted together with their component.
SlotGraph reconnect(const SlotGraph& g, const std::vector<char>& removed,
                    const std::function<bool(int, int)>& keep_strand,
                    const std::function<bool(int)>& keep_loop_comp) {
  const int n = g.crossings();
  std::vector<int> index(n, -1);
  int kept = 0;
  for (int k = 0; k < n; ++k) {
    if (!removed[k]) index[k] = kept++;
  }
  SlotGraph out;
  out.mate.assign(4 * kept, -1);
  out.comp.assign(4 * kept, -1);
  out.sign.resize(kept);
  std::vector<std::array<char, 2>> visited(n, {0, 0});

  for (int k = 0; k < n; ++k) {
    if (removed[k]) continue;
    out.sign[index[k]] = g.sign[k];
    for (int p = 0; p < 4; ++p) {
      int s = 4 * k + p;
      int t = g.mate[s];
      while (removed[crossing_of(t)]) {
        visited[crossing_of(t)][pos_of(t) % 2] = 1;
        t = g.mate[opposite(t)];
      }
      out.mate[4 * index[k] + p] = 4 * index[crossing_of(t)] + pos_of(t);
      out.comp[4 * index[k] + p] = g.comp[s];
    }
  }
  for (int c : g.loop_comps) {
    if (keep_loop_comp(c)) out.loop_comps.push_back(c);
  }
  // Kept strands that only run through removed crossings close up into free loops.
  for (int k = 0; k < n; ++k) {
    if (!removed[k]) continue;
    for (int parity = 0; parity < 2; ++parity) {
      if (visited[k][parity] || !keep_strand(k, parity)) continue;
      int cur = 4 * k + parity;
      do {
        visited[crossing_of(cur)][pos_of(cur) % 2] = 1;
        cur = g.mate[opposite(cur)];
        if (!removed[crossing_of(cur)]) throw ConsistencyError("free-loop trace reached a kept crossing");
      } while (!(crossing_of(cur) == k && pos_of(cur) % 2 == parity));
      out.loop_comps.push_back(g.comp[4 * k + parity]);
    }
  }
  return out;
}

std::vector<std::vector<int>> face_orbits(const SlotGraph& g) {
  std::vector<std::vector<int>> orbits;
  std::vector<char> seen(g.mate.size(), 0);
  for (int s = 0; s < static_cast<int>(g.mate.size()); ++s) {
    if (seen[s]) continue;
    std::vector<int> orbit;
    int cur = s;
    do {
      seen[cur] = 1;
      orbit.push_back(cur);
      cur = ccw_next(g.mate[cur]);
    } while (cur != s);
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

struct TriangleFace {
  std::array<int, 3> crossing;  // X, Y, Z in walk order
  std::array<int, 3> depart;    // slot leaving crossing[i] towards crossing[i+1]
  std::array<int, 3> arrive;    // slot at crossing[i+1] reached from depart[i]
  bool cyclic = false;
};

std::vector<TriangleFace> triangle_faces(const SlotGraph& g) {
  std::vector<TriangleFace> out;
  for (const auto& orbit : face_orbits(g)) {
    if (orbit.size() != 3) continue;
    TriangleFace f;
    for (int i = 0; i < 3; ++i) {
      f.depart[i] = orbit[i];
      f.arrive[i] = g.mate[orbit[i]];
      f.crossing[i] = crossing_of(orbit[i]);
    }
    if (f.crossing[0] == f.crossing[1] || f.crossing[1] == f.crossing[2] || f.crossing[0] == f.crossing[2]) continue;
    // Strand i (the arc from crossing[i] to crossing[i+1]) is over at crossing[i+1]
    // iff its arrival slot is odd; cyclic iff all three strands agree.
    bool o0 = pos_of(f.arrive[0]) % 2, o1 = pos_of(f.arrive[1]) % 2, o2 = pos_of(f.arrive[2]) % 2;
    f.cyclic = (o0 == o1) && (o1 == o2);
    out.push_back(f);
  }
  return out;
}

std::vector<int> labels_of_slots(const LinkDiagram& d) {
  std::vector<int> labels;
  for (const auto& c : d.crossings()) labels.insert(labels.end(), c.arcs.begin(), c.arcs.end());
  return labels;
}

bool is_rotation(const std::array<int, 3>& a, const std::array<int, 3>& b, int* shift) {
  for (int r = 0; r < 3; ++r) {
    if (a[0] == b[r] && a[1] == b[(r + 1) % 3] && a[2] == b[(r + 2) % 3]) {
      if (shift) *shift = r;
      return true;
    }
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------
// LinkDiagram

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, int free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
  if (free_loops_ < 0) throw ValidationError("negative free-loop count");
  // label -> (crossing, strand-out label) for the crossing where the label enters
  std::map<int, int> in_count, out_count;
  for (std::size_t k = 0; k < crossings_.size(); ++k) {
    const auto& c = crossings_[k];
    if (c.sign != 1 && c.sign != -1) {
      throw ValidationError("crossing " + std::to_string(k + 1) + " has no sign");
    }
    in_count[c.under_in()]++;
    in_count[c.over_in()]++;
    out_count[c.under_out()]++;
    out_count[c.over_out()]++;
    arcs_[c.under_in()].next = c.under_out();
    arcs_[c.over_in()].next = c.over_out();
  }
  for (const auto& [label, cnt] : in_count) {
    if (cnt != 1 || out_count[label] != 1) {
      throw ValidationError("arc " + std::to_string(label) + " is not entered and left exactly once");
    }
  }
  for (const auto& [label, cnt] : out_count) {
    if (cnt != 1 || in_count[label] != 1) {
      throw ValidationError("arc " + std::to_string(label) + " is not entered and left exactly once");
    }
  }
  for (auto& [label, info] : arcs_) {
    if (info.component >= 0) continue;
    int comp = static_cast<int>(components_.size());
    components_.emplace_back();
    int cur = label;
    do {
      arcs_[cur].component = comp;
      components_.back().push_back(cur);
      cur = arcs_[cur].next;
    } while (cur != label);
  }
  if (num_components() == 0) throw ValidationError("a diagram needs at least one component");
}

LinkDiagram LinkDiagram::trivial(int components) { return LinkDiagram({}, components); }

int LinkDiagram::component_of_arc(int label) const {
  auto it = arcs_.find(label);
  if (it == arcs_.end()) throw LookupError("unknown arc " + std::to_string(label));
  return it->second.component;
}

int LinkDiagram::next_arc(int label) const {
  auto it = arcs_.find(label);
  if (it == arcs_.end()) throw LookupError("unknown arc " + std::to_string(label));
  return it->second.next;
}

namespace {

// Orientation of the over-strand implied by label succession within a
// component whose sorted labels are `sorted`; nullopt when ambiguous.
std::optional<int> inferred_sign(const std::vector<int>& sorted, int b, int d) {
  if (sorted.size() < 3) return std::nullopt;
  auto succ = [&](int x) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
    ++it;
    return it == sorted.end() ? sorted.front() : *it;
  };
  if (succ(d) == b) return 1;
  if (succ(b) == d) return -1;
  return std::nullopt;
}

}  // namespace

std::string LinkDiagram::to_pd() const {
  std::ostringstream out;
  bool first = true;
  if (free_loops_ > 0) {
    out << "O*" << free_loops_;
    first = false;
  }
  for (const auto& c : crossings_) {
    if (!first) out << ",";
    first = false;
    std::vector<int> sorted = components_.at(component_of_arc(c.arcs[1]));
    std::sort(sorted.begin(), sorted.end());
    auto inferred = inferred_sign(sorted, c.arcs[1], c.arcs[3]);
    out << "X";
    if (!inferred || *inferred != c.sign) out << (c.sign > 0 ? "+" : "-");
    out << "(" << c.arcs[0] << "," << c.arcs[1] << "," << c.arcs[2] << "," << c.arcs[3] << ")";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct RawCrossing {
  std::array<int, 4> arcs{};
  int declared_sign = 0;
};

class PdParser {
 public:
  explicit PdParser(std::string_view text) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
    }
  }

  void run(std::vector<RawCrossing>& items, int& free_loops) {
    if (s_.empty()) return;
    if (peek() == 'O') {
      ++pos_;
      expect('*');
      free_loops = parse_int();
      if (pos_ < s_.size()) expect(',');
      if (pos_ == s_.size()) return;
    }
    while (true) {
      items.push_back(parse_item());
      if (pos_ == s_.size()) break;
      expect(',');
    }
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("PD code: " + what + " at offset " + std::to_string(pos_));
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  int parse_int() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_ || pos_ - start > 9) fail("expected a non-negative integer");
    return std::stoi(s_.substr(start, pos_ - start));
  }
  RawCrossing parse_item() {
    RawCrossing c;
    expect('X');
    if (peek() == '+' || peek() == '-') c.declared_sign = s_[pos_++] == '+' ? 1 : -1;
    expect('(');
    for (int i = 0; i < 4; ++i) {
      if (i > 0) expect(',');
      c.arcs[i] = parse_int();
    }
    expect(')');
    return c;
  }

  std::string s_;
  std::size_t pos_ = 0;
};

struct UnionFind {
  std::map<int, int> parent;
  int find(int x) {
    auto it = parent.find(x);
    if (it == parent.end()) {
      parent[x] = x;
      return x;
    }
    if (it->second == x) return x;
    int r = find(it->second);
    parent[x] = r;
    return r;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

LinkDiagram parse_pd(std::string_view text, int extra_free_loops) {
  std::vector<RawCrossing> items;
  int free_loops = 0;
  PdParser(text).run(items, free_loops);
  if (extra_free_loops < 0) throw ValidationError("negative free-loop count");
  free_loops += extra_free_loops;

  std::map<int, int> count;
  for (const auto& c : items) {
    for (int a : c.arcs) count[a]++;
  }
  for (const auto& [label, cnt] : count) {
    if (cnt != 2) {
      throw ValidationError("arc label " + std::to_string(label) + " appears " + std::to_string(cnt) +
                            " times (expected exactly 2)");
    }
  }

  UnionFind uf;
  for (const auto& c : items) {
    uf.unite(c.arcs[0], c.arcs[2]);
    uf.unite(c.arcs[1], c.arcs[3]);
  }
  std::map<int, std::vector<int>> classes;
  for (const auto& [label, cnt] : count) classes[uf.find(label)].push_back(label);
  for (auto& [root, labels] : classes) {
    std::sort(labels.begin(), labels.end());
    if (labels.size() < 2) throw ValidationError("component made of the single arc " + std::to_string(labels[0]));
  }

  std::vector<Crossing> crossings;
  for (std::size_t k = 0; k < items.size(); ++k) {
    const auto& raw = items[k];
    const auto& under = classes[uf.find(raw.arcs[0])];
    if (under.size() >= 3) {
      auto it = std::upper_bound(under.begin(), under.end(), raw.arcs[0]);
      int succ = it == under.end() ? under.front() : *it;
      if (succ != raw.arcs[2]) {
        throw ValidationError("crossing " + std::to_string(k + 1) + ": under-strand labels " +
                              std::to_string(raw.arcs[0]) + " -> " + std::to_string(raw.arcs[2]) +
                              " do not follow the component orientation");
      }
    }
    const auto& over = classes[uf.find(raw.arcs[1])];
    auto inferred = inferred_sign(over, raw.arcs[1], raw.arcs[3]);
    int sign = raw.declared_sign;
    if (inferred) {
      if (sign != 0 && sign != *inferred) {
        throw ValidationError("crossing " + std::to_string(k + 1) + ": declared sign disagrees with orientation");
      }
      sign = *inferred;
    } else if (over.size() >= 3) {
      throw ValidationError("crossing " + std::to_string(k + 1) + ": over-strand labels are not consecutive");
    } else if (sign == 0) {
      throw ValidationError("crossing " + std::to_string(k + 1) +
                            ": sign is ambiguous on a two-arc component; add an explicit + or -");
    }
    crossings.push_back(Crossing{raw.arcs, sign});
  }
  return LinkDiagram(std::move(crossings), free_loops);
}

// ---------------------------------------------------------------------------
// Linking numbers

LinkingMatrix LinkingMatrix::operator-() const {
  LinkingMatrix r(*this);
  for (auto& e : r.entries_) e = -e;
  return r;
}

std::string LinkingMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t j = 0; j < m_; ++j) {
      if (j) out << ' ';
      out << at(i, j);
    }
    out << '\n';
  }
  return out.str();
}

LinkingMatrix linking_matrix(const LinkDiagram& d) {
  const std::size_t m = d.num_components();
  LinkingMatrix twice(m);
  for (std::size_t k = 0; k < d.num_crossings(); ++k) {
    auto i = static_cast<std::size_t>(d.under_component(k));
    auto j = static_cast<std::size_t>(d.over_component(k));
    if (i == j) continue;
    twice.at(i, j) += d.crossings()[k].sign;
    twice.at(j, i) += d.crossings()[k].sign;
  }
  LinkingMatrix lk(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (twice.at(i, j) % 2 != 0) throw ConsistencyError("odd inter-component crossing sum");
      lk.at(i, j) = twice.at(i, j) / 2;
    }
  }
  return lk;
}

bool is_algebraically_split(const LinkDiagram& d) {
  auto lk = linking_matrix(d);
  for (std::size_t i = 0; i < lk.size(); ++i) {
    for (std::size_t j = 0; j < lk.size(); ++j) {
      if (lk.at(i, j) != 0) return false;
    }
  }
  return true;
}

bool is_proper(const LinkDiagram& d) {
  auto lk = linking_matrix(d);
  int total = 0;
  for (std::size_t i = 0; i < lk.size(); ++i) {
    for (std::size_t j = i + 1; j < lk.size(); ++j) total += lk.at(i, j);
  }
  return total % 2 == 0;
}

bool equivalent_up_to_order(const LinkingMatrix& a, const LinkingMatrix& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool same = true;
    for (std::size_t i = 0; i < a.size() && same; ++i) {
      for (std::size_t j = 0; j < a.size() && same; ++j) same = a.at(i, j) == b.at(perm[i], perm[j]);
    }
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// ---------------------------------------------------------------------------
// Rewrites

LinkDiagram canonical(const LinkDiagram& d) { return diagram_from_graph(graph_from_diagram(d)); }

LinkDiagram mirror(const LinkDiagram& d) {
  std::vector<Crossing> out;
  for (const auto& c : d.crossings()) {
    const auto& a = c.arcs;
    // The former over strand becomes the under strand; list from its incoming arc.
    if (c.sign > 0) {
      out.push_back(Crossing{{a[3], a[0], a[1], a[2]}, -1});
    } else {
      out.push_back(Crossing{{a[1], a[2], a[3], a[0]}, 1});
    }
  }
  return LinkDiagram(std::move(out), d.free_loops());
}

LinkDiagram extract_sublink(const LinkDiagram& d, std::span<const int> keep) {
  if (keep.empty()) throw ValidationError("sublink needs at least one component");
  std::vector<char> kept(d.num_components(), 0);
  for (int c : keep) {
    if (c < 0 || static_cast<std::size_t>(c) >= d.num_components()) {
      throw ValidationError("component index " + std::to_string(c) + " out of range");
    }
    kept[c] = 1;
  }
  SlotGraph g = graph_from_diagram(d);
  std::vector<char> removed(g.crossings(), 0);
  for (int k = 0; k < g.crossings(); ++k) removed[k] = !(kept[g.comp[4 * k]] && kept[g.comp[4 * k + 1]]);
  auto keep_strand = [&](int k, int parity) { return kept[g.comp[4 * k + parity]] != 0; };
  auto keep_loop = [&](int c) { return kept[c] != 0; };
  return diagram_from_graph(reconnect(g, removed, keep_strand, keep_loop));
}

LinkDiagram simplify(const LinkDiagram& d) {
  SlotGraph g = graph_from_diagram(d);
  auto all = [](int, int) { return true; };
  auto all_loops = [](int) { return true; };
  while (true) {
    std::vector<char> removed(g.crossings(), 0);
    bool found = false;
    // R1: an arc returning to its own crossing.
    for (int s = 0; s < 4 * g.crossings() && !found; ++s) {
      if (crossing_of(g.mate[s]) == crossing_of(s)) {
        removed[crossing_of(s)] = 1;
        found = true;
      }
    }
    // R2: a bigon face whose strands are over resp. under at both corners.
    if (!found) {
      for (const auto& orbit : face_orbits(g)) {
        if (orbit.size() != 2) continue;
        int x = crossing_of(orbit[0]);
        int arrive = g.mate[orbit[0]];
        int y = crossing_of(arrive);
        if (x == y) continue;
        if (pos_of(orbit[0]) % 2 != pos_of(arrive) % 2) continue;
        removed[x] = removed[y] = 1;
        found = true;
        break;
      }
    }
    if (!found) break;
    g = reconnect(g, removed, all, all_loops);
  }
  return diagram_from_graph(g);
}

LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b) {
  int offset = 0;
  for (const auto& c : a.crossings()) offset = std::max(offset, *std::max_element(c.arcs.begin(), c.arcs.end()));
  std::vector<Crossing> all = a.crossings();
  for (auto c : b.crossings()) {
    for (auto& x : c.arcs) x += offset;
    all.push_back(c);
  }
  return LinkDiagram(std::move(all), a.free_loops() + b.free_loops());
}

std::vector<DeltaSite> delta_sites(const LinkDiagram& d) {
  SlotGraph g = graph_from_diagram(d);
  auto labels = labels_of_slots(d);
  std::vector<DeltaSite> out;
  for (const auto& f : triangle_faces(g)) {
    if (!f.cyclic) continue;
    DeltaSite site;
    for (int i = 0; i < 3; ++i) {
      site.crossings[i] = f.crossing[i];
      site.triangle_arcs[i] = labels[f.depart[i]];
    }
    out.push_back(site);
  }
  return out;
}

DeltaSite find_delta_site(const LinkDiagram& d, std::array<int, 3> ids) {
  const int n = static_cast<int>(d.num_crossings());
  for (int id : ids) {
    if (id < 0 || id >= n) throw SiteError("site crossing " + std::to_string(id + 1) + " does not exist");
  }
  if (ids[0] == ids[1] || ids[1] == ids[2] || ids[0] == ids[2]) throw SiteError("site crossings must be distinct");
  SlotGraph g = graph_from_diagram(d);
  auto labels = labels_of_slots(d);
  bool braid_like = false;
  for (const auto& f : triangle_faces(g)) {
    int r = 0;
    if (!is_rotation(ids, f.crossing, &r)) continue;
    if (!f.cyclic) {
      braid_like = true;
      continue;
    }
    DeltaSite site;
    for (int i = 0; i < 3; ++i) {
      site.crossings[i] = f.crossing[(r + i) % 3];
      site.triangle_arcs[i] = labels[f.depart[(r + i) % 3]];
    }
    return site;
  }
  std::ostringstream msg;
  msg << "crossings (" << ids[0] + 1 << "," << ids[1] + 1 << "," << ids[2] + 1 << ") ";
  msg << (braid_like ? "bound a braid-like triangle, not a Delta template"
                     : "do not bound a triangular face in this order");
  throw SiteError(msg.str());
}

LinkDiagram apply_delta_move(const LinkDiagram& d, const DeltaSite& site) {
  SlotGraph g = graph_from_diagram(d);
  auto labels = labels_of_slots(d);
  std::optional<TriangleFace> face;
  for (const auto& f : triangle_faces(g)) {
    int r = 0;
    if (!f.cyclic || !is_rotation(site.crossings, f.crossing, &r)) continue;
    if (labels[f.depart[r]] != site.triangle_arcs[0]) continue;
    face = f;
    break;
  }
  if (!face) throw SiteError("site does not match a Delta template in this diagram");

  // Strand i runs along the triangle arc from crossing[i] to crossing[i+1].
  struct Strand {
    int first, second;     // crossings in orientation order
    int ext_in, ext_out;   // old outer slots
    int role_first, role_second;  // 0 under, 1 over
    int comp;
  };
  std::array<Strand, 3> strands;
  for (int i = 0; i < 3; ++i) {
    int p = face->depart[i], q = face->arrive[i];
    Strand s;
    s.comp = g.comp[p];
    if (is_in(g, opposite(p))) {
      s.first = crossing_of(p);
      s.second = crossing_of(q);
      s.ext_in = opposite(p);
      s.ext_out = opposite(q);
      s.role_first = pos_of(p) % 2;
      s.role_second = pos_of(q) % 2;
    } else {
      s.first = crossing_of(q);
      s.second = crossing_of(p);
      s.ext_in = opposite(q);
      s.ext_out = opposite(p);
      s.role_first = pos_of(q) % 2;
      s.role_second = pos_of(p) % 2;
    }
    strands[i] = s;
  }
  auto new_pos = [&](int crossing, int role, bool incoming) {
    if (role == 0) return incoming ? 0 : 2;
    bool positive = g.sign[crossing] > 0;
    return incoming == positive ? 3 : 1;
  };

  SlotGraph out = g;
  std::map<int, int> ext_map;  // old outer slot -> new slot
  for (const auto& s : strands) {
    // Reversed order: the strand now meets `second` before `first`.
    int in_at_second = 4 * s.second + new_pos(s.second, s.role_second, true);
    int out_at_second = 4 * s.second + new_pos(s.second, s.role_second, false);
    int in_at_first = 4 * s.first + new_pos(s.first, s.role_first, true);
    int out_at_first = 4 * s.first + new_pos(s.first, s.role_first, false);
    ext_map[s.ext_in] = in_at_second;
    ext_map[s.ext_out] = out_at_first;
    out.mate[out_at_second] = in_at_first;
    out.mate[in_at_first] = out_at_second;
    for (int slot : {in_at_second, out_at_second, in_at_first, out_at_first}) out.comp[slot] = s.comp;
  }
  for (const auto& [old_slot, new_slot] : ext_map) {
    int m = g.mate[old_slot];
    auto it = ext_map.find(m);
    if (it != ext_map.end()) {
      out.mate[new_slot] = it->second;
    } else {
      out.mate[new_slot] = m;
      out.mate[m] = new_slot;
    }
  }
  return diagram_from_graph(out);
}

std::vector<std::vector<int>> faces(const LinkDiagram& d) {
  SlotGraph g = graph_from_diagram(d);
  auto labels = labels_of_slots(d);
  std::vector<std::vector<int>> out;
  for (const auto& orbit : face_orbits(g)) {
    std::vector<int> f;
    for (int s : orbit) f.push_back(labels[s]);
    out.push_back(std::move(f));
  }
  return out;
}

int projection_pieces(const LinkDiagram& d) {
  SlotGraph g = graph_from_diagram(d);
  const int n = g.crossings();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int s = 0; s < 4 * n; ++s) parent[find(crossing_of(s))] = find(crossing_of(g.mate[s]));
  int pieces = 0;
  for (int k = 0; k < n; ++k) pieces += find(k) == k;
  return pieces;
}

}  // namespace deltalink
