#include "core/catalog.hpp"

#include "core/alexander.hpp"
#include "core/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#ifndef DELTALINK_DEFAULT_CATALOG
#define DELTALINK_DEFAULT_CATALOG "data/catalog.txt"
#endif

namespace deltalink {

namespace {

std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

using Fields = std::map<std::string, std::string, std::less<>>;

struct Block {
  std::string kind;
  Fields fields;
  int line = 0;
};

std::vector<Block> split_blocks(std::string_view text) {
  std::vector<Block> blocks;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  bool open = false;
  while (std::getline(in, raw)) {
    ++lineno;
    auto line = trim(raw);
    if (line.empty()) {
      open = false;
      continue;
    }
    if (line.front() == '#') continue;
    if (line.front() == '[') {
      if (line != "[link]" && line != "[knot]") {
        throw ParseError("line " + std::to_string(lineno) + ": unknown block header " + std::string(line));
      }
      blocks.push_back(Block{std::string(line.substr(1, 4)), {}, lineno});
      open = true;
      continue;
    }
    if (!open) throw ParseError("line " + std::to_string(lineno) + ": key outside a block");
    auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("line " + std::to_string(lineno) + ": expected key = value");
    std::string key(trim(line.substr(0, eq)));
    std::string value(trim(line.substr(eq + 1)));
    if (!blocks.back().fields.emplace(key, value).second) {
      throw ParseError("line " + std::to_string(lineno) + ": duplicate key " + key);
    }
  }
  return blocks;
}

class BlockReader {
 public:
  BlockReader(const Block& b, std::set<std::string> allowed) : block_(b) {
    for (const auto& [k, v] : b.fields) {
      if (!allowed.count(k)) fail(k, "unknown key");
    }
    auto it = b.fields.find(b.kind == "link" ? "name_t" : "name");
    name_ = it != b.fields.end() ? it->second : "block at line " + std::to_string(b.line);
  }

  const std::string& name() const { return name_; }
  bool has(const std::string& key) const { return block_.fields.count(key) > 0; }

  const std::string& raw(const std::string& key) const {
    auto it = block_.fields.find(key);
    if (it == block_.fields.end()) fail(key, "missing");
    return it->second;
  }

  template <typename F>
  auto get(const std::string& key, F parse) const -> decltype(parse(std::string_view{})) {
    try {
      return parse(raw(key));
    } catch (const ParseError& e) {
      throw ParseError(where(key) + e.what());
    } catch (const ValidationError& e) {
      throw ValidationError(where(key) + e.what());
    }
  }

  [[noreturn]] void fail(const std::string& key, const std::string& what) const {
    throw ValidationError(where(key) + what);
  }

 private:
  std::string where(const std::string& key) const { return "record " + name_ + ", field " + key + ": "; }

  const Block& block_;
  std::string name_;
};

LinkDiagram diagram_field(const BlockReader& r) { return r.get("pd", [](std::string_view s) { return parse_pd(s); }); }

LinkRecord read_link(const Block& b, const std::filesystem::path& dir) {
  BlockReader r(b, {"name_t", "name_r", "pd", "components", "u", "arf", "g4", "mu1122_ref", "sum_udelta_ref",
                    "udelta_expected", "methods_expected", "toroidal_obstruction", "annular"});
  auto str = [](std::string_view s) { return std::string(s); };
  LinkRecord rec{r.get("name_t", str), r.get("name_r", str), r.get("pd", str), diagram_field(r),
                 r.get("components", parse_list), r.get("u", parse_int_value), r.get("arf", parse_int_value),
                 r.get("g4", parse_interval), std::nullopt, std::nullopt,
                 r.get("udelta_expected", parse_alternatives), r.get("methods_expected", parse_list),
                 r.get("toroidal_obstruction", parse_bool), std::nullopt};
  if (r.has("mu1122_ref")) rec.mu1122_ref = r.get("mu1122_ref", parse_int_value);
  if (r.has("sum_udelta_ref")) rec.sum_udelta_ref = r.get("sum_udelta_ref", parse_int_value);
  if (r.has("annular")) rec.annular = dir / r.raw("annular");

  if (rec.diagram.num_components() != rec.components.size()) {
    r.fail("components", "lists " + std::to_string(rec.components.size()) + " knots but the diagram has " +
                             std::to_string(rec.diagram.num_components()) + " components");
  }
  if (!is_algebraically_split(rec.diagram)) r.fail("pd", "nonzero linking number");
  if (rec.arf != 0 && rec.arf != 1) r.fail("arf", "must be 0 or 1");
  if (rec.u < 0) r.fail("u", "must be nonnegative");
  if (rec.g4.lo < 0 || rec.g4.lo > rec.g4.hi) r.fail("g4", "empty interval");
  for (int v : rec.udelta_expected) {
    if (v < 0) r.fail("udelta_expected", "must be nonnegative");
    if (v % 2 != rec.arf) r.fail("udelta_expected", std::to_string(v) + " has the wrong parity for arf " + std::to_string(rec.arf));
  }
  for (const auto& tag : rec.methods_expected) {
    if (std::find(method_tags().begin(), method_tags().end(), tag) == method_tags().end()) {
      r.fail("methods_expected", "unknown tag " + tag);
    }
  }
  if (rec.toroidal_obstruction && !rec.annular) r.fail("annular", "required when toroidal_obstruction = true");
  if (rec.annular && !std::filesystem::exists(*rec.annular)) r.fail("annular", "no file " + rec.annular->string());
  return rec;
}

KnotRecord read_knot(const Block& b) {
  BlockReader r(b, {"name", "pd", "udelta", "arf"});
  KnotRecord rec{r.raw("name"), r.raw("pd"), diagram_field(r), r.get("udelta", parse_int_value),
                 r.get("arf", parse_int_value)};
  if (rec.diagram.num_components() != 1) r.fail("pd", "a knot record needs exactly one component");
  if (rec.udelta < 0) r.fail("udelta", "must be nonnegative");
  if (rec.arf != arf_knot(rec.diagram)) {
    r.fail("arf", "recorded " + std::to_string(rec.arf) + " but the diagram gives " + std::to_string(arf_knot(rec.diagram)));
  }
  return rec;
}

}  // namespace

int parse_int_value(std::string_view text) {
  auto s = trim(text);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("expected an integer, got '" + std::string(s) + "'");
  }
  return v;
}

IntInterval parse_interval(std::string_view text) {
  auto s = trim(text);
  auto dots = s.find("..");
  if (dots == std::string_view::npos) {
    int v = parse_int_value(s);
    return {v, v};
  }
  return {parse_int_value(s.substr(0, dots)), parse_int_value(s.substr(dots + 2))};
}

std::vector<int> parse_alternatives(std::string_view text) {
  std::vector<int> out;
  auto s = trim(text);
  std::size_t start = 0;
  while (true) {
    auto bar = s.find('|', start);
    out.push_back(parse_int_value(s.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start)));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  if (!std::is_sorted(out.begin(), out.end()) || std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw ParseError("alternatives must be increasing");
  }
  return out;
}

std::vector<std::string> parse_list(std::string_view text) {
  std::vector<std::string> out;
  auto s = trim(text);
  if (s.empty()) throw ParseError("empty list");
  std::size_t start = 0;
  while (true) {
    auto comma = s.find(',', start);
    auto item = trim(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (item.empty()) throw ParseError("empty list item");
    out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

bool parse_bool(std::string_view text) {
  auto s = trim(text);
  if (s == "true") return true;
  if (s == "false") return false;
  throw ParseError("expected true or false, got '" + std::string(s) + "'");
}

std::string format_interval(const IntInterval& i) {
  return i.exact() ? std::to_string(i.lo) : std::to_string(i.lo) + ".." + std::to_string(i.hi);
}

std::string format_alternatives(const std::vector<int>& v, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

const std::vector<std::string>& method_tags() {
  static const std::vector<std::string> tags{"half_unlinking", "component_sum",     "component_sum_mu_bump",
                                             "four_genus",     "beta1_obstruction", "arf_parity"};
  return tags;
}

Catalog Catalog::parse(std::string_view text, const std::filesystem::path& directory) {
  Catalog c;
  c.directory_ = directory;
  for (const auto& b : split_blocks(text)) {
    if (b.kind == "link") {
      c.links_.push_back(read_link(b, directory));
    } else {
      c.knots_.push_back(read_knot(b));
    }
  }
  std::set<std::string> names;
  for (const auto& l : c.links_) {
    if (!names.insert(l.name_t).second || !names.insert(l.name_r).second) {
      throw ValidationError("record " + l.name_t + ": duplicate name");
    }
  }
  for (const auto& k : c.knots_) {
    if (!names.insert(k.name).second) throw ValidationError("record " + k.name + ": duplicate name");
  }
  for (const auto& l : c.links_) {
    for (const auto& k : l.components) {
      if (!c.find_knot(k)) throw ValidationError("record " + l.name_t + ", field components: unknown knot " + k);
    }
  }
  return c;
}

Catalog Catalog::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LookupError("cannot open catalog " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.parent_path());
}

std::filesystem::path Catalog::default_path() {
  if (const char* env = std::getenv("DELTA_LINK_CATALOG"); env && *env) return env;
  return DELTALINK_DEFAULT_CATALOG;
}

const LinkRecord* Catalog::find_link(std::string_view name) const {
  for (const auto& l : links_) {
    if (l.name_t == name || l.name_r == name) return &l;
  }
  return nullptr;
}

const KnotRecord* Catalog::find_knot(std::string_view name) const {
  for (const auto& k : knots_) {
    if (k.name == name) return &k;
  }
  return nullptr;
}

const KnotRecord& Catalog::knot(std::string_view name) const {
  if (auto* k = find_knot(name)) return *k;
  throw LookupError("unknown knot " + std::string(name));
}

std::vector<std::filesystem::path> Catalog::pathway_files() const {
  std::vector<std::filesystem::path> out;
  auto dir = directory_ / "pathways";
  if (!std::filesystem::is_directory(dir)) return out;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.path().extension() == ".path") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CheckLine> validate_against_computation(const Catalog& catalog) {
  std::vector<CheckLine> out;
  auto pass_or = [](bool ok, CheckSeverity bad) { return ok ? CheckSeverity::Pass : bad; };
  auto join = [](std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
    return s;
  };

  std::vector<std::pair<std::string, Fingerprint>> fingerprints;
  for (const auto& rec : catalog.links()) {
    const auto& d = rec.diagram;
    std::optional<long long> mu;
    if (d.num_components() == 2) {
      mu = milnor_1122(d);
      if (rec.mu1122_ref) {
        out.push_back({rec.name_t, "mu1122", std::to_string(*rec.mu1122_ref), std::to_string(*mu),
                       pass_or(*mu == *rec.mu1122_ref, CheckSeverity::Fail)});
      }
    }

    // Component knot types, identified by their Alexander polynomials.
    std::vector<std::string> computed, recorded = rec.components;
    int udelta_sum = 0, arf_sum = 0;
    for (const auto& k : rec.components) {
      udelta_sum += catalog.knot(k).udelta;
      arf_sum += catalog.knot(k).arf;
    }
    for (std::size_t i = 0; i < d.num_components(); ++i) {
      std::array<int, 1> keep{static_cast<int>(i)};
      auto poly = symmetric_canonical(alexander_poly_knot(simplify(extract_sublink(d, keep))));
      std::string match = "?" + poly.to_string();
      for (const auto& k : catalog.knots()) {
        if (symmetric_canonical(alexander_poly_knot(k.diagram)) == poly) {
          match = k.name;
          break;
        }
      }
      computed.push_back(match);
    }
    out.push_back({rec.name_t, "components", join(recorded), join(computed),
                   pass_or(join(recorded) == join(computed), CheckSeverity::Fail)});
    if (rec.sum_udelta_ref) {
      out.push_back({rec.name_t, "sum_udelta", std::to_string(*rec.sum_udelta_ref), std::to_string(udelta_sum),
                     pass_or(*rec.sum_udelta_ref == udelta_sum, CheckSeverity::Note)});
    }
    if (mu) {
      int rhs = static_cast<int>((arf_sum + *mu) % 2);
      out.push_back({rec.name_t, "arf_mod2", std::to_string(rec.arf), std::to_string(rhs),
                     pass_or(rec.arf == rhs, CheckSeverity::Fail)});
    }
    fingerprints.emplace_back(rec.name_t, fingerprint(d, rec.arf));
  }
  for (std::size_t i = 0; i < fingerprints.size(); ++i) {
    for (std::size_t j = i + 1; j < fingerprints.size(); ++j) {
      if (fingerprints[i].second.matches(fingerprints[j].second)) {
        out.push_back({fingerprints[i].first, "fingerprint", "unique", "collides with " + fingerprints[j].first,
                       CheckSeverity::Fail});
      }
    }
  }
  return out;
}

}  // namespace deltalink
