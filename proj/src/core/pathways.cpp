#include "core/pathways.hpp"

#include "core/errors.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <regex>
#include <sstream>

namespace deltalink {

namespace {

std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_terms(std::string_view name) {
  std::vector<std::string> terms;
  std::size_t start = 0;
  while (true) {
    auto pos = name.find('#', start);
    auto term = trim(name.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (term.empty()) throw ParseError("empty term in node name '" + std::string(name) + "'");
    terms.emplace_back(term);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return terms;
}

const std::regex& trivial_re() {
  static const std::regex re(R"(0_1(\^(\d+))?)");
  return re;
}

bool trivial_term(const std::string& term) { return std::regex_match(term, trivial_re()); }

struct Term {
  LinkDiagram diagram;
  std::optional<int> arf;
  std::optional<IntInterval> g4;
  bool trivial = false;
};

Term resolve_term(const std::string& term, const Catalog& catalog) {
  std::smatch m;
  if (std::regex_match(term, m, trivial_re())) {
    int k = m[2].matched ? std::stoi(m[2].str()) : 1;
    if (k < 1) throw LookupError("trivial link needs at least one component: " + term);
    return {parse_pd("O*" + std::to_string(k)), 0, IntInterval{0, 0}, true};
  }
  if (const auto* rec = catalog.find_link(term)) return {rec->diagram, rec->arf, rec->g4, false};
  if (const auto* knot = catalog.find_knot(term)) {
    return {knot->diagram, knot->arf, std::nullopt, knot->diagram.num_crossings() == 0};
  }
  if (term.size() > 1 && term.front() == 'm') {
    Term t = resolve_term(term.substr(1), catalog);
    t.diagram = mirror(t.diagram);
    return t;
  }
  throw LookupError("unknown pathway node '" + term + "'");
}

Fingerprint node_fingerprint(const LinkDiagram& d, std::optional<int> arf) {
  bool link_arf = d.num_components() >= 2 && arf && is_proper(d);
  return fingerprint(d, link_arf ? arf : std::nullopt);
}

}  // namespace

Node make_node(std::string name, LinkDiagram diagram, std::optional<int> arf, std::optional<IntInterval> g4) {
  bool trivial = diagram.num_crossings() == 0;
  auto fp = node_fingerprint(diagram, arf);
  return Node{std::move(name), std::move(diagram), arf, g4, trivial, std::move(fp)};
}

Node resolve_node(std::string_view name, const Catalog& catalog) {
  std::optional<Term> acc;
  for (const auto& term : split_terms(name)) {
    Term t = resolve_term(term, catalog);
    if (!acc) {
      acc = std::move(t);
      continue;
    }
    acc->diagram = disjoint_union(acc->diagram, t.diagram);
    acc->trivial = acc->trivial && t.trivial;
    acc->arf = acc->arf && t.arf ? std::optional<int>((*acc->arf + *t.arf) % 2) : std::nullopt;
    acc->g4 = acc->g4 && t.g4 ? std::optional<IntInterval>({acc->g4->lo + t.g4->lo, acc->g4->hi + t.g4->hi})
                              : std::nullopt;
  }
  auto fp = node_fingerprint(acc->diagram, acc->arf);
  return Node{std::string(trim(name)), std::move(acc->diagram), acc->arf, acc->g4, acc->trivial, std::move(fp)};
}

bool PathwayCertificate::has_all_steps() const {
  return std::all_of(steps.begin(), steps.end(), [](const auto& s) { return s.has_value(); });
}

std::string PathwayCertificate::description() const {
  std::string out;
  for (const auto& n : nodes) out += (out.empty() ? "" : " -> ") + n.name;
  return out;
}

std::vector<PathwayCertificate> parse_certificates(std::string_view text, const Catalog& catalog) {
  static const std::regex step_re(
      R"(step\s+(\d+)\s*:\s*pd\s*=\s*([^;]*?)\s*;\s*site\s*=\s*\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
  std::vector<PathwayCertificate> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  auto fail = [&](const std::string& msg) { throw ParseError("line " + std::to_string(lineno) + ": " + msg); };
  while (std::getline(in, raw)) {
    ++lineno;
    auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.starts_with("pathway:")) {
      PathwayCertificate c;
      auto rest = line.substr(8);
      std::size_t start = 0;
      while (true) {
        auto pos = rest.find("->", start);
        auto name = trim(rest.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (name.empty()) fail("empty pathway node");
        c.nodes.push_back(resolve_node(name, catalog));
        if (pos == std::string_view::npos) break;
        start = pos + 2;
      }
      c.steps.resize(c.nodes.size() - 1);
      out.push_back(std::move(c));
      continue;
    }
    std::smatch m;
    std::string l(line);
    if (!std::regex_match(l, m, step_re)) fail("expected 'pathway:' or 'step i: pd = ... ; site = (a,b,c)'");
    if (out.empty()) fail("step before any pathway");
    auto& c = out.back();
    auto index = std::stoul(m[1].str());
    if (index < 1 || index > c.steps.size()) fail("step " + m[1].str() + " out of range");
    if (c.steps[index - 1]) fail("duplicate step " + m[1].str());
    std::string pd = m[2].str();
    std::optional<LinkDiagram> diagram;
    try {
      diagram = parse_pd(pd);
    } catch (const std::exception& e) {
      fail(std::string("step pd: ") + e.what());
    }
    std::array<int, 3> site{};
    for (int i = 0; i < 3; ++i) {
      auto id = std::stoul(m[3 + i].str());
      if (id < 1 || id > diagram->num_crossings()) fail("site crossing " + m[3 + i].str() + " out of range");
      site[i] = static_cast<int>(id) - 1;
    }
    c.steps[index - 1] = Step{std::move(pd), std::move(*diagram), site};
  }
  return out;
}

PathwayCertificate parse_certificate(std::string_view text, const Catalog& catalog) {
  auto all = parse_certificates(text, catalog);
  if (all.size() != 1) throw ParseError("expected exactly one pathway, found " + std::to_string(all.size()));
  return std::move(all.front());
}

std::vector<PathwayCertificate> load_certificates(const std::filesystem::path& path, const Catalog& catalog) {
  std::ifstream in(path);
  if (!in) throw LookupError("cannot open certificate " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_certificates(buf.str(), catalog);
  } catch (const ParseError& e) {
    throw ParseError(path.filename().string() + ": " + e.what());
  }
}

bool VerificationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const auto& c) { return c.outcome == CheckOutcome::Fail; });
}

std::vector<StepCheck> VerificationReport::failures() const {
  std::vector<StepCheck> out;
  std::copy_if(checks.begin(), checks.end(), std::back_inserter(out),
               [](const auto& c) { return c.outcome == CheckOutcome::Fail; });
  return out;
}

namespace {

CheckOutcome outcome(bool ok) { return ok ? CheckOutcome::Pass : CheckOutcome::Fail; }

void invariant_checks(std::size_t step, const LinkDiagram& a, const LinkDiagram& b, const Node& na, const Node& nb,
                      std::vector<StepCheck>& out) {
  bool same_m = a.num_components() == b.num_components();
  out.push_back({step, "components", outcome(same_m),
                 std::to_string(a.num_components()) + " vs " + std::to_string(b.num_components())});
  out.push_back({step, "linking", outcome(same_m && equivalent_up_to_order(linking_matrix(a), linking_matrix(b))), ""});

  if (!is_proper(a) || !is_proper(b)) {
    out.push_back({step, "arf", CheckOutcome::Skipped, "not a proper link"});
  } else if (!na.arf || !nb.arf) {
    out.push_back({step, "arf", CheckOutcome::Skipped, "arf unknown"});
  } else {
    out.push_back({step, "arf", outcome(*na.arf != *nb.arf),
                   std::to_string(*na.arf) + " -> " + std::to_string(*nb.arf)});
  }

  if (na.g4 && nb.g4 && na.g4->exact() && nb.g4->exact()) {
    out.push_back({step, "g4", outcome(std::abs(na.g4->lo - nb.g4->lo) <= 1),
                   std::to_string(na.g4->lo) + " -> " + std::to_string(nb.g4->lo)});
  } else {
    out.push_back({step, "g4", CheckOutcome::Skipped, "4-genus not exact"});
  }
}

}  // namespace

VerificationReport verify_level_a(const PathwayCertificate& c) {
  VerificationReport r{c.description(), 'a', {}};
  for (std::size_t i = 0; i + 1 < c.nodes.size(); ++i) {
    invariant_checks(i + 1, c.nodes[i].diagram, c.nodes[i + 1].diagram, c.nodes[i], c.nodes[i + 1], r.checks);
  }
  return r;
}

VerificationReport verify_level_b(const PathwayCertificate& c) {
  VerificationReport r = verify_level_a(c);
  r.level = 'b';
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    std::size_t step = i + 1;
    const Node& from = c.nodes[i];
    const Node& to = c.nodes[i + 1];
    if (!c.steps[i]) {
      r.checks.push_back({step, "site", CheckOutcome::Fail, "no diagram and site given"});
      continue;
    }
    const Step& s = *c.steps[i];
    auto source = fingerprint(s.diagram);
    r.checks.push_back({step, "source", outcome(source.matches(from.fingerprint)),
                        "diagram identified as " + source.to_string()});

    std::optional<DeltaSite> site;
    try {
      site = find_delta_site(s.diagram, s.site);
    } catch (const SiteError& e) {
      r.checks.push_back({step, "site", CheckOutcome::Fail, e.what()});
      continue;
    }
    r.checks.push_back({step, "site", CheckOutcome::Pass, ""});

    auto result = simplify(apply_delta_move(s.diagram, *site));
    auto target = fingerprint(result);
    r.checks.push_back({step, "target", outcome(target.matches(to.fingerprint)),
                        "move result identified as " + target.to_string()});
    invariant_checks(step, s.diagram, result, from, to, r.checks);
  }
  return r;
}

int upper_bound_from(const PathwayCertificate& c, const VerificationReport& report) {
  if (report.pathway != c.description() || !report.passed()) {
    throw ConsistencyError("certificate " + c.description() + " is not verified");
  }
  return static_cast<int>(c.num_steps());
}

std::string strip_mirror(std::string_view name) {
  std::string out;
  for (auto term : split_terms(name)) {
    if (term.size() > 1 && term.front() == 'm') term.erase(0, 1);
    out += (out.empty() ? "" : "#") + term;
  }
  return out;
}

void PathwayGraph::add(const PathwayCertificate& c) {
  for (std::size_t i = 0; i + 1 < c.nodes.size(); ++i) {
    auto& targets = edges_[strip_mirror(c.nodes[i].name)];
    auto to = strip_mirror(c.nodes[i + 1].name);
    if (std::find(targets.begin(), targets.end(), to) == targets.end()) targets.push_back(to);
  }
}

std::size_t PathwayGraph::num_edges() const {
  std::size_t n = 0;
  for (const auto& [from, to] : edges_) n += to.size();
  return n;
}

std::vector<std::string> PathwayGraph::route_to_trivial(std::string_view name) const {
  auto is_trivial = [](const std::string& key) {
    auto terms = split_terms(key);
    return std::all_of(terms.begin(), terms.end(), trivial_term);
  };
  std::string start = strip_mirror(name);
  std::map<std::string, std::string> parent{{start, ""}};
  std::deque<std::string> queue{start};
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    if (is_trivial(cur)) {
      std::vector<std::string> route;
      for (std::string k = cur; !k.empty(); k = parent.at(k)) route.push_back(k);
      std::reverse(route.begin(), route.end());
      return route;
    }
    auto it = edges_.find(cur);
    if (it == edges_.end()) continue;
    for (const auto& next : it->second) {
      if (parent.emplace(next, cur).second) queue.push_back(next);
    }
  }
  return {};
}

std::optional<int> PathwayGraph::distance_to_trivial(std::string_view name) const {
  auto route = route_to_trivial(name);
  if (route.empty()) return std::nullopt;
  return static_cast<int>(route.size()) - 1;
}

}  // namespace deltalink
