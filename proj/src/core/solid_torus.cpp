#include "core/solid_torus.hpp"

#include "core/errors.hpp"

#include <fstream>
#include <optional>
#include <regex>
#include <sstream>

namespace deltalink {

AnnularDiagram::AnnularDiagram(LinkDiagram base, std::vector<Cut> cuts) : base_(std::move(base)), cuts_(std::move(cuts)) {
  if (base_.num_components() != 1) throw ValidationError("an annular diagram carries exactly one component");
  std::map<int, int> net;
  for (const auto& c : cuts_) {
    if (c.direction != 1 && c.direction != -1) throw ValidationError("cut direction must be +1 or -1");
    if (base_.num_crossings() == 0) throw ValidationError("cut on unknown arc " + std::to_string(c.arc));
    base_.component_of_arc(c.arc);  // throws LookupError for unknown arcs
    net[c.arc] += c.direction;
  }
  if (base_.num_crossings() == 0) return;
  int level = 0;
  for (int arc : base_.component_arcs(0)) {
    levels_[arc] = level;
    level += net[arc];
  }
  if (level != 0) throw ValidationError("winding number " + std::to_string(level) + " around the puncture; expected 0");
}

AnnularDiagram parse_annular(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<LinkDiagram> base;
  std::vector<Cut> cuts;
  static const std::regex cut_re(R"(\s*cut\s*\(\s*(\d+)\s*,\s*([+-]?\d+)\s*\)\s*)");
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!base) {
      base = parse_pd(line);
      continue;
    }
    std::smatch m;
    if (!std::regex_match(line, m, cut_re)) {
      throw ParseError("annular line " + std::to_string(lineno) + ": expected cut(arc,dir)");
    }
    cuts.push_back(Cut{std::stoi(m[1]), std::stoi(m[2])});
  }
  if (!base) throw ParseError("annular data has no PD line");
  try {
    return AnnularDiagram(std::move(*base), std::move(cuts));
  } catch (const LookupError& e) {
    throw ValidationError(std::string("annular data: ") + e.what());
  }
}

AnnularDiagram load_annular(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LookupError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_annular(buf.str());
}

int beta1(const AnnularDiagram& a) {
  int twice = 0;
  for (const auto& c : a.base().crossings()) {
    int diff = a.level(c.under_out()) - a.level(c.over_out());
    if (diff == 1 || diff == -1) twice += c.sign;
  }
  if (twice % 2 != 0) throw ValidationError("odd crossing sum between adjacent lifts");
  return twice / 2;
}

AnnularDiagram mirror(const AnnularDiagram& a) { return AnnularDiagram(mirror(a.base()), a.cuts()); }

AnnularDiagram flip_levels(const AnnularDiagram& a) {
  auto cuts = a.cuts();
  for (auto& c : cuts) c.direction = -c.direction;
  return AnnularDiagram(a.base(), std::move(cuts));
}

bool obstructs_single_toroidal_delta(int b) { return b >= 3 || b <= -3; }

}  // namespace deltalink
