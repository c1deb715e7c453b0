#include "core/report.hpp"

#include "core/alexander.hpp"
#include "core/errors.hpp"
#include "core/solid_torus.hpp"

#include <algorithm>
#include <sstream>

namespace deltalink {

namespace {

std::string join(const std::vector<std::string>& v, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::vector<std::string> split_csv_line(std::string_view line, int lineno) {
  std::vector<std::string> cells(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cells.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cells.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.emplace_back();
    } else if (c != '\r') {
      cells.back() += c;
    }
  }
  if (quoted) throw ParseError("line " + std::to_string(lineno) + ": unterminated quote");
  return cells;
}

const std::vector<std::string>& csv_header() {
  static const std::vector<std::string> h{"name_t", "name_r", "components", "u",     "arf",     "g4",     "mu1122",
                                          "beta1",  "lower",  "upper",      "udelta", "methods", "pathway"};
  return h;
}

std::string optional_text(const auto& v) { return v ? std::to_string(*v) : std::string(); }

}  // namespace

std::vector<CertificateResult> verify_bundled_certificates(const Catalog& catalog, PathwayGraph* graph) {
  std::vector<CertificateResult> out;
  for (const auto& file : catalog.pathway_files()) {
    for (const auto& c : load_certificates(file, catalog)) {
      auto report = c.has_all_steps() && c.num_steps() > 0 ? verify_level_b(c) : verify_level_a(c);
      out.push_back({file.filename().string(), c.description(), report.level, report.passed(), report.failures()});
      if (graph && report.passed()) graph->add(c);
    }
  }
  return out;
}

TableRow table_row(const Catalog& catalog, const LinkRecord& record, const PathwayGraph& graph) {
  TableRow row;
  row.name_t = record.name_t;
  row.name_r = record.name_r;
  row.components = record.components;
  row.u = record.u;
  row.arf = record.arf;
  row.g4 = record.g4;
  auto in = bound_inputs(catalog, record);
  row.mu1122 = in.mu1122;
  if (record.toroidal_obstruction && record.annular) {
    row.beta1 = beta1(load_annular(*record.annular));
    row.beta1_obstruction = obstructs_single_toroidal_delta(*row.beta1);
  }
  row.route = graph.route_to_trivial(record.name_t);
  std::optional<int> ub;
  if (!row.route.empty()) ub = static_cast<int>(row.route.size()) - 1;
  row.bounds = combine(in, ub, row.beta1_obstruction, join(row.route, " -> "));
  return row;
}

Table build_table(const Catalog& catalog) {
  Table t;
  PathwayGraph graph;
  t.certificates = verify_bundled_certificates(catalog, &graph);
  for (const auto& c : t.certificates) {
    if (!c.passed) {
      std::string why = c.failures.empty() ? "" : c.failures.front().check + ": " + c.failures.front().detail;
      t.diffs.push_back({c.file, "certificate " + c.pathway, "verified", why});
    }
  }
  for (const auto& check : validate_against_computation(catalog)) {
    if (check.severity == CheckSeverity::Fail) {
      t.diffs.push_back({check.record, check.field, check.expected, check.computed});
    } else if (check.severity == CheckSeverity::Note) {
      t.notes.push_back(check);
    }
  }
  for (const auto& rec : catalog.links()) {
    TableRow row;
    try {
      row = table_row(catalog, rec, graph);
    } catch (const ConsistencyError& e) {
      t.diffs.push_back({rec.name_t, "udelta", format_alternatives(rec.udelta_expected), e.what()});
      continue;
    }
    if (row.bounds.status.values != rec.udelta_expected) {
      t.diffs.push_back({rec.name_t, "udelta", format_alternatives(rec.udelta_expected),
                         format_alternatives(row.bounds.status.values)});
    }
    auto in = bound_inputs(catalog, rec);
    int from_methods = lower_bound_from_methods(in, rec.methods_expected, row.beta1_obstruction);
    if (from_methods != row.bounds.lb_final) {
      t.diffs.push_back({rec.name_t, "methods", join(rec.methods_expected, ","),
                         join(row.bounds.methods, ",") + " (listed methods give " + std::to_string(from_methods) + ")"});
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string render_markdown(const Table& t) {
  std::ostringstream out;
  out << "| L | Rolfsen | components | u | arf | g4 | mu(1122) | lower bounds | u^Delta | methods | pathway |\n"
      << "|---|---|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : t.rows) {
    std::vector<std::string> lower;
    for (const auto& b : r.bounds.lower_bounds) lower.push_back(std::string(source_tag(b.source)) + "=" + std::to_string(b.value));
    out << "| " << r.name_t << " | " << r.name_r << " | " << join(r.components, ", ") << " | " << r.u << " | " << r.arf
        << " | " << format_interval(r.g4) << " | " << (r.mu1122 ? std::to_string(std::abs(*r.mu1122)) : "-") << " | "
        << join(lower, ", ") << " | " << r.bounds.status.to_string() << " | " << join(r.bounds.methods, ", ") << " | "
        << (r.route.empty() ? "-" : r.bounds.certificate) << " |\n";
  }
  return out.str();
}

std::string render_csv(const Table& t) {
  std::ostringstream out;
  out << join(csv_header(), ",") << "\n";
  for (const auto& r : t.rows) {
    std::optional<long long> mu;
    if (r.mu1122) mu = std::abs(*r.mu1122);
    std::vector<std::string> cells{r.name_t,
                                   r.name_r,
                                   join(r.components, ","),
                                   std::to_string(r.u),
                                   std::to_string(r.arf),
                                   format_interval(r.g4),
                                   optional_text(mu),
                                   optional_text(r.beta1),
                                   std::to_string(r.bounds.lb_final),
                                   optional_text(r.bounds.ub),
                                   format_alternatives(r.bounds.status.values),
                                   join(r.bounds.methods, ","),
                                   join(r.route, ",")};
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_cell(cells[i]);
    out << "\n";
  }
  return out.str();
}

std::string render_diffs(const Table& t) {
  std::ostringstream out;
  for (const auto& d : t.diffs) {
    out << "DIFF " << d.record << " " << d.field << ": expected " << d.expected << ", computed " << d.computed << "\n";
  }
  for (const auto& n : t.notes) {
    out << "NOTE " << n.record << " " << n.field << ": recorded " << n.expected << ", computed " << n.computed << "\n";
  }
  return out.str();
}

std::vector<CsvRow> parse_csv(std::string_view text) {
  std::vector<CsvRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto optional_int = [](const std::string& s) { return s.empty() ? std::nullopt : std::optional<int>(parse_int_value(s)); };
  auto list = [](const std::string& s) { return s.empty() ? std::vector<std::string>{} : parse_list(s); };
  while (std::getline(in, line)) {
    ++lineno;
    auto cells = split_csv_line(line, lineno);
    if (lineno == 1) {
      if (cells != csv_header()) throw ParseError("unexpected CSV header");
      continue;
    }
    if (line.empty()) continue;
    if (cells.size() != csv_header().size()) {
      throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(csv_header().size()) + " cells");
    }
    CsvRow r;
    r.name_t = cells[0];
    r.name_r = cells[1];
    r.components = list(cells[2]);
    r.u = parse_int_value(cells[3]);
    r.arf = parse_int_value(cells[4]);
    r.g4 = parse_interval(cells[5]);
    r.mu1122 = optional_int(cells[6]);
    r.beta1 = optional_int(cells[7]);
    r.lower = parse_int_value(cells[8]);
    r.upper = optional_int(cells[9]);
    r.udelta = parse_alternatives(cells[10]);
    r.methods = list(cells[11]);
    r.route = list(cells[12]);
    rows.push_back(std::move(r));
  }
  if (lineno == 0) throw ParseError("empty CSV");
  return rows;
}

}  // namespace deltalink
