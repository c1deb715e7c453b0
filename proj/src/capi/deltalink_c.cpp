#include "deltalink/deltalink.h"

#include "core/alexander.hpp"
#include "core/bounds.hpp"
#include "core/catalog.hpp"
#include "core/errors.hpp"
#include "core/pathways.hpp"
#include "core/report.hpp"
#include "core/solid_torus.hpp"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

struct dl_diagram {
  deltalink::LinkDiagram diagram;
};

struct dl_catalog {
  deltalink::Catalog catalog;
};

struct dl_annular {
  deltalink::AnnularDiagram annular;
};

namespace {

thread_local std::string last_error;

dl_status fail(dl_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <typename F>
dl_status guarded(F&& f) {
  using namespace deltalink;
  try {
    last_error.clear();
    return f();
  } catch (const ParseError& e) {
    return fail(DL_ERR_PARSE, e.what());
  } catch (const ValidationError& e) {
    return fail(DL_ERR_VALIDATION, e.what());
  } catch (const SiteError& e) {
    return fail(DL_ERR_VALIDATION, e.what());
  } catch (const LookupError& e) {
    return fail(DL_ERR_NOT_FOUND, e.what());
  } catch (const ArithmeticError& e) {
    return fail(DL_ERR_ARITHMETIC, e.what());
  } catch (const ConsistencyError& e) {
    return fail(DL_ERR_VERIFICATION, e.what());
  } catch (const std::exception& e) {
    return fail(DL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(DL_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define DL_REQUIRE(cond)                                                     \
  do {                                                                       \
    if (!(cond)) return fail(DL_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

std::string invariants_text(const deltalink::LinkDiagram& d) {
  using namespace deltalink;
  std::ostringstream out;
  auto m = d.num_components();
  out << "components: " << m << "\ncrossings: " << d.num_crossings() << "\n";
  if (m >= 2) {
    auto lk = linking_matrix(d);
    out << "linking matrix:\n";
    for (std::size_t i = 0; i < m; ++i) {
      out << " ";
      for (std::size_t j = 0; j < m; ++j) out << " " << lk.at(i, j);
      out << "\n";
    }
  }
  out << "alexander: " << alexander_polynomial(d).to_string() << "\n";
  if (m == 1) out << "arf: " << arf_knot(d) << "\n";
  if (m == 2 && is_algebraically_split(d)) out << "mu(1122): " << milnor_1122(d) << "\n";
  out << "fingerprint: " << fingerprint(d).to_string() << "\n";
  return out.str();
}

std::string bounds_text(const deltalink::TableRow& row) {
  using namespace deltalink;
  std::ostringstream out;
  const auto& b = row.bounds;
  out << "link: " << row.name_t << " (" << row.name_r << ")\n";
  for (const auto& s : b.lower_bounds) out << "lower bound " << source_tag(s.source) << ": " << s.value << "\n";
  if (row.beta1) out << "beta1: " << *row.beta1 << "\n";
  out << "parity (arf): " << b.parity << "\n"
      << "lower bound: " << b.lb_final << "\n";
  if (b.ub) {
    out << "upper bound: " << *b.ub << " via " << b.certificate << "\n";
  } else {
    out << "upper bound: none\n";
  }
  out << "u^Delta: " << b.status.to_string() << "\n";
  out << "methods:";
  for (const auto& m : b.methods) out << " " << m;
  out << "\n";
  return out.str();
}

}  // namespace

extern "C" {

const char* dl_last_error(void) { return last_error.c_str(); }

const char* dl_status_name(dl_status s) {
  switch (s) {
    case DL_OK: return "ok";
    case DL_ERR_PARSE: return "parse error";
    case DL_ERR_VALIDATION: return "validation error";
    case DL_ERR_INVALID_ARGUMENT: return "invalid argument";
    case DL_ERR_NOT_FOUND: return "not found";
    case DL_ERR_IO: return "i/o error";
    case DL_ERR_ARITHMETIC: return "arithmetic error";
    case DL_ERR_VERIFICATION: return "verification failed";
    case DL_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void dl_string_free(char* s) { std::free(s); }

dl_status dl_diagram_parse(const char* pd, dl_diagram** out) {
  DL_REQUIRE(pd && out);
  return guarded([&] {
    *out = new dl_diagram{deltalink::parse_pd(pd)};
    return DL_OK;
  });
}

void dl_diagram_free(dl_diagram* d) { delete d; }

dl_status dl_diagram_components(const dl_diagram* d, size_t* out) {
  DL_REQUIRE(d && out);
  *out = d->diagram.num_components();
  return DL_OK;
}

dl_status dl_diagram_crossings(const dl_diagram* d, size_t* out) {
  DL_REQUIRE(d && out);
  *out = d->diagram.num_crossings();
  return DL_OK;
}

dl_status dl_diagram_pd(const dl_diagram* d, char** out) {
  DL_REQUIRE(d && out);
  return guarded([&] {
    *out = copy_string(d->diagram.to_pd());
    return DL_OK;
  });
}

dl_status dl_diagram_linking_number(const dl_diagram* d, size_t i, size_t j, int* out) {
  DL_REQUIRE(d && out);
  auto m = d->diagram.num_components();
  if (i >= m || j >= m) return fail(DL_ERR_INVALID_ARGUMENT, "component index out of range");
  return guarded([&] {
    *out = deltalink::linking_matrix(d->diagram).at(i, j);
    return DL_OK;
  });
}

dl_status dl_diagram_alexander(const dl_diagram* d, char** out) {
  DL_REQUIRE(d && out);
  return guarded([&] {
    *out = copy_string(deltalink::alexander_polynomial(d->diagram).to_string());
    return DL_OK;
  });
}

dl_status dl_diagram_arf_knot(const dl_diagram* d, int* out) {
  DL_REQUIRE(d && out);
  return guarded([&] {
    *out = deltalink::arf_knot(d->diagram);
    return DL_OK;
  });
}

dl_status dl_diagram_milnor_1122(const dl_diagram* d, long long* out) {
  DL_REQUIRE(d && out);
  return guarded([&] {
    *out = deltalink::milnor_1122(d->diagram);
    return DL_OK;
  });
}

dl_status dl_diagram_invariants_report(const dl_diagram* d, char** out) {
  DL_REQUIRE(d && out);
  return guarded([&] {
    *out = copy_string(invariants_text(d->diagram));
    return DL_OK;
  });
}

dl_status dl_catalog_load(const char* path, dl_catalog** out) {
  DL_REQUIRE(out);
  return guarded([&] {
    std::filesystem::path p = path ? std::filesystem::path(path) : deltalink::Catalog::default_path();
    if (!std::filesystem::is_regular_file(p)) return fail(DL_ERR_IO, "cannot read catalog " + p.string());
    *out = new dl_catalog{deltalink::Catalog::load(p)};
    return DL_OK;
  });
}

void dl_catalog_free(dl_catalog* c) { delete c; }

dl_status dl_catalog_link_count(const dl_catalog* c, size_t* out) {
  DL_REQUIRE(c && out);
  *out = c->catalog.links().size();
  return DL_OK;
}

dl_status dl_catalog_link_name(const dl_catalog* c, size_t index, char** out) {
  DL_REQUIRE(c && out);
  if (index >= c->catalog.links().size()) return fail(DL_ERR_INVALID_ARGUMENT, "link index out of range");
  return guarded([&] {
    *out = copy_string(c->catalog.links()[index].name_t);
    return DL_OK;
  });
}

dl_status dl_resolve(const dl_catalog* c, const char* target, dl_diagram** out) {
  DL_REQUIRE(target && out);
  std::string t(target);
  if (t.find('(') != std::string::npos || t.starts_with("O*")) return dl_diagram_parse(target, out);
  DL_REQUIRE(c);
  return guarded([&] {
    *out = new dl_diagram{deltalink::resolve_node(t, c->catalog).diagram};
    return DL_OK;
  });
}

dl_status dl_bounds_report(const dl_catalog* c, const char* link, char** out) {
  DL_REQUIRE(c && link && out);
  return guarded([&] {
    const auto* rec = c->catalog.find_link(link);
    if (!rec) return fail(DL_ERR_NOT_FOUND, std::string("no link named ") + link + " in the catalog");
    deltalink::PathwayGraph graph;
    deltalink::verify_bundled_certificates(c->catalog, &graph);
    *out = copy_string(bounds_text(deltalink::table_row(c->catalog, *rec, graph)));
    return DL_OK;
  });
}

dl_status dl_table_report(const dl_catalog* c, dl_format format, char** out, char** diff, int* clean) {
  DL_REQUIRE(c && out && clean);
  if (format != DL_FORMAT_MARKDOWN && format != DL_FORMAT_CSV) return fail(DL_ERR_INVALID_ARGUMENT, "unknown format");
  return guarded([&] {
    auto table = deltalink::build_table(c->catalog);
    std::string text = format == DL_FORMAT_CSV ? deltalink::render_csv(table) : deltalink::render_markdown(table);
    *out = copy_string(text);
    if (diff) *diff = copy_string(deltalink::render_diffs(table));
    *clean = table.clean() ? 1 : 0;
    return DL_OK;
  });
}

dl_status dl_verify_certificates(const dl_catalog* c, const char* path, char level, char** report, int* passed) {
  DL_REQUIRE(c && path && report && passed);
  if (level != 'a' && level != 'b') return fail(DL_ERR_INVALID_ARGUMENT, "level must be 'a' or 'b'");
  return guarded([&] {
    if (!std::filesystem::is_regular_file(path)) return fail(DL_ERR_IO, std::string("cannot read ") + path);
    auto certs = deltalink::load_certificates(path, c->catalog);
    if (certs.empty()) throw deltalink::ParseError(std::string(path) + ": no pathway");
    std::ostringstream text;
    bool all = true;
    for (const auto& cert : certs) {
      auto r = level == 'b' ? deltalink::verify_level_b(cert) : deltalink::verify_level_a(cert);
      all = all && r.passed();
      text << (r.passed() ? "PASS" : "FAIL") << " level " << r.level << ": " << r.pathway << " (" << cert.num_steps()
           << (cert.num_steps() == 1 ? " move" : " moves") << ")\n";
      for (const auto& f : r.failures()) {
        text << "  step " << f.step << " " << f.check << (f.detail.empty() ? "" : ": " + f.detail) << "\n";
      }
    }
    *report = copy_string(text.str());
    *passed = all ? 1 : 0;
    return DL_OK;
  });
}

dl_status dl_annular_parse(const char* text, dl_annular** out) {
  DL_REQUIRE(text && out);
  return guarded([&] {
    *out = new dl_annular{deltalink::parse_annular(text)};
    return DL_OK;
  });
}

dl_status dl_annular_load(const char* path, dl_annular** out) {
  DL_REQUIRE(path && out);
  return guarded([&] {
    if (!std::filesystem::is_regular_file(path)) return fail(DL_ERR_IO, std::string("cannot read ") + path);
    *out = new dl_annular{deltalink::load_annular(path)};
    return DL_OK;
  });
}

void dl_annular_free(dl_annular* a) { delete a; }

dl_status dl_annular_beta1(const dl_annular* a, int* out) {
  DL_REQUIRE(a && out);
  return guarded([&] {
    *out = deltalink::beta1(a->annular);
    return DL_OK;
  });
}

int dl_obstructs_single_toroidal_delta(int beta1) { return deltalink::obstructs_single_toroidal_delta(beta1) ? 1 : 0; }

}  // extern "C"
