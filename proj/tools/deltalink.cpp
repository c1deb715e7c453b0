// Command-line front end over the C interface.

#include "deltalink/deltalink.h"

#include "CLI11.hpp"

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

namespace {

enum Exit { kSuccess = 0, kFailed = 1, kBadInput = 2, kInternal = 3 };

int exit_code(dl_status s) {
  switch (s) {
    case DL_OK: return kSuccess;
    case DL_ERR_VERIFICATION: return kFailed;
    case DL_ERR_INTERNAL:
    case DL_ERR_ARITHMETIC: return kInternal;
    default: return kBadInput;
  }
}

int report_error(dl_status s) {
  std::cerr << "deltalink: " << dl_status_name(s) << ": " << dl_last_error() << "\n";
  return exit_code(s);
}

std::string take(char* s) {
  std::string out = s ? s : "";
  dl_string_free(s);
  return out;
}

struct Options {
  std::string catalog;
  bool quiet = false;
  std::string target;
  std::string format = "md";
  std::string level = "a";
};

using CatalogPtr = std::unique_ptr<dl_catalog, decltype(&dl_catalog_free)>;

dl_status open_catalog(const Options& o, CatalogPtr& out) {
  dl_catalog* c = nullptr;
  dl_status s = dl_catalog_load(o.catalog.empty() ? nullptr : o.catalog.c_str(), &c);
  if (s == DL_OK) out.reset(c);
  return s;
}

void emit(const Options& o, const std::string& text) {
  if (!o.quiet) std::cout << text;
}

int run_invariants(const Options& o) {
  CatalogPtr catalog(nullptr, dl_catalog_free);
  bool literal = o.target.find('(') != std::string::npos || o.target.rfind("O*", 0) == 0;
  if (!literal) {
    if (dl_status s = open_catalog(o, catalog); s != DL_OK) return report_error(s);
  }
  dl_diagram* d = nullptr;
  if (dl_status s = dl_resolve(catalog.get(), o.target.c_str(), &d); s != DL_OK) return report_error(s);
  std::unique_ptr<dl_diagram, decltype(&dl_diagram_free)> guard(d, dl_diagram_free);
  char* text = nullptr;
  if (dl_status s = dl_diagram_invariants_report(d, &text); s != DL_OK) return report_error(s);
  emit(o, take(text));
  return kSuccess;
}

int run_bounds(const Options& o) {
  CatalogPtr catalog(nullptr, dl_catalog_free);
  if (dl_status s = open_catalog(o, catalog); s != DL_OK) return report_error(s);
  char* text = nullptr;
  if (dl_status s = dl_bounds_report(catalog.get(), o.target.c_str(), &text); s != DL_OK) return report_error(s);
  emit(o, take(text));
  return kSuccess;
}

int run_verify(const Options& o) {
  CatalogPtr catalog(nullptr, dl_catalog_free);
  if (dl_status s = open_catalog(o, catalog); s != DL_OK) return report_error(s);
  char* text = nullptr;
  int passed = 0;
  dl_status s = dl_verify_certificates(catalog.get(), o.target.c_str(), o.level.front(), &text, &passed);
  if (s != DL_OK) return report_error(s);
  emit(o, take(text));
  return passed ? kSuccess : kFailed;
}

int run_table(const Options& o) {
  CatalogPtr catalog(nullptr, dl_catalog_free);
  if (dl_status s = open_catalog(o, catalog); s != DL_OK) return report_error(s);
  char* text = nullptr;
  char* diff = nullptr;
  int clean = 0;
  dl_format format = o.format == "csv" ? DL_FORMAT_CSV : DL_FORMAT_MARKDOWN;
  if (dl_status s = dl_table_report(catalog.get(), format, &text, &diff, &clean); s != DL_OK) return report_error(s);
  emit(o, take(text));
  auto diffs = take(diff);
  if (!clean || !o.quiet) std::cerr << diffs;
  return clean ? kSuccess : kFailed;
}

int run_beta1(const Options& o) {
  dl_annular* a = nullptr;
  if (dl_status s = dl_annular_load(o.target.c_str(), &a); s != DL_OK) return report_error(s);
  std::unique_ptr<dl_annular, decltype(&dl_annular_free)> guard(a, dl_annular_free);
  int b = 0;
  if (dl_status s = dl_annular_beta1(a, &b); s != DL_OK) return report_error(s);
  emit(o, "beta1: " + std::to_string(b) + "\nobstructs a single toroidal Delta move: " +
              (dl_obstructs_single_toroidal_delta(b) ? "yes" : "no") + "\n");
  return kSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Delta-move unlinking numbers: invariants, bounds and pathway certificates"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  auto* catalog = app.add_option("--catalog", o.catalog, "Dataset file (default: $DELTA_LINK_CATALOG or the bundled one)");
  auto* quiet = app.add_flag("--quiet", o.quiet, "Suppress reports; rely on the exit status");

  auto* invariants = app.add_subcommand("invariants", "Linking matrix, Alexander polynomial, arf and mu(1122)");
  invariants->add_option("target", o.target, "PD code or catalog name")->required();
  auto* bounds = app.add_subcommand("bounds", "Lower and upper bounds for the Delta-unlinking number");
  bounds->add_option("link", o.target, "Catalog link name")->required();
  auto* verify = app.add_subcommand("verify", "Check a pathway certificate file");
  verify->add_option("file", o.target, "Certificate file")->required()->check(CLI::ExistingFile);
  verify->add_option("--level", o.level, "a: invariant checks, b: replay the moves")
      ->check(CLI::IsMember({"a", "b"}));
  auto* table = app.add_subcommand("table", "Regenerate the link table and diff it against the dataset");
  table->add_option("--format", o.format, "md or csv")->check(CLI::IsMember({"md", "csv"}));
  auto* beta = app.add_subcommand("beta1", "beta1 of a knot in the solid torus from an annular file");
  beta->add_option("file", o.target, "Annular diagram file")->required()->check(CLI::ExistingFile);

  for (auto* sub : {invariants, bounds, verify, table, beta}) {
    sub->add_option("--catalog", o.catalog, catalog->get_description());
    sub->add_flag("--quiet", o.quiet, quiet->get_description());
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kSuccess : kBadInput;
  }

  if (invariants->parsed()) return run_invariants(o);
  if (bounds->parsed()) return run_bounds(o);
  if (verify->parsed()) return run_verify(o);
  if (table->parsed()) return run_table(o);
  return run_beta1(o);
}
