// isoprod: character tables, branched covers and unmixed surfaces isogenous to a product.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <thread>

#include "isoprod/classify.hpp"
#include "isoprod/group_spec.hpp"
#include "isoprod/serialize.hpp"
#include "isoprod/table_cache.hpp"

using namespace isoprod;

namespace {

enum class Format { json, csv, table };

std::vector<std::uint32_t> parse_uint_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      auto v = std::stoul(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw UsageError("invalid number '" + tok + "' in '" + text + "'");
    }
  }
  return out;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> parse_base_genera(const std::string& text) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ';')) {
    auto v = parse_uint_list(tok);
    if (v.size() != 2) throw UsageError("base genera must look like '1,1;1,2', got '" + tok + "'");
    out.emplace_back(v[0], v[1]);
  }
  return out;
}

void apply_cache_dir(const std::string& dir) {
  if (!dir.empty()) set_table_cache_directory(std::filesystem::path(dir));
}

int cmd_chartab(const std::string& spec, Format format, const std::string& method) {
  auto group = build_group(spec);
  TablePtr table;
  if (method == "auto") {
    table = cached_character_table(group);
  } else {
    table = std::make_shared<const CharacterTable>(
        character_table(group, method == "abelian" ? TableMethod::abelian : TableMethod::dixon));
  }
  switch (format) {
    case Format::json: std::cout << chartab_to_json(*table).dump() << '\n'; break;
    case Format::csv: std::cout << chartab_to_csv(*table); break;
    case Format::table: std::cout << chartab_to_text(*table); break;
  }
  auto check = verify_table(*table);
  if (!check.ok()) {
    std::cerr << "table check failed: " << check.detail << '\n';
    return 3;
  }
  return 0;
}

struct CoversArgs {
  std::string group;
  std::uint32_t b = 1;
  std::string branch;
  std::uint32_t max_r = 4;
  std::uint32_t max_branch_order = 0;
  std::int64_t genus_cap = 65;
  std::int64_t min_genus = 2;
  bool dedup = false;
  std::uint64_t max_results = 0;
};

int cmd_covers(const CoversArgs& a, Format format) {
  auto group = build_group(a.group);
  EnumerationOptions opt;
  opt.base_genus = a.b;
  opt.max_r = a.max_r;
  if (!a.branch.empty()) opt.branch_orders = parse_uint_list(a.branch);
  opt.max_branch_order = a.max_branch_order;
  opt.genus_cap = a.genus_cap;
  opt.min_genus = a.min_genus;
  opt.dedup = a.dedup;
  opt.max_results = a.max_results;
  if (a.b > 2) throw UsageError("--b must be 0, 1 or 2");
  if (opt.genus_cap < 0) throw UsageError("--genus-cap must be non-negative");
  if (format == Format::csv) std::cout << "genus,b,alphas,betas,gammas\n";
  auto res = enumerate_vectors(group, opt, [&](const BranchedCover& c) {
    const auto& v = c.vector;
    if (format == Format::json) {
      Json j = vector_to_json(v);
      j["genus"] = c.genus;
      std::cout << j.dump() << '\n';
    } else {
      auto list = [](const std::vector<Element>& xs) {
        std::string s;
        for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
        return s;
      };
      if (format == Format::csv)
        std::cout << c.genus << ',' << v.base_genus << ",\"" << list(v.alphas) << "\",\"" << list(v.betas) << "\",\""
                  << list(v.gammas) << "\"\n";
      else
        std::cout << "genus " << c.genus << "  (" << list(v.alphas) << " | " << list(v.betas) << " ; "
                  << list(v.gammas) << ")\n";
    }
    return true;
  });
  const char* dedup = res.dedup == DedupMode::automorphisms ? "automorphisms"
                      : res.dedup == DedupMode::fingerprint ? "fingerprint"
                                                            : "none";
  if (format == Format::json) {
    Json s;
    s["count"] = res.count;
    s["truncated"] = res.truncated;
    s["dedup"] = dedup;
    std::cout << s.dump() << '\n';
  } else if (format == Format::table) {
    std::cout << "count: " << res.count << (res.truncated ? " (truncated)" : "") << "  dedup: " << dedup << '\n';
  } else {
    std::cerr << "count: " << res.count << (res.truncated ? " (truncated)" : "") << '\n';
  }
  return 0;
}

int cmd_surfaces(const std::string& spec, const std::string& vc, const std::string& vd, Format format) {
  auto group = build_group(spec);
  auto surface = build_surface(parse_vector(vc, group), parse_vector(vd, group));
  ClassificationRecord rec{surface, compute_aut0(surface), {}};
  if (rec.aut0.size() > 1) rec.conformance = check_conformance(rec);
  switch (format) {
    case Format::json: std::cout << record_to_json(rec).dump() << '\n'; break;
    case Format::csv: std::cout << csv_header() << '\n' << record_to_csv(rec) << '\n'; break;
    case Format::table: std::cout << record_to_text(rec) << '\n'; break;
  }
  return 0;
}

struct ClassifyArgs {
  std::string groups;
  SearchBounds bounds;
  std::string base_genera = "1,1";
  unsigned workers = 0;
  std::string records = "nontrivial";
  bool all_first_vectors = false;
};

int cmd_classify(ClassifyArgs a, Format format) {
  a.bounds.base_genera = parse_base_genera(a.base_genera);
  validate_bounds(a.bounds);
  std::vector<std::string> groups = a.groups.empty() ? default_groups(a.bounds) : split_group_list(a.groups);
  ClassifyOptions opt;
  opt.workers = a.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : a.workers;
  opt.reduce_by_automorphisms = !a.all_first_vectors;
  if (a.records == "none")
    opt.records = RecordFilter::none;
  else if (a.records == "all")
    opt.records = RecordFilter::all;
  else
    opt.records = RecordFilter::nontrivial;

  if (format == Format::csv) std::cout << csv_header() << '\n';
  auto summary = classify_all(a.bounds, groups, opt, [&](const ClassificationRecord& rec) {
    switch (format) {
      case Format::json: std::cout << record_to_json(rec).dump() << '\n'; break;
      case Format::csv: std::cout << record_to_csv(rec) << '\n'; break;
      case Format::table: std::cout << record_to_text(rec) << '\n'; break;
    }
  });
  switch (format) {
    case Format::json: std::cout << summary_to_json(summary).dump() << '\n'; break;
    case Format::csv: std::cerr << summary_to_json(summary).dump() << '\n'; break;
    case Format::table: std::cout << '\n' << summary_to_text(summary); break;
  }
  if (summary.errors > 0) return 3;
  if (summary.conformance_failures > 0 || !summary.invariants_hold()) return 2;
  return 0;
}

int cmd_verify_example(const std::string& family_name, std::uint32_t m, std::uint32_t n, std::uint32_t k,
                       std::uint32_t l, Format format) {
  ExplicitFamily family;
  if (family_name == "1" || family_name == "z2m_z2mn")
    family = ExplicitFamily::z2m_z2mn;
  else if (family_name == "2" || family_name == "z2_z2m_z2mn")
    family = ExplicitFamily::z2_z2m_z2mn;
  else
    throw UsageError("unknown family '" + family_name + "' (use 1, 2, z2m_z2mn or z2_z2m_z2mn)");
  auto ex = explicit_family_construct(family, m, n, k, l);
  const auto& s = ex.surface;
  const GroupTable& g = *s.group;
  ClassificationRecord rec{s, compute_aut0(s), {}};
  if (rec.aut0.size() > 1) rec.conformance = check_conformance(rec);
  const Element expected = g.mul(ex.gamma, ex.gamma_prime);
  const bool aut0_ok = rec.aut0 == ElementSet(g.order(), {GroupTable::identity(), expected});

  // closed forms in terms of delta, with delta = |G| / (4 m^2 n)
  const std::int64_t delta = static_cast<std::int64_t>(g.order()) / (4ll * m * m * n);
  const std::int64_t mn = static_cast<std::int64_t>(m) * m * n;
  const bool formulas_ok = s.cover_C.genus == 2 * delta * mn * k + 1 && s.cover_D.genus == 2 * delta * mn * l + 1 &&
                           s.invariants.q == 2 && s.invariants.pg == delta * mn * k * l + 1 &&
                           s.invariants.K2 == 8 * delta * mn * k * l;

  if (format == Format::json) {
    Json j = record_to_json(rec);
    j["family"] = family == ExplicitFamily::z2m_z2mn ? "z2m_z2mn" : "z2_z2m_z2mn";
    j["parameters"] = {m, n, k, l};
    j["gamma"] = ex.gamma;
    j["gamma_prime"] = ex.gamma_prime;
    j["delta"] = delta;
    j["formulas_ok"] = formulas_ok;
    j["aut0_ok"] = aut0_ok;
    std::cout << j.dump() << '\n';
  } else {
    const auto& inv = s.invariants;
    std::cout << "group " << g.spec() << " (order " << g.order() << ")\n"
              << "gamma = " << g.label(ex.gamma) << ", gamma' = " << g.label(ex.gamma_prime) << '\n'
              << "g(C) = " << s.cover_C.genus << ", g(D) = " << s.cover_D.genus << '\n'
              << "q = " << inv.q << ", p_g = " << inv.pg << ", chi = " << inv.chi << ", K^2 = " << inv.K2
              << ", e = " << inv.euler << ", b1 = " << inv.b1 << ", b2 = " << inv.b2 << '\n'
              << "aut0 = {";
    auto elems = rec.aut0.elements();
    for (std::size_t i = 0; i < elems.size(); ++i) std::cout << (i ? ", " : "") << g.label(elems[i]);
    std::cout << "}  (expected {" << g.label(0) << ", " << g.label(expected) << "}: " << (aut0_ok ? "ok" : "MISMATCH")
              << ")\n"
              << "closed forms with delta = " << delta << ": " << (formulas_ok ? "ok" : "MISMATCH") << '\n';
    if (family == ExplicitFamily::z2_z2m_z2mn)
      std::cout << "note: for this family Riemann-Hurwitz gives g(C) = 4m^2nk+1, so the genus constant delta is 2, "
                   "not 4\n";
  }
  return aut0_ok && formulas_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character tables, branched covers and unmixed surfaces isogenous to a product"};
  app.require_subcommand(1);
  std::string format_name = "table";
  std::string cache_dir;
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--cache-dir", cache_dir, "Directory for cached character tables (overrides ISOPROD_CACHE_DIR)");

  std::string chartab_group, chartab_method = "auto";
  auto* chartab = app.add_subcommand("chartab", "Print the character table of a group");
  chartab->add_option("group", chartab_group, "Group spec, e.g. sym:3 or ab:2,4")->required();
  chartab->add_option("--method", chartab_method, "Construction method")
      ->check(CLI::IsMember({"auto", "abelian", "dixon"}));

  CoversArgs covers_args;
  auto* covers = app.add_subcommand("covers", "Enumerate generating vectors of a group");
  covers->add_option("group", covers_args.group, "Group spec")->required();
  covers->add_option("--b", covers_args.b, "Base genus (0, 1 or 2)");
  covers->add_option("--branch", covers_args.branch, "Exact branch orders, e.g. 2,2");
  covers->add_option("--max-r", covers_args.max_r, "Largest number of branch points");
  covers->add_option("--max-branch-order", covers_args.max_branch_order, "Largest branch order (0 = any)");
  covers->add_option("--genus-cap", covers_args.genus_cap, "Largest covering genus");
  covers->add_option("--min-genus", covers_args.min_genus, "Smallest covering genus");
  covers->add_flag("--dedup", covers_args.dedup, "One vector per automorphism orbit");
  covers->add_option("--max-results", covers_args.max_results, "Stop after this many covers (0 = no limit)");

  std::string surf_group, surf_vc, surf_vd;
  auto* surfaces = app.add_subcommand("surfaces", "Build one surface from two generating vectors");
  surfaces->add_option("group", surf_group, "Group spec")->required();
  surfaces->add_option("--vc", surf_vc, "First vector: 'alphas;betas;gammas' or JSON")->required();
  surfaces->add_option("--vd", surf_vd, "Second vector: 'alphas;betas;gammas' or JSON")->required();

  ClassifyArgs cls;
  auto* classify = app.add_subcommand("classify", "Sweep groups and vector pairs, computing aut0");
  classify->add_option("--groups", cls.groups, "Comma separated group specs (default: built-ins within the order bound)");
  classify->add_option("--max-group-order", cls.bounds.max_group_order, "Largest built-in group order");
  classify->add_option("--max-r", cls.bounds.max_r, "Largest number of branch points on C");
  classify->add_option("--max-s", cls.bounds.max_s, "Largest number of branch points on D");
  classify->add_option("--max-branch-order", cls.bounds.max_branch_order, "Largest branch order (0 = any)");
  classify->add_option("--genus-cap", cls.bounds.genus_cap, "Largest covering genus");
  classify->add_option("--min-genus", cls.bounds.min_genus, "Smallest covering genus");
  classify->add_option("--base-genera", cls.base_genera, "Pairs (b,b'), e.g. '1,1;1,2;2,2'");
  classify->add_option("--workers", cls.workers, "Worker threads (0 = hardware concurrency)");
  classify->add_option("--records", cls.records, "Which records to print")
      ->check(CLI::IsMember({"nontrivial", "all", "none"}));
  classify->add_flag("--no-aut-reduction", cls.all_first_vectors,
                     "Pair every first vector, not one per automorphism orbit");

  std::string family;
  std::uint32_t m = 1, n = 1, k = 1, l = 1;
  auto* verify = app.add_subcommand("verify-example", "Build one member of the explicit two-parameter families");
  verify->add_option("family", family, "1 (Z2m+Z2mn) or 2 (Z2+Z2m+Z2mn)")->required();
  verify->add_option("m", m)->required()->check(CLI::PositiveNumber);
  verify->add_option("n", n)->required()->check(CLI::PositiveNumber);
  verify->add_option("k", k)->required()->check(CLI::PositiveNumber);
  verify->add_option("l", l)->required()->check(CLI::PositiveNumber);

  for (auto* sub : {chartab, covers, surfaces, classify, verify}) {
    sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("--cache-dir", cache_dir, "Directory for cached character tables");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  const Format format = format_name == "json" ? Format::json : format_name == "csv" ? Format::csv : Format::table;
  try {
    apply_cache_dir(cache_dir);
    if (*chartab) return cmd_chartab(chartab_group, format, chartab_method);
    if (*covers) return cmd_covers(covers_args, format);
    if (*surfaces) return cmd_surfaces(surf_group, surf_vc, surf_vd, format);
    if (*classify) return cmd_classify(cls, format);
    if (*verify) return cmd_verify_example(family, m, n, k, l, format);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 1;
}
