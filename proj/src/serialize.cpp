#include "isoprod/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <sstream>

namespace isoprod {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

/// Splits on `sep` outside parentheses.
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Element parse_element(const std::string& token, const GroupTable& g) {
  std::string t = trim(token);
  if (t.empty()) throw UsageError("empty element in generating vector");
  if (std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); })) {
    auto v = std::stoull(t);
    if (v >= g.order()) throw UsageError("element index " + t + " is outside '" + g.spec() + "'");
    return static_cast<Element>(v);
  }
  if (auto e = g.find_label(t)) return *e;
  throw UsageError("unknown element '" + t + "' in '" + g.spec() + "'");
}

std::vector<Element> parse_list(const std::string& text, const GroupTable& g) {
  std::vector<Element> out;
  if (trim(text).empty()) return out;
  for (const auto& tok : split_top(text, ',')) out.push_back(parse_element(tok, g));
  return out;
}

std::vector<Element> json_elements(const Json& j, const GroupTable& g) {
  std::vector<Element> out;
  if (!j.is_array()) throw UsageError("expected an array of elements");
  for (const auto& x : j) {
    if (x.is_number_unsigned()) {
      auto v = x.get<std::uint64_t>();
      if (v >= g.order()) throw UsageError("element index " + std::to_string(v) + " is outside '" + g.spec() + "'");
      out.push_back(static_cast<Element>(v));
    } else if (x.is_string()) {
      out.push_back(parse_element(x.get<std::string>(), g));
    } else {
      throw UsageError("elements must be indices or labels");
    }
  }
  return out;
}

Json elements_json(const std::vector<Element>& xs) {
  Json a = Json::array();
  for (Element x : xs) a.push_back(x);
  return a;
}

std::string join(const std::vector<Element>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + std::to_string(xs[i]);
  return out;
}

}  // namespace

Json vector_to_json(const GeneratingVector& v) {
  Json j;
  j["group"] = v.group->spec();
  j["b"] = v.base_genus;
  j["alphas"] = elements_json(v.alphas);
  j["betas"] = elements_json(v.betas);
  j["gammas"] = elements_json(v.gammas);
  return j;
}

GeneratingVector vector_from_json(const Json& j, const GroupPtr& group) {
  if (!j.is_object()) throw UsageError("generating vector must be a JSON object");
  if (j.contains("group") && j["group"].get<std::string>() != group->spec())
    throw UsageError("vector is for group '" + j["group"].get<std::string>() + "', not '" + group->spec() + "'");
  GeneratingVector v{group, 0, {}, {}, {}};
  if (j.contains("alphas")) v.alphas = json_elements(j["alphas"], *group);
  if (j.contains("betas")) v.betas = json_elements(j["betas"], *group);
  if (j.contains("gammas")) v.gammas = json_elements(j["gammas"], *group);
  v.base_genus = j.contains("b") ? j["b"].get<std::uint32_t>() : static_cast<std::uint32_t>(v.alphas.size());
  return v;
}

GeneratingVector parse_vector(const std::string& text, const GroupPtr& group) {
  std::string t = trim(text);
  if (!t.empty() && t.front() == '{') {
    try {
      return vector_from_json(Json::parse(t), group);
    } catch (const Json::exception& e) {
      throw UsageError(std::string("invalid vector JSON: ") + e.what());
    }
  }
  auto parts = split_top(t, ';');
  if (parts.size() != 3) throw UsageError("vector '" + text + "' must have the form alphas;betas;gammas");
  GeneratingVector v{group, 0, parse_list(parts[0], *group), parse_list(parts[1], *group),
                     parse_list(parts[2], *group)};
  v.base_genus = static_cast<std::uint32_t>(v.alphas.size());
  return v;
}

Json invariants_to_json(const SurfaceInvariants& inv) {
  Json j;
  j["q"] = inv.q;
  j["pg"] = inv.pg;
  j["chi"] = inv.chi;
  j["K2"] = inv.K2;
  j["e"] = inv.euler;
  j["b1"] = inv.b1;
  j["b2"] = inv.b2;
  j["h2_summands"] = inv.h2_summands;
  return j;
}

Json surface_to_json(const UnmixedSurface& s) {
  Json j;
  j["group"] = s.group->spec();
  j["vC"] = vector_to_json(s.cover_C.vector);
  j["vD"] = vector_to_json(s.cover_D.vector);
  j["gC"] = s.cover_C.genus;
  j["gD"] = s.cover_D.genus;
  Json inv = invariants_to_json(s.invariants);
  for (auto& [k, v] : inv.items()) j[k] = v;
  return j;
}

Json record_to_json(const ClassificationRecord& rec) {
  Json j = surface_to_json(rec.surface);
  j["aut0"] = elements_json(rec.aut0.elements());
  if (rec.aut0.size() > 1) {
    j["conforms"] = rec.conformance.conforms;
    j["reason"] = rec.conformance.reason;
  } else {
    j["conforms"] = nullptr;
    j["reason"] = nullptr;
  }
  return j;
}

Json summary_to_json(const ClassifySummary& s) {
  Json j;
  j["surfaces"] = s.surfaces;
  j["nontrivial_aut0"] = s.nontrivial_aut0;
  j["conformance_failures"] = s.conformance_failures;
  j["errors"] = s.errors;
  j["groups"] = s.groups;
  j["covers"] = s.covers;
  j["pairs"] = s.pairs;
  j["non_free"] = s.non_free;
  j["dimension_sum_failures"] = s.dimension_sum_failures;
  j["aut0_not_subgroup"] = s.aut0_not_subgroup;
  j["aut0_swap_mismatches"] = s.aut0_swap_mismatches;
  j["q2_aut0_above_two"] = s.q2_aut0_above_two;
  j["genus2_base_nontrivial"] = s.genus2_base_nontrivial;
  j["max_aut0_order"] = s.max_aut0_order;
  j["error_messages"] = s.error_messages;
  return j;
}

Json chartab_to_json(const CharacterTable& t) {
  const GroupTable& g = t.group();
  Json j;
  j["group"] = g.spec();
  j["exponent"] = g.exponent();
  Json classes = Json::array();
  for (std::size_t c = 0; c < g.class_count(); ++c) classes.push_back(g.class_size(c));
  j["classes"] = classes;
  Json reps = Json::array();
  for (const auto& c : g.classes()) reps.push_back(g.label(c.representative));
  j["representatives"] = reps;
  Json chars = Json::array();
  for (const auto& chi : t.characters()) {
    Json c;
    c["degree"] = chi.degree;
    c["values"] = chi.values;
    chars.push_back(c);
  }
  j["characters"] = chars;
  return j;
}

std::string csv_header() {
  return "group,b,b_prime,r,s,vC_alphas,vC_betas,vC_gammas,vD_alphas,vD_betas,vD_gammas,gC,gD,q,pg,chi,K2,e,b1,b2,"
         "aut0,conforms,reason";
}

std::string record_to_csv(const ClassificationRecord& rec) {
  const auto& s = rec.surface;
  const auto& c = s.cover_C.vector;
  const auto& d = s.cover_D.vector;
  const auto& inv = s.invariants;
  std::ostringstream os;
  auto quoted = [](const std::string& x) { return "\"" + x + "\""; };
  os << quoted(s.group->spec()) << ',' << c.base_genus << ',' << d.base_genus << ',' << c.gammas.size() << ','
     << d.gammas.size() << ',' << quoted(join(c.alphas, " ")) << ',' << quoted(join(c.betas, " ")) << ','
     << quoted(join(c.gammas, " ")) << ',' << quoted(join(d.alphas, " ")) << ',' << quoted(join(d.betas, " ")) << ','
     << quoted(join(d.gammas, " ")) << ',' << s.cover_C.genus << ',' << s.cover_D.genus << ',' << inv.q << ','
     << inv.pg << ',' << inv.chi << ',' << inv.K2 << ',' << inv.euler << ',' << inv.b1 << ',' << inv.b2 << ','
     << quoted(join(rec.aut0.elements(), " ")) << ',';
  if (rec.aut0.size() > 1)
    os << (rec.conformance.conforms ? "true" : "false") << ',' << quoted(rec.conformance.reason);
  else
    os << ',';
  return os.str();
}

std::string record_to_text(const ClassificationRecord& rec) {
  const auto& s = rec.surface;
  const GroupTable& g = *s.group;
  auto labels = [&](const std::vector<Element>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + g.label(xs[i]);
    return out;
  };
  auto vec = [&](const GeneratingVector& v) {
    return "(" + labels(v.alphas) + " | " + labels(v.betas) + " ; " + labels(v.gammas) + ")";
  };
  const auto& inv = s.invariants;
  std::ostringstream os;
  os << std::left << std::setw(14) << g.spec() << " vC=" << vec(s.cover_C.vector) << " vD=" << vec(s.cover_D.vector)
     << "  g=(" << s.cover_C.genus << "," << s.cover_D.genus << ") q=" << inv.q << " pg=" << inv.pg
     << " chi=" << inv.chi << " K2=" << inv.K2 << " b2=" << inv.b2 << "  aut0={" << labels(rec.aut0.elements())
     << "}";
  if (rec.aut0.size() > 1) os << "  " << rec.conformance.reason;
  return os.str();
}

std::string summary_to_text(const ClassifySummary& s) {
  std::ostringstream os;
  os << "groups: " << s.groups << "\ncovers: " << s.covers << "\npairs: " << s.pairs << "\nnon-free pairs: " << s.non_free
     << "\nsurfaces: " << s.surfaces << "\nnontrivial aut0: " << s.nontrivial_aut0
     << "\nconformance failures: " << s.conformance_failures << "\nerrors: " << s.errors
     << "\ndimension sum failures: " << s.dimension_sum_failures << "\naut0 not a subgroup: " << s.aut0_not_subgroup
     << "\naut0 swap mismatches: " << s.aut0_swap_mismatches << "\nq=2 with |aut0|>2: " << s.q2_aut0_above_two
     << "\ngenus-2 base with nontrivial aut0: " << s.genus2_base_nontrivial
     << "\nmax |aut0|: " << s.max_aut0_order << '\n';
  for (const auto& m : s.error_messages) os << "  error: " << m << '\n';
  return os.str();
}

std::string chartab_to_text(const CharacterTable& t) {
  const GroupTable& g = t.group();
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{"class"}, sizes{"size"};
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    head.push_back(g.label(g.classes()[c].representative));
    sizes.push_back(std::to_string(g.class_size(c)));
  }
  rows.push_back(head);
  rows.push_back(sizes);
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<std::string> row{"X." + std::to_string(i + 1)};
    for (std::size_t c = 0; c < g.class_count(); ++c) row.push_back(t.value(i, c).to_string());
    rows.push_back(row);
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  std::ostringstream os;
  os << g.spec() << "  order " << g.order() << "  exponent " << g.exponent() << "  classes " << g.class_count()
     << '\n';
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      os << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << std::right << rows[r][c];
    os << '\n';
    if (r == 1) os << '\n';
  }
  return os.str();
}

std::string chartab_to_csv(const CharacterTable& t) {
  const GroupTable& g = t.group();
  std::ostringstream os;
  os << "character,degree";
  for (std::size_t c = 0; c < g.class_count(); ++c) os << ",\"" << g.label(g.classes()[c].representative) << "\"";
  os << '\n';
  for (std::size_t i = 0; i < t.size(); ++i) {
    os << i << ',' << t[i].degree;
    for (std::size_t c = 0; c < g.class_count(); ++c) os << ",\"" << t.value(i, c).to_string() << "\"";
    os << '\n';
  }
  return os.str();
}

}  // namespace isoprod
