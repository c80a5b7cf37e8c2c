// ks7: Kreck-Stolz invariants and classification of S^3-bundles over CP^2.
//
// Exit codes: 0 success, 1 verification failure, 2 domain/parse error,
// 3 incomparable manifolds, 4 I/O error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "CLI11.hpp"
#include "ks7/ks7.hpp"

namespace {

using namespace ks7;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitDomain = 2;
constexpr int kExitIncomparable = 3;
constexpr int kExitIo = 4;

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv, Markdown };

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "md" || s == "markdown") return Format::Markdown;
  throw parse_error("unknown format '" + s + "' (expected json, csv or md)");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw io_error("cannot open '" + out_path + "' for writing");
  f << text;
  if (!f) throw io_error("write to '" + out_path + "' failed");
}

std::string invariants_command(const std::string& spec, Format format) {
  const BundleParams p = parse_manifold(spec);
  const KSInvariants inv = s_closed_form(p);
  if (format == Format::Csv) throw parse_error("csv output is only available for atlas tables");
  if (format == Format::Markdown) {
    std::ostringstream os;
    os << "| manifold | key | s1 | s2 | s3 |\n|---|---|---|---|---|\n";
    for (KeyKind kind : {KeyKind::Smooth, KeyKind::Top, KeyKind::PL}) {
      const auto key = comparison_key(inv, kind);
      os << "| " << to_spec(p) << " | " << key_kind_name(kind) << " | " << key.components[0] << " | "
         << key.components[1] << " | " << key.components[2] << " |\n";
    }
    return os.str();
  }
  json keys = json::array();
  for (KeyKind kind : {KeyKind::Smooth, KeyKind::Top, KeyKind::PL}) keys.push_back(to_json(comparison_key(inv, kind)));
  json out = {{"manifold", to_spec(p)},
              {"params", to_json(p)},
              {"spin", manifold_is_spin(p)},
              {"char_classes", {{"p1", integer_json(char_classes(p).p1_coeff)}, {"e", integer_json(char_classes(p).e_coeff)}}},
              {"invariants", to_json(inv)},
              {"keys", std::move(keys)}};
  return out.dump(2) + "\n";
}

std::string compare_command(const std::string& spec_a, const std::string& spec_b, const std::string& rel_name,
                            Format format) {
  const BundleParams a = parse_manifold(spec_a);
  const BundleParams b = parse_manifold(spec_b);
  const Relation rel = parse_relation(rel_name);
  if (format == Format::Csv) throw parse_error("csv output is only available for atlas tables");
  const auto conditions = congruence_conditions(a, b, rel);
  const bool verdict = equivalent(a, b, rel);
  std::optional<bool> by_invariants;
  if (!a.l.is_zero() && rel != Relation::Homotopy) by_invariants = equivalent_via_invariants(a, b, rel);

  if (format == Format::Markdown) {
    std::ostringstream os;
    os << "**" << to_spec(a) << " vs " << to_spec(b) << " (" << relation_name(rel) << "): "
       << (verdict ? "true" : "false") << "**\n\n| condition | held |\n|---|---|\n";
    for (const auto& c : conditions) os << "| " << c.text << " | " << (c.held ? "yes" : "no") << " |\n";
    return os.str();
  }
  json conds = json::array();
  for (const auto& c : conditions) conds.push_back({{"condition", c.text}, {"held", c.held}});
  json out = {{"a", to_spec(a)},
              {"b", to_spec(b)},
              {"relation", std::string(relation_name(rel))},
              {"equivalent", verdict},
              {"conditions", std::move(conds)},
              {"invariants_agree", by_invariants ? json(*by_invariants) : json(nullptr)}};
  return out.dump(2) + "\n";
}

std::string atlas_command(const std::string& l_text, const std::string& family_text,
                          const std::vector<std::string>& rel_names, Format format) {
  const Integer l = detail::parse_integer(l_text);
  const Family family = parse_family(family_text);
  if (l.is_zero()) throw unsupported_error("atlas needs l != 0 (for l=0 every class is a single k)");
  std::vector<Relation> rels;
  for (const auto& r : rel_names) rels.push_back(parse_relation(r));
  if (rels.empty()) rels.assign(std::begin(kAllRelations), std::end(kAllRelations));

  if (format == Format::Csv) {
    if (rels.size() != 1) throw parse_error("csv atlas holds one relation; pass a single --rel");
    return to_csv(enumerate_classes(l, family, rels.front()));
  }
  if (format == Format::Markdown) {
    std::string out = "## Atlas: " + std::string(family_symbol(family)) + "(k," + l.str() + ")\n\n";
    for (Relation r : rels) out += to_markdown(enumerate_classes(l, family, r));
    return out;
  }
  if (rels.size() == 1) return to_json(enumerate_classes(l, family, rels.front())).dump(2) + "\n";
  json tables = json::array();
  for (Relation r : rels) tables.push_back(to_json(enumerate_classes(l, family, r)));
  return tables.dump(2) + "\n";
}

VerifyConfig load_config(const std::string& path) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    pt::read_ini(path, tree);
  } catch (const pt::ini_parser_error& e) {
    throw parse_error(std::string("config: ") + e.what());
  }
  VerifyConfig cfg;
  const auto section = tree.get_child_optional("verify");
  const pt::ptree& v = section ? *section : tree;
  const auto range = [&](const char* key, IntRange& target) {
    if (auto s = v.get_optional<std::string>(key)) target = IntRange::parse(*s);
  };
  range("l_range", cfg.l_range);
  range("k_range", cfg.k_range);
  range("corollary_l_range", cfg.corollary_l_range);
  range("corollary_k_range", cfg.corollary_k_range);
  range("l_zero_k_range", cfg.l_zero_k_range);
  try {
    if (auto s = v.get_optional<std::string>("families")) {
      cfg.families.clear();
      std::stringstream ss(*s);
      std::string item;
      while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (!item.empty()) cfg.families.push_back(parse_family(item));
      }
    }
    cfg.axiom_samples = v.get<std::size_t>("axiom_samples", cfg.axiom_samples);
    cfg.dual_path_samples = v.get<std::size_t>("dual_path_samples", cfg.dual_path_samples);
    cfg.dual_path_k_max = v.get<std::int64_t>("dual_path_k_max", cfg.dual_path_k_max);
    cfg.dual_path_l_max = v.get<std::int64_t>("dual_path_l_max", cfg.dual_path_l_max);
    cfg.periodicity_max_l = v.get<std::int64_t>("periodicity_max_l", cfg.periodicity_max_l);
    cfg.seed = v.get<std::uint64_t>("seed", cfg.seed);
  } catch (const pt::ptree_bad_data& e) {
    throw parse_error(std::string("config: ") + e.what());
  }
  return cfg;
}

void validate(const VerifyConfig& cfg) {
  if (cfg.dual_path_k_max < 0 || cfg.dual_path_l_max < 1) throw parse_error("dual-path bounds must be k_max >= 0, l_max >= 1");
  if (cfg.periodicity_max_l < 0) throw parse_error("periodicity_max_l must be >= 0");
  const auto bounded = [](const IntRange& r, std::int64_t lim, const char* what) {
    if (!r.empty() && (r.lo < -lim || r.hi > lim)) {
      throw parse_error(std::string(what) + " must stay within +-" + std::to_string(lim));
    }
  };
  bounded(cfg.l_range, 1'000'000, "l range");
  bounded(cfg.k_range, 1'000'000'000, "k range");
}

#ifdef KS7_FAULT_INJECTION
InvariantFn corrupted_invariants(const std::string& which) {
  if (which.empty()) return default_invariants;
  if (which != "s1" && which != "s2" && which != "s3") throw parse_error("--corrupt expects s1, s2 or s3");
  return [which](const BundleParams& p) {
    KSInvariants inv = s_closed_form(p);
    // A k-dependent slip in one closed form, as a transcription typo would give.
    const Rational bump = p.family == Family::Xi ? Rational(1, 12 * p.l) : Rational(1, 24 * p.l);
    if (which == "s1") inv.s1 = qz_add(inv.s1, qz(Rational(p.k, 56 * p.l)));
    if (which == "s2") inv.s2 = qz_add(inv.s2, qz(bump * p.k));
    if (which == "s3") inv.s3 = qz_add(inv.s3, qz(Rational(p.k, 7 * p.l)));
    return inv;
  };
}
#endif

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kreck-Stolz invariants and classification of S^3-bundles over CP^2"};
  app.require_subcommand(1);

  std::string format_text = "json";
  std::string out_path;

  auto* inv_cmd = app.add_subcommand("invariants", "s1, s2, s3 and the SMOOTH/TOP/PL keys of M(k,l) or M'(k,l)");
  std::string inv_spec;
  inv_cmd->add_option("manifold", inv_spec, "M(k,l) or M'(k,l)")->required();
  inv_cmd->add_option("--format", format_text, "json or md");

  auto* cmp_cmd = app.add_subcommand("compare", "decide whether two manifolds are equivalent");
  std::string spec_a, spec_b, rel_text;
  cmp_cmd->add_option("a", spec_a, "first manifold")->required();
  cmp_cmd->add_option("b", spec_b, "second manifold")->required();
  cmp_cmd->add_option("--rel", rel_text, "diffeo, homeo, pl or homotopy")->required();
  cmp_cmd->add_option("--format", format_text, "json or md");

  auto* atlas_cmd = app.add_subcommand("atlas", "tabulate equivalence classes of k at fixed l");
  std::string atlas_l, atlas_family = "M";
  std::vector<std::string> atlas_rels;
  atlas_cmd->add_option("-l,--l", atlas_l, "Euler number l (nonzero)")->required();
  atlas_cmd->add_option("--family", atlas_family, "M or M'");
  atlas_cmd->add_option("--rel", atlas_rels, "relation(s); default all four");
  atlas_cmd->add_option("--format", format_text, "json, csv or md");
  atlas_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "exhaustive cross-verification over a parameter window");
  std::string config_path, l_range_text, k_range_text, verify_family;
  std::optional<std::size_t> samples;
  bool json_stdout = false;
  verify_cmd->add_option("--config", config_path, "INI file with a [verify] section");
  verify_cmd->add_option("--l-range", l_range_text, "l window a..b (0 runs the l=0 check)");
  verify_cmd->add_option("--k-range", k_range_text, "k window a..b");
  verify_cmd->add_option("--family", verify_family, "restrict to M or M'");
  verify_cmd->add_option("--samples", samples, "random triples per (l, family, relation) for the axiom check");
  verify_cmd->add_option("--out", out_path, "write the JSON report to this file");
  verify_cmd->add_flag("--json", json_stdout, "print the JSON report instead of the per-check summary");
#ifdef KS7_FAULT_INJECTION
  std::string corrupt;
  verify_cmd->add_option("--corrupt", corrupt, "test builds only: perturb s1, s2 or s3");
#endif

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitDomain;
  }

  try {
    const Format format = parse_format(format_text);
    if (inv_cmd->parsed()) {
      emit(invariants_command(inv_spec, format), "");
    } else if (cmp_cmd->parsed()) {
      emit(compare_command(spec_a, spec_b, rel_text, format), "");
    } else if (atlas_cmd->parsed()) {
      emit(atlas_command(atlas_l, atlas_family, atlas_rels, format), out_path);
    } else if (verify_cmd->parsed()) {
      VerifyConfig cfg = config_path.empty() ? VerifyConfig{} : load_config(config_path);
      if (!l_range_text.empty()) {
        cfg.l_range = IntRange::parse(l_range_text);
        cfg.corollary_l_range = cfg.l_range;
      }
      if (!k_range_text.empty()) {
        cfg.k_range = IntRange::parse(k_range_text);
        cfg.corollary_k_range = cfg.k_range;
        cfg.l_zero_k_range = cfg.k_range;
      }
      if (!verify_family.empty()) cfg.families = {parse_family(verify_family)};
      if (samples) cfg.axiom_samples = *samples;
      validate(cfg);

      InvariantFn invariants = default_invariants;
#ifdef KS7_FAULT_INJECTION
      invariants = corrupted_invariants(corrupt);
#endif
      const auto start = std::chrono::steady_clock::now();
      const VerifyReport report = run_all(cfg, invariants);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

      const std::string text = to_json(report).dump(2) + "\n";
      if (!out_path.empty()) emit(text, out_path);
      if (json_stdout) {
        std::cout << text;
      } else {
        for (const auto& c : report.checks()) {
          std::cout << (c.passed() ? "PASS " : "FAIL ") << c.name << "  tested=" << c.tested
                    << "  failures=" << c.failures.size() << "\n";
        }
        std::cout << (report.passed() ? "verify: passed" : "verify: FAILED") << " (" << report.total_tested()
                  << " cases, " << secs << " s)\n";
      }
      return report.passed() ? kExitOk : kExitVerifyFailed;
    }
  } catch (const incomparable_error& e) {
    std::cerr << "incomparable: " << e.what() << "\n";
    return kExitIncomparable;
  } catch (const io_error& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    // domain_error, unsupported_error, parse_error
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}
