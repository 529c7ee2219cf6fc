#include "mckay/cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mckay/errors.hpp"

namespace mckay::cli {

using nlohmann::json;

OutputFormat parse_output_format(std::string_view text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "plain") return OutputFormat::Plain;
  if (text == "factors") return OutputFormat::Factors;
  throw InvalidArgument("unknown output format '" + std::string(text) + "' (expected json, plain or factors)");
}

std::string to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Plain: return "plain";
    case OutputFormat::Factors: return "factors";
  }
  return "plain";
}

void RunConfig::validate() const {
  if (order < 0) throw InvalidArgument("order must be non-negative");
  if (kind == PartitionKind::Chamber && !zeta) throw InvalidArgument("--kind Chamber requires --zeta");
  if (kind != PartitionKind::Chamber && zeta)
    throw InvalidArgument("--zeta is only accepted with --kind Chamber");
  if (zeta && zeta->size() != static_cast<std::size_t>(label.affine_size()))
    throw InvalidArgument("--zeta needs " + std::to_string(label.affine_size()) + " entries for " +
                          label.to_string());
}

json RunConfig::canonical_json() const {
  json j;
  j["kind"] = to_string(kind);
  j["label"] = label.to_string();
  j["order"] = order;
  if (zeta) {
    json values = json::array();
    for (const auto& z : zeta->base()) values.push_back(z.get_str());
    j["zeta"] = std::move(values);
  } else {
    j["zeta"] = nullptr;
  }
  return j;
}

std::string RunConfig::cache_key() const {
  const std::string text = canonical_json().dump();
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 digest failed");
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return hex.str();
}

namespace {

std::vector<FactorSpec> gw_factors(const DynkinLabel& label, int order) {
  std::vector<FactorSpec> factors;
  for (const auto& beta : finite_positive_roots(label)) {
    for (int m = 1; m + beta.height() <= order; ++m) {
      std::vector<int> exponent{m};
      exponent.insert(exponent.end(), beta.begin(), beta.end());
      factors.push_back({std::move(exponent), 1, m});
    }
  }
  std::sort(factors.begin(), factors.end(), [](const FactorSpec& a, const FactorSpec& b) {
    return graded_less(RootVector(a.exponent), RootVector(b.exponent));
  });
  return factors;
}

std::vector<FactorSpec> sorted_union(std::vector<FactorSpec> a, const std::vector<FactorSpec>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end(), [](const FactorSpec& x, const FactorSpec& y) {
    return graded_less(RootVector(x.exponent), RootVector(y.exponent));
  });
  return a;
}

}  // namespace

PartitionResult compute_partition(const RunConfig& config) {
  config.validate();
  const auto& label = config.label;
  const int order = config.order;
  const long n = label.affine_size();
  switch (config.kind) {
    case PartitionKind::PTPlus:
      return {z_pt(label, Orientation::Plus, order), pt_factors(label, Orientation::Plus, order), 0};
    case PartitionKind::PTMinus:
      return {z_pt(label, Orientation::Minus, order), pt_factors(label, Orientation::Minus, order), 0};
    case PartitionKind::DTPlus:
      return {z_dt(label, Orientation::Plus, order), pt_factors(label, Orientation::Plus, order), n};
    case PartitionKind::DTMinus:
      return {z_dt(label, Orientation::Minus, order), pt_factors(label, Orientation::Minus, order), n};
    case PartitionKind::NCDT:
      return {z_ncdt(label, order),
              sorted_union(pt_factors(label, Orientation::Plus, order), pt_factors(label, Orientation::Minus, order)),
              n};
    case PartitionKind::GW:
      return {z_gw(label, order), gw_factors(label, order), 0};
    case PartitionKind::Chamber:
      return chamber_partition_function(label, *config.zeta, order);
  }
  throw InvalidArgument("unknown partition kind");
}

json partition_to_json(const RunConfig& config, const PartitionResult& computed) {
  json j = config.canonical_json();
  j["assumed_dt_pt"] = computed.assumed_dt_pt();
  j["macmahon_exponent"] = computed.macmahon_exponent;
  json factors = json::array();
  for (const auto& f : computed.factors)
    factors.push_back({{"exponent", f.exponent}, {"sign", f.sign}, {"power", f.power}});
  j["factors"] = std::move(factors);
  j["series"] = to_json(computed.series);
  return j;
}

PartitionResult partition_from_json(const json& j) {
  try {
    PartitionResult result{series_from_json(j.at("series")), {}, j.at("macmahon_exponent").get<long>()};
    for (const auto& f : j.at("factors"))
      result.factors.push_back(
          {f.at("exponent").get<std::vector<int>>(), f.at("sign").get<int>(), f.at("power").get<int>()});
    return result;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed partition JSON: ") + e.what());
  }
}

std::filesystem::path ResultCache::path_for(const RunConfig& config) const {
  return directory_ / (config.cache_key() + ".json");
}

std::optional<PartitionResult> ResultCache::load(const RunConfig& config) const {
  std::ifstream in(path_for(config));
  if (!in) return std::nullopt;
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.contains("config") || j.at("config") != config.canonical_json()) return std::nullopt;
  try {
    return partition_from_json(j.at("result"));
  } catch (const Error&) {
    return std::nullopt;
  }
}

void ResultCache::store(const RunConfig& config, const PartitionResult& computed) const {
  std::filesystem::create_directories(directory_);
  const auto target = path_for(config);
  const auto stamp = std::chrono::system_clock::now().time_since_epoch().count();
  auto temp = target;
  temp += ".tmp" + std::to_string(stamp);
  json j;
  j["config"] = config.canonical_json();
  j["result"] = partition_to_json(config, computed);
  j["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(
                       std::chrono::system_clock::now().time_since_epoch())
                       .count();
  {
    std::ofstream out(temp);
    if (!out) throw Error("cannot write cache file " + temp.string());
    out << j.dump() << '\n';
    if (!out) throw Error("cannot write cache file " + temp.string());
  }
  std::filesystem::rename(temp, target);
}

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

std::vector<int> finite_part(const RootVector& v) { return {v.begin() + 1, v.end()}; }

std::string finite_string(const RootVector& v) { return RootVector(finite_part(v)).to_string(); }

// ---- roots

struct RootsOptions {
  std::string label;
  bool affine = false;
  std::optional<int> bound;
};

void cmd_roots(const RootsOptions& opt, OutputFormat format, std::ostream& out) {
  const DynkinLabel label = DynkinLabel::parse(opt.label);
  json j;
  j["label"] = label.to_string();
  j["affine"] = opt.affine;
  json roots = json::array();
  if (!opt.affine) {
    for (const auto& r : finite_positive_roots(label)) {
      if (opt.bound && r.height() > *opt.bound) continue;
      if (format == OutputFormat::Json)
        roots.push_back(r.entries());
      else
        out << r.to_string() << '\n';
    }
  } else {
    const int bound = opt.bound.value_or(imaginary_root(label).height());
    if (bound < 0) throw InvalidArgument("--bound must be non-negative");
    j["bound"] = bound;
    for (const auto& r : affine_positive_real_roots(label, bound)) {
      if (format == OutputFormat::Json) {
        roots.push_back({{"vector", r.vector.entries()},
                         {"m", r.m},
                         {"beta", finite_part(r.beta)},
                         {"sign", r.sign > 0 ? "+" : "-"}});
      } else {
        out << r.vector.to_string() << " m=" << r.m << " beta=" << finite_string(r.beta)
            << " sign=" << (r.sign > 0 ? '+' : '-') << '\n';
      }
    }
  }
  if (format == OutputFormat::Json) {
    j["roots"] = std::move(roots);
    out << j.dump(2) << '\n';
  }
}

// ---- quiver

const char* kind_name(ArrowKind kind) {
  switch (kind) {
    case ArrowKind::Edge: return "edge";
    case ArrowKind::Loop: return "loop";
    case ArrowKind::Framing: return "framing";
  }
  return "edge";
}

void cmd_quiver(const std::string& label_text, bool framed, OutputFormat format, std::ostream& out) {
  const DynkinLabel label = DynkinLabel::parse(label_text);
  const QuiverData quiver = mckay_quiver(label, framed);
  const auto w = superpotential(quiver);
  if (format != OutputFormat::Json) {
    out << to_plain(quiver, w);
    return;
  }
  json j;
  j["label"] = label.to_string();
  j["framed"] = framed;
  json vertices = json::array();
  for (const auto& v : quiver.vertices) vertices.push_back({{"index", v.index}, {"dimension", v.dimension}});
  j["vertices"] = std::move(vertices);
  json arrows = json::array();
  for (const auto& a : quiver.arrows) {
    json source = a.source < 0 ? json("inf") : json(a.source);
    arrows.push_back({{"label", a.label}, {"kind", kind_name(a.kind)}, {"source", source}, {"target", a.target}});
  }
  j["arrows"] = std::move(arrows);
  json terms = json::array();
  for (const auto& t : w) {
    json path = json::array();
    for (const auto& a : t.path) path.push_back(a.label);
    terms.push_back({{"sign", t.sign}, {"path", std::move(path)}});
  }
  j["superpotential"] = std::move(terms);
  out << j.dump(2) << '\n';
}

// ---- walls

struct WallsOptions {
  std::string label;
  int bound = 0;
  std::optional<std::string> from;
  std::optional<std::string> to;
};

json wall_json(const Wall& w) {
  json roots = json::array();
  for (const auto& r : w.roots) roots.push_back(r.entries());
  return {{"normal", w.normal.entries()}, {"imaginary", w.imaginary}, {"roots", std::move(roots)}};
}

std::string wall_plain(const Wall& w) {
  std::string s = w.imaginary ? "imaginary " : "real ";
  s += w.normal.to_string();
  if (w.imaginary) {
    s += " roots=";
    for (std::size_t i = 0; i < w.roots.size(); ++i) s += (i ? "," : "") + w.roots[i].to_string();
  }
  return s;
}

StabilityParameter parse_zeta(const DynkinLabel& label, const std::string& text) {
  auto zeta = StabilityParameter::parse(text);
  if (zeta.size() != static_cast<std::size_t>(label.affine_size()))
    throw InvalidArgument("stability parameter needs " + std::to_string(label.affine_size()) + " entries for " +
                          label.to_string());
  return zeta;
}

void cmd_walls(const WallsOptions& opt, OutputFormat format, std::ostream& out) {
  const DynkinLabel label = DynkinLabel::parse(opt.label);
  if (opt.bound < 0) throw InvalidArgument("--bound must be non-negative");
  if (opt.from.has_value() != opt.to.has_value()) throw InvalidArgument("--from and --to go together");
  json j;
  j["label"] = label.to_string();
  j["bound"] = opt.bound;
  if (!opt.from) {
    json list = json::array();
    for (const auto& w : walls(label, opt.bound)) {
      if (format == OutputFormat::Json)
        list.push_back(wall_json(w));
      else
        out << wall_plain(w) << '\n';
    }
    j["walls"] = std::move(list);
  } else {
    const auto from = parse_zeta(label, *opt.from);
    const auto to = parse_zeta(label, *opt.to);
    json list = json::array();
    for (const auto& c : crossed_walls(label, from, to, opt.bound)) {
      if (format == OutputFormat::Json) {
        json w = wall_json(c.wall);
        w["t"] = c.parameter.get_str();
        w["direction"] = c.direction;
        list.push_back(std::move(w));
      } else {
        out << "t=" << c.parameter.get_str() << ' ' << (c.direction > 0 ? "enter " : "leave ") << wall_plain(c.wall)
            << '\n';
      }
    }
    j["from"] = from.to_string();
    j["to"] = to.to_string();
    j["crossings"] = std::move(list);
  }
  if (format == OutputFormat::Json) out << j.dump(2) << '\n';
}

// ---- partition

void print_factors(const RunConfig& config, const PartitionResult& result, std::ostream& out) {
  const auto& names = result.series.context().names();
  if (result.macmahon_exponent != 0)
    out << "macmahon delta=" << imaginary_root(config.label).to_string() << " exponent=" << result.macmahon_exponent
        << '\n';
  if (config.kind == PartitionKind::GW) {
    for (const auto& f : result.factors) {
      const RootVector e(f.exponent);
      out << "m=" << e[0] << " beta=" << finite_string(e) << " factor=" << render_factor(f, names) << '\n';
    }
    return;
  }
  const DynkinGraph graph(config.label, true);
  for (const auto& f : result.factors) {
    const RootVector alpha(f.exponent);
    const auto cls = classify_vector(graph, alpha);
    out << "alpha=" << alpha.to_string();
    if (const auto* real = std::get_if<RealRootClass>(&cls))
      out << " m=" << real->m << " beta=" << finite_string(real->beta) << " sign=" << (real->sign > 0 ? '+' : '-');
    out << " factor=" << render_factor(f, names) << '\n';
  }
}

int cmd_partition(RunConfig config, bool use_cache, std::ostream& out, std::ostream& err) {
  config.validate();
  std::optional<ResultCache> cache;
  if (use_cache && config.cache_dir) cache.emplace(*config.cache_dir);
  std::optional<PartitionResult> result;
  if (cache) {
    result = cache->load(config);
    if (result) err << "cache hit: " << cache->path_for(config).string() << '\n';
  }
  if (!result) {
    result = compute_partition(config);
    if (cache) {
      try {
        cache->store(config, *result);
      } catch (const std::exception& e) {
        err << "warning: result not cached: " << e.what() << '\n';
      }
    }
  }
  switch (config.output) {
    case OutputFormat::Json: out << partition_to_json(config, *result).dump(2) << '\n'; break;
    case OutputFormat::Plain: out << to_plain(result->series); break;
    case OutputFormat::Factors: print_factors(config, *result, out); break;
  }
  return kExitPass;
}

// ---- check

json report_json(const CheckReport& r) {
  json j{{"name", r.name}, {"passed", r.passed}, {"compared_terms", r.compared_terms}, {"detail", r.detail}};
  if (r.first_mismatch)
    j["first_mismatch"] = {
        {"exponent", r.first_mismatch->exponent}, {"lhs", r.first_mismatch->lhs}, {"rhs", r.first_mismatch->rhs}};
  return j;
}

void report_plain(const CheckReport& r, std::ostream& out) {
  out << (r.passed ? "PASS " : "FAIL ") << r.name;
  if (!r.detail.empty()) out << ": " << r.detail;
  out << '\n';
  if (r.first_mismatch)
    out << "  first mismatch at " << RootVector(r.first_mismatch->exponent).to_string() << ": "
        << r.first_mismatch->lhs << " vs " << r.first_mismatch->rhs << '\n';
}

struct CheckOptions {
  std::optional<std::string> label;
  std::string which;
  int order = 8;
};

int cmd_check(const CheckOptions& opt, OutputFormat format, std::ostream& out) {
  if (opt.order < 0) throw InvalidArgument("--order must be non-negative");
  std::vector<CheckReport> reports;
  json j;
  j["which"] = opt.which;
  j["order"] = opt.order;
  std::optional<BpsTable> table;
  if (opt.which == "d5") {
    if (opt.label && !(DynkinLabel::parse(*opt.label) == DynkinLabel(Family::D, 5)))
      throw InvalidArgument("--which d5 only applies to D5");
    j["label"] = "D5";
    reports = verify_d5_example(opt.order).parts;
  } else {
    if (!opt.label) throw InvalidArgument("--which " + opt.which + " needs --label");
    const DynkinLabel label = DynkinLabel::parse(*opt.label);
    j["label"] = label.to_string();
    if (opt.which == "gw-pt") {
      reports.push_back(check_gw_pt(label, opt.order));
    } else if (opt.which == "crepant") {
      reports.push_back(check_crepant(label, opt.order));
    } else if (opt.which == "bps") {
      table = bps_extract(label, opt.order);
      reports.push_back(check_bps(*table));
    } else {
      throw InvalidArgument("unknown check '" + opt.which + "' (expected gw-pt, crepant, d5 or bps)");
    }
  }
  const bool passed = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
  if (format == OutputFormat::Json) {
    j["passed"] = passed;
    json list = json::array();
    for (const auto& r : reports) list.push_back(report_json(r));
    j["reports"] = std::move(list);
    if (table) {
      json entries = json::array();
      for (const auto& e : table->entries)
        entries.push_back({{"genus", e.genus}, {"beta", e.beta}, {"value", e.value.get_str()}});
      j["bps"] = std::move(entries);
    }
    out << j.dump(2) << '\n';
  } else {
    if (table)
      for (const auto& e : table->entries)
        out << "n_" << e.genus << ' ' << RootVector(e.beta).to_string() << " = " << e.value.get_str() << '\n';
    for (const auto& r : reports) report_plain(r, out);
  }
  return passed ? kExitPass : kExitMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Root systems, stability walls and curve-counting series for C^3/G, G in SU(2)", "mckay"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string output_text = "plain";
  std::optional<std::string> cache_dir;
  bool no_cache = false;
  app.add_option("--output", output_text, "Output format: json, plain or factors")
      ->check(CLI::IsMember({"json", "plain", "factors"}));
  app.add_option("--cache-dir", cache_dir, "Result cache directory (default: $MCKAY_CACHE_DIR)");
  app.add_flag("--no-cache", no_cache, "Neither read nor write the result cache");

  RootsOptions roots_opt;
  auto* roots = app.add_subcommand("roots", "Finite positive roots, or affine real roots up to an entry sum");
  roots->add_option("label", roots_opt.label, "Dynkin label such as A3, D5, E7")->required();
  roots->add_flag("--affine", roots_opt.affine, "List positive real affine roots");
  roots->add_option("--bound", roots_opt.bound, "Entry-sum bound (affine default: |delta|)");

  std::string quiver_label;
  bool framed = false;
  auto* quiver = app.add_subcommand("quiver", "McKay quiver and superpotential");
  quiver->add_option("label", quiver_label, "Dynkin label")->required();
  quiver->add_flag("--framed", framed, "Add the framing vertex and arrow into rho_0");

  WallsOptions walls_opt;
  auto* walls_cmd = app.add_subcommand("walls", "Walls up to an entry-sum bound, or those crossed by a segment");
  walls_cmd->add_option("label", walls_opt.label, "Dynkin label")->required();
  walls_cmd->add_option("--bound", walls_opt.bound, "Entry-sum bound on the roots")->required();
  walls_cmd->add_option("--from", walls_opt.from, "Segment start, comma-separated rationals");
  walls_cmd->add_option("--to", walls_opt.to, "Segment end, comma-separated rationals");

  std::string part_label, part_kind;
  int part_order = 0;
  std::optional<std::string> part_zeta;
  auto* partition = app.add_subcommand("partition", "Truncated partition function");
  partition->add_option("--label", part_label, "Dynkin label")->required();
  partition->add_option("--kind", part_kind, "NCDT, DT+, DT-, PT+, PT-, GW or Chamber")->required();
  partition->add_option("--order", part_order, "Total-degree truncation order")->required();
  partition->add_option("--zeta", part_zeta, "Stability parameter for --kind Chamber, e.g. 1,-2/3");

  CheckOptions check_opt;
  auto* check = app.add_subcommand("check", "Run an identity check; exit 0 on pass, 1 on mismatch");
  check->add_option("--label", check_opt.label, "Dynkin label");
  check->add_option("--which", check_opt.which, "gw-pt, crepant, d5 or bps")
      ->required()
      ->check(CLI::IsMember({"gw-pt", "crepant", "d5", "bps"}));
  check->add_option("--order", check_opt.order, "Truncation order (default 8)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    const OutputFormat format = parse_output_format(output_text);
    if (*roots) {
      cmd_roots(roots_opt, format, out);
      return kExitPass;
    }
    if (*quiver) {
      cmd_quiver(quiver_label, framed, format, out);
      return kExitPass;
    }
    if (*walls_cmd) {
      cmd_walls(walls_opt, format, out);
      return kExitPass;
    }
    if (*partition) {
      RunConfig config;
      config.label = DynkinLabel::parse(part_label);
      config.kind = parse_partition_kind(part_kind);
      config.order = part_order;
      if (part_zeta) config.zeta = StabilityParameter::parse(*part_zeta);
      config.output = format;
      if (cache_dir) {
        config.cache_dir = *cache_dir;
      } else if (const char* env = std::getenv("MCKAY_CACHE_DIR"); env && *env) {
        config.cache_dir = env;
      }
      return cmd_partition(std::move(config), !no_cache, out, err);
    }
    return cmd_check(check_opt, format, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace mckay::cli
