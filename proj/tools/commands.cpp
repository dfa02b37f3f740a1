#include "commands.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "levelrank/abacus.hpp"
#include "levelrank/affine.hpp"
#include "levelrank/blocks.hpp"
#include "levelrank/errors.hpp"
#include "levelrank/gln.hpp"
#include "levelrank/json_io.hpp"
#include "levelrank/limits.hpp"
#include "levelrank/partition.hpp"

namespace levelrank::cli {

namespace {

enum class Format { kAscii, kJson, kBoth };

struct Options {
  std::string config;
  std::string format = "ascii";
  bool glyph = false;
  unsigned threads = 0;

  std::string partition;
  int m = 1;
  int l = 1;
  int charge = 0;
  int n = 0;
  std::string components;
  std::string charges;
  std::string json_input;
  std::string lambda;
  std::string mu;
  int k_max = 0;
  std::optional<int> window;
  int n_max = 1;
  std::optional<int> shift_bound;
  std::string w_l;
  std::string w_m;
};

Format parse_format(const std::string& s) {
  if (s == "json") return Format::kJson;
  if (s == "both") return Format::kBoth;
  return Format::kAscii;
}

bool wants_ascii(Format f) { return f != Format::kJson; }
bool wants_json(Format f) { return f != Format::kAscii; }

std::string charges_str(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

std::vector<std::string> split(const std::string& s, const std::string& seps) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find_first_of(seps, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<int> parse_charges(const std::string& text) {
  std::vector<int> out;
  std::string body = text;
  body.erase(std::remove_if(body.begin(), body.end(), [](char c) { return c == '(' || c == ')' || c == ' '; }),
             body.end());
  if (body.empty()) return out;
  for (const auto& tok : split(body, ",")) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw ParseError("bad charge entry '" + tok + "'");
    }
  }
  return out;
}

ChargedMultipartition read_charged(const Options& o) {
  if (!o.json_input.empty()) {
    try {
      return json::parse(o.json_input).get<ChargedMultipartition>();
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad --json input: ") + e.what());
    }
  }
  std::vector<Partition> comps;
  for (const auto& part : split(o.components, ";|")) comps.push_back(parse_partition(part));
  return {Multipartition(std::move(comps)), parse_charges(o.charges)};
}

AbacusStyle style(const Options& o) { return o.glyph ? AbacusStyle::kGlyphs : AbacusStyle::kLabels; }

int cmd_core_quotient(const Options& o, std::ostream& out) {
  const Partition p = parse_partition(o.partition);
  const auto cm = big_upsilon(o.m, p, o.charge);
  const Partition core = m_core(p, o.m);
  const Abacus abacus = upsilon(o.m, beta_set(p, o.charge));
  const Abacus slid = Abacus::from_charged({Multipartition::empty_of_level(o.m), cm.charges});
  const Format f = parse_format(o.format);
  if (wants_ascii(f)) {
    out << "partition: " << p.str() << "  charge: " << o.charge << '\n'
        << o.m << "-core: " << core.str() << '\n'
        << o.m << "-quotient: " << cm.components.str() << '\n'
        << "charges: " << charges_str(cm.charges) << '\n'
        << "abacus:\n" << render_abacus(abacus, style(o))
        << "after sliding:\n" << render_abacus(slid, style(o));
  }
  if (wants_json(f)) {
    out << json{{"partition", p},       {"m", o.m},
                {"charge", o.charge},   {"core", core},
                {"quotient", cm.components}, {"charges", cm.charges},
                {"abacus", render_abacus(abacus, style(o))},
                {"slid_abacus", render_abacus(slid, style(o))}}
               .dump()
        << '\n';
  }
  return kOk;
}

int cmd_abacus(const Options& o, std::ostream& out) {
  const Partition p = parse_partition(o.partition);
  out << render_abacus(upsilon(o.m, beta_set(p, o.charge)), style(o));
  return kOk;
}

int cmd_uglov(const Options& o, std::ostream& out) {
  const auto source = read_charged(o);
  if (source.level() != o.l) {
    throw PreconditionError("--l " + std::to_string(o.l) + " but " + std::to_string(source.level()) +
                            " components were given");
  }
  const auto image = big_upsilon_ml(o.l, o.m, source);
  const Format f = parse_format(o.format);
  if (wants_ascii(f)) {
    out << "input:  " << source.str() << '\n'
        << render_abacus(Abacus::from_charged(source), style(o))
        << "output: " << image.str() << '\n'
        << render_abacus(Abacus::from_charged(image), style(o));
  }
  if (wants_json(f)) {
    out << json{{"l", o.l}, {"m", o.m}, {"input", source}, {"output", image}}.dump() << '\n';
  }
  return kOk;
}

int cmd_hc_series(const Options& o, const Limits& limits, std::ostream& out) {
  const Partition mu = parse_partition(o.mu);
  const auto series = hc_series(o.n, o.m, mu, limits);
  const Format f = parse_format(o.format);
  if (wants_ascii(f)) {
    out << "n=" << o.n << " m=" << o.m << " core=" << mu.shorthand() << " (" << series.size() << " partitions)\n";
    for (const auto& rho : series) {
      out << "  " << rho.shorthand() << "  ->  " << chi(rho, o.m, mu).str() << '\n';
    }
  }
  if (wants_json(f)) {
    json rows = json::array();
    for (const auto& rho : series) rows.push_back({{"rho", rho}, {"chi", chi(rho, o.m, mu)}});
    out << json{{"n", o.n}, {"m", o.m}, {"mu", mu}, {"b", b_vector(o.m, mu)}, {"series", rows}}.dump()
        << '\n';
  }
  return kOk;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Left-justifies `text` in `width` terminal columns, keeping at least one space.
std::string cell(const std::string& text, std::size_t width) {
  const auto shown = static_cast<std::size_t>(
      std::count_if(text.begin(), text.end(), [](char c) { return (c & 0xC0) != 0x80; }));
  return text + std::string(shown < width ? width - shown : 1, ' ');
}

void print_duality_table(const std::vector<DualityReport>& reports, std::ostream& out) {
  out << cell("n", 4) << cell("lambda", 12) << cell("mu", 12) << cell("|∩|", 5) << cell("blocks", 9)
      << cell("diagram", 9) << cell("cong(ms)", 10) << cell("cong(cw)", 10) << cell("witnesses", 44)
      << "status\n";
  for (const auto& r : reports) {
    std::string witnesses = r.w_l && r.w_m ? r.w_l->str() + " " + r.w_m->str() : witness_source_name(r.witness_source);
    std::string blocks = std::to_string(r.left.block_size) + "/" + std::to_string(r.right.block_size);
    out << cell(std::to_string(r.n), 4) << cell(r.lambda.shorthand(), 12) << cell(r.mu.shorthand(), 12)
        << cell(std::to_string(r.intersection.size()), 5) << cell(blocks, 9) << cell(yes_no(r.diagram_ok), 9)
        << cell(yes_no(r.congruence_multiset), 10) << cell(yes_no(r.congruence_componentwise), 10)
        << cell(witnesses, 44) << (r.pass() ? "PASS" : "FAIL") << '\n';
  }
  const auto passed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.pass(); });
  out << passed << "/" << reports.size() << " instances pass\n";
}

int cmd_verify_duality(const Options& o, const Limits& limits, std::ostream& out) {
  const Partition lambda = parse_partition(o.lambda);
  const Partition mu = parse_partition(o.mu);
  std::optional<std::pair<AffinePermutation, AffinePermutation>> witnesses;
  if (!o.w_l.empty() || !o.w_m.empty()) {
    if (o.w_l.empty() || o.w_m.empty()) throw ParseError("--w-l and --w-m must be given together");
    witnesses = std::make_pair(parse_affine(o.w_l), parse_affine(o.w_m));
  }
  const auto report = verify_duality(o.n, o.l, lambda, o.m, mu, o.shift_bound.value_or(limits.shift_bound),
                                     witnesses, limits);
  const Format f = parse_format(o.format);
  if (wants_json(f)) out << json(report).dump() << '\n';
  if (wants_ascii(f)) print_duality_table({report}, out);
  return report.pass() ? kOk : kVerificationFailed;
}

int cmd_verify_sweep(const Options& o, const Limits& limits, std::ostream& out) {
  const auto reports = duality_sweep(o.n_max, o.l, o.m, o.shift_bound.value_or(limits.shift_bound), limits,
                                     o.threads);
  const Format f = parse_format(o.format);
  if (wants_json(f)) {
    for (const auto& r : reports) out << json(r).dump() << '\n';
  }
  if (wants_ascii(f)) print_duality_table(reports, out);
  const bool pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass(); });
  return pass ? kOk : kVerificationFailed;
}

int cmd_verify_uglov(const Options& o, const Limits& limits, std::ostream& out) {
  const int window = o.window.value_or(std::max(o.l, o.m));
  const auto report = verify_uglov(o.l, o.m, o.k_max, window, limits, o.threads);
  const Format f = parse_format(o.format);
  if (wants_json(f)) {
    for (const auto& inst : report.instances) out << json(inst).dump() << '\n';
    out << uglov_summary(report).dump() << '\n';
  }
  if (wants_ascii(f)) {
    const auto failed = std::count_if(report.instances.begin(), report.instances.end(),
                                      [](const auto& i) { return !i.pass; });
    out << "uglov l=" << o.l << " m=" << o.m << " K<=" << o.k_max << " charges in [0," << window
        << "): " << report.instances.size() << " blocks checked, " << failed << " failed, "
        << (report.pass ? "PASS" : "FAIL") << '\n';
    for (const auto& inst : report.instances) {
      if (!inst.pass) out << "  FAIL " << inst.source.block.str() << ": " << inst.message << '\n';
    }
  }
  return report.pass ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partition, abacus and level-rank duality computations"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--config", o.config, "Key-value limits file");
  app.add_option("--threads", o.threads, "Worker threads for verification sweeps (0 = all cores)");

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "ascii, json or both")
        ->check(CLI::IsMember({"ascii", "json", "both"}));
  };

  auto* cq = app.add_subcommand("core-quotient", "m-core, m-quotient, charges and abaci of a partition");
  cq->add_option("partition", o.partition, "Partition, e.g. \"8,6,1\" or \"3^2,1\"")->required();
  cq->add_option("--m", o.m, "Number of runners")->required()->check(CLI::PositiveNumber);
  cq->add_option("--charge", o.charge, "Charge s");
  cq->add_flag("--glyph", o.glyph, "Draw beads as glyphs instead of position values");
  add_format(cq);

  auto* ab = app.add_subcommand("abacus", "Render the m-runner abacus of a charged partition");
  ab->add_option("partition", o.partition)->required();
  ab->add_option("--m", o.m)->required()->check(CLI::PositiveNumber);
  ab->add_option("--charge", o.charge);
  ab->add_flag("--glyph", o.glyph);

  auto* ug = app.add_subcommand("uglov", "Apply the runner-exchange map from l to m runners");
  ug->add_option("--l", o.l, "Input runner count")->required()->check(CLI::PositiveNumber);
  ug->add_option("--m", o.m, "Output runner count")->required()->check(CLI::PositiveNumber);
  ug->add_option("--components", o.components, "Components separated by ';', e.g. \"8,6,1\" or \"1;;2,1\"");
  ug->add_option("--charges", o.charges, "Comma-separated charges");
  ug->add_option("--json", o.json_input, "{\"components\": [...], \"charges\": [...]}");
  ug->add_flag("--glyph", o.glyph);
  add_format(ug);

  auto* hc = app.add_subcommand("hc-series", "Partitions of n with a given m-core, and their shifted quotients");
  hc->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
  hc->add_option("--m", o.m)->required()->check(CLI::PositiveNumber);
  hc->add_option("--mu", o.mu, "The m-core")->required();
  add_format(hc);

  auto* verify = app.add_subcommand("verify", "Brute-force verification");
  verify->require_subcommand(1);
  auto* vu = verify->add_subcommand("uglov", "Uglov-data bijection for all K <= kmax and charges in a window");
  vu->add_option("--l", o.l)->required()->check(CLI::PositiveNumber);
  vu->add_option("--m", o.m)->required()->check(CLI::PositiveNumber);
  vu->add_option("--kmax", o.k_max)->required()->check(CLI::NonNegativeNumber);
  vu->add_option("--window", o.window, "Charge entries range over [0, window); default max(l, m)")->check(CLI::PositiveNumber);
  vu->add_option("--format", o.format)->check(CLI::IsMember({"ascii", "json", "both"}));
  auto* vd = verify->add_subcommand("duality", "GL_n level-rank duality for one pair of cuspidal data");
  vd->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
  vd->add_option("--l", o.l)->required()->check(CLI::PositiveNumber);
  vd->add_option("--lambda", o.lambda, "The l-core")->required();
  vd->add_option("--m", o.m)->required()->check(CLI::PositiveNumber);
  vd->add_option("--mu", o.mu, "The m-core")->required();
  vd->add_option("--shift-bound", o.shift_bound);
  vd->add_option("--w-l", o.w_l, "Witness for the l side, e.g. \"(1,0,0,-1)o[1032]\"");
  vd->add_option("--w-m", o.w_m, "Witness for the m side, e.g. \"(2,0,-1)o[201]\"");
  vd->add_option("--format", o.format)->check(CLI::IsMember({"ascii", "json", "both"}));
  auto* vs = verify->add_subcommand("duality-sweep", "verify duality for every n <= nmax and all cuspidal data");
  vs->add_option("--nmax", o.n_max)->required()->check(CLI::PositiveNumber);
  vs->add_option("--l", o.l)->required()->check(CLI::PositiveNumber);
  vs->add_option("--m", o.m)->required()->check(CLI::PositiveNumber);
  vs->add_option("--shift-bound", o.shift_bound);
  vs->add_option("--format", o.format)->check(CLI::IsMember({"ascii", "json", "both"}));

  // Verification reports default to JSON lines.
  for (auto* sub : {vu, vd, vs}) sub->preparse_callback([&o](std::size_t) { o.format = "json"; });

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    const Limits limits = load_limits(o.config);
    if (*cq) return cmd_core_quotient(o, out);
    if (*ab) return cmd_abacus(o, out);
    if (*ug) return cmd_uglov(o, out);
    if (*hc) return cmd_hc_series(o, limits, out);
    if (*vu) return cmd_verify_uglov(o, limits, out);
    if (*vd) return cmd_verify_duality(o, limits, out);
    if (*vs) return cmd_verify_sweep(o, limits, out);
  } catch (const LimitError& e) {
    err << "limit exceeded: " << e.what() << '\n';
    return kLimitExceeded;
  } catch (const TheoremViolation& e) {
    out << json{{"status", "FAIL"}, {"violation", e.what()}}.dump() << '\n';
    err << "theorem violation: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace levelrank::cli
