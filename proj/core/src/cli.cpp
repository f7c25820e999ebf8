#include "codegree/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "codegree/builders.hpp"
#include "codegree/cache.hpp"
#include "codegree/errors.hpp"
#include "codegree/jsonio.hpp"
#include "codegree/lietables.hpp"
#include "codegree/qian.hpp"

namespace codegree {

namespace {

void print_table_text(const CharacterTable& T, std::ostream& out) {
  out << "spec " << T.spec << "  order " << T.order.get_str() << "  exponent " << T.exponent
      << "  classes " << T.num_classes() << "\n";
  out << "class  size  order  rep\n";
  for (uint32_t i = 0; i < T.num_classes(); ++i)
    out << "  " << i << "  " << T.class_meta[i].size << "  " << T.class_meta[i].element_order
        << "  " << T.class_meta[i].rep_cycles << "\n";
  for (uint32_t s = 0; s < T.num_chars(); ++s) {
    out << "chi_" << s << " [deg " << T.degrees[s] << "]:";
    for (uint32_t i = 0; i < T.num_classes(); ++i) out << " " << T.rows[s][i].str();
    out << "\n";
  }
}

struct CliContext {
  Config cfg;
  std::unique_ptr<TableCache> cache;
  bool json = false;
  uint32_t jobs = 1;
  std::ostream* out;
  std::ostream* err;

  std::shared_ptr<const CharacterTable> table_for(const std::string& spec, const PermGroup& G) {
    if (cache->enabled()) {
      auto cached = cache->load(spec);
      if (cached) return std::make_shared<const CharacterTable>(std::move(*cached));
    }
    CharacterTable T = character_table(G, cfg);
    T.spec = spec;
    cache->store(T);
    return std::make_shared<const CharacterTable>(std::move(T));
  }
};

int cmd_chartab(CliContext& ctx, const std::string& spec_text) {
  GroupSpec spec = parse_spec(spec_text);
  PermGroup G = build_group(spec);
  auto T = ctx.table_for(spec.str(), G);
  if (ctx.json)
    *ctx.out << table_to_json(*T) << "\n";
  else
    print_table_text(*T, *ctx.out);
  return 0;
}

int cmd_codegrees(CliContext& ctx, const std::string& spec_text) {
  GroupSpec spec = parse_spec(spec_text);
  PermGroup G = build_group(spec);
  auto T = ctx.table_for(spec.str(), G);
  std::vector<CodegreeRecord> recs = codegrees(*T);
  if (ctx.json) {
    *ctx.out << table_to_json(*T) << "\n";
  } else {
    *ctx.out << "spec " << spec.str() << "  order " << T->order.get_str() << "\n";
    *ctx.out << "chi  degree  kernel_order  codegree\n";
    for (const CodegreeRecord& r : recs)
      *ctx.out << "  " << r.char_index << "  " << T->degrees[r.char_index] << "  "
               << r.kernel_order.get_str() << "  " << r.codegree.get_str() << "\n";
  }
  return 0;
}

int cmd_qian(CliContext& ctx, const std::string& spec_text) {
  GroupSpec spec = parse_spec(spec_text);
  PermGroup G = build_group(spec);
  auto T = ctx.table_for(spec.str(), G);
  QianReport rep = qian_check(*T);
  rep.spec = spec.str();
  if (ctx.json) {
    *ctx.out << qian_report_to_json(rep) << "\n";
  } else {
    *ctx.out << "spec " << rep.spec << "  verdict " << (rep.pass ? "pass" : "fail") << "\n";
    for (const QianWitness& w : rep.witnesses)
      *ctx.out << "  order " << w.order << " -> chi_" << w.char_index << " (degree " << w.degree
               << ", codegree " << w.codegree.get_str() << ")\n";
    for (uint64_t d : rep.failures) *ctx.out << "  order " << d << " -> NO WITNESS\n";
  }
  return rep.pass ? 0 : 1;
}

int cmd_fitting(CliContext& ctx, const std::string& spec_text) {
  GroupSpec spec = parse_spec(spec_text);
  PermGroup G = build_group(spec);
  Classes cls = Classes::compute(G, ctx.cfg);
  SubgroupHandle F = fitting_subgroup(G, cls);
  if (ctx.json) {
    std::ostringstream gens;
    *ctx.out << "{\n  \"fitting_order\": \"" << F.group.order().get_str()
             << "\",\n  \"fitting_trivial\": " << (F.group.trivial() ? "true" : "false")
             << ",\n  \"spec\": \"" << spec.str() << "\"\n}\n";
  } else {
    *ctx.out << "spec " << spec.str() << "  |F(G)| = " << F.group.order().get_str()
             << (F.group.trivial() ? "  (trivial)" : "") << "\n";
  }
  return 0;
}

int cmd_lie(CliContext& ctx, const std::string& action, const std::string& family, uint64_t q) {
  const LieTables& tables = LieTables::builtin();
  if (action == "order") {
    *ctx.out << tables.order_of(family, q).get_str() << "\n";
    return 0;
  }
  if (action == "alpha") {
    *ctx.out << tables.alpha_degree(family, q).get_str() << "\n";
    return 0;
  }
  if (action == "beta") {
    *ctx.out << tables.beta_degree(family, q).get_str() << "\n";
    return 0;
  }
  if (action == "check") {
    LieCheckResult res = tables.divisibility_check(family, q);
    if (ctx.json)
      *ctx.out << lie_check_to_json(res) << "\n";
    else
      *ctx.out << "row " << res.row_id << "  q " << q << "  order " << res.order.get_str()
               << "  alpha " << res.alpha.get_str() << "  beta " << res.beta.get_str()
               << "  verdict " << (res.pass ? "pass" : "fail") << "\n";
    return res.pass ? 0 : 1;
  }
  throw DomainError("unknown lie action '" + action + "' (order|alpha|beta|check)");
}

int cmd_monolithic(CliContext& ctx, const std::string& spec_text, const std::string& element) {
  GroupSpec spec = parse_spec(spec_text);
  PermGroup G = build_group(spec);
  Classes cls = Classes::compute(G, ctx.cfg);
  TableProvider provider = plain_table_provider(ctx.cfg);
  std::vector<Perm> elements;
  if (element == "all") {
    for (uint32_t i = 0; i < cls.count(); ++i) elements.push_back(cls.rep(i));
  } else {
    elements.push_back(Perm::from_cycles(G.degree(), element));
  }
  bool all_pass = true;
  bool first = true;
  if (ctx.json) *ctx.out << "[\n";
  for (const Perm& g : elements) {
    MonolithicScenario sc = monolithic_witness_check(G, cls, g, provider, ctx.cfg);
    sc.spec = spec.str();
    all_pass = all_pass && sc.pass;
    if (ctx.json) {
      if (!first) *ctx.out << ",\n";
      *ctx.out << monolithic_to_json(sc);
    } else {
      *ctx.out << "g = " << sc.element_cycles << "  r " << sc.coset_order_r << "  h "
               << sc.h_used << "  lambda chi_" << sc.lambda_row << " (deg " << sc.lambda_degree
               << ")  |M|/lambda(1) " << sc.m_over_lambda.get_str() << "  needs "
               << sc.required_divisor.get_str() << "  verdict " << (sc.pass ? "pass" : "fail")
               << "\n";
    }
    first = false;
  }
  if (ctx.json) *ctx.out << "\n]\n";
  return all_pass ? 0 : 1;
}

int cmd_corpus(CliContext& ctx, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open corpus file: " + path);
  std::vector<std::string> specs;
  std::string line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    size_t b = line.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) continue;
    size_t e = line.find_last_not_of(" \t\r\n");
    specs.push_back(line.substr(b, e - b + 1));
  }
  CorpusSummary summary = corpus_run(
      specs, ctx.cfg, ctx.jobs,
      [&](const std::string& spec, const PermGroup& G) { return ctx.table_for(spec, G); });
  if (ctx.json) {
    *ctx.out << corpus_summary_to_json(summary) << "\n";
  } else {
    for (const TheoremAReport& rep : summary.reports) {
      *ctx.out << (rep.pass ? "PASS " : "FAIL ") << rep.spec << "  fitting "
               << rep.fitting_order.get_str();
      for (const std::string& f : rep.flags) *ctx.out << "  [" << f << "]";
      *ctx.out << "\n";
    }
    *ctx.out << "passed " << summary.passed << "  failed " << summary.failed
             << "  outside-hypothesis " << summary.outside_hypothesis << "\n";
  }
  return summary.failed == 0 ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact character tables, codegrees, and divisibility checks for finite groups"};
  app.fallthrough(true);

  bool json = false;
  std::string cache_dir;
  uint64_t cap = Config::defaults().enumeration_cap;
  uint32_t jobs = 1;
  app.add_flag("--json", json, "emit machine-readable JSON reports");
  app.add_option("--cache-dir", cache_dir, "character-table cache directory");
  app.add_option("--cap", cap, "element enumeration cap");
  app.add_option("--jobs", jobs, "parallel corpus workers");

  std::string spec_arg, element_arg, lie_action, lie_family, corpus_file;
  uint64_t lie_q = 0;

  CLI::App* c_chartab = app.add_subcommand("chartab", "compute and print a character table");
  c_chartab->add_option("SPEC", spec_arg)->required();
  CLI::App* c_codeg = app.add_subcommand("codegrees", "kernels and codegrees of a group");
  c_codeg->add_option("SPEC", spec_arg)->required();
  CLI::App* c_qian = app.add_subcommand("qian", "element-order vs codegree divisibility check");
  c_qian->add_option("SPEC", spec_arg)->required();
  CLI::App* c_fit = app.add_subcommand("fitting", "Fitting subgroup of a group");
  c_fit->add_option("SPEC", spec_arg)->required();
  CLI::App* c_lie = app.add_subcommand("lie", "Lie-type family data (order|alpha|beta|check)");
  c_lie->add_option("ACTION", lie_action)->required();
  c_lie->add_option("FAMILY", lie_family)->required();
  c_lie->add_option("Q", lie_q)->required();
  CLI::App* c_mono = app.add_subcommand("monolithic", "witness check in a monolithic group");
  c_mono->add_option("SPEC", spec_arg)->required();
  c_mono->add_option("ELEMENT", element_arg, "cycle string, or 'all' for every class rep")
      ->required();
  CLI::App* c_corpus = app.add_subcommand("corpus", "run the harness over a spec list file");
  c_corpus->add_option("FILE", corpus_file)->required();
  app.require_subcommand(1);

  std::vector<std::string> argv_store;
  argv_store.push_back("codegree");
  for (const std::string& a : args) argv_store.push_back(a);
  std::vector<char*> argv;
  for (std::string& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  CliContext ctx;
  ctx.cfg.enumeration_cap = cap;
  ctx.json = json;
  ctx.jobs = jobs;
  ctx.out = &out;
  ctx.err = &err;
  ctx.cache = std::make_unique<TableCache>(
      TableCache::resolve_dir(cache_dir),
      [&err](const std::string& msg) { err << "cache: " << msg << "\n"; });

  try {
    if (app.got_subcommand(c_chartab)) return cmd_chartab(ctx, spec_arg);
    if (app.got_subcommand(c_codeg)) return cmd_codegrees(ctx, spec_arg);
    if (app.got_subcommand(c_qian)) return cmd_qian(ctx, spec_arg);
    if (app.got_subcommand(c_fit)) return cmd_fitting(ctx, spec_arg);
    if (app.got_subcommand(c_lie)) return cmd_lie(ctx, lie_action, lie_family, lie_q);
    if (app.got_subcommand(c_mono)) return cmd_monolithic(ctx, spec_arg, element_arg);
    if (app.got_subcommand(c_corpus)) return cmd_corpus(ctx, corpus_file);
  } catch (const SpecParseError& e) {
    err << "spec error: " << e.what() << "\n";
    return 2;
  } catch (const CapError& e) {
    err << "cap error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const TableError& e) {
    err << "check failed: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace codegree
