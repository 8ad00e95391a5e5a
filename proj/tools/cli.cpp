#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <thread>

#include "atlas.hpp"
#include "twostar/census.hpp"
#include "twostar/error.hpp"
#include "twostar/oracle.hpp"

namespace twostar::cli {

namespace fs = std::filesystem;

namespace {

unsigned default_workers() { return std::max(1U, std::thread::hardware_concurrency()); }

struct Options {
  std::size_t max_order = 24;
  std::string out;
  std::string db;
  bool exclude_degenerate = false;
  unsigned workers = default_workers();
  std::uint64_t seed = kDefaultMeatAxeSeed;
  std::size_t oracle_cap = kOracleDefaultCap;
  bool allow_stretch = false;
};

void write_text(const fs::path& path, const std::string& content) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f || !(f << content) || !f.flush()) throw Error(Errc::Io, "cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::optional<int> require_db(const Options& o, std::ostream& err) {
  if (o.db.empty() || !fs::is_directory(o.db)) {
    err << "error: no census DB at '" << o.db << "'\n";
    return kExitUsage;
  }
  return std::nullopt;
}

int cmd_census(const Options& o, std::ostream& out) {
  if (o.out.empty()) throw CLI::RequiredError("--out");
  CensusConfig config;
  config.max_order = o.max_order;
  config.exclude_degenerate = o.exclude_degenerate;
  config.workers = o.workers;
  config.seed = o.seed;
  config.cap = o.allow_stretch ? kCensusStretchCap : kCensusDefaultCap;
  const CensusDB db = run_census(config);
  const WriteOutcome outcome = write_census(db, o.out);
  out << (outcome == WriteOutcome::Written ? "wrote " : "unchanged ") << o.out << ": "
      << db.groups.size() << " groups, " << db.triples.size() << " triples up to order "
      << db.max_order << '\n';
  return kExitOk;
}

struct OrderSets {
  std::set<Certificate> groups;
  std::set<Certificate> triples;
};

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (auto code = require_db(o, err)) return *code;
  const CensusDB db = load_census(o.db);
  const std::size_t n_max = std::min(o.oracle_cap, db.max_order);
  OracleOptions oo;
  oo.cap = o.oracle_cap;
  oo.workers = o.workers;
  oo.exclude_degenerate = db.exclude_degenerate;
  const auto oracle = oracle_triples_by_order(n_max, oo);

  std::vector<OrderSets> census(n_max + 1), found(n_max + 1);
  for (const auto& g : db.groups) {
    if (g.group->order() <= n_max) census[g.group->order()].groups.insert(g.certificate);
  }
  for (const auto& t : db.triples) {
    const auto& g = db.groups[t.group];
    if (g.group->order() > n_max) continue;
    census[g.group->order()].triples.insert(pair_certificate(*g.group, t.x, t.g));
  }
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (const auto& t : oracle[n]) {
      found[n].triples.insert(triple_certificate(t));
      if (auto form = canonical_group_certificate(*t.group)) found[n].groups.insert(form->certificate);
    }
  }
  for (std::size_t n = 1; n <= n_max; ++n) {
    const OrderSets& c = census[n];
    const OrderSets& f = found[n];
    if (c.groups == f.groups && c.triples == f.triples) continue;
    err << "mismatch at order " << n << ": census " << c.groups.size() << " groups, " << c.triples.size()
        << " triples; oracle " << f.groups.size() << " groups, " << f.triples.size() << " triples\n";
    auto report = [&](const char* kind, const std::set<Certificate>& a, const std::set<Certificate>& b,
                      const char* side) {
      for (const auto& cert : a) {
        if (!b.count(cert)) err << "  " << kind << " only in " << side << ": " << certificate_hash(cert) << '\n';
      }
    };
    report("group", c.groups, f.groups, "census");
    report("group", f.groups, c.groups, "oracle");
    report("triple", c.triples, f.triples, "census");
    report("triple", f.triples, c.triples, "oracle");
    return kExitFailure;
  }
  std::size_t groups = 0, triples = 0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    groups += census[n].groups.size();
    triples += census[n].triples.size();
  }
  out << "verified orders 1.." << n_max << ": " << groups << " groups, " << triples
      << " triples agree with the oracle\n";
  return kExitOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  OracleOptions oo;
  oo.cap = o.oracle_cap;
  oo.workers = o.workers;
  oo.exclude_degenerate = o.exclude_degenerate;
  out << "n,groups,triples\n";
  for (const auto& row : oracle_counts(o.max_order, oo)) {
    out << row.order << ',' << row.groups << ',' << row.triples << '\n';
  }
  return kExitOk;
}

int cmd_atlas(const Options& o, std::ostream& out, std::ostream& err) {
  if (auto code = require_db(o, err)) return *code;
  const CensusDB db = load_census(o.db);
  AtlasOptions ao;
  ao.workers = o.workers;
  ao.exclude_degenerate_maps = o.exclude_degenerate;
  const Atlas atlas = build_atlas(db, ao);
  const fs::path dir = o.out.empty() ? fs::path(o.db) / "atlas" : fs::path(o.out);
  fs::create_directories(dir);
  for (const auto& [name, content] : atlas.files) write_text(dir / name, content);
  for (const auto& line : summary_lines(atlas.summary)) out << line << '\n';
  return kExitOk;
}

int cmd_stats(const Options& o, std::ostream& out, std::ostream& err) {
  if (auto code = require_db(o, err)) return *code;
  const std::string csv = stats_csv(load_census(o.db));
  if (o.out.empty()) {
    out << csv;
  } else {
    write_text(o.out, csv);
  }
  return kExitOk;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::CapExceeded: return kExitCap;
    case Errc::SeedVerificationFailed: return kExitSeed;
    default: return kExitFailure;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Census of groups generated by an involution and one more element"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  Options o;

  auto* census = app.add_subcommand("census", "Build the census DB by iterated extension");
  census->add_option("--max-order", o.max_order, "Largest group order")->check(CLI::PositiveNumber);
  census->add_option("--out", o.out, "DB directory")->required();
  census->add_flag("--exclude-degenerate", o.exclude_degenerate, "Drop triples with g = 1");
  census->add_option("--seed", o.seed, "MeatAxe seed");
  census->add_flag("--allow-stretch", o.allow_stretch, "Raise the order cap to 256");

  auto* verify = app.add_subcommand("verify", "Compare the DB with the oracle");
  verify->add_option("--db", o.db, "DB directory")->required();
  verify->add_option("--oracle-cap", o.oracle_cap, "Largest order the oracle may search");

  auto* oracle = app.add_subcommand("oracle", "Per-order counts from the oracle alone");
  oracle->add_option("--max-order", o.max_order, "Largest group order")->check(CLI::PositiveNumber);
  oracle->add_option("--oracle-cap", o.oracle_cap, "Largest order the oracle may search");
  oracle->add_flag("--exclude-degenerate", o.exclude_degenerate, "Drop triples with g = 1");

  auto* atlas = app.add_subcommand("atlas", "Write graph and map CSVs for a DB");
  atlas->add_option("--db", o.db, "DB directory")->required();
  atlas->add_option("--out", o.out, "Output directory (default <db>/atlas)");
  atlas->add_flag("--exclude-degenerate", o.exclude_degenerate, "Drop maps of face length or valence <= 2");

  auto* stats = app.add_subcommand("stats", "Cumulative counts as CSV");
  stats->add_option("--db", o.db, "DB directory")->required();
  stats->add_option("--out", o.out, "Write to a file instead of stdout");

  for (auto* sub : {census, verify, oracle, atlas}) {
    sub->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*census) return cmd_census(o, out);
    if (*verify) return cmd_verify(o, out, err);
    if (*oracle) return cmd_oracle(o, out);
    if (*atlas) return cmd_atlas(o, out, err);
    return cmd_stats(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace twostar::cli
