#include "twostar/census.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "twostar/parallel.hpp"
#include "twostar/cohomology.hpp"
#include "twostar/error.hpp"
#include "twostar/triples.hpp"

namespace twostar {

namespace {

struct WorkItem {
  std::size_t source;
  unsigned p;
};

std::vector<RawExtension> extensions_for(const PoolEntry& entry, std::size_t source, unsigned p,
                                         std::size_t m, std::uint64_t seed) {
  const GroupTable& q = *entry.group;
  const std::size_t n = q.order();
  std::size_t max_dim = 0;
  for (std::size_t size = p; size * n <= m; size *= p) ++max_dim;
  std::vector<RawExtension> out;
  const auto modules = irreducible_modules(entry.group, p, max_dim, seed);
  for (std::size_t mi = 0; mi < modules.size(); ++mi) {
    const ActionModule& module = modules[mi];
    std::size_t size = 1;
    for (std::size_t k = 0; k < module.dim; ++k) size *= p;
    if (size * n > m) continue;
    // Coprime case: H^2 vanishes, so only the split extension exists.
    const std::vector<Cocycle> classes =
        n % p != 0 ? std::vector<Cocycle>{zero_cocycle(module)} : h2_reps(q, module);
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
      Extension ext = extension_from_cocycle(q, module, classes[ci]);
      out.push_back({share(std::move(ext.group)), source, p, module.dim, mi, ci});
    }
  }
  return out;
}

std::string provenance_of(const PoolEntry& source, const RawExtension& rec) {
  return "ext:" + source.id + ":p" + std::to_string(rec.p) + ":d" + std::to_string(rec.dim) +
         ":m" + std::to_string(rec.module_index) + ":h" + std::to_string(rec.class_index);
}

struct Found {
  CanonicalForm form;
  GroupPtr group;
  std::string provenance;
};

}  // namespace

std::vector<RawExtension> extend_step(const std::vector<PoolEntry>& pool, std::size_t m,
                                      const ExtendOptions& options) {
  std::vector<WorkItem> items;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const std::size_t n = pool[i].group->order();
    for (unsigned p = 2; p * n <= m; ++p) {
      if (!is_prime(p)) continue;
      if (pool[i].odd_cyclic && p != 2) break;
      items.push_back({i, p});
    }
  }
  std::vector<std::vector<RawExtension>> results(items.size());
  parallel_for(items.size(), options.workers, [&](std::size_t i) {
    results[i] = extensions_for(pool[items[i].source], items[i].source, items[i].p, m, options.seed);
  });
  std::vector<RawExtension> out;
  for (auto& r : results) {
    for (auto& rec : r) out.push_back(std::move(rec));
  }
  return out;
}

CensusDB run_census(const CensusConfig& config) {
  if (config.cap > kCensusStretchCap) {
    throw Error(Errc::CapExceeded, "cap may not exceed " + std::to_string(kCensusStretchCap));
  }
  if (config.max_order > config.cap) {
    throw Error(Errc::CapExceeded, "max order " + std::to_string(config.max_order) +
                                       " exceeds the cap " + std::to_string(config.cap));
  }
  if (config.max_order == 0) throw Error(Errc::MalformedInput, "max order must be positive");
  const std::size_t m = config.max_order;
  const ExtendOptions options{std::max(1U, config.workers), config.seed};

  CensusDB db;
  db.max_order = m;
  db.exclude_degenerate = config.exclude_degenerate;
  db.seed = config.seed;
  db.cap = config.cap;

  std::vector<std::vector<Found>> by_order(m + 1);
  std::set<Certificate> known;
  auto admit = [&](const GroupTable& g, std::optional<CanonicalForm> form, std::string provenance) {
    if (!form || known.count(form->certificate)) return;
    known.insert(form->certificate);
    GroupPtr relabeled = share(canonical_relabel(g, *form));
    by_order[g.order()].push_back({std::move(*form), std::move(relabeled), std::move(provenance)});
  };

  for (const auto& seed : seed_groups(m)) {
    db.seeds.push_back(seed.name);
    if (!seed.odd_cyclic) {
      admit(*seed.group, canonical_group_certificate(*seed.group), "seed:" + seed.name);
    }
  }

  for (std::size_t k = 1; k <= m; ++k) {
    auto& level = by_order[k];
    std::sort(level.begin(), level.end(), [](const Found& a, const Found& b) {
      return a.form.certificate < b.form.certificate;
    });
    std::vector<PoolEntry> pool;
    if (k % 2 == 1) pool.push_back({"C" + std::to_string(k), share(cyclic_group(k)), true});
    for (std::size_t i = 0; i < level.size(); ++i) {
      const std::string id = std::to_string(k) + "." + std::to_string(i + 1);
      pool.push_back({id, level[i].group, false});
      db.groups.push_back({id, level[i].group, level[i].form.certificate,
                           certificate_hash(level[i].form.certificate), level[i].provenance});
    }
    if (2 * k > m || pool.empty()) continue;
    const auto raw = extend_step(pool, m, options);
    std::vector<std::optional<CanonicalForm>> forms(raw.size());
    parallel_for(raw.size(), options.workers, [&](std::size_t i) {
      forms[i] = canonical_group_certificate(*raw[i].group);
    });
    for (std::size_t i = 0; i < raw.size(); ++i) {
      admit(*raw[i].group, std::move(forms[i]), provenance_of(pool[raw[i].source], raw[i]));
    }
  }

  std::vector<std::vector<CensusTriple>> per_group(db.groups.size());
  parallel_for(db.groups.size(), options.workers, [&](std::size_t i) {
    for (const auto& t : enumerate_triples(db.groups[i].group)) {
      if (config.exclude_degenerate && is_degenerate(t)) continue;
      per_group[i].push_back({i, t.x, t.g});
    }
  });
  for (auto& ts : per_group) {
    for (auto& t : ts) db.triples.push_back(t);
  }
  return db;
}

std::vector<OrderCount> per_order_counts(const CensusDB& db) {
  std::vector<OrderCount> rows(db.max_order);
  for (std::size_t n = 1; n <= db.max_order; ++n) rows[n - 1].order = n;
  for (const auto& g : db.groups) {
    const std::size_t n = g.group->order();
    if (n >= 1 && n <= db.max_order) ++rows[n - 1].groups;
  }
  for (const auto& t : db.triples) {
    const std::size_t n = db.groups[t.group].group->order();
    if (n >= 1 && n <= db.max_order) ++rows[n - 1].triples;
  }
  return rows;
}

std::string stats_csv(const CensusDB& db) {
  std::string out = "n,f,f_t\n";
  std::size_t f = 0, ft = 0;
  for (const auto& row : per_order_counts(db)) {
    f += row.groups;
    ft += row.triples;
    out += std::to_string(row.order) + ',' + std::to_string(f) + ',' + std::to_string(ft) + '\n';
  }
  return out;
}

}  // namespace twostar
