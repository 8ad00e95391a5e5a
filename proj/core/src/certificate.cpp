#include "twostar/certificate.hpp"

#include <algorithm>
#include <cstdio>

#include "twostar/error.hpp"

namespace twostar {

namespace {

constexpr Elem kUnlabeled = ~Elem{0};

enum class Cmp { Less, Equal, Greater, NotGenerating };

struct Workspace {
  std::vector<Elem> label_of;
  std::vector<Elem> element_at;
  std::vector<Elem> values;
};

// BFS relabeling that streams certificate values and stops as soon as the
// outcome against `bound` is decided. With `exact`, a smaller prefix also
// stops the run; otherwise a smaller result is completed into ws.values.
Cmp bfs_run(const GroupTable& g, std::span<const Elem> gens, const std::vector<Elem>* bound,
            bool exact, Workspace& ws) {
  const std::size_t n = g.order();
  const std::size_t k = gens.size();
  ws.label_of.assign(n, kUnlabeled);
  ws.element_at.clear();
  ws.values.clear();
  ws.label_of[0] = 0;
  ws.element_at.push_back(0);
  bool deciding = bound != nullptr;
  Cmp state = Cmp::Equal;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < ws.element_at.size(); ++i) {
    const Elem e = ws.element_at[i];
    for (std::size_t j = 0; j < k; ++j, ++pos) {
      const Elem prod = g.mul(e, gens[j]);
      Elem lab = ws.label_of[prod];
      if (lab == kUnlabeled) {
        lab = static_cast<Elem>(ws.element_at.size());
        ws.label_of[prod] = lab;
        ws.element_at.push_back(prod);
      }
      ws.values.push_back(lab);
      if (deciding) {
        const Elem ref = (*bound)[pos];
        if (lab > ref) return Cmp::Greater;
        if (lab < ref) {
          if (exact) return Cmp::Less;
          state = Cmp::Less;
          deciding = false;
        }
      }
    }
  }
  if (ws.element_at.size() != n) return Cmp::NotGenerating;
  return bound ? state : Cmp::Less;
}

Workspace& local_workspace() {
  thread_local Workspace ws;
  return ws;
}

}  // namespace

std::string Certificate::bytes() const {
  std::string out;
  out.reserve(values.size() * 4);
  for (Elem v : values) {
    out.push_back(static_cast<char>((v >> 24) & 0xff));
    out.push_back(static_cast<char>((v >> 16) & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
    out.push_back(static_cast<char>(v & 0xff));
  }
  return out;
}

std::optional<BfsLabeling> bfs_labeling(const GroupTable& g, std::span<const Elem> gens) {
  Workspace& ws = local_workspace();
  if (bfs_run(g, gens, nullptr, false, ws) == Cmp::NotGenerating) return std::nullopt;
  return BfsLabeling{ws.label_of, ws.element_at};
}

std::optional<Certificate> generator_certificate(const GroupTable& g, std::span<const Elem> gens) {
  Workspace& ws = local_workspace();
  if (bfs_run(g, gens, nullptr, false, ws) == Cmp::NotGenerating) return std::nullopt;
  return Certificate{ws.values};
}

PairCertificate pair_certificate(const GroupTable& g, Elem s, Elem t) {
  const Elem gens[] = {s, t};
  auto cert = generator_certificate(g, gens);
  if (!cert) throw Error(Errc::NotGenerating, "pair does not generate the group");
  return *cert;
}

std::optional<std::vector<Elem>> align_generators(const GroupTable& g,
                                                  std::span<const Elem> gens_from,
                                                  std::span<const Elem> gens_to) {
  if (gens_from.size() != gens_to.size()) return std::nullopt;
  Workspace& ws = local_workspace();
  Workspace ref;
  if (bfs_run(g, gens_from, nullptr, false, ref) == Cmp::NotGenerating) return std::nullopt;
  if (bfs_run(g, gens_to, &ref.values, true, ws) != Cmp::Equal) return std::nullopt;
  std::vector<Elem> phi(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) phi[ref.element_at[i]] = ws.element_at[i];
  return phi;
}

std::vector<std::vector<Elem>> automorphisms_from_pair(const GroupTable& g, Elem s, Elem t) {
  const Elem gens[] = {s, t};
  Workspace ref;
  if (bfs_run(g, gens, nullptr, false, ref) == Cmp::NotGenerating) {
    throw Error(Errc::NotGenerating, "pair does not generate the group");
  }
  const std::size_t n = g.order();
  Workspace ws;
  std::vector<std::vector<Elem>> autos;
  for (Elem s2 = 0; s2 < n; ++s2) {
    if (g.element_order(s2) != g.element_order(s)) continue;
    for (Elem t2 = 0; t2 < n; ++t2) {
      if (g.element_order(t2) != g.element_order(t)) continue;
      const Elem cand[] = {s2, t2};
      if (bfs_run(g, cand, &ref.values, true, ws) != Cmp::Equal) continue;
      std::vector<Elem> phi(n);
      for (std::size_t i = 0; i < n; ++i) phi[ref.element_at[i]] = ws.element_at[i];
      autos.push_back(std::move(phi));
    }
  }
  std::sort(autos.begin(), autos.end());
  return autos;
}

std::optional<CanonicalForm> canonical_group_certificate(const GroupTable& g) {
  const std::size_t n = g.order();
  Workspace ws;
  std::optional<CanonicalForm> best;
  for (Elem x = 0; x < n; ++x) {
    if (g.element_order(x) != 2) continue;
    for (Elem y = 0; y < n; ++y) {
      const Elem gens[] = {x, y};
      const Cmp c = bfs_run(g, gens, best ? &best->certificate.values : nullptr, false, ws);
      if (c == Cmp::Less) best = CanonicalForm{Certificate{ws.values}, x, y};
    }
  }
  return best;
}

GroupTable canonical_relabel(const GroupTable& g, const CanonicalForm& form) {
  const Elem gens[] = {form.x, form.g};
  auto lab = bfs_labeling(g, gens);
  if (!lab) throw Error(Errc::NotGenerating, "canonical pair does not generate");
  return relabel(g, lab->label_of);
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string certificate_hash(const Certificate& c) { return fnv1a_hex(c.bytes()); }

}  // namespace twostar
