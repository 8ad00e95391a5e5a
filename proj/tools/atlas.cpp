#include "atlas.hpp"

#include <optional>
#include <set>

#include "twostar/derived.hpp"
#include "twostar/error.hpp"
#include "twostar/maps.hpp"
#include "twostar/parallel.hpp"

namespace twostar::cli {

namespace {

struct DigraphRecord {
  std::string certificate;
  std::size_t vertices = 0;
  std::size_t arcs = 0;
  bool asymmetric = false;
  bool arc_regular = false;
  bool half_arc_transitive = false;
};

struct RegularRecord {
  Certificate certificate;
  MapInvariants invariants;
  std::optional<Elem> reflector;  // set for non-orientable regularisations
};

struct Record {
  std::optional<std::string> cayley;
  std::optional<DigraphRecord> digraph;
  PairCertificate rotary;
  MapInvariants invariants;
  std::size_t reflectors = 0;
  bool degenerate = false;
  std::vector<RegularRecord> regular;
};

Record analyse(const TwoStarTriple& t) {
  Record r;
  if (t.group->element_order(t.g) >= 3) r.cayley = graph_certificate(cayley_type1(t));
  if (t.group->mul(t.x, t.g) != t.group->mul(t.g, t.x)) {
    const Digraph d = coset_digraph(t);
    DigraphRecord dr{digraph_certificate(d), d.vertex_count, d.arcs.size(), is_asymmetric(d),
                     arc_regular(t, d), false};
    if (dr.asymmetric) dr.half_arc_transitive = half_arc_transitive_check(t, d);
    r.digraph = std::move(dr);
  }
  const OrientedRotaryMap m = rotary_from_triple(t);
  r.rotary = rotary_map_certificate(m);
  r.invariants = map_invariants(m);
  r.degenerate = is_degenerate_map(m);
  if (r.invariants.reflexible) {
    const RegularMap rm = orientable_regularisation(m);
    r.regular.push_back({regular_map_certificate(rm), regular_map_invariants(rm), std::nullopt});
  }
  const auto reflectors = antipodal_reflectors(m);
  r.reflectors = reflectors.size();
  for (Elem b : reflectors) {
    try {
      const RegularMap rm = nonorientable_regularisation(m, b);
      r.regular.push_back({regular_map_certificate(rm), regular_map_invariants(rm), b});
    } catch (const Error& e) {
      // R b or b S is trivial: no regular map for this reflector.
      if (e.code() != Errc::NotRegularMap) throw;
    }
  }
  return r;
}

std::string flag(bool b) { return b ? "1" : "0"; }

std::string invariant_columns(const MapInvariants& inv) {
  return std::to_string(inv.face_length) + ',' + std::to_string(inv.valence) + ',' +
         std::to_string(inv.V) + ',' + std::to_string(inv.E) + ',' + std::to_string(inv.F) + ',' +
         std::to_string(inv.euler) + ',' + std::to_string(inv.genus);
}

}  // namespace

std::string rotary_id(const CensusDB& db, const CensusTriple& t) {
  return db.groups[t.group].id + ':' + std::to_string(t.x) + ':' + std::to_string(t.g);
}

Atlas build_atlas(const CensusDB& db, const AtlasOptions& options) {
  std::vector<Record> records(db.triples.size());
  parallel_for(db.triples.size(), options.workers, [&](std::size_t i) {
    const CensusTriple& ct = db.triples[i];
    records[i] = analyse(make_triple(db.groups[ct.group].group, ct.x, ct.g));
  });

  Atlas atlas;
  AtlasSummary& s = atlas.summary;
  std::string cayley = "id,vertices,group,x,g,certificate_hash\n";
  std::string digraphs =
      "id,vertices,arcs,group,x,g,asymmetric,arc_regular,half_arc_transitive,certificate_hash\n";
  std::string rotary = "id,order,face_length,valence,V,E,F,euler,genus,reflexible,n_antipodal_reflectors\n";
  std::string regular = "id,order,face_length,valence,V,E,F,euler,genus,orientable,source,reflector\n";
  std::set<std::string> seen_graphs, seen_digraphs;
  std::set<Certificate> seen_rotary, seen_regular;

  for (std::size_t i = 0; i < records.size(); ++i) {
    const CensusTriple& ct = db.triples[i];
    const Record& r = records[i];
    const std::string source = db.groups[ct.group].id + ',' + std::to_string(ct.x) + ',' + std::to_string(ct.g);
    if (r.cayley && seen_graphs.insert(*r.cayley).second) {
      ++s.cayley_graphs;
      cayley += std::to_string(s.cayley_graphs) + ',' + std::to_string(db.groups[ct.group].group->order()) +
                ',' + source + ',' + fnv1a_hex(*r.cayley) + '\n';
    }
    if (r.digraph && seen_digraphs.insert(r.digraph->certificate).second) {
      const DigraphRecord& d = *r.digraph;
      ++s.digraphs;
      s.asymmetric_digraphs += d.asymmetric;
      s.half_arc_transitive += d.half_arc_transitive;
      digraphs += std::to_string(s.digraphs) + ',' + std::to_string(d.vertices) + ',' + std::to_string(d.arcs) +
                  ',' + source + ',' + flag(d.asymmetric) + ',' + flag(d.arc_regular) + ',' +
                  (d.asymmetric ? flag(d.half_arc_transitive) : "") + ',' + fnv1a_hex(d.certificate) + '\n';
    }
    if (options.exclude_degenerate_maps && r.degenerate) continue;
    if (!seen_rotary.insert(r.rotary).second) continue;
    const std::string id = rotary_id(db, ct);
    ++s.rotary_maps;
    (r.invariants.reflexible ? s.reflexible : s.chiral) += 1;
    rotary += id + ',' + std::to_string(db.groups[ct.group].group->order()) + ',' +
              invariant_columns(r.invariants) + ',' + flag(r.invariants.reflexible) + ',' +
              std::to_string(r.reflectors) + '\n';
    for (const RegularRecord& rr : r.regular) {
      if (!seen_regular.insert(rr.certificate).second) continue;
      ++s.regular_maps;
      (rr.invariants.orientable ? s.orientable : s.nonorientable) += 1;
      const std::size_t order = rr.certificate.values.size() / 3;
      regular += id + (rr.reflector ? "/b" + std::to_string(*rr.reflector) : std::string("/o")) + ',' +
                 std::to_string(order) + ',' + invariant_columns(rr.invariants) + ',' +
                 flag(rr.invariants.orientable) + ',' + id + ',' +
                 (rr.reflector ? std::to_string(*rr.reflector) : "") + '\n';
    }
  }
  atlas.files["cayley.csv"] = std::move(cayley);
  atlas.files["digraphs.csv"] = std::move(digraphs);
  atlas.files["rotary_atlas.csv"] = std::move(rotary);
  atlas.files["regular_maps.csv"] = std::move(regular);
  std::string summary;
  for (const auto& line : summary_lines(s)) summary += line + '\n';
  atlas.files["summary.txt"] = std::move(summary);
  return atlas;
}

std::vector<std::string> summary_lines(const AtlasSummary& s) {
  return {
      "cayley graphs: " + std::to_string(s.cayley_graphs),
      "coset digraphs: " + std::to_string(s.digraphs) + " (asymmetric " + std::to_string(s.asymmetric_digraphs) +
          ", half-arc-transitive " + std::to_string(s.half_arc_transitive) + ")",
      "rotary maps: " + std::to_string(s.rotary_maps) + " (reflexible " + std::to_string(s.reflexible) +
          ", chiral " + std::to_string(s.chiral) + ")",
      "regular maps: " + std::to_string(s.regular_maps) + " (orientable " + std::to_string(s.orientable) +
          ", non-orientable " + std::to_string(s.nonorientable) + ")",
  };
}

}  // namespace twostar::cli
