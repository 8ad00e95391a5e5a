#pragma once

#include <map>
#include <string>
#include <vector>

#include "twostar/census.hpp"

namespace twostar::cli {

struct AtlasOptions {
  unsigned workers = 1;
  bool exclude_degenerate_maps = false;  // drop maps of face length or valence <= 2
};

struct AtlasSummary {
  std::size_t cayley_graphs = 0;
  std::size_t digraphs = 0;
  std::size_t asymmetric_digraphs = 0;
  std::size_t half_arc_transitive = 0;
  std::size_t rotary_maps = 0;
  std::size_t reflexible = 0;
  std::size_t chiral = 0;
  std::size_t regular_maps = 0;
  std::size_t orientable = 0;
  std::size_t nonorientable = 0;
};

struct Atlas {
  std::map<std::string, std::string> files;  // file name -> CSV content
  AtlasSummary summary;
};

std::string rotary_id(const CensusDB& db, const CensusTriple& t);

/// Graphs, digraphs and maps of every census triple, each deduplicated by its certificate.
Atlas build_atlas(const CensusDB& db, const AtlasOptions& options = {});

std::vector<std::string> summary_lines(const AtlasSummary& s);

}  // namespace twostar::cli
