#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unistd.h>

#include "twostar/census.hpp"
#include "twostar/error.hpp"

namespace twostar {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::Io, "cannot write " + path.string());
  out << content;
  if (!out.flush()) throw Error(Errc::Io, "write failed for " + path.string());
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

unsigned long long parse_number(const std::string& s, const char* what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(Errc::MalformedInput, std::string("bad ") + what + ": '" + s + "'");
  }
  return std::stoull(s);
}

// DB files only; derived output under atlas/ is not part of the census.
std::map<std::string, std::string> existing_files(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (auto it = fs::recursive_directory_iterator(dir); it != fs::recursive_directory_iterator(); ++it) {
    const std::string rel = fs::relative(it->path(), dir).generic_string();
    if (it->is_directory() && rel == "atlas") {
      it.disable_recursion_pending();
      continue;
    }
    if (it->is_regular_file()) out[rel] = read_file(it->path());
  }
  return out;
}

}  // namespace

std::map<std::string, std::string> census_files(const CensusDB& db) {
  std::map<std::string, std::string> files;
  std::string groups_csv = "id,order,certificate_hash,provenance\n";
  std::set<std::string> hashes;
  for (const auto& g : db.groups) {
    if (!hashes.insert(g.hash).second) throw Error(Errc::Io, "certificate hash collision: " + g.hash);
    files["groups/" + g.hash + ".grp"] = to_grp1(*g.group);
    groups_csv += g.id + ',' + std::to_string(g.group->order()) + ',' + g.hash + ',' + g.provenance + '\n';
  }
  files["groups.csv"] = groups_csv;
  std::string triples;
  for (const auto& t : db.triples) {
    triples += db.groups[t.group].id + '\t' + std::to_string(t.x) + '\t' + std::to_string(t.g) + '\n';
  }
  files["triples.tsv"] = triples;
  std::string seeds;
  for (const auto& s : db.seeds) seeds += (seeds.empty() ? "" : ";") + s;
  files["meta.txt"] = "version=" + std::string(kVersion) + "\nmax_order=" + std::to_string(db.max_order) +
                      "\ncap=" + std::to_string(db.cap) +
                      "\nexclude_degenerate=" + (db.exclude_degenerate ? "1" : "0") +
                      "\nseed=" + std::to_string(db.seed) + "\nseeds=" + seeds +
                      "\ngroups=" + std::to_string(db.groups.size()) +
                      "\ntriples=" + std::to_string(db.triples.size()) + "\n";
  return files;
}

WriteOutcome write_census(const CensusDB& db, const fs::path& dir) {
  const auto files = census_files(db);
  std::error_code ec;
  if (fs::exists(dir, ec)) {
    if (!fs::is_directory(dir)) throw Error(Errc::Io, dir.string() + " exists and is not a directory");
    if (existing_files(dir) == files) return WriteOutcome::Unchanged;
    throw Error(Errc::Io, dir.string() + " holds a different census; refusing to overwrite");
  }
  fs::path target = fs::absolute(dir).lexically_normal();
  if (target.filename().empty()) target = target.parent_path();
  if (!target.parent_path().empty()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.parent_path() /
                       (target.filename().string() + ".tmp-" + std::to_string(::getpid()));
  fs::remove_all(tmp);
  try {
    fs::create_directories(tmp / "groups");
    for (const auto& [rel, content] : files) write_file(tmp / rel, content);
    fs::rename(tmp, target);
  } catch (const fs::filesystem_error& e) {
    fs::remove_all(tmp, ec);
    throw Error(Errc::Io, e.what());
  } catch (...) {
    fs::remove_all(tmp, ec);
    throw;
  }
  return WriteOutcome::Written;
}

CensusDB load_census(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw Error(Errc::Io, "no census at " + dir.string());
  CensusDB db;
  std::map<std::string, std::string> meta;
  for (const auto& line : lines_of(read_file(dir / "meta.txt"))) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(Errc::MalformedInput, "bad meta line: " + line);
    meta[line.substr(0, eq)] = line.substr(eq + 1);
  }
  for (const char* key : {"max_order", "cap", "exclude_degenerate", "seed"}) {
    if (!meta.count(key)) throw Error(Errc::MalformedInput, std::string("meta.txt lacks ") + key);
  }
  db.max_order = parse_number(meta["max_order"], "max_order");
  db.cap = parse_number(meta["cap"], "cap");
  db.exclude_degenerate = meta["exclude_degenerate"] == "1";
  db.seed = parse_number(meta["seed"], "seed");
  if (!meta["seeds"].empty()) db.seeds = split(meta["seeds"], ';');

  std::map<std::string, std::size_t> index_of;
  const auto group_lines = lines_of(read_file(dir / "groups.csv"));
  for (std::size_t i = 1; i < group_lines.size(); ++i) {
    const auto f = split(group_lines[i], ',');
    if (f.size() != 4) throw Error(Errc::MalformedInput, "bad groups.csv row: " + group_lines[i]);
    GroupTable g = parse_grp1(read_file(dir / "groups" / (f[2] + ".grp")));
    if (g.order() != parse_number(f[1], "order")) {
      throw Error(Errc::MalformedInput, "group " + f[0] + " has the wrong order");
    }
    auto form = canonical_group_certificate(g);
    if (!form || certificate_hash(form->certificate) != f[2]) {
      throw Error(Errc::MalformedInput, "group " + f[0] + " does not match its certificate hash");
    }
    index_of[f[0]] = db.groups.size();
    db.groups.push_back({f[0], share(std::move(g)), std::move(form->certificate), f[2], f[3]});
  }
  for (const auto& line : lines_of(read_file(dir / "triples.tsv"))) {
    const auto f = split(line, '\t');
    if (f.size() != 3 || !index_of.count(f[0])) throw Error(Errc::MalformedInput, "bad triple row: " + line);
    const std::size_t gi = index_of[f[0]];
    const auto x = parse_number(f[1], "x");
    const auto g = parse_number(f[2], "g");
    const std::size_t n = db.groups[gi].group->order();
    if (x >= n || g >= n) throw Error(Errc::MalformedInput, "triple index out of range: " + line);
    db.triples.push_back({gi, static_cast<Elem>(x), static_cast<Elem>(g)});
  }
  return db;
}

}  // namespace twostar
