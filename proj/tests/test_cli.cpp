#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "twostar/census.hpp"

namespace twostar::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::path(::testing::TempDir()) / ("twostar_cli_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string read(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::vector<std::string> row;
    std::string field;
    std::istringstream fields(line);
    while (std::getline(fields, field, ',')) row.push_back(field);
    if (!line.empty() && line.back() == ',') row.emplace_back();
    rows.push_back(row);
  }
  return rows;
}

TEST(Cli, CensusStatsVerify) {
  const fs::path db = fresh_dir("twelve");
  EXPECT_EQ(run({"census", "--max-order", "12", "--out", db.string(), "--workers", "2"}).code, kExitOk);
  const Outcome stats = run({"stats", "--db", db.string()});
  EXPECT_EQ(stats.code, kExitOk);
  EXPECT_NE(stats.out.find("\n12,14,21\n"), std::string::npos);
  EXPECT_NE(stats.out.find("\n2,1,2\n"), std::string::npos);
  const Outcome verify = run({"verify", "--db", db.string()});
  EXPECT_EQ(verify.code, kExitOk) << verify.err;

  const Outcome again = run({"census", "--max-order", "12", "--out", db.string()});
  EXPECT_EQ(again.code, kExitOk);
  EXPECT_NE(again.out.find("unchanged"), std::string::npos);
  EXPECT_EQ(run({"census", "--max-order", "10", "--out", db.string()}).code, kExitFailure);

  const fs::path file = db / "stats.csv";
  EXPECT_EQ(run({"stats", "--db", db.string(), "--out", file.string()}).code, kExitOk);
  EXPECT_EQ(read(file), stats.out);
  fs::remove_all(db);
}

TEST(Cli, VerifyDetectsDeletedTriple) {
  const fs::path db = fresh_dir("fault");
  ASSERT_EQ(run({"census", "--max-order", "12", "--out", db.string()}).code, kExitOk);
  std::string triples = read(db / "triples.tsv");
  // Drop the last row: a triple of order 12.
  triples.pop_back();
  triples = triples.substr(0, triples.rfind('\n') + 1);
  std::ofstream(db / "triples.tsv", std::ios::trunc | std::ios::binary) << triples;
  const Outcome verify = run({"verify", "--db", db.string()});
  EXPECT_EQ(verify.code, kExitFailure);
  EXPECT_NE(verify.err.find("mismatch at order 12"), std::string::npos) << verify.err;
  EXPECT_NE(verify.err.find("triple only in oracle"), std::string::npos);
  fs::remove_all(db);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"verify", "--db", (fs::path(::testing::TempDir()) / "no_such_db").string()}).code, kExitUsage);
  EXPECT_EQ(run({"stats", "--db", (fs::path(::testing::TempDir()) / "no_such_db").string()}).code, kExitUsage);
  EXPECT_EQ(run({"census", "--max-order", "10000", "--out", fresh_dir("cap").string()}).code, kExitCap);
  EXPECT_EQ(run({"census", "--max-order", "200", "--allow-stretch", "--out", fresh_dir("cap").string(),
                 "--workers", "0"}).code,
            kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"census", "--max-order", "x", "--out", "y"}).code, kExitUsage);
  EXPECT_EQ(run({"oracle", "--max-order", "50"}).code, kExitCap);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
  EXPECT_FALSE(fs::exists(fresh_dir("cap")));
}

TEST(Cli, OracleTable) {
  const Outcome r = run({"oracle", "--max-order", "6"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "n,groups,triples\n1,0,0\n2,1,2\n3,0,0\n4,2,2\n5,0,0\n6,2,4\n");
  const Outcome nd = run({"oracle", "--max-order", "2", "--exclude-degenerate"});
  EXPECT_EQ(nd.out, "n,groups,triples\n1,0,0\n2,1,1\n");
}

TEST(Cli, AtlasOverTwelve) {
  const fs::path db = fresh_dir("atlas");
  ASSERT_EQ(run({"census", "--max-order", "12", "--out", db.string()}).code, kExitOk);
  const Outcome atlas = run({"atlas", "--db", db.string()});
  ASSERT_EQ(atlas.code, kExitOk) << atlas.err;
  for (const char* f : {"cayley.csv", "digraphs.csv", "rotary_atlas.csv", "regular_maps.csv", "summary.txt"}) {
    EXPECT_TRUE(fs::exists(db / "atlas" / f)) << f;
  }
  EXPECT_EQ(read(db / "atlas" / "summary.txt"), atlas.out);

  // id,order,face_length,valence,V,E,F,euler,genus,reflexible,n_antipodal_reflectors
  const auto rotary = csv_rows(read(db / "atlas" / "rotary_atlas.csv"));
  EXPECT_EQ(rotary.size(), 21U);  // one rotary map per triple
  std::size_t reflexible = 0, chiral = 0;
  bool tetrahedron = false;
  for (const auto& row : rotary) {
    ASSERT_EQ(row.size(), 11U);
    (row[9] == "1" ? reflexible : chiral) += 1;
    if (row[1] == "12" && row[2] == "3" && row[3] == "3") {
      tetrahedron = row[4] == "4" && row[5] == "6" && row[6] == "4" && row[7] == "2" && row[8] == "0" &&
                    row[9] == "1";
    }
  }
  EXPECT_TRUE(tetrahedron);
  EXPECT_EQ(reflexible + chiral, rotary.size());
  EXPECT_NE(atlas.out.find("rotary maps: 21 (reflexible " + std::to_string(reflexible) + ", chiral " +
                           std::to_string(chiral) + ")"),
            std::string::npos);

  // id,order,face_length,valence,V,E,F,euler,genus,orientable,source,reflector
  const auto regular = csv_rows(read(db / "atlas" / "regular_maps.csv"));
  std::size_t orientable = 0;
  for (const auto& row : regular) {
    ASSERT_EQ(row.size(), 12U);
    orientable += row[9] == "1";
    EXPECT_EQ(row[9] == "1", row[11].empty());
  }
  EXPECT_EQ(orientable, reflexible);

  const auto cayley = csv_rows(read(db / "atlas" / "cayley.csv"));
  std::set<std::string> hashes;
  for (const auto& row : cayley) EXPECT_TRUE(hashes.insert(row.back()).second);

  // Degenerate maps dropped on request.
  const fs::path out = fresh_dir("atlas_nd");
  ASSERT_EQ(run({"atlas", "--db", db.string(), "--out", out.string(), "--exclude-degenerate"}).code, kExitOk);
  const auto nd = csv_rows(read(out / "rotary_atlas.csv"));
  EXPECT_LT(nd.size(), rotary.size());
  for (const auto& row : nd) {
    EXPECT_GT(std::stoi(row[2]), 2);
    EXPECT_GT(std::stoi(row[3]), 2);
  }
  // The atlas inside the DB does not disturb census idempotence.
  EXPECT_EQ(run({"census", "--max-order", "12", "--out", db.string()}).code, kExitOk);
  fs::remove_all(db);
  fs::remove_all(out);
}

TEST(Cli, AtlasIsDeterministicAcrossWorkers) {
  const fs::path a = fresh_dir("det_a"), b = fresh_dir("det_b");
  ASSERT_EQ(run({"census", "--max-order", "30", "--out", a.string(), "--workers", "1"}).code, kExitOk);
  ASSERT_EQ(run({"census", "--max-order", "30", "--out", b.string(), "--workers", "3"}).code, kExitOk);
  ASSERT_EQ(run({"atlas", "--db", a.string(), "--workers", "1"}).code, kExitOk);
  ASSERT_EQ(run({"atlas", "--db", b.string(), "--workers", "3"}).code, kExitOk);
  std::size_t files = 0;
  for (const auto& entry : fs::recursive_directory_iterator(a)) {
    if (!entry.is_regular_file()) continue;
    ++files;
    const fs::path rel = fs::relative(entry.path(), a);
    EXPECT_EQ(read(entry.path()), read(b / rel)) << rel;
  }
  EXPECT_GT(files, 5U);
  fs::remove_all(a);
  fs::remove_all(b);
}

}  // namespace
}  // namespace twostar::cli
