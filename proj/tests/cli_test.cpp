#include "wzint/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = wzint::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json strip_timings(json j) {
  if (j.is_object()) {
    j.erase("micros");
    for (auto &[key, value] : j.items())
      value = strip_timings(value);
  } else if (j.is_array()) {
    for (auto &value : j)
      value = strip_timings(value);
  }
  return j;
}

} // namespace

TEST_CASE("eval prints the exact value") {
  const Run r = cli({"eval", "--k", "3", "--m", "1", "--n", "0", "--method", "oracle"});
  CHECK(r.code == 0);
  CHECK(r.out == "3\n");

  const Run rec = cli({"eval", "--k", "3", "--m", "1", "--n", "0", "--method", "recurrence"});
  CHECK(rec.out == "3\n");

  const Run frac = cli({"eval", "--k", "4", "--m", "2", "--n", "0",
                        "--method", "corollary", "--output", "json"});
  CHECK(frac.code == 0);
  const json j = json::parse(frac.out);
  CHECK(j["value"].is_string());
  CHECK(j["method"] == "corollary");
}

TEST_CASE("check passes on a small grid and flags injected mismatches") {
  const Run ok = cli({"check", "--k", "2..3", "--m", "0..2", "--n", "0..1"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("all equal") != std::string::npos);

  const Run bad = cli({"check", "--k", "2..3", "--m", "0..2", "--n", "0..1",
                       "--inject-mismatch"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("MISMATCH") != std::string::npos);
}

TEST_CASE("check output is deterministic modulo timings") {
  const std::vector<std::string> args{"check", "--k", "2..3", "--m", "0..1",
                                      "--n", "0..1", "--output", "json"};
  const Run a = cli(args);
  const Run b = cli(args);
  CHECK(a.code == 0);
  CHECK(strip_timings(json::parse(a.out)) == strip_timings(json::parse(b.out)));

  const Run p1 = cli({"check", "--k", "2..3", "--m", "0..1", "--n", "0..1"});
  const Run p2 = cli({"check", "--k", "2..3", "--m", "0..1", "--n", "0..1"});
  CHECK(p1.out == p2.out); // plain output carries no timing at all
}

TEST_CASE("verify certificates") {
  const Run ok = cli({"verify", "--kind", "both", "--k", "2..3"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("invalid") == std::string::npos);

  const Run bad = cli({"verify", "--kind", "wz1", "--k", "2", "--tamper"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("invalid") != std::string::npos);
  CHECK(bad.out.find("residual:") != std::string::npos);

  const Run res = cli({"verify", "--kind", "wz2", "--k", "2",
                       "--show-residual", "--output", "json"});
  CHECK(res.code == 0);
  const json j = json::parse(res.out);
  CHECK(j["all_valid"] == true);
  CHECK(j["rows"][0]["residual"] == "0");
}

TEST_CASE("bench emits rows and a summary") {
  const Run r = cli({"bench", "--k", "3..4", "--m", "2..3", "--n", "1",
                     "--output", "json"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["rows"].size() == 2 * 2 * 3);
  CHECK(j["summary"]["cells_compared"] == 4);

  // budget too small: oracle cells are skipped, not fatal
  const Run s = cli({"bench", "--k", "4", "--m", "3", "--n", "1",
                     "--max-terms", "2", "--output", "json"});
  CHECK(s.code == 0);
  bool skipped = false;
  const json sj = json::parse(s.out);
  for (const auto &row : sj["rows"])
    if (row["method"] == "oracle")
      skipped = row.value("status", "ok") == "skipped";
  CHECK(skipped);
}

TEST_CASE("usage and domain errors exit 2") {
  CHECK(cli({"eval", "--k", "3", "--wat"}).code == 2);
  CHECK(cli({"nonsense"}).code == 2);
  CHECK(cli({"eval", "--k", "1", "--m", "0", "--method", "recurrence"}).code == 2);
  CHECK(cli({"eval", "--k", "1", "--m", "2", "--method", "corollary"}).code == 2);
  CHECK(cli({"check", "--k", "1..2", "--m", "0..1", "--n", "0"}).code == 2);
  CHECK(cli({"check", "--k", "2..99", "--m", "0", "--n", "0"}).code == 2);
  CHECK(cli({"verify", "--k", "7"}).code == 2);
  CHECK(cli({"eval", "--k", "5", "--m", "4", "--n", "3", "--method", "oracle",
             "--max-terms", "3"}).code == 2);

  const Run err = cli({"check", "--k", "2..0", "--m", "0", "--n", "0"});
  CHECK(err.code == 2);
  CHECK(err.err.find("--k") != std::string::npos);
}

TEST_CASE("k = 1 cells that are in domain work through the CLI") {
  const Run r = cli({"eval", "--k", "1", "--m", "2", "--n", "1",
                     "--method", "recurrence"});
  CHECK(r.code == 0);
  CHECK(r.out == "0\n");
}
