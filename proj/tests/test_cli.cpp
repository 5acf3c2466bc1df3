#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "cyclocover/serialize.hpp"

using namespace cyclocover;

namespace {

struct Run {
  int code = -1;
  std::string out;

  std::vector<Json> lines() const {
    std::vector<Json> v;
    std::istringstream in(out);
    for (std::string l; std::getline(in, l);) v.push_back(Json::parse(l));
    return v;
  }
};

Run run(const std::string& binary, const std::string& args) {
  Run r;
  const std::string cmd = binary + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  for (std::size_t k; (k = fread(buf.data(), 1, buf.size(), p)) > 0;) r.out.append(buf.data(), k);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Run cli(const std::string& args) { return run(CYCLOCOVER_CLI, args); }

}  // namespace

TEST_CASE("analyze") {
  const Run a = cli("analyze -n 5 -m 1,1,1,2");
  CHECK(a.code == 0);
  const Json j = Json::parse(a.out);
  CHECK(j["result"]["classes"] == Json::array({"ZERO", "AMPLE_CANDIDATE", "AMPLE_CANDIDATE", "FLAT"}));
  CHECK(a.out.back() == '\n');
  CHECK(cli("analyze -n 5 -m 1,1,1,3").code == 1);
  CHECK(run("sh -c '" CYCLOCOVER_CLI " analyze -n 5 -m 1,1,1,3 2>&1'", "").out.find("weights must sum to n") !=
        std::string::npos);
  CHECK(Json::parse(cli("analyze -n 8 -m 4,4,3,5 -j 1").out)["result"]["report"]["sigma"] == 16);
  CHECK(cli("analyze -n 5 -m 1,1").code == 1);
  CHECK(cli("analyze -n x -m 1,1,1,2").code == 1);
  CHECK(cli("analyze -n 5 -m 1,1,1,2 -j 0").code == 1);
}

TEST_CASE("certify exit codes") {
  const Run ok = cli("certify -n 5 -m 1,1,1,2 --nw 1,1,3");
  CHECK(ok.code == 0);
  CHECK(Json::parse(ok.out)["result"]["verdict"] == "COUNTEREXAMPLE");
  const Run bad = cli("certify -n 9 -m 1,1,1,6 --nw 1,1,7");
  CHECK(bad.code == 3);
  CHECK(Json::parse(bad.out)["result"]["verdict"] == "NOT_CERTIFIED");
  const Run oracle = cli("certify -n 5 -m 1,1,1,2 --nw 1,1,3 --oracle");
  CHECK(oracle.code == 0);
  bool found = false;
  const Json record = Json::parse(oracle.out);
  for (const Json& c : record["checks"])
    if (c["name"] == "oracle_agrees") found = c["passed"].get<bool>();
  CHECK(found);
  CHECK(cli("certify -n 5 -m 1,1,1,2 --nw 1,1").code == 1);
  CHECK(cli("certify -n 5 -m 1,1,1,2 --nw 1,1,4").code == 1);
  CHECK(run(CYCLOCOVER_FAULT_CLI, "certify -n 5 -m 1,1,1,2 --nw 1,1,3 --oracle --flip-oracle").code == 2);
  CHECK(cli("certify -n 5 -m 1,1,1,2 --nw 1,1,3 --oracle --flip-oracle").code == 1);
}

TEST_CASE("enumerate") {
  CHECK(cli("enumerate --n-min 5 --n-max 13 --standard-only").lines().size() == 4);
  CHECK(cli("enumerate --n-min 6 --n-max 10 --standard-only").lines().size() == 1);
  const Run all = cli("enumerate --n-min 5 --n-max 5 --all --normalize");
  CHECK(all.code == 0);
  CHECK(all.lines().size() == 3);
  CHECK(cli("enumerate --n-min 9 --n-max 9 --all").out.empty());
  CHECK(cli("enumerate --n-min 10 --n-max 5").code == 1);
  CHECK(cli("enumerate --n-min 5 --n-max 17 --all --normalize --jobs 1").out ==
        cli("enumerate --n-min 5 --n-max 17 --all --normalize --jobs 4").out);
}

TEST_CASE("sweep") {
  const Run s = cli("sweep --n-max 8");
  CHECK(s.code == 0);
  const Json r = Json::parse(s.out)["result"];
  CHECK(r["disagreements"] == 0);
  const Run five = cli("sweep --n-max 5");
  bool has_finite_n4 = false;
  const Json details = Json::parse(five.out)["result"]["details"];
  for (const Json& d : details)
    if (d["n"] == 4 && d["m"] == Json::array({1, 1, 1, 1}) && d["oracle"] == "FINITE") has_finite_n4 = true;
  CHECK(has_finite_n4);
  const Run capped = cli("sweep --n-max 12 --cap 100 --jobs 4");
  CHECK(capped.code == 0);
  CHECK(Json::parse(capped.out)["result"]["inconclusive"].get<int>() > 0);
  CHECK(cli("sweep --n-max 8 --jobs 1").out == cli("sweep --n-max 8 --jobs 3").out);
  CHECK(cli("sweep --n-max 40").code == 1);
}

TEST_CASE("shimura") {
  const auto lines = cli("shimura --n-max 7").lines();
  bool n5 = false, n7 = false;
  for (const Json& l : lines) {
    const Json& f = l["result"]["family"];
    if (f["m"] == Json::array({1, 1, 1, 2}) && f["nw"] == Json::array({1, 1, 3}))
      n5 = l["result"]["count"] == 1 && l["result"]["candidate"] == true;
    if (f["m"] == Json::array({1, 1, 1, 4}) && f["nw"] == Json::array({1, 1, 5}))
      n7 = l["result"]["count"] == 1 && l["result"]["candidate"] == true;
  }
  CHECK(n5);
  CHECK(n7);
  const Run empty = cli("shimura --n-min 8 --n-max 10");
  CHECK(empty.code == 0);
  CHECK(empty.out.empty());
}

TEST_CASE("oracle") {
  const Run o = cli("oracle -n 4 -m 1,1,1,1 -j 1");
  CHECK(o.code == 0);
  const Json r = Json::parse(o.out)["result"];
  CHECK(r["verdict"]["kind"] == "FINITE");
  CHECK(r["verdict"]["order"] == 8);
  CHECK(r["traces"]["ginf"] == "0");
  CHECK(r["form"]["signature"] == Json::array({0, 2}));
  const Run p = cli("oracle --params 2/5,4/5,8/5");
  CHECK(p.code == 0);
  CHECK(Json::parse(p.out)["result"]["verdict"]["kind"] == "INFINITE");
  CHECK(cli("oracle --params 1/2,1/3").code == 1);
}

TEST_CASE("schema and records") {
  const Run s = cli("--schema");
  CHECK(s.code == 0);
  CHECK(Json::parse(s.out)["title"] == "cyclocover output record");
  for (const std::string args : {"analyze -n 7 -m 1,1,1,4", "certify -n 7 -m 1,1,1,4 --nw 1,1,5 --oracle",
                                 "oracle -n 5 -m 1,1,1,2 -j 2"}) {
    const Run r = cli(args);
    const OutputRecord rec = parse_record(r.out);
    CHECK(serialize(rec) == r.out);
    CHECK(rec.schema_version == kSchemaVersion);
  }
  CHECK(cli("").code == 1);
}
