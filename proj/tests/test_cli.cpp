#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "starcode/cli.hpp"
#include "starcode/codes.hpp"
#include "starcode/group.hpp"
#include "starcode/perm_file.hpp"
#include "starcode/projective.hpp"

using namespace starcode;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("starcode-cli-test-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string path_of(const std::string& name) {
  return (temp_dir() / name).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

}  // namespace

TEST_CASE("construct stab1 round-trips byte-identically") {
  const std::string path = path_of("stab1.perm");
  const RunResult r = run({"construct", "stab1", "--n", "6", "-o", path});
  CHECK(r.code == kExitTrue);
  CHECK(r.out.find("report: construct-stab1") == 0);

  const Code parsed = read_perm_file(path);
  CHECK(parsed == stab1(6));
  CHECK(to_perm_text(parsed) == slurp(path));
}

TEST_CASE("construct without --out streams the perm text") {
  const RunResult r = run({"construct", "stab1", "--n", "3"});
  CHECK(r.code == kExitTrue);
  CHECK(r.out == "degree 3\n1 2 3\n1 3 2\n");
}

TEST_CASE("construct pgl then verify perfect") {
  const std::string path = path_of("pgl.perm");
  CHECK(run({"construct", "pgl", "--q", "5", "-o", path}).code == kExitTrue);
  CHECK(read_perm_file(path) == pgl2(5));

  const RunResult v = run({"verify", "perfect", "-i", path});
  CHECK(v.code == kExitTrue);
  CHECK(v.out.find("result: true") != std::string::npos);
  CHECK(v.out.find("input-digest: fnv64:") != std::string::npos);
}

TEST_CASE("verify perfect fails on a punctured code") {
  std::vector<Rank> ranks = stab1(6).ranks();
  ranks.pop_back();
  const std::string path = path_of("punctured.perm");
  write_perm_file(path, Code(6, std::move(ranks)));
  const RunResult r = run({"verify", "perfect", "-i", path});
  CHECK(r.code == kExitFalse);
  CHECK(r.out.find("result: false") != std::string::npos);
}

TEST_CASE("malformed files produce line-numbered diagnostics and exit 2") {
  const std::string path = path_of("malformed.perm");
  spit(path, "# comment\ndegree 3\n1 2 3\n1 2\n");
  const RunResult r = run({"verify", "perfect", "-i", path});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find(path + ":4:") != std::string::npos);

  spit(path, "degree 3\n1 2 3\n1 2 3\n");
  const RunResult dup = run({"verify", "perfect", "-i", path});
  CHECK(dup.code == kExitUsage);
  CHECK(dup.err.find("duplicate") != std::string::npos);

  spit(path, "1 2 3\n");
  CHECK(run({"verify", "perfect", "-i", path}).code == kExitUsage);
}

TEST_CASE("verify bitrade") {
  const std::string stab_path = path_of("vb-stab.perm");
  const std::string coset_path = path_of("vb-coset.perm");
  write_perm_file(stab_path, stab1(6));
  write_perm_file(coset_path,
                  coset_code(stab1(6), Permutation::transposition(6, 1, 6),
                             Side::right));
  const RunResult good =
      run({"verify", "bitrade", "-i", stab_path, "-j", coset_path});
  CHECK(good.code == kExitTrue);

  const std::string pair_path = path_of("vb-pair.perm");
  write_perm_file(pair_path,
                  Code(6, {Permutation::transposition(6, 1, 2).rank()}));
  const std::string id_path = path_of("vb-id.perm");
  write_perm_file(id_path, Code(6, {0}));
  const RunResult bad = run({"verify", "bitrade", "-i", id_path, "-j", pair_path});
  CHECK(bad.code == kExitFalse);

  // Overlapping halves are rejected structurally unless relaxed.
  const RunResult overlap =
      run({"verify", "bitrade", "-i", stab_path, "-j", stab_path});
  CHECK(overlap.code == kExitFalse);
  CHECK(overlap.out.find("reason:") != std::string::npos);
}

TEST_CASE("classify codes report") {
  const RunResult r = run({"classify", "codes", "--n", "4"});
  CHECK(r.code == kExitTrue);
  CHECK(r.out.find("solutions: 1") != std::string::npos);
  CHECK(r.out.find("classes: 1") != std::string::npos);
  CHECK(r.out.find("complete: true") != std::string::npos);

  const RunResult j = run({"--json", "classify", "codes", "--n", "4"});
  CHECK(j.code == kExitTrue);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["report"] == "classify-codes");
  CHECK(doc["classes"] == 1);
  CHECK(doc["class-1-size"] == 6);
  CHECK(doc["class-1-stab1-class"] == true);
}

TEST_CASE("reports are byte-identical across runs") {
  const RunResult a = run({"classify", "codes", "--n", "4"});
  const RunResult b = run({"classify", "codes", "--n", "4"});
  CHECK(a.out == b.out);

  const std::string path = path_of("stable.perm");
  write_perm_file(path, stab1(5));
  const RunResult v1 = run({"verify", "perfect", "-i", path});
  const RunResult v2 = run({"verify", "perfect", "-i", path});
  CHECK(v1.out == v2.out);
}

TEST_CASE("search bitrades completes at n = 4 and respects tiny budgets") {
  const RunResult r = run({"search", "bitrades", "--n", "4"});
  CHECK(r.code == kExitTrue);
  CHECK(r.out.find("spectrum: 6") != std::string::npos);
  CHECK(r.out.find("complete: true") != std::string::npos);

  const RunResult strapped =
      run({"search", "bitrades", "--n", "6", "--budget-seconds", "0.01"});
  CHECK(strapped.code == kExitInconclusive);
  CHECK(strapped.out.find("complete: false") != std::string::npos);
  CHECK(strapped.out.find("96 100 120") != std::string::npos);
}

TEST_CASE("search bitrades writes representatives") {
  const std::string prefix = path_of("reps");
  const RunResult r = run({"search", "bitrades", "--n", "4", "-o", prefix});
  CHECK(r.code == kExitTrue);
  const Code t0 = read_perm_file(prefix + "-vol6-t0.perm");
  const Code t1 = read_perm_file(prefix + "-vol6-t1.perm");
  CHECK(t0.size() == 6);
  CHECK(verify_bitrade(Bitrade(t0, t1)));
}

TEST_CASE("embed command") {
  const std::string t0_path = path_of("embed-t0.perm");
  const std::string t1_path = path_of("embed-t1.perm");
  const Bitrade t = bitrade_from_codes(stab1(6), pgl2(5));
  write_perm_file(t0_path, t.t0);
  write_perm_file(t1_path, t.t1);

  const std::string out_path = path_of("embed-code.perm");
  const RunResult r =
      run({"embed", "-i", t0_path, "-j", t1_path, "-o", out_path});
  CHECK(r.code == kExitTrue);
  CHECK(r.out.find("status: embedded") != std::string::npos);
  CHECK(is_perfect(read_perm_file(out_path)));

  const RunResult strapped = run(
      {"embed", "-i", t0_path, "-j", t1_path, "--budget-seconds", "1e-9"});
  CHECK(strapped.code == kExitInconclusive);
}

TEST_CASE("distance command") {
  const RunResult one = run({"distance", "2 1 3 4 5 6", "1 2 3 4 5 6"});
  CHECK(one.code == kExitTrue);
  CHECK(one.out.find("distance: 1") != std::string::npos);

  const RunResult three = run({"distance", "1 3 2 4 5 6", "1 2 3 4 5 6"});
  CHECK(three.out.find("distance: 3") != std::string::npos);

  CHECK(run({"distance", "2 1", "1 2 3"}).code == kExitUsage);
  CHECK(run({"distance", "1 1 2", "1 2 3"}).code == kExitUsage);
}

TEST_CASE("info command") {
  const std::string path = path_of("info-pgl.perm");
  write_perm_file(path, pgl2(5));
  const RunResult r = run({"info", "-i", path});
  CHECK(r.code == kExitTrue);
  CHECK(r.out.find("degree: 6") != std::string::npos);
  CHECK(r.out.find("size: 120") != std::string::npos);
  CHECK(r.out.find("perfect: true") != std::string::npos);
  CHECK(r.out.find("stab1-class: false") != std::string::npos);
  CHECK(r.out.find("witness-a:") != std::string::npos);

  const std::string stab_path = path_of("info-stab.perm");
  write_perm_file(stab_path, stab1(6));
  const RunResult s = run({"info", "-i", stab_path});
  CHECK(s.out.find("stab1-class: true") != std::string::npos);
  CHECK(s.out.find("stab1-class-point: 1") != std::string::npos);
}

TEST_CASE("intersect command") {
  const std::string a = path_of("int-stab.perm");
  const std::string b = path_of("int-pgl.perm");
  write_perm_file(a, stab1(6));
  write_perm_file(b, pgl2(5));
  const RunResult r = run({"intersect", "-i", a, "-j", b});
  CHECK(r.code == kExitTrue);
  CHECK(r.out.find("common: 20") != std::string::npos);
}

TEST_CASE("construct lift embeds one degree up") {
  const std::string pgl_path = path_of("lift-pgl.perm");
  write_perm_file(pgl_path, pgl2(5));
  const std::string out_path = path_of("lift-out.perm");
  const RunResult r = run({"construct", "lift", "-i", pgl_path, "-o", out_path});
  CHECK(r.code == kExitTrue);
  const Code lifted = read_perm_file(out_path);
  CHECK(lifted.degree() == 7);
  CHECK(lifted.size() == 720);
  CHECK(is_perfect(lifted));
}

TEST_CASE("construct coset and conjugate") {
  const std::string pgl_path = path_of("cc-pgl.perm");
  write_perm_file(pgl_path, pgl2(5));

  const std::string left_path = path_of("cc-left.perm");
  const RunResult left = run({"construct", "coset", "-i", pgl_path, "--by",
                              "2 1 3 4 5 6", "--side", "left", "-o", left_path});
  CHECK(left.code == kExitTrue);
  CHECK(read_perm_file(left_path) ==
        coset_code(pgl2(5), Permutation::transposition(6, 1, 2), Side::left));

  const std::string conj_path = path_of("cc-conj.perm");
  const RunResult conj = run({"construct", "conjugate", "-i", pgl_path, "--by",
                              "2 1 3 4 5 6", "-o", conj_path});
  CHECK(conj.code == kExitTrue);
  CHECK(read_perm_file(conj_path) ==
        conjugate_subgroup(pgl2(5), Permutation::transposition(6, 1, 2)));
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"bogus"}).code == kExitUsage);
  CHECK(run({"construct"}).code == kExitUsage);
  CHECK(run({"verify", "perfect"}).code == kExitUsage);  // missing -i
  CHECK(run({"construct", "pgl", "--q", "6"}).code == kExitUsage);
  CHECK(run({"construct", "coset", "-i", "nope.perm", "--by", "2 1", "--side",
             "up"})
            .code == kExitUsage);
}

TEST_CASE("missing input file exits 2") {
  const RunResult r = run({"verify", "perfect", "-i", path_of("nothere.perm")});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("cannot open") != std::string::npos);
}
