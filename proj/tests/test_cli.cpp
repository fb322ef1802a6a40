#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gicc/cli.hpp"
#include "gicc/generators.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = gicc::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  const Result r = run(args);
  auto j = json::parse(r.out);
  CHECK(j.at("exit_status").get<int>() == r.code);
  return j;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path golden(const std::string& name) { return fs::path(GICC_GOLDEN_DIR) / name; }

/// Scratch directory removed at scope exit.
struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("gicc_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& text) const {
    const fs::path p = path / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }
};

const std::string kFig = golden("fig4a.txt").string();

}  // namespace

TEST_CASE("validate") {
  const Result ok = run({"validate", kFig, "--inner", "1,2,3,4"});
  CHECK(ok.code == 0);
  CHECK(ok.out.rfind("valid 4-GIC", 0) == 0);

  TempDir tmp;
  const auto c3 = tmp.file("c3.txt", "n=3\n1 -> 2\n2 -> 3\n3 -> 1\n");
  const Result bad = run({"validate", c3, "--inner", "1"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("i-cycle") != std::string::npos);
  CHECK(bad.out.find("<1,2,3,1>") != std::string::npos);

  const auto j = run_json({"validate", c3, "--inner", "1"});
  CHECK(j["results"]["violation"]["kind"] == "i-cycle");
  CHECK(j["results"]["violation"]["witness"] == json::array({json::array({1, 2, 3, 1})}));

  CHECK(run({"validate", (tmp.path / "missing.txt").string(), "--inner", "1"}).code == 2);
  const auto loop = tmp.file("loop.txt", "n=2\n1 -> 1\n");
  const Result parse = run({"validate", loop, "--inner", "1"});
  CHECK(parse.code == 2);
  CHECK(parse.err.find("line 2") != std::string::npos);
  CHECK(run({"validate", kFig, "--inner", "1,9"}).code == 2);
  CHECK(run({"validate", kFig}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("encode") {
  TempDir tmp;
  const auto zeros = tmp.file("zeros.txt", "t=1\n00\n00\n00\n00\n00\n00\n");
  const Result r = run({"encode", kFig, "--inner", "1,2,3,4", "--messages", zeros});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "# code: 3 symbols, t=1\nmask=1,2,3,4 payload=00\nmask=2,3,5 payload=00\n"
        "mask=3,4,6 payload=00\n");

  const Result g = run({"encode", kFig, "--inner", "1,2,3,4", "--random", "--t", "8",
                        "--seed", "7"});
  CHECK(g.code == 0);
  CHECK(g.out == slurp(golden("fig4a_encode_t8_s7.txt")));

  const auto fam = run_json({"encode", golden("family_vb_k4.txt").string(), "--inner",
                             "1,2,3,4", "--random", "--t", "8", "--seed", "1"});
  CHECK(fam["results"]["length"] == 7);
  CHECK(fam["results"]["symbols"].size() == 7);
  CHECK(fam["results"]["xor_cost_bound"] == 120);

  CHECK(run({"encode", kFig, "--inner", "1,2,3,4", "--random", "--t", "8"}).code == 2);
  CHECK(run({"encode", kFig, "--inner", "1,2,3,4"}).code == 2);
  const auto short_file = tmp.file("short.txt", "t=1\n00\n");
  CHECK(run({"encode", kFig, "--inner", "1,2,3,4", "--messages", short_file}).code == 2);
  const auto garbage = tmp.file("garbage.txt", "bits\n");
  CHECK(run({"encode", kFig, "--inner", "1,2,3,4", "--messages", garbage}).code == 2);
  CHECK(run({"encode", kFig, "--inner", "1,2", "--random", "--t", "8", "--seed", "1"})
            .code == 1);
}

TEST_CASE("verify") {
  const Result r = run({"verify", kFig, "--inner", "1,2,3,4", "--exhaustive-t1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("round-trip: pass (64 vectors)") != std::string::npos);

  TempDir tmp;
  const auto digon = tmp.file("digon.txt", "n=2\n1 -> 2\n2 -> 1\n");
  CHECK(run({"verify", digon, "--inner", "1,2", "--exhaustive-t1"}).code == 0);

  const auto k6 = tmp.file("k6.txt", gicc::serialize_digraph(gicc::gen_family_vb(6).graph));
  const auto j = run_json({"verify", k6, "--inner", "1,2,3,4,5,6", "--trials", "100",
                           "--t", "64", "--seed", "3"});
  CHECK(j["exit_status"] == 0);
  CHECK(j["results"]["vectors"] == 100);
  CHECK(j["results"]["failures"] == 0);

  const auto big = tmp.file("big.txt", gicc::serialize_digraph(gicc::gen_cycle(21)));
  CHECK(run({"verify", big, "--inner", "1,2", "--exhaustive-t1"}).code == 3);
  CHECK(run({"verify", k6, "--inner", "1,2,3,4,5,6", "--trials", "5"}).code == 2);
}

TEST_CASE("cover") {
  const auto j = run_json({"cover", kFig});
  CHECK(j["exit_status"] == 0);
  CHECK(j["results"]["length"] == 3);
  CHECK(j["results"]["parts"].size() == 1);
  CHECK(j["results"]["parts"][0]["k"] == 4);

  TempDir tmp;
  const auto big = tmp.file("big.txt", gicc::serialize_digraph(gicc::gen_random(12, 0.3, 1)));
  CHECK(run({"cover", big, "--exact"}).code == 3);
  CHECK(run({"cover", big, "--budget", "4"}).code == 2);
  const auto h = run_json({"cover", big, "--budget", "4", "--seed", "9"});
  CHECK(h["exit_status"] == 0);
  CHECK(h["results"]["exact"] == false);
}

TEST_CASE("bounds and compare") {
  TempDir tmp;
  const auto digon = tmp.file("digon.txt", "n=2\n1 -> 2\n2 -> 1\n");
  const auto b = run_json({"bounds", digon, "--minrank"});
  CHECK(b["results"]["mais"] == 1);
  CHECK(b["results"]["minrank"] == 1);

  const Result c = run({"compare", kFig});
  CHECK(c.code == 0);
  CHECK(c.out ==
        "scheme        length\ngicc          3\ncycle-cover   4\nclique-cover  5\n"
        "mais          3\nverdict       optimal-case1\ntight         yes\n");

  const auto f = run_json({"compare", golden("family_vb_k4.txt").string()});
  CHECK(f["results"]["table"] ==
        json{{"gicc", 7}, {"cycle-cover", 8}, {"clique-cover", 10}, {"mais", 7}});
  CHECK(f["results"]["verdict"] == "optimal-case1");

  const auto big = tmp.file("big.txt", gicc::serialize_digraph(gicc::gen_cycle(31)));
  CHECK(run({"bounds", big}).code == 3);
  CHECK(run({"bounds", golden("family_vb_k4.txt").string(), "--minrank"}).code == 0);
  const auto k6 = tmp.file("k6.txt", gicc::serialize_digraph(gicc::gen_clique(6)));
  CHECK(run({"bounds", k6, "--minrank"}).code == 3);
  CHECK(run({"bounds", k6}).code == 0);
}

TEST_CASE("generate") {
  CHECK(run({"generate", "family-vb", "--k", "4"}).out ==
        slurp(golden("family_vb_k4.txt")));
  CHECK(run({"generate", "random", "--n", "8", "--p", "0.3", "--seed", "42"}).out ==
        slurp(golden("random_n8_p03_s42.txt")));
  CHECK(run({"generate", "fig4a"}).out == slurp(golden("fig4a.txt")));
  CHECK(run({"generate", "clique", "--n", "2"}).out == "n=2\n1 -> 2\n2 -> 1\n");

  TempDir tmp;
  const auto out = (tmp.path / "icc.txt").string();
  const auto desc = (tmp.path / "icc.icc").string();
  const Result r =
      run({"generate", "icc", "--k", "3", "--seed", "1", "--out", out, "--icc-out", desc});
  CHECK(r.code == 0);
  CHECK(r.out.find("inner 4,8,9") != std::string::npos);
  CHECK(slurp(out) == slurp(golden("icc_k3_s1.graph.txt")));
  CHECK(slurp(desc) == slurp(golden("icc_k3_s1.icc.txt")));

  CHECK(run({"generate", "family-vb"}).code == 2);
  CHECK(run({"generate", "family-vb", "--k", "1"}).code == 2);
  CHECK(run({"generate", "random", "--n", "4", "--p", "0.5"}).code == 2);
  CHECK(run({"generate", "random", "--n", "4", "--p", "2", "--seed", "1"}).code == 2);
  CHECK(run({"generate", "cycle", "--n", "1"}).code == 2);
  CHECK(run({"generate", "wheel"}).code == 2);
}

TEST_CASE("conjecture sweep") {
  const auto j = run_json({"conjecture-sweep", "--max-n", "3"});
  CHECK(j["exit_status"] == 0);
  CHECK(j["results"]["digraphs"] == 69);
  CHECK(run({"conjecture-sweep", "--trials", "5"}).code == 2);
  CHECK(run({"conjecture-sweep", "--max-n", "6"}).code == 3);
}

TEST_CASE("machine-readable output is deterministic and matches the text") {
  const std::vector<std::vector<std::string>> invocations = {
      {"validate", kFig, "--inner", "1,2,3,4"},
      {"encode", kFig, "--inner", "1,2,3,4", "--random", "--t", "16", "--seed", "5"},
      {"verify", kFig, "--inner", "1,2,3,4", "--trials", "20", "--seed", "2"},
      {"cover", kFig},
      {"compare", kFig, "--minrank"},
      {"generate", "icc", "--k", "4", "--seed", "8"},
  };
  for (auto args : invocations) {
    auto with_json = args;
    with_json.push_back("--json");
    const Result a = run(with_json);
    const Result b = run(with_json);
    CHECK(a.out == b.out);
    CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 1);
    CHECK(run(args).out == run(args).out);
  }

  const auto c = run_json({"compare", kFig, "--minrank"});
  const std::string text = run({"compare", kFig, "--minrank"}).out;
  for (const auto& [name, value] : c["results"]["table"].items()) {
    std::string padded = name;
    padded.resize(14, ' ');
    CHECK(text.find(padded + std::to_string(value.get<int>()) + "\n") !=
          std::string::npos);
  }

  const auto e = run_json({"encode", kFig, "--inner", "1,2,3,4", "--random", "--t", "8",
                           "--seed", "7"});
  const std::string etext = slurp(golden("fig4a_encode_t8_s7.txt"));
  for (const auto& s : e["results"]["symbols"]) {
    CHECK(etext.find("payload=" + s["payload"].get<std::string>()) != std::string::npos);
  }
  CHECK(etext.find("# code: " + std::to_string(e["results"]["length"].get<int>())) !=
        std::string::npos);
}

TEST_CASE("json flag position and help") {
  CHECK(run({"--json", "cover", kFig}).out == run({"cover", kFig, "--json"}).out);
  const Result h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("validate") != std::string::npos);
}
