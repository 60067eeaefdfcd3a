#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "generators.hpp"
#include "torblocks/cli.hpp"

using namespace torblocks;
using json_io::Json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

Json result(std::vector<std::string> args, const std::string& stdin_text = "") {
  const auto o = run_cli(std::move(args), stdin_text);
  EXPECT_EQ(o.code, 0) << o.err;
  return Json::parse(o.out);
}

std::vector<std::filesystem::path> corpus() {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(TORBLOCKS_CORPUS_DIR)) {
    if (e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::string command_of(const std::filesystem::path& p) {
  const auto stem = p.stem().string();
  return stem.substr(0, stem.find('-'));
}

}  // namespace

TEST(Cli, GammaAndJ0) {
  EXPECT_EQ(result({"gamma", "A2"}), Json::parse(R"({"invariant_factors": [3], "j0": [1, 2]})"));
  EXPECT_EQ(result({"gamma"}, R"({"type": "D4"})"), Json::parse(R"({"invariant_factors": [2, 2], "j0": [1, 3, 4]})"));
  EXPECT_EQ(result({"j0", "E8"}), Json::parse(R"({"j0": []})"));
}

TEST(Cli, TypeExample) {
  const auto r = result({"type"}, R"({"xi": {"type": "A2", "k": 2, "entries": [
      {"point": ["3"], "value": {"level": 1, "class": "w1"}}]}})");
  EXPECT_EQ(r, Json::parse(R"({"type": "II"})"));
  const auto e8 = result({"type"}, R"({"xi": {"type": "E8", "k": 1, "entries": [
      {"point": [], "value": {"level": 1, "class": "0"}}]}})");
  EXPECT_EQ(e8["type"], "II");
  ASSERT_TRUE(e8.contains("diagnostics"));
  EXPECT_EQ(e8["diagnostics"][0]["code"], kDiagTypeDiscrepancy);
}

TEST(Cli, GcdForm) {
  EXPECT_EQ(result({"gcdform"}, "[4, 6, 0]"), Json::parse(R"({"m": 2, "normal": [2, 0, 0]})"));
  EXPECT_EQ(result({"gcdform"}, R"({"central": [0, 0]})"), Json::parse(R"({"m": 0, "normal": [0, 0]})"));
}

TEST(Cli, RationalsAreCanonical) {
  const auto r = result({"normalize"}, R"({"weight": {"type": "A1", "central": [3, 0],
      "fin": [1], "deltas": ["4/6", "-7"]}, "m": 3})");
  EXPECT_EQ(r["weight"]["deltas"], Json::parse(R"(["2/3", "2"])"));
}

TEST(Cli, ValidationErrorsExitTwo) {
  const std::vector<std::pair<std::vector<std::string>, std::string>> bad{
      {{"gamma", "B2"}, ""},
      {{"nosuch"}, "{}"},
      {{"gcdform"}, "[1, 2"},
      {{"gcdform"}, R"({"central": [1], "extra": 1})"},
      {{"realizations"}, R"({"type": "A2", "level": 0, "class": "w1"})"},
      {{"chi"}, R"({"pi": {"type": "A2", "k": 2, "entries": [{"point": ["1"], "weight": {"level": 0, "fin": [0, 0]}}]}})"},
      {{"chi"}, R"({"pi": {"type": "A2", "k": 2, "entries": [{"point": ["0"], "weight": {"level": 1, "fin": [0, 0]}}]}})"},
      {{"gpi"}, R"({"pi": {"type": "A2", "k": 2, "entries": []}})"},
      {{"blockid"}, R"({"pi": {"type": "A1", "k": 2, "entries": [{"point": ["1"], "weight": {"level": 1, "fin": [1]}}]}, "g": [1, 2]})"},
      {{"translate"}, R"({"weight": {"type": "A1", "central": [1], "fin": [0]}, "root": [3], "loop": 1, "m": 1})"},
      {{"level0block"}, R"({"xi": {"type": "A2", "k": 2, "entries": [{"point": ["1"], "value": {"level": 1, "class": "0"}}]}})"},
      {{"gcdform", "--format", "yaml"}, "[1]"},
      {{"j0", "A2", "extra"}, ""},
  };
  for (const auto& [args, input] : bad) {
    const auto o = run_cli(args, input);
    EXPECT_EQ(o.code, cli::kExitValidation) << args[0];
    EXPECT_TRUE(o.out.empty());
    const auto err = Json::parse(o.err);
    EXPECT_EQ(err["error"]["kind"], "validation") << o.err;
  }
}

TEST(Cli, HelpAndSchemas) {
  const auto help = run_cli({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("--format"), std::string::npos);
  const auto s = result({"schemas"});
  for (const auto& name : cli::command_names()) EXPECT_TRUE(s["commands"].contains(name)) << name;
}

TEST(Cli, TextFormat) {
  const auto o = run_cli({"gamma", "A3", "--format", "text"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "invariant_factors: (4)\nj0: (1, 2, 3)\n");
}

TEST(Cli, InputAndOutputFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "torblocks_cli_test";
  std::filesystem::create_directories(dir);
  const auto out = dir / "out.json";
  const auto in = std::filesystem::path(TORBLOCKS_CORPUS_DIR) / "gpi-two-point.json";
  const auto o = run_cli({"gpi", "--input", in.string(), "--output", out.string()});
  EXPECT_EQ(o.code, 0);
  EXPECT_TRUE(o.out.empty());
  std::ifstream f(out);
  const Json r = Json::parse(f);
  EXPECT_EQ(r["lattice"], Json::parse(R"({"dim": 1, "basis": [[2]]})"));
  EXPECT_EQ(run_cli({"gpi", "--input", (dir / "missing.json").string()}).code, cli::kExitValidation);
}

TEST(Cli, CorpusIsDeterministicAcrossRunsAndThreads) {
  const auto files = corpus();
  ASSERT_FALSE(files.empty());
  for (const auto& f : files) {
    const auto a = run_cli({command_of(f), "--input", f.string()});
    const auto b = run_cli({command_of(f), "--input", f.string()});
    const auto c = run_cli({command_of(f), "--input", f.string(), "--threads", "3"});
    EXPECT_EQ(a.code, 0) << f << a.err;
    EXPECT_EQ(a.out, b.out) << f;
    EXPECT_EQ(a.out, c.out) << f;
  }
}

TEST(Cli, BinaryMatchesInProcessRun) {
  const auto f = std::filesystem::path(TORBLOCKS_CORPUS_DIR) / "blockid-sign-orbit.json";
  const std::string cmd = std::string(TORBLOCKS_CLI_PATH) + " blockid --threads 2 --input " + f.string();
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string text;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) text.append(buf, n);
  EXPECT_EQ(pclose(pipe), 0);
  EXPECT_EQ(text, run_cli({"blockid", "--input", f.string()}).out);
}

TEST(CliProperty, SchemasRoundTrip) {
  gen::Rng rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& t = gen::pick(rng, gen::small_types());
    const std::size_t k = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
    const auto p = gen::pi(rng, t, k, 3, 3);
    const Json pj = json_io::pi_to_json(p);
    EXPECT_EQ(json_io::pi_from_json(pj, "pi"), p);
    EXPECT_EQ(json_io::pi_to_json(json_io::pi_from_json(Json::parse(pj.dump()), "pi")), pj);

    const auto xi = chi(p);
    EXPECT_EQ(json_io::xi_from_json(json_io::xi_to_json(xi), "xi"), xi);

    const auto w = gen::affine(rng, t, 3);
    EXPECT_EQ(json_io::affine_from_json(t, json_io::affine_to_json(w), "w"), w);

    ToroidalWeight tw{t, k, IntVector(k, 1), w.fin, std::vector<Rational>(k, Rational(-3, 4))};
    EXPECT_EQ(json_io::toroidal_from_json(json_io::toroidal_to_json(tw), "tw"), tw);

    if (k >= 2 && wt(p).level >= 1) {
      const auto r = g_pi(p);
      EXPECT_EQ(json_io::lattice_from_json(json_io::lattice_to_json(r.lattice), "l"), r.lattice);
      const auto id = block_id(p, gen::coset(rng, k - 1));
      EXPECT_EQ(json_io::block_id_from_json(json_io::block_id_to_json(id), "id"), id);
    }
  }
}

TEST(CliProperty, CorpusDocumentsRoundTrip) {
  for (const auto& f : corpus()) {
    std::ifstream in(f);
    const Json doc = Json::parse(in);
    if (doc.is_object() && doc.contains("pi")) {
      const auto p = json_io::pi_from_json(doc["pi"], "pi");
      EXPECT_EQ(json_io::pi_to_json(p), json_io::pi_to_json(json_io::pi_from_json(json_io::pi_to_json(p), "pi")));
    }
    // Every result document parses back through the JSON layer unchanged.
    const auto o = run_cli({command_of(f), "--input", f.string()});
    ASSERT_EQ(o.code, 0) << f;
    EXPECT_EQ(Json::parse(o.out).dump(2) + "\n", o.out);
    const Json r = Json::parse(o.out);
    if (r.contains("block_id")) {
      EXPECT_EQ(json_io::block_id_to_json(json_io::block_id_from_json(r["block_id"], "id")), r["block_id"]);
    }
    if (r.contains("xi")) EXPECT_EQ(json_io::xi_to_json(json_io::xi_from_json(r["xi"], "xi")), r["xi"]);
    if (r.contains("lattice")) {
      EXPECT_EQ(json_io::lattice_to_json(json_io::lattice_from_json(r["lattice"], "l")), r["lattice"]);
    }
    if (r.contains("weight")) {
      EXPECT_EQ(json_io::toroidal_to_json(json_io::toroidal_from_json(r["weight"], "w")), r["weight"]);
    }
  }
}
