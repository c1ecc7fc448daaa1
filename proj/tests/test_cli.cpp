#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include "cli.hpp"
#include "qint/dehn_thurston.hpp"
#include "qint/errors.hpp"
#include "qint/io.hpp"

using namespace qint;
using cli::Command;
using cli::Format;
using cli::RunConfig;

namespace {

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "qint_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto path = scratch_dir() / name;
  std::ofstream(path) << text;
  return path.string();
}

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const RunConfig& c) {
  std::ostringstream out, err;
  const int code = cli::run(c, out, err);
  return {code, out.str(), err.str()};
}

std::string shell(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  status = pclose(pipe);
  return out;
}

}  // namespace

TEST(Cli, VerlindeCheck) {
  RunConfig c;
  c.command = Command::verlinde_check;
  c.genus = 2;
  c.r = 3;
  const auto r = run(c);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "theta=4 dumbbell=4 MATCH\n");
}

TEST(Cli, SMoveCoefficientsCsv) {
  RunConfig c;
  c.command = Command::coeffs;
  c.curve_path = write_file("smove.json", io::dump(io::to_json(smove_system())));
  c.format = Format::csv;
  const auto r = run(c);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "shift,n_pp,n_pm,poly,state_count,nonzero\n"
            "0=-1;1=0;2=0,1,0,\"1\",1,true\n"
            "0=1;1=0;2=0,1,0,\"1\",1,true\n");
}

TEST(Cli, ShiftFilter) {
  RunConfig c;
  c.command = Command::coeffs;
  c.curve_path = write_file("amove.json", io::dump(io::to_json(amove_system())));
  c.shift_filter = cli::parse_shift_filter("0=2");
  const auto r = run(c);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = io::Json::parse(r.out);
  ASSERT_EQ(j.size(), 1U);
  EXPECT_EQ(io::coefficient_from_json(j[0]).poly.to_string(), "z^-4 - 2 + z^4");

  c.shift_filter = {{0, 1}};
  EXPECT_EQ(run(c).code, 1);
  EXPECT_THROW(cli::parse_shift_filter("0:1"), std::invalid_argument);
}

TEST(Cli, MissingFileExitsOne) {
  RunConfig c;
  c.command = Command::bounds;
  c.curve_path = (scratch_dir() / "missing.json").string();
  const auto r = run(c);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("cannot open"), std::string::npos);
}

TEST(Cli, InvalidCurveExitsOne) {
  auto j = io::to_json(amove_system());
  j["annulus_arcs"].erase(0);
  RunConfig c;
  c.command = Command::curve_validate;
  c.curve_path = write_file("broken.json", io::dump(j));
  EXPECT_EQ(run(c).code, 1);
  c.curve_path = write_file("garbage.json", "{ not json");
  EXPECT_EQ(run(c).code, 1);
}

TEST(Cli, StateCapExitsTwo) {
  RunConfig c;
  c.command = Command::coeffs;
  c.curve_path = write_file("amove_cap.json", io::dump(io::to_json(amove_system())));
  c.state_cap = 5;
  EXPECT_EQ(run(c).code, 2);
}

TEST(Cli, StateCapPrecedence) {
  EXPECT_EQ(cli::resolve_state_cap(std::nullopt, nullptr), std::uint64_t{1} << 24);
  EXPECT_EQ(cli::resolve_state_cap(std::nullopt, "100"), 100U);
  EXPECT_EQ(cli::resolve_state_cap(std::string("7"), "100"), 7U);
  EXPECT_THROW(cli::resolve_state_cap(std::string("0"), nullptr), std::invalid_argument);
  EXPECT_THROW(cli::resolve_state_cap(std::nullopt, "abc"), std::invalid_argument);
}

TEST(Cli, GeneratedCurvesRoundTrip) {
  RunConfig gen;
  gen.command = Command::curve_generate;
  gen.count = 6;
  const auto g = run(gen);
  ASSERT_EQ(g.code, 0);
  const auto corpus = io::Json::parse(g.out);
  ASSERT_EQ(corpus.size(), 6U);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto path = write_file("gen" + std::to_string(i) + ".json", io::dump(corpus[i]));
    RunConfig v;
    v.command = Command::curve_validate;
    v.curve_path = path;
    const auto r = run(v);
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(io::Json::parse(r.out).at("ok").get<bool>());
    // Re-serializing the parsed system reproduces the document.
    EXPECT_EQ(io::to_json(io::arc_system_from_json(corpus[i])), corpus[i]);
  }
}

TEST(Cli, CoefficientJsonRoundTrip) {
  RunConfig c;
  c.command = Command::coeffs;
  c.curve_path = write_file("amove_rt.json", io::dump(io::to_json(amove_system(1))));
  const auto r = run(c);
  ASSERT_EQ(r.code, 0);
  for (const auto& item : io::Json::parse(r.out)) {
    EXPECT_EQ(io::to_json(io::coefficient_from_json(item)), item);
  }
}

TEST(Cli, OutputIsDeterministic) {
  RunConfig c;
  c.command = Command::bounds;
  c.verify_family = true;
  c.curve_path = write_file("det.json", io::dump(io::to_json(generate_corpus({3, 1, 10, 4}).front())));
  const auto first = run(c), second = run(c);
  EXPECT_EQ(first.code, 0);
  EXPECT_EQ(first.out, second.out);
}

TEST(Cli, MetricCommand) {
  const auto graph = write_file("pg.json", R"({"vertices": ["P", "Q", "R"], "edges": [["P", "Q"], ["Q", "R"]]})");
  const auto nu = write_file("nu.json",
                             R"({"points": ["P", "Q", "R"], "values": [["P", "Q", "2"], ["Q", "P", "2"], ["Q", "R", "2"], ["R", "Q", "3"]]})");
  RunConfig c;
  c.command = Command::metric;
  c.graph_path = graph;
  c.nu_path = nu;
  const auto r = run(c);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = io::Json::parse(r.out);
  EXPECT_EQ(j.at("d_qt").at("d").at(0).at(2), "4");
  EXPECT_EQ(j.at("below_twice_path"), true);
  EXPECT_EQ(j.at("tree_equality"), true);
}

TEST(Cli, BinaryExitCodes) {
  int status = 0;
  const std::string bin = QINT_BINARY;
  EXPECT_EQ(shell(bin + " verlinde-check --genus 2 --r 3", status), "theta=4 dumbbell=4 MATCH\n");
  EXPECT_EQ(WEXITSTATUS(status), 0);
  shell(bin + " bounds --curve /nonexistent/file.json 2>/dev/null", status);
  EXPECT_EQ(WEXITSTATUS(status), 1);
  const auto amove = write_file("bin_amove.json", io::dump(io::to_json(amove_system())));
  shell("QINT_STATE_CAP=3 " + bin + " coeffs --curve " + amove + " 2>/dev/null", status);
  EXPECT_EQ(WEXITSTATUS(status), 2);
  shell("QINT_STATE_CAP=3 " + bin + " --state-cap 100 coeffs --curve " + amove + " >/dev/null", status);
  EXPECT_EQ(WEXITSTATUS(status), 0);
}
