#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "quditx/cli/commands.hpp"
#include "quditx/cli/csv.hpp"
#include "quditx/cli/matrix_file.hpp"
#include "quditx/error.hpp"
#include "test_support.hpp"

using namespace quditx;
using namespace quditx::cli;

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name, const std::string& contents) {
  const fs::path dir = fs::temp_directory_path() / "quditx_cli_tests";
  fs::create_directories(dir);
  const fs::path path = dir / name;
  std::ofstream(path, std::ios::binary) << contents;
  return path;
}

std::string read_all(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Value of a "key,value" row in analyze --format csv output.
double csv_value(const std::string& csv, const std::string& key) {
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(key + ",", 0) == 0) return std::stod(line.substr(key.size() + 1));
  }
  FAIL("missing key " << key);
  return 0.0;
}

}  // namespace

TEST_CASE("complex token grammar") {
  CHECK(parse_complex_token("0.25", 1, 1) == Complex(0.25));
  CHECK(parse_complex_token("-1e-3", 1, 1) == Complex(-1e-3));
  CHECK(parse_complex_token("0.05+0.05i", 1, 1) == Complex(0.05, 0.05));
  CHECK(parse_complex_token("0.05-0.05i", 1, 1) == Complex(0.05, -0.05));
  CHECK(parse_complex_token("1e-5-2E-3i", 1, 1) == Complex(1e-5, -2e-3));

  for (const char* bad : {"0.1i", "1+-2i", "1+2", "1+2ix", "+1", "abc", "1+i",
                          "inf", "nan", "1,5", "0x10"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_complex_token(bad, 3, 7), ParseError);
  }
  try {
    parse_complex_token("0.5+0.1j", 3, 7);
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 14);
  }
}

TEST_CASE("matrix file parsing") {
  const std::string text =
      "# Werner p = 1/2\n"
      "0.375 0 0 0.25   # corner\n"
      "\n"
      "0 0.125 0+0.01i 0\n"
      "0 0-0.01i 0.125 0\n"
      "0.25 0 0 0.375\n";
  const DensityMatrix4 m = parse_matrix_text(text);
  CHECK(m.at(1, 4) == Complex(0.25));
  CHECK(m.at(2, 3) == Complex(0.0, 0.01));
  CHECK(m.at(3, 2) == Complex(0.0, -0.01));

  try {
    parse_matrix_text("1 0 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 9);
  }
  CHECK_THROWS_AS(parse_matrix_text("1 0 0 0\n0 0 0 0\n0 0 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix_text("1 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_matrix_text("1 0 0 0\n0 0 0\n0 0 0 0\n0 0 0 0\n"), ParseError);
}

TEST_CASE("matrix file round trip") {
  auto rng = quditx::testing::corpus_rng();
  for (int n = 0; n < 200; ++n) {
    const DensityMatrix4 m = to_matrix(random_xstate(rng));
    const DensityMatrix4 back = parse_matrix_text(format_matrix_file(m));
    REQUIRE(max_abs_diff(m.raw(), back.raw()) <= 1e-15);
  }
}

TEST_CASE("csv number format") {
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(1.0 / 3) == "0.33333333333333331");
}

TEST_CASE("analyze: maximally mixed and Bell-analog") {
  const auto mixed = temp_file("mixed.txt",
                               "0.25 0 0 0\n0 0.25 0 0\n0 0 0.25 0\n0 0 0 0.25\n");
  const CliResult r = run_cli({"analyze", mixed.string(), "--format", "csv", "--q", "2,0.5"});
  REQUIRE(r.code == kExitOk);
  CHECK(std::abs(csv_value(r.out, "I")) <= 1e-15);
  CHECK(csv_value(r.out, "concurrence") == 0.0);
  CHECK(csv_value(r.out, "neg_param") == 1.0);
  CHECK(csv_value(r.out, "tsallis_q=2") == doctest::Approx(0.75));
  CHECK(csv_value(r.out, "renyi_q=2") == doctest::Approx(2.0 * std::log(2.0)));

  const auto bell = temp_file("bell.txt",
                              "# Bell analog\n0.5 0 0 0.5\n0 0 0 0\n0 0 0 0\n0.5 0 0 0.5\n");
  const CliResult b = run_cli({"analyze", bell.string(), "--format", "csv"});
  REQUIRE(b.code == kExitOk);
  CHECK(csv_value(b.out, "concurrence") == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(csv_value(b.out, "neg_param") == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(csv_value(b.out, "S12") == 0.0);

  const CliResult text = run_cli({"analyze", bell.string()});
  REQUIRE(text.code == kExitOk);
  CHECK(text.out.find("corner-dominant") != std::string::npos);
  CHECK(text.out.find("oracle_lam") != std::string::npos);
}

TEST_CASE("analyze: error exit codes") {
  const auto five = temp_file("five.txt",
                              "0.25 0 0 0 0\n0 0.25 0 0\n0 0 0.25 0\n0 0 0 0.25\n");
  const CliResult parse = run_cli({"analyze", five.string()});
  CHECK(parse.code == kExitUsage);
  CHECK(parse.err.find("line 1") != std::string::npos);

  const auto notx = temp_file("notx.txt",
                              "0.25 0.01 0 0\n0.01 0.25 0 0\n0 0 0.25 0\n0 0 0 0.25\n");
  const CliResult shape = run_cli({"analyze", notx.string()});
  CHECK(shape.code == kExitValidation);
  CHECK(shape.err.find("(1,2)") != std::string::npos);

  const auto negative = temp_file("neg.txt",
                                  "0.5 0 0 0\n0 0.5 0 0\n0 0 0.5 0\n0 0 0 -0.5\n");
  const CliResult invalid = run_cli({"analyze", negative.string()});
  CHECK(invalid.code == kExitValidation);
  CHECK(invalid.err.find("positivity") != std::string::npos);

  CHECK(run_cli({"analyze", "/nonexistent/matrix.txt"}).code == kExitIo);

  const auto mixed = temp_file("mixed2.txt",
                               "0.25 0 0 0\n0 0.25 0 0\n0 0 0.25 0\n0 0 0 0.25\n");
  CHECK(run_cli({"analyze", mixed.string(), "--q", "1"}).code == kExitUsage);
  CHECK(run_cli({"analyze", mixed.string(), "--format", "xml"}).code == kExitUsage);
}

TEST_CASE("werner single point") {
  const CliResult r = run_cli({"werner", "--p", "0.5", "--b", "0"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("neg_param                     1.25") != std::string::npos);
  CHECK(r.out.find("concurrence                   0.25") != std::string::npos);

  // The embedded matrix re-parses and analyzes to the same values.
  const auto pos = r.out.find("matrix\n");
  REQUIRE(pos != std::string::npos);
  const DensityMatrix4 m = parse_matrix_text(r.out.substr(pos + 7));
  CHECK(from_matrix(m, 1e-9) == werner_state(0.5, 0.0));

  const CliResult neg = run_cli({"werner", "--p", "-0.2", "--b", "0.27"});
  REQUIRE(neg.code == kExitOk);
  CHECK(neg.out.find("invalid") != std::string::npos);
}

TEST_CASE("werner flag errors") {
  CHECK(run_cli({"werner", "--sweep", "0:1:0.1", "--b-rule", "scaled:0"}).code == kExitUsage);
  CHECK(run_cli({"werner", "--sweep", "0:1:0.1", "--b-rule", "linear:2"}).code == kExitUsage);
  CHECK(run_cli({"werner", "--sweep", "0:1", "--b-rule", "const:0"}).code == kExitUsage);
  CHECK(run_cli({"werner", "--sweep", "1:0:0.1", "--b-rule", "const:0"}).code == kExitUsage);
  CHECK(run_cli({"werner", "--p", "0.5"}).code == kExitUsage);
  CHECK(run_cli({"werner", "--p", "0.5", "--b", "0", "--sweep", "0:1:0.1"}).code == kExitUsage);
  CHECK(run_cli({"werner"}).code == kExitUsage);
  CHECK(run_cli({"werner", "--p", "abc", "--b", "0"}).code == kExitUsage);
  CHECK(run_cli({}).code == kExitUsage);
  CHECK(run_cli({"frobnicate"}).code == kExitUsage);
}

TEST_CASE("werner sweep csv") {
  const CliResult r =
      run_cli({"werner", "--sweep", "-0.3333:1:0.001", "--b-rule", "scaled:8"});
  REQUIRE(r.code == kExitOk);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == kSweepHeader);
  double onset = 2.0;
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    REQUIRE(cells.size() == 19);
    const double p = std::stod(cells[0]);
    const double conc = std::stod(cells[14]);
    if (conc > 1e-12 && onset > 1.5) onset = p;
  }
  CHECK(rows == 1334);
  CHECK(onset > 1.0 / 3);
  CHECK(onset <= 1.0 / 3 + 0.001);
}

TEST_CASE("sweep csv leaves entropy cells empty for invalid rows") {
  const CliResult r = run_cli({"werner", "--sweep=-0.5:-0.4:0.1", "--b-rule", "const:0"});
  REQUIRE(r.code == kExitOk);
  std::istringstream in(r.out);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  CHECK(row.rfind("-0.5,0,0,1,", 0) == 0);
  CHECK(row.substr(row.size() - 4) == ",,,,");
}

TEST_CASE("region csv") {
  const CliResult r = run_cli({"region", "--p-steps", "3", "--b-steps", "3"});
  REQUIRE(r.code == kExitOk);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == kRegionHeader);
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    const char cls = line.back();
    CHECK((cls == '0' || cls == '1' || cls == '2'));
  }
  CHECK(rows == 9);

  CHECK(run_cli({"region", "--p-steps", "1", "--b-steps", "3"}).code == kExitUsage);
  CHECK(run_cli({"region", "--out", "/nonexistent/dir/region.csv"}).code == kExitIo);
}

TEST_CASE("region rows at landmark points") {
  // Neither landmark lies on an evenly spaced grid over the window, so write
  // the classified points directly.
  std::ostringstream csv;
  const std::vector<WernerPoint> pts = {classify_point(0.9, 0.0), classify_point(-0.2, 0.27)};
  write_region_csv(csv, pts);
  CHECK(csv.str() == "p,b,class\n0.90000000000000002,0,2\n-0.20000000000000001,0.27000000000000002,0\n");
}

TEST_CASE("outputs are byte-identical across runs") {
  const auto a = fs::temp_directory_path() / "quditx_cli_tests" / "sweep_a.csv";
  const auto b = fs::temp_directory_path() / "quditx_cli_tests" / "sweep_b.csv";
  fs::create_directories(a.parent_path());
  REQUIRE(run_cli({"werner", "--sweep=-0.3333:1:0.01", "--b-rule", "scaled:5", "--out", a.string()}).code == 0);
  REQUIRE(run_cli({"werner", "--sweep=-0.3333:1:0.01", "--b-rule", "scaled:5", "--out", b.string()}).code == 0);
  CHECK(read_all(a) == read_all(b));
  CHECK_FALSE(read_all(a).empty());
}

TEST_CASE("help documents every command") {
  const CliResult r = run_cli({"--help"});
  CHECK(r.code == 0);
  for (const char* cmd : {"analyze", "werner", "region"}) CHECK(r.out.find(cmd) != std::string::npos);
  const CliResult w = run_cli({"werner", "--help"});
  for (const char* flag : {"--p", "--b", "--sweep", "--b-rule", "--out"})
    CHECK(w.out.find(flag) != std::string::npos);
}
