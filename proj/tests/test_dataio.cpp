// Copyright 2026 The hyperon-channels Authors
// SPDX-License-Identifier: Apache-2.0
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hyperon/dataio.hpp"
#include "hyperon/mc.hpp"
#include "table_reference.hpp"
#include "test_support.hpp"

using namespace hyperon;
using namespace testing;

namespace {

constexpr double kPi = std::numbers::pi;

ParameterTable parse(const std::string& text) {
  std::istringstream in(text);
  return parse_parameters(in);
}

std::vector<EventRecord> read(const std::string& text) {
  std::istringstream in(text);
  return read_events(in);
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("hyperon_test_" + name);
}

const std::string kHeader = "parent,quarks,channel,branching,alpha,phi_pi,gamma_sign,source\n";

}  // namespace

TEST_CASE("bundled parameter file reproduces every reference row") {
  const ParameterTable table = load_parameters(HYPERON_DEFAULT_PARAMS);
  CHECK(table.warnings.empty());
  REQUIRE(table.rows.size() == kReferenceTable.size());
  for (const auto& ref : kReferenceTable) {
    CAPTURE(ref.parent);
    CAPTURE(ref.channel);
    const ParameterRow* row = table.find(std::string(ref.parent), std::string(ref.channel));
    REQUIRE(row != nullptr);
    const DecayParameters p = row->params();
    CHECK(within(p.tabulated_phase() / kPi, ref.chi_sp_pi));
    CHECK(within(p.visibility, ref.visibility));
    CHECK(within(p.predictability, ref.predictability));
    CHECK_NOTHROW(row->channel_record());
  }
  CHECK(table.find("Lambda")->channel == "p pi-");
  CHECK(table.find("Sigma+")->channel == "p pi0");
  CHECK(table.find("Omega-") == nullptr);
  CHECK(table.find("Lambda", "n pi0")->deduced());
  CHECK_FALSE(table.find("Lambda", "p pi-")->deduced());
}

TEST_CASE("emit_table") {
  const ParameterTable table = load_parameters(HYPERON_DEFAULT_PARAMS);
  const std::string text = emit_table(table);
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  CHECK(line == kTableHeader);
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    REQUIRE(fields.size() == 11);
    const auto& ref = kReferenceTable[rows - 1];
    CHECK(fields[0] == ref.parent);
    CHECK(fields[2] == ref.channel);
    CHECK(within(std::stod(fields[7]), ref.chi_sp_pi));
    CHECK(within(std::stod(fields[8]), ref.visibility));
    CHECK(within(std::stod(fields[9]), ref.predictability));
  }
  CHECK(rows == 8);
  CHECK(text.find("Lambda,uds,p pi-,0.639,0.642,") != std::string::npos);

  // alpha = 0: V = |sin phi|, P = |cos phi|.
  const ParameterTable zero = parse(kHeader + "X,qqq,a b,0.5,0,0.2,+,note\n");
  const TableRow r = reproduce_table(zero).front();
  CHECK(r.params.visibility == doctest::Approx(std::abs(std::sin(0.2 * kPi))));
  CHECK(r.params.predictability == doctest::Approx(std::abs(std::cos(0.2 * kPi))));
}

TEST_CASE("format_significant") {
  CHECK(format_significant(0.64781234, 6) == "0.647812");
  CHECK(format_significant(-0.0428123456, 6) == "-0.0428123");
  CHECK(format_significant(1.0, 6) == "1");
  CHECK(format_significant(0.0, 6) == "0");
  CHECK(format_significant(-1e-20, 6) == "-1e-20");
  CHECK(round_significant(0.1234567, 3) == 0.123);
}

TEST_CASE("parameter parsing: comments, header and free-text source") {
  const ParameterTable t = parse("# comment\n\nX,qqq,a b,0.5,0.3,0.1,+,note, with, commas\n");
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0].source == "note, with, commas");
  CHECK(t.rows[0].line == 3);
  CHECK(t.rows[0].gamma_sign == GammaSign::Plus);
}

TEST_CASE("parameter parsing: empty file warns") {
  const ParameterTable empty = parse("");
  CHECK(empty.rows.empty());
  REQUIRE(empty.warnings.size() == 1);
  CHECK(parse(kHeader + "# nothing\n").warnings.size() == 1);
}

TEST_CASE("parameter parsing: invariant violations name line and field") {
  try {
    parse(kHeader + "X,qqq,a b,0.5,1.2,0.0,+,bad\n");
    FAIL("expected DataError");
  } catch (const DataError& e) {
    const std::string what = e.what();
    CHECK(what.find("line 2") != std::string::npos);
    CHECK(what.find("alpha") != std::string::npos);
  }
  CHECK_THROWS_AS(parse(kHeader + "X,qqq,a b,1.5,0.2,0.0,+,bad\n"), DataError);
  CHECK_THROWS_WITH_AS(parse(kHeader + "X,qqq,a b,0.5,0.2,0.9,+,bad\n"),
                       doctest::Contains("gamma_sign"), DataError);
}

TEST_CASE("parameter parsing: malformed fixtures are located") {
  struct Fixture {
    const char* text;
    std::size_t line;
    std::size_t column;
  };
  const Fixture fixtures[] = {
      {"X,qqq,a b,0.5,0.3\n", 1, 6},
      {"X,qqq,a b,half,0.3,0.1,+,note\n", 1, 4},
      {"X,qqq,a b,0.5,0.3x,0.1,+,note\n", 1, 5},
      {"X,qqq,a b,0.5,0.3,,+,note\n", 1, 6},
      {"X,qqq,a b,0.5,0.3,0.1,plus,note\n", 1, 7},
      {",qqq,a b,0.5,0.3,0.1,+,note\n", 1, 1},
      {"# c\nX,qqq,,0.5,0.3,0.1,+,note\n", 2, 3},
      {"X,qqq,a b,0.5,0.3,0.1,+,ok\nY,qqq,a b,0.5,nan,0.1,+,note\n", 2, 5},
  };
  for (const auto& f : fixtures) {
    CAPTURE(f.text);
    try {
      parse(f.text);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == f.line);
      CHECK(e.column() == f.column);
      CHECK(std::string(e.what()).find("line " + std::to_string(f.line)) != std::string::npos);
    }
  }
}

TEST_CASE("load_parameters: missing file names the path") {
  const auto path = temp_path("does_not_exist.csv");
  CHECK_THROWS_WITH_AS(load_parameters(path), doctest::Contains(path.string().c_str()), DataError);

  const auto bad = temp_path("bad_params.csv");
  std::ofstream(bad) << kHeader << "X,qqq,a b,0.5,0.3\n";
  try {
    load_parameters(bad);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    const std::string what = e.what();
    CHECK(what.find(bad.string()) != std::string::npos);
    CHECK(what.find("(line 2, column 6)") == what.rfind("(line"));
  }
  std::filesystem::remove(bad);
}

TEST_CASE("event round trip") {
  SampleConfig config;
  config.seed = 5;
  config.events = 500;
  config.model = PairSampleModel{"Lambda antiLambda", 0.46};
  const auto records = generate_all(config);
  REQUIRE(records.size() == 1000);
  const auto path = temp_path("events.csv");
  write_events(path, records);
  const auto back = read_events(path);
  REQUIRE(back.size() == records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(back[i].event_id == records[i].event_id);
    CHECK(back[i].role == records[i].role);
    CHECK(back[i].channel == records[i].channel);
    CHECK((back[i].n - records[i].n).cwiseAbs().maxCoeff() < 1e-9);
  }
  std::filesystem::remove(path);

  std::ostringstream out;
  EventWriter writer(out);
  const EventRecord one{7, Role::CascadeMu, "Xi- Lambda", unit_vector(0.3, 1.2)};
  writer.write(std::span(&one, 1));
  const auto again = read(out.str());
  REQUIRE(again.size() == 1);
  CHECK(again[0].role == Role::CascadeMu);
  CHECK(out.str().rfind(std::string(kEventHeader) + "\n", 0) == 0);

  const EventRecord bad{1, Role::Single, "a,b", Vec3::UnitZ()};
  CHECK_THROWS_AS(writer.write(std::span(&bad, 1)), DataError);
}

TEST_CASE("event reading: header-only and malformed files") {
  CHECK(read(std::string(kEventHeader) + "\n").empty());
  CHECK_THROWS_AS(read(""), ParseError);
  CHECK_THROWS_AS(read("id,role\n"), ParseError);

  const std::string good = std::string(kEventHeader) + "\n0,single,L,0,0,1\n1,single,L,1,0,0\n";
  CHECK(read(good).size() == 2);

  const std::string truncated = good + "2,single,L,0.6";
  try {
    read(truncated);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(std::string(e.what()).find("last good event_id 1") != std::string::npos);
  }
  const std::string cut_number = good + "2,single,L,0.48,0.6,0.6";
  CHECK_THROWS_WITH_AS(read(cut_number), doctest::Contains("last good event_id 1"), ParseError);
  CHECK_THROWS_WITH_AS(read(good + "2,bogus,L,0,0,1\n"), doctest::Contains("role"), ParseError);
  CHECK_THROWS_WITH_AS(read(good + "x,single,L,0,0,1\n"), doctest::Contains("event_id"),
                       ParseError);
  CHECK_THROWS_WITH_AS(read(std::string(kEventHeader) + "\n0,single,L,0,0,2\n"),
                       doctest::Contains("no complete event"), ParseError);
  CHECK_THROWS_AS(read_events(temp_path("missing_events.csv")), DataError);
}

TEST_CASE("roles") {
  for (Role r : {Role::Single, Role::Pair1, Role::Pair2, Role::CascadeMu, Role::CascadeNu})
    CHECK(role_from_string(to_string(r)) == r);
  CHECK(to_string(Role::Pair1) == "pair-1");
  CHECK(to_string(Role::CascadeNu) == "cascade-nu");
  CHECK_FALSE(role_from_string("pair-3").has_value());
}
