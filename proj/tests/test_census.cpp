#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>

#include "dustsim/census.hpp"

using dustsim::CensusData;
using dustsim::CensusRecord;
using dustsim::CensusSummary;
using dustsim::Mobility;

namespace {

constexpr const char* kHeader =
    "name,mobility,complete,active_dust_collector\n";

CensusData load_text(const std::string& text) {
  std::istringstream in(text);
  return dustsim::load_census(in);
}

long continuum_total(const CensusSummary& s) {
  long total = 0;
  for (const auto& [mobility, count] : s.continuum_note) {
    total += count;
  }
  return total;
}

}  // namespace

TEST_CASE("three-row document parses field by field") {
  const CensusData data = load_text(std::string(kHeader) +
                                    "Unimate,none,true,false\n"
                                    "Shakey,wheeled,true,false\n"
                                    "Dragonfly,winged,false,false\n");
  REQUIRE(data.records.size() == 3);
  CHECK(data.records[0].name == "Unimate");
  CHECK(data.records[0].mobility == Mobility::None);
  CHECK(data.records[0].complete);
  CHECK(!data.records[0].active_dust_collector);
  CHECK(data.records[1].mobility == Mobility::Wheeled);
  CHECK(data.records[2].mobility == Mobility::Winged);
  CHECK(!data.records[2].complete);
  CHECK(data.unknown_mobility_warnings == 0);

  const CensusSummary s = dustsim::summarize(data.records);
  CHECK(s.total_complete == 2);  // the winged record is incomplete
  CHECK(s.official_passive == 1);
  CHECK(s.wheeled == 1);
  CHECK(s.active_dust == 0);
  CHECK(continuum_total(s) == 0);
}

TEST_CASE("five complete stationary records count as five official passives") {
  std::string text(kHeader);
  for (int i = 0; i < 5; ++i) {
    text += "S" + std::to_string(i) + ",none,true,false\n";
  }
  const CensusSummary s = dustsim::summarize(load_text(text).records);
  CHECK(s.total_complete == 5);
  CHECK(s.official_passive == 5);
  CHECK(s.wheeled == 0);
}

TEST_CASE("mobility and boolean parsing is case-insensitive") {
  const CensusData data = load_text(std::string(kHeader) +
                                    "A,WHEELED,TRUE,FALSE\n"
                                    "B,Wheeled,1,0\n"
                                    "C,wHeElEd,True,False\n");
  REQUIRE(data.records.size() == 3);
  for (const CensusRecord& r : data.records) {
    CHECK(r.mobility == Mobility::Wheeled);
    CHECK(r.complete);
    CHECK(!r.active_dust_collector);
  }
  CHECK(data.unknown_mobility_warnings == 0);
}

TEST_CASE("unlisted mobility folds to Other and is counted as a warning") {
  bool known = true;
  CHECK(dustsim::mobility_from_string("hovercraft", &known) ==
        Mobility::Other);
  CHECK(!known);
  CHECK(dustsim::mobility_from_string("tracked", &known) ==
        Mobility::Tracked);
  CHECK(known);

  const CensusData data = load_text(std::string(kHeader) +
                                    "H1,hovercraft,true,false\n"
                                    "H2,maglev,true,false\n"
                                    "W,wheeled,true,false\n");
  CHECK(data.unknown_mobility_warnings == 2);
  const CensusSummary s = dustsim::summarize(data.records);
  CHECK(s.continuum_note.at(Mobility::Other) == 2);
}

TEST_CASE("malformed rows raise ParseError naming the line") {
  const std::string text = std::string(kHeader) +
                           "A,none,true,false\n"
                           "B,wheeled,true\n";  // missing a column
  try {
    load_text(text);
    FAIL("expected ParseError");
  } catch (const dustsim::ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }

  // Extra column.
  CHECK_THROWS_AS(load_text(std::string(kHeader) + "A,none,true,false,extra\n"),
                  dustsim::ParseError);

  // Unparseable boolean.
  try {
    load_text(std::string(kHeader) + "A,none,yes,false\n");
    FAIL("expected ParseError");
  } catch (const dustsim::ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("wrong header raises ParseError on line 1") {
  try {
    load_text("name,mobility,complete\nA,none,true\n");
    FAIL("expected ParseError");
  } catch (const dustsim::ParseError& e) {
    CHECK(e.line() == 1);
  }
}

TEST_CASE("empty input yields an empty list; blank lines are skipped") {
  CHECK(load_text("").records.empty());
  CHECK(load_text(kHeader).records.empty());  // header only

  const CensusData data =
      load_text(std::string(kHeader) + "\nA,none,true,false\n\n");
  CHECK(data.records.size() == 1);

  const CensusSummary s = dustsim::summarize({});
  CHECK(s.total_complete == 0);
  CHECK(s.official_passive == 0);
  CHECK(s.wheeled == 0);
  CHECK(s.active_dust == 0);
  CHECK(s.continuum_note.empty());
}

TEST_CASE("CRLF input parses the same as LF input") {
  const CensusData data =
      load_text("name,mobility,complete,active_dust_collector\r\n"
                "A,none,true,false\r\n");
  REQUIRE(data.records.size() == 1);
  CHECK(data.records[0].mobility == Mobility::None);
}

TEST_CASE("unreadable file raises ParseError with no line number") {
  try {
    dustsim::load_census(std::string("/nonexistent/census.csv"));
    FAIL("expected ParseError");
  } catch (const dustsim::ParseError& e) {
    CHECK(e.line() == 0);
  }
}

TEST_CASE("round trip: write_census output reloads identically") {
  const std::string text = std::string(kHeader) +
                           "A,none,true,false\n"
                           "B,wheeled,false,false\n"
                           "C,legged,true,true\n"
                           "D,unknown,true,false\n";
  const CensusData first = load_text(text);
  std::ostringstream out;
  dustsim::write_census(first.records, out);
  const CensusData second = load_text(out.str());
  REQUIRE(first.records.size() == second.records.size());
  for (std::size_t i = 0; i < first.records.size(); ++i) {
    CHECK(first.records[i].name == second.records[i].name);
    CHECK(first.records[i].mobility == second.records[i].mobility);
    CHECK(first.records[i].complete == second.records[i].complete);
    CHECK(first.records[i].active_dust_collector ==
          second.records[i].active_dust_collector);
  }
}

TEST_CASE("2010 fixture reproduces the published classification counts") {
  const std::string path =
      std::string(DUSTSIM_DATA_DIR) + "/census_2010_synthetic.csv";
  const CensusData data = dustsim::load_census(path);
  const CensusSummary s = dustsim::summarize(data.records);

  CHECK(s.total_complete == 261);
  CHECK(s.official_passive == 20);
  CHECK(s.wheeled == 86);
  CHECK(s.active_dust == 0);
  CHECK(data.unknown_mobility_warnings == 0);

  // The four headline numbers plus the continuum classes partition the
  // complete records.
  CHECK(s.official_passive + s.wheeled + continuum_total(s) ==
        s.total_complete);
}
