#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dustsim/errors.hpp"

namespace dustsim {

enum class Mobility { None, Wheeled, Legged, Winged, Tracked, Other, Unknown };

const char* to_string(Mobility m) noexcept;

// Case-insensitive lookup; unlisted strings fold to Other. `known` reports
// whether the string named a listed class.
Mobility mobility_from_string(std::string_view text, bool* known = nullptr);

struct CensusRecord {
  std::string name;
  Mobility mobility = Mobility::Unknown;
  bool complete = false;  // record has complete information
  bool active_dust_collector = false;
};

struct CensusData {
  std::vector<CensusRecord> records;
  long unknown_mobility_warnings = 0;  // rows whose mobility folded to Other
};

// Classification counts over records with complete information.
struct CensusSummary {
  long total_complete = 0;
  long official_passive = 0;  // complete and mobility = None
  long wheeled = 0;           // complete and mobility = Wheeled
  long active_dust = 0;       // complete and flagged as active dust collector
  // Complete records in the remaining mobility classes; together with
  // official_passive and wheeled these partition total_complete.
  std::map<Mobility, long> continuum_note;
};

// CSV ingestion. Header must be `name,mobility,complete,active_dust_collector`;
// an empty input yields an empty record list. Malformed rows raise ParseError
// with the offending line number.
CensusData load_census(std::istream& in);
CensusData load_census(const std::string& path);

CensusSummary summarize(const std::vector<CensusRecord>& records);

// Inverse of load_census for round-tripping record sets.
void write_census(const std::vector<CensusRecord>& records, std::ostream& out);

}  // namespace dustsim
