#include "dustsim/census.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

namespace dustsim {

namespace {

constexpr const char* kHeader = "name,mobility,complete,active_dust_collector";

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') {
    line.pop_back();
  }
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string::size_type start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

bool parse_bool(const std::string& text, std::size_t line_no) {
  const std::string folded = lower(text);
  if (folded == "true" || folded == "1") {
    return true;
  }
  if (folded == "false" || folded == "0") {
    return false;
  }
  throw ParseError("expected a boolean, got \"" + text + "\"", line_no);
}

}  // namespace

const char* to_string(Mobility m) noexcept {
  switch (m) {
    case Mobility::None:
      return "none";
    case Mobility::Wheeled:
      return "wheeled";
    case Mobility::Legged:
      return "legged";
    case Mobility::Winged:
      return "winged";
    case Mobility::Tracked:
      return "tracked";
    case Mobility::Other:
      return "other";
    case Mobility::Unknown:
      return "unknown";
  }
  return "unknown";
}

Mobility mobility_from_string(std::string_view text, bool* known) {
  static constexpr std::array<std::pair<const char*, Mobility>, 7> kTable{{
      {"none", Mobility::None},
      {"wheeled", Mobility::Wheeled},
      {"legged", Mobility::Legged},
      {"winged", Mobility::Winged},
      {"tracked", Mobility::Tracked},
      {"other", Mobility::Other},
      {"unknown", Mobility::Unknown},
  }};
  const std::string folded = lower(text);
  for (const auto& [name, value] : kTable) {
    if (folded == name) {
      if (known) {
        *known = true;
      }
      return value;
    }
  }
  if (known) {
    *known = false;
  }
  return Mobility::Other;
}

CensusData load_census(std::istream& in) {
  CensusData data;
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) {
    return data;  // empty input, empty list
  }
  ++line_no;
  strip_cr(line);
  if (line != kHeader) {
    throw ParseError(std::string("expected header \"") + kHeader + "\"",
                     line_no);
  }

  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) {
      continue;
    }
    const std::vector<std::string> fields = split_fields(line);
    if (fields.size() != 4) {
      throw ParseError("expected 4 fields, got " +
                           std::to_string(fields.size()),
                       line_no);
    }
    CensusRecord record;
    record.name = fields[0];
    bool known = false;
    record.mobility = mobility_from_string(fields[1], &known);
    if (!known) {
      ++data.unknown_mobility_warnings;
    }
    record.complete = parse_bool(fields[2], line_no);
    record.active_dust_collector = parse_bool(fields[3], line_no);
    data.records.push_back(std::move(record));
  }
  return data;
}

CensusData load_census(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open \"" + path + "\"", 0);
  }
  return load_census(in);
}

CensusSummary summarize(const std::vector<CensusRecord>& records) {
  CensusSummary summary;
  for (const CensusRecord& record : records) {
    if (!record.complete) {
      continue;
    }
    ++summary.total_complete;
    if (record.active_dust_collector) {
      ++summary.active_dust;
    }
    switch (record.mobility) {
      case Mobility::None:
        ++summary.official_passive;
        break;
      case Mobility::Wheeled:
        ++summary.wheeled;
        break;
      default:
        ++summary.continuum_note[record.mobility];
        break;
    }
  }
  return summary;
}

void write_census(const std::vector<CensusRecord>& records,
                  std::ostream& out) {
  out << kHeader << '\n';
  for (const CensusRecord& record : records) {
    out << record.name << ',' << to_string(record.mobility) << ','
        << (record.complete ? "true" : "false") << ','
        << (record.active_dust_collector ? "true" : "false") << '\n';
  }
}

}  // namespace dustsim
