#pragma once

// Line-oriented signal files:
//
//   domain line|halfline
//   period <rational>
//   pattern <interval-list>
//   transient <rational>     (half-line only, default 0)
//   prefix <interval-list>   (half-line only, default {})
//
// `#` starts a comment. Keys may appear in any order but at most once.

#include <map>
#include <sstream>
#include <string>
#include <string_view>

#include "dtl/signal.hpp"

namespace dtl {

class format_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Signal parse_signal(std::string_view text) {
  std::map<std::string, std::string> fields;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& what) { return format_error("line " + std::to_string(lineno) + ": " + what); };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_first_of(" \t", b);
    std::string key = line.substr(b, e == std::string::npos ? std::string::npos : e - b);
    std::string value;
    if (e != std::string::npos) {
      std::size_t vb = line.find_first_not_of(" \t", e);
      std::size_t ve = line.find_last_not_of(" \t\r");
      if (vb != std::string::npos) value = line.substr(vb, ve - vb + 1);
    }
    if (key != "domain" && key != "period" && key != "pattern" && key != "transient" && key != "prefix")
      throw fail("unknown key '" + key + "'");
    if (value.empty()) throw fail("missing value for '" + key + "'");
    if (!fields.emplace(key, value).second) throw fail("duplicate key '" + key + "'");
  }
  lineno = 0;
  auto need = [&](const char* key) -> const std::string& {
    auto it = fields.find(key);
    if (it == fields.end()) throw format_error(std::string("missing key '") + key + "'");
    return it->second;
  };
  TimeDomain domain;
  const std::string& d = need("domain");
  if (d == "line") {
    domain = TimeDomain::FullLine;
  } else if (d == "halfline") {
    domain = TimeDomain::HalfLine;
  } else {
    throw format_error("domain must be 'line' or 'halfline', got '" + d + "'");
  }
  try {
    Rational period = Rational::parse(need("period"));
    IntervalSet pattern = IntervalSet::parse(need("pattern"));
    Rational transient = 0;
    IntervalSet prefix;
    if (auto it = fields.find("transient"); it != fields.end()) transient = Rational::parse(it->second);
    if (auto it = fields.find("prefix"); it != fields.end()) prefix = IntervalSet::parse(it->second);
    if (domain == TimeDomain::FullLine && (fields.count("transient") || fields.count("prefix")) &&
        (transient.sign() != 0 || !prefix.empty()))
      throw format_error("full-line signals take no transient or prefix");
    return Signal::make(domain, period, pattern, transient, prefix);
  } catch (const format_error&) {
    throw;
  } catch (const std::exception& e) {
    throw format_error(e.what());
  }
}

/// Canonical text form; byte-identical for equal point sets.
inline std::string format_signal(const Signal& raw) {
  Signal s = canonicalize(raw);
  std::string out;
  out += "domain ";
  out += to_string(s.domain());
  out += "\nperiod " + s.period().to_string();
  out += "\npattern " + s.pattern().to_string() + "\n";
  if (s.domain() == TimeDomain::HalfLine) {
    out += "transient " + s.transient().to_string() + "\n";
    out += "prefix " + s.prefix().to_string() + "\n";
  }
  return out;
}

/// Human-readable description of a signal.
inline std::string describe_signal(const Signal& raw) {
  Signal s = canonicalize(raw);
  std::ostringstream os;
  if (s.is_constant(true)) {
    os << "always true";
  } else if (s.is_constant(false)) {
    os << "always false";
  } else if (s.domain() == TimeDomain::FullLine) {
    os << "true on " << s.pattern().to_string() << " modulo " << s.period();
  } else {
    if (s.transient().sign() > 0) os << "on [0," << s.transient() << "): " << s.prefix().to_string() << "; ";
    os << "from " << s.transient() << " on: " << s.pattern().to_string() << " repeating every " << s.period();
  }
  os << " (" << to_string(s.domain()) << ")\n";
  return os.str();
}

}  // namespace dtl
