#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "dtl/signal.hpp"

namespace dtl {

class eval_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binding of atom names to signals over one time domain.
struct Env {
  TimeDomain domain = TimeDomain::FullLine;
  std::map<std::string, Signal> bindings;

  void bind(const std::string& name, Signal s) {
    if (s.domain() != domain) throw eval_error("atom " + name + " is bound on the wrong time domain");
    bindings.insert_or_assign(name, std::move(s));
  }

  const Signal& lookup(const std::string& name) const {
    auto it = bindings.find(name);
    if (it == bindings.end()) throw eval_error("unbound atom '" + name + "'");
    return it->second;
  }
};

}  // namespace dtl
