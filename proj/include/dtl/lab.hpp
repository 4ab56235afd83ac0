#pragma once

// Builtin single-predicate models, formula enumeration by modal depth with
// semantic deduplication, trivialization reports, and the separation checks.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dtl/eval.hpp"
#include "dtl/formula.hpp"
#include "dtl/signal.hpp"
#include "dtl/signal_io.hpp"

namespace dtl {

class lab_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Models

/// mk:k  full line, P at every m/k
/// thm2  half-line, P at every n*2/3
/// thm3:n  half-line, P at every m*2/(2n-1)
struct ModelSpec {
  enum class Kind { Mk, Thm2, Thm3 } kind = Kind::Thm2;
  unsigned parameter = 0;

  static ModelSpec mk(unsigned k) { return {Kind::Mk, k}; }
  static ModelSpec thm2() { return {Kind::Thm2, 0}; }
  static ModelSpec thm3(unsigned n) { return {Kind::Thm3, n}; }

  static ModelSpec parse(const std::string& text) {
    auto number = [&](std::size_t from) {
      std::string digits = text.substr(from);
      if (digits.empty() || digits.size() > 6 || digits.find_first_not_of("0123456789") != std::string::npos)
        throw lab_error("bad model parameter in '" + text + "'");
      return static_cast<unsigned>(std::stoul(digits));
    };
    ModelSpec m;
    if (text == "thm2") m = thm2();
    else if (text.rfind("mk:", 0) == 0) m = mk(number(3));
    else if (text.rfind("thm3:", 0) == 0) m = thm3(number(5));
    else throw lab_error("unknown model '" + text + "' (expected mk:<k>, thm2 or thm3:<n>)");
    m.validate();
    return m;
  }

  void validate() const {
    if (kind == Kind::Mk && parameter < 1) throw lab_error("mk:k needs k >= 1");
    if (kind == Kind::Thm3 && parameter < 2) throw lab_error("thm3:n needs n >= 2");
  }

  std::string name() const {
    switch (kind) {
      case Kind::Mk: return "mk:" + std::to_string(parameter);
      case Kind::Thm2: return "thm2";
      case Kind::Thm3: return "thm3:" + std::to_string(parameter);
    }
    return "";
  }
};

inline Env builtin_model(const ModelSpec& spec) {
  spec.validate();
  Env env;
  switch (spec.kind) {
    case ModelSpec::Kind::Mk:
      env.domain = TimeDomain::FullLine;
      env.bind("P", Signal::multiples_of(env.domain, Rational(1, spec.parameter)));
      break;
    case ModelSpec::Kind::Thm2:
      env.domain = TimeDomain::HalfLine;
      env.bind("P", Signal::multiples_of(env.domain, Rational(2, 3)));
      break;
    case ModelSpec::Kind::Thm3:
      env.domain = TimeDomain::HalfLine;
      env.bind("P", Signal::multiples_of(env.domain, Rational(2, 2 * static_cast<long long>(spec.parameter) - 1)));
      break;
  }
  return env;
}

// ---------------------------------------------------------------------------
// Enumeration

struct Logic {
  enum class Kind { TL, QTL, QTLPnueli } kind = Kind::QTL;
  unsigned max_pnueli = 0;  // QTLPnueli: Pn2 .. Pn<max_pnueli>

  static Logic tl() { return {Kind::TL, 0}; }
  static Logic qtl() { return {Kind::QTL, 0}; }
  static Logic qtl_pnueli(unsigned m) { return {Kind::QTLPnueli, m}; }

  static Logic parse(const std::string& text) {
    if (text == "tl") return tl();
    if (text == "qtl") return qtl();
    if (text.rfind("qtl+p", 0) == 0) {
      std::string digits = text.substr(5);
      if (digits.empty() || digits.size() > 3 || digits.find_first_not_of("0123456789") != std::string::npos)
        throw lab_error("bad logic '" + text + "'");
      return qtl_pnueli(static_cast<unsigned>(std::stoul(digits)));
    }
    throw lab_error("unknown logic '" + text + "' (expected tl, qtl or qtl+p<m>)");
  }

  bool metric() const { return kind != Kind::TL; }

  std::string name() const {
    switch (kind) {
      case Kind::TL: return "tl";
      case Kind::QTL: return "qtl";
      case Kind::QTLPnueli: return "qtl+p" + std::to_string(max_pnueli);
    }
    return "";
  }
};

struct Enumeration {
  std::vector<Formula> formulas;  // one representative per truth set, in discovery order
  std::vector<Signal> truths;
  std::vector<unsigned> depths;
  bool truncated = false;
  /// Deduplicated candidates together with the index of the representative they matched.
  std::vector<std::pair<Formula, std::size_t>> pruned;
  std::size_t candidates = 0;
};

namespace detail {

inline std::string signal_key(const Signal& s) {
  std::string k = s.period().to_string() + "|" + s.pattern().to_string();
  if (s.domain() == TimeDomain::HalfLine) k += "|" + s.transient().to_string() + "|" + s.prefix().to_string();
  return k;
}

class Enumerator {
 public:
  Enumerator(const Logic& logic, const Env& env, std::size_t budget, std::size_t keep_pruned)
      : logic_(logic), env_(env), budget_(budget), keep_pruned_(keep_pruned) {}

  Enumeration run(unsigned depth) {
    if (budget_ == 0) throw lab_error("enumeration budget must be positive");
    if (offer(fml::top(), Signal::constant(env_.domain, true), 0) && offer(fml::bottom(), Signal::constant(env_.domain, false), 0) &&
        offer(fml::atom("P"), canonicalize(env_.lookup("P")), 0))
      close_booleans(0);
    for (unsigned d = 1; d <= depth && !out_.truncated; ++d) {
      std::size_t level_start = out_.formulas.size();
      if (!apply_modalities(d)) break;
      close_booleans(level_start);
    }
    return std::move(out_);
  }

 private:
  // Adds f as a new representative unless its truth set is known. Returns
  // false once the budget is exhausted.
  bool offer(const Formula& f, Signal truth, unsigned depth) {
    ++out_.candidates;
    std::string key = signal_key(truth);
    if (auto it = index_.find(key); it != index_.end()) {
      if (out_.pruned.size() < keep_pruned_) out_.pruned.emplace_back(f, it->second);
      return true;
    }
    if (out_.formulas.size() >= budget_) {
      out_.truncated = true;
      return false;
    }
    index_.emplace(std::move(key), out_.formulas.size());
    out_.formulas.push_back(f);
    out_.truths.push_back(std::move(truth));
    out_.depths.push_back(depth);
    return true;
  }

  // Negations and pairwise conjunctions/disjunctions until nothing new appears.
  void close_booleans(std::size_t from) {
    for (std::size_t i = from; i < out_.formulas.size(); ++i) {
      // Copies: offer() may reallocate the vectors.
      Formula fi = out_.formulas[i];
      Signal ti = out_.truths[i];
      unsigned di = out_.depths[i];
      if (!offer(fml::neg(fi), negate(ti), di)) return;
      for (std::size_t j = 0; j < i; ++j) {
        Formula fj = out_.formulas[j];
        Signal tj = out_.truths[j];
        unsigned dj = std::max(di, out_.depths[j]);
        if (!offer(fml::conj(fj, fi), conjoin(tj, ti), dj)) return;
        if (!offer(fml::disj(fj, fi), disjoin(tj, ti), dj)) return;
      }
    }
  }

  // Modal applications producing depth exactly d from representatives of depth < d.
  bool apply_modalities(unsigned d) {
    std::vector<std::size_t> args;
    for (std::size_t i = 0; i < out_.formulas.size(); ++i) args.push_back(i);
    auto fresh = [&](std::size_t i) { return out_.depths[i] + 1 == d; };
    auto get = [&](std::size_t i) { return std::make_pair(out_.formulas[i], out_.truths[i]); };
    if (logic_.metric()) {
      for (std::size_t i : args) {
        if (!fresh(i)) continue;
        auto [f, t] = get(i);
        if (!offer(fml::future1(f), diamond_unit_future(t), d)) return false;
        if (!offer(fml::past1(f), diamond_unit_past(t), d)) return false;
      }
    }
    for (std::size_t i : args) {
      for (std::size_t j : args) {
        if (!fresh(i) && !fresh(j)) continue;
        auto [fi, ti] = get(i);
        auto [fj, tj] = get(j);
        if (!offer(fml::until(fi, fj), until(ti, tj), d)) return false;
        if (!offer(fml::since(fi, fj), since(ti, tj), d)) return false;
      }
    }
    if (logic_.kind == Logic::Kind::QTLPnueli) {
      for (unsigned k = 2; k <= logic_.max_pnueli; ++k) {
        // Odometer over argument tuples, capped at `budget_` tuples per arity.
        std::vector<std::size_t> pick(k, 0);
        std::size_t tried = 0;
        while (tried < budget_) {
          bool any_fresh = false;
          for (std::size_t p : pick) any_fresh = any_fresh || fresh(args[p]);
          if (any_fresh) {
            ++tried;
            std::vector<Formula> fs;
            std::vector<Signal> ts;
            for (std::size_t p : pick) {
              fs.push_back(out_.formulas[args[p]]);
              ts.push_back(out_.truths[args[p]]);
            }
            if (!offer(fml::pnueli(std::move(fs)), pnueli_unit(ts), d)) return false;
          }
          std::size_t pos = 0;
          while (pos < k && ++pick[pos] == args.size()) pick[pos++] = 0;
          if (pos == k) break;
        }
      }
    }
    return true;
  }

  Logic logic_;
  const Env& env_;
  std::size_t budget_;
  std::size_t keep_pruned_;
  Enumeration out_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace detail

/// Semantic representatives of all formulas over P up to the given modal depth.
inline Enumeration enumerate_formulas(const Logic& logic, unsigned depth, const Env& dedup_env, std::size_t budget,
                                      std::size_t keep_pruned = 0) {
  return detail::Enumerator(logic, dedup_env, budget, keep_pruned).run(depth);
}

// ---------------------------------------------------------------------------
// Trivialization reports

struct TrivializationEntry {
  std::string formula;
  Trivial classification = Trivial::None;
  bool eventually = false;
  std::string witness;  // for None: the repeating behaviour that no trivial predicate matches
};

struct TrivializationReport {
  std::vector<TrivializationEntry> entries;
  bool truncated = false;

  std::size_t nontrivial() const {
    std::size_t n = 0;
    for (const auto& e : entries) n += e.classification == Trivial::None ? 1 : 0;
    return n;
  }
  std::size_t trivial() const { return entries.size() - nontrivial(); }

  /// `<formula>\t<classification>\t<eventually>` per line, then a summary footer.
  std::string to_string() const {
    std::string out;
    for (const auto& e : entries)
      out += e.formula + "\t" + dtl::to_string(e.classification) + "\t" + (e.eventually ? "1" : "0") + "\n";
    out += "total " + std::to_string(entries.size()) + " trivial " + std::to_string(trivial()) + " nontrivial " +
           std::to_string(nontrivial()) + " truncated " + (truncated ? "1" : "0") + "\n";
    return out;
  }
};

inline std::string nontrivial_witness(const Signal& truth, bool eventually) {
  std::string w = "period " + truth.period().to_string() + " pattern " + truth.pattern().to_string();
  if (truth.domain() == TimeDomain::HalfLine) w += " from " + truth.transient().to_string();
  if (!eventually && truth.transient().sign() > 0) w += " after prefix " + truth.prefix().to_string();
  return w;
}

inline TrivializationReport trivialization_report(const Env& env, const std::vector<Formula>& formulas,
                                                  const std::vector<Signal>& truths, bool eventually) {
  TrivializationReport report;
  const Signal& p = env.lookup("P");
  for (std::size_t i = 0; i < formulas.size(); ++i) {
    TrivializationEntry e{print(formulas[i]), classify_trivial(truths[i], p, eventually), eventually, {}};
    if (e.classification == Trivial::None) e.witness = nontrivial_witness(truths[i], eventually);
    report.entries.push_back(std::move(e));
  }
  return report;
}

inline TrivializationReport trivialization_report(const Env& env, const std::vector<Formula>& formulas,
                                                  bool eventually) {
  std::vector<Signal> truths;
  for (const auto& f : formulas) truths.push_back(evaluate(f, env));
  return trivialization_report(env, formulas, truths, eventually);
}

inline TrivializationReport trivialization_report(const Env& env, const Enumeration& e, bool eventually) {
  TrivializationReport r = trivialization_report(env, e.formulas, e.truths, eventually);
  r.truncated = e.truncated;
  return r;
}

// ---------------------------------------------------------------------------
// Separation checks

struct PaperCheck {
  std::string name;
  bool pass = true;
  std::vector<std::string> lines;

  void expect(bool ok, const std::string& what) {
    lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    pass = pass && ok;
  }
  void note(const std::string& what) { lines.push_back("note " + what); }

  std::string to_string() const {
    std::string out = "check " + name + "\n";
    for (const auto& l : lines) out += l + "\n";
    out += pass ? "PASS\n" : "FAIL\n";
    return out;
  }
};

inline constexpr unsigned kCheckDepth = 2;
inline constexpr std::size_t kCheckBudget = 5000;

/// Truth of `truth` on the open interval (a, b): 1 everywhere, 0 nowhere, nullopt when mixed.
inline std::optional<bool> constant_on(const Signal& truth, const Rational& a, const Rational& b) {
  IntervalSet inside = truth.window(a, b).clip(Interval::open(a, b));
  if (inside.empty()) return false;
  if (inside == IntervalSet::of(Interval::open(a, b))) return true;
  return std::nullopt;
}

namespace detail {

inline void check_enumeration_trivial(PaperCheck& check, const Logic& logic, const Env& env, bool eventually,
                                      const std::string& model) {
  Enumeration e = enumerate_formulas(logic, kCheckDepth, env, kCheckBudget);
  TrivializationReport r = trivialization_report(env, e, eventually);
  check.expect(r.nontrivial() == 0, std::string("every enumerated ") + logic.name() + " formula of modal depth <= " +
                                        std::to_string(kCheckDepth) + " is " + (eventually ? "eventually " : "") +
                                        "trivial on " + model + " (" + std::to_string(r.entries.size()) +
                                        " representatives, truncated " + (r.truncated ? "1" : "0") + ")");
  for (const auto& entry : r.entries)
    if (entry.classification == Trivial::None) check.note("nontrivial: " + entry.formula + " " + entry.witness);
}

inline PaperCheck check_pnueli() {
  PaperCheck c{"pnueli", true, {}};
  Env env = builtin_model(ModelSpec::thm2());
  Signal c2 = evaluate(parse("C2(P)"), env);
  Trivial cls = classify_trivial(c2, env.lookup("P"), true);
  c.expect(cls == Trivial::None, std::string("C2(P) on thm2 is not eventually trivial (got ") + to_string(cls) + ")");
  c.note("C2(P) on thm2: " + nontrivial_witness(c2, true));
  for (long long n = 0; n <= 5; ++n) {
    auto v = constant_on(c2, Rational(n), Rational(n) + Rational(1, 3));
    bool want = n % 2 == 1;
    c.expect(v && *v == want, "C2(P) is " + std::string(want ? "true" : "false") + " on (" + std::to_string(n) + "," +
                                  std::to_string(n) + "+1/3)");
  }
  check_enumeration_trivial(c, Logic::qtl(), env, true, "thm2");
  return c;
}

inline PaperCheck check_hierarchy(unsigned n) {
  PaperCheck c{"hierarchy:" + std::to_string(n), true, {}};
  Env env = builtin_model(ModelSpec::thm3(n));
  Signal cn = evaluate(fml::count(n, fml::atom("P")), env);
  Rational width(1, 2 * static_cast<long long>(n) - 1);
  std::vector<std::optional<bool>> values;
  for (long long k = 0; k <= 5; ++k) values.push_back(constant_on(cn, Rational(k), Rational(k) + width));
  bool constant = true, alternating = true;
  for (std::size_t k = 0; k < values.size(); ++k) {
    constant = constant && values[k].has_value();
    if (k > 0 && values[k] && values[k - 1]) alternating = alternating && *values[k] != *values[k - 1];
  }
  std::string w = width.to_string();
  c.expect(constant, "C" + std::to_string(n) + "(P) is constant on every (k,k+" + w + "), k = 0..5");
  c.expect(constant && alternating, "its value alternates with the parity of k");
  if (constant && values[0]) {
    c.note(std::string("orientation: C") + std::to_string(n) + "(P) true on (k,k+" + w + ") for " +
           (*values[0] ? "even" : "odd") + " k");
  }
  c.note("C" + std::to_string(n) + "(P) on thm3:" + std::to_string(n) + ": " + nontrivial_witness(cn, true));
  Logic logic = n >= 3 ? Logic::qtl_pnueli(n - 1) : Logic::qtl();
  check_enumeration_trivial(c, logic, env, true, "thm3:" + std::to_string(n));
  return c;
}

inline PaperCheck check_counting(unsigned k) {
  PaperCheck c{"counting:" + std::to_string(k), true, {}};
  Formula f = fml::count(k, fml::atom("P"));
  Env here = builtin_model(ModelSpec::mk(k));
  Env next = builtin_model(ModelSpec::mk(k + 1));
  Trivial a = classify_trivial(evaluate(f, here), here.lookup("P"));
  Trivial b = classify_trivial(evaluate(f, next), next.lookup("P"));
  std::string name = print(f);
  c.expect(a == Trivial::NotP, name + " on mk:" + std::to_string(k) + " is " + to_string(a) + " (want NotP)");
  c.expect(b == Trivial::True, name + " on mk:" + std::to_string(k + 1) + " is " + to_string(b) + " (want True)");
  return c;
}

inline PaperCheck check_triviality(unsigned k) {
  PaperCheck c{"triviality:" + std::to_string(k), true, {}};
  Env env = builtin_model(ModelSpec::mk(k));
  check_enumeration_trivial(c, Logic::qtl(), env, false, "mk:" + std::to_string(k));
  return c;
}

}  // namespace detail

/// Runs `pnueli`, `hierarchy:<n>`, `counting:<k>` or `triviality:<k>`.
inline PaperCheck paper_check(const std::string& name) {
  auto param = [&](std::size_t from) {
    std::string digits = name.substr(from);
    if (digits.empty() || digits.size() > 4 || digits.find_first_not_of("0123456789") != std::string::npos)
      throw lab_error("bad parameter in check '" + name + "'");
    unsigned v = static_cast<unsigned>(std::stoul(digits));
    if (v < 2) throw lab_error("check '" + name + "' needs a parameter >= 2");
    return v;
  };
  if (name == "pnueli") return detail::check_pnueli();
  if (name.rfind("hierarchy:", 0) == 0) return detail::check_hierarchy(param(10));
  if (name.rfind("counting:", 0) == 0) return detail::check_counting(param(9));
  if (name.rfind("triviality:", 0) == 0) return detail::check_triviality(param(11));
  throw lab_error("unknown check '" + name + "' (expected pnueli, hierarchy:<n>, counting:<k>, triviality:<k>)");
}

}  // namespace dtl
