#pragma once

#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tasep/chain.hpp"
#include "tasep/formulas.hpp"
#include "tasep/mlq.hpp"
#include "tasep/schubert.hpp"
#include "tasep/serialize.hpp"
#include "tasep/suites.hpp"

namespace tasep::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

struct Options {
  bool json = false;
  bool timing = false;
  std::uint64_t seed = 1;

  // psi
  int n = 0;
  std::string params_file;
  std::string eval;
  bool y_zero = false;

  // formula / mlq / schubert
  std::string state;
  std::string perm;
  bool list = false;
  bool sum = false;

  // verify
  std::string suite = "all";
  int trials = 5;

  // count
  int max_n = 0;
  int by_k = 0;
};

namespace detail {

inline json envelope(const std::string& command) { return json{{"schema", kSchemaVersion}, {"command", command}}; }

// "x1=2,x2=1/3,y1=0"; unspecified variables are zero.
inline RateParams parse_eval(const std::string& text, int n) {
  RateParams p{std::vector<Rational>(n, Rational(0)), std::vector<Rational>(n, Rational(0))};
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.find_first_not_of(' ') == std::string::npos) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq < 2) throw std::invalid_argument("bad --eval item: " + item);
    const std::string var = item.substr(item.find_first_not_of(' '), eq - item.find_first_not_of(' '));
    if (var.size() < 2 || (var[0] != 'x' && var[0] != 'y')) throw std::invalid_argument("bad --eval variable: " + var);
    int idx = 0;
    try {
      idx = std::stoi(var.substr(1));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad --eval variable: " + var);
    }
    if (idx < 1 || idx > n) throw std::invalid_argument("variable out of range: " + var);
    (var[0] == 'x' ? p.x : p.y)[idx - 1] = parse_rational(item.substr(eq + 1));
  }
  return p;
}

inline std::string join_partitions(const PartitionSequence& seq) {
  if (seq.empty()) return "()";
  std::string s;
  for (std::size_t i = 0; i < seq.size(); ++i) s += (i ? " " : "") + seq[i].to_string();
  return s;
}

inline int cmd_psi(const Options& o, std::ostream& out) {
  const int n = o.n;
  if (n < 1) throw std::invalid_argument("--n must be positive");
  const auto states = all_permutations(n);
  json j = envelope("psi");
  j["n"] = n;
  j["y_zero"] = o.y_zero;
  json rows = json::array();
  if (o.params_file.empty() && o.eval.empty()) {
    j["mode"] = "symbolic";
    for (auto& [w, p] : symbolic_stationary(n)) {
      const Polynomial q = o.y_zero ? p.set_y_zero() : p;
      if (o.json) {
        rows.push_back({{"state", to_json(w)}, {"psi", to_json(q)}, {"text", q.to_string()}});
      } else {
        out << w.to_string() << '\t' << q.to_string() << '\n';
      }
    }
  } else {
    if (!o.params_file.empty() && !o.eval.empty()) throw std::invalid_argument("use either --params or --eval");
    RateParams params = o.params_file.empty() ? parse_eval(o.eval, n) : read_params_file(o.params_file, n);
    if (o.y_zero)
      for (auto& v : params.y) v = 0;
    if (!params.rates_positive()) throw std::invalid_argument("all rates x_i - y_{n+1-j} (i < j) must be positive");
    j["mode"] = "point";
    const auto psi = psi_at_point(n, params);
    for (std::size_t s = 0; s < states.size(); ++s) {
      if (o.json) {
        rows.push_back({{"state", to_json(states[s])}, {"psi", psi[s].get_str()}});
      } else {
        out << states[s].to_string() << '\t' << psi[s].get_str() << '\n';
      }
    }
  }
  if (o.json) {
    j["states"] = rows;
    out << j.dump(2) << '\n';
  }
  return 0;
}

inline int cmd_formula(const Options& o, std::ostream& out) {
  const Permutation w = Permutation::parse(o.state);
  const int n = w.size();
  const auto parts = psi_partitions(w);
  std::vector<LehmerCode> codes;
  std::vector<Permutation> labels;
  for (const auto& lam : parts) {
    codes.push_back(g_vector(n, lam));
    labels.push_back(code_to_perm(codes.back()));
  }
  Polynomial prefactor(n);
  Polynomial psi(n);
  if (o.y_zero) {
    const Y0Formula f = main_formula_y0(w);
    prefactor = Polynomial::term(f.prefactor);
    psi = f.expand();
  } else {
    prefactor = xy_fact(w);
    psi = main_formula(w);
  }
  if (o.json) {
    json j = envelope("formula");
    j["state"] = to_json(w);
    j["k"] = inv_descent_count(w);
    j["y_zero"] = o.y_zero;
    json factors = json::array();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      std::vector<int> code(codes[i].values().begin(), codes[i].values().end());
      factors.push_back({{"partition", to_json(parts[i])}, {"g", code}, {"permutation", to_json(labels[i])}});
    }
    j["factors"] = factors;
    j["prefactor"] = prefactor.to_string();
    j["psi"] = to_json(psi);
    j["psi_text"] = psi.to_string();
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "state: " << w.to_string() << '\n';
  out << "k: " << inv_descent_count(w) << '\n';
  out << "Psi: " << join_partitions(parts) << '\n';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out << "g_" << n << parts[i].to_string() << " = (" << codes[i].to_string() << ") -> S[" << labels[i].to_string()
        << "]\n";
  }
  out << "prefactor: " << prefactor.to_string() << '\n';
  out << "factors:";
  if (labels.empty()) out << " (none)";
  for (const auto& l : labels) out << " S[" << l.to_string() << "]";
  out << '\n';
  out << "psi: " << psi.to_string() << '\n';
  return 0;
}

inline void print_report(const RunReport& rep, bool timing, std::ostream& out) {
  for (const auto& c : rep.cases) {
    out << (c.pass ? "PASS " : "FAIL ") << rep.suite << ' ' << c.name;
    if (!c.pass) out << " expected=" << c.expected << " actual=" << c.actual;
    out << '\n';
  }
  out << "suite " << rep.suite << " n=" << rep.n << ": " << rep.pass_count() << '/' << rep.cases.size() << " passed";
  if (timing) out << " in " << rep.seconds << " s";
  out << '\n';
}

inline json report_json(const RunReport& rep, bool timing) {
  json cases = json::array();
  for (const auto& c : rep.cases) {
    json cj{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}};
    if (!c.pass) {
      cj["expected"] = c.expected;
      cj["actual"] = c.actual;
    }
    cases.push_back(cj);
  }
  json j{{"suite", rep.suite}, {"n", rep.n}, {"seed", rep.seed}, {"passed", rep.passed()}, {"cases", cases}};
  if (timing) j["seconds"] = rep.seconds;
  return j;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<std::string> suites;
  if (o.suite == "all") {
    suites = suite_names();
  } else {
    suites.push_back(o.suite);
  }
  bool ok = true;
  json reports = json::array();
  for (const auto& s : suites) {
    const RunReport rep = run_suite(s, o.n, o.seed, o.trials);
    ok = ok && rep.passed();
    if (o.json) {
      reports.push_back(report_json(rep, o.timing));
    } else {
      print_report(rep, o.timing, out);
    }
  }
  if (o.json) {
    json j = envelope("verify");
    j["passed"] = ok;
    j["reports"] = reports;
    out << j.dump(2) << '\n';
  }
  return ok ? 0 : kExitVerifyFailed;
}

inline int cmd_count(const Options& o, std::ostream& out) {
  json j = envelope("count");
  if (o.max_n > 0) {
    std::vector<std::int64_t> counts;
    for (int m = 1; m <= o.max_n; ++m) counts.push_back(count_evil_avoiding(m));
    if (o.json) {
      j["evil_avoiding"] = counts;
    } else {
      for (std::size_t i = 0; i < counts.size(); ++i) out << (i ? " " : "") << counts[i];
      out << '\n';
    }
  }
  if (o.by_k > 0) {
    std::map<int, std::size_t> sizes;
    for (const auto& w : enumerate_states(o.by_k)) ++sizes[inv_descent_count(w)];
    if (o.json) {
      json bk = json::object();
      for (auto [k, c] : sizes) bk[std::to_string(k)] = c;
      j["states_by_k"] = bk;
    } else {
      out << "St(" << o.by_k << ",k):";
      for (auto [k, c] : sizes) out << ' ' << k << ':' << c;
      out << '\n';
    }
  }
  if (o.max_n <= 0 && o.by_k <= 0) throw std::invalid_argument("count needs --max-n or --by-k");
  if (o.json) out << j.dump(2) << '\n';
  return 0;
}

inline int cmd_mlq(const Options& o, std::ostream& out) {
  const Permutation w = Permutation::parse(o.state);
  if (o.n != 0 && o.n != w.size()) throw std::invalid_argument("--n does not match the state length");
  if (w.size() < 2) throw std::invalid_argument("multiline queues need n >= 2");
  json j = envelope("mlq");
  j["state"] = to_json(w);
  if (o.list) {
    json queues = json::array();
    for (const auto& q : queues_of_type(w)) {
      const Monomial wt = queue_weight(bully_project(q));
      if (o.json) {
        queues.push_back({{"queue", q.to_string()}, {"weight", wt.to_string()}});
      } else {
        out << q.to_string() << "weight: " << wt.to_string() << "\n\n";
      }
    }
    j["queues"] = queues;
  }
  if (o.sum || !o.list) {
    const Polynomial p = psi_via_mlq(w);
    if (o.json) {
      j["psi"] = to_json(p);
      j["psi_text"] = p.to_string();
    } else {
      out << "psi: " << p.to_string() << '\n';
    }
  }
  if (o.json) out << j.dump(2) << '\n';
  return 0;
}

inline int cmd_schubert(const Options& o, std::ostream& out) {
  const Permutation w = Permutation::parse(o.perm);
  const Polynomial p = o.y_zero ? single_schubert(w) : double_schubert(w);
  const bool vex = is_vexillary(w);
  if (o.json) {
    json j = envelope("schubert");
    j["permutation"] = to_json(w);
    j["y_zero"] = o.y_zero;
    const LehmerCode code = lehmer_code(w);
    j["code"] = std::vector<int>(code.values().begin(), code.values().end());
    j["vexillary"] = vex;
    if (vex) {
      j["shape"] = to_json(shape(w));
      j["flag"] = flag(w);
    }
    j["polynomial"] = to_json(p);
    j["text"] = p.to_string();
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "code: (" << lehmer_code(w).to_string() << ")\n";
  if (vex) {
    std::string f;
    for (int e : flag(w)) f += (f.empty() ? "" : ",") + std::to_string(e);
    out << "vexillary: shape " << shape(w).to_string() << " flag (" << f << ")\n";
  } else {
    out << "vexillary: no\n";
  }
  out << p.to_string() << '\n';
  return 0;
}

}  // namespace detail

// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Exact stationary distributions of the inhomogeneous TASEP on a ring"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--seed", o.seed, "Seed for randomized identity tests");
  app.add_flag("--timing", o.timing, "Include wall time in verify reports");

  auto* psi = app.add_subcommand("psi", "Renormalized stationary distribution psi_w");
  psi->add_option("--n", o.n, "Ring size")->required()->check(CLI::Range(1, 7));
  psi->add_option("--params", o.params_file, "File with x_1..x_n then y_1..y_n, one rational per line");
  psi->add_option("--eval", o.eval, "Point as x1=...,y1=...; missing values are 0");
  psi->add_flag("--y-zero", o.y_zero, "Set every y_i to 0");

  auto* formula = app.add_subcommand("formula", "Schubert product formula for an evil-avoiding state");
  formula->add_option("--state", o.state, "State in one-line notation, e.g. 1,5,4,3,2")->required();
  formula->add_flag("--y-zero", o.y_zero, "Single Schubert form with the x^mu prefactor");

  auto* verify = app.add_subcommand("verify", "Run acceptance suites");
  verify->add_option("--n", o.n, "Ring size")->required()->check(CLI::Range(2, 7));
  verify->add_option("--suite", o.suite, "Suite to run")
      ->check(CLI::IsMember({"all", "main", "eta", "mlq", "flags", "counts"}));
  verify->add_option("--trials", o.trials, "Random points per randomized check")->check(CLI::Range(1, 1000));

  auto* count = app.add_subcommand("count", "Count evil-avoiding permutations");
  count->add_option("--max-n", o.max_n, "Print e(1..max-n)")->check(CLI::Range(1, 10));
  count->add_option("--by-k", o.by_k, "Print |St(n,k)| for each k")->check(CLI::Range(1, 10));

  auto* mlq = app.add_subcommand("mlq", "Multiline queues of a given type");
  mlq->add_option("--n", o.n, "Ring size (optional, checked against the state)");
  mlq->add_option("--state", o.state, "Queue type in one-line notation")->required();
  mlq->add_flag("--list", o.list, "List every queue with its weight");
  mlq->add_flag("--sum", o.sum, "Print the weight sum (default)");

  auto* schubert = app.add_subcommand("schubert", "Schubert polynomial of a permutation");
  schubert->add_option("--perm", o.perm, "Permutation in one-line notation")->required();
  schubert->add_flag("--y-zero", o.y_zero, "Single Schubert polynomial");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*psi) return detail::cmd_psi(o, out);
    if (*formula) return detail::cmd_formula(o, out);
    if (*verify) return detail::cmd_verify(o, out);
    if (*count) return detail::cmd_count(o, out);
    if (*mlq) return detail::cmd_mlq(o, out);
    if (*schubert) return detail::cmd_schubert(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitUsage;
}

}  // namespace tasep::cli
