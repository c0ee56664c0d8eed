#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "tasep/chain.hpp"
#include "tasep/permutation.hpp"
#include "tasep/polynomial.hpp"
#include "tasep/schubert.hpp"

namespace tasep {

using json = nlohmann::ordered_json;

inline json to_json(const Permutation& w) { return json(std::vector<int>(w.entries().begin(), w.entries().end())); }

inline Permutation permutation_from_json(const json& j) { return Permutation(j.get<std::vector<int>>()); }

inline json to_json(const Partition& lam) { return json(std::vector<int>(lam.parts().begin(), lam.parts().end())); }

// [{coef, xexp, yexp}, ...] in canonical term order; coef is a decimal string.
inline json to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    terms.push_back({{"coef", c.get_str()}, {"xexp", m.xexp()}, {"yexp", m.yexp()}});
  }
  return terms;
}

inline Polynomial polynomial_from_json(const json& j, int nvars) {
  Polynomial p(nvars);
  for (const auto& t : j) {
    const auto xexp = t.at("xexp").get<std::vector<int>>();
    const auto yexp = t.at("yexp").get<std::vector<int>>();
    if (static_cast<int>(xexp.size()) != nvars || static_cast<int>(yexp.size()) != nvars) {
      throw std::invalid_argument("exponent vector length does not match nvars");
    }
    Monomial m(nvars);
    for (int i = 1; i <= nvars; ++i) {
      m.set_x(i, xexp[i - 1]);
      m.set_y(i, yexp[i - 1]);
    }
    const json& coef = t.at("coef");
    p.add_term(m, coef.is_string() ? Integer(coef.get<std::string>()) : Integer(coef.get<long>()));
  }
  return p;
}

inline std::string to_text(const Rational& q) { return q.get_str(); }

// One rational per line: x_1..x_n then y_1..y_n. Blank lines and '#'
// comments are ignored.
inline RateParams parse_params(std::istream& in, int n) {
  std::vector<Rational> values;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    values.push_back(parse_rational(line));
  }
  if (static_cast<int>(values.size()) != 2 * n) {
    throw std::invalid_argument("params file must hold " + std::to_string(2 * n) + " rationals, found " +
                                std::to_string(values.size()));
  }
  RateParams p;
  p.x.assign(values.begin(), values.begin() + n);
  p.y.assign(values.begin() + n, values.end());
  return p;
}

inline RateParams read_params_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open params file " + path);
  return parse_params(in, n);
}

inline std::string format_params(const RateParams& p) {
  std::ostringstream out;
  for (const auto& v : p.x) out << v.get_str() << '\n';
  for (const auto& v : p.y) out << v.get_str() << '\n';
  return out.str();
}

}  // namespace tasep
