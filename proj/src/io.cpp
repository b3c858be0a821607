#include "chebylie/io.hpp"

#include <charconv>
#include <sstream>

namespace chebylie {

Integer parse_decimal(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
    throw DomainError("not a decimal integer: '" + std::string(text) + "'");
  return Integer(std::string(text.front() == '+' ? text.substr(1) : text));
}

Json to_json(const Weight& w) {
  Json out = Json::array();
  for (std::size_t i = 0; i < w.rank(); ++i) out.push_back(w[i]);
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const ExpSum& a) {
  Json out = Json::array();
  for (const auto& [w, c] : a.terms()) out.push_back({{"weight", to_json(w)}, {"coeff", to_decimal(c)}});
  return out;
}

Json to_json(const YPolynomial& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json exps = Json::array();
    for (auto x : e) exps.push_back(x);
    out.push_back({{"exps", std::move(exps)}, {"coeff", to_decimal(c)}});
  }
  return out;
}

Json to_json(const PolyMap& p) {
  Json comps = Json::array();
  for (const auto& c : p.components) comps.push_back(to_json(c));
  return {{"type", p.type}, {"k", p.k}, {"components", std::move(comps)}};
}

Json to_json(const CharCombination& c) {
  Json out = Json::array();
  for (const auto& [w, x] : c.terms()) out.push_back({{"highest_weight", to_json(w)}, {"coeff", to_decimal(x)}});
  return out;
}

namespace {

template <typename T>
Json matrix_json(const Matrix<T>& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Integer coeff_from_json(const Json& j) {
  if (j.is_string()) return parse_decimal(j.get<std::string>());
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  throw DomainError("coefficient must be a decimal string");
}

const Json& require_array(const Json& j, const char* what) {
  if (!j.is_array()) throw DomainError(std::string(what) + ": expected a JSON array");
  return j;
}

}  // namespace

Json to_json(const CharMatrix& m) { return matrix_json(m); }
Json to_json(const PolyMatrix& m) { return matrix_json(m); }

Json weyl_elements_json(const WeylGroup& grp) {
  Json out = Json::array();
  const std::size_t n = grp.rank();
  for (std::size_t idx = 0; idx < grp.order(); ++idx) {
    const auto t = grp.matrix_entries(idx);
    Json rows = Json::array();
    for (std::size_t r = 0; r < n; ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < n; ++c) row.push_back(static_cast<int>(t[r * n + c]));
      rows.push_back(std::move(row));
    }
    out.push_back({{"matrix", std::move(rows)}, {"det", grp.det_sign(idx)}, {"length", grp.length(idx)}});
  }
  return out;
}

Weight weight_from_json(const Json& j) {
  require_array(j, "weight");
  Weight w(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) w[i] = j[i].get<std::int64_t>();
  return w;
}

ExpSum exp_sum_from_json(std::size_t rank, const Json& j) {
  std::vector<ExpSum::Term> terms;
  for (const auto& t : require_array(j, "ExpSum")) {
    Weight w = weight_from_json(t.at("weight"));
    if (w.rank() != rank) throw DimensionError("ExpSum JSON: weight has the wrong rank");
    terms.emplace_back(std::move(w), coeff_from_json(t.at("coeff")));
  }
  return ExpSum::from_terms(rank, std::move(terms));
}

YPolynomial poly_from_json(std::size_t nvars, const Json& j) {
  std::vector<YPolynomial::Term> terms;
  for (const auto& t : require_array(j, "YPolynomial")) {
    const Json& exps = require_array(t.at("exps"), "exps");
    if (exps.size() != nvars) throw DimensionError("YPolynomial JSON: exponent vector has the wrong length");
    Exponents e;
    for (const auto& x : exps) e.push_back(x.get<std::uint16_t>());
    terms.emplace_back(std::move(e), coeff_from_json(t.at("coeff")));
  }
  return YPolynomial::from_terms(nvars, std::move(terms));
}

PolyMap poly_map_from_json(const Json& j) {
  PolyMap p;
  p.type = j.at("type").get<std::string>();
  p.k = j.at("k").get<int>();
  const Json& comps = require_array(j.at("components"), "components");
  for (const auto& c : comps) p.components.push_back(poly_from_json(comps.size(), c));
  return p;
}

CharCombination char_combination_from_json(std::size_t rank, const Json& j) {
  CharCombination out(rank);
  for (const auto& t : require_array(j, "CharCombination")) {
    Weight w = weight_from_json(t.at("highest_weight"));
    if (w.rank() != rank) throw DimensionError("CharCombination JSON: weight has the wrong rank");
    out.add_term(w, coeff_from_json(t.at("coeff")));
  }
  return out;
}

namespace {

// Appends "c*body" to a running sum, writing the sign as a binary operator.
void append_term(std::string& out, const Integer& c, const std::string& body) {
  const bool negative = c < 0;
  const Integer mag = negative ? Integer(-c) : c;
  if (out.empty())
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  if (body.empty())
    out += to_decimal(mag);
  else if (mag == 1)
    out += body;
  else
    out += to_decimal(mag) + "*" + body;
}

}  // namespace

std::string format_polynomial(const YPolynomial& p) {
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    std::string body;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!body.empty()) body += "*";
      body += "y" + std::to_string(i + 1);
      if (e[i] > 1) body += "^" + std::to_string(e[i]);
    }
    append_term(out, c, body);
  }
  return out.empty() ? "0" : out;
}

std::string format_characters(const CharCombination& c) {
  std::string out;
  for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
    std::string sub;
    for (std::size_t i = 0; i < it->first.rank(); ++i) sub += (i ? "," : "") + std::to_string(it->first[i]);
    append_term(out, it->second, "chi_{" + sub + "}");
  }
  return out.empty() ? "0" : out;
}

std::string format_exp_sum(const ExpSum& a) {
  std::string out;
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it)
    append_term(out, it->second, "e^" + it->first.to_string());
  return out.empty() ? "0" : out;
}

std::string format_matrix(const IntMatrix& m) { return to_json(m).dump(); }

}  // namespace chebylie
