#pragma once

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "chebylie/jacchar.hpp"

namespace testing {

using namespace chebylie;

// Parses "y1^2 - 2*y2 + 3" into a YPolynomial over nvars variables.
inline YPolynomial poly(const std::string& text, std::size_t nvars) {
  std::map<std::vector<int>, long long> acc;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&] {
    long long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) v = v * 10 + (text[pos++] - '0');
    return v;
  };
  skip();
  while (pos < text.size()) {
    long long sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    }
    long long coeff = 1;
    std::vector<int> exps(nvars, 0);
    if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coeff = number();
      if (pos < text.size() && text[pos] == '*') ++pos;
    }
    while (pos < text.size() && text[pos] == 'y') {
      ++pos;
      const auto var = static_cast<std::size_t>(number()) - 1;
      int e = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        e = static_cast<int>(number());
      }
      exps.at(var) += e;
      if (pos < text.size() && text[pos] == '*') ++pos;
    }
    acc[exps] += sign * coeff;
    skip();
  }
  std::vector<YPolynomial::Term> terms;
  for (const auto& [e, c] : acc) terms.emplace_back(Exponents(e.begin(), e.end()), Integer(c));
  return YPolynomial::from_terms(nvars, std::move(terms));
}

struct CharTerm {
  long long coeff;
  std::vector<std::int64_t> highest_weight;
};

inline CharCombination chars(std::size_t rank, const std::vector<CharTerm>& terms) {
  CharCombination out(rank);
  for (const auto& t : terms) out.add_term(Weight(std::span<const std::int64_t>(t.highest_weight)), t.coeff);
  return out;
}

inline std::shared_ptr<const WeylGroup> group(const std::string& type) {
  return std::make_shared<const WeylGroup>(WeylGroup::enumerate(RootSystem::parse(type)));
}

// (n+1)!, 2^n n!, 2^(n-1) n! and the exceptional orders.
inline std::uint64_t table_weyl_order(Family f, int n) {
  std::uint64_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= static_cast<std::uint64_t>(i);
  switch (f) {
    case Family::A:
      return fact * static_cast<std::uint64_t>(n + 1);
    case Family::B:
    case Family::C:
      return (std::uint64_t{1} << n) * fact;
    case Family::D:
      return (std::uint64_t{1} << (n - 1)) * fact;
    case Family::E:
      return n == 6 ? 51840ULL : n == 7 ? 2903040ULL : 696729600ULL;
    case Family::F:
      return 1152;
    case Family::G:
      return 12;
  }
  return 0;
}

inline int table_highest_coefficient(Family f, int n) {
  switch (f) {
    case Family::A:
      return 1;
    case Family::B:
    case Family::C:
    case Family::D:
      return 2;
    case Family::E:
      return n == 6 ? 3 : n == 7 ? 4 : 6;
    case Family::F:
      return 4;
    case Family::G:
      return 3;
  }
  return 0;
}

// Normalized Chebyshev polynomials: T_0 = 2, T_1 = x, T_k = x T_{k-1} - T_{k-2}.
inline std::vector<YPolynomial> chebyshev_recurrence(int kmax) {
  std::vector<YPolynomial> t{YPolynomial::constant(1, 2), YPolynomial::variable(1, 0)};
  for (int k = 2; k <= kmax; ++k) t.push_back(YPolynomial::variable(1, 0) * t[k - 1] - t[k - 2]);
  return t;
}

template <typename T>
bool matrices_equal(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

}  // namespace testing
