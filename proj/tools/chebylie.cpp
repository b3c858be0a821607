// chebylie: generalized Chebyshev maps and their Jacobians from the command line.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chebylie/io.hpp"
#include "chebylie/parallel.hpp"
#include "chebylie/verify.hpp"
#include "chebylie/version.hpp"

namespace {

using namespace chebylie;

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kBadInput = 2, kLimit = 3, kInternal = 4 };

struct Common {
  std::vector<std::string> types;
  std::string type_option;
  std::string format = "text";
  std::uint64_t max_weyl_order = WeylGroup::kDefaultCap;
  std::uint64_t max_pair_budget = JacobianOptions::kDefaultPairBudget;
  int workers = 0;
};

struct Settings {
  Common common;
  std::vector<int> ks;
  std::string method = "character";
  std::string evaluation = "pruned";
  bool matrices = false;
};

void add_common(CLI::App* cmd, Common& c, bool many_types) {
  if (many_types)
    cmd->add_option("lie_types", c.types, "Lie types, e.g. G2 or A2xG2");
  else
    cmd->add_option("lie_type", c.types, "Lie type, e.g. G2 or A2xG2")->expected(0, 1);
  cmd->add_option("-t,--type", c.type_option, "Lie type (alternative to the positional argument)");
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--max-weyl-order", c.max_weyl_order, "Refuse to enumerate larger Weyl groups")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-pair-budget", c.max_pair_budget, "Refuse Jacobian double sums with more pairs")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--workers", c.workers, "Worker threads (default: CHEBYLIE_WORKERS or all cores)")
      ->check(CLI::PositiveNumber);
}

std::vector<std::string> requested_types(const Common& c) {
  std::vector<std::string> out = c.types;
  if (!c.type_option.empty()) out.insert(out.begin(), c.type_option);
  return out;
}

std::string single_type(const Common& c) {
  const auto types = requested_types(c);
  if (types.empty()) throw ConstraintError("a Lie type is required (positional or --type)");
  if (types.size() > 1) throw ConstraintError("exactly one Lie type expected");
  return types.front();
}

Json envelope(const std::string& command) {
  return Json{{"tool", "chebylie"}, {"version", kVersion}, {"command", command}};
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out;
}

std::shared_ptr<const WeylGroup> make_group(const RootSystem& rs, const Common& c) {
  return std::make_shared<const WeylGroup>(WeylGroup::enumerate(rs, c.max_weyl_order));
}

JacobianOptions jacobian_options(const Settings& s) {
  JacobianOptions o;
  o.pair_budget = s.common.max_pair_budget;
  o.evaluation = s.evaluation == "full" ? Evaluation::full_group : Evaluation::coset_pruned;
  return o;
}

int run_info(const Settings& s) {
  const RootSystem rs = RootSystem::parse(single_type(s.common));
  if (s.common.format == "json") {
    Json j = envelope("info");
    j["type"] = rs.name();
    j["rank"] = rs.rank();
    j["cartan"] = to_json(rs.cartan());
    j["degrees"] = rs.degrees();
    j["weyl_order"] = rs.weyl_order();
    j["m_g"] = rs.highest_root_coefficient();
    print_json(j);
  } else {
    std::cout << "type: " << rs.name() << "\nrank: " << rs.rank() << "\ncartan: " << format_matrix(rs.cartan())
              << "\ndegrees: " << join(rs.degrees()) << "\n|W|: " << rs.weyl_order()
              << "\nm_g: " << rs.highest_root_coefficient() << '\n';
  }
  return kOk;
}

int run_weyl(const Settings& s) {
  const RootSystem rs = RootSystem::parse(single_type(s.common));
  const auto grp = make_group(rs, s.common);
  const int mg = max_abs_entry(*grp);
  if (s.common.format == "json") {
    Json j = envelope("weyl");
    j["type"] = rs.name();
    j["order"] = grp->order();
    j["degrees"] = rs.degrees();
    j["m_g"] = mg;
    if (s.matrices) j["elements"] = weyl_elements_json(*grp);
    print_json(j);
  } else {
    std::cout << "type: " << rs.name() << "\norder: " << grp->order() << "\ndegrees: " << join(rs.degrees())
              << "\nm_g: " << mg << '\n';
    if (s.matrices)
      for (const auto& e : weyl_elements_json(*grp))
        std::cout << e["matrix"].dump() << " det=" << e["det"] << " length=" << e["length"] << '\n';
  }
  return kOk;
}

int single_k(const Settings& s) {
  if (s.ks.size() != 1) throw ConstraintError("exactly one -k value expected");
  if (s.ks[0] < 1) throw ConstraintError("k must be >= 1");
  return s.ks[0];
}

int run_chebyshev(const Settings& s) {
  const RootSystem rs = RootSystem::parse(single_type(s.common));
  const int k = single_k(s);
  ChebyshevEngine engine(make_group(rs, s.common));
  const PolyMap p = engine.chebyshev_map(k);
  if (s.common.format == "json") {
    Json j = envelope("chebyshev");
    j["map"] = to_json(p);
    print_json(j);
  } else {
    std::cout << "P^" << k << " for " << p.type << ":\n";
    for (std::size_t i = 0; i < p.components.size(); ++i)
      std::cout << "  g" << i + 1 << " = " << format_polynomial(p.components[i]) << '\n';
  }
  return kOk;
}

template <typename T, typename F>
void print_text_matrix(const char* title, const Matrix<T>& m, F format) {
  std::cout << title << ":\n";
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      std::cout << "  [" << i + 1 << "," << j + 1 << "] " << format(m(i, j)) << '\n';
}

int run_jacobian(const Settings& s) {
  const RootSystem rs = RootSystem::parse(single_type(s.common));
  const int k = single_k(s);
  ChebyshevEngine engine(make_group(rs, s.common));
  const bool want_chars = s.method != "symbolic";
  const bool want_symbolic = s.method != "character";

  std::optional<CharMatrix> chars;
  std::optional<PolyMatrix> expanded;
  std::optional<PolyMatrix> symbolic;
  if (want_chars) {
    chars = jacobian_characters(engine.group(), k, jacobian_options(s));
    expanded = expand_to_polynomials(engine, *chars);
  }
  if (want_symbolic) symbolic = engine.jacobian_symbolic(k);
  const PolyMatrix& polys = symbolic ? *symbolic : *expanded;
  const YPolynomial det = determinant(polys);
  const bool agreement = !(chars && symbolic) || *expanded == *symbolic;

  if (s.common.format == "json") {
    Json j = envelope("jacobian");
    j["type"] = rs.name();
    j["k"] = k;
    j["method"] = s.method;
    if (chars) j["characters"] = to_json(*chars);
    j["polynomials"] = to_json(polys);
    j["determinant"] = to_json(det);
    if (chars && symbolic) j["agreement"] = agreement;
    print_json(j);
  } else {
    std::cout << "J(P^" << k << ") for " << rs.name() << '\n';
    if (chars) print_text_matrix("characters", *chars, format_characters);
    print_text_matrix("polynomials", polys, format_polynomial);
    std::cout << "determinant: " << format_polynomial(det) << '\n';
    if (chars && symbolic) std::cout << "agreement: " << (agreement ? "true" : "false") << '\n';
  }
  return agreement ? kOk : kCheckFailed;
}

int run_verify(const Settings& s) {
  auto types = requested_types(s.common);
  if (types.empty()) types = {"A1", "A2", "A3", "B2", "B3", "C3", "G2"};
  VerifyOptions options;
  if (!s.ks.empty()) options.ks = s.ks;
  for (int k : options.ks)
    if (k < 1) throw ConstraintError("k must be >= 1");
  options.jacobian = jacobian_options(s);
  std::vector<RootSystem> systems;
  for (const auto& t : types) systems.push_back(RootSystem::parse(t));

  bool ok = true;
  Json report = Json::array();
  for (const auto& rs : systems) {
    ChebyshevEngine engine(make_group(rs, s.common));
    const auto results = run_identity_suite(engine, options);
    ok = ok && all_passed(results);
    if (s.common.format == "json") {
      Json checks = Json::array();
      for (const auto& r : results) checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      report.push_back({{"type", rs.name()}, {"checks", std::move(checks)}});
    } else {
      for (const auto& r : results) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << rs.name() << ": " << r.name;
        if (!r.passed) std::cout << " (" << r.detail << ')';
        std::cout << '\n';
      }
    }
  }
  if (s.common.format == "json") {
    Json j = envelope("verify");
    j["ks"] = options.ks;
    j["results"] = std::move(report);
    j["all_passed"] = ok;
    print_json(j);
  } else {
    std::cout << (ok ? "all checks passed" : "some checks FAILED") << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Chebyshev polynomial maps and their Jacobians in exact arithmetic"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  Settings s;
  auto* info = app.add_subcommand("info", "Cartan matrix, degrees, |W| and m_g");
  add_common(info, s.common, false);

  auto* weyl = app.add_subcommand("weyl", "Enumerate the Weyl group");
  add_common(weyl, s.common, false);
  weyl->add_flag("--matrices", s.matrices, "List every element matrix");

  auto* cheb = app.add_subcommand("chebyshev", "The polynomial map P^k");
  add_common(cheb, s.common, false);
  cheb->add_option("-k", s.ks, "Dilation factor")->required()->expected(1);

  auto* jac = app.add_subcommand("jacobian", "The Jacobian of P^k");
  add_common(jac, s.common, false);
  jac->add_option("-k", s.ks, "Dilation factor")->required()->expected(1);
  jac->add_option("--method", s.method, "Character formula, symbolic differentiation, or both")
      ->check(CLI::IsMember({"character", "symbolic", "both"}));
  jac->add_option("--evaluation", s.evaluation, "Double sum over all of W x W or over coset representatives")
      ->check(CLI::IsMember({"full", "pruned"}));

  auto* verify = app.add_subcommand("verify", "Run the identity suite");
  add_common(verify, s.common, true);
  verify->add_option("-k", s.ks, "Values of k (default 1 2 3 4)")->expected(1, -1);
  verify->add_option("--evaluation", s.evaluation, "Evaluation used for the character formula")
      ->check(CLI::IsMember({"full", "pruned"}));

  CLI11_PARSE(app, argc, argv);

  configure_workers_from_env();
  if (s.common.workers > 0) set_worker_count(s.common.workers);

  try {
    if (info->parsed()) return run_info(s);
    if (weyl->parsed()) return run_weyl(s);
    if (cheb->parsed()) return run_chebyshev(s);
    if (jac->parsed()) return run_jacobian(s);
    return run_verify(s);
  } catch (const LimitExceeded& e) {
    std::cerr << "chebylie: limit exceeded: " << e.what() << '\n';
    return kLimit;
  } catch (const ConsistencyError& e) {
    std::cerr << "chebylie: internal consistency failure: " << e.what() << '\n';
    return kInternal;
  } catch (const Error& e) {
    std::cerr << "chebylie: " << e.what() << '\n';
    return kBadInput;
  }
}
