#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "adjrep/adjoint.hpp"
#include "adjrep/characters.hpp"
#include "adjrep/expression.hpp"
#include "adjrep/forests.hpp"
#include "adjrep/json_io.hpp"

namespace adjrep::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int cap_from_env(int fallback)
{
  const char* raw = std::getenv("ADJOINT_CAP");
  if (raw == nullptr || *raw == '\0')
    return fallback;
  try {
    std::size_t used = 0;
    int cap = std::stoi(raw, &used);
    if (used != std::string(raw).size() || cap < 0)
      throw std::invalid_argument(raw);
    return cap;
  } catch (const std::exception&) {
    throw UsageError(std::string("ADJOINT_CAP must be a nonnegative integer, got '") +
                     raw + "'");
  }
}

Json read_json_file(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("malformed JSON in '" + path + "': " + e.what());
  }
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

// adjoint ---------------------------------------------------------------

struct AdjointArgs {
  int n = 0;
  std::string space = "mat";
  std::string method = "all";
  std::string format = "json";
};

int run_adjoint(const AdjointArgs& a, std::ostream& out)
{
  const SpaceKind kind = parse_space(a.space);
  const int cap = cap_from_env(kDefaultTraceCap);
  const bool in_range = a.n >= 2;
  const bool want_formula = in_range && (a.method == "formula" || a.method == "all");
  const bool want_orbit = in_range && (a.method == "orbit" || a.method == "all");
  const bool want_brute = !in_range || a.method == "bruteforce" || a.method == "all";

  std::vector<std::pair<std::string, SymFunc>> rows;
  if (want_formula)
    rows.emplace_back("formula", theorem_formula(a.n, kind));
  if (want_orbit)
    rows.emplace_back("orbit", orbit_formula(a.n, kind));
  if (want_brute)
    rows.emplace_back("bruteforce",
                      schur_expansion(decompose(trace_character(a.n, kind, cap))));

  bool match = true;
  for (const auto& [name, f] : rows)
    match = match && f == rows.front().second;

  if (a.format == "json") {
    Json j = {{"n", a.n}, {"space", space_name(kind)}};
    if (!in_range)
      j["note"] = "outside Theorem range";
    for (const auto& [name, f] : rows)
      j[name] = to_json(f);
    if (rows.size() > 1)
      j["match"] = match;
    print_json(out, j);
  } else {
    out << "adjoint n=" << a.n << " space=" << space_name(kind);
    if (!in_range)
      out << " (outside Theorem range)";
    out << "\n";
    for (const auto& [name, f] : rows)
      out << std::left << std::setw(12) << (name + ":") << f.to_string() << "\n";
    if (rows.size() > 1)
      out << "match: " << (match ? "yes" : "NO") << "\n";
  }
  return match ? kExitOk : kExitMismatch;
}

// verify ----------------------------------------------------------------

int run_verify(int n_max, const std::string& format, std::ostream& out)
{
  const VerifyReport report = verify(n_max, cap_from_env(kDefaultTraceCap));
  if (format == "json") {
    Json j = to_json(report);
    for (auto& r : j["records"])
      r.erase("millis");
    print_json(out, j);
  } else {
    for (const auto& r : report.records) {
      out << "n=" << r.n << " " << std::left << std::setw(5) << space_name(r.kind)
          << (r.match ? "PASS" : "FAIL") << "  formula: " << r.formula.to_string()
          << "\n";
      if (!r.match)
        out << "           orbit: " << r.orbit.to_string()
            << "\n      bruteforce: " << r.bruteforce.to_string() << "\n";
    }
    for (const auto& [n, holds] : report.additivity)
      out << "n=" << n << " mat = sym + skew: " << (holds ? "PASS" : "FAIL") << "\n";
    out << (report.all_match() ? "all comparisons pass" : "MISMATCH") << "\n";
  }
  return report.all_match() ? kExitOk : kExitMismatch;
}

// odun ------------------------------------------------------------------

struct OdunArgs {
  std::string forest_file;
  std::string master;
  bool check = false;
  std::string format = "text";
};

int run_odun(const OdunArgs& a, std::ostream& out)
{
  const LoopAugmentedForest forest = forest_from_json(read_json_file(a.forest_file));
  const int cap = cap_from_env(kDefaultBruteForceCap);

  std::optional<Partition> nu;
  if (!a.master.empty())
    nu = parse_partition(a.master);

  SymFunc schur(Basis::schur);
  std::string factored;
  Integer stabilizer;
  PartialTransformation map;
  if (nu) {
    if (forest.has_loops())
      throw UsageError("--master needs a forest without loops");
    BlockForm block{*nu, forest};
    schur = master_character(*nu, forest);
    stabilizer = stabilizer_order(block);
    map = block.to_partial_transformation();
  } else {
    schur = odun_frobenius(forest);
    factored = odun_factored(forest);
    stabilizer = forest_automorphisms(forest);
    map = forest.to_partial_transformation();
  }
  const int n = map.degree();
  const Integer dimension = factorial(n) / stabilizer;

  std::optional<bool> agrees;
  if (a.check)
    agrees = brute_force_odun(map, cap) == schur;

  if (a.format == "json") {
    Json j = {{"n", n}};
    if (nu)
      j["master"] = to_json(*nu);
    else
      j["factored"] = factored;
    j["schur"] = to_json(schur);
    j["stabilizer_order"] = stabilizer.get_str();
    j["dimension"] = dimension.get_str();
    if (agrees)
      j["bruteforce_match"] = *agrees;
    print_json(out, j);
  } else {
    if (!nu)
      out << "factored:   " << factored << "\n";
    out << "schur:      " << schur.to_string() << "\n";
    out << "stabilizer: " << stabilizer.get_str() << "\n";
    out << "dimension:  " << dimension.get_str() << "\n";
    if (agrees)
      out << "bruteforce: " << (*agrees ? "match" : "MISMATCH") << "\n";
  }
  return agrees.value_or(true) ? kExitOk : kExitMismatch;
}

// plethysm --------------------------------------------------------------

int run_plethysm(const std::string& expr, bool schur, const std::string& format,
                 std::ostream& out)
{
  SymFunc f = parse_expression(expr);
  if (schur)
    f = to_basis(f, Basis::schur);
  if (format == "json")
    print_json(out, to_json(f));
  else
    out << f.to_string() << "\n";
  return kExitOk;
}

// count -----------------------------------------------------------------

struct CountArgs {
  int n = 0;
  int k = 0;
  bool loops = false;
  bool check = false;
  std::string format = "text";
};

int run_count(const CountArgs& a, std::ostream& out)
{
  if (a.n < 1)
    throw UsageError("--n must be at least 1");
  if (a.k != 0 && (a.k < 1 || a.k > a.n))
    throw UsageError("--k must satisfy 1 <= k <= n");

  std::map<int, Integer> formula;
  for (int k = 1; k <= a.n; ++k)
    if (a.k == 0 || a.k == k)
      formula[k] = a.loops ? count_loop_forests(a.n, k) : count_forests(a.n, k);

  std::map<int, Integer> enumerated;
  if (a.check) {
    for (const auto& f : enumerate_forests(a.n, a.loops, cap_from_env(kDefaultBruteForceCap))) {
      int k = static_cast<int>(f.roots().size());
      if (formula.count(k))
        enumerated[k] += 1;
    }
  }

  Integer total = 0, enumerated_total = 0;
  bool ok = true;
  for (const auto& [k, c] : formula) {
    total += c;
    if (a.check) {
      enumerated_total += enumerated[k];
      ok = ok && enumerated[k] == c;
    }
  }

  if (a.format == "json") {
    Json rows = Json::array();
    for (const auto& [k, c] : formula) {
      Json row = {{"k", k}, {"count", c.get_str()}};
      if (a.check)
        row["enumerated"] = enumerated[k].get_str();
      rows.push_back(row);
    }
    Json j = {{"n", a.n}, {"loops", a.loops}, {"rows", rows}, {"total", total.get_str()}};
    if (a.check) {
      j["enumerated_total"] = enumerated_total.get_str();
      j["match"] = ok;
    }
    print_json(out, j);
  } else {
    out << (a.loops ? "loop-augmented" : "labeled") << " forests on n=" << a.n
        << " vertices\n";
    out << "k\tcount" << (a.check ? "\tenumerated" : "") << "\n";
    for (const auto& [k, c] : formula) {
      out << k << "\t" << c.get_str();
      if (a.check)
        out << "\t" << enumerated[k].get_str();
      out << "\n";
    }
    out << "total\t" << total.get_str();
    if (a.check)
      out << "\t" << enumerated_total.get_str();
    out << "\n";
    if (a.check)
      out << (ok ? "enumeration matches" : "MISMATCH") << "\n";
  }
  return ok ? kExitOk : kExitMismatch;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Frobenius characters of symmetric-group actions on matrix spaces "
               "and forest orbits"};
  app.name("adjrep");
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "json"};

  AdjointArgs adjoint_args;
  auto* adjoint_cmd = app.add_subcommand("adjoint", "Character of Mat_n, Sym_n or Skew_n");
  adjoint_cmd->add_option("--n", adjoint_args.n, "Matrix size")->required()->check(CLI::NonNegativeNumber);
  adjoint_cmd->add_option("--space", adjoint_args.space)->check(CLI::IsMember({"mat", "sym", "skew"}));
  adjoint_cmd->add_option("--method", adjoint_args.method)
    ->check(CLI::IsMember({"formula", "orbit", "bruteforce", "all"}));
  adjoint_cmd->add_option("--format", adjoint_args.format)->check(CLI::IsMember(formats));

  int n_max = 0;
  std::string verify_format = "text";
  auto* verify_cmd = app.add_subcommand("verify", "Check all closed forms up to n-max");
  verify_cmd->add_option("--n-max", n_max)->required();
  verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember(formats));

  OdunArgs odun_args;
  auto* odun_cmd = app.add_subcommand("odun", "Character of the orbit of a forest");
  odun_cmd->add_option("--forest", odun_args.forest_file, "Forest JSON file")->required();
  odun_cmd->add_option("--master", odun_args.master,
                       "Cycle type of a permutation block placed before the forest");
  odun_cmd->add_flag("--check", odun_args.check, "Compare with the brute-force orbit");
  odun_cmd->add_option("--format", odun_args.format)->check(CLI::IsMember(formats));

  std::string expr;
  bool want_schur = false;
  std::string plethysm_format = "text";
  auto* plethysm_cmd = app.add_subcommand("plethysm", "Evaluate a symmetric-function expression");
  plethysm_cmd->add_option("--expr", expr)->required();
  plethysm_cmd->add_flag("--schur", want_schur, "Print in the Schur basis (default powersum)");
  plethysm_cmd->add_option("--format", plethysm_format)->check(CLI::IsMember(formats));

  CountArgs count_args;
  auto* count_cmd = app.add_subcommand("count", "Count labeled forests by number of roots");
  count_cmd->add_option("--n", count_args.n)->required();
  count_cmd->add_option("--k", count_args.k);
  count_cmd->add_flag("--loops", count_args.loops);
  count_cmd->add_flag("--check", count_args.check, "Also enumerate exhaustively");
  count_cmd->add_option("--format", count_args.format)->check(CLI::IsMember(formats));

  std::string lambda_text, mu_text;
  auto* char_cmd = app.add_subcommand("char", "Irreducible character value chi^lambda(mu)");
  char_cmd->add_option("--lambda", lambda_text)->required();
  char_cmd->add_option("--mu", mu_text)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*adjoint_cmd)
      return run_adjoint(adjoint_args, out);
    if (*verify_cmd)
      return run_verify(n_max, verify_format, out);
    if (*odun_cmd)
      return run_odun(odun_args, out);
    if (*plethysm_cmd)
      return run_plethysm(expr, want_schur, plethysm_format, out);
    if (*count_cmd)
      return run_count(count_args, out);
    if (*char_cmd) {
      out << character_value(parse_partition(lambda_text), parse_partition(mu_text)).get_str()
          << "\n";
      return kExitOk;
    }
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << " (set ADJOINT_CAP to raise it)\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

} // namespace adjrep::cli
