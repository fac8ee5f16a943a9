// vcs_irreps: generate, verify and cross-check irrep matrices.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "documents.hpp"

#include <vcsirreps/repcheck.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace vcsirreps;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Request {
  std::string algebra;
  std::string lambda = "1";
  int nmax = 10;
  std::string weight;
  std::string lm;
  std::string format = "json";
  std::string precision = "exact";
  std::string output;
};

io::Precision precision_of(const Request& r) {
  return r.precision == "exact" ? io::Precision::exact : io::Precision::floating;
}

nlohmann::json build(const Request& r) {
  try {
    if (r.algebra == "su11") return cli::su11_document({parse_rational(r.lambda), r.nmax}, precision_of(r));
    if (r.algebra == "u3") {
      if (r.weight.empty()) throw UsageError("u3 needs --weight l1,l2,l3");
      return cli::u3_document(cli::parse_weight(r.weight), precision_of(r));
    }
    if (r.lm.empty()) throw UsageError("su3-so3 needs --lm lambda,mu");
    return cli::su3_document(cli::parse_lm(r.lm));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

double tolerance(const CLI::Option* flag, double tol) {
  if (flag->count() > 0) return tol;
  if (const char* env = std::getenv("VCS_IRREPS_TOL")) {
    try {
      return io::parse_double(env);
    } catch (const std::invalid_argument&) {
      throw UsageError(std::string("VCS_IRREPS_TOL is not a number: ") + env);
    }
  }
  return tol;
}

void add_irrep_options(CLI::App* cmd, Request& r) {
  cmd->add_option("--lambda", r.lambda, "su11 lowest weight (rational, e.g. 7/2)");
  cmd->add_option("--nmax", r.nmax, "su11 truncation order");
  cmd->add_option("--weight", r.weight, "u3 highest weight l1,l2,l3");
  cmd->add_option("--lm", r.lm, "su3 label lambda,mu");
  cmd->add_option("--precision", r.precision, "exact or float")->check(CLI::IsMember({"exact", "float"}));
}

int run_check(const nlohmann::json& doc, double tol) {
  cli::Report report;
  try {
    report = cli::check_document(doc, tol);
  } catch (const std::exception& e) {
    std::cerr << "check: document rejected: " << e.what() << "\n";
    return kVerificationFailed;
  }
  std::cout << report.to_string();
  return report.pass() ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unitary irrep matrices for su(1,1), u(3) and su(3)"};
  app.require_subcommand(1);

  Request gen_req;
  auto* gen = app.add_subcommand("gen", "Generate basis, generator matrices and reduced matrix elements");
  gen->add_option("algebra", gen_req.algebra, "su11, u3 or su3-so3")
      ->required()
      ->check(CLI::IsMember({"su11", "u3", "su3-so3"}));
  add_irrep_options(gen, gen_req);
  gen->add_option("--format", gen_req.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  gen->add_option("-o,--output", gen_req.output, "Output file (default stdout)");

  Request check_req;
  double tol = 1e-10;
  std::string replay;
  auto* check = app.add_subcommand("check", "Run the verification suite");
  check->add_option("algebra", check_req.algebra, "su11, u3 or su3-so3")->check(CLI::IsMember({"su11", "u3", "su3-so3"}));
  add_irrep_options(check, check_req);
  auto* tol_flag = check->add_option("--tol", tol, "Relative tolerance (default 1e-10, env VCS_IRREPS_TOL)");
  check->add_option("--replay", replay, "Verify a document written by gen instead of building one");

  std::string branch_lm;
  auto* branch = app.add_subcommand("branch", "Compare L multiplicities from the rotor basis and the canonical L^2 oracle");
  branch->add_option("--lm", branch_lm, "su3 label lambda,mu")->required();

  std::string spec_name;
  auto* spec = app.add_subcommand("spec", "Print a built-in algebra specification as JSON");
  spec->add_option("algebra", spec_name, "su11, u3 or su3-so3")->required()->check(CLI::IsMember({"su11", "u3", "su3-so3"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen->parsed()) {
      nlohmann::json doc = build(gen_req);
      emit(gen_req.format == "csv" ? cli::to_csv(doc) : doc.dump(1) + "\n", gen_req.output);
      return kOk;
    }
    if (check->parsed()) {
      const double t = tolerance(tol_flag, tol);
      if (!replay.empty()) {
        std::ifstream in(replay);
        if (!in) throw UsageError("cannot read " + replay);
        nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
        if (doc.is_discarded()) {
          std::cerr << "check: " << replay << " is not valid JSON\n";
          return kVerificationFailed;
        }
        return run_check(doc, t);
      }
      if (check_req.algebra.empty()) throw UsageError("check needs an algebra or --replay");
      return run_check(build(check_req), t);
    }
    if (branch->parsed()) {
      su3::Label lm;
      try {
        lm = cli::parse_lm(branch_lm);
      } catch (const std::exception& e) {
        throw UsageError(e.what());
      }
      const auto rotor = su3::rotor_multiplicities(lm);
      const auto oracle = su3::branching_oracle(lm);
      std::set<int> ls;
      for (const auto& [L, n] : rotor) ls.insert(L);
      for (const auto& [L, n] : oracle) ls.insert(L);
      std::cout << "L  rotor  canonical\n";
      for (int L : ls) {
        const int a = rotor.count(L) ? rotor.at(L) : 0, b = oracle.count(L) ? oracle.at(L) : 0;
        std::cout << L << "  " << a << "  " << b << (a == b ? "" : "  MISMATCH") << "\n";
      }
      if (rotor != oracle) {
        std::cout << "branching MISMATCH\n";
        return kVerificationFailed;
      }
      std::cout << "branching agrees\n";
      return kOk;
    }
    if (spec->parsed()) {
      std::cout << repcheck::builtin_spec(spec_name).to_json().dump(1) << "\n";
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }
  return kUsage;
}
