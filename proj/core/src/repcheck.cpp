#include "vcsirreps/repcheck.hpp"

#include "vcsirreps/serialize.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace vcsirreps::repcheck {

namespace {

using Combo = std::map<std::string, Surd>;

void add_to(Combo& combo, const std::string& name, const Surd& c) {
  if (c.is_zero()) return;
  combo[name] += c;
  if (combo[name].is_zero()) combo.erase(name);
}

Combo bracket_combo(const AlgebraSpec& spec, const std::string& a, const std::string& b) {
  Combo out;
  for (const auto& t : spec.bracket(a, b)) add_to(out, t.name, Surd(t.coeff));
  return out;
}

Eigen::MatrixXd restrict(const Eigen::MatrixXd& m, const Restriction& r) {
  if (!r.leading_block) return m;
  const auto n = static_cast<Eigen::Index>(std::min<std::size_t>(*r.leading_block, static_cast<std::size_t>(m.rows())));
  return m.topLeftCorner(n, n);
}

SurdMatrix restrict(const SurdMatrix& m, const Restriction& r) {
  return r.leading_block ? m.leading_block(*r.leading_block) : m;
}

const OperatorMatrix& lookup(const OperatorSet& ops, const std::string& name) {
  auto it = ops.find(name);
  if (it == ops.end()) throw std::invalid_argument("no matrix supplied for generator " + name);
  return it->second;
}

std::size_t common_dim(const AlgebraSpec& spec, const OperatorSet& ops) {
  std::optional<std::size_t> dim;
  for (const auto& g : spec.generators) {
    const OperatorMatrix& op = lookup(ops, g);
    if (static_cast<std::size_t>(op.values.rows()) != op.dim || static_cast<std::size_t>(op.values.cols()) != op.dim) {
      throw std::invalid_argument("operator " + g + " has inconsistent shape");
    }
    if (dim && *dim != op.dim) throw std::invalid_argument("dimension mismatch for generator " + g);
    dim = op.dim;
  }
  return dim.value_or(0);
}

std::map<std::string, SurdMatrix> exact_matrices(const AlgebraSpec& spec, const OperatorSet& ops) {
  common_dim(spec, ops);
  std::map<std::string, SurdMatrix> out;
  for (const auto& g : spec.generators) out.emplace(g, SurdMatrix::from(lookup(ops, g)));
  return out;
}

Radical radical_of(const nlohmann::json& j) {
  if (j.is_number_integer()) return Radical(j.get<long>());
  return io::radical_from_json(j);
}

Term T(long c, const char* name) {
  return {Radical(c), name};
}

Term Tsqrt(int sign, Rational sq, const char* name) {
  return {Radical::from_parts(sign, sq), name};
}

}  // namespace

std::vector<Term> AlgebraSpec::bracket(const std::string& a, const std::string& b) const {
  if (auto it = brackets.find({a, b}); it != brackets.end()) return it->second;
  if (auto it = brackets.find({b, a}); it != brackets.end()) {
    std::vector<Term> out = it->second;
    for (auto& t : out) t.coeff = -t.coeff;
    return out;
  }
  return {};
}

void AlgebraSpec::validate() const {
  std::set<std::string> names(generators.begin(), generators.end());
  if (names.size() != generators.size()) throw std::invalid_argument("duplicate generator names in " + name);
  for (const auto& [key, terms] : brackets) {
    if (!names.count(key.first) || !names.count(key.second)) throw std::invalid_argument("bracket of unknown generator");
    for (const auto& t : terms) {
      if (!names.count(t.name)) throw std::invalid_argument("bracket result uses unknown generator " + t.name);
    }
    if (key.first == key.second) {
      Combo c;
      for (const auto& t : terms) add_to(c, t.name, Surd(t.coeff));
      if (!c.empty()) throw std::invalid_argument("[X,X] must vanish for " + key.first);
    }
    if (auto rev = brackets.find({key.second, key.first}); rev != brackets.end() && key.first != key.second) {
      Combo sum;
      for (const auto& t : terms) add_to(sum, t.name, Surd(t.coeff));
      for (const auto& t : rev->second) add_to(sum, t.name, Surd(t.coeff));
      if (!sum.empty()) throw std::invalid_argument("bracket table is not antisymmetric");
    }
  }
  for (const auto& [g, adj] : adjoints) {
    if (!names.count(g) || !names.count(adj.second)) throw std::invalid_argument("adjoint of unknown generator");
    if (adj.first != 1 && adj.first != -1) throw std::invalid_argument("adjoint phase must be +1 or -1");
  }
  for (const auto& t : casimir) {
    if (!names.count(t.left) || !names.count(t.right)) throw std::invalid_argument("Casimir uses unknown generator");
  }
  if (!jacobi_holds()) throw std::invalid_argument("Jacobi identity fails for algebra " + name);
}

bool AlgebraSpec::jacobi_holds() const {
  const std::size_t n = generators.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const std::string& a = generators[i];
        const std::string& b = generators[j];
        const std::string& c = generators[k];
        Combo total;
        // [[a,b],c] + [[b,c],a] + [[c,a],b]
        for (auto [x, y, z] : {std::tuple{a, b, c}, std::tuple{b, c, a}, std::tuple{c, a, b}}) {
          for (const auto& [d, coeff] : bracket_combo(*this, x, y)) {
            for (const auto& [e, c2] : bracket_combo(*this, d, z)) add_to(total, e, coeff * c2);
          }
        }
        if (!total.empty()) return false;
      }
    }
  }
  return true;
}

AlgebraSpec AlgebraSpec::from_json(const nlohmann::json& doc) {
  if (doc.value("schema", 0) != io::kSchemaVersion) throw std::invalid_argument("algebra spec must declare schema 1");
  AlgebraSpec spec;
  spec.name = doc.at("name").get<std::string>();
  spec.generators = doc.at("generators").get<std::vector<std::string>>();
  for (const auto& b : doc.at("brackets")) {
    std::vector<Term> terms;
    for (const auto& t : b.at("result")) terms.push_back({radical_of(t.at(0)), t.at(1).get<std::string>()});
    if (!spec.brackets.emplace(std::pair{b.at("a").get<std::string>(), b.at("b").get<std::string>()}, terms).second) {
      throw std::invalid_argument("duplicate bracket entry");
    }
  }
  if (doc.contains("adjoints")) {
    for (const auto& [g, v] : doc.at("adjoints").items()) {
      spec.adjoints[g] = {v.at(0).get<int>(), v.at(1).get<std::string>()};
    }
  }
  if (doc.contains("casimir")) {
    for (const auto& t : doc.at("casimir")) {
      spec.casimir.push_back({radical_of(t.at(0)), t.at(1).get<std::string>(), t.at(2).get<std::string>()});
    }
  }
  spec.validate();
  return spec;
}

nlohmann::json AlgebraSpec::to_json() const {
  nlohmann::json doc;
  doc["schema"] = io::kSchemaVersion;
  doc["name"] = name;
  doc["generators"] = generators;
  doc["brackets"] = nlohmann::json::array();
  for (const auto& [key, terms] : brackets) {
    nlohmann::json result = nlohmann::json::array();
    for (const auto& t : terms) result.push_back({io::radical_to_json(t.coeff), t.name});
    doc["brackets"].push_back({{"a", key.first}, {"b", key.second}, {"result", result}});
  }
  doc["adjoints"] = nlohmann::json::object();
  for (const auto& [g, adj] : adjoints) doc["adjoints"][g] = {adj.first, adj.second};
  doc["casimir"] = nlohmann::json::array();
  for (const auto& t : casimir) doc["casimir"].push_back({io::radical_to_json(t.coeff), t.left, t.right});
  return doc;
}

AlgebraSpec su11_spec() {
  AlgebraSpec s;
  s.name = "su11";
  s.generators = {"S0", "S+", "S-"};
  s.brackets[{"S0", "S+"}] = {T(1, "S+")};
  s.brackets[{"S0", "S-"}] = {T(-1, "S-")};
  s.brackets[{"S-", "S+"}] = {T(2, "S0")};
  s.adjoints = {{"S0", {1, "S0"}}, {"S+", {1, "S-"}}, {"S-", {1, "S+"}}};
  s.casimir = {{Radical(1), "S0", "S0"}, {Radical(Rational(-1, 2)), "S+", "S-"}, {Radical(Rational(-1, 2)), "S-", "S+"}};
  return s;
}

AlgebraSpec u3_spec() {
  AlgebraSpec s;
  s.name = "u3";
  auto C = [](int i, int j) { return "C" + std::to_string(i) + std::to_string(j); };
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) s.generators.push_back(C(i, j));
  }
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      for (int k = 1; k <= 3; ++k) {
        for (int l = 1; l <= 3; ++l) {
          // [C_ij, C_kl] = delta_kj C_il - delta_il C_kj
          Combo c;
          if (k == j) add_to(c, C(i, l), Surd(1));
          if (i == l) add_to(c, C(k, j), Surd(-1));
          std::vector<Term> terms;
          for (const auto& [name, v] : c) terms.push_back({*v.radical(), name});
          s.brackets[{C(i, j), C(k, l)}] = terms;
        }
      }
      s.adjoints[C(i, j)] = {1, C(j, i)};
      s.casimir.push_back({Radical(1), C(i, j), C(j, i)});
    }
  }
  return s;
}

AlgebraSpec su3_so3_spec() {
  AlgebraSpec s;
  s.name = "su3-so3";
  s.generators = {"L0", "L+", "L-", "Q-2", "Q-1", "Q0", "Q1", "Q2"};
  auto q = [](int nu) { return nu == 0 ? std::string("Q0") : "Q" + std::to_string(nu); };
  s.brackets[{"L0", "L+"}] = {T(1, "L+")};
  s.brackets[{"L0", "L-"}] = {T(-1, "L-")};
  s.brackets[{"L+", "L-"}] = {T(2, "L0")};
  for (int nu = -2; nu <= 2; ++nu) {
    if (nu != 0) s.brackets[{"L0", q(nu)}] = {{Radical(nu), q(nu)}};
    if (nu < 2) s.brackets[{"L+", q(nu)}] = {{Radical::sqrt(6 - nu * (nu + 1)), q(nu + 1)}};
    if (nu > -2) s.brackets[{"L-", q(nu)}] = {{Radical::sqrt(6 - nu * (nu - 1)), q(nu - 1)}};
  }
  s.brackets[{"Q0", "Q1"}] = {Tsqrt(-1, Rational(27, 2), "L+")};
  s.brackets[{"Q0", "Q-1"}] = {Tsqrt(-1, Rational(27, 2), "L-")};
  s.brackets[{"Q1", "Q-1"}] = {T(-3, "L0")};
  s.brackets[{"Q1", "Q-2"}] = {T(3, "L-")};
  s.brackets[{"Q-1", "Q2"}] = {T(3, "L+")};
  s.brackets[{"Q2", "Q-2"}] = {T(6, "L0")};
  s.adjoints = {{"L0", {1, "L0"}}, {"L+", {1, "L-"}}, {"L-", {1, "L+"}}};
  for (int nu = -2; nu <= 2; ++nu) s.adjoints[q(nu)] = {nu % 2 ? -1 : 1, q(-nu)};
  // (Q.Q + 3 L.L) / 4
  for (int nu = -2; nu <= 2; ++nu) s.casimir.push_back({Radical(Rational(nu % 2 ? -1 : 1, 4)), q(nu), q(-nu)});
  s.casimir.push_back({Radical(Rational(3, 4)), "L0", "L0"});
  s.casimir.push_back({Radical(Rational(3, 8)), "L+", "L-"});
  s.casimir.push_back({Radical(Rational(3, 8)), "L-", "L+"});
  return s;
}

AlgebraSpec builtin_spec(const std::string& name) {
  if (name == "su11") return su11_spec();
  if (name == "u3") return u3_spec();
  if (name == "su3-so3") return su3_so3_spec();
  throw std::invalid_argument("unknown algebra " + name);
}

double commutator_residual(const AlgebraSpec& spec, const OperatorSet& ops, const Restriction& r) {
  common_dim(spec, ops);
  double worst = 0.0;
  const auto& g = spec.generators;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Eigen::MatrixXd& a = lookup(ops, g[i]).values;
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const Eigen::MatrixXd& b = lookup(ops, g[j]).values;
      Eigen::MatrixXd diff = a * b - b * a;
      for (const auto& t : spec.bracket(g[i], g[j])) diff -= t.coeff.to_double() * lookup(ops, t.name).values;
      const double scale = 1.0 + restrict(a, r).norm() * restrict(b, r).norm();
      worst = std::max(worst, restrict(diff, r).norm() / scale);
    }
  }
  return worst;
}

double hermiticity_residual(const AlgebraSpec& spec, const OperatorSet& ops, const Restriction& r) {
  common_dim(spec, ops);
  double worst = 0.0;
  for (const auto& [name, adj] : spec.adjoints) {
    Eigen::MatrixXd a = restrict(lookup(ops, name).values, r);
    Eigen::MatrixXd b = restrict(lookup(ops, adj.second).values, r);
    worst = std::max(worst, (a.transpose() - adj.first * b).norm() / (1.0 + a.norm()));
  }
  return worst;
}

Eigen::MatrixXd casimir_matrix(const AlgebraSpec& spec, const OperatorSet& ops, const Restriction& r) {
  const auto n = static_cast<Eigen::Index>(common_dim(spec, ops));
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  for (const auto& t : spec.casimir) c += t.coeff.to_double() * (lookup(ops, t.left).values * lookup(ops, t.right).values);
  return restrict(c, r);
}

std::size_t exact_commutator_failures(const AlgebraSpec& spec, const OperatorSet& ops, const Restriction& r) {
  auto m = exact_matrices(spec, ops);
  std::size_t failures = 0;
  const auto& g = spec.generators;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const SurdMatrix& a = m.at(g[i]);
      const SurdMatrix& b = m.at(g[j]);
      SurdMatrix diff = a * b - b * a;
      for (const auto& t : spec.bracket(g[i], g[j])) diff = diff - Surd(t.coeff) * m.at(t.name);
      if (!restrict(diff, r).is_zero()) ++failures;
    }
  }
  return failures;
}

std::size_t exact_hermiticity_failures(const AlgebraSpec& spec, const OperatorSet& ops, const Restriction& r) {
  auto m = exact_matrices(spec, ops);
  std::size_t failures = 0;
  for (const auto& [name, adj] : spec.adjoints) {
    SurdMatrix diff = m.at(name).transpose() - Surd(adj.first) * m.at(adj.second);
    if (!restrict(diff, r).is_zero()) ++failures;
  }
  return failures;
}

SurdMatrix exact_casimir(const AlgebraSpec& spec, const OperatorSet& ops, const Restriction& r) {
  auto m = exact_matrices(spec, ops);
  SurdMatrix c(common_dim(spec, ops));
  for (const auto& t : spec.casimir) c = c + Surd(t.coeff) * (m.at(t.left) * m.at(t.right));
  return restrict(c, r);
}

std::optional<Surd> exact_scalar(const SurdMatrix& m) {
  if (m.dim() == 0) return Surd();
  Surd value = m.at(0, 0);
  for (const auto& [rc, v] : m.entries()) {
    if (rc.first != rc.second) return std::nullopt;
  }
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (!(m.at(i, i) == value)) return std::nullopt;
  }
  return value;
}

SchurResult schur_constancy(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("schur_constancy needs a square matrix");
  SchurResult out;
  if (m.rows() == 0) return out;
  out.mean = m.trace() / static_cast<double>(m.rows());
  Eigen::MatrixXd off = m;
  off.diagonal().setZero();
  const double diag_dev = (m.diagonal().array() - out.mean).abs().maxCoeff();
  out.deviation = (diag_dev + off.norm()) / std::max(1.0, std::abs(out.mean));
  return out;
}

SchurResult schur_constancy(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("schur_constancy needs a square matrix");
  SchurResult out;
  if (m.rows() == 0) return out;
  const std::complex<double> mean = m.trace() / static_cast<double>(m.rows());
  Eigen::MatrixXcd off = m;
  off.diagonal().setZero();
  const double diag_dev = (m.diagonal().array() - mean).abs().maxCoeff();
  out.mean = mean.real();
  out.deviation = (diag_dev + off.norm() + std::abs(mean.imag())) / std::max(1.0, std::abs(mean));
  return out;
}

std::vector<double> spectrum_multiset(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("spectrum_multiset needs a square matrix");
  std::vector<double> out;
  if (m.rows() == 0) return out;
  if ((m - m.transpose()).norm() <= 1e-12 * (1.0 + m.norm())) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(0.5 * (m + m.transpose()), Eigen::EigenvaluesOnly);
    for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(solver.eigenvalues()(i));
  } else {
    Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
    for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(solver.eigenvalues()(i).real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace vcsirreps::repcheck
