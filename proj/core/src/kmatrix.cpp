#include "vcsirreps/kmatrix.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

namespace vcsirreps::kmatrix {

namespace {

double as_double(double v) { return v; }
double as_double(const Rational& v) { return vcsirreps::to_double(v); }

template <class T>
Eigen::MatrixXd dmat(const Matrix<T>& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = as_double(m(r, c));
  }
  return out;
}

template <class T>
Matrix<T> identity(std::size_t n) {
  Matrix<T> m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = T(r == c ? 1 : 0);
  }
  return m;
}

template <class T>
Matrix<T> zeros(std::size_t rows, std::size_t cols) {
  Matrix<T> m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = T(0);
  }
  return m;
}

// Exact Gauss-Jordan solve of N X = R for square non-singular N.
Matrix<Rational> exact_solve(Matrix<Rational> n, Matrix<Rational> r) {
  const Eigen::Index dim = n.rows();
  for (Eigen::Index col = 0; col < dim; ++col) {
    Eigen::Index pivot = col;
    while (pivot < dim && n(pivot, col) == 0) ++pivot;
    if (pivot == dim) throw InconsistentGamma("S-block is not determined by the lowering constraints");
    if (pivot != col) {
      n.row(pivot).swap(n.row(col));
      r.row(pivot).swap(r.row(col));
    }
    const Rational inv = Rational(1) / n(col, col);
    for (Eigen::Index c = 0; c < dim; ++c) n(col, c) *= inv;
    for (Eigen::Index c = 0; c < r.cols(); ++c) r(col, c) *= inv;
    for (Eigen::Index row = 0; row < dim; ++row) {
      if (row == col || n(row, col) == 0) continue;
      const Rational f = n(row, col);
      for (Eigen::Index c = 0; c < dim; ++c) n(row, c) -= f * n(col, c);
      for (Eigen::Index c = 0; c < r.cols(); ++c) r(row, c) -= f * r(col, c);
    }
  }
  return r;
}

Matrix<double> least_squares(const Matrix<double>& a, const Matrix<double>& b) {
  Matrix<double> x = a.completeOrthogonalDecomposition().solve(b);
  return 0.5 * (x + x.transpose());
}

Matrix<Rational> least_squares(const Matrix<Rational>& a, const Matrix<Rational>& b) {
  Matrix<Rational> at = a.transpose();
  return exact_solve(at * a, at * b);
}

template <class T>
void check_psd(const Matrix<T>&, const std::string&, double) {}

template <>
void check_psd<double>(const Matrix<double>& s, const std::string& label, double tol) {
  if (s.rows() == 0) return;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s);
  const double top = std::max(1.0, solver.eigenvalues().cwiseAbs().maxCoeff());
  if (solver.eigenvalues().minCoeff() < -tol * top) {
    throw InconsistentGamma("S-block of sector " + label + " is not positive semi-definite");
  }
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(const nlohmann::json& v) {
  if (v.is_number()) return v.get<double>();
  const std::string s = v.get<std::string>();
  if (s.find('/') != std::string::npos) return vcsirreps::to_double(parse_rational(s));
  double out = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw std::invalid_argument("bad number: " + s);
  return out;
}

Rational parse_exact(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw std::invalid_argument("exact GammaRep entries must be integers or \"p/q\" strings");
}

nlohmann::json encode(double v) { return format_double(v); }
nlohmann::json encode(const Rational& v) { return rational_to_string(v); }

template <class T, class Parse>
GammaRep<T> from_json_impl(const nlohmann::json& doc, Parse parse) {
  if (doc.value("schema", 0) != 1) throw std::invalid_argument("GammaRep document must declare \"schema\": 1");
  GammaRep<T> rep;
  for (const auto& s : doc.at("sectors")) {
    rep.sectors.push_back({s.at("label").get<std::string>(), s.at("grade").get<int>(), s.at("dim").get<std::size_t>()});
  }
  for (const auto& g : doc.at("generators")) {
    rep.generators.push_back(
        {g.at("name").get<std::string>(), g.at("adjoint").get<std::string>(), g.at("grade_shift").get<int>()});
  }
  auto fill = [&](const nlohmann::json& entries, std::size_t rows, std::size_t cols) {
    Matrix<T> m = zeros<T>(rows, cols);
    for (const auto& e : entries) {
      const auto r = e.at(0).get<std::size_t>(), c = e.at(1).get<std::size_t>();
      if (r >= rows || c >= cols) throw std::invalid_argument("block entry outside sector dimensions");
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = parse(e.at(2));
    }
    return m;
  };
  for (const auto& b : doc.at("blocks")) {
    const std::size_t to = rep.sector_index(b.at("to").get<std::string>());
    const std::size_t from = rep.sector_index(b.at("from").get<std::string>());
    rep.blocks[{b.at("generator").get<std::string>(), to, from}] =
        fill(b.at("entries"), rep.sectors[to].dim, rep.sectors[from].dim);
  }
  if (doc.contains("seeds")) {
    for (const auto& s : doc.at("seeds")) {
      const std::size_t k = rep.sector_index(s.at("sector").get<std::string>());
      rep.seeds[k] = fill(s.at("entries"), rep.sectors[k].dim, rep.sectors[k].dim);
    }
  }
  rep.validate();
  return rep;
}

template <class T>
nlohmann::json to_json_impl(const GammaRep<T>& rep) {
  nlohmann::json doc;
  doc["schema"] = 1;
  doc["sectors"] = nlohmann::json::array();
  for (const auto& s : rep.sectors) doc["sectors"].push_back({{"label", s.label}, {"grade", s.grade}, {"dim", s.dim}});
  doc["generators"] = nlohmann::json::array();
  for (const auto& g : rep.generators) {
    doc["generators"].push_back({{"name", g.name}, {"adjoint", g.adjoint}, {"grade_shift", g.grade_shift}});
  }
  auto entries = [](const Matrix<T>& m) {
    nlohmann::json out = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        if (m(r, c) != T(0)) out.push_back({r, c, encode(m(r, c))});
      }
    }
    return out;
  };
  doc["blocks"] = nlohmann::json::array();
  for (const auto& [key, m] : rep.blocks) {
    const auto& [name, to, from] = key;
    doc["blocks"].push_back(
        {{"generator", name}, {"to", rep.sectors[to].label}, {"from", rep.sectors[from].label}, {"entries", entries(m)}});
  }
  if (!rep.seeds.empty()) {
    doc["seeds"] = nlohmann::json::array();
    for (const auto& [k, m] : rep.seeds) doc["seeds"].push_back({{"sector", rep.sectors[k].label}, {"entries", entries(m)}});
  }
  return doc;
}

}  // namespace

template <class T>
std::size_t GammaRep<T>::sector_index(const std::string& label) const {
  for (std::size_t i = 0; i < sectors.size(); ++i) {
    if (sectors[i].label == label) return i;
  }
  throw std::invalid_argument("unknown sector " + label);
}

template <class T>
const Generator& GammaRep<T>::generator(const std::string& name) const {
  for (const auto& g : generators) {
    if (g.name == name) return g;
  }
  throw std::invalid_argument("unknown generator " + name);
}

template <class T>
std::size_t GammaRep<T>::offset(std::size_t sector) const {
  std::size_t off = 0;
  for (std::size_t i = 0; i < sector; ++i) off += sectors[i].dim;
  return off;
}

template <class T>
std::size_t GammaRep<T>::total_dim() const {
  return offset(sectors.size());
}

template <class T>
void GammaRep<T>::validate() const {
  std::set<std::string> labels;
  for (const auto& s : sectors) {
    if (!labels.insert(s.label).second) throw std::invalid_argument("duplicate sector label " + s.label);
  }
  for (const auto& g : generators) {
    const Generator& adj = generator(g.adjoint);
    if (adj.adjoint != g.name) throw std::invalid_argument("adjoint pairing of " + g.name + " is not symmetric");
    if (adj.grade_shift != -g.grade_shift) throw std::invalid_argument("adjoint of " + g.name + " has wrong grade");
  }
  for (const auto& [key, m] : blocks) {
    const auto& [name, to, from] = key;
    const Generator& g = generator(name);
    if (to >= sectors.size() || from >= sectors.size()) throw std::invalid_argument("block sector out of range");
    if (static_cast<std::size_t>(m.rows()) != sectors[to].dim || static_cast<std::size_t>(m.cols()) != sectors[from].dim) {
      throw std::invalid_argument("block shape does not match sector dimensions for " + name);
    }
    if (sectors[to].grade != sectors[from].grade + g.grade_shift) {
      throw std::invalid_argument("block of " + name + " connects sectors inconsistent with its grade shift");
    }
  }
  for (const auto& [k, m] : seeds) {
    if (k >= sectors.size() || static_cast<std::size_t>(m.rows()) != sectors[k].dim || m.rows() != m.cols()) {
      throw std::invalid_argument("seed block shape mismatch");
    }
  }
}

template <class T>
double recursion_residual(const GammaRep<T>& rep, const std::vector<Matrix<T>>& s) {
  double worst = 0.0;
  std::set<std::tuple<std::string, std::size_t, std::size_t>> pairs;
  for (const auto& [key, m] : rep.blocks) {
    const auto& [name, to, from] = key;
    pairs.emplace(name, to, from);
    pairs.emplace(rep.generator(name).adjoint, from, to);
  }
  for (const auto& [name, kp, k] : pairs) {
    // S^(k) Gamma_{k' k}(X)^T = Gamma_{k k'}(X^dagger) S^(k')
    const std::string& adj = rep.generator(name).adjoint;
    auto gx = rep.blocks.find({name, kp, k});
    auto gy = rep.blocks.find({adj, k, kp});
    Eigen::MatrixXd lhs = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rep.sectors[k].dim),
                                                static_cast<Eigen::Index>(rep.sectors[kp].dim));
    Eigen::MatrixXd rhs = lhs;
    double gnorm = 0.0;
    if (gx != rep.blocks.end()) {
      lhs = dmat<T>(s[k] * gx->second.transpose());
      gnorm = dmat<T>(gx->second).norm();
    }
    if (gy != rep.blocks.end()) rhs = dmat<T>(gy->second * s[kp]);
    const double scale = 1.0 + dmat<T>(s[k]).norm() * std::max(gnorm, 1.0);
    worst = std::max(worst, (lhs - rhs).norm() / scale);
  }
  return worst;
}

template <class T>
SSolution<T> solve_s_recursion(const GammaRep<T>& rep, const Options& options) {
  rep.validate();
  const std::size_t n = rep.sectors.size();
  SSolution<T> out;
  out.blocks.resize(n);
  if (n == 0) return out;
  int min_grade = rep.sectors[0].grade;
  for (const auto& s : rep.sectors) min_grade = std::min(min_grade, s.grade);

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rep.sectors[a].grade < rep.sectors[b].grade; });
  std::vector<bool> solved(n, false);

  for (std::size_t k : order) {
    const Sector& sec = rep.sectors[k];
    if (auto seed = rep.seeds.find(k); seed != rep.seeds.end()) {
      out.blocks[k] = seed->second;
    } else if (sec.grade == min_grade) {
      out.blocks[k] = identity<T>(sec.dim);
    } else {
      std::vector<Matrix<T>> as, bs;
      std::size_t rows = 0;
      for (const auto& [key, gamma] : rep.blocks) {
        const auto& [name, kp, from] = key;
        if (from != k || rep.generator(name).grade_shift >= 0) continue;
        if (!solved[kp]) throw InconsistentGamma("lowering from sector " + sec.label + " reaches an unsolved sector");
        // Gamma_{k' k}(X) S^(k) = S^(k') Gamma_{k k'}(X^dagger)^T
        auto adj = rep.blocks.find({rep.generator(name).adjoint, k, kp});
        as.push_back(gamma);
        bs.push_back(adj == rep.blocks.end() ? zeros<T>(rep.sectors[kp].dim, sec.dim)
                                             : Matrix<T>(out.blocks[kp] * adj->second.transpose()));
        rows += rep.sectors[kp].dim;
      }
      if (as.empty() && sec.dim > 0) {
        throw InconsistentGamma("sector " + sec.label + " is not connected to a lower grade");
      }
      Matrix<T> a = zeros<T>(rows, sec.dim), b = zeros<T>(rows, sec.dim);
      Eigen::Index r0 = 0;
      for (std::size_t i = 0; i < as.size(); ++i) {
        a.middleRows(r0, as[i].rows()) = as[i];
        b.middleRows(r0, bs[i].rows()) = bs[i];
        r0 += as[i].rows();
      }
      out.blocks[k] = sec.dim == 0 ? zeros<T>(0, 0) : least_squares(a, b);
    }
    check_psd<T>(out.blocks[k], sec.label, options.tol);
    solved[k] = true;
  }
  out.residual = recursion_residual(rep, out.blocks);
  if (out.residual > options.tol) {
    throw InconsistentGamma("S-recursion residual " + format_double(out.residual) + " exceeds tolerance");
  }
  return out;
}

Orthonormal orthonormalize(const std::vector<Eigen::MatrixXd>& s_blocks, const Options& options) {
  Orthonormal out;
  double top = 0.0;
  std::vector<Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>> solvers;
  for (const auto& s : s_blocks) {
    solvers.emplace_back(0.5 * (s + s.transpose()));
    if (s.rows() > 0) top = std::max(top, solvers.back().eigenvalues().cwiseAbs().maxCoeff());
  }
  for (std::size_t i = 0; i < s_blocks.size(); ++i) {
    SectorBasis sb;
    const auto& solver = solvers[i];
    const Eigen::Index n = s_blocks[i].rows();
    sb.U = n > 0 ? Eigen::MatrixXd(solver.eigenvectors()) : Eigen::MatrixXd(0, 0);
    sb.k = Eigen::VectorXd::Zero(n);
    for (Eigen::Index c = 0; c < n; ++c) {
      Eigen::Index arg = 0;
      sb.U.col(c).cwiseAbs().maxCoeff(&arg);
      if (sb.U(arg, c) < 0) sb.U.col(c) *= -1.0;
      const double ev = solver.eigenvalues()(c);
      if (ev < -options.tol * top) throw InconsistentGamma("negative S eigenvalue");
      const bool positive = ev > options.tol * top;
      sb.positive.push_back(positive);
      if (positive) {
        sb.k(c) = std::sqrt(ev);
        ++out.positive_count;
      } else {
        ++out.zero_norm_count;
      }
    }
    out.sectors.push_back(std::move(sb));
  }
  return out;
}

ExactOrthonormal orthonormalize_exact(const std::vector<Matrix<Rational>>& s_blocks) {
  ExactOrthonormal out;
  for (const auto& s : s_blocks) {
    std::vector<Radical> ks;
    for (Eigen::Index r = 0; r < s.rows(); ++r) {
      for (Eigen::Index c = 0; c < s.cols(); ++c) {
        if (r != c && s(r, c) != 0) throw std::invalid_argument("exact orthonormalization needs diagonal S-blocks");
      }
      if (s(r, r) < 0) throw InconsistentGamma("negative S eigenvalue");
      ks.push_back(Radical::sqrt(s(r, r)));
      ++(s(r, r) == 0 ? out.zero_norm_count : out.positive_count);
    }
    out.k.push_back(std::move(ks));
  }
  return out;
}

namespace {

double hermiticity(const std::vector<Generator>& gens, const OperatorSet& gamma) {
  double worst = 0.0;
  for (const auto& g : gens) {
    const Eigen::MatrixXd& a = gamma.at(g.name).values;
    const Eigen::MatrixXd& b = gamma.at(g.adjoint).values;
    worst = std::max(worst, (a.transpose() - b).norm() / (1.0 + a.norm()));
  }
  return worst;
}

}  // namespace

Unitarized unitarize(const GammaRep<double>& rep, const Orthonormal& orth) {
  if (orth.sectors.size() != rep.sectors.size()) throw std::invalid_argument("orthonormal data does not match GammaRep");
  Unitarized out;
  std::vector<std::vector<Eigen::Index>> position(rep.sectors.size());
  for (std::size_t k = 0; k < rep.sectors.size(); ++k) {
    for (std::size_t a = 0; a < orth.sectors[k].positive.size(); ++a) {
      position[k].push_back(orth.sectors[k].positive[a] ? static_cast<Eigen::Index>(out.states.size()) : -1);
      if (orth.sectors[k].positive[a]) out.states.push_back({k, a});
    }
  }
  const auto n = static_cast<Eigen::Index>(out.states.size());
  std::map<std::string, Eigen::MatrixXd> g;
  for (const auto& gen : rep.generators) g[gen.name] = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [key, block] : rep.blocks) {
    const auto& [name, to, from] = key;
    const SectorBasis& bt = orth.sectors[to];
    const SectorBasis& bf = orth.sectors[from];
    Eigen::MatrixXd rotated = bt.U.transpose() * block * bf.U;
    for (Eigen::Index b = 0; b < rotated.rows(); ++b) {
      if (position[to][b] < 0) continue;
      for (Eigen::Index a = 0; a < rotated.cols(); ++a) {
        if (position[from][a] < 0) continue;
        g[name](position[to][b], position[from][a]) += rotated(b, a) * bf.k(a) / bt.k(b);
      }
    }
  }
  for (auto& [name, m] : g) out.gamma.emplace(name, OperatorMatrix::from_dense(name, "kmatrix-unitarized", std::move(m)));
  out.hermiticity_residual = hermiticity(rep.generators, out.gamma);
  return out;
}

Unitarized unitarize_exact(const GammaRep<Rational>& rep, const ExactOrthonormal& orth) {
  if (orth.k.size() != rep.sectors.size()) throw std::invalid_argument("orthonormal data does not match GammaRep");
  Unitarized out;
  std::vector<std::vector<long>> position(rep.sectors.size());
  for (std::size_t k = 0; k < rep.sectors.size(); ++k) {
    for (std::size_t a = 0; a < orth.k[k].size(); ++a) {
      const bool positive = !orth.k[k][a].is_zero();
      position[k].push_back(positive ? static_cast<long>(out.states.size()) : -1);
      if (positive) out.states.push_back({k, a});
    }
  }
  std::map<std::string, ExactEntries> g;
  for (const auto& gen : rep.generators) g[gen.name];
  for (const auto& [key, block] : rep.blocks) {
    const auto& [name, to, from] = key;
    for (Eigen::Index b = 0; b < block.rows(); ++b) {
      if (position[to][b] < 0) continue;
      for (Eigen::Index a = 0; a < block.cols(); ++a) {
        if (position[from][a] < 0 || block(b, a) == 0) continue;
        Radical v = Radical(block(b, a)) * orth.k[from][a] / orth.k[to][b];
        Index rc{static_cast<std::size_t>(position[to][b]), static_cast<std::size_t>(position[from][a])};
        if (g[name].count(rc)) throw std::logic_error("duplicate exact gamma entry");
        g[name].emplace(rc, v);
      }
    }
  }
  for (auto& [name, entries] : g) {
    out.gamma.emplace(name, OperatorMatrix::from_exact(name, "kmatrix-unitarized", out.states.size(), std::move(entries)));
  }
  out.hermiticity_residual = hermiticity(rep.generators, out.gamma);
  return out;
}

GammaRep<double> to_double(const GammaRep<Rational>& rep) {
  GammaRep<double> out;
  out.sectors = rep.sectors;
  out.generators = rep.generators;
  for (const auto& [key, m] : rep.blocks) out.blocks.emplace(key, dmat<Rational>(m));
  for (const auto& [k, m] : rep.seeds) out.seeds.emplace(k, dmat<Rational>(m));
  return out;
}

GammaRep<double> gamma_rep_from_json(const nlohmann::json& doc) {
  return from_json_impl<double>(doc, parse_double);
}

GammaRep<Rational> gamma_rep_exact_from_json(const nlohmann::json& doc) {
  return from_json_impl<Rational>(doc, parse_exact);
}

nlohmann::json to_json(const GammaRep<double>& rep) {
  return to_json_impl(rep);
}

nlohmann::json to_json(const GammaRep<Rational>& rep) {
  return to_json_impl(rep);
}

template struct GammaRep<double>;
template struct GammaRep<Rational>;
template SSolution<double> solve_s_recursion(const GammaRep<double>&, const Options&);
template SSolution<Rational> solve_s_recursion(const GammaRep<Rational>&, const Options&);
template double recursion_residual(const GammaRep<double>&, const std::vector<Matrix<double>>&);
template double recursion_residual(const GammaRep<Rational>&, const std::vector<Matrix<Rational>>&);

}  // namespace vcsirreps::kmatrix
