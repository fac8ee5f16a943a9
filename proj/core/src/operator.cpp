#include "vcsirreps/operator.hpp"

#include <stdexcept>

namespace vcsirreps {

OperatorMatrix OperatorMatrix::from_exact(std::string name, std::string construction, std::size_t dim,
                                          ExactEntries entries) {
  OperatorMatrix op;
  op.name = std::move(name);
  op.construction = std::move(construction);
  op.dim = dim;
  op.has_exact = true;
  op.values = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (auto it = entries.begin(); it != entries.end();) {
    const auto& [rc, v] = *it;
    if (rc.first >= dim || rc.second >= dim) throw std::out_of_range("operator entry outside dimension");
    if (v.is_zero()) {
      it = entries.erase(it);
      continue;
    }
    op.values(static_cast<Eigen::Index>(rc.first), static_cast<Eigen::Index>(rc.second)) = v.to_double();
    ++it;
  }
  op.exact = std::move(entries);
  return op;
}

OperatorMatrix OperatorMatrix::from_dense(std::string name, std::string construction, Eigen::MatrixXd values) {
  if (values.rows() != values.cols()) throw std::invalid_argument("operator matrix must be square");
  OperatorMatrix op;
  op.name = std::move(name);
  op.construction = std::move(construction);
  op.dim = static_cast<std::size_t>(values.rows());
  op.values = std::move(values);
  return op;
}

std::size_t OperatorMatrix::nonzeros(double tol) const {
  if (has_exact) return exact.size();
  return static_cast<std::size_t>((values.array().abs() > tol).count());
}

SurdMatrix SurdMatrix::from(const OperatorMatrix& op) {
  if (!op.has_exact) throw std::invalid_argument("operator " + op.name + " has no exact entries");
  SurdMatrix m(op.dim);
  for (const auto& [rc, v] : op.exact) m.add(rc.first, rc.second, Surd(v));
  return m;
}

SurdMatrix SurdMatrix::identity(std::size_t dim) {
  SurdMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.entries_.emplace(Index{i, i}, Surd(1));
  return m;
}

Surd SurdMatrix::at(std::size_t r, std::size_t c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Surd() : it->second;
}

void SurdMatrix::add(std::size_t r, std::size_t c, const Surd& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = entries_.emplace(Index{r, c}, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

SurdMatrix SurdMatrix::leading_block(std::size_t n) const {
  SurdMatrix out(std::min(n, dim_));
  for (const auto& [rc, v] : entries_) {
    if (rc.first < out.dim_ && rc.second < out.dim_) out.entries_.emplace(rc, v);
  }
  return out;
}

SurdMatrix SurdMatrix::transpose() const {
  SurdMatrix out(dim_);
  for (const auto& [rc, v] : entries_) out.entries_.emplace(Index{rc.second, rc.first}, v);
  return out;
}

Eigen::MatrixXd SurdMatrix::to_double() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim_), static_cast<Eigen::Index>(dim_));
  for (const auto& [rc, v] : entries_) {
    m(static_cast<Eigen::Index>(rc.first), static_cast<Eigen::Index>(rc.second)) = v.to_double();
  }
  return m;
}

SurdMatrix operator*(const SurdMatrix& a, const SurdMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("SurdMatrix dimension mismatch");
  std::vector<std::vector<std::pair<std::size_t, const Surd*>>> rows(b.dim_);
  for (const auto& [rc, v] : b.entries_) rows[rc.first].emplace_back(rc.second, &v);
  SurdMatrix out(a.dim_);
  for (const auto& [rc, v] : a.entries_) {
    for (const auto& [col, w] : rows[rc.second]) out.add(rc.first, col, v * *w);
  }
  return out;
}

SurdMatrix operator+(const SurdMatrix& a, const SurdMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("SurdMatrix dimension mismatch");
  SurdMatrix out = a;
  for (const auto& [rc, v] : b.entries_) out.add(rc.first, rc.second, v);
  return out;
}

SurdMatrix operator-(const SurdMatrix& a, const SurdMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("SurdMatrix dimension mismatch");
  SurdMatrix out = a;
  for (const auto& [rc, v] : b.entries_) out.add(rc.first, rc.second, -v);
  return out;
}

SurdMatrix operator*(const Surd& s, const SurdMatrix& m) {
  SurdMatrix out(m.dim_);
  if (s.is_zero()) return out;
  for (const auto& [rc, v] : m.entries_) out.add(rc.first, rc.second, s * v);
  return out;
}

}  // namespace vcsirreps
