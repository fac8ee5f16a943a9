#pragma once

#include "vcsirreps/exact.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace vcsirreps {

using Index = std::pair<std::size_t, std::size_t>;
using ExactEntries = std::map<Index, Radical>;

/// A generator's matrix in a declared orthonormal basis.
/// `values` is always populated; `exact` only by constructions that stay in Radical arithmetic.
struct OperatorMatrix {
  std::string name;
  std::string construction;
  std::size_t dim = 0;
  bool has_exact = false;
  ExactEntries exact;
  Eigen::MatrixXd values;

  static OperatorMatrix from_exact(std::string name, std::string construction, std::size_t dim, ExactEntries entries);
  static OperatorMatrix from_dense(std::string name, std::string construction, Eigen::MatrixXd values);

  std::size_t nonzeros(double tol = 0.0) const;
};

using OperatorSet = std::map<std::string, OperatorMatrix>;

/// Sparse exact matrix over Surd values, used for exact algebra checks.
class SurdMatrix {
 public:
  SurdMatrix() = default;
  explicit SurdMatrix(std::size_t dim) : dim_(dim) {}
  static SurdMatrix from(const OperatorMatrix& op);
  static SurdMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::map<Index, Surd>& entries() const { return entries_; }
  Surd at(std::size_t r, std::size_t c) const;
  void add(std::size_t r, std::size_t c, const Surd& v);
  bool is_zero() const { return entries_.empty(); }

  SurdMatrix leading_block(std::size_t n) const;
  SurdMatrix transpose() const;
  Eigen::MatrixXd to_double() const;

  friend SurdMatrix operator*(const SurdMatrix& a, const SurdMatrix& b);
  friend SurdMatrix operator+(const SurdMatrix& a, const SurdMatrix& b);
  friend SurdMatrix operator-(const SurdMatrix& a, const SurdMatrix& b);
  friend SurdMatrix operator*(const Surd& s, const SurdMatrix& m);
  friend bool operator==(const SurdMatrix& a, const SurdMatrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t dim_ = 0;
  std::map<Index, Surd> entries_;
};

}  // namespace vcsirreps
