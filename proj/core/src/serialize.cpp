#include "vcsirreps/serialize.hpp"

#include <charconv>
#include <stdexcept>

namespace vcsirreps::io {

nlohmann::json radical_to_json(const Radical& r) {
  return {{"sign", r.sign()}, {"radicand", rational_to_string(r.radicand())}};
}

Radical radical_from_json(const nlohmann::json& j) {
  const int sign = j.at("sign").get<int>();
  if (sign < -1 || sign > 1) throw std::invalid_argument("Radical sign must be -1, 0 or 1");
  const Rational radicand = parse_rational(j.at("radicand").get<std::string>());
  if (radicand < 0) throw std::invalid_argument("Radical radicand must be non-negative");
  if ((sign == 0) != (radicand == 0)) throw std::invalid_argument("Radical sign and radicand disagree on zero");
  return Radical::from_parts(sign, radicand);
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
  double out = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw std::invalid_argument("bad float literal: " + s);
  return out;
}

nlohmann::json operator_to_json(const OperatorMatrix& op, Precision precision) {
  nlohmann::json j;
  j["name"] = op.name;
  j["construction"] = op.construction;
  j["dim"] = op.dim;
  const bool exact = precision == Precision::exact && op.has_exact;
  j["precision"] = exact ? "exact" : "float";
  nlohmann::json entries = nlohmann::json::array();
  if (exact) {
    for (const auto& [rc, v] : op.exact) entries.push_back({rc.first, rc.second, radical_to_json(v)});
  } else {
    for (Eigen::Index r = 0; r < op.values.rows(); ++r) {
      for (Eigen::Index c = 0; c < op.values.cols(); ++c) {
        const double v = op.values(r, c);
        if (v != 0.0) entries.push_back({r, c, format_double(v)});
      }
    }
  }
  j["entries"] = std::move(entries);
  return j;
}

OperatorMatrix operator_from_json(const nlohmann::json& j) {
  const std::string name = j.at("name").get<std::string>();
  const std::string construction = j.value("construction", std::string());
  const std::size_t dim = j.at("dim").get<std::size_t>();
  const bool exact = j.value("precision", std::string("float")) == "exact";
  if (exact) {
    ExactEntries entries;
    for (const auto& e : j.at("entries")) {
      const auto r = e.at(0).get<std::size_t>(), c = e.at(1).get<std::size_t>();
      if (!entries.emplace(Index{r, c}, radical_from_json(e.at(2))).second) {
        throw std::invalid_argument("duplicate entry in operator " + name);
      }
    }
    return OperatorMatrix::from_exact(name, construction, dim, std::move(entries));
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (const auto& e : j.at("entries")) {
    const auto r = e.at(0).get<std::size_t>(), c = e.at(1).get<std::size_t>();
    if (r >= dim || c >= dim) throw std::out_of_range("operator entry outside dimension in " + name);
    const auto& v = e.at(2);
    m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
        v.is_string() ? parse_double(v.get<std::string>()) : v.get<double>();
  }
  return OperatorMatrix::from_dense(name, construction, std::move(m));
}

nlohmann::json operators_to_json(const OperatorSet& ops, Precision precision) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [name, op] : ops) j[name] = operator_to_json(op, precision);
  return j;
}

OperatorSet operators_from_json(const nlohmann::json& j) {
  OperatorSet ops;
  for (const auto& [name, value] : j.items()) {
    OperatorMatrix op = operator_from_json(value);
    if (op.name != name) throw std::invalid_argument("operator key " + name + " does not match its name field");
    ops.emplace(name, std::move(op));
  }
  return ops;
}

}  // namespace vcsirreps::io
