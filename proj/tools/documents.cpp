#include "documents.hpp"

#include <vcsirreps/repcheck.hpp>

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace vcsirreps::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

nlohmann::json value_json(const Radical& r, io::Precision precision) {
  if (precision == io::Precision::exact) return io::radical_to_json(r);
  return io::format_double(r.to_double());
}

std::string value_text(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  return io::radical_from_json(v).to_string();
}

nlohmann::json header(const std::string& algebra, io::Precision precision) {
  return {{"schema", io::kSchemaVersion},
          {"algebra", algebra},
          {"precision", precision == io::Precision::exact ? "exact" : "float"}};
}

nlohmann::json js_label(HalfInt j, HalfInt S) { return {{"j", j.to_string()}, {"S", S.to_string()}}; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string label_text(const nlohmann::json& label) {
  std::string out;
  for (const char* key : {"alpha", "j", "S", "L", "M"}) {
    if (!label.contains(key)) continue;
    const auto& v = label.at(key);
    if (!out.empty()) out += ",";
    out += std::string(key) + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
  }
  return out;
}

u3::Weight weight_of(const nlohmann::json& doc) {
  const auto& w = doc.at("irrep").at("weight");
  return {parse_rational(w.at(0).get<std::string>()), parse_rational(w.at(1).get<std::string>()),
          parse_rational(w.at(2).get<std::string>())};
}

su3::Label lm_of(const nlohmann::json& doc) {
  return {doc.at("irrep").at("lam").get<int>(), doc.at("irrep").at("mu").get<int>()};
}

double relative_gap(double a, double b) { return std::abs(a - b) / (1.0 + std::abs(b)); }

bool all_exact(const OperatorSet& ops) {
  for (const auto& [name, op] : ops)
    if (!op.has_exact) return false;
  return !ops.empty();
}

void add(Report& r, std::string name, double value, double tol) { r.lines.push_back({std::move(name), value, value <= tol}); }

void add_exact_checks(Report& r, const repcheck::AlgebraSpec& spec, const OperatorSet& ops,
                      const repcheck::Restriction& restriction) {
  if (!all_exact(ops)) return;
  add(r, "exact commutator failures", static_cast<double>(repcheck::exact_commutator_failures(spec, ops, restriction)), 0);
  add(r, "exact hermiticity failures", static_cast<double>(repcheck::exact_hermiticity_failures(spec, ops)), 0);
  const bool scalar = repcheck::exact_scalar(repcheck::exact_casimir(spec, ops, restriction)).has_value();
  add(r, "exact casimir non-scalar", scalar ? 0.0 : 1.0, 0);
}

void add_algebra_checks(Report& r, const repcheck::AlgebraSpec& spec, const OperatorSet& ops,
                        const repcheck::Restriction& restriction, double tol, std::optional<double> casimir_value) {
  add(r, "commutator residual", repcheck::commutator_residual(spec, ops, restriction), tol);
  add(r, "hermiticity residual", repcheck::hermiticity_residual(spec, ops), tol);
  auto schur = repcheck::schur_constancy(repcheck::casimir_matrix(spec, ops, restriction));
  add(r, "casimir schur deviation", schur.deviation, tol);
  if (casimir_value) add(r, "casimir value gap", relative_gap(schur.mean, *casimir_value), tol);
}

}  // namespace

u3::Weight parse_weight(const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != 3) throw std::invalid_argument("weight must be l1,l2,l3");
  u3::Weight w(parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]));
  w.validate();
  return w;
}

su3::Label parse_lm(const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != 2) throw std::invalid_argument("--lm must be lambda,mu");
  std::size_t used0 = 0, used1 = 0;
  su3::Label lm{std::stoi(parts[0], &used0), std::stoi(parts[1], &used1)};
  if (used0 != parts[0].size() || used1 != parts[1].size()) throw std::invalid_argument("--lm must be two integers");
  lm.validate();
  return lm;
}

nlohmann::json su11_document(const su11::Irrep& irrep, io::Precision precision) {
  irrep.validate();
  nlohmann::json doc = header("su11", precision);
  doc["irrep"] = {{"lambda", rational_to_string(irrep.lambda)}, {"n_max", irrep.n_max}};
  doc["metadata"] = {{"kernel_convergence_radius", su11::kKernelConvergenceRadius}};
  nlohmann::json basis = nlohmann::json::array();
  nlohmann::json k = nlohmann::json::array();
  for (int n = 0; n <= irrep.n_max; ++n) {
    basis.push_back({{"n", n}});
    k.push_back(value_json(su11::k_factor(irrep, n), precision));
  }
  doc["basis"] = basis;
  doc["k_factors"] = k;
  doc["generators"] = io::operators_to_json(su11::generator_matrices(irrep), precision);
  return doc;
}

nlohmann::json u3_document(const u3::Weight& hw, io::Precision precision) {
  hw.validate();
  nlohmann::json doc = header("u3", precision);
  doc["irrep"] = {{"weight", {rational_to_string(hw.l1), rational_to_string(hw.l2), rational_to_string(hw.l3)}}};
  const auto labels = u3::basis_enumeration(hw);
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& l : labels) basis.push_back({{"j", l.j.to_string()}, {"S", l.S.to_string()}, {"M", l.M.to_string()}});
  doc["basis"] = basis;
  nlohmann::json reduced = nlohmann::json::array();
  for (const auto& l : labels) {
    if (l.M != l.S) continue;
    for (HalfInt Sp : {l.S - kHalf, l.S + kHalf}) {
      if (Sp.twice() < 0 || !u3::admissible(hw, l.j + kHalf, Sp)) continue;
      const HalfInt jp = l.j + kHalf;
      reduced.push_back({{"tensor", "f"},
                         {"bra", js_label(jp, Sp)},
                         {"ket", js_label(l.j, l.S)},
                         {"value", value_json(u3::reduced_me(hw, l.j, l.S, Sp, u3::Tensor::f), precision)}});
      reduced.push_back({{"tensor", "e"},
                         {"bra", js_label(l.j, l.S)},
                         {"ket", js_label(jp, Sp)},
                         {"value", value_json(u3::reduced_me(hw, l.j, l.S, Sp, u3::Tensor::e), precision)}});
    }
  }
  doc["reduced_me"] = reduced;
  doc["generators"] = io::operators_to_json(u3::assemble_generators(hw), precision);
  return doc;
}

nlohmann::json su3_document(const su3::Label& lm) {
  lm.validate();
  su3::Irrep irrep(lm);
  nlohmann::json doc = header("su3-so3", io::Precision::floating);
  doc["irrep"] = {{"lam", lm.lam}, {"mu", lm.mu}};
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& b : irrep.basis()) basis.push_back({{"alpha", b.alpha}, {"L", b.L}, {"M", b.M}});
  doc["basis"] = basis;
  nlohmann::json reduced = nlohmann::json::array();
  for (const auto& [L, alpha] : irrep.states()) {
    for (const auto& [Lp, beta] : irrep.states()) {
      if (std::abs(L - Lp) > 2) continue;
      const double v = irrep.reduced_q(beta, Lp, alpha, L);
      if (v == 0.0) continue;
      reduced.push_back({{"tensor", "Q"},
                         {"bra", {{"alpha", beta}, {"L", Lp}}},
                         {"ket", {{"alpha", alpha}, {"L", L}}},
                         {"value", io::format_double(v)}});
    }
  }
  doc["reduced_me"] = reduced;
  doc["generators"] = io::operators_to_json(irrep.generators(), io::Precision::floating);
  return doc;
}

std::string to_csv(const nlohmann::json& doc) {
  std::ostringstream out;
  const std::string algebra = doc.at("algebra").get<std::string>();
  if (algebra == "su11") {
    const std::string weight = "lambda=" + doc.at("irrep").at("lambda").get<std::string>();
    out << "weight,generator,bra,ket,value\n";
    for (const auto& [name, op] : doc.at("generators").items()) {
      for (const auto& e : op.at("entries")) {
        out << csv_field(weight) << "," << csv_field(name) << ",n=" << e.at(0).get<std::size_t>()
            << ",n=" << e.at(1).get<std::size_t>() << "," << csv_field(value_text(e.at(2))) << "\n";
      }
    }
    return out.str();
  }
  std::string weight;
  if (algebra == "u3") {
    weight = weight_of(doc).tag();
  } else {
    weight = lm_of(doc).tag();
  }
  out << "weight,bra,ket,value\n";
  for (const auto& row : doc.at("reduced_me")) {
    out << csv_field(weight) << "," << csv_field(label_text(row.at("bra"))) << ","
        << csv_field(label_text(row.at("ket"))) << "," << csv_field(value_text(row.at("value"))) << "\n";
  }
  return out.str();
}

bool Report::pass() const {
  for (const auto& l : lines)
    if (!l.pass) return false;
  return !lines.empty();
}

std::string Report::to_string() const {
  std::ostringstream out;
  for (const auto& l : lines) {
    out << std::left << std::setw(32) << l.name << " " << std::setw(14) << io::format_double(l.value) << " "
        << (l.pass ? "PASS" : "FAIL") << "\n";
  }
  out << (pass() ? "all checks passed" : "verification FAILED") << "\n";
  return out.str();
}

Report check_document(const nlohmann::json& doc, double tol) {
  if (doc.at("schema").get<int>() != io::kSchemaVersion) throw std::invalid_argument("unsupported document schema");
  const std::string algebra = doc.at("algebra").get<std::string>();
  const OperatorSet ops = io::operators_from_json(doc.at("generators"));
  const repcheck::AlgebraSpec spec = repcheck::builtin_spec(algebra);
  const std::size_t basis_size = doc.at("basis").size();
  Report r;

  if (algebra == "su11") {
    const su11::Irrep irrep{parse_rational(doc.at("irrep").at("lambda").get<std::string>()),
                            doc.at("irrep").at("n_max").get<int>()};
    irrep.validate();
    const repcheck::Restriction interior{static_cast<std::size_t>(irrep.n_max)};
    add(r, "dimension mismatch", basis_size == irrep.dim() ? 0.0 : 1.0, 0);
    const Rational c = irrep.lambda * irrep.lambda / 4 - irrep.lambda / 2;
    add_algebra_checks(r, spec, ops, interior, tol, vcsirreps::to_double(c));
    add_exact_checks(r, spec, ops, interior);
  } else if (algebra == "u3") {
    const u3::Weight hw = weight_of(doc);
    hw.validate();
    add(r, "dimension mismatch", basis_size == hw.dimension() ? 0.0 : 1.0, 0);
    add_algebra_checks(r, spec, ops, {}, tol, std::nullopt);
    // C11 eigenvalues are l1 - 2j over the basis
    std::vector<double> expect;
    for (const auto& l : u3::basis_enumeration(hw)) expect.push_back(vcsirreps::to_double(hw.l1) - l.j.twice());
    std::sort(expect.begin(), expect.end());
    auto spectrum = repcheck::spectrum_multiset(ops.at("C11").values);
    double gap = spectrum.size() == expect.size() ? 0.0 : 1.0;
    for (std::size_t i = 0; gap < 1.0 && i < expect.size(); ++i) gap = std::max(gap, std::abs(spectrum[i] - expect[i]));
    add(r, "C11 spectrum gap", gap, tol);
    add_exact_checks(r, spec, ops, {});
  } else if (algebra == "su3-so3") {
    const su3::Label lm = lm_of(doc);
    lm.validate();
    add(r, "dimension mismatch", basis_size == lm.dimension() ? 0.0 : 1.0, 0);
    const double c = lm.lam * lm.lam + lm.mu * lm.mu + lm.lam * lm.mu + 3.0 * lm.lam + 3.0 * lm.mu;
    add_algebra_checks(r, spec, ops, {}, tol, c);
    std::map<int, int> rotor;
    for (const auto& b : doc.at("basis"))
      if (b.at("M").get<int>() == b.at("L").get<int>()) ++rotor[b.at("L").get<int>()];
    add(r, "branching mismatch", rotor == su3::branching_oracle(lm) ? 0.0 : 1.0, 0);
    auto canon = repcheck::schur_constancy(su3::casimir(su3::canonical_so3_operators(u3::assemble_generators(lm.u3_weight()))));
    auto own = repcheck::schur_constancy(repcheck::casimir_matrix(spec, ops));
    add(r, "cross-basis casimir gap", relative_gap(own.mean, canon.mean), tol);
  } else {
    throw std::invalid_argument("unknown algebra " + algebra);
  }
  return r;
}

}  // namespace vcsirreps::cli
