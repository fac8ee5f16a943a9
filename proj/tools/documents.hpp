#pragma once

// Output documents and verification reports shared by the vcs_irreps commands.

#include <vcsirreps/serialize.hpp>
#include <vcsirreps/su11.hpp>
#include <vcsirreps/su3so3.hpp>
#include <vcsirreps/u3.hpp>

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace vcsirreps::cli {

u3::Weight parse_weight(const std::string& text);
su3::Label parse_lm(const std::string& text);

nlohmann::json su11_document(const su11::Irrep& irrep, io::Precision precision);
nlohmann::json u3_document(const u3::Weight& hw, io::Precision precision);
nlohmann::json su3_document(const su3::Label& lm);

/// weight,bra,ket,value rows (su11 rows list generator entries instead of reduced MEs).
std::string to_csv(const nlohmann::json& doc);

struct CheckLine {
  std::string name;
  double value = 0.0;
  bool pass = false;
};

struct Report {
  std::vector<CheckLine> lines;
  bool pass() const;
  std::string to_string() const;
};

/// Runs the verification suite on a generated (or replayed) document.
Report check_document(const nlohmann::json& doc, double tol);

}  // namespace vcsirreps::cli
