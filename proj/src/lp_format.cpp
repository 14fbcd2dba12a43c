#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "vcoffload/milp.hpp"

namespace vcoffload {

namespace {

bool lp_name_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

std::string sanitize(const std::string& raw, const char* fallback, std::size_t index,
                     std::set<std::string>& used) {
  std::string s;
  s.reserve(raw.size());
  for (char c : raw) s += lp_name_char(c) ? c : '_';
  if (s.empty()) s = std::string(fallback) + std::to_string(index);
  // LP-format names must not start with a digit (or a lone sign/period).
  if (!((s[0] >= 'A' && s[0] <= 'Z') || (s[0] >= 'a' && s[0] <= 'z') || s[0] == '_')) s = "x" + s;
  std::string candidate = s;
  while (!used.insert(candidate).second) candidate = s + "_" + std::to_string(index);
  return candidate;
}

// Append "± coeff name" to the expression; coefficients stay explicit (even
// 1) so files diff cleanly.
void append_term(std::string& expr, bool first, double coeff, const std::string& name) {
  if (first) {
    if (coeff < 0.0) expr += "- ";
  } else {
    expr += coeff < 0.0 ? " - " : " + ";
  }
  expr += format_double(std::fabs(coeff));
  expr += ' ';
  expr += name;
}

}  // namespace

std::string export_lp(const MilpInstance& milp) {
  validate_instance(milp);
  const std::size_t n = milp.variables.size();

  std::set<std::string> used_vars;
  std::vector<std::string> vnames(n);
  for (std::size_t j = 0; j < n; ++j)
    vnames[j] = sanitize(milp.variables[j].name, "v", j, used_vars);

  std::string out;
  out += "Minimize\n";
  {
    std::string expr;
    bool first = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (milp.objective[j] == 0.0) continue;
      append_term(expr, first, milp.objective[j], vnames[j]);
      first = false;
    }
    if (milp.objective_constant != 0.0) {
      if (first) {
        expr += format_double(milp.objective_constant);
      } else {
        expr += milp.objective_constant < 0.0 ? " - " : " + ";
        expr += format_double(std::fabs(milp.objective_constant));
      }
      first = false;
    }
    if (first) expr = n > 0 ? "0 " + vnames[0] : "0";
    out += " obj: " + expr + "\n";
  }

  out += "Subject To\n";
  std::set<std::string> used_rows;
  for (std::size_t r = 0; r < milp.constraints.size(); ++r) {
    const Constraint& row = milp.constraints[r];
    const std::string rname = sanitize(row.name, "c", r, used_rows);
    std::string expr;
    bool first = true;
    for (const auto& [idx, coeff] : row.terms) {
      if (coeff == 0.0) continue;
      append_term(expr, first, coeff, vnames[static_cast<std::size_t>(idx)]);
      first = false;
    }
    if (first) expr = n > 0 ? "0 " + vnames[0] : "0";
    const char* rel = row.sense == RowSense::Le ? "<=" : row.sense == RowSense::Ge ? ">=" : "=";
    out += " " + rname + ": " + expr + " " + rel + " " + format_double(row.rhs) + "\n";
  }

  out += "Bounds\n";
  std::vector<std::size_t> generals, binaries;
  for (std::size_t j = 0; j < n; ++j) {
    const Variable& v = milp.variables[j];
    if (v.integral && v.lower == 0.0 && v.upper == 1.0) {
      binaries.push_back(j);  // the Binaries section implies [0, 1]
      continue;
    }
    if (v.integral) generals.push_back(j);
    if (v.lower == v.upper) {
      out += " " + vnames[j] + " = " + format_double(v.lower) + "\n";
    } else if (v.upper == kUnbounded) {
      if (v.lower != 0.0) out += " " + vnames[j] + " >= " + format_double(v.lower) + "\n";
      // default bounds 0 <= x < +inf need no line
    } else {
      out += " " + format_double(v.lower) + " <= " + vnames[j] + " <= " + format_double(v.upper) +
             "\n";
    }
  }

  if (!generals.empty()) {
    out += "Generals\n";
    for (std::size_t j : generals) out += " " + vnames[j] + "\n";
  }
  if (!binaries.empty()) {
    out += "Binaries\n";
    for (std::size_t j : binaries) out += " " + vnames[j] + "\n";
  }
  out += "End\n";
  return out;
}

}  // namespace vcoffload
