#ifndef SICI_REGISTRY_HPP
#define SICI_REGISTRY_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sici/approx.hpp"

namespace sici {

enum class TolClass { TIGHT, MED, LOOSE, ASYMPT };
double tol_value(TolClass c);
const char* tol_name(TolClass c);

enum class Category {
  coef_integral,
  definite_integral,
  series_closed_form,
  fourier_pointwise,
  inequality,
  consistency,
};
const char* category_name(Category c);

using Params = std::map<std::string, double>;

// One catalog entry: an executable identity.  lhs and rhs are evaluated
// independently at a parameter point.  For inequality records the check is
// lhs <= rhs (within tolerance slack) instead of |lhs - rhs| <= tol.
struct IdentityRecord {
  std::string id;
  std::string title;
  Category category;
  Params defaults;
  std::vector<Params> sweep;  // extra points beyond the defaults
  std::map<std::string, std::pair<double, double>> ranges;
  std::function<Approx(const Params&)> lhs;
  std::function<Approx(const Params&)> rhs;
  TolClass tol_class = TolClass::MED;
  std::string paper_eq;
  bool is_inequality = false;
  bool questionable = false;  // failures reported but excluded from exit code
};

struct VerificationResult {
  std::string id;
  std::string paper_eq;
  Params params;
  Approx lhs;
  Approx rhs;
  double abs_err = 0.0;
  double tol = 0.0;
  bool pass = false;
  bool questionable = false;
  double wall_ms = 0.0;
};

struct Report {
  std::string version;
  std::string timestamp;
  double tol_scale = 1.0;
  std::vector<VerificationResult> results;
  int pass_count = 0;
  int fail_count = 0;  // includes questionable failures
  int skip_count = 0;
  int questionable_fail_count = 0;
};

// Full catalog in natural id order (letter group, then numeric id).
const std::vector<IdentityRecord>& catalog();

// filter: empty = all; otherwise an id prefix ("C", "B1") or a category name.
std::vector<const IdentityRecord*> list_identities(const std::string& filter);

// Throws std::out_of_range for an unknown id, std::invalid_argument for an
// out-of-range parameter override.
VerificationResult evaluate_identity(const std::string& id,
                                     const Params& overrides,
                                     double tol_scale = 1.0);

// Evaluates each selected record at its defaults plus its sweep.
// parallelism is accepted for interface stability; evaluation order and
// results are deterministic regardless.
Report run_suite(const std::string& filter, double tol_scale = 1.0,
                 int parallelism = 1);

std::string report_to_json(const Report& r);
std::string report_to_csv(const Report& r);

}  // namespace sici

#endif
