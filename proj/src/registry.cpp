#include "sici/registry.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sici {

double tol_value(TolClass c) {
  switch (c) {
    case TolClass::TIGHT:
      return 1e-10;
    case TolClass::MED:
      return 1e-8;
    case TolClass::LOOSE:
      return 1e-5;
    case TolClass::ASYMPT:
      return 1e-4;
  }
  return 1e-8;
}

const char* tol_name(TolClass c) {
  switch (c) {
    case TolClass::TIGHT:
      return "TIGHT";
    case TolClass::MED:
      return "MED";
    case TolClass::LOOSE:
      return "LOOSE";
    case TolClass::ASYMPT:
      return "ASYMPT";
  }
  return "MED";
}

const char* category_name(Category c) {
  switch (c) {
    case Category::coef_integral:
      return "coef_integral";
    case Category::definite_integral:
      return "definite_integral";
    case Category::series_closed_form:
      return "series_closed_form";
    case Category::fourier_pointwise:
      return "fourier_pointwise";
    case Category::inequality:
      return "inequality";
    case Category::consistency:
      return "consistency";
  }
  return "consistency";
}

namespace {

const char* kVersion = "1.0.0";

std::string utc_timestamp() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

std::string num_str(double v) { return nlohmann::json(v).dump(); }

const IdentityRecord* find_record(const std::string& id) {
  for (const auto& r : catalog())
    if (r.id == id) return &r;
  return nullptr;
}

VerificationResult evaluate_record(const IdentityRecord& rec,
                                   const Params& overrides, double tol_scale) {
  Params params = rec.defaults;
  for (const auto& [k, v] : overrides) {
    if (!rec.defaults.count(k))
      throw std::invalid_argument(rec.id + ": unknown parameter '" + k + "'");
    auto it = rec.ranges.find(k);
    if (it != rec.ranges.end() &&
        (v < it->second.first || v > it->second.second))
      throw std::invalid_argument(
          rec.id + ": parameter '" + k + "' = " + num_str(v) +
          " outside range [" + num_str(it->second.first) + ", " +
          num_str(it->second.second) + "]");
    params[k] = v;
  }

  VerificationResult r;
  r.id = rec.id;
  r.paper_eq = rec.paper_eq;
  r.params = params;
  r.questionable = rec.questionable;
  r.tol = tol_value(rec.tol_class) * tol_scale;

  auto t0 = std::chrono::steady_clock::now();
  r.lhs = rec.lhs(params);
  r.rhs = rec.rhs(params);
  auto t1 = std::chrono::steady_clock::now();
  r.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

  double slack = r.tol + r.lhs.err + r.rhs.err;
  if (rec.is_inequality) {
    r.abs_err = std::max(0.0, r.lhs.value - r.rhs.value);
    r.pass = r.lhs.value <= r.rhs.value + slack;
  } else {
    r.abs_err = std::abs(r.lhs.value - r.rhs.value);
    r.pass = r.abs_err <= slack;
  }
  if (!std::isfinite(r.lhs.value) || !std::isfinite(r.rhs.value))
    r.pass = false;
  return r;
}

}  // namespace

std::vector<const IdentityRecord*> list_identities(const std::string& filter) {
  std::vector<const IdentityRecord*> out;
  for (const auto& r : catalog()) {
    bool match = filter.empty() ||
                 r.id.compare(0, filter.size(), filter) == 0 ||
                 filter == category_name(r.category);
    if (match) out.push_back(&r);
  }
  return out;
}

VerificationResult evaluate_identity(const std::string& id,
                                     const Params& overrides,
                                     double tol_scale) {
  const IdentityRecord* rec = find_record(id);
  if (!rec) throw std::out_of_range("unknown identity id '" + id + "'");
  return evaluate_record(*rec, overrides, tol_scale);
}

Report run_suite(const std::string& filter, double tol_scale,
                 int parallelism) {
  (void)parallelism;  // accepted for interface stability; run is sequential
  Report rep;
  rep.version = kVersion;
  rep.timestamp = utc_timestamp();
  rep.tol_scale = tol_scale;
  for (const IdentityRecord* rec : list_identities(filter)) {
    std::vector<Params> points;
    points.push_back({});  // defaults
    for (const auto& p : rec->sweep) points.push_back(p);
    for (const auto& pt : points) {
      VerificationResult r;
      try {
        r = evaluate_record(*rec, pt, tol_scale);
      } catch (const std::exception&) {
        ++rep.skip_count;
        continue;
      }
      if (r.pass) {
        ++rep.pass_count;
      } else {
        ++rep.fail_count;
        if (r.questionable) ++rep.questionable_fail_count;
      }
      rep.results.push_back(std::move(r));
    }
  }
  return rep;
}

std::string report_to_json(const Report& rep) {
  nlohmann::json j;
  j["meta"] = {{"version", rep.version},
               {"timestamp", rep.timestamp},
               {"tol_scale", rep.tol_scale}};
  j["results"] = nlohmann::json::array();
  for (const auto& r : rep.results) {
    nlohmann::json pj = nlohmann::json::object();
    for (const auto& [k, v] : r.params) pj[k] = v;
    j["results"].push_back({{"id", r.id},
                            {"eq", r.paper_eq},
                            {"params", pj},
                            {"lhs", r.lhs.value},
                            {"lhs_err", r.lhs.err},
                            {"rhs", r.rhs.value},
                            {"rhs_err", r.rhs.err},
                            {"abs_err", r.abs_err},
                            {"tol", r.tol},
                            {"pass", r.pass},
                            {"questionable", r.questionable},
                            {"ms", r.wall_ms}});
  }
  j["summary"] = {{"pass", rep.pass_count},
                  {"fail", rep.fail_count},
                  {"skip", rep.skip_count},
                  {"questionable_fail", rep.questionable_fail_count}};
  return j.dump(2) + "\n";
}

std::string report_to_csv(const Report& rep) {
  std::ostringstream os;
  os << "id,eq,params,lhs,lhs_err,rhs,rhs_err,abs_err,tol,pass,questionable,"
        "ms\n";
  for (const auto& r : rep.results) {
    std::string params;
    for (const auto& [k, v] : r.params) {
      if (!params.empty()) params += ';';
      params += k + "=" + num_str(v);
    }
    os << r.id << ',' << r.paper_eq << ',' << params << ','
       << num_str(r.lhs.value) << ',' << num_str(r.lhs.err) << ','
       << num_str(r.rhs.value) << ',' << num_str(r.rhs.err) << ','
       << num_str(r.abs_err) << ',' << num_str(r.tol) << ','
       << (r.pass ? "true" : "false") << ','
       << (r.questionable ? "true" : "false") << ',' << num_str(r.wall_ms)
       << '\n';
  }
  return os.str();
}

}  // namespace sici
