#include "monopath/cli/serialize.hpp"

namespace monopath::cli {

Json to_json(const BigInt& value) {
  if (value.fits_slong_p()) return Json(static_cast<std::int64_t>(value.get_si()));
  return Json(value.get_str());
}

Json to_json(const Rational& value) { return Json(to_string(value)); }

Json to_json(const RationalVector& v) { return to_json(v.coords()); }

Json to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

Json to_json(const SuiteReport& report, bool with_timing) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual},
                      {"passed", c.passed}});
  }
  Json out{{"suite", report.name}, {"title", report.title}, {"passed", report.passed()},
           {"checks", checks}};
  if (with_timing) {
    out["seconds"] = report.seconds;
    out["time_limit_seconds"] = report.time_limit_seconds;
  }
  return out;
}

Json certificate_json(const DifferenceConstraintSystem& system,
                      const std::vector<std::size_t>& certificate, const std::string& prefix) {
  Json out = Json::array();
  for (std::size_t idx : certificate) {
    const auto& c = system.constraints().at(idx);
    out.push_back({{"u", prefix + std::to_string(c.u + 1)},
                   {"v", prefix + std::to_string(c.v + 1)},
                   {"offset", c.offset},
                   {"strict", c.strict}});
  }
  return out;
}

}  // namespace monopath::cli
