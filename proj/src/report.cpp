#include "gl11/report.hpp"

#include <stdexcept>

#include "json.hpp"

namespace gl11 {

namespace {

using nlohmann::json;

json encode(const CheckReport& r) {
  json res = json::array();
  for (const Residual& x : r.residuals)
    res.push_back({{"context", x.context}, {"value", x.value}});
  return {{"id", r.id},
          {"case", r.case_name},
          {"framework", r.framework},
          {"status", to_string(r.status)},
          {"residuals", res},
          {"wall_seconds", r.wall_seconds},
          {"params",
           {{"max_degree", r.params.max_degree},
            {"mode", r.params.mode},
            {"seed", r.params.seed},
            {"trials", r.params.trials}}},
          {"anchor", r.anchor},
          {"message", r.message}};
}

CheckReport decode(const json& j) {
  CheckReport r;
  r.id = j.at("id").get<std::string>();
  r.case_name = j.at("case").get<std::string>();
  r.framework = j.at("framework").get<std::string>();
  r.status = parse_status(j.at("status").get<std::string>());
  for (const json& x : j.at("residuals"))
    r.residuals.push_back(
        {x.at("context").get<std::string>(), x.at("value").get<std::string>()});
  r.wall_seconds = j.at("wall_seconds").get<double>();
  const json& p = j.at("params");
  r.params.max_degree = p.at("max_degree").get<int>();
  r.params.mode = p.at("mode").get<std::string>();
  r.params.seed = p.at("seed").get<std::uint64_t>();
  r.params.trials = p.at("trials").get<int>();
  r.anchor = j.at("anchor").get<std::string>();
  r.message = j.value("message", "");
  return r;
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::PASS: return "PASS";
    case Status::FAIL: return "FAIL";
    case Status::OBSTRUCTION_CONFIRMED: return "OBSTRUCTION-CONFIRMED";
    case Status::POLE: return "POLE";
  }
  return "?";
}

Status parse_status(std::string_view s) {
  for (Status x : {Status::PASS, Status::FAIL, Status::OBSTRUCTION_CONFIRMED,
                   Status::POLE})
    if (to_string(x) == s) return x;
  throw std::invalid_argument("unknown status " + std::string(s));
}

std::string to_json(const CheckReport& r, int indent) {
  return encode(r).dump(indent);
}

CheckReport report_from_json(std::string_view text) {
  return decode(json::parse(text));
}

std::string suite_to_json(const std::vector<CheckReport>& reports, int indent) {
  json checks = json::array();
  std::size_t failed = 0;
  for (const CheckReport& r : reports) {
    checks.push_back(encode(r));
    if (!r.ok()) ++failed;
  }
  json doc = {{"schema", kReportSchema},
              {"total", reports.size()},
              {"failed", failed},
              {"checks", checks}};
  return doc.dump(indent);
}

std::vector<CheckReport> suite_from_json(std::string_view text) {
  json doc = json::parse(text);
  if (doc.at("schema").get<std::string>() != kReportSchema)
    throw std::invalid_argument("unsupported report schema");
  std::vector<CheckReport> out;
  for (const json& j : doc.at("checks")) out.push_back(decode(j));
  return out;
}

}  // namespace gl11
