#include "plancherel/json_io.hpp"

#include "plancherel/errors.hpp"

namespace plancherel {

Json certified_to_json(const CertifiedReal& x, int digits) {
  const std::string value = to_decimal(x.value, digits);
  const Rational printed = decimal_value(value);
  const Rational err = x.error_bound + abs(printed - x.value);
  return Json{{"value", value}, {"err", to_decimal(err, 6, Rounding::Up)}};
}

CertifiedReal certified_from_json(const Json& j) {
  return {decimal_value(j.at("value").get<std::string>()), decimal_value(j.at("err").get<std::string>())};
}

Json report_to_json(const IdentityReport& report) {
  Json j;
  j["kind"] = to_string(report.kind);
  j["q"] = to_string(report.q);
  j["order"] = report.order;
  j["ok"] = report.ok;
  if (report.first_discrepancy) {
    const auto& d = *report.first_discrepancy;
    Json dj{{"index", d.index}, {"lhs", to_string(d.lhs)}, {"rhs", to_string(d.rhs)}};
    if (d.degree) dj["degree"] = *d.degree;
    j["first_discrepancy"] = dj;
  } else {
    j["first_discrepancy"] = nullptr;
  }
  if (!report.gauss_counts.empty()) {
    Json counts = Json::array();
    for (const auto& g : report.gauss_counts) {
      counts.push_back({{"k", g.k}, {"sum", g.sum.get_str()}, {"expected", g.expected.get_str()}});
    }
    j["gauss_counts"] = counts;
  }
  return j;
}

IdentityReport report_from_json(const Json& j) {
  IdentityReport r;
  r.kind = parse_identity_kind(j.at("kind").get<std::string>());
  r.q = parse_rational(j.at("q").get<std::string>());
  r.order = j.at("order").get<std::size_t>();
  r.ok = j.at("ok").get<bool>();
  if (auto it = j.find("first_discrepancy"); it != j.end() && !it->is_null()) {
    Discrepancy d;
    d.index = it->at("index").get<std::size_t>();
    d.lhs = parse_rational(it->at("lhs").get<std::string>());
    d.rhs = parse_rational(it->at("rhs").get<std::string>());
    if (auto deg = it->find("degree"); deg != it->end()) d.degree = deg->get<unsigned>();
    r.first_discrepancy = d;
  }
  if (auto it = j.find("gauss_counts"); it != j.end()) {
    for (const auto& g : *it) {
      r.gauss_counts.push_back({g.at("k").get<unsigned>(), Integer(g.at("sum").get<std::string>(), 10),
                                Integer(g.at("expected").get<std::string>(), 10)});
    }
  }
  return r;
}

Json collection_to_json(const PartitionCollection& collection) {
  Json assignments = Json::array();
  for (const auto& [label, lambda] : collection.assignments()) {
    Json a;
    a["degree"] = label.degree;
    a["index"] = label.index;
    if (label.coeffs) a["poly"] = render_polynomial(*label.coeffs);
    a["partition"] = lambda.to_string();
    assignments.push_back(std::move(a));
  }
  return Json{{"n", collection.total()}, {"assignments", assignments}};
}

PartitionCollection collection_from_json(const Json& j) {
  PartitionCollection c;
  for (const auto& a : j.at("assignments")) {
    PolynomialLabel label{a.at("degree").get<unsigned>(), a.at("index").get<std::uint64_t>(), std::nullopt};
    c.assign(label, Partition::parse(a.at("partition").get<std::string>()));
  }
  if (auto it = j.find("n"); it != j.end() && it->get<unsigned long>() != c.total()) {
    throw DomainError("collection size field disagrees with its assignments");
  }
  return c;
}

Json row_to_json(const ConvergenceRow& row) {
  return Json{{"n", row.n},
              {"exact_marginal", to_string(row.exact_marginal)},
              {"limit_value", certified_to_json(row.limit_value)},
              {"abs_error", certified_to_json(row.abs_error)}};
}

std::string convergence_csv_header() {
  return "n,exact_marginal,exact_marginal_decimal,limit_value,limit_err,abs_error,abs_error_err";
}

std::string convergence_row_csv(const ConvergenceRow& row) {
  const Json limit = certified_to_json(row.limit_value);
  const Json err = certified_to_json(row.abs_error);
  return std::to_string(row.n) + "," + to_string(row.exact_marginal) + "," +
         to_decimal(row.exact_marginal) + "," + limit["value"].get<std::string>() + "," +
         limit["err"].get<std::string>() + "," + err["value"].get<std::string>() + "," +
         err["err"].get<std::string>();
}

}  // namespace plancherel
