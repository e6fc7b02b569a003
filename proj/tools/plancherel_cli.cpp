// plancherel: command-line front end for the Plancherel measure library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
// 3 resource cap exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plancherel/collection.hpp"
#include "plancherel/ensembles.hpp"
#include "plancherel/errors.hpp"
#include "plancherel/fieldpolys.hpp"
#include "plancherel/json_io.hpp"
#include "plancherel/measures.hpp"
#include "plancherel/partitions.hpp"
#include "plancherel/rational.hpp"
#include "plancherel/sampler.hpp"

namespace {

using namespace plancherel;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Defaults {
  static constexpr const char* order = "30";
  static constexpr const char* tol = "1e-9";
  static constexpr const char* tail_eps = "1e-6";
  static constexpr const char* samples = "1";
  static constexpr const char* format = "json";
};

struct Flags {
  std::string q;
  std::optional<unsigned> n;
  std::string v;
  unsigned d = 1;
  std::optional<std::string> partition;
  std::vector<std::string> slots;
  std::size_t order = 30;
  std::string tol = Defaults::tol;
  std::optional<std::uint64_t> seed;
  std::size_t samples = 1;
  std::string tail_eps = Defaults::tail_eps;
  std::string format = Defaults::format;
  std::string out;
  std::string kind;
  unsigned n_from = 1;
  std::optional<unsigned> n_to;
  bool polys = false;
};

Rational rational_flag(const std::string& name, const std::string& text) {
  if (text.empty()) throw DomainError("--" + name + " is required");
  try {
    return parse_rational(text);
  } catch (const DomainError& e) {
    throw DomainError("--" + name + ": " + e.what());
  }
}

Rational positive_flag(const std::string& name, const std::string& text) {
  Rational x = rational_flag(name, text);
  if (x <= 0) throw DomainError("--" + name + " must be positive");
  return x;
}

unsigned long integer_q(const std::string& text) {
  const Rational q = rational_flag("q", text);
  if (!is_integer_at_least_two(q) || !q.get_num().fits_ulong_p()) {
    throw DomainError("--q must be an integer >= 2 here, got " + text);
  }
  return q.get_num().get_ui();
}

unsigned required_n(const Flags& f) {
  if (!f.n) throw DomainError("--n is required");
  return *f.n;
}

Partition partition_flag(const Flags& f) {
  if (!f.partition) throw DomainError("--partition is required");
  return Partition::parse(*f.partition);
}

// "degree:index=partition"
SlotConstraint parse_slot(const std::string& text) {
  const auto colon = text.find(':');
  const auto eq = text.find('=');
  if (colon == std::string::npos || eq == std::string::npos || eq < colon) {
    throw DomainError("--slots expects degree:index=partition, got \"" + text + "\"");
  }
  auto number = [&](const std::string& part, const char* what) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
      throw DomainError(std::string("--slots: bad ") + what + " in \"" + text + "\"");
    }
    return std::stoull(part);
  };
  SlotConstraint c;
  c.slot.degree = static_cast<unsigned>(number(text.substr(0, colon), "degree"));
  c.slot.index = number(text.substr(colon + 1, eq - colon - 1), "index");
  if (c.slot.degree == 0) throw DomainError("--slots: degree must be positive in \"" + text + "\"");
  c.lambda = Partition::parse(text.substr(eq + 1));
  return c;
}

MarginalConstraint slot_constraints(const Flags& f) {
  MarginalConstraint cs;
  for (const auto& s : f.slots) cs.push_back(parse_slot(s));
  return cs;
}

PartitionCollection slot_collection(const Flags& f, unsigned long q) {
  PartitionCollection collection;
  for (const auto& c : slot_constraints(f)) {
    const Integer count = count_irreducibles(c.slot.degree, q).count;
    if (Integer(static_cast<unsigned long>(c.slot.index)) >= count) {
      throw DomainError("slot " + std::to_string(c.slot.degree) + ":" + std::to_string(c.slot.index) +
                        " is out of range");
    }
    if (!collection.at(c.slot).empty()) throw DomainError("--slots lists a slot twice");
    collection.assign(c.slot, c.lambda);
  }
  if (f.polys) collection = with_polynomials(collection, q);
  return collection;
}

Json constraints_json(const MarginalConstraint& cs) {
  Json a = Json::array();
  for (const auto& c : cs) {
    a.push_back(Json{{"degree", c.slot.degree}, {"index", c.slot.index}, {"partition", c.lambda.to_string()}});
  }
  return a;
}

void check_format(const Flags& f, bool csv_allowed) {
  if (f.format != "json" && !(csv_allowed && f.format == "csv")) {
    throw DomainError("--format " + f.format + " is not available for this subcommand");
  }
}

// --- subcommands: each writes its payload to `out` and returns an exit code ---

int run_weight(const Flags& f, std::ostream& out) {
  check_format(f, false);
  const std::string kind = f.kind.empty() ? "plancherel" : f.kind;
  const Rational tol = positive_flag("tol", f.tol);
  Json j;
  if (kind == "m") {
    const Rational v = positive_flag("v", f.v);
    const Rational q = rational_flag("q", f.q);
    const Partition lambda = partition_flag(f);
    const MWeight w = m_weight(lambda, v, q, tol);
    j = Json{{"kind", "m"},
             {"q", to_string(q)},
             {"v", to_string(v)},
             {"partition", lambda.to_string()},
             {"exact_part", to_string(w.exact_part)},
             {"prefactor", certified_to_json(w.prefactor)},
             {"value", certified_to_json(w.value)}};
  } else if (kind == "plancherel" || kind == "grand") {
    const unsigned long q = integer_q(f.q);
    const PartitionCollection collection = slot_collection(f, q);
    j = Json{{"kind", kind}, {"q", q}, {"collection", collection_to_json(collection)}};
    if (kind == "plancherel") {
      j["weight"] = to_string(plancherel_weight(collection, q));
    } else {
      const GrandWeight w = grand_weight(collection, positive_flag("v", f.v), q, tol);
      j["v"] = f.v;
      j["exact_part"] = to_string(w.exact_part);
      j["prefactor"] = certified_to_json(w.prefactor);
      j["value"] = certified_to_json(w.value);
    }
  } else {
    throw DomainError("weight --kind must be m, plancherel or grand");
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

int run_degree(const Flags& f, std::ostream& out) {
  check_format(f, false);
  const unsigned long q = integer_q(f.q);
  const PartitionCollection collection = slot_collection(f, q);
  Json j{{"q", q},
         {"collection", collection_to_json(collection)},
         {"degree", irrep_degree(collection, q).get_str()},
         {"group_order", gl_order(collection.total(), q).get_str()}};
  out << j.dump(2) << '\n';
  return kExitOk;
}

int run_marginal(const Flags& f, std::ostream& out) {
  check_format(f, false);
  const unsigned long q = integer_q(f.q);
  const unsigned n = required_n(f);
  const MarginalConstraint cs = slot_constraints(f);
  const MarginalResult r = marginal(n, q, cs);
  Json j{{"q", q},
         {"n", n},
         {"constraints", constraints_json(cs)},
         {"value", to_string(r.value)},
         {"decimal", to_decimal(r.value)},
         {"exceeds_size", r.exceeds_size}};
  out << j.dump(2) << '\n';
  return kExitOk;
}

int run_limit(const Flags& f, std::ostream& out) {
  check_format(f, false);
  const unsigned long q = integer_q(f.q);
  const Partition lambda = partition_flag(f);
  const Rational tol = positive_flag("tol", f.tol);
  Json j{{"q", q},
         {"d", f.d},
         {"partition", lambda.to_string()},
         {"value", certified_to_json(limit_weight(lambda, f.d, q, tol))}};
  out << j.dump(2) << '\n';
  return kExitOk;
}

int run_converge(const Flags& f, std::ostream& out) {
  check_format(f, true);
  const unsigned long q = integer_q(f.q);
  const Rational tol = positive_flag("tol", f.tol);
  MarginalConstraint cs;
  if (!f.slots.empty()) {
    if (f.partition) throw DomainError("give either --slots or --d/--partition, not both");
    cs = slot_constraints(f);
  } else {
    cs = degree_constraints({{f.d, partition_flag(f)}});
  }
  if (!f.n_to) throw DomainError("--n-to is required");
  const auto rows = convergence_table(q, cs, f.n_from, *f.n_to, tol);
  if (f.format == "csv") {
    out << convergence_csv_header() << '\n';
    for (const auto& row : rows) out << convergence_row_csv(row) << '\n';
  } else {
    Json j{{"q", q}, {"constraints", constraints_json(cs)}, {"tol", f.tol}, {"rows", Json::array()}};
    for (const auto& row : rows) j["rows"].push_back(row_to_json(row));
    out << j.dump(2) << '\n';
  }
  return kExitOk;
}

int run_verify(const Flags& f, std::ostream& out) {
  check_format(f, false);
  if (f.kind.empty()) throw DomainError("verify needs --kind (euler, factorization, cauchy, plancherel-normalization)");
  const IdentityKind kind = parse_identity_kind(f.kind);
  const Rational q = rational_flag("q", f.q);
  VerifyOptions options;
  options.order = f.order;
  const IdentityReport report = verify_identity(kind, q, options);
  out << report_to_json(report).dump(2) << '\n';
  return report.ok ? kExitOk : kExitVerifyFailed;
}

SamplerConfig sampler_config(const Flags& f) {
  if (!f.seed) throw DomainError("sample needs --seed");
  SamplerConfig cfg;
  cfg.seed = *f.seed;
  cfg.count = f.samples;
  cfg.tail_eps = positive_flag("tail-eps", f.tail_eps);
  cfg.with_polynomials = f.polys;
  return cfg;
}

int run_sample(const Flags& f, std::ostream& out) {
  if (f.format != "json") throw DomainError("sample writes JSON lines only");
  const SamplerConfig cfg = sampler_config(f);
  const std::string kind = f.kind.empty() ? "plancherel" : f.kind;
  if (kind == "m") {
    for (const auto& lambda : sample_m_partition(positive_flag("v", f.v), rational_flag("q", f.q), cfg)) {
      out << Json{{"n", lambda.size()}, {"partition", lambda.to_string()}}.dump() << '\n';
    }
  } else if (kind == "plancherel") {
    for (const auto& c : sample_plancherel(required_n(f), integer_q(f.q), cfg)) out << collection_to_json(c).dump() << '\n';
  } else if (kind == "grand") {
    for (const auto& c : sample_grand(positive_flag("v", f.v), integer_q(f.q), cfg)) {
      out << collection_to_json(c).dump() << '\n';
    }
  } else {
    throw DomainError("sample --kind must be m, plancherel or grand");
  }
  return kExitOk;
}

int run_enumerate(const Flags& f, std::ostream& out) {
  check_format(f, false);
  const std::string kind = f.kind.empty() ? "collections" : f.kind;
  Json j;
  if (kind == "collections") {
    const unsigned long q = integer_q(f.q);
    const unsigned n = required_n(f);
    j = Json{{"q", q}, {"n", n}, {"collections", Json::array()}};
    Rational total = 0;
    for_each_collection(n, q, [&](const PartitionCollection& c) {
      const Rational w = plancherel_weight(c, q);
      total += w;
      Json entry = collection_to_json(f.polys ? with_polynomials(c, q) : c);
      entry["degree"] = irrep_degree(c, q).get_str();
      entry["weight"] = to_string(w);
      j["collections"].push_back(std::move(entry));
    });
    j["count"] = j["collections"].size();
    j["total_weight"] = to_string(total);
  } else if (kind == "partitions") {
    const unsigned n = required_n(f);
    j = Json{{"n", n}, {"partitions", Json::array()}};
    for (const auto& p : enumerate_partitions(n)) j["partitions"].push_back(p.to_string());
    j["count"] = j["partitions"].size();
  } else if (kind == "polys") {
    const unsigned long q = integer_q(f.q);
    const DegreeClass dc = count_irreducibles(f.d, q);
    j = Json{{"q", q}, {"d", f.d}, {"count", dc.count.get_str()}};
    if (dc.formal) j["formal"] = true;
    if (f.polys) {
      Json list = Json::array();
      for (const auto& label : enumerate_irreducibles(f.d, q)) list.push_back(render_polynomial(*label.coeffs));
      j["polynomials"] = std::move(list);
    }
  } else {
    throw DomainError("enumerate --kind must be collections, partitions or polys");
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plancherel measures on partition collections for GL(n,q)"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");
  app.footer(std::string("Defaults: --order ") + Defaults::order + ", --tol " + Defaults::tol + ", --tail-eps " +
             Defaults::tail_eps + ", --format " + Defaults::format + "; sample requires --seed.\n" +
             "Exit codes: 0 ok, 1 verification failed, 2 usage or domain error, 3 resource cap.");
  Flags f;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--q", f.q, "Field size q (rational \"p/r\" where allowed, else integer >= 2)");
    sub->add_option("--format", f.format, "Output format: json or csv")
        ->default_str(Defaults::format)
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", f.out, "Write the payload to this path instead of stdout");
  };
  auto slots = [&](CLI::App* sub) {
    sub->add_option("--slots", f.slots, "Slot assignment degree:index=partition (repeatable)")->take_all();
    sub->add_flag("--polys", f.polys, "Attach polynomial coefficients to labels (prime q)");
  };
  auto tol = [&](CLI::App* sub) {
    sub->add_option("--tol", f.tol, "Certification tolerance")->default_str(Defaults::tol);
  };

  auto* weight = app.add_subcommand("weight", "Pointwise weight: M_{v,q}(lambda), mu_n(Lambda) or P_{v,q}(Lambda)");
  common(weight);
  slots(weight);
  tol(weight);
  weight->add_option("--kind", f.kind, "m, plancherel (default) or grand");
  weight->add_option("--v", f.v, "Fugacity v (rational)");
  weight->add_option("--partition", f.partition, "Partition for --kind m, e.g. \"2,1\"");

  auto* degree = app.add_subcommand("degree", "Irreducible representation degree of a collection");
  common(degree);
  slots(degree);

  auto* marg = app.add_subcommand("marginal", "Exact marginal mu_n(Lambda_slot = lambda for every slot)");
  common(marg);
  marg->add_option("--n", f.n, "Collection size n");
  marg->add_option("--slots", f.slots, "Constraint degree:index=partition (repeatable)")->take_all();

  auto* limit = app.add_subcommand("limit", "Limit weight M_{1,q^d}(lambda), certified");
  common(limit);
  tol(limit);
  limit->add_option("--d", f.d, "Degree d")->default_str("1");
  limit->add_option("--partition", f.partition, "Partition, e.g. \"2,1\"");

  auto* conv = app.add_subcommand("converge", "Convergence table of exact marginals against the limit");
  common(conv);
  tol(conv);
  conv->add_option("--d", f.d, "Degree of the constrained slot")->default_str("1");
  conv->add_option("--partition", f.partition, "Partition at that slot");
  conv->add_option("--slots", f.slots, "Joint constraints degree:index=partition (repeatable)")->take_all();
  conv->add_option("--n-from", f.n_from, "First n")->default_str("1");
  conv->add_option("--n-to", f.n_to, "Last n");

  auto* verify = app.add_subcommand("verify", "Check an identity to a given order");
  common(verify);
  verify->add_option("--kind", f.kind, "euler, factorization, cauchy or plancherel-normalization");
  verify->add_option("--order", f.order, "Truncation order")->default_str(Defaults::order);

  auto* sample = app.add_subcommand("sample", "Exact samples as JSON lines");
  common(sample);
  sample->add_option("--kind", f.kind, "m, plancherel (default) or grand");
  sample->add_option("--n", f.n, "Collection size for --kind plancherel");
  sample->add_option("--v", f.v, "Fugacity v for --kind m or grand");
  sample->add_option("--seed", f.seed, "PRNG seed (required)");
  sample->add_option("--samples", f.samples, "Number of draws")->default_str(Defaults::samples);
  sample->add_option("--tail-eps", f.tail_eps, "Probability mass allowed beyond the size truncation")
      ->default_str(Defaults::tail_eps);
  sample->add_flag("--polys", f.polys, "Attach polynomial coefficients to labels (prime q)");

  auto* enumerate = app.add_subcommand("enumerate", "List collections, partitions or irreducible polynomials");
  common(enumerate);
  enumerate->add_option("--kind", f.kind, "collections (default), partitions or polys");
  enumerate->add_option("--n", f.n, "Size n");
  enumerate->add_option("--d", f.d, "Degree for --kind polys")->default_str("1");
  enumerate->add_flag("--polys", f.polys, "Include polynomial coefficients (prime q)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ostringstream payload;
  int code = kExitOk;
  try {
    if (*weight) code = run_weight(f, payload);
    else if (*degree) code = run_degree(f, payload);
    else if (*marg) code = run_marginal(f, payload);
    else if (*limit) code = run_limit(f, payload);
    else if (*conv) code = run_converge(f, payload);
    else if (*verify) code = run_verify(f, payload);
    else if (*sample) code = run_sample(f, payload);
    else if (*enumerate) code = run_enumerate(f, payload);
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitResource + 1;
  }

  if (f.out.empty()) {
    std::cout << payload.str();
  } else {
    std::ofstream file(f.out, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open " << f.out << '\n';
      return kExitUsage;
    }
    file << payload.str();
  }
  return code;
}
