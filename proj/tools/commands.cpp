#include "commands.hpp"

#include <algorithm>
#include <exception>
#include <iomanip>
#include <limits>

#include <CLI11.hpp>

#include "degenkit/arrangement.hpp"
#include "degenkit/degeneration.hpp"
#include "degenkit/errors.hpp"
#include "degenkit/serialization.hpp"
#include "degenkit/toric_model.hpp"
#include "verify_suites.hpp"

namespace degenkit::cli {
namespace {

using grothring::GrothClass;

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

Json integer_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return x.convert_to<std::int64_t>();
  }
  return x.str();
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string rays_text(const std::vector<toriclat::LatticeVector>& rays) {
  std::string s;
  for (const auto& r : rays) s += (s.empty() ? "" : " ") + r.to_string();
  return s;
}

struct Options {
  std::string format = "text";
  int r = 0;
  int n = -1;
  int d = 0;
  int k = 0;
  int bound = degeneration::kDefaultPartitionBound;
  int max_n = 12;
  int max_r = 30;
  int verify_max_n = 8;
  std::string scope = "all";
  std::uint64_t seed = SuiteLimits{}.seed;
  std::string rays;
};

int cmd_class(const Options& o, std::ostream& out) {
  require(o.r >= 1, "class: --r must be >= 1");
  require(o.n >= 0, "class: --n must be >= 0");
  require(o.n <= o.max_n, "class: --n exceeds --max-n " + std::to_string(o.max_n));
  require(o.r <= o.max_r, "class: --r exceeds --max-r " + std::to_string(o.max_r));

  const GrothClass closed = grothring::arrangement_class_closed(o.r, o.n);
  const GrothClass recursive = grothring::arrangement_class_recursive(o.r, o.n);
  const GrothClass oracle = grothring::arrangement_class_inclusion_exclusion(o.r, o.n);
  const bool agree = closed == recursive && closed == oracle;
  const BigInt residue = grothring::reduce_mod_L(closed);

  if (o.format == "json") {
    emit_json(out, Json{{"r", o.r},
                        {"n", o.n},
                        {"closed", closed},
                        {"recursive", recursive},
                        {"inclusion_exclusion", oracle},
                        {"residue_mod_L", integer_json(residue)},
                        {"agree", agree}});
  } else {
    out << "arrangement of r=" << o.r << " hyperplanes in P^" << (o.n + 1) << "\n"
        << "  closed:              " << closed.to_string() << "\n"
        << "  recursive:           " << recursive.to_string() << "\n"
        << "  inclusion-exclusion: " << oracle.to_string() << "\n"
        << "  residue mod L:       " << residue.str() << "\n"
        << (agree ? "AGREE" : "DISAGREE") << "\n";
  }
  return agree ? kExitOk : kExitVerificationFailed;
}

int cmd_dual(const Options& o, std::ostream& out) {
  std::optional<toriclat::Cone> cone;
  if (!o.rays.empty()) {
    Json parsed;
    try {
      parsed = Json::parse(o.rays);
    } catch (const Json::parse_error& e) {
      throw UsageError(std::string("dual: --rays is not valid JSON: ") + e.what());
    }
    require(parsed.is_array() && !parsed.empty(), "dual: --rays must be a nonempty array of integer arrays");
    const auto rays = parsed.get<std::vector<toriclat::LatticeVector>>();
    cone.emplace(rays.front().rank(), rays);
  } else {
    require(o.n >= 1, "dual: give --n >= 1 or --rays");
    require(o.n <= o.max_n, "dual: --n exceeds --max-n " + std::to_string(o.max_n));
    cone.emplace(toriclat::model_cone(o.n));
  }
  const toriclat::Cone dual = toriclat::dual_cone(*cone);
  if (o.format == "json") {
    emit_json(out, Json{{"cone", *cone}, {"dual", dual}});
  } else {
    out << "cone rays: " << rays_text(cone->rays()) << "\n"
        << "dual rays: " << rays_text(dual.rays()) << "\n";
  }
  return kExitOk;
}

int cmd_resolve(const Options& o, std::ostream& out) {
  require(o.n >= 1, "resolve: --n must be >= 1");
  require(o.n <= o.max_n, "resolve: --n exceeds --max-n " + std::to_string(o.max_n));
  const toriclat::Fan fan = toriclat::model_subdivision(o.n);
  std::vector<toriclat::ChartPresentation> charts;
  if (o.n >= 2) charts = toriclat::blowup_chart_sequence(o.n);
  const std::size_t rank = static_cast<std::size_t>(o.n) + 1;
  const auto semistable = toriclat::semistable_fiber_check(fan, toriclat::LatticeVector::basis(rank, rank - 1));

  if (o.format == "json") {
    emit_json(out, Json{{"n", o.n}, {"fan", fan}, {"charts", charts}, {"semistable", semistable}});
  } else {
    out << "subdivision of the cone of t*y = z_1...z_" << o.n << " (rank " << rank << ")\n";
    for (std::size_t i = 0; i < fan.max_cones().size(); ++i) {
      out << "  cone " << (i + 1) << ": " << rays_text(fan.max_cones()[i].rays()) << "\n";
    }
    for (std::size_t i = 0; i < charts.size(); ++i) {
      out << "  chart " << (i + 1) << ":";
      for (const auto& c : charts[i].coordinates()) out << " " << c.name << "=" << c.monomial.to_string();
      if (const auto& rel = charts[i].relation()) {
        auto side = [&](const std::vector<std::size_t>& idx) {
          std::string s;
          for (auto j : idx) s += (s.empty() ? "" : "*") + charts[i].coordinates()[j].name;
          return s;
        };
        out << "  [" << side(rel->left) << " = " << side(rel->right) << "]";
      }
      out << "\n";
    }
    out << "  reduced=" << (semistable.reduced ? "yes" : "no") << " smooth=" << (semistable.smooth ? "yes" : "no")
        << " snc=" << (semistable.snc ? "yes" : "no") << "\n";
  }
  return semistable.snc ? kExitOk : kExitVerificationFailed;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  static const std::vector<std::string> scopes{"lemma-arrangement", "lemma-toric", "degeneration", "all"};
  require(std::find(scopes.begin(), scopes.end(), o.scope) != scopes.end(), "verify: unknown --scope " + o.scope);
  require(o.verify_max_n >= 1, "verify: --max-n must be >= 1");
  require(o.bound >= 0, "verify: --bound must be >= 0");

  SuiteLimits limits;
  limits.max_n = o.verify_max_n;
  limits.bound = o.bound;
  limits.seed = o.seed;

  std::vector<SuiteRow> rows;
  auto append = [&](std::vector<SuiteRow> more) { rows.insert(rows.end(), more.begin(), more.end()); };
  if (o.scope == "lemma-arrangement" || o.scope == "all") append(arrangement_suite(limits));
  if (o.scope == "lemma-toric" || o.scope == "all") append(toric_suite(limits));
  if (o.scope == "degeneration" || o.scope == "all") append(degeneration_suite(limits));

  const auto failed = static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const SuiteRow& r) { return !r.pass; }));
  if (o.format == "json") {
    emit_json(out, Json{{"scope", o.scope},
                        {"max_n", o.verify_max_n},
                        {"bound", o.bound},
                        {"rows", rows_to_json(rows)},
                        {"passed", rows.size() - failed},
                        {"failed", failed}});
  } else {
    std::size_t suite_w = 0, name_w = 0;
    for (const auto& r : rows) {
      suite_w = std::max(suite_w, r.suite.size());
      name_w = std::max(name_w, r.name.size());
    }
    for (const auto& r : rows) {
      out << std::left << std::setw(static_cast<int>(suite_w)) << r.suite << "  " << std::setw(static_cast<int>(name_w))
          << r.name << "  " << (r.pass ? "PASS" : "FAIL") << "  " << r.detail << "\n";
    }
    out << (rows.size() - failed) << " passed, " << failed << " failed\n";
  }
  for (const auto& r : rows) {
    if (!r.pass) err << "FAILED: " << r.suite << " " << r.name << ": " << r.detail << "\n";
  }
  return failed == 0 ? kExitOk : kExitVerificationFailed;
}

int cmd_report(const Options& o, std::ostream& out) {
  require(o.n >= 1, "report: --n must be >= 1");
  require(o.n <= o.max_n, "report: --n exceeds --max-n " + std::to_string(o.max_n));
  require((o.d > 0) != (o.k > 0), "report: give exactly one of --d or --k");
  degeneration::VerificationReport report;
  if (o.d > 0) {
    require(o.n >= 2, "report: degeneration reports need --n >= 2");
    require(o.d <= o.n + 1, "report: --d must satisfy 1 <= d <= n+1");
    report = degeneration::full_degeneration_report({o.n, o.d}, o.bound);
  } else {
    require(o.k <= o.n, "report: --k must satisfy 1 <= k <= n");
    report = degeneration::resolve_local_model({o.n, o.k}, o.bound);
  }
  if (o.format == "json") {
    emit_json(out, Json(report));
  } else {
    out << degeneration::render_text(report);
  }
  return report.passed() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grothendieck-ring classes, toric resolutions and degeneration checks", "degenkit"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* cls = app.add_subcommand("class", "Class of an SNC arrangement of r hyperplanes in P^{n+1}");
  cls->add_option("--r", o.r, "Number of hyperplanes")->required();
  cls->add_option("--n", o.n, "Dimension of the hyperplanes")->required();
  cls->add_option("--max-n", o.max_n, "Largest accepted n")->capture_default_str();
  cls->add_option("--max-r", o.max_r, "Largest accepted r")->capture_default_str();
  add_format(cls);

  auto* dual = app.add_subcommand("dual", "Dual cone of the model cone or of a cone given by rays");
  dual->add_option("--n", o.n, "Model cone of t*y = z_1...z_n");
  dual->add_option("--rays", o.rays, "Rays as a JSON array of integer arrays");
  dual->add_option("--max-n", o.max_n, "Largest accepted n")->capture_default_str();
  add_format(dual);

  auto* resolve = app.add_subcommand("resolve", "Toric resolution of t*y = z_1...z_n");
  resolve->add_option("--n", o.n, "Number of z variables")->required();
  resolve->add_option("--max-n", o.max_n, "Largest accepted n")->capture_default_str();
  add_format(resolve);

  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  verify->add_option("--scope", o.scope, "lemma-arrangement | lemma-toric | degeneration | all")
      ->capture_default_str();
  verify->add_option("--max-n", o.verify_max_n, "Largest n swept")->capture_default_str();
  verify->add_option("--bound", o.bound, "Lattice-point bound for partition sweeps")->capture_default_str();
  verify->add_option("--seed", o.seed, "Seed for random cones")->capture_default_str();
  add_format(verify);

  auto* report = app.add_subcommand("report", "Verification report of a degeneration (--d) or local model (--k)");
  report->add_option("--n", o.n, "Fiber dimension")->required();
  report->add_option("--d", o.d, "Degree of the hypersurfaces");
  report->add_option("--k", o.k, "Stratum depth of a local model");
  report->add_option("--bound", o.bound, "Lattice-point bound for partition sweeps")->capture_default_str();
  report->add_option("--max-n", o.max_n, "Largest accepted n")->capture_default_str();
  add_format(report);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cls->parsed()) return cmd_class(o, out);
    if (dual->parsed()) return cmd_dual(o, out);
    if (resolve->parsed()) return cmd_resolve(o, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (report->parsed()) return cmd_report(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    err << "limit exceeded: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitUsage;
}

}  // namespace degenkit::cli
