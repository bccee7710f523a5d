#include "degenkit/serialization.hpp"

#include <limits>
#include <stdexcept>

namespace degenkit {
namespace grothring {

void to_json(Json& j, const GrothClass& c) {
  static const BigInt kMin = std::numeric_limits<std::int64_t>::min();
  static const BigInt kMax = std::numeric_limits<std::int64_t>::max();
  Json coeffs = Json::array();
  for (const auto& x : c.coeffs()) {
    if (x >= kMin && x <= kMax) {
      coeffs.push_back(x.convert_to<std::int64_t>());
    } else {
      coeffs.push_back(x.str());
    }
  }
  j = Json{{"coeffs", std::move(coeffs)}};
}

void from_json(const Json& j, GrothClass& c) {
  const Json& coeffs = j.at("coeffs");
  if (!coeffs.is_array()) throw std::invalid_argument("GrothClass JSON: \"coeffs\" must be an array");
  std::vector<BigInt> out;
  out.reserve(coeffs.size());
  for (const auto& x : coeffs) {
    if (x.is_number_unsigned()) {
      out.emplace_back(x.get<std::uint64_t>());
    } else if (x.is_number_integer()) {
      out.emplace_back(x.get<std::int64_t>());
    } else if (x.is_string()) {
      const auto& s = x.get_ref<const std::string&>();
      const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
      if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) {
        throw std::invalid_argument("GrothClass JSON: bad integer string \"" + s + "\"");
      }
      out.emplace_back(s);
    } else {
      throw std::invalid_argument("GrothClass JSON: coefficients must be integers");
    }
  }
  c = GrothClass(std::move(out));
}

}  // namespace grothring

namespace toriclat {
namespace {

std::vector<std::size_t> indices_from_json(const Json& j) {
  std::vector<std::size_t> out;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<std::int64_t>() < 0) {
      throw std::invalid_argument("JSON: indices must be nonnegative integers");
    }
    out.push_back(x.get<std::size_t>());
  }
  return out;
}

std::size_t rank_from_json(const Json& j) {
  const Json& r = j.at("rank");
  if (!r.is_number_integer() || r.get<std::int64_t>() < 1) throw std::invalid_argument("JSON: rank must be positive");
  return r.get<std::size_t>();
}

}  // namespace

void to_json(Json& j, const LatticeVector& v) {
  j = Json::array();
  for (auto x : v.entries()) j.push_back(x);
}

void from_json(const Json& j, LatticeVector& v) {
  if (!j.is_array()) throw std::invalid_argument("LatticeVector JSON: expected an array");
  std::vector<std::int64_t> entries;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw std::invalid_argument("LatticeVector JSON: entries must be integers");
    entries.push_back(x.get<std::int64_t>());
  }
  v = LatticeVector(std::move(entries));
}

void to_json(Json& j, const Cone& c) { j = Json{{"rank", c.rank()}, {"rays", c.rays()}}; }

Cone cone_from_json(const Json& j) {
  return Cone(rank_from_json(j), j.at("rays").get<std::vector<LatticeVector>>());
}

void to_json(Json& j, const Fan& f) {
  j = Json{{"rank", f.rank()}, {"rays", f.rays()}, {"max_cones", f.cone_ray_indices()}};
}

Fan fan_from_json(const Json& j) {
  const std::size_t rank = rank_from_json(j);
  const auto rays = j.at("rays").get<std::vector<LatticeVector>>();
  std::vector<Cone> cones;
  for (const auto& idx_json : j.at("max_cones")) {
    std::vector<LatticeVector> gens;
    for (auto i : indices_from_json(idx_json)) {
      if (i >= rays.size()) throw std::invalid_argument("Fan JSON: ray index out of range");
      gens.push_back(rays[i]);
    }
    cones.emplace_back(rank, std::move(gens));
  }
  return Fan(rank, std::move(cones));
}

void to_json(Json& j, const ChartPresentation& c) {
  Json coords = Json::array();
  for (const auto& coord : c.coordinates()) coords.push_back(Json{{"name", coord.name}, {"monomial", coord.monomial}});
  Json relation = nullptr;
  if (c.relation()) relation = Json{{"left", c.relation()->left}, {"right", c.relation()->right}};
  j = Json{{"coords", std::move(coords)}, {"relation", std::move(relation)}};
}

ChartPresentation chart_from_json(const Json& j) {
  std::vector<ChartCoordinate> coords;
  for (const auto& c : j.at("coords")) {
    coords.push_back({c.at("name").get<std::string>(), c.at("monomial").get<LatticeVector>()});
  }
  std::optional<BinomialRelation> relation;
  if (j.contains("relation") && !j.at("relation").is_null()) {
    const Json& r = j.at("relation");
    relation = BinomialRelation{indices_from_json(r.at("left")), indices_from_json(r.at("right"))};
  }
  return ChartPresentation(std::move(coords), std::move(relation));
}

void to_json(Json& j, const SemistableReport& r) {
  j = Json{{"reduced", r.reduced}, {"smooth", r.smooth}, {"snc", r.snc}};
}

void from_json(const Json& j, SemistableReport& r) {
  r.reduced = j.at("reduced").get<bool>();
  r.smooth = j.at("smooth").get<bool>();
  r.snc = j.at("snc").get<bool>();
}

}  // namespace toriclat

namespace degeneration {

void to_json(Json& j, const ModelSpec& m) {
  if (const auto* local = std::get_if<LocalModelSpec>(&m)) {
    j = Json{{"kind", "local"}, {"n", local->n}, {"k", local->k}};
  } else {
    const auto& deg = std::get<DegenerationSpec>(m);
    j = Json{{"kind", "degeneration"}, {"n", deg.n}, {"d", deg.d}};
  }
}

void from_json(const Json& j, ModelSpec& m) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "local") {
    m = LocalModelSpec{j.at("n").get<int>(), j.at("k").get<int>()};
  } else if (kind == "degeneration") {
    m = DegenerationSpec{j.at("n").get<int>(), j.at("d").get<int>()};
  } else {
    throw std::invalid_argument("model JSON: unknown kind \"" + kind + "\"");
  }
}

void to_json(Json& j, const Check& c) { j = Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}}; }

void from_json(const Json& j, Check& c) {
  c.name = j.at("name").get<std::string>();
  c.pass = j.at("pass").get<bool>();
  c.detail = j.at("detail").get<std::string>();
}

void to_json(Json& j, const VerificationReport& r) {
  j = Json{{"model", r.model},
           {"checks", r.checks},
           {"fiber_class_before", r.fiber_class_before},
           {"fiber_class_after", r.fiber_class_after},
           {"mod_L_invariant", r.mod_L_invariant}};
  if (!r.sub_reports.empty()) j["sub_reports"] = r.sub_reports;
}

void from_json(const Json& j, VerificationReport& r) {
  r.model = j.at("model").get<ModelSpec>();
  r.checks = j.at("checks").get<std::vector<Check>>();
  r.fiber_class_before = j.at("fiber_class_before").get<GrothClass>();
  r.fiber_class_after = j.at("fiber_class_after").get<GrothClass>();
  r.mod_L_invariant = j.at("mod_L_invariant").get<bool>();
  r.sub_reports.clear();
  if (j.contains("sub_reports")) r.sub_reports = j.at("sub_reports").get<std::vector<VerificationReport>>();
}

}  // namespace degeneration
}  // namespace degenkit
