#include "scenopt/config.hpp"

#include <fstream>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "scenopt/bounds.hpp"
#include "scenopt/builtin.hpp"

namespace scenopt {

namespace {

using nlohmann::json;

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ConfigError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Vector vector_of(const json& j, const char* what) {
  if (!j.is_array()) throw ConfigError(std::string(what) + " must be an array of numbers");
  Vector v;
  for (const auto& e : j) {
    if (!e.is_number()) throw ConfigError(std::string(what) + " must be an array of numbers");
    v.push_back(e.get<double>());
  }
  return v;
}

std::string type_of(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  return require(j, "type").get<std::string>();
}

std::optional<std::vector<Interval>> parse_box(const json& j, std::size_t n) {
  std::vector<Interval> box;
  if (j.is_array()) {
    for (const auto& e : j) {
      const Vector pair = vector_of(e, "box entry");
      if (pair.size() != 2) throw ConfigError("box entries must be [lo, hi]");
      box.push_back({pair[0], pair[1]});
    }
  } else {
    const Vector lo = vector_of(require(j, "lower"), "box.lower");
    const Vector hi = vector_of(require(j, "upper"), "box.upper");
    if (lo.size() != hi.size()) throw ConfigError("box.lower and box.upper differ in length");
    for (std::size_t i = 0; i < lo.size(); ++i) box.push_back({lo[i], hi[i]});
  }
  if (box.size() != n) throw ConfigError("box must have n entries");
  return box;
}

Sampler parse_sampler(const json& j) {
  const std::string type = type_of(j);
  if (type == "uniform_interval")
    return uniform_interval(require(j, "lo").get<double>(), require(j, "hi").get<double>());
  throw ConfigError("unknown sampler \"" + type + "\"");
}

UncertainProgram parse_problem_json(const json& j) {
  const auto n = require(j, "n").get<std::size_t>();
  Vector cost = vector_of(require(j, "c"), "c");
  if (cost.size() != n) throw ConfigError("c must have n entries");

  std::vector<HalfSpace> rows;
  std::optional<std::vector<Interval>> box;
  if (j.contains("polytope")) {
    const json& p = j.at("polytope");
    if (p.contains("rows")) {
      for (const auto& r : p.at("rows")) {
        rows.push_back({vector_of(require(r, "a"), "polytope row a"), require(r, "b").get<double>()});
      }
    }
    if (p.contains("box")) box = parse_box(p.at("box"), n);
  }

  const json& cj = require(j, "constraint");
  const std::string kind = type_of(cj);
  AffineConstraintOracle constraint;
  std::optional<Sampler> sampler;
  if (kind == "example1") {
    if (n != 2) throw ConfigError("constraint example1 needs n = 2");
    constraint = example1::constraint();
    sampler = example1::sampler();
  } else if (kind == "affine_table") {
    std::vector<AffineKnot> knots;
    for (const auto& k : require(cj, "table")) {
      knots.push_back({require(k, "d").get<double>(), vector_of(require(k, "a"), "table a"),
                       require(k, "b").get<double>()});
    }
    constraint = affine_table(std::move(knots));
  } else {
    throw ConfigError("unknown constraint \"" + kind + "\"");
  }
  if (j.contains("sampler")) sampler = parse_sampler(j.at("sampler"));
  if (!sampler) throw ConfigError("missing field \"sampler\"");

  try {
    Polytope domain = Polytope::make(n, std::move(rows), std::move(box));
    return UncertainProgram::make(std::move(cost), std::move(domain), std::move(constraint),
                                  std::move(*sampler));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

json parse_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::optional<Ulb> parse_ulb(const json& j) {
  if (j.is_null()) return std::nullopt;
  try {
    return build_ulb(require(j, "Ld").get<double>(), require(j, "kappa").get<double>(),
                     require(j, "p").get<double>());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

std::optional<SlaterCertificate> parse_slater(const json& j, const UncertainProgram& program) {
  if (j.is_null()) return std::nullopt;
  if (j.value("minmax", false)) return minmax_slater();
  const Vector x0 = vector_of(require(j, "x0"), "slater x0");
  try {
    if (j.contains("sup")) return slater_constant(program, x0, j.at("sup").get<double>());
    return slater_constant(program, x0);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

}  // namespace

UncertainProgram parse_problem(std::string_view json_text) {
  try {
    return parse_problem_json(parse_text(json_text));
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid problem file: ") + e.what());
  }
}

UncertainProgram load_problem(const std::filesystem::path& path) { return parse_problem(read_file(path)); }

SubprogramFamily parse_family(std::string_view json_text) {
  try {
    const json j = parse_text(json_text);
    const json& members_json = require(j, "members");
    const Vector eps = vector_of(require(j, "eps_k"), "eps_k");
    if (!members_json.is_array() || members_json.empty()) throw ConfigError("members must be a nonempty array");
    if (eps.size() != members_json.size()) throw ConfigError("eps_k must have one entry per member");

    std::vector<SubprogramMember> members;
    for (std::size_t k = 0; k < members_json.size(); ++k) {
      SubprogramMember m{parse_problem_json(members_json[k]), eps[k], std::nullopt, std::nullopt};
      if (j.contains("ulb")) {
        const json& u = j.at("ulb");
        m.ulb = parse_ulb(u.is_array() ? u.at(k) : u);
      }
      if (j.contains("slater")) {
        const json& s = j.at("slater");
        m.slater = parse_slater(s.is_array() ? s.at(k) : s, m.program);
      }
      members.push_back(std::move(m));
    }
    Sampler shared = j.contains("sampler") ? parse_sampler(j.at("sampler")) : members.front().program.sampler;
    try {
      return SubprogramFamily::make(std::move(members), std::move(shared));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid family file: ") + e.what());
  }
}

SubprogramFamily load_family(const std::filesystem::path& path) { return parse_family(read_file(path)); }

}  // namespace scenopt
