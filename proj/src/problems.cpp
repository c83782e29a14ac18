#include "coupled_fp/problems.hpp"

#include <cmath>
#include <fstream>
#include <regex>
#include <sstream>

namespace coupled_fp {

namespace {

RealProblem real_problem(std::string name, std::function<double(double, double)> f, double radius) {
  RealProblem p;
  p.name = std::move(name);
  p.space = std::make_shared<const SpaceModel<double, double>>(real_line(radius));
  p.op.space = p.space;
  p.op.apply = [f = std::move(f)](const double& x, const double& y) { return f(x, y); };
  p.bound_search = coordinatewise_bound(p.space);
  return p;
}

double parse_number(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used]))) ++used;
    if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
    return v;
  } catch (const std::logic_error&) {
    throw InputError(what + ": not a number: '" + text + "'");
  }
}

std::string registry_listing() {
  std::ostringstream os;
  os << "known problems:";
  for (const auto& n : registry_names()) os << "\n  " << n;
  return os.str();
}

Index element_index(const nlohmann::json& v, std::size_t n, const std::string& where) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || static_cast<std::size_t>(v.get<std::int64_t>()) >= n)
    throw InputError(where + ": expected an element index in [0, " + std::to_string(n) + ")");
  return static_cast<Index>(v.get<std::int64_t>());
}

PairPoint<Index> index_pair(const nlohmann::json& v, std::size_t n, const std::string& where) {
  if (!v.is_array() || v.size() != 2) throw InputError(where + ": expected [i, j]");
  return {element_index(v[0], n, where + "[0]"), element_index(v[1], n, where + "[1]")};
}

}  // namespace

RealProblem samet_example(double radius) {
  auto p = real_problem("samet_example", [](double x, double y) { return (x - 3 * y) / 5; }, radius);
  p.op.description = "F(x,y) = (x - 3y)/5";
  p.op.lipschitz = std::pair{0.2, 0.6};
  p.default_start = {-3.0, 3.0};
  p.expected_fixed_point = PairPoint<double>{0.0, 0.0};
  p.delta_rule = [](const double& eps) { return eps / 8; };
  p.delta_description = "eps/8";
  return p;
}

RealProblem linear_problem(double a, double b, double c, double radius) {
  if (!(a >= 0) || !(b >= 0) || !(c > 0)) throw InputError("linear(a,b,c) needs a >= 0, b >= 0, c > 0");
  const std::string name = "linear(" + format_double(a) + "," + format_double(b) + "," + format_double(c) + ")";
  auto p = real_problem(name, [a, b, c](double x, double y) { return (a * x - b * y) / c; }, radius);
  p.op.description = "F(x,y) = (" + format_double(a) + "x - " + format_double(b) + "y)/" + format_double(c);
  p.op.lipschitz = std::pair{a / c, b / c};

  if (a + b < c) {
    const double k = (a + b) / c;
    if (k == 0) {
      p.delta_rule = [](const double& eps) { return eps; };
      p.delta_description = "eps";
    } else {
      p.delta_rule = [k](const double& eps) { return *delta_from_k(k, eps); };
      p.delta_description = "(1/k - 1)*eps with k = (a+b)/c = " + format_double(k);
    }
  } else {
    p.delta_rule = [](const double& eps) { return eps / 8; };
    p.delta_description = "eps/8";
  }

  // The iteration splits into s = x + y scaled by (a−b)/c and d = x − y scaled
  // by (a+b)/c, so (0,0) is the only coupled fixed point unless one factor is 1.
  if (c != a + b && c != a - b) p.expected_fixed_point = PairPoint<double>{0.0, 0.0};
  p.default_start = {-3.0, 3.0};
  if (!check_start(p.op, p.default_start).admissible) p.default_start = {0.0, 0.0};
  return p;
}

RealProblem arctan_example(double radius) {
  auto p = real_problem("arctan_example",
                        [](double x, double y) { return 1.0 + (std::atan(x) - std::atan(y)) / 4; }, radius);
  p.op.description = "F(x,y) = 1 + (atan x - atan y)/4";
  p.op.lipschitz = std::pair{0.25, 0.25};
  p.default_start = {-3.0, 3.0};
  p.expected_fixed_point = PairPoint<double>{1.0, 1.0};
  p.delta_rule = [](const double& eps) { return eps; };
  p.delta_description = "eps";
  return p;
}

FiniteProblem finite_problem_from_json(const nlohmann::json& doc, std::string name) {
  if (!doc.is_object()) throw InputError(name + ": top level must be a JSON object");
  if (!doc.contains("schema_version")) throw InputError(name + ": missing \"schema_version\"");
  if (doc["schema_version"] != kSchemaVersion)
    throw InputError(name + ": unsupported schema_version " + doc["schema_version"].dump() + " (expected " +
                     std::to_string(kSchemaVersion) + ")");

  auto data = parse_finite_space(doc);
  const std::size_t n = data.size();
  if (!doc.contains("F")) throw InputError(name + ": missing \"F\" table");
  const auto& table = doc["F"];
  if (!table.is_array() || table.size() != n) throw InputError(name + ": \"F\" must have " + std::to_string(n) + " rows");
  std::vector<std::vector<Index>> f(n, std::vector<Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!table[i].is_array() || table[i].size() != n)
      throw InputError(name + ": F[" + std::to_string(i) + "] must have " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j)
      f[i][j] = element_index(table[i][j], n, "F[" + std::to_string(i) + "][" + std::to_string(j) + "]");
  }

  FiniteProblem p;
  p.name = name;
  const std::string description = doc.value("description", "finite space from " + name);
  p.space = std::make_shared<const FiniteSpace>(make_finite_space(std::move(data), description));
  p.op.space = p.space;
  p.op.description = "tabulated F";
  p.op.apply = [f = std::move(f)](const Index& x, const Index& y) { return f[x][y]; };
  if (doc.contains("lipschitz")) {
    const auto& l = doc["lipschitz"];
    if (!l.is_array() || l.size() != 2) throw InputError(name + ": \"lipschitz\" must be [a, b]");
    p.op.lipschitz = std::pair{json_rational(l[0], "lipschitz[0]"), json_rational(l[1], "lipschitz[1]")};
  }
  if (doc.contains("expected_fixed_point"))
    p.expected_fixed_point = index_pair(doc["expected_fixed_point"], n, "expected_fixed_point");

  Rational ratio(1, 8);
  p.delta_description = "eps/8";
  if (doc.contains("delta_over_epsilon")) {
    ratio = json_rational(doc["delta_over_epsilon"], "delta_over_epsilon");
    if (ratio <= 0) throw InputError(name + ": delta_over_epsilon must be positive");
    p.delta_description = format_rational(ratio) + "*eps";
  }
  p.delta_rule = [ratio](const Rational& eps) { return Rational(eps * ratio); };
  p.bound_search = exhaustive_bound(p.space);

  if (doc.contains("start")) {
    p.default_start = index_pair(doc["start"], n, "start");
  } else {
    p.default_start = {0, 0};
    bool found = false;
    for (Index a = 0; a < n && !found; ++a)
      for (Index b = 0; b < n && !found; ++b)
        if (check_start(p.op, PairPoint<Index>{a, b}).admissible) {
          p.default_start = {a, b};
          found = true;
        }
  }
  return p;
}

FiniteProblem load_finite(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open finite problem file '" + path.string() + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path.string() + ": malformed JSON: " + e.what());
  }
  return finite_problem_from_json(doc, path.string());
}

std::vector<std::string> registry_names() {
  return {"samet_example", "arctan_example", "linear(a,b,c)", "finite_poset(<file.json>)", "<file.json>"};
}

AnyProblem builtin(const std::string& name) {
  if (name == "samet_example") return samet_example();
  if (name == "arctan_example") return arctan_example();

  static const std::regex linear_re(R"(^\s*linear\s*\(([^,]+),([^,]+),([^)]+)\)\s*$)");
  static const std::regex finite_re(R"(^\s*finite_poset\s*\((.+)\)\s*$)");
  std::smatch m;
  if (std::regex_match(name, m, linear_re)) {
    return linear_problem(parse_number(m[1], "linear a"), parse_number(m[2], "linear b"),
                          parse_number(m[3], "linear c"));
  }
  if (std::regex_match(name, m, finite_re)) return load_finite(m[1].str());
  if (name.size() > 5 && name.ends_with(".json")) return load_finite(name);

  throw InputError("unknown problem '" + name + "'\n" + registry_listing());
}

}  // namespace coupled_fp
