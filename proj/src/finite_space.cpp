#include "coupled_fp/finite_space.hpp"

#include <memory>
#include <numeric>

namespace coupled_fp {

FiniteSpace make_finite_space(FiniteSpaceData data, std::string description) {
  const std::size_t n = data.size();
  if (n == 0) throw InputError("finite space needs at least one element");
  if (data.distance.size() != n || data.leq.size() != n)
    throw InputError("finite space: matrices must have one row per element");
  for (std::size_t i = 0; i < n; ++i) {
    if (data.distance[i].size() != n || data.leq[i].size() != n)
      throw InputError("finite space: row " + std::to_string(i) + " is not of length " +
                       std::to_string(n));
  }

  auto shared = std::make_shared<const FiniteSpaceData>(std::move(data));
  FiniteSpace space;
  space.description = std::move(description);
  space.distance = [shared](Index a, Index b) { return shared->distance.at(a).at(b); };
  space.leq = [shared](Index a, Index b) {
    if (shared->leq.at(a).at(b)) return Ordering::less_equal;
    if (shared->leq.at(b).at(a)) return Ordering::greater;
    return Ordering::incomparable;
  };
  space.sampler = [n](std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Index> pick(0, n - 1);
    std::vector<Index> out(count);
    for (auto& x : out) x = pick(rng);
    return out;
  };
  std::vector<Index> all(n);
  std::iota(all.begin(), all.end(), Index{0});
  space.elements = std::move(all);
  space.contains = [n](Index i) { return i < n; };
  space.label = [shared](Index i) { return shared->labels.at(i); };
  return space;
}

Rational json_rational(const nlohmann::json& value, const std::string& where) {
  try {
    if (value.is_number_integer()) {
      return Rational(value.get<std::int64_t>());
    }
    if (value.is_number_unsigned()) {
      return Rational(value.get<std::uint64_t>());
    }
    if (value.is_number_float()) {
      return to_rational(value.get<double>());
    }
    if (value.is_string()) {
      return parse_rational(value.get<std::string>());
    }
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": expected a number or a \"p/q\" string");
}

FiniteSpaceData parse_finite_space(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InputError("finite space: top level must be a JSON object");
  for (const char* key : {"elements", "distance", "leq"}) {
    if (!doc.contains(key)) throw InputError(std::string("finite space: missing \"") + key + "\"");
  }
  const auto& elements = doc.at("elements");
  if (!elements.is_array() || elements.empty())
    throw InputError("finite space: \"elements\" must be a non-empty array");

  FiniteSpaceData data;
  for (const auto& e : elements) data.labels.push_back(e.is_string() ? e.get<std::string>() : e.dump());
  const std::size_t n = data.size();

  auto square = [n](const nlohmann::json& m, const char* key) {
    if (!m.is_array() || m.size() != n)
      throw InputError(std::string("finite space: \"") + key + "\" must have " + std::to_string(n) +
                       " rows");
    for (std::size_t i = 0; i < n; ++i) {
      if (!m[i].is_array() || m[i].size() != n)
        throw InputError(std::string("finite space: ") + key + "[" + std::to_string(i) +
                         "] must have " + std::to_string(n) + " entries");
    }
  };
  square(doc.at("distance"), "distance");
  square(doc.at("leq"), "leq");

  data.distance.assign(n, std::vector<Rational>(n));
  data.leq.assign(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::string at = "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
      data.distance[i][j] = json_rational(doc["distance"][i][j], "distance" + at);
      const auto& flag = doc["leq"][i][j];
      if (!flag.is_number_integer() || (flag.get<int>() != 0 && flag.get<int>() != 1))
        throw InputError("leq" + at + ": expected 0 or 1");
      data.leq[i][j] = flag.get<int>() == 1;
    }
  }
  return data;
}

}  // namespace coupled_fp
