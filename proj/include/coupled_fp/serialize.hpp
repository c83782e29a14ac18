#pragma once

// JSON and CSV encodings of every report. Real elements and distances are
// written as JSON numbers, finite elements by label, exact rationals as
// "p/q" strings. Every top-level document carries "schema_version".

#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include <json.hpp>

#include "coupled_fp/conditions.hpp"
#include "coupled_fp/problems.hpp"
#include "coupled_fp/solver.hpp"
#include "coupled_fp/uniqueness.hpp"

namespace coupled_fp {

using nlohmann::json;

inline json scalar_json(double v) { return v; }
inline json scalar_json(const Rational& v) { return format_rational(v); }

template <class E, class D>
json element_json(const SpaceModel<E, D>& space, const E& e) {
  if constexpr (std::is_floating_point_v<E>) {
    return e;
  } else {
    return space.label ? json(space.label(e)) : json(e);
  }
}

template <class E, class D>
json pair_json(const SpaceModel<E, D>& space, const PairPoint<E>& z) {
  return json::array({element_json(space, z.first), element_json(space, z.second)});
}

template <class E, class D>
json witness_json(const SpaceModel<E, D>& space, const Witness<E, D>& w) {
  json j;
  j["x"] = element_json(space, w.quad.x());
  j["y"] = element_json(space, w.quad.y());
  j["u"] = element_json(space, w.quad.u());
  j["v"] = element_json(space, w.quad.v());
  if (w.lhs) j["lhs"] = scalar_json(*w.lhs);
  if (w.rhs) j["rhs"] = scalar_json(*w.rhs);
  if (w.epsilon) j["epsilon"] = scalar_json(*w.epsilon);
  if (w.delta) j["delta"] = scalar_json(*w.delta);
  json images = json::array();
  for (const E& e : w.images) images.push_back(element_json(space, e));
  j["images"] = images;
  return j;
}

template <class E, class D>
json report_json(const SpaceModel<E, D>& space, const ConditionReport<E, D>& r) {
  json j;
  j["condition"] = to_string(r.condition);
  j["verdict"] = to_string(r.verdict);
  j["basis"] = to_string(r.basis);
  j["falsification_only"] = true;
  j["samples_used"] = r.samples_used;
  j["comparable_pairs_used"] = r.comparable_pairs_used;
  if (r.k) j["k"] = scalar_json(*r.k);
  j["witness"] = r.witness ? witness_json(space, *r.witness) : json(nullptr);
  json grid = json::array();
  for (const auto& e : r.epsilon_grid) {
    json g;
    g["epsilon"] = scalar_json(e.epsilon);
    g["delta"] = scalar_json(e.delta);
    g["band_samples"] = e.band_samples;
    g["verdict"] = to_string(e.verdict);
    g["witness"] = e.witness ? witness_json(space, *e.witness) : json(nullptr);
    grid.push_back(g);
  }
  j["epsilon_grid"] = grid;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

template <class E, class D>
json trace_summary_json(const SpaceModel<E, D>& space, const IterationTrace<E, D>& t) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["termination"] = to_string(t.termination);
  j["iterations"] = t.iterations;
  j["residual"] = scalar_json(t.residual);
  j["error_bound"] = t.error_bound ? scalar_json(*t.error_bound) : json(nullptr);
  j["endpoint"] = pair_json(space, t.endpoint());
  j["start"] = pair_json(space, t.iterates.front());
  j["start_direction"] = to_string(t.start.direction);
  j["start_admissible"] = t.start.admissible;
  j["eta_last"] = t.eta.empty() ? json(nullptr) : scalar_json(t.eta.back());
  return j;
}

/// Summary plus one row per stored iterate.
template <class E, class D>
json trace_json(const SpaceModel<E, D>& space, const IterationTrace<E, D>& t) {
  json j = trace_summary_json(space, t);
  json rows = json::array();
  for (std::size_t i = 0; i < t.iterates.size(); ++i) {
    const std::size_t n = t.iterate_index[i];
    json row;
    row["n"] = n;
    row["x"] = element_json(space, t.iterates[i].first);
    row["y"] = element_json(space, t.iterates[i].second);
    row["eta"] = n == 0 ? json(nullptr) : scalar_json(t.eta[n - 1]);
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

template <class E, class D>
std::string csv_cell(const SpaceModel<E, D>& space, const E& e) {
  if constexpr (std::is_floating_point_v<E>) {
    return format_double(e);
  } else {
    return space.label ? space.label(e) : std::to_string(e);
  }
}

/// Columns n, x_n, y_n, eta_n; eta_0 is empty.
template <class E, class D>
std::string trace_csv(const SpaceModel<E, D>& space, const IterationTrace<E, D>& t) {
  std::ostringstream os;
  os << "n,x_n,y_n,eta_n\n";
  for (std::size_t i = 0; i < t.iterates.size(); ++i) {
    const std::size_t n = t.iterate_index[i];
    os << n << ',' << csv_cell(space, t.iterates[i].first) << ',' << csv_cell(space, t.iterates[i].second) << ',';
    if (n > 0) os << format_scalar(t.eta[n - 1]);
    os << '\n';
  }
  return os.str();
}

template <class D>
json delta_curve_json(const std::vector<DeltaEstimate<D>>& curve) {
  json j;
  j["schema_version"] = kSchemaVersion;
  json rows = json::array();
  for (const auto& e : curve) {
    rows.push_back({{"epsilon", scalar_json(e.epsilon)}, {"delta_max", scalar_json(e.delta_max)}, {"probes", e.probes}});
  }
  j["curve"] = rows;
  return j;
}

template <class D>
std::string delta_curve_csv(const std::vector<DeltaEstimate<D>>& curve) {
  std::ostringstream os;
  os << "epsilon,delta_max\n";
  for (const auto& e : curve) os << format_scalar(e.epsilon) << ',' << format_scalar(e.delta_max) << '\n';
  return os.str();
}

template <class E, class D>
json uniqueness_json(const SpaceModel<E, D>& space, const UniquenessReport<E, D>& r) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["tol"] = scalar_json(r.tol);
  json starts = json::array();
  for (const auto& s : r.starts) starts.push_back(pair_json(space, s));
  j["starts"] = starts;
  json endpoints = json::array();
  for (std::size_t i = 0; i < r.endpoints.size(); ++i) {
    endpoints.push_back({{"start_index", r.endpoint_start[i]},
                         {"endpoint", pair_json(space, r.endpoints[i])},
                         {"diagonal_gap", r.diagonal[i].gap},
                         {"on_diagonal", r.diagonal[i].on_diagonal},
                         {"fixed_gap", r.diagonal[i].fixed_gap}});
  }
  j["endpoints"] = endpoints;
  json failed = json::array();
  for (std::size_t i = 0; i < r.not_converged.size(); ++i)
    failed.push_back({{"start_index", r.not_converged[i]}, {"reason", r.failures[i]}});
  j["not_converged"] = failed;
  j["max_pairwise_d2"] = scalar_json(r.max_pairwise_d2);
  j["consistent_with_uniqueness"] = r.consistent_with_uniqueness();
  if (r.comparability) {
    j["comparability_rate"] = r.comparability->rate;
    j["comparability_pairs"] = r.comparability->pairs;
    j["comparability_basis"] = to_string(r.comparability->basis);
  } else {
    j["comparability_rate"] = nullptr;
  }
  return j;
}

template <class E>
json audit_json(const AuditReport<E>& r, const std::function<json(const E&)>& encode) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["space"] = r.space;
  j["basis"] = r.exhaustive ? "exhaustive" : "sampled";
  j["all_passed"] = r.all_passed();
  json axioms = json::array();
  for (const auto& a : r.axioms) {
    json w = json::array();
    for (const E& e : a.witness) w.push_back(encode(e));
    axioms.push_back({{"axiom", a.name}, {"passed", a.passed}, {"checked", a.checked}, {"witness", w}, {"detail", a.detail}});
  }
  j["axioms"] = axioms;
  return j;
}

}  // namespace coupled_fp
