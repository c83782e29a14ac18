#pragma once

#include <functional>
#include <memory>

#include "coupled_fp/problems.hpp"
#include "oracle.hpp"

namespace fixtures {

using namespace coupled_fp;

inline CoupledOperator<double, double> real_op(std::function<double(double, double)> f, double radius = 10.0) {
  CoupledOperator<double, double> op;
  op.space = std::make_shared<const SpaceModel<double, double>>(real_line(radius));
  op.apply = [f = std::move(f)](const double& x, const double& y) { return f(x, y); };
  return op;
}

inline FiniteProblem finite(const oracle::Instance& in, const oracle::Q& ratio = oracle::Q(1, 8)) {
  return finite_problem_from_json(oracle::to_json(in, ratio), "generated");
}

/// Two points at distance 1, either a chain or an antichain.
inline oracle::Instance two_points(bool chain, std::vector<std::vector<int>> F) {
  oracle::Instance in;
  in.n = 2;
  in.d = {{0, 1}, {1, 0}};
  in.leq = {{true, chain}, {false, true}};
  in.F = std::move(F);
  return in;
}

inline oracle::Instance antichain(int n, std::vector<std::vector<int>> F) {
  oracle::Instance in;
  in.n = n;
  in.d.assign(n, std::vector<oracle::Q>(n, oracle::Q(1)));
  in.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    in.d[i][i] = 0;
    in.leq[i][i] = true;
  }
  in.F = std::move(F);
  return in;
}

inline std::vector<Rational> rationals(std::initializer_list<Rational> values) { return values; }

}  // namespace fixtures
