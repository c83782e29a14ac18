#include "coupled_fp/ordered_space.hpp"

namespace coupled_fp {

SpaceModel<double, double> real_line(double radius) {
  if (!(radius > 0)) throw InputError("sampling radius must be positive");
  SpaceModel<double, double> space;
  space.distance = [](double a, double b) { return std::abs(a - b); };
  space.leq = [](double a, double b) { return a <= b ? Ordering::less_equal : Ordering::greater; };
  space.sampler = [radius](std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-radius, radius);
    std::vector<double> out(count);
    for (auto& x : out) x = dist(rng);
    return out;
  };
  space.description = "real line, |x-y|, usual order, samples in [-" + format_double(radius) +
                      ", " + format_double(radius) + "]";
  space.step = [](double from, double r, bool up) { return up ? from + r : from - r; };
  space.contains = [](double x) { return std::isfinite(x); };
  space.label = [](double x) { return format_double(x); };
  return space;
}

}  // namespace coupled_fp
