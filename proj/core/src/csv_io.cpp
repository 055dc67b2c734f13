#include "hnpoly/csv_io.hpp"

#include <sstream>

#include "hnpoly/errors.hpp"
#include "hnpoly/json_io.hpp"

namespace hnpoly {

std::string measure_to_csv(const DiracMeasure& nu) {
  std::ostringstream out;
  out << "position,mass\n";
  for (const auto& [pos, mass] : nu.atoms())
    out << rat_str(pos) << ',' << rat_str(mass) << '\n';
  return out.str();
}

std::string polygon_to_csv(const Polygon& p, long dense_samples) {
  if (dense_samples < 0) throw ValidationError("sample count must be nonnegative");
  std::ostringstream out;
  out << "t,P(t)\n";
  const std::vector<Rat> values = p.values();
  for (std::size_t i = 0; i < p.knots().size(); ++i)
    out << rat_str(p.knots()[i]) << ',' << rat_str(values[i]) << '\n';
  for (long k = 0; k <= dense_samples && dense_samples > 0; ++k) {
    const Rat t = rat(k, dense_samples);
    out << fmt_double(to_double(t)) << ',' << fmt_double(to_double(eval(p, t)))
        << '\n';
  }
  return out.str();
}

}  // namespace hnpoly
