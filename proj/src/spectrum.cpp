#include "pwig/spectrum.hpp"

#include <cmath>
#include <limits>

namespace pwig {

DressedMap DressedMap::rotation(std::function<double(long)> angle) {
  DressedMap m;
  m.angle_ = std::move(angle);
  return m;
}

DressedMap DressedMap::relabel() { return DressedMap{}; }

double DressedMap::angle(long n) const {
  return angle_ ? angle_(n) : std::numeric_limits<double>::quiet_NaN();
}

std::vector<DressedMap::Term> DressedMap::terms(long n) const {
  if (n == 0) return {{{0, false}, 1.0}};
  const long a = std::labs(n);
  if (!angle_) {
    return n > 0 ? std::vector<Term>{{{a, false}, 1.0}} : std::vector<Term>{{{a, true}, 1.0}};
  }
  const double th = angle_(n);
  return {{{a - 1, true}, std::sin(th)}, {{a, false}, std::cos(th)}};
}

std::vector<std::pair<long, double>> DressedMap::sites_of(BareLevel level) const {
  std::vector<std::pair<long, double>> out;
  if (!angle_) {
    if (!level.excited) out.emplace_back(level.n_ph, 1.0);  // includes |0,-> -> site 0
    else if (level.n_ph > 0) out.emplace_back(-level.n_ph, 1.0);
    return out;
  }
  if (!level.excited) {
    if (level.n_ph == 0) {
      out.emplace_back(0, 1.0);
      return out;
    }
    for (long n : {level.n_ph, -level.n_ph}) out.emplace_back(n, std::cos(angle_(n)));
  } else {
    for (long n : {level.n_ph + 1, -(level.n_ph + 1)}) out.emplace_back(n, std::sin(angle_(n)));
  }
  return out;
}

SpectrumModel::SpectrumModel(std::string name, std::function<double(long)> energy)
    : name_(std::move(name)), eps_(std::move(energy)) {}

SpectrumModel SpectrumModel::custom(long n_min, std::vector<double> eps) {
  if (eps.empty()) throw SpectrumError("custom spectrum needs at least one level");
  for (double e : eps)
    if (!std::isfinite(e)) throw SpectrumError("custom spectrum contains a non-finite level");
  const long hi = n_min + static_cast<long>(eps.size()) - 1;
  SpectrumModel s("custom", [n_min, v = std::move(eps)](long n) { return v[static_cast<std::size_t>(n - n_min)]; });
  s.domain_ = std::make_pair(n_min, hi);
  return s;
}

SpectrumModel SpectrumModel::linear(double omega, double offset) {
  return SpectrumModel("linear", [omega, offset](long n) { return omega * static_cast<double>(n) + offset; });
}

double SpectrumModel::energy(long n) const {
  if (domain_ && (n < domain_->first || n > domain_->second))
    throw SpectrumError("spectrum '" + name_ + "' undefined at n=" + std::to_string(n));
  const double e = eps_(n);
  if (std::isnan(e)) throw SpectrumError("spectrum '" + name_ + "' is NaN at n=" + std::to_string(n));
  return e;
}

bool SpectrumModel::defined_on(long lo, long hi) const {
  return !domain_ || (lo >= domain_->first && hi <= domain_->second);
}

void SpectrumModel::require_defined(long lo, long hi) const {
  if (!defined_on(lo, hi))
    throw SpectrumError("spectrum '" + name_ + "' undefined on [" + std::to_string(lo) + ", " + std::to_string(hi) +
                        "]");
}

SpectrumModel& SpectrumModel::with_map(DressedMap map) {
  map_ = std::make_shared<const DressedMap>(std::move(map));
  return *this;
}

SpectrumModel& SpectrumModel::with_note(std::string note) {
  note_ = std::move(note);
  return *this;
}

}  // namespace pwig
