// Discrete spectra labelled by n in Z and the map from the lattice
// (dressed) basis to bare atom-field states |n_ph, +/->.
#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pwig {

class SpectrumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// |n_ph, +> (atom excited) or |n_ph, ->.
struct BareLevel {
  long n_ph;
  bool excited;
  bool operator==(const BareLevel&) const = default;
};

/// Real expansion of a lattice site in bare states.
class DressedMap {
 public:
  struct Term {
    BareLevel level;
    double amplitude;
  };

  /// |0> = |0,->; |n> = sin(angle_n)|{|n|-1},+> + cos(angle_n)|{|n|},->.
  static DressedMap rotation(std::function<double(long)> angle);
  /// |0> = |0,->; |n> = |n,-> for n > 0; |n> = |-n,+> for n < 0.
  static DressedMap relabel();

  std::vector<Term> terms(long n) const;
  /// Lattice site and amplitude <n|level> for every site overlapping `level`.
  std::vector<std::pair<long, double>> sites_of(BareLevel level) const;
  /// Mixing angle (NaN for relabel maps).
  double angle(long n) const;
  bool is_rotation() const { return static_cast<bool>(angle_); }

 private:
  std::function<double(long)> angle_;
};

class SpectrumModel {
 public:
  SpectrumModel(std::string name, std::function<double(long)> energy);

  /// eps_n given on [n_min, n_min + size); undefined outside.
  static SpectrumModel custom(long n_min, std::vector<double> eps);
  /// eps_n = omega * n + offset.
  static SpectrumModel linear(double omega, double offset = 0.0);

  const std::string& name() const { return name_; }
  double energy(long n) const;
  double operator()(long n) const { return energy(n); }
  bool defined_on(long lo, long hi) const;
  void require_defined(long lo, long hi) const;

  SpectrumModel& with_map(DressedMap map);
  SpectrumModel& with_note(std::string note);
  const DressedMap* dressed_map() const { return map_.get(); }
  const std::string& note() const { return note_; }

 private:
  std::string name_;
  std::function<double(long)> eps_;
  std::optional<std::pair<long, long>> domain_;
  std::shared_ptr<const DressedMap> map_;
  std::string note_;
};

}  // namespace pwig
