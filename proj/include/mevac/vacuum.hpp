#pragma once

// Zero-point plane-wave modes and their field bilinears.
//
// Conventions:
//   * Cell-centred Cartesian k-grid on [-cutoff, cutoff]^3 with grid_n cells
//     per axis, k_i = (2i - (grid_n - 1)) * cutoff / grid_n. The grid is exactly
//     symmetric under k -> -k and never contains k = 0 for even grid_n (the
//     origin is dropped for odd grid_n). Only |k| <= cutoff is kept.
//   * Each grid point stands for V (dk)^3 / (2 pi)^3 physical modes of the
//     quantization volume V (dk = 2 cutoff / grid_n). The bilinear sums are
//     weighted by this count, so they are intensive: independent of V and
//     convergent as grid_n grows at fixed cutoff.
//   * Every mode carries energy hbar omega / 2 with omega = c |k| / n. The
//     cycle-averaged field amplitude is sqrt(2 pi hbar omega / V); the factor
//     1/2 of the time average is absorbed there, so E = a e and
//     B = n a (k^ x e) enter every bilinear directly.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mevac/algebra.hpp"
#include "mevac/momentum.hpp"

namespace mevac {

struct Mode {
  Vec3 k;             ///< wavevector [rad/cm]
  Vec3 polarization;  ///< unit, orthogonal to k
  double amplitude;   ///< [statvolt/cm]
};

/// Zero-point modes in consecutive polarization pairs sharing one k.
/// The constructor checks every invariant and throws InvalidArgument.
class ModeSet {
 public:
  ModeSet(std::vector<Mode> modes, double index, double cutoff, double volume, int grid_n, double mode_weight);

  const std::vector<Mode>& modes() const { return modes_; }
  std::size_t size() const { return modes_.size(); }
  double index() const { return index_; }
  double cutoff() const { return cutoff_; }
  double volume() const { return volume_; }
  int grid_n() const { return grid_n_; }
  /// Physical modes represented by one grid mode, V (dk)^3 / (2 pi)^3.
  double mode_weight() const { return mode_weight_; }

 private:
  std::vector<Mode> modes_;
  double index_;
  double cutoff_;
  double volume_;
  int grid_n_;
  double mode_weight_;
};

/// sqrt(2 pi hbar omega / V) with omega = c |k| / n.
double zero_point_amplitude(double k_norm, double index, double volume);

/// Right-handed transverse basis (e1, e2) with e1 x e2 = k^. e1 is built from
/// the coordinate axis least aligned with k^ (lowest index on ties).
std::pair<Vec3, Vec3> polarization_basis(const Vec3& k_hat);

/// Throws InvalidArgument for grid_n < 2, cutoff <= 0 or volume <= 0 and
/// EmptyModeSet if no wavevector survives.
ModeSet build_mode_set(const Materiald& m, int grid_n, double cutoff, double volume);

struct ModeFields {
  Vec3 E;
  Vec3 B;
};

ModeFields mode_fields(const Mode& mode, double index);

/// Weighted mode sums of the four velocity-equation bilinears. The *_scale
/// members hold the weighted sums of the per-mode magnitudes.
struct BilinearSums {
  FieldBilinears<double> sums;
  double e_cross_b_scale = 0.0;
  double e_cross_chit_e_scale = 0.0;
  double b_cross_chi_b_scale = 0.0;
  double b_chit_e_scale = 0.0;
  std::size_t mode_count = 0;
};

/// Relative threshold below which a sum counts as cancelled.
inline constexpr double kNullTolerance = 1e-12;

/// |value| <= kNullTolerance * scale
bool is_null(double magnitude, double scale);

/// Sums are accumulated with compensation over fixed blocks of modes and the
/// block results folded in block order, so the result is bit-identical for
/// every `workers` value (0 means hardware concurrency).
BilinearSums vacuum_bilinears(const ModeSet& ms, const Materiald& m, unsigned workers = 1);

/// Weighted sum of hbar omega / 2 over all modes [erg].
double zero_point_energy(const ModeSet& ms);

struct CutoffPoint {
  double cutoff;
  int grid_n;
  BilinearSums bilinears;
};

/// Log-log slopes of each bilinear magnitude against the cutoff. Empty when
/// the bilinear is null at any point.
struct CutoffSlopes {
  std::optional<double> e_cross_b;
  std::optional<double> e_cross_chit_e;
  std::optional<double> b_cross_chi_b;
  std::optional<double> b_chit_e;
};

struct CutoffSweep {
  std::vector<CutoffPoint> points;
  CutoffSlopes slopes;
};

/// grid_n scales with the cutoff (grid_n_i = round(grid_n * cutoff_i / cutoff_0))
/// so the k spacing stays fixed. cutoffs must be positive and ascending.
CutoffSweep cutoff_sweep(const Materiald& m, int grid_n, std::span<const double> cutoffs, double volume,
                         unsigned workers = 1);

/// Slopes over an arbitrary set of points.
CutoffSlopes fit_cutoff_slopes(std::span<const CutoffPoint> points);

}  // namespace mevac
