#include "mevac/vacuum.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "mevac/constants.hpp"
#include "mevac/fit.hpp"
#include "mevac/summation.hpp"

namespace mevac {

namespace {

constexpr double kGeometryTolerance = 1e-12;

// Fixed so that the reduction tree does not depend on the worker count.
constexpr std::size_t kBlockSize = 2048;

// 3 + 3 + 3 + 1 bilinear components followed by 4 magnitude scales.
constexpr std::size_t kChannels = 14;
using BlockTotals = std::array<double, kChannels>;

BlockTotals sum_block(const std::vector<Mode>& modes, std::size_t begin, std::size_t end, const Mat3& chi,
                      double index) {
  std::array<CompensatedSum<double>, kChannels> acc{};
  const Mat3 chi_t = chi.transpose();
  for (std::size_t i = begin; i < end; ++i) {
    const auto [e, b] = mode_fields(modes[i], index);
    const Vec3 chit_e = chi_t * e;
    const Vec3 exb = e.cross(b);
    const Vec3 e_chit_e = e.cross(chit_e);
    const Vec3 b_chi_b = b.cross(chi * b);
    const double b_chit_e = b.dot(chit_e);
    for (int c = 0; c < 3; ++c) {
      acc[c] += exb[c];
      acc[3 + c] += e_chit_e[c];
      acc[6 + c] += b_chi_b[c];
    }
    acc[9] += b_chit_e;
    acc[10] += exb.norm();
    acc[11] += e_chit_e.norm();
    acc[12] += b_chi_b.norm();
    acc[13] += std::abs(b_chit_e);
  }
  BlockTotals out{};
  for (std::size_t c = 0; c < kChannels; ++c) {
    out[c] = acc[c].value();
  }
  return out;
}

double magnitude(const Vec3& v) { return v.norm(); }

}  // namespace

ModeSet::ModeSet(std::vector<Mode> modes, double index, double cutoff, double volume, int grid_n,
                 double mode_weight)
    : modes_(std::move(modes)),
      index_(index),
      cutoff_(cutoff),
      volume_(volume),
      grid_n_(grid_n),
      mode_weight_(mode_weight) {
  if (!(index > 0.0) || !(cutoff > 0.0) || !(volume > 0.0) || grid_n < 2 || !(mode_weight > 0.0)) {
    throw InvalidArgument("mode set: index, cutoff, volume, weight must be > 0 and grid_n >= 2");
  }
  if (modes_.empty()) {
    throw EmptyModeSet("mode set: no modes");
  }
  if (modes_.size() % 2 != 0) {
    throw InvalidArgument("mode set: modes must come in polarization pairs");
  }
  for (std::size_t i = 0; i < modes_.size(); ++i) {
    const Mode& mode = modes_[i];
    const double k = mode.k.norm();
    if (!(k > 0.0) || k > cutoff_) {
      throw InvalidArgument("mode set: |k| must lie in (0, cutoff]");
    }
    if (std::abs(mode.polarization.norm() - 1.0) > kGeometryTolerance ||
        std::abs(mode.polarization.dot(mode.k / k)) > kGeometryTolerance) {
      throw InvalidArgument("mode set: polarization must be a unit vector orthogonal to k");
    }
    const double expected = zero_point_amplitude(k, index_, volume_);
    if (std::abs(mode.amplitude - expected) > kGeometryTolerance * expected) {
      throw InvalidArgument("mode set: amplitude does not match the zero-point normalization");
    }
    if (i % 2 == 1) {
      const Mode& partner = modes_[i - 1];
      if (partner.k != mode.k || std::abs(partner.polarization.dot(mode.polarization)) > kGeometryTolerance) {
        throw InvalidArgument("mode set: paired polarizations must share k and be orthogonal");
      }
    }
  }
}

double zero_point_amplitude(double k_norm, double index, double volume) {
  const double omega = constants::c * k_norm / index;
  return std::sqrt(2.0 * constants::pi * constants::hbar * omega / volume);
}

std::pair<Vec3, Vec3> polarization_basis(const Vec3& k_hat) {
  Eigen::Index axis = 0;
  k_hat.cwiseAbs().minCoeff(&axis);
  const Vec3 e1 = Vec3::Unit(axis).cross(k_hat).normalized();
  const Vec3 e2 = k_hat.cross(e1);
  return {e1, e2};
}

ModeSet build_mode_set(const Materiald& m, int grid_n, double cutoff, double volume) {
  if (grid_n < 2) {
    throw InvalidArgument("vacuum: grid_n must be >= 2");
  }
  if (!(cutoff > 0.0) || !std::isfinite(cutoff)) {
    throw InvalidArgument("vacuum: cutoff must be finite and > 0");
  }
  if (!(volume > 0.0) || !std::isfinite(volume)) {
    throw InvalidArgument("vacuum: volume must be finite and > 0");
  }
  const double index = m.index();
  const double step = cutoff / grid_n;
  const auto coord = [&](int i) { return static_cast<double>(2 * i - (grid_n - 1)) * step; };

  std::vector<Mode> modes;
  for (int i = 0; i < grid_n; ++i) {
    for (int j = 0; j < grid_n; ++j) {
      for (int l = 0; l < grid_n; ++l) {
        const Vec3 k(coord(i), coord(j), coord(l));
        const double norm = k.norm();
        if (norm == 0.0 || norm > cutoff) {
          continue;
        }
        const double amplitude = zero_point_amplitude(norm, index, volume);
        const auto [e1, e2] = polarization_basis(k / norm);
        modes.push_back({k, e1, amplitude});
        modes.push_back({k, e2, amplitude});
      }
    }
  }
  if (modes.empty()) {
    throw EmptyModeSet("vacuum: no wavevector inside the cutoff sphere");
  }
  const double dk = 2.0 * step;
  const double weight = volume * dk * dk * dk / std::pow(2.0 * constants::pi, 3);
  return ModeSet(std::move(modes), index, cutoff, volume, grid_n, weight);
}

ModeFields mode_fields(const Mode& mode, double index) {
  const Vec3 e = mode.amplitude * mode.polarization;
  const Vec3 b = index * mode.amplitude * mode.k.normalized().cross(mode.polarization);
  return {e, b};
}

bool is_null(double magnitude, double scale) { return std::abs(magnitude) <= kNullTolerance * scale; }

BilinearSums vacuum_bilinears(const ModeSet& ms, const Materiald& m, unsigned workers) {
  if (std::abs(ms.index() - m.index()) > 1e-12 * m.index()) {
    throw InvalidArgument("vacuum: mode set was built for a different refractive index");
  }
  const auto& modes = ms.modes();
  const std::size_t blocks = (modes.size() + kBlockSize - 1) / kBlockSize;
  std::vector<BlockTotals> partial(blocks);

  const auto run_block = [&](std::size_t blk) {
    const std::size_t begin = blk * kBlockSize;
    partial[blk] = sum_block(modes, begin, std::min(begin + kBlockSize, modes.size()), m.chi(), ms.index());
  };

  if (workers == 0) {
    workers = std::max(1u, std::thread::hardware_concurrency());
  }
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, blocks));
  if (workers <= 1) {
    for (std::size_t blk = 0; blk < blocks; ++blk) {
      run_block(blk);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t blk = next++; blk < blocks; blk = next++) {
          run_block(blk);
        }
      });
    }
    for (auto& t : pool) {
      t.join();
    }
  }

  std::array<CompensatedSum<double>, kChannels> total{};
  for (const auto& block : partial) {
    for (std::size_t c = 0; c < kChannels; ++c) {
      total[c] += block[c];
    }
  }
  const double w = ms.mode_weight();
  const auto channel = [&](std::size_t c) { return w * total[c].value(); };

  BilinearSums out;
  out.sums.e_cross_b = Vec3(channel(0), channel(1), channel(2));
  out.sums.e_cross_chit_e = Vec3(channel(3), channel(4), channel(5));
  out.sums.b_cross_chi_b = Vec3(channel(6), channel(7), channel(8));
  out.sums.b_chit_e = channel(9);
  out.e_cross_b_scale = channel(10);
  out.e_cross_chit_e_scale = channel(11);
  out.b_cross_chi_b_scale = channel(12);
  out.b_chit_e_scale = channel(13);
  out.mode_count = modes.size();
  return out;
}

double zero_point_energy(const ModeSet& ms) {
  CompensatedSum<double> sum;
  for (const Mode& mode : ms.modes()) {
    const double omega = constants::c * mode.k.norm() / ms.index();
    sum += 0.5 * constants::hbar * omega;
  }
  return ms.mode_weight() * sum.value();
}

CutoffSlopes fit_cutoff_slopes(std::span<const CutoffPoint> points) {
  std::vector<double> cutoffs;
  std::array<std::vector<double>, 4> values;
  std::array<bool, 4> null{};
  for (const auto& p : points) {
    cutoffs.push_back(p.cutoff);
    const auto& b = p.bilinears;
    const std::array<double, 4> mags = {magnitude(b.sums.e_cross_b), magnitude(b.sums.e_cross_chit_e),
                                        magnitude(b.sums.b_cross_chi_b), std::abs(b.sums.b_chit_e)};
    const std::array<double, 4> scales = {b.e_cross_b_scale, b.e_cross_chit_e_scale, b.b_cross_chi_b_scale,
                                          b.b_chit_e_scale};
    for (std::size_t i = 0; i < 4; ++i) {
      values[i].push_back(mags[i]);
      null[i] = null[i] || is_null(mags[i], scales[i]);
    }
  }
  const auto slope = [&](std::size_t i) -> std::optional<double> {
    if (null[i]) {
      return std::nullopt;
    }
    return log_log_slope(cutoffs, values[i]);
  };
  return {slope(0), slope(1), slope(2), slope(3)};
}

CutoffSweep cutoff_sweep(const Materiald& m, int grid_n, std::span<const double> cutoffs, double volume,
                         unsigned workers) {
  for (std::size_t i = 0; i < cutoffs.size(); ++i) {
    if (!(cutoffs[i] > 0.0) || (i > 0 && !(cutoffs[i] > cutoffs[i - 1]))) {
      throw InvalidArgument("cutoff sweep: cutoffs must be positive and strictly ascending");
    }
  }
  CutoffSweep sweep;
  for (const double cutoff : cutoffs) {
    const int scaled =
        std::max(2, static_cast<int>(std::lround(grid_n * cutoff / cutoffs.front())));
    const ModeSet ms = build_mode_set(m, scaled, cutoff, volume);
    sweep.points.push_back({cutoff, scaled, vacuum_bilinears(ms, m, workers)});
  }
  sweep.slopes = fit_cutoff_slopes(sweep.points);
  return sweep;
}

}  // namespace mevac
