#pragma once

#include <utility>
#include <vector>

#include "circleop/fourier.hpp"

namespace circleop {

/// Subarc of the circle: [start, start + length), wrap-aware.
struct Arc {
  double start;   // normalized into [0, 2*pi)
  double length;  // 0 < length <= 2*pi

  Arc(double s, double l);
};

/// Quadrature mean of f over the arc (grid points inside the arc).
cplx arc_mean(const GridFunction& f, const Arc& I);

/// Rooted mean square deviation of f from its arc mean.
double mean_oscillation(const GridFunction& f, const Arc& I);
/// The unrooted quantity (1/|I|) int_I |f - f_I|^2.
double mean_oscillation_raw(const GridFunction& f, const Arc& I);

struct OscillationLevel {
  double arc_length;         // 2*pi * 2^-k
  double worst_oscillation;  // max over the sliding window family at this scale
};

/// Mean-oscillation profile over a dyadic ladder of scales. The max over all
/// levels lower-bounds the BMO norm; the tail behaviour is the
/// resolution-indexed stand-in for the vanishing-oscillation limit.
struct OscillationProfile {
  std::vector<OscillationLevel> levels;

  double max_oscillation() const;
  double last_oscillation() const;
};

/// Sliding dyadic windows with 50% overlap, scales 2*pi*2^-k for k = 0..depth.
/// Each window at the smallest scale must hold at least 4 grid points.
OscillationProfile bmo_profile(const GridFunction& f, int depth,
                               Exec exec = Exec::Parallel);

/// Largest depth whose smallest window still holds min_points grid points.
int default_profile_depth(const CircleGrid& grid, int min_points = 8);

/// Decay verdict: the final level is below decay_factor times the profile max
/// and the last three levels are non-increasing. Profiles that are zero to
/// rounding count as consistent.
bool vmo_consistent(const OscillationProfile& p, double decay_factor = 0.25);

struct EssentialRangeEstimate {
  double lo = 0.0, hi = 0.0;  // histogram support
  double bin_width = 0.0;
  std::vector<double> occupancy;  // measure per bin; sums to 2*pi
  std::vector<std::pair<double, double>> gaps;  // empty interior intervals
};

/// Value histogram of a real-valued sample weighted by grid measure. Gaps are
/// maximal empty interior runs wider than two bin widths.
EssentialRangeEstimate essential_range(const GridFunction& f, int bins);

enum class IntegerVmoVerdict { Constant, NotIntegerValued, OscillationLowerBound };

struct IntegerVmoResult {
  IntegerVmoVerdict verdict;
  double oscillation_lower_bound = 0.0;  // set for OscillationLowerBound
};

/// Integer-valued samples are either a single constant or carry a positive
/// oscillation floor at every scale; anything else is not integer valued.
/// Samples count as integer valued when each lies within 0.25 of an integer.
IntegerVmoResult integer_valued_vmo_check(const GridFunction& f);

}  // namespace circleop
