#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "br/tracker.hpp"

namespace br {

// One sample of the parametrized variety: a source point, its image, and the
// infinity-norm residual of the sliced system it was computed against.
struct WitnessPoint {
  CVec source;
  CVec image;
  double residual = 0.0;
};

// Pseudo witness set for the closure of the image of `map`: the current
// slice-plus-gauge system (as its coefficient matrix) together with sample
// points whose images are pairwise distinct.  `dim` is the dimension of the
// image (of the affine cone when map.cone); the slice has `dim` affine-linear
// forms on the image and fiber_dim gauge forms on the source, so a complete
// point set has exactly deg(image) members.
struct PseudoWitnessSet {
  Parametrization map;
  CMat coeff;
  int dim = 0;
  int fiber_dim = 0;
  std::vector<WitnessPoint> points;
  std::uint64_t seed = 0;
  int monodromy_rounds = 0;
  int path_failures = 0;

  // View of the current system.  Valid while this object is alive and
  // unmoved; build a fresh one after copying or moving the set.
  SlicedSystem system() const { return SlicedSystem{&map, coeff, dim}; }
};

struct WitnessOptions {
  TrackerConfig tracker;
  double image_tol = 1e-6;  // dedup / endpoint comparison tolerance on images
  double trace_tol = 1e-6;  // collinearity residual, relative to displacement
  int gamma_retries = 3;    // fresh-gamma retries per failed path
  int stable_rounds = 5;    // monodromy stops after this many quiet rounds
  // When a parametrization has several source points per image (finite fiber
  // symmetry), two tracked paths can end in different fibers of the same
  // image.  Such collisions are repaired by re-tracking with a fresh gamma
  // and then through random detour slices, up to this many sweeps.
  int collision_retries = 8;
};

enum class Outcome { No, Yes, Inconclusive };
std::string to_string(Outcome o);

// Distance between images: chordal (angle) metric after projective
// normalization for cones, relative euclidean distance otherwise.
double image_distance(const CVec& x, const CVec& y, bool cone);

// Fresh random slice system: `dim` affine-linear forms on the image
// coordinates and source_dim - dim gauge forms on the source variables, all
// with gaussian coefficients and constants.
CMat random_slice(const Parametrization& g, int dim, Rng& rng);

// Track with a fresh random unit gamma, retrying failed paths up to
// opt.gamma_retries times.
TrackResult tracked_with_retries(const SlicedSystem& from, const SlicedSystem& to,
                                 const CVec& start, const WitnessOptions& opt, Rng& rng);

// Build a pseudo witness set with one point: pick a random source point, put
// a slice through its image, then slide the slice to a fresh random one by
// continuation.  Throws when the Jacobian rank is unstable across random
// points (degenerate parametrization) or the start path fails.
PseudoWitnessSet pseudo_witness(const Parametrization& g, Rng& rng,
                                const WitnessOptions& opt = {});

struct MonodromyReport {
  int rounds = 0;
  int new_points = 0;
  int failures = 0;
  bool stabilized = false; // point count was quiet for stable_rounds rounds
};

// Random triangle loops in slice space: every witness point is tracked
// through two auxiliary random slices and back; endpoints with new images are
// appended.  Path failures are counted and skipped (the set may undercount;
// the trace test is the completeness arbiter).
MonodromyReport monodromy_expand(PseudoWitnessSet& pw, int max_rounds, Rng& rng,
                                 const WitnessOptions& opt = {});

struct TraceResult {
  Outcome outcome = Outcome::Inconclusive;
  double residual = 0.0; // || c(+d) + c(-d) - 2 c(0) ||
  double scale = 0.0;    // || c(+d) - c(-d) ||
  int failures = 0;
};

// Completeness test: translate the first slice form through three parallel
// positions; the centroid of the images moves along a straight line exactly
// when the witness set is complete.  Path failures make the test
// inconclusive, never a verdict.
TraceResult trace_test(const PseudoWitnessSet& pw, Rng& rng, const WitnessOptions& opt = {});

struct MembershipResult {
  Outcome outcome = Outcome::Inconclusive;
  double best_distance = 0.0;
  int failures = 0;
};

// Move the slice to a general one through `target` and track every witness
// point; the target lies on the variety exactly when some endpoint image
// coincides with it.  Meaningful only for complete sets (run trace_test
// first).
MembershipResult membership(const PseudoWitnessSet& pw, const CVec& target, Rng& rng,
                            const WitnessOptions& opt = {});

struct SliceSample {
  std::vector<CVec> images;
  std::vector<CVec> sources;
  int failures = 0;
};

// Track the witness points onto the prescribed hyperplane
// {form . x = constant}, completed to a full slice by dim-1 fresh random
// affine forms and fresh gauges.  Images are deduplicated; for a complete
// witness set of a curve this yields its intersection with the hyperplane.
SliceSample slice_with_form(const PseudoWitnessSet& pw, const CVec& form, Cplx constant,
                            Rng& rng, const WitnessOptions& opt = {});

} // namespace br
