#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "krasno/galleries.hpp"
#include "krasno/inscribe.hpp"
#include "krasno/param.hpp"

namespace krasno {

enum class Classification { Consistent, Vacuous, TheoremViolationCandidate, ConsistentWithClaim };
const char* to_string(Classification c);

enum class WitnessFamily { None, BoxVolume, BoxSum, Disc, Ellipse, VWidth, NormSegment, RegionArea };
const char* to_string(WitnessFamily f);
std::optional<WitnessFamily> parse_family(std::string_view s);

struct CandidateSet {
  std::vector<Point2> points;
  std::vector<std::string> tags;  // vertex | edge-midpoint | spike-tip | user | random(seed)

  /// Appends p unless already present. Returns false for a duplicate.
  bool add(const Point2& p, std::string tag);
  std::size_t size() const { return points.size(); }
};

/// Vertices, edge midpoints, `random_count` seeded interior points, then
/// `extra` tagged as `extra_tag`. Throws NotInGallery for an extra point
/// outside K.
CandidateSet default_candidates(const Gallery& K, int random_count = 20, std::uint64_t seed = 0,
                                const std::vector<Point2>& extra = {}, const std::string& extra_tag = "user");

struct CheckConfig {
  int k = 0;  // 0 picks the family default
  WitnessFamily family = WitnessFamily::None;
  double threshold = 1;
  // Conclusion threshold; negative means the family's guaranteed value.
  double conclusion_threshold = -1;
  double tolerance = 0;  // slack on the hypothesis threshold
  std::size_t cap = 1'000'000;
  Eigen::Vector2d direction{1, 0};
  PolytopeNormBall norm = PolytopeNormBall::linf(2);
  int grid_resolution = 40;
  InscribeOptions inscribe;
};

/// Tuple size the theorem asks for (plane case).
int default_k(const CheckConfig& cfg);
/// Guaranteed conclusion threshold for a hypothesis threshold t.
double guaranteed_threshold(const CheckConfig& cfg);

struct Witness {
  WitnessFamily family = WitnessFamily::None;
  std::optional<Point2> point;
  std::optional<Box2> box;
  std::optional<Disc> disc;
  std::optional<Ellipse> ellipse;
  std::optional<SegmentWitness> segment;
  double measure = 0;
  bool resolution_limited = false;
};

struct TheoremReport {
  std::string theorem;
  int k = 0;
  WitnessFamily family = WitnessFamily::None;
  double threshold = 0;
  double conclusion_threshold = 0;

  bool hypothesis_holds = true;
  std::vector<std::size_t> violating_indices;  // into the candidate list (or one per class)
  std::vector<Point2> violating_tuple;

  bool conclusion_holds = false;
  Witness witness;
  double kernel_measure = 0;  // quantitative families: best measure found in the kernel
  std::vector<std::string> satisfied_classes;

  Classification classification = Classification::Consistent;
  std::size_t candidates = 0;
  std::size_t tuples_total = 0;
  std::size_t tuples_checked = 0;
  bool truncated = false;
  double coverage = 1;
  bool resolution_limited = false;
  std::vector<std::string> notes;
};

/// Every k-tuple of C has a common viewer; conclusion: K is star-shaped.
TheoremReport check_classic(const Gallery& K, const CandidateSet& C, const CheckConfig& cfg = {});

/// Three point classes in a simply connected planar gallery (two classes run
/// as an out-of-scope control). Polygonal
/// galleries with holes or a cyclic contact pattern throw NotSimplyConnected;
/// skeletal galleries run without the precondition.
TheoremReport check_colorful_plane(const Gallery& K, const std::vector<ColorClass>& classes,
                                   const CheckConfig& cfg = {});

/// Any number (>= 2) of classes; colorful tuples take one point per class.
TheoremReport check_colorful_general(const Gallery& K, const std::vector<ColorClass>& classes,
                                     const CheckConfig& cfg = {});

/// Every k-tuple's common visibility admits the witness at the threshold;
/// conclusion: the kernel admits it at the guaranteed threshold.
TheoremReport check_quantitative(const Gallery& K, const CandidateSet& C, const CheckConfig& cfg);

enum class GeneratorKind { Star, Simple, SimpleEmptyKernel };

struct FuzzSpec {
  GeneratorKind generator = GeneratorKind::Star;
  int min_vertices = 4;
  int max_vertices = 14;
  std::uint64_t seed = 0;
  int random_candidates = 0;
  // Deal the candidates round-robin into three classes and run the colorful
  // plane checker instead of the classic one.
  bool colorful = false;
};

struct FuzzResult {
  std::uint64_t seed = 0;
  int vertices = 0;
  SimplePolygon polygon;
  TheoremReport report;
};

/// Generates `budget` galleries (gallery i uses seed spec.seed + i) and runs
/// the configured checker on each.
std::vector<FuzzResult> search_counterexample(const FuzzSpec& spec, const CheckConfig& cfg, int budget);

}  // namespace krasno
