#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "geobip/geometry.hpp"

namespace geobip {

/// Axis-aligned box in double precision, rounded outward so that it contains
/// the exact bounding box of the object it was computed from.
struct Box {
  std::vector<double> lo;
  std::vector<double> hi;
};

/// A finite family of geometric objects addressed by index 0..size()-1,
/// together with their exact pairwise intersection predicate. This is what
/// the oracle, the generic algorithm and the detectors operate on.
class ObjectSet {
 public:
  virtual ~ObjectSet() = default;
  virtual std::size_t size() const = 0;
  virtual ObjectId id(std::size_t index) const = 0;
  virtual bool intersects(std::size_t i, std::size_t j) const = 0;
  virtual Box bounds(std::size_t index) const = 0;
};

/// Segments under a closed/open interpretation.
///
/// When every coordinate, scaled by the common denominator of the whole set,
/// fits in 61 bits, predicates run on 128-bit integers; otherwise they fall
/// back to the rational predicates of geometry.hpp. Both paths are exact.
class SegmentSet final : public ObjectSet {
 public:
  SegmentSet(std::span<const Segment> segments, SegmentMode mode);

  std::size_t size() const override { return segments_.size(); }
  ObjectId id(std::size_t index) const override { return segments_[index].id; }
  bool intersects(std::size_t i, std::size_t j) const override;
  Box bounds(std::size_t index) const override;

  const Segment& segment(std::size_t index) const { return segments_[index]; }
  std::span<const Segment> segments() const { return segments_; }
  SegmentMode mode() const { return mode_; }
  bool has_integer_frame() const { return !frame_.empty(); }

 private:
  struct IntPoint {
    std::int64_t x;
    std::int64_t y;
  };
  struct IntSegment {
    IntPoint p;
    IntPoint q;
  };

  std::vector<Segment> segments_;
  SegmentMode mode_;
  std::vector<IntSegment> frame_;
  std::vector<Box> boxes_;
};

/// Closed balls of a common dimension (disks when the dimension is 2).
class BallSet final : public ObjectSet {
 public:
  /// Throws DegenerateInputError on mixed dimensions or non-positive radii.
  explicit BallSet(std::span<const Ball> balls);

  std::size_t size() const override { return balls_.size(); }
  ObjectId id(std::size_t index) const override { return balls_[index].id; }
  bool intersects(std::size_t i, std::size_t j) const override;
  Box bounds(std::size_t index) const override;

  const Ball& ball(std::size_t index) const { return balls_[index]; }
  std::span<const Ball> balls() const { return balls_; }
  std::size_t dim() const { return dim_; }

 private:
  std::vector<Ball> balls_;
  std::size_t dim_ = 0;
  // Scaled integer centers (row-major, dim_ per ball) and radii.
  std::vector<std::int64_t> frame_centers_;
  std::vector<std::int64_t> frame_radii_;
  std::vector<Box> boxes_;
};

/// Double approximations of [value, value] widened outward.
double round_down(const Scalar& value);
double round_up(const Scalar& value);

}  // namespace geobip
