#include "geobip/object_set.hpp"

#include <cmath>
#include <limits>

#include "geobip/error.hpp"

namespace geobip {

double round_down(const Scalar& value) {
  const double d = value.to_double();
  return std::nextafter(std::nextafter(d, -HUGE_VAL), -HUGE_VAL);
}

double round_up(const Scalar& value) {
  const double d = value.to_double();
  return std::nextafter(std::nextafter(d, HUGE_VAL), HUGE_VAL);
}

namespace {

using int128 = __int128;

// Scales all values by the lcm of their denominators. Returns false when any
// scaled value reaches 2^bits in magnitude.
bool to_integer_frame(const std::vector<const Scalar*>& values, unsigned bits,
                      std::vector<std::int64_t>& out) {
  mpz_class scale = 1;
  for (const Scalar* v : values) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v->raw().get_den_mpz_t());
    if (mpz_sizeinbase(scale.get_mpz_t(), 2) > bits) return false;
  }
  out.clear();
  out.reserve(values.size());
  mpz_class scaled;
  for (const Scalar* v : values) {
    scaled = v->raw().get_num() * (scale / v->raw().get_den());
    if (mpz_sizeinbase(scaled.get_mpz_t(), 2) >= bits) return false;
    out.push_back(scaled.get_si());
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// SegmentSet

SegmentSet::SegmentSet(std::span<const Segment> segments, SegmentMode mode)
    : segments_(segments.begin(), segments.end()), mode_(mode) {
  std::vector<const Scalar*> values;
  values.reserve(segments_.size() * 4);
  boxes_.reserve(segments_.size());
  for (const Segment& s : segments_) {
    values.insert(values.end(), {&s.p.x, &s.p.y, &s.q.x, &s.q.y});
    Box box;
    box.lo = {round_down(std::min(s.p.x, s.q.x)), round_down(std::min(s.p.y, s.q.y))};
    box.hi = {round_up(std::max(s.p.x, s.q.x)), round_up(std::max(s.p.y, s.q.y))};
    boxes_.push_back(std::move(box));
  }
  std::vector<std::int64_t> ints;
  if (to_integer_frame(values, 61, ints)) {
    frame_.reserve(segments_.size());
    for (std::size_t i = 0; i < segments_.size(); ++i) {
      frame_.push_back({{ints[4 * i], ints[4 * i + 1]}, {ints[4 * i + 2], ints[4 * i + 3]}});
    }
  }
}

Box SegmentSet::bounds(std::size_t index) const { return boxes_[index]; }

namespace {

template <class P>
int orient(const P& a, const P& b, const P& c) {
  const int128 lhs = static_cast<int128>(b.x - a.x) * (c.y - a.y);
  const int128 rhs = static_cast<int128>(b.y - a.y) * (c.x - a.x);
  return lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
}

template <class P>
bool within_box(const P& p, const P& a, const P& b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

}  // namespace

bool SegmentSet::intersects(std::size_t i, std::size_t j) const {
  if (frame_.empty()) return segments_intersect(segments_[i], segments_[j], mode_);

  const IntSegment& s = frame_[i];
  const IntSegment& t = frame_[j];
  if (std::max(s.p.x, s.q.x) < std::min(t.p.x, t.q.x) || std::max(t.p.x, t.q.x) < std::min(s.p.x, s.q.x) ||
      std::max(s.p.y, s.q.y) < std::min(t.p.y, t.q.y) || std::max(t.p.y, t.q.y) < std::min(s.p.y, s.q.y)) {
    return false;
  }
  const int o1 = orient(s.p, s.q, t.p);
  const int o2 = orient(s.p, s.q, t.q);
  const int o3 = orient(t.p, t.q, s.p);
  const int o4 = orient(t.p, t.q, s.q);
  if (o1 == 0 && o2 == 0) {
    const bool use_x = s.p.x != s.q.x;
    auto c = [&](const IntPoint& p) { return use_x ? p.x : p.y; };
    const std::int64_t lo = std::max(std::min(c(s.p), c(s.q)), std::min(c(t.p), c(t.q)));
    const std::int64_t hi = std::min(std::max(c(s.p), c(s.q)), std::max(c(t.p), c(t.q)));
    return mode_ == SegmentMode::kOpen ? lo < hi : lo <= hi;
  }
  const bool proper = o1 * o2 < 0 && o3 * o4 < 0;
  if (mode_ == SegmentMode::kOpen || proper) return proper;
  return (o1 == 0 && within_box(t.p, s.p, s.q)) || (o2 == 0 && within_box(t.q, s.p, s.q)) ||
         (o3 == 0 && within_box(s.p, t.p, t.q)) || (o4 == 0 && within_box(s.q, t.p, t.q));
}

// ---------------------------------------------------------------------------
// BallSet

BallSet::BallSet(std::span<const Ball> balls) : balls_(balls.begin(), balls.end()) {
  if (!balls_.empty()) dim_ = balls_.front().dim();
  std::vector<const Scalar*> values;
  values.reserve(balls_.size() * (dim_ + 1));
  boxes_.reserve(balls_.size());
  for (const Ball& b : balls_) {
    if (b.dim() != dim_ || dim_ == 0) throw DegenerateInputError("balls must share one positive dimension");
    if (b.radius.sign() <= 0) throw DegenerateInputError("ball radius must be positive");
    Box box;
    for (const Scalar& c : b.center) {
      values.push_back(&c);
      box.lo.push_back(round_down(c - b.radius));
      box.hi.push_back(round_up(c + b.radius));
    }
    values.push_back(&b.radius);
    boxes_.push_back(std::move(box));
  }
  // Sums of dim squared 42-bit differences stay far below 2^127.
  std::vector<std::int64_t> ints;
  if (dim_ <= 1024 && to_integer_frame(values, 40, ints)) {
    for (std::size_t i = 0; i < balls_.size(); ++i) {
      const std::size_t base = i * (dim_ + 1);
      frame_centers_.insert(frame_centers_.end(), ints.begin() + base, ints.begin() + base + dim_);
      frame_radii_.push_back(ints[base + dim_]);
    }
  }
}

bool BallSet::intersects(std::size_t i, std::size_t j) const {
  if (frame_radii_.empty()) return balls_intersect(balls_[i], balls_[j]);
  const std::int64_t* a = &frame_centers_[i * dim_];
  const std::int64_t* b = &frame_centers_[j * dim_];
  const int128 reach = frame_radii_[i] + frame_radii_[j];
  const int128 limit = reach * reach;
  int128 dist2 = 0;
  for (std::size_t k = 0; k < dim_; ++k) {
    const int128 d = a[k] - b[k];
    dist2 += d * d;
    if (dist2 > limit) return false;
  }
  return true;
}

Box BallSet::bounds(std::size_t index) const { return boxes_[index]; }

}  // namespace geobip
