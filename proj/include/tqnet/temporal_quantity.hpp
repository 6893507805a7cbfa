#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tqnet/semiring.hpp"

namespace tqnet {

using Time = std::int64_t;

/// Closed range of integer years [first, last]; quantities live in
/// [first, last + 1).
struct TimeHorizon {
  Time first = 0;
  Time last = 0;

  TimeHorizon() = default;
  TimeHorizon(Time first_year, Time last_year);

  [[nodiscard]] Time end() const noexcept { return last + 1; }
  [[nodiscard]] bool contains(Time t) const noexcept {
    return t >= first && t <= last;
  }
  friend bool operator==(const TimeHorizon&, const TimeHorizon&) = default;
};

/// Half-open interval [start, finish) carrying a constant value.
struct Interval {
  Time start;
  Time finish;
  Value value;

  [[nodiscard]] Time length() const noexcept { return finish - start; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct QuantitySummary {
  Time min_time;
  Time max_time;
  Value min_value;
  Value max_value;
  friend bool operator==(const QuantitySummary&,
                         const QuantitySummary&) = default;
};

/// Piecewise-constant function of discrete time, undefined outside its
/// intervals.
///
/// Always canonical: intervals are non-empty, ordered, pairwise disjoint,
/// and touching neighbours never share a value. Explicit zero values are
/// kept; only the absence of an interval means "undefined".
class TemporalQuantity {
 public:
  TemporalQuantity() = default;

  /// Validates ordering and disjointness and merges touching equal
  /// neighbours. Throws std::invalid_argument on overlap, empty intervals
  /// or NaN values.
  explicit TemporalQuantity(std::vector<Interval> intervals);
  TemporalQuantity(std::initializer_list<Interval> intervals);

  /// Constant `value` over the whole horizon.
  static TemporalQuantity constant(const TimeHorizon& horizon, Value value);
  /// The multiplicative identity: `sr.one` over the whole horizon.
  static TemporalQuantity ones(const TimeHorizon& horizon,
                               const Semiring& sr = kCombinatorial);

  [[nodiscard]] std::span<const Interval> intervals() const noexcept {
    return intervals_;
  }
  [[nodiscard]] bool empty() const noexcept { return intervals_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return intervals_.size(); }
  [[nodiscard]] const Interval& operator[](std::size_t i) const {
    return intervals_[i];
  }
  [[nodiscard]] auto begin() const noexcept { return intervals_.begin(); }
  [[nodiscard]] auto end() const noexcept { return intervals_.end(); }

  /// Value at instant t, or nullopt where undefined.
  [[nodiscard]] std::optional<Value> at(Time t) const;

  friend bool operator==(const TemporalQuantity&,
                         const TemporalQuantity&) = default;

 private:
  struct Trusted {};
  TemporalQuantity(Trusted, std::vector<Interval> intervals)
      : intervals_(std::move(intervals)) {}

  friend class QuantityBuilder;

  std::vector<Interval> intervals_;
};

/// Appends intervals in time order, merging touching equal values.
/// Used by every operation that produces a quantity.
class QuantityBuilder {
 public:
  void reserve(std::size_t n) { out_.reserve(n); }
  /// Requires start >= finish of the previously appended interval.
  void append(Time start, Time finish, Value value);
  TemporalQuantity build() &&;

 private:
  std::vector<Interval> out_;
};

/// Pointwise a(t) + b(t) on T_a u T_b; undefined is the additive identity.
TemporalQuantity sum(const TemporalQuantity& a, const TemporalQuantity& b,
                     const Semiring& sr = kCombinatorial);

/// Pointwise a(t) * b(t) on T_a n T_b; undefined absorbs.
TemporalQuantity product(const TemporalQuantity& a, const TemporalQuantity& b,
                         const Semiring& sr = kCombinatorial);

/// Running totals: each interval's start holds until the next start, the
/// last one until horizon.end(). Throws std::invalid_argument for a
/// non-numeric semiring or an interval starting after horizon.last.
TemporalQuantity cumulate(const TemporalQuantity& a, const TimeHorizon& horizon,
                          const Semiring& sr = kCombinatorial);

/// Activity is an up-set of [first, last + 1) and values never decrease.
bool is_cumulative(const TemporalQuantity& a, const TimeHorizon& horizon);

/// Keeps the stretches whose value is > threshold (strict) or >= threshold.
TemporalQuantity cut(const TemporalQuantity& a, Value threshold, bool strict);
inline TemporalQuantity cut_gt(const TemporalQuantity& a, Value threshold) {
  return cut(a, threshold, true);
}
inline TemporalQuantity cut_ge(const TemporalQuantity& a, Value threshold) {
  return cut(a, threshold, false);
}

/// Pools a quantity into bands [p_i, p_{i+1}); band i (1-based) becomes the
/// interval [i, i+1) holding the sum of a over its instants. Throws
/// std::invalid_argument if `breaks` is not strictly ascending or a
/// interval of `a` leaves [breaks.front(), breaks.back()).
TemporalQuantity change_time(const TemporalQuantity& a,
                             std::span<const Time> breaks);

/// Sum of value * length over all intervals.
Value total(const TemporalQuantity& a);

/// (first start, last finish, min value, max value); nullopt for empty.
std::optional<QuantitySummary> summarize(const TemporalQuantity& a);

/// Fills every undefined instant of the horizon with zero.
TemporalQuantity pad_with_zero(const TemporalQuantity& a,
                               const TimeHorizon& horizon);

/// Segmentation-insensitive comparison: same activity set and values within
/// `tol` at every instant.
bool equivalent(const TemporalQuantity& a, const TemporalQuantity& b,
                Value tol);

}  // namespace tqnet
