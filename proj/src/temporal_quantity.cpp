#include "tqnet/temporal_quantity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace tqnet {

namespace {

constexpr Time kNever = std::numeric_limits<Time>::max();

std::string describe(const Interval& iv) {
  return "(" + std::to_string(iv.start) + ", " + std::to_string(iv.finish) +
         ", " + std::to_string(iv.value) + ")";
}

void require_numeric(const Semiring& sr, const char* op) {
  if (!sr.is_numeric()) {
    throw std::invalid_argument(std::string(op) +
                                ": requires the combinatorial semiring, got " +
                                std::string(sr.name));
  }
}

// Walks the elementary segments of T_a u T_b in order and lets `pick`
// decide the value of each one (nullopt = undefined).
template <class Pick>
TemporalQuantity combine(const TemporalQuantity& a, const TemporalQuantity& b,
                         Pick pick) {
  QuantityBuilder out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  Time t = std::numeric_limits<Time>::min();
  while (true) {
    while (i < a.size() && a[i].finish <= t) ++i;
    while (j < b.size() && b[j].finish <= t) ++j;
    if (i == a.size() && j == b.size()) break;

    const Time a_from = i < a.size() ? std::max(a[i].start, t) : kNever;
    const Time b_from = j < b.size() ? std::max(b[j].start, t) : kNever;
    const Time from = std::min(a_from, b_from);
    const bool in_a = a_from == from;
    const bool in_b = b_from == from;

    Time to = kNever;
    if (i < a.size()) to = std::min(to, in_a ? a[i].finish : a[i].start);
    if (j < b.size()) to = std::min(to, in_b ? b[j].finish : b[j].start);

    std::optional<Value> v = pick(in_a ? std::optional<Value>(a[i].value)
                                       : std::nullopt,
                                  in_b ? std::optional<Value>(b[j].value)
                                       : std::nullopt);
    if (v) out.append(from, to, *v);
    t = to;
  }
  return std::move(out).build();
}

}  // namespace

TimeHorizon::TimeHorizon(Time first_year, Time last_year)
    : first(first_year), last(last_year) {
  if (first > last) {
    throw std::invalid_argument("time horizon: first " + std::to_string(first) +
                                " > last " + std::to_string(last));
  }
}

TemporalQuantity::TemporalQuantity(std::vector<Interval> intervals) {
  QuantityBuilder b;
  b.reserve(intervals.size());
  const Interval* prev = nullptr;
  for (const Interval& iv : intervals) {
    if (iv.start >= iv.finish) {
      throw std::invalid_argument("temporal quantity: empty interval " +
                                  describe(iv));
    }
    if (std::isnan(iv.value)) {
      throw std::invalid_argument("temporal quantity: NaN value in " +
                                  describe(iv));
    }
    if (prev != nullptr && prev->finish > iv.start) {
      throw std::invalid_argument("temporal quantity: " + describe(*prev) +
                                  " overlaps or precedes " + describe(iv));
    }
    b.append(iv.start, iv.finish, iv.value);
    prev = &iv;
  }
  intervals_ = std::move(std::move(b).build().intervals_);
}

TemporalQuantity::TemporalQuantity(std::initializer_list<Interval> intervals)
    : TemporalQuantity(std::vector<Interval>(intervals)) {}

TemporalQuantity TemporalQuantity::constant(const TimeHorizon& horizon,
                                            Value value) {
  return TemporalQuantity({{horizon.first, horizon.end(), value}});
}

TemporalQuantity TemporalQuantity::ones(const TimeHorizon& horizon,
                                        const Semiring& sr) {
  return constant(horizon, sr.one);
}

std::optional<Value> TemporalQuantity::at(Time t) const {
  auto it = std::upper_bound(
      intervals_.begin(), intervals_.end(), t,
      [](Time x, const Interval& iv) { return x < iv.start; });
  if (it == intervals_.begin()) return std::nullopt;
  --it;
  if (t < it->finish) return it->value;
  return std::nullopt;
}

void QuantityBuilder::append(Time start, Time finish, Value value) {
  if (!out_.empty()) {
    Interval& last = out_.back();
    if (last.finish == start && last.value == value) {
      last.finish = finish;
      return;
    }
  }
  out_.push_back({start, finish, value});
}

TemporalQuantity QuantityBuilder::build() && {
  return TemporalQuantity(TemporalQuantity::Trusted{}, std::move(out_));
}

TemporalQuantity sum(const TemporalQuantity& a, const TemporalQuantity& b,
                     const Semiring& sr) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return combine(a, b,
                 [&sr](std::optional<Value> x,
                       std::optional<Value> y) -> std::optional<Value> {
                   if (x && y) return sr.add(*x, *y);
                   return x ? x : y;
                 });
}

TemporalQuantity product(const TemporalQuantity& a, const TemporalQuantity& b,
                         const Semiring& sr) {
  if (a.empty() || b.empty()) return {};
  return combine(a, b,
                 [&sr](std::optional<Value> x,
                       std::optional<Value> y) -> std::optional<Value> {
                   if (x && y) return sr.mul(*x, *y);
                   return std::nullopt;
                 });
}

TemporalQuantity cumulate(const TemporalQuantity& a, const TimeHorizon& horizon,
                          const Semiring& sr) {
  require_numeric(sr, "cumulate");
  QuantityBuilder out;
  out.reserve(a.size());
  Value running = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].start > horizon.last) {
      throw std::invalid_argument("cumulate: interval " + describe(a[i]) +
                                  " starts after horizon last " +
                                  std::to_string(horizon.last));
    }
    running += a[i].value;
    const Time next = i + 1 < a.size() ? a[i + 1].start : horizon.end();
    out.append(a[i].start, next, running);
  }
  return std::move(out).build();
}

bool is_cumulative(const TemporalQuantity& a, const TimeHorizon& horizon) {
  if (a.empty()) return true;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    if (a[i].finish != a[i + 1].start) return false;
    if (a[i + 1].value < a[i].value) return false;
  }
  return a[a.size() - 1].finish >= horizon.end();
}

TemporalQuantity cut(const TemporalQuantity& a, Value threshold, bool strict) {
  QuantityBuilder out;
  for (const Interval& iv : a) {
    const bool keep = strict ? iv.value > threshold : iv.value >= threshold;
    if (keep) out.append(iv.start, iv.finish, iv.value);
  }
  return std::move(out).build();
}

TemporalQuantity change_time(const TemporalQuantity& a,
                             std::span<const Time> breaks) {
  if (breaks.size() < 2) {
    throw std::invalid_argument("change_time: need at least two breakpoints");
  }
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    if (breaks[k] >= breaks[k + 1]) {
      throw std::invalid_argument("change_time: breakpoints not ascending at " +
                                  std::to_string(breaks[k + 1]));
    }
  }
  if (a.empty()) return {};
  if (a[0].start < breaks.front() || a[a.size() - 1].finish > breaks.back()) {
    throw std::invalid_argument(
        "change_time: quantity spans [" + std::to_string(a[0].start) + ", " +
        std::to_string(a[a.size() - 1].finish) + ") outside breakpoints [" +
        std::to_string(breaks.front()) + ", " + std::to_string(breaks.back()) +
        ")");
  }

  QuantityBuilder out;
  std::size_t i = 0;
  for (std::size_t band = 0; band + 1 < breaks.size(); ++band) {
    const Time lo = breaks[band];
    const Time hi = breaks[band + 1];
    Value acc = 0.0;
    bool defined = false;
    while (i < a.size() && a[i].finish <= lo) ++i;
    for (std::size_t k = i; k < a.size() && a[k].start < hi; ++k) {
      const Time overlap = std::min(hi, a[k].finish) - std::max(lo, a[k].start);
      if (overlap > 0) {
        acc += a[k].value * static_cast<Value>(overlap);
        defined = true;
      }
    }
    if (defined) {
      const auto index = static_cast<Time>(band + 1);
      out.append(index, index + 1, acc);
    }
  }
  return std::move(out).build();
}

Value total(const TemporalQuantity& a) {
  Value acc = 0.0;
  for (const Interval& iv : a) acc += iv.value * static_cast<Value>(iv.length());
  return acc;
}

std::optional<QuantitySummary> summarize(const TemporalQuantity& a) {
  if (a.empty()) return std::nullopt;
  QuantitySummary s{a[0].start, a[a.size() - 1].finish, a[0].value, a[0].value};
  for (const Interval& iv : a) {
    s.min_value = std::min(s.min_value, iv.value);
    s.max_value = std::max(s.max_value, iv.value);
  }
  return s;
}

TemporalQuantity pad_with_zero(const TemporalQuantity& a,
                               const TimeHorizon& horizon) {
  return sum(a, TemporalQuantity::constant(horizon, 0.0));
}

bool equivalent(const TemporalQuantity& a, const TemporalQuantity& b,
                Value tol) {
  bool same = true;
  combine(a, b,
          [&](std::optional<Value> x,
              std::optional<Value> y) -> std::optional<Value> {
            if (x.has_value() != y.has_value() ||
                (x && !Semiring::equal(*x, *y, tol))) {
              same = false;
            }
            return std::nullopt;
          });
  return same;
}

}  // namespace tqnet
