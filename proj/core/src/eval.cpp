#include "mtlog/eval.hpp"

#include <algorithm>
#include <cassert>

#include "mtlog/errors.hpp"

namespace mtlog {
namespace {

// Finite reach of the formula's quantifiers; infinite delta ends contribute
// only their finite side since the tail is handled by horizon probes.
TimePoint radius(const MetricAtom& m) {
  switch (m.kind()) {
    case MetricAtom::Kind::Top:
    case MetricAtom::Kind::Bottom:
    case MetricAtom::Kind::Rel:
      return 0;
    case MetricAtom::Kind::Since:
    case MetricAtom::Kind::Until: {
      const Interval& d = m.delta();
      TimePoint reach = d.hi().is_finite() ? d.hi().value() : d.lo().value();
      return reach + 1 + std::max(radius(m.lhs()), radius(m.rhs()));
    }
    default: {
      const Interval& d = m.delta();
      TimePoint reach = d.hi().is_finite() ? d.hi().value() : d.lo().value();
      return reach + 1 + radius(m.child());
    }
  }
}

class PointwiseEvaluator {
public:
  PointwiseEvaluator(const Interpretation& i, const MetricAtom& m, TimePoint t) : interp_(i) {
    TimePoint lo = t;
    TimePoint hi = t;
    if (auto p = i.min_finite_endpoint()) lo = std::min(lo, *p);
    if (auto p = i.max_finite_endpoint()) hi = std::max(hi, *p);
    TimePoint r = radius(m) + 2;
    h_lo_ = lo - r;
    h_hi_ = hi + r;
  }

  bool eval(const MetricAtom& m, TimePoint t) const {
    switch (m.kind()) {
      case MetricAtom::Kind::Top:
        return true;
      case MetricAtom::Kind::Bottom:
        return false;
      case MetricAtom::Kind::Rel:
        return interp_.holds_at(to_ground(m.atom()), t);
      case MetricAtom::Kind::DiamondMinus:
        return exists(past_range(t, m.delta()), m.child());
      case MetricAtom::Kind::DiamondPlus:
        return exists(future_range(t, m.delta()), m.child());
      case MetricAtom::Kind::BoxMinus:
        return forall(past_range(t, m.delta()), m.child());
      case MetricAtom::Kind::BoxPlus:
        return forall(future_range(t, m.delta()), m.child());
      case MetricAtom::Kind::Since:
        return witness(past_range(t, m.delta()), m, t);
      case MetricAtom::Kind::Until:
        return witness(future_range(t, m.delta()), m, t);
    }
    return false;
  }

private:
  struct Range {
    TimeBound lo, hi;
  };

  // t' with t - t' in delta, i.e. t' in [t - d_hi, t - d_lo].
  static Range past_range(TimePoint t, const Interval& d) {
    TimeBound lo = d.hi().is_pos_inf() ? TimeBound::neg_inf() : TimeBound::finite(t - d.hi().value());
    return Range{lo, TimeBound::finite(t - d.lo().value())};
  }

  // t' with t' - t in delta, i.e. t' in [t + d_lo, t + d_hi].
  static Range future_range(TimePoint t, const Interval& d) {
    TimeBound hi = d.hi().is_pos_inf() ? TimeBound::pos_inf() : TimeBound::finite(t + d.hi().value());
    return Range{TimeBound::finite(t + d.lo().value()), hi};
  }

  // Enumerates candidate points of the range clipped to the horizon, keeping
  // one representative inside each constant tail.
  template <class Fn>
  bool scan(const Range& r, Fn&& hit) const {
    if (!(r.lo <= r.hi)) return false;
    TimePoint a = r.lo.is_finite() ? std::max(r.lo.value(), h_lo_ - 1) : h_lo_ - 1;
    TimePoint b = r.hi.is_finite() ? std::min(r.hi.value(), h_hi_ + 1) : h_hi_ + 1;
    if (b < a) {
      if (r.hi <= TimeBound::finite(h_lo_)) {
        a = b;  // range sits wholly in the lower tail
      } else {
        b = a;  // wholly in the upper tail
      }
    }
    for (TimePoint t = a; t <= b; ++t) {
      if (hit(t)) return true;
    }
    return false;
  }

  bool exists(const Range& r, const MetricAtom& child) const {
    return scan(r, [&](TimePoint t) { return eval(child, t); });
  }

  bool forall(const Range& r, const MetricAtom& child) const {
    return !scan(r, [&](TimePoint t) { return !eval(child, t); });
  }

  // Since/until witness: rhs at t', lhs on every integer strictly between
  // t' and t (an empty interior is vacuously fine).
  bool witness(const Range& r, const MetricAtom& m, TimePoint t) const {
    return scan(r, [&](TimePoint tp) {
      if (!eval(m.rhs(), tp)) return false;
      TimePoint lo = std::min(tp, t) + 1;
      TimePoint hi = std::max(tp, t) - 1;
      for (TimePoint u = lo; u <= hi; ++u) {
        if (!eval(m.lhs(), u)) return false;
      }
      return true;
    });
  }

  const Interpretation& interp_;
  TimePoint h_lo_ = 0;
  TimePoint h_hi_ = 0;
};

}  // namespace

bool eval2_at(const MetricAtom& m, const Interpretation& i, TimePoint t) {
  assert(m.ground());
  return PointwiseEvaluator(i, m, t).eval(m, t);
}

bool eval2_body_at(const Rule& rule, const Interpretation& i, TimePoint t) {
  for (const MetricAtom& m : rule.positive) {
    if (!eval2_at(m, i, t)) return false;
  }
  for (const MetricAtom& m : rule.negative) {
    if (eval2_at(m, i, t)) return false;
  }
  return true;
}

Truth3 eval3_at(const MetricAtom& m, const ThreeValuedInterpretation& j, TimePoint t) {
  bool lo = eval2_at(m, j.lo, t);
  bool hi = eval2_at(m, j.hi, t);
  assert(!(lo && !hi) && "consistency violation: true in lo but false in hi");
  return truth3_from_bools(lo, hi);
}

Truth3 eval3_literal_at(const MetricAtom& m, bool negated, const ThreeValuedInterpretation& j, TimePoint t) {
  Truth3 v = eval3_at(m, j, t);
  return negated ? truth3_negate(v) : v;
}

Truth3 eval3_body_at(const Rule& rule, const ThreeValuedInterpretation& j, TimePoint t) {
  Truth3 out = Truth3::True;
  for (const MetricAtom& m : rule.positive) out = truth3_meet(out, eval3_literal_at(m, false, j, t));
  for (const MetricAtom& m : rule.negative) out = truth3_meet(out, eval3_literal_at(m, true, j, t));
  return out;
}

IntervalSet eval2_set(const MetricAtom& m, const Interpretation& i) {
  assert(m.ground());
  switch (m.kind()) {
    case MetricAtom::Kind::Top:
      return IntervalSet::full();
    case MetricAtom::Kind::Bottom:
      return IntervalSet();
    case MetricAtom::Kind::Rel:
      return i.get(to_ground(m.atom()));
    case MetricAtom::Kind::DiamondMinus:
      return dilate_past(eval2_set(m.child(), i), m.delta());
    case MetricAtom::Kind::DiamondPlus:
      return dilate_future(eval2_set(m.child(), i), m.delta());
    case MetricAtom::Kind::BoxMinus:
      return erode_past(eval2_set(m.child(), i), m.delta());
    case MetricAtom::Kind::BoxPlus:
      return erode_future(eval2_set(m.child(), i), m.delta());
    case MetricAtom::Kind::Since:
      return since_set(eval2_set(m.lhs(), i), eval2_set(m.rhs(), i), m.delta());
    case MetricAtom::Kind::Until:
      return until_set(eval2_set(m.lhs(), i), eval2_set(m.rhs(), i), m.delta());
  }
  return IntervalSet();
}

IntervalSet eval2_body_set(const Rule& rule, const Interpretation& i) {
  IntervalSet out = IntervalSet::full();
  for (const MetricAtom& m : rule.positive) out = set_intersect(out, eval2_set(m, i));
  for (const MetricAtom& m : rule.negative) out = set_intersect(out, set_complement(eval2_set(m, i)));
  return out;
}

BodySets eval3_body_sets(const Rule& rule, const ThreeValuedInterpretation& j) {
  BodySets out{IntervalSet::full(), IntervalSet::full()};
  for (const MetricAtom& m : rule.positive) {
    out.true_set = set_intersect(out.true_set, eval2_set(m, j.lo));
    out.notfalse_set = set_intersect(out.notfalse_set, eval2_set(m, j.hi));
  }
  for (const MetricAtom& m : rule.negative) {
    out.true_set = set_intersect(out.true_set, set_complement(eval2_set(m, j.hi)));
    out.notfalse_set = set_intersect(out.notfalse_set, set_complement(eval2_set(m, j.lo)));
  }
  return out;
}

namespace {

void head_points_rec(const MetricAtom& head, TimePoint t,
                     std::set<std::pair<GroundAtom, TimePoint>>& out) {
  switch (head.kind()) {
    case MetricAtom::Kind::Top:
      return;
    case MetricAtom::Kind::Rel:
      out.emplace(to_ground(head.atom()), t);
      return;
    case MetricAtom::Kind::BoxMinus:
    case MetricAtom::Kind::BoxPlus: {
      const Interval& d = head.delta();
      if (!d.hi().is_finite()) {
        throw Error("head atom interval has an infinite endpoint: " + head.to_string());
      }
      TimePoint sign = head.kind() == MetricAtom::Kind::BoxMinus ? -1 : 1;
      for (TimePoint k = d.lo().value(); k <= d.hi().value(); ++k) {
        head_points_rec(head.child(), t + sign * k, out);
      }
      return;
    }
    default:
      assert(false && "not a head atom");
  }
}

}  // namespace

std::set<std::pair<GroundAtom, TimePoint>> head_points(const MetricAtom& head, TimePoint t) {
  assert(is_head_atom(head) && head.ground());
  std::set<std::pair<GroundAtom, TimePoint>> out;
  head_points_rec(head, t, out);
  return out;
}

std::vector<std::pair<GroundAtom, IntervalSet>> head_apply(const MetricAtom& head, const IntervalSet& s) {
  assert(is_head_atom(head) && head.ground());
  switch (head.kind()) {
    case MetricAtom::Kind::Top:
      return {};
    case MetricAtom::Kind::Rel:
      return {{to_ground(head.atom()), s}};
    case MetricAtom::Kind::BoxMinus:
      // Firing at any t in s forces the child at every t' with t - t' in delta.
      return head_apply(head.child(), dilate_future(s, head.delta()));
    default:
      return head_apply(head.child(), dilate_past(s, head.delta()));
  }
}

bool is_model2(const Interpretation& i, const Dataset& dataset, const std::vector<Rule>& ground_rules) {
  for (const Fact& f : dataset.facts) {
    if (!is_subset(IntervalSet(f.interval), i.get(f.atom))) return false;
  }
  for (const Rule& r : ground_rules) {
    if (!is_subset(eval2_body_set(r, i), eval2_set(r.head, i))) return false;
  }
  return true;
}

bool is_model3(const ThreeValuedInterpretation& j, const Dataset& dataset, const std::vector<Rule>& ground_rules) {
  for (const Fact& f : dataset.facts) {
    if (!is_subset(IntervalSet(f.interval), j.lo.get(f.atom))) return false;
  }
  for (const Rule& r : ground_rules) {
    BodySets body = eval3_body_sets(r, j);
    if (!is_subset(body.true_set, eval2_set(r.head, j.lo))) return false;
    if (!is_subset(body.notfalse_set, eval2_set(r.head, j.hi))) return false;
  }
  return true;
}

}  // namespace mtlog
