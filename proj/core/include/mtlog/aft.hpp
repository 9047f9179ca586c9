#pragma once

#include <concepts>
#include <functional>
#include <utility>

#include "mtlog/errors.hpp"

namespace mtlog::aft {

/// Complete-lattice interface: order, meet/join, bottom/top, decidable
/// equality. Nothing here assumes finiteness or distributivity; finite
/// ascending chains are a property of the instantiation.
template <class Lat>
concept Lattice = requires(const Lat& l, const typename Lat::Element& x, const typename Lat::Element& y) {
  typename Lat::Element;
  { l.leq(x, y) } -> std::convertible_to<bool>;
  { l.equal(x, y) } -> std::convertible_to<bool>;
  { l.join(x, y) } -> std::convertible_to<typename Lat::Element>;
  { l.meet(x, y) } -> std::convertible_to<typename Lat::Element>;
  { l.bottom() } -> std::convertible_to<typename Lat::Element>;
  { l.top() } -> std::convertible_to<typename Lat::Element>;
};

/// A pair (lo, hi) approximating every lattice element between its bounds.
template <class Lat>
struct Pair {
  typename Lat::Element lo;
  typename Lat::Element hi;
};

template <Lattice Lat>
bool consistent(const Lat& lat, const Pair<Lat>& p) {
  return lat.leq(p.lo, p.hi);
}

/// Precision order: tighter bounds are greater.
template <Lattice Lat>
bool leq_p(const Lat& lat, const Pair<Lat>& a, const Pair<Lat>& b) {
  return lat.leq(a.lo, b.lo) && lat.leq(b.hi, a.hi);
}

template <Lattice Lat>
bool equal_p(const Lat& lat, const Pair<Lat>& a, const Pair<Lat>& b) {
  return lat.equal(a.lo, b.lo) && lat.equal(a.hi, b.hi);
}

/// An operator on consistent pairs, exposed through its two components.
template <Lattice Lat>
struct Approximator {
  using Element = typename Lat::Element;
  std::function<Element(const Element&, const Element&)> a1;
  std::function<Element(const Element&, const Element&)> a2;

  Pair<Lat> operator()(const Pair<Lat>& p) const {
    // named so the first result unwinds cleanly if the second call throws
    Element lo = a1(p.lo, p.hi);
    Element hi = a2(p.lo, p.hi);
    return {std::move(lo), std::move(hi)};
  }

  /// Canonical approximator of a monotone operator: components apply the
  /// operator to the respective bound.
  static Approximator exact(std::function<Element(const Element&)> f) {
    auto lo = [f](const Element& x, const Element&) { return f(x); };
    auto hi = [f](const Element&, const Element& y) { return f(y); };
    return Approximator{lo, hi};
  }
};

/// Kleene iteration from a post-fixpoint seed (normally bottom); detection
/// is by lattice equality of consecutive iterates.
template <Lattice Lat, class F>
typename Lat::Element lfp(const Lat& lat, F&& f, typename Lat::Element start, int max_iters,
                          int* iterations = nullptr) {
  typename Lat::Element cur = std::move(start);
  for (int i = 0; i < max_iters; ++i) {
    typename Lat::Element next = f(cur);
    if (lat.equal(next, cur)) {
      if (iterations) *iterations = i + 1;
      return next;
    }
    cur = std::move(next);
  }
  throw NonTermination("no fixpoint after " + std::to_string(max_iters) + " iterations");
}

/// One stable-revision step: both components restart from bottom against the
/// frozen opposite bound.
template <Lattice Lat>
Pair<Lat> stable_revision(const Lat& lat, const Approximator<Lat>& a, const Pair<Lat>& p, int max_iters) {
  auto lo = lfp(
      lat, [&](const typename Lat::Element& x) { return a.a1(x, p.hi); }, lat.bottom(), max_iters);
  auto hi = lfp(
      lat, [&](const typename Lat::Element& y) { return a.a2(p.lo, y); }, lat.bottom(), max_iters);
  return Pair<Lat>{std::move(lo), std::move(hi)};
}

/// Precision-least fixpoint of the approximator, iterated from (bottom, top).
template <Lattice Lat>
Pair<Lat> kripke_kleene(const Lat& lat, const Approximator<Lat>& a, int max_iters, int* iterations = nullptr) {
  Pair<Lat> cur{lat.bottom(), lat.top()};
  for (int i = 0; i < max_iters; ++i) {
    Pair<Lat> next = a(cur);
    if (equal_p(lat, next, cur)) {
      if (iterations) *iterations = i + 1;
      return next;
    }
    cur = std::move(next);
  }
  throw NonTermination("Kripke-Kleene iteration did not stabilize after " + std::to_string(max_iters) +
                       " steps");
}

/// Precision-least fixpoint of stable revision, i.e. the precision-least
/// stable pair, iterated from (bottom, top).
template <Lattice Lat>
Pair<Lat> well_founded(const Lat& lat, const Approximator<Lat>& a, int max_iters, int* iterations = nullptr) {
  Pair<Lat> cur{lat.bottom(), lat.top()};
  for (int i = 0; i < max_iters; ++i) {
    Pair<Lat> next = stable_revision(lat, a, cur, max_iters);
    if (equal_p(lat, next, cur)) {
      if (iterations) *iterations = i + 1;
      return next;
    }
    cur = std::move(next);
  }
  throw NonTermination("well-founded iteration did not stabilize after " + std::to_string(max_iters) +
                       " steps");
}

}  // namespace mtlog::aft
