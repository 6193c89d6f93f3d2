#pragma once

// Backward coverability for vector addition systems.
//
// Starting from X0 = ↑{target}, the saturation X_{k+1} = X_k ∪ ⋃_t pre(X_k, t)
// is an ascending chain of upward-closed subsets of N0^m. Such chains are
// finite, so the loop reaches a fixpoint on every input; the fixpoint is
// the set of markings from which the target can be covered.

#include "wpo/dickson.hpp"
#include "wpo/upset.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace wpo {

struct Transition {
  std::string name;
  NatVec consume; // required and removed
  NatVec produce; // added

  IntVec effect() const; // produce - consume
};

class Vas {
public:
  explicit Vas(std::size_t places);

  std::size_t places() const { return places_; }
  const std::vector<Transition>& transitions() const { return transitions_; }

  // Throws DimensionMismatch on a wrong arity, UsageError on components
  // whose effect does not fit a Delta.
  void add(Transition t);

  bool enabled(const Transition& t, const NatVec& marking) const;
  NatVec fire(const Transition& t, const NatVec& marking) const;

private:
  std::size_t places_;
  std::vector<Transition> transitions_;
};

struct CoverQuery {
  Vas net;
  NatVec initial;
  NatVec target;

  void validate() const;
};

// Minimal markings from which firing t lands in X: firing from x needs
// x >= consume and yields x - consume + produce, so the least x whose
// successor dominates g is join(monus(g, produce - consume), consume).
DicksonUpSet pre_step(const DicksonUpSet& X, const Transition& t);

struct CoverOptions {
  // Abort with SaturationLimitExceeded beyond this many basis elements.
  std::size_t max_basis = 1'000'000;
  // Abort beyond this many growing rounds; unlimited when empty.
  std::optional<std::size_t> max_iterations;
  // Compute the per-transition pre-images of a round concurrently.
  bool parallel = false;
  // Observes X_k for k = 0, 1, ... up to and including the fixpoint.
  std::function<void(std::size_t, const DicksonUpSet&)> on_round;
};

struct CoverResult {
  bool coverable = false;
  DicksonUpSet basis;         // minimal elements of the fixpoint
  std::size_t iterations = 0; // rounds that strictly enlarged the set
};

CoverResult backward_cover(const CoverQuery& q, const CoverOptions& opts = {});

// Breadth-first forward search over markings <= bound. Successors are
// tested against the target before pruning, so a true answer is always
// sound; a false answer only speaks for paths that stay within bound.
bool forward_cover_oracle(const CoverQuery& q, const NatVec& bound);

} // namespace wpo
