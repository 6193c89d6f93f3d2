#include "wpo/coverability.hpp"

#include "wpo/errors.hpp"

#include <deque>
#include <future>
#include <limits>
#include <set>

namespace wpo {

IntVec Transition::effect() const {
  if (consume.dim() != produce.dim())
    throw DimensionMismatch(consume.dim(), produce.dim());
  IntVec d(consume.dim());
  for (std::size_t i = 0; i < d.size(); ++i)
    d[i] = static_cast<Delta>(static_cast<std::int64_t>(produce[i]) -
                              static_cast<std::int64_t>(consume[i]));
  return d;
}

Vas::Vas(std::size_t places) : places_(places) {
  if (places_ == 0)
    throw UsageError("a net needs at least one place");
}

void Vas::add(Transition t) {
  if (t.consume.dim() != places_)
    throw DimensionMismatch(places_, t.consume.dim());
  if (t.produce.dim() != places_)
    throw DimensionMismatch(places_, t.produce.dim());
  constexpr Count limit = std::numeric_limits<Delta>::max();
  for (std::size_t i = 0; i < places_; ++i)
    if (t.consume[i] > limit || t.produce[i] > limit)
      throw UsageError("transition " + t.name + ": arc weight exceeds " +
                       std::to_string(limit));
  transitions_.push_back(std::move(t));
}

bool Vas::enabled(const Transition& t, const NatVec& marking) const {
  return leq(t.consume, marking);
}

NatVec Vas::fire(const Transition& t, const NatVec& marking) const {
  const IntVec d = t.effect();
  IntVec neg(d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    neg[i] = -d[i];
  return monus(marking, neg);
}

void CoverQuery::validate() const {
  if (initial.dim() != net.places())
    throw DimensionMismatch(net.places(), initial.dim());
  if (target.dim() != net.places())
    throw DimensionMismatch(net.places(), target.dim());
}

DicksonUpSet pre_step(const DicksonUpSet& X, const Transition& t) {
  const IntVec d = t.effect();
  std::vector<NatVec> raw;
  raw.reserve(X.size());
  for (const NatVec& g : X.generators())
    raw.push_back(join(monus(g, d), t.consume));
  return DicksonUpSet::normalize(std::move(raw));
}

CoverResult backward_cover(const CoverQuery& q, const CoverOptions& opts) {
  q.validate();
  const auto& ts = q.net.transitions();

  DicksonUpSet current = DicksonUpSet::normalize({q.target});
  std::size_t rounds = 0;
  if (opts.on_round)
    opts.on_round(0, current);

  while (true) {
    std::vector<DicksonUpSet> pre(ts.size());
    if (opts.parallel && ts.size() > 1) {
      std::vector<std::future<DicksonUpSet>> jobs;
      jobs.reserve(ts.size());
      for (const Transition& t : ts)
        jobs.push_back(std::async(std::launch::async,
                                  [&current, &t] { return pre_step(current, t); }));
      for (std::size_t i = 0; i < ts.size(); ++i)
        pre[i] = jobs[i].get();
    } else {
      for (std::size_t i = 0; i < ts.size(); ++i)
        pre[i] = pre_step(current, ts[i]);
    }

    DicksonUpSet next = current;
    for (const DicksonUpSet& p : pre)
      next = unite(next, p);
    if (next == current)
      break;

    ++rounds;
    if (next.size() > opts.max_basis)
      throw SaturationLimitExceeded(
          "backward saturation exceeded " + std::to_string(opts.max_basis) +
          " basis elements after " + std::to_string(rounds) + " rounds");
    if (opts.max_iterations && rounds > *opts.max_iterations)
      throw SaturationLimitExceeded("backward saturation exceeded " +
                                    std::to_string(*opts.max_iterations) +
                                    " rounds");
    current = std::move(next);
    if (opts.on_round)
      opts.on_round(rounds, current);
  }

  CoverResult out;
  out.coverable = member(q.initial, current);
  out.basis = std::move(current);
  out.iterations = rounds;
  return out;
}

bool forward_cover_oracle(const CoverQuery& q, const NatVec& bound) {
  q.validate();
  if (!leq(q.initial, bound))
    throw UsageError("oracle bound " + to_string(bound) +
                     " does not dominate initial marking " +
                     to_string(q.initial));
  if (leq(q.target, q.initial))
    return true;

  std::set<NatVec> seen{q.initial};
  std::deque<NatVec> queue{q.initial};
  while (!queue.empty()) {
    const NatVec x = std::move(queue.front());
    queue.pop_front();
    for (const Transition& t : q.net.transitions()) {
      if (!q.net.enabled(t, x))
        continue;
      NatVec y = q.net.fire(t, x);
      if (leq(q.target, y))
        return true;
      if (leq(y, bound) && seen.insert(y).second)
        queue.push_back(std::move(y));
    }
  }
  return false;
}

} // namespace wpo
