// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include "wpo/coverability.hpp"
#include "wpo/kernels.hpp"
#include "wpo/order.hpp"
#include "wpo/transport.hpp"
#include "wpo/upset.hpp"
#include "wpo/words.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>

using namespace wpo;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* name, double limit_s,
            const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o = body();
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  const bool in_time = limit_s <= 0 || secs < limit_s;
  const bool pass = o.ok && in_time;
  if (!pass)
    ++failures;
  std::printf("%s %d %s: %s; %.2f s", pass ? "PASS" : "FAIL", id, name,
              o.detail.c_str(), secs);
  if (limit_s > 0)
    std::printf(" (limit %.0f s)", limit_s);
  std::printf("\n");
  std::fflush(stdout);
}

std::string count(const char* what, std::size_t n) {
  return std::to_string(n) + " " + what;
}

bool emb(const Word& a, const Word& b) { return oracle::recursive_leq_e(a, b); }

Word cat(Letter a, const Word& y) {
  std::vector<Letter> l{a};
  l.insert(l.end(), y.letters().begin(), y.letters().end());
  return Word(y.alphabet_size(), std::move(l));
}

WordUpSet random_word_upset(std::mt19937_64& rng, std::size_t max_len,
                            std::size_t min_len = 0) {
  std::uniform_int_distribution<std::size_t> n(1, 4);
  std::vector<Word> raw(n(rng));
  for (auto& w : raw)
    w = oracle::random_word(rng, 2, max_len, min_len);
  return WordUpSet::normalize(std::move(raw));
}

// 1. Greedy embedding against the recursive definition.
Outcome embedding_oracle() {
  const auto words = all_words(2, 8);
  std::size_t pairs = 0, mismatches = 0;
  for (const Word& u : words)
    for (const Word& v : words) {
      ++pairs;
      mismatches += leq_e(u, v) != emb(u, v);
    }
  return {mismatches == 0 && pairs == 261121,
          count("pairs", pairs) + ", " + count("mismatches", mismatches) +
              ", kernels " + kernels::active().name};
}

// 2. The worked subsequence example.
Outcome subsequence_example() {
  const Alphabet abc("abc");
  auto w = [&](std::string_view s) {
    std::vector<Letter> l;
    for (char c : s)
      l.push_back(*abc.find(c));
    return Word(3, std::move(l));
  };
  const bool fwd = leq_e(w("aabbca"), w("abababcac"));
  const bool back = leq_e(w("abababcac"), w("aabbca"));
  return {fwd && !back, std::string("aabbca<=abababcac ") + (fwd ? "true" : "false") +
                            ", reverse " + (back ? "true" : "false")};
}

// 3. Upset algebra against set semantics on bounded universes.
Outcome upset_semantics() {
  std::mt19937_64 rng(2024);
  std::size_t mismatches = 0, checks = 0;
  const auto cube = box(3, 4);
  auto leq = [](const NatVec& a, const NatVec& b) {
    return oracle::componentwise_leq(a, b);
  };
  for (int trial = 0; trial < 500; ++trial) {
    const auto rx = oracle::random_vectors(rng, 3, 4, 4);
    const auto ry = oracle::random_vectors(rng, 3, 4, 4);
    const auto X = DicksonUpSet::normalize(rx);
    const auto Y = DicksonUpSet::normalize(ry);
    const auto cx = oracle::characteristic(cube, rx, leq);
    const auto cy = oracle::characteristic(cube, ry, leq);
    const auto U = unite(X, Y);
    const auto I = intersect(X, Y);
    bool subset = true;
    for (std::size_t i = 0; i < cube.size(); ++i) {
      checks += 3;
      mismatches += member(cube[i], X) != cx[i];
      mismatches += member(cube[i], U) != (cx[i] || cy[i]);
      mismatches += member(cube[i], I) != (cx[i] && cy[i]);
      subset = subset && (!cx[i] || cy[i]);
    }
    ++checks;
    mismatches += includes(Y, X) != subset;
  }

  const auto words = all_words(2, 5);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Word> rx = oracle::random_words(rng, 2, 5, 4, 1);
    std::vector<Word> ry = oracle::random_words(rng, 2, 5, 4, 1);
    const auto X = WordUpSet::normalize(rx);
    const auto Y = WordUpSet::normalize(ry);
    const auto cx = oracle::characteristic(words, rx, emb);
    const auto cy = oracle::characteristic(words, ry, emb);
    const auto U = unite(X, Y);
    const Letter a = static_cast<Letter>(trial % 2);
    const auto Q = quotient(a, X);
    bool subset = true;
    for (std::size_t i = 0; i < words.size(); ++i) {
      checks += 3;
      mismatches += member(words[i], X) != cx[i];
      mismatches += member(words[i], U) != (cx[i] || cy[i]);
      mismatches += member(words[i], Q) != oracle::raw_member(cat(a, words[i]), rx, emb);
      subset = subset && (!cx[i] || cy[i]);
    }
    ++checks;
    mismatches += includes(Y, X) != subset;
  }
  return {mismatches == 0, count("checks", checks) + ", " + count("mismatches", mismatches)};
}

// 4. The three quotient lemma items.
Outcome quotient_lemma() {
  std::mt19937_64 rng(77);
  const auto words = all_words(2, 5);
  std::size_t violations = 0, premises = 0;

  for (int trial = 0; trial < 1000; ++trial) {
    const auto X = random_word_upset(rng, 5);
    for (Letter a = 0; a < 2; ++a)
      violations += !includes(quotient(a, X), X);
  }

  std::size_t proper = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto X = random_word_upset(rng, 5);
    for (Letter a : som(X)) {
      ++proper;
      const auto Q = quotient(a, X);
      bool witness = false;
      for (const Word& y : words)
        witness = witness || (oracle::raw_member(cat(a, y), X.generators(), emb) &&
                              !oracle::raw_member(y, X.generators(), emb));
      violations += !witness || !includes(Q, X) || includes(X, Q);
    }
  }

  for (int trial = 0; trial < 1000; ++trial) {
    const auto X = random_word_upset(rng, 5, 1);
    // Half the partners are built to satisfy the premise often.
    WordUpSet Y = random_word_upset(rng, 5);
    if (trial % 2 == 0)
      Y = unite(WordUpSet::normalize({X.generators().front()}), Y);
    bool premise = !member(Word(2, {}), X);
    for (Letter b : som(X))
      premise = premise && includes(quotient(b, Y), quotient(b, X));
    if (!premise)
      continue;
    ++premises;
    bool brute = true;
    for (const Word& w : words)
      brute = brute && (!oracle::raw_member(w, X.generators(), emb) ||
                        oracle::raw_member(w, Y.generators(), emb));
    violations += !includes(Y, X) || !brute;
  }
  return {violations == 0 && premises > 0,
          "3000 instances, " + count("proper-inclusion cases", proper) + ", " +
              count("premise-holding pairs", premises) + ", " +
              count("violations", violations)};
}

// Smallest c with (a, c) in the raw closure, by scanning.
ExtendedNat scan_slice(const std::vector<NatVec>& raw, const NatVec& a, Count limit) {
  for (Count c = 0; c <= limit; ++c) {
    NatVec x(a.dim() + 1);
    for (std::size_t i = 0; i < a.dim(); ++i)
      x[i] = a[i];
    x[a.dim()] = c;
    if (oracle::raw_member(x, raw, oracle::componentwise_leq))
      return ExtendedNat(c);
  }
  return ExtendedNat::infinity();
}

// 5. The slice function: scan agreement, antitonicity, inclusion criterion.
Outcome slice_suite() {
  std::mt19937_64 rng(909);
  std::size_t violations = 0, pairs = 0, included = 0;
  for (std::size_t m : {2u, 3u}) {
    const auto prefixes = box(m - 1, 5);
    for (int trial = 0; trial < 200; ++trial) {
      const auto rf = oracle::random_vectors(rng, m, 4, 3, 1);
      auto rg = oracle::random_vectors(rng, m, 4, 3, 1);
      if (trial % 3 == 0)
        rg.push_back(rf.front());
      const auto F = DicksonUpSet::normalize(rf);
      const auto G = DicksonUpSet::normalize(rg);
      ++pairs;
      std::vector<ExtendedNat> pf, pg;
      for (const auto& a : prefixes) {
        pf.push_back(phi_slice(F, a));
        pg.push_back(phi_slice(G, a));
        violations += pf.back() != scan_slice(rf, a, 5);
        violations += pg.back() != scan_slice(rg, a, 5);
      }
      for (std::size_t i = 0; i < prefixes.size(); ++i)
        for (std::size_t j = 0; j < prefixes.size(); ++j)
          if (oracle::componentwise_leq(prefixes[i], prefixes[j]))
            violations += pf[i] < pf[j];
      bool pointwise = true;
      for (std::size_t i = 0; i < prefixes.size(); ++i)
        pointwise = pointwise && pf[i] >= pg[i];
      included += includes(G, F);
      violations += includes(G, F) != pointwise;
    }
  }
  return {violations == 0, count("upset pairs", pairs) + " (" +
                               count("included", included) + "), " +
                               count("violations", violations)};
}

// 6. Quasi-embeddings and upset transport.
Outcome transport_suite() {
  std::size_t violations = 0, pairs = 0;
  const auto d2w = dickson_to_word_embedding();
  const auto w2l = word_to_labeled_embedding();
  const auto cube = box(3, 4);
  const auto words = all_words(2, 5);

  const auto q1 = check_quasi_embedding(d2w, std::span<const NatVec>(cube));
  const auto q2 = check_quasi_embedding(w2l, std::span<const Word>(words));
  const auto mono = check_monotone(d2w, std::span<const NatVec>(cube));
  violations += !q1.ok + !q2.ok + !mono.ok;
  pairs += q1.pairs_checked + q2.pairs_checked + mono.pairs_checked;

  // Independent re-check of the word map against the definitional order.
  for (const Word& u : words)
    for (const Word& v : words) {
      const LabeledWord fu = word_to_labeled(u), fv = word_to_labeled(v);
      const bool image = fu.support == fv.support && emb(fu.word, fv.word);
      violations += image && !oracle::definitional_leq_E(u, v);
    }

  std::mt19937_64 rng(31337);
  std::size_t reflected = 0;
  for (int trial = 0; trial < 500; ++trial) {
    auto rx = oracle::random_vectors(rng, 3, 4, 4, 1);
    auto ry = oracle::random_vectors(rng, 3, 4, 4);
    if (trial % 2 == 0)
      ry.push_back(rx.front());
    const auto X = DicksonUpSet::normalize(rx), Y = DicksonUpSet::normalize(ry);
    if (includes(transport_upset(d2w, Y), transport_upset(d2w, X))) {
      ++reflected;
      violations += !includes(Y, X);
    }
  }
  for (int trial = 0; trial < 500; ++trial) {
    auto rx = oracle::random_words(rng, 2, 4, 4, 1);
    auto ry = oracle::random_words(rng, 2, 4, 4);
    if (trial % 2 == 0)
      ry.push_back(rx.front());
    const auto X = SupportUpSet::normalize(rx), Y = SupportUpSet::normalize(ry);
    if (includes(transport_upset(w2l, Y), transport_upset(w2l, X))) {
      ++reflected;
      violations += !includes(Y, X);
    }
  }
  return {violations == 0, count("pairs", pairs) + ", 1000 transported pairs (" +
                               count("with image inclusion", reflected) + "), " +
                               count("violations", violations)};
}

// 7. Backward coverability against bounded forward search.
Outcome coverability_suite() {
  std::size_t compared = 0, mismatches = 0, runs = 0, positive = 0;
  bool worked = false;
  {
    Vas net(2);
    net.add({"t1", NatVec{1, 0}, NatVec{0, 1}});
    const auto r = backward_cover({net, NatVec{2, 0}, NatVec{0, 2}});
    worked = r.coverable &&
             r.basis == DicksonUpSet::normalize({{0, 2}, {1, 1}, {2, 0}});
  }

  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<std::size_t> places(1, 3), ntrans(0, 3);
  std::uniform_int_distribution<Count> entry(0, 2);
  CoverOptions opts;
  opts.max_iterations = 10'000;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = places(rng);
    auto vec = [&] {
      NatVec v(m);
      for (std::size_t i = 0; i < m; ++i)
        v[i] = entry(rng);
      return v;
    };
    Vas net(m);
    const std::size_t k = ntrans(rng);
    for (std::size_t t = 0; t < k; ++t)
      net.add({"t" + std::to_string(t), vec(), vec()});
    const CoverQuery q{net, vec(), vec()};
    const auto r = backward_cover(q, opts);
    ++runs;
    const NatVec bound(std::vector<Count>(m, 6));
    bool dominated = true;
    for (const auto& g : r.basis.generators())
      dominated = dominated && oracle::componentwise_leq(g, bound);
    if (!dominated)
      continue;
    ++compared;
    positive += r.coverable;
    mismatches += r.coverable != forward_cover_oracle(q, bound);
  }
  return {worked && mismatches == 0 && runs == 300,
          std::string("worked example ") + (worked ? "ok" : "WRONG") + ", " +
              count("runs terminated", runs) + ", " + count("compared", compared) +
              " (" + count("coverable", positive) + "), " +
              count("mismatches", mismatches)};
}

// 8. Monotone subsequences and good pairs.
Outcome sequence_suite() {
  std::mt19937_64 rng(8);
  std::size_t violations = 0;
  for (std::size_t k : {3u, 4u}) {
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<std::uint64_t> seq((k - 1) * (k - 1) + 1);
      std::iota(seq.begin(), seq.end(), 0);
      std::shuffle(seq.begin(), seq.end(), rng);
      const auto h = homogeneous_subsequence(std::span<const std::uint64_t>(seq), k,
                                             NaturalOrder{});
      violations += !h || !verify_homogeneous(std::span<const std::uint64_t>(seq), *h,
                                              NaturalOrder{}) ||
                    (h->kind != Homogeneity::Ascending &&
                     h->kind != Homogeneity::Descending);
    }
  }
  std::size_t good = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto seq = oracle::random_vectors(rng, 1 + trial % 3, 5, 10);
    std::optional<GoodPair> first;
    for (std::size_t j = 0; j < seq.size() && !first; ++j)
      for (std::size_t i = 0; i < j && !first; ++i)
        if (oracle::componentwise_leq(seq[i], seq[j]))
          first = GoodPair{i, j};
    // The library's tie-break is the smallest (i, j); recompute it.
    std::optional<GoodPair> smallest;
    for (std::size_t i = 0; i < seq.size() && !smallest; ++i)
      for (std::size_t j = i + 1; j < seq.size() && !smallest; ++j)
        if (oracle::componentwise_leq(seq[i], seq[j]))
          smallest = GoodPair{i, j};
    const auto v = find_good_pair(std::span<const NatVec>(seq), DicksonOrder{});
    good += !v.bad();
    violations += v.bad() != !first.has_value();
    violations += v.good_pair != smallest;
  }
  return {violations == 0, "400 permutations, 1000 Dickson sequences (" +
                               count("good", good) + "), " +
                               count("violations", violations)};
}

} // namespace

int main() {
  report(1, "embedding-oracle", 30, embedding_oracle);
  report(2, "subsequence-example", 1, subsequence_example);
  report(3, "upset-semantics", 60, upset_semantics);
  report(4, "quotient-lemma", 30, quotient_lemma);
  report(5, "slice-function", 0, slice_suite);
  report(6, "quasi-embeddings", 60, transport_suite);
  report(7, "coverability", 60, coverability_suite);
  report(8, "sequences", 0, sequence_suite);
  return failures == 0 ? 0 : 1;
}
