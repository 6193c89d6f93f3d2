#include "wpo/cli.hpp"

#include "wpo/coverability.hpp"
#include "wpo/errors.hpp"
#include "wpo/order.hpp"
#include "wpo/text.hpp"
#include "wpo/transport.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace wpo::cli {

namespace {

struct Settings {
  std::string alphabet;
  std::size_t dim = 0;
  std::size_t max_iterations = 0;
  std::string oracle_bound;
};

// An error already phrased for the user; maps to kUsage.
struct Failure {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Failure{"cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class F>
auto with_source(const std::string& source, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw Failure{source + ":" + e.what()};
  }
}

Alphabet alphabet_of(const Settings& s, const char* fallback) {
  try {
    return Alphabet(s.alphabet.empty() ? std::string(fallback) : s.alphabet);
  } catch (const UsageError& e) {
    throw Failure{std::string("--alphabet: ") + e.what()};
  }
}

NatVec vector_arg(const std::string& text, const char* what) {
  return with_source(what, [&] { return text::parse_natvec(text); });
}

Word word_arg(const std::string& text, const Alphabet& a, const char* what) {
  return with_source(what, [&] { return text::parse_word(text, a); });
}

void same_dim(const std::string& lhs, std::size_t dl, const std::string& rhs,
              std::size_t dr) {
  if (dl != dr)
    throw Failure{"dimension mismatch: " + lhs + " has dimension " +
                  std::to_string(dl) + ", " + rhs + " has dimension " +
                  std::to_string(dr)};
}

std::optional<std::size_t> dim_of(const DicksonUpSet& X) {
  if (X.empty())
    return std::nullopt;
  return X.generators().front().dim();
}

void same_dim(const std::string& lhs, const DicksonUpSet& x,
              const std::string& rhs, const DicksonUpSet& y) {
  const auto dx = dim_of(x);
  const auto dy = dim_of(y);
  if (dx && dy)
    same_dim(lhs, *dx, rhs, *dy);
}

int verdict(std::ostream& out, bool v) {
  out << (v ? "true" : "false") << '\n';
  return v ? kTrue : kFalse;
}

struct LoadedUpset {
  std::string path;
  text::UpsetBlock block;
};

LoadedUpset load_upset(const std::string& path) {
  const std::string body = read_file(path);
  return {path, with_source(path, [&] { return text::parse_upset_block(body); })};
}

DicksonUpSet as_dickson(const LoadedUpset& u) {
  return with_source(u.path, [&] { return text::to_dickson_upset(u.block); });
}

WordUpSet as_words(const LoadedUpset& u, const Alphabet& a) {
  return with_source(u.path, [&] { return text::to_word_upset(u.block, a); });
}

// ---- order ----------------------------------------------------------------

int order_words(const Settings& s, const std::string& u, const std::string& v,
                bool support_order, std::ostream& out) {
  const Alphabet a = alphabet_of(s, "abcdefghijklmnopqrstuvwxyz");
  const Word wu = word_arg(u, a, "<u>");
  const Word wv = word_arg(v, a, "<v>");
  return verdict(out, support_order ? leq_E(wu, wv) : leq_e(wu, wv));
}

int order_dickson(const std::string& a, const std::string& b,
                  std::ostream& out) {
  const NatVec va = vector_arg(a, "<a>");
  const NatVec vb = vector_arg(b, "<b>");
  same_dim(a, va.dim(), b, vb.dim());
  return verdict(out, leq(va, vb));
}

// ---- seq ------------------------------------------------------------------

template <class Fn>
int with_sequence(const Settings& s, const std::string& path, Fn&& fn) {
  const std::string body = read_file(path);
  const auto tokens = with_source(path, [&] { return text::tokenize(body); });
  const bool vectors = !tokens.empty() && text::looks_like_vector(tokens[0]);
  if (vectors) {
    std::vector<NatVec> seq;
    for (const auto& t : tokens) {
      seq.push_back(with_source(path, [&] {
        if (!text::looks_like_vector(t))
          throw ParseError("expected a vector, got '" + t.text + "'", t.line,
                           t.column);
        return text::parse_natvec(t.text, t.line, t.column);
      }));
      if (seq.back().dim() != seq.front().dim())
        throw Failure{path + ":" + std::to_string(t.line) + ":" +
                      std::to_string(t.column) + ": dimension mismatch: " +
                      to_string(seq.front()) + " vs " + t.text};
    }
    return fn(std::span<const NatVec>(seq), DicksonOrder{});
  }
  const Alphabet a = alphabet_of(s, "abcdefghijklmnopqrstuvwxyz");
  std::vector<Word> seq;
  for (const auto& t : tokens)
    seq.push_back(with_source(path, [&] {
      if (text::looks_like_vector(t))
        throw ParseError("expected a word, got '" + t.text + "'", t.line,
                         t.column);
      return text::parse_word(t.text, a, t.line, t.column);
    }));
  return fn(std::span<const Word>(seq), EmbeddingOrder{});
}

int seq_good_pair(const Settings& s, const std::string& path,
                  std::ostream& out) {
  return with_sequence(s, path, [&](auto seq, auto order) {
    const auto v = find_good_pair(seq, order);
    if (v.bad()) {
      out << "bad\n";
      return int{kFalse};
    }
    out << '(' << v.good_pair->i << ',' << v.good_pair->j << ")\n";
    return int{kTrue};
  });
}

int seq_homogeneous(const Settings& s, const std::string& path, std::size_t k,
                    std::ostream& out) {
  return with_sequence(s, path, [&](auto seq, auto order) {
    const auto h = homogeneous_subsequence(seq, k, order);
    if (!h) {
      out << "none\n";
      return int{kFalse};
    }
    out << to_string(h->kind) << " [";
    for (std::size_t i = 0; i < h->indices.size(); ++i)
      out << (i ? "," : "") << h->indices[i];
    out << "]\n";
    return int{kTrue};
  });
}

// ---- upset ----------------------------------------------------------------

bool dickson_pair(const LoadedUpset& x, const LoadedUpset& y) {
  if (x.block.dickson() && !y.block.items.empty() && !y.block.dickson())
    throw Failure{"carrier mismatch: " + x.path + " holds vectors, " + y.path +
                  " holds words"};
  if (y.block.dickson() && !x.block.items.empty() && !x.block.dickson())
    throw Failure{"carrier mismatch: " + x.path + " holds words, " + y.path +
                  " holds vectors"};
  return x.block.dickson() || y.block.dickson();
}

int upset_normalize(const Settings& s, const std::string& path,
                    std::ostream& out) {
  const auto u = load_upset(path);
  if (u.block.dickson())
    out << text::format_upset(as_dickson(u)) << '\n';
  else {
    const Alphabet a = alphabet_of(s, "abcdefghijklmnopqrstuvwxyz");
    out << text::format_upset(as_words(u, a), a) << '\n';
  }
  return kTrue;
}

int upset_member(const Settings& s, const std::string& elem,
                 const std::string& path, std::ostream& out) {
  const auto u = load_upset(path);
  const bool vec = !elem.empty() && elem.front() == '(';
  if (vec) {
    if (!u.block.items.empty() && !u.block.dickson())
      throw Failure{"carrier mismatch: " + elem + " is a vector, " + path +
                    " holds words"};
    const NatVec x = vector_arg(elem, "<element>");
    const DicksonUpSet X = as_dickson(u);
    if (const auto d = dim_of(X))
      same_dim(elem, x.dim(), path, *d);
    return verdict(out, member(x, X));
  }
  if (u.block.dickson())
    throw Failure{"carrier mismatch: " + elem + " is a word, " + path +
                  " holds vectors"};
  const Alphabet a = alphabet_of(s, "abcdefghijklmnopqrstuvwxyz");
  return verdict(out, member(word_arg(elem, a, "<element>"), as_words(u, a)));
}

template <class DicksonOp, class WordOp>
int upset_binary(const Settings& s, const std::string& px,
                 const std::string& py, DicksonOp&& on_dickson,
                 WordOp&& on_words) {
  const auto x = load_upset(px);
  const auto y = load_upset(py);
  if (dickson_pair(x, y)) {
    const DicksonUpSet X = as_dickson(x);
    const DicksonUpSet Y = as_dickson(y);
    same_dim(px, X, py, Y);
    return on_dickson(X, Y);
  }
  const Alphabet a = alphabet_of(s, "abcdefghijklmnopqrstuvwxyz");
  const WordUpSet X = as_words(x, a);
  const WordUpSet Y = as_words(y, a);
  return on_words(X, Y, a);
}

int upset_includes(const Settings& s, const std::string& px,
                   const std::string& py, std::ostream& out) {
  return upset_binary(
      s, px, py,
      [&](const DicksonUpSet& X, const DicksonUpSet& Y) {
        return verdict(out, includes(X, Y));
      },
      [&](const WordUpSet& X, const WordUpSet& Y, const Alphabet&) {
        return verdict(out, includes(X, Y));
      });
}

int upset_union(const Settings& s, const std::string& px,
                const std::string& py, std::ostream& out) {
  return upset_binary(
      s, px, py,
      [&](const DicksonUpSet& X, const DicksonUpSet& Y) {
        out << text::format_upset(unite(X, Y)) << '\n';
        return int{kTrue};
      },
      [&](const WordUpSet& X, const WordUpSet& Y, const Alphabet& a) {
        out << text::format_upset(unite(X, Y), a) << '\n';
        return int{kTrue};
      });
}

int upset_intersect(const Settings& s, const std::string& px,
                    const std::string& py, std::ostream& out) {
  return upset_binary(
      s, px, py,
      [&](const DicksonUpSet& X, const DicksonUpSet& Y) {
        out << text::format_upset(intersect(X, Y)) << '\n';
        return int{kTrue};
      },
      [&](const WordUpSet&, const WordUpSet&, const Alphabet&) -> int {
        throw Failure{"intersect is only available for vector upsets"};
      });
}

int upset_quotient(const Settings& s, const std::string& letter,
                   const std::string& path, std::ostream& out) {
  const auto u = load_upset(path);
  if (u.block.dickson())
    throw Failure{"quotient needs a word upset; " + path + " holds vectors"};
  const Alphabet a = alphabet_of(s, "abcdefghijklmnopqrstuvwxyz");
  const Word w = word_arg(letter, a, "<letter>");
  if (w.size() != 1)
    throw Failure{"<letter>: expected a single letter, got '" + letter + "'"};
  out << text::format_upset(quotient(w[0], as_words(u, a)), a) << '\n';
  return kTrue;
}

int upset_som(const Settings& s, const std::string& path, std::ostream& out) {
  const auto u = load_upset(path);
  if (u.block.dickson())
    throw Failure{"som needs a word upset; " + path + " holds vectors"};
  const Alphabet a = alphabet_of(s, "abcdefghijklmnopqrstuvwxyz");
  out << to_string(som(as_words(u, a)), a) << '\n';
  return kTrue;
}

int upset_phi_slice(const std::string& path, const std::string& prefix,
                    std::ostream& out) {
  const auto u = load_upset(path);
  if (!u.block.items.empty() && !u.block.dickson())
    throw Failure{"phi-slice needs a vector upset; " + path + " holds words"};
  const DicksonUpSet F = as_dickson(u);
  const NatVec a = vector_arg(prefix, "<prefix>");
  if (const auto d = dim_of(F)) {
    if (*d < 2)
      throw Failure{"phi-slice needs dimension >= 2; " + path +
                    " has dimension " + std::to_string(*d)};
    same_dim(path + " (minus last component)", *d - 1, prefix, a.dim());
  }
  out << to_string(phi_slice(F, a)) << '\n';
  return kTrue;
}

// ---- embed ----------------------------------------------------------------

Count parse_range(const std::string& r) {
  std::string_view v = r;
  if (v.starts_with("0.."))
    v.remove_prefix(3);
  Count bound{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), bound);
  if (ec != std::errc{} || ptr != v.data() + v.size() || v.empty())
    throw Failure{"<range>: expected N or 0..N, got '" + r + "'"};
  return bound;
}

template <class T, class Fmt>
int report_check(const EmbeddingCheck<T>& c, Fmt&& fmt, std::ostream& out) {
  if (c.ok) {
    out << "ok: " << c.pairs_checked << " pairs\n";
    return kTrue;
  }
  out << "counterexample: " << fmt(c.counterexample->first) << ' '
      << fmt(c.counterexample->second) << '\n';
  return kFalse;
}

int embed_check(const Settings& s, const std::string& name,
                const std::string& range, std::ostream& out) {
  const Count bound = parse_range(range);
  const std::size_t dim = s.dim == 0 ? 2 : s.dim;
  const auto fmt_vec = [](const NatVec& v) { return to_string(v); };

  if (name == "dickson-to-word") {
    const auto elems = box(dim, bound);
    return report_check(
        check_quasi_embedding(dickson_to_word_embedding(),
                              std::span<const NatVec>(elems)),
        fmt_vec, out);
  }
  if (name == "constant-empty") {
    const QuasiEmbedding<DicksonOrder, EmbeddingOrder> constant{
        "constant-empty", [](const NatVec&) { return Word(1, {}); }, {}, {}};
    const auto elems = box(dim, bound);
    return report_check(
        check_quasi_embedding(constant, std::span<const NatVec>(elems)),
        fmt_vec, out);
  }
  if (name == "word-to-labeled") {
    const Alphabet a = alphabet_of(s, "ab");
    const auto elems = all_words(a.size(), bound);
    return report_check(
        check_quasi_embedding(word_to_labeled_embedding(),
                              std::span<const Word>(elems)),
        [&](const Word& w) { return to_string(w, a); }, out);
  }
  throw Failure{"unknown embedding '" + name +
                "' (known: dickson-to-word, word-to-labeled, constant-empty)"};
}

// ---- cover ----------------------------------------------------------------

int cover(const Settings& s, const std::string& path, std::ostream& out,
          std::ostream& err) {
  const std::string body = read_file(path);
  const CoverQuery q = with_source(path, [&] { return text::parse_net(body); });

  CoverOptions opts;
  if (s.max_iterations > 0)
    opts.max_iterations = s.max_iterations;
  CoverResult r;
  try {
    r = backward_cover(q, opts);
  } catch (const SaturationLimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kInternal;
  }

  out << "coverable: " << (r.coverable ? "true" : "false") << '\n';
  out << "iterations: " << r.iterations << '\n';
  out << "basis: " << text::format_upset(r.basis) << '\n';

  if (!s.oracle_bound.empty()) {
    const NatVec bound = vector_arg(s.oracle_bound, "--oracle-bound");
    same_dim("--oracle-bound " + s.oracle_bound, bound.dim(),
             "initial " + to_string(q.initial), q.initial.dim());
    if (!leq(q.initial, bound))
      throw Failure{"--oracle-bound " + s.oracle_bound +
                    " does not dominate initial " + to_string(q.initial)};
    const bool forward = forward_cover_oracle(q, bound);
    const bool dominated =
        std::all_of(r.basis.generators().begin(), r.basis.generators().end(),
                    [&](const NatVec& g) { return leq(g, bound); });
    out << "oracle: " << (forward ? "true" : "false");
    if (forward == r.coverable) {
      out << " (agrees)\n";
    } else if (!dominated && !forward) {
      out << " (inconclusive: bound does not dominate basis)\n";
    } else {
      out << " (MISMATCH)\n";
      err << "error: forward oracle disagrees with backward saturation\n";
      return kInternal;
    }
  }
  return r.coverable ? kTrue : kFalse;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Settings s;
  std::function<int()> action;
  const auto bind = [&action](auto fn) {
    return [&action, fn] { action = fn; };
  };

  CLI::App app{"Well-partial-order toolkit: embedding orders, upward-closed "
               "sets, quasi-embeddings and VAS coverability",
               "wpo"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--alphabet", s.alphabet,
                 "Letter names, one character each (default a-z; ab for "
                 "embed checks)");
  app.add_option("--dim", s.dim, "Dimension for embed checks (default 2)");
  app.add_option("--max-iterations", s.max_iterations,
                 "Abort cover after this many growing rounds");
  app.add_option("--oracle-bound", s.oracle_bound,
                 "Cross-check cover with a forward search below this vector");

  std::string p1, p2, p3;
  std::size_t k = 0;

  auto* order = app.add_subcommand("order", "Compare two elements");
  order->require_subcommand(1);
  order->fallthrough();
  auto* leq_e_cmd = order->add_subcommand("leq-e", "u embeds into v");
  leq_e_cmd->add_option("u", p1)->required();
  leq_e_cmd->add_option("v", p2)->required();
  leq_e_cmd->callback(bind([&] { return order_words(s, p1, p2, false, out); }));
  auto* leq_E_cmd = order->add_subcommand("leq-E", "support-preserving order");
  leq_E_cmd->add_option("u", p1)->required();
  leq_E_cmd->add_option("v", p2)->required();
  leq_E_cmd->callback(bind([&] { return order_words(s, p1, p2, true, out); }));
  auto* dickson_cmd = order->add_subcommand("dickson", "componentwise a <= b");
  dickson_cmd->add_option("a", p1)->required();
  dickson_cmd->add_option("b", p2)->required();
  dickson_cmd->callback(bind([&] { return order_dickson(p1, p2, out); }));

  auto* seq = app.add_subcommand("seq", "Analyse a finite sequence file");
  seq->require_subcommand(1);
  seq->fallthrough();
  auto* good = seq->add_subcommand("good-pair", "first i<j with s_i <= s_j");
  good->add_option("file", p1)->required();
  good->callback(bind([&] { return seq_good_pair(s, p1, out); }));
  auto* homog = seq->add_subcommand("homogeneous",
                                    "length-k constant/chain/antichain");
  homog->add_option("file", p1)->required();
  homog->add_option("k", k)->required();
  homog->callback(bind([&] { return seq_homogeneous(s, p1, k, out); }));

  auto* upset = app.add_subcommand("upset", "Upward-closed set algebra");
  upset->require_subcommand(1);
  upset->fallthrough();
  auto* norm = upset->add_subcommand("normalize", "canonical form");
  norm->add_option("file", p1)->required();
  norm->callback(bind([&] { return upset_normalize(s, p1, out); }));
  auto* mem = upset->add_subcommand("member", "element in upset");
  mem->add_option("element", p1)->required();
  mem->add_option("file", p2)->required();
  mem->callback(bind([&] { return upset_member(s, p1, p2, out); }));
  auto* inc = upset->add_subcommand("includes", "Y is a subset of X");
  inc->add_option("X", p1)->required();
  inc->add_option("Y", p2)->required();
  inc->callback(bind([&] { return upset_includes(s, p1, p2, out); }));
  auto* uni = upset->add_subcommand("union", "X union Y");
  uni->add_option("X", p1)->required();
  uni->add_option("Y", p2)->required();
  uni->callback(bind([&] { return upset_union(s, p1, p2, out); }));
  auto* isect = upset->add_subcommand("intersect", "X intersect Y (vectors)");
  isect->add_option("X", p1)->required();
  isect->add_option("Y", p2)->required();
  isect->callback(bind([&] { return upset_intersect(s, p1, p2, out); }));
  auto* quot = upset->add_subcommand("quotient", "{ y | ay in X }");
  quot->add_option("letter", p1)->required();
  quot->add_option("X", p2)->required();
  quot->callback(bind([&] { return upset_quotient(s, p1, p2, out); }));
  auto* som_cmd = upset->add_subcommand("som", "first letters of minimal words");
  som_cmd->add_option("X", p1)->required();
  som_cmd->callback(bind([&] { return upset_som(s, p1, out); }));
  auto* slice = upset->add_subcommand("phi-slice",
                                      "least c with (prefix, c) in F");
  slice->add_option("F", p1)->required();
  slice->add_option("prefix", p2)->required();
  slice->callback(bind([&] { return upset_phi_slice(p1, p2, out); }));

  auto* embed = app.add_subcommand("embed", "Quasi-embedding checks");
  embed->require_subcommand(1);
  embed->fallthrough();
  auto* check = embed->add_subcommand("check", "exhaustive check on a range");
  check->add_option("name", p1)->required();
  check->add_option("range", p2)->required();
  check->callback(bind([&] { return embed_check(s, p1, p2, out); }));

  auto* cov = app.add_subcommand("cover", "Backward coverability of a net");
  cov->add_option("netfile", p3)->required();
  cov->callback(bind([&] { return cover(s, p3, out, err); }));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kTrue;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kTrue;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (!action) {
    err << "error: no command given\n";
    return kUsage;
  }
  try {
    return action();
  } catch (const Failure& f) {
    err << "error: " << f.message << '\n';
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsage;
}

} // namespace wpo::cli
