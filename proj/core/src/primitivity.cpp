#include "fareyprim/primitivity.hpp"

#include <array>
#include <stdexcept>

#include <json.hpp>

#include "fareyprim/parallel.hpp"

namespace fareyprim {

AbelianMatrix abelianization(const GenPair& pair) {
  const auto s = exponent_sums(pair.first);
  const auto t = exponent_sums(pair.second);
  AbelianMatrix m;
  m.rows = {{{s.a, s.b}, {t.a, t.b}}};
  return m;
}

namespace {

constexpr std::size_t slot(Letter l) {
  switch (l) {
    case Letter::a: return 0;
    case Letter::A: return 1;
    case Letter::b: return 2;
    case Letter::B: return 3;
  }
  return 0;
}

constexpr std::array<Letter, 4> kSlotLetter = {Letter::a, Letter::A, Letter::b, Letter::B};

// Labelled graph folded on the fly: every vertex keeps at most one edge per
// label, and a second edge with the same label identifies the two targets.
class FoldedGraph {
 public:
  static constexpr std::int64_t kNone = -1;

  std::size_t add_vertex() {
    parent_.push_back(parent_.size());
    out_.push_back({kNone, kNone, kNone, kNone});
    return parent_.size() - 1;
  }

  void add_loop(std::size_t base, const Word& w) {
    std::size_t current = base;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const std::size_t next = i + 1 == w.size() ? base : add_vertex();
      add_edge(current, w[i], next);
      current = next;
    }
  }

  struct Core {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    bool rose = false;
  };

  // Strips hanging trees not containing the base, then measures what is left.
  Core core(std::size_t base) {
    base = find(base);
    std::vector<bool> removed(parent_.size(), false);
    auto degree = [&](std::size_t v) {
      int d = 0;
      for (auto t : out_[v]) d += t != kNone;
      return d;
    };
    std::vector<std::size_t> stack;
    for (std::size_t v = 0; v < parent_.size(); ++v) {
      if (find(v) == v && v != base && degree(v) <= 1) stack.push_back(v);
    }
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      if (removed[v] || degree(v) > 1) continue;
      removed[v] = true;
      for (std::size_t s = 0; s < 4; ++s) {
        if (out_[v][s] == kNone) continue;
        const auto t = find(static_cast<std::size_t>(out_[v][s]));
        out_[t][slot(inverse(kSlotLetter[s]))] = kNone;
        out_[v][s] = kNone;
        if (t != base && degree(t) <= 1) stack.push_back(t);
      }
    }
    Core c;
    for (std::size_t v = 0; v < parent_.size(); ++v) {
      if (find(v) != v || removed[v]) continue;
      ++c.vertices;
      c.edges += (out_[v][slot(Letter::a)] != kNone) + (out_[v][slot(Letter::b)] != kNone);
    }
    c.rose = c.vertices == 1 && out_[base][slot(Letter::a)] != kNone &&
             out_[base][slot(Letter::b)] != kNone;
    return c;
  }

 private:
  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void add_edge(std::size_t u, Letter x, std::size_t v) {
    link(u, x, v);
    while (!pending_.empty()) {
      const auto [p, q] = pending_.back();
      pending_.pop_back();
      merge(p, q);
    }
  }

  // Records u --x--> v in both directions, queueing identifications on conflicts.
  void link(std::size_t u, Letter x, std::size_t v) {
    u = find(u);
    v = find(v);
    set_or_merge(u, slot(x), v);
    set_or_merge(v, slot(inverse(x)), u);
  }

  void set_or_merge(std::size_t from, std::size_t s, std::size_t to) {
    auto& target = out_[from][s];
    if (target == kNone) {
      target = static_cast<std::int64_t>(to);
    } else if (find(static_cast<std::size_t>(target)) != to) {
      pending_.emplace_back(static_cast<std::size_t>(target), to);
    }
  }

  void merge(std::size_t p, std::size_t q) {
    p = find(p);
    q = find(q);
    if (p == q) return;
    parent_[q] = p;
    const auto edges = out_[q];
    out_[q] = {kNone, kNone, kNone, kNone};
    for (std::size_t s = 0; s < 4; ++s) {
      if (edges[s] != kNone) link(p, kSlotLetter[s], static_cast<std::size_t>(edges[s]));
    }
  }

  std::vector<std::size_t> parent_;
  std::vector<std::array<std::int64_t, 4>> out_;
  std::vector<std::pair<std::size_t, std::size_t>> pending_;
};

void require_nonempty(const GenPair& pair) {
  if (pair.first.empty() || pair.second.empty()) {
    throw std::invalid_argument("basis check needs two nonempty words");
  }
}

Word apply_move(NielsenMove m, const Word& x, const Word& y) {
  switch (m) {
    case NielsenMove::XtoXY: return concat(x, y);
    case NielsenMove::XtoXYinv: return concat(x, invert(y));
    case NielsenMove::XtoYX: return concat(y, x);
    case NielsenMove::XtoYinvX: return concat(invert(y), x);
    case NielsenMove::YtoYX: return concat(y, x);
    case NielsenMove::YtoYXinv: return concat(y, invert(x));
    case NielsenMove::YtoXY: return concat(x, y);
    case NielsenMove::YtoXinvY: return concat(invert(x), y);
    default: break;
  }
  throw std::logic_error("not a product move");
}

constexpr std::array<NielsenMove, 8> kProductMoves = {
    NielsenMove::XtoXY, NielsenMove::XtoXYinv, NielsenMove::XtoYX, NielsenMove::XtoYinvX,
    NielsenMove::YtoYX, NielsenMove::YtoYXinv, NielsenMove::YtoXY, NielsenMove::YtoXinvY,
};

}  // namespace

BasisCertificate stallings_basis_check(const GenPair& pair) {
  require_nonempty(pair);
  FoldedGraph g;
  const std::size_t base = g.add_vertex();
  g.add_loop(base, pair.first);
  g.add_loop(base, pair.second);
  const auto core = g.core(base);
  BasisCertificate cert;
  cert.folding_vertex_count = core.vertices;
  cert.folding_edge_count = core.edges;
  cert.verdict = core.rose ? Verdict::Basis : Verdict::ProperSubgroup;
  return cert;
}

BasisCertificate nielsen_reduce(const GenPair& pair) {
  require_nonempty(pair);
  BasisCertificate cert;
  Word x = pair.first;
  Word y = pair.second;
  bool improved = true;
  while (improved) {
    improved = false;
    const std::size_t total = x.size() + y.size();
    for (std::size_t i = 0; i < kProductMoves.size(); ++i) {
      const NielsenMove m = kProductMoves[i];
      Word candidate = apply_move(m, x, y);
      const bool replaces_x = i < 4;
      const std::size_t next_total = candidate.size() + (replaces_x ? y.size() : x.size());
      if (next_total < total) {
        (replaces_x ? x : y) = std::move(candidate);
        cert.nielsen_trace.push_back(m);
        improved = true;
        break;
      }
    }
  }
  cert.terminal = {x, y};

  const bool basis = x.size() == 1 && y.size() == 1 && generator(x[0]) != generator(y[0]);
  cert.verdict = basis ? Verdict::Basis : Verdict::ProperSubgroup;
  if (basis) {
    if (sign(x[0]) < 0) cert.nielsen_trace.push_back(NielsenMove::InvertX);
    if (sign(y[0]) < 0) cert.nielsen_trace.push_back(NielsenMove::InvertY);
    if (generator(x[0]) == Generator::b) cert.nielsen_trace.push_back(NielsenMove::Swap);
  }
  return cert;
}

NeighborPairReport verify_neighbor_pairs(std::int64_t max_level, SignFilter sign,
                                         unsigned threads) {
  NeighborPairReport report;
  if (max_level < 1) return report;

  struct Task {
    Rational left;
    Rational right;
    Scheme scheme;
  };
  std::vector<Task> tasks;
  for (Scheme scheme : {Scheme::Positive, Scheme::Negative}) {
    if (sign == SignFilter::Positive && scheme != Scheme::Positive) continue;
    if (sign == SignFilter::Negative && scheme != Scheme::Negative) continue;
    std::vector<Rational> vertices{Rational::zero(), Rational::infinity()};
    const auto levels = rationals_by_level(
        max_level, scheme == Scheme::Positive ? SignFilter::Positive : SignFilter::Negative);
    vertices.insert(vertices.end(), levels.begin(), levels.end());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < vertices.size(); ++j) {
        if (is_neighbor(vertices[i], vertices[j])) {
          tasks.push_back({vertices[i], vertices[j], scheme});
        }
      }
    }
  }

  // Words are computed up front so workers only read.
  Enumerator enumerator;
  std::vector<GenPair> pairs;
  pairs.reserve(tasks.size());
  for (const auto& t : tasks) {
    pairs.push_back({enumerator.word(t.left, t.scheme), enumerator.word(t.right, t.scheme)});
  }

  std::vector<std::string> outcome(tasks.size());
  parallel_for(tasks.size(), worker_count(threads), [&](std::size_t i) {
    const auto folding = stallings_basis_check(pairs[i]);
    const auto nielsen = nielsen_reduce(pairs[i]);
    const auto det = abelianization(pairs[i]).determinant();
    std::string reason;
    if (folding.verdict != Verdict::Basis) reason += "folding: proper subgroup; ";
    if (nielsen.verdict != Verdict::Basis) reason += "nielsen: proper subgroup; ";
    if (det != 1 && det != -1) reason += "determinant " + std::to_string(det) + "; ";
    if (!reason.empty()) reason.resize(reason.size() - 2);
    outcome[i] = std::move(reason);
  });

  report.pairs_checked = tasks.size();
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (outcome[i].empty()) {
      ++report.basis_count;
    } else {
      report.failures.push_back({tasks[i].left, tasks[i].right, outcome[i]});
    }
  }
  return report;
}

std::string to_json(const NeighborPairReport& report) {
  nlohmann::ordered_json j;
  j["pairs_checked"] = report.pairs_checked;
  j["basis_count"] = report.basis_count;
  j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : report.failures) {
    j["failures"].push_back(
        {{"left", to_string(f.left)}, {"right", to_string(f.right)}, {"reason", f.reason}});
  }
  return j.dump();
}

std::string to_string(Verdict v) { return v == Verdict::Basis ? "basis" : "proper-subgroup"; }

std::string to_string(NielsenMove m) {
  switch (m) {
    case NielsenMove::XtoXY: return "x<-xy";
    case NielsenMove::XtoXYinv: return "x<-xY";
    case NielsenMove::XtoYX: return "x<-yx";
    case NielsenMove::XtoYinvX: return "x<-Yx";
    case NielsenMove::YtoYX: return "y<-yx";
    case NielsenMove::YtoYXinv: return "y<-yX";
    case NielsenMove::YtoXY: return "y<-xy";
    case NielsenMove::YtoXinvY: return "y<-Xy";
    case NielsenMove::InvertX: return "x<-X";
    case NielsenMove::InvertY: return "y<-Y";
    case NielsenMove::Swap: return "swap";
  }
  return "?";
}

}  // namespace fareyprim
