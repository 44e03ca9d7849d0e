#include "skein/shadow.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

namespace skein {

void validate(const ShadowDiagram& d) {
  std::map<int, int> seen;
  for (const auto& c : d.crossings)
    for (int e : c) {
      if (e < 0) throw invalid_diagram("negative edge label at a crossing");
      ++seen[e];
    }
  if (d.tangle) {
    for (int e : d.ends) {
      if (e < 0) throw invalid_diagram("tangle is missing an endpoint edge");
      ++seen[e];
    }
  }
  for (const auto& [e, n] : seen)
    if (n != 2)
      throw invalid_diagram("edge " + std::to_string(e) + " has " + std::to_string(n) +
                            " occurrences, want 2");
  if (d.loops < 0) throw invalid_diagram("negative loop count");
}

ShadowDiagram diagram_zero() {
  ShadowDiagram d;
  d.tangle = true;
  d.ends = {0, 0, 1, 1};  // top strand NW-NE, bottom strand SW-SE
  d.next_edge = 2;
  return d;
}

ShadowDiagram diagram_infinity() {
  ShadowDiagram d;
  d.tangle = true;
  d.ends = {0, 1, 0, 1};  // left strand NW-SW, right strand NE-SE
  d.next_edge = 2;
  return d;
}

ShadowDiagram diagram_crossing() {
  ShadowDiagram d;
  d.tangle = true;
  // Slots clockwise from NW: the (0,1)(2,3) smoothing joins NW-NE and
  // SW-SE, so it is the [0]-type state, matching pair_crossing() = (1, 1).
  d.crossings.push_back({0, 1, 2, 3});
  d.ends = {0, 1, 3, 2};
  d.next_edge = 4;
  return d;
}

namespace {

constexpr int NW = 0, NE = 1, SW = 2, SE = 3;

void relabel(ShadowDiagram& d, std::array<int, 8>& aux, int from, int to) {
  for (auto& c : d.crossings)
    for (auto& s : c)
      if (s == from) s = to;
  for (auto& s : aux)
    if (s == from) s = to;
}

// Join two boundary stubs. When both carry the same edge the strand bites
// its own tail and becomes a crossing-free circle.
void join(ShadowDiagram& d, std::array<int, 8>& aux, int px, int py) {
  int e = aux[px], f = aux[py];
  aux[px] = aux[py] = -1;
  if (e == f) {
    ++d.loops;
    return;
  }
  relabel(d, aux, f, e);
}

// Disjoint union with b's labels shifted clear of a's; aux gets the eight
// boundary edges (a's four, then b's four) for subsequent joins.
ShadowDiagram merge(const ShadowDiagram& a, const ShadowDiagram& b, std::array<int, 8>& aux) {
  ShadowDiagram r;
  r.crossings = a.crossings;
  int shift = a.next_edge;
  for (auto c : b.crossings) {
    for (auto& s : c) s += shift;
    r.crossings.push_back(c);
  }
  r.loops = a.loops + b.loops;
  r.next_edge = a.next_edge + b.next_edge;
  for (int i = 0; i < 4; ++i) {
    aux[i] = a.ends[i];
    aux[4 + i] = b.ends[i] < 0 ? -1 : b.ends[i] + shift;
  }
  return r;
}

void require_tangle(const ShadowDiagram& d, const char* op) {
  if (!d.tangle) throw invalid_diagram(std::string(op) + " needs a diagram with endpoints");
}

}  // namespace

ShadowDiagram hsum(const ShadowDiagram& a, const ShadowDiagram& b) {
  require_tangle(a, "hsum");
  require_tangle(b, "hsum");
  std::array<int, 8> aux;
  ShadowDiagram r = merge(a, b, aux);
  r.tangle = true;
  join(r, aux, NE, 4 + NW);
  join(r, aux, SE, 4 + SW);
  r.ends = {aux[NW], aux[4 + NE], aux[SW], aux[4 + SE]};
  return r;
}

ShadowDiagram vsum(const ShadowDiagram& a, const ShadowDiagram& b) {
  require_tangle(a, "vsum");
  require_tangle(b, "vsum");
  std::array<int, 8> aux;
  ShadowDiagram r = merge(a, b, aux);
  r.tangle = true;
  join(r, aux, SW, 4 + NW);
  join(r, aux, SE, 4 + NE);
  r.ends = {aux[NW], aux[NE], aux[4 + SW], aux[4 + SE]};
  return r;
}

ShadowDiagram inverse(ShadowDiagram d) {
  require_tangle(d, "inverse");
  // Quarter turn: NW -> SW -> SE -> NE -> NW. Cyclic slot order at each
  // crossing is rotation invariant, so only the boundary moves.
  d.ends = {d.ends[NE], d.ends[SE], d.ends[NW], d.ends[SW]};
  return d;
}

ShadowDiagram connect_sum(ShadowDiagram t, const ShadowDiagram& knot) {
  require_tangle(t, "connect_sum");
  if (knot.tangle) throw invalid_diagram("connect_sum factor must be closed");
  if (knot.crossings.empty()) {
    // A bare circle is absorbed by the strand it is spliced into.
    if (knot.loops < 1) throw invalid_diagram("empty connect_sum factor");
    t.loops += knot.loops - 1;
    return t;
  }
  int shift = t.next_edge;
  int e = t.ends[SW];
  int g = shift + knot.next_edge;  // fresh label for the second reattachment
  t.next_edge = g + 1;
  t.loops += knot.loops;

  // The SW stub keeps label e; the far side of the cut strand becomes g.
  bool rewired = false;
  for (auto& c : t.crossings)
    for (auto& s : c)
      if (s == e && !rewired) {
        s = g;
        rewired = true;
      }
  for (int i = 0; i < 4 && !rewired; ++i)
    if (i != SW && t.ends[i] == e) {
      t.ends[i] = g;
      rewired = true;
    }
  if (!rewired) throw invalid_diagram("SW edge has no second occurrence");

  // Cut the knot open at its lowest-labeled edge and wire the two stubs in.
  int cut = -1;
  for (const auto& c : knot.crossings)
    for (int s : c) cut = cut < 0 ? s : std::min(cut, s);
  int hits = 0;
  for (auto c : knot.crossings) {
    for (auto& s : c) {
      if (s == cut) {
        s = hits++ == 0 ? e : g;
      } else {
        s += shift;
      }
    }
    t.crossings.push_back(c);
  }
  return t;
}

ShadowDiagram close_diagram(ShadowDiagram d, ClosureKind kind) {
  require_tangle(d, "close_diagram");
  if (kind == ClosureKind::R) return close_diagram(hsum(d, diagram_crossing()), ClosureKind::N);
  std::array<int, 8> aux{d.ends[0], d.ends[1], d.ends[2], d.ends[3], -1, -1, -1, -1};
  d.ends = {-1, -1, -1, -1};
  d.tangle = false;
  if (kind == ClosureKind::N) {
    join(d, aux, NW, NE);
    join(d, aux, SW, SE);
  } else {
    join(d, aux, NW, SW);
    join(d, aux, NE, SE);
  }
  return d;
}

namespace {

// Closure recipes realizing each knot class with as few crossings as the
// class allows; checked against the class brackets in the tests. Composed
// by hand rather than via build_diagram, whose connect case would re-enter
// this initializer.
const ShadowDiagram& stored_knot_diagram(KnotId id) {
  static const std::array<ShadowDiagram, 6> store = [] {
    auto twist = [](std::size_t n) {
      ShadowDiagram d = diagram_crossing();
      for (std::size_t i = 1; i < n; ++i) d = hsum(d, diagram_crossing());
      return d;
    };
    std::array<ShadowDiagram, 6> s;
    s[0] = close_diagram(twist(1), ClosureKind::N);
    s[1] = close_diagram(twist(2), ClosureKind::D);
    s[2] = close_diagram(twist(2), ClosureKind::N);
    s[3] = close_diagram(connect_sum(connect_sum(twist(1), s[0]), s[0]), ClosureKind::N);
    s[4] = close_diagram(twist(3), ClosureKind::N);
    s[5] = close_diagram(connect_sum(twist(2), s[0]), ClosureKind::N);
    return s;
  }();
  return store[static_cast<std::size_t>(id)];
}

}  // namespace

ShadowDiagram build_diagram(const ExprPtr& e) {
  using K = TangleExpr::Kind;
  switch (e->kind) {
    case K::zero: return diagram_zero();
    case K::infinity: return diagram_infinity();
    case K::twist: {
      ShadowDiagram d = diagram_crossing();
      for (std::size_t i = 1; i < e->n; ++i) d = hsum(d, diagram_crossing());
      return d;
    }
    case K::inv_twist: return inverse(build_diagram(make_twist(e->n)));
    case K::hsum: return hsum(build_diagram(e->left), build_diagram(e->right));
    case K::vsum: return vsum(build_diagram(e->left), build_diagram(e->right));
    case K::inverse: return inverse(build_diagram(e->left));
    case K::connect: {
      ShadowDiagram t = build_diagram(e->left);
      if (e->knot == poly_x()) return t;  // trivial factor
      if (!e->knot_name)
        throw oracle_error("no stored diagram for knot bracket " + to_string(e->knot));
      return connect_sum(std::move(t), stored_knot_diagram(*e->knot_name));
    }
    case K::rep: {
      ShadowDiagram d = diagram_zero();
      if (e->n == 0) return d;
      ShadowDiagram unit = build_diagram(e->left);
      d = unit;
      for (std::size_t i = 1; i < e->n; ++i) d = hsum(d, unit);
      return d;
    }
  }
  throw std::logic_error("unhandled expression kind");
}

namespace {

// Flat union-find, path halving; small enough to live on each worker.
struct Dsu {
  explicit Dsu(std::size_t n) : parent(n) {}
  void reset() { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  std::vector<int> parent;
};

struct Compact {
  std::vector<std::array<int, 4>> crossings;
  std::array<int, 4> ends{-1, -1, -1, -1};
  int edges = 0;
};

Compact compact_labels(const ShadowDiagram& d) {
  std::map<int, int> remap;
  auto id = [&](int e) {
    auto [it, fresh] = remap.emplace(e, static_cast<int>(remap.size()));
    (void)fresh;
    return it->second;
  };
  Compact c;
  for (const auto& cr : d.crossings) c.crossings.push_back({id(cr[0]), id(cr[1]), id(cr[2]), id(cr[3])});
  if (d.tangle)
    for (int i = 0; i < 4; ++i) c.ends[i] = id(d.ends[i]);
  c.edges = static_cast<int>(remap.size());
  return c;
}

void check_budget(const ShadowDiagram& d, std::size_t budget) {
  std::size_t c = d.crossing_count();
  if (c >= 63 || (std::size_t(1) << c) > budget) throw budget_exceeded(c, budget);
}

// Per-state work shared by both sums: smooth every crossing per the state
// bits and count resulting circle classes. Returns the number of circles
// and, for tangles, whether the boundary closed up in the [0] pattern.
struct StateOutcome {
  int circles;
  bool zero_pattern;
};

StateOutcome run_state(const Compact& c, std::uint64_t state, Dsu& dsu, bool tangle) {
  dsu.reset();
  for (std::size_t i = 0; i < c.crossings.size(); ++i) {
    const auto& cr = c.crossings[i];
    if ((state >> i) & 1) {
      dsu.unite(cr[1], cr[2]);
      dsu.unite(cr[3], cr[0]);
    } else {
      dsu.unite(cr[0], cr[1]);
      dsu.unite(cr[2], cr[3]);
    }
  }
  int classes = 0;
  for (int v = 0; v < c.edges; ++v)
    if (dsu.find(v) == v) ++classes;
  if (!tangle) return {classes, false};

  int rNW = dsu.find(c.ends[0]), rNE = dsu.find(c.ends[1]);
  int rSW = dsu.find(c.ends[2]), rSE = dsu.find(c.ends[3]);
  bool zero_pat = rNW == rNE && rSW == rSE;
  bool inf_pat = rNW == rSW && rNE == rSE;
  if (zero_pat == inf_pat)  // both only when all four meet; neither is diagonal
    throw nonplanar_state("smoothing connects endpoints diagonally");
  // Two strand arcs occupy two classes; the rest are circles.
  return {classes - 2, zero_pat};
}

// Enumerate [lo, hi) adding x^circles into one of the two accumulators
// (tangle) or the first (knot).
void sweep(const Compact& c, bool tangle, std::uint64_t lo, std::uint64_t hi,
           std::vector<std::uint64_t>& acc_a, std::vector<std::uint64_t>& acc_b) {
  Dsu dsu(static_cast<std::size_t>(c.edges));
  for (std::uint64_t s = lo; s < hi; ++s) {
    StateOutcome o = run_state(c, s, dsu, tangle);
    auto& acc = (!tangle || o.zero_pattern) ? acc_a : acc_b;
    acc[static_cast<std::size_t>(o.circles)] += 1;
  }
}

std::pair<Polynomial, Polynomial> state_sum(const ShadowDiagram& d, std::size_t budget, bool tangle) {
  validate(d);
  check_budget(d, budget);
  Compact c = compact_labels(d);
  std::uint64_t total = std::uint64_t(1) << d.crossing_count();
  std::size_t width = static_cast<std::size_t>(c.edges) + 1;

  std::vector<std::uint64_t> acc_a(width, 0), acc_b(width, 0);
  unsigned workers = std::thread::hardware_concurrency();
  if (total >= (std::uint64_t(1) << 16) && workers > 1) {
    workers = std::min<unsigned>(workers, 16);
    std::vector<std::vector<std::uint64_t>> pa(workers, acc_a), pb(workers, acc_b);
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex fail_mu;
    for (unsigned w = 0; w < workers; ++w) {
      std::uint64_t lo = total / workers * w + std::min<std::uint64_t>(w, total % workers);
      std::uint64_t hi = lo + total / workers + (w < total % workers ? 1 : 0);
      pool.emplace_back([&, w, lo, hi] {
        try {
          sweep(c, tangle, lo, hi, pa[w], pb[w]);
        } catch (...) {
          std::lock_guard<std::mutex> lk(fail_mu);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    for (unsigned w = 0; w < workers; ++w)
      for (std::size_t k = 0; k < width; ++k) {
        acc_a[k] += pa[w][k];
        acc_b[k] += pb[w][k];
      }
  } else {
    sweep(c, tangle, 0, total, acc_a, acc_b);
  }

  // Crossing-free circles multiply every state by x^loops.
  auto lift = [&](const std::vector<std::uint64_t>& acc) {
    std::vector<BigInt> coeffs(width + static_cast<std::size_t>(d.loops), BigInt(0));
    for (std::size_t k = 0; k < width; ++k) coeffs[k + static_cast<std::size_t>(d.loops)] = acc[k];
    return Polynomial(std::move(coeffs));
  };
  return {lift(acc_a), lift(acc_b)};
}

}  // namespace

Polynomial state_sum_knot(const ShadowDiagram& d, std::size_t budget) {
  if (d.tangle) throw invalid_diagram("state_sum_knot needs a closed diagram");
  return state_sum(d, budget, false).first;
}

BracketPair state_sum_tangle(const ShadowDiagram& d, std::size_t budget) {
  if (!d.tangle) throw invalid_diagram("state_sum_tangle needs a diagram with endpoints");
  auto [a, b] = state_sum(d, budget, true);
  return {std::move(a), std::move(b)};
}

void write_diagram(const ShadowDiagram& d, std::ostream& out) {
  validate(d);
  Compact c = compact_labels(d);
  out << (d.tangle ? "tangle" : "knot") << '\n';
  for (const auto& cr : c.crossings)
    out << "X " << cr[0] << ' ' << cr[1] << ' ' << cr[2] << ' ' << cr[3] << '\n';
  if (d.tangle) {
    static const char* names[4] = {"NW", "NE", "SW", "SE"};
    for (int i = 0; i < 4; ++i) out << "E " << names[i] << ' ' << c.ends[i] << '\n';
  }
  if (d.loops > 0) out << "O " << d.loops << '\n';
}

ShadowDiagram read_diagram(std::istream& in) {
  ShadowDiagram d;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& what) -> void {
    throw invalid_diagram("line " + std::to_string(lineno) + ": " + what);
  };
  bool have_header = false;
  std::array<bool, 4> end_seen{false, false, false, false};
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#') continue;
    if (!have_header) {
      if (tok == "tangle")
        d.tangle = true;
      else if (tok != "knot")
        fail("expected header 'tangle' or 'knot', got '" + tok + "'");
      have_header = true;
      continue;
    }
    if (tok == "X") {
      std::array<int, 4> cr;
      for (auto& s : cr)
        if (!(ls >> s) || s < 0) fail("crossing needs four nonnegative edge labels");
      d.crossings.push_back(cr);
    } else if (tok == "E") {
      std::string dir;
      int e;
      if (!(ls >> dir >> e) || e < 0) fail("endpoint needs a direction and an edge label");
      static const std::map<std::string, int> dirs{{"NW", 0}, {"NE", 1}, {"SW", 2}, {"SE", 3}};
      auto it = dirs.find(dir);
      if (it == dirs.end()) fail("unknown endpoint direction '" + dir + "'");
      if (end_seen[static_cast<std::size_t>(it->second)]) fail("duplicate endpoint " + dir);
      end_seen[static_cast<std::size_t>(it->second)] = true;
      d.ends[it->second] = e;
    } else if (tok == "O") {
      if (!(ls >> d.loops) || d.loops < 0) fail("loop count must be nonnegative");
    } else {
      fail("unknown record '" + tok + "'");
    }
  }
  if (!have_header) throw invalid_diagram("empty diagram file");
  bool any_end = end_seen[0] || end_seen[1] || end_seen[2] || end_seen[3];
  bool all_ends = end_seen[0] && end_seen[1] && end_seen[2] && end_seen[3];
  if (d.tangle && !all_ends) throw invalid_diagram("tangle needs all four endpoints");
  if (!d.tangle && any_end) throw invalid_diagram("knot diagram cannot have endpoints");
  for (const auto& c : d.crossings)
    for (int e : c) d.next_edge = std::max(d.next_edge, e + 1);
  if (d.tangle)
    for (int e : d.ends) d.next_edge = std::max(d.next_edge, e + 1);
  validate(d);
  return d;
}

}  // namespace skein
