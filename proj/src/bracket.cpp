#include "skein/bracket.hpp"

namespace skein {

BracketPair hsum(const BracketPair& p, const BracketPair& q) {
  // Joining side by side: a [0] smoothing survives only when both halves
  // smooth to [0]; two [infinity] halves trap an extra circle.
  return {p.a * q.a, p.a * q.b + p.b * q.a + poly_x() * (p.b * q.b)};
}

BracketPair inverse(const BracketPair& p) { return {p.b, p.a}; }

BracketPair vsum(const BracketPair& p, const BracketPair& q) {
  return inverse(hsum(inverse(p), inverse(q)));
}

BracketPair connect_knot(const BracketPair& p, const Polynomial& knot) {
  Polynomial f = div_by_x_exact(knot);
  return {p.a * f, p.b * f};
}

BracketPair hsum_iterate(const BracketPair& p, std::size_t n) {
  BracketPair acc = pair_zero();
  for (std::size_t i = 0; i < n; ++i) acc = hsum(acc, p);
  return acc;
}

BigInt state_mass(const BracketPair& p) {
  return p.a.eval(1) + p.b.eval(1);
}

std::optional<std::size_t> crossing_count(const BracketPair& p) {
  BigInt m = state_mass(p);
  if (m <= 0) return std::nullopt;
  std::size_t c = 0;
  while ((m & 1) == 0) {
    m >>= 1;
    ++c;
  }
  return m == 1 ? std::optional<std::size_t>(c) : std::nullopt;
}

std::string to_string(const BracketPair& p, bool descending) {
  return "(" + to_string(p.a, descending) + ", " + to_string(p.b, descending) + ")";
}

const std::array<KnotClass, 6>& knot_classes() {
  static const std::array<KnotClass, 6> ks = {{
      {KnotId::K1, "K1", Polynomial{0, 1, 1}, 1},
      {KnotId::K2, "K2", Polynomial{0, 1, 2, 1}, 2},
      {KnotId::K3, "K3", Polynomial{0, 2, 2}, 2},
      {KnotId::K4, "K4", Polynomial{0, 1, 3, 3, 1}, 3},
      {KnotId::K5, "K5", Polynomial{0, 3, 4, 1}, 3},
      {KnotId::K6, "K6", Polynomial{0, 2, 4, 2}, 3},
  }};
  return ks;
}

const KnotClass& knot_class(KnotId id) {
  return knot_classes()[static_cast<std::size_t>(id)];
}

std::optional<KnotId> knot_id_from_name(const std::string& name) {
  for (const auto& k : knot_classes())
    if (name == k.name) return k.id;
  return std::nullopt;
}

std::optional<KnotId> knot_id_from_bracket(const Polynomial& bracket) {
  for (const auto& k : knot_classes())
    if (bracket == k.bracket) return k.id;
  return std::nullopt;
}

}  // namespace skein
