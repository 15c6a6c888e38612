#include "temperedkit/signature.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <limits>

namespace tempered {

namespace {

// Row-major index of the strict upper-triangle bit (i, j), i < j.
inline int pair_bit_index(int n, int i, int j) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

struct MinSearch {
  const Poset& p;
  const std::vector<int>* temp = nullptr;  // null while minimising a only
  int n = 0;
  int total_bits = 0;
  OrderBits best_a = 0;
  bool have_a = false;
  std::uint32_t best_t = 0;
  bool have_t = false;

  std::vector<int> perm;
  std::uint32_t used = 0;

  explicit MinSearch(const Poset& poset)
      : p(poset), n(poset.size()), total_bits(poset.size() * (poset.size() - 1) / 2) {
    perm.reserve(n);
  }

  OrderBits bit_value(int i, int j) const {
    return OrderBits(1) << (total_bits - 1 - pair_bit_index(n, i, j));
  }

  // True when u and v relate identically to every other point; swapping such
  // twins is an automorphism, so only one branch needs exploring.
  bool twin(int u, int v) const {
    std::uint32_t both = (1u << u) | (1u << v);
    if (p.leq(u, v) || p.leq(v, u)) return false;
    if ((p.up_set(u) & ~both) != (p.up_set(v) & ~both)) return false;
    if ((p.down_set(u) & ~both) != (p.down_set(v) & ~both)) return false;
    if (temp != nullptr && (*temp)[u] != (*temp)[v]) return false;
    return true;
  }

  void run(OrderBits partial_a) {
    const int k = static_cast<int>(perm.size());
    if (k == n) {
      if (temp == nullptr) {
        if (!have_a || partial_a < best_a) {
          best_a = partial_a;
          have_a = true;
        }
        return;
      }
      if (partial_a != best_a) return;
      std::uint32_t t = 0;
      for (int pos = 0; pos < n; ++pos) {
        t |= static_cast<std::uint32_t>((*temp)[perm[pos]]) << (n - 1 - pos);
      }
      if (!have_t || t < best_t) {
        best_t = t;
        have_t = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1u) continue;
      std::uint32_t below = p.down_set(v) & ~(1u << v);
      if ((below & ~used) != 0) continue;
      bool skip = false;
      for (int u = 0; u < v && !skip; ++u) {
        if (!((used >> u) & 1u) && twin(u, v)) skip = true;
      }
      if (skip) continue;

      OrderBits next_a = partial_a;
      for (int pos = 0; pos < k; ++pos) {
        if (p.less(perm[pos], v)) next_a |= bit_value(pos, k);
      }
      // Unknown future bits are zero, so next_a bounds every completion below.
      if (have_a && next_a > best_a) continue;
      perm.push_back(v);
      used |= 1u << v;
      run(next_a);
      used &= ~(1u << v);
      perm.pop_back();
    }
  }
};

}  // namespace

OrderBits canonical_order_bits(const Poset& p) {
  MinSearch search(p);
  search.run(0);
  return search.best_a;
}

std::uint32_t minimal_temp_bits(const Poset& p, const std::vector<int>& temp,
                                OrderBits canonical_a) {
  MinSearch search(p);
  search.temp = &temp;
  search.best_a = canonical_a;
  search.have_a = true;
  search.run(0);
  return search.best_t;
}

Signature canonical_signature(const TemperedPoset& tp) {
  if (!is_connected(tp.poset)) {
    throw DisconnectedError("canonical signature requires a connected space; "
                            "compute per-component signatures instead");
  }
  Signature sig;
  sig.n = tp.poset.size();
  sig.a = canonical_order_bits(tp.poset);
  sig.t = minimal_temp_bits(tp.poset, tp.temp, sig.a);
  return sig;
}

Signature space_signature(const Poset& p) {
  if (!is_connected(p)) {
    throw DisconnectedError("space signature requires a connected space");
  }
  Signature sig;
  sig.n = p.size();
  sig.a = canonical_order_bits(p);
  sig.t = 0;
  return sig;
}

std::string to_hex(OrderBits value) {
  if (value == 0) return "0";
  static const char* digits = "0123456789ABCDEF";
  std::string out;
  while (value != 0) {
    out.push_back(digits[static_cast<unsigned>(value & 0xF)]);
    value >>= 4;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

OrderBits parse_hex(const std::string& digits) {
  if (digits.empty()) throw ParseError("empty hex field");
  if (digits.size() > 30) throw ParseError("hex field too long: " + digits);
  OrderBits v = 0;
  for (char c : digits) {
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    else throw ParseError(std::string("bad hex digit '") + c + "'");
    v = (v << 4) | OrderBits(d);
  }
  return v;
}

namespace {

// The single published alias: the claw below a greatest element computes to
// a = 0xB but the literature labels it "4.A".
constexpr OrderBits kClawComputed = 0xB;

bool is_claw_alias(const Signature& sig) {
  return sig.n == 4 && sig.a == kClawComputed;
}

std::string a_label(const Signature& sig) {
  return is_claw_alias(sig) ? "A" : to_hex(sig.a);
}

long parse_decimal(const std::string& s) {
  if (s.empty()) throw ParseError("empty numeric field");
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("bad decimal field: " + s);
    }
  }
  if (s.size() > 9) throw ParseError("decimal field too long: " + s);
  return std::stol(s);
}

}  // namespace

std::string format(const Signature& sig) {
  return std::to_string(sig.n) + "." + a_label(sig) + "." + std::to_string(sig.t);
}

std::string format_space(const Signature& sig) {
  return std::to_string(sig.n) + "." + a_label(sig);
}

Signature parse_signature(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == '.') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  if (parts.size() != 2 && parts.size() != 3) {
    throw ParseError("signature must look like n.A or n.A.t, got: " + s);
  }
  Signature sig;
  long n = parse_decimal(parts[0]);
  if (n < 1 || n > Poset::kMaxPoints) throw ParseError("point count out of range in: " + s);
  sig.n = static_cast<int>(n);
  std::string ahex = parts[1];
  for (char& c : ahex) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  sig.a = (sig.n == 4 && ahex == "A") ? kClawComputed : parse_hex(ahex);
  int max_bits = sig.n * (sig.n - 1) / 2;
  if (max_bits < 120 && sig.a >= (OrderBits(1) << max_bits)) {
    throw ParseError("order bits out of range in: " + s);
  }
  if (parts.size() == 3) {
    long t = parse_decimal(parts[2]);
    if (t < 0 || t >= (1L << sig.n)) throw ParseError("temperature bits out of range in: " + s);
    sig.t = static_cast<std::uint32_t>(t);
  }
  return sig;
}

char shape_letter(Shape s) {
  switch (s) {
    case Shape::Linear: return 'L';
    case Shape::Accordion: return 'A';
    case Shape::Fan: return 'F';
    case Shape::Y: return 'Y';
    case Shape::O: return 'O';
    case Shape::Other: return '?';
  }
  return '?';
}

namespace {

bool is_total_order(const Poset& p) {
  for (int i = 0; i < p.size(); ++i) {
    for (int j = i + 1; j < p.size(); ++j) {
      if (!p.leq(i, j) && !p.leq(j, i)) return false;
    }
  }
  return true;
}

// Removal of `removed` leaves a disjoint union of chains?
bool leaves_disjoint_chains(const Poset& p, int removed) {
  PointSet rest = p.all_points() & ~(PointSet(1) << removed);
  if (rest == 0) return true;
  Poset sub = induced_subposet(p, rest);
  for (PointSet comp : connected_components(sub)) {
    Poset part = induced_subposet(sub, comp);
    if (!is_total_order(part)) return false;
  }
  return true;
}

// Removal leaves an antichain with at least two points (claw-style fan)?
bool leaves_antichain(const Poset& p, int removed) {
  PointSet rest = p.all_points() & ~(PointSet(1) << removed);
  if (std::popcount(rest) < 2) return false;
  for (int i = 0; i < p.size(); ++i) {
    if (!((rest >> i) & 1u)) continue;
    for (int j = i + 1; j < p.size(); ++j) {
      if (!((rest >> j) & 1u)) continue;
      if (p.leq(i, j) || p.leq(j, i)) return false;
    }
  }
  return true;
}

int least_element(const Poset& p) {
  for (int i = 0; i < p.size(); ++i) {
    if (p.up_set(i) == p.all_points()) return i;
  }
  return -1;
}

int greatest_element(const Poset& p) {
  for (int i = 0; i < p.size(); ++i) {
    if (p.down_set(i) == p.all_points()) return i;
  }
  return -1;
}

}  // namespace

bool is_accordion(const Poset& p) {
  const int n = p.size();
  if (n == 1) return true;
  auto covers = transitive_reduction(p);
  if (static_cast<int>(covers.size()) != n - 1) return false;  // tree or cyclic
  std::vector<int> degree(n, 0);
  for (auto [i, j] : covers) {
    ++degree[i];
    ++degree[j];
  }
  return std::all_of(degree.begin(), degree.end(), [](int d) { return d <= 2; });
}

ShapeTag classify_shape(const Poset& p) {
  if (!is_connected(p)) {
    throw DisconnectedError("shape classification requires a connected space");
  }
  const int n = p.size();
  bool linear = is_total_order(p);
  bool accordion = is_accordion(p);

  int lo = least_element(p);
  int hi = greatest_element(p);
  bool fan = (lo >= 0 && leaves_disjoint_chains(p, lo)) ||
             (hi >= 0 && leaves_disjoint_chains(p, hi));
  bool claw_fan = (lo >= 0 && leaves_antichain(p, lo)) ||
                  (hi >= 0 && leaves_antichain(p, hi));

  auto covers = transitive_reduction(p);
  bool cyclic = static_cast<int>(covers.size()) >= n;

  ShapeTag tag;
  if (linear) {
    tag.primary = Shape::Linear;
    tag.tags = {Shape::Linear, Shape::Accordion};
  } else if (accordion) {
    tag.primary = Shape::Accordion;
    tag.tags = {Shape::Accordion};
    if (claw_fan) tag.tags.push_back(Shape::Fan);
  } else if (fan) {
    tag.primary = Shape::Fan;
    tag.tags = {Shape::Fan};
  } else if (cyclic) {
    tag.primary = Shape::O;
    tag.tags = {Shape::O};
  } else {
    // Connected, acyclic reduction, not a path: a tree with a branch vertex.
    tag.primary = Shape::Y;
    tag.tags = {Shape::Y};
  }
  return tag;
}

}  // namespace tempered
