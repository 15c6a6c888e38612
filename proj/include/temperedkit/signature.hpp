#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "temperedkit/poset.hpp"

namespace tempered {

// Order bits can reach n(n-1)/2 = 120 for sixteen points.
using OrderBits = unsigned __int128;

// Canonical identifier of a (tempered) finite T0 space. `a` packs the strict
// full order bits a_{1,2}..a_{n-1,n} row-major, most significant first, and
// `t` the temperatures in position order, most significant first. The pair
// (a, t) is the lexicographic minimum over all linear extensions.
struct Signature {
  int n = 0;
  OrderBits a = 0;
  std::uint32_t t = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
  friend std::strong_ordering operator<=>(const Signature& lhs, const Signature& rhs) {
    if (lhs.n != rhs.n) return lhs.n <=> rhs.n;
    if (lhs.a != rhs.a) return lhs.a < rhs.a ? std::strong_ordering::less
                                             : std::strong_ordering::greater;
    return lhs.t <=> rhs.t;
  }
};

// Minimal (a, t) over linear extensions; requires a connected poset.
Signature canonical_signature(const TemperedPoset& tp);

// Temperature-free signature: canonical a with all-zero temperatures.
Signature space_signature(const Poset& p);

// Raw minimisers without the connectivity requirement. The census uses these
// to canonicalise disconnected spaces as well.
OrderBits canonical_order_bits(const Poset& p);
std::uint32_t minimal_temp_bits(const Poset& p, const std::vector<int>& temp,
                                OrderBits canonical_a);

// "n.A.t" with a in uppercase hex and t in decimal; "n.A" without t.
// The computed claw value (4, 0xB) renders under its published label "4.A".
std::string format(const Signature& sig);
std::string format_space(const Signature& sig);

// Accepts "n.A.t" and "n.A"; hex case-insensitive; "4.A..." aliases to 0xB.
Signature parse_signature(const std::string& s);

std::string to_hex(OrderBits value);
OrderBits parse_hex(const std::string& digits);

// Shape classes used to organise the classification results.
enum class Shape { Linear, Accordion, Fan, Y, O, Other };

char shape_letter(Shape s);

// Primary shape plus the published tag column (e.g. {L, A} for chains).
struct ShapeTag {
  Shape primary = Shape::Other;
  std::vector<Shape> tags;
};

ShapeTag classify_shape(const Poset& p);

// True when the undirected transitive-reduction graph is a simple path.
bool is_accordion(const Poset& p);

}  // namespace tempered
