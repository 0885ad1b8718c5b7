#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "halg/comod.hpp"
#include "halg/hopf.hpp"

namespace halg {

// ---------------------------------------------------------------------------
// Description files.
//
// A line-oriented text format for algebroid presentations and comodules.
// The grammar is bit-exact: parse(serialize(x)) == x for every object the
// serializer can emit, and the serializer is deterministic (sorted keys,
// canonical coefficient literals).
//
//   format = 1              first significant line; schema version
//   # comment               '#' starts a comment anywhere on a line
//
//   [ring]
//   ring = Z/3              ring descriptor expression, see parse_ring_expr
//
//   [basis]
//   window = 9
//   levels = 0 1 2 ...      one level per basis index (optional; default i)
//   selfdual = true         Hopf-algebra shorthand: etaR = etaL and the
//                           conj table may be omitted (it is then derived
//                           from the left inverse law)
//
//   [unit]
//   0:1                     a vector: idx:coeff entries, or "0" for zero
//
//   [mult]
//   0 1 -> 1:1              e_i * e_j for every materialized pair i <= j
//
//   [etaR]                  required unless selfdual or A has no canonical
//   0 -> 1:1                generators; one line per generator image
//
//   [delta]
//   1 -> (0,1):1 (1,0):1    Delta(e_i): (left,right):coeff entries
//
//   [epsilon]
//   1 -> 0                  eps(e_i): one coefficient literal per index
//
//   [conj]                  optional when selfdual=true, else required
//   1 -> 1:2
//
//   [comodule]              optional trailing section
//   rank = 2
//   1 0 -> 1:1              psi rows "s t -> vec": gamma_{ts} as a vector
//
// Coefficient literals use exactly the syntax RingElement::str() prints:
// plain integers, rationals "n/d", product tuples "(a,b)", and polynomial
// sums "c0+c1*u+c2*u^2" for series/extension rings (nested sums are
// parenthesized).  Ring expressions use exactly the syntax ring_str()
// prints: Z, Q, Z/m, Zp(p,k), series(var;window;base), prod(f1;f2;...),
// ext(var;base;c0,c1,...).
//
// Errors: syntax problems raise Err::Parse with the 1-based line number in
// the message; indices at or beyond the declared window raise
// Err::WindowExceeded, likewise with the line number.
// ---------------------------------------------------------------------------

// Parse a ring descriptor expression (the ring_str grammar).
RingPtr parse_ring_expr(const std::string& text);

// Parse one coefficient literal of R (the RingElement::str grammar).
RingElement parse_element(const std::string& text, const RingPtr& R);

struct DescriptionFile {
    PresPtr pres;
    std::optional<Comodule> comodule;
};

DescriptionFile parse_description(std::istream& in);
DescriptionFile parse_description_text(const std::string& text);
DescriptionFile load_description(const std::string& path);

std::string serialize_description(const DescriptionFile& f);
std::string serialize_presentation(const PresPtr& P);

// Field-by-field comparison (etaR generator images are compared only when
// the right unit is genuinely distinct from the left one).
bool presentation_equal(const Presentation& a, const Presentation& b);
bool description_equal(const DescriptionFile& a, const DescriptionFile& b);

}  // namespace halg
