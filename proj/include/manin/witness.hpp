#pragma once
// Exact equivalence witnesses between rational Manin triples: a bounded,
// deterministic search for an invertible A with transform(src, A) == dst.

#include <optional>
#include <vector>

#include "manin/triple.hpp"

namespace manin {

using TripleQ = ManinTriple<exact::Rational>;
using Mat3Q = exact::Mat3<exact::Rational>;

// True when A is invertible and transform(src, A) == dst exactly.
bool verify_witness(const TripleQ& src, const TripleQ& dst, const Mat3Q& A);

// The candidate entry values {p/q : |p| <= bound, q in {1, 2}} in the
// search order: 0, 1, -1, ..., bound, -bound, then the halves with odd
// numerator 1/2, -1/2, 3/2, ...
std::vector<exact::Rational> witness_candidate_values(int bound);

// First witness in the documented enumeration, or nullopt.  Columns of A
// are enumerated over nonzero vectors of candidate values; when some
// target bracket [X'_i, X'_j] carries a nonzero coefficient on the third
// basis vector, that column is derived instead of enumerated.  When the
// first subalgebras of both triples are abelian, the dual side is searched
// directly via M = A^T.
std::optional<Mat3Q> search_witness(const TripleQ& src, const TripleQ& dst,
                                    int bound);

}  // namespace manin
