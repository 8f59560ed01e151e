#pragma once

#include <utility>

#include "octo/octonion.hpp"
#include "octo/realmat.hpp"

namespace octo {

enum class RepKind { Left, Right };

// 8x8 left matrix representation: vec(a x) == left_rep(a) vec(x).
// Built directly from the explicit sign pattern; the blockwise form
// [[phi(a'), -tau(a'')K4], [phi(a'')K4, tau(a')]] is equal entry for entry.
RealMatrix left_rep(const Octonion& a);

// 8x8 right matrix representation: vec(x a) == right_rep(a) vec(x).
// Equals K8 left_rep(a)^T K8 with K8 = diag(1, -1, ..., -1).
RealMatrix right_rep(const Octonion& a);

RealMatrix rep(RepKind kind, const Octonion& a);

RealVector vec(const Octonion& x);
Octonion unvec(const RealVector& v);  // throws on dim != 8

// delta(a, b) = left_rep(a) - right_rep(b): the real coefficient matrix of
// the map x -> a x - x b.
RealMatrix delta(const Octonion& a, const Octonion& b);

// The two closed forms for det(delta(a, b)); both should match the direct
// determinant.
std::pair<double, double> delta_det_closed(const Octonion& a, const Octonion& b);

// Expanded characteristic polynomial of delta(a, b): with s = Re a - Re b,
// [ (l-s)^2 + |Im a + Im b|^2 ]^2 [ (l-s)^2 + (|Im a|-|Im b|)^2 ]
//                                 [ (l-s)^2 + (|Im a|+|Im b|)^2 ].
Polynomial delta_char_poly(const Octonion& a, const Octonion& b);

// mu(a, b) = left_rep(a) right_rep(b) - right_rep(b) left_rep(a): the real
// coefficient matrix of the associator map x -> (ab)x - a(bx) = a(xb) - (ax)b.
RealMatrix mu(const Octonion& a, const Octonion& b);

// Representation of a^-1; equals the matrix inverse of the representation.
RealMatrix rep_inverse(RepKind kind, const Octonion& a);  // throws on zero

}  // namespace octo
