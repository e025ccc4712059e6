#ifndef CUBEKIT_HYPERCUBE_HPP
#define CUBEKIT_HYPERCUBE_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Exact combinatorics of the 4-cube H = [-1,1]^4: facets, square 2-faces,
// signed-permutation groups, and the action of a facet pairing on squares
// and tangent frames.  Everything here is integer arithmetic.

namespace cubekit {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --------------------------------------------------------------------------
// Facets and square 2-faces
// --------------------------------------------------------------------------

// One of the 8 cubic facets of a hypercube: the 3-cube {x_axis = sign}.
struct Facet {
  int cube = 0;  // 0-based hypercube index
  int axis = 1;  // 1..4
  int sign = 1;  // +1 or -1

  // Slot 0..7 within the cube, ordered (+1,+2,+3,+4,-1,-2,-3,-4).
  // This matches the byte order of the textual facet token.
  int slot() const { return (sign < 0 ? 4 : 0) + (axis - 1); }
  int global_slot() const { return cube * 8 + slot(); }

  friend bool operator==(const Facet& a, const Facet& b) {
    return a.cube == b.cube && a.axis == b.axis && a.sign == b.sign;
  }
  friend bool operator!=(const Facet& a, const Facet& b) { return !(a == b); }
  friend bool operator<(const Facet& a, const Facet& b) {
    return a.global_slot() < b.global_slot();
  }
};

Facet facet_from_slot(int cube, int slot);
Facet facet_from_global_slot(int gslot);

// Textual form "<cube>.<sign><axis>", e.g. "0.+1" or "2.-4".
std::string facet_token(const Facet& f);
Facet parse_facet_token(const std::string& tok);

// A square 2-face {x_a = sign_a, x_b = sign_b} with a < b.  It lies in
// exactly the two facets (a, sign_a) and (b, sign_b) and is spanned by the
// remaining two ambient axes.
struct SquareFace {
  int cube = 0;
  int axis_a = 1, axis_b = 2;  // constrained axes, axis_a < axis_b
  int sign_a = 1, sign_b = 1;

  int local_index() const;             // 0..23 within the cube
  int global_index() const { return cube * 24 + local_index(); }
  std::array<int, 2> free_axes() const;  // the two spanning axes, increasing

  friend bool operator==(const SquareFace& a, const SquareFace& b) {
    return a.cube == b.cube && a.axis_a == b.axis_a && a.axis_b == b.axis_b &&
           a.sign_a == b.sign_a && a.sign_b == b.sign_b;
  }
  friend bool operator!=(const SquareFace& a, const SquareFace& b) { return !(a == b); }
};

SquareFace square_from_local(int cube, int local);

// --------------------------------------------------------------------------
// Signed permutation groups
// --------------------------------------------------------------------------

// Element of the symmetry group of the N-cube (order 2^N * N!): axis k+1
// maps to axis |img[k]| with sign sgn(img[k]).  Composition is written
// "apply left first": compose(p, q)(x) = q(p(x)).
template <int N>
struct SignedPerm {
  std::array<int8_t, N> img{};

  static SignedPerm identity() {
    SignedPerm p;
    for (int k = 0; k < N; ++k) p.img[k] = static_cast<int8_t>(k + 1);
    return p;
  }

  bool is_identity() const { return *this == identity(); }

  int det() const {
    // permutation parity times the product of signs
    int sign_prod = 1;
    std::array<int, N> perm;
    for (int k = 0; k < N; ++k) {
      sign_prod *= (img[k] < 0) ? -1 : 1;
      perm[k] = (img[k] < 0 ? -img[k] : img[k]) - 1;
    }
    int parity = 1;
    std::array<bool, N> seen{};
    for (int k = 0; k < N; ++k) {
      if (seen[k]) continue;
      int len = 0, j = k;
      while (!seen[j]) { seen[j] = true; j = perm[j]; ++len; }
      if (len % 2 == 0) parity = -parity;
    }
    return parity * sign_prod;
  }

  friend bool operator==(const SignedPerm& a, const SignedPerm& b) { return a.img == b.img; }
  friend bool operator!=(const SignedPerm& a, const SignedPerm& b) { return !(a == b); }
  friend bool operator<(const SignedPerm& a, const SignedPerm& b) { return a.img < b.img; }
};

using SignedPerm2 = SignedPerm<2>;  // square symmetries, order 8
using SignedPerm3 = SignedPerm<3>;  // 3-cube symmetries, order 48
using SignedPerm4 = SignedPerm<4>;  // hypercube symmetries, order 384

template <int N>
SignedPerm<N> compose(const SignedPerm<N>& p, const SignedPerm<N>& q) {
  // apply p, then q
  SignedPerm<N> r;
  for (int k = 0; k < N; ++k) {
    int m = p.img[k];
    int s = (m < 0) ? -1 : 1;
    r.img[k] = static_cast<int8_t>(s * q.img[(m < 0 ? -m : m) - 1]);
  }
  return r;
}

template <int N>
SignedPerm<N> invert(const SignedPerm<N>& p) {
  SignedPerm<N> r;
  for (int k = 0; k < N; ++k) {
    int m = p.img[k];
    int a = (m < 0 ? -m : m);
    r.img[a - 1] = static_cast<int8_t>((m < 0 ? -1 : 1) * (k + 1));
  }
  return r;
}

// All group elements in a fixed canonical order: lexicographic over the
// image triple with entry order +1 < -1 < +2 < -2 < ...  Index 0 is the
// identity.
const std::vector<SignedPerm2>& all_signed_perm2();
const std::vector<SignedPerm3>& all_signed_perm3();
const std::vector<SignedPerm4>& all_signed_perm4();

int index_of(const SignedPerm2& p);
int index_of(const SignedPerm3& p);
int index_of(const SignedPerm4& p);

// Textual form "2 -1 3": axis 1 -> +2, axis 2 -> -1, axis 3 -> +3.
std::string perm3_to_string(const SignedPerm3& p);
SignedPerm3 perm3_from_string(const std::string& text);

// --------------------------------------------------------------------------
// Orientation and intrinsic coordinates
// --------------------------------------------------------------------------

// The intrinsic coordinates of facet (a,s) are the three ambient axes != a
// in increasing order, indexed 1..3.  A pairing isometry acts
// intrinsic(F1) -> intrinsic(F2).
std::array<int, 3> intrinsic_axes(int facet_axis);
int intrinsic_position(int facet_axis, int ambient_axis);  // 0-based

// Boundary-orientation sign eps(a,s) = s * (-1)^a.  A pairing map P between
// facets F1, F2 reverses the induced boundary orientations iff
// det(P) * eps(F1) * eps(F2) == -1.
int facet_orientation_sign(const Facet& f);

// The 6 squares contained in a facet, ordered by local square index.
std::array<SquareFace, 6> squares_of_facet(const Facet& f);

// The unique other facet containing q.  Throws if f does not contain q.
Facet other_facet(const SquareFace& q, const Facet& f);

bool facet_contains(const Facet& f, const SquareFace& q);

// --------------------------------------------------------------------------
// Frames and the induced action on squares
// --------------------------------------------------------------------------

// A signed ambient axis, e.g. -e3.
struct SignedAxis {
  int axis = 1;  // 1..4
  int sign = 1;

  friend bool operator==(const SignedAxis& a, const SignedAxis& b) {
    return a.axis == b.axis && a.sign == b.sign;
  }
  friend bool operator!=(const SignedAxis& a, const SignedAxis& b) { return !(a == b); }
};

// An ordered tangent frame on a square: two signed ambient axes spanning it.
struct SquareFrame {
  SquareFace square;
  SignedAxis tangent1, tangent2;
};

// Canonical frame: (+e_f1, +e_f2) over the increasing free axes.
SquareFrame canonical_frame(const SquareFace& q);

// Express a frame over its square's canonical basis as a SignedPerm2:
// tangent_j = sign * e_{free(idx)} gives img[j] = +-(idx+1).
SignedPerm2 frame_coordinates(const SquareFrame& fr);

struct FacetPairing {
  Facet source, target;
  SignedPerm3 map;  // intrinsic(source) -> intrinsic(target)
};

// Transport a square and a spanning frame through a facet pairing.
// Throws if q is not a square of the source facet or the frame does not
// span q.
std::pair<SquareFace, SquareFrame> map_square(const FacetPairing& pairing,
                                              const SquareFace& q,
                                              const SquareFrame& frame);

// Square image only (no frame bookkeeping).
SquareFace map_square_only(const FacetPairing& pairing, const SquareFace& q);

// Transport a single signed tangent axis.
SignedAxis map_tangent(const FacetPairing& pairing, const SignedAxis& t);

// Induced action of a hypercube symmetry on facets and its restriction to
// intrinsic facet coordinates.
Facet apply_to_facet(const SignedPerm4& g, const Facet& f);
SignedPerm3 induced_facet_map(const SignedPerm4& g, const Facet& f);
SquareFace apply_to_square(const SignedPerm4& g, const SquareFace& q);

// --------------------------------------------------------------------------
// Monodromy classes
// --------------------------------------------------------------------------

// Conjugacy classes of the square symmetry group (order 8).  The
// orientation-preserving classes are I, -I and R4 (the two order-4
// rotations are conjugate).
enum class MonodromyClass { I, MinusI, R4, ReflAxis, ReflDiag };

MonodromyClass monodromy_class(const SignedPerm2& m);
std::string to_string(MonodromyClass c);
MonodromyClass monodromy_class_from_string(const std::string& s);
bool orientation_preserving(MonodromyClass c);

}  // namespace cubekit

#endif
