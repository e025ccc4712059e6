#include "cubekit/hypercube.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace cubekit {

Facet facet_from_slot(int cube, int slot) {
  Facet f;
  f.cube = cube;
  f.axis = slot % 4 + 1;
  f.sign = slot < 4 ? 1 : -1;
  return f;
}

Facet facet_from_global_slot(int gslot) {
  return facet_from_slot(gslot / 8, gslot % 8);
}

std::string facet_token(const Facet& f) {
  std::string s = std::to_string(f.cube);
  s += '.';
  s += (f.sign > 0 ? '+' : '-');
  s += static_cast<char>('0' + f.axis);
  return s;
}

Facet parse_facet_token(const std::string& tok) {
  auto dot = tok.find('.');
  if (dot == std::string::npos || dot + 2 >= tok.size() || tok.size() != dot + 3)
    throw Error("bad facet token '" + tok + "'");
  Facet f;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + dot, f.cube);
  if (ec != std::errc() || ptr != tok.data() + dot || f.cube < 0)
    throw Error("bad facet token '" + tok + "'");
  char sc = tok[dot + 1];
  if (sc == '+') f.sign = 1;
  else if (sc == '-') f.sign = -1;
  else throw Error("bad facet token '" + tok + "'");
  char ac = tok[dot + 2];
  if (ac < '1' || ac > '4') throw Error("bad facet token '" + tok + "'");
  f.axis = ac - '0';
  return f;
}

namespace {

constexpr int kPairAxes[6][2] = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};

int pair_index(int a, int b) {
  for (int i = 0; i < 6; ++i)
    if (kPairAxes[i][0] == a && kPairAxes[i][1] == b) return i;
  throw Error("bad axis pair");
}

}  // namespace

int SquareFace::local_index() const {
  return pair_index(axis_a, axis_b) * 4 + (sign_a < 0 ? 2 : 0) + (sign_b < 0 ? 1 : 0);
}

std::array<int, 2> SquareFace::free_axes() const {
  std::array<int, 2> out{};
  int k = 0;
  for (int a = 1; a <= 4; ++a)
    if (a != axis_a && a != axis_b) out[k++] = a;
  return out;
}

SquareFace square_from_local(int cube, int local) {
  SquareFace q;
  q.cube = cube;
  q.axis_a = kPairAxes[local / 4][0];
  q.axis_b = kPairAxes[local / 4][1];
  q.sign_a = (local & 2) ? -1 : 1;
  q.sign_b = (local & 1) ? -1 : 1;
  return q;
}

// ---------------------------------------------------------------------------
// Group enumeration
// ---------------------------------------------------------------------------

namespace {

// entry order +1 < -1 < +2 < -2 < ...
int entry_rank(int e) { return ((e < 0 ? -e : e) - 1) * 2 + (e < 0 ? 1 : 0); }

template <int N>
std::vector<SignedPerm<N>> enumerate_group() {
  std::vector<int> entries;
  for (int a = 1; a <= N; ++a) {
    entries.push_back(a);
    entries.push_back(-a);
  }
  std::sort(entries.begin(), entries.end(),
            [](int x, int y) { return entry_rank(x) < entry_rank(y); });
  std::vector<SignedPerm<N>> out;
  SignedPerm<N> p;
  std::array<bool, N> used{};
  auto rec = [&](auto&& self, int k) -> void {
    if (k == N) {
      out.push_back(p);
      return;
    }
    for (int e : entries) {
      int a = (e < 0 ? -e : e);
      if (used[a - 1]) continue;
      used[a - 1] = true;
      p.img[k] = static_cast<int8_t>(e);
      self(self, k + 1);
      used[a - 1] = false;
    }
  };
  rec(rec, 0);
  return out;
}

template <int N>
int group_index(const std::vector<SignedPerm<N>>& all, const SignedPerm<N>& p) {
  for (size_t i = 0; i < all.size(); ++i)
    if (all[i] == p) return static_cast<int>(i);
  throw Error("not a signed permutation");
}

}  // namespace

const std::vector<SignedPerm2>& all_signed_perm2() {
  static const std::vector<SignedPerm2> all = enumerate_group<2>();
  return all;
}
const std::vector<SignedPerm3>& all_signed_perm3() {
  static const std::vector<SignedPerm3> all = enumerate_group<3>();
  return all;
}
const std::vector<SignedPerm4>& all_signed_perm4() {
  static const std::vector<SignedPerm4> all = enumerate_group<4>();
  return all;
}

int index_of(const SignedPerm2& p) { return group_index(all_signed_perm2(), p); }
int index_of(const SignedPerm3& p) { return group_index(all_signed_perm3(), p); }
int index_of(const SignedPerm4& p) { return group_index(all_signed_perm4(), p); }

std::string perm3_to_string(const SignedPerm3& p) {
  std::string s;
  for (int k = 0; k < 3; ++k) {
    if (k) s += ' ';
    s += std::to_string(static_cast<int>(p.img[k]));
  }
  return s;
}

SignedPerm3 perm3_from_string(const std::string& text) {
  std::istringstream in(text);
  SignedPerm3 p;
  std::array<bool, 3> used{};
  for (int k = 0; k < 3; ++k) {
    int v;
    if (!(in >> v)) throw Error("bad isometry '" + text + "'");
    int a = (v < 0 ? -v : v);
    if (a < 1 || a > 3 || used[a - 1]) throw Error("bad isometry '" + text + "'");
    used[a - 1] = true;
    p.img[k] = static_cast<int8_t>(v);
  }
  std::string rest;
  if (in >> rest) throw Error("bad isometry '" + text + "'");
  return p;
}

// ---------------------------------------------------------------------------
// Orientation and intrinsic coordinates
// ---------------------------------------------------------------------------

std::array<int, 3> intrinsic_axes(int facet_axis) {
  std::array<int, 3> out{};
  int k = 0;
  for (int a = 1; a <= 4; ++a)
    if (a != facet_axis) out[k++] = a;
  return out;
}

int intrinsic_position(int facet_axis, int ambient_axis) {
  auto axes = intrinsic_axes(facet_axis);
  for (int k = 0; k < 3; ++k)
    if (axes[k] == ambient_axis) return k;
  throw Error("axis not intrinsic to facet");
}

int facet_orientation_sign(const Facet& f) {
  return f.sign * (f.axis % 2 == 0 ? 1 : -1);
}

std::array<SquareFace, 6> squares_of_facet(const Facet& f) {
  std::array<SquareFace, 6> out;
  auto axes = intrinsic_axes(f.axis);
  int k = 0;
  for (int i = 0; i < 3; ++i) {
    for (int t : {1, -1}) {
      SquareFace q;
      q.cube = f.cube;
      int b = axes[i];
      if (f.axis < b) {
        q.axis_a = f.axis; q.sign_a = f.sign;
        q.axis_b = b;      q.sign_b = t;
      } else {
        q.axis_a = b;      q.sign_a = t;
        q.axis_b = f.axis; q.sign_b = f.sign;
      }
      out[k++] = q;
    }
  }
  std::sort(out.begin(), out.end(), [](const SquareFace& x, const SquareFace& y) {
    return x.local_index() < y.local_index();
  });
  return out;
}

bool facet_contains(const Facet& f, const SquareFace& q) {
  if (f.cube != q.cube) return false;
  if (f.axis == q.axis_a) return f.sign == q.sign_a;
  if (f.axis == q.axis_b) return f.sign == q.sign_b;
  return false;
}

Facet other_facet(const SquareFace& q, const Facet& f) {
  if (!facet_contains(f, q)) throw Error("facet does not contain square");
  Facet g;
  g.cube = q.cube;
  if (f.axis == q.axis_a) { g.axis = q.axis_b; g.sign = q.sign_b; }
  else                    { g.axis = q.axis_a; g.sign = q.sign_a; }
  return g;
}

// ---------------------------------------------------------------------------
// Frames and transport
// ---------------------------------------------------------------------------

SquareFrame canonical_frame(const SquareFace& q) {
  auto free = q.free_axes();
  return SquareFrame{q, {free[0], 1}, {free[1], 1}};
}

SignedPerm2 frame_coordinates(const SquareFrame& fr) {
  auto free = fr.square.free_axes();
  SignedPerm2 m;
  const SignedAxis* ts[2] = {&fr.tangent1, &fr.tangent2};
  for (int j = 0; j < 2; ++j) {
    int idx = -1;
    for (int i = 0; i < 2; ++i)
      if (free[i] == ts[j]->axis) idx = i;
    if (idx < 0) throw Error("frame does not span square");
    m.img[j] = static_cast<int8_t>(ts[j]->sign * (idx + 1));
  }
  if (m.img[0] == m.img[1] || m.img[0] == -m.img[1])
    throw Error("degenerate frame");
  return m;
}

SignedAxis map_tangent(const FacetPairing& pairing, const SignedAxis& t) {
  if (t.axis == pairing.source.axis) throw Error("tangent not intrinsic to source facet");
  int k = intrinsic_position(pairing.source.axis, t.axis);
  int m = pairing.map.img[k];
  int tgt_pos = (m < 0 ? -m : m) - 1;
  SignedAxis out;
  out.axis = intrinsic_axes(pairing.target.axis)[tgt_pos];
  out.sign = t.sign * (m < 0 ? -1 : 1);
  return out;
}

SquareFace map_square_only(const FacetPairing& pairing, const SquareFace& q) {
  if (!facet_contains(pairing.source, q)) throw Error("square not in source facet");
  // q is the intrinsic face {x_b = t} of the source 3-cube
  Facet off = other_facet(q, pairing.source);
  SignedAxis image = map_tangent(pairing, SignedAxis{off.axis, off.sign});
  SquareFace out;
  out.cube = pairing.target.cube;
  int a = pairing.target.axis, sa = pairing.target.sign;
  int b = image.axis, sb = image.sign;
  if (a < b) { out.axis_a = a; out.sign_a = sa; out.axis_b = b; out.sign_b = sb; }
  else       { out.axis_a = b; out.sign_a = sb; out.axis_b = a; out.sign_b = sa; }
  return out;
}

std::pair<SquareFace, SquareFrame> map_square(const FacetPairing& pairing,
                                              const SquareFace& q,
                                              const SquareFrame& frame) {
  if (frame.square != q) throw Error("frame not over the given square");
  frame_coordinates(frame);  // validates spanning
  SquareFace out = map_square_only(pairing, q);
  SquareFrame fr;
  fr.square = out;
  fr.tangent1 = map_tangent(pairing, frame.tangent1);
  fr.tangent2 = map_tangent(pairing, frame.tangent2);
  return {out, fr};
}

Facet apply_to_facet(const SignedPerm4& g, const Facet& f) {
  int m = g.img[f.axis - 1];
  Facet out;
  out.cube = f.cube;
  out.axis = (m < 0 ? -m : m);
  out.sign = f.sign * (m < 0 ? -1 : 1);
  return out;
}

SignedPerm3 induced_facet_map(const SignedPerm4& g, const Facet& f) {
  Facet f2 = apply_to_facet(g, f);
  auto src_axes = intrinsic_axes(f.axis);
  SignedPerm3 p;
  for (int k = 0; k < 3; ++k) {
    int m = g.img[src_axes[k] - 1];
    int pos = intrinsic_position(f2.axis, (m < 0 ? -m : m));
    p.img[k] = static_cast<int8_t>((m < 0 ? -1 : 1) * (pos + 1));
  }
  return p;
}

SquareFace apply_to_square(const SignedPerm4& g, const SquareFace& q) {
  auto map1 = [&](int axis, int sign) {
    int m = g.img[axis - 1];
    return std::pair<int, int>{(m < 0 ? -m : m), sign * (m < 0 ? -1 : 1)};
  };
  auto [a1, s1] = map1(q.axis_a, q.sign_a);
  auto [a2, s2] = map1(q.axis_b, q.sign_b);
  SquareFace out;
  out.cube = q.cube;
  if (a1 < a2) { out.axis_a = a1; out.sign_a = s1; out.axis_b = a2; out.sign_b = s2; }
  else         { out.axis_a = a2; out.sign_a = s2; out.axis_b = a1; out.sign_b = s1; }
  return out;
}

// ---------------------------------------------------------------------------
// Monodromy classes
// ---------------------------------------------------------------------------

MonodromyClass monodromy_class(const SignedPerm2& m) {
  bool swap = ((m.img[0] < 0 ? -m.img[0] : m.img[0]) == 2);
  bool n0 = m.img[0] < 0, n1 = m.img[1] < 0;
  if (!swap) {
    if (!n0 && !n1) return MonodromyClass::I;
    if (n0 && n1) return MonodromyClass::MinusI;
    return MonodromyClass::ReflAxis;
  }
  // axis swap: det = -s0*s1, rotations have s0*s1 = -1
  if (n0 != n1) return MonodromyClass::R4;
  return MonodromyClass::ReflDiag;
}

std::string to_string(MonodromyClass c) {
  switch (c) {
    case MonodromyClass::I: return "I";
    case MonodromyClass::MinusI: return "-I";
    case MonodromyClass::R4: return "R4";
    case MonodromyClass::ReflAxis: return "refl-axis";
    case MonodromyClass::ReflDiag: return "refl-diag";
  }
  return "?";
}

MonodromyClass monodromy_class_from_string(const std::string& s) {
  if (s == "I") return MonodromyClass::I;
  if (s == "-I") return MonodromyClass::MinusI;
  if (s == "R4") return MonodromyClass::R4;
  if (s == "refl-axis") return MonodromyClass::ReflAxis;
  if (s == "refl-diag") return MonodromyClass::ReflDiag;
  throw Error("unknown monodromy class '" + s + "'");
}

bool orientation_preserving(MonodromyClass c) {
  return c == MonodromyClass::I || c == MonodromyClass::MinusI || c == MonodromyClass::R4;
}

}  // namespace cubekit
