#include "parrig/tiling.hpp"

#include "parrig/apc.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace parrig {

namespace {

constexpr double kSqrt3 = 1.7320508075688772935;

// Unit vector at (30*k) degrees, exact on the quarter lattice.
ExactCoord unit_dir(int deg) {
  static const std::array<ExactCoord, 12> table = {{
      {{4, 0}, {0, 0}},   // 0
      {{0, 2}, {2, 0}},   // 30
      {{2, 0}, {0, 2}},   // 60
      {{0, 0}, {4, 0}},   // 90
      {{-2, 0}, {0, 2}},  // 120
      {{0, -2}, {2, 0}},  // 150
      {{-4, 0}, {0, 0}},  // 180
      {{0, -2}, {-2, 0}}, // 210
      {{-2, 0}, {0, -2}}, // 240
      {{0, 0}, {-4, 0}},  // 270
      {{2, 0}, {0, -2}},  // 300
      {{0, 2}, {-2, 0}},  // 330
  }};
  int k = ((deg / 30) % 12 + 12) % 12;
  return table[static_cast<size_t>(k)];
}

ExactCoord scaled(const ExactCoord& c, std::int64_t n) {
  return {{c.x.p * n, c.x.q * n}, {c.y.p * n, c.y.q * n}};
}

struct CoordHash {
  size_t operator()(const ExactCoord& c) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&](std::uint64_t x) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    mix(static_cast<std::uint64_t>(c.x.p));
    mix(static_cast<std::uint64_t>(c.x.q));
    mix(static_cast<std::uint64_t>(c.y.p));
    mix(static_cast<std::uint64_t>(c.y.q));
    return static_cast<size_t>(h);
  }
};

struct Motif {
  std::vector<std::pair<std::string, ExactCoord>> verts;
  std::vector<std::pair<int, int>> edges;

  int add(std::string role, ExactCoord at) {
    verts.emplace_back(std::move(role), at);
    return static_cast<int>(verts.size()) - 1;
  }
  void link(int a, int b) { edges.emplace_back(a, b); }
};

struct TilingDef {
  std::string name;
  std::vector<std::string> aliases;
  ExactCoord t1, t2;
  Motif motif;
  bool half_open = false;  // anchors in [-N..N-1] instead of [-N..N]
};

std::string rs(const char* stem, int r) { return stem + std::to_string(r); }

TilingDef def_triangular() {
  TilingDef d;
  d.name = "[3^6]";
  d.aliases = {"3^6", "36", "triangular"};
  d.t1 = unit_dir(0);
  d.t2 = unit_dir(60);
  Motif& m = d.motif;
  int v0 = m.add("v", {});
  int v1 = m.add("v", d.t1);
  int v2 = m.add("v", d.t2);
  m.link(v0, v1);
  m.link(v0, v2);
  m.link(v1, v2);
  return d;
}

TilingDef def_square() {
  TilingDef d;
  d.name = "[4^4]";
  d.aliases = {"4^4", "44", "square"};
  d.t1 = unit_dir(0);
  d.t2 = unit_dir(90);
  d.half_open = true;
  Motif& m = d.motif;
  int v00 = m.add("v", {});
  int v10 = m.add("v", d.t1);
  int v01 = m.add("v", d.t2);
  int v11 = m.add("v", d.t1 + d.t2);
  m.link(v00, v10);
  m.link(v00, v01);
  m.link(v10, v11);
  m.link(v01, v11);
  return d;
}

TilingDef def_hexagonal() {
  TilingDef d;
  d.name = "[6^3]";
  d.aliases = {"6^3", "63", "666", "hexagonal", "honeycomb"};
  d.t1 = {{0, 4}, {0, 0}};
  d.t2 = {{0, 2}, {6, 0}};
  Motif& m = d.motif;
  std::array<int, 6> a;
  for (int r = 0; r < 6; ++r) a[r] = m.add(rs("a", r + 1), unit_dir(30 + 60 * r));
  for (int r = 0; r < 6; ++r) m.link(a[r], a[(r + 1) % 6]);
  return d;
}

TilingDef def_kagome() {
  TilingDef d;
  d.name = "[3.6.3.6]";
  d.aliases = {"3.6.3.6", "3636", "kagome"};
  d.t1 = {{0, 16}, {0, 0}};
  d.t2 = {{0, 8}, {8, 0}};
  Motif& m = d.motif;
  std::array<int, 6> a, b;
  for (int r = 0; r < 6; ++r) a[r] = m.add(rs("a", r + 1), unit_dir(30 + 60 * r));
  for (int r = 0; r < 6; ++r)
    b[r] = m.add(rs("b", r + 1), m.verts[a[r]].second + unit_dir(90 + 60 * r));
  for (int r = 0; r < 6; ++r) {
    m.link(a[r], a[(r + 1) % 6]);
    m.link(a[r], b[r]);
    m.link(b[r], a[(r + 1) % 6]);
  }
  // two corner triangles pointing east and west
  int c6 = m.add("c6", m.verts[b[5]].second + unit_dir(30));
  int c6s = m.add("c6s", m.verts[b[5]].second + unit_dir(330));
  m.link(b[5], c6);
  m.link(c6, c6s);
  m.link(c6s, b[5]);
  int c3 = m.add("c3", m.verts[b[2]].second + unit_dir(210));
  int c3s = m.add("c3s", m.verts[b[2]].second + unit_dir(150));
  m.link(b[2], c3);
  m.link(c3, c3s);
  m.link(c3s, b[2]);
  return d;
}

TilingDef def_hex_rhombi() {
  TilingDef d;
  d.name = "[3^6;3^2.4.3.4;3^2.4.3.4]";
  d.aliases = {"3^6;3^2.4.3.4;3^2.4.3.4", "333333-33434-33434"};
  d.t1 = {{12, 8}, {0, 0}};
  d.t2 = {{6, 4}, {4, 2}};
  Motif& m = d.motif;
  int a0 = m.add("a0", {});
  std::array<int, 6> a;
  for (int r = 0; r < 6; ++r) a[r] = m.add(rs("a", r + 1), unit_dir(30 + 60 * r));
  for (int r = 0; r < 6; ++r) {
    m.link(a0, a[r]);
    m.link(a[r], a[(r + 1) % 6]);
  }
  auto rhombus = [&](int base, const char* n1, const char* n2, const char* n3,
                     int deg1, int deg2) {
    ExactCoord pb = m.verts[base].second;
    int w1 = m.add(n1, pb + unit_dir(deg1));
    int w2 = m.add(n2, pb + unit_dir(deg2));
    int w3 = m.add(n3, pb + unit_dir(deg1) + unit_dir(deg2));
    m.link(base, w1);
    m.link(base, w2);
    m.link(w1, w2);
    m.link(w1, w3);
    m.link(w2, w3);
    return std::array<int, 3>{w1, w2, w3};
  };
  auto bb = rhombus(a[0], "b1", "b2", "b3", 0, 60);
  auto cc = rhombus(a[5], "c1", "c2", "c3", 0, 300);
  auto dd = rhombus(a[4], "d1", "d2", "d3", 300, 240);
  int d2s = m.add("d2s", m.verts[cc[0]].second + unit_dir(30));
  m.link(bb[0], cc[0]);
  m.link(bb[0], d2s);
  m.link(cc[0], d2s);
  int b2s = m.add("b2s", m.verts[dd[0]].second + unit_dir(330));
  m.link(dd[0], cc[1]);
  m.link(dd[0], b2s);
  m.link(cc[1], b2s);
  return d;
}

// shared skeleton of the two rhombitrihexagonal variants: six triangles
// (a_r, b_r, c_r) around a central hexagon, rim and outer square edges
struct TriHexSkeleton {
  std::array<int, 6> a, b, c;
};

TriHexSkeleton trihex_skeleton(Motif& m) {
  TriHexSkeleton s;
  for (int r = 0; r < 6; ++r) s.a[r] = m.add(rs("a", r + 1), unit_dir(30 + 60 * r));
  for (int r = 0; r < 6; ++r)
    s.b[r] = m.add(rs("b", r + 1), m.verts[s.a[r]].second + unit_dir(60 * r));
  for (int r = 0; r < 6; ++r)
    s.c[r] = m.add(rs("c", r + 1), m.verts[s.a[r]].second + unit_dir(60 + 60 * r));
  for (int r = 0; r < 6; ++r) {
    m.link(s.a[r], s.b[r]);
    m.link(s.b[r], s.c[r]);
    m.link(s.c[r], s.a[r]);
    m.link(s.a[r], s.a[(r + 1) % 6]);
    m.link(s.c[r], s.b[(r + 1) % 6]);
  }
  return s;
}

TilingDef def_trihex_squares() {
  TilingDef d;
  d.name = "[3.4.6.4;3^2.4.3.4]";
  d.aliases = {"3.4.6.4;3^2.4.3.4", "3464-33434"};
  d.t1 = {{12, 8}, {0, 0}};
  d.t2 = {{6, 4}, {4, 2}};
  Motif& m = d.motif;
  TriHexSkeleton s = trihex_skeleton(m);
  int d1 = m.add("d1", m.verts[s.c[0]].second + unit_dir(90));
  m.link(s.c[0], d1);
  m.link(d1, s.b[1]);
  int d2 = m.add("d2", m.verts[s.c[1]].second + unit_dir(150));
  m.link(s.c[1], d2);
  m.link(d2, s.b[2]);
  return d;
}

TilingDef def_squares_rows() {
  TilingDef d;
  d.name = "[3.3.4.3.4;3.4.6.4;3.4.4.6]";
  d.aliases = {"3.3.4.3.4;3.4.6.4;3.4.4.6", "33434-3464-3446"};
  d.t1 = {{4, 8}, {0, 0}};
  d.t2 = {{2, 4}, {4, 2}};
  Motif& m = d.motif;
  int a1 = m.add("a1", {{-2, 0}, {0, 0}});
  int a2 = m.add("a2", {{2, 0}, {0, 0}});
  int b1 = m.add("b1", m.verts[a1].second + unit_dir(60));
  int b2 = m.add("b2", m.verts[a1].second + unit_dir(300));
  m.link(a1, a2);
  m.link(a1, b1);
  m.link(a1, b2);
  m.link(a2, b1);
  m.link(a2, b2);
  int ra1 = m.add("ra1", m.verts[a2].second + unit_dir(30));
  int ra2 = m.add("ra2", m.verts[a2].second + unit_dir(330));
  int rb1 = m.add("rb1", m.verts[b1].second + unit_dir(30));
  int rb2 = m.add("rb2", m.verts[b2].second + unit_dir(330));
  m.link(a2, ra1);
  m.link(a2, ra2);
  m.link(ra1, ra2);
  m.link(b1, rb1);
  m.link(b2, rb2);
  m.link(ra1, rb1);
  m.link(ra2, rb2);
  int la1 = m.add("la1", m.verts[a1].second + unit_dir(150));
  int la2 = m.add("la2", m.verts[a1].second + unit_dir(210));
  int lb1 = m.add("lb1", m.verts[b1].second + unit_dir(150));
  int lb2 = m.add("lb2", m.verts[b2].second + unit_dir(210));
  m.link(a1, la1);
  m.link(a1, la2);
  m.link(la1, la2);
  m.link(b1, lb1);
  m.link(b2, lb2);
  return d;
}

TilingDef def_spoked() {
  TilingDef d;
  d.name = "[3^2.6^2;3.6.3.6;6^3]";
  d.aliases = {"3^2.6^2;3.6.3.6;6^3", "3366-3636-666"};
  d.t1 = {{0, 20}, {0, 0}};
  d.t2 = {{0, 10}, {10, 0}};
  Motif& m = d.motif;
  std::array<int, 6> a, b;
  for (int r = 0; r < 6; ++r) a[r] = m.add(rs("a", r + 1), unit_dir(30 + 60 * r));
  for (int r = 0; r < 6; ++r)
    b[r] = m.add(rs("b", r + 1), scaled(unit_dir(30 + 60 * r), 2));
  for (int r = 0; r < 6; ++r) {
    m.link(a[r], b[r]);
    m.link(a[r], a[(r + 1) % 6]);
  }
  std::array<int, 3> cl, cr;
  for (int r = 0; r < 3; ++r) {
    int c = m.add(rs("c", r + 1), scaled(unit_dir(30 + 60 * r), 3));
    cr[r] = m.add(rs("cr", r + 1), m.verts[b[r]].second + unit_dir(60 * r - 30));
    cl[r] = m.add(rs("cl", r + 1), m.verts[b[r]].second + unit_dir(60 * r + 90));
    m.link(b[r], c);
    m.link(b[r], cl[r]);
    m.link(b[r], cr[r]);
    m.link(c, cl[r]);
    m.link(c, cr[r]);
  }
  int f1 = m.add("f1", m.verts[cl[0]].second + unit_dir(90));
  m.link(cl[0], cr[1]);
  m.link(cr[1], f1);
  m.link(f1, cl[0]);
  int f2 = m.add("f2", m.verts[cl[1]].second + unit_dir(150));
  m.link(cl[1], cr[2]);
  m.link(cr[2], f2);
  m.link(f2, cl[1]);
  return d;
}

TilingDef def_trihex_ladders() {
  TilingDef d;
  d.name = "[3.4.6.4;3.4.6.4;3.4.4.6]";
  d.aliases = {"3.4.6.4;3.4.6.4;3.4.4.6", "3464-3464-3446"};
  d.t1 = {{24, 8}, {0, 0}};
  d.t2 = {{12, 4}, {4, 4}};
  Motif& m = d.motif;
  TriHexSkeleton s = trihex_skeleton(m);
  std::array<int, 6> dd, ee;
  for (int r = 0; r < 6; ++r) {
    dd[r] = m.add(rs("d", r + 1), m.verts[s.b[r]].second + unit_dir(60 * r));
    ee[r] = m.add(rs("e", r + 1), m.verts[s.c[r]].second + unit_dir(60 + 60 * r));
    m.link(s.b[r], dd[r]);
    m.link(s.c[r], ee[r]);
  }
  int f1 = m.add("f1", m.verts[ee[0]].second + unit_dir(90));
  m.link(ee[0], dd[1]);
  m.link(ee[0], f1);
  m.link(dd[1], f1);
  int f2 = m.add("f2", m.verts[ee[1]].second + unit_dir(150));
  m.link(ee[1], dd[2]);
  m.link(ee[1], f2);
  m.link(dd[2], f2);
  return d;
}

const std::vector<TilingDef>& tiling_defs() {
  static const std::vector<TilingDef> defs = [] {
    std::vector<TilingDef> v;
    v.push_back(def_triangular());
    v.push_back(def_square());
    v.push_back(def_hexagonal());
    v.push_back(def_kagome());
    v.push_back(def_hex_rhombi());
    v.push_back(def_trihex_squares());
    v.push_back(def_squares_rows());
    v.push_back(def_spoked());
    v.push_back(def_trihex_ladders());
    return v;
  }();
  return defs;
}

std::string normalized(const std::string& raw) {
  std::string s;
  for (char ch : raw) {
    auto u = static_cast<unsigned char>(ch);
    if (std::isspace(u) || ch == '[' || ch == ']') continue;
    s += static_cast<char>(std::tolower(u));
  }
  return s;
}

const TilingDef* find_def_opt(const std::string& name) {
  const std::string key = normalized(name);
  for (const TilingDef& d : tiling_defs())
    for (const std::string& alias : d.aliases)
      if (normalized(alias) == key) return &d;
  return nullptr;
}

const TilingDef& find_def(const std::string& name) {
  if (const TilingDef* d = find_def_opt(name)) return *d;
  std::ostringstream msg;
  msg << "unknown tiling \"" << name << "\"; supported:";
  for (const std::string& n : tiling_names()) msg << " " << n;
  throw std::invalid_argument(msg.str());
}

// Drops pendant decorations left at the window boundary: biconnected
// blocks of at most 4 vertices hanging off a single articulation vertex
// (dangling edges, corner triangles, half-attached rhombi). Interior
// structure is 2-connected through face cycles and is never touched.
void trim_pendant_blocks(const std::vector<std::vector<int>>& adj,
                         std::vector<char>& alive) {
  const int n = static_cast<int>(adj.size());
  for (;;) {
    std::vector<int> disc(static_cast<size_t>(n), -1);
    std::vector<int> low(static_cast<size_t>(n), 0);
    std::vector<int> parent(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> blocks;
    std::vector<std::pair<int, int>> estack;
    int timer = 0;

    auto pop_block = [&](int u, int v) {
      std::set<int> verts;
      while (!estack.empty()) {
        auto [x, y] = estack.back();
        estack.pop_back();
        verts.insert(x);
        verts.insert(y);
        if (x == u && y == v) break;
      }
      blocks.emplace_back(verts.begin(), verts.end());
    };

    for (int s = 0; s < n; ++s) {
      if (!alive[s] || disc[s] >= 0) continue;
      std::vector<std::pair<int, int>> frames;
      disc[s] = low[s] = timer++;
      frames.emplace_back(s, 0);
      while (!frames.empty()) {
        int v = frames.back().first;
        int& cursor = frames.back().second;
        if (cursor < static_cast<int>(adj[static_cast<size_t>(v)].size())) {
          int w = adj[static_cast<size_t>(v)][static_cast<size_t>(cursor++)];
          if (!alive[w]) continue;
          if (disc[w] < 0) {
            estack.emplace_back(v, w);
            parent[w] = v;
            disc[w] = low[w] = timer++;
            frames.emplace_back(w, 0);
          } else if (w != parent[v] && disc[w] < disc[v]) {
            estack.emplace_back(v, w);
            low[v] = std::min(low[v], disc[w]);
          }
        } else {
          frames.pop_back();
          if (!frames.empty()) {
            int u = frames.back().first;
            low[u] = std::min(low[u], low[v]);
            if (low[v] >= disc[u]) pop_block(u, v);
          }
        }
      }
    }

    std::vector<int> block_count(static_cast<size_t>(n), 0);
    for (const auto& block : blocks)
      for (int v : block) ++block_count[static_cast<size_t>(v)];

    bool removed = false;
    for (const auto& block : blocks) {
      if (block.size() > 4) continue;
      int articulations = 0;
      for (int v : block)
        if (block_count[static_cast<size_t>(v)] > 1) ++articulations;
      if (articulations > 1) continue;
      if (articulations == 0 && blocks.size() == 1) continue;
      for (int v : block)
        if (block_count[static_cast<size_t>(v)] == 1) {
          alive[v] = 0;
          removed = true;
        }
    }
    if (!removed) return;
  }
}

struct HexFace {
  std::array<int, 6> ring;  // CCW, min vertex first
};

bool is_unit(const ExactCoord& d) {
  std::int64_t a = d.x.p, b = d.x.q, c = d.y.p, e = d.y.q;
  return a * a + 3 * b * b + c * c + 3 * e * e == 16 && a * b + c * e == 0;
}

// CCW rotation by 60 degrees; false when the result leaves the lattice.
bool rot60(const ExactCoord& d, ExactCoord* out) {
  std::int64_t a = d.x.p, b = d.x.q, c = d.y.p, e = d.y.q;
  std::int64_t xp = a - 3 * e, xq = b - c, yp = 3 * b + c, yq = a + e;
  if ((xp | xq | yp | yq) & 1) return false;
  *out = {{xp / 2, xq / 2}, {yp / 2, yq / 2}};
  return true;
}

// sign of A + B*sqrt(3)
int sign_root3(std::int64_t a, std::int64_t b) {
  if (a >= 0 && b >= 0) return (a || b) ? 1 : 0;
  if (a <= 0 && b <= 0) return (a || b) ? -1 : 0;
  __int128 lhs = static_cast<__int128>(a) * a;
  __int128 rhs = static_cast<__int128>(3) * b * b;
  int cmp = lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
  return a > 0 ? cmp : -cmp;
}

// sign of cross(d1, d2) over quarter-lattice coordinates
int cross_sign(const ExactCoord& d1, const ExactCoord& d2) {
  std::int64_t a = d1.x.p * d2.y.p + 3 * d1.x.q * d2.y.q -
                   (d1.y.p * d2.x.p + 3 * d1.y.q * d2.x.q);
  std::int64_t b = d1.x.p * d2.y.q + d1.x.q * d2.y.p -
                   (d1.y.p * d2.x.q + d1.y.q * d2.x.p);
  return sign_root3(a, b);
}

// Unit-hexagon faces: closed 60-degree left-turn walks whose interior is
// empty (no vertex strictly inside, no chord between corners).
std::vector<HexFace> hexagonal_faces(const Graph& g,
                                     const std::unordered_map<Vertex, ExactCoord>& coord) {
  std::set<std::array<int, 6>> seen;
  std::vector<HexFace> faces;

  // coarse spatial buckets for the interior-emptiness test
  std::unordered_map<std::int64_t, std::vector<Vertex>> buckets;
  auto bucket_key = [](double x, double y) {
    auto bx = static_cast<std::int64_t>(std::floor(x));
    auto by = static_cast<std::int64_t>(std::floor(y));
    return bx * 0x100000001ll + by;
  };
  for (Vertex v : g.vertices()) {
    Vec2 p = coord.at(v).to_vec2();
    buckets[bucket_key(p.x, p.y)].push_back(v);
  }

  for (const Edge& e : g.edges()) {
    for (int flip = 0; flip < 2; ++flip) {
      Vertex start = flip ? e.v : e.u;
      Vertex second = flip ? e.u : e.v;
      ExactCoord dir = coord.at(second) - coord.at(start);
      if (!is_unit(dir)) continue;
      std::array<int, 6> ring{};
      ring[0] = start;
      ring[1] = second;
      Vertex cur = second;
      bool ok = true;
      for (int step = 2; step <= 6; ++step) {
        if (!rot60(dir, &dir)) {
          ok = false;
          break;
        }
        ExactCoord next = coord.at(cur) + dir;
        auto it = std::find_if(
            g.neighbors(cur).begin(), g.neighbors(cur).end(),
            [&](Vertex w) { return coord.at(w) == next; });
        if (it == g.neighbors(cur).end()) {
          ok = false;
          break;
        }
        Vertex w = *it;
        if (step == 6) {
          ok = (w == ring[0]);
          break;
        }
        ring[static_cast<size_t>(step)] = w;
        cur = w;
      }
      if (!ok) continue;

      auto min_it = std::min_element(ring.begin(), ring.end());
      std::array<int, 6> key{};
      size_t off = static_cast<size_t>(min_it - ring.begin());
      for (size_t i = 0; i < 6; ++i) key[i] = ring[(off + i) % 6];
      if (!seen.insert(key).second) continue;

      bool chord = false;
      for (int i = 0; i < 6 && !chord; ++i)
        for (int j = i + 2; j < 6; ++j)
          if (!(i == 0 && j == 5) && g.has_edge(key[static_cast<size_t>(i)],
                                                key[static_cast<size_t>(j)])) {
            chord = true;
            break;
          }
      if (chord) continue;

      ExactCoord center = coord.at(key[0]) - coord.at(key[1]) + coord.at(key[2]);
      Vec2 c = center.to_vec2();
      bool empty = true;
      for (std::int64_t bx = -1; bx <= 1 && empty; ++bx)
        for (std::int64_t by = -1; by <= 1 && empty; ++by) {
          auto it = buckets.find(bucket_key(c.x + static_cast<double>(bx),
                                            c.y + static_cast<double>(by)));
          if (it == buckets.end()) continue;
          for (Vertex w : it->second) {
            if (std::find(key.begin(), key.end(), w) != key.end()) continue;
            bool inside = true;
            for (size_t i = 0; i < 6 && inside; ++i) {
              ExactCoord ci = coord.at(key[i]);
              ExactCoord cj = coord.at(key[(i + 1) % 6]);
              inside = cross_sign(cj - ci, coord.at(w) - ci) > 0;
            }
            if (inside) {
              empty = false;
              break;
            }
          }
        }
      if (!empty) continue;

      faces.push_back(HexFace{key});
    }
  }
  std::sort(faces.begin(), faces.end(),
            [](const HexFace& a, const HexFace& b) { return a.ring < b.ring; });
  return faces;
}

Patch raw_patch(const TilingDef& def, int extent) {
  std::unordered_map<ExactCoord, int, CoordHash> index;
  std::vector<ExactCoord> coords;
  std::vector<std::string> roles;
  std::vector<std::pair<int, int>> cells;
  std::vector<std::pair<int, int>> raw_edges;
  std::unordered_set<std::uint64_t> edge_seen;

  const int lo = -extent;
  const int hi = extent - (def.half_open ? 1 : 0);
  std::vector<int> local(def.motif.verts.size());
  for (int i = lo; i <= hi; ++i) {
    for (int j = lo; j <= hi; ++j) {
      ExactCoord anchor = scaled(def.t1, i) + scaled(def.t2, j);
      for (size_t k = 0; k < def.motif.verts.size(); ++k) {
        ExactCoord at = anchor + def.motif.verts[k].second;
        auto [it, fresh] = index.emplace(at, static_cast<int>(coords.size()));
        if (fresh) {
          coords.push_back(at);
          roles.push_back(def.motif.verts[k].first);
          cells.emplace_back(i, j);
        }
        local[k] = it->second;
      }
      for (auto [a, b] : def.motif.edges) {
        int u = local[static_cast<size_t>(a)], v = local[static_cast<size_t>(b)];
        if (u > v) std::swap(u, v);
        std::uint64_t ekey = (static_cast<std::uint64_t>(u) << 32) |
                             static_cast<std::uint64_t>(v);
        if (edge_seen.insert(ekey).second) raw_edges.emplace_back(u, v);
      }
    }
  }

  std::vector<std::vector<int>> adj(coords.size());
  for (auto [u, v] : raw_edges) {
    adj[static_cast<size_t>(u)].push_back(v);
    adj[static_cast<size_t>(v)].push_back(u);
  }
  std::vector<char> alive(coords.size(), 1);
  trim_pendant_blocks(adj, alive);

  std::vector<int> remap(coords.size(), -1);
  std::vector<Vertex> verts;
  for (size_t i = 0; i < coords.size(); ++i)
    if (alive[i]) {
      remap[i] = static_cast<int>(verts.size());
      verts.push_back(static_cast<Vertex>(verts.size()));
    }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [u, v] : raw_edges)
    if (alive[static_cast<size_t>(u)] && alive[static_cast<size_t>(v)])
      edges.emplace_back(remap[static_cast<size_t>(u)], remap[static_cast<size_t>(v)]);

  Placement placement;
  Patch patch;
  for (size_t i = 0; i < coords.size(); ++i) {
    if (!alive[i]) continue;
    Vertex v = remap[i];
    placement.set(v, coords[i].to_vec2());
    patch.provenance[v] = PatchVertexInfo{cells[i], roles[i], coords[i]};
  }
  patch.framework = Framework::make(Graph::with_vertices(verts, edges),
                                    std::move(placement));
  patch.tiling = def.name;
  patch.extent = extent;
  return patch;
}

std::unordered_map<Vertex, ExactCoord> exact_coords(const Patch& patch) {
  std::unordered_map<Vertex, ExactCoord> coord;
  for (Vertex v : patch.framework.graph.vertices()) {
    auto it = patch.provenance.find(v);
    if (it == patch.provenance.end())
      throw std::invalid_argument("augment_hexagons: missing exact coordinates for vertex " +
                                  std::to_string(v));
    coord[v] = it->second.coord;
  }
  return coord;
}

Patch with_hexagon_centers(const Patch& patch,
                           const std::unordered_map<Vertex, ExactCoord>& coord,
                           const std::vector<HexFace>& faces) {
  Patch out = patch;
  std::vector<Vertex> verts = patch.framework.graph.vertices();
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const Edge& e : patch.framework.graph.edges()) edges.emplace_back(e.u, e.v);

  Placement placement = patch.framework.placement;
  Vertex next = verts.empty() ? 0 : verts.back() + 1;
  for (const HexFace& f : faces) {
    ExactCoord center =
        coord.at(f.ring[0]) - coord.at(f.ring[1]) + coord.at(f.ring[2]);
    Vertex c = next++;
    verts.push_back(c);
    placement.set(c, center.to_vec2());
    out.provenance[c] =
        PatchVertexInfo{out.provenance.at(f.ring[0]).cell, "aug", center};
    for (int k : {0, 2, 4}) {
      edges.emplace_back(c, f.ring[static_cast<size_t>(k)]);
      out.augmented_edges.emplace_back(c, f.ring[static_cast<size_t>(k)]);
    }
  }

  out.framework = Framework::make(Graph::with_vertices(verts, edges),
                                  std::move(placement), patch.framework.tol);
  out.augmented = true;
  return out;
}

// The window, not the tiling, can strand a class fragment at the patch
// boundary: its merging 4-cycles lie in cells outside the window. Such a
// fragment splits an angle-preserving class that the same patch embedded in
// a wider window keeps whole. Eroding the split-off fragments leaves a patch
// whose classes coincide with the tiling's own, restricted to the window.
void erode_window_artifacts(Patch& core) {
  const TilingDef* def = find_def_opt(core.tiling);
  if (!def || core.extent < 1) return;

  Patch ref = raw_patch(*def, core.extent + 2);
  {
    auto coord = exact_coords(ref);
    std::vector<HexFace> faces = hexagonal_faces(ref.framework.graph, coord);
    if (!faces.empty()) ref = with_hexagon_centers(ref, coord, faces);
  }

  std::unordered_map<ExactCoord, Vertex, CoordHash> ref_at;
  for (Vertex v : ref.framework.graph.vertices())
    ref_at[ref.provenance.at(v).coord] = v;
  const APCPartition ref_part = compute_apc(ref.framework.graph);

  const Graph& cg = core.framework.graph;
  std::vector<int> label(static_cast<size_t>(cg.edge_count()), -1);
  for (int e = 0; e < cg.edge_count(); ++e) {
    const Edge& ed = cg.edge(e);
    auto iu = ref_at.find(core.provenance.at(ed.u).coord);
    auto iv = ref_at.find(core.provenance.at(ed.v).coord);
    if (iu == ref_at.end() || iv == ref_at.end()) return;
    int re = ref.framework.graph.edge_index(iu->second, iv->second);
    if (re < 0) return;
    label[static_cast<size_t>(e)] = ref_part.class_of_edge[static_cast<size_t>(re)];
  }

  std::vector<char> kept(static_cast<size_t>(cg.edge_count()), 1);
  for (;;) {
    bool removed = false;

    // restrict to the largest connected component (ties: smallest vertex)
    Vertex max_id = 0;
    for (int e = 0; e < cg.edge_count(); ++e)
      if (kept[static_cast<size_t>(e)])
        max_id = std::max(max_id, cg.edge(e).v);
    DisjointSet comp(max_id + 1);
    for (int e = 0; e < cg.edge_count(); ++e)
      if (kept[static_cast<size_t>(e)]) comp.unite(cg.edge(e).u, cg.edge(e).v);
    std::unordered_map<int, std::pair<int, Vertex>> weight;  // root -> (edges, min vertex)
    for (int e = 0; e < cg.edge_count(); ++e) {
      if (!kept[static_cast<size_t>(e)]) continue;
      int r = comp.find(cg.edge(e).u);
      auto [it, fresh] = weight.emplace(r, std::pair<int, Vertex>{0, cg.edge(e).u});
      it->second.first += 1;
      it->second.second = std::min(it->second.second, cg.edge(e).u);
    }
    if (weight.empty()) return;
    int best_root = -1;
    std::pair<int, Vertex> best{-1, 0};
    for (const auto& [r, w] : weight)
      if (w.first > best.first ||
          (w.first == best.first && w.second < best.second)) {
        best = w;
        best_root = r;
      }
    for (int e = 0; e < cg.edge_count(); ++e)
      if (kept[static_cast<size_t>(e)] && comp.find(cg.edge(e).u) != best_root) {
        kept[static_cast<size_t>(e)] = 0;
        removed = true;
      }

    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (int e = 0; e < cg.edge_count(); ++e)
      if (kept[static_cast<size_t>(e)])
        pairs.emplace_back(cg.edge(e).u, cg.edge(e).v);
    Graph sub = Graph::from_edges(pairs);
    APCPartition part = compute_apc(sub);

    // core gadgets are reference gadgets, so each core class carries one label
    std::map<int, std::vector<int>> by_label;
    for (int c = 0; c < part.size(); ++c) {
      int first = part.classes[static_cast<size_t>(c)].front();
      const Edge& ed = sub.edge(first);
      by_label[label[static_cast<size_t>(cg.edge_index(ed.u, ed.v))]].push_back(c);
    }
    for (const auto& [lab, cls] : by_label) {
      if (cls.size() < 2) continue;
      int keep = cls.front();
      for (int c : cls)
        if (part.classes[static_cast<size_t>(c)].size() >
            part.classes[static_cast<size_t>(keep)].size())
          keep = c;
      for (int c : cls) {
        if (c == keep) continue;
        for (int idx : part.classes[static_cast<size_t>(c)]) {
          const Edge& ed = sub.edge(idx);
          kept[static_cast<size_t>(cg.edge_index(ed.u, ed.v))] = 0;
          removed = true;
        }
      }
    }
    if (!removed) break;
  }

  if (std::find(kept.begin(), kept.end(), 0) == kept.end()) return;

  std::vector<Vertex> old_verts;
  for (int e = 0; e < cg.edge_count(); ++e)
    if (kept[static_cast<size_t>(e)]) {
      old_verts.push_back(cg.edge(e).u);
      old_verts.push_back(cg.edge(e).v);
    }
  std::sort(old_verts.begin(), old_verts.end());
  old_verts.erase(std::unique(old_verts.begin(), old_verts.end()), old_verts.end());
  std::unordered_map<Vertex, Vertex> remap;
  for (size_t i = 0; i < old_verts.size(); ++i)
    remap[old_verts[i]] = static_cast<Vertex>(i);

  std::vector<Vertex> verts;
  for (size_t i = 0; i < old_verts.size(); ++i)
    verts.push_back(static_cast<Vertex>(i));
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int e = 0; e < cg.edge_count(); ++e)
    if (kept[static_cast<size_t>(e)])
      edges.emplace_back(remap.at(cg.edge(e).u), remap.at(cg.edge(e).v));

  Placement placement;
  std::unordered_map<Vertex, PatchVertexInfo> provenance;
  for (Vertex old : old_verts) {
    Vertex now = remap.at(old);
    placement.set(now, core.framework.placement.at(old));
    provenance[now] = core.provenance.at(old);
  }
  std::vector<Edge> aug;
  for (const Edge& ae : core.augmented_edges) {
    int idx = cg.edge_index(ae.u, ae.v);
    if (idx >= 0 && kept[static_cast<size_t>(idx)])
      aug.emplace_back(remap.at(ae.u), remap.at(ae.v));
  }

  core.framework = Framework::make(Graph::with_vertices(verts, edges),
                                   std::move(placement), core.framework.tol);
  core.provenance = std::move(provenance);
  core.augmented_edges = std::move(aug);
}

}  // namespace

double ExactPoint::to_double() const {
  return (static_cast<double>(p) + static_cast<double>(q) * kSqrt3) / 4.0;
}

Vec2 ExactCoord::to_vec2() const { return {x.to_double(), y.to_double()}; }

const std::vector<std::string>& tiling_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const TilingDef& d : tiling_defs()) v.push_back(d.name);
    return v;
  }();
  return names;
}

Patch generate_patch(const std::string& name, int extent) {
  const TilingDef& def = find_def(name);
  if (extent < 1) throw std::invalid_argument("extent must be >= 1");
  return raw_patch(def, extent);
}

Patch augment_hexagons(const Patch& patch) {
  std::unordered_map<Vertex, ExactCoord> coord = exact_coords(patch);

  std::vector<HexFace> faces = hexagonal_faces(patch.framework.graph, coord);
  if (faces.empty()) {
    Patch out = patch;
    out.warnings.push_back("no empty hexagonal faces; patch unchanged");
    return out;
  }

  Patch out = with_hexagon_centers(patch, coord, faces);
  erode_window_artifacts(out);
  return out;
}

}  // namespace parrig
