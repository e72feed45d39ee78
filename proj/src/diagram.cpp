#include "mqa/diagram.hpp"

#include <optional>
#include <queue>
#include <utility>

namespace mqa {

namespace {

// Boundary points of a tangle disk.
enum Compass : int { NW = 0, NE = 1, SW = 2, SE = 3 };

// Endpoint ids: 4*c + s for slot s of crossing c, -1-b for boundary b.
constexpr int boundary_id(int b) { return -1 - b; }

struct Crossing {
  std::array<int, 4> mate{};  // slots counterclockwise
  bool over_odd = false;      // slots 1 and 3 form the over-strand
};

struct Tangle {
  std::vector<Crossing> xs;
  std::array<int, 4> bnd{};
  int free_loops = 0;
};

Tangle zero_tangle() {
  Tangle t;
  t.bnd[NW] = boundary_id(NE);
  t.bnd[NE] = boundary_id(NW);
  t.bnd[SW] = boundary_id(SE);
  t.bnd[SE] = boundary_id(SW);
  return t;
}

// Slots counterclockwise from SW: 0 = SW, 1 = SE, 2 = NE, 3 = NW.
Tangle unit_tangle(int sign) {
  Tangle t;
  Crossing x;
  x.mate = {boundary_id(SW), boundary_id(SE), boundary_id(NE), boundary_id(NW)};
  x.over_odd = sign > 0;
  t.xs.push_back(x);
  t.bnd[SW] = 0;
  t.bnd[SE] = 1;
  t.bnd[NE] = 2;
  t.bnd[NW] = 3;
  return t;
}

struct Port {
  int part;
  int b;
};

// Glues boundary ports of several tangles; `result` names the part ports
// that become the new NW, NE, SW, SE (all absent for a closed diagram).
Tangle compose(const std::vector<const Tangle*>& parts, const std::vector<std::pair<Port, Port>>& glue,
               const std::array<std::optional<Port>, 4>& result) {
  std::vector<int> offset(parts.size());
  int slots = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    offset[k] = slots;
    slots += 4 * static_cast<int>(parts[k]->xs.size());
  }
  const int total = slots + 4 * static_cast<int>(parts.size());
  auto port_id = [&](Port p) { return slots + 4 * p.part + p.b; };
  auto global = [&](std::size_t part, int x) {
    return x >= 0 ? offset[part] + x : port_id(Port{static_cast<int>(part), -1 - x});
  };

  std::vector<int> mate(total);
  Tangle out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    for (std::size_t c = 0; c < parts[k]->xs.size(); ++c) {
      const Crossing& x = parts[k]->xs[c];
      for (int s = 0; s < 4; ++s) mate[offset[k] + 4 * static_cast<int>(c) + s] = global(k, x.mate[s]);
      out.xs.push_back(Crossing{{}, x.over_odd});
    }
    for (int b = 0; b < 4; ++b) mate[port_id(Port{static_cast<int>(k), b})] = global(k, parts[k]->bnd[b]);
    out.free_loops += parts[k]->free_loops;
  }

  std::vector<int> through(total, -1);
  for (const auto& [a, b] : glue) {
    through[port_id(a)] = port_id(b);
    through[port_id(b)] = port_id(a);
  }
  std::vector<int> result_of(total, -1);
  for (int b = 0; b < 4; ++b) {
    if (result[b]) result_of[port_id(*result[b])] = b;
  }

  std::vector<bool> visited(total, false);
  auto resolve = [&](int x) {
    int y = mate[x];
    while (through[y] >= 0) {
      visited[y] = visited[through[y]] = true;
      y = mate[through[y]];
    }
    if (y < slots) return y;
    if (result_of[y] < 0) throw Error("internal error: dangling tangle boundary");
    return boundary_id(result_of[y]);
  };

  for (int x = 0; x < slots; ++x) out.xs[x / 4].mate[x % 4] = resolve(x);
  for (int b = 0; b < 4; ++b) {
    if (result[b]) out.bnd[b] = resolve(port_id(*result[b]));
  }
  for (int g = slots; g < total; ++g) {
    if (through[g] < 0 || visited[g]) continue;
    ++out.free_loops;
    int y = g;
    do {
      visited[y] = visited[through[y]] = true;
      y = mate[through[y]];
    } while (y != g);
  }
  return out;
}

Tangle sum(const Tangle& s, const Tangle& t) {
  return compose({&s, &t}, {{Port{0, NE}, Port{1, NW}}, {Port{0, SE}, Port{1, SW}}},
                 {Port{0, NW}, Port{1, NE}, Port{0, SW}, Port{1, SE}});
}

// Mirror in the NW-SE diagonal: NE <-> SW, and the counterclockwise slot
// order reverses (slots 1 <-> 3). Over/under is kept.
Tangle reflect_diagonal(const Tangle& t) {
  auto slot_map = [](int s) { return s == 1 ? 3 : s == 3 ? 1 : s; };
  auto b_map = [](int b) { return b == NE ? SW : b == SW ? NE : b; };
  auto map = [&](int x) { return x >= 0 ? 4 * (x / 4) + slot_map(x % 4) : boundary_id(b_map(-1 - x)); };
  Tangle out;
  out.free_loops = t.free_loops;
  out.xs.resize(t.xs.size());
  for (std::size_t c = 0; c < t.xs.size(); ++c) {
    out.xs[c].over_odd = t.xs[c].over_odd;
    for (int s = 0; s < 4; ++s) out.xs[c].mate[slot_map(s)] = map(t.xs[c].mate[s]);
  }
  for (int b = 0; b < 4; ++b) out.bnd[b_map(b)] = map(t.bnd[b]);
  return out;
}

Tangle integer_tangle(const Integer& n) {
  Tangle t = zero_tangle();
  const int sign = n.sign();
  const Tangle unit = unit_tangle(sign);
  for (Integer k = abs(n); k > 0; --k) t = sum(t, unit);
  return t;
}

// The tangle a_1 a_2 ... a_m = ((a_1 a_2) ...) a_m, where st = s0 + t.
Tangle rational_tangle(const Fraction& value) {
  if (value.is_zero()) return zero_tangle();
  if (abs(value.num()) == 1 && value.den() == 1) return unit_tangle(value.sign());
  const IntSequence word = tangle_word(value);
  Tangle t = integer_tangle(word.front());
  for (std::size_t k = 1; k < word.size(); ++k) t = sum(reflect_diagonal(t), integer_tangle(word[k]));
  return t;
}

PlanarDiagram close_and_encode(const Tangle& t) {
  const Tangle closed = compose({&t}, {{Port{0, NW}, Port{0, NE}}, {Port{0, SW}, Port{0, SE}}}, {});
  const std::size_t n = closed.xs.size();

  PlanarDiagram d;
  d.free_loops = closed.free_loops;
  d.components = closed.free_loops;
  std::vector<std::array<int, 4>> label(n, {0, 0, 0, 0});
  std::vector<std::array<bool, 4>> incoming(n, {false, false, false, false});
  int next_label = 1;
  for (std::size_t c0 = 0; c0 < n; ++c0) {
    for (int s0 = 0; s0 < 4; ++s0) {
      if (label[c0][s0] != 0) continue;
      ++d.components;
      std::size_t c = c0;
      int s = s0;
      do {
        const int m = closed.xs[c].mate[s];
        const auto c2 = static_cast<std::size_t>(m / 4);
        const int s2 = m % 4;
        label[c][s] = next_label;
        label[c2][s2] = next_label;
        incoming[c2][s2] = true;
        ++next_label;
        c = c2;
        s = (s2 + 2) % 4;
      } while (!(c == c0 && s == s0));
    }
  }

  d.crossings.reserve(n);
  for (std::size_t c = 0; c < n; ++c) {
    const int under = closed.xs[c].over_odd ? 0 : 1;
    const int start = incoming[c][under] ? under : under + 2;
    std::array<int, 4> x{};
    for (int k = 0; k < 4; ++k) x[k] = label[c][(start + k) % 4];
    d.crossings.push_back(x);
  }
  return d;
}

}  // namespace

PlanarDiagram standard_diagram(const TangleSum& sum_params) {
  Tangle t = integer_tangle(sum_params.e);
  for (const auto& ti : sum_params.tangles) t = sum(t, reflect_diagonal(rational_tangle(ti)));
  return close_and_encode(t);
}

PlanarDiagram rational_closure_diagram(const Fraction& t, bool times_zero) {
  Tangle tangle = rational_tangle(t);
  if (times_zero) tangle = reflect_diagonal(tangle);
  return close_and_encode(tangle);
}

std::string to_pd_string(const PlanarDiagram& d) {
  std::string out;
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    const auto& x = d.crossings[c];
    if (c != 0) out += ", ";
    out += "X(" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," + std::to_string(x[2]) + "," +
           std::to_string(x[3]) + ")";
  }
  return out;
}

Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Integer det_oracle(const PlanarDiagram& d, std::size_t max_crossings) {
  const std::size_t n = d.crossings.size();
  if (n > max_crossings) {
    throw Error("oracle limit: " + std::to_string(n) + " crossings exceeds " + std::to_string(max_crossings));
  }
  if (d.free_loops > 0) return 0;  // split unknot
  if (n == 0) return d.components == 1 ? 1 : 0;

  // Each edge label occurs exactly twice.
  const std::size_t edges = 2 * n;
  std::vector<std::vector<std::pair<std::size_t, int>>> where(edges + 1);
  for (std::size_t c = 0; c < n; ++c) {
    for (int k = 0; k < 4; ++k) {
      const int e = d.crossings[c][k];
      if (e < 1 || static_cast<std::size_t>(e) > edges) throw Error("malformed PD code: bad edge label");
      where[e].emplace_back(c, k);
    }
  }
  for (std::size_t e = 1; e <= edges; ++e) {
    if (where[e].size() != 2) throw Error("malformed PD code: edge " + std::to_string(e) + " not used twice");
  }
  auto partner = [&](std::size_t c, int k) {
    const auto& w = where[d.crossings[c][k]];
    return (w[0].first == c && w[0].second == k) ? w[1] : w[0];
  };

  // A disconnected diagram is split.
  {
    std::vector<std::size_t> parent(n);
    for (std::size_t c = 0; c < n; ++c) parent[c] = c;
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t e = 1; e <= edges; ++e) parent[find(where[e][0].first)] = find(where[e][1].first);
    for (std::size_t c = 0; c < n; ++c) {
      if (find(c) != find(0)) return 0;
    }
  }

  // Faces: darts (c, k) leave crossing c through position k; the successor
  // of a dart arriving at (c', k') leaves through (c', k'+1).
  std::vector<std::array<int, 4>> face(n, {-1, -1, -1, -1});
  int faces = 0;
  for (std::size_t c0 = 0; c0 < n; ++c0) {
    for (int k0 = 0; k0 < 4; ++k0) {
      if (face[c0][k0] >= 0) continue;
      std::size_t c = c0;
      int k = k0;
      while (face[c][k] < 0) {
        face[c][k] = faces;
        const auto [c2, k2] = partner(c, k);
        c = c2;
        k = (k2 + 1) % 4;
      }
      ++faces;
    }
  }
  if (static_cast<std::size_t>(faces) != n + 2) throw Error("PD code is not planar");

  // Checkerboard coloring: the two darts of an edge border opposite faces.
  std::vector<std::vector<int>> adj(faces);
  for (std::size_t e = 1; e <= edges; ++e) {
    const int f = face[where[e][0].first][where[e][0].second];
    const int g = face[where[e][1].first][where[e][1].second];
    adj[f].push_back(g);
    adj[g].push_back(f);
  }
  std::vector<int> color(faces, -1);
  std::queue<int> queue;
  color[0] = 0;
  queue.push(0);
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop();
    for (int g : adj[f]) {
      if (color[g] < 0) {
        color[g] = 1 - color[f];
        queue.push(g);
      } else if (color[g] == color[f]) {
        throw Error("PD code admits no checkerboard coloring");
      }
    }
  }

  std::vector<int> index(faces, -1);
  int shaded = 0;
  for (int f = 0; f < faces; ++f) {
    if (color[f] == 0) index[f] = shaded++;
  }
  std::vector<std::vector<Integer>> goeritz(shaded, std::vector<Integer>(shaded, 0));
  // Corner k lies between positions k and k+1 and belongs to the face of the
  // dart leaving through k+1. Positions 1 and 3 are the over-strand.
  auto corner_face = [&](std::size_t c, int k) { return face[c][(k + 1) % 4]; };
  for (std::size_t c = 0; c < n; ++c) {
    const int k = color[corner_face(c, 0)] == 0 ? 0 : 1;
    const int eta = k == 0 ? 1 : -1;
    const int f = index[corner_face(c, k)];
    const int g = index[corner_face(c, k + 2)];
    if (f == g) continue;  // nugatory
    goeritz[f][g] -= eta;
    goeritz[g][f] -= eta;
    goeritz[f][f] += eta;
    goeritz[g][g] += eta;
  }
  goeritz.pop_back();
  for (auto& row : goeritz) row.pop_back();
  return abs(bareiss_determinant(std::move(goeritz)));
}

}  // namespace mqa
