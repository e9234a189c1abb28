#include "knotgraph/reidemeister.hpp"

#include <array>
#include <string>

#include "knotgraph/error.hpp"
#include "working_diagram.hpp"

namespace knotgraph {

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::R1Add: return "R1_ADD";
    case MoveKind::R1Remove: return "R1_REMOVE";
    case MoveKind::R2Add: return "R2_ADD";
    case MoveKind::R2Remove: return "R2_REMOVE";
    case MoveKind::R3: return "R3";
  }
  return "?";
}

namespace {

bool is_monogon(const Face& f) { return f.size() == 1; }

bool is_removable_bigon(const Diagram& d, const Face& f) {
  if (f.size() != 2) return false;
  const Dart t0 = f.darts[0], t1 = f.darts[1];
  if (dart_crossing(t0) == dart_crossing(t1)) return false;
  const int side = d.label_at(t0);
  if (side == d.label_at(t1)) return false;
  return d.pass_at(d.tail(side)) == d.pass_at(d.head(side));
}

bool is_movable_triangle(const Diagram& d, const Face& f) {
  if (f.size() != 3) return false;
  const int c0 = dart_crossing(f.darts[0]), c1 = dart_crossing(f.darts[1]), c2 = dart_crossing(f.darts[2]);
  if (c0 == c1 || c1 == c2 || c0 == c2) return false;
  const int s0 = d.label_at(f.darts[0]), s1 = d.label_at(f.darts[1]), s2 = d.label_at(f.darts[2]);
  if (s0 == s1 || s1 == s2 || s0 == s2) return false;
  for (int s : {s0, s1, s2}) {
    if (d.pass_at(d.tail(s)) == Pass::Over && d.pass_at(d.head(s)) == Pass::Over) return true;
  }
  return false;
}

// The one-crossing kink bounds two monogons; both remove the same
// crossing, so only the first counts as a site.
bool is_kink_site(const Diagram& d, const Face& f) {
  if (!is_monogon(f)) return false;
  const int c = dart_crossing(f.darts[0]);
  for (int p = 0; p < 4; ++p) {
    const Face& g = d.faces()[d.face_of(make_dart(c, p))];
    if (g.id < f.id && is_monogon(g)) return false;
  }
  return true;
}

bool face_matches(const Diagram& d, const Face& f, MoveKind kind) {
  switch (kind) {
    case MoveKind::R1Remove: return is_kink_site(d, f);
    case MoveKind::R2Remove: return is_removable_bigon(d, f);
    case MoveKind::R3: return is_movable_triangle(d, f);
    default: return false;
  }
}

/// Boundary darts whose edge also borders the face from the other side.
int doubled_darts(const Diagram& d, const Face& f) {
  int count = 0;
  for (Dart t : f.darts) count += d.face_of(d.twin(t)) == f.id;
  return count;
}

std::size_t r2_add_count(const Diagram& d, const Face& f) {
  const std::size_t k = f.darts.size();
  return 2 * (k * (k - 1) - doubled_darts(d, f));
}

MoveSite base_site(const Diagram& d, MoveKind kind) {
  MoveSite s;
  s.kind = kind;
  s.fingerprint = d.fingerprint();
  return s;
}

MoveSite r1_add_site(const Diagram& d, std::size_t index) {
  MoveSite s = base_site(d, MoveKind::R1Add);
  s.edge = static_cast<int>(index / 4);
  s.side = (index / 2) % 2 == 0 ? Side::Left : Side::Right;
  s.sign = index % 2 == 0 ? 1 : -1;
  return s;
}

}  // namespace

std::vector<MoveSite> find_sites(const Diagram& d, MoveKind kind) {
  std::vector<MoveSite> sites;
  switch (kind) {
    case MoveKind::R1Add:
      for (std::size_t i = 0; i < 4 * static_cast<std::size_t>(d.edge_count()); ++i) sites.push_back(r1_add_site(d, i));
      break;
    case MoveKind::R2Add:
      for (const Face& f : d.faces()) {
        for (Dart a : f.darts) {
          for (Dart b : f.darts) {
            if (a == b || d.label_at(a) == d.label_at(b)) continue;
            for (bool over : {true, false}) {
              MoveSite s = base_site(d, kind);
              s.face = f.id;
              s.dart_a = a;
              s.dart_b = b;
              s.a_over = over;
              sites.push_back(s);
            }
          }
        }
      }
      break;
    default:
      for (const Face& f : d.faces()) {
        if (!face_matches(d, f, kind)) continue;
        MoveSite s = base_site(d, kind);
        s.face = f.id;
        sites.push_back(s);
      }
  }
  return sites;
}

std::size_t site_count(const Diagram& d, MoveKind kind) {
  std::size_t count = 0;
  switch (kind) {
    case MoveKind::R1Add: return 4 * static_cast<std::size_t>(d.edge_count());
    case MoveKind::R2Add:
      for (const Face& f : d.faces()) count += r2_add_count(d, f);
      return count;
    default:
      for (const Face& f : d.faces()) count += face_matches(d, f, kind);
      return count;
  }
}

MoveSite site_at(const Diagram& d, MoveKind kind, std::size_t index) {
  if (index >= site_count(d, kind)) throw MoveError("site index out of range");
  if (kind == MoveKind::R1Add) return r1_add_site(d, index);
  for (const Face& f : d.faces()) {
    if (kind == MoveKind::R2Add) {
      const std::size_t here = r2_add_count(d, f);
      if (index >= here) {
        index -= here;
        continue;
      }
      for (Dart a : f.darts) {
        for (Dart b : f.darts) {
          if (a == b || d.label_at(a) == d.label_at(b)) continue;
          if (index >= 2) {
            index -= 2;
            continue;
          }
          MoveSite s = base_site(d, kind);
          s.face = f.id;
          s.dart_a = a;
          s.dart_b = b;
          s.a_over = index == 0;
          return s;
        }
      }
    } else if (face_matches(d, f, kind)) {
      if (index-- == 0) {
        MoveSite s = base_site(d, kind);
        s.face = f.id;
        return s;
      }
    }
  }
  throw MoveError("internal: site enumeration mismatch");
}

namespace {

const Face& site_face(const Diagram& d, const MoveSite& site) {
  if (site.face < 0 || site.face >= static_cast<int>(d.faces().size())) {
    throw MoveError(std::string(to_string(site.kind)) + ": face " + std::to_string(site.face) + " does not exist");
  }
  return d.faces()[site.face];
}

Diagram add_kink(const Diagram& d, const MoveSite& site) {
  if (site.edge < 0 || site.edge >= d.edge_count() || (site.sign != 1 && site.sign != -1)) {
    throw MoveError("R1_ADD: no such edge/sign");
  }
  detail::WorkingDiagram w(d);
  const auto e = w.split(site.edge, 3);
  Crossing x;
  // Local pictures: the strand runs east, the loop sits north (left) or
  // south (right) of it; which visit is under follows from the sign.
  if (site.side == Side::Left) {
    x = site.sign > 0 ? Crossing{{e[0], e[2], e[1], e[1]}, 3} : Crossing{{e[1], e[0], e[2], e[1]}, 1};
  } else {
    x = site.sign > 0 ? Crossing{{e[1], e[1], e[2], e[0]}, 3} : Crossing{{e[0], e[1], e[1], e[2]}, 1};
  }
  w.add_crossing(x);
  return w.finish();
}

Diagram add_finger(const Diagram& d, const MoveSite& site) {
  const Face& f = site_face(d, site);
  const auto in_face = [&](Dart t) { return t >= 0 && t < 4 * d.crossing_count() && d.face_of(t) == f.id; };
  if (!in_face(site.dart_a) || !in_face(site.dart_b) || d.label_at(site.dart_a) == d.label_at(site.dart_b)) {
    throw MoveError("R2_ADD: darts are not distinct edges of the face");
  }
  // Local picture: e_a runs along y=0 with the face above it, e_b along
  // y=1 with the face below it. A finger of e_a rises through e_b at
  // P (x=-1/2) and comes back down at Q (x=+1/2).
  const bool a_east = d.is_tail(site.dart_a);
  const bool b_east = !d.is_tail(site.dart_b);
  detail::WorkingDiagram w(d);
  const auto a = w.split(d.label_at(site.dart_a), 3);
  const auto b = w.split(d.label_at(site.dart_b), 3);

  enum { E, N, W, S };
  struct Local {
    std::array<int, 4> ids{};
    std::array<bool, 4> in{};
    void set(int dir, int id, bool incoming) {
      ids[dir] = id;
      in[dir] = incoming;
    }
  };
  Local first, second;  // along e_a
  first.set(S, a[0], true);
  first.set(N, a[1], false);
  second.set(N, a[1], true);
  second.set(S, a[2], false);
  Local& p = a_east ? first : second;
  Local& q = a_east ? second : first;
  if (b_east) {
    p.set(W, b[0], true);
    p.set(E, b[1], false);
    q.set(W, b[1], true);
    q.set(E, b[2], false);
  } else {
    q.set(E, b[0], true);
    q.set(W, b[1], false);
    p.set(E, b[1], true);
    p.set(W, b[2], false);
  }
  w.add_crossing(detail::compass_crossing(first.ids, first.in, site.a_over));
  w.add_crossing(detail::compass_crossing(second.ids, second.in, site.a_over));
  return w.finish();
}

Diagram remove_faces_crossings(const Diagram& d, const Face& f, int minimum_before) {
  if (d.crossing_count() < minimum_before) {
    throw MoveError("removal would leave a diagram without crossings");
  }
  std::vector<int> doomed;
  for (Dart t : f.darts) doomed.push_back(dart_crossing(t));
  detail::WorkingDiagram w(d);
  w.remove_crossings(doomed);
  return w.finish();
}

Diagram slide_triangle(const Diagram& d, const Face& f) {
  // Each side keeps its edge id, but the order in which its strand meets
  // the other two strands is reversed; edge ids along the strand and the
  // dart directions at every crossing are unchanged.
  struct Assignment {
    Dart at;
    int id;
  };
  std::vector<Assignment> assignments;
  for (Dart t : f.darts) {
    const int s = d.label_at(t);
    const Dart tail = d.tail(s), head = d.head(s);
    const int in_s = d.label_at(opposite(tail));
    const int out_s = d.label_at(opposite(head));
    assignments.push_back({opposite(tail), s});
    assignments.push_back({tail, out_s});
    assignments.push_back({head, in_s});
    assignments.push_back({opposite(head), s});
  }
  detail::WorkingDiagram w(d);
  for (const auto& [at, id] : assignments) w.crossing(dart_crossing(at)).labels[dart_position(at)] = id;
  return w.finish();
}

}  // namespace

Diagram apply(const Diagram& d, const MoveSite& site) {
  if (site.fingerprint != d.fingerprint()) {
    throw MoveError(std::string(to_string(site.kind)) + ": stale site (diagram fingerprint mismatch)");
  }
  switch (site.kind) {
    case MoveKind::R1Add: return add_kink(d, site);
    case MoveKind::R2Add: return add_finger(d, site);
    case MoveKind::R1Remove: {
      const Face& f = site_face(d, site);
      if (!is_monogon(f)) throw MoveError("R1_REMOVE: face is not a monogon");
      return remove_faces_crossings(d, f, 2);
    }
    case MoveKind::R2Remove: {
      const Face& f = site_face(d, site);
      if (!is_removable_bigon(d, f)) throw MoveError("R2_REMOVE: face is not a removable bigon");
      return remove_faces_crossings(d, f, 3);
    }
    case MoveKind::R3: {
      const Face& f = site_face(d, site);
      if (!is_movable_triangle(d, f)) throw MoveError("R3: face is not a movable triangle");
      return slide_triangle(d, f);
    }
  }
  throw MoveError("unknown move kind");
}

Simplified simplify(const Diagram& d) {
  Diagram current = d;
  for (;;) {
    bool suppressed = false;
    const Face* target = nullptr;
    for (const Face& f : current.faces()) {
      const int n = current.crossing_count();
      if (is_monogon(f)) {
        if (n >= 2) {
          target = &f;
          break;
        }
        suppressed = true;
      } else if (is_removable_bigon(current, f)) {
        if (n >= 3) {
          target = &f;
          break;
        }
        suppressed = true;
      }
    }
    if (target == nullptr) return {current, suppressed};
    current = remove_faces_crossings(current, *target, 0);
  }
}

}  // namespace knotgraph
