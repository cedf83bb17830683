#include "knotcov/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace knotcov {

namespace {

struct Occ {
  int crossing;
  int slot;
  bool operator==(const Occ& o) const { return crossing == o.crossing && slot == o.slot; }
};

using OccMap = std::map<int, std::vector<Occ>>;

OccMap occurrences(const std::vector<std::array<int, 4>>& raw) {
  OccMap m;
  for (size_t x = 0; x < raw.size(); ++x)
    for (int s = 0; s < 4; ++s) {
      int lab = raw[x][s];
      if (lab <= 0) throw std::invalid_argument("arc labels must be positive");
      m[lab].push_back({static_cast<int>(x), s});
    }
  for (auto& [lab, v] : m)
    if (v.size() != 2)
      throw std::invalid_argument("arc " + std::to_string(lab) +
                                  " does not appear exactly twice");
  return m;
}

struct Traversal {
  std::vector<int> labels;      // edge labels in traversal order
  std::vector<Occ> heads;       // incoming occurrence of each edge
};

// Walk the strand, entering each crossing and leaving through the opposite
// slot. Returns the closed traversal or nullopt when the chosen direction has
// all under-entries at slot 2 (reversed orientation). Throws on anything else.
std::optional<Traversal> traverse(const std::vector<std::array<int, 4>>& raw,
                                  const OccMap& occ, int direction) {
  int c = static_cast<int>(raw.size());
  int start_label = occ.begin()->first;
  Occ start_head = occ.begin()->second[direction];
  Traversal t;
  std::set<int> seen;
  int cur_label = start_label;
  Occ cur_head = start_head;
  for (int step = 0; step < 2 * c; ++step) {
    if (!seen.insert(cur_label).second)
      throw std::invalid_argument("diagram is not a single closed strand");
    t.labels.push_back(cur_label);
    t.heads.push_back(cur_head);
    int exit_slot = (cur_head.slot + 2) % 4;
    int next_label = raw[cur_head.crossing][exit_slot];
    const auto& pair = occ.at(next_label);
    Occ exit_occ{cur_head.crossing, exit_slot};
    if (pair[0] == exit_occ)
      cur_head = pair[1];
    else if (pair[1] == exit_occ)
      cur_head = pair[0];
    else
      throw std::invalid_argument("inconsistent arc incidence");
    cur_label = next_label;
  }
  if (cur_label != start_label || !(cur_head == start_head))
    throw std::invalid_argument("diagram is not a single closed strand");
  // orientation: under entries must all be at slot 0
  int at0 = 0, at2 = 0;
  for (auto& h : t.heads) {
    if (h.slot == 0) ++at0;
    if (h.slot == 2) ++at2;
  }
  if (at0 + at2 != c) throw std::invalid_argument("crossing passed twice on the same strand pair");
  if (at2 == c && at0 == 0) return std::nullopt;  // reversed direction
  if (at0 != c) throw std::invalid_argument("under-strand orientation is inconsistent");
  return t;
}

}  // namespace

KnotDiagram canonicalize(std::vector<std::array<int, 4>> raw) {
  if (raw.empty()) throw std::invalid_argument("diagram needs at least one crossing");
  OccMap occ = occurrences(raw);
  std::optional<Traversal> t = traverse(raw, occ, 0);
  if (!t) t = traverse(raw, occ, 1);
  if (!t) throw std::invalid_argument("no consistent orientation");
  int c = static_cast<int>(raw.size());

  std::map<int, int> relabel;  // old label -> 1..2c by traversal order
  for (int k = 0; k < 2 * c; ++k) relabel[t->labels[k]] = k + 1;

  // per-crossing over-entry slot (1 or 3) for signs
  std::vector<int> over_entry(c, 0);
  for (int k = 0; k < 2 * c; ++k)
    if (t->heads[k].slot % 2 == 1) over_entry[t->heads[k].crossing] = t->heads[k].slot;

  std::vector<Crossing> xs(c);
  for (int x = 0; x < c; ++x) {
    for (int s = 0; s < 4; ++s) xs[x].arcs[s] = relabel[raw[x][s]];
    if (over_entry[x] == 0) throw std::invalid_argument("crossing without an over passage");
    xs[x].sign = (over_entry[x] == 3) ? 1 : -1;
  }
  std::sort(xs.begin(), xs.end(),
            [](const Crossing& a, const Crossing& b) { return a.arcs[0] < b.arcs[0]; });

  KnotDiagram d;
  d.crossings = std::move(xs);
  d.arc_count = 2 * c;
  d.edge_head.assign(2 * c + 1, {});
  d.edge_tail.assign(2 * c + 1, {});
  // recompute head/tail against the sorted crossing list
  std::map<int, std::vector<Occ>> occ2;
  for (int x = 0; x < c; ++x)
    for (int s = 0; s < 4; ++s) occ2[d.crossings[x].arcs[s]].push_back({x, s});
  for (int e = 1; e <= 2 * c; ++e) {
    const auto& pair = occ2.at(e);
    for (auto& o : pair) {
      bool incoming;
      if (o.slot % 2 == 0) {
        incoming = (o.slot == 0);
      } else {
        // over slots: incoming one is the entry slot recorded in the sign
        incoming = (d.crossings[o.crossing].sign == 1) ? (o.slot == 3) : (o.slot == 1);
      }
      (incoming ? d.edge_head : d.edge_tail)[e] = {o.crossing, o.slot};
    }
    if (d.edge_head[e].crossing < 0 || d.edge_tail[e].crossing < 0)
      throw std::invalid_argument("inconsistent arc incidence");
  }

  // Wirtinger arc of each edge: arcs broken at under-passages, numbered from
  // the first edge that starts an over-arc.
  d.over_arc_of_edge.assign(2 * c + 1, -1);
  int k0 = 1;
  for (int e = 1; e <= 2 * c; ++e) {
    int prev = (e == 1) ? 2 * c : e - 1;
    if (d.edge_head[prev].slot == 0) {
      k0 = e;
      break;
    }
  }
  int arc = 0;
  for (int i = 0; i < 2 * c; ++i) {
    int e = (k0 - 1 + i) % (2 * c) + 1;
    d.over_arc_of_edge[e] = arc;
    if (d.edge_head[e].slot == 0) ++arc;
  }
  if (arc != c) throw std::invalid_argument("inconsistent arc incidence");
  return d;
}

KnotDiagram parse_pd(const std::string& text) {
  // strip comments
  std::string clean;
  bool comment = false;
  for (char ch : text) {
    if (ch == '#') comment = true;
    if (ch == '\n') comment = false;
    if (!comment) clean += ch;
  }
  std::vector<std::array<int, 4>> raw;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < clean.size() && std::isspace(static_cast<unsigned char>(clean[i]))) ++i;
  };
  skip_ws();
  while (i < clean.size()) {
    if (clean[i] != 'X') throw std::invalid_argument("malformed token, expected 'X('");
    ++i;
    skip_ws();
    if (i >= clean.size() || clean[i] != '(') throw std::invalid_argument("malformed token, expected '('");
    ++i;
    std::array<int, 4> tup{};
    for (int k = 0; k < 4; ++k) {
      skip_ws();
      size_t j = i;
      while (j < clean.size() && std::isdigit(static_cast<unsigned char>(clean[j]))) ++j;
      if (j == i) throw std::invalid_argument("malformed token, expected integer");
      tup[k] = std::stoi(clean.substr(i, j - i));
      i = j;
      skip_ws();
      if (k < 3) {
        if (i >= clean.size() || clean[i] != ',') throw std::invalid_argument("malformed token, expected ','");
        ++i;
      }
    }
    if (i >= clean.size() || clean[i] != ')') throw std::invalid_argument("malformed token, expected ')'");
    ++i;
    raw.push_back(tup);
    skip_ws();
  }
  return canonicalize(std::move(raw));
}

std::string emit_pd(const KnotDiagram& d) {
  std::ostringstream os;
  for (size_t x = 0; x < d.crossings.size(); ++x) {
    if (x) os << ' ';
    auto& a = d.crossings[x].arcs;
    os << "X(" << a[0] << ',' << a[1] << ',' << a[2] << ',' << a[3] << ')';
  }
  return os.str();
}

std::string emit_json(const KnotDiagram& d) {
  nlohmann::ordered_json j;
  j["crossings"] = nlohmann::json::array();
  for (auto& x : d.crossings) j["crossings"].push_back({x.arcs[0], x.arcs[1], x.arcs[2], x.arcs[3]});
  j["arc_count"] = d.arc_count;
  return j.dump();
}

namespace {

// Number of faces of the 4-valent map given by counterclockwise slot order.
int face_count(const std::vector<std::array<int, 4>>& raw) {
  int c = static_cast<int>(raw.size());
  std::map<int, std::vector<int>> ends;  // label -> dart ids
  for (int x = 0; x < c; ++x)
    for (int s = 0; s < 4; ++s) ends[raw[x][s]].push_back(4 * x + s);
  std::vector<int> alpha(4 * c, -1);
  for (auto& [lab, v] : ends) {
    if (v.size() != 2) return -1;
    alpha[v[0]] = v[1];
    alpha[v[1]] = v[0];
  }
  std::vector<bool> done(4 * c, false);
  int faces = 0;
  for (int d0 = 0; d0 < 4 * c; ++d0) {
    if (done[d0]) continue;
    ++faces;
    int d = d0;
    do {
      done[d] = true;
      int a = alpha[d];
      d = (a / 4) * 4 + (a % 4 + 1) % 4;  // turn counterclockwise at the far end
    } while (d != d0);
  }
  return faces;
}

}  // namespace

KnotDiagram parse_dt(const std::string& text) {
  std::istringstream is(text);
  std::vector<long> code;
  long v;
  while (is >> v) code.push_back(v);
  if (code.empty()) throw std::invalid_argument("empty DT code");
  int c = static_cast<int>(code.size());
  std::set<long> evens;
  for (long a : code) {
    long m = std::labs(a);
    if (m == 0 || m % 2 != 0 || m > 2 * c) throw std::invalid_argument("DT entry out of range");
    if (!evens.insert(m).second) throw std::invalid_argument("repeated DT entry");
  }
  // A crossing pairing two consecutive passages is a nugatory kink whose
  // chirality the code cannot determine; reject as inconsistent.
  for (int i = 0; i < c; ++i) {
    long odd = 2 * i + 1, even = std::labs(code[i]);
    long diff = std::labs(odd - even);
    if (diff == 1 || diff == 2 * c - 1)
      throw std::invalid_argument("inconsistent pairing: adjacent passages at one crossing");
  }
  // crossing i pairs passages (2i+1, |code[i]|); odd passage is under when
  // the entry is positive
  auto edge_in = [&](int passage) { return passage; };
  auto edge_out = [&](int passage) { return passage % (2 * c) + 1; };
  std::string last_error = "DT code is not realizable as a planar knot diagram";
  for (unsigned long mask = 0; mask < (1ul << c); ++mask) {
    std::vector<std::array<int, 4>> raw(c);
    for (int i = 0; i < c; ++i) {
      int odd = 2 * i + 1;
      int even = static_cast<int>(std::labs(code[i]));
      int u = (code[i] > 0) ? odd : even;   // under passage
      int o = (code[i] > 0) ? even : odd;   // over passage
      int ui = edge_in(u), uo = edge_out(u), oi = edge_in(o), oo = edge_out(o);
      if (mask & (1ul << i))
        raw[i] = {ui, oo, uo, oi};
      else
        raw[i] = {ui, oi, uo, oo};
    }
    if (face_count(raw) != c + 2) continue;
    try {
      return canonicalize(std::move(raw));
    } catch (const std::invalid_argument& e) {
      last_error = e.what();
    }
  }
  throw std::invalid_argument(last_error);
}

KnotDiagram torus_diagram(int u, int v) {
  if (u < 2 || v < 2) throw std::invalid_argument("u and v must be >= 2");
  if (std::gcd(u, v) != 1) throw std::invalid_argument("u and v must be coprime");
  std::vector<std::array<int, 4>> raw;
  std::vector<int> cur(u);
  std::iota(cur.begin(), cur.end(), 1);
  int fresh = u + 1;
  for (int rep = 0; rep < v; ++rep)
    for (int i = 0; i + 1 < u; ++i) {
      int over_in = cur[i], under_in = cur[i + 1];
      int under_out = fresh++, over_out = fresh++;
      raw.push_back({under_in, over_in, under_out, over_out});
      cur[i] = under_out;
      cur[i + 1] = over_out;
    }
  // braid closure: identify the bottom labels with the top labels 1..u
  std::map<int, int> glue;
  for (int i = 0; i < u; ++i) glue[cur[i]] = i + 1;
  for (auto& x : raw)
    for (int& lab : x)
      if (auto it = glue.find(lab); it != glue.end()) lab = it->second;
  return canonicalize(std::move(raw));
}

GroupPresentation wirtinger_presentation(const KnotDiagram& d) {
  int c = d.crossing_count();
  GroupPresentation p;
  p.generator_count = c;
  for (auto& x : d.crossings) {
    int i = d.over_arc_of_edge[x.arcs[0]];
    int j = d.over_arc_of_edge[x.arcs[2]];
    int k = d.over_arc_of_edge[x.arcs[1]];
    Word r;
    if (x.sign > 0)
      r = {letter(k), letter(i), letter(k, true), letter(j, true)};
    else
      r = {letter(k, true), letter(i), letter(k), letter(j, true)};
    p.relators.push_back(r);
  }
  return p;
}

}  // namespace knotcov
