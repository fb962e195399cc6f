#include "bgmu/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace bgmu {

namespace {

struct LocalSystem {
  int dim = 0;
  std::vector<Vec> roots;
};

Vec unit(int dim, int i) {
  Vec v = Vec::Zero(dim);
  v[i] = 1;
  return v;
}

LocalSystem local_simple_roots(char type, int rank) {
  LocalSystem ls;
  switch (type) {
    case 'A': {
      if (rank < 1) throw std::invalid_argument("type A needs rank >= 1");
      ls.dim = rank + 1;
      for (int i = 0; i < rank; ++i)
        ls.roots.push_back(unit(ls.dim, i) - unit(ls.dim, i + 1));
      break;
    }
    case 'B': {
      if (rank < 2) throw std::invalid_argument("type B needs rank >= 2");
      ls.dim = rank;
      for (int i = 0; i + 1 < rank; ++i)
        ls.roots.push_back(unit(ls.dim, i) - unit(ls.dim, i + 1));
      ls.roots.push_back(unit(ls.dim, rank - 1));
      break;
    }
    case 'C': {
      if (rank < 2) throw std::invalid_argument("type C needs rank >= 2");
      ls.dim = rank;
      for (int i = 0; i + 1 < rank; ++i)
        ls.roots.push_back(unit(ls.dim, i) - unit(ls.dim, i + 1));
      ls.roots.push_back(Rat(2) * unit(ls.dim, rank - 1));
      break;
    }
    case 'D': {
      if (rank < 3) throw std::invalid_argument("type D needs rank >= 3");
      ls.dim = rank;
      for (int i = 0; i + 1 < rank; ++i)
        ls.roots.push_back(unit(ls.dim, i) - unit(ls.dim, i + 1));
      ls.roots.push_back(unit(ls.dim, rank - 2) + unit(ls.dim, rank - 1));
      break;
    }
    case 'G': {
      if (rank != 2) throw std::invalid_argument("type G needs rank 2");
      ls.dim = 3;
      ls.roots.push_back(unit(3, 0) - unit(3, 1));
      Vec a2 = Vec::Zero(3);
      a2[0] = -2;
      a2[1] = 1;
      a2[2] = 1;
      ls.roots.push_back(a2);
      break;
    }
    case 'F': {
      if (rank != 4) throw std::invalid_argument("type F needs rank 4");
      ls.dim = 4;
      ls.roots.push_back(unit(4, 1) - unit(4, 2));
      ls.roots.push_back(unit(4, 2) - unit(4, 3));
      ls.roots.push_back(unit(4, 3));
      Vec a4(4);
      a4[0] = Rat(1, 2);
      a4[1] = Rat(-1, 2);
      a4[2] = Rat(-1, 2);
      a4[3] = Rat(-1, 2);
      ls.roots.push_back(a4);
      break;
    }
    case 'E': {
      if (rank < 6 || rank > 8) throw std::invalid_argument("type E needs rank 6..8");
      ls.dim = 8;
      Vec a1(8);
      for (int k = 0; k < 8; ++k) a1[k] = Rat(-1, 2);
      a1[0] = Rat(1, 2);
      a1[7] = Rat(1, 2);
      ls.roots.push_back(a1);
      ls.roots.push_back(unit(8, 0) + unit(8, 1));
      ls.roots.push_back(unit(8, 1) - unit(8, 0));
      for (int i = 3; i < rank; ++i)
        ls.roots.push_back(unit(8, i - 1) - unit(8, i - 2));
      break;
    }
    default:
      throw std::invalid_argument(std::string("unknown type '") + type + "'");
  }
  return ls;
}

// Positive roots by reflection closure from the simples, tracking the
// expansion of each root in the simple basis.
void build_positive_roots(RootDatum& rd) {
  struct Entry {
    Vec root;
    IVec coeff;
  };
  std::vector<Entry> out;
  std::map<std::string, int> seen;
  for (int i = 0; i < rd.rank; ++i) {
    IVec c = IVec::Zero(rd.rank);
    c[i] = 1;
    Vec r = rd.simple_roots.col(i);
    seen[vec_str(r)] = static_cast<int>(out.size());
    out.push_back({r, c});
  }
  for (size_t head = 0; head < out.size(); ++head) {
    Vec root = out[head].root;
    IVec coeff = out[head].coeff;
    for (int j = 0; j < rd.rank; ++j) {
      Rat pj = dot(root, rd.simple_coroots.col(j));
      if (!is_integer(pj)) throw std::logic_error("non-crystallographic pairing");
      Vec nr = root - pj * rd.simple_roots.col(j);
      IVec nc = coeff;
      nc[j] -= rat_num(pj);
      bool nonneg = true;
      for (int k = 0; k < rd.rank; ++k)
        if (nc[k] < 0) nonneg = false;
      if (!nonneg) continue;
      std::string key = vec_str(nr);
      if (seen.count(key)) continue;
      seen[key] = static_cast<int>(out.size());
      out.push_back({nr, nc});
    }
  }
  rd.pos_roots.resize(rd.dim, static_cast<Eigen::Index>(out.size()));
  rd.pos_coroots.resize(rd.dim, static_cast<Eigen::Index>(out.size()));
  rd.pos_coeffs.resize(rd.rank, static_cast<Eigen::Index>(out.size()));
  rd.pos_comp.resize(out.size());
  for (size_t k = 0; k < out.size(); ++k) {
    Eigen::Index kk = static_cast<Eigen::Index>(k);
    rd.pos_roots.col(kk) = out[k].root;
    Rat norm = dot(out[k].root, out[k].root);
    Rat cf = Rat(2) / norm;
    rd.pos_coroots.col(kk) = cf * out[k].root;
    rd.pos_coeffs.col(kk) = out[k].coeff;
    int comp = -1;
    for (int i = 0; i < rd.rank; ++i)
      if (out[k].coeff[i] != 0) {
        comp = rd.comp_of[static_cast<size_t>(i)];
        break;
      }
    rd.pos_comp[k] = comp;
  }
}

RootDatum finish_common(RootDatum rd) {
  rd.simple_coroots.resize(rd.dim, rd.rank);
  for (int i = 0; i < rd.rank; ++i) {
    Vec a = rd.simple_roots.col(i);
    Rat cf = Rat(2) / dot(a, a);
    rd.simple_coroots.col(i) = cf * a;
  }
  rd.cartan.resize(rd.rank, rd.rank);
  for (int i = 0; i < rd.rank; ++i)
    for (int j = 0; j < rd.rank; ++j)
      rd.cartan(i, j) = dot(rd.simple_coroots.col(i), rd.simple_roots.col(j));

  // Fundamental weights and coweights, solved per component from the
  // Cartan matrix: weights_j = sum_k (C^-1)_{kj} alpha_k, and dually.
  rd.weights = Mat::Zero(rd.dim, rd.rank);
  rd.coweights = Mat::Zero(rd.dim, rd.rank);
  for (const Component& comp : rd.components) {
    int cr = static_cast<int>(comp.nodes.size());
    Mat c(cr, cr);
    for (int a = 0; a < cr; ++a)
      for (int b = 0; b < cr; ++b)
        c(a, b) = rd.cartan(comp.nodes[static_cast<size_t>(a)],
                            comp.nodes[static_cast<size_t>(b)]);
    Mat cinv = mat_inverse(c);
    for (int b = 0; b < cr; ++b) {
      Vec w = Vec::Zero(rd.dim);
      Vec cw = Vec::Zero(rd.dim);
      for (int a = 0; a < cr; ++a) {
        w += cinv(a, b) * rd.simple_roots.col(comp.nodes[static_cast<size_t>(a)]);
        cw += cinv(b, a) * rd.simple_coroots.col(comp.nodes[static_cast<size_t>(a)]);
      }
      rd.weights.col(comp.nodes[static_cast<size_t>(b)]) = w;
      rd.coweights.col(comp.nodes[static_cast<size_t>(b)]) = cw;
    }
  }

  build_positive_roots(rd);

  rd.two_rho = Vec::Zero(rd.dim);
  for (int k = 0; k < rd.npos(); ++k) rd.two_rho += rd.pos_roots.col(k);

  rd.theta.clear();
  rd.theta_coroot.clear();
  for (size_t ci = 0; ci < rd.components.size(); ++ci) {
    // Highest root: the dominant root with componentwise-maximal expansion
    // in the simples. Non-simply-laced components also have a dominant
    // short root, so dominance alone does not pin it down.
    std::vector<int> dominant;
    for (int k = 0; k < rd.npos(); ++k) {
      if (rd.pos_comp[static_cast<size_t>(k)] != static_cast<int>(ci)) continue;
      if (is_dominant(rd, rd.pos_roots.col(k))) dominant.push_back(k);
    }
    if (dominant.empty()) throw std::logic_error("component without dominant root");
    int best = dominant[0];
    for (int k : dominant) {
      Int hk = 0, hb = 0;
      for (int i = 0; i < rd.rank; ++i) {
        hk += rd.pos_coeffs(i, k);
        hb += rd.pos_coeffs(i, best);
      }
      if (hk > hb) best = k;
    }
    for (int k : dominant)
      for (int i = 0; i < rd.rank; ++i)
        if (rd.pos_coeffs(i, k) > rd.pos_coeffs(i, best))
          throw std::logic_error("no componentwise-highest root");
    rd.theta.push_back(rd.pos_roots.col(best));
    rd.theta_coroot.push_back(rd.pos_coroots.col(best));
  }
  return rd;
}

}  // namespace

RootDatum finish_root_datum(RootDatum rd) {
  rd = finish_common(std::move(rd));
  for (int k = 0; k < rd.npos(); ++k) {
    rd.root_index_[vec_str(rd.pos_roots.col(k))] = k + 1;
    rd.root_index_[vec_str(Vec(-rd.pos_roots.col(k)))] = -(k + 1);
  }
  return rd;
}

bool RootDatum::root_lookup(const Vec& v, int* index, int* sign) const {
  auto it = root_index_.find(vec_str(v));
  if (it == root_index_.end()) return false;
  if (it->second > 0) {
    *index = it->second - 1;
    *sign = 1;
  } else {
    *index = -it->second - 1;
    *sign = -1;
  }
  return true;
}

RootDatum make_root_datum(const std::vector<std::pair<char, int>>& types) {
  if (types.empty()) throw std::invalid_argument("empty type list");
  RootDatum rd;
  std::vector<LocalSystem> locals;
  for (auto [t, r] : types) {
    locals.push_back(local_simple_roots(t, r));
    rd.dim += locals.back().dim;
    rd.rank += r;
  }
  rd.simple_roots = Mat::Zero(rd.dim, rd.rank);
  int doff = 0, roff = 0, ci = 0;
  for (auto [t, r] : types) {
    Component comp;
    comp.type = t;
    comp.rank = r;
    for (int i = 0; i < r; ++i) {
      rd.simple_roots.col(roff + i).segment(doff, locals[static_cast<size_t>(ci)].dim) =
          locals[static_cast<size_t>(ci)].roots[static_cast<size_t>(i)];
      comp.nodes.push_back(roff + i);
      rd.comp_of.push_back(ci);
    }
    rd.components.push_back(comp);
    doff += locals[static_cast<size_t>(ci)].dim;
    roff += r;
    ++ci;
  }
  rd = finish_root_datum(std::move(rd));
  // Adjoint coweight lattice: fundamental coweights of every component.
  rd.lattice = rd.coweights;
  return rd;
}

RootDatum make_gl_datum(int n) {
  if (n < 2) throw std::invalid_argument("GL datum needs n >= 2");
  RootDatum rd;
  rd.gl_mode = true;
  rd.dim = n;
  rd.rank = n - 1;
  Component comp;
  comp.type = 'A';
  comp.rank = n - 1;
  rd.simple_roots = Mat::Zero(n, n - 1);
  for (int i = 0; i + 1 < n; ++i) {
    rd.simple_roots.col(i) = unit(n, i) - unit(n, i + 1);
    comp.nodes.push_back(i);
    rd.comp_of.push_back(0);
  }
  rd.components.push_back(comp);
  rd = finish_root_datum(std::move(rd));
  rd.lattice = Mat::Identity(n, n);
  return rd;
}

Vec reflect_simple(const RootDatum& rd, int i, const Vec& v) {
  return v - dot(v, rd.simple_roots.col(i)) * rd.simple_coroots.col(i);
}

Vec reflect_root(const Vec& root, const Vec& v) {
  Rat cf = Rat(2) * dot(v, root) / dot(root, root);
  return v - cf * root;
}

Mat reflect_root_matrix(int dim, const Vec& root) {
  Mat m = Mat::Identity(dim, dim);
  Rat norm = dot(root, root);
  for (int j = 0; j < dim; ++j) {
    Rat cf = Rat(2) * root[j] / norm;
    Vec col = m.col(j) - cf * root;
    m.col(j) = col;
  }
  return m;
}

bool is_dominant(const RootDatum& rd, const Vec& v) {
  for (int i = 0; i < rd.rank; ++i)
    if (dot(v, rd.simple_roots.col(i)) < 0) return false;
  return true;
}

bool is_dominant_on(const RootDatum& rd, const std::vector<int>& nodes, const Vec& v) {
  for (int i : nodes)
    if (dot(v, rd.simple_roots.col(i)) < 0) return false;
  return true;
}

Dominantized dominantize(const RootDatum& rd, const Vec& v) {
  std::vector<int> all(static_cast<size_t>(rd.rank));
  for (int i = 0; i < rd.rank; ++i) all[static_cast<size_t>(i)] = i;
  return dominantize_on(rd, all, v);
}

Dominantized dominantize_on(const RootDatum& rd, const std::vector<int>& nodes, const Vec& v) {
  Dominantized d;
  d.v = v;
  d.w = Mat::Identity(rd.dim, rd.dim);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : nodes) {
      if (dot(d.v, rd.simple_roots.col(i)) < 0) {
        d.v = reflect_simple(rd, i, d.v);
        d.w = reflect_root_matrix(rd.dim, rd.simple_roots.col(i)) * d.w;
        d.word.push_back(i);
        moved = true;
      }
    }
  }
  return d;
}

std::vector<int> wall_set(const RootDatum& rd, const Vec& v) {
  std::vector<int> walls;
  for (int i = 0; i < rd.rank; ++i)
    if (dot(v, rd.simple_roots.col(i)) == 0) walls.push_back(i);
  return walls;
}

bool dominance_leq(const RootDatum& rd, const Vec& v1, const Vec& v2) {
  if (!is_dominant(rd, v1))
    throw std::invalid_argument("dominance_leq: first argument not dominant: " + vec_str(v1));
  if (!is_dominant(rd, v2))
    throw std::invalid_argument("dominance_leq: second argument not dominant: " + vec_str(v2));
  Vec d = v2 - v1;
  Vec residual = d;
  for (int i = 0; i < rd.rank; ++i) {
    Rat c = dot(d, rd.weights.col(i));
    if (c < 0) return false;
    residual -= c * rd.simple_coroots.col(i);
  }
  return vec_is_zero(residual);
}

std::vector<Vec> weyl_orbit(const RootDatum& rd, const Vec& v) {
  std::vector<Vec> out;
  std::set<std::string> seen;
  std::vector<Vec> queue{v};
  seen.insert(vec_str(v));
  while (!queue.empty()) {
    Vec cur = queue.back();
    queue.pop_back();
    out.push_back(cur);
    for (int i = 0; i < rd.rank; ++i) {
      Vec nx = reflect_simple(rd, i, cur);
      std::string key = vec_str(nx);
      if (seen.insert(key).second) queue.push_back(nx);
    }
  }
  std::sort(out.begin(), out.end(), vec_less);
  return out;
}

WeylElement longest_element(const RootDatum& rd, const std::vector<int>& nodes) {
  Vec v = Vec::Zero(rd.dim);
  for (int i : nodes) v += rd.coweights.col(i);
  WeylElement we;
  we.w = Mat::Identity(rd.dim, rd.dim);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : nodes) {
      if (dot(v, rd.simple_roots.col(i)) > 0) {
        v = reflect_simple(rd, i, v);
        we.w = reflect_root_matrix(rd.dim, rd.simple_roots.col(i)) * we.w;
        we.word.push_back(i);
        moved = true;
        break;
      }
    }
  }
  if (we.word.size() != pos_roots_in(rd, nodes).size())
    throw std::logic_error("longest_element: length mismatch");
  std::reverse(we.word.begin(), we.word.end());
  return we;
}

std::vector<int> pos_roots_in(const RootDatum& rd, const std::vector<int>& nodes) {
  std::vector<bool> in(static_cast<size_t>(rd.rank), false);
  for (int i : nodes) in[static_cast<size_t>(i)] = true;
  std::vector<int> out;
  for (int k = 0; k < rd.npos(); ++k) {
    bool ok = true;
    for (int i = 0; i < rd.rank && ok; ++i)
      if (rd.pos_coeffs(i, k) != 0 && !in[static_cast<size_t>(i)]) ok = false;
    if (ok) out.push_back(k);
  }
  return out;
}

namespace {

// Walk a chain starting at `from`, stepping away from `prev`, collecting
// nodes until a leaf.
std::vector<int> walk_arm(const std::map<int, std::vector<int>>& adj, int from, int prev) {
  std::vector<int> arm;
  int cur = from, last = prev;
  while (true) {
    arm.push_back(cur);
    int next = -1;
    for (int nb : adj.at(cur))
      if (nb != last) next = nb;
    if (next < 0) break;
    last = cur;
    cur = next;
  }
  return arm;
}

}  // namespace

std::vector<Component> recognize_subsystem(const RootDatum& rd, const std::vector<int>& nodes) {
  std::set<int> node_set(nodes.begin(), nodes.end());
  if (node_set.size() != nodes.size())
    throw std::invalid_argument("recognize_subsystem: repeated node");
  for (int i : nodes)
    if (i < 0 || i >= rd.rank)
      throw std::invalid_argument("recognize_subsystem: node " + std::to_string(i) +
                                  " out of range");
  std::map<int, std::vector<int>> adj;
  std::map<std::pair<int, int>, int> bond;  // unordered pair -> cartan(i,j)*cartan(j,i)
  for (int i : nodes) adj[i];
  for (int i : nodes)
    for (int j : nodes) {
      if (i >= j) continue;
      Rat m = rd.cartan(i, j) * rd.cartan(j, i);
      if (m == 0) continue;
      adj[i].push_back(j);
      adj[j].push_back(i);
      bond[{i, j}] = static_cast<int>(rat_num(Rat(m)).get_si());
    }
  auto norm_of = [&](int i) { return dot(rd.simple_roots.col(i), rd.simple_roots.col(i)); };

  // Connected components, each explored from its smallest node.
  std::vector<Component> out;
  std::set<int> done;
  for (int start : nodes) {
    if (done.count(start)) continue;
    std::vector<int> comp{start};
    done.insert(start);
    for (size_t h = 0; h < comp.size(); ++h)
      for (int nb : adj[comp[h]])
        if (done.insert(nb).second) comp.push_back(nb);
    std::sort(comp.begin(), comp.end());

    Component c;
    c.rank = static_cast<int>(comp.size());
    if (comp.size() == 1) {
      c.type = 'A';
      c.nodes = comp;
      out.push_back(c);
      continue;
    }

    int max_bond = 1;
    std::pair<int, int> heavy{-1, -1};
    for (int i : comp)
      for (int j : comp) {
        if (i >= j || !bond.count({i, j})) continue;
        if (bond[{i, j}] > max_bond) {
          max_bond = bond[{i, j}];
          heavy = {i, j};
        }
      }
    std::vector<int> leaves, branches;
    for (int i : comp) {
      size_t deg = adj[i].size();
      if (deg == 1) leaves.push_back(i);
      if (deg == 3) branches.push_back(i);
      if (deg > 3) throw std::invalid_argument("diagram vertex of degree > 3");
    }

    if (max_bond == 3) {
      if (comp.size() != 2) throw std::invalid_argument("triple bond in rank > 2");
      c.type = 'G';
      // Bourbaki order for G2: short root first.
      if (norm_of(heavy.first) < norm_of(heavy.second))
        c.nodes = {heavy.first, heavy.second};
      else
        c.nodes = {heavy.second, heavy.first};
      out.push_back(c);
      continue;
    }

    if (max_bond == 2) {
      if (!branches.empty()) throw std::invalid_argument("double bond with branch node");
      if (comp.size() == 2) {
        // Rank-2 double bond: normalized as B2, long root first.
        c.type = 'B';
        if (norm_of(heavy.first) > norm_of(heavy.second))
          c.nodes = {heavy.first, heavy.second};
        else
          c.nodes = {heavy.second, heavy.first};
        out.push_back(c);
        continue;
      }
      bool first_is_leaf = adj[heavy.first].size() == 1;
      bool second_is_leaf = adj[heavy.second].size() == 1;
      if (!first_is_leaf && !second_is_leaf) {
        // Interior double bond: F4, long side first.
        if (comp.size() != 4) throw std::invalid_argument("interior double bond outside F4");
        int long_mid = norm_of(heavy.first) > norm_of(heavy.second) ? heavy.first : heavy.second;
        int short_mid = long_mid == heavy.first ? heavy.second : heavy.first;
        int long_end = -1, short_end = -1;
        for (int nb : adj[long_mid])
          if (nb != short_mid) long_end = nb;
        for (int nb : adj[short_mid])
          if (nb != long_mid) short_end = nb;
        c.type = 'F';
        c.nodes = {long_end, long_mid, short_mid, short_end};
        out.push_back(c);
        continue;
      }
      int end = first_is_leaf ? heavy.first : heavy.second;
      int before = end == heavy.first ? heavy.second : heavy.first;
      // Chain from the far leaf toward the double bond, bond node last.
      std::vector<int> chain = walk_arm(adj, before, end);
      std::reverse(chain.begin(), chain.end());
      chain.push_back(end);
      c.type = norm_of(end) < norm_of(before) ? 'B' : 'C';
      c.nodes = chain;
      out.push_back(c);
      continue;
    }

    // Simply laced.
    if (branches.empty()) {
      c.type = 'A';
      int head = *std::min_element(leaves.begin(), leaves.end());
      c.nodes = walk_arm(adj, head, -1);
      out.push_back(c);
      continue;
    }
    if (branches.size() > 1) throw std::invalid_argument("diagram with two branch nodes");
    int br = branches[0];
    std::vector<std::vector<int>> arms;
    for (int nb : adj[br]) arms.push_back(walk_arm(adj, nb, br));
    std::sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) {
      if (x.size() != y.size()) return x.size() < y.size();
      return x.front() < y.front();
    });
    size_t l0 = arms[0].size(), l1 = arms[1].size(), l2 = arms[2].size();
    if (l0 == 1 && l1 == 1) {
      // Type D: long arm walked toward the branch, then the two leaves.
      c.type = 'D';
      std::vector<int> order(arms[2].rbegin(), arms[2].rend());
      order.push_back(br);
      int la = arms[0][0], lb = arms[1][0];
      order.push_back(std::min(la, lb));
      order.push_back(std::max(la, lb));
      c.nodes = order;
      out.push_back(c);
      continue;
    }
    if (l0 == 1 && l1 == 2 && (l2 == 2 || l2 == 3 || l2 == 4)) {
      c.type = 'E';
      std::vector<int> order;
      order.push_back(arms[1][1]);  // node 1: far end of the short tail
      order.push_back(arms[0][0]);  // node 2: the single-node arm
      order.push_back(arms[1][0]);  // node 3
      order.push_back(br);          // node 4
      for (int x : arms[2]) order.push_back(x);
      c.nodes = order;
      out.push_back(c);
      continue;
    }
    throw std::invalid_argument("unrecognized simply-laced diagram");
  }
  std::sort(out.begin(), out.end(),
            [](const Component& a, const Component& b) { return a.nodes[0] < b.nodes[0]; });
  return out;
}

std::string component_label(const Component& c) {
  std::ostringstream os;
  os << c.type << c.rank;
  return os.str();
}

std::string datum_type_label(const RootDatum& rd) {
  if (rd.gl_mode) {
    std::ostringstream os;
    os << "GL" << rd.dim;
    return os.str();
  }
  std::string out;
  for (size_t i = 0; i < rd.components.size(); ++i) {
    if (i) out += " x ";
    out += component_label(rd.components[i]);
  }
  return out;
}

IVec lattice_coords(const RootDatum& rd, const Vec& v) {
  Vec c;
  try {
    c = mat_solve(rd.lattice, v);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("lattice_coords: not in lattice span: " + vec_str(v));
  }
  IVec out(c.size());
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    if (!is_integer(c[i]))
      throw std::invalid_argument("lattice_coords: non-integral coordinates: " + vec_str(v));
    out[i] = rat_num(c[i]);
  }
  return out;
}

bool lattice_member(const RootDatum& rd, const Vec& v) {
  try {
    lattice_coords(rd, v);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

SubDatum make_sub_datum(const RootDatum& parent, const std::vector<int>& nodes) {
  std::vector<Component> comps = recognize_subsystem(parent, nodes);
  SubDatum sub;
  RootDatum& rd = sub.rd;
  rd.dim = parent.dim;
  for (const Component& c : comps)
    sub.nodes.insert(sub.nodes.end(), c.nodes.begin(), c.nodes.end());
  rd.rank = static_cast<int>(sub.nodes.size());
  rd.simple_roots = Mat::Zero(rd.dim, rd.rank);
  int off = 0;
  for (size_t ci = 0; ci < comps.size(); ++ci) {
    Component local;
    local.type = comps[ci].type;
    local.rank = comps[ci].rank;
    for (int k = 0; k < comps[ci].rank; ++k) {
      rd.simple_roots.col(off + k) =
          parent.simple_roots.col(comps[ci].nodes[static_cast<size_t>(k)]);
      local.nodes.push_back(off + k);
      rd.comp_of.push_back(static_cast<int>(ci));
    }
    rd.components.push_back(local);
    off += comps[ci].rank;
  }
  rd = finish_root_datum(std::move(rd));
  rd.lattice = parent.lattice;
  return sub;
}

}  // namespace bgmu
