#include "osp/dynkin.hpp"

#include <algorithm>
#include <sstream>

namespace osp {

namespace {

std::string cartan_to_string(const std::vector<std::vector<long>>& A) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < A.size(); ++i) {
    os << (i ? ",[" : "[");
    for (size_t j = 0; j < A[i].size(); ++j) os << (j ? "," : "") << A[i][j];
    os << "]";
  }
  os << "]";
  return os.str();
}

struct Component {
  std::string label;
  std::vector<int> order;
  int rank() const { return (int)order.size(); }
};

}  // namespace

DynkinClassification classify_dynkin(const RootSystem& rs) {
  const int R = rs.rank();
  const auto& A = rs.cartan();
  auto fail = [&]() -> void {
    throw ValidationError("unrecognized Dynkin diagram, Cartan matrix " + cartan_to_string(A));
  };

  std::vector<Rat> norm2(R);
  for (int i = 0; i < R; ++i) norm2[i] = rs.inner(rs.simple_roots()[i], rs.simple_roots()[i]);

  std::vector<std::vector<int>> adj(R);
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < R; ++j)
      if (i != j && A[i][j] != 0) adj[i].push_back(j);

  std::vector<int> comp(R, -1);
  int ncomp = 0;
  for (int i = 0; i < R; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (comp[w] < 0) { comp[w] = ncomp; stack.push_back(w); }
    }
    ++ncomp;
  }

  std::vector<Component> comps;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> nodes;
    for (int i = 0; i < R; ++i)
      if (comp[i] == c) nodes.push_back(i);
    const int n = (int)nodes.size();
    Component out;

    if (n == 1) {
      out.label = "A1";
      out.order = nodes;
      comps.push_back(out);
      continue;
    }

    long bond_max = 1;
    int n_double = 0, n_triple = 0;
    for (int v : nodes)
      for (int w : adj[v]) {
        if (w < v) continue;
        long b = A[v][w] * A[w][v];
        bond_max = std::max(bond_max, b);
        if (b == 2) ++n_double;
        if (b == 3) ++n_triple;
        if (b > 3) fail();
      }

    std::vector<int> deg(R, 0);
    int fork = -1, ends = 0;
    for (int v : nodes) {
      deg[v] = (int)adj[v].size();
      if (deg[v] > 3) fail();
      if (deg[v] == 3) { if (fork >= 0) fail(); fork = v; }
      if (deg[v] == 1) ++ends;
    }

    if (n_triple > 0) {
      if (n != 2 || n_triple != 1) fail();
      int s = norm2[nodes[0]] < norm2[nodes[1]] ? nodes[0] : nodes[1];
      int l = s == nodes[0] ? nodes[1] : nodes[0];
      out.label = "G2";
      out.order = {s, l};
      comps.push_back(out);
      continue;
    }

    if (fork >= 0) {
      if (n_double > 0) fail();
      std::vector<std::vector<int>> branches;
      for (int w : adj[fork]) {
        std::vector<int> br{w};
        int prev = fork, cur = w;
        while (deg[cur] == 2) {
          int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
          prev = cur; cur = nxt;
          br.push_back(cur);
        }
        if (deg[cur] != 1) fail();  // a cycle or nested fork
        branches.push_back(br);
      }
      std::sort(branches.begin(), branches.end(),
                [](const auto& a, const auto& b) { return a.size() < b.size(); });
      size_t a = branches[0].size(), b = branches[1].size(), cl = branches[2].size();
      if (a == 1 && b == 1) {
        out.label = "D" + std::to_string(n);
        // long branch from its far end toward the fork, then the two tails
        out.order = branches[2];
        std::reverse(out.order.begin(), out.order.end());
        out.order.push_back(fork);
        int t1 = branches[0][0], t2 = branches[1][0];
        out.order.push_back(std::min(t1, t2));
        out.order.push_back(std::max(t1, t2));
      } else if (a == 1 && b == 2 && cl >= 2 && cl <= 4) {
        out.label = "E" + std::to_string(4 + cl);
        out.order = branches[2];
        std::reverse(out.order.begin(), out.order.end());
        out.order.push_back(fork);
        for (int v : branches[1]) out.order.push_back(v);
        out.order.push_back(branches[0][0]);
      } else {
        fail();
      }
      comps.push_back(out);
      continue;
    }

    // path
    if (ends != 2) fail();
    int start = -1;
    for (int v : nodes)
      if (deg[v] == 1 && (start < 0 || v < start)) start = v;
    std::vector<int> path{start};
    int prev = -1, cur = start;
    while ((int)path.size() < n) {
      int nxt = -1;
      for (int w : adj[cur])
        if (w != prev) { nxt = w; break; }
      if (nxt < 0) fail();
      prev = cur; cur = nxt;
      path.push_back(cur);
    }

    if (n_double == 0) {
      out.label = "A" + std::to_string(n);
      out.order = path;
      comps.push_back(out);
      continue;
    }
    if (n_double != 1) fail();

    int nshort = 0;
    Rat minn = norm2[path[0]];
    for (int v : path)
      if (norm2[v] < minn) minn = norm2[v];
    for (int v : path)
      if (norm2[v] == minn) ++nshort;
    // orient the path short-end first
    if (norm2[path.back()] == minn && norm2[path.front()] != minn)
      std::reverse(path.begin(), path.end());
    int dpos = -1;
    for (int i = 0; i + 1 < n; ++i)
      if (A[path[i]][path[i + 1]] * A[path[i + 1]][path[i]] == 2) dpos = i;

    if (n == 2) {
      out.label = "B2";
    } else if (nshort == 1) {
      out.label = "B" + std::to_string(n);
      if (dpos != 0) fail();
    } else if (nshort == n - 1) {
      out.label = "C" + std::to_string(n);
      if (dpos != n - 2) fail();
    } else if (n == 4 && nshort == 2 && dpos == 1) {
      out.label = "F4";
    } else {
      fail();
    }
    out.order = path;
    comps.push_back(out);
  }

  std::sort(comps.begin(), comps.end(), [](const Component& a, const Component& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    return a.label < b.label;
  });

  DynkinClassification cls;
  for (size_t i = 0; i < comps.size(); ++i) {
    if (i) cls.label += " x ";
    cls.label += comps[i].label;
    for (int v : comps[i].order) cls.canonical_order.push_back(v);
  }
  int n = (int)cls.canonical_order.size();
  cls.cartan.assign(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      cls.cartan[i][j] = A[cls.canonical_order[i]][cls.canonical_order[j]];
  return cls;
}

}  // namespace osp
