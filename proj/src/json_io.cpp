#include "equimack/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace equimack {

namespace {

std::string toStr(const Int& v) { return v.get_str(); }
Int fromStr(const Json& j) { return Int(j.get<std::string>()); }

}  // namespace

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(toStr(m.at(i, j)));
    rows.push_back(row);
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

IntMatrix matrix_from_json(const Json& j) {
  IntMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
  const Json& rows = j.at("entries");
  for (int i = 0; i < m.rows(); ++i)
    for (int c = 0; c < m.cols(); ++c) m.at(i, c) = fromStr(rows.at(i).at(c));
  return m;
}

Json group_to_json(const FiniteAbelianGroup& g) {
  return Json{{"name", g.name()}, {"factors", g.factors}, {"order", g.order}};
}

FiniteAbelianGroup group_from_json(const Json& j) {
  return make_group(j.at("factors").get<std::vector<long>>());
}

Json lattice_to_json(const SubgroupLattice& lat) {
  Json subs = Json::array();
  for (const auto& s : lat.subs) {
    Json parents = Json::array();
    for (int h = 0; h < lat.size(); ++h)
      if (h != s.index && lat.leq[s.index][h]) parents.push_back(h);
    subs.push_back(Json{{"index", s.index},
                        {"order", s.order},
                        {"elements", s.elements},
                        {"contained_in", parents}});
  }
  return Json{{"group", group_to_json(lat.group)}, {"subgroups", subs}};
}

std::string lattice_to_dot(const SubgroupLattice& lat) {
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n";
  for (const auto& s : lat.subs)
    out << "  s" << s.index << " [label=\"#" << s.index << " (order " << s.order << ")\"];\n";
  for (int a = 0; a < lat.size(); ++a)
    for (int b = 0; b < lat.size(); ++b) {
      if (a == b || !lat.leq[a][b]) continue;
      bool covering = true;  // no strictly intermediate subgroup
      for (int c = 0; c < lat.size() && covering; ++c)
        if (c != a && c != b && lat.leq[a][c] && lat.leq[c][b]) covering = false;
      if (covering) out << "  s" << a << " -> s" << b << ";\n";
    }
  out << "}\n";
  return out.str();
}

Json twist_to_json(const Twist& a) {
  Json vals = Json::array();
  for (const Int& v : a.value) vals.push_back(toStr(v));
  return Json{{"group", group_to_json(a.lat->group)}, {"values", vals}};
}

Twist twist_from_json(const LatticePtr& lat, const Json& j) {
  IntVec v;
  for (const Json& e : j.at("values")) v.push_back(fromStr(e));
  return make_twist(lat, v);
}

Json functor_to_json(const MackeyFunctor& m) {
  Json levels = Json::array();
  for (int h = 0; h < m.lat->size(); ++h)
    levels.push_back(Json{{"subgroup", h}, {"rank", m.rank(h)}, {"basis", m.levels[h].basis}});
  Json res = Json::array(), tr = Json::array(), weyl = Json::array();
  for (int h = 0; h < m.lat->size(); ++h) {
    for (int k : m.lat->below[h]) {
      if (k == h) continue;
      res.push_back(Json{{"from", h}, {"to", k}, {"matrix", matrix_to_json(m.resMaps[h][k])}});
      tr.push_back(Json{{"from", k}, {"to", h}, {"matrix", matrix_to_json(m.trMaps[h][k])}});
    }
    for (int g = 0; g < m.lat->group.numGens(); ++g)
      weyl.push_back(
          Json{{"level", h}, {"generator", g}, {"matrix", matrix_to_json(m.weyl[h][g])}});
  }
  return Json{{"group", group_to_json(m.lat->group)},
              {"levels", levels},
              {"restrictions", res},
              {"transfers", tr},
              {"weyl", weyl}};
}

MackeyFunctor functor_from_json(const LatticePtr& lat, const Json& j) {
  std::vector<int> ranks(lat->size());
  for (const Json& lv : j.at("levels")) ranks[lv.at("subgroup").get<int>()] = lv.at("rank").get<int>();
  MackeyFunctor m = make_skeleton(lat, ranks);
  for (const Json& lv : j.at("levels"))
    m.levels[lv.at("subgroup").get<int>()].basis = lv.at("basis").get<std::vector<std::string>>();
  for (const Json& e : j.at("restrictions"))
    m.resMaps[e.at("from").get<int>()][e.at("to").get<int>()] = matrix_from_json(e.at("matrix"));
  for (const Json& e : j.at("transfers"))
    m.trMaps[e.at("to").get<int>()][e.at("from").get<int>()] = matrix_from_json(e.at("matrix"));
  for (const Json& e : j.at("weyl"))
    m.weyl[e.at("level").get<int>()][e.at("generator").get<int>()] =
        matrix_from_json(e.at("matrix"));
  return m;
}

Json morphism_to_json(const MackeyMorphism& phi) {
  Json comps = Json::array();
  for (const auto& c : phi.comp) comps.push_back(matrix_to_json(c));
  return Json{{"group", group_to_json(phi.source.lat->group)},
              {"source", functor_to_json(phi.source)},
              {"target", functor_to_json(phi.target)},
              {"components", comps}};
}

Json report_to_json(const ValidationReport& rep) {
  return Json{{"ok", rep.ok()}, {"violations", rep.violations}};
}

std::string render_lewis(const MackeyFunctor& m) {
  const auto& lat = *m.lat;
  std::ostringstream out;
  std::vector<int> order(lat.size());
  for (int i = 0; i < lat.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (lat.subs[a].order != lat.subs[b].order) return lat.subs[a].order > lat.subs[b].order;
    return a < b;
  });
  for (int h : order) {
    out << "level #" << h << " (order " << lat.subs[h].order << "): rank " << m.rank(h) << "\n";
    for (int k : lat.below[h]) {
      if (k == h) continue;
      bool covering = true;
      for (int c : lat.below[h])
        if (c != k && c != h && lat.leq[k][c]) covering = false;
      if (!covering) continue;
      out << "  res -> #" << k << ": " << m.resMaps[h][k].toString() << "\n";
      out << "  tr  <- #" << k << ": " << m.trMaps[h][k].toString() << "\n";
    }
  }
  return out.str();
}

}  // namespace equimack
