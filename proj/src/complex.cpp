#include "toricfan/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace toricfan {

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertex_labels, std::vector<Face> facets)
    : labels_(std::move(vertex_labels)), facets_(std::move(facets)) {
  std::set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) throw Error(ErrorCode::InvalidArgument, "duplicate vertex label " + l);
  if (facets_.empty()) throw Error(ErrorCode::InvalidArgument, "complex has no facets");
  std::vector<bool> used(labels_.size(), false);
  for (auto& f : facets_) {
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw Error(ErrorCode::InvalidArgument, "facet repeats a vertex");
    if (f.size() != facets_.front().size())
      throw Error(ErrorCode::InvalidArgument, "complex is not pure");
    for (std::size_t v : f) {
      if (v >= labels_.size()) throw Error(ErrorCode::InvalidArgument, "facet references unknown vertex");
      used[v] = true;
    }
  }
  std::set<Face> distinct(facets_.begin(), facets_.end());
  if (distinct.size() != facets_.size()) throw Error(ErrorCode::InvalidArgument, "repeated facet");
  for (std::size_t v = 0; v < used.size(); ++v)
    if (!used[v]) throw Error(ErrorCode::InvalidArgument, "vertex " + labels_[v] + " is in no facet");
}

SimplicialComplex SimplicialComplex::from_labels(const std::vector<std::vector<std::string>>& facets) {
  std::vector<std::string> labels;
  std::map<std::string, std::size_t> index;
  std::vector<Face> out;
  for (const auto& f : facets) {
    Face face;
    for (const auto& l : f) {
      auto [it, inserted] = index.emplace(l, labels.size());
      if (inserted) labels.push_back(l);
      face.push_back(it->second);
    }
    out.push_back(std::move(face));
  }
  return SimplicialComplex(std::move(labels), std::move(out));
}

int SimplicialComplex::dimension() const noexcept { return static_cast<int>(facets_.front().size()) - 1; }

std::size_t SimplicialComplex::vertex_index(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw Error(ErrorCode::MissingLabel, "no vertex labelled '" + label + "'");
}

bool SimplicialComplex::has_vertex(const std::string& label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

Face SimplicialComplex::face_from_labels(const std::vector<std::string>& labels) const {
  Face f;
  for (const auto& l : labels) f.push_back(vertex_index(l));
  std::sort(f.begin(), f.end());
  return f;
}

std::vector<std::string> SimplicialComplex::labels_of(const Face& face) const {
  std::vector<std::string> out;
  for (std::size_t v : face) out.push_back(labels_.at(v));
  return out;
}

bool SimplicialComplex::has_face(const Face& face) const {
  Face f = face;
  std::sort(f.begin(), f.end());
  return std::any_of(facets_.begin(), facets_.end(), [&](const Face& facet) {
    return std::includes(facet.begin(), facet.end(), f.begin(), f.end());
  });
}

bool SimplicialComplex::has_facet(const std::vector<std::string>& labels) const {
  for (const auto& l : labels)
    if (!has_vertex(l)) return false;
  Face f = face_from_labels(labels);
  return std::find(facets_.begin(), facets_.end(), f) != facets_.end();
}

std::set<std::vector<std::string>> SimplicialComplex::facet_label_sets() const {
  std::set<std::vector<std::string>> out;
  for (const auto& f : facets_) {
    auto labels = labels_of(f);
    std::sort(labels.begin(), labels.end());
    out.insert(std::move(labels));
  }
  return out;
}

SimplicialComplex underlying_complex(const Fan& fan) {
  std::vector<std::string> labels;
  for (const auto& r : fan.rays()) labels.push_back(r.label);
  std::vector<Face> facets;
  for (const auto& c : fan.cones()) facets.push_back(c.rays);
  return SimplicialComplex(std::move(labels), std::move(facets));
}

namespace {

void require_face(const SimplicialComplex& c, const Face& face) {
  if (!c.has_face(face)) throw Error(ErrorCode::FaceNotPresent, "face is not a simplex of the complex");
}

// Relabels a family of label-sets into a complex with only the used vertices,
// keeping the original vertex order.
SimplicialComplex restrict_to(const SimplicialComplex& c, const std::vector<Face>& facets) {
  std::vector<std::size_t> used;
  for (const auto& f : facets) used.insert(used.end(), f.begin(), f.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::map<std::size_t, std::size_t> remap;
  std::vector<std::string> labels;
  for (std::size_t v : used) {
    remap[v] = labels.size();
    labels.push_back(c.vertex_labels()[v]);
  }
  std::vector<Face> out;
  for (const auto& f : facets) {
    Face g;
    for (std::size_t v : f) g.push_back(remap[v]);
    out.push_back(std::move(g));
  }
  return SimplicialComplex(std::move(labels), std::move(out));
}

}  // namespace

SimplicialComplex star(const SimplicialComplex& c, const Face& face) {
  require_face(c, face);
  Face f = face;
  std::sort(f.begin(), f.end());
  std::vector<Face> facets;
  for (const auto& t : c.facets())
    if (std::includes(t.begin(), t.end(), f.begin(), f.end())) facets.push_back(t);
  return restrict_to(c, facets);
}

SimplicialComplex link(const SimplicialComplex& c, const Face& face) {
  require_face(c, face);
  Face f = face;
  std::sort(f.begin(), f.end());
  std::vector<Face> facets;
  for (const auto& t : c.facets()) {
    if (!std::includes(t.begin(), t.end(), f.begin(), f.end())) continue;
    Face rest;
    std::set_difference(t.begin(), t.end(), f.begin(), f.end(), std::back_inserter(rest));
    facets.push_back(std::move(rest));
  }
  return restrict_to(c, facets);
}

SimplicialComplex suspension(const SimplicialComplex& c) {
  if (c.has_vertex("N") || c.has_vertex("S"))
    throw Error(ErrorCode::InvalidArgument, "complex already has a vertex labelled N or S");
  std::vector<std::string> labels = c.vertex_labels();
  const std::size_t n = labels.size();
  labels.push_back("N");
  labels.push_back("S");
  std::vector<Face> facets;
  for (std::size_t apex : {n, n + 1}) {
    for (auto f : c.facets()) {
      f.push_back(apex);
      facets.push_back(std::move(f));
    }
  }
  return SimplicialComplex(std::move(labels), std::move(facets));
}

SimplicialComplex stellar_subdivide(const SimplicialComplex& c, const Face& face, const std::string& label) {
  require_face(c, face);
  if (c.has_vertex(label)) throw Error(ErrorCode::InvalidArgument, "vertex label already in use: " + label);
  Face f = face;
  std::sort(f.begin(), f.end());
  std::vector<std::string> labels = c.vertex_labels();
  const std::size_t v = labels.size();
  labels.push_back(label);
  std::vector<Face> facets;
  for (const auto& t : c.facets()) {
    if (!std::includes(t.begin(), t.end(), f.begin(), f.end())) {
      facets.push_back(t);
      continue;
    }
    for (std::size_t r : f) {
      Face g;
      for (std::size_t x : t)
        if (x != r) g.push_back(x);
      g.push_back(v);
      facets.push_back(std::move(g));
    }
  }
  return SimplicialComplex(std::move(labels), std::move(facets));
}

long long FVector::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t i = 0; i < counts.size(); ++i)
    chi += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(counts[i]);
  return chi;
}

FVector f_vector(const SimplicialComplex& c) {
  const std::size_t k = c.facets().front().size();
  std::vector<std::set<Face>> faces(k);
  for (const auto& facet : c.facets()) {
    // Faces of a facet are its nonempty subsets, indexed by bitmask.
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      Face f;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1u << i)) f.push_back(facet[i]);
      faces[f.size() - 1].insert(std::move(f));
    }
  }
  FVector fv;
  for (const auto& s : faces) fv.counts.push_back(s.size());
  return fv;
}

PseudomanifoldReport pseudomanifold_check(const SimplicialComplex& c) {
  PseudomanifoldReport rep;
  const auto& facets = c.facets();
  std::map<Face, std::vector<std::size_t>> ridges;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (std::size_t skip = 0; skip < facets[i].size(); ++skip) {
      Face r;
      for (std::size_t j = 0; j < facets[i].size(); ++j)
        if (j != skip) r.push_back(facets[i][j]);
      ridges[r].push_back(i);
    }
  }
  rep.ridge_count = ridges.size();
  for (const auto& [r, inc] : ridges)
    if (inc.size() != 2) rep.bad_ridges.push_back(r);
  rep.ridges_ok = rep.bad_ridges.empty();

  // Connectivity of the dual graph (facets adjacent across a ridge).
  std::vector<std::size_t> parent(facets.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [r, inc] : ridges)
    for (std::size_t j = 1; j < inc.size(); ++j) parent[find(inc[j])] = find(inc[0]);
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < facets.size(); ++i) roots.insert(find(i));
  rep.connected = roots.size() == 1;

  rep.euler_characteristic = f_vector(c).euler_characteristic();
  rep.expected_euler = c.dimension() % 2 == 0 ? 2 : 0;
  rep.euler_ok = rep.euler_characteristic == rep.expected_euler;
  rep.passed = rep.ridges_ok && rep.connected && rep.euler_ok;
  return rep;
}

const std::vector<std::vector<std::string>>& reference_star_listing() {
  static const std::vector<std::vector<std::string>> listing{
      {"e1", "d2", "e3", "d3"}, {"e1", "d3", "e3", "c1"}, {"e1", "d1", "d3", "c1"},
      {"e1", "e2", "d3", "d1"}, {"d1", "e2", "e3", "e4"}, {"e1", "d2", "d3", "e4"},
  };
  return listing;
}

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += x;
  return s;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

ObstructionReport verify_barnette_obstruction(const SimplicialComplex& c) {
  for (const char* l : {"e1", "e2", "e3", "e4", "d1", "d2", "d3", "c1"})
    if (!c.has_vertex(l)) throw Error(ErrorCode::MissingLabel, std::string("complex has no vertex ") + l);

  ObstructionReport rep;
  const std::vector<std::string> a2{"d1", "e2", "e3", "e4"};
  const std::vector<std::string> a6{"d1", "d2", "e3", "e4"};

  {
    ObstructionFact f{"A2 and A6 meet exactly in d1e3e4", false, "", {}};
    bool both = c.has_facet(a2) && c.has_facet(a6);
    std::vector<std::string> common;
    auto s2 = sorted(a2), s6 = sorted(a6);
    std::set_intersection(s2.begin(), s2.end(), s6.begin(), s6.end(), std::back_inserter(common));
    f.passed = both && common == sorted({"d1", "e3", "e4"});
    f.witness = both ? "common face " + join(common) : "A2 or A6 is not a facet";
    rep.facts.push_back(std::move(f));
  }
  {
    ObstructionFact f{"c1 is not a vertex of A2 or A6", false, "", {}};
    bool in = std::find(a2.begin(), a2.end(), "c1") != a2.end() ||
              std::find(a6.begin(), a6.end(), "c1") != a6.end();
    f.passed = !in && c.has_facet(a2) && c.has_facet(a6);
    f.witness = "A2 = " + join(a2) + ", A6 = " + join(a6);
    rep.facts.push_back(std::move(f));
  }

  const Face edge = c.face_from_labels({"e1", "d3"});
  ObstructionFact star_fact{"st(e1d3) has exactly six facets", false, "", {}};
  ObstructionFact link_fact{"lk(e1d3) is the 6-cycle d2-e3-c1-d1-e2-e4-d2", false, "", {}};
  if (!c.has_face(edge)) {
    star_fact.witness = "e1d3 is not an edge";
    link_fact.witness = "e1d3 is not an edge";
  } else {
    SimplicialComplex st = star(c, edge);
    std::set<std::vector<std::string>> computed;
    for (const auto& f : st.facets()) {
      rep.star_facets.push_back(st.labels_of(f));
      computed.insert(sorted(st.labels_of(f)));
    }
    star_fact.passed = st.facets().size() == 6;
    star_fact.witness = std::to_string(st.facets().size()) + " facets:";
    for (const auto& f : rep.star_facets) star_fact.witness += " " + join(f);
    std::set<std::vector<std::string>> reference;
    for (const auto& f : reference_star_listing()) reference.insert(sorted(f));
    for (const auto& f : reference_star_listing())
      if (!computed.count(sorted(f)))
        star_fact.discrepancies.push_back("listed " + join(f) + " is not in the computed star");
    for (const auto& f : rep.star_facets)
      if (!reference.count(sorted(f)))
        star_fact.discrepancies.push_back("computed " + join(f) + " is missing from the listing");

    SimplicialComplex lk = link(c, edge);
    for (const auto& e : lk.facets()) {
      auto l = lk.labels_of(e);
      if (l.size() == 2) rep.link_edges.emplace_back(l[0], l[1]);
    }
    std::set<std::vector<std::string>> expected{
        sorted({"d2", "e3"}), sorted({"e3", "c1"}), sorted({"c1", "d1"}),
        sorted({"d1", "e2"}), sorted({"e2", "e4"}), sorted({"e4", "d2"})};
    link_fact.passed = lk.dimension() == 1 && lk.facet_label_sets() == expected;
    link_fact.witness = std::to_string(lk.facets().size()) + " edges:";
    for (const auto& [a, b] : rep.link_edges) link_fact.witness += " " + a + b;
  }
  rep.facts.push_back(std::move(star_fact));
  rep.facts.push_back(std::move(link_fact));

  rep.verdict = std::all_of(rep.facts.begin(), rep.facts.end(), [](const ObstructionFact& f) { return f.passed; });
  return rep;
}

}  // namespace toricfan
