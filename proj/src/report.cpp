#include "qmut/report.hpp"

#include <sstream>

#include "qmut/io.hpp"
#include "qmut/linalg.hpp"

namespace qmut::report {

using nlohmann::json;

namespace {

std::string vertex_text(std::span<const Vertex> vs, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(vs[i] + 1);
  }
  return out;
}

}  // namespace

json vertices_json(std::span<const Vertex> vs) {
  json out = json::array();
  for (auto v : vs) out.push_back(v + 1);
  return out;
}

json pattern_json(const SubquiverPattern& p) {
  json out{{"kind", std::string(to_string(p.kind))}, {"vertices", vertices_json(p.vertices)}};
  if (p.is_cycle()) {
    out["cyclic_order"] = vertices_json(p.cyclic_order);
    out["oriented"] = p.kind != PatternKind::NonOrientedCycle;
  }
  if (!p.detail.empty()) out["detail"] = p.detail;
  return out;
}

json certificate_json(const InfiniteCertificate& c) {
  json witness = json::array();
  for (const auto& part : c.witness) witness.push_back(vertices_json(part));
  return {{"clause", std::string(to_string(c.clause))}, {"witness", std::move(witness)}, {"detail", c.detail}};
}

json analyze(const Quiver& q) {
  const auto rz = radical_basis_z(q);
  const auto r2 = radical_basis_gf2(q);
  const auto dims = v00(q);
  json out{{"n", q.size()},
           {"connected", is_connected(q)},
           {"max_weight", io::int_to_json(max_weight(q))},
           {"rank_z", q.size() - rz.corank},
           {"corank_z", rz.corank},
           {"corank_gf2", r2.corank2},
           {"dim_v0", dims.dim_v0},
           {"dim_v00", dims.dim_v00},
           {"quotient_dim", dims.quotient_dim}};

  json doubles = json::array();
  for (const auto& p : double_edges(q)) doubles.push_back(pattern_json(p));
  out["double_edges"] = std::move(doubles);
  json cycles = json::array();
  for (const auto& p : induced_cycles(q)) cycles.push_back(pattern_json(p));
  out["cycles"] = std::move(cycles);
  json basics = json::array();
  for (const auto& p : basic_subquivers(q)) basics.push_back(pattern_json(p));
  out["basic_subquivers"] = std::move(basics);
  if (auto cert = infinite_certificate(q)) out["infinite_certificate"] = certificate_json(*cert);

  json zb = json::array();
  for (const auto& u : rz.vectors) {
    json coords = json::array();
    for (const auto& x : u) coords.push_back(io::int_to_json(x));
    zb.push_back(std::move(coords));
  }
  out["radical_basis_z"] = std::move(zb);
  json brv = json::array();
  for (const auto& u : basic_radical_vectors(q)) {
    json bits = json::array();
    for (std::size_t i = 0; i < u.size(); ++i) bits.push_back(u.get(i) ? 1 : 0);
    brv.push_back(std::move(bits));
  }
  out["basic_radical_vectors"] = std::move(brv);
  return out;
}

std::string invariants_text(const Quiver& q) {
  const auto rank = rank_z(q);
  const auto dims = v00(q);
  std::ostringstream out;
  out << "n: " << q.size() << '\n'
      << "connected: " << (is_connected(q) ? "yes" : "no") << '\n'
      << "max_weight: " << max_weight(q) << '\n'
      << "rank_Z: " << rank << '\n'
      << "corank_Z: " << q.size() - rank << '\n'
      << "corank_GF2: " << radical_basis_gf2(q).corank2 << '\n'
      << "dim_V0: " << dims.dim_v0 << '\n'
      << "dim_V00: " << dims.dim_v00 << '\n'
      << "quotient_dim: " << dims.quotient_dim << '\n';
  return out.str();
}

std::string patterns_text(const Quiver& q) {
  std::ostringstream out;
  auto section = [&](const char* title, const std::vector<SubquiverPattern>& ps) {
    out << title << ": " << ps.size() << '\n';
    for (const auto& p : ps) {
      out << "  " << to_string(p.kind) << " {" << vertex_text(p.is_cycle() ? p.cyclic_order : p.vertices, ",")
          << "}";
      if (!p.detail.empty()) out << "  " << p.detail;
      out << '\n';
    }
  };
  section("double edges", double_edges(q));
  section("induced cycles", induced_cycles(q));
  section("basic subquivers", basic_subquivers(q));
  if (auto cert = infinite_certificate(q)) {
    out << "infinite certificate: " << to_string(cert->clause) << " on {" << vertex_text(cert->witness.front(), ",")
        << "}  " << cert->detail << '\n';
  } else {
    out << "infinite certificate: none\n";
  }
  return out.str();
}

json classification_json(const Classification& c) {
  json out{{"verdict", std::string(to_string(c.verdict))}, {"label", c.label()}, {"evidence", c.evidence}};
  if (!c.name.empty()) out["name"] = c.name;
  if (c.class_size) out["class_size"] = *c.class_size;
  if (c.certificate) out["certificate"] = certificate_json(*c.certificate);
  if (c.witness) out["witness"] = io::to_json(*c.witness);
  return out;
}

std::string classification_text(const Classification& c) {
  std::string out = c.label() + "\n";
  for (const auto& e : c.evidence) out += "  " + e + "\n";
  return out;
}

json class_json(const MutationClass& cls, std::size_t offset, std::size_t limit) {
  json out{{"size", cls.size()}, {"status", std::string(to_string(cls.status))}, {"disconnected", cls.disconnected}};
  if (cls.witness) out["witness"] = io::to_json(*cls.witness);
  json members = json::array();
  const std::size_t end = offset + std::min(limit, cls.size() - std::min(offset, cls.size()));
  for (std::size_t i = offset; i < end; ++i) members.push_back(io::to_json(cls.representatives[i]));
  out["offset"] = offset;
  out["limit"] = limit;
  out["members"] = std::move(members);
  return out;
}

json catalog_json(const ReferenceCatalog& catalog) {
  json seeds = json::array();
  for (const auto& e : catalog.entries()) {
    seeds.push_back({{"name", e.name},
                     {"n", e.seed.size()},
                     {"exceptional", e.exceptional},
                     {"class_size", e.mutation_class.size()},
                     {"seed", io::to_json(e.seed)}});
  }
  return {{"seeds", std::move(seeds)}};
}

}  // namespace qmut::report
