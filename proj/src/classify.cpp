#include "qmut/classify.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>

#include "qmut/linalg.hpp"

namespace qmut {

namespace seeds {

namespace {

std::vector<Arrow> path_arrows(Vertex first, std::size_t count) {
  std::vector<Arrow> out;
  for (std::size_t i = 0; i + 1 < count; ++i) out.push_back({first + i, first + i + 1, 1});
  return out;
}

// Path 0..len-1 with a branch of the given length attached at vertex `at`.
Quiver branched_tree(std::size_t len, Vertex at, std::size_t branch) {
  auto arrows = path_arrows(0, len);
  Vertex prev = at;
  for (std::size_t i = 0; i < branch; ++i) {
    arrows.push_back({prev, len + i, 1});
    prev = len + i;
  }
  return Quiver::from_arrows(len + branch, arrows);
}

// Elliptic seeds: a double edge 1 -> 0, three oriented triangles
// 0 -> v -> 1 -> 0 through it, and a path hanging off each v.
Quiver elliptic(std::array<std::size_t, 3> tails) {
  std::vector<Arrow> arrows{{1, 0, 2}};
  std::size_t next = 5;
  for (Vertex i = 0; i < 3; ++i) {
    const Vertex v = 2 + i;
    arrows.push_back({0, v, 1});
    arrows.push_back({v, 1, 1});
    Vertex prev = v;
    for (std::size_t t = 0; t < tails[i]; ++t) {
      arrows.push_back({prev, next, 1});
      prev = next++;
    }
  }
  return Quiver::from_arrows(next, arrows);
}

// Center 0 with `blocks` oriented triangles 0 -> a -> b -> 0 whose middle
// edge a -> b is double; optionally a pendant arrow out of the center.
Quiver x_type(std::size_t blocks, bool pendant) {
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < blocks; ++i) {
    const Vertex a = 1 + 2 * i;
    const Vertex b = a + 1;
    arrows.push_back({0, a, 1});
    arrows.push_back({a, b, 2});
    arrows.push_back({b, 0, 1});
  }
  std::size_t n = 1 + 2 * blocks;
  if (pendant) arrows.push_back({0, n++, 1});
  return Quiver::from_arrows(n, arrows);
}

std::optional<std::size_t> parse_size(std::string_view s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

Quiver dynkin_a(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "A_n needs n >= 1");
  return Quiver::from_arrows(n, path_arrows(0, n));
}

Quiver dynkin_d(std::size_t n) {
  if (n < 4) throw Error(ErrorCode::InvalidArgument, "D_n needs n >= 4");
  std::vector<Arrow> arrows{{0, 2, 1}, {1, 2, 1}};
  for (Vertex i = 2; i + 1 < n; ++i) arrows.push_back({i, i + 1, 1});
  return Quiver::from_arrows(n, arrows);
}

Quiver oriented_cycle(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "oriented cycles need n >= 3");
  auto arrows = path_arrows(0, n);
  arrows.push_back({n - 1, 0, 1});
  return Quiver::from_arrows(n, arrows);
}

const std::vector<std::string>& exceptional_names() {
  static const std::vector<std::string> names{"E6",       "E7",       "E8",       "E6^(1)", "E7^(1)", "E8^(1)",
                                              "E6^(1,1)", "E7^(1,1)", "E8^(1,1)", "X6",     "X7"};
  return names;
}

bool is_exceptional_name(const std::string& name) {
  const auto& names = exceptional_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::optional<Quiver> by_name(const std::string& name) {
  if (name == "E6") return branched_tree(5, 2, 1);
  if (name == "E7") return branched_tree(6, 2, 1);
  if (name == "E8") return branched_tree(7, 2, 1);
  if (name == "E6^(1)") return branched_tree(5, 2, 2);
  if (name == "E7^(1)") return branched_tree(7, 3, 1);
  if (name == "E8^(1)") return branched_tree(8, 2, 1);
  if (name == "E6^(1,1)") return elliptic({1, 1, 1});
  if (name == "E7^(1,1)") return elliptic({2, 0, 2});
  if (name == "E8^(1,1)") return elliptic({1, 0, 4});
  if (name == "X6") return x_type(2, true);
  if (name == "X7") return x_type(3, false);
  if (name.size() < 2) return std::nullopt;
  const auto n = parse_size(std::string_view(name).substr(1));
  if (!n) return std::nullopt;
  if (name[0] == 'A' && *n >= 1) return dynkin_a(*n);
  if (name[0] == 'D' && *n >= 4) return dynkin_d(*n);
  if (name[0] == 'C' && *n >= 3) return oriented_cycle(*n);
  return std::nullopt;
}

std::string slug(const std::string& name) {
  std::string out;
  for (std::size_t i = 0; i < name.size(); ++i) {
    if (name[i] == '^' && i + 1 < name.size() && name[i + 1] == '(') {
      out += '-';
      ++i;
    } else if (name[i] == ',') {
      out += '-';
    } else if (name[i] != ')') {
      out += name[i];
    }
  }
  return out;
}

}  // namespace seeds

namespace {

std::string vertex_list(std::span<const Vertex> vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(vs[i] + 1);
  }
  return out + "}";
}

std::filesystem::path cache_path(const std::filesystem::path& dir, const std::string& name) {
  return dir / (seeds::slug(name) + ".v" + std::to_string(kClassDumpFormat) + ".jsonl");
}

std::optional<MutationClass> load_cached(const std::filesystem::path& path, const CanonicalForm& seed_key) {
  if (!std::filesystem::exists(path)) return std::nullopt;
  try {
    MutationClass cls = read_class(path);
    if (cls.status != ClassStatus::Complete || !cls.contains(seed_key)) return std::nullopt;
    return cls;
  } catch (const Error&) {
    // Stale or corrupt caches are rebuilt.
    return std::nullopt;
  }
}

// Reverses every edge joining vertices of different index parity.
Quiver reorient(const Quiver& q) {
  std::vector<Int> b = q.entries();
  const std::size_t n = q.size();
  for (Vertex i = 0; i < n; ++i) {
    if (i % 2 == 1) continue;
    for (Vertex j = 0; j < n; ++j) {
      b[i * n + j] = -b[i * n + j];
      b[j * n + i] = -b[j * n + i];
    }
  }
  return Quiver::from_matrix(n, std::move(b));
}

}  // namespace

ReferenceCatalog ReferenceCatalog::build(const Options& opts) {
  std::vector<std::string> names = seeds::exceptional_names();
  for (std::size_t n = 3; n <= opts.max_a; ++n) names.push_back("A" + std::to_string(n));
  for (std::size_t n = 4; n <= opts.max_d; ++n) names.push_back("D" + std::to_string(n));
  if (opts.cache_dir) {
    std::error_code ec;
    std::filesystem::create_directories(*opts.cache_dir, ec);
    if (ec) throw Error(ErrorCode::Io, "cannot create catalog directory " + opts.cache_dir->string());
  }

  ReferenceCatalog cat;
  for (const auto& name : names) {
    Quiver seed = *seeds::by_name(name);
    const CanonicalForm key = class_key(seed, opts.caps);
    std::optional<MutationClass> cls;
    if (opts.cache_dir) cls = load_cached(cache_path(*opts.cache_dir, name), key);
    if (!cls) {
      cls = enumerate_class(seed, opts.caps);
      if (cls->status != ClassStatus::Complete) {
        throw Error(ErrorCode::Internal, "reference class " + name + " did not enumerate completely");
      }
      if (opts.cache_dir) write_class(cache_path(*opts.cache_dir, name), *cls);
    }
    const bool exceptional = seeds::is_exceptional_name(name);
    if (exceptional) {
      for (const auto& f : cls->members) cat.exceptional_forms_.emplace(f, name);
    }
    cat.index_.emplace(name, cat.entries_.size());
    cat.entries_.push_back({name, std::move(seed), std::move(*cls), exceptional});
  }

  // The figures leave tree orientations free; the classes must not depend on
  // the orientation picked for the seeds.
  for (const char* name : {"E6", "D5"}) {
    if (!cat.has(name)) continue;
    const auto& e = cat.entry(name);
    const auto other = enumerate_class(reorient(e.seed), opts.caps);
    if (other.members != e.mutation_class.members) {
      throw Error(ErrorCode::Internal, std::string("class of ") + name + " depends on the seed orientation");
    }
  }
  return cat;
}

const CatalogEntry& ReferenceCatalog::entry(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw Error(ErrorCode::InvalidArgument, "no reference class named '" + name + "'");
  return entries_[it->second];
}

std::optional<std::string> ReferenceCatalog::exceptional_class_of(const CanonicalForm& form) const {
  auto it = exceptional_forms_.find(form);
  if (it == exceptional_forms_.end()) return std::nullopt;
  return it->second;
}

bool mutation_equivalent(const Quiver& q1, const Quiver& q2, const EnumerationCaps& caps) {
  if (q1.size() != q2.size()) return false;
  const CanonicalForm k2 = class_key(q2, caps);
  if (class_key(q1, caps) == k2) return true;
  const MutationClass c1 = enumerate_class(q1, caps);
  if (c1.status == ClassStatus::Complete) return c1.contains(k2);
  const MutationClass c2 = enumerate_class(q2, caps);
  // A complete class never reaches a heavy edge, so it cannot meet a class
  // that does.
  if (c2.status == ClassStatus::Complete) return c2.contains(class_key(q1, caps));
  if (c1.status == ClassStatus::AbortedWeight && c2.status == ClassStatus::AbortedCap) return false;
  if (c1.status == ClassStatus::AbortedCap && c2.status == ClassStatus::AbortedWeight) return false;
  throw Error(ErrorCode::CapsExceeded, "cannot decide mutation equivalence: neither class is finite under the caps");
}

std::optional<VertexSet> contains_class_subquiver(const Quiver& q, const CatalogEntry& target,
                                                  std::size_t subset_budget) {
  const std::size_t n = q.size();
  const std::size_t k = target.seed.size();
  if (k > n) return std::nullopt;
  // C(n, k) with early exit once it passes the budget.
  std::size_t subsets = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    subsets = subsets * (n - k + i) / i;
    if (subsets > subset_budget) {
      throw Error(ErrorCode::TooLarge, "subquiver scan over " + std::to_string(k) + "-subsets of " +
                                           std::to_string(n) + " vertices exceeds the budget of " +
                                           std::to_string(subset_budget));
    }
  }
  Int target_weight = 0;
  for (const auto& rep : target.mutation_class.representatives) target_weight = std::max(target_weight, max_weight(rep));
  EnumerationCaps caps;
  caps.labeled = target.mutation_class.labeled;

  std::vector<Vertex> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    const auto sub = induced_subquiver(q, pick).quiver;
    if (is_connected(sub) && max_weight(sub) <= target_weight && target.mutation_class.contains(class_key(sub, caps))) {
      return VertexSet(pick.begin(), pick.end());
    }
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) return std::nullopt;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

E6Report e6_characterization(const Quiver& q, const ReferenceCatalog& catalog) {
  const std::size_t n = q.size();
  if (n != 6) throw Error(ErrorCode::HypothesisViolation, "quiver must have six vertices, has " + std::to_string(n));
  if (!is_connected(q)) throw Error(ErrorCode::HypothesisViolation, "quiver must be connected");
  if (!is_simply_laced(q)) throw Error(ErrorCode::HypothesisViolation, "quiver must be simply-laced");
  const auto cycles = induced_cycles(q);
  for (const auto& c : cycles) {
    if (c.kind == PatternKind::NonOrientedCycle) {
      throw Error(ErrorCode::HypothesisViolation,
                  "quiver must have no non-oriented induced cycle; found " + vertex_list(c.vertices));
    }
  }

  E6Report r;
  r.a = catalog.entry("E6").mutation_class.contains(canonical_form(q));
  const bool basic = has_basic_subquiver(q);
  r.b = basic && corank_z(q) == 0;
  r.c = basic && radical_basis_gf2(q).corank2 == 0;

  auto some_vertex_sees_one = [&](std::span<const Vertex> set) {
    for (Vertex v = 0; v < n; ++v) {
      if (std::find(set.begin(), set.end(), v) == set.end() && adjacent_count(q, v, set) == 1) return true;
    }
    return false;
  };
  bool d = basic;
  for (const auto& c : cycles) d = d && some_vertex_sees_one(c.vertices);
  for (Vertex x = 0; x < n && d; ++x) {
    for (Vertex y = x + 1; y < n && d; ++y) {
      if (q(x, y) == 0) d = some_vertex_sees_one(std::array{x, y});
    }
  }
  r.d = d;
  return r;
}

SurfaceReport surface_by_basic_radical_unchecked(const Quiver& q) {
  SurfaceReport report;
  const auto cycles = induced_cycles(q);
  for (auto& s : basic_subquivers(q)) {
    BasicSubquiverEvidence ev;
    std::vector<VertexSet> supports;
    for (std::size_t a = 0; a < s.vertices.size(); ++a) {
      for (std::size_t b = a + 1; b < s.vertices.size(); ++b) supports.push_back({s.vertices[a], s.vertices[b]});
    }
    for (const auto& c : cycles) {
      if (std::includes(s.vertices.begin(), s.vertices.end(), c.vertices.begin(), c.vertices.end())) {
        supports.push_back(c.vertices);
      }
    }
    std::sort(supports.begin(), supports.end());
    supports.erase(std::unique(supports.begin(), supports.end()), supports.end());

    // u and -u are interchangeable, so the first support vertex gets +1.
    for (const auto& supp : supports) {
      const std::size_t free = supp.size() - 1;
      for (std::size_t mask = 0; mask < (std::size_t{1} << free) && !ev.radical; ++mask) {
        IntVector u(q.size());
        u[supp[0]] = 1;
        for (std::size_t i = 1; i < supp.size(); ++i) u[supp[i]] = ((mask >> (i - 1)) & 1U) ? -1 : 1;
        if (multiply(q, u).is_zero()) ev.radical = std::move(u);
      }
      if (ev.radical) break;
    }
    if (s.kind == PatternKind::BasicOrientedCycle && s.vertices.size() >= 5) {
      ev.all_ones_radical = radical_support_check_z(q, s.vertices);
    }
    ev.passed = ev.radical.has_value() && ev.all_ones_radical.value_or(true);
    report.passes = report.passes && ev.passed;
    ev.basic = std::move(s);
    report.evidence.push_back(std::move(ev));
  }
  return report;
}

SurfaceReport surface_by_basic_radical(const Quiver& q, const EnumerationCaps& caps) {
  if (q.size() < 3) throw Error(ErrorCode::InvalidArgument, "surface check needs at least three vertices");
  if (!is_connected(q)) throw Error(ErrorCode::InvalidArgument, "surface check needs a connected quiver");
  if (!is_finite(is_finite_mutation_type(q, caps))) {
    throw Error(ErrorCode::NotFiniteType, "quiver is not of finite mutation type");
  }
  return surface_by_basic_radical_unchecked(q);
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Infinite: return "Infinite";
    case Verdict::Surface: return "Surface";
    case Verdict::ExceptionalE: return "ExceptionalE";
    case Verdict::ExceptionalX: return "ExceptionalX";
    case Verdict::TooSmall: return "TooSmall";
  }
  return "?";
}

std::string Classification::label() const {
  std::string out(to_string(verdict));
  if (!name.empty()) out += "(" + name + ")";
  return out;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::Internal, "cross-check failed: " + what);
}

void classify_exceptional(const Quiver& q, const ReferenceCatalog& catalog, const std::string& name,
                          Classification& c) {
  const auto& entry = catalog.entry(name);
  c.verdict = name.front() == 'E' ? Verdict::ExceptionalE : Verdict::ExceptionalX;
  c.name = name;
  c.class_size = entry.mutation_class.size();
  c.evidence.push_back("mutation class is the reference class of " + name + " (" +
                       std::to_string(entry.mutation_class.size()) + " members)");
  if (c.verdict != Verdict::ExceptionalE) return;
  // Every member of an E-type class has an E6-class subquiver; sample the
  // input and three fixed members.
  const auto& e6 = catalog.entry("E6");
  const auto& reps = entry.mutation_class.representatives;
  std::vector<const Quiver*> sample{&q, &reps.front(), &reps[reps.size() / 2], &reps.back()};
  for (const Quiver* m : sample) {
    require(contains_class_subquiver(*m, e6).has_value(),
            "member of the " + name + " class without an E6-class subquiver");
  }
  const auto found = contains_class_subquiver(q, e6);
  c.evidence.push_back("E6-class subquiver on vertices " + vertex_list(*found));
}

}  // namespace

Classification classify_quiver(const Quiver& q, const ReferenceCatalog& catalog, const EnumerationCaps& caps) {
  if (q.size() == 0 || !is_connected(q)) throw Error(ErrorCode::InvalidArgument, "quiver must be connected");
  Classification c;
  if (q.size() <= 2) {
    c.verdict = Verdict::TooSmall;
    c.class_size = 1;
    c.evidence.push_back("at most two vertices: mutation only reverses arrows");
    return c;
  }
  if (auto name = catalog.exceptional_class_of(class_key(q, caps))) {
    classify_exceptional(q, catalog, *name, c);
    return c;
  }

  auto verdict = is_finite_mutation_type(q, caps);
  if (auto* inf = std::get_if<InfiniteVerdict>(&verdict)) {
    c.verdict = Verdict::Infinite;
    if (inf->certificate) {
      c.evidence.push_back(std::string("certificate ") + std::string(to_string(inf->certificate->clause)) + " on " +
                           vertex_list(inf->certificate->witness.front()) + ": " + inf->certificate->detail);
    }
    if (inf->witness) {
      c.evidence.push_back("mutation reaches an edge of weight " + Int(max_weight(*inf->witness)).str());
    }
    c.certificate = std::move(inf->certificate);
    c.witness = std::move(inf->witness);
    return c;
  }

  const auto& cls = std::get<FiniteVerdict>(verdict).mutation_class;
  for (const auto& f : cls.members) {
    if (auto name = catalog.exceptional_class_of(f)) {
      classify_exceptional(q, catalog, *name, c);
      return c;
    }
  }
  c.verdict = Verdict::Surface;
  c.class_size = cls.size();
  c.evidence.push_back("finite mutation class with " + std::to_string(cls.size()) +
                       " members, disjoint from every exceptional reference class");
  require(!contains_class_subquiver(q, catalog.entry("E6")), "surface-type quiver with an E6-class subquiver");
  require(!contains_class_subquiver(q, catalog.entry("X6")), "surface-type quiver with an X6-class subquiver");
  c.evidence.push_back("no E6-class or X6-class subquiver");
  const auto report = surface_by_basic_radical_unchecked(q);
  require(report.passes, "surface-type quiver failing the basic radical test");
  c.evidence.push_back("all " + std::to_string(report.evidence.size()) + " basic subquivers carry radical vectors");
  return c;
}

bool e6_x6_exclusion(const Quiver& q, const ReferenceCatalog& catalog) {
  return !(contains_class_subquiver(q, catalog.entry("E6")) && contains_class_subquiver(q, catalog.entry("X6")));
}

}  // namespace qmut
