#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qmut/mutation_class.hpp"
#include "qmut/patterns.hpp"
#include "qmut/quiver.hpp"

namespace qmut {

// Seed quivers. Tree edges point from the lower to the higher vertex index.
namespace seeds {

Quiver dynkin_a(std::size_t n);
// Leaves 0 and 1 hang off vertex 2, followed by the path 2, 3, ..., n-1.
Quiver dynkin_d(std::size_t n);
Quiver oriented_cycle(std::size_t n);

// Names: "E6", "E7", "E8", "E6^(1)", "E7^(1)", "E8^(1)", "E6^(1,1)",
// "E7^(1,1)", "E8^(1,1)", "X6", "X7".
const std::vector<std::string>& exceptional_names();
bool is_exceptional_name(const std::string& name);

// Also accepts "A<n>", "D<n>" and "C<n>" (oriented n-cycle).
std::optional<Quiver> by_name(const std::string& name);

// File-system safe form of a name: "E6^(1,1)" -> "E6-1-1".
std::string slug(const std::string& name);

}  // namespace seeds

struct CatalogEntry {
  std::string name;
  Quiver seed;
  MutationClass mutation_class;
  bool exceptional = false;
};

// Seeds with their enumerated mutation classes. Immutable once built.
class ReferenceCatalog {
 public:
  struct Options {
    std::optional<std::filesystem::path> cache_dir;
    // Dynkin seeds A3..A<max_a> and D4..D<max_d> are included as well.
    std::size_t max_a = 6;
    std::size_t max_d = 6;
    EnumerationCaps caps;
  };

  static ReferenceCatalog build(const Options& opts);
  static ReferenceCatalog build() { return build(Options{}); }

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const CatalogEntry& entry(const std::string& name) const;
  bool has(const std::string& name) const { return index_.contains(name); }
  // Name of the exceptional class containing the form, if any.
  std::optional<std::string> exceptional_class_of(const CanonicalForm& form) const;

 private:
  std::vector<CatalogEntry> entries_;
  std::map<std::string, std::size_t> index_;
  std::map<CanonicalForm, std::string> exceptional_forms_;
};

bool mutation_equivalent(const Quiver& q1, const Quiver& q2, const EnumerationCaps& caps = {});

inline constexpr std::size_t kDefaultSubsetBudget = 1'000'000;

// First vertex subset (lexicographic) of the target class's vertex count whose
// induced subquiver lies in the target's class.
std::optional<VertexSet> contains_class_subquiver(const Quiver& q, const CatalogEntry& target,
                                                  std::size_t subset_budget = kDefaultSubsetBudget);

struct E6Report {
  std::optional<bool> a;
  bool b = false;
  bool c = false;
  bool d = false;
};

// Requires a connected simply-laced quiver on six vertices without
// non-oriented induced cycles; throws HypothesisViolation otherwise.
E6Report e6_characterization(const Quiver& q, const ReferenceCatalog& catalog);

struct BasicSubquiverEvidence {
  SubquiverPattern basic;
  // Radical vector with entries in {-1, 0, 1} supported on two vertices or an
  // induced cycle inside the basic subquiver.
  std::optional<IntVector> radical;
  // Only for oriented cycles of length at least five.
  std::optional<bool> all_ones_radical;
  bool passed = false;
};

struct SurfaceReport {
  bool passes = true;
  std::vector<BasicSubquiverEvidence> evidence;
};

// Checks every basic subquiver for the required radical vectors. Verifies
// finite mutation type first (NotFiniteType otherwise).
SurfaceReport surface_by_basic_radical(const Quiver& q, const EnumerationCaps& caps = {});
// Same check without the finiteness verification, for quivers already known
// to be of finite mutation type.
SurfaceReport surface_by_basic_radical_unchecked(const Quiver& q);

enum class Verdict { Infinite, Surface, ExceptionalE, ExceptionalX, TooSmall };

std::string_view to_string(Verdict v);

struct Classification {
  Verdict verdict = Verdict::TooSmall;
  // Matched exceptional name, empty otherwise.
  std::string name;
  std::vector<std::string> evidence;
  std::optional<InfiniteCertificate> certificate;
  std::optional<Quiver> witness;
  std::optional<std::size_t> class_size;

  // "Surface", "Infinite", "TooSmall", "ExceptionalE(E6^(1,1))", ...
  std::string label() const;
};

// Throws InvalidArgument on disconnected input, CapsExceeded when the class
// cannot be enumerated, and Internal if a cross-check contradicts the verdict.
Classification classify_quiver(const Quiver& q, const ReferenceCatalog& catalog, const EnumerationCaps& caps = {});

// False only if q contains both an E6-class and an X6-class subquiver.
bool e6_x6_exclusion(const Quiver& q, const ReferenceCatalog& catalog);

}  // namespace qmut
