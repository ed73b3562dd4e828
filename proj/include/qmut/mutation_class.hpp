#pragma once

#include <algorithm>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "qmut/canonical.hpp"
#include "qmut/patterns.hpp"
#include "qmut/quiver.hpp"

namespace qmut {

enum class ClassStatus { Complete, AbortedWeight, AbortedCap };

std::string_view to_string(ClassStatus status);
ClassStatus class_status_from_string(std::string_view s);

struct EnumerationCaps {
  std::size_t max_size = 100000;
  Int weight_abort = 3;
  // Deduplicate labeled matrices instead of isomorphism classes.
  bool labeled = false;
  // Worker threads for expanding the BFS frontier; 0 or 1 runs inline.
  unsigned threads = 1;
  CanonicalOptions canonical;
};

struct MutationClass {
  // Sorted by form; representatives[i] is a quiver with form members[i]
  // (in canonical vertex order unless enumeration was labeled).
  std::vector<CanonicalForm> members;
  std::vector<Quiver> representatives;
  ClassStatus status = ClassStatus::Complete;
  // Present exactly when status is AbortedWeight.
  std::optional<Quiver> witness;
  bool disconnected = false;
  bool labeled = false;

  std::size_t size() const { return members.size(); }
  bool contains(const CanonicalForm& f) const {
    return std::binary_search(members.begin(), members.end(), f);
  }
  std::optional<std::size_t> index_of(const CanonicalForm& f) const;
};

// Breadth-first closure under single mutations. Stops with AbortedWeight as
// soon as a discovered quiver with at least three vertices has an entry of
// absolute value >= weight_abort inside a component of at least three
// vertices, and with AbortedCap when a new member would exceed max_size.
MutationClass enumerate_class(const Quiver& q, const EnumerationCaps& caps = {});

// The form used for deduplication under the given caps.
CanonicalForm class_key(const Quiver& q, const EnumerationCaps& caps = {});

// Whether q has an entry that rules out finite mutation type under the
// weight bound (see enumerate_class).
bool exceeds_weight_bound(const Quiver& q, const Int& bound);

struct FiniteVerdict {
  MutationClass mutation_class;
};

struct InfiniteVerdict {
  std::optional<InfiniteCertificate> certificate;
  // A quiver in the class of q with a heavy edge, when enumeration found it.
  std::optional<Quiver> witness;
};

using FinitenessVerdict = std::variant<FiniteVerdict, InfiniteVerdict>;

// Quivers on at most two vertices are always finite. Otherwise a structural
// certificate is tried first, then bounded enumeration. An enumeration that
// hits max_size throws CapsExceeded: the type is unknown under those caps.
FinitenessVerdict is_finite_mutation_type(const Quiver& q, const EnumerationCaps& caps = {});
inline bool is_finite(const FinitenessVerdict& v) { return std::holds_alternative<FiniteVerdict>(v); }

template <class T>
struct SweepResult {
  std::map<CanonicalForm, T> values;
  bool constant = true;
};

template <class F>
auto sweep(const MutationClass& cls, F&& f) {
  using T = std::decay_t<std::invoke_result_t<F&, const Quiver&>>;
  SweepResult<T> out;
  std::optional<T> first;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    T value = f(cls.representatives[i]);
    if (!first) {
      first = value;
    } else if (!(value == *first)) {
      out.constant = false;
    }
    out.values.emplace(cls.members[i], std::move(value));
  }
  return out;
}

// Requires a Complete class; throws NotFiniteType or CapsExceeded otherwise.
template <class F>
auto sweep(const Quiver& q, F&& f, const EnumerationCaps& caps = {}) {
  MutationClass cls = enumerate_class(q, caps);
  if (cls.status == ClassStatus::AbortedWeight) {
    throw Error(ErrorCode::NotFiniteType, "mutation class reaches an edge of weight >= " + caps.weight_abort.str());
  }
  if (cls.status == ClassStatus::AbortedCap) {
    throw Error(ErrorCode::CapsExceeded, "mutation class exceeds " + std::to_string(caps.max_size) + " members");
  }
  return sweep(cls, std::forward<F>(f));
}

// JSON lines: a header {"size", "status", "format"} then one representative
// per line in the JSON quiver format, in member order.
inline constexpr int kClassDumpFormat = 1;
void write_class(std::ostream& out, const MutationClass& cls);
void write_class(const std::filesystem::path& path, const MutationClass& cls);
// Recomputes member forms from the stored representatives.
MutationClass read_class(std::istream& in);
MutationClass read_class(const std::filesystem::path& path);

}  // namespace qmut
