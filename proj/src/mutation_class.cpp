#include "qmut/mutation_class.hpp"

#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <thread>
#include <unordered_set>

#include "json.hpp"
#include "qmut/io.hpp"

namespace qmut {

namespace {

struct Keyed {
  Quiver quiver;
  CanonicalForm form;
};

Keyed keyed(const Quiver& q, const EnumerationCaps& caps) {
  Quiver plain = Quiver::from_matrix(q.size(), q.entries());
  if (caps.labeled) {
    CanonicalForm f = labeled_form(plain);
    return {std::move(plain), std::move(f)};
  }
  auto labeling = canonical_labeling(plain, caps.canonical);
  return {permute(plain, labeling.order), std::move(labeling.form)};
}

std::vector<Keyed> children(const Quiver& q, const EnumerationCaps& caps) {
  std::vector<Keyed> out;
  out.reserve(q.size());
  for (Vertex k = 0; k < q.size(); ++k) {
    Quiver child = mutate(q, k);
    // Heavy children are never canonicalized; the merge step stops on them.
    if (exceeds_weight_bound(child, caps.weight_abort)) {
      out.push_back({std::move(child), {}});
    } else {
      out.push_back(keyed(child, caps));
    }
  }
  return out;
}

std::vector<std::vector<Keyed>> expand(const std::vector<Quiver>& frontier, const EnumerationCaps& caps) {
  std::vector<std::vector<Keyed>> out(frontier.size());
  const std::size_t workers = std::min<std::size_t>(std::max(1U, caps.threads), frontier.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < frontier.size(); ++i) out[i] = children(frontier[i], caps);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < frontier.size(); i += workers) out[i] = children(frontier[i], caps);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

MutationClass finish(std::vector<Keyed> found, MutationClass cls) {
  std::vector<std::size_t> idx(found.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return found[a].form < found[b].form; });
  for (auto i : idx) {
    cls.members.push_back(std::move(found[i].form));
    cls.representatives.push_back(std::move(found[i].quiver));
  }
  return cls;
}

}  // namespace

std::string_view to_string(ClassStatus status) {
  switch (status) {
    case ClassStatus::Complete: return "Complete";
    case ClassStatus::AbortedWeight: return "AbortedWeight";
    case ClassStatus::AbortedCap: return "AbortedCap";
  }
  return "?";
}

ClassStatus class_status_from_string(std::string_view s) {
  for (auto st : {ClassStatus::Complete, ClassStatus::AbortedWeight, ClassStatus::AbortedCap}) {
    if (to_string(st) == s) return st;
  }
  throw Error(ErrorCode::Parse, "unknown class status '" + std::string(s) + "'");
}

std::optional<std::size_t> MutationClass::index_of(const CanonicalForm& f) const {
  auto it = std::lower_bound(members.begin(), members.end(), f);
  if (it == members.end() || *it != f) return std::nullopt;
  return static_cast<std::size_t>(it - members.begin());
}

bool exceeds_weight_bound(const Quiver& q, const Int& bound) {
  const std::size_t n = q.size();
  if (n < 3) return false;
  bool heavy = false;
  for (const auto& e : q.entries()) {
    if (abs(e) >= bound) {
      heavy = true;
      break;
    }
  }
  if (!heavy) return false;
  for (const auto& comp : components(q)) {
    if (comp.size() < 3) continue;
    for (auto i : comp) {
      for (auto j : comp) {
        if (abs(q(i, j)) >= bound) return true;
      }
    }
  }
  return false;
}

CanonicalForm class_key(const Quiver& q, const EnumerationCaps& caps) { return keyed(q, caps).form; }

MutationClass enumerate_class(const Quiver& q, const EnumerationCaps& caps) {
  if (caps.max_size == 0) throw Error(ErrorCode::InvalidArgument, "max_size must be positive");
  if (caps.weight_abort <= 0) throw Error(ErrorCode::InvalidArgument, "weight_abort must be positive");

  MutationClass cls;
  cls.disconnected = q.size() > 0 && !is_connected(q);
  cls.labeled = caps.labeled;
  if (exceeds_weight_bound(q, caps.weight_abort)) {
    cls.status = ClassStatus::AbortedWeight;
    cls.witness = Quiver::from_matrix(q.size(), q.entries());
    return finish({keyed(q, caps)}, std::move(cls));
  }

  std::vector<Keyed> found;
  std::unordered_set<CanonicalForm> seen;
  Keyed start = keyed(q, caps);
  seen.insert(start.form);
  std::vector<Quiver> frontier{start.quiver};
  found.push_back(std::move(start));

  while (!frontier.empty()) {
    auto expanded = expand(frontier, caps);
    std::vector<Quiver> next;
    for (auto& kids : expanded) {
      for (auto& kid : kids) {
        if (kid.form.bytes.empty()) {
          cls.status = ClassStatus::AbortedWeight;
          cls.witness = std::move(kid.quiver);
          return finish(std::move(found), std::move(cls));
        }
        if (seen.contains(kid.form)) continue;
        if (found.size() >= caps.max_size) {
          cls.status = ClassStatus::AbortedCap;
          return finish(std::move(found), std::move(cls));
        }
        seen.insert(kid.form);
        next.push_back(kid.quiver);
        found.push_back(std::move(kid));
      }
    }
    frontier = std::move(next);
  }
  return finish(std::move(found), std::move(cls));
}

FinitenessVerdict is_finite_mutation_type(const Quiver& q, const EnumerationCaps& caps) {
  if (q.size() >= 3) {
    if (auto cert = infinite_certificate(q)) return InfiniteVerdict{std::move(cert), std::nullopt};
  }
  MutationClass cls = enumerate_class(q, caps);
  switch (cls.status) {
    case ClassStatus::Complete: return FiniteVerdict{std::move(cls)};
    case ClassStatus::AbortedWeight: return InfiniteVerdict{std::nullopt, std::move(cls.witness)};
    case ClassStatus::AbortedCap: break;
  }
  throw Error(ErrorCode::CapsExceeded, "finiteness unknown: mutation class exceeds " +
                                           std::to_string(caps.max_size) + " members without a weight witness");
}

void write_class(std::ostream& out, const MutationClass& cls) {
  nlohmann::json header{{"format", kClassDumpFormat},
                        {"size", cls.size()},
                        {"status", std::string(to_string(cls.status))},
                        {"labeled", cls.labeled}};
  if (cls.witness) header["witness"] = io::to_json(*cls.witness);
  out << header.dump() << '\n';
  for (const auto& rep : cls.representatives) out << io::to_json(rep).dump() << '\n';
}

void write_class(const std::filesystem::path& path, const MutationClass& cls) {
  // Readers never see a partial file: write aside, then rename into place.
  auto tmp = path;
  tmp += ".tmp" + std::to_string(std::random_device{}());
  {
    std::ofstream out(tmp);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp.string());
    write_class(out, cls);
    if (!out) throw Error(ErrorCode::Io, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
}

MutationClass read_class(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::Parse, "class dump: missing header");
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("class dump header: ") + e.what());
  }
  if (!header.is_object() || header.value("format", -1) != kClassDumpFormat || !header.contains("size") ||
      !header.contains("status")) {
    throw Error(ErrorCode::Parse, "class dump: unsupported header " + line);
  }
  EnumerationCaps caps;
  caps.labeled = header.value("labeled", false);
  caps.canonical.refinement_mode = true;
  MutationClass cls;
  cls.labeled = caps.labeled;
  cls.status = class_status_from_string(header["status"].get<std::string>());
  if (header.contains("witness")) cls.witness = io::from_json(header["witness"]);

  std::vector<Keyed> found;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      found.push_back(keyed(io::parse_json(line), caps));
    } catch (const Error& e) {
      throw Error(ErrorCode::Parse, "class dump line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  const auto expected = header["size"].get<std::size_t>();
  if (found.size() != expected) {
    throw Error(ErrorCode::Parse, "class dump: header says " + std::to_string(expected) + " members, found " +
                                      std::to_string(found.size()));
  }
  cls = finish(std::move(found), std::move(cls));
  cls.disconnected = !cls.representatives.empty() && cls.representatives.front().size() > 0 &&
                     !is_connected(cls.representatives.front());
  return cls;
}

MutationClass read_class(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path.string());
  return read_class(in);
}

}  // namespace qmut
