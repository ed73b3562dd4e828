#include "qmut/cli.hpp"

#include <charconv>
#include <csignal>
#include <fstream>
#include <iostream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "qmut/io.hpp"
#include "qmut/report.hpp"
#include "qmut/service.hpp"

namespace qmut {

namespace {

struct UsageError {
  std::string message;
};

struct Input {
  std::string file;
  std::string inline_text;

  void attach(CLI::App* cmd) {
    auto* f = cmd->add_option("file", file, "Quiver file (text or JSON); '-' reads stdin");
    auto* i = cmd->add_option("--quiver", inline_text, "Quiver given inline (text or JSON)");
    f->excludes(i);
  }

  Quiver read() const {
    if (!inline_text.empty()) return io::parse_any(inline_text);
    if (file.empty()) throw UsageError{"no input: pass a file or --quiver"};
    if (file == "-") {
      std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
      return io::parse_any(text);
    }
    return io::read_file(file);
  }
};

std::vector<Vertex> parse_sequence(const std::vector<std::string>& raw) {
  std::vector<Vertex> ks;
  for (const auto& item : raw) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) {
      std::size_t v = 0;
      auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
      if (part.empty() || ec != std::errc() || ptr != part.data() + part.size() || v == 0) {
        throw UsageError{"-k expects positive vertex numbers, got '" + part + "'"};
      }
      ks.push_back(v - 1);
    }
  }
  if (ks.empty()) throw UsageError{"-k is required"};
  return ks;
}

ReferenceCatalog load_catalog(const std::string& dir) {
  ReferenceCatalog::Options opts;
  if (!dir.empty()) opts.cache_dir = dir;
  return ReferenceCatalog::build(opts);
}

service::HttpServer* active_server = nullptr;

void on_signal(int) {
  if (active_server) active_server->stop();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quiver mutation classes, invariants and finite-type classification", "qmut"};
  app.require_subcommand(1);

  bool json_out = false;
  Input input;
  std::vector<std::string> raw_ks;
  std::size_t max_size = EnumerationCaps{}.max_size;
  std::size_t class_max_size = service::kDefaultClassMaxSize;
  unsigned threads = 1;
  std::string dump_dir, catalog_dir, host = "127.0.0.1";
  std::size_t offset = 0, limit = service::kDefaultPageLimit;
  int port = 8080;
  bool labeled = false;

  auto* mutate_cmd = app.add_subcommand("mutate", "Apply a mutation sequence (1-based, left to right)");
  input.attach(mutate_cmd);
  mutate_cmd->add_option("-k", raw_ks, "Vertices to mutate at; repeatable, comma-separated")
      ->required()
      ->allow_extra_args(false);
  mutate_cmd->add_flag("--json", json_out, "Print the JSON quiver format");

  auto* inv_cmd = app.add_subcommand("invariants", "Rank, coranks and radical dimensions");
  input.attach(inv_cmd);
  inv_cmd->add_flag("--json", json_out, "Print the full analysis as JSON");

  auto* pat_cmd = app.add_subcommand("patterns", "Double edges, induced cycles, basic subquivers, certificate");
  input.attach(pat_cmd);
  pat_cmd->add_flag("--json", json_out, "Print JSON");

  auto* class_cmd = app.add_subcommand("class", "Enumerate the mutation class up to isomorphism");
  input.attach(class_cmd);
  class_cmd->add_option("--max-size", class_max_size, "Abort after this many members")
      ->check(CLI::PositiveNumber);
  class_cmd->add_option("--threads", threads, "Worker threads for the search")->check(CLI::Range(1, 64));
  class_cmd->add_option("--dump", dump_dir, "Write the class as JSON lines into this directory");
  class_cmd->add_flag("--labeled", labeled, "Deduplicate labeled quivers instead");
  class_cmd->add_option("--offset", offset, "First member printed with --json");
  class_cmd->add_option("--limit", limit, "Members printed with --json");
  class_cmd->add_flag("--json", json_out, "Print JSON");

  auto* classify_cmd = app.add_subcommand("classify", "Surface, exceptional or infinite mutation type");
  input.attach(classify_cmd);
  classify_cmd->add_option("--max-size", max_size, "Enumeration cap")->check(CLI::PositiveNumber);
  classify_cmd->add_option("--threads", threads, "Worker threads for the search")->check(CLI::Range(1, 64));
  classify_cmd->add_option("--catalog", catalog_dir, "Reference class cache directory");
  classify_cmd->add_flag("--json", json_out, "Print JSON");

  auto* catalog_cmd = app.add_subcommand("catalog", "Reference classes");
  catalog_cmd->require_subcommand(1);
  auto* build_cmd = catalog_cmd->add_subcommand("build", "Enumerate and cache the reference classes");
  build_cmd->add_option("--dir", catalog_dir, "Cache directory")->required();

  auto* serve_cmd = app.add_subcommand("serve", "Start the HTTP JSON API");
  serve_cmd->add_option("--port", port, "Port (0 picks a free one)")->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--host", host, "Address to bind");
  serve_cmd->add_option("--catalog", catalog_dir, "Reference class cache directory");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*mutate_cmd) {
      const auto ks = parse_sequence(raw_ks);
      const Quiver q = input.read();
      for (auto k : ks) {
        if (k >= q.size()) {
          throw Error(ErrorCode::IndexOutOfRange,
                      "vertex " + std::to_string(k + 1) + " out of range 1.." + std::to_string(q.size()));
        }
      }
      const Quiver r = mutate_sequence(q, ks);
      out << (json_out ? io::to_json(r).dump() + "\n" : io::to_text(r));
    } else if (*inv_cmd) {
      const Quiver q = input.read();
      out << (json_out ? report::analyze(q).dump() + "\n" : report::invariants_text(q));
    } else if (*pat_cmd) {
      const Quiver q = input.read();
      if (json_out) {
        auto a = report::analyze(q);
        nlohmann::json p{{"double_edges", a["double_edges"]},
                          {"cycles", a["cycles"]},
                          {"basic_subquivers", a["basic_subquivers"]}};
        if (a.contains("infinite_certificate")) p["infinite_certificate"] = a["infinite_certificate"];
        out << p.dump() << '\n';
      } else {
        out << report::patterns_text(q);
      }
    } else if (*class_cmd) {
      const Quiver q = input.read();
      EnumerationCaps caps;
      caps.max_size = class_max_size;
      caps.threads = threads;
      caps.labeled = labeled;
      const auto cls = enumerate_class(q, caps);
      if (!dump_dir.empty()) {
        std::filesystem::create_directories(dump_dir);
        const auto stem = input.file.empty() || input.file == "-" ? std::string("class")
                                                                  : std::filesystem::path(input.file).stem().string();
        write_class(std::filesystem::path(dump_dir) / (stem + ".jsonl"), cls);
      }
      if (json_out) {
        out << report::class_json(cls, offset, limit).dump() << '\n';
      } else {
        out << "size: " << cls.size() << '\n' << "status: " << to_string(cls.status) << '\n';
        if (cls.disconnected) out << "note: quiver is disconnected\n";
        if (cls.witness) out << "witness:\n" << io::to_text(*cls.witness);
      }
    } else if (*classify_cmd) {
      const Quiver q = input.read();
      const auto catalog = load_catalog(catalog_dir);
      EnumerationCaps caps;
      caps.max_size = max_size;
      caps.threads = threads;
      const auto c = classify_quiver(q, catalog, caps);
      out << (json_out ? report::classification_json(c).dump() + "\n" : report::classification_text(c));
    } else if (*build_cmd) {
      const auto catalog = load_catalog(catalog_dir);
      for (const auto& e : catalog.entries()) {
        out << e.name << ": " << e.mutation_class.size() << " members\n";
      }
    } else if (*serve_cmd) {
      const auto catalog = load_catalog(catalog_dir);
      service::Api api(catalog);
      service::HttpServer server(api);
      const int bound = server.bind(host, port);
      if (bound < 0) throw Error(ErrorCode::Io, "cannot bind " + host + ":" + std::to_string(port));
      out << "listening on http://" << host << ":" << bound << std::endl;
      active_server = &server;
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      server.listen();
      active_server = nullptr;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.message << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error [io]: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace qmut
