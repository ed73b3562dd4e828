#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "oracles.hpp"
#include "qmut/io.hpp"

using namespace qmut;

TEST_CASE("text format parses comments and 1-based arrows") {
  const auto q = io::parse_text("# A3\nn 3\n1 2 1   # first\n\n3 2 2\n");
  CHECK(q == Quiver::from_arrows(3, {{0, 1, 1}, {2, 1, 2}}));
  CHECK(io::to_text(q) == "n 3\n1 2 1\n3 2 2\n");
}

TEST_CASE("text diagnostics carry line numbers") {
  auto message = [](const char* text) {
    try {
      io::parse_text(text);
    } catch (const Error& e) {
      return std::pair(e.code(), std::string(e.what()));
    }
    return std::pair(ErrorCode::Internal, std::string("no error"));
  };
  auto [c1, m1] = message("n 2\n1 2 x\n");
  CHECK(c1 == ErrorCode::Parse);
  CHECK(m1.find("line 2") != std::string::npos);
  auto [c2, m2] = message("n 3\n1 2 1\n2 1 1\n");
  CHECK(c2 == ErrorCode::ConflictingEdge);
  CHECK(m2.find("line 3") != std::string::npos);
  auto [c3, m3] = message("n 3\n\n2 2 1\n");
  CHECK(c3 == ErrorCode::LoopForbidden);
  CHECK(m3.find("line 3") != std::string::npos);
  CHECK(message("1 2 1\n").first == ErrorCode::Parse);
  CHECK(message("n 2\n1 3 1\n").first != ErrorCode::Internal);
  CHECK(message("n 2\n1 2 0\n").first != ErrorCode::Internal);
  CHECK(message("").first == ErrorCode::Parse);
}

TEST_CASE("JSON format with labels and big weights") {
  const Int big = Int(1) << 80;
  const auto q = Quiver::from_arrows(3, {{0, 1, big}, {2, 0, 1}}).with_labels({"x", "y", "z"});
  const auto j = io::to_json(q);
  CHECK(j["arrows"][0][2].is_string());
  CHECK(j["arrows"][1] == nlohmann::json::array({3, 1, 1}));
  CHECK(io::from_json(j) == q);
  CHECK(io::parse_any(j.dump()) == q);
}

TEST_CASE("JSON errors name the offending field") {
  auto where = [](const char* text) {
    try {
      io::parse_json(text);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(where(R"({"arrows": []})").starts_with("quiver.n"));
  CHECK(where(R"({"n": 2, "arrows": [[1, 2]]})").starts_with("quiver.arrows[0]"));
  CHECK(where(R"({"n": 2, "arrows": [[1, 2, 1], [1, 5, 1]]})").starts_with("quiver.arrows[1]"));
  CHECK(where(R"({"n": 2, "labels": ["a"]})").starts_with("quiver.labels"));
  CHECK(where("{oops").starts_with("invalid JSON"));
}

TEST_CASE("text and JSON round trips on random quivers") {
  oracle::RandomQuivers gen(5);
  for (int i = 0; i < 300; ++i) {
    const auto q = gen.next(1 + i % 9, 4);
    CHECK(io::parse_text(io::to_text(q)) == q);
    CHECK(io::parse_json(io::to_json(q).dump()) == q);
  }
}

TEST_CASE("reading files") {
  const auto path = std::filesystem::temp_directory_path() / "qmut_io_test.quiver";
  {
    std::ofstream out(path);
    out << "n 2\n1 2 1\n";
  }
  CHECK(io::read_file(path) == Quiver::from_arrows(2, {{0, 1, 1}}));
  std::filesystem::remove(path);
  try {
    io::read_file(path);
    FAIL("missing file read");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Io);
  }
}
