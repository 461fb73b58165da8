#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "doctest.h"
#include "wct/canon.hpp"
#include "wct/error.hpp"
#include "wct/independence.hpp"
#include "wct/json.hpp"
#include "wct/search.hpp"
#include "wct/token.hpp"

using namespace wct;

namespace {

std::filesystem::path catalogue(int n) {
  return std::filesystem::path(WCT_DATA_DIR) / "catalogue" / ("expected-n" + std::to_string(n) + ".g6");
}

SearchOptions uncached() {
  SearchOptions o;
  o.cache_dir = std::filesystem::path();
  return o;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() / ("wct-test-" + std::to_string(::getpid()));
    std::filesystem::remove_all(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("survivor counts up to order 8") {
  const int expected[] = {0, 0, 1, 1, 3, 1, 5, 1, 13};
  for (int n = 2; n <= 8; ++n) {
    const auto r = search_order(n, uncached());
    CHECK(r.survivors.size() == static_cast<std::size_t>(expected[n]));
    CHECK(r.total_enumerated == enumerate_connected_graphs(n).size());
    std::uint64_t sum = r.exact_rejections + r.survivors.size();
    for (const auto& [k, v] : r.filter_kill_counts) sum += v;
    CHECK(sum == r.total_enumerated);
  }
}

TEST_CASE("survivors match the transcribed catalogue up to order 8") {
  for (int n = 2; n <= 8; ++n) {
    const auto d = verify_catalogue(search_order(n, uncached()).survivors, read_graph6_file(catalogue(n)));
    CHECK_MESSAGE(d.empty(), "order ", n);
  }
}

TEST_CASE("a corrupted catalogue is reported") {
  auto expected = read_graph6_file(catalogue(6));
  const std::string dropped = expected.back();
  expected.pop_back();
  expected.push_back(to_graph6(cycle_graph(6)));
  const auto d = verify_catalogue(search_order(6, uncached()).survivors, expected);
  REQUIRE(d.missing.size() == 1);
  CHECK(d.missing[0] == to_graph6(cycle_graph(6)));
  REQUIRE(d.unexpected.size() == 1);
  CHECK(d.unexpected[0] == canonical_form(from_graph6(dropped)));
  CHECK_THROWS_AS(verify_catalogue({}, {"not graph6!"}), Error);
}

TEST_CASE("filters do not change the survivors") {
  for (int n = 2; n <= 7; ++n) {
    auto off = uncached();
    off.filters = false;
    const auto a = search_order(n, uncached());
    const auto b = search_order(n, off);
    CHECK(a.survivors == b.survivors);
    for (const auto& [k, v] : b.filter_kill_counts) CHECK(v == 0);
  }
}

TEST_CASE("parts filter run keeps the survivors") {
  for (int n = 3; n <= 8; ++n) {
    auto o = uncached();
    o.parts_filter = true;
    CHECK(search_order(n, o).survivors == search_order(n, uncached()).survivors);
  }
}

TEST_CASE("survivors are stable across worker counts") {
  auto many = uncached();
  many.jobs = 3;
  for (int n : {6, 8}) CHECK(search_order(n, many).survivors == search_order(n, uncached()).survivors);
}

TEST_CASE("survivors pass the full check and the necessary conditions") {
  for (int n = 3; n <= 8; ++n)
    for (const auto& s : search_order(n, uncached()).survivors) {
      const Graph g = from_graph6(s);
      const auto r = is_well_covered(token_graph(g, 2).host(), false);
      CHECK(r.verdict);
      CHECK(r.enumeration_complete);
      CHECK(girth(g).value_or(99) <= 4);
      CHECK(canonical_form(g) == s);
    }
}

TEST_CASE("disconnected graphs can be included") {
  auto o = uncached();
  o.include_disconnected = true;
  const auto r = search_order(4, o);
  CHECK(r.total_enumerated == enumerate_graphs(4, false).size());
  CHECK(r.survivors.size() > 3);
  const auto d = verify_catalogue(r.survivors, read_graph6_file(catalogue(4)));
  CHECK(d.missing.empty());
  CHECK_FALSE(d.unexpected.empty());
}

TEST_CASE("search range") {
  CHECK_THROWS_AS(search_order(1, uncached()), Error);
  CHECK_THROWS_AS(search_order(10, uncached()), Error);
}

TEST_CASE("result cache") {
  TempDir dir;
  SearchOptions o;
  o.cache_dir = dir.path;
  const auto first = search_order(6, o);
  CHECK_FALSE(first.from_cache);
  CHECK(std::filesystem::exists(dir.path / cache_key(6, o)));
  const auto second = search_order(6, o);
  CHECK(second.from_cache);
  CHECK(second.survivors == first.survivors);
  CHECK(second.filter_kill_counts == first.filter_kill_counts);

  auto other = o;
  other.filters = false;
  CHECK(cache_key(6, other) != cache_key(6, o));
  CHECK_FALSE(search_order(6, other).from_cache);

  std::ofstream(dir.path / cache_key(5, o)) << "{ broken";
  CHECK_FALSE(search_order(5, o).from_cache);
  CHECK(search_order(5, o).from_cache);
}

TEST_CASE("search result JSON round trip") {
  const auto r = search_order(6, uncached());
  const SearchResult back = json(r).get<SearchResult>();
  CHECK(back.survivors == r.survivors);
  CHECK(back.total_enumerated == r.total_enumerated);
  CHECK(back.filter_kill_counts == r.filter_kill_counts);
  CHECK(json(r)["survivor_count"] == 5);
}

TEST_CASE("graph6 files") {
  TempDir dir;
  std::filesystem::create_directories(dir.path);
  const auto p = dir.path / "list.g6";
  write_graph6_file(p, {"Cn", "Cj", "C~"});
  CHECK(read_graph6_file(p) == std::vector<std::string>{"Cj", "Cn", "C~"});
  CHECK_THROWS_AS(read_graph6_file(dir.path / "absent.g6"), Error);
}

TEST_CASE("family membership of small survivors") {
  for (int n = 2; n <= 8; ++n) {
    const auto a = family_membership_audit(search_order(n, uncached()).survivors);
    CHECK(a.unmatched.empty());
  }
  const auto a = family_membership_audit({to_graph6(complete_graph(5)), to_graph6(cycle_graph(5))});
  CHECK(a.entries[0].theorem == "complete");
  REQUIRE(a.unmatched.size() == 1);
  CHECK(a.unmatched[0] == to_graph6(cycle_graph(5)));
}
