#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "oracles.hpp"
#include "pcat/category.hpp"
#include "pcat/errors.hpp"

using namespace pcat;
using pcat_test::all_partitions;
using pcat_test::all_partitions_upto;

namespace {

Partition named(const char* m) { return named_partition(std::string_view(m)); }
Partition word(const char* w) { return from_word(parse_word(w)); }

std::vector<Partition> gens(std::initializer_list<const char*> names) {
  std::vector<Partition> out;
  for (auto n : names) out.push_back(named(n));
  return out;
}

Partition k_by_blocks(unsigned l) {
  // {1,1',l+2,(l+2)'} and {j,j'} for 2 <= j <= l+1.
  std::vector<std::int64_t> row(l + 2);
  for (unsigned j = 0; j < l + 2; ++j) row[j] = (j == 0 || j == l + 1) ? 0 : j;
  std::vector<std::int64_t> labels = row;
  labels.insert(labels.end(), row.begin(), row.end());
  return make_partition(l + 2, l + 2, labels);
}

}  // namespace

TEST_CASE("named partitions") {
  CHECK(to_text(named("singleton")) == "0;1;1");
  CHECK(to_text(named("dsingleton")) == "0;2;1,2");
  CHECK(to_text(named("pair")) == "0;2;1,1");
  CHECK(to_text(named("id")) == "1;1;1,1");
  CHECK(to_text(named("fourblock")) == "0;4;1,1,1,1");
  CHECK(to_text(named("cross")) == "2;2;1,2,2,1");
  CHECK(to_text(named("halflib")) == "3;3;1,2,3,3,2,1");
  CHECK(named("h:s=2") == word("abab"));
  CHECK(named("h:s=3") == word("ababab"));
  CHECK(named("H:S=1") == word("ab"));
  CHECK(named("pair_positioner") == named("primary"));
  CHECK(to_text(named("primary")) == "3;3;1,1,2,2,1,1");
  CHECK_THROWS_AS(named("h:s=0"), InputError);
  CHECK_THROWS_AS(named("k:l=0"), InputError);
  CHECK_THROWS_AS(named("h:s=x"), InputError);
  CHECK_THROWS_AS(named("nonsense"), InputError);
}

TEST_CASE("k_l from its blocks and from the recursion") {
  for (unsigned l = 1; l <= 5; ++l) {
    CAPTURE(l);
    CHECK(k_partition_direct(l) == k_by_blocks(l));
    CHECK(k_partition_recursive(l) == k_by_blocks(l));
    CHECK(named_partition({NamedKind::k, l}) == k_by_blocks(l));
  }
}

TEST_CASE("nested pairs and padding") {
  CHECK(nested_pairs(0) == Partition{});
  CHECK(nested_pairs(1) == involute(named("pair")));
  CHECK(nested_pairs(3) == make_partition(6, 0, {1, 2, 3, 3, 2, 1}));
  const auto padded = pad_with_identities(named("pair"), 1, 2);
  CHECK(padded == make_partition(3, 5, {1, 2, 3, 1, 4, 4, 2, 3}));
}

TEST_CASE("connect_blocks") {
  CHECK(connect_blocks(tensor(named("pair"), named("pair")), 0, 1) == named("fourblock"));
  const auto c = connect_blocks(named("cross"), 0, 1);
  CHECK(c.block_count() == 1);
  CHECK(c.upper_count() == 2);
  CHECK_THROWS_AS(connect_blocks(named("fourblock"), 0, 1), InputError);
  CHECK_THROWS_AS(connect_blocks(named("cross"), 0, 0), InputError);
}

TEST_CASE("parity_reduce") {
  CHECK(parity_reduce(word("abbacacaca")) == word("aacacaca"));
  CHECK(parity_reduce(word("aaaa")) == Partition{});
  CHECK(parity_reduce(word("abab")) == word("abab"));
  CHECK(parity_reduce(word("aaab")) == word("ab"));
  CHECK_THROWS_AS(parity_reduce(named("id")), InputError);
}

TEST_CASE("single_leg_version") {
  CHECK(single_leg_version(word("abbacacaca")) == word("cacaca"));
  CHECK(format_word(to_word(single_leg_version(word("abbacacaca")))) == "ababab");
  CHECK(single_leg_version(named("fourblock")) == Partition{});
  CHECK(single_leg_version(named("h:s=3")) == named("h:s=3"));
  CHECK(single_leg_version(named("primary")) == Partition{});
  CHECK(single_leg_version(named("halflib")) == word("abcabc"));
}

TEST_CASE("single_leg_version is free reduction of the circular reading") {
  for (const auto& p : all_partitions_upto(7)) {
    const auto sl = single_leg_version(p);
    CHECK(is_single_leg(sl));
    const auto reduced = pcat_test::reduced_circular_word(p);
    std::vector<std::int64_t> labels(reduced.begin(), reduced.end());
    CHECK(sl == make_partition(0, labels.size(), labels));
  }
}

TEST_CASE("is_single_leg") {
  CHECK(is_single_leg(named("h:s=2")));
  CHECK_FALSE(is_single_leg(named("pair")));
  CHECK(is_single_leg(Partition{}));
  CHECK(is_single_leg(word("abca")));
  CHECK_THROWS_AS(is_single_leg(named("cross")), InputError);
}

TEST_CASE("closure of the crossing, singleton and four block is everything") {
  const auto t = closure(gens({"cross", "singleton", "fourblock"}), 6, 4);
  CHECK(t.saturated());
  CHECK(t.members() == [] {
    auto all = all_partitions_upto(6);
    std::sort(all.begin(), all.end());
    return all;
  }());
}

TEST_CASE("closure of the singleton and four block is the noncrossing partitions") {
  const auto t = closure(gens({"singleton", "fourblock"}), 6, 4);
  CHECK(t.saturated());
  std::vector<Partition> nc;
  for (const auto& p : all_partitions_upto(6))
    if (pcat_test::is_noncrossing(p)) nc.push_back(p);
  std::sort(nc.begin(), nc.end());
  CHECK(t.members() == nc);
}

TEST_CASE("closure of nothing") {
  const auto t = closure({}, 4, 0);
  CHECK(t.saturated());
  CHECK(t.contains(named("pair")));
  CHECK(t.contains(named("id")));
  CHECK(t.contains(involute(named("pair"))));
  CHECK(t.contains(tensor(named("pair"), named("pair"))));
  CHECK(t.contains(Partition{}));
  CHECK_FALSE(t.contains(named("cross")));
  CHECK_FALSE(t.contains(named("singleton")));
  // Noncrossing pairings only.
  for (const auto& p : t.members()) {
    CHECK(pcat_test::is_noncrossing(p));
    for (auto s : p.block_sizes()) CHECK(s == 2);
  }
  CHECK(t.line_member_count() == 4);
}

TEST_CASE("member") {
  const auto pp = closure(gens({"primary"}), 10, 4);
  CHECK(pp.saturated());
  CHECK(member(pp, named("k:l=2")) == Membership::yes);
  CHECK(member(pp, named("k:l=3")) == Membership::yes);
  CHECK(member(pp, named("id")) == Membership::yes);

  const auto nc = closure(gens({"singleton", "fourblock"}), 6, 4);
  CHECK(member(nc, named("cross")) == Membership::unknown);
  CHECK(member(nc, named("id")) == Membership::yes);
  CHECK_THROWS_AS(member(nc, named("k:l=2")), InputError);
}

TEST_CASE("sl_subset") {
  const auto t = closure(gens({"cross", "fourblock", "primary"}), 6, 4);
  const auto sl = sl_subset(t);
  auto has = [&](const Partition& p) { return std::find(sl.begin(), sl.end(), p) != sl.end(); };
  CHECK(has(Partition{}));
  CHECK(has(word("abab")));
  CHECK(has(word("abcabc")));
  CHECK_FALSE(has(word("ab")));
  CHECK_FALSE(has(word("ababab")));  // odd letter counts
  for (const auto& p : sl) CHECK(is_single_leg(p));

  const auto trivial = closure(std::vector<Partition>{}, 6, 4);
  CHECK(sl_subset(trivial) == std::vector<Partition>{Partition{}});
}

TEST_CASE("closure is closed under the category operations") {
  for (const auto& g : {gens({"primary"}), gens({"singleton", "fourblock"}),
                        gens({"h:s=2", "fourblock", "primary"})}) {
    const auto t = closure(g, 5, 4);
    REQUIRE(t.saturated());
    const auto members = t.members();
    for (const auto& p : members) {
      CHECK(t.contains(involute(p)));
      for (auto side : {Side::left, Side::right}) {
        if (p.upper_count()) CHECK(t.contains(rotate(p, side, Direction::down)));
        if (p.lower_count()) CHECK(t.contains(rotate(p, side, Direction::up)));
      }
      for (const auto& q : members) {
        if (p.size() + q.size() <= 5) CHECK(t.contains(tensor(p, q)));
        if (p.lower_count() == q.upper_count()) {
          const auto r = compose(p, q).partition;
          if (r.size() <= 5) CHECK(t.contains(r));
        }
      }
    }
  }
}

TEST_CASE("closure is idempotent on saturated truncations") {
  for (const auto& g : {gens({"primary"}), gens({"singleton", "fourblock"}),
                        gens({"halflib", "primary"})}) {
    const auto t = closure(g, 6, 4);
    REQUIRE(t.saturated());
    const auto again = closure(t.line_members(), 6, 4);
    CHECK(again.same_members(t));
  }
}

TEST_CASE("closure does not depend on generator order or presentation") {
  const auto a = closure(gens({"fourblock", "singleton", "halflib"}), 6, 4);
  const auto b = closure(gens({"halflib", "singleton", "fourblock"}), 6, 4);
  const std::vector<Partition> lines{one_line(named("halflib")), word("aaaa"), word("a")};
  const auto c = closure(lines, 6, 4);
  CHECK(a.same_members(b));
  CHECK(a.same_members(c));
}

TEST_CASE("closure is monotone in the generators") {
  const auto small = closure(gens({"primary"}), 8, 4);
  const auto large = closure(gens({"primary", "cross", "fourblock"}), 8, 4);
  for (const auto& p : small.line_members()) CHECK(large.contains(p));
  CHECK(small.line_member_count() < large.line_member_count());

  const auto nc = closure(gens({"singleton", "fourblock"}), 6, 4);
  const auto all = closure(gens({"singleton", "fourblock", "cross"}), 6, 4);
  for (const auto& p : nc.members()) CHECK(all.contains(p));
}

TEST_CASE("blocks of members can be connected in group-theoretical truncations") {
  for (const auto& g : {gens({"primary"}), gens({"h:s=2", "fourblock", "primary"}),
                        gens({"halflib", "primary"})}) {
    const auto t = closure(g, 8, 4);
    REQUIRE(t.saturated());
    for (const auto& p : t.line_members())
      for (BlockId a = 0; a < p.block_count(); ++a)
        for (BlockId b = a + 1; b < p.block_count(); ++b)
          CHECK(t.contains(connect_blocks(p, a, b)));
  }
}

TEST_CASE("closure budget and limits") {
  const auto t = closure(gens({"cross", "singleton", "fourblock"}), 6, 4, 10);
  CHECK_FALSE(t.saturated());
  CHECK(t.steps() >= 10);
  CHECK_THROWS_AS(closure({}, 1, 4), InputError);
  CHECK_THROWS_AS(closure({}, 14, 4), ResourceError);
  CHECK_THROWS_AS(closure(gens({"k:l=3"}), 4, 2), InputError);
}

TEST_CASE("cache files round trip") {
  const auto path =
      (std::filesystem::temp_directory_path() / "pcat_test_cache.txt").string();
  const auto t = closure(gens({"halflib", "fourblock", "primary"}), 6, 4);
  t.save(path);

  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header ==
        "generators=3;3;1,2,3,3,2,1|0;4;1,1,1,1|3;3;1,1,2,2,1,1;N=6;slack=4;saturated=true");
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line);) {
    CHECK(parse_text(line) == canonicalize(parse_text(line)));
    ++lines;
  }
  CHECK(lines == t.member_count());

  const auto loaded = CategoryTruncation::load(path);
  CHECK(loaded.same_members(t));
  CHECK(loaded.saturated());
  CHECK(loaded.generators() == t.generators());
  CHECK(loaded.slack() == 4);
  CHECK(loaded.header_line() == header);
  std::remove(path.c_str());

  CHECK_THROWS_AS(CategoryTruncation::load(path), InputError);
  {
    std::ofstream bad(path);
    bad << "generators=;N=x;slack=4;saturated=true\n";
  }
  CHECK_THROWS_AS(CategoryTruncation::load(path), InputError);
  std::remove(path.c_str());
}
