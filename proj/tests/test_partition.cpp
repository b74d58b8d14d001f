#include "doctest.h"
#include "schubert/errors.hpp"
#include "schubert/partition.hpp"

using schubert::Partition;
using schubert::Rectangle;

TEST_CASE("construction strips trailing zeros and rejects bad input") {
  CHECK(Partition({2, 1, 0, 0}).parts() == std::vector<int>{2, 1});
  CHECK(Partition({0, 0}).empty());
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
  CHECK(Partition{3, 1}.size() == 4);
  CHECK(Partition{3, 1}[5] == 0);
}

TEST_CASE("parse accepts comma and compact forms") {
  CHECK(Partition::parse("2,1,1") == Partition{2, 1, 1});
  CHECK(Partition::parse("211") == Partition{2, 1, 1});
  CHECK(Partition::parse("12,") == Partition{12});
  CHECK(Partition::parse(" 4 , 4 ") == Partition{4, 4});
  CHECK(Partition::parse("0").empty());
  CHECK(Partition::parse("").empty());

  CHECK_THROWS_AS(Partition::parse("1,2"), schubert::ParseError);
  CHECK_THROWS_AS(Partition::parse("a"), schubert::ParseError);
  CHECK_THROWS_AS(Partition::parse("1,,2"), schubert::ParseError);
  try {
    Partition::parse("2,x");
    FAIL("no exception");
  } catch (const schubert::ParseError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("to_string round-trips") {
  for (const auto& p : schubert::partitions_in(Rectangle(3, 4))) {
    CHECK(Partition::parse(p.to_string()) == p);
  }
  CHECK(Partition().to_string() == "0");
  CHECK(Partition{4, 1, 1}.to_string() == "4,1,1");
}

TEST_CASE("fits, containment and complement") {
  const Rectangle r(3, 4);
  CHECK(schubert::fits(Partition{4, 4, 4}, r));
  CHECK_FALSE(schubert::fits(Partition{5}, r));
  CHECK_FALSE(schubert::fits(Partition{1, 1, 1, 1}, r));
  CHECK(Partition{3, 2}.contains(Partition{2, 2}));
  CHECK_FALSE(Partition{3, 2}.contains(Partition{2, 2, 1}));

  CHECK(schubert::complement(Partition{2, 1}, r) == Partition{4, 3, 2});
  CHECK(schubert::complement(Partition(), r) == Partition{4, 4, 4});
  CHECK_THROWS_AS(schubert::complement(Partition{5}, r), std::invalid_argument);
  for (const auto& p : schubert::partitions_in(r)) {
    CHECK(schubert::complement(schubert::complement(p, r), r) == p);
    CHECK(p.size() + schubert::complement(p, r).size() == r.area());
  }
}

TEST_CASE("partitions in a rectangle are counted by binomials") {
  CHECK(schubert::partitions_in(Rectangle(3, 4)).size() == 35);
  CHECK(schubert::partitions_in(Rectangle(2, 3)).size() == 10);
  CHECK(schubert::partitions_in(Rectangle(3, 4), 6).size() == 5);
  CHECK(schubert::partitions_in(Rectangle(3, 4), 13).empty());

  const auto all = schubert::partitions_in(Rectangle(2, 2));
  const std::vector<Partition> expected{{}, {1}, {2}, {1, 1}, {2, 1}, {2, 2}};
  CHECK(all == expected);
  CHECK_THROWS(Rectangle(0, 3));
}
