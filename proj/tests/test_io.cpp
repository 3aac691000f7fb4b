#include "isingqsp/io.hpp"

#include "doctest.h"

#include <cstdlib>
#include <sstream>
#include <string>

using namespace isingqsp;

TEST_CASE("fmt17 round-trips doubles bit for bit") {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 2.2250738585072014e-308,
                   123456789.123456789, -0.0, 3.141592653589793}) {
    const std::string s = io::fmt17(v);
    const double back = std::strtod(s.c_str(), nullptr);
    CHECK(back == v);
  }
}

TEST_CASE("fmt17 keeps integers and short decimals readable") {
  CHECK(io::fmt17(2.0) == "2");
  CHECK(io::fmt17(0.5) == "0.5");
  CHECK(io::fmt17(-4.0) == "-4");
}

TEST_CASE("csv writer: comments, header, rows") {
  io::Csv t;
  t.comments = {"one", "two words"};
  t.header = {"a", "b"};
  t.rows = {{1.0, 0.5}, {-4.0, 0.1}};
  std::ostringstream os;
  io::write_csv(os, t);
  CHECK(os.str() ==
        "# one\n"
        "# two words\n"
        "a,b\n"
        "1,0.5\n"
        "-4,0.10000000000000001\n");
}

TEST_CASE("csv writer handles an empty table gracefully") {
  io::Csv t;
  t.header = {"only"};
  std::ostringstream os;
  io::write_csv(os, t);
  CHECK(os.str() == "only\n");
}
