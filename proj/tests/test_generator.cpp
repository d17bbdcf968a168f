#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "dkp/generator.hpp"
#include "fixtures.hpp"

using dkp::DkpInstance;
using dkp::Family;
using dkp::GenSpec;

namespace {

std::string temp_file(const char* tag) {
  return std::string("gen_test_") + tag + ".tmp";
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

}  // namespace

TEST_CASE("generation is deterministic in the spec") {
  GenSpec spec;
  spec.family = Family::Uncorrelated;
  spec.groups = 2;
  spec.seed = 42;
  const DkpInstance a = dkp::generate(spec);
  const DkpInstance b = dkp::generate(spec);
  CHECK(a.profits == b.profits);
  CHECK(a.weights == b.weights);
  CHECK(a.capacity == b.capacity);

  spec.seed = 43;
  const DkpInstance c = dkp::generate(spec);
  CHECK(a.profits != c.profits);
}

TEST_CASE("strong correlation ties base profits to weights") {
  const DkpInstance inst = dkptest::make_generated(Family::Strong, 50, 7);
  for (uint32_t g = 0; g < inst.group_count(); ++g) {
    CHECK(inst.profit(g, 0) == inst.weight(g, 0) + 100);
    CHECK(inst.profit(g, 1) == inst.weight(g, 1) + 100);
  }
}

TEST_CASE("inverse correlation ties base weights to profits") {
  const DkpInstance inst = dkptest::make_generated(Family::InverseStrong, 50, 11);
  for (uint32_t g = 0; g < inst.group_count(); ++g) {
    CHECK(inst.weight(g, 0) == inst.profit(g, 0) + 100);
    CHECK(inst.weight(g, 1) == inst.profit(g, 1) + 100);
  }
}

TEST_CASE("every family and size passes strict validation") {
  static constexpr Family kFamilies[] = {Family::Uncorrelated, Family::Weak, Family::Strong,
                                         Family::InverseStrong};
  for (Family family : kFamilies) {
    for (uint32_t m = 2; m <= 200; ++m) {
      for (uint64_t s = 0; s < 100; ++s) {
        GenSpec spec;
        spec.family = family;
        spec.groups = m;
        spec.seed = 1000003ull * m + 17ull * s + static_cast<uint64_t>(family);
        const DkpInstance inst = dkp::generate(spec);
        const auto strict = dkp::validate(inst, true);
        if (!strict.ok()) {
          CAPTURE(dkp::family_name(family));
          CAPTURE(m);
          CAPTURE(s);
          REQUIRE(strict.ok());
        }
      }
    }
  }
}

TEST_CASE("single-group instances still pass lenient validation") {
  for (uint64_t s = 0; s < 50; ++s) {
    const DkpInstance inst = dkptest::make_generated(Family::Weak, 1, s);
    CHECK(dkp::validate(inst, false).ok());
  }
}

TEST_CASE("distinct seeds give distinct instances") {
  std::set<std::pair<std::vector<uint32_t>, std::vector<uint32_t>>> seen;
  for (uint64_t s = 0; s < 1000; ++s) {
    const DkpInstance inst = dkptest::make_generated(Family::Uncorrelated, 10, s);
    seen.insert({inst.profits, inst.weights});
  }
  CHECK(seen.size() == 1000);
}

TEST_CASE("save/load round-trips bit-exactly") {
  const DkpInstance inst = dkptest::t2();
  const std::string path = temp_file("roundtrip");
  dkp::save_instance(inst, path, "fixture");
  const auto loaded = dkp::load_instance(path);
  CHECK(loaded.instance.profits == inst.profits);
  CHECK(loaded.instance.weights == inst.weights);
  CHECK(loaded.instance.capacity == inst.capacity);
  CHECK(loaded.lenient_ok);

  dkp::save_instance(inst, path + "2", "fixture");
  CHECK(slurp(path) == slurp(path + "2"));
  std::remove(path.c_str());
  std::remove((path + "2").c_str());
}

TEST_CASE("loader reports structural errors with line numbers") {
  const std::string path = temp_file("bad");

  write_file(path, "5 10\n1 1\n2 2\n3 3\n4 4\n5 5\n");
  CHECK_THROWS_WITH_AS(dkp::load_instance(path), doctest::Contains("multiple of 3"),
                       dkp::ParseError);

  write_file(path, "# header\n3 10\n1 1\n2 x\n3 3\n");
  try {
    dkp::load_instance(path);
    FAIL("expected ParseError");
  } catch (const dkp::ParseError& e) {
    CHECK(e.line == 4);
  }

  write_file(path, "3 10\n1 1\n2 2\n");
  CHECK_THROWS_WITH_AS(dkp::load_instance(path), doctest::Contains("end of file"),
                       dkp::ParseError);

  write_file(path, "3 10\n1 1\n2 2\n3 3\n9 9\n");
  CHECK_THROWS_WITH_AS(dkp::load_instance(path), doctest::Contains("trailing"),
                       dkp::ParseError);

  std::remove(path.c_str());
}

TEST_CASE("loader downgrades invariant breaks to warnings") {
  const std::string path = temp_file("warn");
  // a[3i+1] <= a[3i] in the only group
  write_file(path, "3 12\n10 8\n20 5\n30 10\n");
  const auto loaded = dkp::load_instance(path);
  CHECK_FALSE(loaded.lenient_ok);
  CHECK_FALSE(loaded.warnings.empty());
  std::remove(path.c_str());
}

TEST_CASE("comment lines are skipped") {
  const std::string path = temp_file("comments");
  write_file(path, "# one\n# two\n3 12\n10 5\n20 8\n30 10\n");
  const auto loaded = dkp::load_instance(path);
  CHECK(loaded.instance.group_count() == 1);
  CHECK(loaded.instance.capacity == 12);
  std::remove(path.c_str());
}

TEST_CASE("opt sidecar read/write") {
  const std::string path = "gen_test_side.dkp";
  const std::string sidecar = "gen_test_side.opt";
  std::remove(sidecar.c_str());
  dkp::save_instance(dkptest::t2(), path);
  CHECK_FALSE(dkp::read_opt_sidecar(path).has_value());
  dkp::write_opt_sidecar(path, 30);
  CHECK(dkp::read_opt_sidecar(path) == 30);
  std::remove(path.c_str());
  std::remove(sidecar.c_str());
}

TEST_CASE("uniform_in stays in range and is deterministic") {
  dkp::SplitMix64 a(5), b(5);
  for (int i = 0; i < 1000; ++i) {
    const uint64_t x = dkp::uniform_in(a, 10, 17);
    CHECK(x >= 10);
    CHECK(x <= 17);
    CHECK(x == dkp::uniform_in(b, 10, 17));
  }
}

TEST_CASE("generator rejects bad specs") {
  GenSpec spec;
  spec.groups = 0;
  CHECK_THROWS_AS(dkp::generate(spec), std::invalid_argument);
  spec.groups = 1;
  spec.weight_lo = 5;
  spec.weight_hi = 5;
  CHECK_THROWS_AS(dkp::generate(spec), std::invalid_argument);
  spec.weight_lo = 1;
  spec.weight_hi = 1000;
  spec.ratio_num = 3;
  spec.ratio_den = 2;
  CHECK_THROWS_AS(dkp::generate(spec), std::invalid_argument);
}
