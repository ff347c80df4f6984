#include "doctest.h"
#include "oracle.hpp"
#include "support.hpp"

#include "ctxlogic/error.hpp"

using namespace ctxlogic;
using testkit::k2;

namespace {

SortedSet objs(const FormalContext& k, std::vector<std::string> ids) { return k.make_set(Sort::s1, ids); }
SortedSet attrs(const FormalContext& k, std::vector<std::string> ids) { return k.make_set(Sort::s2, ids); }

}  // namespace

TEST_CASE("derive on K2 matches the set-comprehension oracle") {
  auto k = k2();
  CHECK(derive(k, objs(k, {"g1"})) == attrs(k, {"m1", "m2"}));
  CHECK(derive(k, objs(k, {"g1", "g2"})) == attrs(k, {"m2"}));
  CHECK(derive(k, attrs(k, {"m2"})) == objs(k, {"g1", "g2"}));
  for (unsigned code = 0; code < 4; ++code) {
    Bitset a = from_code(2, code);
    CHECK(oracle::to_bits(oracle::up(k, oracle::to_set(a)), 2) == derive(k, {Sort::s1, a}).members);
    CHECK(oracle::to_bits(oracle::down(k, oracle::to_set(a)), 2) == derive(k, {Sort::s2, a}).members);
  }
}

TEST_CASE("derive of the empty set is the full opposite universe, even when empty") {
  auto k = k2();
  CHECK(derive(k, objs(k, {})) == attrs(k, {"m1", "m2"}));
  FormalContext empty_m(testkit::ids("g", 2), {}, Relation(2, 0));
  CHECK(derive(empty_m, {Sort::s1, Bitset(2)}).members.size() == 0);
  CHECK(derive(empty_m, {Sort::s2, Bitset(0)}).members == full_set(2));
}

TEST_CASE("approximation operators on K2") {
  auto k = k2();
  CHECK(approx(k, ApproxKind::poss_o, objs(k, {"g2"})) == attrs(k, {"m2"}));
  CHECK(approx(k, ApproxKind::nec_p, attrs(k, {"m2"})) == objs(k, {"g2"}));
  CHECK(approx(k, ApproxKind::poss_o, objs(k, {})) == attrs(k, {}));
  CHECK(approx(k, ApproxKind::nec_o, objs(k, {"g1"})) == attrs(k, {"m1"}));
  CHECK(approx(k, ApproxKind::poss_p, attrs(k, {"m1"})) == objs(k, {"g1"}));
  CHECK_THROWS_AS(approx(k, ApproxKind::poss_o, attrs(k, {"m1"})), Error);
}

TEST_CASE("complement context") {
  auto k = k2();
  auto kc = complement_context(k);
  CHECK(kc.incidence().count() == 1);
  CHECK(kc.incidence().test(1, 0));
  CHECK(complement_context(kc) == k);
  FormalContext full = testkit::context_from_code(2, 3, 0b111111);
  CHECK(complement_context(full).incidence().count() == 0);
}

TEST_CASE("neighbourhoods") {
  auto k = k2();
  CHECK(neighborhoods(k, {Sort::s1, 0}) == attrs(k, {"m1", "m2"}));
  CHECK(neighborhoods(k, {Sort::s2, 0}) == objs(k, {"g1"}));
  auto e = testkit::context_from_code(2, 2, 0);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(neighborhoods(e, {Sort::s1, i}).members.none());
    CHECK(neighborhoods(e, {Sort::s2, i}).members.none());
  }
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(FormalContext({"a", "a"}, {"m"}, Relation(2, 1)), Error);
  CHECK_THROWS_AS(FormalContext({"a"}, {"m"}, {{"a", "x"}}), Error);
  auto k = k2();
  CHECK_THROWS_AS(k.make_set(Sort::s1, {"nope"}), Error);
}

TEST_CASE("Galois laws, duality and the complement bridge hold on all contexts up to 4x4") {
  std::size_t checked = 0;
  testkit::for_all_contexts(4, [&](const FormalContext& k) {
    const auto n = k.num_objects(), m = k.num_attributes();
    FormalContext kc = complement_context(k);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
      SortedSet a{Sort::s1, from_code(n, code)};
      SortedSet up = derive(k, a);
      SortedSet upup = derive(k, up);
      REQUIRE(a.members.is_subset_of(upup.members));
      REQUIRE(derive(k, upup) == up);
      // A+ under I is the complement of poss_o under the complement relation.
      SortedSet bridge = approx(kc, ApproxKind::poss_o, a);
      bridge.members.flip();
      REQUIRE(bridge == up);
      SortedSet na{Sort::s1, ~a.members};
      SortedSet dual = approx(k, ApproxKind::poss_o, na);
      dual.members.flip();
      REQUIRE(approx(k, ApproxKind::nec_o, a) == dual);
    }
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << m); ++code) {
      SortedSet b{Sort::s2, from_code(m, code)};
      REQUIRE(b.members.is_subset_of(derive(k, derive(k, b)).members));
      SortedSet nb{Sort::s2, ~b.members};
      SortedSet dual = approx(k, ApproxKind::poss_p, nb);
      dual.members.flip();
      REQUIRE(approx(k, ApproxKind::nec_p, b) == dual);
      // antitone
      for (std::uint64_t sub = code;; sub = (sub - 1) & code) {
        SortedSet s{Sort::s2, from_code(m, sub)};
        REQUIRE(derive(k, b).members.is_subset_of(derive(k, s).members));
        if (sub == 0) break;
      }
    }
    ++checked;
  }, true);
  CHECK(checked > 70000);
}
