#include "doctest.h"
#include "properties.hpp"

using namespace testsupport;

namespace {

constexpr std::size_t kCases = 1000;

void expect(const PropertyResult& r) {
  CAPTURE(r.name);
  CAPTURE(r.firstFailure);
  MESSAGE(r.name << ": " << r.cases << " cases, " << r.failures << " failures (" << r.note << ")");
  CHECK(r.cases >= kCases);
  CHECK(r.failures == 0);
}

}  // namespace

TEST_CASE("property: compare_points partial-order axioms") { expect(prop_order_axioms(101, kCases)); }
TEST_CASE("property: dihomotopic is an equivalence relation") { expect(prop_dihomotopy_equivalence(202, kCases)); }
TEST_CASE("property: functoriality of combinatorial maps") { expect(prop_functoriality(303, kCases)); }
TEST_CASE("property: fast-path acceptance implies general acceptance") {
  expect(prop_fast_implies_general(404, kCases));
}
TEST_CASE("property: certificate pass implies no obstruction") { expect(prop_certificate_consistency(505, kCases)); }
TEST_CASE("property: grid-refinement invariance of hom-sets") { expect(prop_refinement_invariance(606, kCases)); }
