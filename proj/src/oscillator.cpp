#include "qosc/oscillator.hpp"

namespace qosc {

RewriteSystem oscillator_system() {
  // ids: 0 = a*, 1 = qN, 2 = a
  RewriteSystem rs({{"a*", GenId{2}, 0, 1}, {"qN", GenId{1}, 1, 1}, {"a", GenId{0}, 2, 1}});
  const FieldElem q = FieldElem::q();
  rs.set_rule("a", "a*", rs.word({"a*", "a"}, FieldElem::Q1()) + rs.word({"qN", "qN"}));
  rs.set_rule("a", "qN", rs.word({"qN", "a"}, q));
  rs.set_rule("qN", "a*", rs.word({"a*", "qN"}, q));
  return rs;
}

std::array<GenId, 3> oscillator_covector(const RewriteSystem& osc) {
  return {osc.id("a"), osc.id("a*"), osc.id("qN")};
}

}  // namespace qosc
