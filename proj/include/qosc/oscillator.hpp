#pragma once

#include <array>

#include "qosc/ncalg.hpp"

namespace qosc {

// The deformed oscillator on a*, qN, a (increasing rank):
//   a a* = Q1 a* a + qN qN,   a qN = q qN a,   qN a* = q a* qN.
RewriteSystem oscillator_system();

// Generator ids of the covector x = (a, a*, qN) in oscillator_system().
std::array<GenId, 3> oscillator_covector(const RewriteSystem& osc);

}  // namespace qosc
