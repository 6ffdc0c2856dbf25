#pragma once

#include "horn/certificate.hpp"

namespace horn {

// Battery of fast known-answer checks covering every module; each check is
// one named certificate entry and any exception is recorded as a failure.
Certificate runSelftest(unsigned long seed);

}  // namespace horn
