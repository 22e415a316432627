#include "enumkit/logic/allsat.hpp"

#include "enumkit/engine/blocking.hpp"
#include "enumkit/engine/flasher.hpp"

namespace enumkit {

StreamPtr<Assignment> allsat(const CnfFormula& f, AllSatMode mode, SatOptions options) {
  if (mode == AllSatMode::blocking) return std::make_unique<BlockingEnumerator>(f, options);
  return flasher(std::make_shared<SatExtension>(f, options));
}

}  // namespace enumkit
