#include "perfclosure/poly/upoly.hpp"

namespace perfclosure {

std::string format_symbol_power(const Symbol& symbol, std::size_t k, std::uint64_t p) {
  return format_power(symbol.name, BigInt(k), p, symbol.level);
}

}  // namespace perfclosure
