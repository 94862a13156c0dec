#pragma once

#include <string_view>
#include <vector>

#include "oracle.hpp"
#include "sst/core_model.hpp"

inline sst::SymbolString str(std::uint32_t m, std::string_view digits) {
  return sst::SymbolString::from_digits(sst::Alphabet(m), digits);
}

inline sst::SymbolString to_sst(const oracle::Str& s, std::uint32_t m) {
  return sst::SymbolString(sst::Alphabet(m), std::vector<sst::Symbol>(s));
}

inline oracle::Str to_oracle(const sst::SymbolString& s) {
  return oracle::Str(s.symbols().begin(), s.symbols().end());
}
