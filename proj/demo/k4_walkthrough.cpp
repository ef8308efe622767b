// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Walks through K4: the oriented matroid from a signed incidence matrix,
// its real phase structure, one flag and the recovered signed circuits.

#include <iostream>

#include "rphase/rphase.hpp"

int main() {
  using namespace rphase;
  const auto om = fixtures::k4_oriented();
  const auto m = underlying_matroid(om);
  std::cout << "K4: " << om.size() << " elements, rank " << m.rank() << ", " << om.topes().size()
            << " topes, " << om.covectors().size() << " covectors\n";

  const auto e = to_phase(om);
  std::cout << "phase structure on " << e.fan().facets().size() << " facets, verified: " << std::boolalpha
            << verify(e).ok << "\n";

  Chain flag{m.mask_of(std::vector<std::string>{"e12"}),
             m.mask_of(std::vector<std::string>{"e12", "e13", "e23"})};
  const auto& space = e.at(flag);
  std::cout << "E({e12} < {e12,e13,e23}) = " << space.basepoint().str() << " + <";
  for (std::size_t k = 0; k < space.tangent().rows().size(); ++k)
    std::cout << (k ? ", " : "") << gf2::BitVector(om.size(), space.tangent().rows()[k]).str();
  std::cout << ">\n";

  std::cout << "signed circuits:\n";
  for (const auto& c : signed_circuits_from_phase(e).circuits) std::cout << "  " << c.str(om.size()) << "\n";
  return 0;
}
