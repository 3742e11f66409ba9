/*
 * Copyright 2026 The fuzzypref Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "fuzzypref/tnorm.hpp"

namespace fuzzypref {

std::string_view to_string(TNormId t) noexcept {
  switch (t) {
    case TNormId::godel:
      return "godel";
    case TNormId::lukasiewicz:
      return "lukasiewicz";
    case TNormId::product:
      return "product";
  }
  return "godel";
}

TNormId parse_tnorm(std::string_view name) {
  for (TNormId t : kAllTNorms) {
    if (to_string(t) == name) return t;
  }
  throw ParseError("unknown tnorm '" + std::string(name) +
                   "' (expected godel, lukasiewicz or product)");
}

}  // namespace fuzzypref
