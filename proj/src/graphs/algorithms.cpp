// Copyright 2026 The acsets Authors
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

#include "acsets/graphs/algorithms.hpp"

#include "acsets/graphs/schemas.hpp"

namespace acsets::graphs {

Instance free_reflexive(const Instance& g) {
  if (!(g.schema() == *graph_schema())) fail(Errc::SchemaMismatch, "free_reflexive expects a Gr instance");
  if (!g.is_complete()) fail(Errc::IncompleteInstance, "graph has undefined endpoints");
  Instance out(reflexive_graph_schema(), {}, IndexSpec{{"src", "tgt"}, {}});
  const Schema& s = out.schema();
  const std::size_t nv = g.nparts("V");
  const std::size_t ne = g.nparts("E");
  out.add_parts(s.ob("V"), nv);
  out.add_parts(s.ob("E"), ne + nv);
  const HomId src = s.hom("src");
  const HomId tgt = s.hom("tgt");
  const HomId refl = s.hom("refl");
  for (Part e = 1; e <= static_cast<Part>(ne); ++e) {
    out.set_hom(e, src, g.subpart<"src">(e));
    out.set_hom(e, tgt, g.subpart<"tgt">(e));
  }
  for (Part v = 1; v <= static_cast<Part>(nv); ++v) {
    const Part loop = static_cast<Part>(ne) + v;
    out.set_hom(loop, src, v);
    out.set_hom(loop, tgt, v);
    out.set_hom(v, refl, loop);
  }
  return out;
}

}  // namespace acsets::graphs
