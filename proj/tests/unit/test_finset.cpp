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


#include "acsets/finset.hpp"

#include <vector>

#include "doctest.h"
#include "support/errors.hpp"
#include "support/oracles.hpp"
#include "support/random_acsets.hpp"

using namespace acsets;
using acsets::testing::error_of;

namespace {

std::vector<Part> vals(const FinFunction& f) { return {f.values().begin(), f.values().end()}; }

}  // namespace

TEST_CASE("FinFunction range check") {
  CHECK(error_of([] { FinFunction({1, 4}, 3); }) == Errc::OutOfRange);
  CHECK(error_of([] { FinFunction({0}, 3); }) == Errc::OutOfRange);
  CHECK(FinFunction({}, 0).dom().n == 0);
}

TEST_CASE("composition") {
  const FinFunction f({2, 3, 1}, 3);
  CHECK(compose(FinFunction::identity(3), f) == f);
  CHECK(compose(f, FinFunction::identity(3)) == f);
  CHECK(vals(compose(FinFunction({2, 1}, 2), FinFunction({1, 1}, 1))) == std::vector<Part>{1, 1});
  CHECK(vals(compose(FinFunction({1, 3}, 3), FinFunction({2, 2, 1}, 2))) == std::vector<Part>{2, 1});
  CHECK(error_of([] { compose(FinFunction({1}, 2), FinFunction({1}, 1)); }) == Errc::NonComposable);
}

TEST_CASE("coequalizer examples") {
  const FinFunction f({2, 3, 1}, 3);
  const FinFunction q = coequalizer(f, f);
  CHECK(q.codom().n == 3);
  CHECK(vals(q) == std::vector<Part>{1, 2, 3});
  CHECK(vals(coequalizer(FinFunction({1}, 3), FinFunction({2}, 3))) == std::vector<Part>{1, 1, 2});
  const FinFunction all = coequalizer(FinFunction({1, 2}, 3), FinFunction({2, 3}, 3));
  CHECK(vals(all) == std::vector<Part>{1, 1, 1});
  CHECK(all.codom().n == 1);
  CHECK(error_of([] { coequalizer(FinFunction({1}, 2), FinFunction({1}, 3)); }) == Errc::NonParallel);
}

TEST_CASE("coequalizer against closure, exhaustive to size 3") {
  for (std::size_t m = 0; m <= 3; ++m) {
    for (std::size_t n = 1; n <= 3; ++n) {
      std::size_t count = 1;
      for (std::size_t i = 0; i < m; ++i) count *= n;
      for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = 0; b < count; ++b) {
          std::vector<Part> f(m), g(m);
          std::size_t x = a, y = b;
          for (std::size_t i = 0; i < m; ++i, x /= n, y /= n) {
            f[i] = static_cast<Part>(x % n + 1);
            g[i] = static_cast<Part>(y % n + 1);
          }
          const FinFunction q = coequalizer(FinFunction(f, n), FinFunction(g, n));
          CHECK(vals(q) == acsets::testing::closure_coequalizer(f, g, n));
          CHECK(compose(FinFunction(f, n), q) == compose(FinFunction(g, n), q));
        }
      }
    }
  }
}

TEST_CASE("union-find") {
  UnionFind uf(5);
  CHECK(uf.unite(0, 3));
  CHECK_FALSE(uf.unite(3, 0));
  CHECK(uf.unite(4, 1));
  CHECK(uf.find(3) == uf.find(0));
  CHECK(vals(uf.quotient_projection()) == std::vector<Part>{1, 2, 3, 1, 2});
}

TEST_CASE("colimit examples") {
  const std::vector<FinSet> sets{{2}, {3}};
  const Cocone sum = coproduct(sets);
  CHECK(sum.apex.n == 5);
  CHECK(vals(sum.legs[0]) == std::vector<Part>{1, 2});
  CHECK(vals(sum.legs[1]) == std::vector<Part>{3, 4, 5});

  const FinFunction id1 = FinFunction::identity(1);
  CHECK(pushout(id1, id1).apex.n == 1);

  const Cocone glued = pushout(FinFunction({1}, 2), FinFunction({1}, 2));
  CHECK(glued.apex.n == 3);
  CHECK(compose(FinFunction({1}, 2), glued.legs[0]) == compose(FinFunction({1}, 2), glued.legs[1]));
  CHECK(vals(glued.legs[0]) == std::vector<Part>{1, 2});
  CHECK(vals(glued.legs[1]) == std::vector<Part>{1, 3});
}

TEST_CASE("limit examples") {
  const std::vector<FinSet> sets{{2}, {3}};
  const Cone prod = product(sets);
  CHECK(prod.apex.n == 6);
  // Lexicographic tuple order.
  CHECK(vals(prod.legs[0]) == std::vector<Part>{1, 1, 1, 2, 2, 2});
  CHECK(vals(prod.legs[1]) == std::vector<Part>{1, 2, 3, 1, 2, 3});

  const Cone eq = equalizer(FinFunction({1, 2}, 2), FinFunction({1, 1}, 2));
  CHECK(eq.apex.n == 1);
  CHECK(eq.legs[0](1) == 1);

  CHECK(pullback(FinFunction({1, 1}, 1), FinFunction({1}, 1)).apex.n == 2);

  const std::vector<FinSet> none;
  CHECK(product(none).apex.n == 1);
  CHECK(coproduct(none).apex.n == 0);
}

TEST_CASE("diagram checks") {
  FinSetDiagram bad{Shape::parallel_pair(), {{2}, {2}}, {FinFunction({1, 2}, 2), FinFunction({1}, 2)}};
  CHECK(error_of([&] { bad.check(); }) == Errc::InvalidDiagram);
  FinSetDiagram short_arrows{Shape::parallel_pair(), {{2}, {2}}, {FinFunction({1, 2}, 2)}};
  CHECK(error_of([&] { colimit(short_arrows); }) == Errc::InvalidDiagram);
}

TEST_CASE("factorization") {
  const Cocone glued = pushout(FinFunction({1}, 2), FinFunction({1}, 2));
  const FinSetDiagram d{Shape::span(), {{2}, {2}, {1}}, {FinFunction({1}, 2), FinFunction({1}, 2)}};
  CHECK(factorize(glued, d, glued) == FinFunction::identity(3));

  // Competing cocone collapsing everything to a point.
  const Cocone point{{1}, {FinFunction({1, 1}, 1), FinFunction({1, 1}, 1), FinFunction({1}, 1)}};
  const FinFunction u = factorize(glued, d, point);
  for (std::size_t i = 0; i < 3; ++i) CHECK(compose(glued.legs[i], u) == point.legs[i]);

  // Codiagonal.
  const std::vector<FinSet> ones{{1}, {1}};
  const Cocone sum = coproduct(ones);
  const FinSetDiagram disc{Shape::discrete(2), {{1}, {1}}, {}};
  const Cocone both{{1}, {FinFunction({1}, 1), FinFunction({1}, 1)}};
  CHECK(vals(factorize(sum, disc, both)) == std::vector<Part>{1, 1});

  // Not a cocone: legs disagree on the glued point.
  const Cocone split{{2}, {FinFunction({1, 2}, 2), FinFunction({2, 1}, 2), FinFunction({1}, 2)}};
  CHECK(error_of([&] { factorize(glued, d, split); }) == Errc::NotACocone);

  const Cone prod = product(ones);
  const Cone cone{{3}, {FinFunction({1, 1, 1}, 1), FinFunction({1, 1, 1}, 1)}};
  CHECK(vals(factorize(prod, disc, cone)) == std::vector<Part>{1, 1, 1});
}

TEST_CASE("random pushouts and pullbacks commute") {
  acsets::testing::Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const std::size_t a = acsets::testing::uniform(rng, 0, 5);
    const std::size_t b = acsets::testing::uniform(rng, 1, 5);
    const std::size_t c = acsets::testing::uniform(rng, 1, 5);
    std::vector<Part> f(a), g(a);
    for (auto& x : f) x = acsets::testing::pick(rng, b);
    for (auto& x : g) x = acsets::testing::pick(rng, c);
    const FinFunction ff(f, b), gg(g, c);
    const Cocone po = pushout(ff, gg);
    CHECK(compose(ff, po.legs[0]) == compose(gg, po.legs[1]));
    // Jointly surjective.
    std::vector<char> hit(po.apex.n + 1, 0);
    for (Part x : po.legs[0].values()) hit[x] = 1;
    for (Part x : po.legs[1].values()) hit[x] = 1;
    CHECK(std::count(hit.begin() + 1, hit.end(), 1) == static_cast<long>(po.apex.n));

    std::vector<Part> h(b), k(c);
    const std::size_t base = acsets::testing::uniform(rng, 1, 4);
    for (auto& x : h) x = acsets::testing::pick(rng, base);
    for (auto& x : k) x = acsets::testing::pick(rng, base);
    const Cone pb = pullback(FinFunction(h, base), FinFunction(k, base));
    std::size_t pairs = 0;
    for (Part x : h) pairs += static_cast<std::size_t>(std::count(k.begin(), k.end(), x));
    CHECK(pb.apex.n == pairs);
    CHECK(compose(pb.legs[0], FinFunction(h, base)) == compose(pb.legs[1], FinFunction(k, base)));
  }
}
