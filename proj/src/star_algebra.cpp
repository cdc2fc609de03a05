#include "lukstar/star_algebra.hpp"

#include <algorithm>

namespace lukstar {

StarAlgebra::StarAlgebra(std::vector<int> star) : star_(std::move(star)) {
  LUKSTAR_EXPECT(star_.size() >= 2);
  for (int v : star_) LUKSTAR_EXPECT(0 <= v && v <= top());
}

StarAlgebra StarAlgebra::lukasiewicz(const Chain& chain) {
  std::vector<int> t;
  t.reserve(chain.size());
  for (const Elem& x : chain.elements()) t.push_back(lukstar::star(x).num);
  return StarAlgebra(std::move(t));
}

PRun run_p(const StarAlgebra& alg, int a) {
  if (!alg.interior(a))
    throw BoundaryElement("procedure P needs an element other than 0 and 1");
  PRun r;
  std::vector<int> pos(alg.size(), 0);  // 1-based position in seq, 0 = unseen
  int cur = a;
  while (true) {
    r.seq.push_back(cur);
    pos[cur] = static_cast<int>(r.seq.size());
    const bool s = alg.positive(cur);
    r.starred.push_back(s);
    const int next = s ? alg.star(cur) : alg.inv(cur);
    if (pos[next] != 0) {
      r.loop_target = pos[next];
      return r;
    }
    // A malformed star table can leave the open interval; stop there.
    if (!alg.interior(next)) {
      r.seq.push_back(next);
      r.starred.push_back(false);
      r.loop_target = static_cast<int>(r.seq.size());
      return r;
    }
    cur = next;
  }
}

std::vector<int> generated_indices(const StarAlgebra& alg, int a) {
  std::vector<char> in(alg.size(), 0);
  in[0] = in[alg.top()] = 1;
  if (alg.interior(a)) {
    // Closure by worklist: P covers it for genuine IG-star chains, but this
    // stays correct on anything.
    std::vector<int> work{a};
    in[a] = 1;
    while (!work.empty()) {
      int x = work.back();
      work.pop_back();
      for (int y : {alg.star(x), alg.inv(x)}) {
        if (!in[y]) {
          in[y] = 1;
          work.push_back(y);
        }
      }
    }
  }
  std::vector<int> out;
  for (int j = 0; j < alg.size(); ++j)
    if (in[j]) out.push_back(j);
  return out;
}

StarAlgebra restrict_to(const StarAlgebra& alg, const std::vector<int>& elems) {
  LUKSTAR_EXPECT(std::is_sorted(elems.begin(), elems.end()));
  std::vector<int> index(alg.size(), -1);
  for (std::size_t k = 0; k < elems.size(); ++k) index[elems[k]] = static_cast<int>(k);
  std::vector<int> t;
  t.reserve(elems.size());
  for (int e : elems) {
    LUKSTAR_EXPECT(index[alg.inv(e)] >= 0);
    int s = index[alg.star(e)];
    LUKSTAR_EXPECT(s >= 0);
    t.push_back(s);
  }
  return StarAlgebra(std::move(t));
}

}  // namespace lukstar
