#include "autoequiv/permutation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_set>

#include "autoequiv/errors.hpp"

namespace autoequiv {

Permutation Permutation::identity(std::size_t points) {
  std::vector<Point> image(points);
  std::iota(image.begin(), image.end(), Point{0});
  return Permutation(std::move(image));
}

Permutation Permutation::from_sorts(const SortedDomain& domain,
                                    const std::vector<std::vector<Point>>& per_sort) {
  if (per_sort.size() != domain.sort_count()) {
    throw DomainMismatch("permutation has " + std::to_string(per_sort.size()) +
                         " sort arrays, domain has " + std::to_string(domain.sort_count()));
  }
  std::vector<Point> image(domain.point_count());
  for (std::size_t s = 0; s < per_sort.size(); ++s) {
    const auto& arr = per_sort[s];
    if (arr.size() != domain.size(s)) {
      throw DomainMismatch("image array for sort '" + domain.name(s) + "' has length " +
                           std::to_string(arr.size()) + ", expected " +
                           std::to_string(domain.size(s)));
    }
    std::vector<bool> seen(arr.size(), false);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      if (arr[i] >= arr.size() || seen[arr[i]]) {
        throw PreconditionError("image array for sort '" + domain.name(s) +
                                "' is not a bijection");
      }
      seen[arr[i]] = true;
      image[domain.offset(s) + i] = domain.offset(s) + arr[i];
    }
  }
  return Permutation(std::move(image));
}

Element Permutation::operator()(const SortedDomain& domain, Element e) const {
  return to_element(domain, image_[to_point(domain, e)]);
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

std::vector<std::vector<Point>> Permutation::per_sort(const SortedDomain& domain) const {
  std::vector<std::vector<Point>> out(domain.sort_count());
  for (std::size_t s = 0; s < domain.sort_count(); ++s) {
    const auto off = domain.offset(s);
    out[s].reserve(domain.size(s));
    for (std::size_t i = 0; i < domain.size(s); ++i) out[s].push_back(image_[off + i] - off);
  }
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image words.
  std::uint64_t h = 1469598103934665603ull;
  for (auto v : p.image()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw DomainMismatch("cannot compose permutations on " + std::to_string(p.size()) + " and " +
                         std::to_string(q.size()) + " points");
  }
  std::vector<Point> image(p.size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = p(q(static_cast<Point>(i)));
  return Permutation(std::move(image));
}

Permutation invert(const Permutation& p) {
  std::vector<Point> image(p.size());
  for (std::size_t i = 0; i < image.size(); ++i) image[p(static_cast<Point>(i))] = static_cast<Point>(i);
  return Permutation(std::move(image));
}

Permutation conjugate(const Permutation& g, const Permutation& mu) {
  if (g.size() != mu.size()) {
    throw DomainMismatch("cannot conjugate across domains of different size");
  }
  // (mu g mu^-1)(mu(x)) = mu(g(x))
  std::vector<Point> image(g.size());
  for (std::size_t x = 0; x < image.size(); ++x) {
    image[mu(static_cast<Point>(x))] = mu(g(static_cast<Point>(x)));
  }
  return Permutation(std::move(image));
}

std::string format_cycles(const SortedDomain& domain, const Permutation& p) {
  std::string out;
  for (std::size_t s = 0; s < domain.sort_count(); ++s) {
    const auto off = domain.offset(s);
    const auto n = domain.size(s);
    std::vector<bool> done(n, false);
    std::string cycles;
    for (std::size_t start = 0; start < n; ++start) {
      if (done[start] || p(off + static_cast<Point>(start)) == off + start) continue;
      cycles += "(";
      auto x = start;
      bool first = true;
      while (!done[x]) {
        done[x] = true;
        if (!first) cycles += " ";
        cycles += std::to_string(x);
        first = false;
        x = p(off + static_cast<Point>(x)) - off;
      }
      cycles += ")";
    }
    if (cycles.empty()) continue;
    if (!out.empty()) out += " ";
    out += domain.name(s) + ":" + cycles;
  }
  return out.empty() ? "id" : out;
}

Permutation parse_cycles(const SortedDomain& domain, std::string_view text) {
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("bad permutation '" + std::string(text) + "': " + why);
  };
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == ';'; };
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && is_space(text[i])) ++i;
  };
  skip();
  const auto id = Permutation::identity(domain);
  std::vector<Point> out(id.image().begin(), id.image().end());
  {
    auto rest = text.substr(i);
    while (!rest.empty() && is_space(rest.back())) rest.remove_suffix(1);
    if (rest == "id") return Permutation(std::move(out));
  }
  std::vector<bool> sort_seen(domain.sort_count(), false);
  while (i < text.size()) {
    std::size_t sort = 0;
    if (text[i] == '(') {
      if (domain.sort_count() != 1) throw fail("a sort name is required for multi-sorted domains");
    } else {
      const auto colon = text.find(':', i);
      if (colon == std::string_view::npos) throw fail("expected 'Sort:(...)'");
      const auto name = text.substr(i, colon - i);
      auto found = domain.find_sort(name);
      if (!found) throw fail("unknown sort '" + std::string(name) + "'");
      sort = *found;
      i = colon + 1;
      skip();
    }
    if (sort_seen[sort]) throw fail("sort '" + domain.name(sort) + "' given twice");
    sort_seen[sort] = true;
    const auto off = domain.offset(sort);
    const auto n = domain.size(sort);
    std::vector<bool> used(n, false);
    bool any = false;
    while (i < text.size() && text[i] == '(') {
      any = true;
      ++i;
      std::vector<std::size_t> cycle;
      while (true) {
        while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
        if (i >= text.size()) throw fail("unterminated cycle");
        if (text[i] == ')') {
          ++i;
          break;
        }
        if (text[i] < '0' || text[i] > '9') throw fail("expected an index");
        std::size_t v = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
          v = v * 10 + static_cast<std::size_t>(text[i] - '0');
          if (v > n) throw fail("index out of range for sort '" + domain.name(sort) + "'");
          ++i;
        }
        if (v >= n) throw fail("index out of range for sort '" + domain.name(sort) + "'");
        if (used[v]) throw fail("index " + std::to_string(v) + " repeated");
        used[v] = true;
        cycle.push_back(v);
      }
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        out[off + cycle[k]] = off + static_cast<Point>(cycle[(k + 1) % cycle.size()]);
      }
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    }
    if (!any) throw fail("expected a cycle after the sort name");
    skip();
  }
  return Permutation(std::move(out));
}

bool respects_sorts(const SortedDomain& domain, const Permutation& p) {
  if (p.size() != domain.point_count()) return false;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t s = 0; s < domain.sort_count(); ++s) {
    const auto lo = domain.offset(s);
    const auto hi = lo + static_cast<Point>(domain.size(s));
    for (Point x = lo; x < hi; ++x) {
      const auto y = p(x);
      if (y < lo || y >= hi || seen[y]) return false;
      seen[y] = true;
    }
  }
  return true;
}

namespace {

bool same_shape(const SortedDomain& a, const SortedDomain& b) {
  if (a.sort_count() != b.sort_count()) return false;
  for (std::size_t s = 0; s < a.sort_count(); ++s) {
    if (a.size(s) != b.size(s)) return false;
  }
  return true;
}

using PermSet = std::unordered_set<Permutation, PermutationHash>;

// Extends `set` (a group generated by gens[0..n-1]) to the group generated
// by all of `gens`, where gens.back() is the new generator.
void extend_group(PermSet& set, std::vector<Permutation>& order, const std::vector<Permutation>& gens,
                  std::size_t cap) {
  std::deque<Permutation> queue;
  auto add = [&](Permutation y) {
    if (set.contains(y)) return;
    if (set.size() >= cap) {
      throw ResourceError("permutation group exceeds the cap of " + std::to_string(cap) +
                          " elements");
    }
    set.insert(y);
    order.push_back(y);
    queue.push_back(std::move(y));
  };
  const auto& fresh = gens.back();
  const auto existing = order.size();
  for (std::size_t i = 0; i < existing; ++i) add(compose(order[i], fresh));
  while (!queue.empty()) {
    auto x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) add(compose(x, g));
  }
}

}  // namespace

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

PermGroup PermGroup::from_elements(SortedDomain domain, std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  const auto id = Permutation::identity(domain);
  if (elements.empty() || elements.front() != id) {
    throw PreconditionError("element set does not contain the identity");
  }
  PermSet set{id};
  std::vector<Permutation> order{id};
  std::vector<Permutation> gens;
  for (const auto& e : elements) {
    if (set.contains(e)) continue;
    gens.push_back(e);
    extend_group(set, order, gens, elements.size() + 1);
  }
  if (set.size() != elements.size()) {
    throw PreconditionError("element set is not closed under composition");
  }
  for (const auto& x : order) {
    if (!std::binary_search(elements.begin(), elements.end(), x)) {
      throw PreconditionError("element set is not closed under composition");
    }
  }
  return PermGroup(std::move(domain), std::move(gens), std::move(elements));
}

PermGroup closure(const SortedDomain& domain, std::vector<Permutation> generators, std::size_t cap) {
  for (const auto& g : generators) {
    if (!respects_sorts(domain, g)) {
      throw DomainMismatch("generator is not a sort-wise bijection of the domain");
    }
  }
  const auto id = Permutation::identity(domain);
  PermSet set{id};
  std::vector<Permutation> order{id};
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    gens.push_back(g);
    if (!set.contains(g)) extend_group(set, order, gens, cap);
  }
  std::sort(order.begin(), order.end());
  return PermGroup(domain, std::move(generators), std::move(order));
}

PermGroup conjugate_group(const PermGroup& group, const Permutation& mu,
                          const SortedDomain& target) {
  if (!same_shape(group.domain(), target) || !respects_sorts(group.domain(), mu)) {
    throw DomainMismatch("conjugating bijection does not map the group's domain onto the target");
  }
  std::vector<Permutation> gens;
  gens.reserve(group.generators().size());
  for (const auto& g : group.generators()) gens.push_back(conjugate(g, mu));
  std::vector<Permutation> elements;
  elements.reserve(group.order());
  for (const auto& g : group.elements()) elements.push_back(conjugate(g, mu));
  std::sort(elements.begin(), elements.end());
  return PermGroup(target, std::move(gens), std::move(elements));
}

bool groups_equal(const PermGroup& g, const PermGroup& h) {
  if (!same_shape(g.domain(), h.domain())) {
    throw DomainMismatch("groups act on different domains");
  }
  if (g.order() != h.order()) return false;
  for (const auto& x : g.generators()) {
    if (!h.contains(x)) return false;
  }
  for (const auto& x : h.generators()) {
    if (!g.contains(x)) return false;
  }
  return true;
}

OrbitPartition orbits(const PermGroup& group) {
  const auto n = group.domain().point_count();
  std::vector<Point> parent(n);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : group.generators()) {
    for (Point x = 0; x < n; ++x) {
      auto a = find(x), b = find(g(x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  OrbitPartition out;
  out.orbit_of.resize(n);
  std::vector<std::size_t> count(n, 0);
  for (Point x = 0; x < n; ++x) {
    out.orbit_of[x] = find(x);
    ++count[out.orbit_of[x]];
  }
  out.orbit_size.resize(n);
  for (Point x = 0; x < n; ++x) out.orbit_size[x] = count[out.orbit_of[x]];
  return out;
}

std::vector<std::vector<std::size_t>> orbit_profile(const PermGroup& group) {
  const auto& domain = group.domain();
  const auto part = orbits(group);
  std::vector<std::vector<std::size_t>> out(domain.sort_count());
  for (std::size_t s = 0; s < domain.sort_count(); ++s) {
    const auto lo = domain.offset(s);
    for (Point x = lo; x < lo + domain.size(s); ++x) {
      if (part.orbit_of[x] == x) out[s].push_back(part.orbit_size[x]);
    }
    std::sort(out[s].begin(), out[s].end());
  }
  return out;
}

}  // namespace autoequiv
