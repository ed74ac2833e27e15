#include "weilheis/group.hpp"

#include <algorithm>
#include <deque>
#include <random>

namespace weilheis {

namespace {

// Greedy generating set of the group whose elements are listed by `at` and
// indexed by `find`: walk the list and keep every element outside the
// subgroup generated so far. Throws if a product escapes the list.
std::vector<Code> greedy_generators(std::size_t size, const std::function<Code(std::size_t)>& at,
                                    const std::function<std::optional<std::size_t>(const Code&)>& find,
                                    const std::function<Code(const Code&, const Code&)>& mul) {
  std::vector<bool> seen(size, false);
  std::vector<Code> closure;
  std::vector<Code> gens;
  std::size_t covered = 0;
  for (std::size_t i = 0; i < size && covered < size; ++i) {
    if (seen[i]) continue;
    Code s = at(i);
    if (closure.empty()) {
      // Powers of the first generator reach the identity on their own.
      closure.push_back(s);
      seen[i] = true;
      ++covered;
    }
    gens.push_back(s);
    std::deque<Code> queue(closure.begin(), closure.end());
    while (!queue.empty()) {
      Code x = std::move(queue.front());
      queue.pop_front();
      for (const auto& g : gens) {
        Code y = mul(x, g);
        auto j = find(y);
        if (!j) throw std::invalid_argument("subset is not closed under multiplication");
        if (seen[*j]) continue;
        seen[*j] = true;
        ++covered;
        closure.push_back(y);
        queue.push_back(std::move(y));
      }
    }
  }
  return gens;
}

}  // namespace

std::size_t FiniteGroup::index(const Code& c) const {
  auto i = index_of(c);
  if (!i) throw std::out_of_range("element not in group " + name_);
  return *i;
}

std::vector<Code> FiniteGroup::generators() const {
  std::call_once(gens_once_, [&] {
    gens_ = greedy_generators(
        size(), [&](std::size_t i) { return element(i); }, [&](const Code& c) { return index_of(c); },
        [&](const Code& a, const Code& b) { return mul(a, b); });
  });
  return gens_;
}

ListGroup::ListGroup(std::string name, std::vector<Code> elements, MulFn mul, InvFn inv,
                     std::vector<Code> gens)
    : FiniteGroup(std::move(name)),
      elements_(std::move(elements)),
      mul_(std::move(mul)),
      inv_(std::move(inv)),
      gens_(std::move(gens)) {
  if (elements_.empty()) throw std::invalid_argument("empty group");
  std::sort(elements_.begin(), elements_.end());
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (!index_.emplace(elements_[i], i).second) throw std::invalid_argument("duplicate group element");
  identity_ = mul_(elements_[0], inv_(elements_[0]));
}

std::optional<std::size_t> ListGroup::index_of(const Code& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Code> ListGroup::generators() const {
  if (!gens_.empty()) return gens_;
  return FiniteGroup::generators();
}

GroupPtr cyclic_group(int n) {
  std::vector<Code> els;
  for (int k = 0; k < n; ++k) els.push_back({k});
  return std::make_shared<ListGroup>(
      "Z/" + std::to_string(n), els, [n](const Code& a, const Code& b) { return Code{(a[0] + b[0]) % n}; },
      [n](const Code& a) { return Code{(n - a[0]) % n}; }, std::vector<Code>{{n > 1 ? 1 : 0}});
}

GroupPtr subgroup(const GroupPtr& ambient, std::vector<Code> elements, std::string name) {
  auto mul = [ambient](const Code& a, const Code& b) { return ambient->mul(a, b); };
  auto inv = [ambient](const Code& a) { return ambient->inv(a); };
  auto h = std::make_shared<ListGroup>(std::move(name), std::move(elements), mul, inv);
  // Computing generators walks the whole closure, which certifies the subgroup.
  h->generators();
  return h;
}

GroupPtr subgroup(const GroupPtr& ambient, const std::function<bool(const Code&)>& keep, std::string name) {
  std::vector<Code> els;
  for (std::size_t i = 0; i < ambient->size(); ++i) {
    Code c = ambient->element(i);
    if (keep(c)) els.push_back(std::move(c));
  }
  return subgroup(ambient, std::move(els), std::move(name));
}

SemidirectGroup::SemidirectGroup(GroupPtr g, GroupPtr n, ActionFn act, std::string name)
    : FiniteGroup(std::move(name)), g_(std::move(g)), n_(std::move(n)), act_(std::move(act)) {
  glen_ = g_->identity().size();
}

Code SemidirectGroup::join(const Code& g, const Code& n) const {
  Code c;
  c.reserve(g.size() + n.size());
  c.insert(c.end(), g.begin(), g.end());
  c.insert(c.end(), n.begin(), n.end());
  return c;
}

Code SemidirectGroup::element(std::size_t i) const {
  const std::size_t nn = n_->size();
  return join(g_->element(i / nn), n_->element(i % nn));
}

std::optional<std::size_t> SemidirectGroup::index_of(const Code& c) const {
  if (c.size() < glen_) return std::nullopt;
  auto gi = g_->index_of(left(c));
  if (!gi) return std::nullopt;
  auto ni = n_->index_of(right(c));
  if (!ni) return std::nullopt;
  return *gi * n_->size() + *ni;
}

Code SemidirectGroup::mul(const Code& a, const Code& b) const {
  const Code ga = left(a), gb = left(b);
  return join(g_->mul(ga, gb), n_->mul(act_(g_->inv(gb), right(a)), right(b)));
}

Code SemidirectGroup::inv(const Code& a) const {
  const Code g = left(a);
  return join(g_->inv(g), n_->inv(act_(g, right(a))));
}

std::vector<Code> SemidirectGroup::generators() const {
  std::vector<Code> gens;
  for (const auto& g : g_->generators()) gens.push_back(join(g, n_->identity()));
  for (const auto& n : n_->generators()) gens.push_back(join(g_->identity(), n));
  return gens;
}

std::shared_ptr<const SemidirectGroup> semidirect(GroupPtr g, GroupPtr n, ActionFn act, std::string name) {
  if (!action_is_homomorphic(*g, *n, act, 2000, 0x5eed))
    throw std::invalid_argument("action of " + g->name() + " on " + n->name() + " is not by automorphisms");
  return std::make_shared<SemidirectGroup>(std::move(g), std::move(n), std::move(act), std::move(name));
}

bool action_is_homomorphic(const FiniteGroup& g, const FiniteGroup& n, const ActionFn& act,
                           std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pg(0, g.size() - 1), pn(0, n.size() - 1);
  const std::uint64_t all = static_cast<std::uint64_t>(g.size()) * g.size() * n.size();
  const bool exhaustive = all <= samples;
  const std::size_t count = exhaustive ? static_cast<std::size_t>(all) : samples;
  for (std::size_t t = 0; t < count; ++t) {
    std::size_t i, j, k;
    if (exhaustive) {
      i = t / (g.size() * n.size());
      j = (t / n.size()) % g.size();
      k = t % n.size();
    } else {
      i = pg(rng);
      j = pg(rng);
      k = pn(rng);
    }
    const Code a = g.element(i), b = g.element(j), x = n.element(k), y = n.element(pn(rng));
    if (act(g.mul(a, b), x) != act(a, act(b, x))) return false;
    if (act(a, n.mul(x, y)) != n.mul(act(a, x), act(a, y))) return false;
    if (act(g.identity(), x) != x) return false;
  }
  return true;
}

bool satisfies_group_axioms(const FiniteGroup& g, std::uint64_t triple_cap, std::uint64_t seed) {
  const Code e = g.identity();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Code x = g.element(i);
    if (g.mul(x, e) != x || g.mul(e, x) != x || g.mul(x, g.inv(x)) != e) return false;
    if (g.index_of(x) != i) return false;
  }
  const std::uint64_t n = g.size();
  if (n * n * n <= triple_cap) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Code ab = g.mul(g.element(i), g.element(j));
        if (!g.contains(ab)) return false;
        for (std::size_t k = 0; k < n; ++k)
          if (g.mul(ab, g.element(k)) != g.mul(g.element(i), g.mul(g.element(j), g.element(k)))) return false;
      }
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::uint64_t t = 0; t < triple_cap; ++t) {
    const Code a = g.element(pick(rng)), b = g.element(pick(rng)), c = g.element(pick(rng));
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
  }
  return true;
}

}  // namespace weilheis
