#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "weilheis/code_hash.hpp"

namespace weilheis {

using Code = std::vector<int>;

/// A finite group whose elements are fixed-length integer codes, listed in a
/// canonical order. Subclasses decide how elements are stored and indexed.
class FiniteGroup {
 public:
  virtual ~FiniteGroup() = default;

  virtual std::size_t size() const = 0;
  virtual Code element(std::size_t i) const = 0;
  virtual std::optional<std::size_t> index_of(const Code& c) const = 0;
  virtual Code mul(const Code& a, const Code& b) const = 0;
  virtual Code inv(const Code& a) const = 0;
  virtual Code identity() const = 0;

  bool contains(const Code& c) const { return index_of(c).has_value(); }
  std::size_t index(const Code& c) const;

  /// A generating set. The default is greedy over the canonical order and is
  /// computed once.
  virtual std::vector<Code> generators() const;

  const std::string& name() const { return name_; }

 protected:
  explicit FiniteGroup(std::string name) : name_(std::move(name)) {}

 private:
  std::string name_;
  mutable std::once_flag gens_once_;
  mutable std::vector<Code> gens_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Group given by an explicit element list and a hash index.
class ListGroup : public FiniteGroup {
 public:
  using MulFn = std::function<Code(const Code&, const Code&)>;
  using InvFn = std::function<Code(const Code&)>;

  /// Elements are sorted into canonical (lexicographic) order.
  ListGroup(std::string name, std::vector<Code> elements, MulFn mul, InvFn inv,
            std::vector<Code> gens = {});

  std::size_t size() const override { return elements_.size(); }
  Code element(std::size_t i) const override { return elements_.at(i); }
  std::optional<std::size_t> index_of(const Code& c) const override;
  Code mul(const Code& a, const Code& b) const override { return mul_(a, b); }
  Code inv(const Code& a) const override { return inv_(a); }
  Code identity() const override { return identity_; }
  std::vector<Code> generators() const override;

  const std::vector<Code>& elements() const { return elements_; }

 private:
  std::vector<Code> elements_;
  std::unordered_map<Code, std::size_t, CodeHash> index_;
  MulFn mul_;
  InvFn inv_;
  Code identity_;
  std::vector<Code> gens_;
};

/// Z/n with codes {k}.
GroupPtr cyclic_group(int n);

/// The subgroup of `ambient` whose elements satisfy `keep`, in ambient order.
/// Throws std::invalid_argument if the selected set is not closed under
/// multiplication.
GroupPtr subgroup(const GroupPtr& ambient, const std::function<bool(const Code&)>& keep,
                  std::string name);
GroupPtr subgroup(const GroupPtr& ambient, std::vector<Code> elements, std::string name);

/// Left action of G on N by automorphisms: act(g, n) = g.n
using ActionFn = std::function<Code(const Code&, const Code&)>;

/// G x| N with (g,n)(g',n') = (gg', (g'^-1 . n) n'). Codes are g-code ++ n-code;
/// element i is (G[i / |N|], N[i % |N|]).
class SemidirectGroup : public FiniteGroup {
 public:
  SemidirectGroup(GroupPtr g, GroupPtr n, ActionFn act, std::string name);

  std::size_t size() const override { return g_->size() * n_->size(); }
  Code element(std::size_t i) const override;
  std::optional<std::size_t> index_of(const Code& c) const override;
  Code mul(const Code& a, const Code& b) const override;
  Code inv(const Code& a) const override;
  Code identity() const override { return join(g_->identity(), n_->identity()); }
  std::vector<Code> generators() const override;

  const GroupPtr& acting() const { return g_; }
  const GroupPtr& normal() const { return n_; }
  Code act(const Code& g, const Code& n) const { return act_(g, n); }

  Code join(const Code& g, const Code& n) const;
  Code left(const Code& c) const { return Code(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(glen_)); }
  Code right(const Code& c) const { return Code(c.begin() + static_cast<std::ptrdiff_t>(glen_), c.end()); }

 private:
  GroupPtr g_, n_;
  ActionFn act_;
  std::size_t glen_;
};

std::shared_ptr<const SemidirectGroup> semidirect(GroupPtr g, GroupPtr n, ActionFn act,
                                                  std::string name);

/// Checks the action is by automorphisms and is a homomorphism G -> Aut(N) on
/// `samples` seeded random triples (all triples when that is fewer).
bool action_is_homomorphic(const FiniteGroup& g, const FiniteGroup& n, const ActionFn& act,
                           std::size_t samples, std::uint64_t seed);

/// Checks associativity, identity and inverses on every element (and every
/// triple when |G|^3 <= triple_cap, otherwise on seeded random triples).
bool satisfies_group_axioms(const FiniteGroup& g, std::uint64_t triple_cap, std::uint64_t seed);

}  // namespace weilheis
