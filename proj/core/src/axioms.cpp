#include "droopjr/axioms.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "detail.hpp"

namespace droopjr {

std::string axiom_name(Axiom a) {
  switch (a) {
    case Axiom::JR: return "JR";
    case Axiom::PJR: return "PJR";
    case Axiom::EJR: return "EJR";
    case Axiom::PJRplus: return "PJR+";
    case Axiom::EJRplus: return "EJR+";
    case Axiom::FPJR: return "FPJR";
    case Axiom::FJR: return "FJR";
  }
  return "?";
}

std::optional<Axiom> axiom_from_name(const std::string& name) {
  for (Axiom a : kAllAxioms)
    if (axiom_name(a) == name) return a;
  return std::nullopt;
}

std::string ViolationWitness::serialize() const {
  std::ostringstream out;
  out << "witness axiom=" << axiom_name(axiom) << " quota=" << quota_name(quota)
      << " l=" << level << " T=";
  for (std::size_t j = 0; j < target.size(); ++j) out << (j ? "," : "") << target[j];
  out << " S=";
  for (std::size_t j = 0; j < group.size(); ++j) out << (j ? "," : "") << group[j];
  if (!note.empty()) out << " note=\"" << note << '"';
  return out.str();
}

namespace {

struct Context {
  const Election& e;
  CandSet w;                   // committee as a bitset
  std::vector<int> w_members;  // ascending
  std::vector<int> sat;        // sat[i] = |A_i cap W|
};

Context make_context(const Election& e, const std::vector<int>& committee) {
  if (static_cast<int>(committee.size()) > e.k())
    throw std::invalid_argument("check: committee larger than k");
  Context ctx{e, indices_to_set(e.m(), committee), committee, {}};
  std::sort(ctx.w_members.begin(), ctx.w_members.end());
  ctx.sat.resize(e.n());
  for (int i = 0; i < e.n(); ++i)
    ctx.sat[i] = static_cast<int>((e.ballot(i) & ctx.w).count());
  return ctx;
}

void require_small(const Context& ctx, const char* who) {
  if (ctx.e.m() > 24 || ctx.e.k() > 8)
    throw std::runtime_error(std::string(who) + ": instance too large for exhaustive check");
}

ViolationWitness make_witness(Axiom a, Quota q, int level, std::vector<int> target,
                              std::vector<int> group, std::string note) {
  return ViolationWitness{a, q, level, std::move(target), std::move(group), std::move(note)};
}

// JR: a quota-clearing group jointly approving one candidate, none of whose
// members approve any committee member.
std::optional<ViolationWitness> check_jr(const Context& ctx, Quota q) {
  for (int c = 0; c < ctx.e.m(); ++c) {
    std::vector<int> group;
    for (int i : ctx.e.approvers(c))
      if (ctx.sat[i] == 0) group.push_back(i);
    if (group_clears_quota(q, static_cast<long long>(group.size()), 1, ctx.e))
      return make_witness(Axiom::JR, q, 1, {c}, std::move(group),
                          "no group member approves any committee member");
  }
  return std::nullopt;
}

// EJR+: for the largest level, a quota-clearing group jointly approving a
// non-committee candidate while every member has fewer than level
// representatives.
std::optional<ViolationWitness> check_ejrplus(const Context& ctx, Quota q) {
  for (int level = ctx.e.k(); level >= 1; --level) {
    for (int c = 0; c < ctx.e.m(); ++c) {
      if (ctx.w.test(c)) continue;
      std::vector<int> group;
      for (int i : ctx.e.approvers(c))
        if (ctx.sat[i] <= level - 1) group.push_back(i);
      if (group_clears_quota(q, static_cast<long long>(group.size()), level, ctx.e))
        return make_witness(Axiom::EJRplus, q, level, {c}, std::move(group),
                            "every group member has fewer than l committee members");
    }
  }
  return std::nullopt;
}

// Enumerates U subseteq W of size min(level-1, |W|) in lexicographic order;
// the maximal group whose committee approvals all lie inside U realizes every
// possible violating union.
template <typename Eligible, typename Found>
bool scan_union_caps(const Context& ctx, int level, const Eligible& eligible,
                     const Found& found) {
  const int usize = std::min<int>(level - 1, static_cast<int>(ctx.w_members.size()));
  bool hit = false;
  detail::for_each_combination(
      static_cast<int>(ctx.w_members.size()), usize, [&](const std::vector<int>& uidx) {
        CandSet u(ctx.e.m());
        for (int j : uidx) u.set(ctx.w_members[j]);
        std::vector<int> group;
        for (int i = 0; i < ctx.e.n(); ++i)
          if (eligible(i) && (ctx.e.ballot(i) & ctx.w).is_subset_of(u)) group.push_back(i);
        if (found(group)) {
          hit = true;
          return false;
        }
        return true;
      });
  return hit;
}

std::optional<ViolationWitness> check_pjrplus(const Context& ctx, Quota q) {
  require_small(ctx, "PJR+");
  for (int level = ctx.e.k(); level >= 1; --level) {
    for (int c = 0; c < ctx.e.m(); ++c) {
      if (ctx.w.test(c)) continue;
      std::optional<ViolationWitness> witness;
      scan_union_caps(
          ctx, level, [&](int i) { return ctx.e.ballot(i).test(c); },
          [&](std::vector<int>& group) {
            if (!group_clears_quota(q, static_cast<long long>(group.size()), level, ctx.e))
              return false;
            witness = make_witness(Axiom::PJRplus, q, level, {c}, std::move(group),
                                   "group collectively approves fewer than l committee members");
            return true;
          });
      if (witness) return witness;
    }
  }
  return std::nullopt;
}

std::optional<ViolationWitness> check_ejr(const Context& ctx, Quota q) {
  require_small(ctx, "EJR");
  for (int level = ctx.e.k(); level >= 1; --level) {
    std::optional<ViolationWitness> witness;
    detail::for_each_combination(ctx.e.m(), level, [&](const std::vector<int>& tset) {
      CandSet t = indices_to_set(ctx.e.m(), tset);
      std::vector<int> group;
      for (int i = 0; i < ctx.e.n(); ++i)
        if (ctx.sat[i] <= level - 1 && t.is_subset_of(ctx.e.ballot(i))) group.push_back(i);
      if (!group_clears_quota(q, static_cast<long long>(group.size()), level, ctx.e))
        return true;
      witness = make_witness(Axiom::EJR, q, level, tset, std::move(group),
                             "every group member has fewer than l committee members");
      return false;
    });
    if (witness) return witness;
  }
  return std::nullopt;
}

std::optional<ViolationWitness> check_pjr(const Context& ctx, Quota q) {
  require_small(ctx, "PJR");
  for (int level = ctx.e.k(); level >= 1; --level) {
    std::optional<ViolationWitness> witness;
    detail::for_each_combination(ctx.e.m(), level, [&](const std::vector<int>& tset) {
      CandSet t = indices_to_set(ctx.e.m(), tset);
      scan_union_caps(
          ctx, level, [&](int i) { return t.is_subset_of(ctx.e.ballot(i)); },
          [&](std::vector<int>& group) {
            if (!group_clears_quota(q, static_cast<long long>(group.size()), level, ctx.e))
              return false;
            witness = make_witness(Axiom::PJR, q, level, tset, std::move(group),
                                   "group collectively approves fewer than l committee members");
            return true;
          });
      return !witness;
    });
    if (witness) return witness;
  }
  return std::nullopt;
}

// FPJR / FJR share the weakly cohesive search: T ranges over subsets of the
// approved candidates with level <= |T| <= k, and the quota test scales with
// |T|. Restricting T to approved candidates mirrors the standard
// T := T cap (union of ballots) normalization and loses no violations.
std::optional<ViolationWitness> check_weak(const Context& ctx, Quota q, Axiom axiom) {
  require_small(ctx, axiom == Axiom::FPJR ? "FPJR" : "FJR");
  CandSet approved(ctx.e.m());
  for (int i = 0; i < ctx.e.n(); ++i) approved |= ctx.e.ballot(i);
  std::vector<int> pool = set_to_indices(approved);

  for (int level = ctx.e.k(); level >= 1; --level) {
    for (int t_size = level; t_size <= ctx.e.k() && t_size <= static_cast<int>(pool.size());
         ++t_size) {
      std::optional<ViolationWitness> witness;
      detail::for_each_combination(
          static_cast<int>(pool.size()), t_size, [&](const std::vector<int>& comb) {
            std::vector<int> tset;
            for (int j : comb) tset.push_back(pool[j]);
            CandSet t = indices_to_set(ctx.e.m(), tset);
            auto in_t = [&](int i) {
              return static_cast<int>((ctx.e.ballot(i) & t).count()) >= level;
            };
            if (axiom == Axiom::FJR) {
              std::vector<int> group;
              for (int i = 0; i < ctx.e.n(); ++i)
                if (ctx.sat[i] <= level - 1 && in_t(i)) group.push_back(i);
              if (!group_clears_quota(q, static_cast<long long>(group.size()), t_size, ctx.e))
                return true;
              witness = make_witness(Axiom::FJR, q, level, tset, std::move(group),
                                     "every group member has fewer than l committee members");
              return false;
            }
            scan_union_caps(ctx, level, in_t, [&](std::vector<int>& group) {
              if (!group_clears_quota(q, static_cast<long long>(group.size()), t_size, ctx.e))
                return false;
              witness = make_witness(Axiom::FPJR, q, level, tset, std::move(group),
                                     "group collectively approves fewer than l committee members");
              return true;
            });
            return !witness;
          });
      if (witness) return witness;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<ViolationWitness> check(const Election& e, const std::vector<int>& committee,
                                      Axiom axiom, Quota quota) {
  Context ctx = make_context(e, committee);
  switch (axiom) {
    case Axiom::JR: return check_jr(ctx, quota);
    case Axiom::PJR: return check_pjr(ctx, quota);
    case Axiom::EJR: return check_ejr(ctx, quota);
    case Axiom::PJRplus: return check_pjrplus(ctx, quota);
    case Axiom::EJRplus: return check_ejrplus(ctx, quota);
    case Axiom::FPJR: return check_weak(ctx, quota, Axiom::FPJR);
    case Axiom::FJR: return check_weak(ctx, quota, Axiom::FJR);
  }
  throw std::logic_error("check: unknown axiom");
}

bool witness_revalidates(const Election& e, const std::vector<int>& committee,
                         const ViolationWitness& w) {
  if (w.group.empty() || w.target.empty() || w.level < 1 || w.level > e.k()) return false;
  CandSet wset = indices_to_set(e.m(), committee);
  CandSet t = indices_to_set(e.m(), w.target);

  const bool weak_family = w.axiom == Axiom::FPJR || w.axiom == Axiom::FJR;
  const bool plus_family = w.axiom == Axiom::PJRplus || w.axiom == Axiom::EJRplus;
  const long long quota_factor = weak_family ? static_cast<long long>(w.target.size()) : w.level;
  if (!group_clears_quota(w.quota, static_cast<long long>(w.group.size()), quota_factor, e))
    return false;

  if (plus_family || w.axiom == Axiom::JR) {
    if (w.target.size() != 1) return false;
    if (plus_family && wset.test(w.target[0])) return false;
  }

  CandSet group_union(e.m());
  for (int i : w.group) {
    const CandSet& b = e.ballot(i);
    if (weak_family) {
      if (static_cast<int>((b & t).count()) < w.level) return false;
    } else {
      if (!t.is_subset_of(b)) return false;
    }
    group_union |= b;
  }
  if (!weak_family && !plus_family && w.axiom != Axiom::JR &&
      static_cast<int>(t.count()) != w.level)
    return false;

  switch (w.axiom) {
    case Axiom::JR:
      return (group_union & wset).none();
    case Axiom::PJR:
    case Axiom::PJRplus:
    case Axiom::FPJR:
      return static_cast<int>((group_union & wset).count()) < w.level;
    case Axiom::EJR:
    case Axiom::EJRplus:
    case Axiom::FJR:
      for (int i : w.group)
        if (static_cast<int>((e.ballot(i) & wset).count()) >= w.level) return false;
      return true;
  }
  return false;
}

CheckMatrix check_all(const Election& e, const std::vector<int>& committee) {
  CheckMatrix m;
  for (Axiom a : kAllAxioms)
    for (Quota q : {Quota::Hare, Quota::Droop})
      m.result[static_cast<int>(a)][q == Quota::Hare ? 0 : 1] = check(e, committee, a, q);

  auto passes = [&](Axiom a, Quota q) { return !m.at(a, q).has_value(); };
  // Logical-strength lattice; a fresh result violating it means a checker bug.
  const std::pair<Axiom, Axiom> implications[] = {
      {Axiom::FJR, Axiom::EJR},     {Axiom::FJR, Axiom::FPJR},
      {Axiom::EJRplus, Axiom::EJR}, {Axiom::PJRplus, Axiom::PJR},
      {Axiom::EJR, Axiom::PJR},     {Axiom::FPJR, Axiom::PJR},
      {Axiom::PJR, Axiom::JR}};
  for (Quota q : {Quota::Hare, Quota::Droop})
    for (const auto& [strong, weaker] : implications)
      if (passes(strong, q) && !passes(weaker, q))
        throw std::logic_error("check_all: implication lattice violated (" +
                               axiom_name(strong) + " => " + axiom_name(weaker) + ")");
  for (Axiom a : kAllAxioms)
    if (passes(a, Quota::Droop) && !passes(a, Quota::Hare))
      throw std::logic_error("check_all: Droop-" + axiom_name(a) +
                             " pass must imply the Hare pass");
  return m;
}

}  // namespace droopjr
