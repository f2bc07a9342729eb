#include "wmodal/interpolation.hpp"

#include <algorithm>

namespace wmodal {

namespace {

using F = Formula;
using R = RuleId;

enum class Side { Left, Right };

struct Split {
  std::vector<F> left, right;

  // Assigns one occurrence of `f`, preferring the left part.
  Side take(F f) {
    if (auto it = std::find(left.begin(), left.end(), f); it != left.end()) {
      left.erase(it);
      return Side::Left;
    }
    if (auto it = std::find(right.begin(), right.end(), f); it != right.end()) {
      right.erase(it);
      return Side::Right;
    }
    throw std::invalid_argument("partition does not cover the antecedent");
  }
};

std::vector<F> plus(std::vector<F> xs, std::initializer_list<F> more) {
  xs.insert(xs.end(), more.begin(), more.end());
  return xs;
}

class Extractor {
 public:
  F run(const Derivation& d, const Split& part) {
    Split ctx = part;
    std::vector<F> pa;
    std::vector<Side> side;
    for (std::size_t i : d.principal.ante) {
      F f = d.conclusion.antecedent().at(i);
      pa.push_back(f);
      side.push_back(ctx.take(f));
    }
    const bool left0 = !side.empty() && side[0] == Side::Left;
    auto sub = [&](std::size_t k, std::vector<F> l, std::vector<F> r) {
      return child(d, k, std::move(l), std::move(r));
    };
    // Unboxed principals split by side, skipping position `skip`.
    auto unboxed = [&](Side want, std::size_t skip = SIZE_MAX) {
      std::vector<F> out;
      for (std::size_t i = 0; i < pa.size(); ++i)
        if (i != skip && side[i] == want) out.push_back(pa[i].operand());
      return out;
    };

    switch (d.rule) {
      case R::IInit:
        return left0 ? pa[0] : F::top();
      case R::ILBot:
        return left0 ? F::bottom() : F::top();
      case R::ILAnd: {
        F a = pa[0].left(), b = pa[0].right();
        return left0 ? sub(0, plus(ctx.left, {a, b}), ctx.right)
                     : sub(0, ctx.left, plus(ctx.right, {a, b}));
      }
      case R::ILOr: {
        F a = pa[0].left(), b = pa[0].right();
        if (left0)
          return F::disj(sub(0, plus(ctx.left, {a}), ctx.right),
                         sub(1, plus(ctx.left, {b}), ctx.right));
        return F::conj(sub(0, ctx.left, plus(ctx.right, {a})),
                       sub(1, ctx.left, plus(ctx.right, {b})));
      }
      case R::ILImp: {
        F imp = pa[0], b = pa[0].right();
        if (left0) {
          // The left premise's succedent comes from the left part, so its
          // partition is read with the parts exchanged.
          F dd = sub(0, ctx.right, plus(ctx.left, {imp}));
          F e = sub(1, plus(ctx.left, {b}), ctx.right);
          return F::implies(dd, e);
        }
        F dd = sub(0, ctx.left, plus(ctx.right, {imp}));
        F e = sub(1, ctx.left, plus(ctx.right, {b}));
        return F::conj(dd, e);
      }
      case R::IRImp: {
        F a = d.conclusion.succedent().at(d.principal.succ.at(0)).left();
        return sub(0, part.left, plus(part.right, {a}));
      }
      case R::IRAnd:
        return F::conj(sub(0, part.left, part.right),
                       sub(1, part.left, part.right));
      case R::IROr:
      case R::ITDia:
        return sub(0, part.left, part.right);
      case R::ITBox: {
        F a = pa[0].operand();
        return left0 ? sub(0, plus(part.left, {a}), part.right)
                     : sub(0, part.left, plus(part.right, {a}));
      }
      case R::IMBox:
      case R::ID:
        return left0 ? F::box(sub(0, {pa[0].operand()}, {})) : F::top();
      case R::IMDia:
        return left0 ? F::dia(sub(0, {pa[0].operand()}, {})) : F::top();
      case R::IDualAndM:
      case R::IDBox: {
        bool l0 = side[0] == Side::Left, l1 = side[1] == Side::Left;
        if (l0 && l1) return F::bottom();
        if (!l0 && !l1) return F::top();
        F c = l0 ? sub(0, {pa[0].operand()}, {pa[1].operand()})
                 : sub(0, {pa[1].operand()}, {pa[0].operand()});
        // A ◇ on the left calls for ◇; otherwise the left principal is a □.
        F lp = l0 ? pa[0] : pa[1];
        return lp.is(Connective::Dia) ? F::dia(c) : F::box(c);
      }
      case R::INBox:
      case R::IPDia:
        return F::top();
      case R::INDia:
      case R::IPBox:
        return left0 ? F::bottom() : F::top();
      case R::ICBox:
      case R::IKBox:
      case R::ICD: {
        auto l = unboxed(Side::Left), r = unboxed(Side::Right);
        if (l.empty()) return F::top();
        return F::box(sub(0, l, r));
      }
      case R::ICDBox: {
        auto l = unboxed(Side::Left), r = unboxed(Side::Right);
        if (l.empty()) return F::top();
        if (r.empty()) return F::bottom();
        return F::box(sub(0, l, r));
      }
      case R::ICDia:
      case R::IKDia: {
        auto l = unboxed(Side::Left, 0), r = unboxed(Side::Right, 0);
        F a = pa[0].operand();
        if (left0) return F::dia(sub(0, plus(l, {a}), r));
        if (!l.empty()) return F::box(sub(0, l, plus(r, {a})));
        return F::top();
      }
      case R::IDualAndC:
      case R::IDualAndK: {
        std::size_t di = d.rule == R::IDualAndC ? 1 : 0;
        auto l = unboxed(Side::Left, di), r = unboxed(Side::Right, di);
        F b = pa[di].operand();
        if (side[di] == Side::Left) {
          if (r.empty()) return F::bottom();
          return F::dia(sub(0, plus(l, {b}), r));
        }
        if (l.empty()) return F::top();
        return F::box(sub(0, l, plus(r, {b})));
      }
      default:
        throw std::invalid_argument("interpolation needs a constructive proof");
    }
  }

 private:
  F child(const Derivation& d, std::size_t k, std::vector<F> l,
          std::vector<F> r) {
    const Derivation& c = d.children.at(k);
    std::vector<F> all = l;
    all.insert(all.end(), r.begin(), r.end());
    canonical_sort(all);
    if (all != c.conclusion.antecedent())
      throw std::logic_error("interpolation: premise split mismatch at " +
                             std::string(rule_name(d.rule)));
    return run(c, Split{std::move(l), std::move(r)});
  }
};

std::optional<std::pair<Derivation, Derivation>> certify(
    LogicId logic, const Partition& part, const Sequent& conclusion, F c,
    const ProverOptions& options) {
  Sequent ls(part.left, {c}, Mode::Constructive);
  std::vector<F> rs = part.right;
  rs.push_back(c);
  Sequent rseq(rs, conclusion.succedent(), Mode::Constructive);
  auto lp = prove(logic, ls, options);
  if (!lp.proved()) return std::nullopt;
  auto rp = prove(logic, rseq, options);
  if (!rp.proved()) return std::nullopt;
  return std::make_pair(std::move(*lp.derivation), std::move(*rp.derivation));
}

}  // namespace

Formula simplify_units(Formula f) {
  using C = Connective;
  const F top = F::top(), bot = F::bottom();
  switch (f.kind()) {
    case C::Atom:
    case C::Bottom:
      return f;
    case C::Box:
      return F::box(simplify_units(f.operand()));
    case C::Dia:
      return F::dia(simplify_units(f.operand()));
    default:
      break;
  }
  F a = simplify_units(f.left()), b = simplify_units(f.right());
  switch (f.kind()) {
    case C::And:
      if (a == top) return b;
      if (b == top) return a;
      if (a == bot || b == bot) return bot;
      return F::conj(a, b);
    case C::Or:
      if (a == bot) return b;
      if (b == bot) return a;
      if (a == top || b == top) return top;
      return F::disj(a, b);
    default:  // Imp
      if (a == top) return b;
      if (b == top || a == bot) return top;
      return F::implies(a, b);
  }
}

InterpolationResult interpolate_derivation(LogicId logic, const Derivation& d,
                                           const Partition& part,
                                           const InterpolationOptions& options) {
  if (!logic.constructive())
    throw std::invalid_argument("interpolation is defined for W-logics only");
  std::vector<F> all = part.left;
  all.insert(all.end(), part.right.begin(), part.right.end());
  canonical_sort(all);
  if (all != d.conclusion.antecedent())
    throw std::invalid_argument("partition does not match the antecedent");
  if (!check(logic, d))
    throw std::invalid_argument("derivation does not check in " + logic.name());

  F c = Extractor().run(d, Split{part.left, part.right});
  if (options.simplify) {
    F s = simplify_units(c);
    if (s != c) {
      if (auto certs = certify(logic, part, d.conclusion, s, options.prover))
        return {s, std::move(certs->first), std::move(certs->second)};
    }
  }
  auto certs = certify(logic, part, d.conclusion, c, options.prover);
  if (!certs)
    throw CertificateFailure("interpolant " + render(c) +
                             " failed to certify for " + render(d.conclusion));
  return {c, std::move(certs->first), std::move(certs->second)};
}

InterpolationResult craig(LogicId logic, Formula a, Formula b,
                          const InterpolationOptions& options) {
  if (!logic.constructive())
    throw std::invalid_argument("interpolation is defined for W-logics only");
  auto r = prove(logic, Sequent({a}, {b}, Mode::Constructive), options.prover);
  if (!r.proved())
    throw NotATheorem(render(F::implies(a, b)) + " is not a theorem of " +
                      logic.name());
  return interpolate_derivation(logic, *r.derivation, Partition{{a}, {}},
                                options);
}

}  // namespace wmodal
