#include "gcmonad/laws.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <thread>

namespace gcmonad {

namespace {

// ---------------------------------------------------------------------------
// Rendering of law inputs.

std::string show(const std::string& s) { return s; }
std::string show(const Gcm& m) { return to_text(m); }
std::string show(const Dist<Outcome>& d) { return to_text(d); }
std::string show(const Prob& p) { return p.str(); }
std::string show(const Rat& r) { return r.str(); }
std::string show(const Outcome& o) { return to_text(o); }
template <class K>
std::string show(const NECSet<K>& s) {
  return to_text(s);
}
std::string show(const FnTable& f) {
  std::string out = "[";
  for (const auto& [a, b] : f.table) {
    if (out.size() > 1) out += ", ";
    out += to_text(a) + " -> " + to_text(b);
  }
  return out + "]";
}
template <class V>
std::string show(const KleisliTable<V>& k) {
  std::string out = "[";
  for (const auto& [a, v] : k.table) {
    if (out.size() > 1) out += ", ";
    out += to_text(a) + " -> " + show(v);
  }
  return out + "]";
}
template <class T>
std::string show(const std::vector<T>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ", ";
    out += show(xs[i]);
  }
  return out + "]";
}

class Inputs {
 public:
  template <class T>
  Inputs& operator()(const char* name, const T& value) {
    if (!text_.empty()) text_ += "; ";
    text_ += name;
    text_ += " = ";
    text_ += show(value);
    return *this;
  }
  const std::string& str() const { return text_; }

 private:
  std::string text_;
};

template <class T>
std::optional<std::string> same(const T& lhs, const T& rhs, const Inputs& in) {
  if (lhs == rhs) return std::nullopt;
  return in.str() + "; lhs = " + show(lhs) + "; rhs = " + show(rhs);
}

std::optional<std::string> holds(bool ok, const Inputs& in, const std::string& what) {
  if (ok) return std::nullopt;
  return in.str() + "; " + what;
}

// First failing sub-check, if any.
std::optional<std::string> first_of(std::initializer_list<std::optional<std::string>> checks) {
  for (const auto& c : checks) {
    if (c) return c;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Instance helpers.

Gcm ret(const Outcome& a) { return ret_gcm(a); }

std::vector<Gcm> family(Gen& g, int max_size) {
  std::vector<Gcm> xs;
  const int n = g.uniform_int(1, max_size);
  for (int i = 0; i < n; ++i) xs.push_back(g.gcm());
  return xs;
}

// Convex set of convex sets, over a pool of at most carrier_size values.
NECSet<Gcm> gcm2(Gen& g) {
  std::vector<Gcm> pool = family(g, g.config().carrier_size);
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  return g.necset_over(pool);
}

NECSet<NECSet<Gcm>> gcm3(Gen& g) {
  std::vector<NECSet<Gcm>> pool;
  const int n = g.uniform_int(1, std::min(2, g.config().carrier_size));
  for (int i = 0; i < n; ++i) pool.push_back(gcm2(g));
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  return g.necset_over(pool);
}

std::vector<Dist<Outcome>> dist_list(Gen& g, int max_size) {
  std::vector<Dist<Outcome>> xs;
  const int n = g.uniform_int(1, max_size);
  for (int i = 0; i < n; ++i) xs.push_back(g.dist());
  return xs;
}

template <class T>
void shuffle(Gen& g, std::vector<T>& xs) {
  for (std::size_t i = xs.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(g.uniform_int(0, static_cast<int>(i) - 1));
    std::swap(xs[i - 1], xs[j]);
  }
}

template <class C>
std::optional<std::string> convn_permutes(Gen& g, const std::vector<C>& pts, const Inputs& base) {
  std::vector<std::size_t> idx(pts.size());
  std::iota(idx.begin(), idx.end(), 0);
  const Dist<std::size_t> w = g.dist_over(idx);
  std::vector<std::size_t> perm = idx;
  shuffle(g, perm);
  // Point i moves to slot perm[i]; its weight follows it.
  std::vector<C> moved(pts);
  for (std::size_t i = 0; i < pts.size(); ++i) moved[perm[i]] = pts[i];
  const Dist<std::size_t> w2 = map_dist([&](std::size_t i) { return perm[i]; }, w);
  const C lhs = convn(w, std::span<const C>(pts));
  const C rhs = convn(w2, std::span<const C>(moved));
  if (lhs == rhs) return std::nullopt;
  Inputs in = base;
  in("weights", to_text(w))("perm", to_text(w2));
  return in.str() + "; lhs = " + to_text(lhs) + "; rhs = " + to_text(rhs);
}

template <class C>
std::optional<std::string> convex_space_axioms(const Prob& p, const Prob& q, const C& a, const C& b, const C& c,
                                               const Inputs& in) {
  using I = ConvexInstance<C>;
  auto cmp = [&](const C& l, const C& r, const char* which) -> std::optional<std::string> {
    if (l == r) return std::nullopt;
    return in.str() + "; axiom " + which + ": lhs = " + to_text(l) + "; rhs = " + to_text(r);
  };
  return first_of({
      cmp(I::conv(Prob::one(), a, b), a, "conv1"),
      cmp(I::conv(p, a, a), a, "convmm"),
      cmp(I::conv(p, a, b), I::conv(p.complement(), b, a), "convC"),
      cmp(I::conv(p, a, I::conv(q, b, c)), I::conv(s_of(p, q), I::conv(r_of(p, q), a, b), c), "convA"),
  });
}

// ---------------------------------------------------------------------------
// The registry.

std::vector<LawCase> build_registry() {
  std::vector<LawCase> laws;
  auto add = [&](std::string name, std::string statement, LawChecker checker,
                 Expectation e = Expectation::Holds) {
    laws.push_back(LawCase{std::move(name), e, std::move(statement), std::move(checker)});
  };

  // Monad laws.
  add("bindretf", "ret a >>= k = k a", [](Gen& g) {
    const Outcome a = g.key();
    const auto k = g.kleisli();
    return same(bind_gcm(ret(a), k), k(a), Inputs()("a", a)("k", k));
  });
  add("bindmret", "m >>= ret = m", [](Gen& g) {
    const Gcm m = g.gcm();
    return same(bind_gcm(m, ret), m, Inputs()("m", m));
  });
  add("bindA", "(m >>= k) >>= h = m >>= (fun a => k a >>= h)", [](Gen& g) {
    const Gcm m = g.gcm();
    const auto k = g.kleisli();
    const auto h = g.kleisli();
    return same(bind_gcm(bind_gcm(m, k), h), bind_gcm(m, [&](const Outcome& a) { return bind_gcm(k(a), h); }),
                Inputs()("m", m)("k", k)("h", h));
  });
  add("fmap_id", "map id m = m", [](Gen& g) {
    const Gcm m = g.gcm();
    return same(map_gcm([](const Outcome& a) { return a; }, m), m, Inputs()("m", m));
  });
  add("fmap_comp", "map f (map g m) = map (f . g) m", [](Gen& g) {
    const Gcm m = g.gcm();
    const FnTable f = g.function();
    const FnTable h = g.function();
    return same(map_gcm(f, map_gcm(h, m)), map_gcm([&](const Outcome& a) { return f(h(a)); }, m),
                Inputs()("m", m)("f", f)("g", h));
  });
  add("join_ret", "join (ret m) = m", [](Gen& g) {
    const Gcm m = g.gcm();
    return same(join_gcm<Outcome>(ret_gcm(m)), m, Inputs()("m", m));
  });
  add("join_fmap_ret", "join (map ret m) = m", [](Gen& g) {
    const Gcm m = g.gcm();
    return same(join_gcm<Outcome>(map_gcm(ret, m)), m, Inputs()("m", m));
  });
  add("join_natural", "map f (join mm) = join (map (map f) mm)", [](Gen& g) {
    const NECSet<Gcm> mm = gcm2(g);
    const FnTable f = g.function();
    const Gcm lhs = map_gcm(f, join_gcm<Outcome>(mm));
    const Gcm rhs = join_gcm<Outcome>(map_gcm([&](const Gcm& x) { return map_gcm(f, x); }, mm));
    return same(lhs, rhs, Inputs()("mm", mm)("f", f));
  });
  add("joinA", "join . map join = join . join", [](Gen& g) {
    const NECSet<NECSet<Gcm>> mmm = gcm3(g);
    const Gcm lhs = join_gcm<Outcome>(map_gcm([](const NECSet<Gcm>& x) { return join_gcm<Outcome>(x); }, mmm));
    const Gcm rhs = join_gcm<Outcome>(join_gcm<Gcm>(mmm));
    return same(lhs, rhs, Inputs()("mmm", mmm));
  });
  add("bind_product", "join (map k m) = direct product-of-generators bind", [](Gen& g) {
    const Gcm m = g.gcm();
    const auto k = g.kleisli();
    return same(bind_gcm(m, k), bind_gcm_product(m, k), Inputs()("m", m)("k", k));
  });

  // Probabilistic choice.
  add("choice0", "a <|0|> b = b", [](Gen& g) {
    const Gcm a = g.gcm();
    const Gcm b = g.gcm();
    return same(choice_gcm(Prob::zero(), a, b), b, Inputs()("a", a)("b", b));
  });
  add("choice1", "a <|1|> b = a", [](Gen& g) {
    const Gcm a = g.gcm();
    const Gcm b = g.gcm();
    return same(choice_gcm(Prob::one(), a, b), a, Inputs()("a", a)("b", b));
  });
  add("choiceC", "a <|p|> b = b <|1-p|> a", [](Gen& g) {
    const Prob p = g.prob();
    const Gcm a = g.gcm();
    const Gcm b = g.gcm();
    return same(choice_gcm(p, a, b), choice_gcm(p.complement(), b, a), Inputs()("p", p)("a", a)("b", b));
  });
  add("choicemm", "a <|p|> a = a", [](Gen& g) {
    const Prob p = g.prob();
    const Gcm a = g.gcm();
    return same(choice_gcm(p, a, a), a, Inputs()("p", p)("a", a));
  });
  add("choiceA", "a <|p|> (b <|q|> c) = (a <|r_of p q|> b) <|s_of p q|> c", [](Gen& g) {
    const Prob p = g.prob();
    const Prob q = g.prob();
    const Gcm a = g.gcm();
    const Gcm b = g.gcm();
    const Gcm c = g.gcm();
    return same(choice_gcm(p, a, choice_gcm(q, b, c)), choice_gcm(s_of(p, q), choice_gcm(r_of(p, q), a, b), c),
                Inputs()("p", p)("q", q)("a", a)("b", b)("c", c));
  });
  add("prob_bindDl", "(m1 <|p|> m2) >>= k = (m1 >>= k) <|p|> (m2 >>= k)", [](Gen& g) {
    const Prob p = g.prob();
    const Gcm m1 = g.gcm();
    const Gcm m2 = g.gcm();
    const auto k = g.kleisli();
    return same(bind_gcm(choice_gcm(p, m1, m2), k), choice_gcm(p, bind_gcm(m1, k), bind_gcm(m2, k)),
                Inputs()("p", p)("m1", m1)("m2", m2)("k", k));
  });
  add("choice_nontrivial", "p != q implies bcoin p != bcoin q", [](Gen& g) {
    const Prob p = g.prob();
    Prob q = g.prob();
    while (q == p) q = g.prob();
    const Gcm t = ret_gcm(Outcome::boolean(true));
    const Gcm f = ret_gcm(Outcome::boolean(false));
    const Gcm lhs = choice_gcm(p, t, f);
    const Gcm rhs = choice_gcm(q, t, f);
    return holds(lhs != rhs, Inputs()("p", p)("q", q), "both render as " + show(lhs));
  });

  // Nondeterministic choice.
  add("altA", "x [~] (y [~] z) = (x [~] y) [~] z", [](Gen& g) {
    const Gcm x = g.gcm();
    const Gcm y = g.gcm();
    const Gcm z = g.gcm();
    return same(alt_gcm(x, alt_gcm(y, z)), alt_gcm(alt_gcm(x, y), z), Inputs()("x", x)("y", y)("z", z));
  });
  add("alt_bindDl", "(m1 [~] m2) >>= k = (m1 >>= k) [~] (m2 >>= k)", [](Gen& g) {
    const Gcm m1 = g.gcm();
    const Gcm m2 = g.gcm();
    const auto k = g.kleisli();
    return same(bind_gcm(alt_gcm(m1, m2), k), alt_gcm(bind_gcm(m1, k), bind_gcm(m2, k)),
                Inputs()("m1", m1)("m2", m2)("k", k));
  });
  add("altmm", "x [~] x = x", [](Gen& g) {
    const Gcm x = g.gcm();
    return same(alt_gcm(x, x), x, Inputs()("x", x));
  });
  add("altC", "x [~] y = y [~] x", [](Gen& g) {
    const Gcm x = g.gcm();
    const Gcm y = g.gcm();
    return same(alt_gcm(x, y), alt_gcm(y, x), Inputs()("x", x)("y", y));
  });
  add("choicealtDr", "x <|p|> (y [~] z) = (x <|p|> y) [~] (x <|p|> z)", [](Gen& g) {
    const Prob p = g.prob();
    const Gcm x = g.gcm();
    const Gcm y = g.gcm();
    const Gcm z = g.gcm();
    return same(choice_gcm(p, x, alt_gcm(y, z)), alt_gcm(choice_gcm(p, x, y), choice_gcm(p, x, z)),
                Inputs()("p", p)("x", x)("y", y)("z", z));
  });

  // Semilattice structure on convex sets.
  add("lub_singleton", "lub [X] = X", [](Gen& g) {
    const Gcm x = g.gcm();
    return same(lub_necset(std::vector<Gcm>{x}), x, Inputs()("X", x));
  });
  add("lub_collapse", "lub (f1 ++ ... ++ fn) = lub [lub f1, ..., lub fn]", [](Gen& g) {
    std::vector<std::vector<Gcm>> fams;
    const int n = g.uniform_int(1, 3);
    for (int i = 0; i < n; ++i) fams.push_back(family(g, 3));
    std::vector<Gcm> flat;
    std::vector<Gcm> lubs;
    for (const auto& f : fams) {
      flat.insert(flat.end(), f.begin(), f.end());
      lubs.push_back(lub_necset(f));
    }
    return same(lub_necset(flat), lub_necset(lubs), Inputs()("families", fams));
  });
  add("lub_conv_distr", "x <|p|> lub I = lub (map (x <|p|> .) I)", [](Gen& g) {
    const Prob p = g.prob();
    const Gcm x = g.gcm();
    const std::vector<Gcm> fam = family(g, 3);
    std::vector<Gcm> mixed;
    for (const auto& y : fam) mixed.push_back(conv_necset(p, x, y));
    return same(conv_necset(p, x, lub_necset(fam)), lub_necset(mixed), Inputs()("p", p)("x", x)("I", fam));
  });
  add("lub_op_hull", "lub (G ++ [convn d G]) = lub G", [](Gen& g) {
    const std::vector<Gcm> fam = family(g, 3);
    std::vector<std::size_t> idx(fam.size());
    std::iota(idx.begin(), idx.end(), 0);
    const Dist<std::size_t> d = g.dist_over(idx);
    std::vector<Gcm> extended = fam;
    extended.push_back(convn(d, std::span<const Gcm>(fam)));
    return same(lub_necset(extended), lub_necset(fam), Inputs()("G", fam)("d", to_text(d)));
  });
  add("lub_fold_alt", "lub [X1, ..., Xn] = X1 [~] ... [~] Xn", [](Gen& g) {
    const std::vector<Gcm> fam = family(g, 4);
    Gcm acc = fam.front();
    for (std::size_t i = 1; i < fam.size(); ++i) acc = alt_necset(acc, fam[i]);
    return same(lub_necset(fam), acc, Inputs()("family", fam));
  });
  add("necset_convex", "x, y in X implies x <|p|> y in X", [](Gen& g) {
    const Gcm x = g.gcm();
    const Prob p = g.prob();
    const Dist<Outcome> a = g.member_of(x);
    const Dist<Outcome> b = g.member_of(x);
    const Inputs in = Inputs()("X", x)("p", p)("x", a)("y", b);
    return first_of({holds(member(a, x) && member(b, x), in, "sampled member rejected"),
                     holds(member(conv_dist(p, a, b), x), in, "mixture not a member")});
  });
  add("necset_extensional", "canonical forms equal iff mutual generator membership", [](Gen& g) {
    const Gcm x = g.gcm();
    Gcm y = g.gcm();
    if (g.uniform_int(0, 1) == 0) {
      // Same set reached through redundant generators.
      std::vector<Dist<Outcome>> gens = x.generators();
      for (int i = g.uniform_int(1, 3); i > 0; --i) gens.push_back(g.member_of(x));
      shuffle(g, gens);
      y = Gcm::from_generators(std::move(gens));
    }
    auto covers = [](const Gcm& outer, const Gcm& inner) {
      return std::all_of(inner.generators().begin(), inner.generators().end(),
                         [&](const Dist<Outcome>& d) { return member(d, outer); });
    };
    const bool extensional = covers(x, y) && covers(y, x);
    return holds((x == y) == extensional, Inputs()("X", x)("Y", y),
                 std::string("structural ") + (x == y ? "equal" : "different") + " but extensional " +
                     (extensional ? "equal" : "different"));
  });

  // Distributions and convex geometry.
  add("rat_convex_space", "convex-space axioms for rational averaging", [](Gen& g) {
    const Prob p = g.prob();
    const Prob q = g.prob();
    auto r = [&] { return Rat(g.uniform_int(-20, 20), g.uniform_int(1, g.config().max_denominator)); };
    const Rat a = r(), b = r(), c = r();
    return convex_space_axioms(p, q, a, b, c, Inputs()("p", p)("q", q)("a", a)("b", b)("c", c));
  });
  add("dist_convex_space", "convex-space axioms for distributions", [](Gen& g) {
    const Prob p = g.prob();
    const Prob q = g.prob();
    const Dist<Outcome> a = g.dist(), b = g.dist(), c = g.dist();
    return convex_space_axioms(p, q, a, b, c, Inputs()("p", p)("q", q)("a", a)("b", b)("c", c));
  });
  add("necset_convex_space", "convex-space axioms for convex sets", [](Gen& g) {
    const Prob p = g.prob();
    const Prob q = g.prob();
    const Gcm a = g.gcm(), b = g.gcm(), c = g.gcm();
    return convex_space_axioms(p, q, a, b, c, Inputs()("p", p)("q", q)("a", a)("b", b)("c", c));
  });
  add("dist_monad", "monad laws for distributions", [](Gen& g) {
    const Outcome a = g.key();
    const Dist<Outcome> d = g.dist();
    const auto k = g.dist_kleisli();
    const auto h = g.dist_kleisli();
    auto pt = [](const Outcome& x) { return Dist<Outcome>::point(x); };
    const Inputs in = Inputs()("a", a)("d", d)("k", k)("h", h);
    return first_of({
        same(bind_dist(pt(a), k), k(a), in),
        same(bind_dist(d, pt), d, in),
        same(bind_dist(bind_dist(d, k), h), bind_dist(d, [&](const Outcome& x) { return bind_dist(k(x), h); }), in),
    });
  });
  add("dist_bind_conv", "(d1 <|p|> d2) >>= k = (d1 >>= k) <|p|> (d2 >>= k)", [](Gen& g) {
    const Prob p = g.prob();
    const Dist<Outcome> d1 = g.dist(), d2 = g.dist();
    const auto k = g.dist_kleisli();
    return same(bind_dist(conv_dist(p, d1, d2), k), conv_dist(p, bind_dist(d1, k), bind_dist(d2, k)),
                Inputs()("p", p)("d1", d1)("d2", d2)("k", k));
  });
  add("map_dist_affine", "map f (d1 <|p|> d2) = map f d1 <|p|> map f d2", [](Gen& g) {
    const Prob p = g.prob();
    const Dist<Outcome> d1 = g.dist(), d2 = g.dist();
    const FnTable f = g.function();
    return same(map_dist(f, conv_dist(p, d1, d2)), conv_dist(p, map_dist(f, d1), map_dist(f, d2)),
                Inputs()("p", p)("d1", d1)("d2", d2)("f", f));
  });
  add("dist_total_order", "compare_dist is a total order", [](Gen& g) {
    const Dist<Outcome> a = g.dist(), b = g.dist(), c = g.dist();
    const Inputs in = Inputs()("a", a)("b", b)("c", c);
    const auto ab = compare_dist(a, b);
    const auto ba = compare_dist(b, a);
    const bool antisym = (ab < 0) == (ba > 0) && (ab == 0) == (ba == 0) && (ab == 0) == (a == b);
    const bool trans = !(a <= b && b <= c) || a <= c;
    const bool trans2 = !(c <= b && b <= a) || c <= a;
    return holds(antisym && trans && trans2, in, "order axiom violated");
  });
  add("flatten_point", "barycenter (map point d) = d", [](Gen& g) {
    const Dist<Outcome> d = g.dist();
    return same(barycenter(map_dist([](const Outcome& x) { return Dist<Outcome>::point(x); }, d)), d,
                Inputs()("d", d));
  });
  add("barycenter_bind", "barycenter (map k d) = d >>= k", [](Gen& g) {
    const Dist<Outcome> d = g.dist();
    const auto k = g.dist_kleisli();
    return same(barycenter(map_dist(k, d)), bind_dist(d, k), Inputs()("d", d)("k", k));
  });
  add("convn_permutation", "convn is invariant under permuting weights with points", [](Gen& g) {
    const int n = g.uniform_int(1, 4);
    std::vector<Rat> rats;
    std::vector<Dist<Outcome>> dists;
    std::vector<Gcm> sets;
    for (int i = 0; i < n; ++i) {
      rats.emplace_back(g.uniform_int(-20, 20), g.uniform_int(1, g.config().max_denominator));
      dists.push_back(g.dist());
      sets.push_back(g.gcm());
    }
    return first_of({convn_permutes(g, rats, Inputs()("points", rats)),
                     convn_permutes(g, dists, Inputs()("points", dists)),
                     convn_permutes(g, sets, Inputs()("points", sets))});
  });
  add("canonicalize_idempotent", "canonicalize (canonicalize G) = canonicalize G", [](Gen& g) {
    const auto gens = dist_list(g, 2 * g.config().max_generators);
    const auto once = canonicalize(gens);
    return holds(canonicalize(once) == once, Inputs()("G", gens), "second pass changed " + show(once));
  });
  add("hull_preservation", "x in hull G iff x in hull (canonicalize G)", [](Gen& g) {
    const auto gens = dist_list(g, 2 * g.config().max_generators);
    const Dist<Outcome> x = g.uniform_int(0, 1) == 0 ? g.dist() : g.member_of(Gcm::from_generators(gens));
    const auto canon = canonicalize(gens);
    const bool lhs = in_hull(x, gens);
    return holds(lhs == in_hull(x, canon), Inputs()("x", x)("G", gens), lhs ? "lost member" : "gained member");
  });
  add("removal_order", "canonicalize ignores generator order", [](Gen& g) {
    const auto gens = dist_list(g, 2 * g.config().max_generators);
    auto shuffled = gens;
    shuffle(g, shuffled);
    const auto a = canonicalize(gens);
    const auto b = canonicalize(shuffled);
    return holds(a == b, Inputs()("G", gens)("shuffled", shuffled), show(a) + " vs " + show(b));
  });
  add("affine_image_hull", "canonicalize (f G) = canonicalize (f (canonicalize G))", [](Gen& g) {
    const auto gens = dist_list(g, 2 * g.config().max_generators);
    const FnTable f = g.function();
    auto image = [&](const std::vector<Dist<Outcome>>& xs) {
      std::vector<Dist<Outcome>> out;
      for (const auto& d : xs) out.push_back(map_dist(f, d));
      return canonicalize(out);
    };
    const auto a = image(gens);
    const auto b = image(canonicalize(gens));
    return holds(a == b, Inputs()("G", gens)("f", f), show(a) + " vs " + show(b));
  });

  // Negative controls: both must be refuted.
  add("neg_bindDr_alt", "m >>= (fun x => k1 x [~] k2 x) = (m >>= k1) [~] (m >>= k2)", [](Gen& g) {
    const Gcm m = g.gcm();
    const auto k1 = g.kleisli();
    const auto k2 = g.kleisli();
    return same(bind_gcm(m, [&](const Outcome& x) { return alt_gcm(k1(x), k2(x)); }),
                alt_gcm(bind_gcm(m, k1), bind_gcm(m, k2)), Inputs()("m", m)("k1", k1)("k2", k2));
  }, Expectation::Refuted);
  add("neg_bindDr_choice", "m >>= (fun x => k1 x <|p|> k2 x) = (m >>= k1) <|p|> (m >>= k2)", [](Gen& g) {
    const Prob p = g.prob();
    const Gcm m = g.gcm();
    const auto k1 = g.kleisli();
    const auto k2 = g.kleisli();
    return same(bind_gcm(m, [&](const Outcome& x) { return choice_gcm(p, k1(x), k2(x)); }),
                choice_gcm(p, bind_gcm(m, k1), bind_gcm(m, k2)), Inputs()("p", p)("m", m)("k1", k1)("k2", k2));
  }, Expectation::Refuted);

  return laws;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Runs fn(0..n-1) on a small pool of threads.
template <class Fn>
void parallel_for(int n, Fn&& fn) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const int workers = std::min<int>(n, static_cast<int>(hw));
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next++; i < n; i = next++) fn(i);
  };
  std::vector<std::jthread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
}

}  // namespace

const std::vector<LawCase>& law_registry() {
  static const std::vector<LawCase> laws = build_registry();
  return laws;
}

const LawCase& find_law(const std::string& name) {
  for (const auto& law : law_registry()) {
    if (law.name == name) return law;
  }
  throw LawError("unknown law: " + name);
}

std::uint64_t trial_seed(std::uint64_t seed, const std::string& law, int trial) {
  return splitmix64(splitmix64(seed ^ fnv1a(law)) + static_cast<std::uint64_t>(trial));
}

std::optional<std::string> check_trial(const LawCase& law, const GenConfig& config, int trial) {
  Gen gen(config, trial_seed(config.seed, law.name, trial));
  return law.checker(gen);
}

std::optional<std::string> check_trial(const std::string& name, const GenConfig& config, int trial) {
  return check_trial(find_law(name), config, trial);
}

LawReport check_law(const LawCase& law, const GenConfig& config) {
  config.validate();
  std::vector<std::optional<std::string>> results(static_cast<std::size_t>(config.trials));
  parallel_for(config.trials, [&](int i) { results[static_cast<std::size_t>(i)] = check_trial(law, config, i); });
  LawReport report{law.name, law.expected, config.trials, config.seed, {}};
  for (int i = 0; i < config.trials; ++i) {
    if (auto& r = results[static_cast<std::size_t>(i)]) report.failures.emplace_back(i, std::move(*r));
  }
  return report;
}

LawReport check_law(const std::string& name, const GenConfig& config) { return check_law(find_law(name), config); }

std::vector<LawReport> check_all(const GenConfig& config) {
  std::vector<LawReport> reports;
  for (const auto& law : law_registry()) reports.push_back(check_law(law, config));
  return reports;
}

bool all_passed(std::span<const LawReport> reports) {
  return std::all_of(reports.begin(), reports.end(), [](const LawReport& r) { return r.passed(); });
}

std::string render_report(const LawReport& r, std::size_t max_shown) {
  std::ostringstream os;
  os << (r.passed() ? "PASS" : "FAIL") << ' ' << r.name << " (" << r.trials << " trials, " << r.failures.size()
     << " counterexamples" << (r.expected == Expectation::Refuted ? ", negative control" : "") << ")\n";
  const std::size_t shown = std::min(max_shown, r.failures.size());
  for (std::size_t i = 0; i < shown; ++i) {
    os << "    trial " << r.failures[i].first << ": " << r.failures[i].second << '\n';
  }
  if (shown < r.failures.size()) os << "    ... " << (r.failures.size() - shown) << " more\n";
  return os.str();
}

std::string render_reports(std::span<const LawReport> reports, std::size_t max_shown) {
  std::string out;
  for (const auto& r : reports) out += render_report(r, max_shown);
  return out;
}

}  // namespace gcmonad
