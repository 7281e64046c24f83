#include "pencil/script.hpp"

#include <cstdlib>
#include <sstream>

#include "pencil/error.hpp"

namespace pencil {

void ProofContext::add(const std::string& name, const FreeWord& relator) {
  known_[name] = free_reduce(relator);
}

const FreeWord& ProofContext::get(const std::string& name) const {
  const auto it = known_.find(name);
  if (it == known_.end()) throw ReductionMismatch("relator '" + name + "' is not established");
  return it->second;
}

bool ProofContext::justifies(const std::string& name, const FreeWord& word) const {
  const FreeWord w = cyclic_reduce(word);
  if (w.empty()) return true;
  const FreeWord e = cyclic_reduce(get(name));
  return is_cyclic_rotation(w, e) || is_cyclic_rotation(w, cyclic_reduce(e.inverse()));
}

Rewrite::Rewrite(const ProofContext& ctx, FreeWord start, std::vector<std::string>* log,
                 std::vector<std::string> names)
    : ctx_(ctx), word_(cyclic_reduce(start)), log_(log), names_(std::move(names)) {
  note("start " + to_string(word_, names_));
}

void Rewrite::note(const std::string& what) {
  if (log_) log_->push_back("    " + what);
}

Rewrite& Rewrite::substitute(int x, const FreeWord& image, const std::string& by) {
  if (!ctx_.justifies(by, FreeWord::generator(-x) * image))
    throw ReductionMismatch("substitution " + to_string(FreeWord::generator(x), names_) + " -> " +
                            to_string(image, names_) + " does not follow from " + by);
  std::vector<FreeWord> images;
  for (int g = 1; g <= std::max(word_.max_generator(), x); ++g)
    images.push_back(g == x ? image : FreeWord::generator(g));
  word_ = cyclic_reduce(pencil::substitute(word_, images));
  note("subst " + to_string(FreeWord::generator(x), names_) + " -> " + to_string(image, names_) +
       " [" + by + "]: " + to_string(word_, names_));
  return *this;
}

Rewrite& Rewrite::replace(const FreeWord& s, const FreeWord& t, const std::string& by) {
  if (!ctx_.justifies(by, s.inverse() * t))
    throw ReductionMismatch("replacement " + to_string(s, names_) + " -> " + to_string(t, names_) +
                            " does not follow from " + by);
  int hits = 0;
  for (bool found = true; found && hits < 1000;) {
    found = false;
    const auto& l = word_.letters();
    const std::size_t n = l.size();
    for (std::size_t r = 0; r < n && !found; ++r) {
      std::vector<int> rot(l.begin() + static_cast<long>(r), l.end());
      rot.insert(rot.end(), l.begin(), l.begin() + static_cast<long>(r));
      const auto& sl = s.letters();
      if (sl.size() > rot.size()) break;
      for (std::size_t pos = 0; pos + sl.size() <= rot.size(); ++pos) {
        if (!std::equal(sl.begin(), sl.end(), rot.begin() + static_cast<long>(pos))) continue;
        std::vector<int> out(rot.begin(), rot.begin() + static_cast<long>(pos));
        out.insert(out.end(), t.letters().begin(), t.letters().end());
        out.insert(out.end(), rot.begin() + static_cast<long>(pos + sl.size()), rot.end());
        word_ = cyclic_reduce(FreeWord(std::move(out)));
        found = true;
        ++hits;
        break;
      }
    }
  }
  if (hits == 0)
    throw ReductionMismatch("subword " + to_string(s, names_) + " not found in " +
                            to_string(word_, names_));
  note("replace " + to_string(s, names_) + " -> " + to_string(t, names_) + " [" + by + "]: " +
       to_string(word_, names_));
  return *this;
}

void Rewrite::conclude_equals(const FreeWord& target) const {
  const FreeWord t = cyclic_reduce(target);
  if (!is_cyclic_rotation(word_, t) && !is_cyclic_rotation(word_, cyclic_reduce(t.inverse())))
    throw ReductionMismatch("reached " + to_string(word_, names_) + ", expected " +
                            to_string(t, names_));
}

void Rewrite::conclude_by(const std::string& name) const {
  if (word_.empty()) return;
  if (name.empty() || !ctx_.justifies(name, word_))
    throw ReductionMismatch("reached " + to_string(word_, names_) + ", which is not " +
                            (name.empty() ? std::string("trivial") : name));
}

bool trivial_in_affine_target(const FreeWord& word, int p, int q) {
  const int w = q + 1;
  struct Syllable {
    bool omega;
    std::vector<int> letters;  // free part, reduced
    int r;                     // omega exponent in 1..p-1
  };
  long long z = 0;
  std::vector<Syllable> st;
  auto push_free = [&](int l) {
    if (!st.empty() && !st.back().omega) {
      auto& v = st.back().letters;
      if (!v.empty() && v.back() == -l) {
        v.pop_back();
        if (v.empty()) st.pop_back();
      } else {
        v.push_back(l);
      }
    } else {
      st.push_back({false, {l}, 0});
    }
  };
  auto push_omega = [&](int e) {
    if (!st.empty() && st.back().omega) {
      int& r = st.back().r;
      r += e;
      if (r == p) {
        ++z;
        r = 0;
      }
      if (r == 0) st.pop_back();
    } else if (e > 0) {
      st.push_back({true, {}, 1});
    } else {
      --z;  // w^-1 = w^(p-1) z^-1
      st.push_back({true, {}, p - 1});
    }
  };
  for (int l : word.letters()) {
    const int g = std::abs(l);
    if (g < 1 || g > w) throw std::invalid_argument("trivial_in_affine_target: generator out of range");
    if (g == w) {
      push_omega(l > 0 ? 1 : -1);
    } else if (g < q) {
      push_free(l);
    } else if (l > 0) {  // g_q = (g_1...g_{q-1})^-1 w
      for (int k = q - 1; k >= 1; --k) push_free(-k);
      push_omega(1);
    } else {
      push_omega(-1);
      for (int k = 1; k <= q - 1; ++k) push_free(k);
    }
  }
  return st.empty() && z == 0;
}

namespace {

std::string ij(int i, int j) { return " i=" + std::to_string(i) + " j=" + std::to_string(j); }

}  // namespace

ScriptResult scripted_reduction(const RelationSet& symbolic, int p, int q) {
  if (symbolic.provenance != Provenance::Symbolic || symbolic.generator_count != p * q + 1)
    throw ReductionMismatch("input is not the symbolic relation set for this (p, q)");
  ScriptResult res;
  auto& log = res.log;
  const auto& names = symbolic.generator_names;
  const int W = p * q + 1;
  auto a = [q](int i, int j) { return FreeWord::generator(a_index(q, i, j)); };
  auto om = [W](int e) { return FreeWord::power(W, e); };
  auto h = [&](int i, int j) {
    FreeWord out;
    for (int k = 1; k < j; ++k) out *= a(i, k);
    return out;
  };
  auto g = [&](int i, int j) {
    FreeWord out;
    for (int k = j + 1; k <= q; ++k) out *= a(i, k);
    return out;
  };
  auto R = [&](int i, int j) { return commutator(a(i, j), om(p)); };
  auto Rname = [](int i, int j) { return "(R" + std::to_string(i) + ")" + ij(i, j); };
  auto cname = [](int i) { return "c" + std::to_string(i); };

  ProofContext ctx;
  for (const auto& r : symbolic.relators)
    if (!r.wrap_around) ctx.add(r.source, r.word);

  // omega = a_{i,1} ... a_{i,q} for every planet i.
  for (int i = 0; i <= p - 2; ++i) {
    const FreeWord target = om(-1) * h(i, q) * a(i, q);
    log.push_back(cname(i) + ": w = " + to_string(h(i, q) * a(i, q), names));
    Rewrite rw(ctx, target, &log, names);
    if (i == 0) {
      rw.conclude_by("(S)");
    } else {
      for (int k = 1; k <= q; ++k)
        rw.substitute(a_index(q, i, k), om(-(p - 1)) * a(i - 1, k) * om(p - 1), "(1-2)" + ij(i - 1, k));
      rw.conclude_by(cname(i - 1));
    }
    ctx.add(cname(i), target);
  }

  // [a_{i,j}, omega^p] = e by induction on j.
  for (int i = 0; i <= p - 2; ++i) {
    for (int j = 1; j <= q; ++j) {
      log.push_back(Rname(i, j) + ": " + to_string(R(i, j), names) + " = e");
      if (j < q) {
        Rewrite rw(ctx, ctx.get("(2-3)" + ij(i, j)), &log, names);
        for (int k = j; k <= q; ++k)
          if (rw.word().occurrences(a_index(q, i + 1, k)) > 0)
            rw.substitute(a_index(q, i + 1, k), om(-(p - 1)) * a(i, k) * om(p - 1), "(1-2)" + ij(i, k));
        rw.replace(a(i, j) * g(i, j), h(i, j).inverse() * om(1), cname(i));
        rw.replace(g(i, j).inverse(), om(-1) * h(i, j) * a(i, j), cname(i));
        for (int k = 1; k < j; ++k) {
          rw.replace(a(i, k).inverse() * om(-p) * a(i, k), om(-p), Rname(i, k));
          rw.replace(a(i, k).inverse() * om(p) * a(i, k), om(p), Rname(i, k));
        }
        rw.conclude_equals(R(i, j));
      } else {
        Rewrite rw(ctx, R(i, j), &log, names);
        rw.substitute(a_index(q, i, q), h(i, q).inverse() * om(1), cname(i));
        for (int k = 1; k < q; ++k) rw.replace(a(i, k).inverse() * om(p) * a(i, k), om(p), Rname(i, k));
        rw.conclude_by("");
      }
      ctx.add(Rname(i, j), R(i, j));
    }
  }
  for (int j = 1; j <= q; ++j) {
    const int i = p - 1;
    log.push_back(Rname(i, j) + ": " + to_string(R(i, j), names) + " = e");
    Rewrite rw(ctx, R(i, j), &log, names);
    rw.substitute(a_index(q, i, j), om(-(p - 1)) * a(i - 1, j) * om(p - 1), "(1-2)" + ij(i - 1, j));
    rw.conclude_by(Rname(i - 1, j));
    ctx.add(Rname(i, j), R(i, j));
  }

  // a_{i,j} = w a_{i-1,j} w^-1, then a_{i,j} = w^i a_{0,j} w^-i.
  auto Tname = [](int i, int j) { return "(T)" + ij(i, j); };
  auto Ename = [](int i, int j) { return "(5)" + ij(i, j); };
  for (int i = 1; i < p; ++i) {
    for (int j = 1; j <= q; ++j) {
      const FreeWord T = a(i, j).inverse() * om(1) * a(i - 1, j) * om(-1);
      log.push_back(Tname(i, j) + ": " + to_string(T, names) + " = e");
      Rewrite rw(ctx, T, &log, names);
      rw.substitute(a_index(q, i - 1, j), om(p - 1) * a(i, j) * om(-(p - 1)), "(1-2)" + ij(i - 1, j));
      rw.conclude_by(Rname(i, j));
      ctx.add(Tname(i, j), T);
    }
  }
  for (int i = 1; i < p; ++i) {
    for (int j = 1; j <= q; ++j) {
      const FreeWord E = a(i, j).inverse() * om(i) * a(0, j) * om(-i);
      log.push_back(Ename(i, j) + ": " + to_string(E, names) + " = e");
      Rewrite rw(ctx, E, &log, names);
      rw.substitute(a_index(q, i, j), om(1) * a(i - 1, j) * om(-1), Tname(i, j));
      rw.conclude_by(i == 1 ? std::string() : Ename(i - 1, j));
      ctx.add(Ename(i, j), E);
    }
  }

  // Tietze moves on the presentation without wrap-around relators.
  struct Labeled {
    std::string label;
    FreeWord word;
  };
  std::vector<Labeled> rels, wraps;
  for (const auto& r : symbolic.relators) (r.wrap_around ? wraps : rels).push_back({r.source, r.word});
  for (int j = 1; j <= q; ++j) {
    rels.push_back({Rname(0, j), R(0, j)});
    log.push_back("add " + Rname(0, j));
  }
  std::vector<FreeWord> images;
  for (int k = 1; k <= W; ++k) images.push_back(FreeWord::generator(k));
  for (int i = 1; i < p; ++i)
    for (int j = 1; j <= q; ++j) {
      images[static_cast<std::size_t>(a_index(q, i, j) - 1)] = om(i) * a(0, j) * om(-i);
      log.push_back("eliminate " + names[static_cast<std::size_t>(a_index(q, i, j) - 1)] + " by " +
                    Ename(i, j));
    }

  // a_{0,j} -> g_j, w -> g_{q+1}
  std::vector<FreeWord> rename(static_cast<std::size_t>(W));
  for (int j = 1; j <= q; ++j) rename[static_cast<std::size_t>(a_index(q, 0, j) - 1)] = FreeWord::generator(j);
  rename[static_cast<std::size_t>(W - 1)] = FreeWord::generator(q + 1);
  auto to_target = [&](const FreeWord& w) {
    const FreeWord e = substitute(w, images);
    for (int k = 1; k <= W; ++k) {
      const bool kept = k == W || (k - 1) / q == 0;
      if (!kept && e.occurrences(k) > 0) throw ReductionMismatch("elimination left " + to_string(e, names));
    }
    return substitute(e, rename);
  };

  Presentation out;
  out.provenance = Provenance::Symbolic;
  for (int j = 1; j <= q; ++j) out.generators.push_back("g" + std::to_string(j));
  out.generators.push_back("w");
  FreeWord s_word;
  std::vector<FreeWord> r0(static_cast<std::size_t>(q));
  for (const auto& r : rels) {
    const FreeWord t = to_target(r.word);
    if (r.label == "(S)") {
      s_word = t;
      continue;
    }
    bool is_r0 = false;
    for (int j = 1; j <= q; ++j)
      if (r.label == Rname(0, j)) {
        r0[static_cast<std::size_t>(j - 1)] = t;
        is_r0 = true;
      }
    if (is_r0) continue;
    if (!trivial_in_affine_target(t, p, q))
      throw ReductionMismatch(r.label + " does not follow from (S), (R0): " + to_string(t));
    log.push_back("drop " + r.label + (cyclic_reduce(t).empty() ? ": trivial after elimination"
                                                                 : ": consequence of (S), (R0)"));
  }
  for (const auto& wr : wraps) {
    const bool ok = trivial_in_affine_target(to_target(wr.word), p, q);
    res.wrap_checks.push_back({wr.label, ok});
    log.push_back("wrap-around " + wr.label + (ok ? ": redundant" : ": NOT implied by (S), (R0)"));
  }
  out.relators.push_back(s_word);
  for (auto& r : r0) out.relators.push_back(r);

  const Presentation expected = expected_affine(p, q);
  if (out.generators != expected.generators || out.relators != expected.relators)
    throw ReductionMismatch("final presentation differs from the target:\n" + out.to_text());
  log.push_back("result: " + std::to_string(q + 1) + " generators, relators (S), (R0) j=1.." +
                std::to_string(q));
  res.presentation = std::move(out);
  return res;
}

}  // namespace pencil
