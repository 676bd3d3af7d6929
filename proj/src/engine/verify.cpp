#include "klr/engine/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>

#include "klr/error.hpp"
#include "klr/pdseq.hpp"
#include "klr/permutation.hpp"

namespace klr::engine {

namespace {

void push_x(std::vector<Letter>& out, int k, int power) {
  for (int r = 0; r < power; ++r) out.push_back(Letter::x(k));
}

// tau_from tau_{from+1} ... tau_to, 0-based; empty when to < from.
void push_tau_run(std::vector<Letter>& out, int from, int to) {
  for (int l = from; l <= to; ++l) out.push_back(Letter::tau(l));
}

std::vector<Letter> concat(std::initializer_list<const std::vector<Letter>*> parts) {
  std::vector<Letter> out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

// A random element of the subalgebra on strands [lo, hi): tau_w x^e with w
// permuting only those strands.
std::vector<Letter> random_local_word(int lo, int hi, std::mt19937_64& rng) {
  std::vector<Letter> out;
  const int m = hi - lo;
  if (m <= 0) return out;
  std::vector<int> images(static_cast<std::size_t>(m));
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  for (int s : Permutation(images).canonical_word()) out.push_back(Letter::tau(lo + s));
  std::uniform_int_distribution<int> exp(0, 1);
  for (int k = lo; k < hi; ++k) push_x(out, k, exp(rng));
  return out;
}

Int lambda_at(const CartanDatum& datum, const DominantWeight& lambda, const Sequence& nu, int c, int residue) {
  RootVector prefix = RootVector::zero(datum.rank());
  for (int j = 0; j < c; ++j) prefix.coeffs[static_cast<std::size_t>(nu[static_cast<std::size_t>(j)])] += 1;
  return pairing(datum, static_cast<std::size_t>(residue), lambda, prefix);
}

}  // namespace

SpanMode parse_span_mode(const std::string& text) {
  if (text == "generator") return SpanMode::Generator;
  if (text == "principle3") return SpanMode::Principle3;
  if (text == "principle1") return SpanMode::Principle1;
  if (text == "principle2") return SpanMode::Principle2;
  throw UsageError("unknown verification mode '" + text +
                   "' (expected generator, principle1, principle2 or principle3)");
}

std::string to_string(SpanMode mode) {
  switch (mode) {
    case SpanMode::Generator: return "generator";
    case SpanMode::Principle3: return "principle3";
    case SpanMode::Principle1: return "principle1";
    case SpanMode::Principle2: return "principle2";
  }
  return "";
}

nlohmann::json SpanReport::to_json() const {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : components) comps.push_back({{"degree", c.degree}, {"rank", c.rank}, {"dim", c.dim}});
  return {{"mode", to_string(mode)}, {"characteristic", characteristic}, {"hypothesis_met", hypothesis_met},
          {"family_size", family_size}, {"components", comps}, {"passed", passed}};
}

bool RelationsReport::passed() const {
  for (const auto& [claim, tally] : claims)
    if (tally.failed != 0) return false;
  return true;
}

bool RelationsReport::passed(const std::string& claim) const {
  auto it = claims.find(claim);
  return it == claims.end() || it->second.failed == 0;
}

nlohmann::json RelationsReport::to_json(const CartanDatum& datum) const {
  nlohmann::json tallies = nlohmann::json::object();
  for (const auto& [claim, t] : claims) tallies[claim] = {{"checked", t.checked}, {"failed", t.failed}};
  nlohmann::json fails = nlohmann::json::array();
  for (const auto& f : failures)
    fails.push_back({{"claim", f.claim}, {"nu", klr::to_json(datum, f.nu)}, {"blocks", f.blocks}, {"t", f.t}, {"k", f.k}});
  return {{"characteristic", characteristic}, {"claims", tallies}, {"passed", passed()}, {"failures", fails}};
}

void PropertyTally::record(bool ok, const std::string& what) {
  ++checked;
  if (ok) return;
  if (failed++ < 8) failures.push_back(what);
}

nlohmann::json PropertyTally::to_json() const {
  return {{"checked", checked}, {"failed", failed}, {"failures", failures}};
}

PropertyTally check_defining_relations(KlrAlgebra& A) {
  PropertyTally tally;
  const int n = A.strands();
  const auto& seqs = A.sequences();
  const auto& datum = A.datum();
  auto ev = [&](std::initializer_list<Letter> letters, int nu) { return A.evaluate(letters, nu); };
  auto label = [&](const std::string& rel, int nu) { return rel + " at nu=" + format_sequence(datum, seqs[static_cast<std::size_t>(nu)]); };

  Element sum;
  for (std::size_t a = 0; a < seqs.size(); ++a) {
    const int nu = static_cast<int>(a);
    sum += A.idempotent(nu);
    for (std::size_t b = 0; b < seqs.size(); ++b) {
      const Element prod = A.multiply(A.idempotent(nu), A.idempotent(static_cast<int>(b)));
      tally.record(prod == (a == b ? A.idempotent(nu) : Element{}), label("e(nu)e(nu')", nu));
    }
    for (int k = 0; k < n; ++k) {
      tally.record(A.multiply(A.x(k, nu), A.idempotent(nu)) == A.multiply(A.idempotent(nu), A.x(k, nu)),
                   label("x_k e = e x_k", nu));
      for (int l = 0; l < n; ++l)
        tally.record(ev({Letter::x(k), Letter::x(l)}, nu) == ev({Letter::x(l), Letter::x(k)}, nu),
                     label("x_k x_l = x_l x_k", nu));
    }
    for (int k = 0; k + 1 < n; ++k) {
      const Sequence& v = seqs[a];
      const auto i = static_cast<std::size_t>(v[static_cast<std::size_t>(k)]);
      const auto j = static_cast<std::size_t>(v[static_cast<std::size_t>(k) + 1]);
      const int snu = A.act(A.perm_index(Permutation::simple(n, k)), nu);
      tally.record(A.multiply(A.idempotent(snu), A.tau(k, nu)) == A.tau(k, nu), label("tau_k e(nu) = e(s_k nu) tau_k", nu));
      for (int l = 0; l + 1 < n; ++l)
        if (std::abs(k - l) > 1)
          tally.record(ev({Letter::tau(k), Letter::tau(l)}, nu) == ev({Letter::tau(l), Letter::tau(k)}, nu),
                       label("tau_k tau_l = tau_l tau_k", nu));

      Element q;
      for (const auto& term : A.qchoice().poly(i, j)) {
        std::vector<Letter> w;
        push_x(w, k, term.p);
        push_x(w, k + 1, term.q);
        q.add(A.evaluate(w, nu), term.coeff);
      }
      tally.record(ev({Letter::tau(k), Letter::tau(k)}, nu) == q, label("tau_k^2 e = Q(x_k, x_k+1) e", nu));

      for (int l = 0; l < n; ++l) {
        const int sl = l == k ? k + 1 : (l == k + 1 ? k : l);
        const Element lhs = ev({Letter::tau(k), Letter::x(l)}, nu) - ev({Letter::x(sl), Letter::tau(k)}, nu);
        Element rhs;
        if (i == j && l == k) rhs = Rational(-1) * A.idempotent(nu);
        if (i == j && l == k + 1) rhs = A.idempotent(nu);
        tally.record(lhs == rhs, label("tau_k x_l - x_s(l) tau_k", nu));
      }

      if (k + 2 < n) {
        const auto i3 = static_cast<std::size_t>(v[static_cast<std::size_t>(k) + 2]);
        const Element lhs = ev({Letter::tau(k + 1), Letter::tau(k), Letter::tau(k + 1)}, nu) -
                            ev({Letter::tau(k), Letter::tau(k + 1), Letter::tau(k)}, nu);
        Element rhs;
        if (i == i3) {
          // (Q(u,v) - Q(w,v)) / (u - w) termwise: (u^p - w^p)/(u - w) = sum_{a+b=p-1} u^a w^b.
          for (const auto& term : A.qchoice().poly(i, j))
            for (int e = 0; e < term.p; ++e) {
              std::vector<Letter> w;
              push_x(w, k, e);
              push_x(w, k + 2, term.p - 1 - e);
              push_x(w, k + 1, term.q);
              rhs.add(A.evaluate(w, nu), term.coeff);
            }
        }
        tally.record(lhs == rhs, label("braid relation", nu));
      }
    }
  }
  tally.record(sum == A.one(), "sum of idempotents is 1");
  return tally;
}

PropertyTally check_associativity(KlrAlgebra& A, int triples, std::uint64_t seed) {
  PropertyTally tally;
  std::mt19937_64 rng(seed);
  const int n = A.strands();
  std::uniform_int_distribution<std::size_t> pick_perm(0, A.perms().size() - 1);
  std::uniform_int_distribution<std::size_t> pick_seq(0, A.sequences().size() - 1);
  std::uniform_int_distribution<int> pick_exp(0, 2);
  auto random_mono = [&](int right_nu) {
    Mono m;
    m.perm = static_cast<std::uint16_t>(pick_perm(rng));
    m.nu = static_cast<std::uint16_t>(right_nu);
    for (int k = 0; k < n; ++k) m.x[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(pick_exp(rng));
    return m;
  };
  for (int t = 0; t < triples; ++t) {
    const Mono c = random_mono(static_cast<int>(pick_seq(rng)));
    const Mono b = random_mono(A.left_idempotent(c));
    const Mono a = random_mono(A.left_idempotent(b));
    Element ea, eb, ec;
    ea.add(a, 1);
    eb.add(b, 1);
    ec.add(c, 1);
    const bool ok = A.multiply(A.multiply(ea, eb), ec) == A.multiply(ea, A.multiply(eb, ec));
    tally.record(ok, "triple " + std::to_string(t));
  }
  return tally;
}

std::vector<std::vector<int>> equal_residue_compositions(const Sequence& nu) {
  const int n = static_cast<int>(nu.size());
  if (n == 0) return {{}};
  std::vector<int> optional_cuts;
  for (int j = 1; j < n; ++j)
    if (nu[static_cast<std::size_t>(j - 1)] == nu[static_cast<std::size_t>(j)]) optional_cuts.push_back(j);
  std::vector<std::vector<int>> out;
  const std::size_t m = optional_cuts.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<int> blocks;
    int start = 0;
    std::size_t oc = 0;
    for (int j = 1; j < n; ++j) {
      bool cut = nu[static_cast<std::size_t>(j - 1)] != nu[static_cast<std::size_t>(j)];
      if (!cut) cut = (mask >> oc++) & 1U;
      if (cut) {
        blocks.push_back(j - start);
        start = j;
      }
    }
    blocks.push_back(n - start);
    out.push_back(std::move(blocks));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Element z_element(KlrAlgebra& algebra, const DominantWeight& lambda, const Sequence& nu) {
  const auto z = z_monomial(algebra.datum(), lambda, nu);
  std::vector<Letter> letters;
  for (std::size_t k = 0; k < z.exponents.size(); ++k) push_x(letters, static_cast<int>(k), z.exponents[k]);
  return algebra.evaluate(letters, algebra.sequence_index(nu));
}

Element s_element(KlrAlgebra& algebra, const DominantWeight& lambda, const Sequence& nu) {
  const auto s = s_word(algebra.datum(), lambda, nu);
  std::vector<Letter> letters;
  for (int l : s.tau_word) letters.push_back(Letter::tau(l - 1));
  for (std::size_t k = 0; k < s.exponents.size(); ++k) push_x(letters, static_cast<int>(k), s.exponents[k]);
  return algebra.evaluate(letters, algebra.sequence_index(nu));
}

std::vector<Element> generator_family(KlrAlgebra& algebra, const DominantWeight& lambda, const Sequence& nu) {
  const auto& datum = algebra.datum();
  const int nu_index = algebra.sequence_index(nu);
  std::vector<Element> out;
  for (const auto& blocks : equal_residue_compositions(nu)) {
    std::vector<int> cuts{0};
    for (int b : blocks) cuts.push_back(cuts.back() + b);
    std::vector<int> bounds;
    bool admissible = true;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      const Int l = lambda_at(datum, lambda, nu, cuts[i], nu[static_cast<std::size_t>(cuts[i])]);
      if (l <= 0) {
        admissible = false;
        break;
      }
      bounds.push_back(to_int(l));
    }
    if (!admissible) continue;
    std::vector<int> powers(blocks.size(), 0);
    while (true) {
      std::vector<Letter> letters;
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        push_x(letters, cuts[i], powers[i]);
        push_tau_run(letters, cuts[i], cuts[i + 1] - 2);
      }
      out.push_back(algebra.evaluate(letters, nu_index));
      std::size_t i = 0;
      while (i < powers.size() && ++powers[i] == bounds[i]) powers[i++] = 0;
      if (i == powers.size()) break;
    }
  }
  return out;
}

template <class Field>
SpanReport verify_spanning(const Cocenter<Field>& cocenter, SpanMode mode) {
  const auto& q = cocenter.quotient();
  KlrAlgebra& A = q.algebra();
  const auto& datum = A.datum();
  const auto& lambda = q.lambda();
  SpanReport report;
  report.mode = mode;
  report.characteristic = q.field().characteristic();
  report.hypothesis_met = mode == SpanMode::Generator || report.characteristic == 0;

  std::vector<Element> family;
  const auto pd = enumerate_pd(datum, lambda, A.beta());
  switch (mode) {
    case SpanMode::Generator:
      for (const auto& nu : A.sequences()) {
        auto part = generator_family(A, lambda, nu);
        family.insert(family.end(), part.begin(), part.end());
      }
      break;
    case SpanMode::Principle3:
      for (const auto& nu : pd) {
        const auto dec = run_decompose(datum, lambda, nu);
        std::vector<int> bound(nu.size());
        for (std::size_t i = 0; i < dec.runs.size(); ++i)
          for (int j = dec.cuts[i]; j < dec.cuts[i + 1]; ++j) bound[static_cast<std::size_t>(j)] = to_int(dec.ells[i]);
        std::vector<int> t(nu.size(), 0);
        while (true) {
          std::vector<Letter> letters;
          for (std::size_t k = 0; k < t.size(); ++k) push_x(letters, static_cast<int>(k), t[k]);
          family.push_back(A.evaluate(letters, A.sequence_index(nu)));
          std::size_t k = 0;
          while (k < t.size() && ++t[k] >= bound[k]) t[k++] = 0;
          if (k == t.size()) break;
        }
      }
      break;
    case SpanMode::Principle1:
      for (const auto& nu : pd) family.push_back(z_element(A, lambda, nu));
      break;
    case SpanMode::Principle2:
      for (const auto& nu : pd) family.push_back(A.idempotent(A.sequence_index(nu)));
      break;
  }
  report.family_size = family.size();

  std::map<int, typename Field::Echelon> spans;
  for (const auto& e : family) {
    if (e.is_zero()) continue;
    const int d = Cocenter<Field>::degree_of(A, e);
    if (!q.in_window(d)) continue;
    auto it = spans.find(d);
    if (it == spans.end()) it = spans.emplace(d, q.field().make_echelon(cocenter.dim_tr(d))).first;
    auto cls = cocenter.class_of(e);
    it->second.insert(std::move(cls));
  }
  std::vector<int> degrees;
  if (mode == SpanMode::Principle1)
    degrees.push_back(cocenter.defect());
  else if (mode == SpanMode::Principle2)
    degrees.push_back(0);
  else
    for (int d = q.window_min(); d <= q.window_max(); ++d) degrees.push_back(d);
  for (int d : degrees) {
    SpanComponent c{d, 0, cocenter.dim_tr(d)};
    if (auto it = spans.find(d); it != spans.end()) c.rank = it->second.rank();
    if (c.rank != c.dim) report.passed = false;
    if (c.dim != 0 || c.rank != 0 || mode == SpanMode::Principle1 || mode == SpanMode::Principle2)
      report.components.push_back(c);
  }
  return report;
}

template <class Field>
RelationsReport verify_relations_lemma(const Cocenter<Field>& cocenter, int max_k, int samples, std::uint64_t seed) {
  const auto& q = cocenter.quotient();
  KlrAlgebra& A = q.algebra();
  const int n = A.strands();
  const int p = q.field().characteristic();
  RelationsReport report;
  report.characteristic = p;
  std::mt19937_64 rng(seed);

  constexpr std::size_t kKeepFailures = 8;
  auto record = [&](const char* claim, const Sequence& nu, const std::vector<int>& blocks, int t, int k,
                    const Element& e) {
    auto& tally = report.claims[claim];
    ++tally.checked;
    if (cocenter.in_commutator(e)) return;
    if (tally.failed++ < kKeepFailures) report.failures.push_back({claim, nu, blocks, t, k});
  };

  for (std::size_t s = 0; s < A.sequences().size(); ++s) {
    const Sequence& nu = A.sequences()[s];
    const int nu_index = static_cast<int>(s);
    for (const auto& blocks : equal_residue_compositions(nu)) {
      std::vector<int> cuts{0};
      for (int b : blocks) cuts.push_back(cuts.back() + b);
      for (std::size_t t = 0; t < blocks.size(); ++t) {
        const int b = blocks[t];
        if (b < 2) continue;
        const int c = cuts[t];       // x_{c_t+1} is strand c (0-based)
        const int c2 = cuts[t + 1];  // c_{t+1}
        for (int sample = 0; sample < samples; ++sample) {
          const auto y1 = random_local_word(0, c, rng);
          const auto y2 = random_local_word(c2, n, rng);
          for (int k = 0; k <= max_k; ++k) {
            std::vector<Letter> mid;
            push_x(mid, c, k);
            push_tau_run(mid, c, c2 - 2);
            const Element y = A.evaluate(concat({&y1, &mid, &y2}), nu_index);

            Element combo = Rational(k + 1) * y;
            auto add_word = [&](const Rational& coeff, const std::vector<Letter>& inner) {
              combo.add(A.evaluate(concat({&y1, &inner, &y2}), nu_index), coeff);
            };
            auto xx = [&](int a1, int a2) {
              std::vector<Letter> w;
              push_x(w, c, a1);
              push_x(w, c + 1, a2);
              return w;
            };
            if (b == 2) {
              for (int k1 = 0; k1 <= k - 1; ++k1) add_word(1, xx(k1, k - 1 - k1));
              for (int k1 = 1; k1 <= k - 1; ++k1)
                for (int k1p = 0; k1p <= k - 1 - k1; ++k1p) add_word(1, xx(k1 + k1p, k - 1 - k1 - k1p));
            } else {
              if (k >= 1) {
                std::vector<Letter> w;
                push_x(w, c, k - 1);
                push_tau_run(w, c, c2 - 3);
                add_word(k, w);
              }
              for (int k1 = 0; k1 <= k - 2; ++k1)
                for (int k1p = 0; k1p <= k - 2 - k1; ++k1p) {
                  auto w = xx(k1 + k1p, k - 2 - k1 - k1p);
                  push_tau_run(w, c + 1, c2 - 3);
                  add_word(1, w);
                }
              for (int k1 = 1; k1 <= k - 1; ++k1)
                for (int k1p = 0; k1p <= k - 1 - k1; ++k1p) {
                  auto w = xx(k1 + k1p, k - 1 - k1 - k1p);
                  push_tau_run(w, c + 1, c2 - 2);
                  add_word(1, w);
                }
            }
            record(b == 2 ? "part1" : "part2", nu, blocks, static_cast<int>(t), k, combo);
            if (k == 0) record("k=0", nu, blocks, static_cast<int>(t), k, y);
            if (p == 0 && k < b - 1) record("corollary", nu, blocks, static_cast<int>(t), k, y);
          }
        }
      }
    }
  }
  return report;
}

template SpanReport verify_spanning(const Cocenter<RationalField>&, SpanMode);
template SpanReport verify_spanning(const Cocenter<PrimeField>&, SpanMode);
template RelationsReport verify_relations_lemma(const Cocenter<RationalField>&, int, int, std::uint64_t);
template RelationsReport verify_relations_lemma(const Cocenter<PrimeField>&, int, int, std::uint64_t);

}  // namespace klr::engine
