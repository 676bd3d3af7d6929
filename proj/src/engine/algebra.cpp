#include "klr/engine/algebra.hpp"

#include <algorithm>
#include <limits>

#include "klr/error.hpp"

namespace klr::engine {

QChoice::QChoice(std::size_t rank)
    : polys_(rank, std::vector<std::vector<QTerm>>(rank)) {}

QChoice QChoice::standard(const CartanDatum& datum) {
  const std::size_t r = datum.rank();
  QChoice q(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      if (datum.a(i, j) == 0) {
        // u^0 + v^0 = 2 would not be invertible in characteristic 2.
        q.set(i, j, {QTerm{0, 0, Rational(1)}});
      } else {
        q.set(i, j, {QTerm{to_int(-datum.a(i, j)), 0, Rational(1)},
                     QTerm{0, to_int(-datum.a(j, i)), Rational(1)}});
      }
    }
  return q;
}

void QChoice::set(std::size_t i, std::size_t j, std::vector<QTerm> terms) {
  std::map<std::pair<int, int>, Rational> merged;
  for (const auto& t : terms) merged[{t.p, t.q}] += t.coeff;
  std::vector<QTerm> fwd, back;
  for (const auto& [pq, c] : merged) {
    if (c == 0) continue;
    fwd.push_back({pq.first, pq.second, c});
    back.push_back({pq.second, pq.first, c});
  }
  polys_.at(i).at(j) = std::move(fwd);
  polys_.at(j).at(i) = std::move(back);
}

void QChoice::validate(const CartanDatum& datum, int characteristic) const {
  const std::size_t r = datum.rank();
  if (polys_.size() != r) throw UsageError("Q choice has the wrong rank");
  for (std::size_t i = 0; i < r; ++i) {
    if (!polys_[i][i].empty()) throw UsageError("Q_ii must vanish for " + datum.label(i));
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      const std::string where = "Q_{" + datum.label(i) + "," + datum.label(j) + "}";
      for (const auto& t : polys_[i][j]) {
        bool mirrored = false;
        for (const auto& s : polys_[j][i])
          if (s.p == t.q && s.q == t.p && s.coeff == t.coeff) mirrored = true;
        if (!mirrored) throw UsageError(where + " is not the transpose of its partner");
        if (t.p < 0 || t.q < 0) throw UsageError(where + " has a negative exponent");
        // 2(alpha_i, alpha_j) = -(alpha_i, alpha_i) p - (alpha_j, alpha_j) q
        Int lhs = 2 * datum.d(i) * datum.a(i, j);
        Int rhs = -2 * datum.d(i) * t.p - 2 * datum.d(j) * t.q;
        if (lhs != rhs) throw UsageError(where + " is not homogeneous");
      }
      Rational lead = 0;
      const int p0 = to_int(-datum.a(i, j));
      for (const auto& t : polys_[i][j])
        if (t.p == p0 && t.q == 0) lead = t.coeff;
      bool invertible = lead != 0;
      if (invertible && characteristic > 0) {
        if (lead.get_num() % characteristic == 0 || lead.get_den() % characteristic == 0)
          invertible = false;
      }
      if (!invertible) throw UsageError(where + ": leading coefficient is not invertible");
    }
  }
}

nlohmann::json QChoice::to_json(const CartanDatum& datum) const {
  nlohmann::json j = nlohmann::json::array();
  for (std::size_t a = 0; a < polys_.size(); ++a)
    for (std::size_t b = a + 1; b < polys_.size(); ++b) {
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& t : polys_[a][b]) terms.push_back({t.p, t.q, t.coeff.get_str()});
      j.push_back({{"i", datum.label(a)}, {"j", datum.label(b)}, {"terms", terms}});
    }
  return j;
}

void Element::add(const Mono& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

void Element::add(const Element& e, const Rational& c) {
  if (c == 0) return;
  for (const auto& [m, v] : e.terms) add(m, c * v);
}

Element operator*(const Rational& c, Element a) {
  if (c == 0) return {};
  for (auto& [m, v] : a.terms) v *= c;
  return a;
}

KlrAlgebra::KlrAlgebra(CartanDatum datum, QChoice q, RootVector beta)
    : datum_(std::move(datum)), q_(std::move(q)), beta_(std::move(beta)) {
  n_ = to_int(beta_.height());
  if (n_ > kMaxStrands) throw UsageError("too many strands for the engine");
  seqs_ = sequences_of_content(beta_);
  for (std::size_t i = 0; i < seqs_.size(); ++i) seq_index_[seqs_[i]] = static_cast<int>(i);
  perms_ = all_permutations(n_);
  if (perms_.size() > std::numeric_limits<std::uint16_t>::max() ||
      seqs_.size() > std::numeric_limits<std::uint16_t>::max())
    throw UsageError("instance too large for the engine");
  for (std::size_t w = 0; w < perms_.size(); ++w) {
    perm_index_[perms_[w].images()] = static_cast<int>(w);
    words_.push_back(perms_[w].canonical_word());
  }
  id_ = perm_index(Permutation::identity(n_));
  for (int s = 0; s + 1 < n_; ++s) simple_.push_back(perm_index(Permutation::simple(n_, s)));
  const std::size_t ns = n_ > 1 ? static_cast<std::size_t>(n_ - 1) : 0;
  right_simple_.resize(perms_.size() * ns);
  for (std::size_t w = 0; w < perms_.size(); ++w)
    for (std::size_t s = 0; s < ns; ++s)
      right_simple_[w * ns + s] = perm_index(perms_[w] * Permutation::simple(n_, static_cast<int>(s)));
  act_.resize(perms_.size() * seqs_.size());
  tau_deg_.resize(perms_.size() * seqs_.size());
  for (const auto& nu : seqs_) {
    std::vector<int> row;
    for (int v : nu.entries) row.push_back(root_norm(datum_, static_cast<std::size_t>(v)));
    norms_.push_back(std::move(row));
  }
  for (std::size_t w = 0; w < perms_.size(); ++w)
    for (std::size_t v = 0; v < seqs_.size(); ++v) {
      const auto& perm = perms_[w];
      const auto& nu = seqs_[v];
      act_[idx(static_cast<int>(w), static_cast<int>(v))] = sequence_index(perm.act(nu));
      Int deg = 0;
      for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
          if (perm(a) > perm(b)) {
            auto i = static_cast<std::size_t>(nu[static_cast<std::size_t>(a)]);
            auto j = static_cast<std::size_t>(nu[static_cast<std::size_t>(b)]);
            deg -= datum_.d(i) * datum_.a(i, j);
          }
      tau_deg_[idx(static_cast<int>(w), static_cast<int>(v))] = to_int(deg);
    }
  tau_memo_.resize(perms_.size() * ns * seqs_.size());
  x_memo_.resize(perms_.size() * static_cast<std::size_t>(n_) * seqs_.size());
}

int KlrAlgebra::sequence_index(const Sequence& nu) const {
  auto it = seq_index_.find(nu);
  if (it == seq_index_.end()) throw UsageError("sequence does not have the algebra's content");
  return it->second;
}

int KlrAlgebra::perm_index(const Permutation& w) const { return perm_index_.at(w.images()); }

int KlrAlgebra::norm_at(int nu, int k) const {
  return norms_[static_cast<std::size_t>(nu)][static_cast<std::size_t>(k)];
}

int KlrAlgebra::degree(const Mono& m) const {
  int deg = tau_degree(m.perm, m.nu);
  const int mu = left_idempotent(m);
  for (int k = 0; k < n_; ++k) deg += m.x[static_cast<std::size_t>(k)] * norm_at(mu, k);
  return deg;
}

int KlrAlgebra::min_degree() const { return *std::min_element(tau_deg_.begin(), tau_deg_.end()); }

Mono KlrAlgebra::mono(int perm, int nu) const {
  Mono m;
  m.perm = static_cast<std::uint16_t>(perm);
  m.nu = static_cast<std::uint16_t>(nu);
  return m;
}

Element KlrAlgebra::idempotent(int nu) const {
  Element e;
  e.add(mono(id_, nu), 1);
  return e;
}

Element KlrAlgebra::one() const {
  Element e;
  for (std::size_t v = 0; v < seqs_.size(); ++v) e.add(mono(id_, static_cast<int>(v)), 1);
  return e;
}

Element KlrAlgebra::x(int k, int nu) const {
  Mono m = mono(id_, nu);
  m.x[static_cast<std::size_t>(k)] = 1;
  Element e;
  e.add(m, 1);
  return e;
}

Element KlrAlgebra::tau(int l, int nu) const {
  Element e;
  e.add(mono(simple_.at(static_cast<std::size_t>(l)), nu), 1);
  return e;
}

void KlrAlgebra::add_shifted(Element& dst, const Element& src,
                             const std::array<std::uint8_t, kMaxStrands>& c, const Rational& scale) {
  for (const auto& [m, v] : src.terms) {
    Mono shifted = m;
    for (std::size_t k = 0; k < kMaxStrands; ++k) {
      int e = shifted.x[k] + c[k];
      if (e > std::numeric_limits<std::uint8_t>::max()) throw UsageError("x exponent overflow");
      shifted.x[k] = static_cast<std::uint8_t>(e);
    }
    dst.add(shifted, scale * v);
  }
}

Element KlrAlgebra::right_x(const Element& e, int k) {
  Element out;
  for (const auto& [m, c] : e.terms) add_shifted(out, x_right(m.perm, k, m.nu), m.x, c);
  return out;
}

Element KlrAlgebra::right_tau(const Element& e, int l) {
  Element out;
  for (const auto& [m, c] : e.terms) add_shifted(out, tau_right(m.perm, l, apply_simple(l, m.nu)), m.x, c);
  return out;
}

Element KlrAlgebra::right_letters(Element e, const std::vector<Letter>& letters) {
  for (const auto& L : letters) e = L.kind == Letter::Kind::X ? right_x(e, L.index) : right_tau(e, L.index);
  return e;
}

Element KlrAlgebra::evaluate(const std::vector<Letter>& letters, int nu) {
  int rho = nu;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    if (it->kind == Letter::Kind::Tau) rho = apply_simple(it->index, rho);
  return right_letters(idempotent(rho), letters);
}

Element KlrAlgebra::multiply(const Mono& a, const Mono& b) {
  if (left_idempotent(b) != a.nu) return {};
  Element e = idempotent(a.nu);
  e.terms.clear();
  e.add(mono(a.perm, a.nu), 1);
  for (int k = 0; k < n_; ++k)
    for (int r = 0; r < b.x[static_cast<std::size_t>(k)]; ++r) e = right_x(e, k);
  for (int s : word(b.perm)) e = right_tau(e, s);
  Element out;
  add_shifted(out, e, a.x, 1);
  return out;
}

Element KlrAlgebra::multiply(const Element& a, const Element& b) {
  Element out;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) out.add(multiply(ma, mb), ca * cb);
  return out;
}

const Element& KlrAlgebra::tau_right(int w, int s, int nu) {
  const std::size_t key = (static_cast<std::size_t>(w) * static_cast<std::size_t>(n_ - 1) +
                           static_cast<std::size_t>(s)) * seqs_.size() + static_cast<std::size_t>(nu);
  if (!tau_memo_[key]) {
    Element e = compute_tau_right(w, s, nu);
    tau_memo_[key].emplace(std::move(e));
  }
  return *tau_memo_[key];
}

const Element& KlrAlgebra::x_right(int w, int k, int nu) {
  const std::size_t key = (static_cast<std::size_t>(w) * static_cast<std::size_t>(n_) +
                           static_cast<std::size_t>(k)) * seqs_.size() + static_cast<std::size_t>(nu);
  if (!x_memo_[key]) {
    Element e = compute_x_right(w, k, nu);
    x_memo_[key].emplace(std::move(e));
  }
  return *x_memo_[key];
}

Element KlrAlgebra::compute_tau_right(int w, int s, int nu) {
  const std::size_t ns = static_cast<std::size_t>(n_ - 1);
  const int ws = right_simple_[static_cast<std::size_t>(w) * ns + static_cast<std::size_t>(s)];
  Element out;
  if (length(ws) > length(w)) {
    // Move c(w)s to c(ws) by braid moves; each cubic move on strands with
    // equal outer residues leaves a divided-difference correction behind.
    std::vector<int> cur = word(w);
    cur.push_back(s);
    for (const auto& mv : transport_moves(n_, cur, word(ws))) {
      if (mv.kind == BraidMove::Kind::Braid) {
        const auto p = static_cast<std::size_t>(mv.pos);
        const int k = std::min(cur[p], cur[p + 1]);
        int rho = nu;
        for (std::size_t j = cur.size(); j-- > p + 3;) rho = apply_simple(cur[j], rho);
        const auto& seq = seqs_[static_cast<std::size_t>(rho)];
        const auto ks = static_cast<std::size_t>(k);
        if (seq[ks] == seq[ks + 2]) {
          const auto& qp = q_.poly(static_cast<std::size_t>(seq[ks]), static_cast<std::size_t>(seq[ks + 1]));
          // tau_k tau_{k+1} tau_k = tau_{k+1} tau_k tau_{k+1} - P and conversely.
          const Rational sign = cur[p] == k ? -1 : 1;
          for (const auto& t : qp)
            for (int e1 = 0; e1 < t.p; ++e1) {
              std::vector<Letter> letters;
              for (std::size_t j = 0; j < p; ++j) letters.push_back(Letter::tau(cur[j]));
              for (int r = 0; r < e1; ++r) letters.push_back(Letter::x(k));
              for (int r = 0; r < t.q; ++r) letters.push_back(Letter::x(k + 1));
              for (int r = 0; r < t.p - 1 - e1; ++r) letters.push_back(Letter::x(k + 2));
              for (std::size_t j = p + 3; j < cur.size(); ++j) letters.push_back(Letter::tau(cur[j]));
              out.add(evaluate(letters, nu), sign * t.coeff);
            }
        }
      }
      apply_move(cur, mv);
    }
    out.add(mono(ws, nu), 1);
    return out;
  }
  // w = u s with u = ws shorter: tau_{c(w)} = tau_{c(u)} tau_s - C, and
  // tau_s tau_s e(nu) = Q(x_s, x_{s+1}) e(nu).
  const int u = ws;
  const int mu = apply_simple(s, nu);
  Element corr = tau_right(u, s, mu);
  corr.add(mono(w, mu), -1);
  const auto& seq = seqs_[static_cast<std::size_t>(nu)];
  const auto ss = static_cast<std::size_t>(s);
  for (const auto& t : q_.poly(static_cast<std::size_t>(seq[ss]), static_cast<std::size_t>(seq[ss + 1]))) {
    std::vector<Letter> letters;
    for (int r = 0; r < t.p; ++r) letters.push_back(Letter::x(s));
    for (int r = 0; r < t.q; ++r) letters.push_back(Letter::x(s + 1));
    Element start;
    start.add(mono(u, nu), 1);
    out.add(right_letters(std::move(start), letters), t.coeff);
  }
  out.add(right_tau(corr, s), -1);
  return out;
}

Element KlrAlgebra::compute_x_right(int w, int k, int nu) {
  Element out;
  if (w == id_) {
    Mono m = mono(id_, nu);
    m.x[static_cast<std::size_t>(k)] = 1;
    out.add(m, 1);
    return out;
  }
  // tau_s x_k e(nu) = x_{s(k)} tau_s e(nu) + delta e(nu)
  const int s = word(w).back();
  const int w1 = right_simple_[static_cast<std::size_t>(w) * static_cast<std::size_t>(n_ - 1) +
                               static_cast<std::size_t>(s)];
  const int sk = k == s ? s + 1 : (k == s + 1 ? s : k);
  out = right_tau(x_right(w1, sk, apply_simple(s, nu)), s);
  const auto& seq = seqs_[static_cast<std::size_t>(nu)];
  if (seq[static_cast<std::size_t>(s)] == seq[static_cast<std::size_t>(s + 1)]) {
    if (k == s) out.add(mono(w1, nu), -1);
    if (k == s + 1) out.add(mono(w1, nu), 1);
  }
  return out;
}

std::vector<Mono> KlrAlgebra::basis_in_degree(int degree) const {
  std::vector<Mono> out;
  for (std::size_t v = 0; v < seqs_.size(); ++v)
    for (std::size_t w = 0; w < perms_.size(); ++w) {
      const int rest = degree - tau_degree(static_cast<int>(w), static_cast<int>(v));
      if (rest < 0) continue;
      const int mu = act(static_cast<int>(w), static_cast<int>(v));
      Mono m = mono(static_cast<int>(w), static_cast<int>(v));
      auto rec = [&](auto&& self, int k, int left) -> void {
        if (k == n_) {
          if (left == 0) out.push_back(m);
          return;
        }
        const int step = norm_at(mu, k);
        for (int e = 0; e * step <= left; ++e) {
          if (e > std::numeric_limits<std::uint8_t>::max()) break;
          m.x[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(e);
          self(self, k + 1, left - e * step);
        }
        m.x[static_cast<std::size_t>(k)] = 0;
      };
      rec(rec, 0, rest);
    }
  return out;
}

nlohmann::json KlrAlgebra::to_json(const Element& e) const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : e.terms) {
    nlohmann::json xs = nlohmann::json::array(), taus = nlohmann::json::array();
    for (int k = 0; k < n_; ++k) xs.push_back(m.x[static_cast<std::size_t>(k)]);
    for (int s : word(m.perm)) taus.push_back(s + 1);
    arr.push_back({{"coeff", c.get_str()},
                   {"x", xs},
                   {"tau", taus},
                   {"e", klr::to_json(datum_, seqs_[m.nu])}});
  }
  return arr;
}

}  // namespace klr::engine
