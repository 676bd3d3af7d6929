#include "klr/crystal.hpp"

#include <set>

#include "klr/error.hpp"
#include "klr/pdseq.hpp"

namespace klr {

CrystalVertex::CrystalVertex(std::vector<Segment> segments) : segments_(std::move(segments)) {
  normalize();
}

void CrystalVertex::normalize() {
  std::vector<Segment> out;
  for (auto& s : segments_) {
    if (s.length == 0) continue;
    if (!out.empty() && out.back().beta == s.beta)
      out.back().length += s.length;
    else
      out.push_back(std::move(s));
  }
  segments_ = std::move(out);
}

PathCrystal::PathCrystal(CartanDatum datum, DominantWeight lambda)
    : datum_(std::move(datum)), lambda_(std::move(lambda)) {}

CrystalVertex PathCrystal::highest() const {
  return CrystalVertex({Segment{std::vector<Int>(datum_.rank(), 0), Rational(1)}});
}

Int PathCrystal::slope(std::size_t i, const std::vector<Int>& beta) const {
  Int v = lambda_.coords[i];
  for (std::size_t j = 0; j < datum_.rank(); ++j) v -= datum_.a(i, j) * beta[j];
  return v;
}

std::vector<Rational> PathCrystal::heights(std::size_t i, const std::vector<Segment>& segs) const {
  std::vector<Rational> h{Rational(0)};
  for (const auto& s : segs) h.push_back(h.back() + s.length * slope(i, s.beta));
  return h;
}

Segment PathCrystal::reflect(std::size_t i, const Segment& s) const {
  Segment r = s;
  r.beta[i] += slope(i, s.beta);
  return r;
}

std::optional<CrystalVertex> PathCrystal::root_f(std::size_t i, const CrystalVertex& b) const {
  std::vector<Segment> segs = b.segments();
  auto h = heights(i, segs);
  Rational m = h[0];
  for (const auto& v : h)
    if (v < m) m = v;
  if (h.back() - m < 1) return std::nullopt;
  std::size_t k0 = 0;  // last breakpoint at the minimum
  for (std::size_t k = 0; k < h.size(); ++k)
    if (h[k] == m) k0 = k;
  const Rational target = m + 1;
  std::vector<Segment> out(segs.begin(), segs.begin() + static_cast<long>(k0));
  std::size_t k = k0;
  for (; k < segs.size(); ++k) {
    if (h[k + 1] < target) {
      out.push_back(reflect(i, segs[k]));
      continue;
    }
    // h crosses m + 1 inside segment k (slope is positive here).
    Rational t = (target - h[k]) / Rational(slope(i, segs[k].beta));
    Segment head = segs[k], tail = segs[k];
    head.length = t;
    tail.length = segs[k].length - t;
    out.push_back(reflect(i, head));
    out.push_back(tail);
    ++k;
    break;
  }
  out.insert(out.end(), segs.begin() + static_cast<long>(k), segs.end());
  return CrystalVertex(std::move(out));
}

std::optional<CrystalVertex> PathCrystal::root_e(std::size_t i, const CrystalVertex& b) const {
  std::vector<Segment> segs = b.segments();
  auto h = heights(i, segs);
  Rational m = h[0];
  for (const auto& v : h)
    if (v < m) m = v;
  if (m > -1) return std::nullopt;
  std::size_t k1 = 0;  // first breakpoint at the minimum
  while (h[k1] != m) ++k1;
  const Rational target = m + 1;
  // Walk back from k1 to the last crossing of m + 1.
  std::size_t k = k1;
  while (h[k - 1] < target) --k;
  // Segment k-1 runs from h[k-1] >= m+1 down to h[k] < m+1.
  const Segment& s = segs[k - 1];
  Rational t = (target - h[k - 1]) / Rational(slope(i, s.beta));
  Segment head = s, tail = s;
  head.length = t;
  tail.length = s.length - t;
  std::vector<Segment> out(segs.begin(), segs.begin() + static_cast<long>(k - 1));
  out.push_back(head);
  out.push_back(reflect(i, tail));
  for (std::size_t j = k; j < k1; ++j) out.push_back(reflect(i, segs[j]));
  out.insert(out.end(), segs.begin() + static_cast<long>(k1), segs.end());
  return CrystalVertex(std::move(out));
}

int PathCrystal::eps(std::size_t i, const CrystalVertex& b) const {
  int count = 0;
  auto cur = root_e(i, b);
  while (cur) {
    ++count;
    cur = root_e(i, *cur);
  }
  return count;
}

int PathCrystal::phi(std::size_t i, const CrystalVertex& b) const {
  int count = 0;
  auto cur = root_f(i, b);
  while (cur) {
    ++count;
    cur = root_f(i, *cur);
  }
  return count;
}

RootVector PathCrystal::depth(const CrystalVertex& b) const {
  std::vector<Rational> acc(datum_.rank(), Rational(0));
  for (const auto& s : b.segments())
    for (std::size_t j = 0; j < datum_.rank(); ++j) acc[j] += s.length * s.beta[j];
  RootVector r = RootVector::zero(datum_.rank());
  for (std::size_t j = 0; j < datum_.rank(); ++j) {
    if (acc[j].get_den() != 1 || acc[j] < 0)
      throw OracleMismatch("path endpoint is not in Lambda - Q^+");
    r.coeffs[j] = acc[j].get_num();
  }
  return r;
}

Int PathCrystal::wt_pairing(std::size_t i, const CrystalVertex& b) const {
  return pairing(datum_, i, lambda_, depth(b));
}

std::vector<CrystalVertex> PathCrystal::generate(int max_height) const {
  std::set<CrystalVertex> all{highest()};
  std::vector<CrystalVertex> frontier{highest()};
  for (int h = 0; h < max_height && !frontier.empty(); ++h) {
    std::set<CrystalVertex> next;
    for (const auto& b : frontier)
      for (std::size_t i = 0; i < datum_.rank(); ++i)
        if (auto f = root_f(i, b)) next.insert(std::move(*f));
    frontier.assign(next.begin(), next.end());
    all.insert(next.begin(), next.end());
  }
  return {all.begin(), all.end()};
}

CrystalVertex PathCrystal::pd_path(const Sequence& nu) const {
  CrystalVertex b = highest();
  for (std::size_t k = 0; k < nu.size(); ++k) {
    auto f = root_f(static_cast<std::size_t>(nu[k]), b);
    if (!f)
      throw OracleMismatch("pd_path: null at step " + std::to_string(k + 1) + " of " +
                           format_sequence(datum_, nu));
    b = std::move(*f);
  }
  return b;
}

Sequence PathCrystal::extract_pd(const CrystalVertex& b, TieBreak tie) const {
  std::vector<int> residues;
  std::vector<int> lengths;
  CrystalVertex cur = b;
  while (true) {
    int chosen = -1, e = 0;
    for (std::size_t i = 0; i < datum_.rank(); ++i) {
      int ei = eps(i, cur);
      if (ei > 0) {
        chosen = static_cast<int>(i);
        e = ei;
        if (tie == TieBreak::Smallest) break;
      }
    }
    if (chosen < 0) break;
    for (int k = 0; k < e; ++k) cur = *root_e(static_cast<std::size_t>(chosen), cur);
    residues.push_back(chosen);
    lengths.push_back(e);
  }
  if (!(cur == highest())) throw OracleMismatch("extract_pd: raising stopped away from v_Lambda");
  Sequence nu;
  for (std::size_t r = residues.size(); r-- > 0;)
    for (int k = 0; k < lengths[r]; ++k) nu.entries.push_back(residues[r]);
  return nu;
}

nlohmann::json PathCrystal::to_json(const CrystalVertex& b) const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : b.segments()) {
    nlohmann::json beta = nlohmann::json::array();
    for (const auto& v : s.beta) beta.push_back(klr::to_json(v));
    arr.push_back(nlohmann::json::array({beta, s.length.get_str()}));
  }
  return arr;
}

Int weight_multiplicity(const PathCrystal& crystal, const std::vector<CrystalVertex>& vertices,
                        const RootVector& alpha) {
  Int count = 0;
  for (const auto& b : vertices)
    if (crystal.depth(b) == alpha) ++count;
  return count;
}

Int weight_multiplicity(const CartanDatum& datum, const DominantWeight& lambda, const RootVector& alpha) {
  PathCrystal crystal(datum, lambda);
  return weight_multiplicity(crystal, crystal.generate(to_int(alpha.height())), alpha);
}

PDClasses pd_classes(const CartanDatum& datum, const DominantWeight& lambda, const RootVector& alpha) {
  PathCrystal crystal(datum, lambda);
  std::map<CrystalVertex, std::vector<Sequence>> groups;
  for (const auto& nu : enumerate_pd(datum, lambda, alpha)) groups[crystal.pd_path(nu)].push_back(nu);
  PDClasses out;
  for (auto& [b, seqs] : groups) out.classes.push_back(std::move(seqs));
  out.weight_mult = weight_multiplicity(crystal, crystal.generate(to_int(alpha.height())), alpha);
  return out;
}

}  // namespace klr
