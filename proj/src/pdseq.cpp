#include "klr/pdseq.hpp"

#include "klr/error.hpp"

namespace klr {

RunDecomposition run_decompose(const CartanDatum& datum, const DominantWeight& lambda,
                               const Sequence& nu) {
  RunDecomposition rd;
  rd.cuts.push_back(0);
  RootVector prefix = RootVector::zero(datum.rank());
  std::size_t k = 0;
  while (k < nu.size()) {
    std::size_t end = k;
    while (end < nu.size() && nu[end] == nu[k]) ++end;
    Run run{nu[k], static_cast<int>(end - k)};
    rd.ells.push_back(pairing(datum, static_cast<std::size_t>(run.residue), lambda, prefix));
    prefix.coeffs[static_cast<std::size_t>(run.residue)] += run.length;
    rd.runs.push_back(run);
    rd.cuts.push_back(static_cast<int>(end));
    k = end;
  }
  return rd;
}

bool is_piecewise_dominant(const CartanDatum& datum, const DominantWeight& lambda,
                           const Sequence& nu) {
  auto rd = run_decompose(datum, lambda, nu);
  for (std::size_t i = 0; i < rd.runs.size(); ++i)
    if (rd.ells[i] < rd.runs[i].length) return false;
  return true;
}

std::pair<bool, std::optional<PDWitness>> check_via_criterion(const CartanDatum& datum,
                                                              const DominantWeight& lambda,
                                                              const Sequence& nu) {
  auto rd = run_decompose(datum, lambda, nu);
  PDWitness witness;
  RootVector prefix = RootVector::zero(datum.rank());
  for (std::size_t i = 0; i < rd.runs.size(); ++i) {
    const int c_prev = rd.cuts[i];
    const int c_i = rd.cuts[i + 1];
    bool found = false;
    for (int kp = c_prev + 1; kp <= c_i; ++kp) {
      std::size_t r = static_cast<std::size_t>(nu[static_cast<std::size_t>(kp - 1)]);
      if (pairing(datum, r, lambda, prefix) >= c_i - kp + 1) found = true;
      prefix.coeffs[r] += 1;
    }
    if (!found) return {false, std::nullopt};
    const Int& ell = rd.ells[i];
    const int b = rd.runs[i].length;
    if (ell - 2 * b >= 0)
      witness.k.push_back(c_i);
    else
      witness.k.push_back(to_int(ell + 2 * c_prev - c_i + 1));
  }
  return {true, witness};
}

void for_each_pd(const CartanDatum& datum, const DominantWeight& lambda, const RootVector& alpha,
                 const std::function<bool(const Sequence&)>& visit) {
  const std::size_t rank = datum.rank();
  std::vector<long> left;
  long n = 0;
  for (const auto& c : alpha.coeffs) {
    left.push_back(to_long(c));
    n += left.back();
  }
  RootVector prefix = RootVector::zero(rank);
  Sequence cur;
  // Open run: residue, remaining allowance l - b.
  struct Frame {
    int residue;
    Int slack;
  };
  std::vector<Frame> runs;
  bool stop = false;
  auto rec = [&](auto&& self) -> void {
    if (stop) return;
    if (static_cast<long>(cur.size()) == n) {
      if (!visit(cur)) stop = true;
      return;
    }
    for (std::size_t j = 0; j < rank && !stop; ++j) {
      if (left[j] == 0) continue;
      const bool extends = !runs.empty() && runs.back().residue == static_cast<int>(j);
      if (extends) {
        if (runs.back().slack < 1) continue;
        runs.back().slack -= 1;
      } else {
        Int ell = pairing(datum, j, lambda, prefix);
        if (ell < 1) continue;
        runs.push_back({static_cast<int>(j), ell - 1});
      }
      --left[j];
      prefix.coeffs[j] += 1;
      cur.entries.push_back(static_cast<int>(j));
      self(self);
      cur.entries.pop_back();
      prefix.coeffs[j] -= 1;
      ++left[j];
      if (extends)
        runs.back().slack += 1;
      else
        runs.pop_back();
    }
  };
  rec(rec);
}

std::vector<Sequence> enumerate_pd(const CartanDatum& datum, const DominantWeight& lambda,
                                   const RootVector& alpha) {
  std::vector<Sequence> out;
  for_each_pd(datum, lambda, alpha, [&](const Sequence& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

NonzeroResult weight_nonzero(const CartanDatum& datum, const DominantWeight& lambda,
                             const RootVector& alpha) {
  NonzeroResult res;
  for_each_pd(datum, lambda, alpha, [&](const Sequence& s) {
    res.nonzero = true;
    res.witness = s;
    return false;
  });
  return res;
}

namespace {

RunDecomposition require_pd(const CartanDatum& datum, const DominantWeight& lambda,
                            const Sequence& nu) {
  auto rd = run_decompose(datum, lambda, nu);
  for (std::size_t i = 0; i < rd.runs.size(); ++i)
    if (rd.ells[i] < rd.runs[i].length)
      throw UsageError("sequence " + format_sequence(datum, nu) + " is not piecewise dominant");
  return rd;
}

void check_degree(const CartanDatum& datum, const DominantWeight& lambda, const Sequence& nu,
                  const Int& degree, const char* what) {
  Int expected = defect_degree(datum, lambda, content(datum, nu));
  if (degree != expected)
    throw OracleMismatch(std::string(what) + " degree " + degree.get_str() + " != d = " +
                         expected.get_str() + " for " + format_sequence(datum, nu));
}

}  // namespace

ZMonomial z_monomial(const CartanDatum& datum, const DominantWeight& lambda, const Sequence& nu) {
  auto rd = require_pd(datum, lambda, nu);
  ZMonomial z;
  z.exponents.assign(nu.size(), 0);
  for (std::size_t i = 0; i < rd.runs.size(); ++i) {
    const int c_prev = rd.cuts[i];
    const int c_i = rd.cuts[i + 1];
    const int b = rd.runs[i].length;
    const int ell = to_int(rd.ells[i]);
    int last = c_prev;  // last 1-based position carrying a nonzero exponent
    if (ell >= 2 * b) {
      last = c_i;
    } else if (ell > b) {
      last = ell + 2 * c_prev - c_i;
    }
    for (int pos = c_prev + 1; pos <= last; ++pos)
      z.exponents[static_cast<std::size_t>(pos - 1)] = ell - 1 - 2 * (pos - c_prev - 1);
  }
  z.degree = 0;
  for (std::size_t k = 0; k < nu.size(); ++k)
    z.degree += Int(z.exponents[k]) * root_norm(datum, static_cast<std::size_t>(nu[k]));
  check_degree(datum, lambda, nu, z.degree, "Z(nu)");
  return z;
}

SWord s_word(const CartanDatum& datum, const DominantWeight& lambda, const Sequence& nu) {
  auto rd = require_pd(datum, lambda, nu);
  SWord s;
  s.exponents.assign(nu.size(), 0);
  s.degree = 0;
  for (std::size_t i = 0; i < rd.runs.size(); ++i) {
    const int c_prev = rd.cuts[i];
    const int b = rd.runs[i].length;
    const int ell = to_int(rd.ells[i]);
    for (int top = 1; top < b; ++top)
      for (int t = top; t >= 1; --t) s.tau_word.push_back(c_prev + t);
    for (int j = 1; j <= b; ++j) s.exponents[static_cast<std::size_t>(c_prev + j - 1)] = ell - j;
    const int norm = root_norm(datum, static_cast<std::size_t>(rd.runs[i].residue));
    s.degree -= Int(norm) * (b * (b - 1) / 2);
    for (int j = 1; j <= b; ++j) s.degree += Int(norm) * (ell - j);
  }
  check_degree(datum, lambda, nu, s.degree, "S(nu)");
  return s;
}

}  // namespace klr
