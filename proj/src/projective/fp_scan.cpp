#include "segre/projective/fp_scan.hpp"

#include <algorithm>
#include <thread>

namespace segre::projective {

using exact::Polynomial;

namespace {

// Barrett reduction for p < 2^31 and inputs < 2^62.
struct Mod {
  std::uint64_t p;
  std::uint64_t m;
  explicit Mod(std::uint64_t p_) : p(p_), m(~0ull / p_) {}
  std::uint64_t reduce(std::uint64_t x) const {
    const auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * m) >> 64);
    std::uint64_t r = x - q * p;
    return r >= p ? r - p : r;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return reduce(a * b); }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
};

// A form specialised to one stratum: coefficient of t^j is sum_k coeff * prod prefix^exp.
struct Specialised {
  struct Term {
    std::uint64_t coeff;
    std::vector<std::pair<std::uint8_t, std::uint8_t>> factors;  // (prefix index, exponent)
  };
  std::vector<std::vector<Term>> by_power;  // indexed by exponent of the last variable
};

Specialised specialise(const FpForm& f, std::size_t lead, std::size_t prefix_begin, std::size_t last) {
  Specialised s;
  for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
    const auto& e = f.exponents[k];
    bool vanishes = false;
    for (std::size_t v = 0; v < lead; ++v)
      if (e[v]) vanishes = true;
    if (vanishes) continue;
    const std::size_t tp = last < f.nvars ? e[last] : 0;
    if (s.by_power.size() <= tp) s.by_power.resize(tp + 1);
    Specialised::Term t{f.coeffs[k], {}};
    for (std::size_t v = prefix_begin; v < last; ++v)
      if (e[v]) t.factors.emplace_back(static_cast<std::uint8_t>(v - prefix_begin), e[v]);
    s.by_power[tp].push_back(std::move(t));
  }
  return s;
}

struct StratumScanner {
  const std::vector<FpForm>& forms;
  Mod mod;
  std::size_t n, lead;
  std::vector<Specialised> spec;
  unsigned max_deg = 0;

  StratumScanner(const std::vector<FpForm>& fs, std::size_t lead_)
      : forms(fs), mod(fs.front().p), n(fs.front().nvars), lead(lead_) {
    for (const auto& f : forms) {
      spec.push_back(specialise(f, lead, lead + 1, n - 1));
      max_deg = std::max<unsigned>(max_deg, static_cast<unsigned>(spec.back().by_power.size()));
    }
  }

  void coefficients(const Specialised& s, const std::vector<std::vector<std::uint64_t>>& pw,
                    std::vector<std::uint64_t>& out) const {
    out.assign(s.by_power.size(), 0);
    for (std::size_t j = 0; j < s.by_power.size(); ++j) {
      std::uint64_t acc = 0;
      for (const auto& t : s.by_power[j]) {
        std::uint64_t v = t.coeff;
        for (auto [var, ex] : t.factors) v = mod.mul(v, pw[var][ex]);
        acc = mod.add(acc, v);
      }
      out[j] = acc;
    }
  }

  std::uint64_t horner(const std::vector<std::uint64_t>& c, std::uint64_t t) const {
    std::uint64_t acc = 0;
    for (std::size_t j = c.size(); j-- > 0;) acc = mod.add(mod.mul(acc, t), c[j]);
    return acc;
  }

  // Scans prefixes with linear index in [begin, end); appends zeros to out.
  void run(std::uint64_t begin, std::uint64_t end, std::vector<FpPoint>& out) const {
    const std::uint64_t p = mod.p;
    if (lead == n - 1) {
      FpPoint pt(n, 0);
      pt[lead] = 1;
      bool all = true;
      for (const auto& f : forms) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
          bool only_lead = true;
          for (std::size_t v = 0; v < n; ++v)
            if (v != lead && f.exponents[k][v]) only_lead = false;
          if (only_lead) acc = mod.add(acc, f.coeffs[k]);
        }
        if (acc) all = false;
      }
      if (all && begin == 0 && end > 0) out.push_back(pt);
      return;
    }
    const std::size_t m = n - 2 - lead;  // prefix variable count
    std::vector<std::uint64_t> prefix(m, 0);
    std::uint64_t idx = begin;
    for (std::size_t v = m; v-- > 0;) {
      prefix[v] = idx % p;
      idx /= p;
    }
    std::vector<std::vector<std::uint64_t>> pw(m, std::vector<std::uint64_t>(max_deg + 1, 0));
    auto refresh = [&](std::size_t v) {
      pw[v][0] = 1;
      for (unsigned e = 1; e <= max_deg; ++e) pw[v][e] = mod.mul(pw[v][e - 1], prefix[v]);
    };
    for (std::size_t v = 0; v < m; ++v) refresh(v);

    std::vector<std::uint64_t> c0, ck, diff;
    std::vector<std::vector<std::uint64_t>> others(forms.size());
    for (std::uint64_t i = begin; i < end; ++i) {
      coefficients(spec[0], pw, c0);
      const bool zero_poly = std::all_of(c0.begin(), c0.end(), [](std::uint64_t x) { return x == 0; });
      bool others_ready = false;
      auto check_rest = [&](std::uint64_t t) {
        if (!others_ready) {
          for (std::size_t f = 1; f < forms.size(); ++f) coefficients(spec[f], pw, others[f]);
          others_ready = true;
        }
        for (std::size_t f = 1; f < forms.size(); ++f)
          if (horner(others[f], t)) return false;
        return true;
      };
      auto emit = [&](std::uint64_t t) {
        FpPoint pt(n, 0);
        pt[lead] = 1;
        for (std::size_t v = 0; v < m; ++v) pt[lead + 1 + v] = prefix[v];
        pt[n - 1] = t;
        out.push_back(std::move(pt));
      };
      if (zero_poly) {
        for (std::uint64_t t = 0; t < p; ++t)
          if (check_rest(t)) emit(t);
      } else {
        // Forward differences: values at t = 0, 1, 2, ... by additions only.
        const std::size_t d = c0.size() - 1;
        diff.assign(d + 1, 0);
        for (std::size_t j = 0; j <= d; ++j) diff[j] = horner(c0, j % p);
        for (std::size_t level = 1; level <= d; ++level)
          for (std::size_t j = d; j >= level; --j) diff[j] = mod.add(diff[j], p - diff[j - 1]);
        for (std::uint64_t t = 0; t < p; ++t) {
          if (diff[0] == 0 && check_rest(t)) emit(t);
          for (std::size_t j = 0; j < d; ++j) diff[j] = mod.add(diff[j], diff[j + 1]);
        }
      }
      // Odometer step on the prefix.
      for (std::size_t v = m; v-- > 0;) {
        prefix[v] = prefix[v] + 1 == p ? 0 : prefix[v] + 1;
        refresh(v);
        if (prefix[v] != 0) break;
      }
    }
  }
};

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

FpForm compile_fp(const Polynomial& f) {
  if (f.field().is_rational()) throw Error("finite-field compilation requires a prime-field polynomial");
  FpForm out;
  out.nvars = f.nvars();
  out.p = f.field().modulus();
  for (const auto& [e, c] : f.terms()) {
    out.coeffs.push_back(c.residue_value());
    std::vector<std::uint8_t> ex(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 255) throw Error("exponent too large for the finite-field evaluator");
      ex[i] = static_cast<std::uint8_t>(e[i]);
    }
    out.exponents.push_back(std::move(ex));
  }
  return out;
}

std::uint64_t projective_point_count(std::size_t nvars, std::uint64_t p) {
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < nvars; ++k) total += ipow(p, nvars - 1 - k);
  return total;
}

std::vector<FpPoint> common_projective_zeros(const std::vector<FpForm>& forms, unsigned threads) {
  if (forms.empty()) throw Error("no forms to scan");
  const std::size_t n = forms.front().nvars;
  const std::uint64_t p = forms.front().p;
  if (n == 0) throw Error("scan needs at least one variable");
  for (const auto& f : forms)
    if (f.nvars != n || f.p != p) throw ModulusMismatch("forms in a scan must share variables and modulus");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  std::vector<FpPoint> all;
  for (std::size_t lead = 0; lead < n; ++lead) {
    StratumScanner scanner(forms, lead);
    const std::uint64_t prefixes = lead == n - 1 ? 1 : ipow(p, n - 2 - lead);
    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, prefixes));
    std::vector<std::vector<FpPoint>> parts(workers);
    if (workers <= 1) {
      scanner.run(0, prefixes, parts[0]);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t b = prefixes * w / workers, e = prefixes * (w + 1) / workers;
        pool.emplace_back([&, w, b, e] { scanner.run(b, e, parts[w]); });
      }
      for (auto& t : pool) t.join();
    }
    for (auto& part : parts) all.insert(all.end(), part.begin(), part.end());
  }
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace segre::projective
