#include "pathideal/path_ideal.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

namespace pathideal {

PathParams PathParams::make(int m, int l, int k) {
  if (m < 2) throw std::invalid_argument("path length m must be >= 2 (got " + std::to_string(m) + ")");
  if (l < 1 || l > m - 1) {
    throw std::invalid_argument("overlap l must lie in [1, m-1] (got l=" + std::to_string(l) +
                                ", m=" + std::to_string(m) + ")");
  }
  if (k < 1) throw std::invalid_argument("generator count k must be >= 1");
  const long n = static_cast<long>(k) * (m - l) + l;
  if (n > kMaxVariables) {
    throw std::invalid_argument("n=" + std::to_string(n) + " exceeds " + std::to_string(kMaxVariables) +
                                " variables");
  }
  return PathParams{m, l, k, static_cast<int>(n)};
}

std::string_view branch_label(Branch b) {
  switch (b) {
    case Branch::SmallOverlap: return "small-overlap";
    case Branch::DivisibleOverlap: return "divisible";
    case Branch::ResidueOverlap: return "residue";
  }
  return "?";
}

Regime classify(int m, int l, int k) {
  if (m < 2 || l < 1 || l > m - 1) {
    throw std::invalid_argument("classify needs m >= 2 and 1 <= l <= m-1");
  }
  Regime r;
  const int step = m - l;
  r.s = m % step;
  const int half_up = (m + 1) / 2;
  if (l < half_up) {
    r.branch = Branch::SmallOverlap;
    return r;
  }
  r.branch = r.s == 0 ? Branch::DivisibleOverlap : Branch::ResidueOverlap;
  r.period = 2 * m - l - r.s;
  const int n = k * step + l;
  r.p = n / r.period;
  r.d = n % r.period;
  return r;
}

MonomialIdeal make_path_ideal_in(int m, int l, int count, int ambient) {
  std::vector<Monomial> gens;
  const int step = m - l;
  for (int i = 1; i <= count; ++i) {
    const int first = (i - 1) * step + 1;
    gens.push_back(Monomial::interval(first, first + m - 1));
  }
  return MonomialIdeal::from_generators(ambient, gens);
}

MonomialIdeal make_path_ideal(const PathParams& params) {
  const PathParams checked = PathParams::make(params.m, params.l, params.k);
  if (checked.n != params.n) {
    throw std::invalid_argument("inconsistent params: n must equal k(m-l)+l = " + std::to_string(checked.n));
  }
  return make_path_ideal_in(checked.m, checked.l, checked.k, checked.n);
}

MonomialIdeal make_full_path_ideal(int m, int n) {
  if (m < 2 || m > n) {
    throw std::invalid_argument("J_m(L_n) needs 2 <= m <= n (got m=" + std::to_string(m) +
                                ", n=" + std::to_string(n) + ")");
  }
  return make_path_ideal(PathParams::make(m, m - 1, n - m + 1));
}

int formula_pd(const PathParams& params) {
  const Regime r = classify(params);
  if (r.branch == Branch::SmallOverlap) return params.k - 1;
  return r.d != params.m ? 2 * r.p - 1 : 2 * r.p;
}

std::optional<int> formula_reg(const PathParams& params) {
  const Regime r = classify(params);
  const int m = params.m;
  const int l = params.l;
  switch (r.branch) {
    case Branch::SmallOverlap: return (params.k - 1) * (m - l - 1) + m;
    case Branch::DivisibleOverlap: return r.p * (2 * m - l - 2) + (r.d != m ? 1 : m);
    case Branch::ResidueOverlap: return std::nullopt;
  }
  return std::nullopt;
}

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

int formula_depth(const PathParams& params) {
  const Regime r = classify(params);
  const int n = params.n;
  if (r.branch == Branch::SmallOverlap) return n - params.k + 1;
  // Shift by m-l-s, divide by the period.
  const int numer = n + params.m - params.l - r.s;
  return n + 2 - ceil_div(numer, r.period) - numer / r.period;
}

FormulaResult formula_all(const PathParams& params) {
  FormulaResult out;
  out.pd = formula_pd(params);
  out.reg = formula_reg(params);
  out.depth_ideal = formula_depth(params);
  out.depth_quotient = out.depth_ideal - 1;
  return out;
}

FormulaResult formula_jm(int m, int n) {
  if (m < 2 || m > n) throw std::invalid_argument("formula_jm needs 2 <= m <= n");
  const int p = n / (m + 1);
  const int d = n % (m + 1);
  FormulaResult out;
  out.pd = d != m ? 2 * p - 1 : 2 * p;
  out.reg = d != m ? p * (m - 1) + 1 : p * (m - 1) + m;
  out.depth_ideal = n - out.pd;
  out.depth_quotient = out.depth_ideal - 1;
  return out;
}

MonomialIdeal last_split_intersection(const PathParams& params) {
  if (params.k < 2) throw std::invalid_argument("splitting off the last generator needs k >= 2");
  const Regime r = classify(params);
  const int step = params.step();
  // Generators u_i with i <= k - reach are disjoint from u_k and not absorbed.
  const int reach = r.branch == Branch::SmallOverlap ? 2 : (2 * params.m - params.l - r.s) / step;
  const int last_first = (params.k - 1) * step + 1;
  const Monomial last = Monomial::interval(last_first, last_first + params.m - 1);
  const Monomial gap = Monomial::interval((params.k - 2) * step + 1, (params.k - 1) * step);

  const int earlier = params.k - reach;
  MonomialIdeal rest = make_path_ideal_in(params.m, params.l, earlier > 0 ? earlier : 0, params.n);
  rest = ideal_sum(rest, MonomialIdeal::from_generators(params.n, {gap}));
  return ideal_product_disjoint(MonomialIdeal::from_generators(params.n, {last}), rest);
}

std::string to_string(const PathParams& params) {
  return "m=" + std::to_string(params.m) + ",l=" + std::to_string(params.l) + ",k=" +
         std::to_string(params.k);
}

PathParams parse_params(std::string_view text) {
  int m = -1;
  int l = -1;
  int k = -1;
  int n = -1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq + 1 >= item.size()) {
      throw std::invalid_argument("malformed params item '" + std::string(item) + "'");
    }
    int value = 0;
    const std::string_view num = item.substr(eq + 1);
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
    if (ec != std::errc{} || ptr != num.data() + num.size()) {
      throw std::invalid_argument("malformed params value '" + std::string(num) + "'");
    }
    const std::string_view key = item.substr(0, eq);
    if (key == "m") m = value;
    else if (key == "l") l = value;
    else if (key == "k") k = value;
    else if (key == "n") n = value;
    else throw std::invalid_argument("unknown params key '" + std::string(key) + "'");
    start = end + 1;
  }
  if (m < 0 || l < 0 || k < 0) throw std::invalid_argument("params need m, l and k");
  const PathParams p = PathParams::make(m, l, k);
  if (n >= 0 && n != p.n) throw std::invalid_argument("n does not equal k(m-l)+l");
  return p;
}

nlohmann::json to_json(const PathParams& params) {
  return {{"m", params.m}, {"l", params.l}, {"k", params.k}, {"n", params.n}};
}

PathParams params_from_json(const nlohmann::json& j) {
  const PathParams p = PathParams::make(j.at("m").get<int>(), j.at("l").get<int>(), j.at("k").get<int>());
  if (j.contains("n") && j.at("n").get<int>() != p.n) {
    throw std::invalid_argument("n does not equal k(m-l)+l");
  }
  return p;
}

}  // namespace pathideal
