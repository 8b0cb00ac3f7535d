#include "pathideal/topology.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <set>
#include <stdexcept>

#include "pathideal/errors.hpp"

namespace pathideal {

namespace {

bool canonical_less(std::uint32_t a, std::uint32_t b) {
  return lex_less(Monomial::from_mask(a), Monomial::from_mask(b));
}

std::vector<std::uint32_t> inclusion_minimal(std::vector<std::uint32_t> sets) {
  std::sort(sets.begin(), sets.end(), [](std::uint32_t a, std::uint32_t b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<std::uint32_t> kept;
  for (std::uint32_t s : sets) {
    const bool dominated =
        std::any_of(kept.begin(), kept.end(), [s](std::uint32_t t) { return (t & ~s) == 0; });
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end(), canonical_less);
  return kept;
}

}  // namespace

Clutter::Clutter(int n, std::span<const std::uint32_t> edges) : n_(n) {
  if (n < 0 || n > kMaxVariables) throw std::out_of_range("vertex count out of range");
  for (std::uint32_t e : edges) {
    if ((e & ~full_mask(n)) != 0) throw std::out_of_range("edge uses a vertex outside 1..n");
  }
  edges_ = inclusion_minimal(std::vector<std::uint32_t>(edges.begin(), edges.end()));
}

Clutter clutter_from_lists(int n, const std::vector<std::vector<int>>& edges) {
  std::vector<std::uint32_t> masks;
  for (const auto& e : edges) masks.push_back(Monomial::from_indices(e).mask());
  return Clutter(n, masks);
}

std::string to_string(const Clutter& c) {
  std::string out = "n=" + std::to_string(c.vertex_count()) + ";";
  bool first = true;
  for (std::uint32_t e : c.edges()) {
    out += first ? " " : ",";
    out += to_compact_string(Monomial::from_mask(e));
    first = false;
  }
  return out;
}

namespace {

std::pair<int, std::vector<std::uint32_t>> parse_set_family(std::string_view text) {
  const std::size_t semi = text.find(';');
  if (semi == std::string_view::npos) throw std::invalid_argument("expected 'n=<size>; {..},{..}'");
  std::string_view head = text.substr(0, semi);
  while (!head.empty() && head.front() == ' ') head.remove_prefix(1);
  while (!head.empty() && head.back() == ' ') head.remove_suffix(1);
  if (head.size() < 3 || head.substr(0, 2) != "n=") throw std::invalid_argument("family must start with n=<size>");
  int n = 0;
  const auto [ptr, ec] = std::from_chars(head.data() + 2, head.data() + head.size(), n);
  if (ec != std::errc{} || ptr != head.data() + head.size()) throw std::invalid_argument("malformed vertex count");
  std::vector<std::uint32_t> sets;
  std::string_view body = text.substr(semi + 1);
  std::size_t pos = 0;
  while ((pos = body.find('{', pos)) != std::string_view::npos) {
    const std::size_t close = body.find('}', pos);
    if (close == std::string_view::npos) throw std::invalid_argument("unterminated set in family");
    sets.push_back(parse_monomial(body.substr(pos, close - pos + 1)).mask());
    pos = close + 1;
  }
  return {n, sets};
}

}  // namespace

Clutter parse_clutter(std::string_view text) {
  auto [n, sets] = parse_set_family(text);
  return Clutter(n, sets);
}

SimplicialComplex parse_complex(std::string_view text) {
  auto [n, sets] = parse_set_family(text);
  return SimplicialComplex(n, sets);
}

Clutter clutter_of(const MonomialIdeal& ideal) {
  std::vector<std::uint32_t> edges;
  for (Monomial g : ideal.generators()) edges.push_back(g.mask());
  return Clutter(ideal.ambient(), edges);
}

std::vector<std::uint32_t> minimal_vertex_covers(const Clutter& c) {
  std::vector<std::uint32_t> covers{0};
  for (std::uint32_t edge : c.edges()) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t cover : covers) {
      if ((cover & edge) != 0) {
        next.push_back(cover);
        continue;
      }
      for (std::uint32_t rest = edge; rest != 0; rest &= rest - 1) next.push_back(cover | (rest & (~rest + 1)));
    }
    covers = inclusion_minimal(std::move(next));
  }
  return covers;
}

SimplicialComplex cover_complex(const Clutter& c) {
  std::vector<std::uint32_t> facets;
  for (std::uint32_t cover : minimal_vertex_covers(c)) facets.push_back(full_mask(c.vertex_count()) & ~cover);
  return SimplicialComplex(c.vertex_count(), facets);
}

namespace {

/// Whether `next` may follow the facets in `prefix` (given as indices into `facets`).
bool extends(std::span<const std::uint32_t> facets, std::uint32_t prefix, std::size_t next) {
  const std::uint32_t fj = facets[next];
  std::uint32_t attach = 0;  // vertices x with F_j \ F_l = {x} for some earlier l
  for (std::uint32_t rest = prefix; rest != 0; rest &= rest - 1) {
    const std::uint32_t diff = fj & ~facets[static_cast<std::size_t>(std::countr_zero(rest))];
    if (std::popcount(diff) == 1) attach |= diff;
  }
  for (std::uint32_t rest = prefix; rest != 0; rest &= rest - 1) {
    const std::uint32_t diff = fj & ~facets[static_cast<std::size_t>(std::countr_zero(rest))];
    if ((diff & attach) == 0) return false;
  }
  return true;
}

bool shell_search(std::span<const std::uint32_t> facets, std::uint32_t used, std::vector<std::size_t>& order,
                  std::vector<char>& dead) {
  const std::uint32_t all = (std::uint32_t{1} << facets.size()) - 1u;
  if (used == all) return true;
  if (dead[used] != 0) return false;
  for (std::size_t cand = 0; cand < facets.size(); ++cand) {
    const std::uint32_t bit = std::uint32_t{1} << cand;
    if ((used & bit) != 0 || !extends(facets, used, cand)) continue;
    order.push_back(cand);
    if (shell_search(facets, used | bit, order, dead)) return true;
    order.pop_back();
  }
  // Whether a prefix can be completed depends only on its set of facets.
  dead[used] = 1;
  return false;
}

}  // namespace

std::optional<ShellingOrder> find_shelling(const SimplicialComplex& complex, int facet_cap) {
  const auto facet_count = static_cast<int>(complex.facets().size());
  if (facet_count > facet_cap || facet_count > 24) {
    throw CapExceeded("shelling search needs at most " + std::to_string(std::min(facet_cap, 24)) + " facets (got " +
                      std::to_string(facet_count) + ")");
  }
  if (facet_count == 0) return ShellingOrder{};
  // Candidates by non-increasing dimension, then canonical order.
  std::vector<std::uint32_t> facets(complex.facets().begin(), complex.facets().end());
  std::stable_sort(facets.begin(), facets.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) > std::popcount(b); });
  std::vector<char> dead(std::size_t{1} << facets.size(), 0);
  std::vector<std::size_t> order;
  if (!shell_search(facets, 0, order, dead)) return std::nullopt;
  ShellingOrder out;
  for (std::size_t idx : order) out.push_back(facets[idx]);
  return out;
}

bool is_shelling_order(const SimplicialComplex& complex, std::span<const std::uint32_t> order) {
  std::vector<std::uint32_t> given(order.begin(), order.end());
  std::vector<std::uint32_t> expected(complex.facets().begin(), complex.facets().end());
  std::sort(given.begin(), given.end());
  std::sort(expected.begin(), expected.end());
  if (given != expected) return false;
  for (std::size_t j = 0; j < order.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      bool found = false;
      const std::uint32_t diff = order[j] & ~order[i];
      for (std::uint32_t rest = diff; rest != 0 && !found; rest &= rest - 1) {
        const std::uint32_t x = rest & (~rest + 1);
        for (std::size_t l = 0; l < j && !found; ++l) found = (order[j] & ~order[l]) == x;
      }
      if (!found) return false;
    }
  }
  return true;
}

std::optional<Clutter> apply_minor(const Clutter& c, MinorAssignment assignment) {
  if ((assignment.zero_set & assignment.one_set) != 0) {
    throw std::invalid_argument("a vertex cannot be set to both 0 and 1");
  }
  std::vector<std::uint32_t> edges;
  for (std::uint32_t e : c.edges()) {
    if ((e & assignment.zero_set) != 0) continue;
    const std::uint32_t shrunk = e & ~assignment.one_set;
    if (shrunk == 0) return std::nullopt;  // unit ideal
    edges.push_back(shrunk);
  }
  if (edges.empty()) return std::nullopt;  // zero ideal
  return Clutter(c.vertex_count(), edges);
}

namespace {

/// Enumerates zero/one assignments supported on `vertices`.
template <class Visit>
bool enumerate_assignments(std::uint32_t vertices, Visit&& visit) {
  for (std::uint32_t zeros = vertices;; zeros = (zeros - 1) & vertices) {
    const std::uint32_t free = vertices & ~zeros;
    for (std::uint32_t ones = free;; ones = (ones - 1) & free) {
      if (!visit(MinorAssignment{zeros, ones})) return false;
      if (ones == 0) break;
    }
    if (zeros == 0) break;
  }
  return true;
}

}  // namespace

void for_each_minor(const Clutter& c, const std::function<bool(const MinorAssignment&, const Clutter&)>& visit,
                    int vertex_cap) {
  if (c.vertex_count() > vertex_cap) {
    throw CapExceeded("minor enumeration needs n <= " + std::to_string(vertex_cap));
  }
  enumerate_assignments(full_mask(c.vertex_count()), [&](const MinorAssignment& a) {
    const std::optional<Clutter> minor = apply_minor(c, a);
    return !minor || visit(a, *minor);
  });
}

std::vector<std::pair<MinorAssignment, Clutter>> minors(const Clutter& c, int vertex_cap) {
  std::vector<std::pair<MinorAssignment, Clutter>> out;
  for_each_minor(
      c,
      [&out](const MinorAssignment& a, const Clutter& minor) {
        out.emplace_back(a, minor);
        return true;
      },
      vertex_cap);
  return out;
}

std::optional<int> has_free_vertex(const Clutter& c) {
  std::uint32_t seen_once = 0;
  std::uint32_t seen_twice = 0;
  for (std::uint32_t e : c.edges()) {
    seen_twice |= seen_once & e;
    seen_once |= e;
  }
  const std::uint32_t free = seen_once & ~seen_twice;
  if (free == 0) return std::nullopt;
  return std::countr_zero(free) + 1;
}

namespace {

bool lies_in_one_edge(const Clutter& c, int vertex) {
  const std::uint32_t bit = std::uint32_t{1} << (vertex - 1);
  return std::count_if(c.edges().begin(), c.edges().end(), [bit](std::uint32_t e) { return (e & bit) != 0; }) == 1;
}

/// Parameters of C_{m,l,k} if `c` is exactly that clutter on n = k(m-l)+l vertices.
std::optional<PathParams> recognize_path_clutter(const Clutter& c) {
  const auto edges = c.edges();
  if (edges.empty()) return std::nullopt;
  const int m = std::popcount(edges.front());
  if (m < 2) return std::nullopt;
  int step = 1;
  if (edges.size() > 1) step = std::countr_zero(edges[1]) - std::countr_zero(edges[0]);
  if (step < 1 || step > m - 1) return std::nullopt;
  const PathParams params = PathParams::make(m, m - step, static_cast<int>(edges.size()));
  if (params.n != c.vertex_count() || !(clutter_of(make_path_ideal(params)) == c)) return std::nullopt;
  return params;
}

}  // namespace

std::optional<int> path_minor_free_vertex(const PathParams& params, MinorAssignment assignment) {
  const Clutter base = clutter_of(make_path_ideal(params));
  const std::optional<Clutter> minor = apply_minor(base, assignment);
  if (!minor) return std::nullopt;
  // First generator, in path order, whose shrunk support is a minimal edge.
  for (int i = 1; i <= params.k; ++i) {
    const int first = (i - 1) * params.step() + 1;
    const std::uint32_t edge = Monomial::interval(first, first + params.m - 1).mask();
    if ((edge & assignment.zero_set) != 0) continue;
    const std::uint32_t shrunk = edge & ~assignment.one_set;
    const auto edges = minor->edges();
    if (std::find(edges.begin(), edges.end(), shrunk) != edges.end()) return std::countr_zero(shrunk) + 1;
  }
  return std::nullopt;
}

FreeVertexReport free_vertex_property(const Clutter& c, int vertex_cap) {
  if (c.vertex_count() > vertex_cap) {
    throw CapExceeded("free vertex check needs n <= " + std::to_string(vertex_cap));
  }
  FreeVertexReport report;
  report.holds = true;
  std::uint32_t support = 0;
  for (std::uint32_t e : c.edges()) support |= e;
  const std::optional<PathParams> path = recognize_path_clutter(c);
  std::set<std::vector<std::uint32_t>> seen;
  // Vertices outside every edge do not change the minor, so only the support is enumerated.
  enumerate_assignments(support, [&](const MinorAssignment& a) {
    const std::optional<Clutter> minor = apply_minor(c, a);
    if (!minor) return true;
    std::vector<std::uint32_t> key(minor->edges().begin(), minor->edges().end());
    if (!seen.insert(std::move(key)).second) return true;
    bool free = false;
    if (path) {
      const std::optional<int> v = path_minor_free_vertex(*path, a);
      free = v && lies_in_one_edge(*minor, *v);
    }
    if (!free) free = has_free_vertex(*minor).has_value();
    if (!free) {
      report.holds = false;
      report.counterexample = *minor;
      return false;
    }
    return true;
  });
  report.minors_checked = seen.size();
  return report;
}

SimplicialComplex pure_skeleton(const SimplicialComplex& complex, int dim) {
  return SimplicialComplex(complex.vertex_count(), complex.faces_of_size(dim + 1));
}

bool is_cohen_macaulay(const SimplicialComplex& complex, const Field& field) {
  if (complex.is_void()) return true;
  const int dim = complex.dimension();
  for (std::uint32_t f : complex.facets()) {
    if (std::popcount(f) != dim + 1) return false;  // CM complexes are pure
  }
  for (std::uint32_t sigma : complex.faces()) {
    std::vector<std::uint32_t> link;
    for (std::uint32_t f : complex.facets()) {
      if ((sigma & ~f) == 0) link.push_back(f & ~sigma);
    }
    const SimplicialComplex lk(complex.vertex_count(), link);
    const int top = dim - std::popcount(sigma);
    const std::vector<std::size_t> h = reduced_homology_dims(lk, field, kMaxVariables);
    for (int d = -1; d < top; ++d) {
      if (h[static_cast<std::size_t>(d + 1)] != 0) return false;
    }
  }
  return true;
}

bool is_sequentially_cm(const SimplicialComplex& complex, const Field& field, int vertex_cap) {
  if (complex.vertex_count() > vertex_cap) {
    throw CapExceeded("sequential CM check needs at most " + std::to_string(vertex_cap) + " vertices");
  }
  if (complex.is_void()) return true;
  for (int i = 0; i <= complex.dimension(); ++i) {
    if (!is_cohen_macaulay(pure_skeleton(complex, i), field)) return false;
  }
  return true;
}

nlohmann::json certification_json(const std::optional<FreeVertexReport>& fvp,
                                  const std::optional<std::optional<ShellingOrder>>& shelling,
                                  const std::optional<bool>& seq_cm) {
  nlohmann::json j;
  j["free_vertex_property"] = fvp ? nlohmann::json(fvp->holds) : nlohmann::json(nullptr);
  if (fvp && fvp->counterexample) j["counterexample"] = to_string(*fvp->counterexample);
  if (!shelling) {
    j["shelling"] = nullptr;
  } else if (!*shelling) {
    j["shelling"] = false;
  } else {
    nlohmann::json order = nlohmann::json::array();
    for (std::uint32_t f : **shelling) order.push_back(Monomial::from_mask(f).indices());
    j["shelling"] = order;
  }
  j["seq_cm"] = seq_cm ? nlohmann::json(*seq_cm) : nlohmann::json(nullptr);
  return j;
}

}  // namespace pathideal
