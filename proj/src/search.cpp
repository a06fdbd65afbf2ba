#include "schinzel/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>
#include <thread>

#include "schinzel/dihedral.hpp"
#include "schinzel/errors.hpp"
#include "schinzel/json_io.hpp"

namespace schinzel {

bool gusic_criterion(const BranchTuple& t, const PermGroup& g) {
  std::optional<int> slot = t.infinity_slot;
  if (!slot) {
    auto check = is_polynomial_tuple(t);
    if (!check.is_polynomial)
      throw std::invalid_argument("gusic_criterion: no sigma_inf slot");
    slot = check.slot;
  }
  PermGroup cyc = PermGroup::generate(g.degree(), {t.entries[*slot - 1]});
  return is_normal(g, cyc);
}

int mult_map_index(int k, int n) {
  int km = ((k % n) + n) % n;
  if (std::gcd(km, n) != 1)
    throw std::invalid_argument("mult_map_index: k is not a unit mod n");
  std::vector<int> img(n);
  for (int letter = 1; letter <= n; ++letter) {
    int res = letter == n ? 0 : letter;
    int to = (km * res) % n;
    img[letter - 1] = to == 0 ? n : to;
  }
  return Perm(std::move(img)).index();
}

namespace {

Perm standard_sigma_infinity(int n) {
  // (1 2 ... n)^{-1}: letter k -> k - 1.
  std::vector<int> img(n);
  for (int k = 1; k <= n; ++k) img[k - 1] = k == 1 ? n : k - 1;
  return Perm(std::move(img));
}

std::vector<Perm> centralizer_of_sigma(const Perm& sigma_inf) {
  std::vector<Perm> out;
  Perm acc(sigma_inf.degree());
  for (int i = 0; i < sigma_inf.order(); ++i) {
    out.push_back(acc);
    acc = acc * sigma_inf;
  }
  return out;
}

// Candidate polynomial tuples (s_1, ..., s_v, sigma_inf): product-one,
// nontrivial entries, genus 0, transitive, canonical under conjugation by
// the centralizer <sigma_inf>.
std::vector<BranchTuple> candidate_tuples(int n, int v) {
  Perm sigma_inf = standard_sigma_infinity(n);
  std::vector<Perm> centralizer = centralizer_of_sigma(sigma_inf);

  std::vector<Perm> symmetric_elements;
  {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    do {
      symmetric_elements.push_back(Perm{std::vector<int>(img)});
    } while (std::next_permutation(img.begin(), img.end()));
  }

  double work = 1;
  for (int i = 0; i + 2 < v + 1; ++i) work *= static_cast<double>(symmetric_elements.size());
  if (work > 5e7)
    throw BoundExceeded("candidate enumeration beyond desk scale");

  std::set<BranchTuple> canon;
  std::vector<Perm> free_entries(v - 1, Perm(n));

  auto consider = [&]() {
    Perm prod(n);
    for (const Perm& e : free_entries) prod = prod * e;
    Perm last = prod.inverse() * sigma_inf.inverse();
    if (last.is_identity()) return;
    BranchTuple t;
    t.degree = n;
    t.entries = free_entries;
    t.entries.push_back(last);
    t.entries.push_back(sigma_inf);
    t.infinity_slot = v + 1;
    long long ind_sum = 0;
    for (const Perm& e : t.entries) ind_sum += e.index();
    if (ind_sum != 2LL * (n - 1)) return;  // genus 0
    if (!t.transitive()) return;
    canon.insert(canonical_tuple(t, centralizer));
  };

  // v-1 slots are free; the v-th is forced by product-one.
  std::vector<std::size_t> pick(std::max(v - 2, 0), 0);
  if (v == 2) {
    for (const Perm& s : symmetric_elements) {
      if (s.is_identity()) continue;
      free_entries[0] = s;
      consider();
    }
  } else {
    for (;;) {
      for (int i = 0; i + 2 < v; ++i) free_entries[i] = symmetric_elements[pick[i]];
      bool trivial = false;
      for (int i = 0; i + 2 < v; ++i)
        if (free_entries[i].is_identity()) trivial = true;
      if (!trivial) {
        for (const Perm& s : symmetric_elements) {
          if (s.is_identity()) continue;
          free_entries[v - 2] = s;
          consider();
        }
      }
      int i = static_cast<int>(pick.size()) - 1;
      while (i >= 0 && ++pick[i] == symmetric_elements.size()) pick[i--] = 0;
      if (i < 0) break;
    }
  }
  return {canon.begin(), canon.end()};
}

// A generating sequence beginning with the given seed elements.
std::vector<Perm> generating_sequence_from(const PermGroup& g, std::vector<Perm> seed) {
  PermGroup sofar = PermGroup::generate(g.degree(), seed, g.order() + 1);
  for (const Perm& x : g.elements()) {
    if (sofar.order() == g.order()) break;
    if (sofar.contains(x)) continue;
    seed.push_back(x);
    sofar = PermGroup::generate(g.degree(), seed, g.order() + 1);
  }
  return seed;
}

struct QualifyingGamma {
  GroupAutomorphism gamma;
  CharSchinzelReport report;
};

// First (in canonical order) automorphism gamma fixing sigma_inf that passes
// the whole same-closure check.
std::optional<QualifyingGamma> find_qualifying_gamma(const PermGroup& g,
                                                     const BranchTuple& t, int v) {
  const Perm& sigma_inf = t.entries[t.r() - 1];
  std::vector<Perm> gens = generating_sequence_from(g, {sigma_inf});
  auto classes = conjugacy_classes(g);

  std::vector<std::vector<Perm>> candidates;
  candidates.push_back({sigma_inf});
  for (std::size_t i = 1; i < gens.size(); ++i) {
    int ord = gens[i].order();
    std::size_t cls = classes[class_index_of(classes, gens[i])].members.size();
    std::vector<Perm> cands;
    for (const Perm& x : g.elements())
      if (x.order() == ord &&
          classes[class_index_of(classes, x)].members.size() == cls)
        cands.push_back(x);
    candidates.push_back(std::move(cands));
  }

  std::vector<Perm> picked{sigma_inf};
  std::optional<QualifyingGamma> found;
  std::function<void(std::size_t)> scan = [&](std::size_t depth) {
    if (found) return;
    if (depth == gens.size()) {
      GroupAutomorphism gamma;
      try {
        gamma = automorphism_from_images(g, gens, picked);
      } catch (const std::invalid_argument&) {
        return;
      }
      CharSchinzelReport report = charschinzel_check(g, t, gamma, v);
      if (report.ok()) found = QualifyingGamma{gamma, report};
      return;
    }
    for (const Perm& cand : candidates[depth]) {
      picked.push_back(cand);
      scan(depth + 1);
      picked.pop_back();
      if (found) return;
    }
  };
  scan(1);
  return found;
}

std::vector<std::string> slot_labels(const PermGroup& g, const BranchTuple& t) {
  auto classes = conjugacy_classes(g);
  std::vector<std::string> labels;
  for (const Perm& e : t.entries) {
    std::string dihedral = dihedral_class_label(g.degree(), e);
    int ci = class_index_of(classes, e);
    labels.push_back(g.order() == 2 * static_cast<std::size_t>(g.degree())
                         ? dihedral
                         : classes[ci].label);
  }
  return labels;
}

CandidateReport analyze_candidate(const BranchTuple& t, int v,
                                  std::size_t order_bound) {
  auto started = std::chrono::steady_clock::now();
  CandidateReport report;
  report.degree = t.degree;
  report.v = v;
  report.tuple = t;
  report.genus = genus(t);

  PermGroup g = PermGroup::generate(t.degree, t.entries, order_bound);
  report.group_order = g.order();
  for (const Perm& s : g.generators())
    report.group_generators.push_back(s.cycle_string());
  report.class_labels = slot_labels(g, t);
  report.sigma_inf_normal = gusic_criterion(t, g);

  auto qualifying = find_qualifying_gamma(g, t, v);
  if (qualifying) {
    report.charschinzel_i = qualifying->report.cond_i;
    report.charschinzel_ii = qualifying->report.cond_ii;
    report.charschinzel_iii = qualifying->report.cond_iii;
    if (qualifying->report.conjugator)
      report.conjugator = qualifying->report.conjugator->cycle_string();
    report.gamma_image_of_sigma1 =
        qualifying->gamma.apply(t.entries[0]).cycle_string();

    PermGroup h_f = point_stabilizer(g, 1);
    std::vector<Perm> image;
    for (const Perm& x : h_f.elements()) image.push_back(qualifying->gamma.apply(x));
    PermGroup h_g = PermGroup::from_elements(g.degree(), std::move(image));
    PairSetup setup = make_pair_setup(g, h_f, h_g, qualifying->gamma);
    ReducibilityVerdict verdict = is_newly_reducible(setup);
    report.orbit_lengths = verdict.orbit_lengths;
    report.reducible = verdict.orbit_lengths.size() >= 2;
    report.verdict = to_string(verdict.verdict);
    if (verdict.witness) {
      report.witness_order = verdict.witness->order();
      report.witness_side = verdict.witness_side;
    }
  } else {
    report.verdict = "no_qualifying_gamma";
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace

NormalSigmaClassification classify_normal_sigma_infty(int n, int v,
                                                      std::size_t order_bound) {
  NormalSigmaClassification out;
  out.n = n;
  out.v = v;
  for (const BranchTuple& t : candidate_tuples(n, v)) {
    PermGroup g;
    try {
      g = PermGroup::generate(n, t.entries, order_bound);
    } catch (const BoundExceeded&) {
      continue;
    }
    if (!gusic_criterion(t, g)) continue;
    ++out.surviving_classes;

    // With <sigma_inf> normal, every entry acts on it as multiplication by
    // some unit k; its index is bounded below by the multiplication map's.
    const Perm& sigma_inf = t.entries[t.r() - 1];
    for (int i = 0; i + 1 < t.r(); ++i) {
      Perm conj_image = conjugate(sigma_inf, t.entries[i]);
      for (int k = 1; k < n; ++k) {
        Perm power(n);
        for (int p = 0; p < k; ++p) power = power * sigma_inf;
        if (power == conj_image) {
          if (t.entries[i].index() < mult_map_index(k, n))
            out.index_bound_verified = false;
          break;
        }
      }
    }

    bool cyclic = g.order() == static_cast<std::size_t>(n) && g.is_abelian();
    bool dihedral = false;
    if (g.order() == 2 * static_cast<std::size_t>(n)) {
      dihedral = true;
      PermGroup cyc = PermGroup::generate(n, {sigma_inf});
      for (const Perm& x : g.elements())
        if (!cyc.contains(x) && x.order() != 2) dihedral = false;
    }
    if (cyclic)
      ++out.cyclic_classes;
    else if (dihedral)
      ++out.dihedral_classes;
    else
      out.exceptions.push_back(t);
  }
  return out;
}

std::vector<CandidateReport> search_schinzel(const SearchConfig& config) {
  if (config.v < 2)
    throw std::invalid_argument("search: v must be >= 2");
  if (config.jobs < 1)
    throw std::invalid_argument("search: jobs must be >= 1");

  namespace fs = std::filesystem;
  const bool use_cache = !config.cache_dir.empty();
  if (use_cache) fs::create_directories(config.cache_dir);

  std::vector<CandidateReport> all;
  for (int n = 2; n <= config.max_degree; ++n) {
    std::vector<BranchTuple> tuples = candidate_tuples(n, config.v);
    std::vector<CandidateReport> slots(tuples.size());
    std::vector<char> ok(tuples.size(), 0);

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= tuples.size()) break;
        std::string key = candidate_cache_key(n, config.v, tuples[i], config.order_bound);
        fs::path entry;
        if (use_cache) {
          entry = fs::path(config.cache_dir) / (fnv1a_hex(key) + ".json");
          std::ifstream in(entry);
          if (in) {
            try {
              json j = json::parse(in);
              if (j.at("key").get<std::string>() == key) {
                slots[i] = candidate_from_json(j.at("report"));
                ok[i] = 1;
                continue;
              }
            } catch (...) {
            }
          }
        }
        try {
          slots[i] = analyze_candidate(tuples[i], config.v, config.order_bound);
          ok[i] = 1;
          if (use_cache) {
            json j;
            j["key"] = key;
            j["report"] = candidate_to_json(slots[i]);
            std::ofstream out(entry);
            out << j.dump(2) << '\n';
          }
        } catch (const BoundExceeded&) {
          ok[i] = 0;  // reported as skipped; the search continues
        }
      }
    };

    std::vector<std::thread> pool;
    int jobs = std::min<int>(config.jobs, std::max<std::size_t>(tuples.size(), 1));
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    for (std::size_t i = 0; i < tuples.size(); ++i)
      if (ok[i] && slots[i].verdict != "no_qualifying_gamma")
        all.push_back(std::move(slots[i]));
  }
  std::sort(all.begin(), all.end(), [](const CandidateReport& a, const CandidateReport& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.tuple < b.tuple;
  });
  return all;
}

ConjectureReport verify_gusic_conjecture(int max_degree, int v,
                                         const SearchConfig& base) {
  SearchConfig config = base;
  config.max_degree = max_degree;
  config.v = v;

  ConjectureReport out;
  out.max_degree = max_degree;
  out.v = v;
  for (CandidateReport& r : search_schinzel(config)) {
    if (r.verdict != to_string(Reducibility::newly_reducible)) continue;
    if (!r.sigma_inf_normal) out.unexplained.push_back(r);
    out.survivors.push_back(std::move(r));
  }

  // Group the survivors up to the zeta_v rotation: same degree, same group
  // order, same class multiset.
  std::set<std::string> cases;
  for (const CandidateReport& r : out.survivors) {
    std::vector<std::string> labels = r.class_labels;
    std::sort(labels.begin(), labels.end());
    std::string key = std::to_string(r.degree) + "/" + std::to_string(r.group_order);
    for (const std::string& l : labels) key += "/" + l;
    cases.insert(key);
  }
  out.survivor_cases = cases.size();
  out.unique_dihedral_degree4 =
      cases.size() == 1 && !out.survivors.empty() &&
      out.survivors.front().degree == 4 && out.survivors.front().group_order == 8;
  return out;
}

ModularPairingReport modular_pairing_report(int n) {
  ModularPairingReport out;
  out.n = n;

  PermGroup d = dihedral_group(n);
  NielsenClassSpec spec;
  spec.group = d;
  Perm c0 = AffineElem(n, -1, 0).to_perm();
  Perm c1 = AffineElem(n, -1, 1).to_perm();
  spec.class_reps = {c0, c0, c1, c1};
  spec.equivalence = Equivalence::inner;
  NielsenEnumeration inner = enumerate_nielsen(spec);
  out.inner_classes = inner.representatives.size();

  // Qualifying gammas: involutive, moving the point stabilizer to a
  // non-conjugate subgroup (the composite cover here has trivial sigma_inf,
  // so the extension constraint is gamma^2 = id).
  std::vector<GroupAutomorphism> gammas;
  PermGroup h_f = point_stabilizer(d, 1);
  for (const GroupAutomorphism& gamma : all_automorphisms(d)) {
    if (!gamma.power(2).is_identity()) continue;
    std::vector<Perm> image;
    for (const Perm& x : h_f.elements()) image.push_back(gamma.apply(x));
    PermGroup h_g = PermGroup::from_elements(n, std::move(image));
    if (are_conjugate_subgroups(d, h_f, h_g)) continue;
    gammas.push_back(gamma);
  }

  auto flipped = [](const BranchTuple& t) {
    BranchTuple out_t = t;
    std::reverse(out_t.entries.begin(), out_t.entries.end());
    return out_t;
  };

  std::set<BranchTuple> qualifying;
  for (const BranchTuple& t : inner.representatives) {
    BranchTuple target = flipped(t);
    bool found = false;
    for (const GroupAutomorphism& gamma : gammas) {
      BranchTuple gamma_t = t;
      for (Perm& e : gamma_t.entries) e = gamma.apply(e);
      if (!inner_conjugators(target, gamma_t, d).empty()) {
        found = true;
        break;
      }
    }
    if (found) qualifying.insert(t);
  }
  out.qualifying_classes = qualifying.size();

  std::set<BranchTuple> seen;
  for (const BranchTuple& t : qualifying) {
    if (seen.count(t)) continue;
    seen.insert(t);
    seen.insert(canonical_tuple(flipped(t), d.elements()));
    ++out.qualifying_pairs;
  }
  return out;
}

}  // namespace schinzel
