// cocycle-lab: command-line front end over the core library.
//
// Subcommands: group, h2, scan-ctfg, dual-h2, tau, pair, slices, chartab,
// fusion, amen, center-h2.  Machine output is line-oriented key=value; with
// identical inputs and seed it is byte-identical across runs and worker
// counts.  Exit codes: 0 success, 1 domain error, 2 usage error.

#include "CLI11.hpp"

#include "cocycle/abelian.hpp"
#include "cocycle/catalog.hpp"
#include "cocycle/cohomology.hpp"
#include "cocycle/fusion.hpp"
#include "cocycle/io.hpp"
#include "cocycle/tensor.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

using namespace cocycle;

namespace {

struct Options {
  std::string format = "text";
  int max_order = 36;
  std::uint64_t budget = 4096;
  std::uint64_t seed = 0;
  std::string cache_dir;
};

std::string cache_directory(const Options& opt) {
  if (!opt.cache_dir.empty()) return opt.cache_dir;
  if (const char* env = std::getenv("COCYCLE_LAB_CACHE")) return env;
  return ".cocycle-cache";
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::optional<std::string> cache_lookup(const std::string& dir, std::uint64_t key) {
  std::filesystem::path p = std::filesystem::path(dir) / (std::to_string(key) + ".out");
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void cache_store(const std::string& dir, std::uint64_t key, const std::string& value) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return; // cache is best-effort
  std::filesystem::path p = std::filesystem::path(dir) / (std::to_string(key) + ".out");
  std::ofstream out(p, std::ios::binary);
  out << value;
}

// run the expensive producer through the cache, keyed by a canonical string
std::string cached(const Options& opt, const std::string& canonical_key,
                   const std::function<std::string()>& produce) {
  std::string dir = cache_directory(opt);
  std::uint64_t key = fnv1a(canonical_key + "|format=" + opt.format);
  if (auto hit = cache_lookup(dir, key)) return *hit;
  std::string value = produce();
  cache_store(dir, key, value);
  return value;
}

// ordered parallel map with a bounded worker pool; assembly stays in input order
template <typename In, typename Fn>
auto parallel_map(const std::vector<In>& items, Fn fn)
    -> std::vector<decltype(fn(items.front()))> {
  using Out = decltype(fn(items.front()));
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<Out> out(items.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= items.size()) return;
        out[i] = fn(items[i]);
      }
    });
  for (auto& t : pool) t.join();
  return out;
}

std::string group_reference_key(const std::string& ref) {
  if (ref.rfind("catalog:", 0) == 0) return ref;
  return "file:" + io::read_text_file(ref); // content-addressed
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

std::string join_ints(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string join_u32(const std::vector<std::uint32_t>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

bool machine(const Options& opt) { return opt.format == "machine"; }

// ---------------------------------------------------------------- group ----

std::string cmd_group(const Options& opt, const std::string& ref, const std::string& out_path) {
  GroupPtr g = io::resolve_group(ref);
  std::ostringstream os;
  auto classes = conjugacy_classes(*g);
  if (machine(opt)) {
    os << "group=" << ref << "\n";
    os << "order=" << g->order() << "\n";
    os << "abelian=" << (g->is_abelian() ? "yes" : "no") << "\n";
    os << "exponent=" << g->exponent() << "\n";
    os << "conjugacy_classes=" << classes.size() << "\n";
    os << "center_order=" << center(g).order() << "\n";
  } else {
    os << "group " << ref << "\n";
    os << "  order:             " << g->order() << "\n";
    os << "  abelian:           " << (g->is_abelian() ? "yes" : "no") << "\n";
    os << "  exponent:          " << g->exponent() << "\n";
    os << "  conjugacy classes: " << classes.size() << "\n";
    os << "  center order:      " << center(g).order() << "\n";
  }
  if (!out_path.empty()) io::write_text_file(out_path, io::write_group_file(*g));
  return os.str();
}

// ------------------------------------------------------------------- h2 ----

std::string render_h2(const Options& opt, const std::string& ref, const CohClassSet& coh) {
  std::ostringstream os;
  if (machine(opt)) {
    os << "group=" << ref << "\n";
    os << "order=" << coh.group->order() << "\n";
    os << "modulus=" << coh.modulus << "\n";
    os << "extended_modulus=" << coh.extended_modulus << "\n";
    os << "class_count=" << coh.class_count << "\n";
    os << "invariant_factors=" << join_u32(coh.invariant_factors) << "\n";
    std::size_t nondeg = 0;
    for (std::size_t i = 0; i < coh.transversal.size(); ++i) {
      bool nd = is_nondegenerate(coh.transversal[i]);
      nondeg += nd;
      os << "class_" << i << "=" << (nd ? "nondegenerate" : "degenerate") << "\n";
    }
    os << "nondegenerate_classes=" << nondeg << "\n";
  } else {
    os << "H^2(G;T) for " << ref << "\n";
    os << "  |H^2| = " << coh.class_count;
    if (!coh.invariant_factors.empty())
      os << "  (invariant factors " << join_u32(coh.invariant_factors, " | ") << ")";
    os << "\n";
    std::size_t nondeg = 0;
    for (const auto& rep : coh.transversal) nondeg += is_nondegenerate(rep);
    os << "  nondegenerate classes: " << nondeg << "\n";
  }
  return os.str();
}

std::string cmd_h2(const Options& opt, const std::string& ref) {
  return cached(opt, "h2|" + group_reference_key(ref) + "|max=" + std::to_string(opt.max_order) +
                         "|cap=" + std::to_string(opt.budget),
                [&] {
                  H2Options h;
                  h.max_order = opt.max_order;
                  h.transversal_cap = opt.budget;
                  return render_h2(opt, ref, h2_classes(io::resolve_group(ref), h));
                });
}

// ------------------------------------------------------------- scan-ctfg ----

std::string cmd_scan_ctfg(const Options& opt, const std::string& ref, int max_abelian) {
  H2Options h;
  h.max_order = opt.max_order;
  h.transversal_cap = opt.budget;
  auto verdict_line = [&](const std::string& name, GroupPtr g) {
    bool ct = is_central_type(g, h);
    int n = g->order();
    int root = int(std::lround(std::sqrt(double(n))));
    bool square = root * root == n;
    std::ostringstream os;
    if (machine(opt))
      os << "group=" << name << " order=" << n << " central_type=" << (ct ? "yes" : "no")
         << " square_order=" << (square ? "yes" : "no") << "\n";
    else
      os << "  " << name << " (order " << n << "): central-type: " << (ct ? "yes" : "no") << "\n";
    return os.str();
  };
  if (!ref.empty()) {
    return cached(opt, "scan-ctfg|" + group_reference_key(ref) + "|max=" +
                           std::to_string(opt.max_order),
                  [&] { return verdict_line(ref, io::resolve_group(ref)); });
  }
  return cached(opt,
                "scan-ctfg|catalog|abelian=" + std::to_string(max_abelian) +
                    "|max=" + std::to_string(opt.max_order),
                [&] {
                  auto entries = scan_catalog(max_abelian);
                  auto rows = parallel_map(entries, [&](const CatalogEntry& e) {
                    return verdict_line(e.name, build_group(e.spec));
                  });
                  std::ostringstream os;
                  if (!machine(opt)) os << "central type scan over the catalog\n";
                  for (const auto& r : rows) os << r;
                  return os.str();
                });
}

// --------------------------------------------------------------- dual-h2 ----

std::string cmd_dual_h2(const Options& opt, const std::string& ref) {
  return cached(
      opt, "dual-h2|" + group_reference_key(ref) + "|max=" + std::to_string(opt.max_order), [&] {
        H2Options h;
        h.max_order = opt.max_order;
        h.transversal_cap = opt.budget;
        DualH2Report report = dual_h2_report(io::resolve_group(ref), h);
        std::ostringstream os;
        if (machine(opt)) {
          os << "group=" << ref << "\n";
          for (std::size_t i = 0; i < report.rows.size(); ++i) {
            const auto& row = report.rows[i];
            os << "subgroup_" << i << "=" << join_ints(row.subgroup.elements)
               << " order=" << row.subgroup.order() << " h2_order=" << row.h2_order
               << " nondegenerate=" << row.nondegenerate_classes
               << " orbits=" << row.nondegenerate_orbits << "\n";
          }
          os << "total=" << report.total << "\n";
        } else {
          os << "H^2(G-hat;T) decomposition for " << ref << "\n";
          for (const auto& row : report.rows)
            os << "  subgroup {" << join_ints(row.subgroup.elements) << "}: |H^2| = "
               << row.h2_order << ", nondegenerate " << row.nondegenerate_classes << ", orbits "
               << row.nondegenerate_orbits << "\n";
          os << "  total |H^2(G-hat;T)| = " << report.total << "\n";
        }
        return os.str();
      });
}

// ------------------------------------------------------------------- tau ----

std::string render_form(const AlternatingForm& f) {
  std::string s;
  for (std::size_t i = 0; i < f.b.size(); ++i) {
    if (i) s += ";";
    s += join_ints(f.b[i]);
  }
  return s;
}

std::string cmd_tau(const Options& opt, const std::string& action_path, int form_index,
                    bool list_only) {
  std::ifstream in(action_path);
  if (!in) throw std::invalid_argument("cannot open action file: " + action_path);
  KActionPtr act = io::read_action_file(in);
  auto forms = k_invariant_classes(*act);
  std::ostringstream os;
  if (list_only || form_index < 0) {
    if (machine(opt)) {
      os << "invariant_forms=" << forms.size() << "\n";
      for (std::size_t i = 0; i < forms.size(); ++i)
        os << "form_" << i << "=" << render_form(forms[i]) << "\n";
    } else {
      os << forms.size() << " K-invariant form classes\n";
      for (std::size_t i = 0; i < forms.size(); ++i)
        os << "  [" << i << "] " << render_form(forms[i]) << "\n";
    }
    return os.str();
  }
  if (form_index >= int(forms.size()))
    throw std::invalid_argument("form index out of range (have " + std::to_string(forms.size()) +
                                " invariant classes)");
  Cocycle c = form_to_cocycle(forms[form_index]);
  ExtensionCocycle b = tau(act, c, opt.seed);
  bool cobound = is_extension_coboundary(*act, b);
  if (machine(opt)) {
    os << "action=" << action_path << "\n";
    os << "form_index=" << form_index << "\n";
    os << "form=" << render_form(forms[form_index]) << "\n";
    for (std::size_t g = 0; g < b.table.size(); ++g)
      os << "tau_row_" << g << "=" << join_ints(b.table[g]) << "\n";
    os << "membership=pass\n";
    os << "cocycle_identity=pass\n";
    os << "is_coboundary=" << (cobound ? "yes" : "no") << "\n";
  } else {
    os << "tau of invariant class [" << form_index << "] " << render_form(forms[form_index])
       << "\n";
    for (std::size_t g = 0; g < b.table.size(); ++g)
      os << "  b(" << g << ",-) = " << join_ints(b.table[g], " ") << "\n";
    os << "  A-membership and the K-cocycle identity hold\n";
    os << "  coboundary in Z^2(K;A): " << (cobound ? "yes" : "no") << "\n";
  }
  return os.str();
}

// ------------------------------------------------------------------ pair ----

std::string render_certificate(const Options& opt, const MonoidalPairCertificate& cert,
                               std::size_t index) {
  std::ostringstream os;
  auto t1 = character_table(cert.g1);
  auto t2 = character_table(cert.g2);
  std::vector<int> deg1 = t1.degrees, deg2 = t2.degrees;
  std::sort(deg1.begin(), deg1.end());
  std::sort(deg2.begin(), deg2.end());
  auto [r1, d1] = fusion_ring_of_group(t1);
  auto [r2, d2] = fusion_ring_of_group(t2);
  bool fusion_iso = fusion_ring_isomorphism(r1, d1, r2, d2).has_value();
  if (machine(opt)) {
    os << "pair_" << index << "_setup=" << cert.description << "\n";
    os << "pair_" << index << "_order=" << cert.g1->order() << "\n";
    os << "pair_" << index << "_form=" << render_form(cert.form) << "\n";
    os << "pair_" << index << "_form_degenerate=" << (cert.form_degenerate ? "yes" : "no") << "\n";
    os << "pair_" << index << "_groups_isomorphic=" << (cert.groups_isomorphic ? "yes" : "no")
       << "\n";
    os << "pair_" << index << "_degrees_equal=" << (deg1 == deg2 ? "yes" : "no") << "\n";
    os << "pair_" << index << "_fusion_rings_isomorphic=" << (fusion_iso ? "yes" : "no") << "\n";
    os << "pair_" << index << "_a_factors=" << join_ints(cert.action->a.factors) << "\n";
    for (std::size_t g = 0; g < cert.action->table.size(); ++g)
      os << "pair_" << index << "_action_row_" << g << "=" << join_ints(cert.action->table[g])
         << "\n";
    for (std::size_t g = 0; g < cert.b1.table.size(); ++g)
      os << "pair_" << index << "_b1_row_" << g << "=" << join_ints(cert.b1.table[g]) << "\n";
    for (std::size_t g = 0; g < cert.tau_c.table.size(); ++g)
      os << "pair_" << index << "_tau_row_" << g << "=" << join_ints(cert.tau_c.table[g]) << "\n";
  } else {
    os << "certified pair #" << index << ": " << cert.description << ", |G| = "
       << cert.g1->order() << "\n";
    os << "  invariant form: " << render_form(cert.form)
       << (cert.form_degenerate ? " (degenerate, flagged)" : " (nondegenerate)") << "\n";
    os << "  groups isomorphic:       " << (cert.groups_isomorphic ? "yes" : "no") << "\n";
    os << "  degree multisets equal:  " << (deg1 == deg2 ? "yes" : "no") << "\n";
    os << "  fusion rings isomorphic: " << (fusion_iso ? "yes" : "no") << "\n";
  }
  return os.str();
}

std::string cmd_pair(const Options& opt, int max_a, int max_k, int count,
                     const std::string& out_prefix) {
  std::string key = "pair|a=" + std::to_string(max_a) + "|k=" + std::to_string(max_k) +
                    "|count=" + std::to_string(count) + "|budget=" + std::to_string(opt.budget) +
                    "|out=" + out_prefix;
  return cached(opt, key, [&] {
    PairSearchOptions popt;
    popt.max_a = max_a;
    popt.max_k = max_k;
    popt.max_certified = std::size_t(count);
    popt.b1_cap = opt.budget;
    auto found = monoidal_pair_search(popt);
    std::ostringstream os;
    if (machine(opt)) os << "certified=" << found.size() << "\n";
    else os << found.size() << " certified monoidally equivalent pair(s)\n";
    for (std::size_t i = 0; i < found.size(); ++i) {
      os << render_certificate(opt, found[i], i);
      if (!out_prefix.empty()) {
        io::write_text_file(out_prefix + std::to_string(i) + "_g1.group",
                            io::write_group_file(*found[i].g1));
        io::write_text_file(out_prefix + std::to_string(i) + "_g2.group",
                            io::write_group_file(*found[i].g2));
      }
    }
    return os.str();
  });
}

// ---------------------------------------------------------------- slices ----

std::string cmd_slices(const Options& opt, const std::string& ref, const std::string& elements,
                       int form_index) {
  GroupPtr g = io::resolve_group(ref);
  Subgroup s;
  if (elements.empty()) {
    std::vector<int> all(g->order());
    for (int i = 0; i < g->order(); ++i) all[i] = i;
    s = Subgroup{g, all};
  } else {
    s = Subgroup{g, parse_int_list(elements)};
  }
  AbelianStructure abs = abelian_structure(g, s);
  auto forms = alternating_classes(abs.group);
  if (form_index < 0 || form_index >= int(forms.size()))
    throw std::invalid_argument("form index out of range (have " + std::to_string(forms.size()) +
                                " forms)");
  Cocycle c = form_to_cocycle(forms[form_index]);
  GroupTensor f = embed_dual_cocycle(g, abs, c);
  bool identity_ok = check_dual_cocycle(f);
  GroupTensor r = r_matrix(f);
  SliceSpan span = slice_span(r);
  bool cocom = is_cocommutative_twist(f);
  std::ostringstream os;
  if (machine(opt)) {
    os << "group=" << ref << "\n";
    os << "subgroup=" << join_ints(s.elements) << "\n";
    os << "factors=" << join_ints(abs.group.factors) << "\n";
    os << "form_index=" << form_index << "\n";
    os << "form=" << render_form(forms[form_index]) << "\n";
    os << "unitary=pass\n";
    os << "cocycle_identity=" << (identity_ok ? "pass" : "fail") << "\n";
    os << "f_nonzero=" << f.nonzero_count() << "\n";
    os << "rank=" << span.rank << "\n";
    os << "support=" << join_ints(span.support.elements) << "\n";
    os << "cocommutative=" << (cocom ? "yes" : "no") << "\n";
  } else {
    os << "slice span for " << ref << ", subgroup {" << join_ints(s.elements) << "} = C"
       << join_ints(abs.group.factors, " x C") << ", form [" << form_index << "]\n";
    os << "  dual cocycle identity: " << (identity_ok ? "pass" : "fail") << "\n";
    os << "  slice-span rank:       " << span.rank << " of " << s.order() << "\n";
    os << "  support subgroup:      {" << join_ints(span.support.elements) << "}\n";
    os << "  cocommutative twist:   " << (cocom ? "yes" : "no") << "\n";
  }
  return os.str();
}

// --------------------------------------------------------------- chartab ----

std::string cmd_chartab(const Options& opt, const std::string& ref) {
  return cached(opt, "chartab|" + group_reference_key(ref), [&] {
    CharacterTable t = character_table(io::resolve_group(ref));
    std::ostringstream os;
    int k = int(t.degrees.size());
    if (machine(opt)) {
      os << "group=" << ref << "\n";
      os << "classes=" << k << "\n";
      std::string sizes;
      for (int c = 0; c < k; ++c) {
        if (c) sizes += ",";
        sizes += std::to_string(t.classes[c].size());
      }
      os << "class_sizes=" << sizes << "\n";
      for (int i = 0; i < k; ++i) {
        os << "chi_" << i << "_degree=" << t.degrees[i] << "\n";
        os << "chi_" << i << "=";
        for (int c = 0; c < k; ++c) {
          if (c) os << ";";
          os << t.values[i][c].to_string();
        }
        os << "\n";
      }
    } else {
      os << "character table of " << ref << " (" << k << " classes)\n";
      os << "  class sizes:";
      for (int c = 0; c < k; ++c) os << " " << t.classes[c].size();
      os << "\n";
      for (int i = 0; i < k; ++i) {
        os << "  chi_" << i << " (deg " << t.degrees[i] << "):";
        for (int c = 0; c < k; ++c) os << "  " << t.values[i][c].to_string();
        os << "\n";
      }
    }
    return os.str();
  });
}

// ---------------------------------------------------------------- fusion ----

std::string cmd_fusion(const Options& opt, const std::string& ref, const std::string& vs) {
  std::string key =
      "fusion|" + group_reference_key(ref) + (vs.empty() ? "" : "|vs|" + group_reference_key(vs));
  return cached(opt, key, [&] {
    auto [r1, d1] = fusion_ring_of_group(character_table(io::resolve_group(ref)));
    std::ostringstream os;
    if (machine(opt)) {
      os << "group=" << ref << "\n";
      os << "basis=" << r1.size() << "\n";
      std::string dims;
      for (std::size_t i = 0; i < r1.size(); ++i) {
        if (i) dims += ",";
        dims += d1.d[i].get_str();
      }
      os << "dimensions=" << dims << "\n";
      for (std::size_t i = 0; i < r1.size(); ++i)
        for (std::size_t j = 0; j < r1.size(); ++j) {
          std::string row;
          for (std::size_t k = 0; k < r1.size(); ++k) {
            if (k) row += ",";
            row += std::to_string(r1.m(i, j, k));
          }
          os << "m_" << i << "_" << j << "=" << row << "\n";
        }
    } else {
      os << "fusion ring of " << ref << " with " << r1.size() << " simple objects\n";
      for (std::size_t i = 0; i < r1.size(); ++i)
        for (std::size_t j = 0; j < r1.size(); ++j) {
          os << "  " << i << " * " << j << " =";
          bool first = true;
          for (std::size_t k = 0; k < r1.size(); ++k)
            for (std::uint32_t c = 0; c < r1.m(i, j, k); ++c) {
              os << (first ? " " : " + ") << k;
              first = false;
            }
          os << "\n";
        }
    }
    if (!vs.empty()) {
      auto [r2, d2] = fusion_ring_of_group(character_table(io::resolve_group(vs)));
      auto witness = fusion_ring_isomorphism(r1, d1, r2, d2);
      if (machine(opt)) {
        os << "vs=" << vs << "\n";
        os << "fusion_rings_isomorphic=" << (witness ? "yes" : "no") << "\n";
        if (witness) {
          std::string w;
          for (std::size_t i = 0; i < witness->size(); ++i) {
            if (i) w += ",";
            w += std::to_string((*witness)[i]);
          }
          os << "witness=" << w << "\n";
        }
      } else {
        os << "  fusion rings of " << ref << " and " << vs
           << " isomorphic: " << (witness ? "yes" : "no") << "\n";
      }
    }
    return os.str();
  });
}

// ------------------------------------------------------------------ amen ----

Measure parse_measure(const std::string& s) {
  std::map<std::size_t, mpq_class> w;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad measure entry: " + item);
    std::size_t idx = std::stoul(item.substr(0, colon));
    mpq_class q(item.substr(colon + 1));
    q.canonicalize();
    w[idx] += q;
  }
  return Measure::make(std::move(w));
}

std::string cmd_amen(const Options& opt, const std::string& ring_ref, const std::string& mu_text,
                     const std::string& truncations, int n_max) {
  FusionRing ring = FusionRing::su2(0);
  DimensionFunction d;
  if (ring_ref.rfind("su2:", 0) == 0) {
    std::size_t bound = std::stoul(ring_ref.substr(4));
    std::tie(ring, d) = su2_ring(bound);
  } else if (ring_ref.rfind("group:", 0) == 0) {
    std::tie(ring, d) =
        fusion_ring_of_group(character_table(io::resolve_group(ring_ref.substr(6))));
  } else {
    throw std::invalid_argument("ring must be su2:<bound> or group:<ref>");
  }
  Measure mu = parse_measure(mu_text);
  AmenabilityParams params;
  params.n_max = n_max;
  for (int t : parse_int_list(truncations)) params.truncations.push_back(std::size_t(t));
  AmenabilityReport report = amenability_report(ring, d, mu, params);
  std::ostringstream os;
  if (machine(opt)) {
    os << "ring=" << ring_ref << "\n";
    os << "mu=" << mu_text << "\n";
    for (const auto& row : report.norms) {
      std::ostringstream num;
      num.precision(15);
      num << row.norm;
      os << "N=" << row.truncation << " norm=" << num.str() << "\n";
    }
    for (const auto& row : report.returns.rows) {
      std::ostringstream num;
      num.precision(15);
      num << row.root;
      os << "n=" << row.n << " return=" << row.value.get_str() << " root=" << num.str() << "\n";
    }
    if (report.returns.truncated_at)
      os << "max_safe_n=" << (*report.returns.truncated_at - 1) << "\n";
    os << "dimension_identity=" << (report.dimension_identity_ok ? "pass" : "fail") << "\n";
    os << "contraction=" << (report.contraction_ok ? "pass" : "fail") << "\n";
    os << "verdict=" << verdict_name(report.verdict) << "\n";
  } else {
    os << "amenability diagnostics for " << ring_ref << ", mu = " << mu_text << "\n";
    for (const auto& row : report.norms)
      os << "  ||lambda_mu|| at N = " << row.truncation << ": " << row.norm << "\n";
    for (const auto& row : report.returns.rows)
      os << "  n = " << row.n << ": return " << row.value.get_str() << ", n-th root " << row.root
         << "\n";
    if (report.returns.truncated_at)
      os << "  truncation refused beyond n = " << (*report.returns.truncated_at - 1) << "\n";
    os << "  verdict: " << verdict_name(report.verdict) << "\n";
  }
  return os.str();
}

// ------------------------------------------------------------- center-h2 ----

std::string cmd_center_h2(const Options& opt, int rank, const std::string& torsion) {
  H2FgAbelian h = h2_fg_abelian(rank, parse_int_list(torsion));
  std::ostringstream os;
  if (machine(opt)) {
    os << "free_rank=" << rank << "\n";
    os << "torsion=" << torsion << "\n";
    os << "torus_rank=" << h.torus_rank << "\n";
    os << "invariant_factors=" << join_ints(h.invariant_factors) << "\n";
  } else {
    os << "H^2 of the dual of Z^" << rank;
    if (!torsion.empty()) os << " + Z/(" << torsion << ")";
    os << "\n";
    os << "  torus rank:  " << h.torus_rank << "\n";
    os << "  finite part: "
       << (h.invariant_factors.empty() ? std::string("trivial")
                                       : "Z/" + join_ints(h.invariant_factors, " x Z/"))
       << "\n";
  }
  return os.str();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"cocycle-lab: cocycles on duals of finite groups, central types, "
               "monoidal pairs and fusion-ring amenability"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--max-order", opt.max_order, "H^2 group-order bound");
  app.add_option("--budget", opt.budget, "transversal / search caps");
  app.add_option("--seed", opt.seed, "solver-order seed");
  app.add_option("--cache", opt.cache_dir, "cache directory (or COCYCLE_LAB_CACHE)");

  std::string g_ref, g_out;
  auto* sc_group = app.add_subcommand("group", "build or inspect a group");
  sc_group->add_option("--group", g_ref, "catalog:<name> or group file")->required();
  sc_group->add_option("--out", g_out, "write the multiplication table to a file");

  std::string h2_ref;
  auto* sc_h2 = app.add_subcommand("h2", "H^2(G;T) classes");
  sc_h2->add_option("--group", h2_ref)->required();

  std::string scan_ref;
  int scan_abelian = 36;
  auto* sc_scan = app.add_subcommand("scan-ctfg", "central-type scan");
  sc_scan->add_option("--group", scan_ref, "single group (default: whole catalog)");
  sc_scan->add_option("--max-abelian", scan_abelian, "abelian catalog bound");

  std::string dual_ref;
  auto* sc_dual = app.add_subcommand("dual-h2", "H^2(G-hat;T) via subgroup classes");
  sc_dual->add_option("--group", dual_ref)->required();

  std::string tau_action;
  int tau_form = -1;
  bool tau_list = false;
  auto* sc_tau = app.add_subcommand("tau", "tau homomorphism pipeline");
  sc_tau->add_option("--action", tau_action, "action file")->required();
  sc_tau->add_option("--form-index", tau_form, "invariant form class index");
  sc_tau->add_flag("--list", tau_list, "list invariant form classes");

  int pair_max_a = 81, pair_max_k = 24, pair_count = 1;
  std::string pair_out;
  auto* sc_pair = app.add_subcommand("pair", "search for monoidally equivalent pairs");
  sc_pair->add_option("--max-a", pair_max_a);
  sc_pair->add_option("--max-k", pair_max_k);
  sc_pair->add_option("--count", pair_count, "certified pairs wanted");
  sc_pair->add_option("--out-prefix", pair_out, "write the groups of each pair");

  std::string sl_ref, sl_elements;
  int sl_form = 0;
  auto* sc_slices = app.add_subcommand("slices", "dual cocycle, R-matrix and slice span");
  sc_slices->add_option("--group", sl_ref)->required();
  sc_slices->add_option("--elements", sl_elements,
                        "abelian subgroup elements (default: whole group)");
  sc_slices->add_option("--form-index", sl_form);

  std::string ct_ref;
  auto* sc_chartab = app.add_subcommand("chartab", "character table");
  sc_chartab->add_option("--group", ct_ref)->required();

  std::string fu_ref, fu_vs;
  auto* sc_fusion = app.add_subcommand("fusion", "fusion ring, optional comparison");
  sc_fusion->add_option("--group", fu_ref)->required();
  sc_fusion->add_option("--vs", fu_vs, "second group for the isomorphism test");

  std::string am_ring = "su2:64", am_mu = "1:1", am_trunc;
  int am_nmax = 24;
  auto* sc_amen = app.add_subcommand("amen", "amenability diagnostics");
  sc_amen->add_option("--ring", am_ring, "su2:<bound> or group:<ref>");
  sc_amen->add_option("--mu", am_mu, "measure, e.g. 1:1 or 0:1/2,2:1/2");
  sc_amen->add_option("--truncations", am_trunc, "matrix sizes, comma separated");
  sc_amen->add_option("--nmax", am_nmax, "return-sequence length");

  int ch_rank = 0;
  std::string ch_torsion;
  auto* sc_center = app.add_subcommand("center-h2", "H^2 of a finitely generated abelian dual");
  sc_center->add_option("--rank", ch_rank, "free rank of the dual");
  sc_center->add_option("--torsion", ch_torsion, "torsion invariant factors, comma separated");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    std::string out;
    if (*sc_group) out = cmd_group(opt, g_ref, g_out);
    else if (*sc_h2) out = cmd_h2(opt, h2_ref);
    else if (*sc_scan) out = cmd_scan_ctfg(opt, scan_ref, scan_abelian);
    else if (*sc_dual) out = cmd_dual_h2(opt, dual_ref);
    else if (*sc_tau) out = cmd_tau(opt, tau_action, tau_form, tau_list);
    else if (*sc_pair) out = cmd_pair(opt, pair_max_a, pair_max_k, pair_count, pair_out);
    else if (*sc_slices) out = cmd_slices(opt, sl_ref, sl_elements, sl_form);
    else if (*sc_chartab) out = cmd_chartab(opt, ct_ref);
    else if (*sc_fusion) out = cmd_fusion(opt, fu_ref, fu_vs);
    else if (*sc_amen) out = cmd_amen(opt, am_ring, am_mu, am_trunc, am_nmax);
    else if (*sc_center) out = cmd_center_h2(opt, ch_rank, ch_torsion);
    std::cout << out;
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
