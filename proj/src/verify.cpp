#include "circuit/verify.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "circuit/affine.hpp"
#include "circuit/diagram.hpp"
#include "circuit/garside.hpp"
#include "circuit/relations.hpp"
#include "circuit/report.hpp"
#include "circuit/surface.hpp"

namespace circuit {

namespace {

constexpr uint64_t kSeedBase = 0x51dc37u;

Word random_word(std::mt19937_64& rng, const Alphabet& a, int min_len, int max_len) {
  std::uniform_int_distribution<int> len_d(min_len, max_len);
  std::uniform_int_distribution<int> gen_d(0, a.size() - 1);
  std::bernoulli_distribution sign_d(0.5);
  std::vector<Letter> ls;
  int len = len_d(rng);
  for (int i = 0; i < len; ++i) ls.push_back({gen_d(rng), sign_d(rng) ? 1 : -1});
  return Word(a, std::move(ls));
}

ArtinDiagram diagram_of_engine(const GarsideEngine& e) {
  switch (e.type()) {
    case CoxType::A: return build_diagram(DiagramKind::A(e.degree() - 1));
    case CoxType::B: return build_diagram(DiagramKind::B(e.degree()));
    case CoxType::D: return build_diagram(DiagramKind::D(e.degree()));
  }
  throw std::logic_error("unreachable");
}

struct Battery {
  int n_max;
  std::vector<CheckResult> results;

  void run(int criterion, std::string name,
           const std::function<bool(std::string&)>& body) {
    CheckResult r;
    r.criterion = criterion;
    r.name = std::move(name);
    auto start = std::chrono::steady_clock::now();
    try {
      r.passed = body(r.detail);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(r));
  }
};

// ---------------------------------------------------------------- criterion 1

void presentation_soundness(Battery& b) {
  const int top = std::min(6, b.n_max);
  std::vector<const GarsideEngine*> engines;
  for (int n = 3; n <= top; ++n) {
    engines.push_back(&engine_for(CoxType::A, n));
    engines.push_back(&engine_for(CoxType::B, n));
    engines.push_back(&engine_for(CoxType::D, n));
  }

  b.run(1, "diagram relators verify under Garside equality", [&](std::string& detail) {
    int checked = 0;
    for (const GarsideEngine* e : engines) {
      for (const Relation& r : relators(diagram_of_engine(*e))) {
        if (!e->equal(r.lhs, r.rhs)) {
          detail = "relator failed: " + r.lhs.str() + " = " + r.rhs.str();
          return false;
        }
        ++checked;
      }
    }
    detail = std::to_string(checked) + " relators across " +
             std::to_string(engines.size()) + " engines";
    return true;
  });

  b.run(1, "10,000 random relator-conjugate pairs verify equal", [&](std::string& detail) {
    const int total = 10000;
    int per_engine = static_cast<int>((total + engines.size() - 1) / engines.size());
    std::mt19937_64 rng(kSeedBase + 1);
    int done = 0;
    for (const GarsideEngine* e : engines) {
      auto rels = relators(diagram_of_engine(*e));
      std::uniform_int_distribution<size_t> rel_d(0, rels.size() - 1);
      for (int i = 0; i < per_engine; ++i) {
        Word w = random_word(rng, e->alphabet(), 0, 16);
        Word c = random_word(rng, e->alphabet(), 0, 4);
        Word trivial = rels[rel_d(rng)].relator();
        Word w2 = reduce(w * c * trivial * c.inverse());
        if (!e->equal(w, w2)) {
          detail = "pair failed on " + w.str() + " vs " + w2.str();
          return false;
        }
        ++done;
      }
    }
    detail = std::to_string(done) + " pairs";
    return true;
  });
}

// ---------------------------------------------------------------- criterion 2

void garside_sanity(Battery& b) {
  const int top = b.n_max;

  b.run(2, "longest-element length matches the positive-root count",
        [&](std::string& detail) {
          int checked = 0;
          for (int n = 2; n <= top; ++n) {
            if (engine_for(CoxType::A, n).delta_length() != n * (n - 1) / 2) return false;
            if (engine_for(CoxType::B, n).delta_length() != n * n) return false;
            if (n >= 3 && engine_for(CoxType::D, n).delta_length() != n * (n - 1)) return false;
            ++checked;
          }
          detail = "ranks 2.." + std::to_string(top);
          return checked > 0;
        });

  b.run(2, "Delta^2 commutes with every generator", [&](std::string& detail) {
    int checked = 0;
    for (int n = 3; n <= top; ++n) {
      for (CoxType t : {CoxType::A, CoxType::B, CoxType::D}) {
        const GarsideEngine& e = engine_for(t, n);
        Word d2 = e.delta_word() * e.delta_word();
        for (int g = 0; g < e.rank(); ++g) {
          Word gen(e.alphabet(), {{g, 1}});
          if (!e.equal(gen * d2, d2 * gen)) {
            detail = "failed for generator " + e.alphabet().symbol(g);
            return false;
          }
          ++checked;
        }
      }
    }
    detail = std::to_string(checked) + " generator checks";
    return true;
  });

  b.run(2, "full-twist identity (s1...s_{n-1})^n = Delta^2", [&](std::string& detail) {
    for (int n = 3; n <= top; ++n)
      if (!chain_full_twist_check(n)) {
        detail = "failed at n = " + std::to_string(n);
        return false;
      }
    detail = "n = 3.." + std::to_string(top);
    return true;
  });
}

// ---------------------------------------------------------------- criterion 3

void affine_nontriviality(Battery& b) {
  b.run(3, "cycle and commutation relators are non-trivial in the affine group",
        [&](std::string& detail) {
          std::ostringstream info;
          for (int n = 3; n <= b.n_max; ++n) {
            const GarsideEngine& eng = engine_for(CoxType::B, n);
            Word relators_to_try[] = {cycle_relation(n, Orientation::ccw).relator(),
                                      cycle_relation(n, Orientation::cw).relator(),
                                      commutation_form(n).relator()};
            int max_len = 0;
            for (const Word& r : relators_to_try) {
              NormalForm nf = eng.normal_form(to_b_word(affine_from_twist(r)));
              if (nf.is_identity()) {
                detail = "relator collapsed at n = " + std::to_string(n) + ": " + r.str();
                return false;
              }
              max_len = std::max(max_len, nf.canonical_length());
            }
            info << (n > 3 ? ", " : "") << "n=" << n << ":len<=" << max_len;
          }
          detail = info.str();
          return true;
        });
}

// ---------------------------------------------------------------- criterion 4

void dn_triviality(Battery& b) {
  b.run(4, "circuit relations hold in the type D quotient", [&](std::string& detail) {
    int checked = 0;
    for (int n = 3; n <= b.n_max; ++n) {
      const GarsideEngine& eng = engine_for(CoxType::D, n);
      Substitution sub = dn_substitution(n);
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          Word u = sub.image(i - 1), v = sub.image(j - 1);
          bool adjacent = j - i == 1 || (i == 1 && j == n);
          bool ok = adjacent ? eng.equal(u * v * u, v * u * v) : eng.equal(u * v, v * u);
          if (!ok) {
            detail = "pair T" + std::to_string(i) + ", T" + std::to_string(j) +
                     " failed at n = " + std::to_string(n);
            return false;
          }
          ++checked;
        }
      }
    }
    detail = std::to_string(checked) + " pair relations";
    return true;
  });

  b.run(4, "cycle and commutation relators map to the identity in type D",
        [&](std::string& detail) {
          for (int n = 3; n <= b.n_max; ++n) {
            const GarsideEngine& eng = engine_for(CoxType::D, n);
            Substitution sub = dn_substitution(n);
            Word cycle_image = substitute(cycle_relation(n, Orientation::ccw).relator(), sub);
            Word comm_image = substitute(commutation_form(n).relator(), sub);
            if (!eng.normal_form(cycle_image).is_identity()) {
              detail = "cycle relator image non-trivial at n = " + std::to_string(n);
              return false;
            }
            if (!eng.normal_form(comm_image).is_identity()) {
              detail = "commutation relator image non-trivial at n = " + std::to_string(n);
              return false;
            }
          }
          detail = "n = 3.." + std::to_string(b.n_max);
          return true;
        });
}

// ---------------------------------------------------------------- criterion 5

void oracle_agreement(Battery& b) {
  b.run(5, "affine equality agrees with the pole-strand oracle", [&](std::string& detail) {
    std::mt19937_64 rng(kSeedBase + 5);
    std::ostringstream info;
    for (int n = 3; n <= std::min(5, b.n_max); ++n) {
      Alphabet a = Alphabet::affine(n);
      auto rels = relators(build_diagram(DiagramKind::ATilde(n - 1)));
      std::uniform_int_distribution<size_t> rel_d(0, rels.size() - 1);
      int agree = 0, equal_pairs = 0;
      const int pairs = 1000;
      for (int i = 0; i < pairs; ++i) {
        Word w1(a), w2(a);
        if (i % 2 == 0) {
          w1 = random_word(rng, a, 0, 12);
          w2 = random_word(rng, a, 0, 12);
        } else {
          // Equal by construction: insert a relator mid-word.
          Word u = random_word(rng, a, 0, 3);
          Word v = random_word(rng, a, 0, 3);
          w1 = reduce(u * v);
          w2 = reduce(u * rels[rel_d(rng)].relator() * v);
        }
        bool via_b = affine_equal(AffineWord(n, w1), AffineWord(n, w2));
        bool via_strands = strand_oracle_equal(
            n, to_b_word(AffineWord(n, w1)), to_b_word(AffineWord(n, w2)));
        if (via_b != via_strands) {
          detail = "disagreement at n = " + std::to_string(n) + ": " + w1.str() +
                   " vs " + w2.str();
          return false;
        }
        ++agree;
        if (via_b) ++equal_pairs;
      }
      info << (n > 3 ? ", " : "") << "n=" << n << ": " << agree << " pairs ("
           << equal_pairs << " equal)";
    }
    detail = info.str();
    return true;
  });
}

// ---------------------------------------------------------------- criterion 6

void surface_combinatorics(Battery& b) {
  b.run(6, "boundary profiles, Euler characteristics and quotients", [&](std::string& detail) {
    for (int n = 3; n <= 10; ++n) {
      auto profile = [](const CircuitSurface& s) {
        std::vector<int> sides;
        for (const auto& c : s.all_components()) sides.push_back(c.sides);
        std::sort(sides.begin(), sides.end());
        return sides;
      };
      CircuitSurface nn = build_neighbourhood(n, NeighbourhoodKind::N, Orientation::ccw);
      std::vector<int> expect_n =
          n % 2 == 0 ? std::vector<int>{n, n, n, n} : std::vector<int>{n, n, 2 * n};
      if (profile(nn) != expect_n) {
        detail = "N profile wrong at n = " + std::to_string(n);
        return false;
      }
      if (euler_characteristic(nn) != -n) {
        detail = "chi(N) wrong at n = " + std::to_string(n);
        return false;
      }
      auto q = quotient_type(nn);
      if (!q || q->base != QuotientInfo::Base::annulus || q->marked_points != n) {
        detail = "quotient of bare N wrong at n = " + std::to_string(n);
        return false;
      }
      if (n % 2 == 0) {
        int ccw_gons = 0, cw_gons = 0;
        for (const auto& c : nn.all_components()) {
          if (c.orientation_class == Orientation::ccw) ++ccw_gons;
          if (c.orientation_class == Orientation::cw) ++cw_gons;
        }
        if (ccw_gons != 2 || cw_gons != 2) {
          detail = "even N must have two n-gons of each class, n = " + std::to_string(n);
          return false;
        }
        CircuitSurface m = build_neighbourhood(n, NeighbourhoodKind::M, Orientation::ccw);
        if (profile(m) != std::vector<int>{2 * n, 2 * n} || euler_characteristic(m) != -n) {
          detail = "M profile wrong at n = " + std::to_string(n);
          return false;
        }
        auto qm = quotient_type(m);
        if (!qm || qm->base != QuotientInfo::Base::annulus || qm->marked_points != n) {
          detail = "quotient of bare M wrong at n = " + std::to_string(n);
          return false;
        }
        int g1 = m.all_components()[0].id;
        CircuitSurface m1 = attach_disc(m, g1, DiscKind::D2);
        auto q1 = quotient_type(m1);
        if (!q1 || q1->base != QuotientInfo::Base::disc || q1->marked_points != n + 1) {
          detail = "quotient of M + D2 wrong at n = " + std::to_string(n);
          return false;
        }
        CircuitSurface m2 = attach_disc(m1, m.all_components()[1].id, DiscKind::D2);
        auto q2 = quotient_type(m2);
        if (!q2 || q2->base != QuotientInfo::Base::sphere || q2->marked_points != n + 2) {
          detail = "quotient of M + 2D2 wrong at n = " + std::to_string(n);
          return false;
        }
      } else {
        int two_n_id = -1;
        for (const auto& c : nn.all_components())
          if (c.polygon == PolygonClass::two_n_gon) two_n_id = c.id;
        CircuitSurface capped = attach_disc(nn, two_n_id, DiscKind::D2);
        auto q1 = quotient_type(capped);
        if (!q1 || q1->base != QuotientInfo::Base::disc || q1->marked_points != n + 1) {
          detail = "quotient of N + D2 wrong at n = " + std::to_string(n);
          return false;
        }
      }
    }
    detail = "n = 3..10";
    return true;
  });
}

// ---------------------------------------------------------------- criterion 7

namespace {

std::vector<int> component_ids(const CircuitSurface& s, PolygonClass p,
                               std::optional<Orientation> cls = std::nullopt) {
  std::vector<int> ids;
  for (const auto& c : s.all_components())
    if (c.polygon == p && (!cls || c.orientation_class == cls)) ids.push_back(c.id);
  return ids;
}

bool check_one_surface(const CircuitSurface& s, std::string& detail) {
  AnalysisReport r = decide_cycle_relation(s);

  bool expect_ccw = false, expect_cw = false;
  for (const DiscAttachment& d : s.attached_discs()) {
    if (d.kind != DiscKind::D1) continue;
    (d.orientation_class == Orientation::ccw ? expect_ccw : expect_cw) = true;
  }
  if (r.relation_holds_ccw != expect_ccw || r.relation_holds_cw != expect_cw) {
    detail = "verdict mismatch on " + s.describe();
    return false;
  }
  if (r.bounding.bounds != (expect_ccw || expect_cw)) {
    detail = "bounding flag mismatch on " + s.describe();
    return false;
  }
  if (!r.certificate.consistent) {
    detail = "certificate inconsistent on " + s.describe();
    return false;
  }
  for (const CertificateEntry& e : r.certificate.entries) {
    if (e.trivial != r.relation_holds(e.orientation)) {
      detail = "certificate entry disagrees on " + s.describe();
      return false;
    }
  }
  bool extras = s.marked_discs() > 0 || s.annuli() > 0;
  if (r.group.kind == GroupKind::unknown &&
      !(extras && classify_group(s.with_extras(0, 0)).kind != GroupKind::artin_atilde)) {
    detail = "unexpected unknown classification on " + s.describe();
    return false;
  }
  return true;
}

}  // namespace

void theorem_end_to_end(Battery& b) {
  b.run(7, "verdicts, bounding discs and certificates agree on every table surface",
        [&](std::string& detail) {
          int surfaces = 0;
          std::vector<std::pair<int, int>> extras_variants = {{0, 0}, {1, 0}, {0, 1}, {2, 1}};
          for (int n = 3; n <= std::min(6, b.n_max); ++n) {
            for (Orientation chir : {Orientation::ccw, Orientation::cw}) {
              std::vector<CircuitSurface> bases;
              CircuitSurface nn = build_neighbourhood(n, NeighbourhoodKind::N, chir);
              if (n % 2 == 1) {
                auto ngons = component_ids(nn, PolygonClass::n_gon);
                auto big = component_ids(nn, PolygonClass::two_n_gon);
                for (int d1 = 0; d1 <= 2; ++d1) {
                  for (int d2 = 0; d2 <= 1; ++d2) {
                    CircuitSurface s = nn;
                    for (int k = 0; k < d1; ++k)
                      s = attach_disc(s, ngons[static_cast<size_t>(k)], DiscKind::D1);
                    if (d2) s = attach_disc(s, big[0], DiscKind::D2);
                    bases.push_back(std::move(s));
                  }
                }
              } else {
                auto ccw_ids = component_ids(nn, PolygonClass::n_gon, Orientation::ccw);
                auto cw_ids = component_ids(nn, PolygonClass::n_gon, Orientation::cw);
                for (int a = 0; a <= 2; ++a) {
                  for (int c = 0; c <= 2; ++c) {
                    CircuitSurface s = nn;
                    for (int k = 0; k < a; ++k)
                      s = attach_disc(s, ccw_ids[static_cast<size_t>(k)], DiscKind::D1);
                    for (int k = 0; k < c; ++k)
                      s = attach_disc(s, cw_ids[static_cast<size_t>(k)], DiscKind::D1);
                    bases.push_back(std::move(s));
                  }
                }
                CircuitSurface m = build_neighbourhood(n, NeighbourhoodKind::M, chir);
                auto big = component_ids(m, PolygonClass::two_n_gon);
                for (int d2 = 0; d2 <= 2; ++d2) {
                  CircuitSurface s = m;
                  for (int k = 0; k < d2; ++k)
                    s = attach_disc(s, big[static_cast<size_t>(k)], DiscKind::D2);
                  bases.push_back(std::move(s));
                }
              }
              for (const CircuitSurface& base : bases) {
                for (auto [marked, ann] : extras_variants) {
                  CircuitSurface s = base.with_extras(marked, ann);
                  if (!check_one_surface(s, detail)) return false;
                  ++surfaces;
                }
              }
            }
          }
          detail = std::to_string(surfaces) + " surfaces, zero discrepancies";
          return true;
        });
}

// ---------------------------------------------------------------- criteria 8, 9

void torus_case(Battery& b) {
  b.run(8, "torus matrices: braid relation and order-six full twist", [&](std::string& detail) {
    detail = "exact integer arithmetic";
    return sl2z_check();
  });
}

void homogeneity_inferences(Battery& b) {
  b.run(9, "closed odd-chain relation is inhomogeneous", [&](std::string& detail) {
    for (int n = 3; n <= 7; n += 2) {
      auto rep = inhomogeneity_report(closed_chain_relation(n));
      if (!rep.inhomogeneous || rep.total_lhs != 2LL * n * (n - 1) || rep.total_rhs != 0) {
        detail = "totals wrong at n = " + std::to_string(n);
        return false;
      }
    }
    detail = "totals 2n(n-1) vs 0 for n = 3, 5, 7";
    return true;
  });

  b.run(9, "two-disc chain relation is inhomogeneous from n = 6 on", [&](std::string& detail) {
    for (int n = 6; n <= 8; ++n) {
      auto rep = inhomogeneity_report(two_disc_chain_relation(n));
      if (!rep.inhomogeneous || rep.total_lhs != static_cast<long long>(n - 3) * (n - 2) ||
          rep.total_rhs != 2) {
        detail = "totals wrong at n = " + std::to_string(n);
        return false;
      }
    }
    detail = "totals (n-3)(n-2) vs 2 for n = 6..8";
    return true;
  });

  b.run(9, "cycle relation is homogeneous with balanced exponents", [&](std::string& detail) {
    for (int n = 3; n <= 8; ++n) {
      Relation rel = cycle_relation(n, Orientation::ccw);
      if (!is_homogeneous(rel)) {
        detail = "not homogeneous at n = " + std::to_string(n);
        return false;
      }
      ExponentVector v = exponent_vector(rel.relator());
      long long sum = 0;
      for (long long c : v.per_gen) sum += c;
      if (sum != 0 || v.total != 0) {
        detail = "relator exponents unbalanced at n = " + std::to_string(n);
        return false;
      }
    }
    detail = "n = 3..8";
    return true;
  });
}

}  // namespace

bool VerificationRun::all_passed() const {
  for (const CheckResult& c : checks)
    if (!c.passed) return false;
  return true;
}

double VerificationRun::criterion_seconds(int criterion) const {
  double s = 0;
  for (const CheckResult& c : checks)
    if (c.criterion == criterion) s += c.seconds;
  return s;
}

bool VerificationRun::criterion_passed(int criterion) const {
  bool seen = false;
  for (const CheckResult& c : checks) {
    if (c.criterion != criterion) continue;
    seen = true;
    if (!c.passed) return false;
  }
  return seen;
}

VerificationRun run_verification(int n_max) {
  if (n_max < 3 || n_max > 8) throw std::invalid_argument("n_max must lie in [3, 8]");
  Battery b{n_max, {}};
  presentation_soundness(b);
  garside_sanity(b);
  affine_nontriviality(b);
  dn_triviality(b);
  oracle_agreement(b);
  surface_combinatorics(b);
  theorem_end_to_end(b);
  torus_case(b);
  homogeneity_inferences(b);
  return VerificationRun{n_max, std::move(b.results)};
}

std::string render_text(const VerificationRun& run) {
  std::ostringstream out;
  for (const CheckResult& c : run.checks) {
    out << (c.passed ? "[PASS]" : "[FAIL]") << " (criterion " << c.criterion << ", "
        << std::fixed;
    out.precision(2);
    out << c.seconds << "s) " << c.name;
    if (!c.detail.empty()) out << " — " << c.detail;
    out << "\n";
  }
  out << (run.all_passed() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
  return out.str();
}

}  // namespace circuit
