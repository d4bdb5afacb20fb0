#include "selbound/stats.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

#include "selbound/errors.hpp"

namespace selbound::stats {

namespace {

using bounds::BoundInterval;
using curves::CurveParams;

// run work(shard, state) across threads; states reduce in shard order, and
// any exception from a shard is rethrown after all threads joined
template <class State, class Work>
std::vector<State> run_shards(unsigned shards, const Work& work) {
  if (shards == 0) throw input_error("at least one shard is required");
  std::vector<State> states(shards);
  if (shards == 1) {
    work(0u, states[0]);
    return states;
  }
  std::vector<std::exception_ptr> errors(shards);
  std::vector<std::thread> threads;
  threads.reserve(shards);
  for (unsigned s = 0; s < shards; ++s)
    threads.emplace_back([&, s] {
      try {
        work(s, states[s]);
      } catch (...) {
        errors[s] = std::current_exception();
      }
    });
  for (auto& t : threads) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return states;
}

Rational ratio(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational abs_q(const Rational& v) {
  Rational a;
  mpq_abs(a.get_mpq_t(), v.get_mpq_t());
  return a;
}

// X^(5/6) to twelve decimal digits, as an exact enclosure
BoundInterval x_to_five_sixths(const Integer& x) {
  constexpr unsigned kDigits = 12;
  Integer x5;
  mpz_pow_ui(x5.get_mpz_t(), x.get_mpz_t(), 5);
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, kDigits);
  Integer scaled = x5;
  for (unsigned i = 0; i < 6; ++i) scaled *= den;
  const Integer root = arith::iroot_floor(scaled, 6);
  return {ratio(root, den), ratio(root + 1, den)};
}

// [a.lo / b.hi, a.hi / b.lo] for positive intervals
BoundInterval div_pos(const BoundInterval& a, const BoundInterval& b) {
  if (a.lo <= 0 || b.lo <= 0)
    throw input_error("interval quotient wants positive operands");
  return {a.lo / b.hi, a.hi / b.lo};
}

}  // namespace

std::string to_tsv_line(const ExperimentReport& r) {
  auto rat = [](const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
  };
  return r.name + "\t" + r.x.get_str() + "\t" + rat(r.observed) + "\t" +
         rat(r.predicted) + "\t" + rat(r.abs_error);
}

ExperimentReport count_curves(const Integer& x, unsigned shards) {
  if (x < 1) throw input_error("the count experiment wants X >= 1");
  const auto counts = run_shards<std::uint64_t>(
      shards, [&](unsigned s, std::uint64_t& out) {
        out = curves::count_shard(x, s, shards);
      });
  std::uint64_t observed = 0;
  for (std::uint64_t c : counts) observed += c;

  const BoundInterval predicted_enclosure =
      div_pos(x_to_five_sixths(x) * Rational(4), bounds::zeta10_enclosure());
  const Rational predicted =
      (predicted_enclosure.lo + predicted_enclosure.hi) / 2;

  ExperimentReport r;
  r.name = "count";
  r.x = x;
  r.shards = shards;
  r.observed = Rational(Integer(observed));
  r.predicted = predicted;
  r.abs_error = abs_q(r.observed - r.predicted);
  return r;
}

ExperimentReport bad_not_i1_fraction(std::uint64_t ell, const Integer& x,
                                     unsigned shards) {
  if (ell < 5 || !arith::is_prime(Integer(static_cast<unsigned long>(ell))))
    throw input_error("the density experiment wants a prime ell >= 5");
  if (x < 1) throw input_error("the density experiment wants X >= 1");
  const Integer ell_sq = Integer(static_cast<unsigned long>(ell)) *
                         static_cast<unsigned long>(ell);

  struct Tally {
    std::uint64_t members = 0, bad = 0;
  };
  const auto tallies =
      run_shards<Tally>(shards, [&](unsigned s, Tally& out) {
        curves::enumerate_shard(x, s, shards, [&](const CurveParams& c) {
          ++out.members;
          if (mpz_divisible_p(curves::delta(c).get_mpz_t(),
                              ell_sq.get_mpz_t()))
            ++out.bad;
        });
      });
  Integer members = 0, bad = 0;
  for (const Tally& t : tallies) {
    members += t.members;
    bad += t.bad;
  }

  ExperimentReport r;
  r.name = "bad_not_i1@" + std::to_string(ell);
  r.x = x;
  r.shards = shards;
  r.observed = ratio(bad, members);
  r.predicted = bounds::density_term(ell);
  r.abs_error = abs_q(r.observed - r.predicted);
  return r;
}

ExperimentReport avg_genus_bound_empirical(unsigned p,
                                           const numfield::ExtensionDesc& ext,
                                           const Integer& x,
                                           localdata::GenusMode mode,
                                           unsigned shards,
                                           std::uint64_t cutoff) {
  if (x < 1) throw input_error("the genus experiment wants X >= 1");
  const bounds::BoundRequest req{p, ext, cutoff, false};
  const BoundInterval constant = bounds::c_constant(req);

  struct Tally {
    std::uint64_t members = 0;
    Integer total = 0;
  };
  const auto tallies =
      run_shards<Tally>(shards, [&](unsigned s, Tally& out) {
        curves::enumerate_shard(x, s, shards, [&](const CurveParams& c) {
          ++out.members;
          out.total += localdata::genus_bound(c, ext, p, mode).total();
        });
      });
  Integer members = 0, total = 0;
  for (const Tally& t : tallies) {
    members += t.members;
    total += t.total;
  }

  ExperimentReport r;
  r.name = std::string("genus_avg@p=") + std::to_string(p) + "," +
           (mode == localdata::GenusMode::refined ? "refined" : "uniform");
  r.x = x;
  r.shards = shards;
  r.observed = ratio(total, members);
  r.predicted = constant.hi;
  r.abs_error = abs_q(r.observed - r.predicted);
  return r;
}

ExperimentReport two_torsion_fraction(const Integer& x, unsigned shards) {
  if (x < 1) throw input_error("the torsion experiment wants X >= 1");
  const curves::EnumBounds eb = curves::enum_bounds(x);

  struct Tally {
    std::uint64_t members = 0, hits = 0;
  };
  const auto tallies =
      run_shards<Tally>(shards, [&](unsigned s, Tally& out) {
        std::int64_t cur_a = 0;
        bool have_a = false;
        std::vector<std::int64_t> torsion_b;
        curves::enumerate_shard(x, s, shards, [&](const CurveParams& c) {
          const std::int64_t a = c.A.get_si();
          if (!have_a || a != cur_a) {
            have_a = true;
            cur_a = a;
            torsion_b.clear();
            // roots r of x^3 + ax + b contribute b = -(r^3 + a r); beyond
            // |r| with r^2 >= 2|a| and |r|^3 >= 2 bmax, |r^3 + a r| >=
            // |r|^3 / 2 > bmax, so the scan below is exhaustive
            std::int64_t rb = 2;
            while (rb * rb < 2 * std::abs(a) ||
                   rb * rb * rb < 2 * eb.bmax)
              ++rb;
            for (std::int64_t root = -rb; root <= rb; ++root) {
              const std::int64_t b = -(root * root * root + a * root);
              if (b >= -eb.bmax && b <= eb.bmax) torsion_b.push_back(b);
            }
            std::sort(torsion_b.begin(), torsion_b.end());
            torsion_b.erase(std::unique(torsion_b.begin(), torsion_b.end()),
                            torsion_b.end());
          }
          ++out.members;
          if (std::binary_search(torsion_b.begin(), torsion_b.end(),
                                 c.B.get_si()))
            ++out.hits;
        });
      });
  Integer members = 0, hits = 0;
  for (const Tally& t : tallies) {
    members += t.members;
    hits += t.hits;
  }

  ExperimentReport r;
  r.name = "two_torsion";
  r.x = x;
  r.shards = shards;
  r.observed = ratio(hits, members);
  r.predicted = 0;
  r.abs_error = r.observed;
  return r;
}

}  // namespace selbound::stats
