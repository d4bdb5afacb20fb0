#include "selbound/cli_run.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdint>
#include <thread>

#include "selbound/bounds.hpp"
#include "selbound/config.hpp"
#include "selbound/curves.hpp"
#include "selbound/errors.hpp"
#include "selbound/lattice.hpp"
#include "selbound/localdata.hpp"
#include "selbound/numfield.hpp"
#include "selbound/stats.hpp"

namespace selbound::cli {
namespace {

using arith::Integer;
using arith::Rational;
using bounds::BoundInterval;
using bounds::BoundRequest;
using bounds::NotedBound;

enum class Round { down, up };

// fixed six-decimal rendering of an exact rational; the direction picks the
// side the decimal errs on, so printed interval endpoints still enclose the
// exact ones
std::string dec6(const Rational& v, Round dir) {
  Integer scaled = v.get_num() * 1000000;
  Integer q;
  if (dir == Round::down)
    mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), v.get_den().get_mpz_t());
  else
    mpz_cdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), v.get_den().get_mpz_t());
  const bool neg = q < 0;
  std::string digits = Integer(abs(q)).get_str();
  if (digits.size() < 7) digits.insert(0, 7 - digits.size(), '0');
  digits.insert(digits.size() - 6, ".");
  return (neg ? "-" : "") + digits;
}

std::string rat(const Rational& v) {
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::string interval_fields(const BoundInterval& v) {
  return "lo=" + dec6(v.lo, Round::down) + "\thi=" + dec6(v.hi, Round::up) +
         "\texact_lo=" + rat(v.lo) + "\texact_hi=" + rat(v.hi);
}

// scalar flags shared by the bound-producing commands
struct BoundFlags {
  unsigned p = 2;
  std::uint64_t cutoff = 1000000;
  bool conjectural = false;
  unsigned dim_fixed = 1;
  std::string config_path;

  BoundRequest request() const {
    return BoundRequest{p, config::extension_from_file(config_path), cutoff,
                        conjectural};
  }
  std::string provenance() const {
    return "p=" + std::to_string(p) + "\tcutoff=" + std::to_string(cutoff) +
           "\tconjectural=" + (conjectural ? "1" : "0");
  }
};

void add_bound_flags(CLI::App* cmd, BoundFlags* f, bool with_dim_fixed = false) {
  cmd->add_option("--p", f->p, "prime p");
  cmd->add_option("--cutoff", f->cutoff, "prime cutoff L for the head sum");
  cmd->add_flag("--conjectural", f->conjectural,
                "accept primes outside the proven range");
  cmd->add_option("--config", f->config_path, "field manifest path")
      ->required();
  if (with_dim_fixed)
    cmd->add_option("--dim-fixed", f->dim_fixed,
                    "dimension of the lattice fixed space (>= 1)");
}

void print_noted(std::ostream& out, const std::string& record,
                 const BoundFlags& flags, const NotedBound& bound,
                 const std::string& extra = "") {
  out << record << "\t" << flags.provenance() << extra << "\t"
      << interval_fields(bound.value) << "\n";
  for (const auto& note : bound.notes) out << "# note\t" << note << "\n";
}

localdata::GenusMode parse_mode(const std::string& mode) {
  if (mode == "refined") return localdata::GenusMode::refined;
  if (mode == "uniform" || mode == "paper")
    return localdata::GenusMode::uniform_two;
  throw input_error("unknown mode '" + mode + "' (want uniform or refined)");
}

// records always carry the canonical mode name, whatever alias was typed
const char* mode_label(localdata::GenusMode mode) {
  return mode == localdata::GenusMode::refined ? "refined" : "uniform";
}

unsigned default_shards() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

// census records never mention the shard count: sharding only splits work
void print_census(std::ostream& out, const stats::ExperimentReport& r,
                  const std::string& extra) {
  out << "census\tname=" << r.name << "\tX=" << r.x.get_str() << extra
      << "\tobserved=" << rat(r.observed)
      << "\tobserved_dec=" << dec6(r.observed, Round::down)
      << "\tpredicted=" << rat(r.predicted)
      << "\tpredicted_dec=" << dec6(r.predicted, Round::down)
      << "\terror_dec=" << dec6(r.abs_error, Round::up) << "\n";
}

Integer parse_int_flag(const std::string& text, const char* flag) {
  try {
    return Integer(text);
  } catch (const std::invalid_argument&) {
    throw input_error(std::string(flag) + " wants an integer, got '" + text +
                      "'");
  }
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"explicit Selmer-average bounds and family experiments"};
  app.require_subcommand(1);

  BoundFlags flags;
  std::string mode_name = "uniform";
  std::string a_text = "0", b_text = "0", d_text = "1", x_text = "1";
  std::string lattice_path;
  std::uint64_t ell = 5;
  unsigned shards = default_shards();

  auto* constants = app.add_subcommand(
      "constants", "enclosure of the descent constant for a configured field");
  add_bound_flags(constants, &flags);
  constants->callback([&] {
    const auto req = flags.request();
    const auto c = bounds::c_constant(req);
    out << "# field\t" << numfield::describe(req.ext) << "\n";
    out << "constant\t" << flags.provenance() << "\t" << interval_fields(c)
        << "\n";
  });

  auto* bound = app.add_subcommand("bound", "average-bound composers");
  bound->require_subcommand(1);
  struct Composer {
    const char* name;
    const char* record;
    const char* help;
    bool dim_fixed;
  };
  const std::vector<Composer> composers = {
      {"fixed-space", "fixed_space",
       "average fixed-space dimension of Selmer under the Galois group", false},
      {"selmer", "selmer_avg", "average Selmer size over the top field", false},
      {"rank", "rank_avg", "average rank bound over the top field", false},
      {"descent", "descent_failure", "average descent-failure bound", false},
      {"mw", "mw_multiplicity", "average Mordell-Weil multiplicity bound",
       true},
  };
  for (const auto& c : composers) {
    auto* cmd = bound->add_subcommand(c.name, c.help);
    add_bound_flags(cmd, &flags, c.dim_fixed);
    cmd->callback([&, c] {
      const auto req = flags.request();
      NotedBound nb;
      if (std::string(c.name) == "fixed-space")
        nb = bounds::fixed_space_avg_bound(req);
      else if (std::string(c.name) == "selmer")
        nb = bounds::selmer_avg_bound(req);
      else if (std::string(c.name) == "rank")
        nb = bounds::rank_avg_bound(req);
      else if (std::string(c.name) == "descent")
        nb = bounds::descent_failure_avg_bound(req);
      else
        nb = bounds::mw_multiplicity_avg_bound(req, flags.dim_fixed);
      out << "# field\t" << numfield::describe(req.ext) << "\n";
      const std::string extra =
          c.dim_fixed ? "\tdim_fixed=" + std::to_string(flags.dim_fixed) : "";
      print_noted(out, c.record, flags, nb, extra);
    });
  }

  auto* genus = app.add_subcommand(
      "genus", "genus-theory bound for one curve over a configured extension");
  add_bound_flags(genus, &flags);
  genus->add_option("--mode", mode_name, "local caps: uniform or refined");
  genus->add_option("--A", a_text, "curve coefficient A")->required();
  genus->add_option("--B", b_text, "curve coefficient B")->required();
  genus->callback([&] {
    const auto req = flags.request();
    const curves::CurveParams c{parse_int_flag(a_text, "--A"),
                                parse_int_flag(b_text, "--B")};
    const auto mode = parse_mode(mode_name);
    const auto report = localdata::genus_bound(c, req.ext, flags.p, mode);
    const std::string prov = "p=" + std::to_string(flags.p) + "\tmode=" +
                             mode_label(mode) + "\tA=" + c.A.get_str() +
                             "\tB=" + c.B.get_str();
    out << "# field\t" << numfield::describe(req.ext) << "\n";
    out << "genus_base\t" << prov << "\tvalue=" << report.base_term << "\n";
    for (const auto& t : report.bad_terms) {
      const char* kind =
          t.type.kind == curves::ReductionKind::additive ? "additive"
          : t.type.kind == curves::ReductionKind::multiplicative
              ? "multiplicative"
              : "good";
      out << "genus_term\t" << prov << "\tell=" << t.ell << "\tkind=" << kind
          << "\tv_delta=" << t.type.v_delta << "\tplaces=" << t.places
          << "\tper_place=" << t.per_place
          << "\tcontribution=" << t.contribution() << "\n";
    }
    out << "genus_total\t" << prov << "\tvalue=" << report.total() << "\n";
  });

  auto* reduction =
      app.add_subcommand("reduction", "reduction type of a curve at ell >= 5");
  reduction->add_option("--A", a_text, "curve coefficient A")->required();
  reduction->add_option("--B", b_text, "curve coefficient B")->required();
  reduction->add_option("--ell", ell, "prime ell >= 5")->required();
  reduction->callback([&] {
    const curves::CurveParams c{parse_int_flag(a_text, "--A"),
                                parse_int_flag(b_text, "--B")};
    const auto t = curves::reduction_type(c, ell);
    const char* kind = t.kind == curves::ReductionKind::good ? "good"
                       : t.kind == curves::ReductionKind::multiplicative
                           ? "multiplicative"
                           : "additive";
    out << "reduction\tA=" << c.A.get_str() << "\tB=" << c.B.get_str()
        << "\tell=" << ell << "\tkind=" << kind << "\tv_delta=" << t.v_delta
        << "\tsplit=" << (t.split ? "1" : "0") << "\n";
  });

  auto* twist =
      app.add_subcommand("twist", "quadratic twist renormalized into the family");
  twist->add_option("--A", a_text, "curve coefficient A")->required();
  twist->add_option("--B", b_text, "curve coefficient B")->required();
  twist->add_option("--D", d_text, "squarefree twisting integer")->required();
  twist->callback([&] {
    const curves::CurveParams c{parse_int_flag(a_text, "--A"),
                                parse_int_flag(b_text, "--B")};
    const Integer d = parse_int_flag(d_text, "--D");
    const auto t = curves::quadratic_twist(c, d);
    out << "twist\tA=" << c.A.get_str() << "\tB=" << c.B.get_str()
        << "\tD=" << d.get_str() << "\tA_out=" << t.A.get_str()
        << "\tB_out=" << t.B.get_str() << "\n";
  });

  auto* lat = app.add_subcommand(
      "lattice", "fixed spaces and H^1 p-torsion of a lattice manifest");
  lat->add_option("--lattice", lattice_path, "lattice manifest path")
      ->required();
  lat->add_option("--p", flags.p, "prime p");
  lat->callback([&] {
    const auto l = config::lattice_from_file(lattice_path);
    const auto group = lattice::group_closure(l.generators);
    const auto mw = lattice::mw_multiplicity_hypothesis_check(l, flags.p);
    out << "lattice\tp=" << flags.p << "\trank=" << l.rank
        << "\tgroup_order=" << group.size()
        << "\tfixed_dim_mod_p=" << lattice::fixed_dim_mod_p(l, flags.p)
        << "\trational_fixed_rank=" << lattice::rational_fixed_rank(l)
        << "\th1_torsion_dim=" << lattice::h1_p_torsion_dim(l, flags.p)
        << "\tmw_hypothesis=" << (mw.satisfied ? "1" : "0")
        << "\tmw_dim=" << mw.dim << "\n";
  });

  auto* census = app.add_subcommand("census", "whole-family experiments");
  census->require_subcommand(1);
  auto add_census_flags = [&](CLI::App* cmd) {
    cmd->add_option("--X", x_text, "height bound X")->required();
    cmd->add_option("--shards", shards, "worker count (output-invariant)");
  };

  auto* count = census->add_subcommand("count", "family size versus prediction");
  add_census_flags(count);
  count->callback([&] {
    print_census(out, stats::count_curves(parse_int_flag(x_text, "--X"), shards),
                 "");
  });

  auto* density = census->add_subcommand(
      "density", "bad-but-not-I_1 reduction fraction at ell");
  add_census_flags(density);
  density->add_option("--ell", ell, "prime ell >= 5")->required();
  density->callback([&] {
    print_census(
        out,
        stats::bad_not_i1_fraction(ell, parse_int_flag(x_text, "--X"), shards),
        "\tell=" + std::to_string(ell));
  });

  auto* gavg = census->add_subcommand(
      "genus-avg", "mean genus bound over the family versus the constant");
  add_census_flags(gavg);
  gavg->add_option("--p", flags.p, "prime p");
  gavg->add_option("--cutoff", flags.cutoff, "prime cutoff L for the head sum");
  gavg->add_option("--mode", mode_name, "local caps: uniform or refined");
  gavg->add_option("--config", flags.config_path, "field manifest path")
      ->required();
  gavg->callback([&] {
    const auto ext = config::extension_from_file(flags.config_path);
    const auto mode = parse_mode(mode_name);
    const auto r = stats::avg_genus_bound_empirical(
        flags.p, ext, parse_int_flag(x_text, "--X"), mode, shards,
        flags.cutoff);
    out << "# field\t" << numfield::describe(ext) << "\n";
    print_census(out, r,
                 "\tp=" + std::to_string(flags.p) +
                     "\tmode=" + mode_label(mode) +
                     "\tcutoff=" + std::to_string(flags.cutoff));
  });

  auto* torsion =
      census->add_subcommand("torsion", "fraction with rational 2-torsion");
  add_census_flags(torsion);
  torsion->callback([&] {
    print_census(
        out, stats::two_torsion_fraction(parse_int_flag(x_text, "--X"), shards),
        "");
  });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const computation_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace selbound::cli
