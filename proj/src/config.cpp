#include "selbound/config.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "selbound/errors.hpp"

namespace selbound::config {
namespace {

using arith::Integer;
using numfield::FieldDesc;
using numfield::FieldKind;

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

Integer parse_integer(const std::string& tok, const std::string& key) {
  try {
    Integer v(tok);  // mpz_class rejects malformed literals
    return v;
  } catch (const std::invalid_argument&) {
    throw input_error("key '" + key + "': '" + tok + "' is not an integer");
  }
}

std::vector<Integer> parse_integer_list(const std::string& value,
                                        const std::string& key) {
  std::vector<Integer> out;
  for (const auto& tok : split_ws(value)) out.push_back(parse_integer(tok, key));
  if (out.empty()) throw input_error("key '" + key + "' needs at least one integer");
  return out;
}

std::uint64_t parse_u64(const std::string& tok, const std::string& key) {
  Integer v = parse_integer(tok, key);
  if (v < 1 || !v.fits_ulong_p())
    throw input_error("key '" + key + "' wants a positive machine integer");
  return v.get_ui();
}

// collects the sub-keys of one field prefix ("base" or "top")
struct FieldKeys {
  std::map<std::string, std::string> scalar;  // kind, d, generators, ...
  std::vector<std::string> omega;             // repeatable
};

FieldDesc build_field(const FieldKeys& keys, const std::string& prefix) {
  auto take = [&](const char* name) {
    auto it = keys.scalar.find(name);
    std::string v = it == keys.scalar.end() ? "" : it->second;
    return v;
  };
  const std::string kind = take("kind");
  if (kind.empty())
    throw input_error("field manifest needs '" + prefix + ".kind'");

  auto reject_leftovers = [&](std::vector<std::string> allowed) {
    allowed.push_back("kind");
    for (const auto& [k, v] : keys.scalar)
      if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
        throw input_error("key '" + prefix + "." + k +
                          "' does not apply to a " + kind + " field");
    if (!keys.omega.empty() &&
        std::find(allowed.begin(), allowed.end(), "omega") == allowed.end())
      throw input_error("key '" + prefix + ".omega' does not apply to a " +
                        kind + " field");
  };

  if (kind == "rational") {
    reject_leftovers({});
    return FieldDesc::rationals();
  }
  if (kind == "quadratic") {
    reject_leftovers({"d"});
    const std::string d = take("d");
    if (d.empty()) throw input_error("quadratic field needs '" + prefix + ".d'");
    return FieldDesc::quadratic(parse_integer(d, prefix + ".d"));
  }
  if (kind == "multiquadratic") {
    reject_leftovers({"generators"});
    const std::string gens = take("generators");
    if (gens.empty())
      throw input_error("multiquadratic field needs '" + prefix + ".generators'");
    return FieldDesc::multiquadratic(
        parse_integer_list(gens, prefix + ".generators"));
  }
  if (kind == "monogenic") {
    reject_leftovers({"minpoly", "ramified", "omega"});
    const std::string poly = take("minpoly");
    const std::string ram = take("ramified");
    if (poly.empty() || ram.empty())
      throw input_error("monogenic field needs '" + prefix + ".minpoly' and '" +
                        prefix + ".ramified'");
    std::map<std::uint64_t, unsigned> overrides;
    for (const auto& line : keys.omega)
      for (const auto& tok : split_ws(line)) {
        const auto colon = tok.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == tok.size())
          throw input_error("key '" + prefix +
                            ".omega' wants ell:count tokens, got '" + tok + "'");
        const auto ell = parse_u64(tok.substr(0, colon), prefix + ".omega");
        const auto count = parse_u64(tok.substr(colon + 1), prefix + ".omega");
        overrides[ell] = static_cast<unsigned>(count);
      }
    return FieldDesc::monogenic(parse_integer_list(poly, prefix + ".minpoly"),
                                parse_integer_list(ram, prefix + ".ramified"),
                                std::move(overrides));
  }
  throw input_error("unknown field kind '" + kind + "' for '" + prefix + "'");
}

}  // namespace

KeyValues parse_key_values(std::istream& in) {
  KeyValues out;
  std::string line;
  unsigned lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw input_error("manifest line " + std::to_string(lineno) +
                        " is not key = value: '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw input_error("manifest line " + std::to_string(lineno) +
                        " has an empty key");
    out.emplace_back(key, value);
  }
  return out;
}

KeyValues parse_key_values_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot read manifest '" + path + "'");
  return parse_key_values(in);
}

numfield::ExtensionDesc extension_from(const KeyValues& kv) {
  FieldKeys base, top;
  std::string degree;
  for (const auto& [key, value] : kv) {
    FieldKeys* side = nullptr;
    std::string sub;
    if (key.rfind("base.", 0) == 0) {
      side = &base;
      sub = key.substr(5);
    } else if (key.rfind("top.", 0) == 0) {
      side = &top;
      sub = key.substr(4);
    } else if (key == "degree_kf") {
      if (!degree.empty()) throw input_error("duplicate key 'degree_kf'");
      degree = value;
      continue;
    } else {
      throw input_error("unknown field-manifest key '" + key + "'");
    }
    if (sub == "omega") {
      side->omega.push_back(value);
      continue;
    }
    if (sub != "kind" && sub != "d" && sub != "generators" && sub != "minpoly" &&
        sub != "ramified")
      throw input_error("unknown field-manifest key '" + key + "'");
    if (!side->scalar.emplace(sub, value).second)
      throw input_error("duplicate key '" + key + "'");
  }
  if (degree.empty()) throw input_error("field manifest needs 'degree_kf'");
  return numfield::make_extension(
      build_field(base, "base"), build_field(top, "top"),
      static_cast<unsigned>(parse_u64(degree, "degree_kf")));
}

numfield::ExtensionDesc extension_from_file(const std::string& path) {
  return extension_from(parse_key_values_file(path));
}

lattice::LatticeDesc lattice_from(const KeyValues& kv) {
  std::string rank, module;
  std::vector<std::string> generators, perms;
  for (const auto& [key, value] : kv) {
    if (key == "rank") {
      if (!rank.empty()) throw input_error("duplicate key 'rank'");
      rank = value;
    } else if (key == "generator") {
      generators.push_back(value);
    } else if (key == "perm") {
      perms.push_back(value);
    } else if (key == "module") {
      if (!module.empty()) throw input_error("duplicate key 'module'");
      module = value;
    } else {
      throw input_error("unknown lattice-manifest key '" + key + "'");
    }
  }

  const bool matrix_form = !rank.empty() || !generators.empty();
  const bool perm_form = !perms.empty() || !module.empty();
  if (matrix_form && perm_form)
    throw input_error(
        "lattice manifest mixes rank/generator keys with perm/module keys");

  if (perm_form) {
    if (perms.empty()) throw input_error("lattice manifest needs 'perm' lines");
    if (module.empty()) throw input_error("lattice manifest needs 'module'");
    std::vector<lattice::Permutation> ps;
    for (const auto& line : perms) {
      lattice::Permutation p;
      for (const auto& tok : split_ws(line)) {
        Integer v = parse_integer(tok, "perm");
        if (v < 0 || !v.fits_ulong_p())
          throw input_error("key 'perm' wants nonnegative images");
        p.push_back(static_cast<unsigned>(v.get_ui()));
      }
      ps.push_back(std::move(p));
    }
    if (module == "natural") return lattice::natural_perm_lattice(ps);
    if (module == "augmentation") return lattice::augmentation_lattice(ps);
    throw input_error("unknown module '" + module +
                      "' (want natural or augmentation)");
  }

  if (rank.empty()) throw input_error("lattice manifest needs 'rank'");
  if (generators.empty())
    throw input_error("lattice manifest needs 'generator' lines");
  const auto n = parse_u64(rank, "rank");
  lattice::LatticeDesc l;
  l.rank = static_cast<unsigned>(n);
  for (const auto& line : generators) {
    const auto toks = split_ws(line);
    if (toks.size() != n * n)
      throw input_error("each generator of a rank-" + std::to_string(n) +
                        " lattice wants " + std::to_string(n * n) +
                        " entries, got " + std::to_string(toks.size()));
    lattice::IntMat m(static_cast<unsigned>(n));
    for (std::size_t i = 0; i < toks.size(); ++i) {
      Integer v = parse_integer(toks[i], "generator");
      if (!v.fits_slong_p())
        throw input_error("generator entry '" + toks[i] + "' is out of range");
      m.a[i] = v.get_si();
    }
    l.generators.push_back(std::move(m));
  }
  return l;
}

lattice::LatticeDesc lattice_from_file(const std::string& path) {
  return lattice_from(parse_key_values_file(path));
}

}  // namespace selbound::config
