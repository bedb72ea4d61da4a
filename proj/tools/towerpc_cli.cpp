// towerpc command line: exact arithmetic and invariants for the fundamental
// groups of iterated S^1-bundles, the height-3 classification, and the
// real-Bott normalization of flat RP^1-tower groups.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "towerpc/bott.hpp"
#include "towerpc/classify3.hpp"
#include "towerpc/collect.hpp"
#include "towerpc/consistency.hpp"
#include "towerpc/coset.hpp"
#include "towerpc/invariants.hpp"
#include "towerpc/io.hpp"
#include "towerpc/presentation.hpp"
#include "towerpc/realize3.hpp"
#include "towerpc/smith.hpp"
#include "towerpc/witness.hpp"

namespace {

using namespace towerpc;

TowerPresentation load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_tower_text(buf.str());
}

ThreeParams parse_params(const std::string& spec) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : spec) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 4) throw ParseError("--params needs a,eps,eps1,eps2");
  auto sign_of = [](const std::string& s) {
    if (s == "1" || s == "+1") return 1;
    if (s == "-1") return -1;
    throw ParseError("sign '" + s + "' must be 1 or -1");
  };
  try {
    return ThreeParams{Int(parts[0]), sign_of(parts[1]), sign_of(parts[2]), sign_of(parts[3])};
  } catch (const ParseError&) {
    throw;
  } catch (const std::runtime_error& e) {
    throw ParseError(std::string("bad --params value: ") + e.what());
  }
}

// file positional or --params shortcut, exactly one
TowerPresentation load_input(const std::string& file, const std::string& params) {
  if (!params.empty() && !file.empty())
    throw ParseError("give either a file or --params, not both");
  if (!params.empty()) return parse_params(params).presentation();
  if (!file.empty()) return load_file(file);
  throw ParseError("no input: give a .tower file or --params");
}

ThreeParams params_of(const TowerPresentation& p) {
  if (p.n != 3) throw FormError("height-3 input required, got n=" + std::to_string(p.n));
  return ThreeParams{p.tail_entry(1, 2, 3), p.eps(1, 2), p.eps(1, 3), p.eps(2, 3)};
}

Class3Label parse_label(const std::string& name, const Int& a) {
  using K = Class3Label::Kind;
  static const std::map<std::string, K> flats = {{"G1", K::G1}, {"G2", K::G2}, {"B1", K::B1},
                                                 {"B2", K::B2}, {"B3", K::B3}, {"B4", K::B4}};
  if (auto it = flats.find(name); it != flats.end()) return {it->second, Int(0)};
  if (name == "NIL") return {K::Nil, a};
  if (name == "INFRANIL") return {K::InfraNil, a};
  throw ParseError("unknown class '" + name + "' (use G1,G2,B1..B4,NIL,INFRANIL)");
}

void print_witness(const IsomorphismWitness& w) {
  for (std::size_t i = 0; i < w.forward.size(); ++i)
    std::cout << "fwd.s" << i + 1 << "=" << w.forward[i].str() << "\n";
  for (std::size_t j = 0; j < w.backward.size(); ++j)
    std::cout << "bwd.s" << j + 1 << "=" << w.backward[j].str() << "\n";
}

void cmd_validate(const std::string& file) {
  TowerPresentation p = load_file(file);  // validate() runs inside the parser
  std::cout << "valid=true\n";
  auto r = consistency_check(p);
  std::cout << "consistent=" << (r.consistent ? "true" : "false") << "\n";
  if (!r.consistent) {
    std::cout << "witness.triple=(" << r.witness->i << "," << r.witness->j << ","
              << r.witness->k << ")\n";
    std::cout << "witness.lhs=" << r.witness->lhs.str() << "\n";
    std::cout << "witness.rhs=" << r.witness->rhs.str() << "\n";
  }
}

void cmd_invariants(const TowerPresentation& p, const std::vector<Int>& mods, long long cap) {
  require_consistent(p);
  for (const Int& q : mods)
    if (!is_prime(q)) throw NotPrimeError(q.str() + " is not prime");
  std::cout << "n=" << p.n << "\n";
  AbelianInvariants h1 = abelianization(p);
  std::cout << "h1.free=" << h1.free_rank << "\n";
  std::cout << "h1.torsion=";
  for (std::size_t i = 0; i < h1.torsion.size(); ++i) {
    if (i) std::cout << ",";
    std::cout << h1.torsion[i];
  }
  std::cout << "\n";
  for (const Int& q : mods) std::cout << "b1.mod" << q << "=" << b1_mod_p(p, q) << "\n";
  std::cout << "rp1=" << (is_rp1_tower(p) ? "true" : "false") << "\n";
  std::cout << "torus=" << (is_torus(p) ? "true" : "false") << "\n";
  for (int j = 2; j <= p.n; ++j)
    std::cout << "orientable.level." << j << "=" << (is_orientable_level(p, j) ? "true" : "false")
              << "\n";
  std::cout << "flat=" << (is_flat(Collector(p)) ? "true" : "false") << "\n";
  auto gamma = finite_quotient_order(p, QuotientKind::Gamma, cap);
  auto lambda = finite_quotient_order(p, QuotientKind::Lambda, cap);
  if (gamma.closed)
    std::cout << "gamma.index=" << gamma.order << "\n";
  else
    std::cout << "gamma.index=did-not-close(" << cap << ")\n";
  if (lambda.closed)
    std::cout << "lambda.index=" << lambda.order << "\n";
  else
    std::cout << "lambda.index=did-not-close(" << cap << ")\n";
}

void cmd_classify3(const TowerPresentation& p) {
  require_consistent(p);
  Classification c = canonical_class(params_of(p));
  std::cout << "class=" << c.label.str() << "\n";
  for (std::size_t k = 0; k < c.moves.size(); ++k)
    std::cout << "move." << k + 1 << "=" << c.moves[k].str() << "\n";
  print_witness(c.witness);
}

void cmd_bott_normalize(const std::string& file) {
  TowerPresentation p = load_file(file);
  BottNormalization r = bott_normalize(p);
  std::cout << print_tower(r.presentation);
  for (int i = 1; i <= r.matrix.n; ++i)
    std::cout << "bott.row." << i << "=" << r.matrix.row_str(i) << "\n";
  print_witness(r.witness);
}

void cmd_realize3(const std::string& name, const Int& a, int probe_depth) {
  Class3Label label = parse_label(name, a);
  Realization r = realize(label);
  RealizationReport report = verify_realization_maps(r, probe_depth);
  std::cout << "class=" << label.str() << "\n";
  for (int i = 0; i < 3; ++i) std::cout << "s" << i + 1 << ": " << r.gen[i].str() << "\n";
  for (const auto& v : report.relations)
    std::cout << "relation." << v.i << "." << v.j << "=" << (v.exact ? "exact" : "FAIL") << "\n";
  std::cout << "probe=" << (report.probe_passed ? "pass" : "fail") << "\n";
  std::cout << "probe.depth=" << report.probe_depth << "\n";
}

void cmd_mult(const std::string& file, const std::string& w1, const std::string& w2) {
  TowerPresentation p = load_file(file);
  require_consistent(p);
  Collector c(p);
  NormalForm prod = c.multiply(c.evaluate(parse_word(w1, p.n)), c.evaluate(parse_word(w2, p.n)));
  std::cout << prod.str() << "\n";
}

void cmd_enumerate(int n, const Int& max_a) {
  if (n != 3) throw ParseError("enumeration is implemented for --n 3 only");
  if (max_a < 0) throw ParseError("--max-a must be nonnegative");
  std::map<std::string, long long> counts;
  long long total = 0;
  for (int e : {1, -1})
    for (int e1 : {1, -1})
      for (int e2 : {1, -1})
        for (Int a = -max_a; a <= max_a; ++a) {
          ++counts[canonical_class({a, e, e1, e2}).label.str()];
          ++total;
        }
  // fixed label order: the flats, then the families by parameter
  std::vector<std::string> order = {"G1", "G2", "B1", "B2", "B3", "B4"};
  for (Int a = 1; a <= max_a; ++a) order.push_back("NIL(" + a.str() + ")");
  for (Int a = 1; a <= max_a; ++a) order.push_back("INFRANIL(" + a.str() + ")");
  for (const auto& label : order)
    if (auto it = counts.find(label); it != counts.end())
      std::cout << "class." << label << "=" << it->second << "\n";
  std::cout << "labels=" << counts.size() << "\n";
  std::cout << "total=" << total << "\n";
}

std::vector<Int> parse_mod_list(const std::string& mods) {
  std::vector<Int> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw ParseError("bad --mod list");
    out.emplace_back(cur);
    cur.clear();
  };
  for (char c : mods) {
    if (c == ',')
      flush();
    else if (std::isdigit(static_cast<unsigned char>(c)))
      cur += c;
    else
      throw ParseError("bad --mod list");
  }
  flush();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic with fundamental groups of iterated S^1-bundles"};
  app.require_subcommand(1);

  std::string file, params, word1, word2, class_name, mods = "2,3";
  long long coset_cap = 1000000;
  int probe_depth = 6, enum_n = 3;
  std::string max_a_s = "10", family_a = "1";

  auto* validate_cmd = app.add_subcommand("validate", "structural and overlap checks");
  validate_cmd->add_option("file", file, "presentation file")->required();

  auto* inv_cmd = app.add_subcommand("invariants", "H1, Betti numbers, flatness, quotients");
  inv_cmd->add_option("file", file, "presentation file");
  inv_cmd->add_option("--params", params, "a,eps,eps1,eps2 height-3 shortcut");
  inv_cmd->add_option("--mod", mods, "primes for b1 (default 2,3)");
  inv_cmd->add_option("--coset-cap", coset_cap, "coset table bound");

  auto* cls_cmd = app.add_subcommand("classify3", "height-3 classification with witness");
  cls_cmd->add_option("file", file, "presentation file");
  cls_cmd->add_option("--params", params, "a,eps,eps1,eps2 height-3 shortcut");

  auto* bott_cmd = app.add_subcommand("bott-normalize", "rewrite a flat RP1-tower in Bott form");
  bott_cmd->add_option("file", file, "presentation file")->required();

  auto* rel_cmd = app.add_subcommand("realize3", "exact affine realization of a height-3 class");
  rel_cmd->add_option("--class", class_name, "G1,G2,B1..B4,NIL,INFRANIL")->required();
  rel_cmd->add_option("--a", family_a, "family parameter (NIL/INFRANIL)");
  rel_cmd->add_option("--probe-depth", probe_depth, "freeness probe depth (default 6)");

  auto* mult_cmd = app.add_subcommand("mult", "collect the product of two words");
  mult_cmd->add_option("file", file, "presentation file")->required();
  mult_cmd->add_option("w1", word1, "first word, e.g. 's1 s2^-1'")->required();
  mult_cmd->add_option("w2", word2, "second word")->required();

  auto* enum_cmd = app.add_subcommand("enumerate", "bucket height-3 data by class");
  enum_cmd->add_option("--n", enum_n, "height (must be 3)");
  enum_cmd->add_option("--max-a", max_a_s, "range |a| <= max-a (default 10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cout << "error=parse-error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*validate_cmd) {
      cmd_validate(file);
    } else if (*inv_cmd) {
      cmd_invariants(load_input(file, params), parse_mod_list(mods), coset_cap);
    } else if (*cls_cmd) {
      cmd_classify3(load_input(file, params));
    } else if (*bott_cmd) {
      cmd_bott_normalize(file);
    } else if (*rel_cmd) {
      cmd_realize3(class_name, Int(family_a), probe_depth);
    } else if (*mult_cmd) {
      cmd_mult(file, word1, word2);
    } else if (*enum_cmd) {
      cmd_enumerate(enum_n, Int(max_a_s));
    }
  } catch (const InternalError& e) {
    std::cout << "error=" << e.kind() << ": " << e.what() << "\n";
    return 3;
  } catch (const PreconditionError& e) {
    std::cout << "error=" << e.kind() << ": " << e.what() << "\n";
    return 2;
  } catch (const InconsistencyError& e) {
    std::cout << "error=" << e.kind() << ": " << e.what() << "\n";
    return 2;
  } catch (const TowerError& e) {
    std::cout << "error=" << e.kind() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cout << "error=assertion-failure: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
