#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "kup/engine.hpp"

using namespace kup;

namespace {

// Exit codes: 0 ok, 1 parse/validation, 2 axiom or good-pair failure,
// 3 construction refused, 4 oracle budget exceeded.
constexpr int kExitParse = 1;
constexpr int kExitAxiom = 2;
constexpr int kExitRefused = 3;
constexpr int kExitBudget = 4;

struct cli_failure {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cli_failure{kExitParse, "cannot open file: " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw cli_failure{kExitParse, "cannot write file: " + out_path};
  out << content;
}

HeegaardDiagram load_diagram(const std::string& src) {
  if (src.rfind("builtin:", 0) == 0) return builtin_diagram(src.substr(8));
  return parse_diagram(read_file(src));
}

GoodPair load_pair(const HopfAlgebraData& h, const std::string& src) {
  if (src == "auto") return auto_good_pair(h);
  return parse_good_pair(h, read_file(src));
}

HeegaardDiagram apply_move_spec(const HeegaardDiagram& d,
                                const std::string& spec) {
  std::vector<std::string> parts;
  std::istringstream is(spec);
  std::string tok;
  while (std::getline(is, tok, ':')) parts.push_back(tok);
  auto side = [&](size_t i) {
    if (parts.at(i) == "upper") return CircleSide::upper;
    if (parts.at(i) == "lower") return CircleSide::lower;
    throw cli_failure{kExitParse, "move side must be upper or lower: " + spec};
  };
  auto num = [&](size_t i) { return (size_t)std::stoul(parts.at(i)); };
  try {
    if (parts.at(0) == "flip" && parts.size() == 3)
      return flip_orientation(d, side(1), num(2));
    if (parts.at(0) == "shift" && parts.size() == 4)
      return shift_basepoint(d, side(1), num(2), num(3));
    if (parts.at(0) == "swap" && parts.size() == 3)
      return swap_circles(d, side(1), num(2));
    if (parts.at(0) == "stabilize" && parts.size() == 1) return stabilize(d);
    if (parts.at(0) == "insert2" && parts.size() == 5)
      return two_point_insert(d, num(1), num(2), num(3), num(4));
    if (parts.at(0) == "cancel2" && parts.size() == 3)
      return two_point_cancel(d, parts[1], parts[2]);
    if (parts.at(0) == "slide" && parts.size() == 4)
      return handle_slide(d, side(1), num(2), num(3));
  } catch (const std::out_of_range&) {
  } catch (const std::invalid_argument&) {
  }
  throw cli_failure{kExitParse, "unknown or malformed move: " + spec};
}

int run_invariant(const std::string& algebra, const std::string& pair_src,
                  const std::string& diagram_src, bool oracle, bool verbose,
                  const std::string& out_path) {
  HopfAlgebraData h = parse_algebra_spec(algebra);
  AxiomReport ax = check_axioms(h);
  if (!ax.all_pass)
    throw cli_failure{kExitAxiom, "algebra fails the Hopf axioms"};
  GoodPair gp = load_pair(h, pair_src);
  HeegaardDiagram d = load_diagram(diagram_src);
  std::ostringstream os;
  Scalar v = evaluate_invariant(h, gp, d, KADOrder::antipodes_low,
                                verbose ? &std::cerr : nullptr);
  os << v.str() << "\n";
  os << "nu " << gp.nu.str() << "\n";
  os << "sigma_I " << gp.sigma_I.str() << "\n";
  os << "gamma " << gp.gamma << "\n";
  if (oracle) {
    Scalar w = dense_oracle(h, gp, d);
    os << "oracle " << w.str() << "\n";
    if (w != v)
      throw cli_failure{kExitAxiom,
                        "dense oracle disagrees with sparse evaluation"};
  }
  write_output(out_path, os.str());
  return 0;
}

int run_check_hopf(const std::string& algebra, const std::string& out_path) {
  HopfAlgebraData h = parse_algebra_spec(algebra);
  AxiomReport ax = check_axioms(h);
  std::ostringstream os;
  for (const auto& it : ax.items) {
    os << (it.pass ? "pass " : "FAIL ") << it.name;
    if (!it.pass && it.witness)
      os << " (first differing column " << *it.witness << ")";
    os << "\n";
  }
  os << (ax.all_pass ? "all axioms pass\n" : "axioms FAILED\n");
  write_output(out_path, os.str());
  return ax.all_pass ? 0 : kExitAxiom;
}

int run_check_goodpair(const std::string& algebra, const std::string& pair_src,
                       const std::string& out_path) {
  HopfAlgebraData h = parse_algebra_spec(algebra);
  AxiomReport ax = check_axioms(h);
  if (!ax.all_pass)
    throw cli_failure{kExitAxiom, "algebra fails the Hopf axioms"};
  GoodPair gp = load_pair(h, pair_src);
  GPReport rep = check_good_pair(h, gp.phi, gp.Omega);
  std::ostringstream os;
  os << "universality: surrogate criterion\n";
  for (const auto& it : rep.items)
    os << (it.pass ? "pass " : "FAIL ") << it.name << "\n";
  os << "nu " << rep.nu.str() << "\n";
  os << "sigma_I " << rep.sigma_I.str() << "\n";
  os << "gamma " << rep.gamma << "\n";
  os << (rep.all_pass ? "good pair\n" : "NOT a good pair\n");
  write_output(out_path, os.str());
  return rep.all_pass ? 0 : kExitAxiom;
}

int run_goodpair(const std::string& algebra, const std::string& out_path) {
  HopfAlgebraData h = parse_algebra_spec(algebra);
  AxiomReport ax = check_axioms(h);
  if (!ax.all_pass)
    throw cli_failure{kExitAxiom, "algebra fails the Hopf axioms"};
  std::cerr << "universality: surrogate criterion\n";
  GoodPair gp = auto_good_pair(h);
  write_output(out_path, serialize_good_pair(h, gp));
  return 0;
}

int run_moves(const std::string& diagram_src,
              const std::vector<std::string>& moves,
              const std::string& out_path) {
  HeegaardDiagram d = load_diagram(diagram_src);
  for (const auto& m : moves) d = apply_move_spec(d, m);
  write_output(out_path, serialize_diagram(d));
  return 0;
}

int run_suite(const std::string& algebra, uint64_t seed,
              const std::string& out_path) {
  HopfAlgebraData h = parse_algebra_spec(algebra);
  AxiomReport ax = check_axioms(h);
  std::ostringstream os;
  os << "universality: surrogate criterion\n";
  os << "axioms: " << (ax.all_pass ? "pass" : "FAIL") << "\n";
  if (!ax.all_pass) {
    write_output(out_path, os.str());
    return kExitAxiom;
  }
  IntegralData id = build_integral_data(h);
  LemmaReport lem = lemma_suite(h, id);
  for (const auto& it : lem.items)
    os << "lemma: " << (it.pass ? "pass " : "FAIL ") << it.name << "\n";
  bool ok = lem.all_pass;

  GoodPair gp = build_good_pair(h, id);
  GPReport rep = check_good_pair(h, gp.phi, gp.Omega, &gp.f, &gp.h);
  os << "good pair: " << (rep.all_pass ? "pass" : "FAIL") << " (nu "
     << rep.nu.str() << ", gamma " << rep.gamma << ")\n";
  ok = ok && rep.all_pass;

  std::vector<HeegaardDiagram> corpus;
  corpus.push_back(builtin_diagram("s1xs2"));
  for (int p = 1; p <= 4; ++p)
    corpus.push_back(builtin_diagram("lens:" + std::to_string(p)));
  corpus.push_back(builtin_diagram("poincare"));
  for (uint64_t s = 0; s < 20; ++s)
    corpus.push_back(random_diagram(seed + s, 1 + (unsigned)(s % 2), 6));
  size_t checks = 0, failures = 0;
  for (const auto& d : corpus) {
    Scalar base = evaluate_invariant(h, gp, d);
    auto probe = [&](const HeegaardDiagram& d2) {
      ++checks;
      if (evaluate_invariant(h, gp, d2) != base) ++failures;
    };
    for (size_t i = 1; i <= d.genus; ++i) {
      probe(flip_orientation(d, CircleSide::upper, i));
      probe(flip_orientation(d, CircleSide::lower, i));
      if (!d.upper[i - 1].points.empty())
        probe(shift_basepoint(d, CircleSide::upper, i, 1));
      if (!d.lower[i - 1].points.empty())
        probe(shift_basepoint(d, CircleSide::lower, i, 1));
    }
    for (size_t i = 1; i + 1 <= d.genus; ++i) {
      probe(swap_circles(d, CircleSide::upper, i));
      probe(swap_circles(d, CircleSide::lower, i));
    }
    probe(stabilize(d));
    probe(two_point_insert(d, 1, 1, 0, 0));
    if (d.genus >= 2) {
      probe(handle_slide(d, CircleSide::upper, 1, 2));
      probe(handle_slide(d, CircleSide::lower, 2, 1));
    }
  }
  os << "moves: " << checks << " checks, " << failures << " failures\n";
  ok = ok && failures == 0;
  os << (ok ? "suite pass\n" : "suite FAIL\n");
  write_output(out_path, os.str());
  return ok ? 0 : kExitAxiom;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact 3-manifold invariants from involutory Hopf algebras in "
               "graded vector spaces"};
  app.require_subcommand(1);

  std::string algebra, pair_src = "auto", diagram_src, out_path;
  bool oracle = false, verbose = false;
  uint64_t seed = 1;
  std::vector<std::string> moves;

  auto* inv = app.add_subcommand("invariant", "compute the invariant");
  inv->add_option("--algebra", algebra)->required();
  inv->add_option("--pair", pair_src, "auto or a good-pair file");
  inv->add_option("--diagram", diagram_src,
                  "file path or builtin:lens:<p> | builtin:s1xs2 | "
                  "builtin:poincare")
      ->required();
  inv->add_flag("--oracle", oracle, "cross-check with the dense oracle");
  inv->add_flag("--verbose", verbose, "per-stage term counts on stderr");
  inv->add_option("--out", out_path);

  auto* chk = app.add_subcommand("check-hopf", "verify the Hopf axioms");
  chk->add_option("--algebra", algebra)->required();
  chk->add_option("--out", out_path);

  auto* cgp = app.add_subcommand("check-goodpair",
                                 "verify the good-pair axioms");
  cgp->add_option("--algebra", algebra)->required();
  cgp->add_option("--pair", pair_src);
  cgp->add_option("--out", out_path);

  auto* gpc = app.add_subcommand("goodpair",
                                 "build and serialize the auto good pair");
  gpc->add_option("--algebra", algebra)->required();
  gpc->add_option("--out", out_path);

  auto* mvc = app.add_subcommand("moves", "apply diagram moves");
  mvc->add_option("--diagram", diagram_src)->required();
  mvc->add_option("--move", moves,
                  "flip:<side>:<i> shift:<side>:<i>:<k> swap:<side>:<i> "
                  "stabilize insert2:<ui>:<lj>:<upos>:<lpos> "
                  "cancel2:<a>:<b> slide:<side>:<i>:<j>");
  mvc->add_option("--out", out_path);

  auto* ste = app.add_subcommand("suite", "lemma and move-invariance suites");
  ste->add_option("--algebra", algebra)->required();
  ste->add_option("--seed", seed);
  ste->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (inv->parsed())
      return run_invariant(algebra, pair_src, diagram_src, oracle, verbose,
                           out_path);
    if (chk->parsed()) return run_check_hopf(algebra, out_path);
    if (cgp->parsed()) return run_check_goodpair(algebra, pair_src, out_path);
    if (gpc->parsed()) return run_goodpair(algebra, out_path);
    if (mvc->parsed()) return run_moves(diagram_src, moves, out_path);
    if (ste->parsed()) return run_suite(algebra, seed, out_path);
  } catch (const cli_failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const centrality_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRefused;
  } catch (const integral_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRefused;
  } catch (const budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const axiom_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAxiom;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const diagram_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const scalar_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}
