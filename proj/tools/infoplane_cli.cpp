// Command-line surface over the library: exact pairing/codec queries plus
// reproducible CSV emitters for the efficiency surfaces and sorted grids.
#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "infoplane/cantor.hpp"
#include "infoplane/combinadics.hpp"
#include "infoplane/elastic.hpp"
#include "infoplane/errors.hpp"
#include "infoplane/info_calculus.hpp"
#include "infoplane/kernels.hpp"
#include "infoplane/set_codec.hpp"
#include "infoplane/sorted.hpp"

using namespace infoplane;

namespace {

struct Options {
  std::string command;

  std::string mode = "canonical";
  std::string delta_mode = "two-arg";
  std::string op = "add";
  std::string kind = "identity";
  std::string key = "sum";
  std::string set_text;
  std::string expr;
  std::string table_text;

  std::string arg0, arg1;  // positional numbers

  unsigned long c = 1;
  unsigned long k = 1;
  std::string xmin = "0", xmax = "0", ymin = "0", ymax = "0", stride = "1";
  unsigned long cells = 100;
  unsigned long survey = 100;
  std::string target = "0";
  unsigned long nth = 0;
  bool json = false;
};

CodecMode parse_codec_mode(const std::string& m) {
  if (m == "canonical") return CodecMode::Canonical;
  if (m == "appendix") return CodecMode::Appendix;
  throw CLI::ValidationError("--mode must be canonical or appendix");
}

DeltaMode parse_delta_mode(const std::string& m) {
  if (m == "two-arg") return DeltaMode::TwoArg;
  if (m == "collapse") return DeltaMode::Collapse;
  throw CLI::ValidationError("--mode must be two-arg or collapse");
}

ElasticSpec parse_spec(const Options& o) {
  if (o.kind == "identity") return ElasticSpec::identity();
  if (o.kind == "constant") return ElasticSpec::constant(Nat(o.c));
  if (o.kind == "polynomial") return ElasticSpec::polynomial(Nat(o.c), o.k);
  throw CLI::ValidationError("--kind must be identity, constant or polynomial");
}

SortKey parse_key(const Options& o) {
  if (o.key == "sum") return SortKey::sum();
  if (o.key == "product") return SortKey::product();
  if (o.key == "cardinality") return SortKey::cardinality();
  if (o.key == "sum-under-f") {
    if (o.table_text.empty()) {
      throw CLI::ValidationError("--key sum-under-f needs --table v1,v2,...");
    }
    return SortKey::sum_under(parse_nat_list(o.table_text));
  }
  throw CLI::ValidationError("--key must be sum, product, cardinality or sum-under-f");
}

FinSet parse_set(const std::string& text) {
  return FinSet::from_values(parse_nat_list(text));
}

void emit_surface(const std::vector<SurfaceSample>& grid, bool json) {
  if (!json) std::cout << "x,y,delta_bits\n";
  for (const auto& s : grid) {
    if (json) {
      std::cout << "{\"x\":" << s.cell.x << ",\"y\":" << s.cell.y << ",\"delta_bits\":"
                << format_bits(s.delta) << "}\n";
    } else {
      std::cout << s.cell.x << ',' << s.cell.y << ',' << format_bits(s.delta) << '\n';
    }
  }
}

int run_verify();

int dispatch(const Options& o) {
  if (o.command == "pair") {
    std::cout << cantor_pair(parse_nat(o.arg0), parse_nat(o.arg1)) << '\n';
  } else if (o.command == "unpair") {
    Cell c = cantor_unpair(parse_nat(o.arg0));
    std::cout << c.x << ' ' << c.y << '\n';
  } else if (o.command == "set encode") {
    std::cout << set_encode(parse_set(o.set_text), parse_codec_mode(o.mode)) << '\n';
  } else if (o.command == "set decode") {
    std::cout << set_decode(parse_nat(o.arg0), parse_codec_mode(o.mode)).str() << '\n';
  } else if (o.command == "sigma encode") {
    std::cout << sigma_encode(parse_set(o.set_text)) << '\n';
  } else if (o.command == "sigma decode") {
    std::cout << sigma_decode(parse_nat(o.arg0), parse_nat(o.arg1)).str() << '\n';
  } else if (o.command == "delta tree") {
    CompTree tree{parse_expression(o.expr), parse_delta_mode(o.delta_mode)};
    DeltaReport rep = tree_delta(tree);
    std::cout << "result " << rep.result << '\n';
    std::cout << "nodes ";
    for (size_t i = 0; i < rep.per_node.size(); ++i) {
      if (i) std::cout << ',';
      std::cout << format_bits(rep.per_node[i]);
    }
    std::cout << '\n';
    std::cout << "total " << format_bits(rep.total) << '\n';
  } else if (o.command == "delta note") {
    std::cout << kTelescopingNote << '\n';
  } else if (o.command == "spectrum") {
    OpKind op = o.op == "mul" ? OpKind::Mul : OpKind::Add;
    auto lines = delta_spectrum(parse_nat_list(o.set_text), op, parse_delta_mode(o.delta_mode));
    std::cout << "total,multiplicity\n";
    for (const auto& l : lines) {
      std::cout << format_bits(l.total) << ',' << l.multiplicity << '\n';
    }
  } else if (o.command == "elastic apply") {
    Cell out = elastic_apply(parse_spec(o), Cell{parse_nat(o.arg0), parse_nat(o.arg1)});
    std::cout << out.x << ' ' << out.y << '\n';
  } else if (o.command == "elastic invert") {
    Cell out = elastic_invert(parse_spec(o), Cell{parse_nat(o.arg0), parse_nat(o.arg1)});
    std::cout << out.x << ' ' << out.y << '\n';
  } else if (o.command == "chain forward") {
    std::cout << chain_forward(parse_spec(o), parse_nat(o.arg0)) << '\n';
  } else if (o.command == "chain backward") {
    std::cout << chain_backward(parse_spec(o), parse_nat(o.arg0)) << '\n';
  } else if (o.command == "surface") {
    Window win{parse_nat(o.xmin), parse_nat(o.xmax), parse_nat(o.ymin), parse_nat(o.ymax),
               parse_nat(o.stride)};
    emit_surface(surface_grid(parse_spec(o), win), o.json);
  } else if (o.command == "sorted grid") {
    auto rows = sorted_survey(parse_key(o), o.cells);
    if (!o.json) std::cout << "key,theta,code,set\n";
    for (const auto& r : rows) {
      if (o.json) {
        std::cout << "{\"key\":" << r.key << ",\"theta\":" << r.theta << ",\"code\":" << r.code
                  << ",\"set\":[" << r.set.str() << "]}\n";
      } else {
        std::cout << r.key << ',' << r.theta << ',' << r.code << ',' << r.set.str() << '\n';
      }
    }
  } else if (o.command == "density") {
    auto points = density_profile(parse_key(o), o.survey);
    if (!o.json) std::cout << "n,occupied\n";
    for (const auto& p : points) {
      if (o.json) {
        std::cout << "{\"n\":" << p.n << ",\"occupied\":" << p.occupied << "}\n";
      } else {
        std::cout << p.n << ',' << p.occupied << '\n';
      }
    }
  } else if (o.command == "subset-sum") {
    FinSet ground = parse_set(o.set_text);
    Nat target = parse_nat(o.target);
    if (o.nth == 0) {
      std::cout << (subset_sum_decide(ground, target) ? "true" : "false") << '\n';
    } else {
      auto witness = nth_subset_with_sum(ground, target, Nat(o.nth));
      std::cout << (witness ? witness->str() : std::string("not-found")) << '\n';
    }
  } else if (o.command == "verify") {
    return run_verify();
  } else {
    return 2;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify: fast self-checks, one PASS/FAIL line per property.

struct Verifier {
  int failures = 0;

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    if (ok) {
      std::cout << "PASS " << name << '\n';
    } else {
      ++failures;
      std::cout << "FAIL " << name << (detail.empty() ? "" : " (" + detail + ")") << '\n';
    }
  }
};

unsigned long distinct_partitions(unsigned n) {
  std::vector<unsigned long> dp(n + 1, 0);
  dp[0] = 1;
  for (unsigned part = 1; part <= n; ++part) {
    for (unsigned s = n; s >= part; --s) dp[s] += dp[s - part];
  }
  return dp[n];
}

int run_verify() {
  Verifier v;

  {
    bool ok = true;
    for (unsigned long n = 0; n < 10000 && ok; ++n) ok = cantor_pair(cantor_unpair(n)) == n;
    for (unsigned long x = 0; x < 100 && ok; ++x) {
      for (unsigned long y = 0; y < 100 && ok; ++y) {
        ok = cantor_unpair(cantor_pair(x, y)) == Cell{x, y};
      }
    }
    v.check("pairing-round-trip", ok);
  }
  {
    bool ok = true;
    for (unsigned long w = 0; w < 100 && ok; ++w) {
      Nat base = Nat(w) * (w + 1) / 2;
      for (unsigned long x = 0; x <= w && ok; ++x) {
        ok = cantor_pair(x, w - x) == base + (w - x);
      }
    }
    v.check("counter-diagonal-contiguity", ok);
  }
  {
    bool ok = true;
    for (unsigned mask = 1; mask < (1u << 11) && ok; ++mask) {
      if (__builtin_popcount(mask) > 4) continue;
      std::vector<Nat> vals;
      for (unsigned i = 0; i < 11; ++i) {
        if ((mask >> i) & 1) vals.push_back(i);
      }
      FinSet s = FinSet::from_sorted(std::move(vals));
      ok = sigma_decode(Nat(s.size()), sigma_encode(s)) == s;
    }
    v.check("sigma-round-trip", ok);
  }
  {
    bool ok = true;
    for (unsigned long n = 0; n < 2000 && ok; ++n) ok = set_encode(set_decode(n)) == n;
    std::vector<Nat> prefix;
    for (unsigned long k = 0; k <= 8 && ok; ++k) {
      prefix.push_back(k);
      ok = set_encode(FinSet::from_sorted(prefix)) == cantor_pair(Nat(k), Nat(0));
    }
    v.check("codec-round-trip-and-anchor", ok);
  }
  {
    FinSet a2 = FinSet::from_values({0, 3, 5, 7, 9, 10});
    bool ok = set_encode(a2, CodecMode::Appendix) == 334964 &&
              set_decode(334964, CodecMode::Appendix) == a2;
    v.check("appendix-example", ok);
  }
  {
    bool ok = std::abs(delta_pi(Nat(1000000), Nat(1000000)) - 1.0) < 1e-5 &&
              std::abs(delta_pi(Nat(1000000), Nat(3000000)) - limits::origin_line(3)) < 1e-4 &&
              std::abs(reference_ratio(3, 2.0, 1000000) - 121.0 / 81.0) < 1e-3 &&
              std::abs(limits::elastic_diagonal(2) - (2 * std::log2(5.0) - 3)) < 1e-12;
    v.check("efficiency-limits", ok);
  }
  {
    auto trees = enumerate_trees({2, 47, 53, 98}, OpKind::Add);
    const Bits expected = info(200) - info(2) - info(47) - info(53) - info(98);
    bool ok = trees.size() == 15;
    for (const auto& t : trees) {
      ok = ok && std::abs(tree_delta(CompTree{t, DeltaMode::TwoArg}).total - expected) < 1e-9;
    }
    auto spectrum = delta_spectrum({2, 47, 53, 98}, OpKind::Add, DeltaMode::Collapse);
    ok = ok && spectrum.size() >= 2;
    v.check("delta-telescoping-and-collapse", ok);
  }
  {
    bool ok = true;
    for (const auto& t : enumerate_trees({2, 3, 5, 7}, OpKind::Mul)) {
      for (Bits b : tree_delta(CompTree{t, DeltaMode::TwoArg}).per_node) {
        ok = ok && std::abs(b) < 1e-9;
      }
    }
    v.check("mul-associativity", ok);
  }
  {
    bool ok = true;
    for (unsigned long c : {2ul, 3ul}) {
      auto spec = ElasticSpec::constant(c);
      for (unsigned long n = 0; n < 2000 && ok; ++n) {
        ok = chain_backward(spec, chain_forward(spec, n)) == n;
      }
    }
    v.check("chain-bijectivity", ok);
  }
  {
    auto rx = ElasticSpec::polynomial(1, 1);
    std::set<unsigned long> occupied;
    for (unsigned long x = 0; x <= 33; ++x) {
      for (unsigned long y = 0; y <= 40; ++y) {
        Cell im = elastic_apply(rx, Cell{x, y});
        if (im.x <= 32) occupied.insert(im.x.get_ui());
      }
    }
    const std::set<unsigned long> expected{0,  1,  4,  5,  9,  10, 11, 16,
                                           17, 18, 19, 25, 26, 27, 28, 29};
    bool ok = occupied == expected;
    for (unsigned k = 10; k <= 40 && ok; ++k) {
      Nat x = Nat(1) << k;
      for (unsigned long c : {2ul, 10ul, 100ul}) {
        Cell im = elastic_apply(ElasticSpec::constant(c), Cell{x, x});
        ok = ok && (info(cantor_pair(im)) - 2.0 * info(x)) > 0.0;
      }
    }
    for (unsigned k = 8; k <= 20 && ok; ++k) {
      Nat x = Nat(1) << k;
      Cell im = elastic_apply(rx, Cell{x, x});
      ok = (info(cantor_pair(im)) - 2.0 * info(x)) >= 2.0 * double(k) - 2.0;
    }
    v.check("elastic-structure", ok);
  }
  {
    bool ok = true;
    for (auto key : {SortKey::sum(), SortKey::product()}) {
      for (unsigned long n = 0; n < 300 && ok; ++n) {
        FinSet s = set_decode(n);
        if (!key.in_ground(s)) continue;
        ok = theta_alg1(key, s) == theta_bucketed(key, s);
      }
    }
    v.check("theta-oracle-agreement", ok);
  }
  {
    bool ok = true;
    for (unsigned n = 1; n <= 20 && ok; ++n) {
      ok = column_height(SortKey::sum(), n) == 2 * distinct_partitions(n);
    }
    v.check("column-height-oracle", ok);
  }
  {
    auto rows = sorted_survey(SortKey::cardinality(), 500);
    bool ok = rows.size() == 500;
    for (const auto& r : rows) ok = ok && r.code == r.index;
    v.check("cardinality-calibration", ok);
  }
  {
    FinSet g = FinSet::from_values({3, 4, 6, 7});
    bool ok = subset_sum_decide(g, 20) && subset_sum_decide(FinSet::from_values({2, 5, 6, 7}), 20) &&
              !subset_sum_decide(FinSet::from_values({2, 5, 6, 7}), 1) &&
              nth_subset_with_sum(g, 10, 1).value() == FinSet::from_values({4, 6}) &&
              nth_subset_with_sum(g, 10, 2).value() == FinSet::from_values({3, 7}) &&
              !nth_subset_with_sum(g, 10, 3).has_value();
    v.check("subset-sum-witnesses", ok);
  }
  {
    Window win{0, 30, 0, 30, 1};
    auto serial = surface_grid(ElasticSpec::constant(2), win, Exec::Serial);
    auto parallel = surface_grid(ElasticSpec::constant(2), win, Exec::Parallel);
    bool ok = serial.size() == parallel.size();
    for (size_t i = 0; i < serial.size() && ok; ++i) {
      ok = serial[i].cell == parallel[i].cell && serial[i].delta == parallel[i].delta;
    }
    v.check("kernel-determinism", ok);
  }

  return v.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Cantor-plane codecs and information-efficiency tooling"};
  app.require_subcommand(1);
  Options o;

  auto add_spec_opts = [&](CLI::App* cmd) {
    cmd->add_option("--kind", o.kind, "identity|constant|polynomial");
    cmd->add_option("--c", o.c, "stretch constant (>= 1)");
    cmd->add_option("--k", o.k, "polynomial degree (>= 1)");
  };

  auto* pair_cmd = app.add_subcommand("pair", "pack x y into a single index");
  pair_cmd->add_option("x", o.arg0)->required();
  pair_cmd->add_option("y", o.arg1)->required();

  auto* unpair_cmd = app.add_subcommand("unpair", "recover the cell of an index");
  unpair_cmd->add_option("n", o.arg0)->required();

  auto* set_cmd = app.add_subcommand("set", "finite-set codec");
  auto* set_enc = set_cmd->add_subcommand("encode", "set -> index");
  set_enc->add_option("--set", o.set_text, "comma-separated elements")->required();
  set_enc->add_option("--mode", o.mode, "canonical|appendix");
  auto* set_dec = set_cmd->add_subcommand("decode", "index -> set");
  set_dec->add_option("n", o.arg0)->required();
  set_dec->add_option("--mode", o.mode, "canonical|appendix");
  set_cmd->require_subcommand(1);

  auto* sigma_cmd = app.add_subcommand("sigma", "combinatorial number system");
  auto* sigma_enc = sigma_cmd->add_subcommand("encode", "set -> rank");
  sigma_enc->add_option("--set", o.set_text)->required();
  auto* sigma_dec = sigma_cmd->add_subcommand("decode", "(k, rank) -> set");
  sigma_dec->add_option("k", o.arg0)->required();
  sigma_dec->add_option("idx", o.arg1)->required();
  sigma_cmd->require_subcommand(1);

  auto* delta_cmd = app.add_subcommand("delta", "information efficiency of computation trees");
  auto* delta_tree = delta_cmd->add_subcommand("tree", "evaluate an expression tree");
  delta_tree->add_option("--expr", o.expr, "integers, +, *, parentheses")->required();
  delta_tree->add_option("--mode", o.delta_mode, "two-arg|collapse");
  delta_cmd->add_subcommand("note", "print the telescoping note");
  delta_cmd->require_subcommand(1);

  auto* spectrum_cmd = app.add_subcommand("spectrum", "delta totals over all bracketings");
  spectrum_cmd->add_option("--values", o.set_text, "comma-separated multiset")->required();
  spectrum_cmd->add_option("--op", o.op, "add|mul");
  spectrum_cmd->add_option("--mode", o.delta_mode, "two-arg|collapse");

  auto* elastic_cmd = app.add_subcommand("elastic", "elastic translations of the plane");
  auto* el_apply = elastic_cmd->add_subcommand("apply", "map a cell forward");
  el_apply->add_option("x", o.arg0)->required();
  el_apply->add_option("y", o.arg1)->required();
  add_spec_opts(el_apply);
  auto* el_invert = elastic_cmd->add_subcommand("invert", "map a cell back");
  el_invert->add_option("x", o.arg0)->required();
  el_invert->add_option("y", o.arg1)->required();
  add_spec_opts(el_invert);
  elastic_cmd->require_subcommand(1);

  auto* chain_cmd = app.add_subcommand("chain", "induced maps on N");
  auto* ch_f = chain_cmd->add_subcommand("forward", "pi . eps . pi^-1");
  ch_f->add_option("n", o.arg0)->required();
  add_spec_opts(ch_f);
  auto* ch_b = chain_cmd->add_subcommand("backward", "inverse chain");
  ch_b->add_option("n", o.arg0)->required();
  add_spec_opts(ch_b);
  chain_cmd->require_subcommand(1);

  auto* surface_cmd = app.add_subcommand("surface", "efficiency surface as CSV");
  add_spec_opts(surface_cmd);
  surface_cmd->add_option("--xmin", o.xmin);
  surface_cmd->add_option("--xmax", o.xmax)->required();
  surface_cmd->add_option("--ymin", o.ymin);
  surface_cmd->add_option("--ymax", o.ymax)->required();
  surface_cmd->add_option("--stride", o.stride);
  surface_cmd->add_flag("--json", o.json, "one JSON object per line");

  auto* sorted_cmd = app.add_subcommand("sorted", "sorted injections");
  auto* sorted_grid = sorted_cmd->add_subcommand("grid", "survey the first canonical sets");
  sorted_grid->add_option("--key", o.key, "sum|product|cardinality|sum-under-f");
  sorted_grid->add_option("--table", o.table_text, "table for sum-under-f");
  sorted_grid->add_option("--cells", o.cells, "number of canonical sets to survey");
  sorted_grid->add_flag("--json", o.json);
  sorted_cmd->require_subcommand(1);

  auto* density_cmd = app.add_subcommand("density", "code occupancy profile");
  density_cmd->add_option("--key", o.key);
  density_cmd->add_option("--table", o.table_text);
  density_cmd->add_option("--survey", o.survey)->required();
  density_cmd->add_flag("--json", o.json);

  auto* subset_cmd = app.add_subcommand("subset-sum", "decide or enumerate witnesses");
  subset_cmd->add_option("--set", o.set_text)->required();
  subset_cmd->add_option("--target", o.target)->required();
  subset_cmd->add_option("--nth", o.nth, "return the n-th witness instead");

  app.add_subcommand("verify", "run the invariant self-checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  // Resolve which leaf command fired.
  for (const auto* top : app.get_subcommands()) {
    o.command = top->get_name();
    for (const auto* sub : top->get_subcommands()) {
      o.command += " " + sub->get_name();
    }
  }

  try {
    return dispatch(o);
  } catch (const NotInImage& e) {
    std::cerr << "not-in-image: " << e.what() << '\n';
    return 1;
  } catch (const GroundViolation& e) {
    std::cerr << "ground-violation: " << e.what() << '\n';
    return 1;
  } catch (const EmptySetError& e) {
    std::cerr << "empty-set: " << e.what() << '\n';
    return 1;
  } catch (const SizeLimit& e) {
    std::cerr << "size-limit: " << e.what() << '\n';
    return 1;
  } catch (const InfiniteColumn& e) {
    std::cerr << "infinite-column: " << e.what() << '\n';
    return 1;
  } catch (const DivergentLimit& e) {
    std::cerr << "divergent-limit: " << e.what() << '\n';
    return 1;
  } catch (const EnumerationCap& e) {
    std::cerr << "enumeration-cap: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
}
