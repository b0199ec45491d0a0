// Command-line interface: cell partitions, cell-module matrices, transition
// matrices and Specht matrices, insertion tableaux, and the verification
// suites, with JSON or text output.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 rank out
// of the supported range.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "heckeb/cells.hpp"
#include "heckeb/session.hpp"
#include "heckeb/specht.hpp"
#include "heckeb/verify.hpp"

using json = nlohmann::ordered_json;
using namespace heckeb;

namespace {

struct RankError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 3;
  std::string order = "asymptotic";
  std::string format = "json";
  std::string cache;
  bool force = false;
};

void add_common(CLI::App* cmd, Options& opt, bool with_order = true) {
  cmd->add_option("--n", opt.n, "rank")->required();
  if (with_order) cmd->add_option("--order", opt.order, "asymptotic | revlex | weighted:x,y");
  cmd->add_option("--format", opt.format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--cache", opt.cache, "directory for persisted tables");
  cmd->add_flag("--force", opt.force, "allow ranks above the default bound");
}

void check_rank(const Options& opt) {
  const int bound = opt.force ? 7 : 5;
  if (opt.n < 2 || opt.n > bound)
    throw RankError("rank " + std::to_string(opt.n) + " outside supported range [2," +
                    std::to_string(bound) + "]");
}

MonomialOrder parse_order(const std::string& s) {
  auto ord = MonomialOrder::parse(s);
  if (!ord) throw std::invalid_argument("unknown order descriptor: " + s);
  return *ord;
}

Side parse_side(const std::string& s) {
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  if (s == "two") return Side::TwoSided;
  throw std::invalid_argument("side must be left, right or two");
}

std::vector<SignedPerm> parse_basis(const std::string& spec, int n) {
  std::vector<SignedPerm> out;
  std::string piece;
  std::istringstream in(spec);
  while (std::getline(in, piece, ',')) out.push_back(from_word(piece, n));
  return out;
}

json matrix_json(const LaurentMatrix& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& e : row) r.push_back(e.to_string());
    rows.push_back(r);
  }
  return rows;
}

void print_matrix_text(std::ostream& os, const LaurentMatrix& m) {
  for (const auto& row : m) {
    os << " ";
    for (const auto& e : row) os << " [" << e.to_string() << "]";
    os << "\n";
  }
}

json tableau_json(const Bitableau& t) {
  json comps = json::array();
  for (const auto& comp : t.comps) {
    json rows = json::array();
    for (const auto& row : comp) rows.push_back(row);
    comps.push_back(rows);
  }
  return comps;
}

int run_cells(const Options& opt, const std::string& side_str) {
  check_rank(opt);
  MonomialOrder ord = parse_order(opt.order);
  Side side = parse_side(side_str);
  Session ses(opt.cache);
  KLTable& kl = ses.table(opt.n, ord);
  CellPartition part = cell_partition(kl, side);
  const WGroup& W = ses.group(opt.n);
  const bool asym = ord == MonomialOrder::asymptotic();
  if (opt.format == "json") {
    json out;
    out["n"] = opt.n;
    out["order"] = ord.descriptor();
    out["side"] = side_str;
    json cells = json::array();
    for (const auto& cell : part.cells) {
      json c;
      if (asym) c["type"] = type_of(W.elem(cell.front())).to_string();
      json elems = json::array();
      for (int id : cell) elems.push_back(element_name(W.elem(id)));
      c["elements"] = elems;
      cells.push_back(c);
    }
    out["cells"] = cells;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "n=" << opt.n << " order=" << ord.descriptor() << " side=" << side_str
              << " cells=" << part.cells.size() << "\n";
    for (std::size_t i = 0; i < part.cells.size(); ++i) {
      const auto& cell = part.cells[i];
      std::cout << "[" << i << "] size=" << cell.size();
      if (asym) std::cout << " type=" << type_of(W.elem(cell.front())).to_string();
      std::cout << ":";
      for (int id : cell) std::cout << " " << element_name(W.elem(id)) << ",";
      std::cout << "\n";
    }
  }
  ses.persist();
  return 0;
}

int run_cellmod(const Options& opt, const std::string& word, const std::string& basis_spec) {
  check_rank(opt);
  MonomialOrder ord = parse_order(opt.order);
  Session ses(opt.cache);
  KLTable& kl = ses.table(opt.n, ord);
  const WGroup& W = ses.group(opt.n);
  SignedPerm w = from_word(word, opt.n);
  std::vector<int> cell = left_cell_of(kl, w);
  std::vector<SignedPerm> basis;
  if (!basis_spec.empty()) {
    basis = parse_basis(basis_spec, opt.n);
  } else {
    for (int id : cell) basis.push_back(W.elem(id));
  }
  CellModule mod = cell_module(kl, cell, &basis);
  if (opt.format == "json") {
    json out;
    out["n"] = opt.n;
    out["order"] = ord.descriptor();
    json b = json::array();
    for (const auto& e : basis) b.push_back(element_name(e));
    out["basis"] = b;
    json mats;
    for (Gen s = 0; s < opt.n; ++s) mats[gen_name(s)] = matrix_json(mod.gen_mats[s]);
    out["matrices"] = mats;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "cell of " << element_name(w) << " (order " << ord.descriptor() << "), basis:";
    for (const auto& e : basis) std::cout << " " << element_name(e) << ",";
    std::cout << "\n";
    for (Gen s = 0; s < opt.n; ++s) {
      std::cout << "T_" << gen_name(s) << ":\n";
      print_matrix_text(std::cout, mod.gen_mats[s]);
    }
  }
  ses.persist();
  return 0;
}

int run_specht(const Options& opt, const std::string& lambda_str, const std::string& emit) {
  check_rank(opt);
  MonomialOrder ord = parse_order(opt.order);
  if (!(ord == MonomialOrder::asymptotic()))
    throw std::invalid_argument("specht requires the asymptotic order");
  Bipartition lam = Bipartition::parse(lambda_str);
  if (lam.n() != opt.n)
    throw std::invalid_argument("lambda is a bipartition of " + std::to_string(lam.n()) +
                                ", not of n=" + std::to_string(opt.n));
  Session ses(opt.cache);
  KLTable& kl = ses.table(opt.n, ord);
  const WGroup& W = ses.group(opt.n);
  SpechtCellMatrix M = g_matrix(lam, kl);
  json out;
  out["n"] = opt.n;
  out["lambda"] = lam.to_string();
  if (emit == "g") {
    if (opt.format == "json") {
      json tabs = json::array(), cellb = json::array();
      for (const auto& t : M.tabs) tabs.push_back(tableau_json(t));
      for (int id : M.cell_basis) cellb.push_back(element_name(W.elem(id)));
      out["tableaux"] = tabs;
      out["cell_basis"] = cellb;
      out["g"] = matrix_json(M.g);
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "lambda=" << lam.to_string() << " dim=" << M.g.size() << "\n";
      for (std::size_t i = 0; i < M.tabs.size(); ++i)
        std::cout << "row " << i << ": " << M.tabs[i].to_string()
                  << "  ->  " << element_name(W.elem(M.cell_basis[i])) << "\n";
      std::cout << "G:\n";
      print_matrix_text(std::cout, M.g);
    }
  } else if (emit == "matrices") {
    auto mats = specht_matrices(lam, kl);
    if (opt.format == "json") {
      json jm;
      for (Gen s = 0; s < opt.n; ++s) jm[gen_name(s)] = matrix_json(mats[s]);
      out["matrices"] = jm;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "lambda=" << lam.to_string() << " dim=" << mats[0].size() << "\n";
      for (Gen s = 0; s < opt.n; ++s) {
        std::cout << "T_" << gen_name(s) << ":\n";
        print_matrix_text(std::cout, mats[s]);
      }
    }
  } else {
    throw std::invalid_argument("--emit must be g or matrices");
  }
  ses.persist();
  return 0;
}

int run_rs(const Options& opt, const std::string& word) {
  check_rank(opt);
  SignedPerm w = from_word(word, opt.n);
  auto [P, Q] = rs_pair(w);
  if (opt.format == "json") {
    json out;
    out["n"] = opt.n;
    out["word"] = element_name(w);
    out["window"] = window_string(w);
    out["shape"] = P.shape().to_string();
    out["P"] = tableau_json(P);
    out["Q"] = tableau_json(Q);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "w = " << element_name(w) << "  window " << window_string(w) << "\n"
              << "shape: " << P.shape().to_string() << "\n"
              << "P: " << P.to_string() << "\n"
              << "Q: " << Q.to_string() << "\n";
  }
  return 0;
}

int run_verify(const Options& opt, const std::string& suite, bool deep) {
  check_rank(opt);
  Session ses(opt.cache);
  VerifyReport rep;
  std::vector<int> ranks;
  for (int n = 2; n <= std::min(opt.n, 3); ++n) ranks.push_back(n);
  if (deep) ranks.push_back(4);
  if (suite == "thm3" || suite == "all") {
    for (int n : ranks) verify_thm3(rep, ses, n);
  }
  if (suite == "cells-rs" || suite == "all") {
    for (int n : ranks) {
      if (n >= 4) continue;
      verify_cells_rs(rep, ses, n);
      verify_distinguished(rep, ses, n);
      verify_same_type(rep, ses, n);
    }
  }
  if (suite == "counterexample" || suite == "all") {
    verify_cex_asymptotic_cell(rep, ses);
    verify_cex_asymptotic_matrices(rep, ses);
    verify_cex_weighted(rep, ses);
    verify_cex_hom(rep, ses);
  }
  if (suite == "all") {
    for (int n : ranks) verify_identities(rep, ses, n);
    verify_kl_wellformed(rep, ses, ranks.back());
    verify_counting(rep, ses, 5);
  }
  if (opt.format == "json") {
    json out;
    out["suite"] = suite;
    out["pass"] = rep.all_pass();
    json checks = json::array();
    for (const auto& r : rep.results()) {
      json c;
      c["name"] = r.name;
      c["pass"] = r.pass;
      if (!r.detail.empty()) c["detail"] = r.detail;
      checks.push_back(c);
    }
    out["checks"] = checks;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : rep.results()) {
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
      if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
      std::cout << "\n";
    }
    std::cout << (rep.all_pass() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
  }
  ses.persist();
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kazhdan-Lusztig cells and Specht modules for the two-parameter Hecke algebra of type B"};
  app.require_subcommand(1);

  Options o_cells, o_cellmod, o_specht, o_rs, o_verify;
  std::string side = "left", cell_of, basis_spec, lambda_str, emit = "g", word;
  std::string suite = "all";
  bool deep = false;

  auto* c_cells = app.add_subcommand("cells", "cell partition for an order and side");
  add_common(c_cells, o_cells);
  c_cells->add_option("--side", side, "left | right | two");

  auto* c_mod = app.add_subcommand("cellmod", "generator matrices of a left cell module");
  add_common(c_mod, o_cellmod);
  c_mod->add_option("--cell-of", cell_of, "word whose left cell to use")->required();
  c_mod->add_option("--basis", basis_spec, "comma-separated words fixing the basis order");

  auto* c_specht = app.add_subcommand("specht", "transition matrix or Specht matrices");
  add_common(c_specht, o_specht);
  c_specht->add_option("--lambda", lambda_str, "bipartition, e.g. 1|2 or 2.1|-")->required();
  c_specht->add_option("--emit", emit, "g | matrices");

  auto* c_rs = app.add_subcommand("rs", "insertion tableaux of an element");
  add_common(c_rs, o_rs, /*with_order=*/false);
  c_rs->add_option("--word", word, "generator word")->required();

  auto* c_verify = app.add_subcommand("verify", "run a verification suite");
  add_common(c_verify, o_verify, /*with_order=*/false);
  c_verify->add_option("--suite", suite, "thm3 | cells-rs | counterexample | all")
      ->check(CLI::IsMember({"thm3", "cells-rs", "counterexample", "all"}));
  c_verify->add_flag("--deep", deep, "extend the suites to rank 4");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_cells->parsed()) return run_cells(o_cells, side);
    if (c_mod->parsed()) return run_cellmod(o_cellmod, cell_of, basis_spec);
    if (c_specht->parsed()) return run_specht(o_specht, lambda_str, emit);
    if (c_rs->parsed()) return run_rs(o_rs, word);
    if (c_verify->parsed()) return run_verify(o_verify, suite, deep);
  } catch (const RankError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
