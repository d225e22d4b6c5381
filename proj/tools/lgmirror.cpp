#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "lgmirror/report.hpp"

using namespace lgm;

namespace {

struct Options {
  std::string poly;
  std::string file;
  std::string catalog;
  std::vector<std::string> insertions;
  int max_k = 4;
  int jobs = 1;
  bool pretty = false;
};

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Non-empty lines with '#' comments removed.
std::vector<std::string> read_lines(const std::string& path) {
  std::vector<std::string> out;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line.substr(0, line.find('#')));
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

InvertiblePolynomial input_polynomial(const Options& o) {
  if (!o.poly.empty() && !o.file.empty()) throw InputError("give the polynomial either inline or with --file");
  std::string text = o.poly;
  if (!o.file.empty()) {
    auto lines = read_lines(o.file);
    if (lines.size() != 1) throw InputError("--file must hold exactly one polynomial");
    text = lines[0];
  }
  if (trim(text).empty()) throw InputError("no polynomial given");
  return parse_invertible(text);
}

void emit(const Json& j, bool pretty) { std::cout << (pretty ? j.dump(2) : j.dump()) << "\n"; }

int selftest(const Options& o) {
  const auto catalog = o.catalog.empty() ? default_catalog() : read_lines(o.catalog);
  std::vector<InvertiblePolynomial> polys;
  for (const auto& text : catalog) polys.push_back(parse_invertible(text));

  std::vector<std::vector<CriterionResult>> results(polys.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < polys.size();) results[i] = verify_polynomial(polys[i]);
  };
  const int jobs = std::max(1, o.jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  bool pass = true;
  Json entries = Json::array();
  std::string table;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    Json e = criteria_report(results[i]);
    e["polynomial"] = polys[i].to_string();
    pass = pass && all_pass(results[i]);
    entries.push_back(std::move(e));
    table += polys[i].to_string() + "\n" + criteria_table(results[i]);
  }
  const auto t5 = check_chiodo_types();
  const auto kshape = check_k_shapes_all();
  pass = pass && t5.pass() && kshape.pass();
  if (o.pretty) {
    std::cout << table << "catalog-independent\n" << criteria_table({t5, kshape});
    std::cout << (pass ? "selftest passed" : "selftest FAILED") << "\n";
  } else {
    emit({{"command", "selftest"},
          {"catalog", entries},
          {"chiodo_types", criterion_json(t5)},
          {"k_audit", criterion_json(kshape)},
          {"pass", pass}},
         false);
  }
  return pass ? 0 : 1;
}

int run(const std::string& cmd, const Options& o) {
  if (cmd == "selftest") return selftest(o);
  const auto w = input_polynomial(o);
  auto wrap = [&](Json j) {
    j["command"] = cmd;
    j["input"] = w.to_string();
    return j;
  };
  if (cmd == "info") {
    emit(wrap(info_report(w)), o.pretty);
    return 0;
  }
  if (cmd == "dual") {
    emit(wrap(dual_report(w)), o.pretty);
    return 0;
  }
  StateSpace s(w);
  if (cmd == "basis") {
    emit(wrap(basis_report(s)), o.pretty);
    return 0;
  }
  if (cmd == "frobenius") {
    emit(wrap(frobenius_report(s)), o.pretty);
    return 0;
  }
  if (cmd == "pairing") {
    auto j = pairing_report(s);
    emit(wrap(j), o.pretty);
    return j["match"].get<bool>() ? 0 : 1;
  }
  if (cmd == "threept") {
    std::vector<IVec> ins;
    for (const auto& t : o.insertions) ins.push_back(parse_monomial(w, t));
    emit(wrap(threept_report(s, ins)), o.pretty);
    return 0;
  }
  if (cmd == "fourpoint") {
    auto j = fourpoint_report(s);
    emit(wrap(j), o.pretty);
    return j["match"].get<bool>() ? 0 : 1;
  }
  if (cmd == "reconstruct") {
    if (o.max_k < 3 || o.max_k > 6) throw InputError("--max-k must lie in 3..6");
    Reconstructor r(s);
    emit(wrap(reconstruct_report(r, static_cast<std::size_t>(o.max_k))), o.pretty);
    return r.four_point_report().unique() ? 0 : 1;
  }
  if (cmd == "verify") {
    const auto criteria = verify_polynomial(w);
    if (o.pretty)
      std::cout << w.to_string() << "\n" << criteria_table(criteria);
    else
      emit(wrap(criteria_report(criteria)), false);
    return all_pass(criteria) ? 0 : 1;
  }
  throw InputError("unknown subcommand " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mirror symmetry computations for invertible polynomials"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--pretty", o.pretty, "human-readable output");

  auto with_poly = [&](CLI::App* sub) {
    sub->add_option("polynomial", o.poly, "e.g. \"x1^2*x2+x2^2\"");
    sub->add_option("--file", o.file, "read the polynomial from a file");
    sub->fallthrough();
    return sub;
  };
  with_poly(app.add_subcommand("info", "weights, invariants and symmetry group"));
  with_poly(app.add_subcommand("dual", "transposed polynomial"));
  with_poly(app.add_subcommand("basis", "standard basis, sectors, narrow and broad"));
  with_poly(app.add_subcommand("frobenius", "structure constants of the product"));
  with_poly(app.add_subcommand("pairing", "Gram matrices on both sides"));
  auto* tp = app.add_subcommand("threept", "one three-point correlator");
  tp->add_option("polynomial", o.poly, "polynomial")->required();
  tp->add_option("insertions", o.insertions, "three monomials in the dual variables, \"1\" for the unit")
      ->expected(3);
  tp->fallthrough();
  with_poly(app.add_subcommand("fourpoint", "F_i by closed form and by Chiodo classes"));
  auto* rc = with_poly(app.add_subcommand("reconstruct", "genus-zero primary correlators by WDVV"));
  rc->add_option("--max-k", o.max_k, "largest number of insertions (3..6)");
  with_poly(app.add_subcommand("verify", "acceptance checks for one polynomial"));
  auto* st = app.add_subcommand("selftest", "acceptance checks over a catalog");
  st->add_option("--catalog", o.catalog, "newline-separated polynomials");
  st->add_option("--jobs", o.jobs, "catalog entries evaluated in parallel");
  st->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit(error_report("usage", e.what()), false);
    return 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  const auto t0 = std::chrono::steady_clock::now();
  int code = 0;
  try {
    code = run(cmd, o);
  } catch (const std::invalid_argument& e) {
    emit(error_report("input", e.what()), false);
    code = 2;
  } catch (const std::exception& e) {
    emit(error_report("internal", e.what()), false);
    code = 1;
  }
  std::cerr << "lgmirror " << cmd << ": "
            << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s\n";
  return code;
}
