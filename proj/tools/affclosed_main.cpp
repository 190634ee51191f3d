#include "afc/cli/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#ifndef AFC_FIXTURE_DIR
#define AFC_FIXTURE_DIR "fixtures"
#endif

int main(int argc, char** argv) {
  CLI::App app{"exact affine-closedness toolkit for matrix Lie algebras"};
  app.require_subcommand(1);

  bool json = false;
  bool verify = false;
  int degree_cap = 0;
  std::string out;

  std::string file;
  std::string dir = AFC_FIXTURE_DIR;
  CLI::App* c_structure =
      app.add_subcommand("structure", "radical, unipotent radical and reductive quotient");
  CLI::App* c_decide = app.add_subcommand("decide", "decide affine closedness with a certificate");
  CLI::App* c_orbit = app.add_subcommand("orbit", "orbit diagnostics and closedness certificates");
  CLI::App* c_polyprobe =
      app.add_subcommand("polyprobe", "invariants and finite-generation probes");
  for (CLI::App* c : {c_structure, c_decide, c_orbit, c_polyprobe})
    c->add_option("file", file, "fixture file (.acl)")->required();
  CLI::App* c_corpus = app.add_subcommand("corpus", "run every fixture in a directory");
  c_corpus->add_option("dir", dir, "fixture directory (defaults to the bundled set)");
  for (CLI::App* c : {c_structure, c_decide, c_orbit, c_polyprobe, c_corpus}) {
    c->add_flag("--json", json, "emit the JSON mirror of the report");
    c->add_flag("--verify", verify, "replay every certificate issued by this run");
    c->add_option("--degree-cap", degree_cap, "override the polynomial degree cap")
        ->check(CLI::PositiveNumber);
    c->add_option("--out", out, "write the report to this file instead of stdout");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    afc::cli::RunContext ctx;
    if (degree_cap > 0) ctx.degree_cap = degree_cap;

    afc::cli::Section sec;
    if (c_corpus->parsed()) {
      sec = afc::cli::run_corpus(dir, ctx);
    } else {
      afc::cli::InputDocument doc = afc::cli::load_document(file);
      std::string name = c_structure->parsed() ? "structure"
                         : c_decide->parsed()  ? "decide"
                         : c_orbit->parsed()   ? "orbit"
                                               : "polyprobe";
      sec = afc::cli::run_command(name, doc, ctx);
    }

    if (verify) {
      std::size_t n = afc::cli::verify_certificates(ctx);
      sec.text += "verified certificate replays: " + std::to_string(n) + "\n";
      sec.json["verified certificate replays"] = n;
    }

    std::string payload = json ? sec.json.dump(2) + "\n" : sec.text;
    if (!out.empty()) {
      std::ofstream f(out);
      if (!f) throw afc::ParseError(out + ": cannot open for writing");
      f << payload;
    } else {
      std::cout << payload;
    }
    return sec.status;
  } catch (const afc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const afc::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
