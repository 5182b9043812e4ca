// trigonal: command-line front end. Each subcommand builds a JSON request and
// prints the JSON response on one line; --batch reads one request per line.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "trigonal/cli/commands.hpp"

namespace {

using trigonal::cli::json;

struct Sub {
  CLI::App* app;
  std::map<std::string, std::string> values;
};

void add_option(Sub& s, const std::string& name, const std::string& help) {
  s.app->add_option("--" + name, s.values[name], help);
}

json request_of(const std::string& cmd, const Sub& s) {
  json req{{"cmd", cmd}};
  for (const auto& [k, v] : s.values)
    if (s.app->count("--" + k)) req[k] = v;
  return req;
}

int emit(const trigonal::cli::Outcome& o, bool pretty) {
  std::cout << (pretty ? o.response.dump(2) : o.response.dump()) << '\n';
  return o.exit_code;
}

int run_batch(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "trigonal: cannot open " << path << '\n';
    return trigonal::cli::kInvalid;
  }
  int code = trigonal::cli::kOk;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    trigonal::cli::Outcome o;
    try {
      o = trigonal::cli::handle(json::parse(line));
    } catch (const json::exception& e) {
      o = trigonal::cli::failure(trigonal::Error(trigonal::Errc::ParseError, std::string("bad request line: ") + e.what()));
    }
    int c = emit(o, false);
    if (code == trigonal::cli::kOk) code = c;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree-3 elliptic subfields of genus 2 function fields"};
  app.require_subcommand(0, 1);
  std::string batch;
  bool pretty = false;
  app.add_option("--batch", batch, "JSON lines file, one request per line");
  app.add_flag("--pretty", pretty, "indent the JSON response");

  std::map<std::string, Sub> subs;
  auto sub = [&](const std::string& name, const std::string& help) -> Sub& {
    Sub& s = subs[name];
    s.app = app.add_subcommand(name, help);
    return s;
  };
  const std::string field_help = "number field: minimal polynomial coefficients, low to high";

  Sub& inv = sub("invariants", "Igusa and absolute invariants of a sextic");
  add_option(inv, "sextic", "a0,...,a6 (coefficient of X^k at position k)");
  add_option(inv, "field", field_help);

  Sub& ab = sub("from-ab", "everything known about the normal form at (a, b)");
  add_option(ab, "a", "a");
  add_option(ab, "b", "b");
  add_option(ab, "field", field_help);

  Sub& cl = sub("classify", "e3: number of Aut-classes of degree-3 elliptic subfields");
  add_option(cl, "sextic", "a0,...,a6");
  add_option(cl, "i", "i1,i2,i3");
  add_option(cl, "ab", "a,b");
  add_option(cl, "uv", "u,v");
  add_option(cl, "field", field_help);

  Sub& be = sub("beta", "the involution exchanging the two subfields");
  add_option(be, "uv", "u,v");
  add_option(be, "field", field_help);

  Sub& lo = sub("locus", "residual of a locus equation at a point");
  add_option(lo, "which", "l3 | branch | ram | iso | deg | deg-partner | j2zero");
  add_option(lo, "point", "comma-separated coordinates");
  add_option(lo, "field", field_help);

  sub("special-points", "the registry of special points");

  Sub& ve = sub("verify", "run the self-check suites");
  add_option(ve, "suite", "all | symbolic | numeric");
  add_option(ve, "samples", "points per numeric property (default 20)");
  add_option(ve, "seed", "random seed (default 0)");
  bool timings = false;
  ve.app->add_flag("--timings", timings, "report per-property time in ms");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : trigonal::cli::kInvalid;
  }

  if (!batch.empty()) return run_batch(batch);
  for (auto& [name, s] : subs) {
    if (!s.app->parsed()) continue;
    json req = request_of(name, s);
    if (name == "verify" && timings) req["timings"] = true;
    return emit(trigonal::cli::handle(req), pretty);
  }
  std::cout << app.help() << '\n';
  return trigonal::cli::kInvalid;
}
