#include "invforge/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "invforge/coords.hpp"
#include "invforge/errors.hpp"
#include "invforge/fixtures.hpp"
#include "invforge/invariants.hpp"
#include "invforge/syzygy.hpp"
#include "invforge/textio.hpp"

#ifndef INVFORGE_FIXTURE_DIR
#define INVFORGE_FIXTURE_DIR "fixtures"
#endif

namespace invforge {

namespace {

namespace fs = std::filesystem;

struct Options {
  int n = 0;
  int degree = 0;
  std::string coords;
  std::string format = "text";
  std::vector<int> degrees;
  std::string out_dir;
  std::string gens_dir;
  std::string target;
  std::string direction;
  std::string file;
  std::string fixture_dir = INVFORGE_FIXTURE_DIR;
  bool validate = false;
};

Format parse_format(const std::string& s) { return s == "json" ? Format::Json : Format::Text; }

struct InputPolynomial {
  Polynomial poly;
  Coordinates coords;
  std::string name;
};

// Reads a polynomial file. `coords` overrides the file's "# coords:" header.
InputPolynomial read_input(const fs::path& file, int n, const std::string& coords) {
  std::ifstream in(file);
  if (!in) throw Error("cannot read " + file.string());
  std::string text;
  std::string header_coords = "u";
  std::string name = file.stem().string();
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("# coords:", 0) == 0) {
      header_coords = line.substr(9);
      header_coords.erase(std::remove(header_coords.begin(), header_coords.end(), ' '), header_coords.end());
    } else if (line.rfind("# name:", 0) == 0) {
      name = line.substr(7);
      name.erase(std::remove(name.begin(), name.end(), ' '), name.end());
    } else if (!line.empty() && line[0] == '#') {
      continue;
    } else {
      text += line + "\n";
    }
  }
  const std::string c = coords.empty() ? header_coords : coords;
  if (c != "u" && c != "x") throw OutOfRange("coordinates must be u or x");
  const Coordinates kind = c == "x" ? Coordinates::X : Coordinates::U;
  const ContextPtr ctx = kind == Coordinates::X ? VarContext::x_ring(n) : VarContext::u_ring(n);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return {parse_poly_json(text, ctx), kind, name};
  return {parse_poly(text, ctx), kind, name};
}

GeneratorSet load_generators(const fs::path& dir, int n) {
  if (!fs::is_directory(dir)) throw Error("not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".poly") files.push_back(entry.path());
  }
  std::vector<Generator> gens;
  for (const auto& file : files) {
    InputPolynomial in = read_input(file, n, "");
    const Polynomial u_form = in.coords == Coordinates::U ? in.poly : phi(in.poly);
    if (std::any_of(gens.begin(), gens.end(), [&](const Generator& g) { return g.name == in.name; })) continue;
    gens.push_back(make_generator(n, in.name, u_form));
  }
  std::sort(gens.begin(), gens.end(), [](const Generator& a, const Generator& b) {
    return a.degree != b.degree ? a.degree < b.degree : a.name < b.name;
  });
  GeneratorSet out(n);
  for (auto& g : gens) out.add(std::move(g));
  if (out.empty()) throw Error("no generators in " + dir.string());
  return out;
}

void print_named(std::ostream& out, const std::string& name, const Polynomial& f, Format format) {
  if (format == Format::Json) {
    out << R"({"name":")" << name << R"(","poly":)";
    write_poly(out, f, format);
    out << "}\n";
  } else {
    out << name << " = ";
    write_poly(out, f, format);
    out << '\n';
  }
}

int cmd_invariants(const Options& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  const InvariantBasis basis = invariant_basis(o.n, o.degree);
  for (const auto& f : basis.elements) {
    write_poly(out, o.coords == "x" ? u_to_x(f) : f, format);
    out << '\n';
  }
  return kExitOk;
}

int cmd_mingenset(const Options& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  std::vector<int> degrees = o.degrees;
  if (degrees.empty()) degrees = known_degree_table(o.n).degrees;
  std::sort(degrees.begin(), degrees.end());
  const GeneratorSet gens = mingenset(o.n, static_cast<int>(degrees.size()), degrees);
  if (!o.out_dir.empty()) fs::create_directories(o.out_dir);
  for (const auto& g : gens.generators()) {
    print_named(out, g.name, o.coords == "u" ? g.u_form : g.x_form, format);
    if (!o.out_dir.empty()) {
      std::ofstream file(fs::path(o.out_dir) / (g.name + ".poly"));
      file << "# coords: u\n";
      write_poly(file, g.u_form);
      file << '\n';
      if (!file) throw Error("cannot write into " + o.out_dir);
    }
  }
  return kExitOk;
}

int cmd_syzygies(const Options& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  const GeneratorSet gens = load_generators(o.gens_dir, o.n);
  std::vector<int> degrees = o.degrees;
  std::sort(degrees.begin(), degrees.end());
  for (const auto& s : minimal_syzygies(gens, degrees)) print_named(out, "degree " + std::to_string(s.degree), s.relation, format);
  return kExitOk;
}

int cmd_member(const Options& o, std::ostream& out) {
  const GeneratorSet gens = load_generators(o.gens_dir, o.n);
  InputPolynomial target = read_input(o.target, o.n, o.coords);
  const Polynomial u_form = target.coords == Coordinates::U ? target.poly : phi(target.poly);
  if (target.coords == Coordinates::X && !(u_to_x(u_form) == target.poly)) {
    out << "not a member\n";
    return kExitNegative;
  }
  const auto rep = is_member(gens, u_form);
  if (!rep) {
    out << "not a member\n";
    return kExitNegative;
  }
  write_poly(out, *rep, parse_format(o.format));
  out << '\n';
  return kExitOk;
}

int cmd_convert(const Options& o, std::ostream& out, std::ostream& err) {
  const Format format = parse_format(o.format);
  if (o.direction == "u2x") {
    const InputPolynomial in = read_input(o.file, o.n, "u");
    try {
      write_poly(out, u_to_x(in.poly), format);
    } catch (const ResidualDenominator& e) {
      err << e.what() << '\n';
      return kExitNegative;
    }
    out << '\n';
    return kExitOk;
  }
  const InputPolynomial in = read_input(o.file, o.n, "x");
  const Polynomial u_form = phi(in.poly);
  bool round_trip = false;
  try {
    round_trip = u_to_x(u_form) == in.poly;
  } catch (const ResidualDenominator&) {
  }
  if (!round_trip) {
    err << "the input is not a d1-constant; its u-form does not map back to it\n";
    return kExitNegative;
  }
  write_poly(out, u_form, format);
  out << '\n';
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const InputPolynomial in = read_input(o.file, o.n, o.coords);
  const bool ok = in.coords == Coordinates::X ? verify_invariant_x(o.n, in.poly) : verify_invariant_u(o.n, in.poly);
  out << (ok ? "invariant" : "not invariant") << '\n';
  return ok ? kExitOk : kExitNegative;
}

std::string_view coords_name(Coordinates c) {
  switch (c) {
    case Coordinates::X: return "x";
    case Coordinates::U: return "u";
    default: return "gen";
  }
}

int cmd_fixtures(const Options& o, std::ostream& out) {
  const FixtureSet set = load_fixtures(o.fixture_dir, o.n);
  auto line = [&](const FixtureRecord& r) {
    out << r.name << '\t' << coords_name(r.coordinates) << '\t' << status_name(r.status);
    if (!r.reason.empty()) out << '\t' << r.reason;
    if (r.counterpart) out << "; fitted invariant differs in " << r.counterpart_changes << " terms";
    out << '\n';
  };
  for (const auto& r : set.generators) line(r);
  for (const auto& r : set.relations) line(r);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants and syzygies of binary forms", "invforge"};
  app.require_subcommand(1);
  Options o;

  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", o.n, "degree of the binary form")->required()->check(CLI::Range(2, 15)); };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_coords = [&](CLI::App* sub) {
    sub->add_option("--coords", o.coords, "u or x coordinates")->check(CLI::IsMember({"u", "x"}));
  };

  auto* invariants = app.add_subcommand("invariants", "basis of the invariants of one degree");
  add_n(invariants);
  invariants->add_option("--degree", o.degree, "invariant degree")->required()->check(CLI::PositiveNumber);
  add_coords(invariants);
  add_format(invariants);

  auto* mingen = app.add_subcommand("mingenset", "minimal generating set of the invariant ring");
  add_n(mingen);
  mingen->add_option("--degrees", o.degrees, "generator degrees")->delimiter(',');
  mingen->add_option("--out", o.out_dir, "write each generator to DIR/<name>.poly");
  add_coords(mingen);
  add_format(mingen);

  auto* syz = app.add_subcommand("syzygies", "minimal relations among generators");
  add_n(syz);
  syz->add_option("--gens", o.gens_dir, "directory of generator .poly files")->required();
  syz->add_option("--degrees", o.degrees, "weighted degrees")->required()->delimiter(',');
  add_format(syz);

  auto* member = app.add_subcommand("member", "express a polynomial in the generators");
  add_n(member);
  member->add_option("--gens", o.gens_dir, "directory of generator .poly files")->required();
  member->add_option("--target", o.target, "polynomial file")->required();
  add_coords(member);
  add_format(member);

  auto* convert = app.add_subcommand("convert", "change coordinates");
  add_n(convert);
  convert->add_option("--direction", o.direction, "u2x or x2u")->required()->check(CLI::IsMember({"u2x", "x2u"}));
  convert->add_option("file", o.file, "polynomial file")->required();
  add_format(convert);

  auto* verify = app.add_subcommand("verify", "check invariance");
  add_n(verify);
  add_coords(verify);
  verify->add_option("file", o.file, "polynomial file")->required();

  auto* fixtures = app.add_subcommand("fixtures", "classify the bundled fixtures");
  add_n(fixtures);
  fixtures->add_flag("--validate", o.validate, "validate every fixture")->required();
  fixtures->add_option("--dir", o.fixture_dir, "fixture root");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitBadInput;
  }

  try {
    if (*invariants) return cmd_invariants(o, out);
    if (*mingen) {
      if (o.coords.empty()) o.coords = "x";
      return cmd_mingenset(o, out);
    }
    if (*syz) return cmd_syzygies(o, out);
    if (*member) return cmd_member(o, out);
    if (*convert) return cmd_convert(o, out, err);
    if (*verify) return cmd_verify(o, out);
    if (*fixtures) return cmd_fixtures(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace invforge
