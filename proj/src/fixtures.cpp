#include "invforge/fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "invforge/coords.hpp"
#include "invforge/errors.hpp"
#include "invforge/invariants.hpp"
#include "invforge/linalg.hpp"
#include "invforge/syzygy.hpp"
#include "invforge/textio.hpp"

namespace invforge {

namespace {

struct RawFile {
  std::string body;
  std::map<std::string, std::string> headers;
};

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

RawFile read_raw(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error("cannot read " + file.string());
  RawFile out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '#') {
      const auto colon = line.find(':');
      if (colon != std::string::npos) out.headers[trim(line.substr(1, colon - 1))] = trim(line.substr(colon + 1));
      continue;
    }
    out.body += line;
    out.body += '\n';
  }
  out.body = trim(out.body);
  return out;
}

int number_suffix(const std::string& s) {
  std::size_t i = s.size();
  while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
  return i < s.size() ? std::stoi(s.substr(i)) : 0;
}

void classify_generator(FixtureRecord& rec) {
  const ContextPtr ctx = rec.coordinates == Coordinates::X ? VarContext::x_ring(rec.n) : VarContext::u_ring(rec.n);
  try {
    rec.polynomial = parse_poly(rec.body, ctx);
  } catch (const ParseError& e) {
    rec.reason = std::string("does not parse: ") + e.what();
    return;
  }
  const Polynomial& f = *rec.polynomial;
  if (f.is_zero()) {
    rec.reason = "zero polynomial";
    return;
  }
  const bool ok = rec.coordinates == Coordinates::X ? verify_invariant_x(rec.n, f) : verify_invariant_u(rec.n, f);
  if (ok) {
    rec.status = FixtureStatus::Validated;
  } else {
    rec.reason = is_homogeneous(f) && is_isobaric(f) ? "not annihilated by the invariance operators"
                                                     : "not homogeneous and weight balanced";
  }
}

// Parses term by term, dropping terms that do not parse.
Polynomial parse_lenient(const std::string& body, const ContextPtr& ctx) {
  Polynomial out(ctx);
  std::size_t start = 0;
  for (std::size_t i = 1; i <= body.size(); ++i) {
    if (i < body.size() && body[i] != '+' && body[i] != '-') continue;
    if (i < body.size() && body[i - 1] == '^') continue;
    try {
      out += parse_poly(std::string_view(body).substr(start, i - start), ctx);
    } catch (const ParseError&) {
    }
    start = i;
  }
  return out;
}

int majority_degree(const Polynomial& f) {
  std::map<int, std::size_t> count;
  for (const auto& t : f.terms()) ++count[t.monomial.degree()];
  int best = 0;
  std::size_t best_count = 0;
  for (const auto& [d, c] : count) {
    if (c > best_count) best = d, best_count = c;
  }
  return best;
}

void fit_counterpart(FixtureRecord& rec) {
  const ContextPtr ctx = rec.coordinates == Coordinates::X ? VarContext::x_ring(rec.n) : VarContext::u_ring(rec.n);
  const Polynomial printed = parse_lenient(rec.body, ctx);
  if (printed.is_zero()) return;
  const int d = majority_degree(printed);
  std::vector<Term> graded;
  for (const auto& t : printed.terms()) {
    if (t.monomial.degree() == d && t.monomial.weight(*ctx) * 2 == rec.n * d) graded.push_back(t);
  }
  if (graded.empty() || rec.n * d % 2 != 0) return;

  std::vector<Polynomial> basis = rec.coordinates == Coordinates::X ? invariant_basis_direct(rec.n, d).elements
                                                                    : invariant_basis(rec.n, d).elements;
  if (basis.empty()) return;
  RationalMatrix system(graded.size(), basis.size());
  std::vector<Rational> rhs;
  for (std::size_t r = 0; r < graded.size(); ++r) {
    for (std::size_t c = 0; c < basis.size(); ++c) system(r, c) = basis[c].coefficient(graded[r].monomial);
    rhs.push_back(graded[r].coeff);
  }
  if (rank(system) != basis.size()) return;
  const auto solution = solve_affine(system, rhs);
  if (!solution) return;
  Polynomial fitted(ctx);
  for (std::size_t c = 0; c < basis.size(); ++c) fitted += basis[c] * (*solution)[c];
  rec.counterpart_changes = (fitted - printed).size();
  rec.counterpart = std::move(fitted);
}

void add_unique(GeneratorSet& set, int n, const std::string& name, const Polynomial& f, Coordinates coords) {
  const auto& existing = set.generators();
  if (std::any_of(existing.begin(), existing.end(), [&](const Generator& g) { return g.name == name; })) return;
  set.add(make_generator(n, name, coords == Coordinates::U ? f : phi(f)));
}

}  // namespace

std::string read_polynomial_file(const std::filesystem::path& file) { return read_raw(file).body; }

std::string_view status_name(FixtureStatus status) {
  return status == FixtureStatus::Validated ? "validated" : "transcription-suspect";
}

FixtureSet load_fixtures(const std::filesystem::path& root, int n) {
  const auto dir = root / ("n" + std::to_string(n));
  if (!std::filesystem::is_directory(dir)) throw Error("no fixtures for n=" + std::to_string(n) + " in " + dir.string());

  std::vector<std::filesystem::path> poly_files;
  std::vector<std::filesystem::path> gen_files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".poly") poly_files.push_back(entry.path());
    if (entry.path().extension() == ".gen") gen_files.push_back(entry.path());
  }

  FixtureSet out(n);
  for (const auto& file : poly_files) {
    RawFile raw = read_raw(file);
    FixtureRecord rec;
    rec.n = n;
    rec.file = file;
    rec.name = raw.headers.contains("name") ? raw.headers["name"] : file.stem().string();
    const std::string coords = raw.headers.contains("coords") ? raw.headers["coords"] : "u";
    if (coords != "u" && coords != "x") throw Error(file.string() + ": unknown coordinates '" + coords + "'");
    rec.coordinates = coords == "x" ? Coordinates::X : Coordinates::U;
    rec.body = std::move(raw.body);
    classify_generator(rec);
    if (rec.status != FixtureStatus::Validated) fit_counterpart(rec);
    out.generators.push_back(std::move(rec));
  }
  std::sort(out.generators.begin(), out.generators.end(), [](const FixtureRecord& a, const FixtureRecord& b) {
    const int da = number_suffix(a.name);
    const int db = number_suffix(b.name);
    if (da != db) return da < db;
    if (a.name != b.name) return a.name < b.name;
    return a.coordinates == Coordinates::U && b.coordinates != Coordinates::U;
  });

  for (const auto& rec : out.generators) {
    if (rec.status == FixtureStatus::Validated) add_unique(out.validated, n, rec.name, *rec.polynomial, rec.coordinates);
  }
  std::vector<std::string> validated_names;
  for (const auto& g : out.validated.generators()) validated_names.push_back(g.name);
  for (const auto& rec : out.generators) {
    if (rec.status == FixtureStatus::Validated) {
      add_unique(out.effective, n, rec.name, *rec.polynomial, rec.coordinates);
    } else if (rec.counterpart &&
               std::find(validated_names.begin(), validated_names.end(), rec.name) == validated_names.end()) {
      add_unique(out.effective, n, rec.name, *rec.counterpart, rec.coordinates);
    }
  }

  std::sort(gen_files.begin(), gen_files.end(), [](const auto& a, const auto& b) {
    return number_suffix(a.stem().string()) < number_suffix(b.stem().string());
  });
  for (const auto& file : gen_files) {
    FixtureRecord rec;
    rec.n = n;
    rec.file = file;
    rec.name = file.stem().string();
    rec.coordinates = Coordinates::Generators;
    rec.body = read_raw(file).body;
    if (out.effective.empty()) {
      rec.reason = "no validated generators";
    } else {
      try {
        rec.polynomial = parse_poly(rec.body, out.effective.gen_context());
        if (check_syzygy(out.effective, *rec.polynomial) && !rec.polynomial->is_zero()) {
          rec.status = FixtureStatus::Validated;
        } else {
          rec.reason = "does not expand to zero";
        }
      } catch (const ParseError& e) {
        rec.reason = std::string("refers to an unvalidated generator or does not parse: ") + e.what();
      }
    }
    out.relations.push_back(std::move(rec));
  }
  return out;
}

}  // namespace invforge
