#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "invforge/generators.hpp"
#include "invforge/polynomial.hpp"

namespace invforge {

enum class Coordinates { X, U, Generators };
enum class FixtureStatus { Validated, TranscriptionSuspect };

struct FixtureRecord {
  int n = 0;
  std::string name;
  std::filesystem::path file;
  Coordinates coordinates = Coordinates::U;
  std::string body;
  FixtureStatus status = FixtureStatus::TranscriptionSuspect;
  std::string reason;                    // why the record is suspect
  std::optional<Polynomial> polynomial;  // set whenever the body parses

  // For suspect generator records: the unique invariant of the record's
  // degree whose coefficients agree with every well-formed printed term
  // (terms that fail to parse or carry the wrong degree or weight are
  // ignored). Absent when no such invariant exists or it is not unique.
  std::optional<Polynomial> counterpart;
  std::size_t counterpart_changes = 0;  // terms where it differs from the text
};

struct FixtureSet {
  int n = 0;
  std::vector<FixtureRecord> generators;  // ascending degree, then name
  std::vector<FixtureRecord> relations;   // syzygy-1, syzygy-2, ...
  // Built from the validated generator records, one per name (u-coordinates
  // preferred), in the order of `generators`.
  GeneratorSet validated;
  // `validated` plus the counterparts of suspect records whose name has no
  // validated record. Relations are classified against this set.
  GeneratorSet effective;

  explicit FixtureSet(int n_) : n(n_), validated(n_), effective(n_) {}
};

// Reads <root>/n<N>/*.poly and *.gen. A .poly file may start with
// "# coords: u|x" and "# name: NAME" lines (defaults: u, the file stem).
// Relations are parsed over effective.gen_context() and validated by exact
// expansion. Throws Error if the directory is missing.
FixtureSet load_fixtures(const std::filesystem::path& root, int n);

// The body of a fixture file with comment lines removed.
std::string read_polynomial_file(const std::filesystem::path& file);

std::string_view status_name(FixtureStatus status);

}  // namespace invforge
