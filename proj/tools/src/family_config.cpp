#include "hecke_cli/family_config.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hecke/error.hpp"
#include "hecke/serialize.hpp"

namespace hecke::cli {

namespace {

FamilySpec read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open family file '" + path + "'", path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, path + ": byte " + std::to_string(e.byte) + ": " + e.what(),
                std::to_string(e.byte));
  }
  return family_from_json(j);
}

void check_first_admissible(const FamilySpec& spec) {
  for (std::int64_t n = 1; n <= kConfigProbeLimit; ++n) {
    if (!spec.n_constraints.allows(n)) continue;
    try {
      family_instance(spec, n);
      return;
    } catch (const Error& e) {
      switch (e.kind()) {
        case ErrorKind::NotAdmissible:
        case ErrorKind::NotSquarefree:
        case ErrorKind::DeltaOutOfRange:
          continue;
        case ErrorKind::CFMismatch:
          if (spec.min_digit(n) < 1) continue;
          throw Error(ErrorKind::SpecInconsistent,
                      "family '" + spec.name + "': declared digits disagree with delta(n)-1 at n=" +
                          std::to_string(n) + ": " + e.what(),
                      std::to_string(n));
        default:
          throw;
      }
    }
  }
  throw Error(ErrorKind::NoAdmissibleN,
              "family '" + spec.name + "' has no admissible n <= " + std::to_string(kConfigProbeLimit));
}

}  // namespace

FamilySpec load_family_config(const std::string& name_or_path) {
  FamilySpec spec;
  if (auto builtin = builtin_family(name_or_path)) {
    spec = *builtin;
  } else if (std::filesystem::exists(name_or_path)) {
    spec = read_family_file(name_or_path);
  } else {
    throw Error(ErrorKind::ParseError, "'" + name_or_path + "' is neither a built-in family nor a readable file",
                name_or_path);
  }
  check_first_admissible(spec);
  return spec;
}

}  // namespace hecke::cli
