#pragma once

#include "higgs/asymptotic.hpp"
#include "higgs/expr_parser.hpp"

#include "json.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace higgs::io {

const char* mode_name(asymptotic::Mode m);
std::optional<asymptotic::Mode> mode_from_name(const std::string& s);

// Text renderings, lowest exponent first. The output stays inside the fixture
// expression grammar, so every printed value can be parsed back.
std::string poly_text(const LaurentPoly& p);
std::string ratfn_text(const RationalFn& f);

// JSON encodings. A polynomial is {"vars":[...],"terms":[{"exp":[...],
// "num":"<decimal>","den":"<decimal>"}...]} with terms sorted
// lexicographically by exponent vector; a rational function is
// {"num":<poly>,"den":<poly>} in canonical form.
nlohmann::json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);
nlohmann::json ratfn_to_json(const RationalFn& f);
RationalFn ratfn_from_json(const nlohmann::json& j);

// One printed-table fixture: curve and charge parameters plus the expected
// invariant as an expression-grammar string.
struct FixtureCase {
    int g = 2;
    int p = 0;
    int r = 1;
    long e = 0;
    asymptotic::Mode mode = asymptotic::Mode::y;
    std::string expr;
    std::string id;  // "g2_p0_r2_e1_y"
};

// Fixture file format: '#' comment lines, then blocks of
//   case g=2 p=0 r=2 e=1 mode=y
//   <expression, possibly spanning lines, ended by a blank line>
std::vector<FixtureCase> read_fixture_file(const std::filesystem::path& file);

// all *.txt files in the directory, in filename order
std::vector<FixtureCase> read_fixture_dir(const std::filesystem::path& dir);

// Key identifying one computed invariant.
struct InvariantKey {
    int g = 2;
    int p = 0;
    int r = 1;
    long e = 0;
    asymptotic::Mode mode = asymptotic::Mode::y;

    friend auto operator<=>(const InvariantKey&, const InvariantKey&) = default;
};

inline constexpr const char* kCacheVersion = "higgs-cache-1";

using CacheEntries = std::map<InvariantKey, RationalFn>;

// Loads a cache file. A missing file yields an empty cache; a file with the
// wrong version tag or unreadable contents yields nullopt (rejected, never
// migrated -- the caller should leave the file alone and run uncached).
std::optional<CacheEntries> load_invariants(const std::filesystem::path& file);

// Writes the cache atomically (write a temporary, then rename over the target).
void save_invariants(const std::filesystem::path& file, const CacheEntries& entries);

} // namespace higgs::io
