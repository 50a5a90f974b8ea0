// OEIS b-files: parsing, an on-disk cache, HTTP fetch and a comparison of a
// sequence against the skew 2-Dyck counts.
#pragma once

#include "skewdyck/series.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace skewdyck::oeis {

class OeisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Entry {
  long n = 0;
  BigInt value;
};

/// "n a(n)" per line; blank lines and lines starting with '#' are skipped.
/// Throws OeisError on malformed lines.
std::vector<Entry> parse_bfile(std::string_view text);

/// Accepts "A007564" or "a007564"; returns the upper-case form. Throws
/// OeisError for anything else.
std::string normalize_id(std::string_view id);

/// Snapshot shipped with the binary, if any.
std::optional<std::string> bundled_bfile(std::string_view id);

class Cache {
 public:
  explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(std::string_view id) const;
  std::optional<std::string> load(std::string_view id) const;
  /// Writes to a temporary file and renames it into place.
  void store(std::string_view id, std::string_view text) const;

 private:
  std::filesystem::path dir_;
};

/// $SKEWDYCK_CACHE_DIR, else $XDG_CACHE_HOME/skewdyck, else ~/.cache/skewdyck.
std::filesystem::path default_cache_dir();
/// $SKEWDYCK_OEIS_URL, else https://oeis.org.
std::string default_base_url();

/// GET {base_url}/Axxxxxx/bxxxxxx.txt. Throws OeisError on any failure.
std::string fetch_bfile(std::string_view id, const std::string& base_url);

struct LoadOptions {
  std::filesystem::path cache_dir = default_cache_dir();
  std::string base_url = default_base_url();
  bool offline = false;
};

struct Loaded {
  std::string id;
  std::string source;  // "cache", "network" or "bundled"
  std::vector<Entry> entries;
};

/// Cache first; then the network (storing the result) unless offline; the
/// bundled snapshot only when offline.
Loaded load_sequence(std::string_view id, const LoadOptions& options);

struct Row {
  long n = 0;
  std::optional<BigInt> oeis;  // absent when the b-file stops earlier
  BigInt dp_total;             // closed skew 2-Dyck paths of length 3n
  BigInt r_coeff;
  bool matches_dp() const { return oeis && *oeis == dp_total; }
  bool matches_r() const { return oeis && *oeis == r_coeff; }
};

std::vector<Row> compare(const std::vector<Entry>& entries, long n_max);

}  // namespace skewdyck::oeis
