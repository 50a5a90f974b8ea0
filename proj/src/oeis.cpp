#include "skewdyck/oeis.hpp"

#include "skewdyck/automaton.hpp"
#include "skewdyck/closed_form.hpp"

#include <httplib.h>

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

namespace skewdyck::oeis {

namespace {

// Recorded 2026-10-16. Only terms that could be checked offline are kept;
// fetch the b-file for more.
constexpr std::string_view kA007564Snapshot =
    "# A007564 offline snapshot (terms 0..7), recorded 2026-10-16\n"
    "0 1\n"
    "1 1\n"
    "2 4\n"
    "3 19\n"
    "4 100\n"
    "5 562\n"
    "6 3304\n"
    "7 20071\n";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<Entry> parse_bfile(std::string_view text) {
  std::vector<Entry> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    std::istringstream in{std::string(line)};
    long n = 0;
    std::string value;
    std::string extra;
    if (!(in >> n >> value) || (in >> extra)) {
      throw OeisError("b-file line " + std::to_string(line_no) + ": expected \"n a(n)\", got \"" +
                      std::string(line) + "\"");
    }
    Entry e;
    e.n = n;
    if (e.value.set_str(value, 10) != 0) {
      throw OeisError("b-file line " + std::to_string(line_no) + ": bad integer \"" + value + "\"");
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::string normalize_id(std::string_view id) {
  const bool ok = id.size() == 7 && (id[0] == 'A' || id[0] == 'a') &&
                  std::all_of(id.begin() + 1, id.end(),
                              [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  if (!ok) throw OeisError("unknown sequence id '" + std::string(id) + "' (expected A followed by 6 digits)");
  std::string out(id);
  out[0] = 'A';
  return out;
}

std::optional<std::string> bundled_bfile(std::string_view id) {
  if (normalize_id(id) == "A007564") return std::string(kA007564Snapshot);
  return std::nullopt;
}

std::filesystem::path Cache::path_for(std::string_view id) const {
  const std::string norm = normalize_id(id);
  return dir_ / ("b" + norm.substr(1) + ".txt");
}

std::optional<std::string> Cache::load(std::string_view id) const {
  std::ifstream in(path_for(id), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void Cache::store(std::string_view id, std::string_view text) const {
  std::filesystem::create_directories(dir_);
  const auto final_path = path_for(id);
  static std::atomic<unsigned> counter{0};
  std::random_device rd;
  const auto tmp = final_path.string() + ".tmp." + std::to_string(::getpid()) + "." +
                   std::to_string(counter++) + "." + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw OeisError("cannot write cache file " + tmp);
    out << text;
    if (!out.flush()) throw OeisError("cannot write cache file " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, final_path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw OeisError("cannot move cache file into place: " + ec.message());
  }
}

std::filesystem::path default_cache_dir() {
  if (const char* dir = std::getenv("SKEWDYCK_CACHE_DIR"); dir && *dir) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return std::filesystem::path(xdg) / "skewdyck";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "skewdyck";
  return std::filesystem::temp_directory_path() / "skewdyck";
}

std::string default_base_url() {
  if (const char* url = std::getenv("SKEWDYCK_OEIS_URL"); url && *url) return url;
  return "https://oeis.org";
}

std::string fetch_bfile(std::string_view id, const std::string& base_url) {
  const std::string norm = normalize_id(id);
  const std::string path = "/" + norm + "/b" + norm.substr(1) + ".txt";
  httplib::Client client(base_url);
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  client.set_follow_location(true);
  auto res = client.Get(path);
  if (!res) {
    throw OeisError("fetching " + base_url + path + " failed (" + httplib::to_string(res.error()) +
                    "); rerun with --offline to use cached or bundled data");
  }
  if (res->status == 404) throw OeisError("unknown sequence " + norm + " (HTTP 404)");
  if (res->status != 200) {
    throw OeisError("fetching " + base_url + path + " returned HTTP " +
                    std::to_string(res->status) + "; rerun with --offline to use bundled data");
  }
  if (parse_bfile(res->body).empty()) throw OeisError("empty b-file for " + norm);
  return res->body;
}

Loaded load_sequence(std::string_view id, const LoadOptions& options) {
  Loaded out;
  out.id = normalize_id(id);
  const Cache cache(options.cache_dir);
  if (auto text = cache.load(out.id)) {
    out.source = "cache";
    out.entries = parse_bfile(*text);
    return out;
  }
  if (options.offline) {
    if (auto text = bundled_bfile(out.id)) {
      out.source = "bundled";
      out.entries = parse_bfile(*text);
      return out;
    }
    throw OeisError("no cached or bundled b-file for " + out.id + " (offline)");
  }
  const std::string text = fetch_bfile(out.id, options.base_url);
  out.entries = parse_bfile(text);
  cache.store(out.id, text);
  out.source = "network";
  return out;
}

std::vector<Row> compare(const std::vector<Entry>& entries, long n_max) {
  if (n_max < 0) throw OeisError("compare: n_max must be >= 0");
  const auto dp = totals(2, static_cast<int>(3 * n_max));
  const Series r = r_series(static_cast<int>(n_max) + 1);
  std::vector<Row> rows;
  for (long n = 0; n <= n_max; ++n) {
    Row row;
    row.n = n;
    for (const auto& e : entries)
      if (e.n == n) row.oeis = e.value;
    row.dp_total = dp[static_cast<std::size_t>(3 * n)];
    row.r_coeff = r.coeff(static_cast<int>(n)).get_num();
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace skewdyck::oeis
