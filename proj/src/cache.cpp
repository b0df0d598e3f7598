#include "etale/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

namespace etale {

namespace fs = std::filesystem;

void atomic_write(const fs::path& path, const std::string& bytes) {
  fs::create_directories(path.parent_path());
  std::random_device rd;
  fs::path tmp = path;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  }
  fs::rename(tmp, path);
}

RowCache::RowCache(fs::path root) : root_(std::move(root)) {}

std::optional<RowCache> RowCache::from_env(const std::string& explicit_dir) {
  if (!explicit_dir.empty()) return RowCache(explicit_dir);
  if (const char* env = std::getenv("ETALE_CACHE_DIR"); env && *env) return RowCache(env);
  return std::nullopt;
}

fs::path RowCache::level_dir(const std::string& algebra, int level) const {
  return root_ / (algebra + "_k" + std::to_string(level));
}

std::optional<std::vector<std::complex<double>>> RowCache::load(const std::string& algebra, int level,
                                                                long long index, size_t expected) const {
  fs::path p = level_dir(algebra, level) / ("row_" + std::to_string(index) + ".bin");
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::vector<std::complex<double>> row(expected);
  in.read(reinterpret_cast<char*>(row.data()), static_cast<std::streamsize>(expected * sizeof(std::complex<double>)));
  if (static_cast<size_t>(in.gcount()) != expected * sizeof(std::complex<double>)) return std::nullopt;
  return row;
}

void RowCache::store(const std::string& algebra, int level, long long index,
                     const std::vector<std::complex<double>>& row, const std::string& normalization,
                     size_t simples) const {
  fs::path dir = level_dir(algebra, level);
  fs::path manifest = dir / "manifest.json";
  if (!fs::exists(manifest)) {
    nlohmann::json m = {{"algebra", algebra},
                        {"level", level},
                        {"convention", "shifted"},
                        {"normalization", normalization},
                        {"simples", simples}};
    atomic_write(manifest, m.dump(2) + "\n");
  }
  std::string bytes(reinterpret_cast<const char*>(row.data()), row.size() * sizeof(std::complex<double>));
  atomic_write(dir / ("row_" + std::to_string(index) + ".bin"), bytes);
}

std::optional<std::string> RowCache::load_text(const std::string& relpath) const {
  std::ifstream in(root_ / relpath);
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void RowCache::store_text(const std::string& relpath, const std::string& content) const {
  atomic_write(root_ / relpath, content);
}

}  // namespace etale
