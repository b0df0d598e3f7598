#pragma once

#include <complex>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace etale {

// On-disk store of S-matrix rows, one directory per (algebra, level) with a JSON manifest.
class RowCache {
 public:
  explicit RowCache(std::filesystem::path root);
  static std::optional<RowCache> from_env(const std::string& explicit_dir = "");

  const std::filesystem::path& root() const { return root_; }

  std::optional<std::vector<std::complex<double>>> load(const std::string& algebra, int level, long long index,
                                                        size_t expected) const;
  void store(const std::string& algebra, int level, long long index, const std::vector<std::complex<double>>& row,
             const std::string& normalization, size_t simples) const;

  std::optional<std::string> load_text(const std::string& relpath) const;
  void store_text(const std::string& relpath, const std::string& content) const;

 private:
  std::filesystem::path level_dir(const std::string& algebra, int level) const;
  std::filesystem::path root_;
};

void atomic_write(const std::filesystem::path& path, const std::string& bytes);

}  // namespace etale
