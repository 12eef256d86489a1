#ifndef HNBETTI_CACHE_HPP
#define HNBETTI_CACHE_HPP

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hnbetti/hnrec.hpp"

namespace hnbetti::cli {

inline constexpr const char* kCacheDirEnv = "HNBETTI_CACHE_DIR";

/// One JSON series document per memo entry, named ss-g{g}-r{r}-n{n}-T{T}.json.
///
/// Unreadable or inconsistent files are misses and leave a warning behind.
/// Writes go to a temporary file in the same directory followed by a rename,
/// so concurrent processes never observe a partial entry.
class DirectoryCache : public hnrec::SeriesBacking {
public:
    explicit DirectoryCache(std::filesystem::path directory);

    std::optional<exactalg::Series> load(const hnrec::ModuliQuery& q) override;
    void store(const hnrec::ModuliQuery& q, const exactalg::Series& s) override;

    const std::filesystem::path& directory() const noexcept { return directory_; }
    std::vector<std::string> warnings() const;

    static std::string file_name(const hnrec::ModuliQuery& q);

private:
    std::optional<exactalg::Series> read_entry(const std::filesystem::path& path, const hnrec::ModuliQuery& q);
    void warn(std::string message);

    std::filesystem::path directory_;
    mutable std::mutex mutex_;
    std::vector<std::string> warnings_;
};

// --cache-dir wins over HNBETTI_CACHE_DIR; neither means no persistent cache.
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag);

}  // namespace hnbetti::cli

#endif  // HNBETTI_CACHE_HPP
