#include "hnbetti/cache.hpp"

#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hnbetti/document.hpp"
#include "hnbetti/error.hpp"

namespace hnbetti::cli {

namespace fs = std::filesystem;
using exactalg::Series;

namespace {

std::string family_prefix(const hnrec::ModuliQuery& q) {
    return "ss-g" + std::to_string(q.genus) + "-r" + std::to_string(q.rank) + "-n" + std::to_string(q.degree) + "-T";
}

}  // namespace

DirectoryCache::DirectoryCache(fs::path directory) : directory_(std::move(directory)) {}

std::string DirectoryCache::file_name(const hnrec::ModuliQuery& q) {
    return family_prefix(q) + std::to_string(q.truncation) + ".json";
}

std::vector<std::string> DirectoryCache::warnings() const {
    std::lock_guard lock(mutex_);
    return warnings_;
}

void DirectoryCache::warn(std::string message) {
    std::lock_guard lock(mutex_);
    warnings_.push_back(std::move(message));
}

std::optional<Series> DirectoryCache::read_entry(const fs::path& path, const hnrec::ModuliQuery& q) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        warn("cache entry " + path.string() + " is unreadable");
        return std::nullopt;
    }
    std::ostringstream text;
    text << in.rdbuf();
    try {
        const OutputDocument doc = parse_json(text.str());
        if (doc.kind != DocumentKind::series) throw InvalidArgument("not a series document");
        if (doc.meta.genus != q.genus || doc.meta.rank != q.rank || doc.meta.degree != q.degree)
            throw InvalidArgument("metadata does not match the file name");
        const auto& s = std::get<Series>(doc.payload);
        if (s.order() < q.truncation) throw InvalidArgument("shorter than requested");
        if (s[0] != 1) throw InvalidArgument("constant term is not 1");
        for (const auto& c : s.coefficients())
            if (sgn(c) < 0) throw InvalidArgument("negative coefficient");
        return s;
    } catch (const Error& e) {
        warn("ignoring corrupt cache entry " + path.string() + ": " + e.what());
        return std::nullopt;
    }
}

std::optional<Series> DirectoryCache::load(const hnrec::ModuliQuery& q) {
    std::error_code ec;
    if (!fs::is_directory(directory_, ec)) return std::nullopt;

    const fs::path exact = directory_ / file_name(q);
    if (fs::exists(exact, ec))
        if (auto s = read_entry(exact, q)) return s;

    // Any longer entry of the same family, shortest first.
    const std::string prefix = family_prefix(q);
    std::optional<std::size_t> best;
    for (const auto& entry : fs::directory_iterator(directory_, ec)) {
        const std::string name = entry.path().filename().string();
        if (name.rfind(prefix, 0) != 0 || name.size() <= prefix.size() + 5) continue;
        if (name.compare(name.size() - 5, 5, ".json") != 0) continue;
        const std::string digits = name.substr(prefix.size(), name.size() - prefix.size() - 5);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) continue;
        const std::size_t order = std::stoull(digits);
        if (order > q.truncation && (!best || order < *best)) best = order;
    }
    if (!best) return std::nullopt;
    hnrec::ModuliQuery longer = q;
    longer.truncation = *best;
    return read_entry(directory_ / file_name(longer), q);
}

void DirectoryCache::store(const hnrec::ModuliQuery& q, const Series& s) {
    static std::atomic<unsigned long> counter{0};
    std::error_code ec;
    fs::create_directories(directory_, ec);
    if (ec) {
        warn("cannot create cache directory " + directory_.string() + ": " + ec.message());
        return;
    }
    Metadata meta;
    meta.genus = q.genus;
    meta.rank = q.rank;
    meta.degree = q.degree;
    const std::string body = render_json(series_document(s, meta));

    const fs::path target = directory_ / file_name(q);
    const fs::path temp = directory_ / (file_name(q) + ".tmp." + std::to_string(::getpid()) + "." +
                                        std::to_string(counter.fetch_add(1)));
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        out << body;
        if (!out) {
            warn("cannot write cache entry " + temp.string());
            fs::remove(temp, ec);
            return;
        }
    }
    fs::rename(temp, target, ec);
    if (ec) {
        warn("cannot publish cache entry " + target.string() + ": " + ec.message());
        fs::remove(temp, ec);
    }
}

std::optional<fs::path> resolve_cache_dir(const std::optional<std::string>& flag) {
    if (flag && !flag->empty()) return fs::path(*flag);
    if (const char* env = std::getenv(kCacheDirEnv); env != nullptr && *env != '\0') return fs::path(env);
    return std::nullopt;
}

}  // namespace hnbetti::cli
