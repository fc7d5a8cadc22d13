#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "klr/context.hpp"
#include "klr/report.hpp"

namespace klr::cli {

// A rejected configuration; field() is the dotted path of the offending entry.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& message)
        : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

struct JobConfig {
    CartanDatum datum = CartanDatum::build({{2}});
    // nullopt means the standard choice u^{-a_ij} + v^{-a_ji}
    std::optional<QSpec> q_override;
    DominantWeight lam;
    std::optional<RootCombo> beta;
    std::optional<int> nmax;
    std::optional<int> degree_cap;
    std::string output = "tsv";
    std::optional<std::string> cache_dir;

    QSpec qspec() const;
    // beta alone, or every beta with |beta| <= nmax
    std::vector<RootCombo> betas() const;
};

JobConfig parse_config(const std::string& text);
Json config_to_json(const JobConfig& cfg);
std::string emit_config(const JobConfig& cfg);

// Content-addressed store of cyclotomic quotients, one JSON file per entry.
class DiskCache : public CycStore {
public:
    static constexpr int kSchemaVersion = 1;

    DiskCache(std::filesystem::path dir, const CartanDatum& D, const QSpec& q);

    std::shared_ptr<const CycAlgebra> load(std::shared_ptr<const KLRAlgebra> R, const DominantWeight& lam,
                                           const RootCombo& beta) override;
    void save(const CycAlgebra& A) override;

    // hex SHA-256 of the canonical key material
    std::string key(const KLRAlgebra& R, const DominantWeight& lam, const RootCombo& beta) const;
    std::filesystem::path entry_path(const std::string& key) const;
    const std::filesystem::path& dir() const { return dir_; }
    int hits() const;
    int misses() const;

    struct Stat {
        int entries = 0;
        std::uintmax_t bytes = 0;
    };
    static Stat stat(const std::filesystem::path& dir);
    // removes every cache entry, returns the number removed
    static int clear(const std::filesystem::path& dir);

private:
    std::filesystem::path dir_;
    Json material_;
    mutable std::mutex mu_;
    int hits_ = 0;
    int misses_ = 0;
};

std::string sha256_hex(const std::string& data);

using Cell = std::variant<std::string, long long, LaurentPoly>;

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

std::string format_seq(const CartanDatum& D, const Seq& nu, int n);
std::string format_beta(const RootCombo& beta);
std::string format_mono(const KLRAlgebra& R, const Mono& m);

std::string emit_tsv(const std::vector<Table>& tables);
Json tables_json(const std::vector<Table>& tables);
std::string emit_reports_tsv(const std::vector<Report>& reports);

std::vector<Table> basis_tables(const Context& ctx, const JobConfig& cfg);
std::vector<Table> cyclotomic_tables(const Context& ctx, const JobConfig& cfg);
std::vector<Table> gram_tables(const Context& ctx, const JobConfig& cfg);
// the second member is false when some truncation differs from its prediction
std::pair<std::vector<Table>, bool> compare_tables(const Context& ctx, const JobConfig& cfg);

enum Exit { kPass = 0, kFail = 1, kConfigError = 2 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace klr::cli
