#include "CLI11.hpp"
#include "klr/catcheck.hpp"
#include "klr/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace klr::cli {

namespace {

struct Options {
    std::string command;
    std::vector<std::string> args;
    std::string config;
    std::vector<std::string> checks;
    bool json = false;
    std::string cache_dir;
    std::optional<int> degree_cap;
    int jobs = 1;
};

JobConfig load_config(const std::string& path) {
    if (path.empty()) throw ConfigError("config", "--config is required for this command");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("config", "cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return parse_config(s.str());
}

std::optional<std::string> cache_dir(const Options& o, const JobConfig* cfg) {
    if (!o.cache_dir.empty()) return o.cache_dir;
    if (const char* env = std::getenv("KLR_CACHE_DIR"); env && *env) return std::string(env);
    if (cfg && cfg->cache_dir) return cfg->cache_dir;
    return std::nullopt;
}

int cache_command(const Options& o, std::ostream& out) {
    if (o.args.size() != 1 || (o.args[0] != "clear" && o.args[0] != "stat"))
        throw ConfigError("cache", "expected \"cache clear\" or \"cache stat\"");
    std::optional<JobConfig> cfg;
    if (!o.config.empty()) cfg = load_config(o.config);
    auto dir = cache_dir(o, cfg ? &*cfg : nullptr);
    if (!dir) throw ConfigError("cache-dir", "no cache directory given");
    Table t{"cache", {"dir", "entries", "bytes"}, {}};
    if (o.args[0] == "clear") {
        const int removed = DiskCache::clear(*dir);
        t = Table{"cache", {"dir", "removed"}, {{*dir, (long long)removed}}};
    } else {
        auto s = DiskCache::stat(*dir);
        t.rows.push_back({*dir, (long long)s.entries, (long long)s.bytes});
    }
    if (o.json)
        out << tables_json({t}).dump(2) << "\n";
    else
        out << emit_tsv({t});
    return kPass;
}

int dispatch(const Options& o, std::ostream& out) {
    if (o.command == "cache") return cache_command(o, out);

    static const std::vector<std::string> commands{"basis", "cyclotomic", "gram", "compare", "check"};
    if (std::find(commands.begin(), commands.end(), o.command) == commands.end())
        throw ConfigError("command", "unknown command " + o.command);

    std::vector<std::string> names = o.checks;
    if (o.command == "check") {
        names.insert(names.end(), o.args.begin(), o.args.end());
        if (names.empty()) names.push_back("all");
        const auto& known = check_names();
        for (auto& n : names)
            if (n != "all" && std::find(known.begin(), known.end(), n) == known.end())
                throw ConfigError("check", "unknown check " + n);
    } else if (!o.args.empty()) {
        throw ConfigError("command", "unexpected argument " + o.args[0]);
    }

    JobConfig cfg = load_config(o.config);
    if (o.degree_cap) {
        if (*o.degree_cap < 0) throw ConfigError("degree-cap", "must be nonnegative");
        cfg.degree_cap = o.degree_cap;
    }
    if (o.jobs < 1) throw ConfigError("jobs", "must be positive");
    const bool json = o.json || cfg.output == "json";

    Context ctx(cfg.datum, cfg.qspec());
    if (auto dir = cache_dir(o, &cfg)) ctx.set_store(std::make_shared<DiskCache>(*dir, cfg.datum, cfg.qspec()));

    if (o.command == "check") {
        SuiteSpec spec;
        spec.lam = cfg.lam;
        spec.beta = cfg.beta;
        spec.nmax = cfg.nmax.value_or(cfg.beta ? cfg.beta->height() : 0);
        spec.checks = names;
        if (cfg.degree_cap) spec.dcap = *cfg.degree_cap;
        spec.jobs = o.jobs;
        auto reports = run_checks(ctx, spec);
        if (json)
            out << suite_json(reports).dump(2) << "\n";
        else
            out << emit_reports_tsv(reports);
        return all_pass(reports) ? kPass : kFail;
    }

    std::vector<Table> tables;
    bool ok = true;
    if (o.command == "basis") tables = basis_tables(ctx, cfg);
    if (o.command == "cyclotomic") tables = cyclotomic_tables(ctx, cfg);
    if (o.command == "gram") tables = gram_tables(ctx, cfg);
    if (o.command == "compare") std::tie(tables, ok) = compare_tables(ctx, cfg);
    if (json)
        out << tables_json(tables).dump(2) << "\n";
    else
        out << emit_tsv(tables);
    return ok ? kPass : kFail;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Computations with KLR algebras and their cyclotomic quotients"};
    app.name("klrtool");
    Options o;
    app.add_option("command", o.command, "basis | cyclotomic | gram | compare | check | cache")->required();
    app.add_option("args", o.args, "check names, or clear | stat for cache");
    app.add_option("--config", o.config, "JSON job configuration");
    app.add_option("--check", o.checks, "check to run (repeatable)")->expected(1)->take_all();
    app.add_flag("--json", o.json, "emit JSON instead of TSV");
    app.add_option("--cache-dir", o.cache_dir, "cache directory (or KLR_CACHE_DIR)");
    app.add_option("--degree-cap", o.degree_cap, "degree cap for basis tables and series checks");
    app.add_option("--jobs", o.jobs, "worker threads for checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "klrtool: " << e.what() << "\n";
        return kConfigError;
    }

    try {
        return dispatch(o, out);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFail;
    }
}

}  // namespace klr::cli
