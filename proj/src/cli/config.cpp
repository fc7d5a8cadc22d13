#include "klr/catcheck.hpp"
#include "klr/cli.hpp"

#include <climits>
#include <set>

namespace klr::cli {

namespace {

void require_keys(const Json& obj, const std::string& where, const std::set<std::string>& allowed) {
    for (auto& [k, v] : obj.items())
        if (!allowed.count(k)) throw ConfigError(where.empty() ? k : where + "." + k, "unknown field");
}

int as_int(const Json& v, const std::string& field) {
    if (!v.is_number_integer()) throw ConfigError(field, "expected an integer");
    const auto x = v.get<long long>();
    if (x < INT_MIN || x > INT_MAX) throw ConfigError(field, "integer out of range");
    return static_cast<int>(x);
}

const Json& as_object(const Json& v, const std::string& field) {
    if (!v.is_object()) throw ConfigError(field, "expected an object");
    return v;
}

// "cartan.matrix: ..." style messages carry their own field prefix
[[noreturn]] void rethrow(const std::exception& e, const std::string& fallback) {
    std::string msg = e.what();
    auto colon = msg.find(": ");
    if (colon != std::string::npos && msg.find(' ') > colon) throw ConfigError(msg.substr(0, colon), msg.substr(colon + 2));
    throw ConfigError(fallback, msg);
}

CartanDatum parse_cartan(const Json& c) {
    as_object(c, "cartan");
    require_keys(c, "cartan", {"labels", "matrix"});
    if (!c.contains("matrix")) throw ConfigError("cartan.matrix", "missing");
    const Json& m = c["matrix"];
    if (!m.is_array()) throw ConfigError("cartan.matrix", "expected an array of rows");
    Matrix a;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i].is_array()) throw ConfigError("cartan.matrix", "expected an array of rows");
        std::vector<int> row;
        for (std::size_t j = 0; j < m[i].size(); ++j)
            row.push_back(as_int(m[i][j], "cartan.matrix"));
        a.push_back(row);
    }
    std::vector<std::string> labels;
    if (c.contains("labels")) {
        if (!c["labels"].is_array()) throw ConfigError("cartan.labels", "expected an array of strings");
        for (auto& l : c["labels"]) {
            if (!l.is_string() || l.get<std::string>().empty())
                throw ConfigError("cartan.labels", "expected nonempty strings");
            labels.push_back(l.get<std::string>());
        }
    }
    try {
        return CartanDatum::build(a, labels);
    } catch (const std::invalid_argument& e) {
        rethrow(e, "cartan");
    }
}

std::vector<int> label_counts(const CartanDatum& D, const Json& v, const std::string& field) {
    as_object(v, field);
    std::vector<int> out(D.rank(), 0);
    for (auto& [k, x] : v.items()) {
        int i;
        try {
            i = D.label_index(k);
        } catch (const std::invalid_argument&) {
            throw ConfigError(field + "." + k, "unknown label");
        }
        out[i] = as_int(x, field + "." + k);
        if (out[i] < 0)
            throw ConfigError(field + "." + k, (field == "lambda" ? "negative level " : "negative count ") +
                                                   std::to_string(out[i]) +
                                                   (field == "lambda" ? " is not dominant" : ""));
    }
    return out;
}

QSpec::Coeffs parse_terms(const Json& v, const std::string& field) {
    if (!v.is_array()) throw ConfigError(field, "expected a list of [p,q,numerator,denominator]");
    QSpec::Coeffs out;
    for (auto& t : v) {
        if (!t.is_array() || t.size() != 4) throw ConfigError(field, "expected a list of [p,q,numerator,denominator]");
        const int p = as_int(t[0], field), q = as_int(t[1], field);
        const int num = as_int(t[2], field), den = as_int(t[3], field);
        if (den == 0) throw ConfigError(field, "zero denominator");
        if (out.count({p, q}))
            throw ConfigError(field, "repeated term (p,q)=(" + std::to_string(p) + "," + std::to_string(q) + ")");
        mpq_class c(num, den);
        c.canonicalize();
        out[{p, q}] = c;
    }
    return out;
}

QSpec parse_qspec(const CartanDatum& D, const Json& v) {
    if (v.is_string()) {
        if (v.get<std::string>() != "standard") throw ConfigError("q_coeffs", "expected \"standard\" or a map");
        return default_qspec(D);
    }
    as_object(v, "q_coeffs");
    QSpec base = default_qspec(D);
    std::map<std::pair<int, int>, QSpec::Coeffs> given;
    for (auto& [k, terms] : v.items()) {
        const std::string field = "q_coeffs." + k;
        auto comma = k.find(',');
        if (comma == std::string::npos) throw ConfigError(field, "key must have the form \"i,j\"");
        int i, j;
        try {
            i = D.label_index(k.substr(0, comma));
            j = D.label_index(k.substr(comma + 1));
        } catch (const std::invalid_argument&) {
            throw ConfigError(field, "unknown label");
        }
        if (i == j) throw ConfigError(field, "Q_ii must be zero");
        given[{i, j}] = parse_terms(terms, field);
    }
    QSpec out = base;
    for (auto& [ij, c] : given) {
        auto [i, j] = ij;
        auto mirror = given.find({j, i});
        if (mirror != given.end()) {
            QSpec::Coeffs swapped;
            for (auto& [pq, t] : mirror->second)
                if (t != 0) swapped[{pq.second, pq.first}] = t;
            QSpec::Coeffs mine;
            for (auto& [pq, t] : c)
                if (t != 0) mine[pq] = t;
            if (swapped != mine)
                throw ConfigError("q_coeffs." + D.labels()[i] + "," + D.labels()[j],
                                  "pair " + D.labels()[i] + "," + D.labels()[j] + " is not symmetric");
        }
        out.set(i, j, c);
    }
    try {
        out.validate(D);
    } catch (const std::invalid_argument& e) {
        rethrow(e, "q_coeffs");
    }
    return out;
}

Json rational_term(const std::pair<int, int>& pq, const mpq_class& c) {
    return Json::array({pq.first, pq.second, c.get_num().get_si(), c.get_den().get_si()});
}

}  // namespace

QSpec JobConfig::qspec() const { return q_override ? *q_override : default_qspec(datum); }

std::vector<RootCombo> JobConfig::betas() const {
    if (beta) return {*beta};
    return roots_up_to(datum, nmax.value_or(0));
}

JobConfig parse_config(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ConfigError("config", std::string("invalid JSON: ") + e.what());
    }
    as_object(j, "config");
    require_keys(j, "", {"cartan", "q_coeffs", "lambda", "beta", "nmax", "degree_cap", "output", "cache_dir"});
    if (!j.contains("cartan")) throw ConfigError("cartan", "missing");
    JobConfig cfg;
    cfg.datum = parse_cartan(j["cartan"]);
    const CartanDatum& D = cfg.datum;

    if (j.contains("q_coeffs")) {
        const Json& q = j["q_coeffs"];
        if (!(q.is_string() && q.get<std::string>() == "standard")) cfg.q_override = parse_qspec(D, q);
    }

    if (!j.contains("lambda")) throw ConfigError("lambda", "missing");
    cfg.lam.levels = label_counts(D, j["lambda"], "lambda");

    const bool has_beta = j.contains("beta"), has_nmax = j.contains("nmax");
    if (has_beta == has_nmax) throw ConfigError(has_beta ? "nmax" : "beta", "exactly one of beta and nmax is required");
    if (has_beta) cfg.beta = RootCombo{label_counts(D, j["beta"], "beta")};
    if (has_nmax) {
        cfg.nmax = as_int(j["nmax"], "nmax");
        if (*cfg.nmax < 0) throw ConfigError("nmax", "must be nonnegative");
    }
    if ((cfg.beta ? cfg.beta->height() : *cfg.nmax) >= kMaxStrands)
        throw ConfigError(has_beta ? "beta" : "nmax", "at most " + std::to_string(kMaxStrands - 1) + " strands");

    if (j.contains("degree_cap")) {
        cfg.degree_cap = as_int(j["degree_cap"], "degree_cap");
        if (*cfg.degree_cap < 0) throw ConfigError("degree_cap", "must be nonnegative");
    }
    if (j.contains("output")) {
        if (!j["output"].is_string()) throw ConfigError("output", "expected \"tsv\" or \"json\"");
        cfg.output = j["output"].get<std::string>();
        if (cfg.output != "tsv" && cfg.output != "json") throw ConfigError("output", "expected \"tsv\" or \"json\"");
    }
    if (j.contains("cache_dir")) {
        if (!j["cache_dir"].is_string()) throw ConfigError("cache_dir", "expected a path string");
        cfg.cache_dir = j["cache_dir"].get<std::string>();
    }
    return cfg;
}

Json config_to_json(const JobConfig& cfg) {
    const CartanDatum& D = cfg.datum;
    Json j;
    j["cartan"] = datum_json(D);
    if (cfg.q_override) {
        Json q = Json::object();
        for (int i = 0; i < D.rank(); ++i)
            for (int k = i + 1; k < D.rank(); ++k) {
                Json terms = Json::array();
                for (auto& [pq, c] : cfg.q_override->poly(i, k)) terms.push_back(rational_term(pq, c));
                q[D.labels()[i] + "," + D.labels()[k]] = terms;
            }
        j["q_coeffs"] = q;
    } else {
        j["q_coeffs"] = "standard";
    }
    Json lam = Json::object();
    for (int i = 0; i < D.rank(); ++i) lam[D.labels()[i]] = cfg.lam.levels[i];
    j["lambda"] = lam;
    if (cfg.beta) {
        Json b = Json::object();
        for (int i = 0; i < D.rank(); ++i) b[D.labels()[i]] = cfg.beta->coeffs[i];
        j["beta"] = b;
    }
    if (cfg.nmax) j["nmax"] = *cfg.nmax;
    if (cfg.degree_cap) j["degree_cap"] = *cfg.degree_cap;
    j["output"] = cfg.output;
    if (cfg.cache_dir) j["cache_dir"] = *cfg.cache_dir;
    return j;
}

std::string emit_config(const JobConfig& cfg) { return config_to_json(cfg).dump(2) + "\n"; }

}  // namespace klr::cli
