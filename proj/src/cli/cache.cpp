#include "klr/cli.hpp"

#include <atomic>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include <openssl/evp.h>

namespace klr::cli {

namespace fs = std::filesystem;

namespace {

bool is_entry(const fs::path& p) {
    const std::string name = p.filename().string();
    if (name.size() != 64 + 5 || name.substr(64) != ".json") return false;
    for (int i = 0; i < 64; ++i)
        if (!std::isxdigit(static_cast<unsigned char>(name[i]))) return false;
    return true;
}

bool is_temp(const fs::path& p) {
    const std::string name = p.filename().string();
    return name.size() > 4 && name.front() == '.' && name.substr(name.size() - 4) == ".tmp";
}

Json mono_json(const Mono& m, int n, const Scalar& c) {
    Json nu = Json::array(), a = Json::array();
    for (int k = 0; k < n; ++k) {
        nu.push_back(m.nu[k]);
        a.push_back(m.a[k]);
    }
    return Json::array({m.w, nu, a, c.get_str()});
}

Elem elem_from_json(const Json& j, int n) {
    Accumulator acc(n);
    for (auto& t : j) {
        Mono m;
        m.w = t.at(0).get<std::uint16_t>();
        const Json& nu = t.at(1);
        const Json& a = t.at(2);
        if (static_cast<int>(nu.size()) != n || static_cast<int>(a.size()) != n)
            throw std::invalid_argument("term has the wrong strand count");
        for (int k = 0; k < n; ++k) {
            m.nu[k] = nu[k].get<std::uint8_t>();
            m.a[k] = a[k].get<std::uint16_t>();
        }
        acc.add(m, Scalar(t.at(3).get<std::string>()));
    }
    return acc.finish();
}

std::string unique_suffix() {
    static std::atomic<unsigned> counter{0};
    std::random_device rd;
    std::ostringstream s;
    s << std::hex << rd() << "-" << counter++;
    return s.str();
}

}  // namespace

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 failed");
    std::ostringstream s;
    for (unsigned int i = 0; i < len; ++i) s << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return s.str();
}

DiskCache::DiskCache(fs::path dir, const CartanDatum& D, const QSpec& q) : dir_(std::move(dir)) {
    material_["schema"] = kSchemaVersion;
    material_["matrix"] = D.matrix();
    material_["symmetrizers"] = D.symmetrizers();
    Json qc = Json::array();
    for (int i = 0; i < D.rank(); ++i)
        for (int j = 0; j < D.rank(); ++j)
            for (auto& [pq, c] : q.poly(i, j)) qc.push_back(Json::array({i, j, pq.first, pq.second, c.get_str()}));
    material_["qspec"] = qc;
}

std::string DiskCache::key(const KLRAlgebra& R, const DominantWeight& lam, const RootCombo& beta) const {
    Json m = material_;
    m["kind"] = "cyclotomic";
    m["lambda"] = lam.levels;
    m["beta"] = beta.coeffs;
    auto [lo, hi] = degree_cap(R, lam, beta);
    m["window"] = Json::array({lo, hi});
    return sha256_hex(m.dump());
}

fs::path DiskCache::entry_path(const std::string& key) const { return dir_ / (key + ".json"); }

int DiskCache::hits() const {
    std::lock_guard<std::mutex> lock(mu_);
    return hits_;
}

int DiskCache::misses() const {
    std::lock_guard<std::mutex> lock(mu_);
    return misses_;
}

std::shared_ptr<const CycAlgebra> DiskCache::load(std::shared_ptr<const KLRAlgebra> R, const DominantWeight& lam,
                                                  const RootCombo& beta) {
    const std::string k = key(*R, lam, beta);
    std::shared_ptr<const CycAlgebra> out;
    try {
        std::ifstream in(entry_path(k));
        if (in) {
            Json j = Json::parse(in);
            if (j.at("schema") == kSchemaVersion && j.at("key") == k) {
                std::vector<Elem> rows;
                for (auto& r : j.at("relations")) rows.push_back(elem_from_json(r, R->n()));
                out = std::make_shared<const CycAlgebra>(R, lam, beta, rows);
            }
        }
    } catch (const std::exception&) {
        out.reset();
    }
    std::lock_guard<std::mutex> lock(mu_);
    ++(out ? hits_ : misses_);
    return out;
}

void DiskCache::save(const CycAlgebra& A) {
    const int n = A.klr().n();
    const std::string k = key(A.klr(), A.lambda(), A.beta());
    Json rels = Json::array();
    for (const Elem& e : A.ideal_relations()) {
        Json terms = Json::array();
        for (auto& [m, c] : e.terms()) terms.push_back(mono_json(m, n, c));
        rels.push_back(terms);
    }
    Json j;
    j["schema"] = kSchemaVersion;
    j["key"] = k;
    j["relations"] = rels;

    std::error_code ec;
    fs::create_directories(dir_, ec);
    const fs::path tmp = dir_ / ("." + k + "." + unique_suffix() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) return;
        out << j.dump() << "\n";
        if (!out) {
            fs::remove(tmp, ec);
            return;
        }
    }
    fs::rename(tmp, entry_path(k), ec);
    if (ec) fs::remove(tmp, ec);
}

DiskCache::Stat DiskCache::stat(const fs::path& dir) {
    Stat s;
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) return s;
    for (auto& e : fs::directory_iterator(dir, ec)) {
        if (!e.is_regular_file() || !is_entry(e.path())) continue;
        ++s.entries;
        s.bytes += e.file_size();
    }
    return s;
}

int DiskCache::clear(const fs::path& dir) {
    int removed = 0;
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) return 0;
    std::vector<fs::path> doomed;
    for (auto& e : fs::directory_iterator(dir, ec))
        if (e.is_regular_file() && (is_entry(e.path()) || is_temp(e.path()))) doomed.push_back(e.path());
    for (auto& p : doomed)
        if (fs::remove(p, ec) && is_entry(p)) ++removed;
    return removed;
}

}  // namespace klr::cli
