#include "klr/cli.hpp"
#include "klr/uqmod.hpp"

#include <sstream>

namespace klr::cli {

namespace {

std::string cell_text(const Cell& c) {
    if (auto s = std::get_if<std::string>(&c)) return *s;
    if (auto v = std::get_if<long long>(&c)) return std::to_string(*v);
    return std::get<LaurentPoly>(c).str();
}

Json cell_json(const Cell& c) {
    if (auto s = std::get_if<std::string>(&c)) return *s;
    if (auto v = std::get_if<long long>(&c)) return *v;
    return to_json(std::get<LaurentPoly>(c));
}

std::string format_fmono(const CartanDatum& D, const FMonomial& f) {
    if (f.empty()) return "-";
    std::string out;
    for (std::size_t k = 0; k < f.size(); ++k) out += (k ? "," : "") + D.labels()[f[k]];
    return out;
}

}  // namespace

std::string format_seq(const CartanDatum& D, const Seq& nu, int n) { return format_fmono(D, seq_entries(nu, n)); }

std::string format_beta(const RootCombo& beta) {
    std::string out = "(";
    for (std::size_t i = 0; i < beta.coeffs.size(); ++i) out += (i ? "," : "") + std::to_string(beta.coeffs[i]);
    return out + ")";
}

std::string format_mono(const KLRAlgebra& R, const Mono& m) {
    std::string out;
    for (auto l : R.perms().word(m.w)) out += "t" + std::to_string(l + 1);
    std::string xs;
    for (int k = 0; k < R.n(); ++k) {
        if (m.a[k] == 0) continue;
        xs += "x" + std::to_string(k + 1);
        if (m.a[k] > 1) xs += "^" + std::to_string(m.a[k]);
    }
    if (!out.empty() && !xs.empty()) out += " ";
    out += xs;
    if (!out.empty()) out += " ";
    return out + "e(" + format_seq(R.datum(), m.nu, R.n()) + ")";
}

std::string emit_tsv(const std::vector<Table>& tables) {
    std::ostringstream s;
    for (std::size_t t = 0; t < tables.size(); ++t) {
        if (t) s << "\n";
        s << "# " << tables[t].name << "\n";
        for (std::size_t c = 0; c < tables[t].columns.size(); ++c) s << (c ? "\t" : "") << tables[t].columns[c];
        s << "\n";
        for (auto& row : tables[t].rows) {
            for (std::size_t c = 0; c < row.size(); ++c) s << (c ? "\t" : "") << cell_text(row[c]);
            s << "\n";
        }
    }
    return s.str();
}

Json tables_json(const std::vector<Table>& tables) {
    Json out = Json::object();
    for (auto& t : tables) {
        Json rows = Json::array();
        for (auto& row : t.rows) {
            Json r = Json::array();
            for (auto& c : row) r.push_back(cell_json(c));
            rows.push_back(r);
        }
        out[t.name] = {{"columns", t.columns}, {"rows", rows}};
    }
    return out;
}

std::string emit_reports_tsv(const std::vector<Report>& reports) {
    Table t{"checks", {"check", "datum", "status", "detail"}, {}};
    for (auto& r : reports) {
        std::string detail = r.note;
        if (r.first_failure) {
            detail = r.first_failure->label + ": " + r.first_failure->lhs.dump() + " != " + r.first_failure->rhs.dump();
            if (r.first_failure->degree) detail += " at degree " + std::to_string(*r.first_failure->degree);
        }
        t.rows.push_back({r.check, r.datum.dump(), std::string(r.pass ? "pass" : "fail"), detail});
    }
    std::ostringstream s;
    s << emit_tsv({t});
    const auto failed = std::count_if(reports.begin(), reports.end(), [](const Report& r) { return !r.pass; });
    s << "# " << reports.size() << " reports, " << failed << " failed\n";
    return s.str();
}

std::vector<Table> basis_tables(const Context& ctx, const JobConfig& cfg) {
    const int cap = cfg.degree_cap.value_or(4);
    Table mono{"basis", {"beta", "degree", "monomial"}, {}};
    Table count{"basis_counts", {"beta", "degree", "count"}, {}};
    for (const RootCombo& beta : cfg.betas()) {
        auto R = ctx.klr(beta.height());
        const int lo = R->crossing_degree_range(beta).first;
        for (int d = lo; d <= cap; ++d) {
            auto ms = R->basis_monomials(beta, d);
            if (ms.empty()) continue;
            count.rows.push_back({format_beta(beta), (long long)d, (long long)ms.size()});
            for (const Mono& m : ms) mono.rows.push_back({format_beta(beta), (long long)d, format_mono(*R, m)});
        }
    }
    return {count, mono};
}

std::vector<Table> cyclotomic_tables(const Context& ctx, const JobConfig& cfg) {
    Table t{"cyclotomic", {"beta", "mu", "nu", "dim", "dim_q"}, {}};
    const CartanDatum& D = ctx.datum();
    for (const RootCombo& beta : cfg.betas()) {
        auto A = ctx.cyc(cfg.lam, beta);
        const int n = beta.height();
        const LaurentPoly total = A->graded_dim();
        t.rows.push_back({format_beta(beta), std::string("*"), std::string("*"), (long long)total.eval_at_one(), total});
        for (const Seq& mu : A->seqs())
            for (const Seq& nu : A->seqs()) {
                const LaurentPoly p = A->truncation_dim(mu, nu);
                t.rows.push_back({format_beta(beta), format_seq(D, mu, n), format_seq(D, nu, n),
                                  (long long)p.eval_at_one(), p});
            }
    }
    return {t};
}

std::vector<Table> gram_tables(const Context& ctx, const JobConfig& cfg) {
    const CartanDatum& D = ctx.datum();
    ShapovalovForm form(D, cfg.lam);
    Table g{"gram", {"beta", "mu", "nu", "pairing"}, {}};
    Table r{"gram_rank", {"beta", "sequences", "rank"}, {}};
    for (const RootCombo& beta : cfg.betas()) {
        auto seqs = weight_sequences(D, beta);
        GramMatrix m = form.gram(beta);
        for (std::size_t a = 0; a < seqs.size(); ++a)
            for (std::size_t b = 0; b < seqs.size(); ++b)
                g.rows.push_back({format_beta(beta), format_fmono(D, seqs[a]), format_fmono(D, seqs[b]), m[a][b]});
        r.rows.push_back({format_beta(beta), (long long)seqs.size(), (long long)laurent_rank(m)});
    }
    return {r, g};
}

std::pair<std::vector<Table>, bool> compare_tables(const Context& ctx, const JobConfig& cfg) {
    const CartanDatum& D = ctx.datum();
    ShapovalovForm form(D, cfg.lam);
    Table t{"compare", {"beta", "mu", "nu", "truncation", "prediction", "status"}, {}};
    bool ok = true;
    for (const RootCombo& beta : cfg.betas()) {
        auto A = ctx.cyc(cfg.lam, beta);
        const int n = beta.height();
        for (const Seq& mu : A->seqs())
            for (const Seq& nu : A->seqs()) {
                auto m = seq_entries(mu, n), v = seq_entries(nu, n);
                const LaurentPoly got = A->truncation_dim(mu, nu);
                const LaurentPoly want = form.predicted_dim({m.rbegin(), m.rend()}, {v.rbegin(), v.rend()});
                ok = ok && got == want;
                t.rows.push_back({format_beta(beta), format_seq(D, mu, n), format_seq(D, nu, n), got, want,
                                  std::string(got == want ? "pass" : "fail")});
            }
    }
    return {{t}, ok};
}

}  // namespace klr::cli
