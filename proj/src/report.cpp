#include "klr/report.hpp"

#include <algorithm>

namespace klr {

Json to_json(const LaurentPoly& p) {
    Json j = Json::object();
    for (auto& [e, c] : p.terms()) j[std::to_string(e)] = c;
    return j;
}

LaurentPoly laurent_from_json(const Json& j) {
    LaurentPoly p;
    for (auto& [k, v] : j.items()) p.add_term(std::stoi(k), v.get<std::int64_t>());
    return p;
}

std::string Report::key() const { return check + " " + datum.dump(); }

namespace {

LaurentPoly truncate(const LaurentPoly& p, int through) {
    LaurentPoly out;
    for (auto& [e, c] : p.terms())
        if (e <= through) out.add_term(e, c);
    return out;
}

std::optional<int> first_difference(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly d = a - b;
    if (d.is_zero()) return std::nullopt;
    return d.min_exponent();
}

}  // namespace

void Report::compare(const std::string& label, const LaurentPoly& lhs, const LaurentPoly& rhs) {
    Witness w{label, to_json(lhs), to_json(rhs), lhs == rhs};
    witnesses.push_back(w);
    if (!w.ok) {
        pass = false;
        if (!first_failure) first_failure = Failure{label, first_difference(lhs, rhs), w.lhs, w.rhs};
    }
}

void Report::compare_through(const std::string& label, const LaurentPoly& lhs, const LaurentPoly& rhs, int through) {
    compare(label, truncate(lhs, through), truncate(rhs, through));
}

void Report::compare(const std::string& label, long long lhs, long long rhs, std::optional<int> degree) {
    Witness w{label, lhs, rhs, lhs == rhs};
    if (degree) w.label += " @" + std::to_string(*degree);
    witnesses.push_back(w);
    if (!w.ok) {
        pass = false;
        if (!first_failure) first_failure = Failure{label, degree, w.lhs, w.rhs};
    }
}

void Report::require(const std::string& label, bool ok, std::optional<int> degree) {
    Witness w{label, ok, true, ok};
    if (degree) w.label += " @" + std::to_string(*degree);
    witnesses.push_back(w);
    if (!ok) {
        pass = false;
        if (!first_failure) first_failure = Failure{label, degree, false, true};
    }
}

void Report::fail(const std::string& kind, const std::string& message) {
    pass = false;
    failure_kind = kind;
    note = message;
    if (!first_failure) first_failure = Failure{message, std::nullopt, nullptr, nullptr};
}

Json to_json(const Report& r, bool timing) {
    Json j;
    j["check"] = r.check;
    j["datum"] = r.datum;
    j["status"] = r.pass ? "pass" : "fail";
    if (!r.failure_kind.empty()) j["failure_kind"] = r.failure_kind;
    if (!r.note.empty()) j["note"] = r.note;
    Json ws = Json::array();
    for (auto& w : r.witnesses) ws.push_back({{"label", w.label}, {"lhs", w.lhs}, {"rhs", w.rhs}, {"ok", w.ok}});
    j["witnesses"] = ws;
    if (r.first_failure) {
        Json f{{"label", r.first_failure->label}, {"lhs", r.first_failure->lhs}, {"rhs", r.first_failure->rhs}};
        f["degree"] = r.first_failure->degree ? Json(*r.first_failure->degree) : Json(nullptr);
        j["first_failure"] = f;
    }
    if (timing) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

Report report_from_json(const Json& j) {
    Report r;
    r.check = j.at("check").get<std::string>();
    r.datum = j.at("datum");
    r.pass = j.at("status").get<std::string>() == "pass";
    r.failure_kind = j.value("failure_kind", "");
    r.note = j.value("note", "");
    for (auto& w : j.at("witnesses"))
        r.witnesses.push_back({w.at("label").get<std::string>(), w.at("lhs"), w.at("rhs"), w.at("ok").get<bool>()});
    if (j.contains("first_failure")) {
        auto& f = j.at("first_failure");
        Failure fl{f.at("label").get<std::string>(), std::nullopt, f.at("lhs"), f.at("rhs")};
        if (!f.at("degree").is_null()) fl.degree = f.at("degree").get<int>();
        r.first_failure = fl;
    }
    r.elapsed_ms = j.value("elapsed_ms", 0.0);
    return r;
}

std::vector<Report> aggregate(std::vector<Report> reports) {
    std::stable_sort(reports.begin(), reports.end(), [](const Report& a, const Report& b) { return a.key() < b.key(); });
    return reports;
}

bool all_pass(const std::vector<Report>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.pass; });
}

Json suite_json(const std::vector<Report>& reports, bool timing) {
    auto sorted = aggregate(reports);
    Json out;
    int failed = 0;
    Json arr = Json::array();
    for (auto& r : sorted) {
        arr.push_back(to_json(r, timing));
        if (!r.pass) ++failed;
    }
    out["reports"] = arr;
    out["summary"] = {{"total", sorted.size()}, {"failed", failed}, {"status", failed == 0 ? "pass" : "fail"}};
    return out;
}

Json datum_json(const CartanDatum& D) {
    Json j;
    j["labels"] = D.labels();
    j["matrix"] = D.matrix();
    return j;
}

}  // namespace klr
