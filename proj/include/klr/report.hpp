#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "klr/cartan.hpp"
#include "klr/laurent.hpp"

namespace klr {

using Json = nlohmann::json;

Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

struct Witness {
    std::string label;
    Json lhs;
    Json rhs;
    bool ok = true;
};

struct Failure {
    std::string label;
    std::optional<int> degree;
    Json lhs;
    Json rhs;
};

struct Report {
    std::string check;
    Json datum = Json::object();
    bool pass = true;
    // "", "window" or "error"
    std::string failure_kind;
    std::string note;
    std::vector<Witness> witnesses;
    std::optional<Failure> first_failure;
    double elapsed_ms = 0;

    // check name followed by the canonical datum
    std::string key() const;

    void compare(const std::string& label, const LaurentPoly& lhs, const LaurentPoly& rhs);
    // compares coefficients up to and including degree `through`
    void compare_through(const std::string& label, const LaurentPoly& lhs, const LaurentPoly& rhs, int through);
    void compare(const std::string& label, long long lhs, long long rhs, std::optional<int> degree = std::nullopt);
    void require(const std::string& label, bool ok, std::optional<int> degree = std::nullopt);
    void fail(const std::string& kind, const std::string& message);
};

Json to_json(const Report& r, bool timing = true);
Report report_from_json(const Json& j);

// sorted by key, so the result does not depend on completion order
std::vector<Report> aggregate(std::vector<Report> reports);
bool all_pass(const std::vector<Report>& reports);
Json suite_json(const std::vector<Report>& reports, bool timing = true);

Json datum_json(const CartanDatum& D);

}  // namespace klr
