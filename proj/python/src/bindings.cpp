#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "klr/catcheck.hpp"
#include "klr/cli.hpp"
#include "klr/uqmod.hpp"

namespace py = pybind11;
using namespace klr;

namespace {

std::map<int, long long> poly_dict(const LaurentPoly& p) {
    std::map<int, long long> out;
    for (auto& [e, c] : p.terms()) out[e] = c;
    return out;
}

Seq to_seq(const CartanDatum& D, const std::vector<std::string>& labels) {
    std::vector<int> idx;
    for (auto& l : labels) idx.push_back(D.label_index(l));
    return make_seq(idx);
}

class CycHandle {
public:
    explicit CycHandle(std::shared_ptr<const CycAlgebra> A) : A_(std::move(A)) {}

    int dim() const { return A_->dim(); }
    std::map<int, long long> graded_dim() const { return poly_dict(A_->graded_dim()); }
    std::map<int, long long> truncation_dim(const std::vector<std::string>& mu, const std::vector<std::string>& nu) const {
        const CartanDatum& D = A_->klr().datum();
        const int n = A_->beta().height();
        if (static_cast<int>(mu.size()) != n || static_cast<int>(nu.size()) != n)
            throw std::invalid_argument("sequence length must equal the height of beta");
        return poly_dict(A_->truncation_dim(to_seq(D, mu), to_seq(D, nu)));
    }
    std::vector<std::string> basis() const {
        std::vector<std::string> out;
        for (const Mono& m : A_->basis()) out.push_back(cli::format_mono(A_->klr(), m));
        return out;
    }

private:
    std::shared_ptr<const CycAlgebra> A_;
};

class ContextHandle {
public:
    ContextHandle(const Matrix& a, std::vector<std::string> labels) {
        auto D = CartanDatum::build(a, std::move(labels));
        ctx_ = std::make_shared<Context>(D, default_qspec(D));
    }

    const CartanDatum& datum() const { return ctx_->datum(); }

    DominantWeight weight(const std::map<std::string, int>& levels) const {
        DominantWeight lam{std::vector<int>(datum().rank(), 0)};
        for (auto& [l, v] : levels) lam.levels[datum().label_index(l)] = v;
        datum().check_weight(lam);
        for (int v : lam.levels)
            if (v < 0) throw std::invalid_argument("negative level");
        return lam;
    }

    RootCombo root(const std::map<std::string, int>& counts) const {
        RootCombo b{std::vector<int>(datum().rank(), 0)};
        for (auto& [l, v] : counts) b.coeffs[datum().label_index(l)] = v;
        datum().check_root(b);
        if (b.height() >= kMaxStrands) throw std::invalid_argument("too many strands");
        return b;
    }

    CycHandle cyclotomic(const std::map<std::string, int>& lam, const std::map<std::string, int>& beta) const {
        py::gil_scoped_release release;
        return CycHandle(ctx_->cyc(weight(lam), root(beta)));
    }

    std::vector<std::vector<std::map<int, long long>>> gram(const std::map<std::string, int>& lam,
                                                           const std::map<std::string, int>& beta) const {
        std::vector<std::vector<std::map<int, long long>>> out;
        for (auto& row : klr::gram(datum(), weight(lam), root(beta))) {
            out.emplace_back();
            for (auto& p : row) out.back().push_back(poly_dict(p));
        }
        return out;
    }

    std::string run_checks(const std::map<std::string, int>& lam, int nmax, const std::vector<std::string>& checks,
                           int jobs) const {
        SuiteSpec spec;
        spec.lam = weight(lam);
        if (nmax < 0 || nmax >= kMaxStrands) throw std::invalid_argument("nmax out of range");
        spec.nmax = nmax;
        spec.checks = checks;
        spec.jobs = jobs;
        std::vector<Report> reports;
        {
            py::gil_scoped_release release;
            reports = klr::run_checks(*ctx_, spec);
        }
        return suite_json(reports, false).dump();
    }

private:
    std::shared_ptr<Context> ctx_;
};

py::tuple run_cli(const std::vector<std::string>& args) {
    std::vector<std::string> full{"klrtool"};
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (auto& a : full) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code;
    {
        py::gil_scoped_release release;
        code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "KLR algebras, cyclotomic quotients and categorification checks";

    py::register_exception<cli::ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::class_<CycHandle>(m, "CyclotomicAlgebra")
        .def_property_readonly("dim", &CycHandle::dim)
        .def("graded_dim", &CycHandle::graded_dim, "exponent -> coefficient")
        .def("truncation_dim", &CycHandle::truncation_dim, py::arg("mu"), py::arg("nu"))
        .def("basis", &CycHandle::basis);

    py::class_<ContextHandle>(m, "Context")
        .def(py::init<const Matrix&, std::vector<std::string>>(), py::arg("matrix"),
             py::arg("labels") = std::vector<std::string>{})
        .def_property_readonly("rank", [](const ContextHandle& c) { return c.datum().rank(); })
        .def_property_readonly("labels", [](const ContextHandle& c) { return c.datum().labels(); })
        .def_property_readonly("symmetrizers", [](const ContextHandle& c) { return c.datum().symmetrizers(); })
        .def("cyclotomic", &ContextHandle::cyclotomic, py::arg("lam"), py::arg("beta"))
        .def("gram", &ContextHandle::gram, py::arg("lam"), py::arg("beta"))
        .def("_run_checks", &ContextHandle::run_checks, py::arg("lam"), py::arg("nmax"), py::arg("checks"),
             py::arg("jobs"));

    m.def("check_names", &check_names);
    m.def("_parse_config", [](const std::string& text) { return cli::emit_config(cli::parse_config(text)); });
    m.def("run_cli", &run_cli, py::arg("args"), "returns (exit code, stdout, stderr)");
}
