#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qsi/alist.hpp"
#include "qsi/channel.hpp"
#include "qsi/css_code.hpp"
#include "qsi/decoder.hpp"
#include "qsi/osd.hpp"
#include "qsi/si.hpp"
#include "qsi/sim.hpp"

namespace py = pybind11;

namespace {

qsi::DecoderConfig make_decoder_config(const std::string& alg, double alpha,
                                       const std::string& sched, int iters) {
    qsi::DecoderConfig cfg;
    cfg.algorithm = qsi::parse_algorithm(alg);
    cfg.alpha = alpha;
    cfg.schedule = qsi::parse_schedule(sched);
    cfg.max_iters = iters;
    return cfg;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "decoding engine for CSS LDPC codes";

    py::class_<qsi::BitVec>(m, "BitVec")
        .def(py::init<std::size_t>(), py::arg("n"))
        .def_static(
            "from_bits",
            [](const std::vector<int>& bits) { return qsi::BitVec::from_bits(bits); },
            py::arg("bits"))
        .def("__len__", &qsi::BitVec::size)
        .def("get", &qsi::BitVec::get, py::arg("i"))
        .def("set", &qsi::BitVec::set, py::arg("i"), py::arg("value"))
        .def("weight", &qsi::BitVec::weight)
        .def("ones", &qsi::BitVec::ones)
        .def("to_list",
             [](const qsi::BitVec& v) {
                 std::vector<int> out(v.size());
                 for (std::size_t i = 0; i < v.size(); ++i) out[i] = v.get(i);
                 return out;
             })
        .def("__xor__",
             [](const qsi::BitVec& a, const qsi::BitVec& b) { return a ^ b; })
        .def("__eq__",
             [](const qsi::BitVec& a, const qsi::BitVec& b) { return a == b; })
        .def("__repr__", [](const qsi::BitVec& v) { return "BitVec(" + v.to_string() + ")"; });

    py::class_<qsi::SparseBitMatrix>(m, "SparseBitMatrix")
        .def_static("from_rows", &qsi::SparseBitMatrix::from_rows, py::arg("rows"),
                    py::arg("cols"), py::arg("row_supports"))
        .def_property_readonly("rows", &qsi::SparseBitMatrix::rows)
        .def_property_readonly("cols", &qsi::SparseBitMatrix::cols)
        .def_property_readonly("nnz", &qsi::SparseBitMatrix::nnz)
        .def("row",
             [](const qsi::SparseBitMatrix& m_, std::size_t r) {
                 auto s = m_.row(r);
                 return std::vector<std::uint32_t>(s.begin(), s.end());
             },
             py::arg("r"))
        .def("get", &qsi::SparseBitMatrix::get, py::arg("r"), py::arg("c"))
        .def("transposed", &qsi::SparseBitMatrix::transposed)
        .def("__eq__", [](const qsi::SparseBitMatrix& a, const qsi::SparseBitMatrix& b) {
            return a == b;
        });

    m.def("mat_vec", &qsi::mat_vec, py::arg("m"), py::arg("x"));
    m.def("rank", [](const qsi::SparseBitMatrix& m_) { return qsi::rank(m_); }, py::arg("m"));
    m.def("solve",
          [](const qsi::SparseBitMatrix& m_, const qsi::BitVec& b) { return qsi::solve(m_, b); },
          py::arg("m"), py::arg("b"));
    m.def("in_row_space", &qsi::in_row_space, py::arg("m"), py::arg("v"));

    m.def("load_alist", &qsi::load_alist, py::arg("path"));
    m.def("write_alist",
          [](const qsi::SparseBitMatrix& m_, const std::string& path) {
              qsi::write_alist(m_, path);
          },
          py::arg("m"), py::arg("path"));

    py::class_<qsi::CssCode>(m, "CssCode")
        .def_readonly("name", &qsi::CssCode::name)
        .def_readonly("hx", &qsi::CssCode::hx)
        .def_readonly("hz", &qsi::CssCode::hz)
        .def_readonly("n", &qsi::CssCode::n)
        .def_readonly("k", &qsi::CssCode::k);

    m.def("new_css", &qsi::new_css, py::arg("hx"), py::arg("hz"), py::arg("name") = "");
    m.def("gb_construct",
          [](std::size_t size, const std::vector<std::uint32_t>& a,
             const std::vector<std::uint32_t>& b, const std::string& name) {
              return qsi::gb_construct({size, a, b}, name);
          },
          py::arg("size"), py::arg("a_support"), py::arg("b_support"), py::arg("name") = "");
    m.def("load_code", &qsi::load_code, py::arg("manifest_path"), py::arg("name") = "");
    m.def("code_report_json",
          [](const qsi::CssCode& code) { return qsi::code_report(code).to_json(); },
          py::arg("code"));

    m.def("a_priori_llrs",
          [](std::size_t n, double eps, const std::string& alg) {
              return qsi::a_priori_llrs(n, eps, qsi::parse_algorithm(alg));
          },
          py::arg("n"), py::arg("eps"), py::arg("alg"));

    py::class_<qsi::DecodeOutcome>(m, "DecodeOutcome")
        .def_readonly("hard", &qsi::DecodeOutcome::hard)
        .def_readonly("soft", &qsi::DecodeOutcome::soft)
        .def_readonly("converged", &qsi::DecodeOutcome::converged)
        .def_readonly("iterations", &qsi::DecodeOutcome::iterations);

    m.def("decode",
          [](const qsi::SparseBitMatrix& h, const qsi::BitVec& syndrome,
             const std::vector<double>& priors, const std::string& alg, double alpha,
             const std::string& sched, int iters) {
              return qsi::decode(h, syndrome, priors,
                                 make_decoder_config(alg, alpha, sched, iters));
          },
          py::arg("h"), py::arg("syndrome"), py::arg("priors"), py::arg("alg") = "ms",
          py::arg("alpha") = 1.0, py::arg("sched") = "flooding", py::arg("iters") = 100);

    py::class_<qsi::SiOutcome>(m, "SiOutcome")
        .def_readonly("estimate", &qsi::SiOutcome::estimate)
        .def_readonly("inactivations_used", &qsi::SiOutcome::inactivations_used)
        .def_readonly("mp_converged", &qsi::SiOutcome::mp_converged)
        .def_readonly("mp_iterations", &qsi::SiOutcome::mp_iterations)
        .def_readonly("mp_fail_count", &qsi::SiOutcome::mp_fail_count)
        .def_readonly("solve_fail_count", &qsi::SiOutcome::solve_fail_count);

    m.def("si_decode",
          [](const qsi::CssCode& code, const qsi::BitVec& syndrome,
             const std::vector<double>& priors, const std::string& alg, double alpha,
             const std::string& sched, int iters, int lambda_max) {
              qsi::SiConfig si;
              si.lambda_max = lambda_max;
              return qsi::si_decode(code, syndrome, priors,
                                    make_decoder_config(alg, alpha, sched, iters), si);
          },
          py::arg("code"), py::arg("syndrome"), py::arg("priors"), py::arg("alg") = "ms",
          py::arg("alpha") = 1.0, py::arg("sched") = "flooding", py::arg("iters") = 100,
          py::arg("lambda_max") = 10);

    m.def("osd0_decode", &qsi::osd0_decode, py::arg("hz"), py::arg("syndrome"),
          py::arg("mp_hard"), py::arg("soft"));

    m.def("is_success", &qsi::is_success, py::arg("code"), py::arg("e"), py::arg("e_hat"));

    py::class_<qsi::PointStats>(m, "PointStats")
        .def_readonly("p", &qsi::PointStats::p)
        .def_readonly("eps", &qsi::PointStats::eps)
        .def_readonly("trials_run", &qsi::PointStats::trials_run)
        .def_readonly("logical_errors", &qsi::PointStats::logical_errors)
        .def_readonly("ler", &qsi::PointStats::ler)
        .def_readonly("ci_lo", &qsi::PointStats::ci_lo)
        .def_readonly("ci_hi", &qsi::PointStats::ci_hi)
        .def_readonly("lambda_ave", &qsi::PointStats::lambda_ave)
        .def_readonly("mp_converged_frac", &qsi::PointStats::mp_converged_frac);

    m.def("run_experiment",
          [](const qsi::CssCode& code, const std::vector<double>& p_values,
             const std::string& alg, double alpha, const std::string& sched, int iters,
             const std::string& post, int lambda_max, long trials, std::uint64_t seed,
             int threads, long max_logical_errors) {
              qsi::ExperimentSpec spec;
              spec.p_values = p_values;
              spec.decoder = make_decoder_config(alg, alpha, sched, iters);
              spec.post = qsi::parse_post(post);
              spec.si.lambda_max = lambda_max;
              spec.trials = trials;
              spec.seed = seed;
              spec.threads = threads;
              spec.max_logical_errors = max_logical_errors;
              return qsi::run_experiment(code, spec).points;
          },
          py::arg("code"), py::arg("p_values"), py::arg("alg") = "ms", py::arg("alpha") = 1.0,
          py::arg("sched") = "flooding", py::arg("iters") = 100, py::arg("post") = "none",
          py::arg("lambda_max") = 10, py::arg("trials") = 1000, py::arg("seed") = 0,
          py::arg("threads") = 1, py::arg("max_logical_errors") = 100);
}
