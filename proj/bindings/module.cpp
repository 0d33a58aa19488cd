#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "blockshift/abacus.hpp"
#include "blockshift/binmat.hpp"
#include "blockshift/multipartition.hpp"
#include "blockshift/oracle.hpp"
#include "blockshift/stuttering.hpp"

namespace py = pybind11;
using namespace blockshift;

namespace {

using Parts = std::vector<int>;
using MpLists = std::vector<std::vector<int>>;

Partition to_partition(const Parts& parts) { return Partition(parts); }

Multipartition to_multipartition(const MpLists& components) {
    Multipartition lambda;
    for (const auto& parts : components) lambda.push_back(Partition(parts));
    return lambda;
}

MpLists from_multipartition(const Multipartition& lambda) {
    MpLists out;
    for (const Partition& component : lambda) out.push_back(component.parts());
    return out;
}

LevelConfig make_config(int d, int eta, int p) { return LevelConfig(d, eta, p); }

}  // namespace

PYBIND11_MODULE(blockshift, m) {
    m.doc() = "Abacus calculus on partitions and multipartitions, residue-vector blocks, "
              "binary matrices with prescribed sums, and stuttering witnesses.";

    py::register_exception<precondition_error>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<invariant_error>(m, "InvariantError", PyExc_RuntimeError);

    // partitions
    m.def("beta_number", [](const Parts& parts) { return beta_number(to_partition(parts)); },
          py::arg("partition"), "Canonical beta number of a partition.");
    m.def("partition_from_beta",
          [](const std::vector<int>& beta) { return partition_from_beta(beta).parts(); },
          py::arg("beta"));
    m.def("residue",
          [](int row, int col, int e, int shift) { return residue({row, col}, e, shift); },
          py::arg("row"), py::arg("col"), py::arg("e"), py::arg("shift") = 0);
    m.def("rim_hooks",
          [](const Parts& parts, int length) {
              std::vector<std::vector<std::pair<int, int>>> out;
              for (const RimHook& hook : rim_hooks(to_partition(parts), length)) {
                  std::vector<std::pair<int, int>> cells;
                  for (const Node& cell : hook.cells) cells.emplace_back(cell.row, cell.col);
                  out.push_back(cells);
              }
              return out;
          },
          py::arg("partition"), py::arg("length"),
          "Cells of every removable rim hook of the given length, ordered by anchor row.");
    m.def("add_rim_hook",
          [](const Parts& parts, int length) {
              return add_rim_hook_by_beta(to_partition(parts), length).parts();
          },
          py::arg("partition"), py::arg("length"));
    m.def("e_core_and_weight",
          [](const Parts& parts, int e) {
              const auto [core, weight] = e_core_and_weight(to_partition(parts), e);
              return std::make_pair(core.parts(), weight);
          },
          py::arg("partition"), py::arg("e"));
    m.def("residue_vector",
          [](const Parts& parts, int e, int shift) {
              return residue_vector(to_partition(parts), e, shift);
          },
          py::arg("partition"), py::arg("e"), py::arg("shift") = 0);

    // abacus
    m.def("is_e_core", [](const Parts& parts, int e) { return is_e_core(to_partition(parts), e); },
          py::arg("partition"), py::arg("e"));
    m.def("params_of_core",
          [](const Parts& parts, int e) { return params_of_core(to_partition(parts), e); },
          py::arg("partition"), py::arg("e"));
    m.def("core_from_params",
          [](const std::vector<int>& x) { return core_from_params(x).parts(); }, py::arg("x"));
    m.def("n0_of_core", &n0_of_core, py::arg("x"));
    m.def("ni_of_core", &ni_of_core, py::arg("x"), py::arg("i"));
    m.def("render_abacus",
          [](const Parts& parts, int e, int window) {
              return render_abacus(abacus_from_partition(to_partition(parts), e), window);
          },
          py::arg("partition"), py::arg("e"), py::arg("window") = 6);

    // multipartitions and shifts
    m.def("alpha_kappa",
          [](const MpLists& lambda, const std::vector<int>& kappa, int e) {
              return alpha_kappa(to_multipartition(lambda), kappa, e);
          },
          py::arg("multipartition"), py::arg("kappa"), py::arg("e"));
    m.def("is_compatible",
          [](const std::vector<int>& kappa, int d, int eta, int p) {
              return is_compatible(kappa, make_config(d, eta, p));
          },
          py::arg("kappa"), py::arg("d"), py::arg("eta"), py::arg("p"));
    m.def("shift_multipartition",
          [](const MpLists& lambda, int d, int eta, int p) {
              return from_multipartition(
                  shift_multipartition(to_multipartition(lambda), make_config(d, eta, p)));
          },
          py::arg("multipartition"), py::arg("d"), py::arg("eta"), py::arg("p"));
    m.def("shift_alpha",
          [](const std::vector<int>& alpha, int d, int eta, int p) {
              return shift_alpha(alpha, make_config(d, eta, p));
          },
          py::arg("alpha"), py::arg("d"), py::arg("eta"), py::arg("p"));
    m.def("orbit_size_alpha",
          [](const std::vector<int>& alpha, int d, int eta, int p) {
              return orbit_size_alpha(alpha, make_config(d, eta, p));
          },
          py::arg("alpha"), py::arg("d"), py::arg("eta"), py::arg("p"));
    m.def("orbit_size_multipartition",
          [](const MpLists& lambda, int d, int eta, int p) {
              return orbit_size_multipartition(to_multipartition(lambda), make_config(d, eta, p));
          },
          py::arg("multipartition"), py::arg("d"), py::arg("eta"), py::arg("p"));
    m.def("multicore",
          [](const MpLists& lambda, int e) {
              const auto [cores, weight] = multicore(to_multipartition(lambda), e);
              return std::make_pair(from_multipartition(cores), weight);
          },
          py::arg("multipartition"), py::arg("e"));

    // binary matrices
    m.def("gale_ryser_vectors", &gale_ryser_vectors, py::arg("w"), py::arg("p"),
          "Binary vectors averaging to w/p with prescribed column sums.");
    m.def("rectify_block_sums",
          [](const std::vector<std::vector<std::vector<int>>>& matrices, int block_width,
             const std::vector<int>& targets) {
              std::vector<BinaryMatrix> es;
              for (const auto& rows : matrices) es.push_back(BinaryMatrix::from_rows(rows));
              const RectifyResult result = rectify_block_sums(es, block_width, targets);
              std::vector<std::vector<std::vector<int>>> out;
              for (const auto& matrix : result.matrices) out.push_back(matrix.to_rows());
              std::vector<std::tuple<int, int, int, int, int>> log;
              for (const auto& entry : result.log)
                  log.emplace_back(entry.j_plus, entry.j_minus, entry.row, entry.col_from,
                                   entry.col_to);
              return std::make_pair(out, log);
          },
          py::arg("matrices"), py::arg("block_width"), py::arg("targets"),
          "Returns the rectified family and the interchange log.");

    // the main construction
    m.def("find_stuttering",
          [](const MpLists& lambda, const std::vector<int>& kappa, int d, int eta, int p) {
              return from_multipartition(
                  find_stuttering(to_multipartition(lambda), kappa, make_config(d, eta, p)));
          },
          py::arg("multipartition"), py::arg("kappa"), py::arg("d"), py::arg("eta"), py::arg("p"),
          "Witness mu with sigma(mu) = mu and the same residue vector.");
    m.def("find_minimal_orbit",
          [](const MpLists& lambda, const std::vector<int>& kappa, int d, int eta, int p) {
              return from_multipartition(
                  find_minimal_orbit(to_multipartition(lambda), kappa, make_config(d, eta, p)));
          },
          py::arg("multipartition"), py::arg("kappa"), py::arg("d"), py::arg("eta"), py::arg("p"),
          "Witness whose orbit size equals the orbit size of alpha.");

    // oracle
    m.def("count_r_partitions", &count_r_partitions, py::arg("n"), py::arg("r"));
    m.def("verify_main_theorem",
          [](int n, const std::vector<int>& kappa, int d, int eta, int p,
             unsigned long long cap) {
              const TheoremReport report =
                  verify_main_theorem(n, kappa, make_config(d, eta, p), cap);
              py::dict out;
              out["n"] = report.n;
              out["blocks_checked"] = report.blocks_checked;
              out["total"] = report.total;
              out["failures"] = report.failures;
              out["pass"] = report.pass;
              return out;
          },
          py::arg("n"), py::arg("kappa"), py::arg("d"), py::arg("eta"), py::arg("p"),
          py::arg("cap") = 1000000ULL);
    m.def("verify_minmax",
          [](int n, int d, int eta, int p) {
              const MinmaxReport report = verify_minmax(n, make_config(d, eta, p));
              py::dict out;
              out["min_orbit"] = report.min_orbit;
              out["max_orbit"] = report.max_orbit;
              out["pass"] = report.pass;
              return out;
          },
          py::arg("n"), py::arg("d"), py::arg("eta"), py::arg("p"));
}
