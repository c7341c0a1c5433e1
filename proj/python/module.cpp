// Python bindings for the main operations: characters, fusion products,
// presentation verification, and Schur positivity.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fusionprod/presented.hpp"
#include "fusionprod/schur.hpp"

namespace py = pybind11;
namespace fp = fusionprod;

namespace {

fp::Partition to_partition(const std::vector<int>& parts) {
  return fp::Partition(parts);
}

std::vector<fp::Rat> to_params(const std::vector<std::pair<long long, long long>>& ps) {
  std::vector<fp::Rat> out;
  for (const auto& [n, d] : ps) out.emplace_back(n, d);
  return out;
}

py::dict character_dict(const fp::CharacterPoly& ch) {
  py::dict out;
  for (const auto& [w, mult] : ch.terms()) out[py::tuple(py::cast(w))] = mult;
  return out;
}

py::dict graded_dict(const fp::GradedCharacter& gc) {
  py::dict out;
  for (const auto& [key, mult] : gc) {
    py::tuple k = py::make_tuple(py::tuple(py::cast(key.first)), key.second);
    out[k] = mult;
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(fusionprod, m) {
  m.doc() = "Fusion products of sl(n+1) modules: graded characters, "
            "defining-relation verification, Schur positivity";

  m.def(
      "weyl_character",
      [](int n, const std::vector<int>& lam) {
        return character_dict(fp::weyl_character(n, lam));
      },
      py::arg("n"), py::arg("highest_weight"),
      "Character of the simple module V(lambda) as {weight tuple: mult}.");

  m.def(
      "weyl_dimension",
      [](int n, const std::vector<int>& lam) { return fp::weyl_dimension(n, lam); },
      py::arg("n"), py::arg("highest_weight"));

  m.def(
      "decompose_character",
      [](int n, const py::dict& poly) {
        fp::CharacterPoly f(n);
        for (const auto& item : poly)
          f.add(item.first.cast<std::vector<int>>(), item.second.cast<long long>());
        py::list out;
        for (const auto& [w, mult] : fp::decompose_character(f))
          out.append(py::make_tuple(py::tuple(py::cast(w)), mult));
        return out;
      },
      py::arg("n"), py::arg("character"),
      "Decomposition of a Weyl-invariant character into irreducibles.");

  m.def(
      "fusion_graded_character",
      [](int n, int m, const std::vector<int>& ell,
         const std::vector<std::pair<long long, long long>>& params) {
        fp::FusionProduct fps =
            fp::FusionProduct::build(n, m, to_partition(ell), to_params(params));
        return graded_dict(fps.graded_character());
      },
      py::arg("n"), py::arg("m"), py::arg("ell"),
      py::arg("params") = std::vector<std::pair<long long, long long>>{},
      "Graded character of the fusion product as {(weight, degree): mult}.");

  m.def(
      "fusion_graded_dims",
      [](int n, int m, const std::vector<int>& ell) {
        fp::FusionProduct fps = fp::FusionProduct::build(n, m, to_partition(ell));
        std::vector<long long> dims(fps.top_degree() + 1, 0);
        for (const auto& [key, mult] : fps.graded_character())
          dims[key.second] += mult;
        return dims;
      },
      py::arg("n"), py::arg("m"), py::arg("ell"));

  m.def(
      "verify_theorem_instance",
      [](int n, int m, const std::vector<int>& ell) {
        fp::Verdict v = fp::verify_theorem_instance(n, m, to_partition(ell));
        py::dict out;
        out["pass"] = v.pass;
        out["surjection_witness"] = v.surjection_witness;
        out["dim_presented"] = v.dim_presented;
        out["dim_fusion"] = v.dim_fusion;
        out["graded_char_equal"] = v.graded_char_equal;
        out["families_equivalent"] = v.families_equivalent;
        out["stabilization_iterations"] = v.stabilization_iterations;
        if (!v.detail.empty()) out["detail"] = v.detail;
        return out;
      },
      py::arg("n"), py::arg("m"), py::arg("ell"),
      "Verify the defining-relation presentation of a fusion product.");

  m.def(
      "dominates",
      [](const std::vector<int>& ell, const std::vector<int>& r) {
        return fp::dominates(to_partition(ell), to_partition(r));
      },
      py::arg("ell"), py::arg("r"), "Tail-sum dominance of partitions.");

  m.def(
      "schur_check",
      [](int n, int m, const std::vector<int>& ell, const std::vector<int>& r,
         bool diagnostic) {
        fp::SchurVerdict v = fp::schur_pair_verdict(n, m, to_partition(ell),
                                                    to_partition(r), diagnostic);
        py::dict out;
        out["dominates"] = v.applicable;
        out["schur_positive"] = v.schur_positive;
        out["witness"] = v.witness;
        py::list dec;
        for (const auto& [w, mult] : v.decomposition)
          dec.append(py::make_tuple(py::tuple(py::cast(w)), mult));
        out["decomposition"] = dec;
        return out;
      },
      py::arg("n"), py::arg("m"), py::arg("ell"), py::arg("r"),
      py::arg("diagnostic") = false,
      "Schur positivity and surjection witness for a pair of partitions.");

  m.attr("__version__") = "0.1.0";
}
