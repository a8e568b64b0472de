#include "kmb/standard.hpp"

namespace kmb {

namespace {

RootDatum from_cartan_rows(int rank, std::vector<IntVec> roots, std::vector<std::string> labels) {
  std::vector<IntVec> coroots;
  for (size_t i = 0; i < roots.size(); ++i) {
    IntVec c(rank, 0);
    c[i] = 1;
    coroots.push_back(std::move(c));
  }
  return validate_datum(rank, std::move(roots), std::move(coroots), std::move(labels));
}

}  // namespace

RootDatum standard_datum(const std::string& name) {
  if (name == "A1") return from_cartan_rows(1, {{2}}, {"s0"});
  if (name == "A2") return from_cartan_rows(2, {{2, -1}, {-1, 2}}, {"s0", "s1"});
  if (name == "B2") return from_cartan_rows(2, {{2, -1}, {-2, 2}}, {"s0", "s1"});
  if (name == "G2") return from_cartan_rows(2, {{2, -1}, {-3, 2}}, {"s0", "s1"});
  if (name == "A1xA1") return from_cartan_rows(2, {{2, 0}, {0, 2}}, {"s0", "s1"});
  if (name == "A3")
    return from_cartan_rows(3, {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {"s0", "s1", "s2"});
  if (name == "affineA1") {
    // Cartan [[2,-2],[-2,2]]; the third coordinate keeps the two roots
    // linearly independent and is fixed by both reflections.
    return validate_datum(3, {{2, -2, 1}, {-2, 2, 1}}, {{1, 0, 0}, {0, 1, 0}}, {"s0", "s1"});
  }
  fail(Err::BadInput, "unknown datum name '" + name + "'");
}

std::vector<std::string> standard_datum_names() {
  return {"A1", "A2", "B2", "G2", "A3", "A1xA1", "affineA1"};
}

std::vector<IntMat> standard_automorphism_matrices(const std::string& name) {
  std::vector<IntMat> out;
  if (name == "A2" || name == "A1xA1") {
    IntMat swap(2, 2);
    swap.at(0, 1) = 1;
    swap.at(1, 0) = 1;
    out.push_back(swap);
  }
  if (name == "affineA1") {
    IntMat swap = IntMat::identity(3);
    swap.at(0, 0) = 0;
    swap.at(1, 1) = 0;
    swap.at(0, 1) = 1;
    swap.at(1, 0) = 1;
    out.push_back(swap);
  }
  return out;
}

}  // namespace kmb
