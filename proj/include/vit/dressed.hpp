#pragma once

// Exact diagonalization of the sideband interaction Hamiltonians on a small
// Fock basis |m_A m_B n> truncated by total excitation number.

#include <Eigen/Dense>
#include <array>
#include <string>
#include <vector>

#include "vit/model.hpp"

namespace vit {

struct FockState {
  int m_a = 0;
  int m_b = 0;
  int n = 0;

  auto operator<=>(const FockState&) const = default;
};

std::string to_string(const FockState& s);  // "|m_A m_B n>"

// Smallest cap containing the four kets used in the level diagrams: 1 (red), 2 (blue).
int default_cap(Sideband s);

// All states with m_a + m_b + n <= cap in lexicographic (m_a, m_b, n) order.
std::vector<FockState> build_basis(int cap);

struct TruncatedHamiltonian {
  std::vector<FockState> basis;
  Eigen::MatrixXcd matrix;
};

// H_ij = <i|H|j> for the red (beam-splitter) or blue (two-mode squeezing)
// interaction picture Hamiltonian; chi (A^dag + A) included on request.
TruncatedHamiltonian build_hamiltonian(const ModelParams& p, double delta, const std::vector<FockState>& basis,
                                       bool include_drive);

// Ascending eigenvalues.
Eigen::VectorXd energies(const TruncatedHamiltonian& h);

struct DressedPair {
  std::array<FockState, 2> states;  // bare pair the dressed states live in
  Eigen::Vector2d energies;         // ascending
  Eigen::Matrix2cd vectors;         // columns, amplitudes on `states`
};

// The isolated two-state block at g_a = 0: red (|0 1 0>, |0 0 1>) split to delta +/- g_b,
// blue (|0 0 0>, |0 1 1>) split to +/- g_b. Each eigenvector's first nonzero
// component is made real positive.
DressedPair dressed_pair(const ModelParams& p, double delta);

}  // namespace vit
