#include "vit/dressed.hpp"

#include <cmath>
#include <map>

#include "vit/errors.hpp"

namespace vit {

namespace {

constexpr cplx I{0.0, 1.0};

enum class Field { A, B, C };

int& occupation(FockState& s, Field f) {
  switch (f) {
    case Field::A: return s.m_a;
    case Field::B: return s.m_b;
    case Field::C: return s.n;
  }
  return s.n;
}

// Ladder action on a single field; amplitude 0 when annihilating vacuum.
struct Ket {
  FockState state;
  double amplitude;
};

Ket lower(Ket k, Field f) {
  int& m = occupation(k.state, f);
  if (m == 0 || k.amplitude == 0.0) return {k.state, 0.0};
  k.amplitude *= std::sqrt(static_cast<double>(m));
  --m;
  return k;
}

Ket raise(Ket k, Field f) {
  int& m = occupation(k.state, f);
  ++m;
  k.amplitude *= std::sqrt(static_cast<double>(m));
  return k;
}

}  // namespace

std::string to_string(const FockState& s) {
  return "|" + std::to_string(s.m_a) + " " + std::to_string(s.m_b) + " " + std::to_string(s.n) + ">";
}

int default_cap(Sideband s) { return s == Sideband::Red ? 1 : 2; }

std::vector<FockState> build_basis(int cap) {
  if (cap < 0) throw InvalidArgument("excitation cap must be >= 0");
  std::vector<FockState> basis;
  for (int ma = 0; ma <= cap; ++ma)
    for (int mb = 0; ma + mb <= cap; ++mb)
      for (int n = 0; ma + mb + n <= cap; ++n) basis.push_back({ma, mb, n});
  return basis;
}

TruncatedHamiltonian build_hamiltonian(const ModelParams& p, double delta, const std::vector<FockState>& basis,
                                       bool include_drive) {
  std::map<FockState, int> index;
  for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
    if (!index.emplace(basis[i], i).second) throw InvalidArgument("basis contains a duplicate state");
  }

  const int dim = static_cast<int>(basis.size());
  TruncatedHamiltonian h{basis, Eigen::MatrixXcd::Zero(dim, dim)};
  const bool red = p.sideband == Sideband::Red;

  auto add = [&](int col, const Ket& k, cplx coeff) {
    if (k.amplitude == 0.0) return;
    const auto it = index.find(k.state);
    if (it != index.end()) h.matrix(it->second, col) += coeff * k.amplitude;
  };

  for (int j = 0; j < dim; ++j) {
    const FockState& s = basis[j];
    const Ket ket{s, 1.0};
    const double vib_sign = red ? 1.0 : -1.0;
    h.matrix(j, j) += delta * (s.m_a + s.m_b + vib_sign * s.n);

    if (include_drive) {
      add(j, raise(ket, Field::A), p.chi);
      add(j, lower(ket, Field::A), p.chi);
    }

    const std::pair<Field, double> ensembles[2] = {{Field::A, p.g_a}, {Field::B, p.g_b}};
    for (const auto& [y, g] : ensembles) {
      if (red) {
        // i g (Y^dag c - Y c^dag)
        add(j, raise(lower(ket, Field::C), y), I * g);
        add(j, lower(raise(ket, Field::C), y), -I * g);
      } else {
        // i g (Y^dag c^dag - Y c)
        add(j, raise(raise(ket, Field::C), y), I * g);
        add(j, lower(lower(ket, Field::C), y), -I * g);
      }
    }
  }
  return h;
}

Eigen::VectorXd energies(const TruncatedHamiltonian& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.matrix, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

DressedPair dressed_pair(const ModelParams& p, double delta) {
  p.validate();
  if (p.g_a != 0.0) throw InvalidArgument("dressed_pair isolates the B-c block and requires g_a = 0");

  DressedPair out;
  out.states = p.sideband == Sideband::Red ? std::array<FockState, 2>{FockState{0, 1, 0}, FockState{0, 0, 1}}
                                           : std::array<FockState, 2>{FockState{0, 0, 0}, FockState{0, 1, 1}};
  const std::vector<FockState> pair(out.states.begin(), out.states.end());
  const TruncatedHamiltonian h = build_hamiltonian(p, delta, pair, /*include_drive=*/false);

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(h.matrix.topLeftCorner<2, 2>());
  out.energies = es.eigenvalues();
  out.vectors = es.eigenvectors();
  for (int c = 0; c < 2; ++c) {
    for (int r = 0; r < 2; ++r) {
      const cplx z = out.vectors(r, c);
      if (std::abs(z) > 1e-14) {
        out.vectors.col(c) *= std::conj(z) / std::abs(z);
        out.vectors(r, c) = std::abs(z);
        break;
      }
    }
  }
  return out;
}

}  // namespace vit
