#include "msl/cf_complex.hpp"

#include <stdexcept>

namespace msl {

namespace {

IntMatrix map_matrix(const MUBasis& basis, const CohOperation& op, int n) {
  const int target = n - op.shift();
  const std::size_t cols = partitions_of(n).size();
  if (target < 0) return IntMatrix(0, cols);
  std::vector<std::vector<Integer>> out;
  for (const MUClass& x : basis.basis(n)) out.push_back(basis.require_coordinates(op.apply(x)));
  return IntMatrix::from_columns(out, partitions_of(target).size());
}

}  // namespace

ConnerFloyd::ConnerFloyd(std::shared_ptr<const MUBasis> basis, int delta_sign)
    : basis_(std::move(basis)),
      sign_(delta_sign),
      partial_(boundary_partial(basis_->context())),
      delta_(delta_op(basis_->context())) {
  if (sign_ != 1 && sign_ != -1) throw std::invalid_argument("ConnerFloyd: sign must be +1 or -1");
  const int top = basis_->max_degree();
  for (int n = 0; n <= top; ++n) {
    const std::size_t dim = partitions_of(n).size();
    if (n < 2) {
      w_.push_back(IntMatrix::identity(dim));
    } else {
      w_.push_back(kernel_lattice(delta_on_lattice(n)));
    }
  }
  for (int n = 0; n <= top; ++n) {
    const IntMatrix& W = w_[static_cast<std::size_t>(n)];
    if (n == 0) {
      d_.push_back(IntMatrix(0, W.cols()));
      continue;
    }
    const IntMatrix& Wt = w_[static_cast<std::size_t>(n - 1)];
    IntMatrix P = partial_on_lattice(n);
    IntMatrix image = P * W;
    std::vector<std::vector<Integer>> cols;
    for (std::size_t j = 0; j < image.cols(); ++j) {
      auto c = solve_in_lattice(Wt, image.column(j));
      if (!c) throw std::logic_error("ConnerFloyd: partial does not preserve Ker Delta in degree " + std::to_string(n));
      for (auto& v : *c) v *= sign_;
      cols.push_back(std::move(*c));
    }
    d_.push_back(IntMatrix::from_columns(cols, Wt.cols()));
  }
  for (int n = 1; n < top; ++n) {
    IntMatrix dd = d_[static_cast<std::size_t>(n)] * d_[static_cast<std::size_t>(n + 1)];
    if (!dd.is_zero()) throw std::logic_error("ConnerFloyd: delta squared is nonzero in degree " + std::to_string(n + 1));
  }
}

IntMatrix ConnerFloyd::delta_on_lattice(int n) const { return map_matrix(*basis_, delta_, n); }

IntMatrix ConnerFloyd::partial_on_lattice(int n) const { return map_matrix(*basis_, partial_, n); }

const IntMatrix& ConnerFloyd::w_lattice(int n) const { return w_.at(static_cast<std::size_t>(n)); }

MUClass ConnerFloyd::w_class(int n, std::size_t j) const { return basis_->from_coordinates(n, w_lattice(n).column(j)); }

const IntMatrix& ConnerFloyd::delta_matrix(int n) const { return d_.at(static_cast<std::size_t>(n)); }

CFHomology ConnerFloyd::homology(int n) const {
  if (n < 0 || n + 1 > max_degree()) throw std::out_of_range("ConnerFloyd::homology: needs degree n + 1 in range");
  CFHomology h;
  h.degree = n;
  h.cycles = kernel_lattice(delta_matrix(n));
  const IntMatrix& incoming = delta_matrix(n + 1);
  std::vector<std::vector<Integer>> cols;
  for (std::size_t j = 0; j < incoming.cols(); ++j) {
    auto c = solve_in_lattice(h.cycles, incoming.column(j));
    if (!c) throw std::logic_error("ConnerFloyd: boundary is not a cycle in degree " + std::to_string(n));
    cols.push_back(std::move(*c));
  }
  h.boundaries = IntMatrix::from_columns(cols, h.cycles.cols());
  h.homology = cokernel(h.boundaries);
  h.rank_cycles = h.cycles.cols();
  h.rank_boundaries = rank(h.boundaries);
  return h;
}

IntMatrix ConnerFloyd::cycles_in_lattice(int n) const {
  return w_lattice(n) * kernel_lattice(delta_matrix(n));
}

IntMatrix ConnerFloyd::boundaries_in_lattice(int n) const {
  if (n + 1 > max_degree()) throw std::out_of_range("ConnerFloyd: boundaries need degree n + 1");
  return lattice_basis(w_lattice(n) * delta_matrix(n + 1));
}

IntMatrix ConnerFloyd::msl_image_in_mgl(int n) const {
  return (n % 4 == 2) ? boundaries_in_lattice(n) : cycles_in_lattice(n);
}

FGAbGroup msu_additive(int n) {
  if (n < 0) return FGAbGroup::trivial();
  int free = static_cast<int>(partition_count(n) - partition_count(n - 1));
  std::vector<Integer> torsion;
  if (n % 4 == 1)
    for (std::int64_t i = 0; i < partition_count((n - 1) / 4); ++i) torsion.push_back(2);
  return FGAbGroup(free, torsion);
}

}  // namespace msl
