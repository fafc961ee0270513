#include "stabgem/oracle.hpp"

#include <cmath>

#include "stabgem/errors.hpp"

namespace stabgem {

namespace {

constexpr std::size_t kMaxStateQubits = 26;
constexpr std::size_t kMaxMatrixQubits = 12;

const std::complex<double> kI(0.0, 1.0);

std::complex<double> ipow(std::uint8_t k) {
  switch (k & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

DenseState::DenseState(std::size_t n, std::uint64_t basis) : n_(n) {
  if (n > kMaxStateQubits) throw CapabilityError("dense state limited to 26 qubits");
  a_.assign(std::size_t(1) << n, {0.0, 0.0});
  a_[basis] = 1.0;
}

std::uint64_t DenseState::mask_of(const BitVec& v) const {
  return v.nwords() ? v.data()[0] : 0;
}

double DenseState::norm2() const {
  double s = 0.0;
  for (const auto& c : a_) s += std::norm(c);
  return s;
}

void DenseState::normalize() {
  double s = std::sqrt(norm2());
  if (s == 0.0) throw Error("cannot normalize the zero vector");
  for (auto& c : a_) c /= s;
}

void DenseState::apply_pauli(const Pauli& p) {
  if (p.n() != n_) throw InputError("operator size does not match state");
  const std::uint64_t x = mask_of(p.xbits());
  const std::uint64_t z = mask_of(p.zbits());
  const std::complex<double> ph = ipow(p.phase_exp());
  std::vector<std::complex<double>> out(a_.size());
  for (std::uint64_t b = 0; b < a_.size(); b++) {
    std::complex<double> v = ph * a_[b];
    if (__builtin_parityll(z & b)) v = -v;
    out[b ^ x] = v;
  }
  a_.swap(out);
}

std::complex<double> DenseState::inner(const DenseState& o) const {
  if (o.n_ != n_) throw InputError("state sizes differ");
  std::complex<double> s = 0.0;
  for (std::size_t b = 0; b < a_.size(); b++) s += std::conj(a_[b]) * o.a_[b];
  return s;
}

std::complex<double> DenseState::expectation(const Pauli& p) const {
  if (p.n() != n_) throw InputError("operator size does not match state");
  const std::uint64_t x = mask_of(p.xbits());
  const std::uint64_t z = mask_of(p.zbits());
  const std::complex<double> ph = ipow(p.phase_exp());
  std::complex<double> s = 0.0;
  for (std::uint64_t b = 0; b < a_.size(); b++) {
    std::complex<double> v = ph * a_[b];
    if (__builtin_parityll(z & b)) v = -v;
    s += std::conj(a_[b ^ x]) * v;
  }
  return s;
}

double DenseState::project_keep(const Pauli& p) {
  DenseState applied = *this;
  applied.apply_pauli(p);
  for (std::size_t b = 0; b < a_.size(); b++) a_[b] = 0.5 * (a_[b] + applied.a_[b]);
  double kept = norm2();
  if (kept > 0.0) {
    double s = std::sqrt(kept);
    for (auto& c : a_) c /= s;
  }
  return kept;
}

void DenseState::apply_h(std::size_t q) {
  const std::uint64_t bit = std::uint64_t(1) << q;
  const double r = 1.0 / std::sqrt(2.0);
  for (std::uint64_t b = 0; b < a_.size(); b++) {
    if (b & bit) continue;
    auto lo = a_[b], hi = a_[b | bit];
    a_[b] = r * (lo + hi);
    a_[b | bit] = r * (lo - hi);
  }
}

void DenseState::apply_s(std::size_t q) {
  const std::uint64_t bit = std::uint64_t(1) << q;
  for (std::uint64_t b = 0; b < a_.size(); b++)
    if (b & bit) a_[b] *= kI;
}

void DenseState::apply_sdg(std::size_t q) {
  const std::uint64_t bit = std::uint64_t(1) << q;
  for (std::uint64_t b = 0; b < a_.size(); b++)
    if (b & bit) a_[b] *= -kI;
}

void DenseState::apply_cx(std::size_t c, std::size_t t) {
  const std::uint64_t cb = std::uint64_t(1) << c;
  const std::uint64_t tb = std::uint64_t(1) << t;
  for (std::uint64_t b = 0; b < a_.size(); b++)
    if ((b & cb) && !(b & tb)) std::swap(a_[b], a_[b | tb]);
}

void DenseState::apply_cz(std::size_t a, std::size_t b2) {
  const std::uint64_t m = (std::uint64_t(1) << a) | (std::uint64_t(1) << b2);
  for (std::uint64_t b = 0; b < a_.size(); b++)
    if ((b & m) == m) a_[b] = -a_[b];
}

void DenseState::apply_swap(std::size_t a, std::size_t b2) {
  const std::uint64_t ab = std::uint64_t(1) << a;
  const std::uint64_t bb = std::uint64_t(1) << b2;
  for (std::uint64_t b = 0; b < a_.size(); b++) {
    bool ha = b & ab, hb = b & bb;
    if (ha && !hb) std::swap(a_[b], (a_[(b ^ ab) | bb]));
  }
}

DenseState DenseState::from_stabilizer(const PauliGroup& g) {
  if (g.rank() != g.n())
    throw CapabilityError("dense state needs a full-rank group (one joint eigenstate)");
  const std::size_t n = g.n();
  BitVec all(n);
  for (std::size_t q = 0; q < n; q++) all.set(q);
  std::vector<Pauli> zbasis = g.z_type_subgroup_in(all);

  // a basis state |b> with <b|P|b> > 0: solve (-1)^{z_j . b} = sign_j
  std::uint64_t b = 0;
  if (!zbasis.empty()) {
    const std::size_t rz = zbasis.size();
    std::vector<BitVec> cols(n, BitVec(rz));
    BitVec target(rz);
    for (std::size_t j = 0; j < rz; j++) {
      for (std::uint32_t c : zbasis[j].zbits().ones()) cols[c].set(j);
      if (zbasis[j].phase_exp() == 2) target.set(j);
    }
    auto combo = gf2_solve(cols, target);
    if (!combo) throw Error("no basis state is compatible with the group signs");
    for (std::uint32_t c : combo->ones()) b |= std::uint64_t(1) << c;
  }

  DenseState psi(n, b);
  for (const Pauli& row : g.rows()) psi.project_keep(row);
  psi.normalize();
  return psi;
}

DenseMatrix::DenseMatrix(std::size_t n) : n_(n) {
  if (n > kMaxMatrixQubits) throw CapabilityError("dense density matrix limited to 12 qubits");
  m_ = Eigen::MatrixXcd::Zero((Eigen::Index)1 << n, (Eigen::Index)1 << n);
}

DenseMatrix DenseMatrix::pure(const DenseState& s) {
  DenseMatrix r(s.n());
  const auto& a = s.amps();
  for (std::size_t i = 0; i < a.size(); i++)
    for (std::size_t j = 0; j < a.size(); j++)
      r.m_((Eigen::Index)i, (Eigen::Index)j) = a[i] * std::conj(a[j]);
  return r;
}

DenseMatrix DenseMatrix::from_stabilizer(const PauliGroup& g) {
  DenseMatrix r(g.n());
  const std::uint64_t dim = std::uint64_t(1) << g.n();
  r.m_ = Eigen::MatrixXcd::Identity((Eigen::Index)dim, (Eigen::Index)dim);
  for (const Pauli& row : g.rows()) {
    const std::uint64_t x = row.xbits().nwords() ? row.xbits().data()[0] : 0;
    const std::uint64_t z = row.zbits().nwords() ? row.zbits().data()[0] : 0;
    const std::complex<double> ph = ipow(row.phase_exp());
    Eigen::MatrixXcd next((Eigen::Index)dim, (Eigen::Index)dim);
    for (std::uint64_t k = 0; k < dim; k++) {
      std::complex<double> v = ph;
      if (__builtin_parityll(z & k)) v = -v;
      next.row((Eigen::Index)(k ^ x)) = v * r.m_.row((Eigen::Index)k);
    }
    r.m_ = 0.5 * (r.m_ + next);
  }
  r.m_ /= r.m_.trace().real();
  return r;
}

std::complex<double> DenseMatrix::expectation(const Pauli& p) const {
  if (p.n() != n_) throw InputError("operator size does not match matrix");
  const std::uint64_t x = p.xbits().nwords() ? p.xbits().data()[0] : 0;
  const std::uint64_t z = p.zbits().nwords() ? p.zbits().data()[0] : 0;
  const std::complex<double> ph = ipow(p.phase_exp());
  const std::uint64_t dim = std::uint64_t(1) << n_;
  std::complex<double> s = 0.0;
  for (std::uint64_t i = 0; i < dim; i++) {
    std::complex<double> v = ph;
    if (__builtin_parityll(z & i)) v = -v;
    s += m_((Eigen::Index)i, (Eigen::Index)(i ^ x)) * v;
  }
  return s;
}

double DenseMatrix::trace() const { return m_.trace().real(); }

namespace {

// expansion tables for splitting indices across kept / traced qubits
std::vector<std::uint64_t> expand_table(const std::vector<std::uint32_t>& positions) {
  std::vector<std::uint64_t> t(std::size_t(1) << positions.size());
  for (std::uint64_t i = 0; i < t.size(); i++) {
    std::uint64_t b = 0;
    for (std::size_t j = 0; j < positions.size(); j++)
      if (i & (std::uint64_t(1) << j)) b |= std::uint64_t(1) << positions[j];
    t[i] = b;
  }
  return t;
}

std::vector<std::uint32_t> complement_positions(std::size_t n, const BitVec& keep) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t q = 0; q < n; q++)
    if (!keep.test(q)) out.push_back(q);
  return out;
}

}  // namespace

DenseMatrix DenseMatrix::partial_trace_keep(const BitVec& keep) const {
  auto kept = keep.ones();
  auto traced = complement_positions(n_, keep);
  auto ek = expand_table(kept);
  auto et = expand_table(traced);
  DenseMatrix r(kept.size());
  for (std::uint64_t o = 0; o < et.size(); o++)
    for (std::uint64_t i = 0; i < ek.size(); i++)
      for (std::uint64_t j = 0; j < ek.size(); j++)
        r.m_((Eigen::Index)i, (Eigen::Index)j) +=
            m_((Eigen::Index)(ek[i] | et[o]), (Eigen::Index)(ek[j] | et[o]));
  return r;
}

double DenseMatrix::fidelity(const DenseMatrix& o) const {
  if (o.n_ != n_) throw InputError("matrix sizes differ");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m_);
  Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  Eigen::MatrixXcd sq = es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
  Eigen::MatrixXcd inner = sq * o.m_ * sq;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es2(inner);
  double s = es2.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
  return s * s;
}

double DenseMatrix::trace_distance(const DenseMatrix& o) const {
  if (o.n_ != n_) throw InputError("matrix sizes differ");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m_ - o.m_);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

DenseMatrix reduced_density(const DenseState& s, const BitVec& keep) {
  auto kept = keep.ones();
  auto traced = complement_positions(s.n(), keep);
  if (kept.size() > kMaxMatrixQubits)
    throw CapabilityError("reduced density matrix limited to 12 kept qubits");
  auto ek = expand_table(kept);
  auto et = expand_table(traced);
  const auto& a = s.amps();
  DenseMatrix r(kept.size());
  for (std::uint64_t o = 0; o < et.size(); o++)
    for (std::uint64_t i = 0; i < ek.size(); i++) {
      std::complex<double> ai = a[ek[i] | et[o]];
      if (ai == std::complex<double>(0.0, 0.0)) continue;
      for (std::uint64_t j = 0; j < ek.size(); j++)
        r.mat()((Eigen::Index)i, (Eigen::Index)j) += ai * std::conj(a[ek[j] | et[o]]);
    }
  return r;
}

}  // namespace stabgem
