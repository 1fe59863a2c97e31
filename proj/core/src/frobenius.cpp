#include "khr/frobenius.hpp"

#include <algorithm>
#include <sstream>

namespace khr {

std::string to_string(CoefficientMode m) {
  switch (m) {
    case CoefficientMode::Integers: return "integers";
    case CoefficientMode::Deformed: return "deformed";
    case CoefficientMode::Equivariant: return "equivariant";
  }
  return "?";
}

DeformationMultiset::DeformationMultiset(std::vector<DeformationEntry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw ValidationError("deformation multiset must be non-empty");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].multiplicity < 1) throw ValidationError("deformation multiplicities must be positive");
    for (std::size_t j = 0; j < i; ++j)
      if (entries_[i].value == entries_[j].value)
        throw ValidationError("deformation parameters must be pairwise distinct (" + to_string(entries_[i].value) +
                              " repeated)");
  }
}

DeformationMultiset DeformationMultiset::parse(std::string_view text) {
  std::vector<DeformationEntry> out;
  std::string s(text);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto caret = item.rfind('^');
    DeformationEntry e;
    e.value = parse_rational(item.substr(0, caret));
    if (caret != std::string::npos) {
      Rational m = parse_rational(item.substr(caret + 1));
      if (!is_integral(m)) throw ParseError("multiplicity must be an integer in '" + item + "'");
      e.multiplicity = static_cast<int>(m.get_num().get_si());
    }
    out.push_back(e);
  }
  if (out.empty()) throw ParseError("empty deformation specification");
  return DeformationMultiset(std::move(out));
}

DeformationMultiset DeformationMultiset::consecutive(int n) {
  std::vector<DeformationEntry> out;
  for (int i = 0; i < n; ++i) out.push_back({Rational(i), 1});
  return DeformationMultiset(std::move(out));
}

int DeformationMultiset::total() const {
  int n = 0;
  for (const auto& e : entries_) n += e.multiplicity;
  return n;
}

bool DeformationMultiset::all_simple() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.multiplicity == 1; });
}

int DeformationMultiset::max_multiplicity() const {
  int m = 0;
  for (const auto& e : entries_) m = std::max(m, e.multiplicity);
  return m;
}

RatPoly DeformationMultiset::polynomial() const {
  RatPoly p(Rational(1));
  for (const auto& e : entries_) p = p * RatPoly::linear(e.value).pow(static_cast<unsigned>(e.multiplicity));
  return p;
}

std::vector<Rational> DeformationMultiset::elementary_symmetric() const {
  RatPoly p = polynomial();
  const int n = total();
  std::vector<Rational> e(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    Rational c = p.coeff(n - i);
    e[static_cast<std::size_t>(i - 1)] = (i % 2 == 0) ? c : Rational(-c);
  }
  return e;
}

std::string DeformationMultiset::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ',';
    os << to_string(entries_[i].value);
    if (entries_[i].multiplicity != 1) os << '^' << entries_[i].multiplicity;
  }
  return os.str();
}

bool operator==(const DeformationMultiset& a, const DeformationMultiset& b) {
  if (a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i)
    if (a.entries_[i].value != b.entries_[i].value || a.entries_[i].multiplicity != b.entries_[i].multiplicity)
      return false;
  return true;
}

// ---------------------------------------------------------------------------

template <class S>
std::vector<S> FrobeniusAlgebra<S>::reduce(std::vector<S> coeffs) const {
  const auto n = static_cast<std::size_t>(rank);
  for (std::size_t k = coeffs.size(); k-- > n;) {
    S c = coeffs[k];
    if (is_zero(c)) continue;
    coeffs[k] = S(0);
    for (std::size_t a = 0; a < n; ++a) {
      if (is_zero(relation[a])) continue;
      S term = c * relation[a];
      coeffs[a + k - n] += term;
    }
  }
  coeffs.resize(n, S(0));
  return coeffs;
}

template <class S>
std::vector<S> FrobeniusAlgebra<S>::multiply(const std::vector<S>& x, const std::vector<S>& y) const {
  std::vector<S> out(static_cast<std::size_t>(rank), S(0));
  for (int a = 0; a < rank; ++a) {
    if (is_zero(x[a])) continue;
    for (int b = 0; b < rank; ++b) {
      if (is_zero(y[b])) continue;
      S xy = x[a] * y[b];
      for (int c = 0; c < rank; ++c) {
        if (is_zero(mult[a][b][c])) continue;
        S term = xy * mult[a][b][c];
        out[c] += term;
      }
    }
  }
  return out;
}

template <class S>
FrobeniusAlgebra<S> algebra_from_relation(std::vector<S> relation, CoefficientMode mode) {
  FrobeniusAlgebra<S> A;
  const int n = static_cast<int>(relation.size());
  if (n < 1) throw ValidationError("algebra rank must be at least 1");
  A.rank = n;
  A.mode = mode;
  A.relation = std::move(relation);
  const auto un = static_cast<std::size_t>(n);

  A.mult.assign(un, std::vector<std::vector<S>>(un));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<S> mono(static_cast<std::size_t>(a + b) + 1, S(0));
      mono.back() = S(1);
      A.mult[a][b] = A.reduce(std::move(mono));
    }
  A.unit.assign(un, S(0));
  A.unit[0] = S(1);
  A.counit.assign(un, S(0));
  A.counit[un - 1] = S(1);

  // Gram matrix of the counit pairing; anti-unitriangular, so the dual basis
  // is obtained by substitution without division.
  std::vector<std::vector<S>> gram(un, std::vector<S>(un));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) gram[a][b] = A.mult[a][b][un - 1];
  std::vector<std::vector<S>> dual(un, std::vector<S>(un, S(0)));  // dual[a] = coefficients of (X^a)^∨
  for (int a = 0; a < n; ++a) {
    auto& y = dual[a];
    for (int b = 0; b < n; ++b) {
      const int c0 = n - 1 - b;
      S rhs = (a == b) ? S(1) : S(0);
      for (int c = c0 + 1; c < n; ++c) {
        S term = gram[b][c] * y[c];
        rhs -= term;
      }
      y[c0] = rhs;
    }
  }

  A.comult.assign(un, std::vector<std::vector<S>>(un, std::vector<S>(un, S(0))));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (is_zero(A.mult[a][b][c])) continue;
        for (int d = 0; d < n; ++d) {
          if (is_zero(dual[b][d])) continue;
          S term = A.mult[a][b][c] * dual[b][d];
          A.comult[a][c][d] += term;
        }
      }
  return A;
}

FrobeniusAlgebra<Rational> unknot_algebra(int rank) {
  if (rank < 1) throw ValidationError("algebra rank must be at least 1");
  return algebra_from_relation(std::vector<Rational>(static_cast<std::size_t>(rank)), CoefficientMode::Integers);
}

FrobeniusAlgebra<Rational> unknot_algebra(int rank, const DeformationMultiset& sigma) {
  if (sigma.total() != rank)
    throw ValidationError("deformation multiset {" + sigma.str() + "} has total multiplicity " +
                          std::to_string(sigma.total()) + ", expected N=" + std::to_string(rank));
  RatPoly p = sigma.polynomial();
  std::vector<Rational> rel(static_cast<std::size_t>(rank));
  for (int a = 0; a < rank; ++a) rel[a] = -p.coeff(a);
  return algebra_from_relation(std::move(rel), CoefficientMode::Deformed);
}

FrobeniusAlgebra<SymPoly> equivariant_algebra(int rank) {
  if (rank < 1) throw ValidationError("algebra rank must be at least 1");
  std::vector<SymPoly> rel(static_cast<std::size_t>(rank));
  for (int i = 1; i <= rank; ++i) {
    SymPoly e = SymPoly::variable(i, rank);
    rel[static_cast<std::size_t>(rank - i)] = (i % 2 == 1) ? e : -e;
  }
  return algebra_from_relation(std::move(rel), CoefficientMode::Equivariant);
}

FrobeniusAlgebra<Rational> specialize(const FrobeniusAlgebra<SymPoly>& a, std::span<const Rational> values) {
  auto conv = [&](const std::vector<SymPoly>& v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (const auto& p : v) out.push_back(p.specialize(values));
    return out;
  };
  FrobeniusAlgebra<Rational> out;
  out.rank = a.rank;
  bool all_zero = std::all_of(values.begin(), values.end(), [](const Rational& r) { return is_zero(r); });
  out.mode = all_zero ? CoefficientMode::Integers : CoefficientMode::Deformed;
  out.relation = conv(a.relation);
  out.unit = conv(a.unit);
  out.counit = conv(a.counit);
  out.mult.resize(a.mult.size());
  out.comult.resize(a.comult.size());
  for (std::size_t i = 0; i < a.mult.size(); ++i) {
    for (const auto& row : a.mult[i]) out.mult[i].push_back(conv(row));
    for (const auto& row : a.comult[i]) out.comult[i].push_back(conv(row));
  }
  return out;
}

std::vector<Rational> equivariant_values(const DeformationMultiset& sigma) { return sigma.elementary_symmetric(); }

std::vector<RatPoly> crt_idempotents(const DeformationMultiset& sigma) {
  const RatPoly modulus = sigma.polynomial();
  std::vector<RatPoly> out;
  for (const auto& e : sigma.entries()) {
    RatPoly local = RatPoly::linear(e.value).pow(static_cast<unsigned>(e.multiplicity));
    RatPoly cofactor = RatPoly::divmod(modulus, local).first;
    ExtendedGcd g = extended_gcd(cofactor, local);  // s*cofactor + t*local = 1
    out.push_back((g.s * cofactor).mod(modulus));
  }
  return out;
}

Rational twisting_scalar(const DeformationMultiset& sigma, int index) {
  const auto& es = sigma.entries();
  if (index < 0 || index >= sigma.size()) throw ValidationError("twisting_scalar: index out of range");
  Rational d = 1;
  for (int j = 0; j < sigma.size(); ++j) {
    if (j == index) continue;
    d *= khr::pow(es[index].value - es[j].value, static_cast<unsigned>(es[j].multiplicity));
  }
  return d;
}

Rational sphere_evaluation(const DeformationMultiset& sigma, const RatPoly& decoration) {
  return decoration.mod(sigma.polynomial()).coeff(sigma.total() - 1);
}

// ---------------------------------------------------------------------------

template <class S>
std::vector<std::string> frobenius_axiom_failures(const FrobeniusAlgebra<S>& A) {
  std::vector<std::string> fails;
  const int n = A.rank;
  auto basis = [&](int a) {
    std::vector<S> v(static_cast<std::size_t>(n), S(0));
    v[a] = S(1);
    return v;
  };
  using Tensor = std::vector<std::vector<S>>;  // t[b][c] coefficient of X^b ⊗ X^c
  auto zero_tensor = [&] { return Tensor(static_cast<std::size_t>(n), std::vector<S>(static_cast<std::size_t>(n), S(0))); };
  auto comult_of = [&](const std::vector<S>& x) {
    Tensor t = zero_tensor();
    for (int a = 0; a < n; ++a) {
      if (is_zero(x[a])) continue;
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          S term = x[a] * A.comult[a][b][c];
          t[b][c] += term;
        }
    }
    return t;
  };

  for (int a = 0; a < n; ++a) {
    auto xa = basis(a);
    if (A.multiply(A.unit, xa) != xa) fails.push_back("unit law fails on X^" + std::to_string(a));
    Tensor d = comult_of(xa);
    std::vector<S> left(static_cast<std::size_t>(n), S(0)), right(static_cast<std::size_t>(n), S(0));
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        S l = A.counit[b] * d[b][c];
        S r = A.counit[c] * d[b][c];
        left[c] += l;
        right[b] += r;
      }
    if (left != xa || right != xa) fails.push_back("counit law fails on X^" + std::to_string(a));

    // coassociativity: (Δ⊗id)Δ = (id⊗Δ)Δ
    std::vector<S> lhs(static_cast<std::size_t>(n * n * n), S(0)), rhs(lhs.size(), S(0));
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (is_zero(d[b][c])) continue;
        Tensor db = comult_of(basis(b));
        Tensor dc = comult_of(basis(c));
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            S l = d[b][c] * db[i][j];
            lhs[static_cast<std::size_t>((i * n + j) * n + c)] += l;
            S r = d[b][c] * dc[i][j];
            rhs[static_cast<std::size_t>((b * n + i) * n + j)] += r;
          }
      }
    if (lhs != rhs) fails.push_back("coassociativity fails on X^" + std::to_string(a));

    for (int b = 0; b < n; ++b) {
      auto xb = basis(b);
      auto ab = A.multiply(xa, xb);
      if (ab != A.multiply(xb, xa)) fails.push_back("commutativity fails");
      for (int c = 0; c < n; ++c) {
        auto xc = basis(c);
        if (A.multiply(ab, xc) != A.multiply(xa, A.multiply(xb, xc)))
          fails.push_back("associativity fails on (" + std::to_string(a) + "," + std::to_string(b) + "," +
                          std::to_string(c) + ")");
      }
      // Frobenius: Δ(xy) = (m⊗id)(x ⊗ Δ(y)) = (id⊗m)(Δ(x) ⊗ y)
      Tensor dab = comult_of(ab);
      Tensor db = comult_of(xb);
      Tensor da = comult_of(xa);
      Tensor mid1 = zero_tensor(), mid2 = zero_tensor();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          auto xi = A.multiply(xa, basis(i));
          auto xj = A.multiply(basis(j), xb);
          for (int k = 0; k < n; ++k) {
            S t1 = db[i][j] * xi[k];
            mid1[k][j] += t1;
            S t2 = da[i][j] * xj[k];
            mid2[i][k] += t2;
          }
        }
      if (dab != mid1 || dab != mid2)
        fails.push_back("Frobenius relation fails on (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  }
  return fails;
}

template struct FrobeniusAlgebra<Rational>;
template struct FrobeniusAlgebra<SymPoly>;
template FrobeniusAlgebra<Rational> algebra_from_relation(std::vector<Rational>, CoefficientMode);
template FrobeniusAlgebra<SymPoly> algebra_from_relation(std::vector<SymPoly>, CoefficientMode);
template std::vector<std::string> frobenius_axiom_failures(const FrobeniusAlgebra<Rational>&);
template std::vector<std::string> frobenius_axiom_failures(const FrobeniusAlgebra<SymPoly>&);

}  // namespace khr
