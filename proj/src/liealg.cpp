#include "glpq/liealg.hpp"

#include "glpq/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

namespace glpq {

namespace {

constexpr int kMaxDim = 64;

LieAlgebraSpec make_algebra(int dim, const std::vector<std::array<int, 4>>& triples) {
  // triples hold (i, j, k, c) 1-based with integer c
  LieAlgebraSpec A;
  A.dim = dim;
  for (int i = 1; i <= dim; ++i) A.basis_names.push_back("X" + std::to_string(i));
  A.c.assign(static_cast<std::size_t>(dim) * dim * dim, Rational(0));
  for (const auto& t : triples) A.coeff(t[0] - 1, t[1] - 1, t[2] - 1) = t[3];
  return A;
}

} // namespace

LieAlgebraSpec builtin_su2() {
  return make_algebra(3, {{1, 2, 3, 1},
                          {2, 1, 3, -1},
                          {2, 3, 1, 1},
                          {3, 2, 1, -1},
                          {3, 1, 2, 1},
                          {1, 3, 2, -1}});
}

LieAlgebraSpec builtin_su3() {
  return make_algebra(
      8, {{1, 2, 7, -1}, {1, 3, 5, 1},  {1, 4, 6, -1}, {1, 5, 3, -1}, {1, 6, 4, 1},
          {1, 7, 2, 4},  {1, 8, 2, 2},  {2, 1, 7, 1},  {2, 3, 6, 1},  {2, 4, 5, 1},
          {2, 5, 4, -1}, {2, 6, 3, -1}, {2, 7, 1, -4}, {2, 8, 1, -2}, {3, 1, 5, -1},
          {3, 2, 6, -1}, {3, 4, 8, -1}, {3, 5, 1, 1},  {3, 6, 2, 1},  {3, 7, 4, 2},
          {3, 8, 4, 4},  {4, 1, 6, 1},  {4, 2, 5, -1}, {4, 3, 8, 1},  {4, 5, 2, 1},
          {4, 6, 1, -1}, {4, 7, 3, -2}, {4, 8, 3, -4}, {5, 1, 3, 1},  {5, 2, 4, 1},
          {5, 3, 1, -1}, {5, 4, 2, -1}, {5, 6, 7, -1}, {5, 6, 8, 1},  {5, 7, 6, 2},
          {5, 8, 6, -2}, {6, 1, 4, -1}, {6, 2, 3, 1},  {6, 3, 2, -1}, {6, 4, 1, 1},
          {6, 5, 7, 1},  {6, 5, 8, -1}, {6, 7, 5, -2}, {6, 8, 5, 2},  {7, 1, 2, -4},
          {7, 2, 1, 4},  {7, 3, 4, -2}, {7, 4, 3, 2},  {7, 5, 6, -2}, {7, 6, 5, 2},
          {8, 1, 2, -2}, {8, 2, 1, 2},  {8, 3, 4, -4}, {8, 4, 3, 4},  {8, 5, 6, 2},
          {8, 6, 5, -2}});
}

std::vector<Rational> bracket(const LieAlgebraSpec& A, const std::vector<Rational>& u,
                              const std::vector<Rational>& v) {
  const int n = A.dim;
  if (static_cast<int>(u.size()) != n || static_cast<int>(v.size()) != n)
    throw ValidationError("bracket: coefficient vector length does not match dim");
  std::vector<Rational> w(n, Rational(0));
  for (int i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (v[j] == 0) continue;
      const Rational uv = u[i] * v[j];
      for (int k = 0; k < n; ++k) {
        const Rational& cc = A.coeff(i, j, k);
        if (cc != 0) w[k] += uv * cc;
      }
    }
  }
  return w;
}

std::string validation_failure(const LieAlgebraSpec& A) {
  const int n = A.dim;
  if (n <= 0) return "dim must be positive";
  if (n > kMaxDim) return "dim exceeds the supported maximum of 64";
  if (static_cast<int>(A.basis_names.size()) != n)
    return "basis name count does not match dim";
  if (A.c.size() != static_cast<std::size_t>(n) * n * n)
    return "structure constant storage has wrong size";

  // antisymmetry: c^k_{ij} = -c^k_{ji} (covers the diagonal i = j)
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (A.coeff(i, j, k) != -A.coeff(j, i, k)) {
          std::ostringstream os;
          os << "antisymmetry violated at (i,j,k) = (" << i + 1 << "," << j + 1 << ","
             << k + 1 << ")";
          return os.str();
        }

  // Jacobi: [Xi,[Xj,Xl]] + [Xj,[Xl,Xi]] + [Xl,[Xi,Xj]] = 0, exactly
  std::vector<Rational> e(n, Rational(0));
  auto basis_vec = [&](int i) {
    std::vector<Rational> v(n, Rational(0));
    v[i] = 1;
    return v;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int l = j + 1; l < n; ++l) {
        const auto a = bracket(A, basis_vec(i), bracket(A, basis_vec(j), basis_vec(l)));
        const auto b = bracket(A, basis_vec(j), bracket(A, basis_vec(l), basis_vec(i)));
        const auto c = bracket(A, basis_vec(l), bracket(A, basis_vec(i), basis_vec(j)));
        for (int k = 0; k < n; ++k) {
          if (a[k] + b[k] + c[k] != 0) {
            std::ostringstream os;
            os << "Jacobi identity violated for (i,j,l) = (" << i + 1 << "," << j + 1 << ","
               << l + 1 << ") at component " << k + 1;
            return os.str();
          }
        }
      }
    }
  }
  return {};
}

void validate(const LieAlgebraSpec& A) {
  const std::string msg = validation_failure(A);
  if (!msg.empty()) throw ValidationError("algebra validation: " + msg);
}

namespace {

Rational parse_rational(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (!v.is_string())
    throw ValidationError("algebra file: bracket coefficient must be a rational string");
  const std::string s = v.get<std::string>();
  // strict format: optional sign, digits, optional /digits with nonzero denominator
  std::size_t pos = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
  std::size_t d0 = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == d0) throw ValidationError("algebra file: malformed rational '" + s + "'");
  if (pos < s.size()) {
    if (s[pos] != '/') throw ValidationError("algebra file: malformed rational '" + s + "'");
    ++pos;
    std::size_t d1 = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == d1 || pos != s.size())
      throw ValidationError("algebra file: malformed rational '" + s + "'");
    const std::string den = s.substr(d1);
    if (den.find_first_not_of('0') == std::string::npos)
      throw ValidationError("algebra file: zero denominator in '" + s + "'");
  }
  return Rational(s);
}

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1)
    os << "/" << boost::multiprecision::denominator(r);
  return os.str();
}

} // namespace

LieAlgebraSpec parse_algebra(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    throw ValidationError(std::string("algebra file: JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("basis") || !j.contains("brackets"))
    throw ValidationError("algebra file: need fields dim, basis, brackets");
  if (!j["dim"].is_number_integer())
    throw ValidationError("algebra file: dim must be an integer");
  const int n = j["dim"].get<int>();
  if (n <= 0) throw ValidationError("algebra file: dim must be positive");
  if (n > kMaxDim) throw ValidationError("algebra file: dim exceeds the supported maximum of 64");

  LieAlgebraSpec A;
  A.dim = n;
  if (!j["basis"].is_array() || static_cast<int>(j["basis"].size()) != n)
    throw ValidationError("algebra file: basis must list exactly dim names");
  for (const auto& b : j["basis"]) {
    if (!b.is_string()) throw ValidationError("algebra file: basis names must be strings");
    A.basis_names.push_back(b.get<std::string>());
  }
  A.c.assign(static_cast<std::size_t>(n) * n * n, Rational(0));

  if (!j["brackets"].is_array())
    throw ValidationError("algebra file: brackets must be an array");
  std::vector<bool> seen(static_cast<std::size_t>(n) * n * n, false);
  for (const auto& rec : j["brackets"]) {
    if (!rec.is_object() || !rec.contains("i") || !rec.contains("j") || !rec.contains("k") ||
        !rec.contains("c"))
      throw ValidationError("algebra file: bracket records need fields i, j, k, c");
    const int i = rec["i"].get<int>(), jj = rec["j"].get<int>(), k = rec["k"].get<int>();
    if (i < 1 || i > n || jj < 1 || jj > n || k < 1 || k > n)
      throw ValidationError("algebra file: bracket indices out of range (1-based)");
    const std::size_t slot = (static_cast<std::size_t>(i - 1) * n + (jj - 1)) * n + (k - 1);
    if (seen[slot]) throw ValidationError("algebra file: duplicate bracket record");
    seen[slot] = true;
    A.c[slot] = parse_rational(rec["c"]);
  }
  validate(A);
  return A;
}

std::string serialize_algebra(const LieAlgebraSpec& A) {
  nlohmann::json j;
  j["dim"] = A.dim;
  j["basis"] = A.basis_names;
  nlohmann::json recs = nlohmann::json::array();
  for (int i = 0; i < A.dim; ++i)
    for (int jj = 0; jj < A.dim; ++jj)
      for (int k = 0; k < A.dim; ++k)
        if (A.coeff(i, jj, k) != 0) {
          nlohmann::json rec;
          rec["i"] = i + 1;
          rec["j"] = jj + 1;
          rec["k"] = k + 1;
          rec["c"] = rational_to_string(A.coeff(i, jj, k));
          recs.push_back(rec);
        }
  j["brackets"] = recs;
  return j.dump(2) + "\n";
}

namespace {

// Reduced-row-echelon basis over the rationals with exact pivots.
class RationalSpan {
public:
  explicit RationalSpan(int n) : m_n(n) {}

  int rank() const { return static_cast<int>(m_rows.size()); }

  // Reduce v against the basis; if independent, insert and return true.
  bool insert(std::vector<Rational> v) {
    for (std::size_t r = 0; r < m_rows.size(); ++r) {
      const Rational& f = v[m_pivot[r]];
      if (f != 0) {
        for (int k = 0; k < m_n; ++k) v[k] -= f * m_rows[r][k];
      }
    }
    int p = -1;
    for (int k = 0; k < m_n; ++k)
      if (v[k] != 0) {
        p = k;
        break;
      }
    if (p < 0) return false;
    const Rational inv = v[p];
    for (int k = 0; k < m_n; ++k) v[k] /= inv;
    for (std::size_t r = 0; r < m_rows.size(); ++r) {
      const Rational& f = m_rows[r][p];
      if (f != 0) {
        for (int k = 0; k < m_n; ++k) m_rows[r][k] -= f * v[k];
      }
    }
    m_rows.push_back(std::move(v));
    m_pivot.push_back(p);
    return true;
  }

private:
  int m_n;
  std::vector<std::vector<Rational>> m_rows;
  std::vector<int> m_pivot;
};

} // namespace

HoermanderFlag hoermander_flag(const LieAlgebraSpec& A, const std::vector<int>& generators_1based) {
  validate(A);
  const int n = A.dim;
  if (generators_1based.empty())
    throw ValidationError("hoermander_flag: generator set must be nonempty");
  for (int g : generators_1based)
    if (g < 1 || g > n)
      throw ValidationError("hoermander_flag: generator index out of range (1-based)");

  RationalSpan span(n);
  // independent representatives with their bracket degree
  std::vector<std::pair<std::vector<Rational>, int>> reps;

  for (int g : generators_1based) {
    std::vector<Rational> v(n, Rational(0));
    v[g - 1] = 1;
    if (span.insert(v)) reps.emplace_back(std::move(v), 1);
  }

  HoermanderFlag f;
  f.generator_indices = generators_1based;
  f.dims.push_back(span.rank());

  int stage = 1;
  while (span.rank() < n) {
    ++stage;
    const int before = span.rank();
    // every nested commutator of length `stage` is a combination of brackets
    // of representatives whose degrees sum to `stage`
    const std::size_t count = reps.size();
    for (std::size_t a = 0; a < count; ++a) {
      for (std::size_t b = a + 1; b < count; ++b) {
        if (reps[a].second + reps[b].second != stage) continue;
        std::vector<Rational> w = bracket(A, reps[a].first, reps[b].first);
        if (span.insert(w)) reps.emplace_back(std::move(w), stage);
      }
    }
    if (span.rank() == before)
      throw NotHoermander("generators do not bracket-generate the algebra (span stabilized at dim " +
                          std::to_string(before) + " of " + std::to_string(n) + ")");
    f.dims.push_back(span.rank());
  }
  f.kappa = static_cast<int>(f.dims.size());
  f.hausdorff_Q = hausdorff_dimension(f);
  return f;
}

int hausdorff_dimension(const HoermanderFlag& f) {
  if (f.dims.empty()) throw ValidationError("hausdorff_dimension: empty flag");
  int q = f.dims[0];
  for (std::size_t i = 1; i < f.dims.size(); ++i)
    q += static_cast<int>(i + 1) * (f.dims[i] - f.dims[i - 1]);
  return q;
}

} // namespace glpq
