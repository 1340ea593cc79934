#include "wondercheck/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "wondercheck/error.hpp"

namespace wondercheck {

// ---------------------------------------------------------------------------
// SimpleType

int SimpleType::min_rank(Family family) noexcept {
  switch (family) {
    case Family::A: return 1;
    case Family::B:
    case Family::C: return 2;
    case Family::D: return 4;
    case Family::E: return 6;
    case Family::F: return 4;
    case Family::G: return 2;
  }
  return 1;
}

SimpleType::SimpleType(Family family, int rank) : family_(family), rank_(rank) {
  bool ok = false;
  switch (family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::D: ok = rank >= min_rank(family); break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok) {
    throw Error(ErrorKind::InvalidRank,
                std::string(1, static_cast<char>(family)) + std::to_string(rank) +
                    " is not a simple type");
  }
}

SimpleType SimpleType::parse(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c == '_' || std::isspace(static_cast<unsigned char>(c))) continue;
    s.push_back(c);
  }
  if (s.size() < 2) throw Error(ErrorKind::InvalidType, "cannot parse type '" + text + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (letter < 'A' || letter > 'G')
    throw Error(ErrorKind::InvalidType, "unknown family in '" + text + "'");
  const std::string digits = s.substr(1);
  if (digits.size() > 4 || !std::all_of(digits.begin(), digits.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      })) {
    throw Error(ErrorKind::InvalidType, "bad rank in '" + text + "'");
  }
  return SimpleType(static_cast<Family>(letter), std::stoi(digits));
}

bool SimpleType::is_exceptional() const noexcept {
  return family_ == Family::E || family_ == Family::F || family_ == Family::G;
}

bool SimpleType::is_simply_laced() const noexcept {
  return family_ == Family::A || family_ == Family::D || family_ == Family::E;
}

std::string SimpleType::label() const {
  return std::string(1, static_cast<char>(family_)) + std::to_string(rank_);
}

std::string SimpleType::latex_label() const {
  const std::string r = std::to_string(rank_);
  return "$" + std::string(1, static_cast<char>(family_)) + "_" +
         (r.size() > 1 ? "{" + r + "}" : r) + "$";
}

std::vector<SimpleType> exceptional_types() {
  return {SimpleType(Family::E, 6), SimpleType(Family::E, 7), SimpleType(Family::E, 8),
          SimpleType(Family::F, 4), SimpleType(Family::G, 2)};
}

std::vector<SimpleType> all_simple_types(int rank_ceiling) {
  std::vector<SimpleType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    for (int r = SimpleType::min_rank(f); r <= rank_ceiling; ++r) out.emplace_back(f, r);
  }
  for (const auto& t : exceptional_types()) out.push_back(t);
  return out;
}

// ---------------------------------------------------------------------------
// Cartan data

namespace {

struct Bond {
  std::size_t long_end;
  std::size_t short_end;
  std::int64_t multiplicity;
};

// Returns the Dynkin diagram as bonds between 0-based nodes.
std::vector<Bond> dynkin_bonds(const SimpleType& t) {
  const auto n = static_cast<std::size_t>(t.rank());
  std::vector<Bond> bonds;
  auto chain = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from; i + 1 < to; ++i) bonds.push_back({i, i + 1, 1});
  };
  switch (t.family()) {
    case Family::A: chain(0, n); break;
    case Family::B:
      chain(0, n - 1);
      bonds.push_back({n - 2, n - 1, 2});
      break;
    case Family::C:
      chain(0, n - 1);
      bonds.push_back({n - 1, n - 2, 2});
      break;
    case Family::D:
      chain(0, n - 1);
      bonds.push_back({n - 3, n - 1, 1});
      break;
    case Family::E:
      bonds.push_back({0, 2, 1});
      bonds.push_back({1, 3, 1});
      chain(2, n);
      break;
    case Family::F:
      bonds.push_back({0, 1, 1});
      bonds.push_back({1, 2, 2});
      bonds.push_back({2, 3, 1});
      break;
    case Family::G: bonds.push_back({1, 0, 3}); break;
  }
  return bonds;
}

IntVector symmetrizer_for(const SimpleType& t) {
  const auto n = static_cast<std::size_t>(t.rank());
  IntVector d(n, 1);
  switch (t.family()) {
    case Family::B: std::fill(d.begin(), d.end() - 1, 2); break;
    case Family::C: d[n - 1] = 2; break;
    case Family::F: d = {2, 2, 1, 1}; break;
    case Family::G: d = {1, 3}; break;
    default: break;
  }
  return d;
}

}  // namespace

CartanMatrix cartan_matrix(const SimpleType& type) {
  const auto n = static_cast<std::size_t>(type.rank());
  CartanMatrix cm;
  cm.entries.assign(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) cm.entries[i][i] = 2;
  for (const Bond& b : dynkin_bonds(type)) {
    cm.entries[b.long_end][b.short_end] = -1;
    cm.entries[b.short_end][b.long_end] = -b.multiplicity;
  }
  cm.symmetrizer = symmetrizer_for(type);
  return cm;
}

BigInt CartanMatrix::determinant() const {
  // Bareiss fraction-free elimination.
  const std::size_t n = rank();
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = entries[i][j];
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// ---------------------------------------------------------------------------
// Roots and weights

std::int64_t Root::height() const { return std::accumulate(coeffs.begin(), coeffs.end(), std::int64_t{0}); }

bool Root::is_positive() const {
  bool any = false;
  for (auto c : coeffs) {
    if (c < 0) return false;
    any = any || c > 0;
  }
  return any;
}

bool Weight::is_dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](std::int64_t c) { return c >= 0; });
}

DominantWeight::DominantWeight(IntVector coords) : coords_(std::move(coords)) {
  for (auto c : coords_) {
    if (c < 0) throw Error(ErrorKind::NonDominant, "weight " + format_weight(coords_) + " has a negative coordinate");
  }
}

DominantWeight DominantWeight::zero(std::size_t rank) { return DominantWeight(IntVector(rank, 0)); }

DominantWeight DominantWeight::fundamental(std::size_t rank, std::size_t index) {
  if (index >= rank) throw Error(ErrorKind::BadIndex, "fundamental weight index out of range");
  IntVector v(rank, 0);
  v[index] = 1;
  return DominantWeight(std::move(v));
}

bool DominantWeight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c == 0; });
}

std::string format_weight(const IntVector& coords) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------
// RootSystem

RootSystem::RootSystem(const SimpleType& type)
    : type_(type), cartan_(cartan_matrix(type)), rho_(IntVector(static_cast<std::size_t>(type.rank()), 1)) {}

RootSystem build_root_system(const SimpleType& type) {
  RootSystem rs(type);
  const std::size_t n = rs.rank();
  const auto& a = rs.cartan_.entries;

  std::set<IntVector> known;
  std::vector<IntVector> level;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    known.insert(e);
    level.push_back(e);
  }

  // beta + alpha_i is a root iff q > 0 where the alpha_i-string through beta
  // is beta - p alpha_i, ..., beta + q alpha_i and p - q = <beta, alpha_i^vee>.
  while (!level.empty()) {
    std::set<IntVector> next;
    for (const IntVector& beta : level) {
      for (std::size_t i = 0; i < n; ++i) {
        std::int64_t pairing = 0;
        for (std::size_t k = 0; k < n; ++k) pairing += beta[k] * a[i][k];
        std::int64_t p = 0;
        IntVector down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.contains(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          IntVector up = beta;
          up[i] += 1;
          next.insert(up);
        }
      }
    }
    level.assign(next.begin(), next.end());
    known.insert(next.begin(), next.end());
  }

  rs.positive_.reserve(known.size());
  for (const auto& c : known) rs.positive_.push_back(Root{c});
  std::sort(rs.positive_.begin(), rs.positive_.end(), [](const Root& x, const Root& y) {
    const auto hx = x.height(), hy = y.height();
    return hx != hy ? hx < hy : x.coeffs < y.coeffs;
  });
  if (rs.positive_.size() > 1 &&
      rs.positive_[rs.positive_.size() - 2].height() == rs.positive_.back().height()) {
    throw Error(ErrorKind::InvalidType, "highest root is not unique for " + type.label());
  }

  const auto& d = rs.cartan_.symmetrizer;
  rs.coroots_.reserve(rs.positive_.size());
  for (const Root& r : rs.positive_) {
    const std::int64_t dr = rs.half_norm(r);
    IntVector co(n);
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t num = r.coeffs[j] * d[j];
      if (num % dr != 0) throw Error(ErrorKind::InvalidType, "non-integral coroot in " + type.label());
      co[j] = num / dr;
    }
    rs.coroots_.push_back(std::move(co));
  }
  return rs;
}

std::ptrdiff_t RootSystem::find_positive(const Root& root) const {
  auto it = std::lower_bound(positive_.begin(), positive_.end(), root, [](const Root& x, const Root& y) {
    const auto hx = x.height(), hy = y.height();
    return hx != hy ? hx < hy : x.coeffs < y.coeffs;
  });
  if (it == positive_.end() || !(*it == root)) return -1;
  return it - positive_.begin();
}

bool RootSystem::contains(const Root& root) const {
  if (root.coeffs.size() != rank()) return false;
  if (find_positive(root) >= 0) return true;
  Root neg = root;
  for (auto& c : neg.coeffs) c = -c;
  return find_positive(neg) >= 0;
}

std::int64_t RootSystem::half_norm(const Root& root) const {
  std::int64_t twice = 0;
  const std::size_t n = rank();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) twice += root.coeffs[i] * root.coeffs[k] * cartan_.inner_product(i, k);
  return twice / 2;
}

Weight RootSystem::root_combination_as_weight(const IntVector& k) const {
  const std::size_t n = rank();
  Weight w{IntVector(n, 0)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w.coords[i] += cartan_.entries[i][j] * k[j];
  return w;
}

Weight RootSystem::root_as_weight(const Root& root) const { return root_combination_as_weight(root.coeffs); }

std::int64_t RootSystem::coxeter_number() const {
  return 2 * static_cast<std::int64_t>(positive_.size()) / static_cast<std::int64_t>(rank());
}

std::int64_t RootSystem::dual_coxeter_number() const {
  const auto c = comarks(*this);
  return 1 + std::accumulate(c.begin(), c.end(), std::int64_t{0});
}

std::int64_t coroot_pairing(const RootSystem& rs, const Weight& w, const Root& alpha) {
  if (w.coords.size() != rs.rank() || alpha.coeffs.size() != rs.rank())
    throw Error(ErrorKind::DimensionMismatch, "rank mismatch in coroot pairing");
  Root positive = alpha;
  std::int64_t sign = 1;
  if (!alpha.is_positive()) {
    for (auto& c : positive.coeffs) c = -c;
    sign = -1;
  }
  const auto idx = rs.find_positive(positive);
  if (idx < 0) throw Error(ErrorKind::NotARoot, format_weight(alpha.coeffs) + " is not a root of " + rs.type().label());
  const auto& co = rs.positive_coroots()[static_cast<std::size_t>(idx)];
  std::int64_t s = 0;
  for (std::size_t j = 0; j < co.size(); ++j) s += w.coords[j] * co[j];
  return sign * s;
}

std::int64_t coroot_pairing(const RootSystem& rs, const DominantWeight& w, const Root& alpha) {
  return coroot_pairing(rs, w.as_weight(), alpha);
}

IntVector comarks(const RootSystem& rs) { return rs.positive_coroots().back(); }

IntVector marks(const RootSystem& rs) { return rs.highest_root().coeffs; }

}  // namespace wondercheck
