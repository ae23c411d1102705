#include "kldecomp/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <sstream>

#include "kldecomp/errors.hpp"

namespace kldecomp {

// ---------------------------------------------------------------------------
// SquareMatrix

SquareMatrix SquareMatrix::identity(int n) {
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
  const int n = a.size();
  SquareMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const int aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

long long SquareMatrix::determinant() const {
  const int n = n_;
  if (n == 0) return 1;
  std::vector<long long> m(data_.begin(), data_.end());
  auto at = [&](int r, int c) -> long long& { return m[static_cast<std::size_t>(r * n + c)]; };
  long long sign = 1;
  long long prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int swap = -1;
      for (int r = k + 1; r < n; ++r)
        if (at(r, k) != 0) {
          swap = r;
          break;
        }
      if (swap < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(at(k, c), at(swap, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Words

std::string format_word(const ReducedWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i] + 1);
  }
  return out;
}

ReducedWord parse_word(std::string_view text) {
  ReducedWord w;
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  if (std::all_of(text.begin(), text.end(), is_space)) return w;
  std::size_t pos = 0;
  std::size_t index = 1;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view piece = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!piece.empty() && is_space(piece.front())) piece.remove_prefix(1);
    while (!piece.empty() && is_space(piece.back())) piece.remove_suffix(1);
    int value = 0;
    auto [end, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc{} || end != piece.data() + piece.size() || value < 1)
      throw WordError("invalid letter '" + std::string(piece) + "' at position " + std::to_string(index), index);
    w.letters.push_back(value - 1);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
    ++index;
  }
  return w;
}

// ---------------------------------------------------------------------------
// CartanType

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

int coxeter_from_cartan_product(int product) {
  switch (product) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;
  }
}

void link(std::vector<std::vector<int>>& a, int i, int j, int aij = -1, int aji = -1) {
  a[i][j] = aij;
  a[j][i] = aji;
}

std::string matrix_name(const std::vector<std::vector<int>>& m) {
  std::ostringstream out;
  out << "coxeter[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out << ';';
    for (std::size_t j = 0; j < m[i].size(); ++j) out << (j ? "," : "") << m[i][j];
  }
  out << ']';
  return out.str();
}

}  // namespace

CartanType CartanType::parse(std::string_view name) {
  if (name.size() < 2) throw CartanError("malformed Cartan type '" + std::string(name) + "'");
  const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  int n = 0;
  auto digits = name.substr(1);
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc{} || end != digits.data() + digits.size() || n < 1)
    throw CartanError("malformed rank in Cartan type '" + std::string(name) + "'");

  const std::string label = std::string(1, family) + std::to_string(n);
  auto require = [&](bool ok, const std::string& why) {
    if (!ok) throw CartanError("Cartan type " + label + ": " + why);
  };
  std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case 'B':
    case 'C':
      require(n >= 2, "rank must be at least 2");
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      // alpha_n is short in B_n and long in C_n.
      if (family == 'B')
        link(a, n - 2, n - 1, -1, -2);
      else
        link(a, n - 2, n - 1, -2, -1);
      break;
    case 'D':
      require(n >= 4, "rank must be at least 4");
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 3, n - 1);
      break;
    case 'E':
      require(n >= 6 && n <= 8, "rank must be 6, 7 or 8");
      link(a, 0, 2);
      link(a, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case 'F':
      require(n == 4, "rank must be 4");
      link(a, 0, 1);
      link(a, 1, 2, -2, -1);
      link(a, 2, 3);
      break;
    case 'G':
      require(n == 2, "rank must be 2");
      link(a, 0, 1, -1, -3);
      break;
    default:
      throw CartanError("unknown Cartan family '" + std::string(1, name[0]) + "' in '" + std::string(name) + "'");
  }

  CartanType t;
  t.name_ = label;
  t.cartan_ = a;
  t.coxeter_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) t.coxeter_[i][j] = coxeter_from_cartan_product(a[i][j] * a[j][i]);
  t.classify();
  return t;
}

CartanType CartanType::from_coxeter_matrix(const std::vector<std::vector<int>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw CartanError("empty Coxeter matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n)
      throw CartanError("Coxeter matrix row " + std::to_string(i + 1) + " has " + std::to_string(m[i].size()) +
                        " entries, expected " + std::to_string(n));
  }
  auto entry = [&](std::size_t i, std::size_t j) {
    return "m(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")=" + std::to_string(m[i][j]);
  };
  CartanType t;
  t.coxeter_ = m;
  t.cartan_.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][i] != 1) throw CartanError(entry(i, i) + ": diagonal entries must be 1");
    t.cartan_[i][i] = 2;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (m[i][j] != m[j][i]) throw CartanError(entry(i, j) + " differs from " + entry(j, i) + ": matrix must be symmetric");
      if (m[i][j] < 2) throw CartanError(entry(i, j) + ": off-diagonal entries must be at least 2");
      if (m[i][j] == 5 || m[i][j] > 6)
        throw CartanError(entry(i, j) + ": non-crystallographic; only 2, 3, 4, 6 are realizable by Weyl groups");
      if (i > j) continue;
      switch (m[i][j]) {
        case 2: break;
        case 3: link(t.cartan_, static_cast<int>(i), static_cast<int>(j)); break;
        case 4: link(t.cartan_, static_cast<int>(i), static_cast<int>(j), -1, -2); break;
        case 6: link(t.cartan_, static_cast<int>(i), static_cast<int>(j), -1, -3); break;
      }
    }
  }
  t.name_ = matrix_name(m);
  t.classify();
  return t;
}

void CartanType::classify() {
  const int n = rank();
  std::vector<int> component(static_cast<std::size_t>(n), -1);
  int count = 0;
  for (int start = 0; start < n; ++start) {
    if (component[start] >= 0) continue;
    std::vector<int> nodes{start};
    component[start] = count;
    for (std::size_t k = 0; k < nodes.size(); ++k)
      for (int j = 0; j < n; ++j)
        if (component[j] < 0 && coxeter_[nodes[k]][j] >= 3) {
          component[j] = count;
          nodes.push_back(j);
        }
    ++count;

    std::sort(nodes.begin(), nodes.end());
    std::string members;
    for (int v : nodes) members += (members.empty() ? "" : ",") + std::to_string(v + 1);
    auto infinite = [&](const std::string& why) {
      return CartanError("component on generators {" + members + "} is not of finite type: " + why);
    };

    const int k = static_cast<int>(nodes.size());
    int edges = 0;
    int special = 0;  // edges labelled other than 3
    int special_label = 0;
    std::pair<int, int> special_edge{-1, -1};
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    for (int a : nodes)
      for (int b : nodes)
        if (a < b && coxeter_[a][b] >= 3) {
          ++edges;
          ++degree[a];
          ++degree[b];
          if (coxeter_[a][b] != 3) {
            ++special;
            special_label = coxeter_[a][b];
            special_edge = {a, b};
          }
        }
    if (edges != k - 1) throw infinite("diagram contains a cycle");
    const int max_degree = k == 1 ? 0 : *std::max_element(degree.begin(), degree.end());
    const int branches = static_cast<int>(std::count_if(nodes.begin(), nodes.end(), [&](int v) { return degree[v] >= 3; }));

    std::string type;
    std::uint64_t order = 0;
    if (k == 1) {
      type = "A1";
      order = 2;
    } else if (special > 1) {
      throw infinite("more than one edge with label other than 3");
    } else if (special == 1) {
      if (max_degree > 2) throw infinite("branched diagram with a multiple edge");
      if (special_label == 6) {
        if (k != 2) throw infinite("label 6 occurs only in G2");
        type = "G2";
        order = 12;
      } else {
        const bool at_end = degree[special_edge.first] == 1 || degree[special_edge.second] == 1;
        if (at_end) {
          type = "B" + std::to_string(k);
          order = (std::uint64_t{1} << k) * factorial(k);
        } else if (k == 4) {
          type = "F4";
          order = 1152;
        } else {
          throw infinite("label 4 in the interior of a path");
        }
      }
    } else if (branches == 0) {
      type = "A" + std::to_string(k);
      order = factorial(k + 1);
    } else {
      if (branches > 1 || max_degree > 3) throw infinite("more than one branch point");
      const int centre = *std::find_if(nodes.begin(), nodes.end(), [&](int v) { return degree[v] == 3; });
      std::vector<int> arms;
      for (int first : nodes) {
        if (coxeter_[centre][first] < 3 || first == centre) continue;
        int len = 1;
        int prev = centre;
        int cur = first;
        while (true) {
          int next = -1;
          for (int v : nodes)
            if (v != prev && v != cur && coxeter_[cur][v] >= 3) next = v;
          if (next < 0) break;
          prev = cur;
          cur = next;
          ++len;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      if (arms[0] == 1 && arms[1] == 1) {
        type = "D" + std::to_string(k);
        order = (std::uint64_t{1} << (k - 1)) * factorial(k);
      } else if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) {
        type = "E" + std::to_string(k);
        order = k == 6 ? 51840ULL : k == 7 ? 2903040ULL : 696729600ULL;
      } else {
        throw infinite("branch arms of lengths " + std::to_string(arms[0]) + "," + std::to_string(arms[1]) + "," +
                       std::to_string(arms[2]));
      }
    }
    components_.push_back(type);
    order_ = order_ == 0 ? order : order_ * order;
  }
}

// ---------------------------------------------------------------------------
// CoxeterSystem

CoxeterSystem::CoxeterSystem(CartanType cartan) : cartan_(std::move(cartan)) {
  const int n = rank();
  for (int i = 0; i < n; ++i) {
    SquareMatrix s = SquareMatrix::identity(n);
    for (int j = 0; j < n; ++j) s(i, j) -= cartan_.cartan_entry(i, j);
    reflections_.push_back(std::move(s));
  }

  // Positive roots: closure of the simple roots under simple reflections,
  // keeping only positive images.
  std::vector<std::vector<int>> roots;
  for (int i = 0; i < n; ++i) {
    std::vector<int> r(static_cast<std::size_t>(n), 0);
    r[i] = 1;
    roots.push_back(r);
  }
  for (std::size_t k = 0; k < roots.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      std::vector<int> image = roots[k];
      int pairing = 0;
      for (int j = 0; j < n; ++j) pairing += cartan_.cartan_entry(i, j) * roots[k][j];
      image[i] -= pairing;
      if (std::any_of(image.begin(), image.end(), [](int c) { return c < 0; })) continue;
      if (std::find(roots.begin(), roots.end(), image) == roots.end()) roots.push_back(image);
    }
  }
  positive_roots_ = std::move(roots);

  const SquareMatrix id = SquareMatrix::identity(n);
  for (int i = 0; i < n; ++i) {
    if (!(reflections_[i] * reflections_[i] == id)) throw ConsistencyError("simple reflection does not square to 1");
    for (int j = i + 1; j < n; ++j) {
      const SquareMatrix prod = reflections_[i] * reflections_[j];
      SquareMatrix power = id;
      int order = 0;
      do {
        power = power * prod;
        ++order;
      } while (!(power == id) && order <= 6);
      if (order != cartan_.coxeter_entry(i, j))
        throw ConsistencyError("braid relation fails for generators " + std::to_string(i + 1) + "," + std::to_string(j + 1));
    }
  }
}

void CoxeterSystem::check_generator(Generator i) const {
  if (i < 0 || i >= rank())
    throw WordError("generator " + std::to_string(i + 1) + " out of range 1.." + std::to_string(rank()), 1);
}

int CoxeterSystem::length_of(const SquareMatrix& m) const {
  const int n = rank();
  int count = 0;
  std::vector<int> image(static_cast<std::size_t>(n));
  for (const auto& root : positive_roots_) {
    std::fill(image.begin(), image.end(), 0);
    for (int j = 0; j < n; ++j) {
      if (root[j] == 0) continue;
      for (int r = 0; r < n; ++r) image[r] += m(r, j) * root[j];
    }
    if (std::any_of(image.begin(), image.end(), [](int c) { return c < 0; })) ++count;
  }
  return count;
}

SquareMatrix CoxeterSystem::right_reflect(const SquareMatrix& m, Generator i) const {
  const int n = rank();
  SquareMatrix r = m;
  for (int j = 0; j < n; ++j) {
    const int a = cartan_.cartan_entry(i, j);
    if (a == 0) continue;
    for (int row = 0; row < n; ++row) r(row, j) -= a * m(row, i);
  }
  return r;
}

SquareMatrix CoxeterSystem::left_reflect(const SquareMatrix& m, Generator i) const {
  const int n = rank();
  SquareMatrix r = m;
  for (int col = 0; col < n; ++col) {
    int pairing = 0;
    for (int k = 0; k < n; ++k) pairing += cartan_.cartan_entry(i, k) * m(k, col);
    r(i, col) -= pairing;
  }
  return r;
}

WeylElement CoxeterSystem::identity() const { return WeylElement(SquareMatrix::identity(rank()), 0); }

WeylElement CoxeterSystem::generator(Generator i) const {
  check_generator(i);
  return WeylElement(reflections_[i], 1);
}

WeylElement CoxeterSystem::multiply(const WeylElement& a, const WeylElement& b) const {
  if (a.matrix().size() != rank() || b.matrix().size() != rank())
    throw ContractViolation("multiply: elements from a different system");
  SquareMatrix m = a.matrix() * b.matrix();
  const int len = length_of(m);
  return WeylElement(std::move(m), len);
}

WeylElement CoxeterSystem::evaluate(const ReducedWord& word) const {
  SquareMatrix m = SquareMatrix::identity(rank());
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (word[k] < 0 || word[k] >= rank())
      throw WordError("letter " + std::to_string(word[k] + 1) + " at position " + std::to_string(k + 1) +
                          " is not a generator of " + cartan_.name(),
                      k + 1);
    m = right_reflect(m, word[k]);
  }
  const int len = length_of(m);
  return WeylElement(std::move(m), len);
}

bool CoxeterSystem::is_reduced(const ReducedWord& word) const {
  return evaluate(word).length() == static_cast<int>(word.size());
}

bool CoxeterSystem::descends_right(const WeylElement& w, Generator i) const {
  check_generator(i);
  for (int r = 0; r < rank(); ++r)
    if (w.matrix()(r, i) < 0) return true;
  return false;
}

bool CoxeterSystem::descends_left(const WeylElement& w, Generator i) const {
  check_generator(i);
  return length_of(left_reflect(w.matrix(), i)) < w.length();
}

bool CoxeterSystem::bruhat_leq(const WeylElement& v, const WeylElement& w) const {
  SquareMatrix x = v.matrix();
  SquareMatrix y = w.matrix();
  int lx = v.length();
  int ly = w.length();
  while (true) {
    if (lx > ly) return false;
    if (ly == 0) return lx == 0;
    Generator s = 0;
    while (!descends_right(WeylElement(y, ly), s)) ++s;
    y = right_reflect(y, s);
    --ly;
    if (descends_right(WeylElement(x, lx), s)) {
      x = right_reflect(x, s);
      --lx;
    }
  }
}

namespace {

template <class Pick>
ReducedWord greedy_word(const CoxeterSystem& sys, const WeylElement& w, Pick pick) {
  ReducedWord word;
  SquareMatrix m = w.matrix();
  int len = w.length();
  while (len > 0) {
    std::vector<Generator> descents;
    for (Generator i = 0; i < sys.rank(); ++i)
      if (sys.length_of(sys.left_reflect(m, i)) < len) descents.push_back(i);
    const Generator s = pick(descents);
    word.letters.push_back(s);
    m = sys.left_reflect(m, s);
    --len;
  }
  return word;
}

}  // namespace

ReducedWord CoxeterSystem::lex_min_reduced_word(const WeylElement& w) const {
  return greedy_word(*this, w, [](const std::vector<Generator>& d) { return d.front(); });
}

ReducedWord CoxeterSystem::lex_max_reduced_word(const WeylElement& w) const {
  return greedy_word(*this, w, [](const std::vector<Generator>& d) { return d.back(); });
}

CoxeterSystem build_system(const CartanType& cartan) { return CoxeterSystem(cartan); }
CoxeterSystem build_system(std::string_view cartan_name) { return CoxeterSystem(CartanType::parse(cartan_name)); }

// ---------------------------------------------------------------------------
// WeylGroup

std::string WeylGroup::key_of(const SquareMatrix& m) {
  std::string key(m.data().size(), '\0');
  for (std::size_t i = 0; i < key.size(); ++i) key[i] = static_cast<char>(m.data()[i]);
  return key;
}

WeylGroup::WeylGroup(CoxeterSystem system, Options options)
    : system_(std::move(system)), rank_(static_cast<std::size_t>(system_.rank())) {
  const std::uint64_t order = system_.group_order();
  if (order > options.max_elements)
    throw CartanError("group " + system_.cartan().name() + " has order " + std::to_string(order) +
                      ", above the enumeration limit of " + std::to_string(options.max_elements));
  const int n = system_.rank();
  const std::size_t rank = rank_;

  // Breadth-first closure under right multiplication; BFS depth is length.
  std::vector<SquareMatrix> mats{SquareMatrix::identity(n)};
  std::vector<int> lens{0};
  std::unordered_map<std::string, std::uint32_t> index;
  index.reserve(static_cast<std::size_t>(order) * 2);
  index.emplace(key_of(mats[0]), 0);
  std::vector<std::uint32_t> right;
  for (std::size_t k = 0; k < mats.size(); ++k) {
    for (Generator i = 0; i < n; ++i) {
      SquareMatrix next = system_.right_reflect(mats[k], i);
      auto [it, inserted] = index.emplace(key_of(next), static_cast<std::uint32_t>(mats.size()));
      if (inserted) {
        mats.push_back(std::move(next));
        lens.push_back(lens[k] + 1);
      }
      right.push_back(it->second);
    }
  }
  if (mats.size() != order)
    throw ConsistencyError("enumerated " + std::to_string(mats.size()) + " elements, expected " + std::to_string(order));

  const std::size_t size = mats.size();
  std::vector<std::uint32_t> left(size * rank);
  for (std::size_t k = 0; k < size; ++k)
    for (Generator i = 0; i < n; ++i) left[k * rank + static_cast<std::size_t>(i)] = index.at(key_of(system_.left_reflect(mats[k], i)));

  // Lex-min words: first letter is the smallest left descent.
  std::vector<std::uint32_t> by_len(size);
  std::iota(by_len.begin(), by_len.end(), 0u);  // BFS order is already by length
  std::vector<ReducedWord> words(size);
  for (std::uint32_t k : by_len) {
    if (lens[k] == 0) continue;
    for (Generator i = 0; i < n; ++i) {
      const std::uint32_t shorter = left[k * rank + static_cast<std::size_t>(i)];
      if (lens[shorter] < lens[k]) {
        words[k].letters.push_back(i);
        words[k].letters.insert(words[k].letters.end(), words[shorter].letters.begin(), words[shorter].letters.end());
        break;
      }
    }
  }

  std::vector<std::uint32_t> order_perm(size);
  std::iota(order_perm.begin(), order_perm.end(), 0u);
  std::sort(order_perm.begin(), order_perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (lens[a] != lens[b]) return lens[a] < lens[b];
    return words[a] < words[b];
  });
  std::vector<std::uint32_t> new_id(size);
  for (std::size_t k = 0; k < size; ++k) new_id[order_perm[k]] = static_cast<std::uint32_t>(k);

  elements_.reserve(size);
  lengths_.reserve(size);
  words_.reserve(size);
  right_.resize(size * rank);
  left_.resize(size * rank);
  for (std::size_t k = 0; k < size; ++k) {
    const std::uint32_t old = order_perm[k];
    elements_.push_back(WeylElement(mats[old], lens[old]));
    lengths_.push_back(lens[old]);
    words_.push_back(words[old]);
    ids_.push_back(ElementId{static_cast<std::uint32_t>(k)});
    index_.emplace(key_of(mats[old]), ElementId{static_cast<std::uint32_t>(k)});
    for (std::size_t i = 0; i < rank; ++i) {
      right_[k * rank + i] = ElementId{new_id[right[old * rank + i]]};
      left_[k * rank + i] = ElementId{new_id[left[old * rank + i]]};
    }
  }

  if (size <= options.bruhat_cache_limit) {
    // [e, w] = [e, ws] u [e, ws]s for any right descent s of w.
    words_per_row_ = (size + 63) / 64;
    bruhat_bits_.assign(size * words_per_row_, 0);
    bruhat_bits_[0] = 1;
    for (std::size_t w = 1; w < size; ++w) {
      const ElementId wid{static_cast<std::uint32_t>(w)};
      Generator s = 0;
      while (!descends_right(wid, s)) ++s;
      const ElementId ws = right_mult(wid, s);
      std::uint64_t* row = &bruhat_bits_[w * words_per_row_];
      const std::uint64_t* below = &bruhat_bits_[ws.value * words_per_row_];
      std::copy(below, below + words_per_row_, row);
      for (std::size_t word = 0; word < words_per_row_; ++word) {
        std::uint64_t bits = below[word];
        while (bits) {
          const std::size_t v = word * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
          bits &= bits - 1;
          const std::uint32_t vs = right_mult(ElementId{static_cast<std::uint32_t>(v)}, s).value;
          row[vs / 64] |= std::uint64_t{1} << (vs % 64);
        }
      }
    }
  }
}

ElementId WeylGroup::multiply(ElementId a, ElementId b) const {
  for (Generator s : lex_min_word(b).letters) a = right_mult(a, s);
  return a;
}

ElementId WeylGroup::inverse(ElementId w) const {
  ElementId r = identity();
  const auto& word = lex_min_word(w).letters;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = right_mult(r, *it);
  return r;
}

ElementId WeylGroup::evaluate(const ReducedWord& word) const {
  ElementId r = identity();
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (word[k] < 0 || word[k] >= rank())
      throw WordError("letter " + std::to_string(word[k] + 1) + " at position " + std::to_string(k + 1) +
                          " is not a generator of " + system_.cartan().name(),
                      k + 1);
    r = right_mult(r, word[k]);
  }
  return r;
}

ElementId WeylGroup::evaluate_reduced(const ReducedWord& word) const {
  ElementId r = identity();
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (word[k] < 0 || word[k] >= rank())
      throw WordError("letter " + std::to_string(word[k] + 1) + " at position " + std::to_string(k + 1) +
                          " is not a generator of " + system_.cartan().name(),
                      k + 1);
    if (descends_right(r, word[k]))
      throw WordError("word " + format_word(word) + " is not reduced at position " + std::to_string(k + 1), k + 1);
    r = right_mult(r, word[k]);
  }
  return r;
}

std::optional<ElementId> WeylGroup::find(const WeylElement& w) const {
  if (w.matrix().size() != rank()) return std::nullopt;
  auto it = index_.find(key_of(w.matrix()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId WeylGroup::id_of(const WeylElement& w) const {
  auto id = find(w);
  if (!id) throw ContractViolation("element does not belong to " + system_.cartan().name());
  return *id;
}

bool WeylGroup::bruhat_leq(ElementId v, ElementId w) const {
  if (!bruhat_bits_.empty())
    return (bruhat_bits_[w.value * words_per_row_ + v.value / 64] >> (v.value % 64)) & 1U;
  while (true) {
    if (length(v) > length(w)) return false;
    if (length(w) == 0) return length(v) == 0;
    Generator s = 0;
    while (!descends_right(w, s)) ++s;
    if (descends_right(v, s)) v = right_mult(v, s);
    w = right_mult(w, s);
  }
}

std::vector<ElementId> WeylGroup::lower_interval(ElementId w) const {
  std::vector<ElementId> out;
  if (!bruhat_bits_.empty()) {
    const std::uint64_t* row = &bruhat_bits_[w.value * words_per_row_];
    for (std::size_t word = 0; word < words_per_row_; ++word) {
      std::uint64_t bits = row[word];
      while (bits) {
        out.push_back(ElementId{static_cast<std::uint32_t>(word * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)))});
        bits &= bits - 1;
      }
    }
    return out;
  }
  // Subword closure along a reduced word.
  out.push_back(identity());
  for (Generator s : lex_min_word(w).letters) {
    const std::size_t count = out.size();
    for (std::size_t k = 0; k < count; ++k) out.push_back(right_mult(out[k], s));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return out;
}

std::vector<std::vector<ElementId>> WeylGroup::elements_by_length() const {
  std::vector<std::vector<ElementId>> groups(static_cast<std::size_t>(max_length() + 1));
  for (ElementId id : ids_) groups[static_cast<std::size_t>(length(id))].push_back(id);
  return groups;
}

std::string WeylGroup::label(ElementId w) const {
  if (length(w) == 0) return "e";
  std::string out;
  for (Generator s : lex_min_word(w).letters) out += "s" + std::to_string(s + 1);
  return out;
}

}  // namespace kldecomp
