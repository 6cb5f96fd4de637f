#include "artinkms/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "artinkms/error.hpp"

namespace artinkms {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x          = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

void validate_name(const std::string& name) {
  if (name.empty() || name == "inf") {
    throw Error(ErrorKind::MalformedInput, "invalid generator name '" + name + "'");
  }
  for (char c : name) {
    if (c == '.' || c == ',' || c == '|' || c == '"' || static_cast<unsigned char>(c) <= ' ') {
      throw Error(ErrorKind::MalformedInput, "generator name '" + name + "' contains a reserved character");
    }
  }
}

// Connected components of the graph on 0..n-1 with an edge wherever `joined`.
template <typename Pred>
std::vector<std::vector<Letter>> components_of(std::size_t n, Pred joined) {
  UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (joined(i, j)) uf.unite(i, j);
    }
  }
  std::map<std::size_t, std::vector<Letter>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[uf.find(i)].push_back(static_cast<Letter>(i));
  std::vector<std::vector<Letter>> result;
  for (auto& [root, members] : groups) result.push_back(std::move(members));
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace

CoxeterMatrix::CoxeterMatrix(const std::vector<std::vector<unsigned>>& rows) : n_(rows.size()) {
  if (n_ > kMaxGenerators) {
    throw Error(ErrorKind::MalformedInput, "at most 255 generators are supported");
  }
  m_.resize(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_) {
      throw Error(ErrorKind::MalformedInput, "Coxeter matrix must be square");
    }
    for (std::size_t j = 0; j < n_; ++j) m_[i * n_ + j] = rows[i][j];
  }
  for (std::size_t i = 0; i < n_; ++i) {
    if ((*this)(i, i) != 1) {
      throw Error(ErrorKind::BadDiagonal, "m[" + std::to_string(i) + "][" + std::to_string(i) + "] must be 1");
    }
    for (std::size_t j = 0; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) {
        throw Error(ErrorKind::AsymmetricMatrix,
                    "m[" + std::to_string(i) + "][" + std::to_string(j) + "] != m[" + std::to_string(j) + "]["
                        + std::to_string(i) + "]");
      }
      if (i != j && (*this)(i, j) == 1) {
        throw Error(ErrorKind::BadEntry,
                    "off-diagonal entry m[" + std::to_string(i) + "][" + std::to_string(j) + "] is 1");
      }
    }
  }
}

CoxeterMatrix CoxeterMatrix::restrict_to(std::span<const Letter> generators) const {
  std::vector<std::vector<unsigned>> sub(generators.size(), std::vector<unsigned>(generators.size()));
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = 0; j < generators.size(); ++j) sub[i][j] = (*this)(generators[i], generators[j]);
  }
  return CoxeterMatrix(sub);
}

std::vector<std::vector<unsigned>> CoxeterMatrix::rows() const {
  std::vector<std::vector<unsigned>> result(n_, std::vector<unsigned>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) result[i][j] = (*this)(i, j);
  }
  return result;
}

MonoidPresentation::MonoidPresentation(std::string name, std::vector<std::string> generators, CoxeterMatrix matrix,
                                       std::optional<std::vector<Rational>> weights)
    : name_(std::move(name)),
      generators_(std::move(generators)),
      matrix_(std::move(matrix)),
      weights_(std::move(weights)) {
  if (generators_.size() != matrix_.size()) {
    throw Error(ErrorKind::MalformedInput, "generator count does not match the Coxeter matrix size");
  }
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    validate_name(g);
    if (!seen.insert(g).second) throw Error(ErrorKind::MalformedInput, "duplicate generator name '" + g + "'");
  }
  if (weights_) {
    if (weights_->size() != generators_.size()) {
      throw Error(ErrorKind::MalformedInput, "one weight per generator is required");
    }
    for (const auto& w : *weights_) {
      if (w <= 0) throw Error(ErrorKind::MalformedInput, "weights must be positive");
    }
    // Odd relations identify the two generators' images under N.
    auto n = matrix_.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        unsigned m = matrix_(i, j);
        if (m != kInfinity && m % 2 == 1 && (*weights_)[i] != (*weights_)[j]) {
          throw Error(ErrorKind::InconsistentWeights,
                      generators_[i] + " and " + generators_[j] + " are joined by m=" + std::to_string(m)
                          + " but carry different weights");
        }
      }
    }
  }
}

MonoidPresentation MonoidPresentation::from_rows(std::string name, const std::vector<std::vector<unsigned>>& rows) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < rows.size(); ++i) names.push_back("s" + std::to_string(i + 1));
  return MonoidPresentation(std::move(name), std::move(names), CoxeterMatrix(rows));
}

std::optional<Letter> MonoidPresentation::find_generator(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i] == name) return static_cast<Letter>(i);
  }
  return std::nullopt;
}

Word alternating(Letter s, Letter t, unsigned length) {
  Word w(length);
  for (unsigned k = 0; k < length; ++k) w[k] = (k % 2 == 0) ? s : t;
  return w;
}

std::vector<std::pair<Word, Word>> MonoidPresentation::relations() const {
  std::vector<std::pair<Word, Word>> result;
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = i + 1; j < rank(); ++j) {
      unsigned m = matrix_(i, j);
      if (m == kInfinity) continue;
      auto s = static_cast<Letter>(i);
      auto t = static_cast<Letter>(j);
      result.emplace_back(alternating(s, t, m), alternating(t, s, m));
    }
  }
  return result;
}

MonoidPresentation parse_presentation(std::string_view json_text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::MalformedInput, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::MalformedInput, "presentation must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "name" && key != "generators" && key != "coxeter" && key != "weights") {
      throw Error(ErrorKind::MalformedInput, "unknown key '" + key + "'");
    }
  }
  if (!doc.contains("name") || !doc["name"].is_string()) {
    throw Error(ErrorKind::MalformedInput, "missing string key 'name'");
  }
  if (!doc.contains("generators") || !doc["generators"].is_array()) {
    throw Error(ErrorKind::MalformedInput, "missing array key 'generators'");
  }
  if (!doc.contains("coxeter") || !doc["coxeter"].is_array()) {
    throw Error(ErrorKind::MalformedInput, "missing array key 'coxeter'");
  }
  std::vector<std::string> generators;
  for (const auto& g : doc["generators"]) {
    if (!g.is_string()) throw Error(ErrorKind::MalformedInput, "generator names must be strings");
    generators.push_back(g.get<std::string>());
  }
  std::vector<std::vector<unsigned>> rows;
  for (const auto& row : doc["coxeter"]) {
    if (!row.is_array()) throw Error(ErrorKind::MalformedInput, "Coxeter rows must be arrays");
    std::vector<unsigned> r;
    for (const auto& entry : row) {
      if (!entry.is_number_unsigned()) {
        throw Error(ErrorKind::MalformedInput, "Coxeter entries must be non-negative integers");
      }
      r.push_back(entry.get<unsigned>());
    }
    rows.push_back(std::move(r));
  }
  if (rows.size() != generators.size()) {
    throw Error(ErrorKind::MalformedInput, "Coxeter matrix must have one row per generator");
  }
  std::optional<std::vector<Rational>> weights;
  if (doc.contains("weights")) {
    if (!doc["weights"].is_array()) throw Error(ErrorKind::MalformedInput, "'weights' must be an array");
    weights.emplace();
    for (const auto& w : doc["weights"]) {
      if (!w.is_string()) throw Error(ErrorKind::MalformedInput, "weights must be decimal strings");
      weights->push_back(parse_decimal(w.get<std::string>()));
    }
  }
  return MonoidPresentation(doc["name"].get<std::string>(), std::move(generators), CoxeterMatrix(rows),
                            std::move(weights));
}

MonoidPresentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MalformedInput, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_presentation(buffer.str());
}

namespace {

std::string decimal_string(const Rational& q) {
  // Weights come from decimal literals, so the denominator divides a power of 10.
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  unsigned digits = 0;
  BigInt scale    = 1;
  while (den != 1 && scale % den != 0 && digits < 64) {
    scale *= 10;
    ++digits;
  }
  if (den != 1 && scale % den != 0) return to_string(q);
  BigInt scaled  = num * (scale / den);
  std::string s  = scaled.str();
  if (digits == 0) return s;
  while (s.size() <= digits) s.insert(s.begin(), '0');
  s.insert(s.end() - digits, '.');
  return s;
}

}  // namespace

std::string serialize_presentation(const MonoidPresentation& presentation) {
  nlohmann::ordered_json doc;
  doc["name"]       = presentation.name();
  doc["generators"] = presentation.generators();
  doc["coxeter"]    = presentation.matrix().rows();
  if (presentation.weights()) {
    std::vector<std::string> w;
    for (const auto& q : *presentation.weights()) w.push_back(decimal_string(q));
    doc["weights"] = w;
  }
  return doc.dump();
}

std::optional<std::string> spherical_type(const CoxeterMatrix& m) {
  const std::size_t k = m.size();
  if (k == 0) return std::nullopt;
  if (k == 1) return "A1";
  std::vector<std::vector<std::size_t>> adj(k);
  std::size_t edges = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (m(i, j) == 2) continue;
      if (m.infinite(i, j)) return std::nullopt;
      adj[i].push_back(j);
      adj[j].push_back(i);
      ++edges;
    }
  }
  if (edges != k - 1) return std::nullopt;  // disconnected or has a cycle
  if (k == 2) {
    unsigned label = m(0, 1);
    if (label == 3) return "A2";
    if (label == 4) return "B2";
    return "I2(" + std::to_string(label) + ")";
  }
  std::vector<std::size_t> branch;
  for (std::size_t i = 0; i < k; ++i) {
    if (adj[i].size() > 3) return std::nullopt;
    if (adj[i].size() == 3) branch.push_back(i);
  }
  if (branch.size() > 1) return std::nullopt;

  if (branch.size() == 1) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j : adj[i]) {
        if (m(i, j) != 3) return std::nullopt;
      }
    }
    std::size_t centre = branch.front();
    std::vector<std::size_t> arms;
    for (std::size_t start : adj[centre]) {
      std::size_t len = 1, prev = centre, cur = start;
      while (adj[cur].size() == 2) {
        std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev             = cur;
        cur              = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(k);
    if (arms[0] == 1 && arms[1] == 2 && arms[2] == 2) return "E6";
    if (arms[0] == 1 && arms[1] == 2 && arms[2] == 3) return "E7";
    if (arms[0] == 1 && arms[1] == 2 && arms[2] == 4) return "E8";
    return std::nullopt;
  }

  // A path: read the labels from one end to the other.
  std::size_t end = 0;
  while (adj[end].size() != 1) ++end;
  std::vector<unsigned> labels;
  std::size_t prev = k, cur = end;
  while (true) {
    std::size_t next = k;
    for (std::size_t j : adj[cur]) {
      if (j != prev) next = j;
    }
    if (next == k) break;
    labels.push_back(m(cur, next));
    prev = cur;
    cur  = next;
  }
  auto count = [&](unsigned v) { return std::count(labels.begin(), labels.end(), v); };
  const auto n3 = static_cast<std::size_t>(count(3));
  if (n3 == labels.size()) return "A" + std::to_string(k);
  if (n3 + 1 == labels.size()) {
    bool at_end = labels.front() != 3 || labels.back() != 3;
    unsigned odd = labels.front() != 3 ? labels.front() : labels.back();
    if (at_end && odd == 4) return "B" + std::to_string(k);
    if (at_end && odd == 5 && (k == 3 || k == 4)) return "H" + std::to_string(k);
    if (k == 4 && labels[1] == 4) return "F4";
  }
  return std::nullopt;
}

bool is_finite_type(const CoxeterMatrix& matrix) {
  auto groups = components_of(matrix.size(), [&](std::size_t i, std::size_t j) { return matrix(i, j) != 2; });
  for (const auto& g : groups) {
    if (!spherical_type(matrix.restrict_to(g))) return false;
  }
  return true;
}

Classification classify(const MonoidPresentation& presentation) {
  const auto& m = presentation.matrix();
  Classification result;
  result.right_angled = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (i != j && m(i, j) != 2 && !m.infinite(i, j)) result.right_angled = false;
    }
  }
  result.finite_type = true;
  for (auto& g : components_of(m.size(), [&](std::size_t i, std::size_t j) { return m(i, j) != 2; })) {
    Component c;
    auto label  = spherical_type(m.restrict_to(g));
    c.spherical = label.has_value();
    c.type      = label.value_or("non-spherical");
    c.generators = std::move(g);
    result.finite_type = result.finite_type && c.spherical;
    result.components.push_back(std::move(c));
  }
  return result;
}

bool atom_reduction_guaranteed(const CoxeterMatrix& matrix) {
  if (matrix.size() <= 1) return true;
  if (is_finite_type(matrix)) return true;
  bool right_angled = true;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    for (std::size_t j = 0; j < matrix.size(); ++j) {
      if (i != j && matrix(i, j) != 2 && !matrix.infinite(i, j)) right_angled = false;
    }
  }
  if (right_angled) return true;

  auto recurse = [&](const std::vector<std::vector<Letter>>& blocks) {
    if (blocks.size() < 2) return false;
    for (const auto& b : blocks) {
      if (!atom_reduction_guaranteed(matrix.restrict_to(b))) return false;
    }
    return true;
  };
  // Free factors: blocks of the graph whose edges are the finite entries.
  if (recurse(components_of(matrix.size(), [&](std::size_t i, std::size_t j) { return !matrix.infinite(i, j); }))) {
    return true;
  }
  // Direct factors: blocks of the graph whose edges are the entries != 2.
  return recurse(components_of(matrix.size(), [&](std::size_t i, std::size_t j) { return matrix(i, j) != 2; }));
}

namespace {

MonoidPresentation block_product(const MonoidPresentation& a, const MonoidPresentation& b, unsigned cross,
                                 const std::string& joiner) {
  const std::size_t n = a.rank() + b.rank();
  std::vector<std::vector<unsigned>> rows(n, std::vector<unsigned>(n, cross));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    for (std::size_t j = 0; j < a.rank(); ++j) rows[i][j] = a.matrix()(i, j);
  }
  for (std::size_t i = 0; i < b.rank(); ++i) {
    for (std::size_t j = 0; j < b.rank(); ++j) rows[a.rank() + i][a.rank() + j] = b.matrix()(i, j);
  }
  std::vector<std::string> names = a.generators();
  std::set<std::string> taken(names.begin(), names.end());
  for (auto name : b.generators()) {
    while (taken.count(name) != 0) name += "'";
    taken.insert(name);
    names.push_back(name);
  }
  std::optional<std::vector<Rational>> weights;
  if (a.weights() || b.weights()) {
    if (!a.weights() || !b.weights()) {
      throw Error(ErrorKind::InconsistentWeights, "cannot combine a weighted and an unweighted presentation");
    }
    weights = *a.weights();
    weights->insert(weights->end(), b.weights()->begin(), b.weights()->end());
  }
  return MonoidPresentation(a.name() + joiner + b.name(), std::move(names), CoxeterMatrix(rows), std::move(weights));
}

}  // namespace

MonoidPresentation free_product(const MonoidPresentation& a, const MonoidPresentation& b) {
  return block_product(a, b, kInfinity, "*");
}

MonoidPresentation direct_product(const MonoidPresentation& a, const MonoidPresentation& b) {
  return block_product(a, b, 2, "x");
}

}  // namespace artinkms
