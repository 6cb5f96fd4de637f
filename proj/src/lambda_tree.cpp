#include "artinkms/lambda_tree.hpp"

#include <map>
#include <utility>

#include "artinkms/error.hpp"

namespace artinkms {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// p\x, cached per tree.
class ComplementCache {
 public:
  ComplementCache(const WordEngine& engine, std::size_t step_cap) : engine_(engine), step_cap_(step_cap) {}

  Entry shift(Letter p, const Entry& x) {
    if (!x) return std::nullopt;
    auto key = std::make_pair(p, *x);
    auto it  = cache_.find(key);
    if (it != cache_.end()) return it->second;
    LcmResult r = reverse(engine_.presentation().matrix(), Word{p}, *x, step_cap_);
    Entry value;
    if (r.tag == LcmTag::Inconclusive) throw Error(ErrorKind::Inconclusive, "reversing exceeded its step cap");
    if (r.found()) value = engine_.canonical(r.comp_left);
    cache_.emplace(std::move(key), value);
    return value;
  }

 private:
  const WordEngine&                           engine_;
  std::size_t                                 step_cap_;
  std::map<std::pair<Letter, Word>, Entry>    cache_;
};

StepResult step_with(const WordEngine& engine, const LambdaList& list, const AtomChooser& chooser,
                     ComplementCache& cache) {
  if (is_leaf(list)) throw Error(ErrorKind::LeafInput, "cannot split a leaf");
  StepResult out;
  for (std::size_t i = 0; i < list.entries.size(); ++i) {
    if (list.entries[i] && list.entries[i]->size() >= 2) {
      out.index = i;
      break;
    }
  }
  Word entry = engine.canonical(*list.entries[out.index]);
  out.atom   = chooser(engine, entry);
  if (out.atom != entry.front() && !engine.left_divides(Word{out.atom}, entry)) {
    throw Error(ErrorKind::Defect, "chooser returned an atom that does not divide the entry");
  }
  out.lambda1                     = list;
  out.lambda1.entries[out.index]  = Word{out.atom};
  out.lambda2.entries.reserve(list.entries.size());
  for (const auto& x : list.entries) out.lambda2.entries.push_back(cache.shift(out.atom, x));
  return out;
}

}  // namespace

LambdaList parse_list(const MonoidPresentation& presentation, std::string_view text) {
  LambdaList list;
  std::size_t start = 0;
  while (true) {
    auto comma            = text.find(',', start);
    std::string_view item = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                     : comma - start));
    if (item.empty()) {
      throw Error(ErrorKind::MalformedInput, "empty entry in list '" + std::string(text) + "'");
    } else if (item == "inf") {
      list.entries.emplace_back(std::nullopt);
    } else if (item == "e" && !presentation.find_generator("e")) {
      list.entries.emplace_back(Word{});
    } else {
      list.entries.emplace_back(parse_word(presentation, item));
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return list;
}

std::string format_list(const MonoidPresentation& presentation, const LambdaList& list) {
  std::string out;
  for (std::size_t i = 0; i < list.entries.size(); ++i) {
    if (i != 0) out += ',';
    out += list.entries[i] ? format_word_or_e(presentation, *list.entries[i]) : std::string("inf");
  }
  return out;
}

LambdaList canonical_list(const WordEngine& engine, const LambdaList& list) {
  LambdaList out = list;
  for (auto& x : out.entries) {
    if (x) x = engine.canonical(*x);
  }
  return out;
}

bool is_leaf(const LambdaList& list) {
  bool all_small = true;
  for (const auto& x : list.entries) {
    if (!x) continue;
    if (x->empty()) return true;
    if (x->size() >= 2) all_small = false;
  }
  return all_small;
}

AtomChooser first_letter_chooser() {
  return [](const WordEngine&, const Word& entry) { return entry.front(); };
}

AtomChooser random_atom_chooser(std::mt19937_64& rng) {
  return [&rng](const WordEngine& engine, const Word& entry) {
    auto atoms = engine.left_atoms(entry);
    std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
    return atoms[pick(rng)];
  };
}

StepResult step(const WordEngine& engine, const LambdaList& list, const AtomChooser& chooser, std::size_t step_cap) {
  ComplementCache cache(engine, step_cap);
  return step_with(engine, list, chooser, cache);
}

TreeReport build_tree(const WordEngine& engine, const LambdaList& root, std::size_t depth_cap, std::size_t node_cap) {
  struct Node {
    LambdaList  list;
    std::size_t depth;
    std::string branch;
  };
  ComplementCache cache(engine, kDefaultStepCap);
  const AtomChooser chooser = first_letter_chooser();
  TreeReport report;
  std::vector<Node> stack{{canonical_list(engine, root), 0, ""}};
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    ++report.node_count;
    report.max_depth = std::max(report.max_depth, node.depth);
    if (is_leaf(node.list)) {
      ++report.leaf_count;
      continue;
    }
    if (node.depth >= depth_cap || report.node_count + stack.size() + 2 > node_cap) {
      report.status         = TreeStatus::Inconclusive;
      report.witness_branch = node.branch;
      return report;
    }
    StepResult s = step_with(engine, node.list, chooser, cache);
    stack.push_back({std::move(s.lambda2), node.depth + 1, node.branch + '2'});
    stack.push_back({std::move(s.lambda1), node.depth + 1, node.branch + '1'});
  }
  return report;
}

namespace {

struct ZWalker {
  const CoxeterMatrix&       matrix;
  std::vector<Word>          finite;  // the non-inf entries
  std::size_t                step_cap;
  std::vector<BigInt>        coefficients;

  void add(std::size_t length, std::size_t size) {
    if (coefficients.size() <= length) coefficients.resize(length + 1, BigInt(0));
    coefficients[length] += size % 2 == 0 ? 1 : -1;
  }

  void walk(const Word& current, std::size_t size, std::size_t from) {
    for (std::size_t k = from; k < finite.size(); ++k) {
      LcmResult r = reverse(matrix, current, finite[k], step_cap);
      if (r.tag == LcmTag::NoCommonMultiple) continue;
      if (r.tag == LcmTag::Inconclusive) throw Error(ErrorKind::Inconclusive, "reversing exceeded its step cap");
      add(r.lcm.size(), size + 1);
      walk(r.lcm, size + 1, k + 1);
    }
  }
};

}  // namespace

IntPolynomial z_poly(const WordEngine& engine, const LambdaList& list, std::size_t step_cap) {
  ZWalker walker{engine.presentation().matrix(), {}, step_cap, {}};
  // Subsets containing an inf entry contribute nothing.
  for (const auto& x : list.entries) {
    if (x) walker.finite.push_back(*x);
  }
  walker.add(0, 0);
  walker.walk(Word{}, 0, 0);
  return IntPolynomial(std::move(walker.coefficients));
}

LambdaList remove_dominated(const WordEngine& engine, const LambdaList& list) {
  const auto& e = list.entries;
  LambdaList out;
  for (std::size_t j = 0; j < e.size(); ++j) {
    bool dominated = false;
    if (e[j]) {
      for (std::size_t i = 0; i < e.size() && !dominated; ++i) {
        if (i == j || !e[i] || !engine.left_divides(*e[i], *e[j])) continue;
        // Equal entries divide each other; keep the first copy.
        dominated = !(i > j && e[i]->size() == e[j]->size());
      }
    }
    if (!dominated) out.entries.push_back(e[j]);
  }
  return out;
}

}  // namespace artinkms
