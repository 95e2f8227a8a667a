#include "specoh/cobar.hpp"

#include <sstream>

#include "specoh/errors.hpp"

namespace specoh {

namespace {

std::vector<int> word_key(const Species& c, const Decomposition& blocks, const std::vector<Structure>& labels) {
  std::vector<int> key = blocks.block_word();
  for (const auto& s : labels) key.push_back(static_cast<int>(c.rank(s)));
  return key;
}

}  // namespace

CobarComplex::CobarComplex(SpeciesPtr coalgebra, int arity) : coalgebra_(std::move(coalgebra)), arity_(arity) {
  if (arity < 0) throw InvalidArgument("negative arity");
  const Species& c = *coalgebra_;
  words_.resize(static_cast<std::size_t>(arity) + 1);
  index_.resize(static_cast<std::size_t>(arity) + 1);
  for (int k = 0; k <= arity; ++k) {
    for (const auto& f : enumerate_compositions(arity, k)) {
      const auto sizes = f.block_sizes();
      std::vector<const std::vector<Structure>*> choices;
      bool empty = false;
      for (int a : sizes) {
        choices.push_back(&c.structures(a));
        empty = empty || choices.back()->empty();
      }
      if (empty) continue;
      std::vector<std::size_t> digit(sizes.size(), 0);
      while (true) {
        CobarWord w{f, {}};
        for (std::size_t b = 0; b < sizes.size(); ++b) w.labels.push_back((*choices[b])[digit[b]]);
        index_[static_cast<std::size_t>(k)].emplace(word_key(c, w.blocks, w.labels), words_[static_cast<std::size_t>(k)].size());
        words_[static_cast<std::size_t>(k)].push_back(std::move(w));
        std::size_t pos = sizes.size();
        while (pos > 0) {
          --pos;
          if (++digit[pos] < choices[pos]->size()) break;
          digit[pos] = 0;
          if (pos == 0) {
            pos = sizes.size() + 1;
            break;
          }
        }
        if (pos == sizes.size() + 1 || sizes.empty()) break;
      }
    }
  }
  for (int k = 0; k <= arity; ++k) {
    const auto& source = words_[static_cast<std::size_t>(k)];
    if (k == arity) {
      differentials_.emplace_back(0, source.size());
      continue;
    }
    SparseMatrix d(words_[static_cast<std::size_t>(k) + 1].size(), source.size());
    for (std::size_t col = 0; col < source.size(); ++col) {
      const CobarWord& w = source[col];
      for (int i = 0; i < k; ++i) {
        const Subset& block = w.blocks.block(i);
        const int m = block.size();
        if (m < 2) continue;
        const Standardization lambda(block);
        const Rational sign(i % 2 == 0 ? 1 : -1);
        for (std::uint64_t am = 1; am + 1 < (std::uint64_t{1} << m); ++am) {
          const Subset a_local(m, am);
          const Subset b_local = a_local.complement();
          auto left = c.restrict_right(w.labels[static_cast<std::size_t>(i)], a_local);
          if (!left) continue;
          auto right = c.restrict_left(w.labels[static_cast<std::size_t>(i)], b_local);
          if (!right) continue;
          std::vector<Subset> blocks;
          std::vector<Structure> labels;
          for (int b = 0; b < k; ++b) {
            if (b != i) {
              blocks.push_back(w.blocks.block(b));
              labels.push_back(w.labels[static_cast<std::size_t>(b)]);
              continue;
            }
            std::uint64_t a_mask = 0;
            for (int e : a_local.members()) a_mask |= std::uint64_t{1} << (lambda.element_at(e) - 1);
            const Subset a_global(arity, a_mask);
            blocks.push_back(a_global);
            blocks.push_back(Subset(arity, block.mask() & ~a_mask));
            labels.push_back(*left);
            labels.push_back(*right);
          }
          const Decomposition split(arity, std::move(blocks));
          d.add(index_of(k + 1, word_key(c, split, labels)), col, sign);
        }
      }
    }
    differentials_.push_back(std::move(d));
  }
}

std::size_t CobarComplex::index_of(int k, const std::vector<int>& key) const {
  const auto& idx = index_.at(static_cast<std::size_t>(k));
  auto it = idx.find(key);
  if (it == idx.end()) throw InvalidArgument("cobar word not found");
  return it->second;
}

bool CobarComplex::differential_squares_to_zero() const {
  for (int k = 0; k + 1 <= arity_; ++k)
    if (!(differential(k + 1) * differential(k)).is_zero()) return false;
  return true;
}

std::vector<std::size_t> CobarComplex::cohomology_by_blocks() const {
  std::vector<std::size_t> out;
  for (int k = 0; k <= arity_; ++k) {
    const SparseMatrix& d_out = differential(k);
    const std::size_t size = words(k).size();
    const std::size_t incoming = k == 0 ? 0 : rank(differential(k - 1));
    out.push_back(size - rank(d_out) - incoming);
  }
  return out;
}

std::string CobarComplex::describe(const CobarWord& w) const {
  std::ostringstream os;
  for (int b = 0; b < w.blocks.length(); ++b)
    os << (b ? " " : "") << "s^-1[" << w.blocks.block(b).to_string() << ":"
       << coalgebra_->describe(w.labels[static_cast<std::size_t>(b)]) << "]";
  return os.str();
}

std::vector<std::vector<std::uint64_t>> stirling_first_kind_table(int max_n) {
  std::vector<std::vector<std::uint64_t>> s(static_cast<std::size_t>(max_n) + 1,
                                            std::vector<std::uint64_t>(static_cast<std::size_t>(max_n) + 1, 0));
  s[0][0] = 1;
  for (int n = 0; n < max_n; ++n)
    for (int k = 1; k <= n + 1; ++k)
      s[static_cast<std::size_t>(n) + 1][static_cast<std::size_t>(k)] =
          static_cast<std::uint64_t>(n) * s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] +
          s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k) - 1];
  return s;
}

}  // namespace specoh
