#include "mt/groups/todd_coxeter.hpp"

#include <cstdlib>
#include <deque>

#include "mt/error.hpp"

namespace mt {

namespace {

int column(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }

class Enumerator {
 public:
  Enumerator(const Presentation& p, std::size_t max_cosets)
      : cols_(static_cast<int>(2 * p.generator_count())), max_(max_cosets) {
    for (const auto& r : p.relators) {
      std::vector<int> c;
      for (int x : r) c.push_back(column(x));
      relators_.push_back(std::move(c));
    }
    new_coset();
  }

  void run(const std::vector<Word>& subgroup) {
    for (const auto& w : subgroup) {
      std::vector<int> c;
      for (int x : w) c.push_back(column(x));
      scan_and_fill(0, c);
    }
    for (std::size_t c = 0; c < rep_.size(); ++c) {
      for (const auto& r : relators_) {
        if (rep_[c] != static_cast<int>(c)) break;
        scan_and_fill(static_cast<int>(c), r);
      }
      for (int x = 0; x < cols_; ++x) {
        if (rep_[c] != static_cast<int>(c)) break;
        if (at(static_cast<int>(c), x) < 0) define(static_cast<int>(c), x);
      }
    }
  }

  CosetTable standardize() const {
    std::vector<std::int64_t> number(rep_.size(), -1);
    std::vector<int> order{0};
    number[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (int x = 0; x < cols_; ++x) {
        int d = at(order[i], x);
        if (number[d] < 0) {
          number[d] = static_cast<std::int64_t>(order.size());
          order.push_back(d);
        }
      }
    }
    CosetTable t;
    t.generator_count = static_cast<std::size_t>(cols_ / 2);
    t.rows.resize(order.size(), std::vector<std::uint32_t>(static_cast<std::size_t>(cols_)));
    for (std::size_t i = 0; i < order.size(); ++i)
      for (int x = 0; x < cols_; ++x)
        t.rows[i][static_cast<std::size_t>(x)] = static_cast<std::uint32_t>(number[at(order[i], x)]);
    return t;
  }

 private:
  int& at(int c, int x) { return table_[static_cast<std::size_t>(c) * cols_ + x]; }
  int at(int c, int x) const { return table_[static_cast<std::size_t>(c) * cols_ + x]; }

  int new_coset() {
    if (live_ >= max_) throw Error(ErrorKind::Overflow, "coset enumeration exceeded " + std::to_string(max_) + " cosets");
    int d = static_cast<int>(rep_.size());
    rep_.push_back(d);
    table_.resize(table_.size() + static_cast<std::size_t>(cols_), -1);
    ++live_;
    return d;
  }

  void define(int c, int x) {
    int d = new_coset();
    at(c, x) = d;
    at(d, x ^ 1) = c;
  }

  void scan_and_fill(int c, const std::vector<int>& w) {
    if (w.empty()) return;
    int f = c;
    int b = c;
    int i = 0;
    int j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && at(f, w[i]) >= 0) f = at(f, w[i++]);
      if (i > j) {
        if (f != c) coincidence(f, c);
        return;
      }
      while (j >= i && at(b, w[j] ^ 1) >= 0) b = at(b, w[j--] ^ 1);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, w[i]) = b;
        at(b, w[i] ^ 1) = f;
        return;
      }
      define(f, w[i]);
    }
  }

  int find(int k) {
    int r = k;
    while (rep_[r] != r) r = rep_[r];
    while (rep_[k] != r) {
      int next = rep_[k];
      rep_[k] = r;
      k = next;
    }
    return r;
  }

  void merge(int k, int l, std::deque<int>& queue) {
    k = find(k);
    l = find(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    rep_[l] = k;
    --live_;
    queue.push_back(l);
  }

  void coincidence(int a, int b) {
    std::deque<int> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      int e = queue.front();
      queue.pop_front();
      for (int x = 0; x < cols_; ++x) {
        int f = at(e, x);
        if (f < 0) continue;
        at(f, x ^ 1) = -1;
        int e1 = find(e);
        int f1 = find(f);
        if (at(e1, x) >= 0) {
          merge(f1, at(e1, x), queue);
        } else if (at(f1, x ^ 1) >= 0) {
          merge(e1, at(f1, x ^ 1), queue);
        } else {
          at(e1, x) = f1;
          at(f1, x ^ 1) = e1;
        }
      }
    }
  }

  int cols_;
  std::size_t max_;
  std::size_t live_ = 0;
  std::vector<std::vector<int>> relators_;
  std::vector<int> table_;
  std::vector<int> rep_;
};

}  // namespace

std::uint32_t CosetTable::act(std::uint32_t coset, int letter) const {
  return rows[coset][static_cast<std::size_t>(column(letter))];
}

std::uint32_t CosetTable::trace(std::uint32_t coset, const Word& w) const {
  for (int x : w) coset = act(coset, x);
  return coset;
}

std::vector<std::uint32_t> CosetTable::generator_action(std::size_t k) const {
  std::vector<std::uint32_t> out(rows.size());
  for (std::size_t c = 0; c < rows.size(); ++c) out[c] = rows[c][2 * k];
  return out;
}

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup, std::size_t max_cosets) {
  if (p.generator_count() == 0) {
    CosetTable t;
    t.rows.push_back({});
    return t;
  }
  Enumerator e(p, max_cosets);
  e.run(subgroup);
  return e.standardize();
}

FiniteGroup group_from_presentation(const Presentation& p, std::size_t max_order) {
  CosetTable t = todd_coxeter(p, {}, max_order);
  std::vector<std::vector<std::uint32_t>> action;
  for (std::size_t k = 0; k < p.generator_count(); ++k) action.push_back(t.generator_action(k));
  return FiniteGroup::from_right_action(action, 0, max_order);
}

SchreierData schreier_generators(const CosetTable& t) {
  SchreierData s;
  std::size_t n = t.index();
  s.coset_representatives.assign(n, {});
  std::vector<bool> reached(n, false);
  std::vector<std::vector<bool>> tree(n, std::vector<bool>(t.generator_count, false));
  reached[0] = true;
  std::vector<std::uint32_t> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    std::uint32_t c = queue[i];
    for (std::size_t k = 0; k < t.generator_count; ++k) {
      std::uint32_t d = t.rows[c][2 * k];
      if (reached[d]) continue;
      reached[d] = true;
      tree[c][k] = true;
      s.coset_representatives[d] = s.coset_representatives[c];
      s.coset_representatives[d].push_back(static_cast<int>(k) + 1);
      queue.push_back(d);
    }
  }
  if (queue.size() != n) throw Error(ErrorKind::InvariantViolation, "coset graph is not connected by positive letters");
  for (std::uint32_t c = 0; c < n; ++c) {
    for (std::size_t k = 0; k < t.generator_count; ++k) {
      if (tree[c][k]) continue;
      std::uint32_t d = t.rows[c][2 * k];
      Word w = s.coset_representatives[c];
      w.push_back(static_cast<int>(k) + 1);
      w = concat(w, inverse_word(s.coset_representatives[d]));
      s.generators.push_back(std::move(w));
      s.edges.emplace_back(c, k);
    }
  }
  return s;
}

}  // namespace mt
