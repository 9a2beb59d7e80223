#include "candec/selector_maps.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "candec/errors.hpp"

namespace candec {

MultiIndex::MultiIndex(std::vector<int> entries_in, int alphabet_in)
    : entries(std::move(entries_in)), alphabet(alphabet_in) {
  if (alphabet < 0) throw DomainError("multi-index: negative alphabet");
  for (int v : entries) {
    if (v < 1 || v > alphabet) {
      throw DomainError("multi-index entry " + std::to_string(v) +
                        " outside 1.." + std::to_string(alphabet));
    }
  }
}

std::string MultiIndex::to_string() const {
  std::ostringstream out;
  for (int t = 0; t < length(); ++t) {
    if (t) out << ',';
    out << entries[t];
  }
  return out.str();
}

MultiIndex MultiIndex::parse(std::string_view text, int alphabet) {
  std::vector<int> entries;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(text.data() + pos, text.data() + comma, value);
    if (ec != std::errc() || ptr != text.data() + comma) {
      throw DomainError("malformed multi-index: '" + std::string(text) + "'");
    }
    entries.push_back(value);
    pos = comma + 1;
  }
  if (!text.empty() && text.back() == ',') {
    throw DomainError("malformed multi-index: trailing comma");
  }
  return MultiIndex(std::move(entries), alphabet);
}

MultiIndex MultiIndex::embedded(int alphabet_in) const {
  if (alphabet_in < alphabet) {
    throw DomainError("multi-index: embedding must not shrink the alphabet");
  }
  MultiIndex out = *this;
  out.alphabet = alphabet_in;
  return out;
}

std::vector<int> weight(const MultiIndex& index) {
  std::vector<int> counts(index.alphabet, 0);
  for (int v : index.entries) ++counts[v - 1];
  return counts;
}

EntrySelector schur_selector(const Permutation& p) {
  const CanonicalFactorisation fact = canonical_factorisation(p);
  const int r = p.degree();
  const int k = fact.depth();
  std::vector<int> row(r), col(r);
  for (int c = 1; c <= k; ++c) {
    for (int position : fact.parts[c - 1].positions) row[position - 1] = c;
    for (int value : fact.parts[c - 1].values) col[value - 1] = c;
  }
  return {MultiIndex(std::move(row), k), MultiIndex(std::move(col), k)};
}

EntrySelector schur_selector_in(const Permutation& p, int n) {
  const int k = llds(p);
  if (k > n) {
    throw DomainError("schur_selector_in: llds " + std::to_string(k) +
                      " exceeds n = " + std::to_string(n));
  }
  EntrySelector sel = schur_selector(p);
  return {sel.row.embedded(n), sel.col.embedded(n)};
}

Permutation schur_selector_preimage(const EntrySelector& selector) {
  const MultiIndex& row = selector.row;
  const MultiIndex& col = selector.col;
  if (row.length() != col.length()) {
    throw DomainError("selector preimage: length mismatch");
  }
  const int colours = std::max(row.alphabet, col.alphabet);
  std::vector<int> row_weight(colours, 0), col_weight(colours, 0);
  for (int v : row.entries) ++row_weight[v - 1];
  for (int v : col.entries) ++col_weight[v - 1];
  if (row_weight != col_weight) {
    throw DomainError("selector preimage: weight mismatch");
  }
  const int r = row.length();
  std::vector<int> word(r, 0);
  for (int c = 1; c <= colours; ++c) {
    std::vector<int> top, bottom;
    for (int t = 1; t <= r; ++t) {
      if (row[t] == c) top.push_back(t);
      if (col[t] == c) bottom.push_back(t);
    }
    for (std::size_t a = 0; a < top.size(); ++a) {
      word[top[a] - 1] = bottom[a];
    }
  }
  return Permutation(std::move(word));
}

EntrySelector schur_selector_stable(const Permutation& p, int n) {
  const int r = p.degree();
  if (n < r) {
    throw DomainError("schur_selector_stable: requires n >= r");
  }
  std::vector<int> row(r);
  for (int t = 0; t < r; ++t) row[t] = t + 1;
  return {MultiIndex(std::move(row), n),
          MultiIndex(p.inverse().word(), n)};
}

namespace {

// Longest increasing subsequence of the values of w after `from` (1-based,
// exclusive) that exceed `threshold`.
int lis_above(const Permutation& w, int from, int threshold) {
  std::vector<int> tail;
  for (int q = from + 1; q <= w.degree(); ++q) {
    const int v = w(q);
    if (v <= threshold) continue;
    auto it = std::lower_bound(tail.begin(), tail.end(), v);
    if (it == tail.end()) {
      tail.push_back(v);
    } else {
      *it = v;
    }
  }
  return static_cast<int>(tail.size());
}

}  // namespace

std::vector<int> choose_increasing_positions(const Permutation& w, int m) {
  if (m < 0) throw DomainError("choose_increasing_positions: negative length");
  std::vector<int> chosen;
  int last_value = 0;
  int next = 1;
  for (int step = 1; step <= m; ++step) {
    bool found = false;
    for (int p = next; p <= w.degree(); ++p) {
      if (w(p) <= last_value) continue;
      if (lis_above(w, p, w(p)) >= m - step) {
        chosen.push_back(p);
        last_value = w(p);
        next = p + 1;
        found = true;
        break;
      }
    }
    if (!found) {
      throw DomainError("no increasing subsequence of length " +
                        std::to_string(m));
    }
  }
  return chosen;
}

namespace {

EntrySelector selector_from_positions(const Permutation& w, int r,
                                      std::span<const int> positions) {
  const int n = w.degree();
  std::vector<char> picked(n + 1, 0);
  for (int p : positions) picked[p] = 1;
  std::vector<int> row, col;
  row.reserve(r);
  col.reserve(r);
  for (int p = 1; p <= n; ++p) {
    if (!picked[p]) {
      col.push_back(p);
      row.push_back(w(p));
    }
  }
  return {MultiIndex(std::move(row), n), MultiIndex(std::move(col), n)};
}

}  // namespace

EntrySelector partition_selector(const Permutation& w, int r) {
  const int n = w.degree();
  if (n < 1) throw DomainError("partition_selector: degree 0 word");
  if (r < 0) throw DomainError("partition_selector: negative r");
  if (r <= n - 1) {
    auto positions = choose_increasing_positions(w, n - r);
    return selector_from_positions(w, r, positions);
  }
  EntrySelector sel = partition_selector(w, n - 1);
  for (int extra = 0; extra < r - (n - 1); ++extra) {
    sel.row.entries.push_back(w(1));
    sel.col.entries.push_back(1);
  }
  return sel;
}

EntrySelector partition_selector_with(const Permutation& w, int r,
                                      std::span<const int> positions) {
  const int n = w.degree();
  if (r < 0 || r > n - 1) {
    throw DomainError(
        "partition_selector_with: explicit subsequences require 0 <= r <= "
        "n-1");
  }
  if (static_cast<int>(positions.size()) != n - r) {
    throw DomainError("partition_selector_with: need exactly n-r positions");
  }
  int last_position = 0, last_value = 0;
  for (int p : positions) {
    if (p <= last_position || p > n) {
      throw DomainError(
          "partition_selector_with: positions must be increasing and in "
          "1..n");
    }
    if (w(p) <= last_value) {
      throw DomainError(
          "partition_selector_with: values along the positions must "
          "increase");
    }
    last_position = p;
    last_value = w(p);
  }
  return selector_from_positions(w, r, positions);
}

Permutation partition_selector_preimage(const EntrySelector& selector) {
  const MultiIndex& row = selector.row;
  const MultiIndex& col = selector.col;
  if (row.length() != col.length()) {
    throw DomainError("selector preimage: length mismatch");
  }
  if (row.alphabet != col.alphabet) {
    throw DomainError("selector preimage: alphabet mismatch");
  }
  const int n = row.alphabet;
  const int r = row.length();
  int real = r;
  if (r > n - 1) {
    real = n - 1;
    for (int t = real + 1; t <= r; ++t) {
      if (col[t] != 1 || row[t] != row[real + 1]) {
        throw DomainError("selector preimage: malformed padding columns");
      }
    }
  }
  std::vector<int> word(n, 0);
  int last_position = 0;
  for (int t = 1; t <= real; ++t) {
    if (col[t] <= last_position) {
      throw DomainError("selector preimage: positions must increase");
    }
    last_position = col[t];
    if (word[col[t] - 1] != 0) {
      throw DomainError("selector preimage: duplicate position");
    }
    word[col[t] - 1] = row[t];
  }
  std::vector<char> used(n + 1, 0);
  for (int t = 1; t <= real; ++t) {
    if (used[row[t]]) {
      throw DomainError("selector preimage: duplicate value");
    }
    used[row[t]] = 1;
  }
  int fill = 1;
  for (int position = 1; position <= n; ++position) {
    if (word[position - 1] != 0) continue;
    while (fill <= n && used[fill]) ++fill;
    word[position - 1] = fill;
    used[fill] = 1;
  }
  Permutation w{std::move(word)};
  if (r > n - 1 && real < r && w(1) != row[real + 1]) {
    throw DomainError("selector preimage: padding value disagrees with w(1)");
  }
  return w;
}

}  // namespace candec
