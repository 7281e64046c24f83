#include "pencil/free_word.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace pencil {

FreeWord FreeWord::power(int g, int e) {
  std::vector<int> out(static_cast<std::size_t>(std::abs(e)), e >= 0 ? g : -g);
  return FreeWord(std::move(out));
}

FreeWord FreeWord::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l = -l;
  return FreeWord(std::move(out));
}

FreeWord FreeWord::pow(int e) const {
  const FreeWord base = e >= 0 ? *this : inverse();
  FreeWord out;
  for (int i = 0; i < std::abs(e); ++i) out *= base;
  return free_reduce(out);
}

FreeWord& FreeWord::operator*=(const FreeWord& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

int FreeWord::max_generator() const {
  int m = 0;
  for (int l : letters_) m = std::max(m, std::abs(l));
  return m;
}

int FreeWord::exponent_sum(int g) const {
  int s = 0;
  for (int l : letters_) {
    if (l == g) ++s;
    else if (l == -g) --s;
  }
  return s;
}

std::size_t FreeWord::occurrences(int g) const {
  return static_cast<std::size_t>(
      std::count_if(letters_.begin(), letters_.end(), [g](int l) { return std::abs(l) == g; }));
}

FreeWord free_reduce(const FreeWord& w) {
  std::vector<int> stack;
  stack.reserve(w.size());
  for (int l : w.letters()) {
    if (!stack.empty() && stack.back() == -l) stack.pop_back();
    else stack.push_back(l);
  }
  return FreeWord(std::move(stack));
}

FreeWord cyclic_reduce(const FreeWord& w) {
  const FreeWord r = free_reduce(w);
  const auto& l = r.letters();
  std::size_t lo = 0, hi = l.size();
  while (hi - lo >= 2 && l[lo] == -l[hi - 1]) {
    ++lo;
    --hi;
  }
  return FreeWord(std::vector<int>(l.begin() + static_cast<long>(lo), l.begin() + static_cast<long>(hi)));
}

FreeWord commutator(const FreeWord& a, const FreeWord& b) {
  return free_reduce(a * b * a.inverse() * b.inverse());
}

FreeWord substitute(const FreeWord& w, const std::vector<FreeWord>& images) {
  std::vector<int> stack;
  auto push = [&stack](int l) {
    if (!stack.empty() && stack.back() == -l) stack.pop_back();
    else stack.push_back(l);
  };
  for (int l : w.letters()) {
    const FreeWord& img = images.at(static_cast<std::size_t>(std::abs(l) - 1));
    if (l > 0) {
      for (int x : img.letters()) push(x);
    } else {
      const auto& xs = img.letters();
      for (auto it = xs.rbegin(); it != xs.rend(); ++it) push(-*it);
    }
  }
  return FreeWord(std::move(stack));
}

bool is_cyclic_rotation(const FreeWord& a, const FreeWord& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  std::vector<int> doubled = b.letters();
  doubled.insert(doubled.end(), b.letters().begin(), b.letters().end());
  return std::search(doubled.begin(), doubled.end(), a.letters().begin(), a.letters().end()) !=
         doubled.end();
}

FreeWord canonical_relator(const FreeWord& w) {
  FreeWord best;
  bool have = false;
  for (const FreeWord& cand : {cyclic_reduce(w), cyclic_reduce(w.inverse())}) {
    const auto& l = cand.letters();
    for (std::size_t r = 0; r < std::max<std::size_t>(l.size(), 1); ++r) {
      std::vector<int> rot(l.begin() + static_cast<long>(r), l.end());
      rot.insert(rot.end(), l.begin(), l.begin() + static_cast<long>(r));
      FreeWord fw(std::move(rot));
      if (!have || fw < best) {
        best = std::move(fw);
        have = true;
      }
    }
  }
  return best;
}

std::string to_string(const FreeWord& w, const std::vector<std::string>& names) {
  if (w.empty()) return "e";
  std::ostringstream out;
  const auto& l = w.letters();
  for (std::size_t i = 0; i < l.size();) {
    std::size_t j = i;
    while (j < l.size() && l[j] == l[i]) ++j;
    const int g = std::abs(l[i]);
    const long e = static_cast<long>(j - i) * (l[i] > 0 ? 1 : -1);
    if (i > 0) out << ' ';
    if (static_cast<std::size_t>(g) <= names.size()) out << names[g - 1];
    else out << 'g' << g;
    if (e != 1) out << '^' << e;
    i = j;
  }
  return out.str();
}

}  // namespace pencil
