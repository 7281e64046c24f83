#include "pencil/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "pencil/error.hpp"

namespace pencil {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  for (int l : letters_) {
    if (l == 0 || std::abs(l) >= strands_)
      throw std::invalid_argument("BraidWord: letter out of range for " +
                                  std::to_string(strands_) + " strands");
  }
}

int BraidWord::exponent_sum() const {
  int s = 0;
  for (int l : letters_) s += l > 0 ? 1 : -1;
  return s;
}

BraidWord BraidWord::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l = -l;
  return BraidWord(strands_, std::move(out));
}

BraidWord& BraidWord::operator*=(const BraidWord& rhs) {
  if (strands_ == 0) strands_ = rhs.strands_;
  if (rhs.strands_ != 0 && rhs.strands_ != strands_)
    throw std::invalid_argument("BraidWord: strand counts differ");
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.images.resize(n);
  std::iota(p.images.begin(), p.images.end(), 0);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images.size(); ++i)
    if (images[i] != static_cast<int>(i)) return false;
  return true;
}

Permutation Permutation::then(const Permutation& next) const {
  Permutation out;
  out.images.resize(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) out.images[i] = next.images[images[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images.resize(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) out.images[images[i]] = static_cast<int>(i);
  return out;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> cycles;
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images[j])) {
      seen[j] = true;
      ++len;
    }
    cycles.push_back(len);
  }
  std::sort(cycles.rbegin(), cycles.rend());
  return cycles;
}

BraidWord braid_from_events(int strands, std::span<const CrossingEvent> events) {
  std::vector<int> order(static_cast<std::size_t>(strands));
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> letters;
  letters.reserve(events.size());
  for (const auto& ev : events) {
    if (ev.slot < 1 || ev.slot >= strands || (ev.sign != 1 && ev.sign != -1)) {
      std::ostringstream msg;
      msg << "event at step " << ev.step << " has slot " << ev.slot << " sign " << ev.sign;
      throw InconsistentEvents(msg.str());
    }
    const auto k = static_cast<std::size_t>(ev.slot - 1);
    if (order[k] != ev.first || order[k + 1] != ev.second) {
      std::ostringstream msg;
      msg << "event at step " << ev.step << " swaps labels " << ev.first << "," << ev.second
          << " but slots " << ev.slot << "," << ev.slot + 1 << " hold " << order[k] << ","
          << order[k + 1];
      throw InconsistentEvents(msg.str());
    }
    std::swap(order[k], order[k + 1]);
    letters.push_back(ev.sign * ev.slot);
  }
  return BraidWord(strands, std::move(letters));
}

Permutation permutation_of(const BraidWord& b) {
  const auto n = static_cast<std::size_t>(b.strands());
  std::vector<int> order(n);  // slot -> strand
  std::iota(order.begin(), order.end(), 0);
  for (int l : b.letters()) {
    const auto k = static_cast<std::size_t>(std::abs(l) - 1);
    std::swap(order[k], order[k + 1]);
  }
  Permutation p;
  p.images.resize(n);
  for (std::size_t s = 0; s < n; ++s) p.images[order[s]] = static_cast<int>(s);
  return p;
}

BraidWord full_twist(int strands) {
  if (strands < 2) throw std::invalid_argument("full_twist: need at least 2 strands");
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(strands * (strands - 1)));
  for (int r = 0; r < strands; ++r)
    for (int k = 1; k < strands; ++k) letters.push_back(k);
  return BraidWord(strands, std::move(letters));
}

BraidWord cancel_inverse_pairs(const BraidWord& b) {
  std::vector<int> stack;
  for (int l : b.letters()) {
    if (!stack.empty() && stack.back() == -l) stack.pop_back();
    else stack.push_back(l);
  }
  return BraidWord(b.strands(), std::move(stack));
}

std::vector<FreeWord> artin_images(const BraidWord& b) {
  const int d = b.strands();
  std::vector<FreeWord> img(static_cast<std::size_t>(d));
  for (int g = 1; g <= d; ++g) img[static_cast<std::size_t>(g - 1)] = FreeWord::generator(g);
  // J_k = J_{k+1} o phi_{s_k}, sweeping the word from its last letter.
  const auto& letters = b.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const int l = *it;
    const auto k = static_cast<std::size_t>(std::abs(l) - 1);
    FreeWord a = img[k], c = img[k + 1];
    if (l > 0) {
      img[k] = free_reduce(a * c * a.inverse());
      img[k + 1] = std::move(a);
    } else {
      img[k] = c;
      img[k + 1] = free_reduce(c.inverse() * a * c);
    }
  }
  return img;
}

FreeWord artin_action(const BraidWord& b, const FreeWord& w) {
  if (w.max_generator() > b.strands())
    throw std::invalid_argument("artin_action: word uses generators beyond the strand count");
  return substitute(w, artin_images(b));
}

FreeWord boundary_word(int strands) {
  std::vector<int> l(static_cast<std::size_t>(strands));
  std::iota(l.begin(), l.end(), 1);
  return FreeWord(std::move(l));
}

}  // namespace pencil
