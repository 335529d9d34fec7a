#include "claspkit/root_data.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <utility>

namespace claspkit {

namespace {

// (a, b) -> epsilon coordinates and back.
const Eigen::Matrix2i& to_eps() {
  static const Eigen::Matrix2i m = (Eigen::Matrix2i() << 1, 1, 0, 1).finished();
  return m;
}
const Eigen::Matrix2i& from_eps() {
  static const Eigen::Matrix2i m = (Eigen::Matrix2i() << 1, -1, 0, 1).finished();
  return m;
}

struct GroupTable {
  std::vector<WeylElement> elements;
  std::vector<std::string> words;
};

const GroupTable& group_table() {
  static const GroupTable table = [] {
    GroupTable t;
    std::deque<std::pair<WeylElement, std::string>> queue{{WeylElement{}, ""}};
    while (!queue.empty()) {
      auto [w, word] = queue.front();
      queue.pop_front();
      if (std::find(t.elements.begin(), t.elements.end(), w) != t.elements.end()) continue;
      t.elements.push_back(w);
      t.words.push_back(word);
      queue.emplace_back(w * WeylElement::s(), word + "s");
      queue.emplace_back(w * WeylElement::t(), word + "t");
    }
    return t;
  }();
  return table;
}

}  // namespace

std::string Weight::to_string() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

std::ostream& operator<<(std::ostream& os, Weight w) { return os << w.to_string(); }

std::string Root::to_string() const {
  return "e(" + std::to_string(eps(0)) + "," + std::to_string(eps(1)) + ")";
}

Root alpha_s() { return Root{Eigen::Vector2i(1, -1)}; }
Root alpha_t() { return Root{Eigen::Vector2i(0, 2)}; }

const std::vector<Root>& positive_roots() {
  static const std::vector<Root> roots{
      Root{Eigen::Vector2i(1, -1)},
      Root{Eigen::Vector2i(0, 2)},
      Root{Eigen::Vector2i(1, 1)},
      Root{Eigen::Vector2i(2, 0)},
  };
  return roots;
}

int pairing(const Root& alpha, Weight x) { return alpha.coroot().dot(x.epsilon()); }

WeylElement WeylElement::s() {
  // s(w1) = -w1 + w2, s(w2) = w2; columns are images of w1, w2.
  return WeylElement((Eigen::Matrix2i() << -1, 0, 1, 1).finished());
}

WeylElement WeylElement::t() {
  // t(w1) = w1, t(w2) = 2 w1 - w2.
  return WeylElement((Eigen::Matrix2i() << 1, 2, 0, -1).finished());
}

WeylElement WeylElement::from_word(const std::string& word) {
  WeylElement w;
  for (char c : word) {
    if (c == 's') {
      w = w * s();
    } else if (c == 't') {
      w = w * t();
    } else {
      throw std::invalid_argument("Weyl word letters must be s or t");
    }
  }
  return w;
}

Eigen::Matrix2i WeylElement::epsilon_matrix() const { return to_eps() * m_ * from_eps(); }

Weight WeylElement::act(Weight x) const {
  const Eigen::Vector2i v = m_ * x.coords();
  return {v(0), v(1)};
}

Root WeylElement::act(const Root& r) const { return Root{epsilon_matrix() * r.eps}; }

std::string WeylElement::reduced_word() const {
  const auto& t = group_table();
  for (size_t i = 0; i < t.elements.size(); ++i) {
    if (t.elements[i] == *this) return t.words[i];
  }
  throw std::logic_error("matrix is not in the C2 Weyl group");
}

Weight weyl_act(const WeylElement& w, Weight x) { return w.act(x); }

const std::vector<WeylElement>& weyl_group() { return group_table().elements; }

bool dominance_leq(Weight mu, Weight lambda) {
  // lambda - mu = x alpha_1 + y alpha_2 with alpha_1 = e1 - e2, alpha_2 = 2 e2.
  const Eigen::Vector2i d = (lambda - mu).epsilon();
  const int x = d(0);
  const int twice_y = d(0) + d(1);
  return x >= 0 && twice_y >= 0 && twice_y % 2 == 0;
}

const std::vector<Weight>& fundamental_weights_all() {
  static const std::vector<Weight> all{{1, 0},  {-1, 1}, {1, -1}, {-1, 0}, {0, 1},
                                       {2, -1}, {0, 0},  {-2, 1}, {0, -1}};
  return all;
}

WeylElement d_min(Weight varpi) {
  const auto& all = fundamental_weights_all();
  if (std::find(all.begin(), all.end(), varpi) == all.end()) {
    throw UnknownWeight("not a weight of V(w1) or V(w2): " + varpi.to_string());
  }
  for (const auto& w : weyl_group()) {
    if (w.act(varpi).dominant()) return w;
  }
  throw std::logic_error("no Weyl element makes the weight dominant");
}

std::vector<Root> phi_set(Weight varpi) {
  const WeylElement d = d_min(varpi);
  std::vector<Root> out;
  for (const auto& alpha : positive_roots()) {
    if (!d.act(alpha).positive()) out.push_back(alpha);
  }
  return out;
}

}  // namespace claspkit
