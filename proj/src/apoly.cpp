#include "hilbk3/apoly.hpp"

#include <sstream>
#include <stdexcept>

namespace hilbk3 {

APoly APoly::constant(const Rat& c) {
  APoly p;
  p.add(AMono{}, c);
  return p;
}

APoly APoly::gen(int i) {
  if (i < 1 || i > 8) throw std::out_of_range("APoly::gen");
  AMono m{};
  m[i - 1] = 1;
  APoly p;
  p.add(m, Rat(1));
  return p;
}

Rat APoly::coeff(const AMono& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Rat(0) : it->second;
}

Rat APoly::constant_term() const { return coeff(AMono{}); }

APoly& APoly::add(const AMono& m, const Rat& c) {
  if (c == 0 || weighted_degree(m) > kAWeightCap) return *this;
  auto [it, fresh] = t_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
  return *this;
}

APoly APoly::operator+(const APoly& o) const {
  APoly r = *this;
  for (const auto& [m, c] : o.t_) r.add(m, c);
  return r;
}

APoly& APoly::operator+=(const APoly& o) {
  for (const auto& [m, c] : o.t_) add(m, c);
  return *this;
}

APoly APoly::operator-(const APoly& o) const {
  APoly r = *this;
  for (const auto& [m, c] : o.t_) r.add(m, -c);
  return r;
}

APoly APoly::operator*(const APoly& o) const {
  APoly r;
  for (const auto& [m1, c1] : t_) {
    const int w1 = weighted_degree(m1);
    for (const auto& [m2, c2] : o.t_) {
      if (w1 + weighted_degree(m2) > kAWeightCap) continue;
      AMono m{};
      for (int i = 0; i < 8; ++i) m[i] = static_cast<uint8_t>(m1[i] + m2[i]);
      r.add(m, c1 * c2);
    }
  }
  return r;
}

APoly APoly::operator*(const Rat& s) const {
  APoly r;
  if (s == 0) return r;
  for (const auto& [m, c] : t_) r.t_.emplace(m, c * s);
  return r;
}

APoly APoly::operator-() const { return *this * Rat(-1); }

APoly APoly::weight_part(int w) const {
  APoly r;
  for (const auto& [m, c] : t_)
    if (weighted_degree(m) == w) r.t_.emplace(m, c);
  return r;
}

bool APoly::is_homogeneous(int w) const {
  for (const auto& [m, c] : t_)
    if (weighted_degree(m) != w) return false;
  return true;
}

std::string APoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : t_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    if (first && c < 0) os << "-";
    first = false;
    const Rat a = abs(c);
    bool printed = false;
    if (a != 1) {
      os << to_string(a);
      printed = true;
    }
    for (int i = 0; i < 8; ++i) {
      if (m[i] == 0) continue;
      if (printed) os << "*";
      os << "a" << (i + 1);
      if (m[i] > 1) os << "^" << int(m[i]);
      printed = true;
    }
    if (!printed) os << "1";
  }
  return os.str();
}

APoly apoly_parse(const std::string& s) {
  APoly out;
  size_t i = 0;
  const auto skip_space = [&] {
    while (i < s.size() && s[i] == ' ') ++i;
  };
  int sign = 1;
  skip_space();
  while (i < s.size()) {
    if (s[i] == '+') {
      sign = 1;
      ++i;
      skip_space();
      continue;
    }
    if (s[i] == '-') {
      sign = -1;
      ++i;
      skip_space();
      continue;
    }
    // One term: optional coefficient, then *-separated a-powers.
    Rat coef(1);
    AMono m{};
    bool saw_factor = false;
    while (i < s.size() && s[i] != '+' && s[i] != '-' && s[i] != ' ') {
      if (s[i] == '*') {
        ++i;
        continue;
      }
      if (s[i] == 'a') {
        ++i;
        size_t j = i;
        while (j < s.size() && isdigit(s[j])) ++j;
        const int idx = std::stoi(s.substr(i, j - i));
        i = j;
        int e = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          j = i;
          while (j < s.size() && isdigit(s[j])) ++j;
          e = std::stoi(s.substr(i, j - i));
          i = j;
        }
        m[idx - 1] = static_cast<uint8_t>(m[idx - 1] + e);
        saw_factor = true;
      } else if (isdigit(s[i])) {
        size_t j = i;
        while (j < s.size() && (isdigit(s[j]) || s[j] == '/')) ++j;
        auto q = rat_from_string(s.substr(i, j - i));
        if (!q) throw std::invalid_argument("apoly_parse: bad coefficient");
        coef *= *q;
        i = j;
        saw_factor = true;
      } else {
        throw std::invalid_argument("apoly_parse: unexpected char");
      }
    }
    if (!saw_factor) throw std::invalid_argument("apoly_parse: empty term");
    out.add(m, sign * coef);
    skip_space();
  }
  return out;
}

}  // namespace hilbk3
