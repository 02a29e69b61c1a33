#include "tsgreen/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "tsgreen/errors.hpp"

namespace tsgreen {

Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw BadInput("permutation degrees differ");
  Perm r(a.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint16_t>(i);
  return r;
}

bool perm_is_identity(const Perm& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != i) return false;
  return true;
}

int perm_order(const Perm& a) {
  Perm p = a;
  int ord = 1;
  while (!perm_is_identity(p)) {
    p = perm_compose(a, p);
    ++ord;
    if (ord > 1 << 20) throw InternalCheckFailed("permutation order runaway");
  }
  return ord;
}

std::string perm_to_cycles(const Perm& a) {
  std::ostringstream out;
  std::vector<bool> seen(a.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i] || a[i] == i) continue;
    any = true;
    out << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out << ' ';
      out << j + 1;
      first = false;
      j = a[j];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Perm perm_from_cycles(const std::string& s, int degree) {
  if (degree < 1 || degree > 65535) throw BadInput("permutation degree out of range: " + std::to_string(degree));
  Perm p = perm_identity(degree);
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  if (i == s.size()) return p;
  // Allow the explicit identity "()".
  while (i < s.size()) {
    skip_ws();
    if (i == s.size()) break;
    if (s[i] != '(') throw BadInput("expected '(' in cycle string at: " + s.substr(i));
    ++i;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      if (i == s.size()) throw BadInput("unterminated cycle in: " + s);
      if (s[i] == ')') {
        ++i;
        break;
      }
      if (s[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw BadInput("unexpected character in cycle string at: " + s.substr(i));
      int v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + (s[i] - '0');
        if (v > 1 << 20) throw BadInput("cycle point too large in: " + s);
        ++i;
      }
      if (v < 1 || v > degree)
        throw BadInput("cycle point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
      cyc.push_back(v - 1);
    }
    for (int v : cyc) {
      if (used[v]) throw BadInput("point " + std::to_string(v + 1) + " repeated across cycles");
      used[v] = true;
    }
    for (std::size_t t = 0; t + 1 < cyc.size(); ++t) p[cyc[t]] = static_cast<std::uint16_t>(cyc[t + 1]);
    if (!cyc.empty()) p[cyc.back()] = static_cast<std::uint16_t>(cyc.front());
  }
  return p;
}

}  // namespace tsgreen
